//! Structure-constant presentations and the identity registry.
//!
//! An algebra is a finite-dimensional space with named bilinear products,
//! each given by a rank-3 tensor: entry `(i, j, k)` of product `p` is the
//! coefficient of `e_k` in `e_i p e_j`. Class membership is decided by
//! evaluating the defining multilinear identities on all basis tuples,
//! which is complete by multilinearity.
//!
//! The identities themselves live in a small registry of symbolic
//! expression trees over abstract products, so each one can be read off
//! against its source rather than being hand-expanded into index loops.

use crate::error::{KernelError, Result};
use crate::linmap::LinearMap;
use crate::report::{Check, IdentityReport, Suite};
use crate::scalar::Scalar;
use crate::tensor::Tensor;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum ProductName {
    /// Commutative associative product `x . y`.
    Dot,
    /// Lie bracket `[x, y]`.
    Bracket,
    /// Anti-pre-Lie product `x o y`.
    Circ,
    /// Zinbiel product.
    Star,
    /// Left half of a pre-APL splitting.
    Succ,
    /// Right half of a pre-APL splitting.
    Prec,
}

impl ProductName {
    pub const ALL: [ProductName; 6] = [
        ProductName::Dot,
        ProductName::Bracket,
        ProductName::Circ,
        ProductName::Star,
        ProductName::Succ,
        ProductName::Prec,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ProductName::Dot => "dot",
            ProductName::Bracket => "bracket",
            ProductName::Circ => "circ",
            ProductName::Star => "star",
            ProductName::Succ => "succ",
            ProductName::Prec => "prec",
        }
    }

    pub fn parse(s: &str) -> Option<ProductName> {
        ProductName::ALL.iter().copied().find(|p| p.as_str() == s)
    }
}

impl fmt::Display for ProductName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraPresentation {
    dim: usize,
    basis_labels: Vec<String>,
    products: BTreeMap<ProductName, Tensor>,
}

impl AlgebraPresentation {
    /// An algebra with no products yet. Dimension zero is rejected.
    pub fn new(dim: usize, basis_labels: Option<Vec<String>>) -> Result<Self> {
        if dim == 0 {
            return Err(KernelError::Configuration(
                "zero-dimensional algebras are not admitted".into(),
            ));
        }
        let labels = match basis_labels {
            Some(l) => {
                if l.len() != dim {
                    return Err(KernelError::Dimension(format!(
                        "{} labels for dimension {}",
                        l.len(),
                        dim
                    )));
                }
                l
            }
            None => (0..dim).map(|i| format!("e{i}")).collect(),
        };
        Ok(AlgebraPresentation {
            dim,
            basis_labels: labels,
            products: BTreeMap::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn with_product(mut self, name: ProductName, tensor: Tensor) -> Result<Self> {
        self.set_product(name, tensor)?;
        Ok(self)
    }

    pub fn set_product(&mut self, name: ProductName, tensor: Tensor) -> Result<()> {
        if tensor.dims() != [self.dim, self.dim, self.dim] {
            return Err(KernelError::Dimension(format!(
                "product {} has dims {:?}, expected [{dim}, {dim}, {dim}]",
                name,
                tensor.dims(),
                dim = self.dim
            )));
        }
        self.products.insert(name, tensor);
        Ok(())
    }

    pub fn product(&self, name: ProductName) -> Result<&Tensor> {
        self.products
            .get(&name)
            .ok_or_else(|| KernelError::Configuration(format!("algebra has no `{name}` product")))
    }

    pub fn has_product(&self, name: ProductName) -> bool {
        self.products.contains_key(&name)
    }

    pub fn product_names(&self) -> impl Iterator<Item = ProductName> + '_ {
        self.products.keys().copied()
    }

    pub fn remove_product(&mut self, name: ProductName) -> Option<Tensor> {
        self.products.remove(&name)
    }

    /// Structure constant `(i p j -> k)`.
    pub fn c(&self, name: ProductName, i: usize, j: usize, k: usize) -> &Scalar {
        self.products[&name].get(&[i, j, k])
    }

    /// Bilinear extension of a product to arbitrary coordinate vectors.
    pub fn prod_vec(&self, name: ProductName, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
        let t = self.product(name)?;
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let uv = ui * vj;
                for (k, out_k) in out.iter_mut().enumerate() {
                    let c = t.get(&[i, j, k]);
                    if !c.is_zero() {
                        *out_k += &(c * &uv);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `e_i p e_j` as a coordinate vector.
    pub fn prod_basis(&self, name: ProductName, i: usize, j: usize) -> Result<Vec<Scalar>> {
        let t = self.product(name)?;
        Ok((0..self.dim).map(|k| t.get(&[i, j, k]).clone()).collect())
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::one();
        v
    }

    /// Matrix of left multiplication `L_p(e_i): y -> e_i p y`.
    pub fn left_mult(&self, name: ProductName, i: usize) -> Result<LinearMap> {
        let t = self.product(name)?;
        let mut m = LinearMap::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                let c = t.get(&[i, j, k]);
                if !c.is_zero() {
                    m.set(k, j, c.clone());
                }
            }
        }
        Ok(m)
    }

    /// Matrix of right multiplication `R_p(e_i): y -> y p e_i`.
    pub fn right_mult(&self, name: ProductName, i: usize) -> Result<LinearMap> {
        let t = self.product(name)?;
        let mut m = LinearMap::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                let c = t.get(&[j, i, k]);
                if !c.is_zero() {
                    m.set(k, j, c.clone());
                }
            }
        }
        Ok(m)
    }

    /// All left (or right) multiplication matrices of a product.
    pub fn mult_family(&self, name: ProductName, right: bool) -> Result<Vec<LinearMap>> {
        (0..self.dim)
            .map(|i| {
                if right {
                    self.right_mult(name, i)
                } else {
                    self.left_mult(name, i)
                }
            })
            .collect()
    }
}

/// Registry entry: an identity as an expression tree that must vanish.
#[derive(Clone, Debug)]
pub enum Expr {
    /// Input slot (0-based).
    Var(usize),
    /// Product application.
    App(ProductName, Box<Expr>, Box<Expr>),
    /// Linear combination of sub-expressions.
    Lin(Vec<(Scalar, Expr)>),
}

impl Expr {
    fn products_used(&self, out: &mut Vec<ProductName>) {
        match self {
            Expr::Var(_) => {}
            Expr::App(p, a, b) => {
                if !out.contains(p) {
                    out.push(*p);
                }
                a.products_used(out);
                b.products_used(out);
            }
            Expr::Lin(terms) => {
                for (_, e) in terms {
                    e.products_used(out);
                }
            }
        }
    }

    fn max_var(&self) -> usize {
        match self {
            Expr::Var(i) => *i,
            Expr::App(_, a, b) => a.max_var().max(b.max_var()),
            Expr::Lin(terms) => terms.iter().map(|(_, e)| e.max_var()).max().unwrap_or(0),
        }
    }

    pub fn eval(&self, algebra: &AlgebraPresentation, args: &[Vec<Scalar>]) -> Result<Vec<Scalar>> {
        match self {
            Expr::Var(i) => Ok(args[*i].clone()),
            Expr::App(p, a, b) => {
                let u = a.eval(algebra, args)?;
                let v = b.eval(algebra, args)?;
                algebra.prod_vec(*p, &u, &v)
            }
            Expr::Lin(terms) => {
                let mut out = vec![Scalar::zero(); algebra.dim()];
                for (c, e) in terms {
                    if c.is_zero() {
                        continue;
                    }
                    let v = e.eval(algebra, args)?;
                    for (o, x) in out.iter_mut().zip(v) {
                        *o += &(c * &x);
                    }
                }
                Ok(out)
            }
        }
    }
}

pub fn var(i: usize) -> Expr {
    Expr::Var(i)
}

pub fn app(p: ProductName, a: Expr, b: Expr) -> Expr {
    Expr::App(p, Box::new(a), Box::new(b))
}

/// Sum with unit coefficients.
pub fn sum(terms: Vec<(i64, Expr)>) -> Expr {
    Expr::Lin(
        terms
            .into_iter()
            .map(|(c, e)| (Scalar::from_int(c), e))
            .collect(),
    )
}

/// Commutator `a o b - b o a` of a (possibly non-bracket) product.
fn comm_of(p: ProductName, a: Expr, b: Expr) -> Expr {
    sum(vec![(1, app(p, a.clone(), b.clone())), (-1, app(p, b, a))])
}

#[derive(Clone, Debug)]
pub struct Identity {
    pub id: &'static str,
    pub arity: usize,
    pub expr: Expr,
}

impl Identity {
    fn new(id: &'static str, arity: usize, expr: Expr) -> Self {
        debug_assert!(expr.max_var() < arity);
        Identity { id, arity, expr }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub enum ClassId {
    CommAssoc,
    Lie,
    TransposedPoisson,
    AntiPreLie,
    /// Same class through the alternate second axiom.
    AntiPreLieAlt,
    AntiPreLiePoisson,
    Zinbiel,
    PreApl,
    PreAplp,
    /// Both interaction products vanish: `[x,y].z = [x.y,z] = 0`.
    PoissonTriviality,
}

impl ClassId {
    pub const ALL: [ClassId; 10] = [
        ClassId::CommAssoc,
        ClassId::Lie,
        ClassId::TransposedPoisson,
        ClassId::AntiPreLie,
        ClassId::AntiPreLieAlt,
        ClassId::AntiPreLiePoisson,
        ClassId::Zinbiel,
        ClassId::PreApl,
        ClassId::PreAplp,
        ClassId::PoissonTriviality,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ClassId::CommAssoc => "comm-assoc",
            ClassId::Lie => "lie",
            ClassId::TransposedPoisson => "transposed-poisson",
            ClassId::AntiPreLie => "anti-pre-lie",
            ClassId::AntiPreLieAlt => "anti-pre-lie-alt",
            ClassId::AntiPreLiePoisson => "anti-pre-lie-poisson",
            ClassId::Zinbiel => "zinbiel",
            ClassId::PreApl => "pre-apl",
            ClassId::PreAplp => "pre-aplp",
            ClassId::PoissonTriviality => "poisson-triviality",
        }
    }

    pub fn parse(s: &str) -> Option<ClassId> {
        ClassId::ALL.iter().copied().find(|c| c.as_str() == s)
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn comm_assoc_identities() -> Vec<Identity> {
    use ProductName::Dot;
    vec![
        Identity::new(
            "commutativity",
            2,
            sum(vec![
                (1, app(Dot, var(0), var(1))),
                (-1, app(Dot, var(1), var(0))),
            ]),
        ),
        Identity::new(
            "associativity",
            3,
            sum(vec![
                (1, app(Dot, app(Dot, var(0), var(1)), var(2))),
                (-1, app(Dot, var(0), app(Dot, var(1), var(2)))),
            ]),
        ),
    ]
}

fn lie_identities() -> Vec<Identity> {
    use ProductName::Bracket;
    vec![
        Identity::new(
            "antisymmetry",
            2,
            sum(vec![
                (1, app(Bracket, var(0), var(1))),
                (1, app(Bracket, var(1), var(0))),
            ]),
        ),
        Identity::new(
            "jacobi",
            3,
            sum(vec![
                (1, app(Bracket, app(Bracket, var(0), var(1)), var(2))),
                (1, app(Bracket, app(Bracket, var(1), var(2)), var(0))),
                (1, app(Bracket, app(Bracket, var(2), var(0)), var(1))),
            ]),
        ),
    ]
}

/// `2 z.[x,y] = [z.x, y] + [x, z.y]` with variables `(x, y, z)`.
fn transposed_leibniz() -> Identity {
    use ProductName::{Bracket, Dot};
    Identity::new(
        "transposed-leibniz",
        3,
        sum(vec![
            (2, app(Dot, var(2), app(Bracket, var(0), var(1)))),
            (-1, app(Bracket, app(Dot, var(2), var(0)), var(1))),
            (-1, app(Bracket, var(0), app(Dot, var(2), var(1)))),
        ]),
    )
}

fn anti_pre_lie_identities(alternate_second: bool) -> Vec<Identity> {
    use ProductName::Circ;
    let b = |a: Expr, b: Expr| comm_of(Circ, a, b);
    let first = Identity::new(
        "apl-1",
        3,
        sum(vec![
            (1, app(Circ, var(0), app(Circ, var(1), var(2)))),
            (-1, app(Circ, var(1), app(Circ, var(0), var(2)))),
            (-1, app(Circ, b(var(1), var(0)), var(2))),
        ]),
    );
    let second = if alternate_second {
        // x o [y,z] + y o [z,x] + z o [x,y] = 0
        Identity::new(
            "apl-2-alt",
            3,
            sum(vec![
                (1, app(Circ, var(0), b(var(1), var(2)))),
                (1, app(Circ, var(1), b(var(2), var(0)))),
                (1, app(Circ, var(2), b(var(0), var(1)))),
            ]),
        )
    } else {
        // [x,y] o z + [y,z] o x + [z,x] o y = 0
        Identity::new(
            "apl-2",
            3,
            sum(vec![
                (1, app(Circ, b(var(0), var(1)), var(2))),
                (1, app(Circ, b(var(1), var(2)), var(0))),
                (1, app(Circ, b(var(2), var(0)), var(1))),
            ]),
        )
    };
    vec![first, second]
}

fn anti_pre_lie_poisson_extra() -> Vec<Identity> {
    use ProductName::{Circ, Dot};
    vec![
        // 2(x o y).z - 2(y o x).z = y.(x o z) - x.(y o z)
        Identity::new(
            "aplp-1",
            3,
            sum(vec![
                (2, app(Dot, app(Circ, var(0), var(1)), var(2))),
                (-2, app(Dot, app(Circ, var(1), var(0)), var(2))),
                (-1, app(Dot, var(1), app(Circ, var(0), var(2)))),
                (1, app(Dot, var(0), app(Circ, var(1), var(2)))),
            ]),
        ),
        // 2 x o (y.z) = (z.x) o y + z.(x o y)
        Identity::new(
            "aplp-2",
            3,
            sum(vec![
                (2, app(Circ, var(0), app(Dot, var(1), var(2)))),
                (-1, app(Circ, app(Dot, var(2), var(0)), var(1))),
                (-1, app(Dot, var(2), app(Circ, var(0), var(1)))),
            ]),
        ),
    ]
}

fn zinbiel_identity() -> Identity {
    use ProductName::Star;
    Identity::new(
        "zinbiel",
        3,
        sum(vec![
            (1, app(Star, var(0), app(Star, var(1), var(2)))),
            (-1, app(Star, app(Star, var(1), var(0)), var(2))),
            (-1, app(Star, app(Star, var(0), var(1)), var(2))),
        ]),
    )
}

fn pre_apl_identities() -> Vec<Identity> {
    use ProductName::{Prec, Succ};
    // x o y in the splitting
    let o = |a: Expr, b: Expr| {
        sum(vec![
            (1, app(Succ, a.clone(), b.clone())),
            (1, app(Prec, a, b)),
        ])
    };
    vec![
        // (y o x) > z - (x o y) > z = x > (y > z) - y > (x > z)
        Identity::new(
            "pre-apl-1",
            3,
            sum(vec![
                (1, app(Succ, o(var(1), var(0)), var(2))),
                (-1, app(Succ, o(var(0), var(1)), var(2))),
                (-1, app(Succ, var(0), app(Succ, var(1), var(2)))),
                (1, app(Succ, var(1), app(Succ, var(0), var(2)))),
            ]),
        ),
        // z < (x o y) = x > (z < y) + (x > z) < y - (z < x) < y
        Identity::new(
            "pre-apl-2",
            3,
            sum(vec![
                (1, app(Prec, var(2), o(var(0), var(1)))),
                (-1, app(Succ, var(0), app(Prec, var(2), var(1)))),
                (-1, app(Prec, app(Succ, var(0), var(2)), var(1))),
                (1, app(Prec, app(Prec, var(2), var(0)), var(1))),
            ]),
        ),
        // (y o x) > z - (x o y) > z
        //   = (y > z) < x - (x > z) < y - (z < y) < x + (z < x) < y
        Identity::new(
            "pre-apl-3",
            3,
            sum(vec![
                (1, app(Succ, o(var(1), var(0)), var(2))),
                (-1, app(Succ, o(var(0), var(1)), var(2))),
                (-1, app(Prec, app(Succ, var(1), var(2)), var(0))),
                (1, app(Prec, app(Succ, var(0), var(2)), var(1))),
                (1, app(Prec, app(Prec, var(2), var(1)), var(0))),
                (-1, app(Prec, app(Prec, var(2), var(0)), var(1))),
            ]),
        ),
    ]
}

fn pre_aplp_extra() -> Vec<Identity> {
    use ProductName::{Prec, Star, Succ};
    let o = |a: Expr, b: Expr| {
        sum(vec![
            (1, app(Succ, a.clone(), b.clone())),
            (1, app(Prec, a, b)),
        ])
    };
    let dot = |a: Expr, b: Expr| {
        sum(vec![
            (1, app(Star, a.clone(), b.clone())),
            (1, app(Star, b, a)),
        ])
    };
    vec![
        // 2 y*(x>z) - 2 y*(z<x) = (x o y)*z - x*(z<y)
        Identity::new(
            "pre-aplp-1",
            3,
            sum(vec![
                (2, app(Star, var(1), app(Succ, var(0), var(2)))),
                (-2, app(Star, var(1), app(Prec, var(2), var(0)))),
                (-1, app(Star, o(var(0), var(1)), var(2))),
                (1, app(Star, var(0), app(Prec, var(2), var(1)))),
            ]),
        ),
        // 2 (x o y)*z - 2 (y o x)*z = y*(x>z) - x*(y>z)
        Identity::new(
            "pre-aplp-2",
            3,
            sum(vec![
                (2, app(Star, o(var(0), var(1)), var(2))),
                (-2, app(Star, o(var(1), var(0)), var(2))),
                (-1, app(Star, var(1), app(Succ, var(0), var(2)))),
                (1, app(Star, var(0), app(Succ, var(1), var(2)))),
            ]),
        ),
        // 2 z<(x.y) = (x*z)<y + x*(z<y)
        Identity::new(
            "pre-aplp-3",
            3,
            sum(vec![
                (2, app(Prec, var(2), dot(var(0), var(1)))),
                (-1, app(Prec, app(Star, var(0), var(2)), var(1))),
                (-1, app(Star, var(0), app(Prec, var(2), var(1)))),
            ]),
        ),
        // 2 x>(y*z) = (x.y)>z + y*(x>z)
        Identity::new(
            "pre-aplp-4",
            3,
            sum(vec![
                (2, app(Succ, var(0), app(Star, var(1), var(2)))),
                (-1, app(Succ, dot(var(0), var(1)), var(2))),
                (-1, app(Star, var(1), app(Succ, var(0), var(2)))),
            ]),
        ),
        // 2 x>(y*z) = (x*z)<y + (x o y)*z
        Identity::new(
            "pre-aplp-5",
            3,
            sum(vec![
                (2, app(Succ, var(0), app(Star, var(1), var(2)))),
                (-1, app(Prec, app(Star, var(0), var(2)), var(1))),
                (-1, app(Star, o(var(0), var(1)), var(2))),
            ]),
        ),
    ]
}

fn poisson_triviality_identities() -> Vec<Identity> {
    use ProductName::{Bracket, Dot};
    vec![
        Identity::new(
            "triviality-bracket-dot",
            3,
            app(Dot, app(Bracket, var(0), var(1)), var(2)),
        ),
        Identity::new(
            "triviality-dot-bracket",
            3,
            app(Bracket, app(Dot, var(0), var(1)), var(2)),
        ),
    ]
}

/// The class registry: every algebra class with its defining identities.
pub fn class_identities(class: ClassId) -> Vec<Identity> {
    match class {
        ClassId::CommAssoc => comm_assoc_identities(),
        ClassId::Lie => lie_identities(),
        ClassId::TransposedPoisson => {
            let mut ids = comm_assoc_identities();
            ids.extend(lie_identities());
            ids.push(transposed_leibniz());
            ids
        }
        ClassId::AntiPreLie => anti_pre_lie_identities(false),
        ClassId::AntiPreLieAlt => anti_pre_lie_identities(true),
        ClassId::AntiPreLiePoisson => {
            let mut ids = comm_assoc_identities();
            ids.extend(anti_pre_lie_identities(false));
            ids.extend(anti_pre_lie_poisson_extra());
            ids
        }
        ClassId::Zinbiel => vec![zinbiel_identity()],
        ClassId::PreApl => pre_apl_identities(),
        ClassId::PreAplp => {
            let mut ids = vec![zinbiel_identity()];
            ids.extend(pre_apl_identities());
            ids.extend(pre_aplp_extra());
            ids
        }
        ClassId::PoissonTriviality => poisson_triviality_identities(),
    }
}

/// Builds the evaluation suite for a class over one algebra.
pub fn class_suite(algebra: &AlgebraPresentation, class: ClassId) -> Result<Suite<'_>> {
    let identities = class_identities(class);
    let mut needed: Vec<ProductName> = Vec::new();
    for ident in &identities {
        ident.expr.products_used(&mut needed);
    }
    for p in needed {
        if !algebra.has_product(p) {
            return Err(KernelError::Configuration(format!(
                "class {class} requires the `{p}` product, which is absent"
            )));
        }
    }
    let dim = algebra.dim();
    let checks = identities
        .into_iter()
        .map(|ident| {
            let expr = ident.expr;
            Check::new(ident.id, vec![dim; ident.arity], move |idx: &[usize]| {
                let args: Vec<Vec<Scalar>> = idx.iter().map(|&i| algebra.basis_vector(i)).collect();
                expr.eval(algebra, &args).expect("products checked present")
            })
        })
        .collect();
    Ok(Suite::new(checks))
}

/// Evaluates every identity of `class` on all basis tuples.
pub fn check_class(algebra: &AlgebraPresentation, class: ClassId) -> Result<Vec<IdentityReport>> {
    Ok(class_suite(algebra, class)?.run())
}

pub fn class_holds(algebra: &AlgebraPresentation, class: ClassId) -> Result<bool> {
    Ok(check_class(algebra, class)?.iter().all(|r| r.holds))
}

/// `bracket(i, j) = circ(i, j) - circ(j, i)`, the sub-adjacent bracket.
pub fn commutator(algebra: &AlgebraPresentation) -> Result<AlgebraPresentation> {
    let circ = algebra.product(ProductName::Circ)?;
    let d = algebra.dim();
    let mut bracket = Tensor::zeros(&[d, d, d]);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let v = circ.get(&[i, j, k]) - circ.get(&[j, i, k]);
                if !v.is_zero() {
                    bracket.set(&[i, j, k], v);
                }
            }
        }
    }
    let mut out = algebra.clone();
    out.set_product(ProductName::Bracket, bracket)?;
    Ok(out)
}

/// `circ = succ + prec`, the sub-adjacent anti-pre-Lie product.
pub fn pre_apl_sum(algebra: &AlgebraPresentation) -> Result<AlgebraPresentation> {
    let succ = algebra.product(ProductName::Succ)?;
    let prec = algebra.product(ProductName::Prec)?;
    let circ = succ.add(prec)?;
    let mut out = algebra.clone();
    out.set_product(ProductName::Circ, circ)?;
    Ok(out)
}

/// `dot = star + transpose(star)`, the symmetrized Zinbiel product.
pub fn zinbiel_symmetrization(algebra: &AlgebraPresentation) -> Result<AlgebraPresentation> {
    let star = algebra.product(ProductName::Star)?;
    let flipped = crate::tensor::permute_tensor(star, &[1, 0, 2])?;
    let dot = star.add(&flipped)?;
    let mut out = algebra.clone();
    out.set_product(ProductName::Dot, dot)?;
    Ok(out)
}

/// Leibniz-rule check `P(x p y) = P(x) p y + x p P(y)` on all basis pairs.
pub fn check_derivation(
    algebra: &AlgebraPresentation,
    product: ProductName,
    p: &LinearMap,
) -> Result<IdentityReport> {
    algebra.product(product)?;
    let d = algebra.dim();
    if p.domain_dim() != d || p.codomain_dim() != d {
        return Err(KernelError::Argument(format!(
            "derivation candidate is {}x{}, algebra dimension is {}",
            p.codomain_dim(),
            p.domain_dim(),
            d
        )));
    }
    let check = Check::new(format!("derivation-{product}"), vec![d, d], move |idx| {
        let (i, j) = (idx[0], idx[1]);
        let ei = algebra.basis_vector(i);
        let ej = algebra.basis_vector(j);
        let pij = p.apply(&algebra.prod_vec(product, &ei, &ej).unwrap());
        let lhs1 = algebra.prod_vec(product, &p.apply(&ei), &ej).unwrap();
        let lhs2 = algebra.prod_vec(product, &ei, &p.apply(&ej)).unwrap();
        pij.iter()
            .zip(lhs1.iter().zip(&lhs2))
            .map(|(a, (b, c))| &(a - b) - c)
            .collect()
    });
    Ok(check.run())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn zero_dimension_is_rejected() {
        assert!(matches!(
            AlgebraPresentation::new(0, None),
            Err(KernelError::Configuration(_))
        ));
    }

    #[test]
    fn zero_algebra_passes_every_class() {
        let mut a = AlgebraPresentation::new(3, None).unwrap();
        for p in ProductName::ALL {
            a.set_product(p, Tensor::zeros(&[3, 3, 3])).unwrap();
        }
        for class in ClassId::ALL {
            let reports = check_class(&a, class).unwrap();
            assert!(reports.iter().all(|r| r.holds), "class {class} failed");
        }
    }

    #[test]
    fn missing_product_is_configuration_error() {
        let a = AlgebraPresentation::new(2, None).unwrap();
        assert!(matches!(
            check_class(&a, ClassId::Lie),
            Err(KernelError::Configuration(_))
        ));
    }

    #[test]
    fn truncated_polynomials_are_comm_assoc() {
        let a = catalog::truncated_polynomial_algebra(3);
        assert!(class_holds(&a, ClassId::CommAssoc).unwrap());
    }

    #[test]
    fn witt_bracket_makes_transposed_poisson() {
        // guaranteed in general for derivation-induced brackets
        let a = catalog::truncated_polynomial_algebra(3);
        let p = catalog::euler_derivation(3);
        let a = crate::oper::witt_lie(&a, &p).unwrap();
        assert!(class_holds(&a, ClassId::TransposedPoisson).unwrap());
    }

    #[test]
    fn perturbed_algebra_fails_with_reproducible_witness() {
        let mut a = catalog::truncated_polynomial_algebra(3);
        let mut t = a.product(ProductName::Dot).unwrap().clone();
        t.set(&[1, 1, 0], Scalar::one()); // t*t picks up a spurious 1
        a.set_product(ProductName::Dot, t).unwrap();
        let suite = class_suite(&a, ClassId::CommAssoc).unwrap();
        let reports = suite.run();
        let failing: Vec<_> = reports.iter().filter(|r| !r.holds).collect();
        assert!(!failing.is_empty());
        for r in failing {
            let again = suite.reevaluate(r).unwrap();
            assert_eq!(again, r.witness.as_ref().unwrap().defect);
        }
    }

    #[test]
    fn commutator_of_nilpotent_derivation_circ() {
        // A3 with x o y = P(x.y) + P(x).y for P(t^k) = k t^(k+1):
        // bracket has [e0, e1] = -e2 only.
        let a = catalog::truncated_polynomial_algebra(3);
        let p = catalog::nilpotent_derivation(3);
        let apl = crate::oper::apl_from_derivation(&a, &p).unwrap();
        assert_eq!(
            apl.prod_basis(ProductName::Circ, 0, 1).unwrap(),
            vec![Scalar::zero(), Scalar::zero(), Scalar::one()]
        );
        assert_eq!(
            apl.prod_basis(ProductName::Circ, 1, 0).unwrap(),
            vec![Scalar::zero(), Scalar::zero(), Scalar::from_int(2)]
        );
        let lie = commutator(&apl).unwrap();
        assert!(class_holds(&lie, ClassId::Lie).unwrap());
        let b = lie.product(ProductName::Bracket).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let expected = if (i, j, k) == (0, 1, 2) {
                        Scalar::from_int(-1)
                    } else if (i, j, k) == (1, 0, 2) {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    };
                    assert_eq!(b.get(&[i, j, k]), &expected, "({i},{j},{k})");
                }
            }
        }
    }

    #[test]
    fn commutative_circ_has_zero_commutator() {
        let a = catalog::truncated_polynomial_algebra(2);
        let mut with_circ = a.clone();
        with_circ
            .set_product(
                ProductName::Circ,
                a.product(ProductName::Dot).unwrap().clone(),
            )
            .unwrap();
        let lie = commutator(&with_circ).unwrap();
        assert!(lie.product(ProductName::Bracket).unwrap().is_zero());
    }

    #[test]
    fn two_dim_zinbiel_symmetrizes() {
        let z = catalog::two_dim_zinbiel();
        assert!(class_holds(&z, ClassId::Zinbiel).unwrap());
        let sym = zinbiel_symmetrization(&z).unwrap();
        assert!(class_holds(&sym, ClassId::CommAssoc).unwrap());
        // x1 . x1 = 2 x2, everything else zero
        assert_eq!(
            sym.prod_basis(ProductName::Dot, 0, 0).unwrap(),
            vec![Scalar::zero(), Scalar::from_int(2)]
        );
    }

    #[test]
    fn half_shuffle_zinbiel_symmetrizes_to_truncated_product() {
        let z = catalog::half_shuffle_zinbiel(3);
        assert!(class_holds(&z, ClassId::Zinbiel).unwrap());
        let sym = zinbiel_symmetrization(&z).unwrap();
        assert!(class_holds(&sym, ClassId::CommAssoc).unwrap());
        // basis is t, t^2, t^3: t^i . t^j = t^(i+j) truncated past t^3
        for i in 0..3 {
            for j in 0..3 {
                let expected: Vec<Scalar> = (0..3)
                    .map(|k| {
                        if i + j + 2 == k + 1 {
                            Scalar::one()
                        } else {
                            Scalar::zero()
                        }
                    })
                    .collect();
                assert_eq!(sym.prod_basis(ProductName::Dot, i, j).unwrap(), expected);
            }
        }
    }

    #[test]
    fn derivation_checker_accepts_euler_and_rejects_identity() {
        let a = catalog::truncated_polynomial_algebra(3);
        let euler = catalog::euler_derivation(3);
        assert!(
            check_derivation(&a, ProductName::Dot, &euler)
                .unwrap()
                .holds
        );

        let zero = LinearMap::zeros(3, 3);
        assert!(check_derivation(&a, ProductName::Dot, &zero).unwrap().holds);

        // P = identity fails at (1, 1): P(1*1) = 1 but P(1)*1 + 1*P(1) = 2
        let id = LinearMap::identity(3);
        let report = check_derivation(&a, ProductName::Dot, &id).unwrap();
        assert!(!report.holds);
        let w = report.witness.unwrap();
        assert_eq!(w.inputs, vec![0, 0]);
        assert_eq!(
            w.defect,
            vec![Scalar::from_int(-1), Scalar::zero(), Scalar::zero()]
        );
    }

    #[test]
    fn pre_aplp_pass_implies_zinbiel_and_pre_apl_pass() {
        let z = catalog::half_shuffle_zinbiel(3);
        let p = catalog::grading_derivation(3);
        let q = crate::oper::pre_aplp_from_zinbiel(&z, &p).unwrap();
        assert!(class_holds(&q, ClassId::PreAplp).unwrap());
        assert!(class_holds(&q, ClassId::Zinbiel).unwrap());
        assert!(class_holds(&q, ClassId::PreApl).unwrap());
    }
}
