//! Bilinear forms, commutative 2-cocycles, the induced anti-pre-Lie
//! structure of a nondegenerate commutative 2-cocycle, and Manin-triple
//! verification on a split double.

use crate::algebra::{check_class, class_suite, AlgebraPresentation, ClassId, ProductName};
use crate::error::{KernelError, Result};
use crate::linmap::{matrix_rank_and_inverse, solve, LinearMap};
use crate::report::{all_hold, Check, IdentityReport};
use crate::scalar::Scalar;
use crate::tensor::Tensor;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearForm {
    matrix: LinearMap,
}

impl BilinearForm {
    pub fn new(matrix: LinearMap) -> BilinearForm {
        assert!(matrix.is_square(), "bilinear form must be square");
        BilinearForm { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.domain_dim()
    }

    pub fn matrix(&self) -> &LinearMap {
        &self.matrix
    }

    /// `B(e_i, e_j)`.
    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        self.matrix.get(i, j)
    }

    /// `B(u, v)` for coordinate vectors.
    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let b = self.at(i, j);
                if !b.is_zero() {
                    acc += &(&(ui * vj) * b);
                }
            }
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn rank(&self) -> usize {
        matrix_rank_and_inverse(&self.matrix).0
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.rank() == self.dim()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FormPredicate {
    Symmetric,
    Nondegenerate,
    /// `B(x.y, z) = B(x, y.z)`.
    InvariantDot,
    /// `B([x,y], z) = B(x, [y,z])`.
    InvariantBracket,
    /// `B([x,y], z) + B([y,z], x) + B([z,x], y) = 0`.
    Comm2Cocycle,
}

impl FormPredicate {
    pub fn as_str(&self) -> &'static str {
        match self {
            FormPredicate::Symmetric => "symmetric",
            FormPredicate::Nondegenerate => "nondegenerate",
            FormPredicate::InvariantDot => "invariant-dot",
            FormPredicate::InvariantBracket => "invariant-bracket",
            FormPredicate::Comm2Cocycle => "comm-2-cocycle",
        }
    }

    pub fn parse(s: &str) -> Option<FormPredicate> {
        [
            FormPredicate::Symmetric,
            FormPredicate::Nondegenerate,
            FormPredicate::InvariantDot,
            FormPredicate::InvariantBracket,
            FormPredicate::Comm2Cocycle,
        ]
        .into_iter()
        .find(|p| p.as_str() == s)
    }
}

/// Evaluates one predicate of `b` against `algebra` exactly.
pub fn check_form(
    algebra: &AlgebraPresentation,
    b: &BilinearForm,
    predicate: FormPredicate,
) -> Result<IdentityReport> {
    if b.dim() != algebra.dim() {
        return Err(KernelError::Dimension(format!(
            "form dimension {} does not match algebra dimension {}",
            b.dim(),
            algebra.dim()
        )));
    }
    let d = algebra.dim();
    match predicate {
        FormPredicate::Symmetric => {
            let check = Check::new("symmetric", vec![d, d], move |idx| {
                vec![b.at(idx[0], idx[1]) - b.at(idx[1], idx[0])]
            });
            Ok(check.run())
        }
        FormPredicate::Nondegenerate => {
            if b.is_nondegenerate() {
                Ok(IdentityReport::pass("nondegenerate"))
            } else {
                // witness: a nonzero kernel vector v with B(v, -) = 0
                let kernel = kernel_vector(b.matrix());
                Ok(IdentityReport::fail("nondegenerate", vec![], kernel))
            }
        }
        FormPredicate::InvariantDot => {
            invariance_check(algebra, b, ProductName::Dot, "invariant-dot")
        }
        FormPredicate::InvariantBracket => {
            invariance_check(algebra, b, ProductName::Bracket, "invariant-bracket")
        }
        FormPredicate::Comm2Cocycle => {
            algebra.product(ProductName::Bracket)?;
            let check = Check::new("comm-2-cocycle", vec![d, d, d], move |idx| {
                let (i, j, k) = (idx[0], idx[1], idx[2]);
                let ei = algebra.basis_vector(i);
                let ej = algebra.basis_vector(j);
                let ek = algebra.basis_vector(k);
                let br = |x, y| algebra.prod_basis(ProductName::Bracket, x, y).unwrap();
                let mut acc = b.eval(&br(i, j), &ek);
                acc += &b.eval(&br(j, k), &ei);
                acc += &b.eval(&br(k, i), &ej);
                vec![acc]
            });
            Ok(check.run())
        }
    }
}

fn invariance_check(
    algebra: &AlgebraPresentation,
    b: &BilinearForm,
    product: ProductName,
    id: &'static str,
) -> Result<IdentityReport> {
    algebra.product(product)?;
    let d = algebra.dim();
    let check = Check::new(id, vec![d, d, d], move |idx| {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let ij = algebra.prod_basis(product, i, j).unwrap();
        let jk = algebra.prod_basis(product, j, k).unwrap();
        let ek = algebra.basis_vector(k);
        let ei = algebra.basis_vector(i);
        vec![b.eval(&ij, &ek) - b.eval(&ei, &jk)]
    });
    Ok(check.run())
}

#[allow(clippy::needless_range_loop)]
fn kernel_vector(m: &LinearMap) -> Vec<Scalar> {
    // Row-reduce m^T so a vanishing combination of rows of m becomes
    // explicit, then read off one kernel vector of the symmetric pairing.
    // Cheap route: find v with m v = 0 by eliminating on m directly.
    let d = m.domain_dim();
    let mut rows: Vec<Vec<Scalar>> = (0..m.codomain_dim())
        .map(|r| (0..d).map(|c| m.get(r, c).clone()).collect())
        .collect();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..d {
        if let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) {
            rows.swap(rank, p);
            let inv = rows[rank][col].inverse().unwrap();
            for c in 0..d {
                rows[rank][c] = &rows[rank][c] * &inv;
            }
            for r in 0..rows.len() {
                if r != rank && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    for c in 0..d {
                        let delta = &rows[rank][c] * &f;
                        rows[r][c] -= &delta;
                    }
                }
            }
            pivot_col_of_row.push(col);
            rank += 1;
        }
    }
    // free column = first non-pivot column
    let free = (0..d)
        .find(|c| !pivot_col_of_row.contains(c))
        .expect("degenerate matrix has a free column");
    let mut v = vec![Scalar::zero(); d];
    v[free] = Scalar::one();
    for (r, &pc) in pivot_col_of_row.iter().enumerate() {
        v[pc] = -&rows[r][free];
    }
    v
}

/// The unique compatible anti-pre-Lie product of a nondegenerate
/// commutative 2-cocycle: `B(x o y, z) = B(y, [x, z])`.
///
/// Solved pair by pair by direct elimination; reusing `B^{-1}` would be an
/// internal optimization only.
pub fn induce_anti_pre_lie(
    lie: &AlgebraPresentation,
    b: &BilinearForm,
) -> Result<AlgebraPresentation> {
    let mut failing = Vec::new();
    for predicate in [
        FormPredicate::Symmetric,
        FormPredicate::Nondegenerate,
        FormPredicate::Comm2Cocycle,
    ] {
        let report = check_form(lie, b, predicate)?;
        if !report.holds {
            failing.push(report);
        }
    }
    if !failing.is_empty() {
        return Err(KernelError::precondition(
            "form is not a nondegenerate symmetric commutative 2-cocycle",
            failing,
        ));
    }
    let d = lie.dim();
    let mut circ = Tensor::zeros(&[d, d, d]);
    for i in 0..d {
        for j in 0..d {
            let ej = lie.basis_vector(j);
            // rhs covector: z |-> B(e_j, [e_i, z])
            let rhs: Vec<Scalar> = (0..d)
                .map(|k| {
                    let bracket_ik = lie.prod_basis(ProductName::Bracket, i, k).unwrap();
                    b.eval(&ej, &bracket_ik)
                })
                .collect();
            let x = solve(b.matrix(), &rhs).expect("nondegenerate by precondition");
            for (k, v) in x.into_iter().enumerate() {
                if !v.is_zero() {
                    circ.set(&[i, j, k], v);
                }
            }
        }
    }
    let mut out = lie.clone();
    out.set_product(ProductName::Circ, circ)?;
    Ok(out)
}

/// The standard pairing on `A + A*`: zero on each half, identity across.
pub fn standard_form(dim_a: usize) -> BilinearForm {
    let d = 2 * dim_a;
    let mut m = LinearMap::zeros(d, d);
    for i in 0..dim_a {
        m.set(i, dim_a + i, Scalar::one());
        m.set(dim_a + i, i, Scalar::one());
    }
    BilinearForm::new(m)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ManinKind {
    /// Manin triple of Lie algebras with respect to the commutative
    /// 2-cocycle `B_d`.
    Lie2Cocycle,
    /// Manin triple of transposed Poisson algebras: additionally a double
    /// construction of commutative Frobenius algebras.
    Tpa,
}

/// Verifies a split double `A + A*` against the Manin-triple conditions.
///
/// Reports cover the class axioms on the double, closure of both halves
/// under every relevant product, and the `B_d` predicates. Witness indices
/// of `subalgebra-*` reports are relative to the named half.
pub fn check_manin_triple(
    double: &AlgebraPresentation,
    split: (usize, usize),
    kind: ManinKind,
) -> Result<Vec<IdentityReport>> {
    let (na, nb) = split;
    if na + nb != double.dim() || na != nb || na == 0 {
        return Err(KernelError::Argument(format!(
            "split {:?} inconsistent with double of dimension {}",
            split,
            double.dim()
        )));
    }
    let bd = standard_form(na);
    let mut reports = Vec::new();
    let (class, products): (ClassId, &[ProductName]) = match kind {
        ManinKind::Lie2Cocycle => (ClassId::Lie, &[ProductName::Bracket]),
        ManinKind::Tpa => (
            ClassId::TransposedPoisson,
            &[ProductName::Dot, ProductName::Bracket],
        ),
    };
    reports.extend(check_class(double, class)?);
    for &p in products {
        double.product(p)?;
        for (half, offset) in [("a", 0usize), ("a-star", na)] {
            let check = Check::new(format!("subalgebra-{p}-{half}"), vec![na, na], move |idx| {
                let (i, j) = (offset + idx[0], offset + idx[1]);
                let v = double.prod_basis(p, i, j).unwrap();
                // components outside the half must vanish
                (0..double.dim())
                    .filter(|k| !(offset..offset + na).contains(k))
                    .map(|k| v[k].clone())
                    .collect()
            });
            reports.push(check.run());
        }
    }
    reports.push(check_form(double, &bd, FormPredicate::Symmetric)?);
    reports.push(check_form(double, &bd, FormPredicate::Nondegenerate)?);
    reports.push(check_form(double, &bd, FormPredicate::Comm2Cocycle)?);
    if kind == ManinKind::Tpa {
        reports.push(check_form(double, &bd, FormPredicate::InvariantDot)?);
    }
    Ok(reports)
}

/// For a transposed Poisson algebra with a nondegenerate form invariant on
/// both products, both interaction products must vanish; a failure here
/// indicates a kernel bug, not bad input.
pub fn check_tpa_both_invariant_triviality(
    algebra: &AlgebraPresentation,
    b: &BilinearForm,
) -> Result<IdentityReport> {
    let mut failing: Vec<IdentityReport> = check_class(algebra, ClassId::TransposedPoisson)?
        .into_iter()
        .filter(|r| !r.holds)
        .collect();
    for predicate in [
        FormPredicate::Nondegenerate,
        FormPredicate::InvariantDot,
        FormPredicate::InvariantBracket,
    ] {
        let report = check_form(algebra, b, predicate)?;
        if !report.holds {
            failing.push(report);
        }
    }
    if !failing.is_empty() {
        return Err(KernelError::precondition(
            "need a transposed Poisson algebra with a nondegenerate form invariant on both products",
            failing,
        ));
    }
    let suite = class_suite(algebra, ClassId::PoissonTriviality)?;
    let reports = suite.run();
    if all_hold(&reports) {
        Ok(IdentityReport::pass("both-invariant-triviality"))
    } else {
        let first = reports.into_iter().find(|r| !r.holds).unwrap();
        let w = first.witness.unwrap();
        Ok(IdentityReport::fail(
            "both-invariant-triviality",
            w.inputs,
            w.defect,
        ))
    }
}
