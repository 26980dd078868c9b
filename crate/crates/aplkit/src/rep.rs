//! Representations of the five algebra classes, their checks, duals and
//! semi-direct products.
//!
//! A representation stores one matrix per base basis element for each of
//! its map families, so composition in `End(V)` stays plain matrix
//! multiplication. Dual spaces always carry the dual basis: dualizing a
//! family is a negated transpose and nothing else.

use crate::algebra::{AlgebraPresentation, ClassId, ProductName};
use crate::error::{KernelError, Result};
use crate::linmap::LinearMap;
use crate::report::{Check, IdentityReport, Suite};
use crate::scalar::Scalar;
use crate::tensor::Tensor;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub enum RepKind {
    Lie,
    CommAssoc,
    Apl,
    Tpa,
    Aplp,
}

impl RepKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RepKind::Lie => "lie",
            RepKind::CommAssoc => "comm-assoc",
            RepKind::Apl => "apl",
            RepKind::Tpa => "tpa",
            RepKind::Aplp => "aplp",
        }
    }

    pub fn families(&self) -> &'static [FamilyName] {
        match self {
            RepKind::Lie => &[FamilyName::Rho],
            RepKind::CommAssoc => &[FamilyName::Mu],
            RepKind::Apl => &[FamilyName::LCirc, FamilyName::RCirc],
            RepKind::Tpa => &[FamilyName::Mu, FamilyName::Rho],
            RepKind::Aplp => &[FamilyName::Mu, FamilyName::LCirc, FamilyName::RCirc],
        }
    }

    pub fn base_products(&self) -> &'static [ProductName] {
        match self {
            RepKind::Lie => &[ProductName::Bracket],
            RepKind::CommAssoc => &[ProductName::Dot],
            RepKind::Apl => &[ProductName::Circ],
            RepKind::Tpa => &[ProductName::Dot, ProductName::Bracket],
            RepKind::Aplp => &[ProductName::Dot, ProductName::Circ],
        }
    }

    /// The class the semi-direct product lands in.
    pub fn class(&self) -> ClassId {
        match self {
            RepKind::Lie => ClassId::Lie,
            RepKind::CommAssoc => ClassId::CommAssoc,
            RepKind::Apl => ClassId::AntiPreLie,
            RepKind::Tpa => ClassId::TransposedPoisson,
            RepKind::Aplp => ClassId::AntiPreLiePoisson,
        }
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum FamilyName {
    /// Action of the commutative associative product.
    Mu,
    /// Lie action.
    Rho,
    /// Left anti-pre-Lie action.
    LCirc,
    /// Right anti-pre-Lie action.
    RCirc,
}

impl FamilyName {
    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyName::Mu => "mu",
            FamilyName::Rho => "rho",
            FamilyName::LCirc => "l-circ",
            FamilyName::RCirc => "r-circ",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Representation {
    kind: RepKind,
    base: AlgebraPresentation,
    space_dim: usize,
    families: BTreeMap<FamilyName, Vec<LinearMap>>,
}

impl Representation {
    pub fn new(
        kind: RepKind,
        base: AlgebraPresentation,
        space_dim: usize,
        families: BTreeMap<FamilyName, Vec<LinearMap>>,
    ) -> Result<Representation> {
        for p in kind.base_products() {
            base.product(*p)?;
        }
        for f in kind.families() {
            let mats = families.get(f).ok_or_else(|| {
                KernelError::Configuration(format!(
                    "representation of kind {kind} needs family `{}`",
                    f.as_str()
                ))
            })?;
            if mats.len() != base.dim() {
                return Err(KernelError::Dimension(format!(
                    "family `{}` has {} matrices, base dimension is {}",
                    f.as_str(),
                    mats.len(),
                    base.dim()
                )));
            }
            for m in mats {
                if m.domain_dim() != space_dim || m.codomain_dim() != space_dim {
                    return Err(KernelError::Dimension(format!(
                        "family `{}` matrix is {}x{}, space dimension is {}",
                        f.as_str(),
                        m.codomain_dim(),
                        m.domain_dim(),
                        space_dim
                    )));
                }
            }
        }
        for f in families.keys() {
            if !kind.families().contains(f) {
                return Err(KernelError::Configuration(format!(
                    "family `{}` does not belong to representation kind {kind}",
                    f.as_str()
                )));
            }
        }
        Ok(Representation {
            kind,
            base,
            space_dim,
            families,
        })
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    pub fn base(&self) -> &AlgebraPresentation {
        &self.base
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn family(&self, f: FamilyName) -> &[LinearMap] {
        &self.families[&f]
    }

    pub fn family_matrix(&self, f: FamilyName, i: usize) -> &LinearMap {
        &self.families[&f][i]
    }

    /// Linear extension of a family to an arbitrary base element.
    pub fn family_at(&self, f: FamilyName, coords: &[Scalar]) -> LinearMap {
        let mut out = LinearMap::zeros(self.space_dim, self.space_dim);
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = out.add(&self.families[&f][k].scale(c));
        }
        out
    }

    pub fn with_families(&self, families: BTreeMap<FamilyName, Vec<LinearMap>>) -> Result<Self> {
        Representation::new(self.kind, self.base.clone(), self.space_dim, families)
    }
}

/// The adjoint representation of an algebra for the given kind.
pub fn adjoint(base: &AlgebraPresentation, kind: RepKind) -> Result<Representation> {
    let mut families = BTreeMap::new();
    for f in kind.families() {
        let mats = match f {
            FamilyName::Mu => base.mult_family(ProductName::Dot, false)?,
            FamilyName::Rho => base.mult_family(ProductName::Bracket, false)?,
            FamilyName::LCirc => base.mult_family(ProductName::Circ, false)?,
            FamilyName::RCirc => base.mult_family(ProductName::Circ, true)?,
        };
        families.insert(*f, mats);
    }
    Representation::new(kind, base.clone(), base.dim(), families)
}

fn rep_suite<'a>(rep: &'a Representation) -> Suite<'a> {
    let n = rep.base.dim();
    let base = &rep.base;
    let prod = move |p: ProductName, i: usize, j: usize| base.prod_basis(p, i, j).unwrap();
    let at = move |f: FamilyName, v: Vec<Scalar>| rep.family_at(f, &v);
    let m = move |f: FamilyName, i: usize| rep.family_matrix(f, i);
    let flat = |m: LinearMap| -> Vec<Scalar> { m.to_tensor().entries().to_vec() };

    let mut checks: Vec<Check<'a>> = Vec::new();
    let mut push = |id: &'static str, eval: crate::report::CheckFn<'a>| {
        checks.push(Check::new(id, vec![n, n], move |idx| eval(idx)));
    };

    use FamilyName::*;
    use ProductName::*;
    let kind = rep.kind;

    if matches!(kind, RepKind::CommAssoc | RepKind::Tpa | RepKind::Aplp) {
        push(
            "assoc-rep",
            Box::new(move |idx| {
                let (i, j) = (idx[0], idx[1]);
                let lhs = at(Mu, prod(Dot, i, j));
                let rhs = m(Mu, i).compose(m(Mu, j));
                flat(lhs.sub(&rhs))
            }),
        );
    }
    if matches!(kind, RepKind::Lie | RepKind::Tpa) {
        push(
            "lie-rep",
            Box::new(move |idx| {
                let (i, j) = (idx[0], idx[1]);
                let lhs = at(Rho, prod(Bracket, i, j));
                let rhs = m(Rho, i)
                    .compose(m(Rho, j))
                    .sub(&m(Rho, j).compose(m(Rho, i)));
                flat(lhs.sub(&rhs))
            }),
        );
    }
    if matches!(kind, RepKind::Apl | RepKind::Aplp) {
        push(
            "apl-rep-1",
            Box::new(move |idx| {
                let (i, j) = (idx[0], idx[1]);
                let lhs = at(LCirc, prod(Circ, j, i)).sub(&at(LCirc, prod(Circ, i, j)));
                let rhs = m(LCirc, i)
                    .compose(m(LCirc, j))
                    .sub(&m(LCirc, j).compose(m(LCirc, i)));
                flat(lhs.sub(&rhs))
            }),
        );
        push(
            "apl-rep-2",
            Box::new(move |idx| {
                let (i, j) = (idx[0], idx[1]);
                let lhs = at(RCirc, prod(Circ, i, j));
                let rhs = m(LCirc, i)
                    .compose(m(RCirc, j))
                    .add(&m(RCirc, j).compose(m(LCirc, i)))
                    .sub(&m(RCirc, j).compose(m(RCirc, i)));
                flat(lhs.sub(&rhs))
            }),
        );
        push(
            "apl-rep-3",
            Box::new(move |idx| {
                let (i, j) = (idx[0], idx[1]);
                let lhs = at(LCirc, prod(Circ, j, i)).sub(&at(LCirc, prod(Circ, i, j)));
                let rhs = m(RCirc, i)
                    .compose(m(LCirc, j))
                    .sub(&m(RCirc, j).compose(m(LCirc, i)))
                    .sub(&m(RCirc, i).compose(m(RCirc, j)))
                    .add(&m(RCirc, j).compose(m(RCirc, i)));
                flat(lhs.sub(&rhs))
            }),
        );
    }
    if kind == RepKind::Tpa {
        push(
            "tpa-rep-1",
            Box::new(move |idx| {
                let (i, j) = (idx[0], idx[1]);
                // 2 mu(x) rho(y) = rho(x.y) + rho(y) mu(x)
                let lhs = m(Mu, i).compose(m(Rho, j)).scale(&Scalar::from_int(2));
                let rhs = at(Rho, prod(Dot, i, j)).add(&m(Rho, j).compose(m(Mu, i)));
                flat(lhs.sub(&rhs))
            }),
        );
        push(
            "tpa-rep-2",
            Box::new(move |idx| {
                let (i, j) = (idx[0], idx[1]);
                // 2 mu([x,y]) = rho(x) mu(y) - rho(y) mu(x)
                let lhs = at(Mu, prod(Bracket, i, j)).scale(&Scalar::from_int(2));
                let rhs = m(Rho, i)
                    .compose(m(Mu, j))
                    .sub(&m(Rho, j).compose(m(Mu, i)));
                flat(lhs.sub(&rhs))
            }),
        );
    }
    if kind == RepKind::Aplp {
        push(
            "aplp-rep-1",
            Box::new(move |idx| {
                let (i, j) = (idx[0], idx[1]);
                // 2 mu(y) l(x) - 2 mu(y) r(x) = mu(x o y) - mu(x) r(y)
                let two = Scalar::from_int(2);
                let lhs = m(Mu, j)
                    .compose(m(LCirc, i))
                    .sub(&m(Mu, j).compose(m(RCirc, i)))
                    .scale(&two);
                let rhs = at(Mu, prod(Circ, i, j)).sub(&m(Mu, i).compose(m(RCirc, j)));
                flat(lhs.sub(&rhs))
            }),
        );
        push(
            "aplp-rep-2",
            Box::new(move |idx| {
                let (i, j) = (idx[0], idx[1]);
                // 2 mu(x o y) - 2 mu(y o x) = mu(y) l(x) - mu(x) l(y)
                let two = Scalar::from_int(2);
                let lhs = at(Mu, prod(Circ, i, j))
                    .sub(&at(Mu, prod(Circ, j, i)))
                    .scale(&two);
                let rhs = m(Mu, j)
                    .compose(m(LCirc, i))
                    .sub(&m(Mu, i).compose(m(LCirc, j)));
                flat(lhs.sub(&rhs))
            }),
        );
        push(
            "aplp-rep-3",
            Box::new(move |idx| {
                let (i, j) = (idx[0], idx[1]);
                // 2 r(x.y) = r(y) mu(x) + mu(x) r(y)
                let lhs = at(RCirc, prod(Dot, i, j)).scale(&Scalar::from_int(2));
                let rhs = m(RCirc, j)
                    .compose(m(Mu, i))
                    .add(&m(Mu, i).compose(m(RCirc, j)));
                flat(lhs.sub(&rhs))
            }),
        );
        push(
            "aplp-rep-4",
            Box::new(move |idx| {
                let (i, j) = (idx[0], idx[1]);
                // 2 l(x) mu(y) = l(x.y) + mu(y) l(x)
                let lhs = m(LCirc, i).compose(m(Mu, j)).scale(&Scalar::from_int(2));
                let rhs = at(LCirc, prod(Dot, i, j)).add(&m(Mu, j).compose(m(LCirc, i)));
                flat(lhs.sub(&rhs))
            }),
        );
        push(
            "aplp-rep-5",
            Box::new(move |idx| {
                let (i, j) = (idx[0], idx[1]);
                // 2 l(x) mu(y) = r(y) mu(x) + mu(x o y)
                let lhs = m(LCirc, i).compose(m(Mu, j)).scale(&Scalar::from_int(2));
                let rhs = m(RCirc, j).compose(m(Mu, i)).add(&at(Mu, prod(Circ, i, j)));
                flat(lhs.sub(&rhs))
            }),
        );
    }
    Suite::new(checks)
}

/// One report per defining equation, evaluated as matrix identities on all
/// base basis pairs.
pub fn check_representation(rep: &Representation) -> Vec<IdentityReport> {
    rep_suite(rep).run()
}

pub fn representation_suite<'a>(rep: &'a Representation) -> Suite<'a> {
    rep_suite(rep)
}

pub fn representation_holds(rep: &Representation) -> bool {
    check_representation(rep).iter().all(|r| r.holds)
}

fn negated_transposes(mats: &[LinearMap]) -> Vec<LinearMap> {
    mats.iter().map(|m| m.transpose().neg()).collect()
}

fn transposes(mats: &[LinearMap]) -> Vec<LinearMap> {
    mats.iter().map(|m| m.transpose()).collect()
}

/// Dualizes a representation onto `V*` (dual basis), per kind:
/// Lie `rho -> rho*`; commutative associative `mu -> -mu*`;
/// anti-pre-Lie `(l, r) -> (r* - l*, r*)`; anti-pre-Lie Poisson
/// `(mu, l, r) -> (-mu*, r* - l*, r*)`.
///
/// There is no natural dual for the transposed Poisson kind; see
/// [`check_tpa_dual_condition`].
pub fn dualize(rep: &Representation) -> Result<Representation> {
    use FamilyName::*;
    let mut families = BTreeMap::new();
    match rep.kind {
        RepKind::Lie => {
            // rho*(x) = -rho(x)^T
            families.insert(Rho, negated_transposes(rep.family(Rho)));
        }
        RepKind::CommAssoc => {
            // -mu*(x) = mu(x)^T
            families.insert(Mu, transposes(rep.family(Mu)));
        }
        RepKind::Apl => {
            let l = rep.family(LCirc);
            let r = rep.family(RCirc);
            let new_l: Vec<LinearMap> = l
                .iter()
                .zip(r)
                .map(|(lm, rm)| lm.sub(rm).transpose())
                .collect();
            families.insert(LCirc, new_l);
            families.insert(RCirc, negated_transposes(r));
        }
        RepKind::Aplp => {
            families.insert(Mu, transposes(rep.family(Mu)));
            let l = rep.family(LCirc);
            let r = rep.family(RCirc);
            let new_l: Vec<LinearMap> = l
                .iter()
                .zip(r)
                .map(|(lm, rm)| lm.sub(rm).transpose())
                .collect();
            families.insert(LCirc, new_l);
            families.insert(RCirc, negated_transposes(r));
        }
        RepKind::Tpa => {
            return Err(KernelError::Configuration(
                "transposed Poisson representations have no natural dual; \
                 use check_tpa_dual_condition"
                    .into(),
            ))
        }
    }
    rep.with_families(families)
}

/// The exact criterion for `(-mu*, rho*, V*)` to be a transposed Poisson
/// representation: `mu([x,y]) = 0` and `rho(x.y) = mu(x) rho(y)`.
pub fn check_tpa_dual_condition(rep: &Representation) -> Result<IdentityReport> {
    if rep.kind != RepKind::Tpa {
        return Err(KernelError::Configuration(format!(
            "tpa dual condition applies to tpa representations, got {}",
            rep.kind
        )));
    }
    let n = rep.base.dim();
    let check = Check::new("tpa-dual-condition", vec![n, n], move |idx| {
        let (i, j) = (idx[0], idx[1]);
        let bracket = rep.base.prod_basis(ProductName::Bracket, i, j).unwrap();
        let dot = rep.base.prod_basis(ProductName::Dot, i, j).unwrap();
        let first = rep.family_at(FamilyName::Mu, &bracket);
        let second = rep.family_at(FamilyName::Rho, &dot).sub(
            &rep.family_matrix(FamilyName::Mu, i)
                .compose(rep.family_matrix(FamilyName::Rho, j)),
        );
        let mut defect = first.to_tensor().entries().to_vec();
        defect.extend(second.to_tensor().entries().to_vec());
        defect
    });
    Ok(check.run())
}

/// Builds `(-mu*, rho*, V*)` after verifying the dual condition.
pub fn tpa_dual(rep: &Representation) -> Result<Representation> {
    let condition = check_tpa_dual_condition(rep)?;
    if !condition.holds {
        return Err(KernelError::precondition(
            "tpa dual condition fails",
            vec![condition],
        ));
    }
    let mut families = BTreeMap::new();
    families.insert(FamilyName::Mu, transposes(rep.family(FamilyName::Mu)));
    families.insert(
        FamilyName::Rho,
        negated_transposes(rep.family(FamilyName::Rho)),
    );
    rep.with_families(families)
}

/// The semi-direct product presentation on `base + V`.
pub fn semidirect_product(rep: &Representation) -> Result<AlgebraPresentation> {
    let reports = check_representation(rep);
    let failing: Vec<IdentityReport> = reports.into_iter().filter(|r| !r.holds).collect();
    if !failing.is_empty() {
        return Err(KernelError::precondition(
            "representation check fails",
            failing,
        ));
    }
    semidirect_product_unchecked(rep)
}

/// Assembles the block products without checking the representation.
pub fn semidirect_product_unchecked(rep: &Representation) -> Result<AlgebraPresentation> {
    let n = rep.base.dim();
    let m = rep.space_dim;
    let total = n + m;
    let mut labels: Vec<String> = rep.base.basis_labels().to_vec();
    labels.extend((0..m).map(|i| format!("v{i}")));
    let mut out = AlgebraPresentation::new(total, Some(labels))?;

    use FamilyName::*;
    use ProductName::*;
    // (left family, right family, product, sign of the right action)
    let blocks: &[(ProductName, FamilyName, FamilyName, i64)] = match rep.kind {
        RepKind::Lie => &[(Bracket, Rho, Rho, -1)],
        RepKind::CommAssoc => &[(Dot, Mu, Mu, 1)],
        RepKind::Apl => &[(Circ, LCirc, RCirc, 1)],
        RepKind::Tpa => &[(Dot, Mu, Mu, 1), (Bracket, Rho, Rho, -1)],
        RepKind::Aplp => &[(Dot, Mu, Mu, 1), (Circ, LCirc, RCirc, 1)],
    };
    for &(p, left_fam, right_fam, right_sign) in blocks {
        let base_t = rep.base.product(p)?;
        let mut t = Tensor::zeros(&[total, total, total]);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = base_t.get(&[i, j, k]);
                    if !c.is_zero() {
                        t.set(&[i, j, k], c.clone());
                    }
                }
            }
        }
        let sign = Scalar::from_int(right_sign);
        for i in 0..n {
            // e_i p f_b = left(e_i) f_b
            let lm = rep.family_matrix(left_fam, i);
            for b in 0..m {
                for c in 0..m {
                    let v = lm.get(c, b);
                    if !v.is_zero() {
                        t.set(&[i, n + b, n + c], v.clone());
                    }
                }
            }
            // f_a p e_i = sign * right(e_i) f_a
            let rm = rep.family_matrix(right_fam, i);
            for a in 0..m {
                for c in 0..m {
                    let v = rm.get(c, a);
                    if !v.is_zero() {
                        t.set(&[n + a, i, n + c], &sign * v);
                    }
                }
            }
        }
        out.set_product(p, t)?;
    }
    Ok(out)
}
