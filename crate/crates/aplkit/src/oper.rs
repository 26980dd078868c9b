//! O-operators, induced pre-structures, canonical Yang-Baxter solutions,
//! and the derivation-based example factories.

use crate::algebra::{AlgebraPresentation, ProductName};
use crate::error::{KernelError, Result};
use crate::linmap::LinearMap;
use crate::rep::{
    adjoint, check_representation, dualize, semidirect_product_unchecked, FamilyName, RepKind,
    Representation,
};
use crate::report::{Check, IdentityReport};
use crate::scalar::Scalar;
use crate::tensor::Tensor;
use crate::ybe::{compute_a, compute_t, TwoTensor};
use std::collections::BTreeMap;

/// An O-operator candidate: a linear map from the representation space to
/// the base algebra.
#[derive(Clone, Debug)]
pub struct OOperatorProblem {
    pub base: AlgebraPresentation,
    pub rep: Representation,
    pub map: LinearMap,
}

impl OOperatorProblem {
    pub fn new(rep: Representation, map: LinearMap) -> Result<OOperatorProblem> {
        if map.domain_dim() != rep.space_dim() || map.codomain_dim() != rep.base().dim() {
            return Err(KernelError::Argument(format!(
                "o-operator map is {}x{}, expected {}x{}",
                map.codomain_dim(),
                map.domain_dim(),
                rep.base().dim(),
                rep.space_dim()
            )));
        }
        Ok(OOperatorProblem {
            base: rep.base().clone(),
            rep,
            map,
        })
    }
}

fn rep_precondition(rep: &Representation) -> Result<()> {
    let failing: Vec<IdentityReport> = check_representation(rep)
        .into_iter()
        .filter(|r| !r.holds)
        .collect();
    if failing.is_empty() {
        Ok(())
    } else {
        Err(KernelError::precondition(
            "representation check fails",
            failing,
        ))
    }
}

/// Checks the defining O-operator equation(s) on all rep-basis pairs.
/// For the Poisson kinds both the associative and the anti-pre-Lie (or
/// Lie) equations must hold; the defects are concatenated.
pub fn check_o_operator(problem: &OOperatorProblem) -> Result<IdentityReport> {
    rep_precondition(&problem.rep)?;
    Ok(o_operator_check(problem).run())
}

fn o_operator_check<'a>(problem: &'a OOperatorProblem) -> Check<'a> {
    let m = problem.rep.space_dim();
    Check::new("o-operator", vec![m, m], move |idx| {
        o_operator_defect(problem, idx[0], idx[1])
    })
}

fn o_operator_defect(problem: &OOperatorProblem, a: usize, b: usize) -> Vec<Scalar> {
    let rep = &problem.rep;
    let base = &problem.base;
    let t = &problem.map;
    let m = rep.space_dim();
    let u = basis(m, a);
    let v = basis(m, b);
    let tu = t.apply(&u);
    let tv = t.apply(&v);
    let mut defect = Vec::new();
    let mut push_eq = |product: ProductName, arg: Vec<Scalar>| {
        let lhs = base.prod_vec(product, &tu, &tv).unwrap();
        let rhs = t.apply(&arg);
        defect.extend(lhs.iter().zip(rhs).map(|(x, y)| x - &y));
    };
    match rep.kind() {
        RepKind::CommAssoc => {
            let arg = add(
                &rep.family_at(FamilyName::Mu, &tu).apply(&v),
                &rep.family_at(FamilyName::Mu, &tv).apply(&u),
            );
            push_eq(ProductName::Dot, arg);
        }
        RepKind::Lie => {
            let arg = sub(
                &rep.family_at(FamilyName::Rho, &tu).apply(&v),
                &rep.family_at(FamilyName::Rho, &tv).apply(&u),
            );
            push_eq(ProductName::Bracket, arg);
        }
        RepKind::Apl => {
            let arg = add(
                &rep.family_at(FamilyName::LCirc, &tu).apply(&v),
                &rep.family_at(FamilyName::RCirc, &tv).apply(&u),
            );
            push_eq(ProductName::Circ, arg);
        }
        RepKind::Tpa => {
            let arg = add(
                &rep.family_at(FamilyName::Mu, &tu).apply(&v),
                &rep.family_at(FamilyName::Mu, &tv).apply(&u),
            );
            push_eq(ProductName::Dot, arg);
            let arg = sub(
                &rep.family_at(FamilyName::Rho, &tu).apply(&v),
                &rep.family_at(FamilyName::Rho, &tv).apply(&u),
            );
            push_eq(ProductName::Bracket, arg);
        }
        RepKind::Aplp => {
            let arg = add(
                &rep.family_at(FamilyName::Mu, &tu).apply(&v),
                &rep.family_at(FamilyName::Mu, &tv).apply(&u),
            );
            push_eq(ProductName::Dot, arg);
            let arg = add(
                &rep.family_at(FamilyName::LCirc, &tu).apply(&v),
                &rep.family_at(FamilyName::RCirc, &tv).apply(&u),
            );
            push_eq(ProductName::Circ, arg);
        }
    }
    defect
}

/// The induced pre-structure of a verified O-operator:
/// `u > v = l(Tu) v`, `u < v = r(Tv) u`, and `u * v = mu(Tu) v` for the
/// Poisson kind.
pub fn induce_pre_structure(problem: &OOperatorProblem) -> Result<AlgebraPresentation> {
    let report = check_o_operator(problem)?;
    if !report.holds {
        return Err(KernelError::precondition(
            "map is not an o-operator",
            vec![report],
        ));
    }
    induce_pre_structure_unchecked(problem)
}

/// The same construction with no O-operator check; the result only passes
/// the pre-class checks when the input really was an O-operator.
pub fn induce_pre_structure_unchecked(problem: &OOperatorProblem) -> Result<AlgebraPresentation> {
    let rep = &problem.rep;
    let kind = rep.kind();
    if !matches!(kind, RepKind::Apl | RepKind::Aplp) {
        return Err(KernelError::Configuration(format!(
            "pre-structures arise from apl or aplp representations, got {kind}"
        )));
    }
    let m = rep.space_dim();
    let t = &problem.map;
    let mut succ = Tensor::zeros(&[m, m, m]);
    let mut prec = Tensor::zeros(&[m, m, m]);
    let mut star = Tensor::zeros(&[m, m, m]);
    for a in 0..m {
        let ta = t.apply(&basis(m, a));
        let l_op = rep.family_at(FamilyName::LCirc, &ta);
        let r_op = rep.family_at(FamilyName::RCirc, &ta);
        let mu_op = if kind == RepKind::Aplp {
            Some(rep.family_at(FamilyName::Mu, &ta))
        } else {
            None
        };
        for b in 0..m {
            for k in 0..m {
                let v = l_op.get(k, b);
                if !v.is_zero() {
                    succ.set(&[a, b, k], v.clone());
                }
                // u < v = r(Tv) u, entry (b, a, k) from r(T e_a) e_b
                let v = r_op.get(k, b);
                if !v.is_zero() {
                    prec.set(&[b, a, k], v.clone());
                }
                if let Some(mu) = &mu_op {
                    let v = mu.get(k, b);
                    if !v.is_zero() {
                        star.set(&[a, b, k], v.clone());
                    }
                }
            }
        }
    }
    let mut out = AlgebraPresentation::new(m, None)?;
    out.set_product(ProductName::Succ, succ)?;
    out.set_product(ProductName::Prec, prec)?;
    if kind == RepKind::Aplp {
        out.set_product(ProductName::Star, star)?;
    }
    Ok(out)
}

/// Source data for a canonical skew Yang-Baxter solution.
pub enum CanonicalSource<'a> {
    /// A general O-operator embedded in the semi-direct product by the
    /// dual representation.
    FromMap(&'a OOperatorProblem),
    /// A pre-APL algebra; the identity map of its splitting representation.
    FromPreApl(&'a AlgebraPresentation),
    /// A pre-APLP algebra; likewise with the Zinbiel action included.
    FromPreAplp(&'a AlgebraPresentation),
}

/// Builds the ambient semi-direct algebra `hat A = A x| V*` and the skew
/// tensor `r = T - tau(T)`, verifying the source first. In the ambient
/// the base block occupies the first `dim A` coordinates and the dual
/// block the rest; `T` embeds as `sum_i T(v_i) (x) v_i*`.
pub fn canonical_r(source: CanonicalSource<'_>) -> Result<(AlgebraPresentation, TwoTensor)> {
    let problem = canonical_problem(&source)?;
    let report = check_o_operator(&problem)?;
    if !report.holds {
        return Err(KernelError::precondition(
            "source is not an o-operator",
            vec![report],
        ));
    }
    assemble_canonical(&problem)
}

/// Assembles the ambient algebra and `r = T - tau(T)` without verifying
/// the O-operator equation (the Yang-Baxter tensors vanish iff it holds).
pub fn canonical_r_unchecked(
    source: CanonicalSource<'_>,
) -> Result<(AlgebraPresentation, TwoTensor)> {
    let problem = canonical_problem(&source)?;
    rep_precondition(&problem.rep)?;
    assemble_canonical(&problem)
}

fn canonical_problem(source: &CanonicalSource<'_>) -> Result<OOperatorProblem> {
    match source {
        CanonicalSource::FromMap(p) => {
            if !matches!(p.rep.kind(), RepKind::Apl | RepKind::Aplp) {
                return Err(KernelError::Configuration(format!(
                    "canonical solutions need apl or aplp representations, got {}",
                    p.rep.kind()
                )));
            }
            Ok(OOperatorProblem {
                base: p.base.clone(),
                rep: p.rep.clone(),
                map: p.map.clone(),
            })
        }
        CanonicalSource::FromPreApl(q) => {
            let rep = splitting_representation(q, RepKind::Apl)?;
            let id = LinearMap::identity(q.dim());
            OOperatorProblem::new(rep, id)
        }
        CanonicalSource::FromPreAplp(q) => {
            let rep = splitting_representation(q, RepKind::Aplp)?;
            let id = LinearMap::identity(q.dim());
            OOperatorProblem::new(rep, id)
        }
    }
}

/// The representation `(L_succ, R_prec, A)` of the sub-adjacent algebra of
/// a pre-APL splitting (plus `L_star` for the Poisson case).
pub fn splitting_representation(q: &AlgebraPresentation, kind: RepKind) -> Result<Representation> {
    let with_circ = crate::algebra::pre_apl_sum(q)?;
    let base = if kind == RepKind::Aplp {
        crate::algebra::zinbiel_symmetrization(&with_circ)?
    } else {
        with_circ
    };
    let mut families = BTreeMap::new();
    families.insert(
        FamilyName::LCirc,
        base.mult_family(ProductName::Succ, false)?,
    );
    families.insert(
        FamilyName::RCirc,
        base.mult_family(ProductName::Prec, true)?,
    );
    if kind == RepKind::Aplp {
        families.insert(FamilyName::Mu, base.mult_family(ProductName::Star, false)?);
    }
    // strip splitting products from the base carried by the representation
    let mut carried = base.clone();
    carried.remove_product(ProductName::Succ);
    carried.remove_product(ProductName::Prec);
    if kind == RepKind::Aplp {
        carried.remove_product(ProductName::Star);
    }
    Representation::new(kind, carried, q.dim(), families)
}

fn assemble_canonical(problem: &OOperatorProblem) -> Result<(AlgebraPresentation, TwoTensor)> {
    let dual = dualize(&problem.rep)?;
    let ambient = semidirect_product_unchecked(&dual)?;
    let n = problem.base.dim();
    let m = problem.rep.space_dim();
    let total = n + m;
    let mut t_hat = TwoTensor::zero(total);
    for p in 0..n {
        for i in 0..m {
            let v = problem.map.get(p, i);
            if !v.is_zero() {
                t_hat.set(p, n + i, v.clone());
            }
        }
    }
    let r = t_hat.sub(&t_hat.transpose());
    Ok((ambient, r))
}

/// The Witt-type bracket `[x, y] = P(x).y - x.P(y)` of a derivation.
pub fn witt_lie(algebra: &AlgebraPresentation, p: &LinearMap) -> Result<AlgebraPresentation> {
    derivation_precondition(algebra, ProductName::Dot, p)?;
    let d = algebra.dim();
    let mut bracket = Tensor::zeros(&[d, d, d]);
    for i in 0..d {
        let pei = p.apply(&basis(d, i));
        for j in 0..d {
            let pej = p.apply(&basis(d, j));
            let lhs = algebra.prod_vec(ProductName::Dot, &pei, &basis(d, j))?;
            let rhs = algebra.prod_vec(ProductName::Dot, &basis(d, i), &pej)?;
            for k in 0..d {
                let v = &lhs[k] - &rhs[k];
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

/// The anti-pre-Lie product `x o y = P(x.y) + P(x).y` of a derivation.
pub fn apl_from_derivation(
    algebra: &AlgebraPresentation,
    p: &LinearMap,
) -> Result<AlgebraPresentation> {
    derivation_precondition(algebra, ProductName::Dot, p)?;
    let d = algebra.dim();
    let mut circ = Tensor::zeros(&[d, d, d]);
    for i in 0..d {
        let pei = p.apply(&basis(d, i));
        for j in 0..d {
            let prod = algebra.prod_vec(ProductName::Dot, &basis(d, i), &basis(d, j))?;
            let first = p.apply(&prod);
            let second = algebra.prod_vec(ProductName::Dot, &pei, &basis(d, j))?;
            for k in 0..d {
                let v = &first[k] + &second[k];
                if !v.is_zero() {
                    circ.set(&[i, j, k], v);
                }
            }
        }
    }
    let mut out = algebra.clone();
    out.set_product(ProductName::Circ, circ)?;
    Ok(out)
}

/// The pre-APL splitting of a Zinbiel algebra with a derivation:
/// `x > y = P(x*y) + P(x)*y`, `x < y = P(y*x) + y*P(x)`.
pub fn pre_apl_from_zinbiel(
    zinbiel: &AlgebraPresentation,
    p: &LinearMap,
) -> Result<AlgebraPresentation> {
    derivation_precondition(zinbiel, ProductName::Star, p)?;
    let d = zinbiel.dim();
    let mut succ = Tensor::zeros(&[d, d, d]);
    let mut prec = Tensor::zeros(&[d, d, d]);
    for i in 0..d {
        let pei = p.apply(&basis(d, i));
        for j in 0..d {
            let sij = zinbiel.prod_vec(ProductName::Star, &basis(d, i), &basis(d, j))?;
            let sji = zinbiel.prod_vec(ProductName::Star, &basis(d, j), &basis(d, i))?;
            let s1 = add(
                &p.apply(&sij),
                &zinbiel.prod_vec(ProductName::Star, &pei, &basis(d, j))?,
            );
            let s2 = add(
                &p.apply(&sji),
                &zinbiel.prod_vec(ProductName::Star, &basis(d, j), &pei)?,
            );
            for k in 0..d {
                if !s1[k].is_zero() {
                    succ.set(&[i, j, k], s1[k].clone());
                }
                if !s2[k].is_zero() {
                    prec.set(&[i, j, k], s2[k].clone());
                }
            }
        }
    }
    let mut out = AlgebraPresentation::new(d, Some(zinbiel.basis_labels().to_vec()))?;
    out.set_product(ProductName::Succ, succ)?;
    out.set_product(ProductName::Prec, prec)?;
    Ok(out)
}

/// The full pre-APLP quadruple `(star, succ, prec)` of a Zinbiel algebra
/// with a derivation.
pub fn pre_aplp_from_zinbiel(
    zinbiel: &AlgebraPresentation,
    p: &LinearMap,
) -> Result<AlgebraPresentation> {
    let mut out = pre_apl_from_zinbiel(zinbiel, p)?;
    out.set_product(
        ProductName::Star,
        zinbiel.product(ProductName::Star)?.clone(),
    )?;
    Ok(out)
}

fn derivation_precondition(
    algebra: &AlgebraPresentation,
    product: ProductName,
    p: &LinearMap,
) -> Result<()> {
    let report = crate::algebra::check_derivation(algebra, product, p)?;
    if !report.holds {
        return Err(KernelError::precondition(
            format!("map is not a derivation of `{product}`"),
            vec![report],
        ));
    }
    Ok(())
}

/// For a derivation-induced anti-pre-Lie structure, an AYBE solution
/// killed by `id (x) P + P (x) id` also solves the APL-YBE. A failure is a
/// kernel bug detector, not an input error.
pub fn aybe_derivation_solution_check(
    algebra: &AlgebraPresentation,
    p: &LinearMap,
    r: &TwoTensor,
) -> Result<IdentityReport> {
    derivation_precondition(algebra, ProductName::Dot, p)?;
    let ar = compute_a(algebra, r)?;
    if let Some((idx, value)) = ar.first_nonzero() {
        return Err(KernelError::precondition(
            "r does not solve the associative Yang-Baxter equation",
            vec![IdentityReport::fail("aybe", idx, vec![value.clone()])],
        ));
    }
    // (id (x) P + P (x) id) r = 0, i.e. P r + r P^T = 0
    let r_m = LinearMap::from_tensor(r.matrix())?;
    let killed = p.compose(&r_m).add(&r_m.compose(&p.transpose()));
    if !killed.is_zero() {
        let t = killed.to_tensor();
        let (idx, value) = t.first_nonzero().unwrap();
        return Err(KernelError::precondition(
            "(id (x) P + P (x) id) r does not vanish",
            vec![IdentityReport::fail(
                "derivation-kills-r",
                idx,
                vec![value.clone()],
            )],
        ));
    }
    let apl = apl_from_derivation(algebra, p)?;
    let t = compute_t(&apl, r)?;
    Ok(match t.first_nonzero() {
        None => IdentityReport::pass("aybe-implies-apl-ybe"),
        Some((idx, value)) => {
            IdentityReport::fail("aybe-implies-apl-ybe", idx, vec![value.clone()])
        }
    })
}

/// Adjoint representation wrappers used by the construction recipes.
pub fn adjoint_representation(base: &AlgebraPresentation, kind: RepKind) -> Result<Representation> {
    adjoint(base, kind)
}

fn basis(d: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); d];
    v[i] = Scalar::one();
    v
}

fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}
