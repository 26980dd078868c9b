//! Matched pairs of the five algebra kinds and their bowtie doubles.
//!
//! The displayed compatibility systems are transcribed one-for-one into
//! labeled checks (`mp-apl-1` .. `mp-apl-6`, `mp-tpa-a` .. `mp-tpa-d`,
//! `mp-aplp-1` .. `mp-aplp-10`, ...) so a failure names the violated
//! equation. Mixed products of the double are assembled from the bowtie
//! formulas directly, never re-derived from the equations, so the
//! unchecked constructor stays meaningful on failing input.

use crate::algebra::{check_class, commutator, AlgebraPresentation, ProductName};
use crate::error::{KernelError, Result};
use crate::linmap::LinearMap;
use crate::rep::{check_representation, FamilyName, RepKind, Representation};
use crate::report::{Check, IdentityReport, Suite};
use crate::scalar::Scalar;
use crate::tensor::Tensor;
use std::collections::BTreeMap;

pub type MapFamilies = BTreeMap<FamilyName, Vec<LinearMap>>;

#[derive(Clone, Debug)]
pub struct MatchedPairData {
    pub kind: RepKind,
    pub algebra_a: AlgebraPresentation,
    pub algebra_b: AlgebraPresentation,
    /// Families of `dim_a` matrices acting on `B`.
    pub maps_a_on_b: MapFamilies,
    /// Families of `dim_b` matrices acting on `A`.
    pub maps_b_on_a: MapFamilies,
}

impl MatchedPairData {
    pub fn new(
        kind: RepKind,
        algebra_a: AlgebraPresentation,
        algebra_b: AlgebraPresentation,
        maps_a_on_b: MapFamilies,
        maps_b_on_a: MapFamilies,
    ) -> Result<MatchedPairData> {
        let data = MatchedPairData {
            kind,
            algebra_a,
            algebra_b,
            maps_a_on_b,
            maps_b_on_a,
        };
        // validates arity and extents
        data.cross_rep_a_on_b()?;
        data.cross_rep_b_on_a()?;
        Ok(data)
    }

    /// The maps of `A` acting on `B`, packaged as a representation of `A`.
    pub fn cross_rep_a_on_b(&self) -> Result<Representation> {
        Representation::new(
            self.kind,
            self.algebra_a.clone(),
            self.algebra_b.dim(),
            self.maps_a_on_b.clone(),
        )
    }

    pub fn cross_rep_b_on_a(&self) -> Result<Representation> {
        Representation::new(
            self.kind,
            self.algebra_b.clone(),
            self.algebra_a.dim(),
            self.maps_b_on_a.clone(),
        )
    }
}

/// One orientation of the mixed-equation environment: `x, y` range over
/// `first`, `a, b` over `second`. Owns its data so suites are
/// self-contained.
#[derive(Clone)]
struct Env {
    first: std::rc::Rc<AlgebraPresentation>,
    second: std::rc::Rc<AlgebraPresentation>,
    first_bracket: Option<std::rc::Rc<AlgebraPresentation>>,
    f_on_s: std::rc::Rc<MapFamilies>,
    s_on_f: std::rc::Rc<MapFamilies>,
}

impl Env {
    fn e1(&self, i: usize) -> Vec<Scalar> {
        self.first.basis_vector(i)
    }

    fn e2(&self, a: usize) -> Vec<Scalar> {
        self.second.basis_vector(a)
    }

    fn prod1(&self, p: ProductName, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.first.prod_vec(p, u, v).unwrap()
    }

    fn prod2(&self, p: ProductName, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.second.prod_vec(p, u, v).unwrap()
    }

    /// Sub-adjacent bracket on `first` (commutator of `circ`).
    fn sub_bracket1(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let alg = self.first_bracket.as_ref().expect("bracket cached");
        alg.prod_vec(ProductName::Bracket, u, v).unwrap()
    }

    fn apply_f(&self, fam: FamilyName, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.f_on_s[&fam][i].apply(v)
    }

    fn apply_f_at(&self, fam: FamilyName, coords: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        family_apply(&self.f_on_s[&fam], coords, v)
    }

    fn apply_s(&self, fam: FamilyName, a: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.s_on_f[&fam][a].apply(v)
    }

    fn apply_s_at(&self, fam: FamilyName, coords: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        family_apply(&self.s_on_f[&fam], coords, v)
    }
}

fn family_apply(family: &[LinearMap], coords: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); family[0].codomain_dim()];
    for (k, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(family[k].apply(v)) {
            *o += &(c * &x);
        }
    }
    out
}

fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn combine(terms: Vec<(i64, Vec<Scalar>)>) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); terms[0].1.len()];
    for (c, v) in terms {
        let c = Scalar::from_int(c);
        for (o, x) in out.iter_mut().zip(v) {
            *o += &(&c * &x);
        }
    }
    out
}

struct Oriented {
    env: Env,
    /// slot dims in the order the equation quantifies its variables
    dims_ffs: Vec<usize>,
    dims_fss: Vec<usize>,
}

fn oriented(
    first: std::rc::Rc<AlgebraPresentation>,
    second: std::rc::Rc<AlgebraPresentation>,
    first_bracket: Option<std::rc::Rc<AlgebraPresentation>>,
    f_on_s: std::rc::Rc<MapFamilies>,
    s_on_f: std::rc::Rc<MapFamilies>,
) -> Oriented {
    let dims_ffs = vec![first.dim(), first.dim(), second.dim()];
    let dims_fss = vec![first.dim(), second.dim(), second.dim()];
    Oriented {
        env: Env {
            first,
            second,
            first_bracket,
            f_on_s,
            s_on_f,
        },
        dims_ffs,
        dims_fss,
    }
}

fn lie_checks(o: &Oriented, id: &'static str) -> Check<'static> {
    let env = o.env.clone();
    Check::new(id, o.dims_fss.clone(), move |idx| {
        use FamilyName::Rho;
        use ProductName::Bracket;
        let (x, a, b) = (idx[0], idx[1], idx[2]);
        let (ea, eb) = (env.e2(a), env.e2(b));
        combine(vec![
            (1, env.apply_f(Rho, x, &env.prod2(Bracket, &ea, &eb))),
            (-1, env.prod2(Bracket, &env.apply_f(Rho, x, &ea), &eb)),
            (-1, env.prod2(Bracket, &ea, &env.apply_f(Rho, x, &eb))),
            (
                1,
                env.apply_f_at(Rho, &env.apply_s(Rho, a, &env.e1(x)), &eb),
            ),
            (
                -1,
                env.apply_f_at(Rho, &env.apply_s(Rho, b, &env.e1(x)), &ea),
            ),
        ])
    })
}

fn assoc_checks(o: &Oriented, id: &'static str) -> Check<'static> {
    let env = o.env.clone();
    Check::new(id, o.dims_fss.clone(), move |idx| {
        use FamilyName::Mu;
        use ProductName::Dot;
        let (x, a, b) = (idx[0], idx[1], idx[2]);
        let (ea, eb) = (env.e2(a), env.e2(b));
        combine(vec![
            (1, env.apply_f(Mu, x, &env.prod2(Dot, &ea, &eb))),
            (-1, env.prod2(Dot, &env.apply_f(Mu, x, &ea), &eb)),
            (-1, env.apply_f_at(Mu, &env.apply_s(Mu, a, &env.e1(x)), &eb)),
        ])
    })
}

fn apl_checks(o: &Oriented, ids: [&'static str; 3]) -> Vec<Check<'static>> {
    use FamilyName::{LCirc, RCirc};
    use ProductName::Circ;
    let env = o.env.clone();
    let eq1 = Check::new(ids[0], o.dims_ffs.clone(), move |idx| {
        let (x, y, a) = (idx[0], idx[1], idx[2]);
        let (ex, ey, ea) = (env.e1(x), env.e1(y), env.e2(a));
        combine(vec![
            (1, env.apply_s_at(RCirc, &env.apply_f(LCirc, y, &ea), &ex)),
            (1, env.prod1(Circ, &ex, &env.apply_s(RCirc, a, &ey))),
            (-1, env.apply_s_at(RCirc, &env.apply_f(LCirc, x, &ea), &ey)),
            (-1, env.prod1(Circ, &ey, &env.apply_s(RCirc, a, &ex))),
            (-1, env.apply_s(RCirc, a, &env.sub_bracket1(&ey, &ex))),
        ])
    });
    let env = o.env.clone();
    let eq2 = Check::new(ids[1], o.dims_ffs.clone(), move |idx| {
        let (x, y, a) = (idx[0], idx[1], idx[2]);
        let (ex, ey, ea) = (env.e1(x), env.e1(y), env.e2(a));
        let lb_minus_rb_x = vec_sub(&env.apply_s(LCirc, a, &ex), &env.apply_s(RCirc, a, &ex));
        let ra_minus_la_xa = vec_sub(&env.apply_f(RCirc, x, &ea), &env.apply_f(LCirc, x, &ea));
        combine(vec![
            (1, env.prod1(Circ, &ex, &env.apply_s(LCirc, a, &ey))),
            (1, env.apply_s_at(RCirc, &env.apply_f(RCirc, y, &ea), &ex)),
            (-1, env.apply_s(LCirc, a, &env.prod1(Circ, &ex, &ey))),
            (-1, env.prod1(Circ, &lb_minus_rb_x, &ey)),
            (-1, env.apply_s_at(LCirc, &ra_minus_la_xa, &ey)),
        ])
    });
    let env = o.env.clone();
    let eq3 = Check::new(ids[2], o.dims_ffs.clone(), move |idx| {
        let (x, y, a) = (idx[0], idx[1], idx[2]);
        let (ex, ey, ea) = (env.e1(x), env.e1(y), env.e2(a));
        let lb_minus_rb_y = vec_sub(&env.apply_s(LCirc, a, &ey), &env.apply_s(RCirc, a, &ey));
        let rb_minus_lb_x = vec_sub(&env.apply_s(RCirc, a, &ex), &env.apply_s(LCirc, a, &ex));
        let ra_minus_la_ya = vec_sub(&env.apply_f(RCirc, y, &ea), &env.apply_f(LCirc, y, &ea));
        let la_minus_ra_xa = vec_sub(&env.apply_f(LCirc, x, &ea), &env.apply_f(RCirc, x, &ea));
        combine(vec![
            (1, env.apply_s(RCirc, a, &env.sub_bracket1(&ex, &ey))),
            (-1, env.prod1(Circ, &lb_minus_rb_y, &ex)),
            (-1, env.prod1(Circ, &rb_minus_lb_x, &ey)),
            (-1, env.apply_s_at(LCirc, &ra_minus_la_ya, &ex)),
            (-1, env.apply_s_at(LCirc, &la_minus_ra_xa, &ey)),
        ])
    });
    vec![eq1, eq2, eq3]
}

fn tpa_checks(o: &Oriented, ids: [&'static str; 2]) -> Vec<Check<'static>> {
    use FamilyName::{Mu, Rho};
    use ProductName::{Bracket, Dot};
    let env = o.env.clone();
    let eq_a = Check::new(ids[0], o.dims_ffs.clone(), move |idx| {
        let (x, y, a) = (idx[0], idx[1], idx[2]);
        let (ex, ey, ea) = (env.e1(x), env.e1(y), env.e2(a));
        combine(vec![
            (2, env.apply_s_at(Mu, &env.apply_f(Rho, y, &ea), &ex)),
            (-2, env.prod1(Dot, &ex, &env.apply_s(Rho, a, &ey))),
            (1, env.apply_s(Rho, a, &env.prod1(Dot, &ex, &ey))),
            (1, env.apply_s_at(Rho, &env.apply_f(Mu, x, &ea), &ey)),
            (-1, env.prod1(Bracket, &ey, &env.apply_s(Mu, a, &ex))),
        ])
    });
    let env = o.env.clone();
    let eq_b = Check::new(ids[1], o.dims_ffs.clone(), move |idx| {
        let (x, y, a) = (idx[0], idx[1], idx[2]);
        let (ex, ey, ea) = (env.e1(x), env.e1(y), env.e2(a));
        combine(vec![
            (2, env.apply_s(Mu, a, &env.prod1(Bracket, &ex, &ey))),
            (-1, env.prod1(Bracket, &env.apply_s(Mu, a, &ex), &ey)),
            (-1, env.apply_s_at(Rho, &env.apply_f(Mu, x, &ea), &ey)),
            (-1, env.prod1(Bracket, &ex, &env.apply_s(Mu, a, &ey))),
            (1, env.apply_s_at(Rho, &env.apply_f(Mu, y, &ea), &ex)),
        ])
    });
    vec![eq_a, eq_b]
}

fn aplp_checks(o: &Oriented, ids: [&'static str; 5]) -> Vec<Check<'static>> {
    use FamilyName::{LCirc, Mu, RCirc};
    use ProductName::{Circ, Dot};
    let env = o.env.clone();
    let eq1 = Check::new(ids[0], o.dims_ffs.clone(), move |idx| {
        let (x, y, a) = (idx[0], idx[1], idx[2]);
        let (ex, ey, ea) = (env.e1(x), env.e1(y), env.e2(a));
        let anti = vec_sub(&env.prod1(Circ, &ex, &ey), &env.prod1(Circ, &ey, &ex));
        combine(vec![
            (2, env.apply_s(Mu, a, &anti)),
            (-1, env.apply_s_at(Mu, &env.apply_f(LCirc, x, &ea), &ey)),
            (-1, env.prod1(Dot, &ey, &env.apply_s(RCirc, a, &ex))),
            (1, env.apply_s_at(Mu, &env.apply_f(LCirc, y, &ea), &ex)),
            (1, env.prod1(Dot, &ex, &env.apply_s(RCirc, a, &ey))),
        ])
    });
    let env = o.env.clone();
    let eq2 = Check::new(ids[1], o.dims_ffs.clone(), move |idx| {
        let (x, y, a) = (idx[0], idx[1], idx[2]);
        let (ex, ey, ea) = (env.e1(x), env.e1(y), env.e2(a));
        let la_minus_ra_xa = vec_sub(&env.apply_f(LCirc, x, &ea), &env.apply_f(RCirc, x, &ea));
        let lb_minus_rb_x = vec_sub(&env.apply_s(LCirc, a, &ex), &env.apply_s(RCirc, a, &ex));
        combine(vec![
            (2, env.apply_s_at(Mu, &la_minus_ra_xa, &ey)),
            (-2, env.prod1(Dot, &lb_minus_rb_x, &ey)),
            (-1, env.apply_s(Mu, a, &env.prod1(Circ, &ex, &ey))),
            (1, env.prod1(Dot, &ex, &env.apply_s(LCirc, a, &ey))),
            (1, env.apply_s_at(Mu, &env.apply_f(RCirc, y, &ea), &ex)),
        ])
    });
    let env = o.env.clone();
    let eq3 = Check::new(ids[2], o.dims_ffs.clone(), move |idx| {
        let (x, y, a) = (idx[0], idx[1], idx[2]);
        let (ex, ey, ea) = (env.e1(x), env.e1(y), env.e2(a));
        combine(vec![
            (2, env.apply_s_at(RCirc, &env.apply_f(Mu, y, &ea), &ex)),
            (2, env.prod1(Circ, &ex, &env.apply_s(Mu, a, &ey))),
            (-1, env.prod1(Circ, &env.apply_s(Mu, a, &ex), &ey)),
            (-1, env.apply_s_at(LCirc, &env.apply_f(Mu, x, &ea), &ey)),
            (-1, env.apply_s(Mu, a, &env.prod1(Circ, &ex, &ey))),
        ])
    });
    let env = o.env.clone();
    let eq4 = Check::new(ids[3], o.dims_ffs.clone(), move |idx| {
        let (x, y, a) = (idx[0], idx[1], idx[2]);
        let (ex, ey, ea) = (env.e1(x), env.e1(y), env.e2(a));
        combine(vec![
            (2, env.apply_s_at(RCirc, &env.apply_f(Mu, y, &ea), &ex)),
            (2, env.prod1(Circ, &ex, &env.apply_s(Mu, a, &ey))),
            (-1, env.apply_s(RCirc, a, &env.prod1(Dot, &ex, &ey))),
            (-1, env.apply_s_at(Mu, &env.apply_f(LCirc, x, &ea), &ey)),
            (-1, env.prod1(Dot, &ey, &env.apply_s(RCirc, a, &ex))),
        ])
    });
    let env = o.env.clone();
    let eq5 = Check::new(ids[4], o.dims_ffs.clone(), move |idx| {
        let (x, y, a) = (idx[0], idx[1], idx[2]);
        let (ex, ey, ea) = (env.e1(x), env.e1(y), env.e2(a));
        combine(vec![
            (2, env.apply_s(LCirc, a, &env.prod1(Dot, &ex, &ey))),
            (-1, env.apply_s_at(LCirc, &env.apply_f(Mu, y, &ea), &ex)),
            (-1, env.prod1(Circ, &env.apply_s(Mu, a, &ey), &ex)),
            (-1, env.prod1(Dot, &ey, &env.apply_s(LCirc, a, &ex))),
            (-1, env.apply_s_at(Mu, &env.apply_f(RCirc, x, &ea), &ey)),
        ])
    });
    vec![eq1, eq2, eq3, eq4, eq5]
}

/// The displayed compatibility equations only (class and representation
/// preconditions are not re-run here).
pub fn matched_pair_suite(mp: &MatchedPairData) -> Result<Suite<'static>> {
    Ok(Suite::new(build_checks(mp)?))
}

fn build_checks(mp: &MatchedPairData) -> Result<Vec<Check<'static>>> {
    use std::rc::Rc;
    let a = Rc::new(mp.algebra_a.clone());
    let b = Rc::new(mp.algebra_b.clone());
    let a_on_b = Rc::new(mp.maps_a_on_b.clone());
    let b_on_a = Rc::new(mp.maps_b_on_a.clone());

    // sub-adjacent brackets for the circ-based systems
    let need_sub = matches!(mp.kind, RepKind::Apl | RepKind::Aplp);
    let sub_a = if need_sub {
        Some(Rc::new(commutator(&a)?))
    } else {
        None
    };
    let sub_b = if need_sub {
        Some(Rc::new(commutator(&b)?))
    } else {
        None
    };

    let forward = oriented(a.clone(), b.clone(), sub_a, a_on_b.clone(), b_on_a.clone());
    let backward = oriented(b, a, sub_b, b_on_a, a_on_b);

    let mut checks = Vec::new();
    match mp.kind {
        RepKind::Lie => {
            checks.push(lie_checks(&forward, "mp-lie-1"));
            checks.push(lie_checks(&backward, "mp-lie-2"));
        }
        RepKind::CommAssoc => {
            checks.push(assoc_checks(&forward, "mp-assoc-1"));
            checks.push(assoc_checks(&backward, "mp-assoc-2"));
        }
        RepKind::Apl => {
            checks.extend(apl_checks(&forward, ["mp-apl-1", "mp-apl-2", "mp-apl-3"]));
            checks.extend(apl_checks(&backward, ["mp-apl-4", "mp-apl-5", "mp-apl-6"]));
        }
        RepKind::Tpa => {
            checks.push(assoc_checks(&forward, "mp-assoc-1"));
            checks.push(assoc_checks(&backward, "mp-assoc-2"));
            checks.push(lie_checks(&forward, "mp-lie-1"));
            checks.push(lie_checks(&backward, "mp-lie-2"));
            checks.extend(tpa_checks(&forward, ["mp-tpa-a", "mp-tpa-b"]));
            checks.extend(tpa_checks(&backward, ["mp-tpa-c", "mp-tpa-d"]));
        }
        RepKind::Aplp => {
            checks.push(assoc_checks(&forward, "mp-assoc-1"));
            checks.push(assoc_checks(&backward, "mp-assoc-2"));
            checks.extend(apl_checks(&forward, ["mp-apl-1", "mp-apl-2", "mp-apl-3"]));
            checks.extend(apl_checks(&backward, ["mp-apl-4", "mp-apl-5", "mp-apl-6"]));
            checks.extend(aplp_checks(
                &forward,
                [
                    "mp-aplp-1",
                    "mp-aplp-2",
                    "mp-aplp-3",
                    "mp-aplp-4",
                    "mp-aplp-5",
                ],
            ));
            checks.extend(aplp_checks(
                &backward,
                [
                    "mp-aplp-6",
                    "mp-aplp-7",
                    "mp-aplp-8",
                    "mp-aplp-9",
                    "mp-aplp-10",
                ],
            ));
        }
    }
    Ok(checks)
}

fn preconditions(mp: &MatchedPairData) -> Result<()> {
    let mut failing = Vec::new();
    for (label, alg) in [("a", &mp.algebra_a), ("b", &mp.algebra_b)] {
        for report in check_class(alg, mp.kind.class())? {
            if !report.holds {
                failing.push(IdentityReport {
                    identity_id: format!("algebra-{label}:{}", report.identity_id),
                    ..report
                });
            }
        }
    }
    for (label, rep) in [
        ("a-on-b", mp.cross_rep_a_on_b()?),
        ("b-on-a", mp.cross_rep_b_on_a()?),
    ] {
        for report in check_representation(&rep) {
            if !report.holds {
                failing.push(IdentityReport {
                    identity_id: format!("rep-{label}:{}", report.identity_id),
                    ..report
                });
            }
        }
    }
    if failing.is_empty() {
        Ok(())
    } else {
        Err(KernelError::precondition(
            "matched pair preconditions fail (class or representation checks)",
            failing,
        ))
    }
}

/// One report per displayed equation of the matched-pair system, after
/// verifying the class and representation preconditions.
pub fn check_matched_pair(mp: &MatchedPairData) -> Result<Vec<IdentityReport>> {
    preconditions(mp)?;
    Ok(matched_pair_suite(mp)?.run())
}

/// The bowtie double on `A + B`, verified first.
pub fn build_double(mp: &MatchedPairData) -> Result<AlgebraPresentation> {
    preconditions(mp)?;
    let reports = matched_pair_suite(mp)?.run();
    let failing: Vec<IdentityReport> = reports.into_iter().filter(|r| !r.holds).collect();
    if !failing.is_empty() {
        return Err(KernelError::precondition(
            "matched pair equations fail",
            failing,
        ));
    }
    build_double_unchecked(mp)
}

/// Assembles the bowtie products from the definition, with no checking.
pub fn build_double_unchecked(mp: &MatchedPairData) -> Result<AlgebraPresentation> {
    let n = mp.algebra_a.dim();
    let m = mp.algebra_b.dim();
    let total = n + m;
    let mut labels: Vec<String> = mp.algebra_a.basis_labels().to_vec();
    labels.extend(mp.algebra_b.basis_labels().iter().map(|l| format!("{l}*")));
    let mut out = AlgebraPresentation::new(total, Some(labels))?;

    use FamilyName::*;
    use ProductName::*;
    // (product, left family, right family, sign of the "other side" action
    // when the element order is reversed)
    let blocks: &[(ProductName, FamilyName, FamilyName, i64)] = match mp.kind {
        RepKind::Lie => &[(Bracket, Rho, Rho, -1)],
        RepKind::CommAssoc => &[(Dot, Mu, Mu, 1)],
        RepKind::Apl => &[(Circ, LCirc, RCirc, 0)],
        RepKind::Tpa => &[(Dot, Mu, Mu, 1), (Bracket, Rho, Rho, -1)],
        RepKind::Aplp => &[(Dot, Mu, Mu, 1), (Circ, LCirc, RCirc, 0)],
    };
    for &(p, left_fam, right_fam, symmetric_sign) in blocks {
        let ta = mp.algebra_a.product(p)?;
        let tb = mp.algebra_b.product(p)?;
        let mut t = Tensor::zeros(&[total, total, total]);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = ta.get(&[i, j, k]);
                    if !c.is_zero() {
                        t.set(&[i, j, k], c.clone());
                    }
                }
            }
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let v = tb.get(&[a, b, c]);
                    if !v.is_zero() {
                        t.set(&[n + a, n + b, n + c], v.clone());
                    }
                }
            }
        }
        for i in 0..n {
            for b in 0..m {
                // e_i p f_b and f_b p e_i
                let left_on_b = &mp.maps_a_on_b[&left_fam][i];
                for c in 0..m {
                    let v = left_on_b.get(c, b);
                    if !v.is_zero() {
                        t.set(&[i, n + b, n + c], v.clone());
                    }
                }
                match symmetric_sign {
                    0 => {
                        // circ: e_i o f_b picks up r_B(f_b) e_i on the A side,
                        // f_b o e_i picks up l_B(f_b) e_i and r_A(e_i) f_b
                        let rb = &mp.maps_b_on_a[&right_fam][b];
                        for k in 0..n {
                            let v = rb.get(k, i);
                            if !v.is_zero() {
                                t.set(&[i, n + b, k], v.clone());
                            }
                        }
                        let lb = &mp.maps_b_on_a[&left_fam][b];
                        for k in 0..n {
                            let v = lb.get(k, i);
                            if !v.is_zero() {
                                t.set(&[n + b, i, k], v.clone());
                            }
                        }
                        let ra = &mp.maps_a_on_b[&right_fam][i];
                        for c in 0..m {
                            let v = ra.get(c, b);
                            if !v.is_zero() {
                                t.set(&[n + b, i, n + c], v.clone());
                            }
                        }
                    }
                    s => {
                        // dot / bracket: one family per side, reversal is
                        // plain (dot) or negated (bracket)
                        let sign = Scalar::from_int(s);
                        let mb = &mp.maps_b_on_a[&left_fam][b];
                        for k in 0..n {
                            let v = mb.get(k, i);
                            if !v.is_zero() {
                                // f_b p e_i acts on the A side directly
                                t.set(&[n + b, i, k], v.clone());
                                // e_i p f_b = sign * (f_b p e_i) on that side
                                t.set(&[i, n + b, k], &sign * v);
                            }
                        }
                        let ma = &mp.maps_a_on_b[&left_fam][i];
                        for c in 0..m {
                            let v = ma.get(c, b);
                            if !v.is_zero() {
                                t.set(&[i, n + b, n + c], v.clone());
                                t.set(&[n + b, i, n + c], &sign * v);
                            }
                        }
                    }
                }
            }
        }
        out.set_product(p, t)?;
    }
    Ok(out)
}

/// The canonical matched pair between an algebra and a structure on its
/// dual space, with the maps prescribed by the kind:
/// Lie `(-L_circ*, -L_circ*)`; commutative associative `(-L_dot*, -L_dot*)`;
/// anti-pre-Lie `(-ad*, R_circ*)` on both sides; transposed Poisson
/// `(-L_dot*, -L_circ*)`; anti-pre-Lie Poisson `(-L_dot*, -ad*, R_circ*)`.
///
/// For the Lie and transposed Poisson kinds, both inputs carry compatible
/// `circ` products and the stored algebras are their sub-adjacent
/// bracket presentations.
pub fn standard_pair_from_dual(
    a: &AlgebraPresentation,
    a_star: &AlgebraPresentation,
    kind: RepKind,
) -> Result<MatchedPairData> {
    if a.dim() != a_star.dim() {
        return Err(KernelError::Argument(format!(
            "dual pair dimensions differ: {} vs {}",
            a.dim(),
            a_star.dim()
        )));
    }
    let maps = |alg: &AlgebraPresentation| -> Result<MapFamilies> {
        let mut out = MapFamilies::new();
        match kind {
            RepKind::Lie => {
                // -L_circ* = L_circ^T
                let l = alg.mult_family(ProductName::Circ, false)?;
                out.insert(FamilyName::Rho, l.iter().map(|m| m.transpose()).collect());
            }
            RepKind::CommAssoc => {
                let l = alg.mult_family(ProductName::Dot, false)?;
                out.insert(FamilyName::Mu, l.iter().map(|m| m.transpose()).collect());
            }
            RepKind::Apl | RepKind::Aplp => {
                let l = alg.mult_family(ProductName::Circ, false)?;
                let r = alg.mult_family(ProductName::Circ, true)?;
                // -ad* = ad^T = (L - R)^T
                out.insert(
                    FamilyName::LCirc,
                    l.iter()
                        .zip(&r)
                        .map(|(lm, rm)| lm.sub(rm).transpose())
                        .collect(),
                );
                // R_circ* = -R^T
                out.insert(
                    FamilyName::RCirc,
                    r.iter().map(|m| m.transpose().neg()).collect(),
                );
                if kind == RepKind::Aplp {
                    let ld = alg.mult_family(ProductName::Dot, false)?;
                    out.insert(FamilyName::Mu, ld.iter().map(|m| m.transpose()).collect());
                }
            }
            RepKind::Tpa => {
                let ld = alg.mult_family(ProductName::Dot, false)?;
                out.insert(FamilyName::Mu, ld.iter().map(|m| m.transpose()).collect());
                let lc = alg.mult_family(ProductName::Circ, false)?;
                out.insert(FamilyName::Rho, lc.iter().map(|m| m.transpose()).collect());
            }
        }
        Ok(out)
    };
    let maps_a_on_b = maps(a)?;
    let maps_b_on_a = maps(a_star)?;
    let (alg_a, alg_b) = match kind {
        RepKind::Lie | RepKind::Tpa => (commutator(a)?, commutator(a_star)?),
        _ => (a.clone(), a_star.clone()),
    };
    MatchedPairData::new(kind, alg_a, alg_b, maps_a_on_b, maps_b_on_a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{class_holds, ClassId};
    use crate::catalog;
    use crate::oper;
    use crate::report::all_hold;

    fn a3_apl() -> AlgebraPresentation {
        let a = catalog::truncated_polynomial_algebra(3);
        oper::apl_from_derivation(&a, &catalog::euler_derivation(3)).unwrap()
    }

    fn zero_dual(dim: usize, products: &[ProductName]) -> AlgebraPresentation {
        catalog::zero_algebra(dim, products)
    }

    #[test]
    fn standard_pair_with_zero_dual_holds_apl() {
        let a = a3_apl();
        let b = zero_dual(3, &[ProductName::Circ]);
        let mp = standard_pair_from_dual(&a, &b, RepKind::Apl).unwrap();
        let reports = check_matched_pair(&mp).unwrap();
        assert!(all_hold(&reports));
        assert_eq!(reports.len(), 6);
        let double = build_double(&mp).unwrap();
        assert!(class_holds(&double, ClassId::AntiPreLie).unwrap());
    }

    #[test]
    fn apl_double_equals_semidirect_for_zero_dual() {
        // with B = zero algebra and the standard maps, the double is the
        // semidirect product by the dual adjoint representation
        let a = a3_apl();
        let b = zero_dual(3, &[ProductName::Circ]);
        let mp = standard_pair_from_dual(&a, &b, RepKind::Apl).unwrap();
        let double = build_double(&mp).unwrap();
        let rep = crate::rep::adjoint(&a, RepKind::Apl).unwrap();
        let hat = crate::rep::semidirect_product(&crate::rep::dualize(&rep).unwrap()).unwrap();
        assert_eq!(
            double.product(ProductName::Circ).unwrap(),
            hat.product(ProductName::Circ).unwrap()
        );
    }

    #[test]
    fn lie_double_is_commutator_of_apl_double() {
        let a = a3_apl();
        let b = zero_dual(3, &[ProductName::Circ]);
        let apl_mp = standard_pair_from_dual(&a, &b, RepKind::Apl).unwrap();
        let apl_double = build_double(&apl_mp).unwrap();

        let lie_mp = standard_pair_from_dual(&a, &b, RepKind::Lie).unwrap();
        let reports = check_matched_pair(&lie_mp).unwrap();
        assert!(all_hold(&reports));
        let lie_double = build_double(&lie_mp).unwrap();
        assert!(class_holds(&lie_double, ClassId::Lie).unwrap());

        let from_apl = crate::algebra::commutator(&apl_double).unwrap();
        assert_eq!(
            lie_double.product(ProductName::Bracket).unwrap(),
            from_apl.product(ProductName::Bracket).unwrap()
        );
    }

    #[test]
    fn apl_matched_pair_implies_lie_matched_pair() {
        let a = a3_apl();
        let b = zero_dual(3, &[ProductName::Circ]);
        let apl_mp = standard_pair_from_dual(&a, &b, RepKind::Apl).unwrap();
        assert!(all_hold(&check_matched_pair(&apl_mp).unwrap()));
        // (l - r) maps on both sides form a Lie matched pair
        let diff = |fams: &MapFamilies| -> MapFamilies {
            let l = &fams[&FamilyName::LCirc];
            let r = &fams[&FamilyName::RCirc];
            let mut out = MapFamilies::new();
            out.insert(
                FamilyName::Rho,
                l.iter().zip(r).map(|(a, b)| a.sub(b)).collect(),
            );
            out
        };
        let lie_mp = MatchedPairData::new(
            RepKind::Lie,
            commutator(&apl_mp.algebra_a).unwrap(),
            commutator(&apl_mp.algebra_b).unwrap(),
            diff(&apl_mp.maps_a_on_b),
            diff(&apl_mp.maps_b_on_a),
        )
        .unwrap();
        assert!(all_hold(&check_matched_pair(&lie_mp).unwrap()));
    }

    #[test]
    fn comm_assoc_standard_pair_with_zero_dual() {
        let a = catalog::truncated_polynomial_algebra(3);
        let b = zero_dual(3, &[ProductName::Dot]);
        let mp = standard_pair_from_dual(&a, &b, RepKind::CommAssoc).unwrap();
        let reports = check_matched_pair(&mp).unwrap();
        assert!(all_hold(&reports));
        let double = build_double(&mp).unwrap();
        assert!(class_holds(&double, ClassId::CommAssoc).unwrap());
    }

    #[test]
    fn aplp_matched_pair_implies_tpa_matched_pair() {
        let a = a3_apl(); // carries dot and circ
        let b = zero_dual(3, &[ProductName::Dot, ProductName::Circ]);
        let aplp_mp = standard_pair_from_dual(&a, &b, RepKind::Aplp).unwrap();
        assert!(all_hold(&check_matched_pair(&aplp_mp).unwrap()));
        // (mu, l - r) on both sides forms a transposed Poisson matched pair
        let to_tpa = |fams: &MapFamilies| -> MapFamilies {
            let l = &fams[&FamilyName::LCirc];
            let r = &fams[&FamilyName::RCirc];
            let mut out = MapFamilies::new();
            out.insert(FamilyName::Mu, fams[&FamilyName::Mu].clone());
            out.insert(
                FamilyName::Rho,
                l.iter().zip(r).map(|(a, b)| a.sub(b)).collect(),
            );
            out
        };
        let tpa_mp = MatchedPairData::new(
            RepKind::Tpa,
            commutator(&aplp_mp.algebra_a).unwrap(),
            commutator(&aplp_mp.algebra_b).unwrap(),
            to_tpa(&aplp_mp.maps_a_on_b),
            to_tpa(&aplp_mp.maps_b_on_a),
        )
        .unwrap();
        assert!(all_hold(&check_matched_pair(&tpa_mp).unwrap()));
    }

    #[test]
    fn perturbed_map_fails_with_reproducible_witness() {
        let a = a3_apl();
        let b = zero_dual(3, &[ProductName::Circ]);
        let mut mp = standard_pair_from_dual(&a, &b, RepKind::Apl).unwrap();
        mp.maps_b_on_a.get_mut(&FamilyName::LCirc).unwrap()[0].add_at(1, 1, &Scalar::one());
        let suite = matched_pair_suite(&mp).unwrap();
        let reports = suite.run();
        let failing: Vec<_> = reports.iter().filter(|r| !r.holds).collect();
        assert!(!failing.is_empty());
        for r in &failing {
            let again = suite.reevaluate(r).unwrap();
            assert_eq!(again, r.witness.as_ref().unwrap().defect);
        }
    }

    #[test]
    fn double_restricts_to_factors() {
        let a = a3_apl();
        let b = zero_dual(3, &[ProductName::Circ]);
        let mp = standard_pair_from_dual(&a, &b, RepKind::Apl).unwrap();
        let double = build_double(&mp).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let v = double.prod_basis(ProductName::Circ, i, j).unwrap();
                assert_eq!(
                    v[..3],
                    mp.algebra_a.prod_basis(ProductName::Circ, i, j).unwrap()[..]
                );
                assert!(v[3..].iter().all(|x| x.is_zero()));
                let w = double.prod_basis(ProductName::Circ, 3 + i, 3 + j).unwrap();
                assert!(w[..3].iter().all(|x| x.is_zero()));
                assert_eq!(
                    w[3..],
                    mp.algebra_b.prod_basis(ProductName::Circ, i, j).unwrap()[..]
                );
            }
        }
    }
}
