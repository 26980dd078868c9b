//! Yang-Baxter tensors, coboundary coproducts, the general (non-skew)
//! coboundary condition suites, and the O-operator forms of solutions.
//!
//! A two-tensor `r` is stored as its coefficient matrix: `r = sum r_(ij)
//! e_i (x) e_j`. The three placements are computed by explicit index
//! formulas under the kernel's axis convention; writing `r = sum_i a_i (x)
//! b_i`, the `a` leg of pair `(p, q)` is `e_p` and the `b` leg is `e_q`:
//!
//! * `r12 o r13 = sum (a_i o a_j) (x) b_i (x) b_j`:
//!   entry `(m, q, t) += circ_(ps)^m r_(pq) r_(st)`;
//! * `r12 o r23 = sum a_i (x) (b_i o a_j) (x) b_j`:
//!   entry `(p, m, t) += circ_(qs)^m r_(pq) r_(st)`;
//! * `[r13, r23] = sum a_i (x) a_j (x) [b_i, b_j]`:
//!   entry `(p, s, m) += bracket_(qt)^m r_(pq) r_(st)`;
//!
//! and for the associative placements of `A(r)`:
//!
//! * `r12 . r13`: entry `(m, q, t) += dot_(ps)^m r_(pq) r_(st)`;
//! * `r23 . r12 = sum a_j (x) (a_i . b_j) (x) b_i`:
//!   entry `(s, m, q) += dot_(pt)^m r_(pq) r_(st)`;
//! * `r13 . r23`: entry `(p, s, m) += dot_(qt)^m r_(pq) r_(st)`.

use crate::algebra::{commutator, AlgebraPresentation, ProductName};
use crate::coalg::Coproduct;
use crate::error::{KernelError, Result};
use crate::linmap::LinearMap;
use crate::report::{Check, IdentityReport, Suite};
use crate::scalar::Scalar;
use crate::tensor::{permute_tensor, Tensor};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoTensor {
    dim: usize,
    matrix: Tensor,
}

impl TwoTensor {
    pub fn zero(dim: usize) -> TwoTensor {
        TwoTensor {
            dim,
            matrix: Tensor::zeros(&[dim, dim]),
        }
    }

    pub fn from_tensor(matrix: Tensor) -> Result<TwoTensor> {
        if matrix.rank() != 2 || matrix.dims()[0] != matrix.dims()[1] {
            return Err(KernelError::Dimension(format!(
                "two-tensor must be square rank 2, got dims {:?}",
                matrix.dims()
            )));
        }
        Ok(TwoTensor {
            dim: matrix.dims()[0],
            matrix,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &Tensor {
        &self.matrix
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        self.matrix.get(&[i, j])
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.matrix.set(&[i, j], value);
    }

    pub fn is_skew(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let sum = self.get(i, j) + self.get(j, i);
                sum.is_zero()
            })
        })
    }

    /// `r + tau(r)` as a matrix.
    pub fn symmetric_part(&self) -> LinearMap {
        let mut m = LinearMap::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = self.get(i, j) + self.get(j, i);
                if !v.is_zero() {
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    /// `r` as the map `A* -> A` of the canonical identification:
    /// `r(e_j*) = sum_q r_(jq) e_q`, so the matrix is the transpose.
    pub fn as_map(&self) -> LinearMap {
        let mut m = LinearMap::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = self.get(j, i);
                if !v.is_zero() {
                    m.set(i, j, v.clone());
                }
            }
        }
        m
    }

    pub fn transpose(&self) -> TwoTensor {
        TwoTensor {
            dim: self.dim,
            matrix: permute_tensor(&self.matrix, &[1, 0]).unwrap(),
        }
    }

    pub fn sub(&self, other: &TwoTensor) -> TwoTensor {
        TwoTensor {
            dim: self.dim,
            matrix: self.matrix.sub(&other.matrix).unwrap(),
        }
    }
}

fn check_r_dim(algebra: &AlgebraPresentation, r: &TwoTensor) -> Result<()> {
    if algebra.dim() != r.dim() {
        return Err(KernelError::Dimension(format!(
            "two-tensor dimension {} does not match algebra dimension {}",
            r.dim(),
            algebra.dim()
        )));
    }
    Ok(())
}

/// `T(r) = r12 o r13 + r12 o r23 - [r13, r23]` as a rank-3 tensor.
/// The bracket is the commutator of `circ`.
pub fn compute_t(algebra: &AlgebraPresentation, r: &TwoTensor) -> Result<Tensor> {
    check_r_dim(algebra, r)?;
    let d = algebra.dim();
    let circ = algebra.product(ProductName::Circ)?;
    let with_bracket = commutator(algebra)?;
    let bracket = with_bracket.product(ProductName::Bracket)?;
    let mut out = Tensor::zeros(&[d, d, d]);
    for p in 0..d {
        for s in 0..d {
            for m in 0..d {
                let c = circ.get(&[p, s, m]);
                if c.is_zero() {
                    continue;
                }
                for q in 0..d {
                    let rpq = r.get(p, q);
                    if rpq.is_zero() {
                        continue;
                    }
                    for t in 0..d {
                        let rst = r.get(s, t);
                        if !rst.is_zero() {
                            out.add_at(&[m, q, t], &(&(c * rpq) * rst));
                        }
                    }
                }
            }
        }
    }
    for q in 0..d {
        for s in 0..d {
            for m in 0..d {
                let c = circ.get(&[q, s, m]);
                if c.is_zero() {
                    continue;
                }
                for p in 0..d {
                    let rpq = r.get(p, q);
                    if rpq.is_zero() {
                        continue;
                    }
                    for t in 0..d {
                        let rst = r.get(s, t);
                        if !rst.is_zero() {
                            out.add_at(&[p, m, t], &(&(c * rpq) * rst));
                        }
                    }
                }
            }
        }
    }
    for q in 0..d {
        for t in 0..d {
            for m in 0..d {
                let c = bracket.get(&[q, t, m]);
                if c.is_zero() {
                    continue;
                }
                let neg_c = -c;
                for p in 0..d {
                    let rpq = r.get(p, q);
                    if rpq.is_zero() {
                        continue;
                    }
                    for s in 0..d {
                        let rst = r.get(s, t);
                        if !rst.is_zero() {
                            out.add_at(&[p, s, m], &(&(&neg_c * rpq) * rst));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `A(r) = r12 . r13 - r23 . r12 + r13 . r23` as a rank-3 tensor.
pub fn compute_a(algebra: &AlgebraPresentation, r: &TwoTensor) -> Result<Tensor> {
    check_r_dim(algebra, r)?;
    let d = algebra.dim();
    let dot = algebra.product(ProductName::Dot)?;
    let mut out = Tensor::zeros(&[d, d, d]);
    for p in 0..d {
        for s in 0..d {
            for m in 0..d {
                let c = dot.get(&[p, s, m]);
                if c.is_zero() {
                    continue;
                }
                for q in 0..d {
                    let rpq = r.get(p, q);
                    if rpq.is_zero() {
                        continue;
                    }
                    for t in 0..d {
                        let rst = r.get(s, t);
                        if !rst.is_zero() {
                            out.add_at(&[m, q, t], &(&(c * rpq) * rst));
                        }
                    }
                }
            }
        }
    }
    for p in 0..d {
        for t in 0..d {
            for m in 0..d {
                let c = dot.get(&[p, t, m]);
                if c.is_zero() {
                    continue;
                }
                let neg_c = -c;
                for q in 0..d {
                    let rpq = r.get(p, q);
                    if rpq.is_zero() {
                        continue;
                    }
                    for s in 0..d {
                        let rst = r.get(s, t);
                        if !rst.is_zero() {
                            out.add_at(&[s, m, q], &(&(&neg_c * rpq) * rst));
                        }
                    }
                }
            }
        }
    }
    for q in 0..d {
        for t in 0..d {
            for m in 0..d {
                let c = dot.get(&[q, t, m]);
                if c.is_zero() {
                    continue;
                }
                for p in 0..d {
                    let rpq = r.get(p, q);
                    if rpq.is_zero() {
                        continue;
                    }
                    for s in 0..d {
                        let rst = r.get(s, t);
                        if !rst.is_zero() {
                            out.add_at(&[p, s, m], &(&(c * rpq) * rst));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `delta_r(x) = (-L_circ(x) (x) id + id (x) ad(x)) r`.
pub fn coboundary_delta(algebra: &AlgebraPresentation, r: &TwoTensor) -> Result<Coproduct> {
    check_r_dim(algebra, r)?;
    let d = algebra.dim();
    algebra.product(ProductName::Circ)?;
    let with_bracket = commutator(algebra)?;
    let r_m = LinearMap::from_tensor(&r.matrix)?;
    let mut out = Tensor::zeros(&[d, d, d]);
    for k in 0..d {
        let lc = algebra.left_mult(ProductName::Circ, k)?;
        let ad = with_bracket.left_mult(ProductName::Bracket, k)?;
        let image = lc.compose(&r_m).neg().add(&r_m.compose(&ad.transpose()));
        for i in 0..d {
            for j in 0..d {
                let v = image.get(i, j);
                if !v.is_zero() {
                    out.set(&[k, i, j], v.clone());
                }
            }
        }
    }
    Coproduct::from_tensor(out)
}

/// `Delta_r(x) = (L_dot(x) (x) id - id (x) L_dot(x)) r`.
///
/// This orientation pairs with `delta_r` so that skew solutions of both
/// Yang-Baxter tensors yield a full bialgebra; the sign is pinned by the
/// condition-suite expansions and cross-checked against the matched-pair
/// route in the acceptance tests.
pub fn coboundary_comul(algebra: &AlgebraPresentation, r: &TwoTensor) -> Result<Coproduct> {
    check_r_dim(algebra, r)?;
    let d = algebra.dim();
    algebra.product(ProductName::Dot)?;
    let r_m = LinearMap::from_tensor(&r.matrix)?;
    let mut out = Tensor::zeros(&[d, d, d]);
    for k in 0..d {
        let ld = algebra.left_mult(ProductName::Dot, k)?;
        let image = ld.compose(&r_m).sub(&r_m.compose(&ld.transpose()));
        for i in 0..d {
            for j in 0..d {
                let v = image.get(i, j);
                if !v.is_zero() {
                    out.set(&[k, i, j], v.clone());
                }
            }
        }
    }
    Coproduct::from_tensor(out)
}

/// Both coboundary coproducts, each present when its product is.
pub fn coboundary_coproducts(
    algebra: &AlgebraPresentation,
    r: &TwoTensor,
) -> Result<(Option<Coproduct>, Option<Coproduct>)> {
    let delta = if algebra.has_product(ProductName::Circ) {
        Some(coboundary_delta(algebra, r)?)
    } else {
        None
    };
    let comul = if algebra.has_product(ProductName::Dot) {
        Some(coboundary_comul(algebra, r)?)
    } else {
        None
    };
    if delta.is_none() && comul.is_none() {
        return Err(KernelError::Configuration(
            "coboundary coproducts need a `circ` or `dot` product".into(),
        ));
    }
    Ok((delta, comul))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoboundaryKind {
    Apl,
    Aplp,
}

/// Applies a matrix to one slot of a rank-3 tensor.
fn apply_slot(t: &Tensor, slot: usize, m: &LinearMap) -> Tensor {
    let dims = t.dims();
    let d = dims[slot];
    let mut out = Tensor::zeros(dims);
    let mut idx = [0usize; 3];
    for a in 0..dims[0] {
        for b in 0..dims[1] {
            for c in 0..dims[2] {
                idx[0] = a;
                idx[1] = b;
                idx[2] = c;
                let mut acc = Scalar::zero();
                for q in 0..d {
                    let coeff = m.get(idx[slot], q);
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut src = idx;
                    src[slot] = q;
                    let v = t.get(&src);
                    if !v.is_zero() {
                        acc += &(coeff * v);
                    }
                }
                if !acc.is_zero() {
                    out.set(&idx, acc);
                }
            }
        }
    }
    out
}

/// Embeds a matrix into a rank-3 tensor with `e_basis` in slot `pos`;
/// the matrix fills the remaining two slots in order.
fn embed_matrix(s: &LinearMap, pos: usize, basis: usize) -> Tensor {
    let d = s.domain_dim();
    let mut out = Tensor::zeros(&[d, d, d]);
    for i in 0..d {
        for j in 0..d {
            let v = s.get(i, j);
            if v.is_zero() {
                continue;
            }
            let idx = match pos {
                0 => [basis, i, j],
                1 => [i, basis, j],
                2 => [i, j, basis],
                _ => unreachable!(),
            };
            out.set(&idx, v.clone());
        }
    }
    out
}

fn tau01_3(t: &Tensor) -> Tensor {
    permute_tensor(t, &[1, 0, 2]).unwrap()
}

fn xi_3(t: &Tensor) -> Tensor {
    permute_tensor(t, &[2, 0, 1]).unwrap()
}

fn cyclic_sum_3(t: &Tensor) -> Tensor {
    let once = xi_3(t);
    let twice = xi_3(&once);
    t.add(&once).unwrap().add(&twice).unwrap()
}

/// Linear extension of an operator family along a coefficient row.
fn family_at(family: &[LinearMap], coeffs: &[Scalar]) -> LinearMap {
    let d = family[0].domain_dim();
    let mut out = LinearMap::zeros(d, d);
    for (k, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&family[k].scale(c));
        }
    }
    out
}

struct CoboundaryData {
    dim: usize,
    lc: Vec<LinearMap>,
    rc: Vec<LinearMap>,
    ad: Vec<LinearMap>,
    ld: Option<Vec<LinearMap>>,
    circ_rows: Vec<Vec<Vec<Scalar>>>,
    bracket_rows: Vec<Vec<Vec<Scalar>>>,
    dot_rows: Option<Vec<Vec<Vec<Scalar>>>>,
    s: LinearMap,
    r: TwoTensor,
    t_tensor: Tensor,
    a_tensor: Option<Tensor>,
}

impl CoboundaryData {
    fn build(
        algebra: &AlgebraPresentation,
        r: &TwoTensor,
        kind: CoboundaryKind,
    ) -> Result<CoboundaryData> {
        check_r_dim(algebra, r)?;
        let d = algebra.dim();
        algebra.product(ProductName::Circ)?;
        let with_bracket = commutator(algebra)?;
        let lc = algebra.mult_family(ProductName::Circ, false)?;
        let rc = algebra.mult_family(ProductName::Circ, true)?;
        let ad = with_bracket.mult_family(ProductName::Bracket, false)?;
        let rows = |a: &AlgebraPresentation, p: ProductName| -> Vec<Vec<Vec<Scalar>>> {
            (0..d)
                .map(|i| (0..d).map(|j| a.prod_basis(p, i, j).unwrap()).collect())
                .collect()
        };
        let circ_rows = rows(algebra, ProductName::Circ);
        let bracket_rows = rows(&with_bracket, ProductName::Bracket);
        let (ld, dot_rows, a_tensor) = if kind == CoboundaryKind::Aplp {
            algebra.product(ProductName::Dot)?;
            (
                Some(algebra.mult_family(ProductName::Dot, false)?),
                Some(rows(algebra, ProductName::Dot)),
                Some(compute_a(algebra, r)?),
            )
        } else {
            (None, None, None)
        };
        Ok(CoboundaryData {
            dim: d,
            lc,
            rc,
            ad,
            ld,
            circ_rows,
            bracket_rows,
            dot_rows,
            s: r.symmetric_part(),
            r: r.clone(),
            t_tensor: compute_t(algebra, r)?,
            a_tensor,
        })
    }

    fn nonzero_r(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::new();
        for s in 0..self.dim {
            for t in 0..self.dim {
                let v = self.r.get(s, t);
                if !v.is_zero() {
                    out.push((s, t, v.clone()));
                }
            }
        }
        out
    }

    /// Condition for the first anti-pre-Lie coalgebra axiom of `delta_r`.
    fn cc1(&self, x: usize) -> Tensor {
        let part_t = apply_slot(&self.t_tensor, 0, &self.lc[x]);
        let mut acc = part_t.sub(&tau01_3(&part_t)).unwrap();
        acc = acc
            .sub(&apply_slot(&self.t_tensor, 2, &self.ad[x]))
            .unwrap();
        for (s, t, w) in self.nonzero_r() {
            let base = embed_matrix(&self.s, 2, t);
            // (id (x) L(a_j) (x) ad(x) - ad(a_j) (x) id (x) ad(x))
            let t1 = apply_slot(&apply_slot(&base, 1, &self.lc[s]), 2, &self.ad[x]);
            let t2 = apply_slot(&apply_slot(&base, 0, &self.ad[s]), 2, &self.ad[x]);
            acc.accumulate(&t1.sub(&t2).unwrap(), &w);
            // (id - tau(x)id)(L(x o a_j) - L(x)R(a_j)) on slot 1
            let op =
                family_at(&self.lc, &self.circ_rows[x][s]).sub(&self.lc[x].compose(&self.rc[s]));
            let inner = apply_slot(&base, 0, &op);
            acc.accumulate(&inner.sub(&tau01_3(&inner)).unwrap(), &w);
        }
        acc
    }

    /// Condition for the second anti-pre-Lie coalgebra axiom of `delta_r`.
    fn cc2(&self, x: usize) -> Tensor {
        let mut inner = apply_slot(&self.t_tensor, 2, &self.lc[x]).scale(&Scalar::from_int(-1));
        for (s, t, w) in self.nonzero_r() {
            let es_s = embed_matrix(&self.s, 0, s);
            let et_s = embed_matrix(&self.s, 0, t);
            let s_es = embed_matrix(&self.s, 2, s);
            // (id (x) id (x) L([x, b_j]))(id - tau(x)id)(a_j (x) S)
            let l_br = family_at(&self.lc, &self.bracket_rows[x][t]);
            let t1 = apply_slot(&es_s.sub(&tau01_3(&es_s)).unwrap(), 2, &l_br);
            // (id (x) ad(b_j) (x) L(x))(a_j (x) S)
            let t2 = apply_slot(&apply_slot(&es_s, 1, &self.ad[t]), 2, &self.lc[x]);
            // (id (x) ad(a_j) (x) L(x))(b_j (x) S)
            let t3 = apply_slot(&apply_slot(&et_s, 1, &self.ad[s]), 2, &self.lc[x]);
            // (L(a_j) (x) id (x) L(x))(tau(x)id)(b_j (x) S)
            let t4 = apply_slot(&apply_slot(&tau01_3(&et_s), 0, &self.lc[s]), 2, &self.lc[x]);
            // (ad(b_j) (x) id (x) L(x))(S (x) a_j)
            let t5 = apply_slot(&apply_slot(&s_es, 0, &self.ad[t]), 2, &self.lc[x]);
            let sum = t1
                .add(&t2)
                .unwrap()
                .add(&t3)
                .unwrap()
                .add(&t4)
                .unwrap()
                .add(&t5)
                .unwrap();
            inner.accumulate(&sum, &w);
        }
        cyclic_sum_3(&inner)
    }

    /// Condition for the first bialgebra compatibility of `delta_r`.
    fn cc3(&self, x: usize, y: usize) -> LinearMap {
        let l_xy = family_at(&self.lc, &self.circ_rows[x][y]);
        let l_xl_y = self.lc[x].compose(&self.lc[y]);
        // (id (x) L(x o y) - id (x) L(x)L(y) + L(x)L(y) (x) id - L(x o y) (x) id
        //  + L(y) (x) L(x) - L(x) (x) L(y)) (r + tau(r))
        self.s
            .compose(&l_xy.transpose())
            .sub(&self.s.compose(&l_xl_y.transpose()))
            .add(&l_xl_y.compose(&self.s))
            .sub(&l_xy.compose(&self.s))
            .add(&self.lc[y].compose(&self.s).compose(&self.lc[x].transpose()))
            .sub(&self.lc[x].compose(&self.s).compose(&self.lc[y].transpose()))
    }

    /// Symmetric-part condition for cocommutativity of `Delta_r`.
    fn aybe1(&self, x: usize) -> LinearMap {
        let ld = &self.ld.as_ref().unwrap()[x];
        self.s.compose(&ld.transpose()).sub(&ld.compose(&self.s))
    }

    /// `A(r)` condition for coassociativity of `Delta_r`.
    fn aybe2(&self, x: usize) -> Tensor {
        let ld = &self.ld.as_ref().unwrap()[x];
        let a = self.a_tensor.as_ref().unwrap();
        apply_slot(a, 2, ld).sub(&apply_slot(a, 0, ld)).unwrap()
    }

    /// Condition for the first Poisson coalgebra interaction axiom.
    fn tpba1(&self, x: usize) -> Tensor {
        let ld = self.ld.as_ref().unwrap();
        let dot_rows = self.dot_rows.as_ref().unwrap();
        let two = Scalar::from_int(2);
        let mut acc = apply_slot(&self.t_tensor, 2, &ld[x]).scale(&two);
        acc = acc
            .sub(&apply_slot(&self.t_tensor, 0, &ld[x]))
            .unwrap()
            .sub(&apply_slot(&self.t_tensor, 1, &ld[x]))
            .unwrap();
        for (s, t, w) in self.nonzero_r() {
            let base = embed_matrix(&self.s, 2, t);
            let ad_xs = family_at(&self.ad, &dot_rows[x][s]);
            let lc_xs = family_at(&self.lc, &dot_rows[x][s]);
            let t1 = apply_slot(&apply_slot(&base, 0, &self.ad[s]), 2, &ld[x]);
            let t2 = apply_slot(&apply_slot(&base, 1, &self.lc[s]), 2, &ld[x]);
            let t3 = apply_slot(&base, 0, &ad_xs);
            let t4 = apply_slot(&base, 1, &lc_xs);
            let grouped = t1
                .sub(&t2)
                .unwrap()
                .sub(&t3)
                .unwrap()
                .add(&t4)
                .unwrap()
                .scale(&two);
            let t5 = apply_slot(&apply_slot(&base, 0, &self.rc[s]), 1, &ld[x]);
            let t6 = apply_slot(&base, 0, &self.rc[s].compose(&ld[x]));
            acc.accumulate(&grouped.add(&t5).unwrap().sub(&t6).unwrap(), &w);
        }
        acc
    }

    /// Condition for the second Poisson coalgebra interaction axiom.
    fn tpba2(&self, x: usize) -> Tensor {
        let ld = self.ld.as_ref().unwrap();
        let a = self.a_tensor.as_ref().unwrap();
        let two = Scalar::from_int(2);
        let mut acc = apply_slot(a, 0, &self.lc[x]).scale(&two);
        acc = acc.sub(&apply_slot(a, 1, &self.ad[x])).unwrap();
        let t_swapped = permute_tensor(&self.t_tensor, &[0, 2, 1]).unwrap();
        acc = acc.sub(&apply_slot(&t_swapped, 2, &ld[x])).unwrap();
        for (s, t, w) in self.nonzero_r() {
            let base = embed_matrix(&self.s, 0, s);
            let t1 = apply_slot(&apply_slot(&base, 1, &self.ad[x]), 2, &ld[t]);
            let t2 = apply_slot(&base, 2, &ld[x].compose(&self.lc[t]));
            let t3 = apply_slot(&base, 2, &ld[t].compose(&self.lc[x]));
            let t4 = apply_slot(&apply_slot(&base, 1, &self.ad[t]), 2, &ld[x]);
            acc.accumulate(
                &t1.add(&t2).unwrap().sub(&t3).unwrap().sub(&t4).unwrap(),
                &w,
            );
        }
        acc
    }

    /// Condition for the third Poisson bialgebra compatibility.
    fn tpba3(&self, x: usize, y: usize) -> LinearMap {
        let ld = self.ld.as_ref().unwrap();
        // (ad(y) (x) L.(x) - id (x) L.(x)L(y)) (r + tau(r))
        self.ad[y]
            .compose(&self.s)
            .compose(&ld[x].transpose())
            .sub(&self.s.compose(&ld[x].compose(&self.lc[y]).transpose()))
    }

    /// Condition for the fourth Poisson bialgebra compatibility.
    fn tpba4(&self, x: usize, y: usize) -> LinearMap {
        let ld = self.ld.as_ref().unwrap();
        let dot_rows = self.dot_rows.as_ref().unwrap();
        let lc_xy = family_at(&self.lc, &dot_rows[x][y]);
        let ld_lc = ld[x].compose(&self.lc[y]);
        let two = Scalar::from_int(2);
        ld[x]
            .compose(&self.s)
            .compose(&self.lc[y].transpose())
            .sub(&self.lc[y].compose(&self.s).compose(&ld[x].transpose()))
            .add(&lc_xy.compose(&self.s).scale(&two))
            .sub(&self.s.compose(&lc_xy.transpose()).scale(&two))
            .add(&self.s.compose(&ld_lc.transpose()))
            .sub(&ld_lc.compose(&self.s))
    }
}

/// The coboundary condition suites for `delta_r` (and `Delta_r` in the
/// Poisson case), valid for arbitrary `r`, skew or not. Each report
/// corresponds to one displayed condition.
pub fn coboundary_condition_suite<'a>(
    algebra: &AlgebraPresentation,
    r: &TwoTensor,
    kind: CoboundaryKind,
) -> Result<Suite<'a>> {
    let data = std::rc::Rc::new(CoboundaryData::build(algebra, r, kind)?);
    let d = data.dim;
    let mut checks: Vec<Check<'a>> = Vec::new();
    {
        let data = data.clone();
        checks.push(Check::new("cc-1", vec![d], move |idx| {
            data.cc1(idx[0]).entries().to_vec()
        }));
    }
    {
        let data = data.clone();
        checks.push(Check::new("cc-2", vec![d], move |idx| {
            data.cc2(idx[0]).entries().to_vec()
        }));
    }
    {
        let data = data.clone();
        checks.push(Check::new("cc-3", vec![d, d], move |idx| {
            data.cc3(idx[0], idx[1]).to_tensor().entries().to_vec()
        }));
    }
    if kind == CoboundaryKind::Aplp {
        {
            let data = data.clone();
            checks.push(Check::new("aybe-1", vec![d], move |idx| {
                data.aybe1(idx[0]).to_tensor().entries().to_vec()
            }));
        }
        {
            let data = data.clone();
            checks.push(Check::new("aybe-2", vec![d], move |idx| {
                data.aybe2(idx[0]).entries().to_vec()
            }));
        }
        {
            let data = data.clone();
            checks.push(Check::new("tpba-1", vec![d], move |idx| {
                data.tpba1(idx[0]).entries().to_vec()
            }));
        }
        {
            let data = data.clone();
            checks.push(Check::new("tpba-2", vec![d], move |idx| {
                data.tpba2(idx[0]).entries().to_vec()
            }));
        }
        {
            let data = data.clone();
            checks.push(Check::new("tpba-3", vec![d, d], move |idx| {
                data.tpba3(idx[0], idx[1]).to_tensor().entries().to_vec()
            }));
        }
        {
            let data = data.clone();
            checks.push(Check::new("tpba-4", vec![d, d], move |idx| {
                data.tpba4(idx[0], idx[1]).to_tensor().entries().to_vec()
            }));
        }
    }
    Ok(Suite::new(checks))
}

pub fn check_coboundary_conditions(
    algebra: &AlgebraPresentation,
    r: &TwoTensor,
    kind: CoboundaryKind,
) -> Result<Vec<IdentityReport>> {
    Ok(coboundary_condition_suite(algebra, r, kind)?.run())
}

/// The O-operator forms of a skew two-tensor, evaluated on dual basis
/// pairs through the identification `r: A* -> A`:
///
/// * `apl-o-form`: `r(a*) o r(b*) + r(ad*(r a*) b*) - r(R_circ*(r b*) a*)`,
/// * `lie-o-form`: `[r(a*), r(b*)] + r(L_circ*(r a*) b*) - r(L_circ*(r b*) a*)`,
/// * `assoc-o-form` (when `dot` is present):
///   `r(a*) . r(b*) - r(L_dot(r a*)^T b*) - r(L_dot(r b*)^T a*)`.
pub fn o_operator_form_suite<'a>(
    algebra: &'a AlgebraPresentation,
    r: &TwoTensor,
) -> Result<Suite<'a>> {
    check_r_dim(algebra, r)?;
    if !r.is_skew() {
        return Err(KernelError::precondition(
            "o-operator forms require a skew-symmetric two-tensor",
            vec![IdentityReport::fail(
                "skew-symmetry",
                vec![],
                vec![Scalar::one()],
            )],
        ));
    }
    algebra.product(ProductName::Circ)?;
    let d = algebra.dim();
    let with_bracket = commutator(algebra)?;
    let r_map = r.as_map();
    let lc = algebra.mult_family(ProductName::Circ, false)?;
    let rc = algebra.mult_family(ProductName::Circ, true)?;
    let ad = with_bracket.mult_family(ProductName::Bracket, false)?;
    let images: Vec<Vec<Scalar>> = (0..d).map(|i| r_map.column(i)).collect();

    let mut checks: Vec<Check<'a>> = Vec::new();
    {
        let (r_map, rc, ad, images) = (r_map.clone(), rc.clone(), ad.clone(), images.clone());
        checks.push(Check::new("apl-o-form", vec![d, d], move |idx| {
            let (i, j) = (idx[0], idx[1]);
            let u = &images[i];
            let v = &images[j];
            let t1 = algebra.prod_vec(ProductName::Circ, u, v).unwrap();
            let arg2 = family_at(&ad, u).transpose().neg().apply(&basis(d, j));
            let t2 = r_map.apply(&arg2);
            let arg3 = family_at(&rc, v).transpose().neg().apply(&basis(d, i));
            let t3 = r_map.apply(&arg3);
            t1.iter()
                .zip(t2.iter().zip(&t3))
                .map(|(a, (b, c))| &(a + b) - c)
                .collect()
        }));
    }
    {
        let (r_map, lc, images) = (r_map.clone(), lc.clone(), images.clone());
        let bracket_algebra = with_bracket.clone();
        checks.push(Check::new("lie-o-form", vec![d, d], move |idx| {
            let (i, j) = (idx[0], idx[1]);
            let u = &images[i];
            let v = &images[j];
            let t1 = bracket_algebra
                .prod_vec(ProductName::Bracket, u, v)
                .unwrap();
            let arg2 = family_at(&lc, u).transpose().neg().apply(&basis(d, j));
            let t2 = r_map.apply(&arg2);
            let arg3 = family_at(&lc, v).transpose().neg().apply(&basis(d, i));
            let t3 = r_map.apply(&arg3);
            t1.iter()
                .zip(t2.iter().zip(&t3))
                .map(|(a, (b, c))| &(a + b) - c)
                .collect()
        }));
    }
    if algebra.has_product(ProductName::Dot) {
        let ld = algebra.mult_family(ProductName::Dot, false)?;
        let (r_map, images) = (r_map.clone(), images.clone());
        checks.push(Check::new("assoc-o-form", vec![d, d], move |idx| {
            let (i, j) = (idx[0], idx[1]);
            let u = &images[i];
            let v = &images[j];
            let t1 = algebra.prod_vec(ProductName::Dot, u, v).unwrap();
            let arg2 = family_at(&ld, u).transpose().apply(&basis(d, j));
            let t2 = r_map.apply(&arg2);
            let arg3 = family_at(&ld, v).transpose().apply(&basis(d, i));
            let t3 = r_map.apply(&arg3);
            t1.iter()
                .zip(t2.iter().zip(&t3))
                .map(|(a, (b, c))| &(a - b) - c)
                .collect()
        }));
    }
    Ok(Suite::new(checks))
}

pub fn check_o_operator_forms(
    algebra: &AlgebraPresentation,
    r: &TwoTensor,
) -> Result<Vec<IdentityReport>> {
    Ok(o_operator_form_suite(algebra, r)?.run())
}

fn basis(d: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); d];
    v[i] = Scalar::one();
    v
}
