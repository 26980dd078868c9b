//! Coproducts, product/coproduct dualization, coalgebra axioms, 1-cocycle
//! checks and the bialgebra compatibility suites.
//!
//! A coproduct stores entry `(k; i, j)`: the coefficient of `e_i (x) e_j`
//! in the image of `e_k`. This mirrors the product convention, so moving
//! between a product on `A` and the dual coproduct on `A*` (and back) is a
//! pure index transposition.

use crate::algebra::{AlgebraPresentation, ProductName};
use crate::error::{KernelError, Result};
use crate::linmap::LinearMap;
use crate::report::{Check, IdentityReport, Suite};
use crate::scalar::Scalar;
use crate::tensor::{permute_tensor, tensor_contract, Tensor};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coproduct {
    dim: usize,
    tensor: Tensor,
}

impl Coproduct {
    pub fn zero(dim: usize) -> Coproduct {
        Coproduct {
            dim,
            tensor: Tensor::zeros(&[dim, dim, dim]),
        }
    }

    pub fn from_tensor(tensor: Tensor) -> Result<Coproduct> {
        if tensor.rank() != 3 || tensor.dims().iter().any(|&d| d != tensor.dims()[0]) {
            return Err(KernelError::Dimension(format!(
                "coproduct tensor must be cubic rank 3, got dims {:?}",
                tensor.dims()
            )));
        }
        Ok(Coproduct {
            dim: tensor.dims()[0],
            tensor,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tensor(&self) -> &Tensor {
        &self.tensor
    }

    pub fn get(&self, k: usize, i: usize, j: usize) -> &Scalar {
        self.tensor.get(&[k, i, j])
    }

    pub fn set(&mut self, k: usize, i: usize, j: usize, value: Scalar) {
        self.tensor.set(&[k, i, j], value);
    }

    /// Image of `e_k` as a `dim x dim` matrix over `A (x) A`.
    pub fn image(&self, k: usize) -> LinearMap {
        let mut m = LinearMap::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = self.get(k, i, j);
                if !v.is_zero() {
                    m.set(i, j, v.clone());
                }
            }
        }
        m
    }

    /// Linear extension to an arbitrary element with the given coordinates.
    pub fn image_at(&self, coords: &[Scalar]) -> LinearMap {
        let mut m = LinearMap::zeros(self.dim, self.dim);
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let v = self.get(k, i, j);
                    if !v.is_zero() {
                        m.add_at(i, j, &(v * c));
                    }
                }
            }
        }
        m
    }
}

/// Product on `A` to the dual coproduct on `A*`: `(k; i, j) = c_(ij)^k`.
pub fn product_to_coproduct(product: &Tensor) -> Result<Coproduct> {
    Coproduct::from_tensor(permute_tensor(product, &[1, 2, 0])?)
}

/// Coproduct on `A` to the dual product on `A*`: `c_(ij)^k = (k; i, j)`.
/// Inverse of [`product_to_coproduct`], so the round trip is the identity.
pub fn coproduct_to_product(coproduct: &Coproduct) -> Tensor {
    permute_tensor(&coproduct.tensor, &[2, 0, 1]).expect("cubic tensor")
}

/// The dual-algebra presentation carried by one or two coproducts.
pub fn dual_presentation(
    dim: usize,
    assignments: &[(ProductName, &Coproduct)],
) -> Result<AlgebraPresentation> {
    let mut a = AlgebraPresentation::new(dim, None)?;
    for (name, cop) in assignments {
        if cop.dim() != dim {
            return Err(KernelError::Dimension(format!(
                "coproduct dimension {} does not match {}",
                cop.dim(),
                dim
            )));
        }
        a.set_product(*name, coproduct_to_product(cop))?;
    }
    Ok(a)
}

// Composition helpers. Rank-4 result axes: (input, slot1, slot2, slot3).

/// `(id (x) second) first`.
fn comp_right(first: &Coproduct, second: &Coproduct) -> Tensor {
    tensor_contract(&first.tensor, &second.tensor, &[(2, 0)]).expect("cubic")
}

/// `(second (x) id) first`.
fn comp_left(first: &Coproduct, second: &Coproduct) -> Tensor {
    let raw = tensor_contract(&first.tensor, &second.tensor, &[(1, 0)]).expect("cubic");
    // raw axes: (input, kept-slot2, new1, new2) -> (input, new1, new2, kept)
    permute_tensor(&raw, &[0, 3, 1, 2]).expect("rank 4")
}

/// Flip of output slots 1 and 2 (`tau (x) id`).
fn tau01(t: &Tensor) -> Tensor {
    permute_tensor(t, &[0, 2, 1, 3]).expect("rank 4")
}

/// Flip of output slots 2 and 3 (`id (x) tau`).
fn tau12(t: &Tensor) -> Tensor {
    permute_tensor(t, &[0, 1, 3, 2]).expect("rank 4")
}

/// Cyclic shift of the three output slots (`xi`).
fn xi(t: &Tensor) -> Tensor {
    permute_tensor(t, &[0, 3, 1, 2]).expect("rank 4")
}

fn cyclic_sum(t: &Tensor) -> Tensor {
    let once = xi(t);
    let twice = xi(&once);
    t.add(&once).unwrap().add(&twice).unwrap()
}

fn slice_input(t: &Tensor, k: usize) -> Vec<Scalar> {
    let chunk: usize = t.dims()[1..].iter().product();
    t.entries()[k * chunk..(k + 1) * chunk].to_vec()
}

fn per_input_check<'a>(id: &'static str, dim: usize, defect: Tensor) -> Check<'a> {
    Check::new(id, vec![dim], move |idx| slice_input(&defect, idx[0]))
}

/// The anti-pre-Lie coalgebra suite on `delta`:
/// `coalg-1` and `coalg-2` are the two defining axioms.
pub fn apl_coalgebra_suite<'a>(delta: &Coproduct) -> Suite<'a> {
    let d = delta.dim();
    let w1 = comp_right(delta, delta);
    let w2 = comp_left(delta, delta);
    // (id - tau(x)id)(id(x)delta)delta - (tau(x)id - id)(delta(x)id)delta
    let coalg1 = w1
        .sub(&tau01(&w1))
        .unwrap()
        .add(&w2)
        .unwrap()
        .sub(&tau01(&w2))
        .unwrap();
    // (id + xi + xi^2)(tau(x)id - id)(delta(x)id)delta
    let coalg2 = cyclic_sum(&tau01(&w2).sub(&w2).unwrap());
    Suite::new(vec![
        per_input_check("coalg-1", d, coalg1),
        per_input_check("coalg-2", d, coalg2),
    ])
}

/// The alternate second axiom from dualizing `x o [y,z] + y o [z,x] + z o [x,y] = 0`.
pub fn apl_coalgebra_alt_axiom<'a>(delta: &Coproduct) -> Check<'a> {
    let d = delta.dim();
    let w1 = comp_right(delta, delta);
    let coalg3 = cyclic_sum(&tau01(&w1).sub(&w1).unwrap());
    per_input_check("coalg-3", d, coalg3)
}

/// Cocommutative coassociative coalgebra suite on `comul`.
pub fn cocomm_coassoc_suite<'a>(comul: &Coproduct) -> Suite<'a> {
    let d = comul.dim();
    let flipped = permute_tensor(comul.tensor(), &[0, 2, 1]).expect("rank 3");
    let cocomm = comul.tensor().sub(&flipped).unwrap();
    let coassoc = comp_right(comul, comul)
        .sub(&comp_left(comul, comul))
        .unwrap();
    Suite::new(vec![
        per_input_check("cocommutativity", d, cocomm),
        per_input_check("coassociativity", d, coassoc),
    ])
}

/// Anti-pre-Lie Poisson coalgebra suite on `(comul, delta)`: the
/// cocommutative coassociative axioms, the anti-pre-Lie coalgebra axioms,
/// and the two interaction axioms `pcoalg-1`, `pcoalg-2`.
pub fn aplp_coalgebra_suite<'a>(comul: &Coproduct, delta: &Coproduct) -> Result<Suite<'a>> {
    if comul.dim() != delta.dim() {
        return Err(KernelError::Dimension(format!(
            "coproduct dimensions differ: {} vs {}",
            comul.dim(),
            delta.dim()
        )));
    }
    let d = delta.dim();
    let mut checks = cocomm_coassoc_suite(comul).checks;
    checks.extend(apl_coalgebra_suite(delta).checks);

    // 2(delta(x)id)Delta - 2(tau(x)id)(delta(x)id)Delta
    //   = (tau(x)id)(id(x)delta)Delta - (id(x)delta)Delta
    let dd = comp_left(comul, delta);
    let id_d = comp_right(comul, delta);
    let two = Scalar::from_int(2);
    let pcoalg1 = dd
        .scale(&two)
        .sub(&tau01(&dd).scale(&two))
        .unwrap()
        .sub(&tau01(&id_d))
        .unwrap()
        .add(&id_d)
        .unwrap();
    checks.push(per_input_check("pcoalg-1", d, pcoalg1));

    // 2(id(x)Delta)delta = (id(x)tau)(Delta(x)id)delta + (delta(x)id)Delta
    let lhs = comp_right(delta, comul).scale(&two);
    let mid = tau12(&comp_left(delta, comul));
    let pcoalg2 = lhs.sub(&mid).unwrap().sub(&dd).unwrap();
    checks.push(per_input_check("pcoalg-2", d, pcoalg2));
    Ok(Suite::new(checks))
}

/// Verifies that `delta` is a 1-cocycle of the sub-adjacent Lie algebra for
/// the action `x -> -L_circ(x) (x) id + id (x) ad(x)`.
///
/// The algebra must carry `circ`; a `bracket`, when present, must equal the
/// commutator of `circ`.
pub fn one_cocycle_suite<'a>(
    algebra: &'a AlgebraPresentation,
    delta: &Coproduct,
) -> Result<Suite<'a>> {
    let d = algebra.dim();
    if delta.dim() != d {
        return Err(KernelError::Dimension(format!(
            "coproduct dimension {} does not match algebra dimension {}",
            delta.dim(),
            d
        )));
    }
    let sub_adjacent = crate::algebra::commutator(algebra)?;
    if algebra.has_product(ProductName::Bracket)
        && algebra.product(ProductName::Bracket)? != sub_adjacent.product(ProductName::Bracket)?
    {
        return Err(KernelError::Configuration(
            "bracket is not the commutator of circ".into(),
        ));
    }
    let lc: Vec<LinearMap> = (0..d)
        .map(|k| algebra.left_mult(ProductName::Circ, k).unwrap())
        .collect();
    let ad: Vec<LinearMap> = (0..d)
        .map(|k| sub_adjacent.left_mult(ProductName::Bracket, k).unwrap())
        .collect();
    let images: Vec<LinearMap> = (0..d).map(|k| delta.image(k)).collect();
    let brackets: Vec<Vec<Vec<Scalar>>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| sub_adjacent.prod_basis(ProductName::Bracket, i, j).unwrap())
                .collect()
        })
        .collect();
    let delta = delta.clone();
    let check = Check::new("one-cocycle", vec![d, d], move |idx| {
        let (i, j) = (idx[0], idx[1]);
        let act = |k: usize, w: &LinearMap| -> LinearMap {
            lc[k].compose(w).neg().add(&w.compose(&ad[k].transpose()))
        };
        let lhs = delta.image_at(&brackets[i][j]);
        let rhs = act(i, &images[j]).sub(&act(j, &images[i]));
        lhs.sub(&rhs).to_tensor().entries().to_vec()
    });
    Ok(Suite::new(vec![check]))
}

pub fn check_one_cocycle(
    algebra: &AlgebraPresentation,
    delta: &Coproduct,
) -> Result<IdentityReport> {
    Ok(one_cocycle_suite(algebra, delta)?.run().remove(0))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BialgebraKind {
    Apl,
    CommCocommInf,
    Aplp,
}

/// The bialgebra compatibility suite (one report per displayed equation).
///
/// `delta` is the anti-pre-Lie coproduct, `comul` the cocommutative one;
/// which of the two must be present depends on the kind. Class axioms of
/// the algebra and the coalgebra axioms of the coproducts are assumed, not
/// re-checked here.
pub fn bialgebra_suite<'a>(
    algebra: &'a AlgebraPresentation,
    delta: Option<&Coproduct>,
    comul: Option<&Coproduct>,
    kind: BialgebraKind,
) -> Result<Suite<'a>> {
    let d = algebra.dim();
    let need = |cop: Option<&Coproduct>, which: &str| -> Result<Coproduct> {
        let cop = cop.ok_or_else(|| {
            KernelError::Configuration(format!("bialgebra kind needs the {which} coproduct"))
        })?;
        if cop.dim() != d {
            return Err(KernelError::Dimension(format!(
                "{which} coproduct dimension {} does not match algebra dimension {d}",
                cop.dim()
            )));
        }
        Ok(cop.clone())
    };

    let mut checks: Vec<Check<'a>> = Vec::new();

    if matches!(kind, BialgebraKind::CommCocommInf | BialgebraKind::Aplp) {
        let comul = need(comul, "cocommutative")?;
        let dot = algebra.product(ProductName::Dot)?.clone();
        let ld: Vec<LinearMap> = (0..d)
            .map(|k| algebra.left_mult(ProductName::Dot, k).unwrap())
            .collect();
        let images: Vec<LinearMap> = (0..d).map(|k| comul.image(k)).collect();
        checks.push(Check::new("inf-bialg", vec![d, d], move |idx| {
            let (k, l) = (idx[0], idx[1]);
            let prod_coords: Vec<Scalar> = (0..d).map(|m| dot.get(&[k, l, m]).clone()).collect();
            let lhs = comul.image_at(&prod_coords);
            let rhs = ld[k]
                .compose(&images[l])
                .add(&images[k].compose(&ld[l].transpose()));
            lhs.sub(&rhs).to_tensor().entries().to_vec()
        }));
    }

    if matches!(kind, BialgebraKind::Apl | BialgebraKind::Aplp) {
        let delta_cop = need(delta, "anti-pre-Lie")?;
        let circ = algebra.product(ProductName::Circ)?.clone();
        let sub_adjacent = crate::algebra::commutator(algebra)?;
        let lc: Vec<LinearMap> = (0..d)
            .map(|k| algebra.left_mult(ProductName::Circ, k).unwrap())
            .collect();
        let rc: Vec<LinearMap> = (0..d)
            .map(|k| algebra.right_mult(ProductName::Circ, k).unwrap())
            .collect();
        let ad: Vec<LinearMap> = (0..d)
            .map(|k| sub_adjacent.left_mult(ProductName::Bracket, k).unwrap())
            .collect();
        let images: Vec<LinearMap> = (0..d).map(|k| delta_cop.image(k)).collect();
        let bracket_t = sub_adjacent.product(ProductName::Bracket)?.clone();

        {
            let (delta_cop, circ, lc, rc, images) = (
                delta_cop.clone(),
                circ.clone(),
                lc.clone(),
                rc.clone(),
                images.clone(),
            );
            checks.push(Check::new("bialg-1", vec![d, d], move |idx| {
                let (k, l) = (idx[0], idx[1]);
                let prod_coords: Vec<Scalar> =
                    (0..d).map(|m| circ.get(&[k, l, m]).clone()).collect();
                let w = delta_cop
                    .image_at(&prod_coords)
                    .sub(&lc[k].compose(&images[l]))
                    .sub(&images[l].compose(&lc[k].transpose()))
                    .add(&images[k].compose(&rc[l].transpose()));
                w.sub(&w.transpose()).to_tensor().entries().to_vec()
            }));
        }
        {
            let (delta_cop, lc, ad, images, bracket_t) = (
                delta_cop.clone(),
                lc.clone(),
                ad.clone(),
                images.clone(),
                bracket_t.clone(),
            );
            checks.push(Check::new("bialg-2", vec![d, d], move |idx| {
                let (k, l) = (idx[0], idx[1]);
                let br_coords: Vec<Scalar> =
                    (0..d).map(|m| bracket_t.get(&[k, l, m]).clone()).collect();
                let act = |x: usize, w: &LinearMap| -> LinearMap {
                    w.compose(&ad[x].transpose()).sub(&lc[x].compose(w))
                };
                let lhs = delta_cop.image_at(&br_coords);
                let rhs = act(k, &images[l]).sub(&act(l, &images[k]));
                lhs.sub(&rhs).to_tensor().entries().to_vec()
            }));
        }

        if kind == BialgebraKind::Aplp {
            let comul = need(comul, "cocommutative")?;
            let dot = algebra.product(ProductName::Dot)?.clone();
            let ld: Vec<LinearMap> = (0..d)
                .map(|k| algebra.left_mult(ProductName::Dot, k).unwrap())
                .collect();
            let comul_images: Vec<LinearMap> = (0..d).map(|k| comul.image(k)).collect();
            let two = Scalar::from_int(2);

            {
                let (delta_cop, dot, lc, ld, ad, di, ci, two) = (
                    delta_cop.clone(),
                    dot.clone(),
                    lc.clone(),
                    ld.clone(),
                    ad.clone(),
                    images.clone(),
                    comul_images.clone(),
                    two.clone(),
                );
                checks.push(Check::new("pbialg-1", vec![d, d], move |idx| {
                    let (k, l) = (idx[0], idx[1]);
                    let dot_coords: Vec<Scalar> =
                        (0..d).map(|m| dot.get(&[k, l, m]).clone()).collect();
                    let out = lc[k]
                        .compose(&ci[l])
                        .scale(&two)
                        .sub(&di[k].compose(&ld[l].transpose()).scale(&two))
                        .add(&delta_cop.image_at(&dot_coords))
                        .add(&ld[l].compose(&di[k]))
                        .sub(&ci[l].compose(&ad[k].transpose()));
                    out.to_tensor().entries().to_vec()
                }));
            }
            {
                let (comul, bracket_t, ld, ad, di, ci, two) = (
                    comul.clone(),
                    bracket_t.clone(),
                    ld.clone(),
                    ad.clone(),
                    images.clone(),
                    comul_images.clone(),
                    two.clone(),
                );
                checks.push(Check::new("pbialg-2", vec![d, d], move |idx| {
                    let (k, l) = (idx[0], idx[1]);
                    let br_coords: Vec<Scalar> =
                        (0..d).map(|m| bracket_t.get(&[k, l, m]).clone()).collect();
                    let out = comul
                        .image_at(&br_coords)
                        .scale(&two)
                        .add(&ci[k].compose(&ad[l].transpose()))
                        .sub(&ld[k].compose(&di[l]))
                        .sub(&ci[l].compose(&ad[k].transpose()))
                        .add(&ld[l].compose(&di[k]));
                    out.to_tensor().entries().to_vec()
                }));
            }
            {
                let (comul, circ, lc, rc, ld, di, ci, two) = (
                    comul.clone(),
                    circ.clone(),
                    lc.clone(),
                    rc.clone(),
                    ld.clone(),
                    images.clone(),
                    comul_images.clone(),
                    two.clone(),
                );
                checks.push(Check::new("pbialg-3", vec![d, d], move |idx| {
                    let (k, l) = (idx[0], idx[1]);
                    let circ_coords: Vec<Scalar> =
                        (0..d).map(|m| circ.get(&[k, l, m]).clone()).collect();
                    let out = di[k]
                        .compose(&ld[l].transpose())
                        .scale(&two)
                        .sub(&lc[k].compose(&ci[l]).scale(&two))
                        .add(&comul.image_at(&circ_coords))
                        .add(&rc[l].compose(&ci[k]))
                        .add(&ld[k].compose(&di[l]).transpose())
                        .sub(&di[l].compose(&ld[k].transpose()));
                    out.to_tensor().entries().to_vec()
                }));
            }
            {
                let (delta_cop, dot, rc, ld, di, ci, two) = (
                    delta_cop.clone(),
                    dot.clone(),
                    rc.clone(),
                    ld.clone(),
                    images.clone(),
                    comul_images.clone(),
                    two.clone(),
                );
                checks.push(Check::new("pbialg-4", vec![d, d], move |idx| {
                    let (k, l) = (idx[0], idx[1]);
                    let dot_coords: Vec<Scalar> =
                        (0..d).map(|m| dot.get(&[k, l, m]).clone()).collect();
                    let v = delta_cop
                        .image_at(&dot_coords)
                        .scale(&two)
                        .sub(&ld[k].compose(&di[l]))
                        .sub(&di[l].compose(&ld[k].transpose()))
                        .sub(&ci[k].compose(&rc[l].transpose()));
                    v.transpose().sub(&v).to_tensor().entries().to_vec()
                }));
            }
        }
    }
    Ok(Suite::new(checks))
}

pub fn check_bialgebra(
    algebra: &AlgebraPresentation,
    delta: Option<&Coproduct>,
    comul: Option<&Coproduct>,
    kind: BialgebraKind,
) -> Result<Vec<IdentityReport>> {
    Ok(bialgebra_suite(algebra, delta, comul, kind)?.run())
}
