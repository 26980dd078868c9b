//! Dense tensors over exact rationals.
//!
//! Entries are stored row-major. The axis convention is fixed once for the
//! whole kernel: for a product tensor `c`, entry `(i, j, k)` is the
//! coefficient of basis element `k` in `e_i * e_j`; for a coproduct tensor,
//! entry `(k, i, j)` is the coefficient of `e_i (x) e_j` in the image of
//! `e_k`. Constructors enforce that the entry count matches the extents so
//! the convention cannot drift.

use crate::error::{KernelError, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Tensor {
    dims: Vec<usize>,
    entries: Vec<Scalar>,
}

impl std::fmt::Debug for Tensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tensor{:?}{:?}", self.dims, self.entries)
    }
}

impl Tensor {
    pub fn zeros(dims: &[usize]) -> Tensor {
        let len = dims.iter().product();
        Tensor {
            dims: dims.to_vec(),
            entries: vec![Scalar::zero(); len],
        }
    }

    pub fn from_entries(dims: &[usize], entries: Vec<Scalar>) -> Result<Tensor> {
        let len: usize = dims.iter().product();
        if entries.len() != len {
            return Err(KernelError::Dimension(format!(
                "tensor with dims {:?} needs {} entries, got {}",
                dims,
                len,
                entries.len()
            )));
        }
        Ok(Tensor {
            dims: dims.to_vec(),
            entries,
        })
    }

    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.dims.len());
        let mut off = 0;
        for (k, &i) in idx.iter().enumerate() {
            debug_assert!(i < self.dims[k]);
            off = off * self.dims[k] + i;
        }
        off
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.entries[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: Scalar) {
        let off = self.offset(idx);
        self.entries[off] = value;
    }

    pub fn add_at(&mut self, idx: &[usize], value: &Scalar) {
        let off = self.offset(idx);
        self.entries[off] += value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Multi-index of the first nonzero entry, in row-major order.
    pub fn first_nonzero(&self) -> Option<(Vec<usize>, &Scalar)> {
        let pos = self.entries.iter().position(|e| !e.is_zero())?;
        Some((self.unravel(pos), &self.entries[pos]))
    }

    fn unravel(&self, mut off: usize) -> Vec<usize> {
        let mut idx = vec![0; self.dims.len()];
        for k in (0..self.dims.len()).rev() {
            idx[k] = off % self.dims[k];
            off /= self.dims[k];
        }
        idx
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        Tensor {
            dims: self.dims.clone(),
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn add(&self, other: &Tensor) -> Result<Tensor> {
        if self.dims != other.dims {
            return Err(KernelError::Dimension(format!(
                "cannot add tensors of dims {:?} and {:?}",
                self.dims, other.dims
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Tensor {
            dims: self.dims.clone(),
            entries,
        })
    }

    pub fn sub(&self, other: &Tensor) -> Result<Tensor> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    /// Accumulates `c * other` into `self`. Dims must already agree.
    pub fn accumulate(&mut self, other: &Tensor, c: &Scalar) {
        debug_assert_eq!(self.dims, other.dims);
        if c.is_zero() {
            return;
        }
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a += &(b * c);
            }
        }
    }
}

/// Sums over the paired axes of `a` and `b`.
///
/// The result carries the unpaired axes of `a` (in order) followed by the
/// unpaired axes of `b` (in order); its rank is
/// `rank(a) + rank(b) - 2 * pairs.len()`.
pub fn tensor_contract(a: &Tensor, b: &Tensor, pairs: &[(usize, usize)]) -> Result<Tensor> {
    for &(ai, bi) in pairs {
        if ai >= a.rank() || bi >= b.rank() {
            return Err(KernelError::Argument(format!(
                "contraction pair ({ai}, {bi}) out of range for ranks {} and {}",
                a.rank(),
                b.rank()
            )));
        }
        if a.dims[ai] != b.dims[bi] {
            return Err(KernelError::Dimension(format!(
                "contracted axes have extents {} and {}",
                a.dims[ai], b.dims[bi]
            )));
        }
    }
    let mut seen_a = vec![false; a.rank()];
    let mut seen_b = vec![false; b.rank()];
    for &(ai, bi) in pairs {
        if seen_a[ai] || seen_b[bi] {
            return Err(KernelError::Argument(
                "axis contracted more than once".into(),
            ));
        }
        seen_a[ai] = true;
        seen_b[bi] = true;
    }

    let free_a: Vec<usize> = (0..a.rank()).filter(|&i| !seen_a[i]).collect();
    let free_b: Vec<usize> = (0..b.rank()).filter(|&i| !seen_b[i]).collect();
    let mut out_dims: Vec<usize> = free_a.iter().map(|&i| a.dims[i]).collect();
    out_dims.extend(free_b.iter().map(|&i| b.dims[i]));
    let mut out = Tensor::zeros(&out_dims);

    let sum_dims: Vec<usize> = pairs.iter().map(|&(ai, _)| a.dims[ai]).collect();
    let mut a_idx = vec![0usize; a.rank()];
    let mut b_idx = vec![0usize; b.rank()];
    let mut out_idx = vec![0usize; out_dims.len()];

    // Iterate free(a) x free(b) x summed indices with explicit counters.
    let total_out: usize = out_dims.iter().product::<usize>().max(1);
    let total_sum: usize = sum_dims.iter().product::<usize>().max(1);
    for flat_out in 0..total_out {
        let mut rem = flat_out;
        for k in (0..out_dims.len()).rev() {
            out_idx[k] = rem % out_dims[k];
            rem /= out_dims[k];
        }
        for (pos, &ax) in free_a.iter().enumerate() {
            a_idx[ax] = out_idx[pos];
        }
        for (pos, &bx) in free_b.iter().enumerate() {
            b_idx[bx] = out_idx[free_a.len() + pos];
        }
        let mut acc = Scalar::zero();
        for flat_sum in 0..total_sum {
            let mut rem = flat_sum;
            for k in (0..sum_dims.len()).rev() {
                let v = rem % sum_dims[k];
                rem /= sum_dims[k];
                a_idx[pairs[k].0] = v;
                b_idx[pairs[k].1] = v;
            }
            let av = a.get(&a_idx);
            if av.is_zero() {
                continue;
            }
            let bv = b.get(&b_idx);
            if bv.is_zero() {
                continue;
            }
            acc += &(av * bv);
        }
        if !acc.is_zero() {
            out.set(&out_idx.clone(), acc);
        }
    }
    Ok(out)
}

/// Reindexes `a` so that `new[m_0, …] = a[m_{perm[0]}, …]`.
///
/// With this convention the flip `tau(x (x) y) = y (x) x` is `perm = [1, 0]`
/// and the 3-cycle `xi(x (x) y (x) z) = y (x) z (x) x` is `perm = [2, 0, 1]`.
pub fn permute_tensor(a: &Tensor, perm: &[usize]) -> Result<Tensor> {
    if perm.len() != a.rank() {
        return Err(KernelError::Argument(format!(
            "permutation length {} does not match rank {}",
            perm.len(),
            a.rank()
        )));
    }
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return Err(KernelError::Argument(format!(
                "{perm:?} is not a bijection on axes"
            )));
        }
        seen[p] = true;
    }
    let mut out_dims = vec![0usize; perm.len()];
    for k in 0..perm.len() {
        out_dims[perm[k]] = a.dims[k];
    }
    let mut out = Tensor::zeros(&out_dims);
    let mut src = vec![0usize; a.rank()];
    let total: usize = out_dims.iter().product::<usize>().max(1);
    let mut idx = vec![0usize; out_dims.len()];
    for flat in 0..total {
        let mut rem = flat;
        for k in (0..out_dims.len()).rev() {
            idx[k] = rem % out_dims[k];
            rem /= out_dims[k];
        }
        for k in 0..perm.len() {
            src[k] = idx[perm[k]];
        }
        let v = a.get(&src);
        if !v.is_zero() {
            out.set(&idx.clone(), v.clone());
        }
    }
    Ok(out)
}

/// Composition so that `permute(permute(t, inner), outer) = permute(t, compose(inner, outer))`.
pub fn compose_perms(inner: &[usize], outer: &[usize]) -> Vec<usize> {
    inner.iter().map(|&i| outer[i]).collect()
}
