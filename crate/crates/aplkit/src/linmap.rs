//! Linear maps as exact matrices, plus Gaussian elimination.
//!
//! Column `j` of the matrix is the image of basis element `j`.

use crate::error::{KernelError, Result};
use crate::scalar::Scalar;
use crate::tensor::Tensor;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap {
    domain_dim: usize,
    codomain_dim: usize,
    /// Row-major `codomain_dim x domain_dim` matrix.
    entries: Vec<Scalar>,
}

impl LinearMap {
    pub fn zeros(codomain_dim: usize, domain_dim: usize) -> LinearMap {
        LinearMap {
            domain_dim,
            codomain_dim,
            entries: vec![Scalar::zero(); domain_dim * codomain_dim],
        }
    }

    pub fn identity(dim: usize) -> LinearMap {
        let mut m = LinearMap::zeros(dim, dim);
        for i in 0..dim {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<LinearMap> {
        let codomain_dim = rows.len();
        let domain_dim = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != domain_dim) {
            return Err(KernelError::Dimension("ragged matrix rows".into()));
        }
        Ok(LinearMap {
            domain_dim,
            codomain_dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    pub fn codomain_dim(&self) -> usize {
        self.codomain_dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.domain_dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        self.entries[row * self.domain_dim + col] = value;
    }

    pub fn add_at(&mut self, row: usize, col: usize, value: &Scalar) {
        self.entries[row * self.domain_dim + col] += value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.domain_dim == self.codomain_dim
    }

    pub fn transpose(&self) -> LinearMap {
        let mut out = LinearMap::zeros(self.domain_dim, self.codomain_dim);
        for r in 0..self.codomain_dim {
            for c in 0..self.domain_dim {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn neg(&self) -> LinearMap {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            domain_dim: self.domain_dim,
            codomain_dim: self.codomain_dim,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.domain_dim, other.domain_dim);
        assert_eq!(self.codomain_dim, other.codomain_dim);
        LinearMap {
            domain_dim: self.domain_dim,
            codomain_dim: self.codomain_dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        self.add(&other.neg())
    }

    /// `self . other` (apply `other` first).
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.domain_dim, other.codomain_dim);
        let mut out = LinearMap::zeros(self.codomain_dim, other.domain_dim);
        for i in 0..self.codomain_dim {
            for k in 0..self.domain_dim {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.domain_dim {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.domain_dim);
        let mut out = vec![Scalar::zero(); self.codomain_dim];
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (i, out_i) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *out_i += &(a * vj);
                }
            }
        }
        out
    }

    /// Column `j` as a vector (the image of basis element `j`).
    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.codomain_dim)
            .map(|i| self.get(i, j).clone())
            .collect()
    }

    pub fn to_tensor(&self) -> Tensor {
        Tensor::from_entries(&[self.codomain_dim, self.domain_dim], self.entries.clone()).unwrap()
    }

    pub fn from_tensor(t: &Tensor) -> Result<LinearMap> {
        if t.rank() != 2 {
            return Err(KernelError::Dimension(format!(
                "expected rank-2 tensor, got rank {}",
                t.rank()
            )));
        }
        Ok(LinearMap {
            codomain_dim: t.dims()[0],
            domain_dim: t.dims()[1],
            entries: t.entries().to_vec(),
        })
    }
}

/// Exact Gaussian elimination. Returns the rank and, when the matrix is
/// square and of full rank, the inverse.
#[allow(clippy::needless_range_loop)]
pub fn matrix_rank_and_inverse(m: &LinearMap) -> (usize, Option<LinearMap>) {
    let rows = m.codomain_dim;
    let cols = m.domain_dim;
    // Work on [m | I]; elimination runs even for non-square input (rank only).
    let mut a: Vec<Vec<Scalar>> = (0..rows)
        .map(|r| (0..cols).map(|c| m.get(r, c).clone()).collect())
        .collect();
    let mut inv: Vec<Vec<Scalar>> = (0..rows)
        .map(|r| {
            (0..rows)
                .map(|c| {
                    if r == c {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                })
                .collect()
        })
        .collect();

    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = match (rank..rows).find(|&r| !a[r][col].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        a.swap(rank, pivot);
        inv.swap(rank, pivot);
        let inv_pivot = a[rank][col].inverse().expect("pivot is nonzero");
        for c in 0..cols {
            a[rank][c] = &a[rank][c] * &inv_pivot;
        }
        for c in 0..rows {
            inv[rank][c] = &inv[rank][c] * &inv_pivot;
        }
        for r in 0..rows {
            if r != rank && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..cols {
                    let delta = &a[rank][c] * &factor;
                    a[r][c] -= &delta;
                }
                for c in 0..rows {
                    let delta = &inv[rank][c] * &factor;
                    inv[r][c] -= &delta;
                }
            }
        }
        rank += 1;
    }

    let inverse = if rows == cols && rank == rows {
        Some(LinearMap::from_rows(inv).expect("square"))
    } else {
        None
    };
    (rank, inverse)
}

/// Solves `m x = b` for square nonsingular `m`; `None` when singular.
pub fn solve(m: &LinearMap, b: &[Scalar]) -> Option<Vec<Scalar>> {
    let (_, inv) = matrix_rank_and_inverse(m);
    inv.map(|inv| inv.apply(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn identity_inverts_to_itself() {
        let id = LinearMap::identity(3);
        let (rank, inv) = matrix_rank_and_inverse(&id);
        assert_eq!(rank, 3);
        assert_eq!(inv.unwrap(), id);
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let z = LinearMap::zeros(2, 2);
        let (rank, inv) = matrix_rank_and_inverse(&z);
        assert_eq!(rank, 0);
        assert!(inv.is_none());
    }

    #[test]
    fn antidiagonal_form_is_involutive() {
        // B(e_i, e_j) = 1 iff i + j = 2, on dimension 3
        let mut b = LinearMap::zeros(3, 3);
        for i in 0..3 {
            b.set(i, 2 - i, Scalar::one());
        }
        let (rank, inv) = matrix_rank_and_inverse(&b);
        assert_eq!(rank, 3);
        assert_eq!(inv.unwrap(), b);
    }

    #[test]
    fn rank_of_rectangular_matrix() {
        let m = LinearMap::from_rows(vec![vec![s(1), s(2), s(3)], vec![s(2), s(4), s(6)]]).unwrap();
        let (rank, inv) = matrix_rank_and_inverse(&m);
        assert_eq!(rank, 1);
        assert!(inv.is_none());
    }

    #[test]
    fn solve_small_system() {
        let m = LinearMap::from_rows(vec![vec![s(2), s(1)], vec![s(1), s(1)]]).unwrap();
        let x = solve(&m, &[s(3), s(2)]).unwrap();
        assert_eq!(x, vec![s(1), s(1)]);
    }

    #[test]
    fn compose_and_apply_agree() {
        let m = LinearMap::from_rows(vec![vec![s(1), s(2)], vec![s(0), s(1)]]).unwrap();
        let n = LinearMap::from_rows(vec![vec![s(0), s(1)], vec![s(1), s(0)]]).unwrap();
        let mn = m.compose(&n);
        let v = [s(5), s(7)];
        assert_eq!(mn.apply(&v), m.apply(&n.apply(&v)));
    }
}
