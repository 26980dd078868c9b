//! Worked examples used across tests and shipped workspaces: truncated
//! polynomial algebras with their standard derivations and forms, and two
//! small Zinbiel algebras.

use crate::algebra::{AlgebraPresentation, ProductName};
use crate::forms::BilinearForm;
use crate::linmap::LinearMap;
use crate::scalar::Scalar;
use crate::tensor::Tensor;

/// `Q[t]/(t^n)` with basis `1, t, ..., t^(n-1)` and the dot product.
pub fn truncated_polynomial_algebra(n: usize) -> AlgebraPresentation {
    assert!(n >= 1);
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        })
        .collect();
    let mut dot = Tensor::zeros(&[n, n, n]);
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                dot.set(&[i, j, i + j], Scalar::one());
            }
        }
    }
    AlgebraPresentation::new(n, Some(labels))
        .unwrap()
        .with_product(ProductName::Dot, dot)
        .unwrap()
}

/// Euler derivation `P(t^k) = k t^k` on `Q[t]/(t^n)`.
pub fn euler_derivation(n: usize) -> LinearMap {
    let mut p = LinearMap::zeros(n, n);
    for k in 0..n {
        p.set(k, k, Scalar::from_int(k as i64));
    }
    p
}

/// Nilpotent derivation `P(t^k) = k t^(k+1)` (i.e. `t^2 d/dt`) on `Q[t]/(t^n)`.
pub fn nilpotent_derivation(n: usize) -> LinearMap {
    let mut p = LinearMap::zeros(n, n);
    for k in 0..n {
        if k + 1 < n {
            p.set(k + 1, k, Scalar::from_int(k as i64));
        }
    }
    p
}

/// Frobenius pairing `B(t^i, t^j) = 1` iff `i + j = n - 1`.
pub fn frobenius_form(n: usize) -> BilinearForm {
    let mut m = LinearMap::zeros(n, n);
    for i in 0..n {
        m.set(i, n - 1 - i, Scalar::one());
    }
    BilinearForm::new(m)
}

/// Two-dimensional Zinbiel algebra: `x1 * x1 = x2`, all other products zero.
pub fn two_dim_zinbiel() -> AlgebraPresentation {
    let mut star = Tensor::zeros(&[2, 2, 2]);
    star.set(&[0, 0, 1], Scalar::one());
    AlgebraPresentation::new(2, Some(vec!["x1".into(), "x2".into()]))
        .unwrap()
        .with_product(ProductName::Star, star)
        .unwrap()
}

/// Grading derivation `P(x_k) = k x_k` for the two-dimensional Zinbiel
/// algebra above (x1 has degree 1, x2 degree 2).
pub fn two_dim_zinbiel_grading() -> LinearMap {
    let mut p = LinearMap::zeros(2, 2);
    p.set(0, 0, Scalar::one());
    p.set(1, 1, Scalar::from_int(2));
    p
}

/// Half-shuffle Zinbiel on `t Q[t]/(t^(m+1))` with basis `t, ..., t^m`:
/// `t^i * t^j = (j / (i + j)) t^(i+j)`, truncated past `t^m`.
pub fn half_shuffle_zinbiel(m: usize) -> AlgebraPresentation {
    assert!(m >= 1);
    let labels = (1..=m)
        .map(|k| {
            if k == 1 {
                "t".to_string()
            } else {
                format!("t^{k}")
            }
        })
        .collect();
    let mut star = Tensor::zeros(&[m, m, m]);
    for a in 0..m {
        for b in 0..m {
            let (i, j) = (a + 1, b + 1);
            if i + j <= m {
                star.set(
                    &[a, b, i + j - 1],
                    Scalar::fraction(j as i64, (i + j) as i64),
                );
            }
        }
    }
    AlgebraPresentation::new(m, Some(labels))
        .unwrap()
        .with_product(ProductName::Star, star)
        .unwrap()
}

/// Grading derivation `P(t^k) = k t^k` on the half-shuffle basis `t..t^m`.
pub fn grading_derivation(m: usize) -> LinearMap {
    let mut p = LinearMap::zeros(m, m);
    for a in 0..m {
        p.set(a, a, Scalar::from_int((a + 1) as i64));
    }
    p
}

/// An algebra with every product zero, handy as a degenerate test point.
pub fn zero_algebra(dim: usize, products: &[ProductName]) -> AlgebraPresentation {
    let mut a = AlgebraPresentation::new(dim, None).unwrap();
    for &p in products {
        a.set_product(p, Tensor::zeros(&[dim, dim, dim])).unwrap();
    }
    a
}
