//! Deterministic eigen-decomposition of Gram matrices.
//!
//! Every estimator in this crate reduces to the spectrum of `XᵀX` for some
//! data matrix `X`. The decomposition is computed from the singular values
//! of `X` itself rather than by forming the Gram matrix, which would square
//! the condition number. Output is canonicalized (descending eigenvalues,
//! fixed eigenvector signs) so repeated calls are bit-identical.

use nalgebra::DMatrix;
use ndarray::{Array1, Array2, ArrayView2};

use crate::error::{DcvError, Result};

/// Relative threshold below which a computed eigenvalue is snapped to zero.
const ZERO_CLAMP_REL: f64 = 1e-12;

/// Eigen-decomposition of a p×p Gram matrix `XᵀX`.
///
/// `values` are nonincreasing and nonnegative, in squared-data units;
/// `vectors` is p×p with orthonormal columns, column `t` paired with
/// `values[t]`. Eigenvalues beyond the rank of `X` are exactly zero.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSystem {
    values: Array1<f64>,
    vectors: Array2<f64>,
}

impl EigenSystem {
    /// Eigenvalues of `XᵀX`, descending.
    pub fn values(&self) -> &Array1<f64> {
        &self.values
    }

    /// Eigenvector matrix; column `t` is the unit eigenvector for `values[t]`.
    pub fn vectors(&self) -> &Array2<f64> {
        &self.vectors
    }

    /// Dimension p of the decomposed Gram matrix.
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// Number of strictly positive eigenvalues.
    pub fn rank(&self) -> usize {
        self.values.iter().filter(|&&v| v > 0.0).count()
    }

    /// Sum of all eigenvalues (equals the squared Frobenius norm of `X`).
    pub fn trace(&self) -> f64 {
        self.values.sum()
    }
}

/// Computes the eigen-decomposition of `XᵀX` for an n×p matrix `X`.
///
/// Eigenvalues are the squared singular values of `X`, padded with exact
/// zeros when p exceeds the rank; eigenvectors are the right singular
/// vectors, completed to a full orthonormal basis of Rᵖ when n < p.
///
/// Sign convention: in each eigenvector the entry of largest magnitude is
/// made positive (ties broken by lowest index), so the output is unique
/// whenever the eigenvalues are simple.
pub fn gram_eigen(x: &ArrayView2<'_, f64>) -> Result<EigenSystem> {
    let (n, p) = x.dim();
    if n == 0 || p == 0 {
        return Err(DcvError::EmptyMatrix);
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(DcvError::NonFiniteInput);
    }

    let m = DMatrix::from_row_iterator(n, p, x.iter().copied());
    let svd = m.svd(false, true);
    let v_t = svd
        .v_t
        .expect("right singular vectors requested from nalgebra SVD");
    let r = v_t.nrows(); // min(n, p)

    let mut values = Array1::<f64>::zeros(p);
    for t in 0..r {
        values[t] = svd.singular_values[t].powi(2);
    }
    // Snap the tail of the spectrum to exact zero.
    let clamp = ZERO_CLAMP_REL * values[0];
    for v in values.iter_mut() {
        if *v < clamp {
            *v = 0.0;
        }
    }

    let mut vectors = Array2::<f64>::zeros((p, p));
    for t in 0..r {
        for s in 0..p {
            vectors[[s, t]] = v_t[(t, s)];
        }
    }
    if r < p {
        // Complete the basis: the null space of X is spanned by the trailing
        // columns of the full Q factor of the (orthonormal) V block.
        let v_block = DMatrix::from_fn(p, r, |i, j| vectors[[i, j]]);
        let qr = v_block.qr();
        let mut q_t = DMatrix::<f64>::identity(p, p);
        qr.q_tr_mul(&mut q_t);
        for t in r..p {
            for s in 0..p {
                vectors[[s, t]] = q_t[(t, s)];
            }
        }
    }

    canonicalize_signs(&mut vectors);
    Ok(EigenSystem { values, vectors })
}

/// Flips each column so its largest-magnitude entry is positive.
fn canonicalize_signs(vectors: &mut Array2<f64>) {
    let (p, cols) = vectors.dim();
    for t in 0..cols {
        let mut lead = 0;
        let mut best = -1.0;
        for s in 0..p {
            let a = vectors[[s, t]].abs();
            if a > best {
                best = a;
                lead = s;
            }
        }
        if vectors[[lead, t]] < 0.0 {
            for s in 0..p {
                vectors[[s, t]] = -vectors[[s, t]];
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;

    #[test]
    fn diagonal_gram() {
        let x = array![[2.0, 0.0], [0.0, 1.0]];
        let es = gram_eigen(&x.view()).unwrap();
        assert_abs_diff_eq!(es.values()[0], 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(es.values()[1], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(es.vectors()[[0, 0]], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(es.vectors()[[1, 0]], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(es.vectors()[[1, 1]], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn rank_one_gram_zero_tail() {
        let x = array![[1.0, 0.0], [0.0, 0.0]];
        let es = gram_eigen(&x.view()).unwrap();
        assert_eq!(es.values()[0], 1.0);
        assert_eq!(es.values()[1], 0.0);
        assert_eq!(es.rank(), 1);
        assert_abs_diff_eq!(es.vectors()[[0, 0]], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(es.vectors()[[1, 1]], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn rejects_empty_and_non_finite() {
        let empty = Array2::<f64>::zeros((0, 3));
        assert!(matches!(
            gram_eigen(&empty.view()),
            Err(DcvError::EmptyMatrix)
        ));
        let bad = array![[1.0, f64::NAN]];
        assert!(matches!(
            gram_eigen(&bad.view()),
            Err(DcvError::NonFiniteInput)
        ));
    }

    #[test]
    fn wide_matrix_full_basis() {
        // n < p: the null space must be filled in and stay orthonormal.
        let x = array![[1.0, 2.0, 3.0, 4.0], [0.5, -1.0, 2.0, 0.0]];
        let es = gram_eigen(&x.view()).unwrap();
        assert_eq!(es.dim(), 4);
        assert_eq!(es.rank(), 2);
        let v = es.vectors();
        let gram = v.t().dot(v);
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(gram[[i, j]], want, epsilon = 1e-10);
            }
        }
        // Null-space columns are annihilated by X.
        for t in 2..4 {
            let xv = x.dot(&v.column(t));
            for e in xv.iter() {
                assert_abs_diff_eq!(*e, 0.0, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn deterministic_bitwise() {
        let x = array![
            [0.3, -1.2, 0.7],
            [1.1, 0.4, -0.9],
            [-0.5, 0.8, 0.2],
            [0.9, -0.3, 1.5]
        ];
        let a = gram_eigen(&x.view()).unwrap();
        let b = gram_eigen(&x.view()).unwrap();
        assert_eq!(a.values(), b.values());
        assert_eq!(a.vectors(), b.vectors());
    }
}
