//! Cyclic Jacobi eigensolver for Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `A_pq` with a diagonal
//! unitary and then applies the real symmetric Jacobi rotation, so the
//! combined 2x2 unitary zeroes `A_pq` exactly.

use num_complex::Complex64;

use super::matrix::CMatrix;
use crate::error::{Error, Result};

/// Sum of squared off-diagonal moduli below which the matrix counts as diagonal.
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-13;
pub const MAX_SWEEPS: usize = 100;
/// Hermiticity check applied before diagonalizing, relative to `max(1, max|A_ij|)`.
pub const HERMITIAN_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Sorted descending.
    pub values: Vec<f64>,
    /// Column `k` holds the eigenvector of `values[k]`.
    pub vectors: CMatrix,
}

impl EigenDecomposition {
    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        let n = self.vectors.dim();
        (0..n).map(|i| self.vectors[(i, k)]).collect()
    }

    /// `V diag(f(λ)) V†`
    pub fn map_values(&self, f: impl Fn(f64) -> f64) -> CMatrix {
        let n = self.vectors.dim();
        let mut out = CMatrix::zeros(n);
        for (k, &lambda) in self.values.iter().enumerate() {
            let w = f(lambda);
            if w == 0.0 {
                continue;
            }
            for i in 0..n {
                let vik = self.vectors[(i, k)] * w;
                for j in 0..n {
                    out[(i, j)] += vik * self.vectors[(j, k)].conj();
                }
            }
        }
        out
    }

    pub fn reconstruct(&self) -> CMatrix {
        self.map_values(|x| x)
    }
}

/// Eigenvalues only, sorted descending.
pub fn eigvalsh(m: &CMatrix) -> Result<Vec<f64>> {
    Ok(jacobi(m, false)?.values)
}

/// Full eigendecomposition, values sorted descending.
pub fn eigh(m: &CMatrix) -> Result<EigenDecomposition> {
    jacobi(m, true)
}

fn jacobi(m: &CMatrix, want_vectors: bool) -> Result<EigenDecomposition> {
    let n = m.dim();
    let scale = m.max_abs().max(1.0);
    let deviation = m.hermitian_deviation();
    if deviation > HERMITIAN_TOLERANCE * scale {
        return Err(Error::NotHermitian { deviation });
    }

    // Symmetrize so that rounding asymmetry never feeds the rotations.
    let mut a = CMatrix::zeros(n);
    for i in 0..n {
        a[(i, i)] = Complex64::new(m[(i, i)].re, 0.0);
        for j in (i + 1)..n {
            let z = 0.5 * (m[(i, j)] + m[(j, i)].conj());
            a[(i, j)] = z;
            a[(j, i)] = z.conj();
        }
    }
    let mut v = if want_vectors { Some(CMatrix::identity(n)) } else { None };

    let threshold = OFF_DIAGONAL_TOLERANCE * OFF_DIAGONAL_TOLERANCE * scale * scale;
    let mut sweeps = 0;
    while off_diagonal_norm_sq(&a) > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::EigenNoConvergence { sweeps });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, v.as_mut(), p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = match v {
        Some(v) => {
            let mut sorted = CMatrix::zeros(n);
            for (new_col, &old_col) in order.iter().enumerate() {
                for i in 0..n {
                    sorted[(i, new_col)] = v[(i, old_col)];
                }
            }
            sorted
        }
        None => CMatrix::zeros(0),
    };
    Ok(EigenDecomposition { values, vectors })
}

fn off_diagonal_norm_sq(a: &CMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            s += a[(i, j)].norm_sqr();
        }
    }
    2.0 * s
}

fn rotate(a: &mut CMatrix, v: Option<&mut CMatrix>, p: usize, q: usize) {
    let apq = a[(p, q)];
    let g = apq.norm();
    if g < 1e-300 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    // With D = diag(1, e^{-iφ}) on (p, q), (D†AD)_pq = g is real and the
    // textbook rotation applies.
    let phase = apq / g;
    let theta = (aqq - app) / (2.0 * g);
    let t = if theta.is_finite() {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    } else {
        0.0
    };
    if t == 0.0 {
        return;
    }
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // J = D R: columns p and q of the rotation.
    let j_pp = Complex64::new(c, 0.0);
    let j_pq = Complex64::new(s, 0.0);
    let j_qp = -phase.conj() * s;
    let j_qq = phase.conj() * c;

    let n = a.dim();
    // A <- A J (columns)
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * j_pp + akq * j_qp;
        a[(k, q)] = akp * j_pq + akq * j_qq;
    }
    // A <- J† A (rows)
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = j_pp.conj() * apk + j_qp.conj() * aqk;
        a[(q, k)] = j_pq.conj() * apk + j_qq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)].im = 0.0;
    a[(q, q)].im = 0.0;

    if let Some(v) = v {
        for k in 0..n {
            let vkp = v[(k, p)];
            let vkq = v[(k, q)];
            v[(k, p)] = vkp * j_pp + vkq * j_qp;
            v[(k, q)] = vkp * j_pq + vkq * j_qq;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diagonal_input_is_returned_sorted() {
        let vals = eigvalsh(&CMatrix::diagonal(&[0.1, 0.7, 0.2])).unwrap();
        assert_eq!(vals, vec![0.7, 0.2, 0.1]);
    }

    #[test]
    fn pauli_y_has_eigenvalues_plus_minus_one() {
        let y = CMatrix::from_row_major(vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)]);
        let e = eigh(&y).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-14);
        assert!((e.values[1] + 1.0).abs() < 1e-14);
        assert!(e.reconstruct().max_abs_diff(&y) < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = CMatrix::from_row_major(vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        assert!(matches!(eigh(&m), Err(Error::NotHermitian { .. })));
    }

    fn hermitian_strategy(max_dim: usize) -> impl Strategy<Value = CMatrix> {
        (1..=max_dim).prop_flat_map(|n| {
            prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n * n).prop_map(move |raw| {
                let mut m = CMatrix::zeros(n);
                for i in 0..n {
                    for j in 0..n {
                        let (re, im) = raw[i * n + j];
                        m[(i, j)] = c(re, im);
                    }
                }
                &m + &m.adjoint()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn reconstruction_residual_is_tiny(m in hermitian_strategy(16)) {
            let e = eigh(&m).unwrap();
            prop_assert!(e.reconstruct().max_abs_diff(&m) <= 1e-10);
            prop_assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
            let trace: f64 = e.values.iter().sum();
            prop_assert!((trace - m.trace().re).abs() < 1e-10);
        }

        #[test]
        fn eigenvectors_are_orthonormal(m in hermitian_strategy(8)) {
            let e = eigh(&m).unwrap();
            let gram = &e.vectors.adjoint() * &e.vectors;
            prop_assert!(gram.max_abs_diff(&CMatrix::identity(m.dim())) < 1e-12);
        }
    }
}
