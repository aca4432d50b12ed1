//! Dense complex matrices and the spectral primitives everything else
//! builds on: matrix product, Kronecker product, conjugate transpose,
//! Hermitian eigendecomposition and the trace norm.
//!
//! Dimensions here are 2 and 4, so the eigensolver is a cyclic Jacobi
//! iteration with explicit unitary plane rotations: no dependencies,
//! bit-stable, and easy to validate against its own reconstruction.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

/// Complex scalar carried by every matrix in this crate.
pub type C64 = Complex64;

/// Dense row-major complex matrix with exact-dimension arithmetic.
///
/// Constructors reject non-finite entries, so NaN/Inf never enter a matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        ComplexMatrix {
            rows,
            cols,
            data: vec![C64::new(0.0, 0.0); rows * cols],
        }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = C64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from a row-major entry vector.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::invalid("matrix dimensions must be positive"));
        }
        if data.len() != rows * cols {
            return Err(Error::invalid(format!(
                "entry count {} does not match {}x{}",
                data.len(),
                rows,
                cols
            )));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::invalid("non-finite matrix entry"));
        }
        Ok(ComplexMatrix { rows, cols, data })
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> C64,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::from_vec(rows, cols, data)
    }

    /// Diagonal matrix from the given entries.
    pub fn from_diagonal(diag: &[C64]) -> Result<Self> {
        let n = diag.len();
        Self::from_fn(
            n,
            n,
            |i, j| if i == j { diag[i] } else { C64::new(0.0, 0.0) },
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: C64) {
        assert!(
            value.re.is_finite() && value.im.is_finite(),
            "non-finite matrix entry"
        );
        self.data[i * self.cols + j] = value;
    }

    pub fn trace(&self) -> C64 {
        debug_assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    /// Standard matrix product; dimensions must agree.
    pub fn matmul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != other.rows {
            return Err(Error::invalid(format!(
                "matmul dimension mismatch: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ComplexMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik.re == 0.0 && aik.im == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.data[i * other.cols + j] + aik * other.get(k, j);
                    out.data[i * other.cols + j] = v;
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product with `self` as the high-order factor: the result
    /// index is `i_self * other.rows + i_other`, matching the global basis
    /// order {LL, LR, RL, RR}.
    pub fn kron(&self, other: &ComplexMatrix) -> ComplexMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = ComplexMatrix::zeros(rows, cols);
        for ia in 0..self.rows {
            for ja in 0..self.cols {
                let a = self.get(ia, ja);
                for ib in 0..other.rows {
                    for jb in 0..other.cols {
                        let i = ia * other.rows + ib;
                        let j = ja * other.cols + jb;
                        out.data[i * cols + j] = a * other.get(ib, jb);
                    }
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).conj();
            }
        }
        out
    }

    /// Entrywise complex conjugate.
    pub fn conjugate(&self) -> ComplexMatrix {
        let data = self.data.iter().map(|z| z.conj()).collect();
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Multiplies every entry by a scalar.
    pub fn scale(&self, factor: C64) -> ComplexMatrix {
        let data = self.data.iter().map(|z| z * factor).collect();
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `self - self†`; zero for Hermitian input.
    pub fn hermiticity_residual(&self) -> f64 {
        debug_assert!(self.is_square());
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let r = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(r);
            }
        }
        worst
    }

    /// Frobenius norm of the off-diagonal part.
    pub fn off_diag_frobenius(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j {
                    sum += self.get(i, j).norm_sqr();
                }
            }
        }
        sum.sqrt()
    }

    /// Largest modulus among off-diagonal entries.
    pub fn max_off_diag_modulus(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j {
                    worst = worst.max(self.get(i, j).norm());
                }
            }
        }
        worst
    }
}

/// Thresholds for the Jacobi eigensolver; defaults come from [`crate::tol`].
#[derive(Debug, Clone, Copy)]
pub struct JacobiSettings {
    /// Off-diagonal Frobenius norm at which the iteration stops.
    pub off_diag_threshold: f64,
    /// Maximum number of full sweeps before giving up.
    pub max_sweeps: usize,
}

impl Default for JacobiSettings {
    fn default() -> Self {
        JacobiSettings {
            off_diag_threshold: tol::JACOBI_OFF_DIAG,
            max_sweeps: tol::JACOBI_MAX_SWEEPS,
        }
    }
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Eigenvalues are sorted descending; `eigenvectors` holds the matching
/// eigenvectors as columns and is unitary within [`tol::SPECTRUM_RESIDUAL`].
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl Spectrum {
    /// Rebuilds `V Λ V†`; matches the input within [`tol::SPECTRUM_RESIDUAL`].
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let lambda = ComplexMatrix::from_diagonal(
            &self
                .eigenvalues
                .iter()
                .map(|&l| C64::new(l, 0.0))
                .collect::<Vec<_>>(),
        )
        .expect("diagonal of finite eigenvalues");
        debug_assert_eq!(self.eigenvectors.rows(), n);
        self.eigenvectors
            .matmul(&lambda)
            .and_then(|m| m.matmul(&self.eigenvectors.dagger()))
            .expect("square factors")
    }
}

/// Hermitian eigendecomposition with default [`JacobiSettings`].
pub fn hermitian_eig(a: &ComplexMatrix) -> Result<Spectrum> {
    hermitian_eig_with(a, &JacobiSettings::default())
}

/// Cyclic Jacobi eigendecomposition for Hermitian matrices.
///
/// Rejects non-square input and input with hermiticity residual above
/// [`tol::HERMITICITY_INPUT`]; reports a numerical failure if the
/// off-diagonal mass has not dropped below the threshold within the
/// sweep cap.
pub fn hermitian_eig_with(a: &ComplexMatrix, settings: &JacobiSettings) -> Result<Spectrum> {
    if !a.is_square() {
        return Err(Error::invalid(format!(
            "eigendecomposition needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let residual = a.hermiticity_residual();
    if residual > tol::HERMITICITY_INPUT {
        return Err(Error::invalid(format!(
            "matrix is not Hermitian: residual {residual:.3e}"
        )));
    }

    let n = a.rows();
    // Work on the symmetrized copy so the allowed input slack cannot bias
    // the rotations; eigenvalues of (A + A†)/2 are within the slack of A's.
    let mut m = ComplexMatrix::from_fn(n, n, |i, j| {
        (a.get(i, j) + a.get(j, i).conj()) * C64::new(0.5, 0.0)
    })?;
    let mut v = ComplexMatrix::identity(n);

    let mut converged = m.off_diag_frobenius() <= settings.off_diag_threshold;
    let mut sweeps = 0;
    while !converged && sweeps < settings.max_sweeps {
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = m.get(p, q);
                let norm = apq.norm();
                if norm == 0.0 {
                    continue;
                }
                let phase = apq / norm;
                let diff = m.get(q, q).re - m.get(p, p).re;
                let theta = diff / (2.0 * norm);
                if !theta.is_finite() {
                    // |apq| is subnormal relative to the diagonal gap; the
                    // entry is already far below any usable threshold.
                    continue;
                }
                // Smaller-angle root of t² - 2θt - 1 = 0.
                let t = if theta >= 0.0 {
                    -1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                // Unitary plane rotation J: identity outside the (p,q)
                // block; the block diagonalizes [[a_pp, a_pq], [a_qp, a_qq]].
                let mut j = ComplexMatrix::identity(n);
                j.set(p, p, C64::new(c, 0.0));
                j.set(p, q, C64::new(-s, 0.0));
                j.set(q, p, phase.conj() * s);
                j.set(q, q, phase.conj() * c);

                m = j.dagger().matmul(&m)?.matmul(&j)?;
                // The rotation zeroes the pivot analytically; make it exact.
                m.set(p, q, C64::new(0.0, 0.0));
                m.set(q, p, C64::new(0.0, 0.0));
                let dp = m.get(p, p).re;
                let dq = m.get(q, q).re;
                m.set(p, p, C64::new(dp, 0.0));
                m.set(q, q, C64::new(dq, 0.0));
                v = v.matmul(&j)?;
            }
        }
        sweeps += 1;
        converged = m.off_diag_frobenius() <= settings.off_diag_threshold;
    }
    if !converged {
        return Err(Error::NumericalFailure(format!(
            "Jacobi iteration did not converge within {} sweeps (off-diagonal {:.3e})",
            settings.max_sweeps,
            m.off_diag_frobenius()
        )));
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| m.get(i, i).re).collect();
    order.sort_by(|&i, &j| diag[j].partial_cmp(&diag[i]).expect("finite eigenvalues"));

    let eigenvalues: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| v.get(i, order[j]))?;
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
    })
}

/// Trace norm (sum of absolute eigenvalues) of a Hermitian matrix.
pub fn trace_norm(a: &ComplexMatrix) -> Result<f64> {
    trace_norm_with(a, &JacobiSettings::default())
}

/// Trace norm with explicit eigensolver settings.
pub fn trace_norm_with(a: &ComplexMatrix, settings: &JacobiSettings) -> Result<f64> {
    let spectrum = hermitian_eig_with(a, settings)?;
    Ok(spectrum.eigenvalues.iter().map(|l| l.abs()).sum())
}
