//! Quantum-state representations and structural maps: pure states, density
//! matrices, the generalized product state, partial trace, partial transpose,
//! and the incoherent / maximally-coherent classifiers.
//!
//! Subsystem indexing convention, fixed once for the whole crate: the
//! two-mass basis is {|LL⟩, |LR⟩, |RL⟩, |RR⟩} with subsystem A as the
//! high-order index, so global index = 2·i_A + i_B.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix};
use crate::tol;

/// One of the two masses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Reference basis a pure state is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// Single-mass basis {|L⟩, |R⟩}.
    Single,
    /// Two-mass basis {|LL⟩, |LR⟩, |RL⟩, |RR⟩}.
    Joint,
}

impl Basis {
    pub fn dim(self) -> usize {
        match self {
            Basis::Single => 2,
            Basis::Joint => 4,
        }
    }
}

/// Normalized pure state over one of the two reference bases.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    basis: Basis,
    amplitudes: Vec<C64>,
}

impl PureState {
    /// Validates finiteness and normalization (`Σ|a|² = 1` within
    /// [`tol::STATE_NORM`]).
    pub fn new(basis: Basis, amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.len() != basis.dim() {
            return Err(Error::invalid(format!(
                "amplitude count {} does not match basis dimension {}",
                amplitudes.len(),
                basis.dim()
            )));
        }
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::invalid("non-finite amplitude"));
        }
        let norm_sq: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > tol::STATE_NORM {
            return Err(Error::invalid(format!(
                "state is not normalized: Σ|a|² = {norm_sq}"
            )));
        }
        Ok(PureState { basis, amplitudes })
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }
}

/// Hermitian, unit-trace, positive-semidefinite matrix over the fixed basis.
///
/// All three properties are checked on construction, so a value of this type
/// is always a valid state.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        if !mat.is_square() || !(mat.rows() == 2 || mat.rows() == 4) {
            return Err(Error::invalid(format!(
                "density matrix must be 2x2 or 4x4, got {}x{}",
                mat.rows(),
                mat.cols()
            )));
        }
        let herm = mat.hermiticity_residual();
        if herm > tol::DENSITY_RESIDUAL {
            return Err(Error::invalid(format!(
                "density matrix is not Hermitian: residual {herm:.3e}"
            )));
        }
        let tr = mat.trace();
        if (tr.re - 1.0).abs() > tol::DENSITY_RESIDUAL || tr.im.abs() > tol::DENSITY_RESIDUAL {
            return Err(Error::invalid(format!(
                "density matrix trace is {tr}, expected 1"
            )));
        }
        let spectrum = hermitian_eig(&mat)?;
        if let Some(&min) = spectrum
            .eigenvalues
            .iter()
            .min_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"))
        {
            if min < -tol::EIG_CLIP {
                return Err(Error::invalid(format!(
                    "density matrix has negative eigenvalue {min:.3e}"
                )));
            }
        }
        Ok(DensityMatrix { mat })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    /// The dephased state: off-diagonal entries dropped, diagonal kept.
    pub fn diagonal_part(&self) -> DensityMatrix {
        let n = self.dim();
        let mat = ComplexMatrix::from_fn(n, n, |i, j| {
            if i == j {
                C64::new(self.mat.get(i, i).re, 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        })
        .expect("finite diagonal");
        DensityMatrix { mat }
    }

    /// Purity defect `max |(ρ²)_ij - ρ_ij|`; zero for pure states.
    pub fn purity_defect(&self) -> f64 {
        let sq = self.mat.matmul(&self.mat).expect("square");
        sq.max_abs_diff(&self.mat)
    }
}

/// Amplitude weights of the generalized initial product state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductStateParams {
    p_a: f64,
    p_b: f64,
}

impl ProductStateParams {
    pub fn new(p_a: f64, p_b: f64) -> Result<Self> {
        for (name, p) in [("p_a", p_a), ("p_b", p_b)] {
            if !p.is_finite() || !(0.0..=1.0).contains(&p) {
                return Err(Error::invalid(format!("{name} = {p} is outside [0, 1]")));
            }
        }
        Ok(ProductStateParams { p_a, p_b })
    }

    /// The uniform superposition on both masses.
    pub fn maximally_coherent() -> Self {
        ProductStateParams { p_a: 0.5, p_b: 0.5 }
    }

    pub fn p_a(&self) -> f64 {
        self.p_a
    }

    pub fn p_b(&self) -> f64 {
        self.p_b
    }
}

/// The four non-negative joint amplitudes of a product state:
/// `M_LL = √(p_A p_B)` and companions. By construction they are normalized
/// and satisfy the product factorization `M_LL·M_RR = M_LR·M_RL`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudeSet {
    pub m_ll: f64,
    pub m_lr: f64,
    pub m_rl: f64,
    pub m_rr: f64,
}

impl AmplitudeSet {
    pub fn from_params(params: &ProductStateParams) -> Self {
        let (pa, pb) = (params.p_a(), params.p_b());
        AmplitudeSet {
            m_ll: (pa * pb).sqrt(),
            m_lr: (pa * (1.0 - pb)).sqrt(),
            m_rl: ((1.0 - pa) * pb).sqrt(),
            m_rr: ((1.0 - pa) * (1.0 - pb)).sqrt(),
        }
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.m_ll, self.m_lr, self.m_rl, self.m_rr]
    }

    /// `|Σ M² - 1|`, bounded by [`tol::AMPLITUDE_RESIDUAL`].
    pub fn norm_residual(&self) -> f64 {
        let s: f64 = self.as_array().iter().map(|m| m * m).sum();
        (s - 1.0).abs()
    }

    /// `|M_LL·M_RR - M_LR·M_RL|`, bounded by [`tol::AMPLITUDE_RESIDUAL`].
    pub fn factorization_residual(&self) -> f64 {
        (self.m_ll * self.m_rr - self.m_lr * self.m_rl).abs()
    }
}

/// Outer product `|ψ⟩⟨ψ|` of a normalized pure state.
pub fn pure_to_density(psi: &PureState) -> DensityMatrix {
    let n = psi.dim();
    let amps = psi.amplitudes();
    let mat =
        ComplexMatrix::from_fn(n, n, |i, j| amps[i] * amps[j].conj()).expect("finite amplitudes");
    DensityMatrix::new(mat).expect("outer product of a normalized state is a valid density matrix")
}

/// Builds the joint pure product state with amplitudes
/// `(M_LL, M_LR, M_RL, M_RR)` from the given weights.
pub fn build_product_state(params: &ProductStateParams) -> PureState {
    let m = AmplitudeSet::from_params(params);
    let amplitudes = m.as_array().iter().map(|&x| C64::new(x, 0.0)).collect();
    PureState::new(Basis::Joint, amplitudes).expect("product amplitudes are normalized")
}

/// Traces out the complement of `keep`, producing the 2x2 reduced state.
pub fn partial_trace(rho: &DensityMatrix, keep: Subsystem) -> Result<DensityMatrix> {
    if rho.dim() != 4 {
        return Err(Error::invalid(format!(
            "partial trace needs a 4x4 state, got dimension {}",
            rho.dim()
        )));
    }
    let m = rho.matrix();
    let reduced = match keep {
        Subsystem::A => ComplexMatrix::from_fn(2, 2, |i, j| {
            m.get(2 * i, 2 * j) + m.get(2 * i + 1, 2 * j + 1)
        }),
        Subsystem::B => ComplexMatrix::from_fn(2, 2, |i, j| m.get(i, j) + m.get(2 + i, 2 + j)),
    }?;
    DensityMatrix::new(reduced)
}

/// Partial transpose of an arbitrary 4x4 matrix over one subsystem's index.
///
/// For `on = A`: entry `((i,k),(j,l)) ↦ ((j,k),(i,l))`. This is a pure entry
/// permutation, so applying it twice returns the input bitwise.
pub fn partial_transpose_matrix(m: &ComplexMatrix, on: Subsystem) -> Result<ComplexMatrix> {
    if m.rows() != 4 || m.cols() != 4 {
        return Err(Error::invalid(format!(
            "partial transpose needs a 4x4 matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    ComplexMatrix::from_fn(4, 4, |row, col| {
        let (i, k) = (row / 2, row % 2);
        let (j, l) = (col / 2, col % 2);
        match on {
            Subsystem::A => m.get(2 * j + k, 2 * i + l),
            Subsystem::B => m.get(2 * i + l, 2 * j + k),
        }
    })
}

/// Partial transpose of a two-mass density matrix; the result is Hermitian
/// with unit trace but may fail positivity, which is exactly what the
/// negativity detects.
pub fn partial_transpose(rho: &DensityMatrix, on: Subsystem) -> Result<ComplexMatrix> {
    if rho.dim() != 4 {
        return Err(Error::invalid(format!(
            "partial transpose needs a 4x4 state, got dimension {}",
            rho.dim()
        )));
    }
    partial_transpose_matrix(rho.matrix(), on)
}

/// True iff the state is diagonal in the reference basis
/// (every off-diagonal modulus at most [`tol::INCOHERENCE`]).
pub fn is_incoherent_state(rho: &DensityMatrix) -> bool {
    rho.matrix().max_off_diag_modulus() <= tol::INCOHERENCE
}

/// True iff every amplitude has modulus `1/√d` within [`tol::MAX_COHERENT`].
pub fn is_maximally_coherent(psi: &PureState) -> bool {
    let target = 1.0 / (psi.dim() as f64).sqrt();
    psi.amplitudes()
        .iter()
        .all(|a| (a.norm() - target).abs() <= tol::MAX_COHERENT)
}
