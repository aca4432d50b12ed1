//! Physical parameters to accumulated phases, the diagonal gravitational
//! unitary built from them, and unitary evolution of two-mass states.
//!
//! The branch phases are `φ = G m_A m_B τ / (h d)` with `d` replaced by
//! `d ∓ Δx` for the RL / LR branches. Only the differences
//! `Δφ_LR = φ_LR - φ` and `Δφ_RL = φ_RL - φ` enter any measure; the common
//! factor is a global phase. The unitary is built in the gauge where the
//! |LL⟩ and |RR⟩ entries both carry `e^{iφ}`, and a property test pins the
//! gauge invariance of every measure.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::state::DensityMatrix;
use crate::tol;

/// CODATA gravitational constant, m³ kg⁻¹ s⁻².
pub const GRAVITATIONAL_CONSTANT: f64 = 6.674_30e-11;
/// Planck constant h (not ħ), J s. Substitute ħ here if preferred; only
/// the overall phase scale changes.
pub const PLANCK_CONSTANT: f64 = 6.626_070_15e-34;

/// Masses, geometry and interaction time of the two-mass setup.
///
/// Requires `d > Δx` so the closest branch separation stays positive;
/// `τ = 0` is allowed and produces zero phases.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConfig {
    pub m_a: f64,
    pub m_b: f64,
    pub d: f64,
    pub delta_x: f64,
    pub tau: f64,
    pub g: f64,
    pub h: f64,
}

impl PhysicalConfig {
    pub fn new(m_a: f64, m_b: f64, d: f64, delta_x: f64, tau: f64, g: f64, h: f64) -> Result<Self> {
        for (name, v) in [
            ("mA", m_a),
            ("mB", m_b),
            ("d", d),
            ("deltaX", delta_x),
            ("G", g),
            ("h", h),
        ] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::invalid(format!("{name} = {v} must be positive")));
            }
        }
        if !tau.is_finite() || tau < 0.0 {
            return Err(Error::invalid(format!("tau = {tau} must be non-negative")));
        }
        if d <= delta_x {
            return Err(Error::invalid(format!(
                "d = {d} must exceed deltaX = {delta_x}; the branch separation d - deltaX collapses"
            )));
        }
        Ok(PhysicalConfig {
            m_a,
            m_b,
            d,
            delta_x,
            tau,
            g,
            h,
        })
    }
}

/// The accumulated branch phases and their differences.
///
/// `dphi_lr = phi_lr - phi` and `dphi_rl = phi_rl - phi` hold exactly by
/// construction. Physically generated sets additionally satisfy
/// `dphi_rl ≥ 0 ≥ dphi_lr`; explicitly supplied sets may be anything.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseSet {
    phi: f64,
    phi_lr: f64,
    phi_rl: f64,
    dphi_lr: f64,
    dphi_rl: f64,
}

impl PhaseSet {
    pub fn new(phi: f64, phi_lr: f64, phi_rl: f64) -> Result<Self> {
        for (name, v) in [("phi", phi), ("phiLR", phi_lr), ("phiRL", phi_rl)] {
            if !v.is_finite() {
                return Err(Error::invalid(format!("{name} = {v} is not finite")));
            }
        }
        Ok(PhaseSet {
            phi,
            phi_lr,
            phi_rl,
            dphi_lr: phi_lr - phi,
            dphi_rl: phi_rl - phi,
        })
    }

    /// Phase set in the `φ = 0` gauge from explicit differences.
    pub fn from_deltas(dphi_lr: f64, dphi_rl: f64) -> Result<Self> {
        PhaseSet::new(0.0, dphi_lr, dphi_rl)
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn phi_lr(&self) -> f64 {
        self.phi_lr
    }

    pub fn phi_rl(&self) -> f64 {
        self.phi_rl
    }

    pub fn dphi_lr(&self) -> f64 {
        self.dphi_lr
    }

    pub fn dphi_rl(&self) -> f64 {
        self.dphi_rl
    }

    /// Total accumulated phase `Δφ_LR + Δφ_RL` that drives every closed form.
    pub fn delta_sum(&self) -> f64 {
        self.dphi_lr + self.dphi_rl
    }
}

/// Evaluates the branch phases from physical parameters.
pub fn compute_phases(cfg: &PhysicalConfig) -> Result<PhaseSet> {
    let action = cfg.g * cfg.m_a * cfg.m_b * cfg.tau / cfg.h;
    let phi = action / cfg.d;
    let phi_rl = action / (cfg.d - cfg.delta_x);
    let phi_lr = action / (cfg.d + cfg.delta_x);
    if !phi.is_finite() || !phi_rl.is_finite() || !phi_lr.is_finite() {
        return Err(Error::invalid(
            "phase evaluation overflowed; rescale the physical parameters",
        ));
    }
    PhaseSet::new(phi, phi_lr, phi_rl)
}

/// The diagonal two-mass unitary `U_G = Σ e^{iφ_ij} |ij⟩⟨ij|` in the global
/// basis order {LL, LR, RL, RR}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GravUnitary {
    diagonal_phases: [f64; 4],
}

impl GravUnitary {
    pub fn diagonal_phases(&self) -> [f64; 4] {
        self.diagonal_phases
    }

    /// Dense matrix form; diagonal and unitary within [`tol::UNITARY_DIAG`].
    pub fn as_matrix(&self) -> ComplexMatrix {
        let diag: Vec<C64> = self
            .diagonal_phases
            .iter()
            .map(|&p| C64::from_polar(1.0, p))
            .collect();
        ComplexMatrix::from_diagonal(&diag).expect("finite phases")
    }
}

/// Builds `U_G` with diagonal phases `(φ, φ + Δφ_LR, φ + Δφ_RL, φ)`.
pub fn build_unitary(phases: &PhaseSet) -> GravUnitary {
    let phi = phases.phi();
    GravUnitary {
        diagonal_phases: [phi, phi + phases.dphi_lr(), phi + phases.dphi_rl(), phi],
    }
}

/// Conjugates the state by the unitary: `ρ ↦ U ρ U†`.
pub fn evolve(rho0: &DensityMatrix, u: &GravUnitary) -> Result<DensityMatrix> {
    if rho0.dim() != 4 {
        return Err(Error::invalid(format!(
            "evolution needs a 4x4 state, got dimension {}",
            rho0.dim()
        )));
    }
    let um = u.as_matrix();
    let evolved = um.matmul(rho0.matrix())?.matmul(&um.dagger())?;
    DensityMatrix::new(evolved)
}

/// True iff `u` is a phase-decorated permutation: exactly one nonzero entry
/// per row and per column, each of modulus 1.
///
/// Rejects inputs that are not unitary within [`tol::UNITARY_INPUT`].
pub fn is_incoherent_unitary(u: &ComplexMatrix) -> Result<bool> {
    if !u.is_square() {
        return Err(Error::invalid(format!(
            "unitarity check needs a square matrix, got {}x{}",
            u.rows(),
            u.cols()
        )));
    }
    let n = u.rows();
    let gram = u.dagger().matmul(u)?;
    let residual = gram.max_abs_diff(&ComplexMatrix::identity(n));
    if residual > tol::UNITARY_INPUT {
        return Err(Error::invalid(format!(
            "matrix is not unitary: residual {residual:.3e}"
        )));
    }

    let mut col_counts = vec![0usize; n];
    for i in 0..n {
        let mut row_count = 0;
        for (j, count) in col_counts.iter_mut().enumerate() {
            let modulus = u.get(i, j).norm();
            if modulus > tol::INCOHERENCE {
                if (modulus - 1.0).abs() > tol::MODULUS_ONE {
                    return Ok(false);
                }
                row_count += 1;
                *count += 1;
            }
        }
        if row_count != 1 {
            return Ok(false);
        }
    }
    Ok(col_counts.iter().all(|&c| c == 1))
}
