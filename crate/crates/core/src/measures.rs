//! Coherence and entanglement quantifiers: l1-norm of coherence, relative
//! entropy of coherence, von Neumann entropy, binary entropy, negativity,
//! concurrence and entanglement entropy.
//!
//! Entropies are in bits (log base 2) throughout; the entropic
//! complementarity identity sums to exactly 1 only in bits.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, trace_norm, ComplexMatrix};
use crate::state::{partial_trace, partial_transpose, DensityMatrix, Subsystem};
use crate::tol;

/// The quantifiers this crate computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureKind {
    L1Coherence,
    RelEntCoherence,
    VonNeumann,
    Negativity,
    Concurrence,
    EntEntropy,
}

impl MeasureKind {
    /// Upper bound of the measure on a `dim`-dimensional state
    /// (entanglement measures assume two qubits).
    pub fn upper_bound(self, dim: usize) -> f64 {
        match self {
            MeasureKind::L1Coherence => dim as f64 - 1.0,
            MeasureKind::RelEntCoherence | MeasureKind::VonNeumann | MeasureKind::EntEntropy => {
                (dim as f64).log2()
            }
            MeasureKind::Negativity | MeasureKind::Concurrence => 1.0,
        }
    }
}

/// A named quantifier value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureValue {
    pub kind: MeasureKind,
    pub value: f64,
}

impl MeasureValue {
    /// Checks `value ∈ [-1e-10, bound(dim) + 1e-10]`.
    pub fn within_bounds(&self, dim: usize) -> bool {
        self.value >= -tol::EIG_CLIP && self.value <= self.kind.upper_bound(dim) + tol::EIG_CLIP
    }
}

/// The five per-point quantifiers reported by sweeps: local coherences of
/// mass A plus the bipartite entanglement measures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureSet {
    pub c_l1_local: f64,
    pub c_rel_local: f64,
    pub negativity: f64,
    pub concurrence: f64,
    pub ent_entropy: f64,
}

impl MeasureSet {
    /// The values as named entries, in fixed report order.
    pub fn values(&self) -> [MeasureValue; 5] {
        [
            MeasureValue {
                kind: MeasureKind::L1Coherence,
                value: self.c_l1_local,
            },
            MeasureValue {
                kind: MeasureKind::RelEntCoherence,
                value: self.c_rel_local,
            },
            MeasureValue {
                kind: MeasureKind::Negativity,
                value: self.negativity,
            },
            MeasureValue {
                kind: MeasureKind::Concurrence,
                value: self.concurrence,
            },
            MeasureValue {
                kind: MeasureKind::EntEntropy,
                value: self.ent_entropy,
            },
        ]
    }
}

/// Sum of the moduli of all off-diagonal entries.
pub fn l1_coherence(rho: &DensityMatrix) -> f64 {
    let m = rho.matrix();
    let mut sum = 0.0;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if i != j {
                sum += m.get(i, j).norm();
            }
        }
    }
    sum
}

/// Applies the eigenvalue clip rule: values in `[-EIG_CLIP, 0)` become 0,
/// anything more negative is an invalid state.
fn clipped(eigenvalue: f64) -> Result<f64> {
    if eigenvalue < -tol::EIG_CLIP {
        return Err(Error::invalid(format!(
            "eigenvalue {eigenvalue:.3e} is below the clip window"
        )));
    }
    Ok(eigenvalue.max(0.0))
}

fn entropy_bits(eigenvalues: &[f64]) -> Result<f64> {
    let mut s = 0.0;
    for &l in eigenvalues {
        let l = clipped(l)?;
        if l > 0.0 {
            s -= l * l.log2();
        }
    }
    Ok(s)
}

/// Von Neumann entropy `S(ρ) = -Tr ρ log₂ ρ` via eigendecomposition.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let spectrum = hermitian_eig(rho.matrix())?;
    entropy_bits(&spectrum.eigenvalues)
}

/// Relative entropy of coherence `C_r(ρ) = S(ρ_diag) - S(ρ)`.
pub fn relative_entropy_coherence(rho: &DensityMatrix) -> Result<f64> {
    let diag = rho.diagonal_part();
    Ok(von_neumann_entropy(&diag)? - von_neumann_entropy(rho)?)
}

/// Binary Shannon entropy `H₂(x) = -x log₂ x - (1-x) log₂(1-x)` in bits,
/// with `H₂(0) = H₂(1) = 0`.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !x.is_finite() || !(0.0..=1.0).contains(&x) {
        return Err(Error::invalid(format!("H2 argument {x} is outside [0, 1]")));
    }
    let mut s = 0.0;
    for y in [x, 1.0 - x] {
        if y > 0.0 {
            s -= y * y.log2();
        }
    }
    Ok(s)
}

/// Negativity `N(ρ) = ‖ρ^{T_A}‖₁ - 1`.
///
/// Values with `|N|` at most [`tol::NEGATIVITY_FLOOR`] snap to exactly 0 so
/// PPT separable states report zero rather than eigensolver fuzz.
pub fn negativity(rho: &DensityMatrix) -> Result<f64> {
    let pt = partial_transpose(rho, Subsystem::A)?;
    let n = trace_norm(&pt)? - 1.0;
    Ok(if n.abs() <= tol::NEGATIVITY_FLOOR {
        0.0
    } else {
        n
    })
}

/// Two-level antisymmetric spin flip σ_y.
fn spin_flip() -> ComplexMatrix {
    ComplexMatrix::from_vec(
        2,
        2,
        vec![
            C64::new(0.0, 0.0),
            C64::new(0.0, -1.0),
            C64::new(0.0, 1.0),
            C64::new(0.0, 0.0),
        ],
    )
    .expect("static matrix")
}

/// Hermitian square root `√ρ = V √Λ V†`.
fn sqrt_psd(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    let spectrum = hermitian_eig(rho.matrix())?;
    let roots: Vec<C64> = spectrum
        .eigenvalues
        .iter()
        .map(|&l| clipped(l).map(|v| C64::new(v.sqrt(), 0.0)))
        .collect::<Result<_>>()?;
    let diag = ComplexMatrix::from_diagonal(&roots)?;
    spectrum
        .eigenvectors
        .matmul(&diag)?
        .matmul(&spectrum.eigenvectors.dagger())
}

/// Two-qubit concurrence from the spin-flip spectrum.
///
/// Computes the descending square-rooted eigenvalues λᵢ of
/// `ρ (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)` through the Hermitian form
/// `√ρ ρ̃ √ρ` (same spectrum, solvable by the Jacobi eigensolver) and
/// returns `max(0, λ₁-λ₂-λ₃-λ₄)`. Spectrum entries below
/// [`tol::CONCURRENCE_EIG_CLIP`] are zeroed before the square root;
/// without the clip, O(1e-15) eigensolver fuzz would surface as O(1e-8)
/// error in the λᵢ.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::invalid(format!(
            "concurrence needs a 4x4 state, got dimension {}",
            rho.dim()
        )));
    }
    let yy = spin_flip().kron(&spin_flip());
    let rho_tilde = yy.matmul(&rho.matrix().conjugate())?.matmul(&yy)?;
    let root = sqrt_psd(rho)?;
    let m = root.matmul(&rho_tilde)?.matmul(&root)?;
    let spectrum = hermitian_eig(&m)?;
    let mut lambdas: Vec<f64> = spectrum
        .eigenvalues
        .iter()
        .map(|&mu| {
            if mu < -tol::EIG_CLIP {
                Err(Error::invalid(format!(
                    "spin-flip spectrum value {mu:.3e} is below the clip window"
                )))
            } else if mu <= tol::CONCURRENCE_EIG_CLIP {
                Ok(0.0)
            } else {
                Ok(mu.sqrt())
            }
        })
        .collect::<Result<_>>()?;
    lambdas.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
    Ok((lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0))
}

/// Entanglement entropy `E(ρ_AB) = S(ρ_A)` of a pure two-mass state.
///
/// Rejects mixed input (purity defect above [`tol::PURITY`]); the reduced
/// entropy is an entanglement measure only for pure global states.
pub fn entanglement_entropy(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::invalid(format!(
            "entanglement entropy needs a 4x4 state, got dimension {}",
            rho.dim()
        )));
    }
    let defect = rho.purity_defect();
    if defect > tol::PURITY {
        return Err(Error::invalid(format!(
            "entanglement entropy needs a pure state; purity defect {defect:.3e}"
        )));
    }
    von_neumann_entropy(&partial_trace(rho, Subsystem::A)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grav::{build_unitary, evolve, PhaseSet};
    use crate::state::{build_product_state, pure_to_density, ProductStateParams};
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn evolved_uniform(dlr: f64, drl: f64) -> DensityMatrix {
        let rho0 = pure_to_density(&build_product_state(
            &ProductStateParams::maximally_coherent(),
        ));
        evolve(
            &rho0,
            &build_unitary(&PhaseSet::from_deltas(dlr, drl).unwrap()),
        )
        .unwrap()
    }

    fn reduced_a(rho: &DensityMatrix) -> DensityMatrix {
        partial_trace(rho, Subsystem::A).unwrap()
    }

    #[test]
    fn l1_of_uniform_state_is_three() {
        let rho = pure_to_density(&build_product_state(
            &ProductStateParams::maximally_coherent(),
        ));
        assert!((l1_coherence(&rho) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn l1_of_reduced_state_matches_cosine_closed_form() {
        for (dlr, drl) in [(0.0, 0.0), (0.7, 1.1), (2.0, 4.5), (PI, 0.0)] {
            let rho_a = reduced_a(&evolved_uniform(dlr, drl));
            let expected = (0.5 * (dlr + drl)).cos().abs();
            assert!((l1_coherence(&rho_a) - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn l1_of_diagonal_state_is_zero() {
        let rho =
            DensityMatrix::new(ComplexMatrix::from_diagonal(&[c(0.7, 0.0), c(0.3, 0.0)]).unwrap())
                .unwrap();
        assert_eq!(l1_coherence(&rho), 0.0);
    }

    #[test]
    fn entropy_of_pure_and_maximally_mixed_qubits() {
        let pure =
            DensityMatrix::new(ComplexMatrix::from_diagonal(&[c(1.0, 0.0), c(0.0, 0.0)]).unwrap())
                .unwrap();
        assert!(von_neumann_entropy(&pure).unwrap().abs() < 1e-12);

        let mixed =
            DensityMatrix::new(ComplexMatrix::from_diagonal(&[c(0.5, 0.0), c(0.5, 0.0)]).unwrap())
                .unwrap();
        assert!((von_neumann_entropy(&mixed).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn entropy_of_reduced_state_at_cos_one_half() {
        // Phase sum 2π/3 gives c = cos(π/3) = 1/2 and S = H₂(3/4).
        let sum = 2.0 * PI / 3.0;
        let rho_a = reduced_a(&evolved_uniform(0.25 * sum, 0.75 * sum));
        let s = von_neumann_entropy(&rho_a).unwrap();
        assert!((s - 0.8112781244591328).abs() < 1e-12, "S = {s}");
    }

    #[test]
    fn relative_entropy_coherence_examples() {
        let diag =
            DensityMatrix::new(ComplexMatrix::from_diagonal(&[c(0.2, 0.0), c(0.8, 0.0)]).unwrap())
                .unwrap();
        assert!(relative_entropy_coherence(&diag).unwrap().abs() < 1e-12);

        // c = 1 at phase sum 0: C_r = 1 - H₂(1) = 1.
        let rho_a = reduced_a(&evolved_uniform(0.0, 0.0));
        assert!((relative_entropy_coherence(&rho_a).unwrap() - 1.0).abs() < 1e-12);

        // c = 0 at phase sum π: C_r = 1 - H₂(1/2) = 0.
        let rho_a = reduced_a(&evolved_uniform(0.5 * PI, 0.5 * PI));
        assert!(relative_entropy_coherence(&rho_a).unwrap().abs() < 1e-12);
    }

    #[test]
    fn binary_entropy_values() {
        assert!((binary_entropy(0.5).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        assert!((binary_entropy(0.75).unwrap() - 0.8112781244591328).abs() < 1e-15);
        assert!(matches!(binary_entropy(-0.1), Err(Error::InvalidInput(_))));
        assert!(matches!(binary_entropy(1.1), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn negativity_peaks_at_phase_sum_pi() {
        let n = negativity(&evolved_uniform(0.5 * PI, 0.5 * PI)).unwrap();
        assert!((n - 1.0).abs() < 1e-12);
    }

    #[test]
    fn negativity_of_product_states_is_exactly_zero() {
        for (pa, pb) in [(0.5, 0.5), (0.3, 0.7), (0.0, 0.4), (1.0, 1.0)] {
            let rho = pure_to_density(&build_product_state(
                &ProductStateParams::new(pa, pb).unwrap(),
            ));
            assert_eq!(negativity(&rho).unwrap(), 0.0);
        }
    }

    #[test]
    fn generalized_negativity_matches_closed_form_value() {
        // p_A = 1/4, p_B = 1/2, phase sum π: N = 4√(p_A p_B (1-p_A)(1-p_B)) = √3/2.
        let rho0 = pure_to_density(&build_product_state(
            &ProductStateParams::new(0.25, 0.5).unwrap(),
        ));
        let u = build_unitary(&PhaseSet::from_deltas(0.5 * PI, 0.5 * PI).unwrap());
        let rho = evolve(&rho0, &u).unwrap();
        let n = negativity(&rho).unwrap();
        assert!((n - 0.8660254037844386).abs() < 1e-12, "N = {n}");
    }

    #[test]
    fn concurrence_examples() {
        let product = pure_to_density(&build_product_state(
            &ProductStateParams::new(0.3, 0.7).unwrap(),
        ));
        assert_eq!(concurrence(&product).unwrap(), 0.0);

        let bell_like = evolved_uniform(0.5 * PI, 0.5 * PI);
        assert!((concurrence(&bell_like).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn concurrence_equals_negativity_on_the_evolved_family() {
        for k in 0..50 {
            let dlr = 2.0 * PI * (k as f64) / 49.0;
            let drl = 0.6 * dlr + 0.3;
            let rho = evolved_uniform(dlr, drl);
            let n = negativity(&rho).unwrap();
            let cc = concurrence(&rho).unwrap();
            assert!(
                (n - cc).abs() <= 1e-9,
                "phases ({dlr}, {drl}): N={n}, C={cc}"
            );
        }
    }

    #[test]
    fn entanglement_entropy_examples() {
        let product = pure_to_density(&build_product_state(
            &ProductStateParams::new(0.2, 0.9).unwrap(),
        ));
        assert!(entanglement_entropy(&product).unwrap().abs() < 1e-10);

        let e = entanglement_entropy(&evolved_uniform(0.5 * PI, 0.5 * PI)).unwrap();
        assert!((e - 1.0).abs() < 1e-10);

        // Phase sum π/2: E = H₂((1 + cos(π/4))/2).
        let e = entanglement_entropy(&evolved_uniform(0.25 * PI, 0.25 * PI)).unwrap();
        assert!((e - 0.6008760366928562).abs() < 1e-10, "E = {e}");
    }

    #[test]
    fn entanglement_entropy_rejects_mixed_states() {
        let mixed =
            DensityMatrix::new(ComplexMatrix::from_diagonal(&[c(0.25, 0.0); 4]).unwrap()).unwrap();
        assert!(matches!(
            entanglement_entropy(&mixed),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn reduced_entropies_of_both_subsystems_agree() {
        for (dlr, drl) in [(0.4, 1.9), (2.7, 0.3), (5.5, 5.0)] {
            let rho = evolved_uniform(dlr, drl);
            let sa = von_neumann_entropy(&partial_trace(&rho, Subsystem::A).unwrap()).unwrap();
            let sb = von_neumann_entropy(&partial_trace(&rho, Subsystem::B).unwrap()).unwrap();
            assert!((sa - sb).abs() <= 1e-10);
        }
    }

    #[test]
    fn local_coherence_and_entropy_sum_to_diagonal_entropy() {
        // For the uniform evolved reduced state the diagonal is (1/2, 1/2).
        for (dlr, drl) in [(0.3, 0.9), (1.6, 2.2)] {
            let rho_a = reduced_a(&evolved_uniform(dlr, drl));
            let total =
                relative_entropy_coherence(&rho_a).unwrap() + von_neumann_entropy(&rho_a).unwrap();
            assert!((total - 1.0).abs() <= 1e-10);
        }
    }

    #[test]
    fn measure_bounds_hold_on_sampled_states() {
        for (dlr, drl) in [(0.0, 0.0), (1.1, 0.7), (3.9, 2.2)] {
            let rho = evolved_uniform(dlr, drl);
            let values = [
                MeasureValue {
                    kind: MeasureKind::L1Coherence,
                    value: l1_coherence(&rho),
                },
                MeasureValue {
                    kind: MeasureKind::VonNeumann,
                    value: von_neumann_entropy(&rho).unwrap(),
                },
                MeasureValue {
                    kind: MeasureKind::Negativity,
                    value: negativity(&rho).unwrap(),
                },
                MeasureValue {
                    kind: MeasureKind::Concurrence,
                    value: concurrence(&rho).unwrap(),
                },
                MeasureValue {
                    kind: MeasureKind::EntEntropy,
                    value: entanglement_entropy(&rho).unwrap(),
                },
            ];
            for v in values {
                assert!(v.within_bounds(rho.dim()), "{:?}", v);
            }
        }
    }
}
