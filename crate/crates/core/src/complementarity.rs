//! The coherence–entanglement complementarity checks and the parameter
//! sweeps behind the figure data.
//!
//! For the evolved product-state family the three sums
//!
//! * `C_l1²(ρ_A) + N²(ρ_AB)`
//! * `C_l1²(ρ_A) + 𝒞²(ρ_AB)`
//! * `C_r(ρ_A) + E(ρ_AB)`
//!
//! are bounded by 1 and saturate exactly when the initial local states are
//! maximally coherent. The concurrence entering the second sum is computed
//! from the spin-flip spectrum, never substituted by the negativity, so the
//! second relation stays an independent check.

use crate::error::{Error, Result};
use crate::grav::{build_unitary, evolve, PhaseSet};
use crate::measures::{
    concurrence, entanglement_entropy, l1_coherence, negativity, relative_entropy_coherence,
    MeasureSet,
};
use crate::state::{
    build_product_state, partial_trace, pure_to_density, ProductStateParams, Subsystem,
};
use crate::tol;

/// The three complementarity relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `C_l1²(ρ_A) + N²(ρ_AB) ≤ 1`
    L1NegSquared,
    /// `C_l1²(ρ_A) + 𝒞²(ρ_AB) ≤ 1`
    L1ConcSquared,
    /// `C_r(ρ_A) + E(ρ_AB) ≤ 1`
    RelEntPlusEnt,
}

impl Relation {
    pub const ALL: [Relation; 3] = [
        Relation::L1NegSquared,
        Relation::L1ConcSquared,
        Relation::RelEntPlusEnt,
    ];

    /// Stable identifier used in emitted artifacts.
    pub fn name(self) -> &'static str {
        match self {
            Relation::L1NegSquared => "l1_neg_squared",
            Relation::L1ConcSquared => "l1_conc_squared",
            Relation::RelEntPlusEnt => "rel_ent_plus_ent",
        }
    }
}

/// Outcome of checking one relation at one parameter point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplementarityReport {
    pub relation: Relation,
    pub lhs_value: f64,
    /// Always 1 for this family.
    pub bound: f64,
    /// `lhs_value - bound`; at most ~1e-15 above zero for valid inputs.
    pub residual: f64,
    /// `|residual| ≤` [`tol::SATURATION`].
    pub saturated: bool,
}

impl ComplementarityReport {
    fn new(relation: Relation, lhs_value: f64) -> Self {
        let residual = lhs_value - 1.0;
        ComplementarityReport {
            relation,
            lhs_value,
            bound: 1.0,
            residual,
            saturated: residual.abs() <= tol::SATURATION,
        }
    }
}

/// One evaluated grid point: inputs, all measures, and the three reports.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub dphi_lr: f64,
    pub dphi_rl: f64,
    pub p_a: f64,
    pub p_b: f64,
    pub measures: MeasureSet,
    pub reports: [ComplementarityReport; 3],
}

/// Builds the product state, evolves it, and computes every measure and
/// relation at a single parameter point.
pub fn evaluate_point(params: &ProductStateParams, phases: &PhaseSet) -> Result<SweepRecord> {
    let rho0 = pure_to_density(&build_product_state(params));
    let rho = evolve(&rho0, &build_unitary(phases))?;
    let rho_a = partial_trace(&rho, Subsystem::A)?;

    let measures = MeasureSet {
        c_l1_local: l1_coherence(&rho_a),
        c_rel_local: relative_entropy_coherence(&rho_a)?,
        negativity: negativity(&rho)?,
        concurrence: concurrence(&rho)?,
        ent_entropy: entanglement_entropy(&rho)?,
    };

    let reports = [
        ComplementarityReport::new(
            Relation::L1NegSquared,
            measures.c_l1_local.powi(2) + measures.negativity.powi(2),
        ),
        ComplementarityReport::new(
            Relation::L1ConcSquared,
            measures.c_l1_local.powi(2) + measures.concurrence.powi(2),
        ),
        ComplementarityReport::new(
            Relation::RelEntPlusEnt,
            measures.c_rel_local + measures.ent_entropy,
        ),
    ];

    Ok(SweepRecord {
        dphi_lr: phases.dphi_lr(),
        dphi_rl: phases.dphi_rl(),
        p_a: params.p_a(),
        p_b: params.p_b(),
        measures,
        reports,
    })
}

/// Evaluates the three relations at one point.
pub fn check_relations(
    params: &ProductStateParams,
    phases: &PhaseSet,
) -> Result<Vec<ComplementarityReport>> {
    Ok(evaluate_point(params, phases)?.reports.to_vec())
}

/// Sweeps the phase differences over `grid_lr × grid_rl` (row-major) at a
/// fixed initial state.
pub fn sweep_phases(
    grid_lr: &[f64],
    grid_rl: &[f64],
    params: &ProductStateParams,
) -> Result<Vec<SweepRecord>> {
    if grid_lr.is_empty() || grid_rl.is_empty() {
        return Err(Error::invalid("phase grid must not be empty"));
    }
    for &v in grid_lr.iter().chain(grid_rl.iter()) {
        if !v.is_finite() {
            return Err(Error::invalid("non-finite phase grid value"));
        }
    }
    let mut records = Vec::with_capacity(grid_lr.len() * grid_rl.len());
    for &dlr in grid_lr {
        for &drl in grid_rl {
            records.push(evaluate_point(params, &PhaseSet::from_deltas(dlr, drl)?)?);
        }
    }
    Ok(records)
}

/// Sweeps the initial-state weights over `grid_pa × grid_pb` (row-major) at
/// fixed phases.
pub fn sweep_initial_coherence(
    grid_pa: &[f64],
    grid_pb: &[f64],
    phases: &PhaseSet,
) -> Result<Vec<SweepRecord>> {
    if grid_pa.is_empty() || grid_pb.is_empty() {
        return Err(Error::invalid("initial-coherence grid must not be empty"));
    }
    for &v in grid_pa.iter().chain(grid_pb.iter()) {
        if !v.is_finite() || !(0.0..=1.0).contains(&v) {
            return Err(Error::invalid(format!(
                "initial-coherence grid value {v} is outside [0, 1]"
            )));
        }
    }
    let mut records = Vec::with_capacity(grid_pa.len() * grid_pb.len());
    for &pa in grid_pa {
        for &pb in grid_pb {
            records.push(evaluate_point(&ProductStateParams::new(pa, pb)?, phases)?);
        }
    }
    Ok(records)
}

/// `count` evenly spaced values from `start` to `stop` inclusive
/// (`count = 1` yields just `start`).
pub fn linspace(start: f64, stop: f64, count: usize) -> Vec<f64> {
    assert!(count >= 1, "linspace needs at least one point");
    if count == 1 {
        return vec![start];
    }
    let step = (stop - start) / (count - 1) as f64;
    (0..count).map(|i| start + step * i as f64).collect()
}
