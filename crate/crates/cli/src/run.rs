//! Mode execution and artifact emission.
//!
//! Every mode produces rows with a fixed, documented column order; CSV cells
//! are rendered with Rust's shortest round-trip float formatting, so a
//! repeated run is byte-identical and every cell parses back exactly.

use std::io::Write;
use std::path::Path;

use gravent_core::{
    build_product_state, build_unitary, evaluate_point, evolve, pure_to_density, sweep_phases,
    ComplementarityReport, SweepRecord,
};
use serde::Serialize;

use crate::config::{CliError, CliResult, Format, Mode, PhaseSource, RunConfig};

/// Result of a successful run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    /// Verify mode only: a relation expected to saturate missed tolerance.
    VerificationFailed,
}

#[derive(Serialize)]
struct PhasesRow {
    phi: f64,
    phi_lr: f64,
    phi_rl: f64,
    dphi_lr: f64,
    dphi_rl: f64,
}

#[derive(Serialize)]
struct MatrixEntryRow {
    row: usize,
    col: usize,
    re: f64,
    im: f64,
}

#[derive(Serialize)]
struct MeasureRow {
    dphi_lr: f64,
    dphi_rl: f64,
    p_a: f64,
    p_b: f64,
    c_l1_local: f64,
    c_rel_local: f64,
    negativity: f64,
    concurrence: f64,
    ent_entropy: f64,
    sum_sq_l1_neg: f64,
    sum_rel_ent: f64,
}

#[derive(Serialize)]
struct VerifyRow {
    relation: &'static str,
    lhs_value: f64,
    bound: f64,
    residual: f64,
    saturated: bool,
}

impl MeasureRow {
    fn from_record(r: &SweepRecord) -> Self {
        MeasureRow {
            dphi_lr: r.dphi_lr,
            dphi_rl: r.dphi_rl,
            p_a: r.p_a,
            p_b: r.p_b,
            c_l1_local: r.measures.c_l1_local,
            c_rel_local: r.measures.c_rel_local,
            negativity: r.measures.negativity,
            concurrence: r.measures.concurrence,
            ent_entropy: r.measures.ent_entropy,
            sum_sq_l1_neg: r.reports[0].lhs_value,
            sum_rel_ent: r.reports[2].lhs_value,
        }
    }
}

/// One table of output cells plus its header.
struct Table {
    header: &'static [&'static str],
    rows: Vec<Vec<String>>,
    json_lines: Vec<String>,
}

fn f(v: f64) -> String {
    v.to_string()
}

impl Table {
    fn from_phases(rows: &[PhasesRow]) -> Table {
        Table {
            header: &["phi", "phi_lr", "phi_rl", "dphi_lr", "dphi_rl"],
            rows: rows
                .iter()
                .map(|r| {
                    vec![
                        f(r.phi),
                        f(r.phi_lr),
                        f(r.phi_rl),
                        f(r.dphi_lr),
                        f(r.dphi_rl),
                    ]
                })
                .collect(),
            json_lines: to_json_lines(rows),
        }
    }

    fn from_matrix_entries(rows: &[MatrixEntryRow]) -> Table {
        Table {
            header: &["row", "col", "re", "im"],
            rows: rows
                .iter()
                .map(|r| vec![r.row.to_string(), r.col.to_string(), f(r.re), f(r.im)])
                .collect(),
            json_lines: to_json_lines(rows),
        }
    }

    fn from_measures(rows: &[MeasureRow]) -> Table {
        Table {
            header: &[
                "dphi_lr",
                "dphi_rl",
                "p_a",
                "p_b",
                "c_l1_local",
                "c_rel_local",
                "negativity",
                "concurrence",
                "ent_entropy",
                "sum_sq_l1_neg",
                "sum_rel_ent",
            ],
            rows: rows
                .iter()
                .map(|r| {
                    vec![
                        f(r.dphi_lr),
                        f(r.dphi_rl),
                        f(r.p_a),
                        f(r.p_b),
                        f(r.c_l1_local),
                        f(r.c_rel_local),
                        f(r.negativity),
                        f(r.concurrence),
                        f(r.ent_entropy),
                        f(r.sum_sq_l1_neg),
                        f(r.sum_rel_ent),
                    ]
                })
                .collect(),
            json_lines: to_json_lines(rows),
        }
    }

    fn from_verify(rows: &[VerifyRow]) -> Table {
        Table {
            header: &["relation", "lhs_value", "bound", "residual", "saturated"],
            rows: rows
                .iter()
                .map(|r| {
                    vec![
                        r.relation.to_string(),
                        f(r.lhs_value),
                        f(r.bound),
                        f(r.residual),
                        r.saturated.to_string(),
                    ]
                })
                .collect(),
            json_lines: to_json_lines(rows),
        }
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut out = String::new();
                out.push_str(&self.header.join(","));
                out.push('\n');
                for row in &self.rows {
                    out.push_str(&row.join(","));
                    out.push('\n');
                }
                out
            }
            Format::Jsonl => {
                let mut out = String::new();
                for line in &self.json_lines {
                    out.push_str(line);
                    out.push('\n');
                }
                out
            }
        }
    }
}

fn to_json_lines<T: Serialize>(rows: &[T]) -> Vec<String> {
    rows.iter()
        .map(|r| serde_json::to_string(r).expect("flat row serializes"))
        .collect()
}

/// Writes the artifact atomically: temp file in the target directory, then
/// rename over the final path.
fn write_atomic(path: &Path, contents: &str) -> CliResult<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => std::path::PathBuf::from("."),
    };
    let io_err = |e: std::io::Error| CliError::Io(format!("cannot write {}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(&dir).map_err(io_err)?;
    tmp.write_all(contents.as_bytes()).map_err(io_err)?;
    tmp.flush().map_err(io_err)?;
    tmp.persist(path)
        .map_err(|e| CliError::Io(format!("cannot persist {}: {}", path.display(), e.error)))?;
    Ok(())
}

/// Phase set for state evolution, canonicalized to the `φ = 0` gauge.
///
/// Every emitted quantity is invariant under the global phase, so fixing
/// the gauge makes the physical-parameter path and the explicit-phase path
/// produce byte-identical artifacts. The `phases` mode is the one place the
/// raw `φ` itself is reported, and it bypasses this helper.
fn require_phases(config: &RunConfig) -> CliResult<gravent_core::PhaseSet> {
    let p = config
        .phase_source
        .as_ref()
        .expect("validated by build_config")
        .phase_set()?;
    Ok(gravent_core::PhaseSet::from_deltas(
        p.dphi_lr(),
        p.dphi_rl(),
    )?)
}

/// Runs the configured mode and writes its artifact.
pub fn execute(config: RunConfig) -> CliResult<Outcome> {
    let (table, outcome) = match config.mode {
        Mode::Phases => {
            let PhaseSource::Physical(ref cfg) = config.phase_source.as_ref().unwrap() else {
                unreachable!("validated by build_config");
            };
            let p = gravent_core::compute_phases(cfg)?;
            let rows = vec![PhasesRow {
                phi: p.phi(),
                phi_lr: p.phi_lr(),
                phi_rl: p.phi_rl(),
                dphi_lr: p.dphi_lr(),
                dphi_rl: p.dphi_rl(),
            }];
            (Table::from_phases(&rows), Outcome::Success)
        }
        Mode::Evolve => {
            let phases = require_phases(&config)?;
            let rho0 = pure_to_density(&build_product_state(&config.params));
            let rho = evolve(&rho0, &build_unitary(&phases))?;
            let mut rows = Vec::with_capacity(16);
            for i in 0..4 {
                for j in 0..4 {
                    let z = rho.matrix().get(i, j);
                    rows.push(MatrixEntryRow {
                        row: i,
                        col: j,
                        re: z.re,
                        im: z.im,
                    });
                }
            }
            (Table::from_matrix_entries(&rows), Outcome::Success)
        }
        Mode::Measures => {
            let phases = require_phases(&config)?;
            let record = evaluate_point(&config.params, &phases)?;
            let rows = vec![MeasureRow::from_record(&record)];
            (Table::from_measures(&rows), Outcome::Success)
        }
        Mode::Verify => {
            let phases = require_phases(&config)?;
            let record = evaluate_point(&config.params, &phases)?;
            let rows: Vec<VerifyRow> = record
                .reports
                .iter()
                .map(|r| VerifyRow {
                    relation: r.relation.name(),
                    lhs_value: r.lhs_value,
                    bound: r.bound,
                    residual: r.residual,
                    saturated: r.saturated,
                })
                .collect();
            let outcome = verify_outcome(&config, &record.reports);
            (Table::from_verify(&rows), outcome)
        }
        Mode::SweepPhases => {
            let grid_lr = config.grid_lr.as_ref().unwrap().points();
            let grid_rl = config.grid_rl.as_ref().unwrap().points();
            let records = sweep_phases(&grid_lr, &grid_rl, &config.params)?;
            let rows: Vec<MeasureRow> = records.iter().map(MeasureRow::from_record).collect();
            (Table::from_measures(&rows), Outcome::Success)
        }
        Mode::SweepInitial => {
            let phases = require_phases(&config)?;
            let grid_pa = config.grid_pa.as_ref().unwrap().points();
            let grid_pb = config.grid_pb.as_ref().unwrap().points();
            let records = gravent_core::sweep_initial_coherence(&grid_pa, &grid_pb, &phases)?;
            let rows: Vec<MeasureRow> = records.iter().map(MeasureRow::from_record).collect();
            (Table::from_measures(&rows), Outcome::Success)
        }
    };

    write_atomic(&config.output, &table.render(config.format))?;
    eprintln!(
        "wrote {} row(s) to {}",
        table.rows.len(),
        config.output.display()
    );
    Ok(outcome)
}

/// Verify-mode exit decision: with a maximally coherent initial state every
/// relation must saturate to within the identity tolerance.
pub fn verify_outcome(config: &RunConfig, reports: &[ComplementarityReport]) -> Outcome {
    let expects_saturation =
        (config.params.p_a() - 0.5).abs() < 1e-12 && (config.params.p_b() - 0.5).abs() < 1e-12;
    if expects_saturation
        && reports
            .iter()
            .any(|r| r.residual.abs() > gravent_core::tol::IDENTITY_RESIDUAL)
    {
        Outcome::VerificationFailed
    } else {
        Outcome::Success
    }
}
