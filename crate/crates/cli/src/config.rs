//! Run configuration: flat `key = value` config files, mirrored CLI flags
//! (flags override the file), figure presets, and validation.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::path::PathBuf;

use clap::Parser;
use gravent_core::{PhaseSet, PhysicalConfig, ProductStateParams};

use crate::exit;

/// Everything that can go wrong before or during a run, mapped to exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Config parse or validation problem.
    Config(String),
    /// An iterative numerical routine failed to converge.
    Numerical(String),
    /// Filesystem problem while writing the artifact.
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "{m}"),
            CliError::Numerical(m) => write!(f, "{m}"),
            CliError::Io(m) => write!(f, "{m}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => exit::CONFIG_ERROR,
            CliError::Numerical(_) => exit::NUMERICAL_FAILURE,
            CliError::Io(_) => exit::IO_FAILURE,
        }
    }
}

impl From<gravent_core::Error> for CliError {
    fn from(e: gravent_core::Error) -> Self {
        match e {
            gravent_core::Error::InvalidInput(m) => CliError::Config(format!("invalid input: {m}")),
            gravent_core::Error::NumericalFailure(m) => {
                CliError::Numerical(format!("numerical failure: {m}"))
            }
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// What a run computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Phases,
    Evolve,
    Measures,
    Verify,
    SweepPhases,
    SweepInitial,
}

impl Mode {
    fn parse(s: &str) -> Option<Mode> {
        match s {
            "phases" => Some(Mode::Phases),
            "evolve" => Some(Mode::Evolve),
            "measures" => Some(Mode::Measures),
            "verify" => Some(Mode::Verify),
            "sweep-phases" => Some(Mode::SweepPhases),
            "sweep-initial" => Some(Mode::SweepInitial),
            _ => None,
        }
    }
}

/// Artifact format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Jsonl,
}

/// One sweep axis: `count` points evenly spaced from `start` to `stop`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridAxis {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl GridAxis {
    pub fn points(&self) -> Vec<f64> {
        gravent_core::linspace(self.start, self.stop, self.count)
    }
}

/// Where the phases of a run come from.
#[derive(Debug, Clone, PartialEq)]
pub enum PhaseSource {
    Physical(PhysicalConfig),
    Explicit(PhaseSet),
}

impl PhaseSource {
    pub fn phase_set(&self) -> CliResult<PhaseSet> {
        match self {
            PhaseSource::Physical(cfg) => Ok(gravent_core::compute_phases(cfg)?),
            PhaseSource::Explicit(p) => Ok(*p),
        }
    }
}

/// Fully validated run configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    pub phase_source: Option<PhaseSource>,
    pub params: ProductStateParams,
    pub grid_lr: Option<GridAxis>,
    pub grid_rl: Option<GridAxis>,
    pub grid_pa: Option<GridAxis>,
    pub grid_pb: Option<GridAxis>,
    pub seed: u64,
    pub output: PathBuf,
    pub format: Format,
}

/// All accepted keys, in documentation order.
const KNOWN_KEYS: &[&str] = &[
    "mode",
    "preset",
    "output",
    "format",
    "seed",
    "mA",
    "mB",
    "d",
    "deltaX",
    "tau",
    "G",
    "h",
    "dphiLR",
    "dphiRL",
    "pA",
    "pB",
    "gridStartLR",
    "gridStopLR",
    "gridCountLR",
    "gridStartRL",
    "gridStopRL",
    "gridCountRL",
    "gridStartPA",
    "gridStopPA",
    "gridCountPA",
    "gridStartPB",
    "gridStopPB",
    "gridCountPB",
];

#[derive(Parser, Debug)]
#[command(
    name = "gravent",
    about = "Two-mass gravitational entanglement model: phases, evolution, measures, \
             complementarity verification and figure sweeps",
    long_about = None,
    allow_negative_numbers = true
)]
pub struct CliArgs {
    /// Flat key = value config file; flags override file values.
    #[arg(long)]
    pub config: Option<PathBuf>,

    /// phases | evolve | measures | verify | sweep-phases | sweep-initial
    #[arg(long)]
    pub mode: Option<String>,

    /// Figure preset: fig2 .. fig7 (sets mode, grids, phases and a default output).
    #[arg(long)]
    pub preset: Option<String>,

    /// Artifact path.
    #[arg(long)]
    pub output: Option<PathBuf>,

    /// csv | jsonl
    #[arg(long)]
    pub format: Option<String>,

    /// Seed for randomized suites (accepted for reproducibility; the six
    /// built-in modes are fully deterministic).
    #[arg(long)]
    pub seed: Option<u64>,

    #[arg(long = "mA", help = "Mass of A in kg")]
    pub m_a: Option<f64>,
    #[arg(long = "mB", help = "Mass of B in kg")]
    pub m_b: Option<f64>,
    #[arg(long, help = "Separation of the superposition centres in m")]
    pub d: Option<f64>,
    #[arg(long = "deltaX", help = "Branch separation in m")]
    pub delta_x: Option<f64>,
    #[arg(long, help = "Interaction time in s")]
    pub tau: Option<f64>,
    #[arg(long = "G", help = "Gravitational constant (defaults to CODATA)")]
    pub g: Option<f64>,
    #[arg(long = "h", help = "Planck constant (defaults to CODATA h)")]
    pub h: Option<f64>,

    #[arg(long = "dphiLR", help = "Explicit phase difference Δφ_LR in rad")]
    pub dphi_lr: Option<f64>,
    #[arg(long = "dphiRL", help = "Explicit phase difference Δφ_RL in rad")]
    pub dphi_rl: Option<f64>,

    #[arg(long = "pA", help = "Initial weight p_A in [0,1]")]
    pub p_a: Option<f64>,
    #[arg(long = "pB", help = "Initial weight p_B in [0,1]")]
    pub p_b: Option<f64>,

    #[arg(long = "gridStartLR")]
    pub grid_start_lr: Option<f64>,
    #[arg(long = "gridStopLR")]
    pub grid_stop_lr: Option<f64>,
    #[arg(long = "gridCountLR")]
    pub grid_count_lr: Option<usize>,
    #[arg(long = "gridStartRL")]
    pub grid_start_rl: Option<f64>,
    #[arg(long = "gridStopRL")]
    pub grid_stop_rl: Option<f64>,
    #[arg(long = "gridCountRL")]
    pub grid_count_rl: Option<usize>,
    #[arg(long = "gridStartPA")]
    pub grid_start_pa: Option<f64>,
    #[arg(long = "gridStopPA")]
    pub grid_stop_pa: Option<f64>,
    #[arg(long = "gridCountPA")]
    pub grid_count_pa: Option<usize>,
    #[arg(long = "gridStartPB")]
    pub grid_start_pb: Option<f64>,
    #[arg(long = "gridStopPB")]
    pub grid_stop_pb: Option<f64>,
    #[arg(long = "gridCountPB")]
    pub grid_count_pb: Option<usize>,
}

/// Parses a flat `key = value` document into an ordered map.
///
/// One pair per line; blank lines and `#` comments are skipped; unknown and
/// duplicate keys are rejected with their line number.
pub fn parse_key_values(text: &str) -> CliResult<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::Config(format!(
                "line {line_no}: expected `key = value`, got `{line}`"
            ))
        })?;
        let key = key.trim();
        let value = value.trim();
        if !KNOWN_KEYS.contains(&key) {
            return Err(CliError::Config(format!(
                "line {line_no}: unknown key `{key}`"
            )));
        }
        if value.is_empty() {
            return Err(CliError::Config(format!(
                "line {line_no}: key `{key}` has no value"
            )));
        }
        if map.insert(key.to_string(), value.to_string()).is_some() {
            return Err(CliError::Config(format!(
                "line {line_no}: duplicate key `{key}`"
            )));
        }
    }
    Ok(map)
}

fn overlay_flag<T: ToString>(map: &mut BTreeMap<String, String>, key: &str, value: &Option<T>) {
    if let Some(v) = value {
        map.insert(key.to_string(), v.to_string());
    }
}

/// Merges config file and flags (flags win) into one key map.
pub fn merge_sources(args: &CliArgs) -> CliResult<BTreeMap<String, String>> {
    let mut map = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
            parse_key_values(&text)?
        }
        None => BTreeMap::new(),
    };
    overlay_flag(&mut map, "mode", &args.mode);
    overlay_flag(&mut map, "preset", &args.preset);
    overlay_flag(
        &mut map,
        "output",
        &args.output.as_ref().map(|p| p.display().to_string()),
    );
    overlay_flag(&mut map, "format", &args.format);
    overlay_flag(&mut map, "seed", &args.seed);
    overlay_flag(&mut map, "mA", &args.m_a);
    overlay_flag(&mut map, "mB", &args.m_b);
    overlay_flag(&mut map, "d", &args.d);
    overlay_flag(&mut map, "deltaX", &args.delta_x);
    overlay_flag(&mut map, "tau", &args.tau);
    overlay_flag(&mut map, "G", &args.g);
    overlay_flag(&mut map, "h", &args.h);
    overlay_flag(&mut map, "dphiLR", &args.dphi_lr);
    overlay_flag(&mut map, "dphiRL", &args.dphi_rl);
    overlay_flag(&mut map, "pA", &args.p_a);
    overlay_flag(&mut map, "pB", &args.p_b);
    overlay_flag(&mut map, "gridStartLR", &args.grid_start_lr);
    overlay_flag(&mut map, "gridStopLR", &args.grid_stop_lr);
    overlay_flag(&mut map, "gridCountLR", &args.grid_count_lr);
    overlay_flag(&mut map, "gridStartRL", &args.grid_start_rl);
    overlay_flag(&mut map, "gridStopRL", &args.grid_stop_rl);
    overlay_flag(&mut map, "gridCountRL", &args.grid_count_rl);
    overlay_flag(&mut map, "gridStartPA", &args.grid_start_pa);
    overlay_flag(&mut map, "gridStopPA", &args.grid_stop_pa);
    overlay_flag(&mut map, "gridCountPA", &args.grid_count_pa);
    overlay_flag(&mut map, "gridStartPB", &args.grid_start_pb);
    overlay_flag(&mut map, "gridStopPB", &args.grid_stop_pb);
    overlay_flag(&mut map, "gridCountPB", &args.grid_count_pb);
    Ok(map)
}

/// Applies a figure preset as baseline values: anything already present in
/// the map keeps its value.
fn apply_preset(map: &mut BTreeMap<String, String>, preset: &str) -> CliResult<()> {
    let two_pi = 2.0 * PI;
    let half_pi = 0.5 * PI;
    let baseline: Vec<(&str, String)> = match preset {
        // Local coherence / negativity over the phase plane. 101 points per
        // axis (step 2π/100) so the grid contains pairs with phase sum
        // exactly π, where the negativity peak sits.
        "fig2" | "fig3" => vec![
            ("mode", "sweep-phases".into()),
            ("gridStartLR", "0".into()),
            ("gridStopLR", two_pi.to_string()),
            ("gridCountLR", "101".into()),
            ("gridStartRL", "0".into()),
            ("gridStopRL", two_pi.to_string()),
            ("gridCountRL", "101".into()),
            ("output", format!("{preset}.csv")),
        ],
        // Squared / entropic complementarity along the total phase.
        "fig4" | "fig5" => vec![
            ("mode", "sweep-phases".into()),
            ("gridStartLR", "0".into()),
            ("gridStopLR", two_pi.to_string()),
            ("gridCountLR", "201".into()),
            ("gridStartRL", "0".into()),
            ("gridStopRL", "0".into()),
            ("gridCountRL", "1".into()),
            ("output", format!("{preset}.csv")),
        ],
        // Incoherent subsystem A: no entanglement anywhere on the row.
        "fig6" => vec![
            ("mode", "sweep-initial".into()),
            ("dphiLR", half_pi.to_string()),
            ("dphiRL", half_pi.to_string()),
            ("gridStartPA", "0".into()),
            ("gridStopPA", "0".into()),
            ("gridCountPA", "1".into()),
            ("gridStartPB", "0".into()),
            ("gridStopPB", "1".into()),
            ("gridCountPB", "51".into()),
            ("output", "fig6.csv".into()),
        ],
        // Negativity over the initial-coherence plane at phase sum π.
        "fig7" => vec![
            ("mode", "sweep-initial".into()),
            ("dphiLR", half_pi.to_string()),
            ("dphiRL", half_pi.to_string()),
            ("gridStartPA", "0".into()),
            ("gridStopPA", "1".into()),
            ("gridCountPA", "51".into()),
            ("gridStartPB", "0".into()),
            ("gridStopPB", "1".into()),
            ("gridCountPB", "51".into()),
            ("output", "fig7.csv".into()),
        ],
        other => {
            return Err(CliError::Config(format!(
                "unknown preset `{other}` (expected fig2 .. fig7)"
            )))
        }
    };
    for (k, v) in baseline {
        map.entry(k.to_string()).or_insert(v);
    }
    Ok(())
}

struct KeyMap(BTreeMap<String, String>);

impl KeyMap {
    fn get_f64(&self, key: &str) -> CliResult<Option<f64>> {
        match self.0.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse::<f64>()
                .map(Some)
                .map_err(|_| CliError::Config(format!("key `{key}`: `{v}` is not a number"))),
        }
    }

    fn get_usize(&self, key: &str) -> CliResult<Option<usize>> {
        match self.0.get(key) {
            None => Ok(None),
            Some(v) => v.parse::<usize>().map(Some).map_err(|_| {
                CliError::Config(format!("key `{key}`: `{v}` is not a non-negative integer"))
            }),
        }
    }

    fn get_u64(&self, key: &str) -> CliResult<Option<u64>> {
        match self.0.get(key) {
            None => Ok(None),
            Some(v) => v.parse::<u64>().map(Some).map_err(|_| {
                CliError::Config(format!("key `{key}`: `{v}` is not a non-negative integer"))
            }),
        }
    }

    fn has(&self, key: &str) -> bool {
        self.0.contains_key(key)
    }
}

fn grid_axis(map: &KeyMap, suffix: &str) -> CliResult<Option<GridAxis>> {
    let start = map.get_f64(&format!("gridStart{suffix}"))?;
    let stop = map.get_f64(&format!("gridStop{suffix}"))?;
    let count = map.get_usize(&format!("gridCount{suffix}"))?;
    match (start, stop, count) {
        (None, None, None) => Ok(None),
        (Some(start), Some(stop), Some(count)) => {
            if count < 1 {
                return Err(CliError::Config(format!(
                    "key `gridCount{suffix}`: count must be at least 1"
                )));
            }
            if !start.is_finite() || !stop.is_finite() || start > stop {
                return Err(CliError::Config(format!(
                    "grid axis {suffix}: need finite start <= stop, got [{start}, {stop}]"
                )));
            }
            Ok(Some(GridAxis { start, stop, count }))
        }
        _ => Err(CliError::Config(format!(
            "grid axis {suffix}: gridStart{suffix}, gridStop{suffix} and gridCount{suffix} \
             must be given together"
        ))),
    }
}

/// Parses a flat config document into a validated [`RunConfig`].
pub fn parse_config(text: &str) -> CliResult<RunConfig> {
    build_from_map(parse_key_values(text)?)
}

/// Merges config file and flags, then validates.
pub fn build_config(args: &CliArgs) -> CliResult<RunConfig> {
    build_from_map(merge_sources(args)?)
}

/// Validates a merged key map and produces a typed [`RunConfig`].
fn build_from_map(mut raw: BTreeMap<String, String>) -> CliResult<RunConfig> {
    if let Some(preset) = raw.get("preset").cloned() {
        apply_preset(&mut raw, &preset)?;
    }
    let map = KeyMap(raw);

    // Constraint checks run before completeness checks so a bad pair like
    // d <= deltaX is reported even in a fragmentary config.
    let d = map.get_f64("d")?;
    let delta_x = map.get_f64("deltaX")?;
    if let (Some(d), Some(dx)) = (d, delta_x) {
        if d <= dx {
            return Err(CliError::Config(format!(
                "keys `d`, `deltaX`: d = {d} must exceed deltaX = {dx}"
            )));
        }
    }
    let p_a = map.get_f64("pA")?;
    let p_b = map.get_f64("pB")?;
    for (key, v) in [("pA", p_a), ("pB", p_b)] {
        if let Some(v) = v {
            if !(0.0..=1.0).contains(&v) {
                return Err(CliError::Config(format!(
                    "key `{key}`: {v} is outside [0, 1]"
                )));
            }
        }
    }

    let physical_keys = ["mA", "mB", "d", "deltaX", "tau"];
    let any_physical = physical_keys.iter().any(|k| map.has(k));
    let any_explicit = map.has("dphiLR") || map.has("dphiRL");
    if any_physical && any_explicit {
        return Err(CliError::Config(
            "physical parameters (mA/mB/d/deltaX/tau) and explicit phases (dphiLR/dphiRL) \
             are mutually exclusive"
                .into(),
        ));
    }

    let phase_source = if any_physical {
        let missing: Vec<&str> = physical_keys
            .iter()
            .copied()
            .filter(|k| !map.has(k))
            .collect();
        if !missing.is_empty() {
            return Err(CliError::Config(format!(
                "incomplete physical parameters: missing {}",
                missing.join(", ")
            )));
        }
        let cfg = PhysicalConfig::new(
            map.get_f64("mA")?.unwrap(),
            map.get_f64("mB")?.unwrap(),
            d.unwrap(),
            delta_x.unwrap(),
            map.get_f64("tau")?.unwrap(),
            map.get_f64("G")?
                .unwrap_or(gravent_core::GRAVITATIONAL_CONSTANT),
            map.get_f64("h")?.unwrap_or(gravent_core::PLANCK_CONSTANT),
        )?;
        Some(PhaseSource::Physical(cfg))
    } else if any_explicit {
        let (Some(dlr), Some(drl)) = (map.get_f64("dphiLR")?, map.get_f64("dphiRL")?) else {
            return Err(CliError::Config(
                "explicit phases need both dphiLR and dphiRL".into(),
            ));
        };
        Some(PhaseSource::Explicit(PhaseSet::from_deltas(dlr, drl)?))
    } else {
        None
    };

    let mode_str = map
        .0
        .get("mode")
        .ok_or_else(|| CliError::Config("key `mode` is required".into()))?;
    let mode = Mode::parse(mode_str).ok_or_else(|| {
        CliError::Config(format!(
            "key `mode`: unknown mode `{mode_str}` (expected phases, evolve, measures, verify, \
             sweep-phases or sweep-initial)"
        ))
    })?;

    match mode {
        Mode::Phases => {
            if !matches!(phase_source, Some(PhaseSource::Physical(_))) {
                return Err(CliError::Config(
                    "mode `phases` computes phases from physical parameters; supply mA, mB, d, \
                     deltaX and tau"
                        .into(),
                ));
            }
        }
        Mode::Evolve | Mode::Measures | Mode::Verify | Mode::SweepInitial => {
            if phase_source.is_none() {
                return Err(CliError::Config(format!(
                    "mode `{mode_str}` needs exactly one phase source: either physical \
                     parameters or dphiLR/dphiRL"
                )));
            }
        }
        Mode::SweepPhases => {
            if phase_source.is_some() {
                return Err(CliError::Config(
                    "mode `sweep-phases` takes its phases from the grid; remove the physical \
                     parameters / explicit phases"
                        .into(),
                ));
            }
        }
    }

    let params = ProductStateParams::new(p_a.unwrap_or(0.5), p_b.unwrap_or(0.5))?;

    let grid_lr = grid_axis(&map, "LR")?;
    let grid_rl = grid_axis(&map, "RL")?;
    let grid_pa = grid_axis(&map, "PA")?;
    let grid_pb = grid_axis(&map, "PB")?;
    match mode {
        Mode::SweepPhases => {
            if grid_lr.is_none() || grid_rl.is_none() {
                return Err(CliError::Config(
                    "mode `sweep-phases` needs gridStartLR/gridStopLR/gridCountLR and the RL \
                     analogues"
                        .into(),
                ));
            }
        }
        Mode::SweepInitial => {
            if grid_pa.is_none() || grid_pb.is_none() {
                return Err(CliError::Config(
                    "mode `sweep-initial` needs gridStartPA/gridStopPA/gridCountPA and the PB \
                     analogues"
                        .into(),
                ));
            }
            for (axis, name) in [(&grid_pa, "PA"), (&grid_pb, "PB")] {
                let axis = axis.as_ref().unwrap();
                if axis.start < 0.0 || axis.stop > 1.0 {
                    return Err(CliError::Config(format!(
                        "grid axis {name}: range [{}, {}] is outside [0, 1]",
                        axis.start, axis.stop
                    )));
                }
            }
        }
        _ => {}
    }

    let format = match map.0.get("format").map(String::as_str) {
        None | Some("csv") => Format::Csv,
        Some("jsonl") => Format::Jsonl,
        Some(other) => {
            return Err(CliError::Config(format!(
                "key `format`: unknown format `{other}` (expected csv or jsonl)"
            )))
        }
    };

    let output = map
        .0
        .get("output")
        .map(PathBuf::from)
        .ok_or_else(|| CliError::Config("key `output` is required".into()))?;

    Ok(RunConfig {
        mode,
        phase_source,
        params,
        grid_lr,
        grid_rl,
        grid_pa,
        grid_pb,
        seed: map.get_u64("seed")?.unwrap_or(0),
        output,
        format,
    })
}
