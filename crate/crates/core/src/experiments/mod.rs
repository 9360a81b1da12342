//! Named, configured, seed-replicated experiments with file outputs.
//!
//! Every experiment is a pure library function from an [`ExperimentConfig`]
//! to an [`ExperimentOutput`] — metric rows, per-run traces, text reports,
//! recorded per-seed errors, and named pass/fail checks. The command-line
//! tool is a thin shell around [`run_experiment`] plus the writers in
//! [`io`]: identical configs byte-reproduce every output file.
//!
//! Output layout for one run directory:
//!
//! * `config.toml` — the fully resolved configuration that produced the run.
//! * `results.csv` — `condition,seed,metric,value` rows, one per metric.
//! * `summary.csv` — `condition,metric,mean,std,min,max,n` (population std).
//! * `trace_<condition>_<seed>.csv` — optimizer traces where applicable.
//! * `report_<...>.txt` — structured text reports (uniqueness certificates).
//! * `errors.csv` — per-seed failures recorded without aborting the run.
//! * `verdict.json` — named checks with an overall pass flag.

mod defs;
pub mod io;

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::envs::EnvSpec;
use crate::error::{Error, Result};

/// The experiment catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExperimentKind {
    /// γ = 0 saddle-point optimization reduces to counting at visited cells.
    #[serde(rename = "thm2-reduction")]
    Thm2Reduction,
    /// Exhaustive certificate that counting uniquely minimizes ℓ1 matching.
    #[serde(rename = "l1-uniqueness")]
    L1Uniqueness,
    /// Counting-policy value gap versus demonstration count on a
    /// deterministic grid; fits the log-log scaling slope.
    #[serde(rename = "bc-scaling-det")]
    BcScalingDet,
    /// Gap comparison between a slippery cliff and its deterministic twin.
    #[serde(rename = "bc-det-vs-stoch")]
    BcDetVsStoch,
    /// Complete versus subsampled demonstrations for cloning and the
    /// saddle-point objective.
    #[serde(rename = "subsample-compare")]
    SubsampleCompare,
    /// Weight decay versus overfitting with noisy features at m = 1.
    #[serde(rename = "overfit-reg")]
    OverfitReg,
    /// Closed-form dual value against the direct KL sum on random pairs.
    #[serde(rename = "dv-check")]
    DvCheck,
    /// Online training with complete versus subsampled demonstrations.
    #[serde(rename = "online-complete-vs-sub")]
    OnlineCompleteVsSub,
}

impl ExperimentKind {
    pub fn name(&self) -> &'static str {
        match self {
            ExperimentKind::Thm2Reduction => "thm2-reduction",
            ExperimentKind::L1Uniqueness => "l1-uniqueness",
            ExperimentKind::BcScalingDet => "bc-scaling-det",
            ExperimentKind::BcDetVsStoch => "bc-det-vs-stoch",
            ExperimentKind::SubsampleCompare => "subsample-compare",
            ExperimentKind::OverfitReg => "overfit-reg",
            ExperimentKind::DvCheck => "dv-check",
            ExperimentKind::OnlineCompleteVsSub => "online-complete-vs-sub",
        }
    }
}

fn default_seeds() -> Vec<u64> {
    vec![2021, 2022, 2023, 2024, 2025]
}

fn default_m() -> Vec<usize> {
    vec![10]
}

/// Saddle-point optimizer parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GdaParams {
    pub steps: usize,
    pub nu_lr: f64,
    pub policy_lr: f64,
    pub nu_weight_decay: f64,
    pub gamma: f64,
    pub eval_every: usize,
}

impl Default for GdaParams {
    fn default() -> Self {
        GdaParams {
            steps: 4000,
            nu_lr: 0.1,
            policy_lr: 0.1,
            nu_weight_decay: 0.0,
            gamma: 0.0,
            eval_every: 500,
        }
    }
}

/// Maximum-likelihood cloning parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TrainParams {
    pub learning_rate: f64,
    pub steps: usize,
    /// Penalty coefficient of the regularized arm where an experiment
    /// compares regularized against unregularized training.
    pub weight_decay: f64,
    /// Noise feature count as a multiple of the state count.
    pub noise_dim_factor: usize,
    pub eval_every: usize,
}

impl Default for TrainParams {
    fn default() -> Self {
        TrainParams {
            learning_rate: 0.5,
            steps: 20_000,
            weight_decay: 1e-4,
            noise_dim_factor: 3,
            eval_every: 2000,
        }
    }
}

/// Online mixed-objective parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MixParams {
    pub alpha: f64,
    pub replay_batch: usize,
    pub env_steps_per_update: usize,
    pub replay_capacity: usize,
    pub gamma: f64,
    pub updates: usize,
    pub eval_every: usize,
}

impl Default for MixParams {
    fn default() -> Self {
        MixParams {
            alpha: 0.1,
            replay_batch: 32,
            env_steps_per_update: 8,
            replay_capacity: 10_000,
            gamma: 0.5,
            updates: 6000,
            eval_every: 1000,
        }
    }
}

/// Dual-identity check parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DvParams {
    /// Number of random distribution pairs.
    pub pairs: usize,
    /// Support size of each distribution.
    pub support: usize,
}

impl Default for DvParams {
    fn default() -> Self {
        DvParams {
            pairs: 100,
            support: 8,
        }
    }
}

/// Uniqueness-certificate parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct UniquenessParams {
    /// Random stochastic policies sampled per certificate.
    pub stochastic_samples: usize,
}

impl Default for UniquenessParams {
    fn default() -> Self {
        UniquenessParams {
            stochastic_samples: 500,
        }
    }
}

/// Data thinning parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SubsampleParams {
    /// Keep every `rate`-th step of each trajectory.
    pub rate: usize,
}

impl Default for SubsampleParams {
    fn default() -> Self {
        SubsampleParams { rate: 4 }
    }
}

/// One experiment run: which experiment, on which environment, with which
/// hyperparameters, replicated over which seeds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    #[serde(default = "default_seeds")]
    pub seeds: Vec<u64>,
    /// Demonstration counts, for experiments that sweep or consume them.
    #[serde(default = "default_m")]
    pub m: Vec<usize>,
    /// Output directory; optional, commonly supplied by flag or
    /// environment variable instead.
    #[serde(default)]
    pub out: Option<String>,
    pub env: EnvSpec,
    #[serde(default)]
    pub gda: GdaParams,
    #[serde(default)]
    pub train: TrainParams,
    #[serde(default)]
    pub mix: MixParams,
    #[serde(default)]
    pub dv: DvParams,
    #[serde(default)]
    pub uniqueness: UniquenessParams,
    #[serde(default)]
    pub subsample: SubsampleParams,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.seeds.is_empty() {
            return Err(Error::Config("seeds list must not be empty".into()));
        }
        if self.m.is_empty() || self.m.contains(&0) {
            return Err(Error::Config(
                "demonstration counts must be nonempty and at least 1".into(),
            ));
        }
        Ok(())
    }

    /// Parses a configuration from its text form.
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let cfg: ExperimentConfig =
            toml::from_str(text).map_err(|e| Error::Config(format!("bad config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Renders the fully resolved configuration back to text.
    pub fn to_toml_string(&self) -> Result<String> {
        toml::to_string_pretty(self)
            .map_err(|e| Error::Config(format!("cannot render config: {e}")))
    }
}

/// One `condition,seed,metric,value` record.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricRow {
    pub condition: String,
    pub seed: u64,
    pub metric: String,
    pub value: f64,
}

/// A pre-rendered per-run trace file.
#[derive(Debug, Clone)]
pub struct TraceFile {
    pub name: String,
    pub header: String,
    pub rows: Vec<String>,
}

/// One named pass/fail check backing the verdict.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Everything an experiment produces, before any file is written.
#[derive(Debug, Clone, Default)]
pub struct ExperimentOutput {
    pub experiment: String,
    pub results: Vec<MetricRow>,
    pub traces: Vec<TraceFile>,
    /// (file name, content) pairs for text reports.
    pub reports: Vec<(String, String)>,
    /// (condition, seed, message) for per-seed failures that did not abort
    /// the experiment.
    pub errors: Vec<(String, u64, String)>,
    pub checks: Vec<Check>,
}

impl ExperimentOutput {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Runs the configured experiment in memory.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentOutput> {
    cfg.validate()?;
    match cfg.experiment {
        ExperimentKind::Thm2Reduction => defs::thm2_reduction(cfg),
        ExperimentKind::L1Uniqueness => defs::l1_uniqueness(cfg),
        ExperimentKind::BcScalingDet => defs::bc_scaling_det(cfg),
        ExperimentKind::BcDetVsStoch => defs::bc_det_vs_stoch(cfg),
        ExperimentKind::SubsampleCompare => defs::subsample_compare(cfg),
        ExperimentKind::OverfitReg => defs::overfit_reg(cfg),
        ExperimentKind::DvCheck => defs::dv_check(cfg),
        ExperimentKind::OnlineCompleteVsSub => defs::online_complete_vs_sub(cfg),
    }
}

/// Runs the configured experiment and writes the full output layout into
/// `out_dir` (created if missing).
pub fn run_to_dir(cfg: &ExperimentConfig, out_dir: &Path) -> Result<ExperimentOutput> {
    let output = run_experiment(cfg)?;
    io::write_output(out_dir, cfg, &output)?;
    Ok(output)
}
