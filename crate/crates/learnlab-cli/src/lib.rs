//! Command-line front door: `spectrum`, `learn`, `harmonic`, `stable`, and
//! `scaling` subcommands with CSV or JSON output.
//!
//! Precedence for every option: command-line flag, then the optional TOML
//! config file (`--config`), then the built-in default. The resolved
//! configuration is echoed as one JSON object into every output document,
//! and all randomness derives from the single master seed, so identical
//! invocations produce byte-identical files.

pub mod config;
pub mod output;

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use learnlab::distributions::OverlapDistribution;
use learnlab::experiments::{self, Algorithm, FitModel, ScalingFit};
use learnlab::harmonic;
use learnlab::instance::LearnerInstance;
use learnlab::learners::{self, LearnMethod};
use learnlab::seed::derive_seed;
use learnlab::spectral;

use config::{EffectiveConfig, FileConfig};
use output::{
    float_cell, optional_float_cell, optional_u64_cell, parse_csv, render_csv, render_json, CsvRow,
    ParsedCsv,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    fn name(&self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Memoryless,
    Fullmem,
    Both,
}

impl MethodArg {
    fn name(&self) -> &'static str {
        match self {
            MethodArg::Memoryless => "memoryless",
            MethodArg::Fullmem => "fullmem",
            MethodArg::Both => "both",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "learnlab",
    version,
    about = "Numerical laboratory for overlap-driven set learning"
)]
pub struct Cli {
    /// TOML config file; command-line flags take precedence over it.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Output file (stdout when omitted).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    /// Master seed; every trial seed derives from it.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Worker threads for trial-level parallelism (0 = all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectral summaries (second eigenvalue, derivative root, harmonic
    /// mean, eigen constant, sandwich checks) over sampled instances.
    Spectrum {
        /// Number of candidate sets per instance.
        #[arg(long)]
        n: Option<usize>,
        /// Gap-density exponent of the power family (0 = uniform).
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<f64>,
        /// Explicit gap vector; analyzes exactly this instance instead of
        /// sampling.
        #[arg(long, value_delimiter = ',')]
        gaps: Option<Vec<f64>>,
        /// Number of sampled instances (one CSV row each).
        #[arg(long)]
        trials: Option<u64>,
    },
    /// Sample-complexity thresholds for the two learners.
    Learn {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<f64>,
        /// Explicit gap vector for a hand-chosen instance.
        #[arg(long, value_delimiter = ',')]
        gaps: Option<Vec<f64>>,
        /// Failure budget: threshold targets success probability 1 - delta.
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        /// Simulation trials (simulated estimator only).
        #[arg(long)]
        trials: Option<u64>,
        /// Exact/analytic thresholds (default).
        #[arg(long, conflicts_with = "sim")]
        exact: bool,
        /// Simulated thresholds (empirical quantiles with CIs).
        #[arg(long)]
        sim: bool,
    },
    /// Harmonic-mean limit-constant estimates along an n grid.
    Harmonic {
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<f64>,
        #[arg(long, value_delimiter = ',')]
        n_grid: Option<Vec<usize>>,
        #[arg(long)]
        trials: Option<u64>,
        /// Also dump the raw centered statistics (columns n,trial,y) for
        /// external plotting.
        #[arg(long)]
        dump_y: Option<PathBuf>,
    },
    /// Reference samples of the one-sided stable law with exponent in (0,1).
    Stable {
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        count: Option<usize>,
    },
    /// Threshold scaling sweep across n, median over instances per point.
    Scaling {
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<f64>,
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long, value_delimiter = ',')]
        n_grid: Option<Vec<usize>>,
        /// Instances per grid point.
        #[arg(long)]
        instances: Option<usize>,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        /// Also write a JSON summary with the fitted growth models.
        #[arg(long)]
        summary_json: Option<PathBuf>,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Invalid flags or parameter domains: usage text, exit 2.
    Usage(String),
    /// I/O failure: diagnostic, exit 1.
    Io(String),
}

impl From<learnlab::Error> for CliError {
    fn from(e: learnlab::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

pub fn main_entry<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}\nrun with --help for usage");
            2
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn load_file_config(path: &Option<PathBuf>) -> Result<FileConfig, CliError> {
    match path {
        None => Ok(FileConfig::default()),
        Some(p) => {
            let text = fs::read_to_string(p)?;
            toml::from_str(&text).map_err(|e| CliError::Usage(format!("config file: {e}")))
        }
    }
}

fn pick<T: Clone>(flag: Option<T>, file: Option<T>, default: T) -> T {
    flag.or(file).unwrap_or(default)
}

fn emit<R: CsvRow>(
    cfg: &EffectiveConfig,
    rows: &[R],
    out: &Option<PathBuf>,
) -> Result<(), CliError> {
    let text = if cfg.format == "json" {
        render_json(cfg, rows)
    } else {
        render_csv(cfg, rows)
    };
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let file = load_file_config(&cli.config)?;
    let seed = pick(cli.seed, file.seed, 0);
    let jobs = pick(cli.jobs, file.jobs, 0);
    let format = match cli.format {
        Some(f) => f.name().to_string(),
        None => file.format.clone().unwrap_or_else(|| "csv".into()),
    };
    if format != "csv" && format != "json" {
        return Err(CliError::Usage(format!("unknown format '{format}'")));
    }
    let out = cli
        .out
        .clone()
        .or_else(|| file.out.as_ref().map(PathBuf::from));
    if jobs > 0 {
        // Results are independent of the pool size (per-trial seeds);
        // a second initialization in the same process is fine to ignore.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }

    match cli.command {
        Command::Spectrum {
            n,
            beta,
            gaps,
            trials,
        } => {
            let n = pick(n, file.n, 100);
            let beta = pick(beta, file.beta, 0.0);
            let gaps = gaps.or(file.gaps.clone());
            let trials = pick(trials, file.trials, 10);
            let family = resolve_family(&file.family, &gaps, beta)?;
            let cfg = EffectiveConfig {
                subcommand: "spectrum".into(),
                family: Some(family),
                beta: Some(beta),
                gaps: gaps.clone(),
                n: Some(n),
                n_grid: None,
                delta: None,
                trials: Some(trials),
                instances: None,
                method: None,
                estimator: None,
                alpha: None,
                count: None,
                seed,
                jobs,
                format,
            };
            let rows = run_spectrum(&cfg, n, beta, gaps, trials, seed)?;
            emit(&cfg, &rows, &out)
        }
        Command::Learn {
            n,
            beta,
            gaps,
            delta,
            method,
            trials,
            exact,
            sim,
        } => {
            let beta = pick(beta, file.beta, 0.0);
            let gaps = gaps.or(file.gaps.clone());
            let n = match &gaps {
                Some(g) => {
                    let implied = g.len() + 1;
                    let n = pick(n, file.n, implied);
                    if n != implied {
                        return Err(CliError::Usage(format!(
                            "--n {n} contradicts --gaps (implies n = {implied})"
                        )));
                    }
                    n
                }
                None => pick(n, file.n, 100),
            };
            let delta = pick(delta, file.delta, 0.1);
            let method = pick(method, parse_method(&file.method)?, MethodArg::Memoryless);
            let trials = pick(trials, file.trials, 10_000);
            let simulated = sim || (!exact && file.estimator.as_deref() == Some("sim"));
            let family = resolve_family(&file.family, &gaps, beta)?;
            let cfg = EffectiveConfig {
                subcommand: "learn".into(),
                family: Some(family),
                beta: Some(beta),
                gaps: gaps.clone(),
                n: Some(n),
                n_grid: None,
                delta: Some(delta),
                trials: simulated.then_some(trials),
                instances: None,
                method: Some(method.name().into()),
                estimator: Some(if simulated { "sim" } else { "exact" }.into()),
                alpha: None,
                count: None,
                seed,
                jobs,
                format,
            };
            let rows = run_learn(n, beta, gaps, delta, method, trials, simulated, seed)?;
            emit(&cfg, &rows, &out)
        }
        Command::Harmonic {
            beta,
            n_grid,
            trials,
            dump_y,
        } => {
            let beta = pick(beta, file.beta, 0.0);
            let n_grid = pick(n_grid, file.n_grid.clone(), vec![100, 1_000, 10_000]);
            let trials = pick(trials, file.trials, 1_000);
            let family = resolve_family(&file.family, &None, beta)?;
            let cfg = EffectiveConfig {
                subcommand: "harmonic".into(),
                family: Some(family),
                beta: Some(beta),
                gaps: None,
                n: None,
                n_grid: Some(n_grid.clone()),
                delta: None,
                trials: Some(trials),
                instances: None,
                method: None,
                estimator: None,
                alpha: None,
                count: None,
                seed,
                jobs,
                format,
            };
            let dist = OverlapDistribution::power_gap(beta)?;
            let estimates =
                harmonic::estimate_limit_constant(&dist, &n_grid, trials as usize, seed)?;
            let rows: Vec<HarmonicRow> = estimates
                .iter()
                .map(|e| HarmonicRow {
                    n: e.n,
                    beta,
                    trials,
                    statistic_name: e.statistic.name(),
                    estimate: e.estimate,
                    stderr: e.stderr,
                })
                .collect();
            if let Some(path) = dump_y {
                // Same per-grid-point seed derivation as the estimates, so
                // the dump reproduces exactly the trials behind them.
                let mut dump = Vec::new();
                for (k, &n) in n_grid.iter().enumerate() {
                    let sample = harmonic::collect_limit_sample(
                        &dist,
                        n,
                        trials as usize,
                        derive_seed(seed, k as u64),
                    )?;
                    dump.extend(sample.y.iter().enumerate().map(|(t, &y)| YRow {
                        n,
                        trial: t as u64,
                        y,
                    }));
                }
                let text = render_csv(&cfg, &dump);
                fs::write(path, text)?;
            }
            emit(&cfg, &rows, &out)
        }
        Command::Stable { alpha, count } => {
            let alpha = pick(alpha, file.alpha, 0.5);
            let count = pick(count, file.count, 100_000);
            let cfg = EffectiveConfig {
                subcommand: "stable".into(),
                family: None,
                beta: None,
                gaps: None,
                n: None,
                n_grid: None,
                delta: None,
                trials: None,
                instances: None,
                method: None,
                estimator: None,
                alpha: Some(alpha),
                count: Some(count),
                seed,
                jobs,
                format,
            };
            let samples = harmonic::sample_one_sided_stable(alpha, count, seed)?;
            let rows: Vec<StableRow> = samples
                .iter()
                .enumerate()
                .map(|(t, &value)| StableRow {
                    trial: t as u64,
                    value,
                })
                .collect();
            emit(&cfg, &rows, &out)
        }
        Command::Scaling {
            beta,
            delta,
            n_grid,
            instances,
            method,
            summary_json,
        } => {
            let beta = pick(beta, file.beta, 0.0);
            let delta = pick(delta, file.delta, 0.01);
            let n_grid = pick(
                n_grid,
                file.n_grid.clone(),
                (7..=14).map(|k| 1usize << k).collect(),
            );
            let instances = pick(instances, file.instances, 30);
            let method = pick(method, parse_method(&file.method)?, MethodArg::Memoryless);
            let algorithm = match method {
                MethodArg::Memoryless => Algorithm::Memoryless,
                MethodArg::Fullmem => Algorithm::FullMemory,
                MethodArg::Both => {
                    return Err(CliError::Usage(
                        "scaling sweeps take one method per run".into(),
                    ))
                }
            };
            let family = resolve_family(&file.family, &None, beta)?;
            let cfg = EffectiveConfig {
                subcommand: "scaling".into(),
                family: Some(family),
                beta: Some(beta),
                gaps: None,
                n: None,
                n_grid: Some(n_grid.clone()),
                delta: Some(delta),
                trials: None,
                instances: Some(instances),
                method: Some(method.name().into()),
                estimator: Some("spectral-exact".into()),
                alpha: None,
                count: None,
                seed,
                jobs,
                format,
            };
            let dist = OverlapDistribution::power_gap(beta)?;
            let table =
                experiments::scaling_sweep(&dist, delta, &n_grid, instances, algorithm, seed)?;
            let rows: Vec<ScalingCsvRow> = table
                .rows
                .iter()
                .map(|r| ScalingCsvRow {
                    n: r.n,
                    beta: r.beta,
                    delta: r.delta,
                    method: r.method.name(),
                    n_delta: r.n_delta,
                    estimator: r.estimator.name(),
                    stderr: r.stderr,
                    seed: r.seed,
                })
                .collect();
            if let Some(path) = summary_json {
                let summary = ScalingSummary {
                    schema_version: output::SCHEMA_VERSION,
                    config: &cfg,
                    // Existence-of-constants claims only; the band edges are
                    // calibration artifacts of this laboratory, not imported
                    // values.
                    bands_calibrated: true,
                    fits: Fits {
                        power_law: experiments::fit_scaling(&table, FitModel::PowerLaw)?,
                        ratio_n_log_n: experiments::fit_scaling(&table, FitModel::NLogN)?,
                        ratio_linear_n: experiments::fit_scaling(&table, FitModel::LinearN)?,
                    },
                };
                let mut text = serde_json::to_string_pretty(&summary).expect("summary serializes");
                text.push('\n');
                fs::write(path, text)?;
            }
            emit(&cfg, &rows, &out)
        }
    }
}

/// Resolved gap-family name for the config echo, validated against an
/// explicit `family` key from the config file when present.
fn resolve_family(
    file_family: &Option<String>,
    gaps: &Option<Vec<f64>>,
    beta: f64,
) -> Result<String, CliError> {
    let derived = if gaps.is_some() {
        "empirical"
    } else if beta == 0.0 {
        "uniform"
    } else {
        "power_gap"
    };
    if let Some(stated) = file_family {
        let compatible = match stated.as_str() {
            "uniform" => derived == "uniform",
            "power_gap" => gaps.is_none(),
            "empirical" => derived == "empirical",
            _ => return Err(CliError::Usage(format!("unknown family '{stated}'"))),
        };
        if !compatible {
            return Err(CliError::Usage(format!(
                "family '{stated}' contradicts beta/gaps settings"
            )));
        }
    }
    Ok(derived.to_string())
}

fn parse_method(s: &Option<String>) -> Result<Option<MethodArg>, CliError> {
    match s.as_deref() {
        None => Ok(None),
        Some("memoryless") => Ok(Some(MethodArg::Memoryless)),
        Some("fullmem") => Ok(Some(MethodArg::Fullmem)),
        Some("both") => Ok(Some(MethodArg::Both)),
        Some(other) => Err(CliError::Usage(format!("unknown method '{other}'"))),
    }
}

fn run_spectrum(
    _cfg: &EffectiveConfig,
    n: usize,
    beta: f64,
    gaps: Option<Vec<f64>>,
    trials: u64,
    seed: u64,
) -> Result<Vec<SpectrumRow>, CliError> {
    let summarize = |inst: &LearnerInstance, seed: u64| {
        let s = spectral::summarize(inst);
        SpectrumRow {
            n: s.n,
            seed,
            lambda_star: s.lambda_star,
            mu_star: s.mu_star,
            h: s.harmonic_mean,
            c: s.eigen_constant,
            bound_lo_ok: s.bound_lo_ok,
            bound_hi_ok: s.bound_hi_ok,
        }
    };
    if let Some(gaps) = gaps {
        let inst = LearnerInstance::from_gaps(gaps)?;
        return Ok(vec![summarize(&inst, seed)]);
    }
    let dist = OverlapDistribution::power_gap(beta)?;
    (0..trials)
        .map(|i| {
            let inst_seed = derive_seed(seed, i);
            let inst = dist.instance(n, inst_seed)?;
            Ok(summarize(&inst, inst_seed))
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn run_learn(
    n: usize,
    beta: f64,
    gaps: Option<Vec<f64>>,
    delta: f64,
    method: MethodArg,
    trials: u64,
    simulated: bool,
    seed: u64,
) -> Result<Vec<LearnRow>, CliError> {
    let inst = match gaps {
        Some(g) => LearnerInstance::from_gaps(g)?,
        None => OverlapDistribution::power_gap(beta)?.instance(n, derive_seed(seed, 0))?,
    };
    let algorithms: &[Algorithm] = match method {
        MethodArg::Memoryless => &[Algorithm::Memoryless],
        MethodArg::Fullmem => &[Algorithm::FullMemory],
        MethodArg::Both => &[Algorithm::Memoryless, Algorithm::FullMemory],
    };
    let mut rows = Vec::new();
    for (k, algo) in algorithms.iter().enumerate() {
        let sim_seed = derive_seed(seed, 1 + k as u64);
        let row = match (algo, simulated) {
            (Algorithm::Memoryless, false) => {
                let r = learners::n_delta_memoryless(&inst, delta)?;
                LearnRow {
                    method: LearnMethod::MemorylessExact.name(),
                    n: inst.n(),
                    delta,
                    n_delta: r.n_delta as f64,
                    trials: None,
                    ci_halfwidth: None,
                }
            }
            (Algorithm::Memoryless, true) => {
                let r = learners::simulated_n_delta_memoryless(&inst, delta, trials, sim_seed)?;
                LearnRow {
                    method: LearnMethod::MemorylessSim.name(),
                    n: inst.n(),
                    delta,
                    n_delta: r.n_delta,
                    trials: Some(trials),
                    ci_halfwidth: Some(r.ci_halfwidth),
                }
            }
            (Algorithm::FullMemory, false) => LearnRow {
                method: LearnMethod::FullMemoryExact.name(),
                n: inst.n(),
                delta,
                n_delta: learners::n_delta_full_memory(&inst, delta)?,
                trials: None,
                ci_halfwidth: None,
            },
            (Algorithm::FullMemory, true) => {
                let r = learners::simulated_n_delta_full_memory(&inst, delta, trials, sim_seed)?;
                LearnRow {
                    method: LearnMethod::FullMemorySim.name(),
                    n: inst.n(),
                    delta,
                    n_delta: r.n_delta,
                    trials: Some(trials),
                    ci_halfwidth: Some(r.ci_halfwidth),
                }
            }
        };
        rows.push(row);
    }
    Ok(rows)
}

// --- row types ---

#[derive(Debug, Serialize)]
pub struct SpectrumRow {
    pub n: usize,
    pub seed: u64,
    pub lambda_star: f64,
    pub mu_star: f64,
    pub h: f64,
    pub c: Option<f64>,
    pub bound_lo_ok: bool,
    pub bound_hi_ok: bool,
}

impl CsvRow for SpectrumRow {
    const HEADER: &'static [&'static str] = &[
        "n",
        "seed",
        "lambda_star",
        "mu_star",
        "h",
        "c",
        "bound_lo_ok",
        "bound_hi_ok",
    ];
    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.seed.to_string(),
            float_cell(self.lambda_star),
            float_cell(self.mu_star),
            float_cell(self.h),
            optional_float_cell(self.c),
            self.bound_lo_ok.to_string(),
            self.bound_hi_ok.to_string(),
        ]
    }
}

#[derive(Debug, Serialize)]
pub struct LearnRow {
    pub method: &'static str,
    pub n: usize,
    pub delta: f64,
    pub n_delta: f64,
    pub trials: Option<u64>,
    pub ci_halfwidth: Option<f64>,
}

impl CsvRow for LearnRow {
    const HEADER: &'static [&'static str] =
        &["method", "n", "delta", "n_delta", "trials", "ci_halfwidth"];
    fn cells(&self) -> Vec<String> {
        vec![
            self.method.to_string(),
            self.n.to_string(),
            float_cell(self.delta),
            float_cell(self.n_delta),
            optional_u64_cell(self.trials),
            optional_float_cell(self.ci_halfwidth),
        ]
    }
}

#[derive(Debug, Serialize)]
pub struct HarmonicRow {
    pub n: usize,
    pub beta: f64,
    pub trials: u64,
    pub statistic_name: &'static str,
    pub estimate: f64,
    pub stderr: f64,
}

impl CsvRow for HarmonicRow {
    const HEADER: &'static [&'static str] = &[
        "n",
        "beta",
        "trials",
        "statistic_name",
        "estimate",
        "stderr",
    ];
    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            float_cell(self.beta),
            self.trials.to_string(),
            self.statistic_name.to_string(),
            float_cell(self.estimate),
            float_cell(self.stderr),
        ]
    }
}

#[derive(Debug, Serialize)]
pub struct YRow {
    pub n: usize,
    pub trial: u64,
    pub y: f64,
}

impl CsvRow for YRow {
    const HEADER: &'static [&'static str] = &["n", "trial", "y"];
    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.trial.to_string(),
            float_cell(self.y),
        ]
    }
}

#[derive(Debug, Serialize)]
pub struct StableRow {
    pub trial: u64,
    pub value: f64,
}

impl CsvRow for StableRow {
    const HEADER: &'static [&'static str] = &["trial", "value"];
    fn cells(&self) -> Vec<String> {
        vec![self.trial.to_string(), float_cell(self.value)]
    }
}

#[derive(Debug, Serialize)]
pub struct ScalingCsvRow {
    pub n: usize,
    pub beta: f64,
    pub delta: f64,
    pub method: &'static str,
    pub n_delta: f64,
    pub estimator: &'static str,
    pub stderr: f64,
    pub seed: u64,
}

impl CsvRow for ScalingCsvRow {
    const HEADER: &'static [&'static str] = &[
        "n",
        "beta",
        "delta",
        "method",
        "n_delta",
        "estimator",
        "stderr",
        "seed",
    ];
    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            float_cell(self.beta),
            float_cell(self.delta),
            self.method.to_string(),
            float_cell(self.n_delta),
            self.estimator.to_string(),
            float_cell(self.stderr),
            self.seed.to_string(),
        ]
    }
}

#[derive(Serialize)]
struct Fits {
    power_law: ScalingFit,
    ratio_n_log_n: ScalingFit,
    ratio_linear_n: ScalingFit,
}

#[derive(Serialize)]
struct ScalingSummary<'a> {
    schema_version: u32,
    config: &'a EffectiveConfig,
    bands_calibrated: bool,
    fits: Fits,
}

/// Re-export for integration tests.
pub fn parse_csv_text(text: &str) -> Option<ParsedCsv> {
    parse_csv(text)
}
