//! Command-line experiment runner.
//!
//! * `ilab run <config.toml> [--out DIR] [--seeds a,b,c] [--override k=v]...`
//!   runs the configured experiment and writes CSVs, reports, and a
//!   verdict into the output directory.
//! * `ilab summarize <dir>` aggregates a run's `results.csv` into a table.
//! * `ilab verify <dir>` checks every `verdict.json` under the directory
//!   and exits 0 only if all of them pass.
//!
//! Output directory precedence: `--out` flag, then the config's `out`
//! field, then `$ILAB_OUT/<experiment>`, then `./runs/<experiment>`.
//! Value precedence within the config: `--override` beats `--seeds`
//! beats the file.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use imitation_lab::experiments::io::{summarize_dir, verify_dir};
use imitation_lab::experiments::{run_to_dir, ExperimentConfig};
use imitation_lab::Error;

#[derive(Parser)]
#[command(
    name = "ilab",
    version,
    about = "Exactly evaluable imitation-learning experiments on tabular MDPs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a configured experiment and write its output files.
    Run {
        /// Path to the experiment configuration (TOML).
        config: PathBuf,
        /// Output directory (default: config `out`, then $ILAB_OUT/<name>,
        /// then ./runs/<name>).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Replace the seed list, e.g. --seeds 1,2,3.
        #[arg(long, value_delimiter = ',')]
        seeds: Option<Vec<u64>>,
        /// Override any config key by dotted path, e.g.
        /// --override gda.steps=2000 or --override m=1,4,16. Repeatable;
        /// applied after --seeds.
        #[arg(long = "override", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
    /// Aggregate a run directory's results.csv into a summary table.
    Summarize {
        /// Run directory containing results.csv.
        dir: PathBuf,
    },
    /// Check all verdict.json files under a directory tree.
    Verify {
        /// Directory to search for verdicts.
        dir: PathBuf,
    },
}

/// Parses an override value: integer, float, or boolean when possible,
/// comma-separated values as an array, anything else as a string.
fn parse_override_value(raw: &str) -> toml::Value {
    if raw.contains(',') {
        return toml::Value::Array(raw.split(',').map(parse_override_value).collect());
    }
    if let Ok(v) = raw.parse::<i64>() {
        return toml::Value::Integer(v);
    }
    if let Ok(v) = raw.parse::<f64>() {
        return toml::Value::Float(v);
    }
    if let Ok(v) = raw.parse::<bool>() {
        return toml::Value::Boolean(v);
    }
    toml::Value::String(raw.trim_matches('"').to_string())
}

/// Sets `value` at the dotted `path` inside the config document, creating
/// intermediate tables as needed.
fn apply_override(root: &mut toml::Value, path: &str, value: toml::Value) -> Result<(), Error> {
    let mut cursor = root;
    let parts: Vec<&str> = path.split('.').collect();
    if parts.iter().any(|p| p.is_empty()) {
        return Err(Error::Config(format!("bad override path {path:?}")));
    }
    for part in &parts[..parts.len() - 1] {
        let table = cursor
            .as_table_mut()
            .ok_or_else(|| Error::Config(format!("{path:?} crosses a non-table value")))?;
        cursor = table
            .entry(part.to_string())
            .or_insert_with(|| toml::Value::Table(toml::map::Map::new()));
    }
    let table = cursor
        .as_table_mut()
        .ok_or_else(|| Error::Config(format!("{path:?} crosses a non-table value")))?;
    table.insert(parts[parts.len() - 1].to_string(), value);
    Ok(())
}

fn load_config(
    path: &PathBuf,
    seeds: Option<Vec<u64>>,
    overrides: &[String],
) -> Result<ExperimentConfig, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    let mut doc: toml::Value = text
        .parse()
        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    if let Some(seeds) = seeds {
        let arr = toml::Value::Array(
            seeds
                .into_iter()
                .map(|s| toml::Value::Integer(s as i64))
                .collect(),
        );
        apply_override(&mut doc, "seeds", arr)?;
    }
    for entry in overrides {
        let (key, raw) = entry
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("override {entry:?} is not KEY=VALUE")))?;
        apply_override(&mut doc, key, parse_override_value(raw))?;
    }
    let cfg: ExperimentConfig = doc
        .try_into()
        .map_err(|e| Error::Config(format!("bad config after overrides: {e}")))?;
    cfg.validate()?;
    Ok(cfg)
}

fn resolve_out_dir(flag: Option<PathBuf>, cfg: &ExperimentConfig) -> PathBuf {
    if let Some(dir) = flag {
        return dir;
    }
    if let Some(dir) = &cfg.out {
        return PathBuf::from(dir);
    }
    let root = std::env::var_os("ILAB_OUT")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("runs"));
    root.join(cfg.experiment.name())
}

fn real_main(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Run {
            config,
            out,
            seeds,
            overrides,
        } => {
            let cfg = load_config(&config, seeds, &overrides)?;
            let dir = resolve_out_dir(out, &cfg);
            let output = run_to_dir(&cfg, &dir)?;
            println!("experiment: {}", output.experiment);
            println!("output dir: {}", dir.display());
            for check in &output.checks {
                let status = if check.pass { "ok" } else { "FAILED" };
                println!("[{status}] {}: {}", check.name, check.detail);
            }
            for (condition, seed, message) in &output.errors {
                println!("[recorded error] {condition} seed {seed}: {message}");
            }
            println!("verdict: {}", if output.pass() { "PASS" } else { "FAIL" });
            Ok(ExitCode::SUCCESS)
        }
        Command::Summarize { dir } => {
            let (table, errors) = summarize_dir(&dir)?;
            print!("{table}");
            for error in &errors {
                eprintln!("[malformed row] {error}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { dir } => {
            let (all_pass, report) = verify_dir(&dir)?;
            print!("{report}");
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match real_main(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
