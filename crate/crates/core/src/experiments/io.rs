//! Deterministic file emission and ingestion for experiment runs.
//!
//! All floating-point values are written with 17 significant digits
//! (`{:.16e}`), which round-trips `f64` bit-exactly, so re-running an
//! identical configuration byte-reproduces every file.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{ExperimentConfig, ExperimentOutput, MetricRow, TraceFile};
use crate::bc::BcTraceRow;
use crate::error::{Error, Result};
use crate::valuedice::TraceRow;

/// Formats a float with 17 significant digits for bit-exact round-trips.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// Renders a saddle-point optimizer trace.
pub fn gda_trace_file(condition: &str, seed: u64, trace: &[TraceRow]) -> TraceFile {
    TraceFile {
        name: format!("trace_{condition}_{seed}.csv"),
        header: "env_steps,grad_steps,loss,value_gap,tv_to_bc,diverged".into(),
        rows: trace
            .iter()
            .map(|r| {
                format!(
                    "{},{},{},{},{},{}",
                    r.env_steps,
                    r.grad_steps,
                    fmt_f64(r.loss),
                    fmt_f64(r.value_gap),
                    fmt_f64(r.tv_to_bc),
                    u8::from(r.diverged)
                )
            })
            .collect(),
    }
}

/// Renders a maximum-likelihood training trace.
pub fn bc_trace_file(condition: &str, seed: u64, trace: &[BcTraceRow]) -> TraceFile {
    TraceFile {
        name: format!("trace_{condition}_{seed}.csv"),
        header: "step,nll,reg,value_gap".into(),
        rows: trace
            .iter()
            .map(|r| {
                format!(
                    "{},{},{},{}",
                    r.step,
                    fmt_f64(r.nll),
                    fmt_f64(r.reg),
                    fmt_f64(r.value_gap)
                )
            })
            .collect(),
    }
}

/// The verdict file: named checks plus an overall flag.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Verdict {
    pub experiment: String,
    pub pass: bool,
    pub checks: Vec<super::Check>,
}

/// One aggregate row of `summary.csv`.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub condition: String,
    pub metric: String,
    pub mean: f64,
    pub std: f64,
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

/// Aggregates metric rows per (condition, metric), in deterministic order.
/// The standard deviation is the population form (divide by n).
pub fn summarize_rows(rows: &[MetricRow]) -> Vec<SummaryRow> {
    let mut groups: BTreeMap<(String, String), Vec<f64>> = BTreeMap::new();
    for row in rows {
        groups
            .entry((row.condition.clone(), row.metric.clone()))
            .or_default()
            .push(row.value);
    }
    groups
        .into_iter()
        .map(|((condition, metric), values)| {
            let n = values.len();
            let mean = values.iter().sum::<f64>() / n as f64;
            let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n as f64;
            SummaryRow {
                condition,
                metric,
                mean,
                std: var.sqrt(),
                min: values.iter().cloned().fold(f64::INFINITY, f64::min),
                max: values.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
                n,
            }
        })
        .collect()
}

fn render_results_csv(rows: &[MetricRow]) -> String {
    let mut out = String::from("condition,seed,metric,value\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            row.condition,
            row.seed,
            row.metric,
            fmt_f64(row.value)
        );
    }
    out
}

fn render_summary_csv(rows: &[SummaryRow]) -> String {
    let mut out = String::from("condition,metric,mean,std,min,max,n\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            row.condition,
            row.metric,
            fmt_f64(row.mean),
            fmt_f64(row.std),
            fmt_f64(row.min),
            fmt_f64(row.max),
            row.n
        );
    }
    out
}

fn render_errors_csv(errors: &[(String, u64, String)]) -> String {
    let mut out = String::from("condition,seed,message\n");
    for (condition, seed, message) in errors {
        let clean = message.replace('\n', " ").replace(',', ";");
        let _ = writeln!(out, "{condition},{seed},{clean}");
    }
    out
}

/// Writes the complete output layout for one run into `dir`.
pub fn write_output(dir: &Path, cfg: &ExperimentConfig, output: &ExperimentOutput) -> Result<()> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join("config.toml"), cfg.to_toml_string()?)?;
    fs::write(dir.join("results.csv"), render_results_csv(&output.results))?;
    fs::write(
        dir.join("summary.csv"),
        render_summary_csv(&summarize_rows(&output.results)),
    )?;
    if !output.errors.is_empty() {
        fs::write(dir.join("errors.csv"), render_errors_csv(&output.errors))?;
    }
    for trace in &output.traces {
        let mut text = trace.header.clone();
        text.push('\n');
        for row in &trace.rows {
            text.push_str(row);
            text.push('\n');
        }
        fs::write(dir.join(&trace.name), text)?;
    }
    for (name, content) in &output.reports {
        fs::write(dir.join(name), content)?;
    }
    let verdict = Verdict {
        experiment: output.experiment.clone(),
        pass: output.pass(),
        checks: output.checks.clone(),
    };
    let json =
        serde_json::to_string_pretty(&verdict).map_err(|e| Error::Io(std::io::Error::other(e)))?;
    fs::write(dir.join("verdict.json"), json + "\n")?;
    Ok(())
}

/// Parses a `results.csv`, returning good rows and per-row error reports
/// for malformed lines (which do not abort the rest).
pub fn parse_results_csv(text: &str) -> (Vec<MetricRow>, Vec<String>) {
    let mut rows = Vec::new();
    let mut errors = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 {
            if line != "condition,seed,metric,value" {
                errors.push(format!("line 1: unexpected header {line:?}"));
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            errors.push(format!(
                "line {}: expected 4 fields, got {}",
                i + 1,
                fields.len()
            ));
            continue;
        }
        let seed = match fields[1].parse::<u64>() {
            Ok(s) => s,
            Err(e) => {
                errors.push(format!("line {}: bad seed {:?}: {e}", i + 1, fields[1]));
                continue;
            }
        };
        let value = match fields[3].parse::<f64>() {
            Ok(v) => v,
            Err(e) => {
                errors.push(format!("line {}: bad value {:?}: {e}", i + 1, fields[3]));
                continue;
            }
        };
        rows.push(MetricRow {
            condition: fields[0].to_string(),
            seed,
            metric: fields[2].to_string(),
            value,
        });
    }
    (rows, errors)
}

/// Renders an aligned text table of a summary, for terminal display.
pub fn render_summary_table(rows: &[SummaryRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<24} {:<24} {:>24} {:>24} {:>24} {:>24} {:>6}",
        "condition", "metric", "mean", "std", "min", "max", "n"
    );
    for row in rows {
        let _ = writeln!(
            out,
            "{:<24} {:<24} {:>24} {:>24} {:>24} {:>24} {:>6}",
            row.condition,
            row.metric,
            fmt_f64(row.mean),
            fmt_f64(row.std),
            fmt_f64(row.min),
            fmt_f64(row.max),
            row.n
        );
    }
    out
}

/// Reads a run directory's `results.csv` and produces the rendered summary
/// table plus any row-level parse errors.
pub fn summarize_dir(dir: &Path) -> Result<(String, Vec<String>)> {
    let path = dir.join("results.csv");
    let text = fs::read_to_string(&path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })?;
    let (rows, errors) = parse_results_csv(&text);
    let table = render_summary_table(&summarize_rows(&rows));
    Ok((table, errors))
}

/// Recursively collects all `verdict.json` files under `dir`.
fn collect_verdicts(dir: &Path, found: &mut Vec<(PathBuf, Verdict)>) -> Result<()> {
    for entry in fs::read_dir(dir)? {
        let entry = entry?;
        let path = entry.path();
        if path.is_dir() {
            collect_verdicts(&path, found)?;
        } else if path.file_name().is_some_and(|n| n == "verdict.json") {
            let text = fs::read_to_string(&path)?;
            let verdict: Verdict = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            found.push((path, verdict));
        }
    }
    Ok(())
}

/// Checks every verdict file under `dir`. Returns overall success and a
/// human-readable report; success requires at least one verdict, all
/// passing.
pub fn verify_dir(dir: &Path) -> Result<(bool, String)> {
    let mut found = Vec::new();
    collect_verdicts(dir, &mut found)?;
    found.sort_by(|a, b| a.0.cmp(&b.0));
    if found.is_empty() {
        return Ok((
            false,
            format!("no verdict.json found under {}\n", dir.display()),
        ));
    }
    let mut all_pass = true;
    let mut report = String::new();
    for (path, verdict) in &found {
        let status = if verdict.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(
            report,
            "{status} {} ({})",
            verdict.experiment,
            path.display()
        );
        for check in &verdict.checks {
            let mark = if check.pass { "ok" } else { "FAILED" };
            let _ = writeln!(report, "  [{mark}] {}: {}", check.name, check.detail);
        }
        all_pass &= verdict.pass;
    }
    Ok((all_pass, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_round_trips_exactly() {
        for v in [
            0.1,
            -3.25e-17,
            1.0 / 3.0,
            6.02e23,
            f64::MIN_POSITIVE,
            -0.0,
            9.999999999999999e-5,
        ] {
            let text = fmt_f64(v);
            let back: f64 = text.parse().unwrap();
            assert_eq!(v.to_bits(), back.to_bits(), "round trip of {text}");
        }
    }

    #[test]
    fn summary_of_known_values() {
        let rows: Vec<MetricRow> = (1..=5)
            .map(|i| MetricRow {
                condition: "c".into(),
                seed: i as u64,
                metric: "v".into(),
                value: i as f64,
            })
            .collect();
        let summary = summarize_rows(&rows);
        assert_eq!(summary.len(), 1);
        let row = &summary[0];
        assert_eq!(row.mean, 3.0);
        assert_eq!(row.std, 2.0f64.sqrt());
        assert_eq!(row.min, 1.0);
        assert_eq!(row.max, 5.0);
        assert_eq!(row.n, 5);
    }

    #[test]
    fn summary_of_single_and_identical_values() {
        let one = vec![MetricRow {
            condition: "c".into(),
            seed: 0,
            metric: "v".into(),
            value: 7.5,
        }];
        let s = summarize_rows(&one);
        assert_eq!(s[0].mean, 7.5);
        assert_eq!(s[0].std, 0.0);
        let five: Vec<MetricRow> = (0..5)
            .map(|i| MetricRow {
                condition: "c".into(),
                seed: i,
                metric: "v".into(),
                value: 2.25,
            })
            .collect();
        let s = summarize_rows(&five);
        assert_eq!(s[0].std, 0.0);
        assert_eq!(s[0].n, 5);
    }

    #[test]
    fn malformed_rows_are_reported_without_sinking_good_rows() {
        let text = "condition,seed,metric,value\n\
                    a,1,gap,1.5e0\n\
                    broken line without commas\n\
                    b,notanumber,gap,2.0e0\n\
                    c,3,gap,3.0e0\n";
        let (rows, errors) = parse_results_csv(text);
        assert_eq!(rows.len(), 2);
        assert_eq!(errors.len(), 2);
        assert_eq!(rows[0].condition, "a");
        assert_eq!(rows[1].condition, "c");
        assert!(errors[0].contains("line 3"));
        assert!(errors[1].contains("line 4"));
    }
}
