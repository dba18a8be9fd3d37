//! The `build`, `check` and `verify` subcommands.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use segrelab_core::complement::{check_affine_axiom, AffineAxiom};
use segrelab_core::pls::{check_property, Property};

use crate::io::{read_json, BuildSpec, IncidenceJson};
use crate::suites::{find_suite, registry, run_suite, Ctx, Status, SuiteRecord, DEFAULT_MAX_POINTS};

pub const MAX_POINTS_ENV: &str = "SEGRELAB_MAX_POINTS";

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Failed = 1,
    Usage = 2,
}

/// A usage or configuration error, reported with exit status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn build(spec: &Path, out: &Path) -> Result<Exit, UsageError> {
    let spec: BuildSpec = read_json(spec).map_err(UsageError)?;
    let built = spec.build().map_err(|e| UsageError(e.to_string()))?;
    let json = IncidenceJson::from_space(&built.space);
    std::fs::write(out, json.to_pretty_string()).map_err(|e| UsageError(format!("{}: {e}", out.display())))?;
    println!("wrote {} points, {} lines to {}", json.points, json.lines.len(), out.display());
    Ok(Exit::Ok)
}

/// A property that `check` can evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Checkable {
    Global(Property),
    Axiom(AffineAxiom),
}

impl Checkable {
    fn parse(name: &str) -> Option<Self> {
        if let Some(p) = Property::parse(name) {
            return Some(Checkable::Global(p));
        }
        AffineAxiom::ALL
            .into_iter()
            .find(|a| serde_json::to_value(a).ok().as_ref().and_then(Value::as_str) == Some(name))
            .map(Checkable::Axiom)
    }

    fn names() -> Vec<String> {
        let mut out: Vec<String> = Property::ALL.iter().map(|p| p.name().to_string()).collect();
        out.extend(AffineAxiom::ALL.iter().map(|a| serde_json::to_value(a).expect("serialisable").as_str().unwrap_or_default().to_string()));
        out
    }
}

/// Parses `name` or `name=true|false`.
pub fn parse_property_list(list: &str) -> Result<Vec<(String, Checkable, Option<bool>)>, UsageError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let (name, expected) = match item.split_once('=') {
                Some((n, v)) => {
                    let v = v.parse::<bool>().map_err(|_| UsageError(format!("expected true or false in '{item}'")))?;
                    (n.trim(), Some(v))
                }
                None => (item, None),
            };
            let prop = Checkable::parse(name)
                .ok_or_else(|| UsageError(format!("unknown property '{name}'; known: {}", Checkable::names().join(", "))))?;
            Ok((name.to_string(), prop, expected))
        })
        .collect()
}

pub fn check(input: &Path, props: &str) -> Result<Exit, UsageError> {
    let props = parse_property_list(props)?;
    if props.is_empty() {
        return Err(UsageError("no properties given".into()));
    }
    let json: IncidenceJson = read_json(input).map_err(UsageError)?;
    let space = json.to_space().map_err(|e| UsageError(format!("{}: {e}", input.display())))?;
    let mut exit = Exit::Ok;
    for (name, prop, expected) in props {
        let value = match prop {
            Checkable::Global(p) => check_property(space.structure(), p).map_err(|e| UsageError(e.to_string()))?,
            Checkable::Axiom(a) => {
                let par = space.parallelism().ok_or_else(|| UsageError(format!("'{name}' needs parallel_classes in the input")))?;
                check_affine_axiom(par, a)
            }
        };
        let verdict = match expected {
            Some(e) if e == value => " (expected)",
            Some(_) => {
                exit = Exit::Failed;
                " (MISMATCH)"
            }
            None => "",
        };
        println!("{name}: {value}{verdict}");
    }
    Ok(exit)
}

/// Resolves the point cap: flag, then environment, then the default.
pub fn resolve_max_points(flag: Option<usize>, env: Option<&str>) -> Result<usize, UsageError> {
    if let Some(m) = flag {
        return Ok(m);
    }
    match env {
        Some(v) => v.trim().parse().map_err(|_| UsageError(format!("{MAX_POINTS_ENV} must be a non-negative integer, got '{v}'"))),
        None => Ok(DEFAULT_MAX_POINTS),
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Suite ids, or `all`.
    pub suites: Vec<String>,
    pub ctx: Ctx,
    pub workers: usize,
    pub report: Option<PathBuf>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportConfig {
    pub suites: Vec<String>,
    pub seed: u64,
    pub p: Option<u32>,
    pub max_points: usize,
    pub workers: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub skipped_hypothesis: usize,
    pub total: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    /// Seconds since the Unix epoch at the start of the run.
    pub started_at: u64,
    pub config: ReportConfig,
    pub records: Vec<SuiteRecord>,
    pub summary: Summary,
    pub total_runtime_ms: u64,
}

/// Expands `all` and checks every id against the registry.
pub fn select_suites(ids: &[String]) -> Result<Vec<String>, UsageError> {
    let known: Vec<&str> = registry().iter().map(|s| s.id).collect();
    if ids.iter().any(|s| s == "all") {
        return Ok(known.iter().map(|s| s.to_string()).collect());
    }
    if ids.is_empty() {
        return Err(UsageError(format!("no suites given; registered suites:\n  {}", known.join("\n  "))));
    }
    let mut out = Vec::new();
    for id in ids {
        if find_suite(id).is_none() {
            return Err(UsageError(format!("unknown suite '{id}'; registered suites:\n  {}", known.join("\n  "))));
        }
        if !out.contains(id) {
            out.push(id.clone());
        }
    }
    out.sort();
    Ok(out)
}

pub fn run_verify(config: &VerifyConfig) -> Result<Report, UsageError> {
    let ids = select_suites(&config.suites)?;
    let started_at = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(config.workers).build().map_err(|e| UsageError(e.to_string()))?;
    let records: Vec<SuiteRecord> = pool.install(|| {
        ids.par_iter().map(|id| run_suite(&find_suite(id).expect("validated id"), &config.ctx)).collect()
    });
    let count = |s: Status| records.iter().filter(|r| r.result == s).count();
    let summary = Summary {
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skipped),
        skipped_hypothesis: count(Status::SkippedHypothesis),
        total: records.len(),
    };
    Ok(Report {
        tool: env!("CARGO_PKG_NAME").into(),
        version: env!("CARGO_PKG_VERSION").into(),
        started_at,
        config: ReportConfig {
            suites: ids,
            seed: config.ctx.seed,
            p: config.ctx.p,
            max_points: config.ctx.max_points,
            workers: config.workers,
        },
        records,
        summary,
        total_runtime_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn print_report(report: &Report, out: &mut impl Write) -> std::io::Result<()> {
    for r in &report.records {
        writeln!(out, "{:<18} {:<48} {:>8} ms  {}", r.result.as_str(), r.suite, r.wall_time_ms, r.instance)?;
        if r.result == Status::Fail {
            let detail = r.witness.get("failures").and_then(|f| f.get(0)).or_else(|| r.witness.get("error")).cloned().unwrap_or(json!(null));
            writeln!(out, "{:<18} {}", "", detail)?;
        }
    }
    let s = &report.summary;
    writeln!(out, "PASS {}/{}", s.passed, s.total)?;
    writeln!(out, "FAIL {}  SKIPPED {}  SKIPPED-HYPOTHESIS {}", s.failed, s.skipped, s.skipped_hypothesis)?;
    Ok(())
}

pub fn verify(config: &VerifyConfig) -> Result<Exit, UsageError> {
    let report = run_verify(config)?;
    print_report(&report, &mut std::io::stdout().lock()).map_err(|e| UsageError(e.to_string()))?;
    if let Some(path) = &config.report {
        let text = serde_json::to_string_pretty(&report).expect("serialisable") + "\n";
        std::fs::write(path, text).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    }
    Ok(if report.summary.failed == 0 { Exit::Ok } else { Exit::Failed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn max_points_precedence() {
        assert_eq!(resolve_max_points(Some(10), Some("20")).unwrap(), 10);
        assert_eq!(resolve_max_points(None, Some("20")).unwrap(), 20);
        assert_eq!(resolve_max_points(None, None).unwrap(), DEFAULT_MAX_POINTS);
        assert!(resolve_max_points(None, Some("lots")).is_err());
    }

    #[test]
    fn property_lists() {
        let ps = parse_property_list("veblenian, gamma=true,tamaschke=false").unwrap();
        assert_eq!(ps.len(), 3);
        assert_eq!(ps[0].1, Checkable::Global(Property::Veblenian));
        assert_eq!(ps[1].2, Some(true));
        assert_eq!(ps[2].1, Checkable::Axiom(AffineAxiom::Tamaschke));
        assert!(parse_property_list("shiny").is_err());
        assert!(parse_property_list("linear=maybe").is_err());
    }

    #[test]
    fn unknown_suite_lists_registry() {
        let e = select_suites(&["no-such-suite".into()]).unwrap_err();
        assert!(e.0.contains("gkz-iff-spiky"));
    }
}
