//! Loads variety and fixture files, dispatches one computation and renders
//! the result as JSON or text.
//!
//! Every random choice is derived from `--seed` by hashing the seed with a
//! purpose label and an index (see `eulerdata::seed`), so a report depends
//! only on its input files and flags.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use eulerdata::euler::{
    euler_obstruction_terms, milnor_number, parse_point, sectional_milnor, singular_points, slice_identity,
    ChiComputation, InvariantReport, MilnorRecord,
};
use eulerdata::geometry::{plane_section_count, VarietyFile, VarietySpec};
use eulerdata::polar::AlphaSeries;
use eulerdata::strat::{check_duality, DualityReport, StratificationFixture};
use eulerdata::{seed, Config, Error};

pub const SPAIR_LIMIT_ENV: &str = "EULERDATA_SPAIR_LIMIT";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Alpha,
    Eu,
    Chi,
    Beta,
    Milnor,
    Degree,
    Duality,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Alpha => "alpha",
            Command::Eu => "eu",
            Command::Chi => "chi",
            Command::Beta => "beta",
            Command::Milnor => "milnor",
            Command::Degree => "degree",
            Command::Duality => "duality",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    #[default]
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    pub trials: usize,
    pub coeff_bound: u32,
    pub milnor_cap: u32,
    pub format: Format,
    pub spair_limit: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        let engine = Config::default();
        RunConfig {
            seed: 0,
            trials: engine.trials,
            coeff_bound: engine.coeff_bound,
            milnor_cap: engine.milnor_cap,
            format: Format::Text,
            spair_limit: engine.spair_limit,
        }
    }
}

impl RunConfig {
    pub fn engine(&self) -> Config {
        Config {
            trials: self.trials,
            coeff_bound: self.coeff_bound,
            milnor_cap: self.milnor_cap,
            spair_limit: self.spair_limit,
        }
    }
}

pub const STATUS_OK: &str = "ok";
pub const STATUS_MISMATCH: &str = "Mismatch";

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: Vec<String>,
    pub alpha: Option<Vec<usize>>,
    pub eu: Option<i64>,
    pub chi: Option<i64>,
    pub beta: Option<Vec<usize>>,
    pub milnor: Option<Vec<MilnorRecord>>,
    pub degree: Option<usize>,
    pub sum_mu_sectional: Option<usize>,
    pub chi_detail: Option<ChiComputation>,
    pub duality: Option<DualityReport>,
    pub seeds_used: Vec<u64>,
    pub agreement: Option<bool>,
    pub status: String,
    pub message: Option<String>,
}

impl Report {
    /// 0 when everything computed and agreed, 2 on a consistency mismatch,
    /// 1 on any other failure.
    pub fn exit_code(&self) -> i32 {
        match self.status.as_str() {
            STATUS_OK => 0,
            STATUS_MISMATCH | "ConsistencyFailure" => 2,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }
}

struct Failure {
    status: &'static str,
    message: String,
}

impl Failure {
    fn engine(context: &str, e: Error) -> Self {
        Failure { status: e.status(), message: format!("{context}: {e}") }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path, status: &'static str) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure { status: "IoError", message: format!("{}: {e}", path.display()) })?;
    serde_json::from_str(&text).map_err(|e| Failure {
        status,
        message: format!("{}: line {} column {}: {e}", path.display(), e.line(), e.column()),
    })
}

fn load_variety(path: &Path, config: &Config) -> Result<VarietySpec, Failure> {
    let file: VarietyFile = read_json(path, "ParseError")?;
    VarietySpec::from_file(&file, config).map_err(|e| Failure::engine(&path.display().to_string(), e))
}

fn alpha_of(report: &InvariantReport) -> Option<Vec<usize>> {
    Some(report.alpha.values.clone())
}

fn run_inner(
    command: Command,
    paths: &[PathBuf],
    config: &RunConfig,
    point: Option<&str>,
    report: &mut Report,
) -> Result<(), Failure> {
    let engine = config.engine();
    engine.validate().map_err(|e| Failure::engine("configuration", e))?;
    let expected_paths = if command == Command::Duality { 1..=2 } else { 1..=1 };
    if !expected_paths.contains(&paths.len()) {
        return Err(Failure {
            status: "InvalidArgument",
            message: format!("`{}` takes {:?} input files, got {}", command.name(), expected_paths, paths.len()),
        });
    }
    let path = &paths[0];
    let ctx = path.display().to_string();
    let wrap = |e: Error| Failure::engine(&ctx, e);
    let seed = config.seed;
    report.seeds_used.push(seed);

    match command {
        Command::Alpha | Command::Eu => {
            let v = load_variety(path, &engine)?;
            let r = InvariantReport::compute(&v, seed, &engine, false).map_err(wrap)?;
            report.seeds_used = r.seeds.clone();
            report.alpha = alpha_of(&r);
            if command == Command::Eu {
                report.eu = Some(r.eu);
                let agreement = if v.dim() == 0 {
                    true
                } else {
                    let check_seed = seed::derive(seed, "eu-check", 0);
                    report.seeds_used.push(check_seed);
                    slice_identity(&v, check_seed, &engine).map_err(wrap)?.holds
                };
                report.agreement = Some(agreement);
            }
        }
        Command::Chi | Command::Beta => {
            let v = load_variety(path, &engine)?;
            let r = InvariantReport::compute(&v, seed, &engine, true).map_err(wrap)?;
            report.seeds_used = r.seeds.clone();
            report.alpha = alpha_of(&r);
            report.eu = Some(r.eu);
            report.chi = r.chi;
            report.beta = r.beta.as_ref().map(|b| b.values.clone());
            report.sum_mu_sectional = r.chi_detail.as_ref().map(|c| c.sum_mu_sectional);
            report.milnor = Some(r.milnor.clone());
            report.chi_detail = r.chi_detail.clone();
            report.agreement = Some(r.agreement);
        }
        Command::Milnor => {
            let v = load_variety(path, &engine)?;
            let records = match point {
                Some(text) => {
                    let q = parse_point(text).map_err(wrap)?;
                    if q.len() != v.ambient_dim() {
                        return Err(Failure {
                            status: "InvalidArgument",
                            message: format!(
                                "point has {} coordinates, ambient dimension is {}",
                                q.len(),
                                v.ambient_dim()
                            ),
                        });
                    }
                    if !v.is_hypersurface() {
                        return Err(wrap(Error::InvalidArgument("Milnor numbers need a hypersurface".into())));
                    }
                    let mu = milnor_number(&v.equations()[0], &q, &engine).map_err(wrap)?;
                    let s = seed::derive(seed, "milnor-point", 0);
                    report.seeds_used.push(s);
                    let mu_sectional =
                        if v.dim() == 0 || mu == 0 { 0 } else { sectional_milnor(&v, &q, s, &engine).map_err(wrap)? };
                    vec![MilnorRecord { point: q, mu, mu_sectional }]
                }
                None => {
                    let s = seed::derive(seed, "milnor", 0);
                    report.seeds_used.push(s);
                    // Fail early with a clear status when the locus is not a finite rational set.
                    singular_points(&v, &engine).map_err(wrap)?;
                    eulerdata::euler::milnor_records(&v, s, &engine).map_err(wrap)?
                }
            };
            report.milnor = Some(records);
        }
        Command::Degree => {
            let v = load_variety(path, &engine)?;
            let r = InvariantReport::compute(&v, seed, &engine, false).map_err(wrap)?;
            report.seeds_used = r.seeds.clone();
            let degree = r.alpha.alpha(v.dim() + 1);
            let s = seed::derive(seed, "degree-check", 0);
            report.seeds_used.push(s);
            let check = plane_section_count(&v, s, &engine).map_err(wrap)?;
            report.alpha = alpha_of(&r);
            report.degree = Some(degree);
            report.agreement = Some(degree == check);
        }
        Command::Duality => {
            let fixture = if paths.len() == 2 {
                let v = load_variety(path, &engine)?;
                let file = StratificationFixture::read_file(&paths[1])
                    .map_err(|e| Failure::engine(&paths[1].display().to_string(), e))?;
                StratificationFixture::with_variety(v, &file)
            } else {
                StratificationFixture::load(path, &engine).map_err(wrap)?
            };
            let d = check_duality(&fixture, seed, &engine);
            report.eu = d.eu;
            report.chi = d.chi;
            report.agreement = Some(d.all_consistent);
            report.duality = Some(d);
        }
    }
    Ok(())
}

/// Runs one command. Never panics on bad input; failures land in
/// `status` and `message`.
pub fn run(command: Command, paths: &[PathBuf], config: &RunConfig, point: Option<&str>) -> Report {
    let mut report = Report {
        command: command.name().to_string(),
        input: paths.iter().map(|p| p.display().to_string()).collect(),
        ..Report::default()
    };
    match run_inner(command, paths, config, point, &mut report) {
        Ok(()) => {
            report.status = if report.agreement == Some(false) { STATUS_MISMATCH } else { STATUS_OK }.to_string();
        }
        Err(f) => {
            report.status = f.status.to_string();
            report.message = Some(f.message);
        }
    }
    report
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Human-readable rendering. The Euler obstruction is shown as its signed
/// sum over the α-series, one term per line.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "command: {}", report.command);
    let _ = writeln!(out, "input: {}", report.input.join(" "));
    if let Some(alpha) = &report.alpha {
        let _ = writeln!(out, "alpha: ({})", join(alpha));
        if report.eu.is_some() {
            let series = AlphaSeries { values: alpha.clone(), seeds_used: Vec::new(), trials: 0 };
            let d = series.dim();
            let _ = writeln!(out, "eu = sum over j of (-1)^(d-j+1) alpha_j, d = {d}");
            for (j, sign, a) in euler_obstruction_terms(&series) {
                let _ = writeln!(out, "  j = {j}: (-1)^{} * {a} = {}", d + 1 - j, sign * a as i64);
            }
        }
    }
    if let Some(eu) = report.eu {
        let _ = writeln!(out, "eu: {eu}");
    }
    if let Some(chi) = report.chi {
        let _ = writeln!(out, "chi: {chi}");
    }
    if let Some(c) = &report.chi_detail {
        let _ = writeln!(
            out,
            "chi via pencil: eu(slice) {} + (-1)^d * (alpha_1 {} + beta_1 {}) = {}",
            c.slice_eu, c.alpha_one, c.beta_one, c.chi_via_pencil
        );
    }
    if let Some(s) = report.sum_mu_sectional {
        let _ = writeln!(out, "sum of sectional milnor numbers: {s}");
    }
    if let Some(beta) = &report.beta {
        let _ = writeln!(out, "beta: ({})", join(beta));
    }
    if let Some(milnor) = &report.milnor {
        if milnor.is_empty() {
            let _ = writeln!(out, "milnor: no singular points");
        }
        for m in milnor {
            let _ = writeln!(out, "milnor at ({}): mu = {}, sectional = {}", join(&m.point), m.mu, m.mu_sectional);
        }
    }
    if let Some(degree) = report.degree {
        let _ = writeln!(out, "degree: {degree}");
    }
    if let Some(d) = &report.duality {
        for row in &d.rows {
            let show = |x: Option<i64>| x.map_or("-".to_string(), |v| v.to_string());
            let _ = write!(
                out,
                "  {:<24} computed {:>4}  expected {:>4}  {:?}",
                row.check,
                show(row.computed),
                show(row.expected),
                row.status
            );
            if let Some(m) = &row.message {
                let _ = write!(out, "  ({m})");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "all consistent: {}", d.all_consistent);
    }
    if let Some(a) = report.agreement {
        let _ = writeln!(out, "agreement: {a}");
    }
    let _ = writeln!(out, "seeds used: {}", join(&report.seeds_used));
    let _ = writeln!(out, "status: {}", report.status);
    if let Some(m) = &report.message {
        let _ = writeln!(out, "message: {m}");
    }
    out
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json() + "\n",
        Format::Text => render_text(report),
    }
}
