//! Stratification fixtures and the two dual formulas for χ(Y), checked
//! against each other and against the engine.

use std::collections::HashSet;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euler::{chi_isolated, global_euler_obstruction};
use crate::geometry::{generic_slice, is_smooth, VarietyFile, VarietySpec};
use crate::polar::alpha_one;
use crate::{seed, Config};

/// One stratum `A` of a Whitney stratification of `Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRecord {
    pub name: String,
    pub dim: usize,
    /// χ(A).
    pub chi: i64,
    /// Local Euler obstruction of `Y` along `A`.
    pub eu_normal: i64,
    /// Euler characteristic of the complex normal Morse data, shifted.
    pub chi_nmd: i64,
    /// Global Euler obstruction of the closure of `A`.
    pub eu_closure: i64,
    /// Reduced Betti number of the complex link, when it is concentrated in
    /// a single degree.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cl_betti: Option<i64>,
    /// Equations of the closure, in the ambient variables of `Y`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equations: Option<Vec<String>>,
}

/// Either the variety itself or a path to its JSON file, resolved against
/// the fixture's directory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VarietyRef {
    Inline(VarietyFile),
    Path(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureFile {
    /// May be omitted when the variety is supplied separately.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variety: Option<VarietyRef>,
    pub strata: Vec<StratumRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_total: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_slice: Option<i64>,
}

/// A loaded fixture. Loading checks only that the variety parses; the
/// stratification invariants are checked by [`StratificationFixture::validate`].
#[derive(Clone, Debug)]
pub struct StratificationFixture {
    pub variety: VarietySpec,
    pub strata: Vec<StratumRecord>,
    pub chi_total: Option<i64>,
    pub chi_slice: Option<i64>,
}

fn fixture_error(msg: impl Into<String>) -> Error {
    Error::Fixture(msg.into())
}

fn sign(exponent: usize) -> i64 {
    if exponent.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl StratificationFixture {
    pub fn from_file(file: &FixtureFile, base_dir: Option<&Path>, config: &Config) -> Result<Self> {
        let variety_file = match &file.variety {
            None => return Err(fixture_error("fixture names no variety")),
            Some(VarietyRef::Inline(v)) => v.clone(),
            Some(VarietyRef::Path(p)) => {
                let path = match base_dir {
                    Some(dir) if p.is_relative() => dir.join(p),
                    _ => p.clone(),
                };
                let text =
                    std::fs::read_to_string(&path).map_err(|e| fixture_error(format!("{}: {e}", path.display())))?;
                serde_json::from_str(&text).map_err(|e| fixture_error(format!("{}: {e}", path.display())))?
            }
        };
        Ok(Self::with_variety(VarietySpec::from_file(&variety_file, config)?, file))
    }

    /// Uses `variety` in place of whatever the file names.
    pub fn with_variety(variety: VarietySpec, file: &FixtureFile) -> Self {
        StratificationFixture {
            variety,
            strata: file.strata.clone(),
            chi_total: file.chi_total,
            chi_slice: file.chi_slice,
        }
    }

    pub fn read_file(path: &Path) -> Result<FixtureFile> {
        let text = std::fs::read_to_string(path).map_err(|e| fixture_error(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| fixture_error(format!("{}: {e}", path.display())))
    }

    pub fn load(path: &Path, config: &Config) -> Result<Self> {
        Self::from_file(&Self::read_file(path)?, path.parent(), config)
    }

    pub fn dim(&self) -> usize {
        self.variety.dim()
    }

    /// The stratum of dimension `dim Y`. Requires a valid fixture.
    pub fn top(&self) -> Option<&StratumRecord> {
        self.strata.iter().find(|s| s.dim == self.dim())
    }

    /// Every violated invariant, in a fixed order.
    pub fn violations(&self) -> Vec<String> {
        let d = self.dim();
        let mut out = Vec::new();
        let mut names = HashSet::new();
        for s in &self.strata {
            if !names.insert(&s.name) {
                out.push(format!("duplicate stratum name `{}`", s.name));
            }
            if s.dim > d {
                out.push(format!("stratum `{}` has dimension {} > {d}", s.name, s.dim));
            }
        }
        let tops: Vec<_> = self.strata.iter().filter(|s| s.dim == d).collect();
        if tops.len() != 1 {
            out.push(format!("expected one stratum of dimension {d}, found {}", tops.len()));
        }
        for s in &tops {
            if s.eu_normal != 1 {
                out.push(format!("top stratum `{}` has eu_normal {} instead of 1", s.name, s.eu_normal));
            }
            if s.chi_nmd != 1 {
                out.push(format!("top stratum `{}` has chi_nmd {} instead of 1", s.name, s.chi_nmd));
            }
        }
        for s in self.strata.iter().filter(|s| s.dim == 0) {
            if s.eu_closure != 1 {
                out.push(format!("point stratum `{}` has eu_closure {} instead of 1", s.name, s.eu_closure));
            }
        }
        if let Some(total) = self.chi_total {
            let sum: i64 = self.strata.iter().map(|s| s.chi).sum();
            if sum != total {
                out.push(format!("strata chi sum to {sum} but chi_total is {total}"));
            }
        }
        for s in self.strata.iter().filter(|s| s.dim < d) {
            if let Some(b) = s.cl_betti {
                let chi_link = 1 + sign(d - s.dim - 1) * b;
                if s.chi_nmd != 1 - chi_link {
                    out.push(format!(
                        "stratum `{}` has chi_nmd {} but its complex link gives {}",
                        s.name,
                        s.chi_nmd,
                        1 - chi_link
                    ));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        match self.violations().as_slice() {
            [] => Ok(()),
            v => Err(fixture_error(v.join("; "))),
        }
    }

    fn sum_formula_one(&self) -> i64 {
        self.strata.iter().map(|s| s.chi * s.eu_normal).sum()
    }

    fn sum_formula_two(&self) -> i64 {
        self.strata.iter().map(|s| s.eu_closure * s.chi_nmd).sum()
    }

    /// Closure of a stratum as a variety. `None` when a positive-dimensional
    /// lower stratum carries no equations.
    pub fn closure(&self, s: &StratumRecord, config: &Config) -> Result<Option<VarietySpec>> {
        if s.dim == self.dim() && s.equations.is_none() {
            return Ok(Some(self.variety.clone()));
        }
        match &s.equations {
            Some(eqs) => Ok(Some(VarietySpec::parse(self.variety.vars(), eqs, s.dim, config)?)),
            None => Ok(None),
        }
    }
}

/// `Σ χ(A) · Eu_Y(A)`, which equals `Eu(Y)`.
pub fn eval_formula_one(f: &StratificationFixture) -> Result<i64> {
    f.validate()?;
    Ok(f.sum_formula_one())
}

/// `Σ Eu(closure A) · χ(normal Morse data of A)`, which equals `χ(Y)`.
pub fn eval_formula_two(f: &StratificationFixture) -> Result<i64> {
    f.validate()?;
    Ok(f.sum_formula_two())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilEvaluation {
    pub value: i64,
    pub chi_slice: i64,
    /// `(name, α₁ of the closure, signed contribution)`.
    pub terms: Vec<(String, usize, i64)>,
}

fn chi_slice(f: &StratificationFixture, seed: u64, config: &Config) -> Result<i64> {
    if let Some(c) = f.chi_slice {
        return Ok(c);
    }
    let slice = generic_slice(&f.variety, seed::derive(seed, "pencil-slice", 0), None, config)?;
    if !is_smooth(&slice, seed::derive(seed, "pencil-slice", 1), config)? {
        return Err(fixture_error("generic slice is singular; provide chi_slice in the fixture"));
    }
    global_euler_obstruction(&slice, seed::derive(seed, "pencil-slice-eu", 0), config)
}

/// `χ(Y ∩ H) + Σ (-1)^{dim A} α₁(closure A) · χ(normal Morse data of A)`.
pub fn eval_chi_pencil(f: &StratificationFixture, seed: u64, config: &Config) -> Result<PencilEvaluation> {
    f.validate()?;
    let base = chi_slice(f, seed, config)?;
    let mut terms = Vec::with_capacity(f.strata.len());
    for (i, s) in f.strata.iter().enumerate() {
        let alpha = if s.dim == 0 {
            1
        } else {
            let closure = f
                .closure(s, config)?
                .ok_or_else(|| fixture_error(format!("stratum `{}` needs closure equations", s.name)))?;
            alpha_one(&closure, seed::derive(seed, "pencil-alpha", i as u64), config)?
        };
        terms.push((s.name.clone(), alpha, sign(s.dim) * alpha as i64 * s.chi_nmd));
    }
    let value = base + terms.iter().map(|t| t.2).sum::<i64>();
    Ok(PencilEvaluation { value, chi_slice: base, terms })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Match,
    Mismatch,
    /// Nothing to compare against.
    Unavailable,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityRow {
    pub check: String,
    pub computed: Option<i64>,
    pub expected: Option<i64>,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

impl DualityRow {
    fn compare(check: impl Into<String>, computed: Result<i64>, expected: Option<i64>) -> Self {
        let check = check.into();
        match computed {
            Err(e) => {
                DualityRow { check, computed: None, expected, status: CheckStatus::Error, message: Some(e.to_string()) }
            }
            Ok(c) => {
                let status = match expected {
                    None => CheckStatus::Unavailable,
                    Some(e) if e == c => CheckStatus::Match,
                    Some(_) => CheckStatus::Mismatch,
                };
                DualityRow { check, computed: Some(c), expected, status, message: None }
            }
        }
    }

    fn failed(&self) -> bool {
        matches!(self.status, CheckStatus::Mismatch | CheckStatus::Error)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityReport {
    pub eu: Option<i64>,
    pub chi: Option<i64>,
    pub rows: Vec<DualityRow>,
    pub all_consistent: bool,
}

/// Runs every check on a fixture. Failures are reported per row; this never
/// returns an error.
pub fn check_duality(f: &StratificationFixture, seed: u64, config: &Config) -> DualityReport {
    let mut rows = Vec::new();
    let violations = f.violations();
    rows.push(DualityRow {
        check: "fixture_invariants".into(),
        computed: None,
        expected: None,
        status: if violations.is_empty() { CheckStatus::Match } else { CheckStatus::Error },
        message: (!violations.is_empty()).then(|| violations.join("; ")),
    });

    let eu = global_euler_obstruction(&f.variety, seed::derive(seed, "duality-eu", 0), config);
    let engine_chi = if f.variety.is_hypersurface() && f.dim() >= 1 {
        chi_isolated(&f.variety, seed::derive(seed, "duality-chi", 0), config).map(|c| c.chi).ok()
    } else {
        None
    };
    let chi_expected = f.chi_total.or(engine_chi);

    rows.push(DualityRow::compare("formula_one", Ok(f.sum_formula_one()), eu.as_ref().ok().copied()));
    if let Err(e) = &eu {
        rows.push(DualityRow::compare("engine_eu", Err(e.clone()), None));
    }
    rows.push(DualityRow::compare("formula_two", Ok(f.sum_formula_two()), chi_expected));
    if violations.is_empty() {
        let pencil = eval_chi_pencil(f, seed::derive(seed, "duality-pencil", 0), config).map(|p| p.value);
        rows.push(DualityRow::compare("chi_pencil", pencil, chi_expected));
    } else {
        rows.push(DualityRow {
            check: "chi_pencil".into(),
            computed: None,
            expected: chi_expected,
            status: CheckStatus::Error,
            message: Some("skipped: fixture invariants violated".into()),
        });
    }
    if let (Some(c), Some(t)) = (engine_chi, f.chi_total) {
        rows.push(DualityRow::compare("engine_chi", Ok(c), Some(t)));
    }

    for (i, s) in f.strata.iter().enumerate().filter(|(_, s)| s.dim > 0) {
        let label = format!("eu_closure:{}", s.name);
        let engine = match f.closure(s, config) {
            Ok(Some(c)) => global_euler_obstruction(&c, seed::derive(seed, "duality-closure", i as u64), config),
            Ok(None) => {
                rows.push(DualityRow {
                    check: label,
                    computed: None,
                    expected: Some(s.eu_closure),
                    status: CheckStatus::Unavailable,
                    message: Some("no closure equations".into()),
                });
                continue;
            }
            Err(e) => Err(e),
        };
        rows.push(DualityRow::compare(label, engine, Some(s.eu_closure)));
    }

    let all_consistent = !rows.iter().any(DualityRow::failed);
    DualityReport { eu: eu.ok(), chi: chi_expected, rows, all_consistent }
}
