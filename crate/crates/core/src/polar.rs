//! Polar multiplicities: Morse-point counts of generic linear functions on
//! the regular part, and the series obtained by repeated generic slicing.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    generic_linear_form, generic_slice, plane_section_count, singular_ideal, GenericForm, VarietySpec,
};
use crate::ideal::{Ideal, KrullDimension};
use crate::poly::{jacobian, minors, Polynomial};
use crate::{seed, Config};

/// `values[j - 1]` is the j-th polar number, `j = 1..=d+1`; the last entry is
/// the generic plane-section count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaSeries {
    pub values: Vec<usize>,
    pub seeds_used: Vec<u64>,
    pub trials: usize,
}

impl AlphaSeries {
    /// One-based access matching the usual indexing.
    pub fn alpha(&self, j: usize) -> usize {
        self.values[j - 1]
    }

    /// Dimension of the variety the series belongs to.
    pub fn dim(&self) -> usize {
        self.values.len() - 1
    }
}

/// Critical locus of `form` on `V`: the equations together with the maximal
/// minors of the Jacobian augmented by the gradient of `form`.
pub fn critical_ideal(v: &VarietySpec, form: &GenericForm, config: &Config) -> Result<Ideal> {
    let mut matrix = jacobian(v.equations());
    matrix.push(form.coefficients.iter().map(|c| Polynomial::constant(v.vars(), c.clone())).collect());
    let mut gens = v.equations().to_vec();
    gens.extend(minors(&matrix, v.codim() + 1)?);
    Ok(Ideal::new(v.vars(), gens).with_spair_limit(config.spair_limit))
}

/// Critical points on the regular part for one linear form, or `None` when
/// they are not isolated (the form was not generic).
fn regular_critical_points(v: &VarietySpec, trial_seed: u64, config: &Config) -> Result<Option<usize>> {
    let form = generic_linear_form(v.ambient_dim(), trial_seed, config.coeff_bound)?;
    let crit = critical_ideal(v, &form, config)?;
    let regular = crit.saturation(&singular_ideal(v, config)?)?;
    match regular.krull_dimension()? {
        KrullDimension::Empty => Ok(Some(0)),
        KrullDimension::Dim(0) => {
            Ok(Some(regular.distinct_point_count(seed::derive(trial_seed, "count", 0), config.coeff_bound)?.count))
        }
        KrullDimension::Dim(_) => Ok(None),
    }
}

/// First polar number: Morse points of a generic linear function on the
/// regular part, agreed on by `config.trials` independent forms.
///
/// Trials whose critical locus is not finite are discarded; the rest must
/// agree exactly.
pub fn alpha_one(v: &VarietySpec, seed: u64, config: &Config) -> Result<usize> {
    Ok(alpha_one_with_seeds(v, seed, config)?.0)
}

/// Rounds of fresh trials attempted before a disagreement is reported.
const TRIAL_ROUNDS: u64 = 3;

/// Runs `config.trials` seeded trials of `trial` in parallel and returns the
/// common value. Trials answering `None` are discarded. A disagreement means
/// some draw was special, so a fresh round is tried before giving up.
pub(crate) fn agreeing_trials<F>(
    seed: u64,
    label: &str,
    config: &Config,
    what: &str,
    trial: F,
) -> Result<(usize, Vec<u64>)>
where
    F: Fn(u64) -> Result<Option<usize>> + Sync,
{
    let trials = config.trials as u64;
    let mut used = Vec::new();
    let mut last = Vec::new();
    for round in 0..TRIAL_ROUNDS {
        let seeds: Vec<u64> = (0..trials).map(|t| seed::derive(seed, label, round * trials + t)).collect();
        used.extend(&seeds);
        let outcomes = seeds.par_iter().map(|&s| trial(s)).collect::<Result<Vec<_>>>()?;
        let counts: Vec<usize> = outcomes.into_iter().flatten().collect();
        match counts.first() {
            Some(&first) if counts.iter().all(|&c| c == first) => return Ok((first, used)),
            _ => last = counts,
        }
    }
    if last.is_empty() {
        return Err(Error::GenericityFailure(format!("{what}: no admissible trial")));
    }
    Err(Error::GenericityFailure(format!("{what}: trials disagree: {last:?}")))
}

fn alpha_one_with_seeds(v: &VarietySpec, seed: u64, config: &Config) -> Result<(usize, Vec<u64>)> {
    config.validate()?;
    if v.dim() == 0 {
        return Err(Error::DimensionMismatch { expected: "positive dimension".into(), found: "0".into() });
    }
    agreeing_trials(seed, "alpha-one", config, "Morse point count", |s| regular_critical_points(v, s, config))
}

/// The full series: `alpha_one` of the successive generic slices, closed by
/// the generic plane-section count.
pub fn alpha_series(v: &VarietySpec, seed: u64, config: &Config) -> Result<AlphaSeries> {
    config.validate()?;
    let d = v.dim();
    if d == 0 {
        let s = seed::derive(seed, "alpha-points", 0);
        let count = v.ideal(config).distinct_point_count(s, config.coeff_bound)?.count;
        return Ok(AlphaSeries { values: vec![count], seeds_used: vec![s], trials: config.trials });
    }
    let mut values = Vec::with_capacity(d + 1);
    let mut seeds_used = Vec::new();
    let mut current = v.clone();
    for k in 1..=d {
        if k > 1 {
            let s = seed::derive(seed, "alpha-slice", k as u64);
            seeds_used.push(s);
            current = generic_slice(&current, s, None, config)?;
        }
        let (value, trial_seeds) = alpha_one_with_seeds(&current, seed::derive(seed, "alpha", k as u64), config)?;
        values.push(value);
        seeds_used.extend(trial_seeds);
    }
    let s = seed::derive(seed, "degree", 0);
    seeds_used.push(s);
    values.push(plane_section_count(v, s, config)?);
    Ok(AlphaSeries { values, seeds_used, trials: config.trials })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(vs: &[&str], eqs: &[&str], d: usize) -> VarietySpec {
        VarietySpec::parse(vs, eqs, d, &Config::default()).unwrap()
    }

    #[test]
    fn alpha_one_examples() {
        let c = Config::default();
        assert_eq!(alpha_one(&spec(&["x", "y"], &["x*y - 1"], 1), 0, &c).unwrap(), 2);
        assert_eq!(alpha_one(&spec(&["x", "y"], &["y^2 - x^3"], 1), 0, &c).unwrap(), 1);
        assert_eq!(alpha_one(&spec(&["x", "y", "z"], &["x*y - z^2"], 2), 0, &c).unwrap(), 0);
    }

    #[test]
    fn alpha_one_rejects_points() {
        let e = alpha_one(&spec(&["x"], &["x^2 - 1"], 0), 0, &Config::default()).unwrap_err();
        assert!(matches!(e, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn series_examples() {
        let c = Config::default();
        assert_eq!(alpha_series(&spec(&["x", "y"], &["x*y - 1"], 1), 0, &c).unwrap().values, vec![2, 2]);
        assert_eq!(alpha_series(&spec(&["x", "y"], &["y^2 - x^2*(x + 1)"], 1), 0, &c).unwrap().values, vec![2, 3]);
        assert_eq!(alpha_series(&spec(&["x", "y", "z"], &["x*y - z^2"], 2), 0, &c).unwrap().values, vec![0, 2, 2]);
    }

    #[test]
    fn series_of_points_is_their_count() {
        let s = alpha_series(&spec(&["x", "y"], &["x^2 - 1", "y"], 0), 0, &Config::default()).unwrap();
        assert_eq!(s.values, vec![2]);
    }

    #[test]
    fn linear_subspace() {
        let s = alpha_series(&spec(&["a", "b", "c"], &["c"], 2), 0, &Config::default()).unwrap();
        assert_eq!(s.values, vec![0, 0, 1]);
    }

    #[test]
    fn single_trial_is_allowed() {
        let c = Config { trials: 1, ..Config::default() };
        assert_eq!(alpha_one(&spec(&["x", "y"], &["x*y - 1"], 1), 4, &c).unwrap(), 2);
        let bad = Config { trials: 0, ..Config::default() };
        assert!(alpha_one(&spec(&["x", "y"], &["x*y - 1"], 1), 4, &bad).is_err());
    }
}
