//! Global Euler obstruction from the polar series, Milnor numbers, and the
//! Euler characteristic of hypersurfaces with isolated singularities.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{generic_slice, is_smooth, singular_ideal, VarietySpec};
use crate::ideal::{Ideal, KrullDimension};
use crate::polar::{agreeing_trials, alpha_series, AlphaSeries};
use crate::poly::univariate::rational_roots;
use crate::poly::{Monomial, Polynomial, UniPoly};
use crate::{seed, Config, Point, Poly, Rational};

/// Parses `"r1,r2,..."` with each entry an integer or `a/b`.
pub fn parse_point(text: &str) -> Result<Point> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<Rational>()
                .map_err(|_| Error::InvalidArgument(format!("`{}` is not a rational number", s.trim())))
        })
        .collect()
}

mod point_strings {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::Point;

    pub fn serialize<S: Serializer>(p: &Point, s: S) -> Result<S::Ok, S::Error> {
        p.iter().map(ToString::to_string).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Point, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter().map(|s| s.parse().map_err(serde::de::Error::custom)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MilnorRecord {
    #[serde(with = "point_strings")]
    pub point: Point,
    pub mu: usize,
    /// Milnor number of a generic hyperplane section through the point.
    pub mu_sectional: usize,
}

/// `values[k - 1]` for `k = 1..=d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaSeries {
    pub values: Vec<usize>,
}

fn sign(exponent: usize) -> i64 {
    if exponent.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Signed terms `(j, (-1)^(d-j+1), alpha_j)` of the alternating sum.
pub fn euler_obstruction_terms(alpha: &AlphaSeries) -> Vec<(usize, i64, usize)> {
    let d = alpha.dim();
    (1..=d + 1).map(|j| (j, sign(d + 1 - j), alpha.alpha(j))).collect()
}

pub fn euler_obstruction_from_alpha(alpha: &AlphaSeries) -> i64 {
    euler_obstruction_terms(alpha).into_iter().map(|(_, s, a)| s * a as i64).sum()
}

pub fn global_euler_obstruction(v: &VarietySpec, seed: u64, config: &Config) -> Result<i64> {
    Ok(euler_obstruction_from_alpha(&alpha_series(v, seed, config)?))
}

/// Both sides of `Eu(V) = Eu(V ∩ H) + (-1)^d α₁(V)`, each from its own
/// α-series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceIdentity {
    pub eu: i64,
    pub slice_eu: i64,
    pub alpha_one: usize,
    pub holds: bool,
}

pub fn slice_identity(v: &VarietySpec, seed: u64, config: &Config) -> Result<SliceIdentity> {
    if v.dim() == 0 {
        return Err(Error::DimensionMismatch { expected: "positive dimension".into(), found: "0".into() });
    }
    let alpha = alpha_series(v, seed::derive(seed, "identity", 0), config)?;
    let slice = generic_slice(v, seed::derive(seed, "identity-slice", 0), None, config)?;
    let slice_eu = global_euler_obstruction(&slice, seed::derive(seed, "identity-slice-eu", 0), config)?;
    let eu = euler_obstruction_from_alpha(&alpha);
    let alpha_one = alpha.alpha(1);
    let holds = eu == slice_eu + sign(v.dim()) * alpha_one as i64;
    Ok(SliceIdentity { eu, slice_eu, alpha_one, holds })
}

/// The right-hand side `Σ_k (-1)^(d-k+1) β_k` of the difference formula.
pub fn beta_alternating_sum(beta: &BetaSeries) -> i64 {
    let d = beta.values.len();
    beta.values.iter().enumerate().map(|(i, &b)| sign(d - (i + 1) + 1) * b as i64).sum()
}

fn monomials_of_degree(n: usize, k: u32) -> Vec<Monomial> {
    fn go(var: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var + 1 == cur.len() {
            cur[var] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[var] = e;
            go(var + 1, left - e, cur, out);
        }
        cur[var] = 0;
    }
    let mut out = Vec::new();
    go(0, k, &mut vec![0; n], &mut out);
    out
}

/// Milnor number of the hypersurface `f = 0` at `q`: the stable value of
/// `dim R/(J + m^k)` where `J` is the Jacobian ideal at `q`. Zero at smooth
/// points.
pub fn milnor_number(f: &Poly, q: &[Rational], config: &Config) -> Result<usize> {
    config.validate()?;
    if q.len() != f.nvars() {
        return Err(Error::InvalidArgument(format!("point has {} coordinates, expected {}", q.len(), f.nvars())));
    }
    if !f.eval(q).is_zero() {
        return Err(Error::InvalidArgument("point does not lie on the hypersurface".into()));
    }
    if f.is_zero() {
        return Err(Error::NonIsolatedSingularity("zero polynomial".into()));
    }
    let g = f.translate(q);
    let vars = g.vars().clone();
    let n = vars.len();
    let origin = vec![Rational::zero(); n];
    let gradient = g.gradient();
    if gradient.iter().any(|p| !p.eval(&origin).is_zero()) {
        return Ok(0);
    }
    let jac = Ideal::new(&vars, gradient).with_spair_limit(config.spair_limit);
    let maximal = Ideal::new(&vars, (0..n).map(|i| Polynomial::var(&vars, i)).collect());
    if jac.krull_dimension()? != KrullDimension::Dim(0) {
        // the origin lies on V(J); check that it is an isolated point of it
        let away = jac.saturation(&maximal)?;
        if !away.sum(&maximal).is_unit()? {
            return Err(Error::NonIsolatedSingularity(format!(
                "critical locus of the gradient is positive-dimensional at {q:?}"
            )));
        }
    }
    let mut previous = None;
    for k in 1..=config.milnor_cap {
        let mut gens = jac.generators().to_vec();
        gens.extend(
            monomials_of_degree(n, k)
                .into_iter()
                .map(|m| Polynomial::from_terms(&vars, [(m, Rational::from_integer(1.into()))])),
        );
        let dim = Ideal::new(&vars, gens).with_spair_limit(config.spair_limit).quotient_vector_dimension()?;
        if previous == Some(dim) {
            return Ok(dim);
        }
        previous = Some(dim);
    }
    Err(Error::NonIsolatedSingularity(format!("no stabilisation up to order {}", config.milnor_cap)))
}

fn require_hypersurface(v: &VarietySpec) -> Result<&Poly> {
    match v.equations() {
        [f] => Ok(f),
        eqs => Err(Error::InvalidArgument(format!("expected a hypersurface, got {} equations", eqs.len()))),
    }
}

/// Milnor number at `q` of a generic hyperplane section through `q`,
/// agreed on by `config.trials` independent hyperplanes.
pub fn sectional_milnor(v: &VarietySpec, q: &[Rational], seed: u64, config: &Config) -> Result<usize> {
    config.validate()?;
    let f = require_hypersurface(v)?;
    if v.dim() == 0 {
        return Err(Error::DimensionMismatch { expected: "positive dimension".into(), found: "0".into() });
    }
    if q.len() != v.ambient_dim() || !f.eval(q).is_zero() {
        return Err(Error::InvalidArgument("point does not lie on the hypersurface".into()));
    }
    let image = &q[..q.len() - 1];
    let (mu, _) = agreeing_trials(seed, "sectional", config, "sectional Milnor number", |s| {
        let slice = generic_slice(v, s, Some(q), config)?;
        let g = slice
            .equations()
            .first()
            .ok_or_else(|| Error::GenericityFailure("hyperplane contains the hypersurface".into()))?;
        milnor_number(g, image, config).map(Some)
    })?;
    Ok(mu)
}

fn as_univariate(p: &Poly, var: usize) -> UniPoly<Rational> {
    let deg = p.degree_in(var).unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (m, c) in p.terms() {
        coeffs[m.exponents()[var] as usize] += c;
    }
    UniPoly::new(coeffs)
}

/// Singular points of a hypersurface, which must be finitely many and have
/// rational coordinates. Sorted ascending.
pub fn singular_points(v: &VarietySpec, config: &Config) -> Result<Vec<Point>> {
    require_hypersurface(v)?;
    let sing = singular_ideal(v, config)?;
    match sing.krull_dimension()? {
        KrullDimension::Empty => return Ok(Vec::new()),
        KrullDimension::Dim(0) => {}
        KrullDimension::Dim(_) => {
            return Err(Error::NonIsolatedSingularity("singular locus is positive-dimensional".into()))
        }
    }
    let names: Vec<&str> = v.vars().iter().map(String::as_str).collect();
    let mut coordinates: Vec<Vec<Rational>> = Vec::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        let others: Vec<&str> = names.iter().filter(|n| *n != name).copied().collect();
        let elim = sing.eliminate(&others)?;
        let univariate = elim
            .generators()
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| as_univariate(g, i))
            .reduce(|a, b| a.gcd(&b))
            .ok_or_else(|| Error::NonIsolatedSingularity(format!("no eliminant in `{name}`")))?;
        let roots =
            rational_roots(&univariate).map_err(|e| Error::UnsupportedSingularLocus(format!("`{name}`: {e}")))?;
        coordinates.push(roots);
    }
    let mut points: Vec<Point> = vec![Vec::new()];
    for axis in &coordinates {
        points = points
            .into_iter()
            .flat_map(|p| {
                axis.iter().map(move |c| {
                    let mut q = p.clone();
                    q.push(c.clone());
                    q
                })
            })
            .collect();
    }
    points.retain(|p| sing.generators().iter().all(|g| g.eval(p).is_zero()));
    points.sort();
    Ok(points)
}

/// Milnor and sectional Milnor numbers at every singular point.
pub fn milnor_records(v: &VarietySpec, seed: u64, config: &Config) -> Result<Vec<MilnorRecord>> {
    let f = require_hypersurface(v)?;
    singular_points(v, config)?
        .into_iter()
        .enumerate()
        .map(|(i, point)| {
            let mu = milnor_number(f, &point, config)?;
            let mu_sectional = sectional_milnor(v, &point, seed::derive(seed, "milnor-point", i as u64), config)?;
            Ok(MilnorRecord { point, mu, mu_sectional })
        })
        .collect()
}

fn beta_from_records(v: &VarietySpec, records: &[MilnorRecord], seed: u64, config: &Config) -> Result<BetaSeries> {
    let d = v.dim();
    let mut values = vec![0; d];
    values[0] = records.iter().map(|r| r.mu_sectional).sum();
    if d >= 2 {
        let slice = generic_slice(v, seed::derive(seed, "beta-slice", 0), None, config)?;
        if !is_smooth(&slice, seed::derive(seed, "beta-slice", 1), config)? {
            return Err(Error::GenericityFailure("generic hyperplane section is singular".into()));
        }
    }
    Ok(BetaSeries { values })
}

fn require_curve_or_higher(v: &VarietySpec) -> Result<()> {
    require_hypersurface(v)?;
    if v.dim() == 0 {
        return Err(Error::DimensionMismatch { expected: "positive dimension".into(), found: "0".into() });
    }
    Ok(())
}

/// β-series of a hypersurface with isolated singularities: only point strata
/// contribute, each by its sectional Milnor number.
pub fn beta_series_isolated(v: &VarietySpec, seed: u64, config: &Config) -> Result<BetaSeries> {
    require_curve_or_higher(v)?;
    let records = milnor_records(v, seed::derive(seed, "milnor", 0), config)?;
    beta_from_records(v, &records, seed::derive(seed, "beta", 0), config)
}

/// Both routes to χ of an isolated-singularity hypersurface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiComputation {
    /// `Eu + (-1)^d Σ μ⟨d-1⟩`.
    pub chi: i64,
    /// `Eu(slice) + (-1)^d (α₁ + β₁)`.
    pub chi_via_pencil: i64,
    pub eu: i64,
    pub slice_eu: i64,
    pub alpha_one: usize,
    pub beta_one: usize,
    pub sum_mu_sectional: usize,
}

impl ChiComputation {
    pub fn consistent(&self) -> bool {
        self.chi == self.chi_via_pencil
    }
}

fn chi_parts(
    v: &VarietySpec,
    alpha: &AlphaSeries,
    records: &[MilnorRecord],
    beta: &BetaSeries,
    seed: u64,
    config: &Config,
) -> Result<ChiComputation> {
    let d = v.dim();
    let eu = euler_obstruction_from_alpha(alpha);
    let sum_mu_sectional: usize = records.iter().map(|r| r.mu_sectional).sum();
    let chi = eu + sign(d) * sum_mu_sectional as i64;

    let slice = generic_slice(v, seed::derive(seed, "chi-slice", 0), None, config)?;
    if !is_smooth(&slice, seed::derive(seed, "chi-slice", 1), config)? {
        return Err(Error::GenericityFailure("generic hyperplane section is singular".into()));
    }
    let slice_eu = euler_obstruction_from_alpha(&alpha_series(&slice, seed::derive(seed, "chi-slice-eu", 0), config)?);
    let alpha_one = alpha.alpha(1);
    let beta_one = beta.values[0];
    let chi_via_pencil = slice_eu + sign(d) * (alpha_one + beta_one) as i64;
    Ok(ChiComputation { chi, chi_via_pencil, eu, slice_eu, alpha_one, beta_one, sum_mu_sectional })
}

/// χ of a hypersurface with isolated rational singular points, checked
/// against the pencil recursion through a generic slice.
pub fn chi_isolated(v: &VarietySpec, seed: u64, config: &Config) -> Result<ChiComputation> {
    require_curve_or_higher(v)?;
    let alpha = alpha_series(v, seed::derive(seed, "eu", 0), config)?;
    let records = milnor_records(v, seed::derive(seed, "milnor", 0), config)?;
    let beta = beta_from_records(v, &records, seed::derive(seed, "beta", 0), config)?;
    let parts = chi_parts(v, &alpha, &records, &beta, seed::derive(seed, "chi", 0), config)?;
    if !parts.consistent() {
        return Err(Error::ConsistencyFailure(format!(
            "chi = {} from Milnor numbers but {} from the pencil recursion",
            parts.chi, parts.chi_via_pencil
        )));
    }
    Ok(parts)
}

/// `χ(Y) - Eu(Y)` from the β-series, verified against the direct values.
pub fn chi_minus_eu(v: &VarietySpec, seed: u64, config: &Config) -> Result<i64> {
    let report = InvariantReport::compute(v, seed, config, true)?;
    let diff = beta_alternating_sum(report.beta.as_ref().expect("beta requested"));
    if !report.agreement {
        return Err(Error::ConsistencyFailure(format!(
            "beta sum {diff} but chi - eu = {}",
            report.chi.unwrap() - report.eu
        )));
    }
    Ok(diff)
}

/// Everything computed for one variety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub alpha: AlphaSeries,
    pub eu: i64,
    pub chi: Option<i64>,
    pub chi_detail: Option<ChiComputation>,
    pub beta: Option<BetaSeries>,
    pub milnor: Vec<MilnorRecord>,
    pub seeds: Vec<u64>,
    /// All cross-checks agree: both χ routes, and `χ - Eu` equals the
    /// alternating β sum.
    pub agreement: bool,
}

impl InvariantReport {
    pub fn compute(v: &VarietySpec, seed: u64, config: &Config, with_chi: bool) -> Result<Self> {
        let eu_seed = seed::derive(seed, "eu", 0);
        let alpha = alpha_series(v, eu_seed, config)?;
        let eu = euler_obstruction_from_alpha(&alpha);
        let mut seeds = vec![seed, eu_seed];
        if !with_chi {
            return Ok(InvariantReport {
                alpha,
                eu,
                chi: None,
                chi_detail: None,
                beta: None,
                milnor: Vec::new(),
                seeds,
                agreement: true,
            });
        }
        require_curve_or_higher(v)?;
        let milnor_seed = seed::derive(seed, "milnor", 0);
        let beta_seed = seed::derive(seed, "beta", 0);
        let chi_seed = seed::derive(seed, "chi", 0);
        seeds.extend([milnor_seed, beta_seed, chi_seed]);
        let milnor = milnor_records(v, milnor_seed, config)?;
        let beta = beta_from_records(v, &milnor, beta_seed, config)?;
        let parts = chi_parts(v, &alpha, &milnor, &beta, chi_seed, config)?;
        let agreement = parts.consistent() && parts.chi - eu == beta_alternating_sum(&beta);
        Ok(InvariantReport {
            alpha,
            eu,
            chi: Some(parts.chi),
            chi_detail: Some(parts),
            beta: Some(beta),
            milnor,
            seeds,
            agreement,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, vars};

    fn cfg() -> Config {
        Config::default()
    }

    fn spec(vs: &[&str], eqs: &[&str], d: usize) -> VarietySpec {
        VarietySpec::parse(vs, eqs, d, &cfg()).unwrap()
    }

    fn q(xs: &[i64]) -> Point {
        xs.iter().map(|&x| crate::rational(x)).collect()
    }

    #[test]
    fn alternating_sum_signs() {
        let a = AlphaSeries { values: vec![0, 2, 2], seeds_used: vec![], trials: 3 };
        assert_eq!(euler_obstruction_terms(&a), vec![(1, 1, 0), (2, -1, 2), (3, 1, 2)]);
        assert_eq!(euler_obstruction_from_alpha(&a), 0);
        let a = AlphaSeries { values: vec![1, 3], seeds_used: vec![], trials: 3 };
        assert_eq!(euler_obstruction_from_alpha(&a), 2);
        let points = AlphaSeries { values: vec![4], seeds_used: vec![], trials: 3 };
        assert_eq!(euler_obstruction_from_alpha(&points), 4);
    }

    #[test]
    fn beta_sum_signs() {
        assert_eq!(beta_alternating_sum(&BetaSeries { values: vec![1] }), -1);
        assert_eq!(beta_alternating_sum(&BetaSeries { values: vec![1, 0] }), 1);
        assert_eq!(beta_alternating_sum(&BetaSeries { values: vec![0] }), 0);
    }

    #[test]
    fn euler_obstruction_examples() {
        assert_eq!(global_euler_obstruction(&spec(&["a", "b", "c"], &["c"], 2), 0, &cfg()).unwrap(), 1);
        assert_eq!(global_euler_obstruction(&spec(&["x", "y"], &["y^2 - x^3"], 1), 0, &cfg()).unwrap(), 2);
        assert_eq!(global_euler_obstruction(&spec(&["x", "y", "z"], &["x*y - z^2"], 2), 0, &cfg()).unwrap(), 0);
    }

    #[test]
    fn milnor_a_k_closed_form() {
        let v = vars(&["x", "y"]);
        for k in 1..=5 {
            let f = parse_polynomial(&format!("y^2 + x^{}", k + 1), &v).unwrap();
            assert_eq!(milnor_number(&f, &q(&[0, 0]), &cfg()).unwrap(), k);
        }
    }

    #[test]
    fn milnor_smooth_and_quadratic() {
        let v = vars(&["x", "y"]);
        let f = parse_polynomial("x*y - 1", &v).unwrap();
        assert_eq!(milnor_number(&f, &q(&[1, 1]), &cfg()).unwrap(), 0);
        let v3 = vars(&["x", "y", "z"]);
        let f = parse_polynomial("x^2 + y^2 + z^2", &v3).unwrap();
        assert_eq!(milnor_number(&f, &q(&[0, 0, 0]), &cfg()).unwrap(), 1);
    }

    #[test]
    fn milnor_at_translated_point() {
        let v = vars(&["x", "y"]);
        // cusp moved to (1, -2)
        let f = parse_polynomial("(y + 2)^2 - (x - 1)^3", &v).unwrap();
        assert_eq!(milnor_number(&f, &q(&[1, -2]), &cfg()).unwrap(), 2);
    }

    #[test]
    fn milnor_rejects_non_isolated_and_off_points() {
        let v = vars(&["x", "y"]);
        let f = parse_polynomial("y^2", &v).unwrap();
        assert!(matches!(milnor_number(&f, &q(&[0, 0]), &cfg()), Err(Error::NonIsolatedSingularity(_))));
        let f = parse_polynomial("x*y - 1", &v).unwrap();
        assert!(milnor_number(&f, &q(&[0, 0]), &cfg()).is_err());
    }

    #[test]
    fn milnor_cap_limits_stabilisation() {
        let v = vars(&["x", "y"]);
        let f = parse_polynomial("y^2 + x^6", &v).unwrap();
        let tight = Config { milnor_cap: 4, ..cfg() };
        assert!(matches!(milnor_number(&f, &q(&[0, 0]), &tight), Err(Error::NonIsolatedSingularity(_))));
        let loose = Config { milnor_cap: 6, ..cfg() };
        assert_eq!(milnor_number(&f, &q(&[0, 0]), &loose).unwrap(), 5);
        assert_eq!(milnor_number(&f, &q(&[0, 0]), &cfg()).unwrap(), 5);
    }

    #[test]
    fn sectional_milnor_examples() {
        let origin2 = q(&[0, 0]);
        assert_eq!(sectional_milnor(&spec(&["x", "y"], &["y^2 - x^2*(x + 1)"], 1), &origin2, 0, &cfg()).unwrap(), 1);
        assert_eq!(sectional_milnor(&spec(&["x", "y"], &["y^2 - x^3"], 1), &origin2, 0, &cfg()).unwrap(), 1);
        let cone = spec(&["x", "y", "z"], &["x*y - z^2"], 2);
        assert_eq!(sectional_milnor(&cone, &q(&[0, 0, 0]), 0, &cfg()).unwrap(), 1);
    }

    #[test]
    fn singular_point_examples() {
        assert_eq!(singular_points(&spec(&["x", "y"], &["y^2 - x^2*(x + 1)"], 1), &cfg()).unwrap(), vec![q(&[0, 0])]);
        assert!(singular_points(&spec(&["x", "y"], &["x*y - 1"], 1), &cfg()).unwrap().is_empty());
        let irrational = spec(&["x", "y"], &["(x^2 - 2)^2 + y^2"], 1);
        assert!(matches!(singular_points(&irrational, &cfg()), Err(Error::UnsupportedSingularLocus(_))));
        let two_nodes = spec(&["x", "y"], &["y^2 - (x^2 - 1)^2"], 1);
        assert_eq!(singular_points(&two_nodes, &cfg()).unwrap(), vec![q(&[-1, 0]), q(&[1, 0])]);
        let reducible = spec(&["x", "y", "z"], &["x*y"], 2);
        assert!(matches!(singular_points(&reducible, &cfg()), Err(Error::NonIsolatedSingularity(_))));
    }

    #[test]
    fn beta_examples() {
        assert_eq!(
            beta_series_isolated(&spec(&["x", "y"], &["y^2 - x^2*(x + 1)"], 1), 0, &cfg()).unwrap().values,
            vec![1]
        );
        assert_eq!(
            beta_series_isolated(&spec(&["x", "y", "z"], &["x*y - z^2"], 2), 0, &cfg()).unwrap().values,
            vec![1, 0]
        );
        assert_eq!(beta_series_isolated(&spec(&["x", "y"], &["x*y - 1"], 1), 0, &cfg()).unwrap().values, vec![0]);
    }

    #[test]
    fn chi_examples() {
        let nodal = chi_isolated(&spec(&["x", "y"], &["y^2 - x^2*(x + 1)"], 1), 0, &cfg()).unwrap();
        assert_eq!((nodal.chi, nodal.eu, nodal.sum_mu_sectional), (0, 1, 1));
        assert_eq!(nodal.chi_via_pencil, 0);
        assert_eq!(chi_isolated(&spec(&["x", "y"], &["y^2 - x^3"], 1), 0, &cfg()).unwrap().chi, 1);
        assert_eq!(chi_isolated(&spec(&["x", "y", "z"], &["x*y - z^2"], 2), 0, &cfg()).unwrap().chi, 1);
    }

    #[test]
    fn chi_minus_eu_examples() {
        assert_eq!(chi_minus_eu(&spec(&["x", "y"], &["y^2 - x^2*(x + 1)"], 1), 0, &cfg()).unwrap(), -1);
        assert_eq!(chi_minus_eu(&spec(&["x", "y", "z"], &["x*y - z^2"], 2), 0, &cfg()).unwrap(), 1);
        assert_eq!(chi_minus_eu(&spec(&["x", "y"], &["x*y - 1"], 1), 0, &cfg()).unwrap(), 0);
    }

    #[test]
    fn parse_point_accepts_fractions() {
        assert_eq!(
            parse_point("1, -2/3,0").unwrap(),
            vec![crate::rational(1), Rational::new((-2).into(), 3.into()), crate::rational(0)]
        );
        assert!(parse_point("1,x").is_err());
    }

    #[test]
    fn milnor_record_serializes_points_as_strings() {
        let r = MilnorRecord { point: parse_point("1/2,0").unwrap(), mu: 1, mu_sectional: 1 };
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"point":["1/2","0"],"mu":1,"mu_sectional":1}"#);
        assert_eq!(serde_json::from_str::<MilnorRecord>(&s).unwrap(), r);
    }
}
