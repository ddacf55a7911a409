//! Affine varieties given by equations, their singular loci, and seeded
//! generic hyperplane slicing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{Ideal, KrullDimension};
use crate::poly::{jacobian, minors, parse_polynomial, vars, Monomial, Polynomial, Vars};
use crate::{seed, Config, Poly, Rational};

/// On-disk form of a variety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietyFile {
    pub ambient: usize,
    pub vars: Vec<String>,
    pub equations: Vec<String>,
    pub expected_dim: usize,
}

/// `Y ⊂ C^N` cut out by `equations`, of pure dimension `expected_dim`.
///
/// Inputs are assumed reduced; only the dimension is validated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietySpec {
    vars: Vars,
    equations: Vec<Poly>,
    expected_dim: usize,
}

impl VarietySpec {
    pub fn new(vars: &Vars, equations: Vec<Poly>, expected_dim: usize, config: &Config) -> Result<Self> {
        let spec = Self::unchecked(vars, equations, expected_dim)?;
        spec.check_dimension(config)?;
        Ok(spec)
    }

    fn unchecked(vars: &Vars, equations: Vec<Poly>, expected_dim: usize) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidArgument("a variety needs at least one variable".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidArgument(format!("variable `{v}` declared twice")));
            }
        }
        if expected_dim >= vars.len() {
            return Err(Error::DimensionMismatch {
                expected: format!("dimension below ambient {}", vars.len()),
                found: expected_dim.to_string(),
            });
        }
        let equations = equations.into_iter().filter(|e| !e.is_zero()).collect();
        Ok(VarietySpec { vars: vars.clone(), equations, expected_dim })
    }

    pub fn parse<S: AsRef<str>>(names: &[S], equations: &[S], expected_dim: usize, config: &Config) -> Result<Self> {
        let vars = vars(names);
        let eqs = equations.iter().map(|e| parse_polynomial(e.as_ref(), &vars)).collect::<Result<_>>()?;
        Self::new(&vars, eqs, expected_dim, config)
    }

    pub fn from_file(file: &VarietyFile, config: &Config) -> Result<Self> {
        if file.ambient != file.vars.len() {
            return Err(Error::InvalidArgument(format!(
                "ambient is {} but {} variables are declared",
                file.ambient,
                file.vars.len()
            )));
        }
        Self::parse(&file.vars, &file.equations, file.expected_dim, config)
    }

    pub fn to_file(&self) -> VarietyFile {
        VarietyFile {
            ambient: self.ambient_dim(),
            vars: self.vars.to_vec(),
            equations: self.equations.iter().map(ToString::to_string).collect(),
            expected_dim: self.expected_dim,
        }
    }

    fn check_dimension(&self, config: &Config) -> Result<()> {
        let found = self.ideal(config).krull_dimension()?;
        if found != KrullDimension::Dim(self.expected_dim) {
            return Err(Error::DimensionMismatch { expected: self.expected_dim.to_string(), found: found.to_string() });
        }
        Ok(())
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn ambient_dim(&self) -> usize {
        self.vars.len()
    }

    pub fn dim(&self) -> usize {
        self.expected_dim
    }

    pub fn codim(&self) -> usize {
        self.vars.len() - self.expected_dim
    }

    pub fn equations(&self) -> &[Poly] {
        &self.equations
    }

    pub fn is_hypersurface(&self) -> bool {
        self.equations.len() == 1
    }

    pub fn ideal(&self, config: &Config) -> Ideal {
        Ideal::new(&self.vars, self.equations.clone()).with_spair_limit(config.spair_limit)
    }

    /// Same variety with another stated dimension, validated.
    pub fn with_dim(&self, expected_dim: usize, config: &Config) -> Result<Self> {
        Self::new(&self.vars, self.equations.clone(), expected_dim, config)
    }
}

/// Equations plus the maximal minors of the Jacobian of size `N - d`.
pub fn singular_ideal(v: &VarietySpec, config: &Config) -> Result<Ideal> {
    let mut gens = v.equations().to_vec();
    if v.equations().len() < v.codim() {
        return Err(Error::DimensionMismatch {
            expected: format!("at least {} equations", v.codim()),
            found: v.equations().len().to_string(),
        });
    }
    gens.extend(minors(&jacobian(v.equations()), v.codim())?);
    Ok(Ideal::new(v.vars(), gens).with_spair_limit(config.spair_limit))
}

/// True when `V` has no singular points. For a finite set of points this
/// means every point is reduced.
pub fn is_smooth(v: &VarietySpec, seed: u64, config: &Config) -> Result<bool> {
    if v.dim() == 0 {
        let pc = v.ideal(config).distinct_point_count(seed, config.coeff_bound)?;
        return Ok(pc.count == pc.with_multiplicity);
    }
    singular_ideal(v, config)?.is_unit()
}

/// A seeded pseudo-random linear (or affine) function on `C^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericForm {
    pub coefficients: Vec<Rational>,
    pub constant: Rational,
    pub seed: u64,
}

impl GenericForm {
    pub fn to_polynomial(&self, vars: &Vars) -> Poly {
        assert_eq!(vars.len(), self.coefficients.len());
        let n = vars.len();
        let mut terms: Vec<(Monomial, Rational)> =
            self.coefficients.iter().enumerate().map(|(i, c)| (Monomial::var(n, i), c.clone())).collect();
        terms.push((Monomial::one(n), self.constant.clone()));
        Polynomial::from_terms(vars, terms)
    }
}

fn check_bound(bound: u32) -> Result<()> {
    if bound < 2 {
        return Err(Error::InvalidArgument(format!("coefficient bound must be at least 2, got {bound}")));
    }
    Ok(())
}

/// Linear form with coefficients in `[-bound, bound] \ {0}` and no constant.
pub fn generic_linear_form(n: usize, seed: u64, bound: u32) -> Result<GenericForm> {
    check_bound(bound)?;
    let coefficients = seed::nonzero_integers(seed::derive(seed, "linear-form", n as u64), n, bound)
        .into_iter()
        .map(crate::rational)
        .collect();
    Ok(GenericForm { coefficients, constant: crate::rational(0), seed })
}

/// Like [`generic_linear_form`] with a nonzero constant drawn the same way.
pub fn generic_affine_form(n: usize, seed: u64, bound: u32) -> Result<GenericForm> {
    check_bound(bound)?;
    let draws = seed::nonzero_integers(seed::derive(seed, "affine-form", n as u64), n + 1, bound);
    Ok(GenericForm {
        coefficients: draws[..n].iter().copied().map(crate::rational).collect(),
        constant: crate::rational(draws[n]),
        seed,
    })
}

const SLICE_RETRIES: u64 = 3;

/// Intersects `V` with a generic hyperplane `x_N = l(x_1, …, x_{N-1})`,
/// optionally forced through `through`, and returns the slice in the first
/// `N - 1` coordinates.
pub fn generic_slice(v: &VarietySpec, seed: u64, through: Option<&[Rational]>, config: &Config) -> Result<VarietySpec> {
    if v.dim() == 0 {
        return Err(Error::DimensionMismatch { expected: "positive dimension".into(), found: "0".into() });
    }
    let n = v.ambient_dim();
    if let Some(q) = through {
        if q.len() != n {
            return Err(Error::InvalidArgument(format!("point has {} coordinates, expected {n}", q.len())));
        }
    }
    let last = v.vars()[n - 1].clone();
    let small: Vars = v.vars()[..n - 1].to_vec().into();
    let map: Vec<Option<usize>> = (0..n).map(|i| (i < n - 1).then_some(i)).collect();
    let mut last_err = None;
    for attempt in 0..=SLICE_RETRIES {
        let mut form = generic_affine_form(n - 1, seed::derive(seed, "slice", attempt), config.coeff_bound)?;
        if let Some(q) = through {
            let mut c = q[n - 1].clone();
            for (a, x) in form.coefficients.iter().zip(q) {
                c -= a * x;
            }
            form.constant = c;
        }
        let mut coefficients = form.coefficients.clone();
        coefficients.push(crate::rational(0));
        let replacement = GenericForm { coefficients, ..form }.to_polynomial(v.vars());
        let mut equations = Vec::with_capacity(v.equations().len());
        for e in v.equations() {
            let s = e.substitute_affine(&last, &replacement)?;
            equations.push(s.reindex(&small, &map).expect("substituted variable still present"));
        }
        match VarietySpec::new(&small, equations, v.dim() - 1, config) {
            Ok(slice) => return Ok(slice),
            Err(e @ Error::DimensionMismatch { .. }) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericityFailure(format!(
        "no generic slice of the expected dimension after {SLICE_RETRIES} retries ({})",
        last_err.map(|e| e.to_string()).unwrap_or_default()
    )))
}

/// Number of points of `V` on a generic plane of complementary dimension.
pub fn plane_section_count(v: &VarietySpec, seed: u64, config: &Config) -> Result<usize> {
    let mut current = v.clone();
    for k in 0..v.dim() {
        current = generic_slice(&current, seed::derive(seed, "section", k as u64), None, config)?;
    }
    Ok(current.ideal(config).distinct_point_count(seed::derive(seed, "section-count", 0), config.coeff_bound)?.count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> Config {
        Config::default()
    }

    fn spec(vs: &[&str], eqs: &[&str], d: usize) -> VarietySpec {
        VarietySpec::parse(vs, eqs, d, &cfg()).unwrap()
    }

    #[test]
    fn dimension_is_validated() {
        let e = VarietySpec::parse(&["x", "y"], &["x*y - 1"], 0, &cfg()).unwrap_err();
        assert!(matches!(e, Error::DimensionMismatch { .. }));
        assert!(VarietySpec::parse(&["x", "y"], &["x*y - 1"], 2, &cfg()).is_err());
        assert!(VarietySpec::parse(&["x", "x"], &["x"], 1, &cfg()).is_err());
    }

    #[test]
    fn file_round_trip() {
        let v = spec(&["x", "y", "z"], &["x*y - z^2"], 2);
        let file = v.to_file();
        assert_eq!(file.ambient, 3);
        assert_eq!(VarietySpec::from_file(&file, &cfg()).unwrap(), v);
        let bad = VarietyFile { ambient: 2, ..file };
        assert!(VarietySpec::from_file(&bad, &cfg()).is_err());
    }

    #[test]
    fn hyperbola_is_smooth() {
        let v = spec(&["x", "y"], &["x*y - 1"], 1);
        let sing = singular_ideal(&v, &cfg()).unwrap();
        let minors: Vec<String> = sing.generators()[1..].iter().map(ToString::to_string).collect();
        assert_eq!(minors, vec!["y", "x"]);
        assert!(v.ideal(&cfg()).sum(&sing).is_unit().unwrap());
        assert!(is_smooth(&v, 0, &cfg()).unwrap());
    }

    #[test]
    fn nodal_cubic_singular_at_origin() {
        let v = spec(&["x", "y"], &["y^2 - x^2*(x + 1)"], 1);
        let sing = singular_ideal(&v, &cfg()).unwrap();
        let expected = Ideal::new(
            v.vars(),
            vec![parse_polynomial("x", v.vars()).unwrap(), parse_polynomial("y", v.vars()).unwrap()],
        );
        let radical_check = sing.distinct_point_count(0, 997).unwrap();
        assert_eq!(radical_check.count, 1);
        for g in expected.generators() {
            // the origin is the only point: x and y vanish there
            assert!(sing.saturate_by(g).unwrap().is_unit().unwrap());
        }
    }

    #[test]
    fn cone_singular_locus_is_vertex() {
        let v = spec(&["x", "y", "z"], &["x*y - z^2"], 2);
        let sing = singular_ideal(&v, &cfg()).unwrap();
        let minors: Vec<String> = sing.generators()[1..].iter().map(ToString::to_string).collect();
        assert_eq!(minors, vec!["y", "x", "-2*z"]);
        assert_eq!(sing.distinct_point_count(0, 997).unwrap().count, 1);
        assert!(!is_smooth(&v, 0, &cfg()).unwrap());
    }

    #[test]
    fn linear_forms_are_deterministic() {
        let a = generic_linear_form(2, 0, 997).unwrap();
        assert_eq!(a, generic_linear_form(2, 0, 997).unwrap());
        assert_ne!(a.coefficients, generic_linear_form(2, 1, 997).unwrap().coefficients);
        assert!(a.coefficients.iter().all(|c| *c != crate::rational(0)));
        assert!(generic_linear_form(2, 0, 1).is_err());
    }

    #[test]
    fn hyperbola_slice_is_two_points() {
        let v = spec(&["x", "y"], &["x*y - 1"], 1);
        let s = generic_slice(&v, 0, None, &cfg()).unwrap();
        assert_eq!((s.ambient_dim(), s.dim()), (1, 0));
        let pc = s.ideal(&cfg()).distinct_point_count(0, 997).unwrap();
        assert_eq!((pc.count, pc.with_multiplicity), (2, 2));
    }

    #[test]
    fn cone_slice_is_smooth_conic() {
        let v = spec(&["x", "y", "z"], &["x*y - z^2"], 2);
        let s = generic_slice(&v, 0, None, &cfg()).unwrap();
        assert_eq!((s.ambient_dim(), s.dim()), (2, 1));
        assert!(is_smooth(&s, 0, &cfg()).unwrap());
    }

    #[test]
    fn slice_through_a_point_contains_it() {
        let v = spec(&["x", "y", "z"], &["x*y - z^2"], 2);
        let q = vec![crate::rational(1), crate::rational(4), crate::rational(2)];
        let s = generic_slice(&v, 5, Some(&q), &cfg()).unwrap();
        assert_eq!(s.equations()[0].eval(&q[..2]), crate::rational(0));
    }

    #[test]
    fn point_cannot_be_sliced() {
        let v = spec(&["x", "y"], &["x", "y"], 0);
        assert!(matches!(generic_slice(&v, 0, None, &cfg()), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn plane_section_examples() {
        assert_eq!(plane_section_count(&spec(&["x", "y"], &["x*y - 1"], 1), 0, &cfg()).unwrap(), 2);
        assert_eq!(plane_section_count(&spec(&["x", "y"], &["y^2 - x^3"], 1), 0, &cfg()).unwrap(), 3);
        let linear = spec(&["a", "b", "c", "d"], &["c", "d"], 2);
        assert_eq!(plane_section_count(&linear, 0, &cfg()).unwrap(), 1);
    }
}
