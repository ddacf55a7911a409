#![allow(dead_code)]

use std::path::PathBuf;

use eulerdata::geometry::{VarietyFile, VarietySpec};
use eulerdata::{Config, Point, Rational};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn load(name: &str) -> VarietySpec {
    let path = corpus_dir().join(format!("{name}.json"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let file: VarietyFile = serde_json::from_str(&text).unwrap();
    VarietySpec::from_file(&file, &Config::default()).unwrap()
}

/// Varieties of the corpus, in the order the acceptance list uses.
pub const CORPUS: [&str; 5] = ["smooth_hyperbola", "cuspidal_cubic", "nodal_cubic", "cone", "smooth_cubic"];

pub fn point(xs: &[i64]) -> Point {
    xs.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

use eulerdata::oracle::BivariateSystem;
use eulerdata::{seed, vars, Ideal, KrullDimension, Monomial, Poly, Polynomial};

fn random_poly(v: &eulerdata::Vars, degree: u32, s: u64) -> Poly {
    let monomials: Vec<(u32, u32)> = (0..=degree).flat_map(|d| (0..=d).map(move |i| (i, d - i))).collect();
    let coeffs = seed::nonzero_integers(s, monomials.len(), 4);
    let keep = seed::nonzero_integers(seed::derive(s, "mask", 0), monomials.len(), 2);
    let terms = monomials.iter().zip(coeffs.iter().zip(&keep)).filter_map(|(&(i, j), (&c, &k))| {
        // pure top-degree powers always stay so the system tends to be zero-dimensional
        let top = i + j == degree && (i == 0 || j == 0);
        (top || k > 0).then(|| (Monomial::new(vec![i, j]), Rational::from_integer(c.into())))
    });
    Polynomial::from_terms(v, terms)
}

/// Seeded random zero-dimensional plane systems of degree at most 3, some
/// with non-reduced points.
pub fn random_bivariate_systems(count: usize) -> Vec<BivariateSystem> {
    let v = vars(&["x", "y"]);
    let mut out = Vec::new();
    for index in 0.. {
        if out.len() == count {
            break;
        }
        let s = seed::derive(2024, "oracle-system", index);
        let dp = 1 + (s % 3) as u32;
        let dq = 1 + ((s / 3) % 3) as u32;
        let mut p = random_poly(&v, dp, seed::derive(s, "p", 0));
        let q = random_poly(&v, dq, seed::derive(s, "q", 0));
        if index % 3 == 0 {
            let l = random_poly(&v, 1, seed::derive(s, "square", 0));
            p = &l * &l;
        }
        let ideal = Ideal::new(&v, vec![p.clone(), q.clone()]);
        if matches!(ideal.krull_dimension(), Ok(KrullDimension::Dim(0) | KrullDimension::Empty)) {
            out.push(BivariateSystem::new(p, q).unwrap());
        }
    }
    out
}
