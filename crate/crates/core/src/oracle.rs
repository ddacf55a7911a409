//! Independent verifiers that share only the polynomial layer: resultant
//! point counts for plane systems and the genus-degree formula for smooth
//! plane curves. Nothing here touches the ideal engine.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, UniPoly};
use crate::{seed, Poly, Rational};

/// Two nonzero polynomials in the same two-variable ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSystem {
    p: Poly,
    q: Poly,
}

impl BivariateSystem {
    pub fn new(p: Poly, q: Poly) -> Result<Self> {
        if p.nvars() != 2 || p.vars() != q.vars() {
            return Err(Error::InvalidArgument("expected two polynomials in the same two variables".into()));
        }
        if p.is_zero() || q.is_zero() {
            return Err(Error::InvalidArgument("zero polynomial in a bivariate system".into()));
        }
        Ok(BivariateSystem { p, q })
    }

    pub fn p(&self) -> &Poly {
        &self.p
    }

    pub fn q(&self) -> &Poly {
        &self.q
    }
}

/// Coefficients of `p(x0, y)` in `y`, padded to `degree + 1`.
fn coefficients_in_y(p: &Poly, x0: &Rational, degree: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); degree + 1];
    for (m, c) in p.terms() {
        let [ex, ey] = m.exponents() else { unreachable!() };
        let mut t = c.clone();
        for _ in 0..*ex {
            t *= x0;
        }
        out[*ey as usize] += t;
    }
    out
}

fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= &m[col][col];
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &m[col][col];
            let (upper, lower) = m.split_at_mut(r);
            for (target, pivot) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *target -= &factor * pivot;
            }
        }
    }
    det
}

/// Sylvester matrix of two univariate coefficient lists (ascending) with
/// formal degrees `len - 1`.
fn sylvester(a: &[Rational], b: &[Rational]) -> Vec<Vec<Rational>> {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![Rational::zero(); size];
        for (k, c) in a.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![Rational::zero(); size];
        for (k, c) in b.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// `Res_y(p, q)` as a polynomial in `x`, by evaluating the Sylvester
/// determinant at enough abscissae and interpolating.
pub fn resultant_in_y(p: &Poly, q: &Poly) -> UniPoly<Rational> {
    let dp = p.degree_in(1).unwrap_or(0) as usize;
    let dq = q.degree_in(1).unwrap_or(0) as usize;
    let bound = (p.total_degree().unwrap_or(0) * q.total_degree().unwrap_or(0)) as i64;
    let samples: Vec<(Rational, Rational)> = (0..=bound)
        .map(|i| {
            let x0 = crate::rational(i);
            let a = coefficients_in_y(p, &x0, dp);
            let b = coefficients_in_y(q, &x0, dq);
            let r = determinant(sylvester(&a, &b));
            (x0, r)
        })
        .collect();
    UniPoly::interpolate(&samples)
}

/// `p(x + c y, y)`.
fn shear(p: &Poly, c: i64) -> Poly {
    let vars = p.vars();
    let x = Polynomial::var(vars, 0);
    let y = Polynomial::var(vars, 1);
    let image = &x + &y.scale(&crate::rational(c));
    p.compose(&[image, y])
}

fn leading_y_coefficient_is_constant(p: &Poly) -> bool {
    let dy = p.degree_in(1).unwrap_or(0);
    p.terms().all(|(m, _)| m.exponents()[1] < dy || m.exponents()[0] == 0)
}

const SHEAR_ATTEMPTS: u64 = 16;

/// Squarefree degree of the resultant after a shear that makes both leading
/// coefficients in `y` constant. `None` means the resultant vanished.
fn sheared_count(s: &BivariateSystem, seed: u64, bound: u32, label: &str) -> Result<Option<usize>> {
    for attempt in 0..SHEAR_ATTEMPTS {
        let c = seed::nonzero_integers(seed::derive(seed, label, attempt), 1, bound)[0];
        let (p, q) = (shear(&s.p, c), shear(&s.q, c));
        if !leading_y_coefficient_is_constant(&p) || !leading_y_coefficient_is_constant(&q) {
            continue;
        }
        let r = resultant_in_y(&p, &q);
        return Ok((!r.is_zero()).then(|| r.distinct_root_count()));
    }
    Err(Error::GenericityFailure("no admissible shear found".into()))
}

/// Number of distinct common complex zeros of a bivariate system.
pub fn resultant_point_count(s: &BivariateSystem, seed: u64, bound: u32) -> Result<usize> {
    if bound < 2 {
        return Err(Error::InvalidArgument("coefficient bound must be at least 2".into()));
    }
    let first = sheared_count(s, seed, bound, "shear-a")?;
    let second = sheared_count(s, seed, bound, "shear-b")?;
    match (first, second) {
        (None, None) => Err(Error::CommonComponent),
        (Some(a), Some(b)) if a == b => Ok(a),
        (a, b) => Err(Error::GenericityFailure(format!("shears disagree: {a:?} vs {b:?}"))),
    }
}

/// Euler characteristic of a smooth affine plane curve of degree `n` whose
/// closure meets the line at infinity transversally in the given number of
/// points.
pub fn chi_smooth_plane_curve(degree: i64, points_at_infinity: i64) -> i64 {
    2 - (degree - 1) * (degree - 2) - points_at_infinity
}
