//! Dense univariate polynomials, used for minimal polynomials, resultants
//! and rational root extraction.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::Field;
use crate::Rational;

/// Coefficients in ascending degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = l.inv();
                UniPoly { coeffs: self.coeffs.iter().map(|c| c.clone() * inv.clone()).collect() }
            }
            None => self.clone(),
        }
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.clone() * F::from_i64(i as i64)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(F::zero);
                    let b = other.coeffs.get(i).cloned().unwrap_or_else(F::zero);
                    a - b
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.leading().unwrap().inv();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Number of distinct complex roots.
    pub fn distinct_root_count(&self) -> usize {
        self.squarefree_part().degree().unwrap_or(0)
    }

    /// Newton interpolation through points with distinct abscissae.
    pub fn interpolate(points: &[(F, F)]) -> Self {
        let n = points.len();
        let mut dd: Vec<F> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let num = dd[i].clone() - dd[i - 1].clone();
                let den = points[i].0.clone() - points[i - level].0.clone();
                dd[i] = num / den;
            }
        }
        let mut acc = Self::zero();
        for i in (0..n).rev() {
            // acc = acc * (x - x_i) + dd[i]
            let shifted = acc.mul(&UniPoly::new(vec![-points[i].0.clone(), F::one()]));
            acc = shifted.sub(&UniPoly::new(vec![-dd[i].clone()]));
        }
        acc
    }
}

/// Largest absolute value whose divisors are enumerated by trial division.
const DIVISOR_SEARCH_LIMIT: u64 = 1 << 40;

/// All rational roots (distinct, ascending) if the polynomial splits into
/// linear factors over the rationals; `Err` with a reason otherwise.
pub fn rational_roots(p: &UniPoly<Rational>) -> Result<Vec<Rational>, String> {
    let sf = p.squarefree_part();
    let degree = match sf.degree() {
        None => return Err("zero polynomial has every number as a root".into()),
        Some(d) => d,
    };
    // integer coefficients
    let denom_lcm = sf.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> =
        sf.coeffs().iter().map(|c| (c * Rational::from_integer(denom_lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(Rational::zero());
        ints.remove(0);
    }
    let constant = ints[0].abs().to_biguint().unwrap();
    let lead = ints.last().unwrap().abs().to_biguint().unwrap();
    let reduced = UniPoly::new(ints.iter().map(|c| Rational::from_integer(c.clone())).collect());
    if reduced.degree().unwrap_or(0) > 0 {
        let num_divs = divisors(&constant)?;
        let den_divs = divisors(&lead)?;
        for a in &num_divs {
            for b in &den_divs {
                if !a.gcd(b).is_one() {
                    continue;
                }
                for sign in [1i32, -1] {
                    let r = Rational::new(BigInt::from(a.clone()) * sign, BigInt::from(b.clone()));
                    if reduced.eval(&r).is_zero() && !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
        }
    }
    if roots.len() != degree {
        return Err(format!("{} of {} roots are rational", roots.len(), degree));
    }
    roots.sort();
    Ok(roots)
}

fn divisors(n: &BigUint) -> Result<Vec<BigUint>, String> {
    let n = n
        .to_u64()
        .filter(|&v| v <= DIVISOR_SEARCH_LIMIT)
        .ok_or_else(|| format!("coefficient {n} too large for rational root search"))?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small.into_iter().map(BigUint::from).collect())
}
