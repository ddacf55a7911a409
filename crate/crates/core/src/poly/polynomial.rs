use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::field::Field;

/// Ordered variable names shared by every polynomial of a ring.
pub type Vars = Arc<[String]>;

pub fn vars<S: AsRef<str>>(names: &[S]) -> Vars {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

/// Sparse multivariate polynomial in canonical form: no zero coefficients are
/// stored, so equal polynomials have identical term maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<F> {
    vars: Vars,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(vars: &Vars) -> Self {
        Polynomial { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: F) -> Self {
        Self::from_terms(vars, [(Monomial::one(vars.len()), c)])
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, F::one())
    }

    pub fn var(vars: &Vars, index: usize) -> Self {
        Self::from_terms(vars, [(Monomial::var(vars.len(), index), F::one())])
    }

    pub fn var_named(vars: &Vars, name: &str) -> Result<Self> {
        Ok(Self::var(vars, var_index(vars, name)?))
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut map: BTreeMap<Monomial, F> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), vars.len(), "monomial arity does not match ring");
            add_term(&mut map, m, c);
        }
        Polynomial { vars: vars.clone(), terms: map }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    /// The constant value, if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, index: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponents()[index]).max()
    }

    pub fn involves(&self, index: usize) -> bool {
        self.terms.keys().any(|m| m.exponents()[index] > 0)
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &F)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: MonomialOrder) -> Self {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.inv()),
            None => self.clone(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(n, a)| (n * m, a.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, index: usize) -> Self {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[index];
            (e > 0).then(|| {
                let mut d = m.clone();
                d.exponents_mut()[index] -= 1;
                (d, c.clone() * F::from_i64(e as i64))
            })
        });
        Self::from_terms(&self.vars, terms)
    }

    pub fn partial_derivative(&self, var: &str) -> Result<Self> {
        Ok(self.derivative(var_index(&self.vars, var)?))
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.nvars()).map(|i| self.derivative(i)).collect()
    }

    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars());
        let mut total = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            total = total + t;
        }
        total
    }

    /// Substitutes every variable `i` by `images[i]`; the result lives in the
    /// ring of the images.
    pub fn compose(&self, images: &[Polynomial<F>]) -> Polynomial<F> {
        assert_eq!(images.len(), self.nvars());
        let target = images.first().map(|p| p.vars.clone()).unwrap_or_else(|| self.vars.clone());
        let mut powers: Vec<Vec<Polynomial<F>>> = images.iter().map(|p| vec![Self::one(&p.vars)]).collect();
        let mut acc = Self::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// `p(x + point)`: moves `point` to the origin.
    pub fn translate(&self, point: &[F]) -> Self {
        let images: Vec<_> = point
            .iter()
            .enumerate()
            .map(|(i, a)| &Self::var(&self.vars, i) + &Self::constant(&self.vars, a.clone()))
            .collect();
        self.compose(&images)
    }

    /// Replaces `var` by an affine `replacement` that does not involve it.
    /// The result stays in the same ring and no longer involves `var`.
    pub fn substitute_affine(&self, var: &str, replacement: &Polynomial<F>) -> Result<Self> {
        let index = var_index(&self.vars, var)?;
        if replacement.vars != self.vars {
            return Err(Error::InvalidSubstitution("replacement lives in a different ring".into()));
        }
        if replacement.involves(index) {
            return Err(Error::InvalidSubstitution(format!("replacement involves `{var}`")));
        }
        if replacement.total_degree().unwrap_or(0) > 1 {
            return Err(Error::InvalidSubstitution("replacement has degree > 1".into()));
        }
        let images: Vec<_> = (0..self.nvars())
            .map(|i| if i == index { replacement.clone() } else { Self::var(&self.vars, i) })
            .collect();
        Ok(self.compose(&images))
    }

    /// Moves the polynomial into `target`, sending variable `i` to `map[i]`.
    /// Returns `None` when a variable mapped to `None` occurs.
    pub fn reindex(&self, target: &Vars, map: &[Option<usize>]) -> Option<Self> {
        assert_eq!(map.len(), self.nvars());
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &k) in m.exponents().iter().enumerate() {
                if k > 0 {
                    e[map[i]?] += k;
                }
            }
            terms.push((Monomial::new(e), c.clone()));
        }
        Some(Self::from_terms(target, terms))
    }

    fn check_ring(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomials from different rings: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }
}

pub(crate) fn var_index(vars: &Vars, name: &str) -> Result<usize> {
    vars.iter().position(|v| v == name).ok_or_else(|| Error::UndeclaredVariable(name.to_string()))
}

fn add_term<F: Field>(map: &mut BTreeMap<Monomial, F>, m: Monomial, c: F) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get().clone() + c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn add(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        self.check_ring(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Polynomial { vars: self.vars.clone(), terms }
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn sub(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        self.check_ring(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_term(&mut terms, m.clone(), -c.clone());
        }
        Polynomial { vars: self.vars.clone(), terms }
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn mul(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        self.check_ring(rhs);
        let mut terms = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                add_term(&mut terms, a * b, x.clone() * y.clone());
            }
        }
        Polynomial { vars: self.vars.clone(), terms }
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        Polynomial { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<F: Field> $tr for Polynomial<F> {
            type Output = Polynomial<F>;

            fn $method(self, rhs: Polynomial<F>) -> Polynomial<F> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    /// Terms are printed in descending grevlex order using the input grammar;
    /// non-integral coefficients print as `a/b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| MonomialOrder::GrevLex.compare(b.0, a.0));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| match e {
                    1 => self.vars[i].clone(),
                    _ => format!("{}^{}", self.vars[i], e),
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
