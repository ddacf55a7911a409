//! Ideals of polynomial rings and the Gröbner-basis operations on them.

mod count;
mod groebner;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

pub use count::PointCount;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Vars};
use crate::Rational;
use groebner::{from_terms, reduce, reduced_basis, to_terms, Terms};

pub const DEFAULT_SPAIR_LIMIT: usize = 200_000;

const AUX_VAR: &str = "_aux_t";

/// Dimension of a vanishing set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KrullDimension {
    Empty,
    Dim(usize),
}

impl fmt::Display for KrullDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KrullDimension::Empty => write!(f, "empty"),
            KrullDimension::Dim(d) => write!(f, "{d}"),
        }
    }
}

type Basis<F> = Arc<Vec<Polynomial<F>>>;

/// A finitely generated ideal with a per-order memo of reduced bases.
pub struct Ideal<F: Field = Rational> {
    vars: Vars,
    generators: Vec<Polynomial<F>>,
    spair_limit: usize,
    cache: Mutex<HashMap<MonomialOrder, Basis<F>>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        Ideal {
            vars: self.vars.clone(),
            generators: self.generators.clone(),
            spair_limit: self.spair_limit,
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "<{}> in {:?}", gens.join(", "), self.vars)
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(vars: &Vars, generators: Vec<Polynomial<F>>) -> Self {
        for g in &generators {
            assert_eq!(g.vars(), vars, "generator outside the ideal's ring");
        }
        Ideal { vars: vars.clone(), generators, spair_limit: DEFAULT_SPAIR_LIMIT, cache: Mutex::new(HashMap::new()) }
    }

    pub fn unit(vars: &Vars) -> Self {
        Self::new(vars, vec![Polynomial::one(vars)])
    }

    pub fn with_spair_limit(mut self, limit: usize) -> Self {
        self.spair_limit = limit;
        self
    }

    pub fn spair_limit(&self) -> usize {
        self.spair_limit
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    fn derived(&self, vars: &Vars, generators: Vec<Polynomial<F>>) -> Self {
        Self::new(vars, generators).with_spair_limit(self.spair_limit)
    }

    /// Ideal sum.
    pub fn sum(&self, other: &Ideal<F>) -> Ideal<F> {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        self.derived(&self.vars, gens)
    }

    /// Reduced Gröbner basis: monic, sorted by descending leading monomial.
    pub fn groebner_basis(&self, order: MonomialOrder) -> Result<Basis<F>> {
        if let Some(b) = self.cache.lock().unwrap().get(&order) {
            return Ok(b.clone());
        }
        let basis = reduced_basis(&self.generators, order, self.spair_limit)?;
        let basis: Vec<Polynomial<F>> = basis.into_iter().map(|t| from_terms(&self.vars, t)).collect();
        let mut cache = self.cache.lock().unwrap();
        Ok(cache.entry(order).or_insert_with(|| Arc::new(basis)).clone())
    }

    fn basis_terms(&self, order: MonomialOrder) -> Result<Vec<Terms<F>>> {
        Ok(self.groebner_basis(order)?.iter().map(|g| to_terms(g, order)).collect())
    }

    pub fn normal_form(&self, p: &Polynomial<F>, order: MonomialOrder) -> Result<Polynomial<F>> {
        let basis = self.basis_terms(order)?;
        let refs: Vec<&Terms<F>> = basis.iter().collect();
        Ok(from_terms(&self.vars, reduce(to_terms(p, order), &refs, order)))
    }

    pub fn contains(&self, p: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(p, MonomialOrder::GrevLex)?.is_zero())
    }

    /// True iff the ideal is the whole ring.
    pub fn is_unit(&self) -> Result<bool> {
        let gb = self.groebner_basis(MonomialOrder::GrevLex)?;
        Ok(gb.len() == 1 && gb[0].as_constant().is_some_and(|c| c.is_one()))
    }

    /// Same ideal, compared through reduced grevlex bases.
    pub fn same_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        Ok(self.groebner_basis(MonomialOrder::GrevLex)? == other.groebner_basis(MonomialOrder::GrevLex)?)
    }

    fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        Ok(self
            .groebner_basis(MonomialOrder::GrevLex)?
            .iter()
            .map(|g| g.leading_term(MonomialOrder::GrevLex).unwrap().0.clone())
            .collect())
    }

    /// Dimension from the leading-monomial staircase: the size of a largest
    /// variable subset containing the support of no leading monomial.
    pub fn krull_dimension(&self) -> Result<KrullDimension> {
        if self.is_unit()? {
            return Ok(KrullDimension::Empty);
        }
        let lms = self.leading_monomials()?;
        let n = self.vars.len();
        let masks: Vec<u64> = lms.iter().map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i))).collect();
        let mut best = 0;
        for subset in 0u64..(1u64 << n) {
            let size = subset.count_ones() as usize;
            if size > best && masks.iter().all(|&m| m & !subset != 0) {
                best = size;
            }
        }
        Ok(KrullDimension::Dim(best))
    }

    /// Monomials outside the leading-term ideal, ascending in grevlex.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        if self.is_unit()? {
            return Ok(Vec::new());
        }
        let lms = self.leading_monomials()?;
        let n = self.vars.len();
        let mut bounds = vec![None; n];
        for m in &lms {
            let support: Vec<usize> = m.support().collect();
            if let [i] = support[..] {
                let e = m.exponents()[i];
                bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
            }
        }
        let bounds: Vec<u32> = bounds.into_iter().collect::<Option<_>>().ok_or(Error::NotZeroDimensional)?;
        let mut out = Vec::new();
        let mut current = vec![0u32; n];
        enumerate_staircase(0, &bounds, &lms, &mut current, &mut out);
        out.sort_by(|a, b| MonomialOrder::GrevLex.compare(a, b));
        Ok(out)
    }

    /// Dimension of the quotient algebra over the coefficient field.
    pub fn quotient_vector_dimension(&self) -> Result<usize> {
        Ok(self.standard_monomials()?.len())
    }

    /// Places the auxiliary variable first and moves `gens` into that ring.
    fn aux_ring(&self) -> (Vars, Vec<Option<usize>>) {
        let mut names = vec![AUX_VAR.to_string()];
        names.extend(self.vars.iter().cloned());
        let map = (1..=self.vars.len()).map(Some).collect();
        (names.into(), map)
    }

    /// Eliminates the first variable of `ring` and returns the result in
    /// this ideal's ring.
    fn eliminate_aux(&self, ring: &Vars, gens: Vec<Polynomial<F>>) -> Result<Ideal<F>> {
        let big = self.derived(ring, gens);
        let basis = big.groebner_basis(MonomialOrder::Elimination(1))?;
        let mut back = vec![None];
        back.extend((0..self.vars.len()).map(Some));
        let kept = basis.iter().filter_map(|g| g.reindex(&self.vars, &back)).collect();
        Ok(self.derived(&self.vars, kept))
    }

    /// `I : g^∞` via `I + <1 - t g>` and elimination of `t`.
    pub fn saturate_by(&self, g: &Polynomial<F>) -> Result<Ideal<F>> {
        if g.is_zero() {
            return Ok(self.derived(&self.vars, vec![Polynomial::one(&self.vars)]));
        }
        if g.as_constant().is_some() {
            return Ok(self.clone());
        }
        let (ring, map) = self.aux_ring();
        let t = Polynomial::var(&ring, 0);
        let mut gens: Vec<_> = self.generators.iter().map(|p| p.reindex(&ring, &map).unwrap()).collect();
        let lifted = g.reindex(&ring, &map).unwrap();
        gens.push(&Polynomial::one(&ring) - &(&t * &lifted));
        self.eliminate_aux(&ring, gens)
    }

    /// `I ∩ K` via `t I + (1 - t) K` and elimination of `t`.
    pub fn intersection(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        let (ring, map) = self.aux_ring();
        let t = Polynomial::var(&ring, 0);
        let one_minus_t = &Polynomial::one(&ring) - &t;
        let mut gens: Vec<_> = self.generators.iter().map(|p| &t * &p.reindex(&ring, &map).unwrap()).collect();
        gens.extend(other.generators.iter().map(|p| &one_minus_t * &p.reindex(&ring, &map).unwrap()));
        self.eliminate_aux(&ring, gens)
    }

    /// `I : J^∞`, the intersection of the single-generator saturations
    /// `I : g^∞` over the generators `g` of `J`.
    pub fn saturation(&self, j: &Ideal<F>) -> Result<Ideal<F>> {
        if self.sum(j).is_unit()? {
            return Ok(self.clone());
        }
        let mut parts: Vec<Ideal<F>> = Vec::new();
        for g in j.generators() {
            if g.is_zero() || self.contains(g)? {
                continue;
            }
            let part = self.saturate_by(g)?;
            if part.is_unit()? {
                continue;
            }
            let mut duplicate = false;
            for p in &parts {
                if p.same_ideal(&part)? {
                    duplicate = true;
                    break;
                }
            }
            if !duplicate {
                parts.push(part);
            }
        }
        let mut parts = parts.into_iter();
        let Some(mut acc) = parts.next() else {
            return Ok(Self::unit(&self.vars).with_spair_limit(self.spair_limit));
        };
        for p in parts {
            acc = acc.intersection(&p)?;
        }
        Ok(acc)
    }

    /// `I ∩ k[remaining variables]`, kept in the same ring.
    pub fn eliminate(&self, drop: &[&str]) -> Result<Ideal<F>> {
        let drop_idx: Vec<usize> =
            drop.iter().map(|name| crate::poly::var_index(&self.vars, name)).collect::<Result<_>>()?;
        let keep_idx: Vec<usize> = (0..self.vars.len()).filter(|i| !drop_idx.contains(i)).collect();
        let order_idx: Vec<usize> = drop_idx.iter().chain(&keep_idx).copied().collect();
        let ring: Vars = order_idx.iter().map(|&i| self.vars[i].clone()).collect();
        let mut forward = vec![None; self.vars.len()];
        for (new, &old) in order_idx.iter().enumerate() {
            forward[old] = Some(new);
        }
        let backward: Vec<Option<usize>> = order_idx.iter().map(|&old| Some(old)).collect();
        let big = self.derived(&ring, self.generators.iter().map(|g| g.reindex(&ring, &forward).unwrap()).collect());
        let basis = big.groebner_basis(MonomialOrder::Elimination(drop_idx.len()))?;
        let kept = basis
            .iter()
            .filter(|g| (0..drop_idx.len()).all(|i| !g.involves(i)))
            .map(|g| g.reindex(&self.vars, &backward).unwrap())
            .collect();
        Ok(self.derived(&self.vars, kept))
    }
}

fn enumerate_staircase(var: usize, bounds: &[u32], lms: &[Monomial], current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if var == bounds.len() {
        let m = Monomial::new(current.clone());
        if !lms.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        return;
    }
    for e in 0..bounds[var] {
        current[var] = e;
        // prune: if the partial monomial is already divisible, so is every extension
        let partial = Monomial::new(current.clone());
        let blocked = lms.iter().any(|l| l.exponents()[var + 1..].iter().all(|&x| x == 0) && l.divides(&partial));
        if blocked {
            break;
        }
        enumerate_staircase(var + 1, bounds, lms, current, out);
    }
    current[var] = 0;
}
