use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{Ideal, KrullDimension};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, Polynomial, UniPoly};
use crate::seed;

/// Solutions of a zero-dimensional ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointCount {
    pub count: usize,
    pub with_multiplicity: usize,
}

const COUNT_RETRIES: u64 = 5;

impl<F: Field> Ideal<F> {
    /// Minimal polynomial of multiplication by `u` on the quotient algebra,
    /// found as the first linear dependency among the normal forms of `u^k`.
    pub fn minimal_polynomial(&self, u: &Polynomial<F>) -> Result<UniPoly<F>> {
        let basis = self.standard_monomials()?;
        if basis.is_empty() {
            return Ok(UniPoly::new(vec![F::one()]));
        }
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let coords = |p: &Polynomial<F>| -> Vec<F> {
            let mut v = vec![F::zero(); basis.len()];
            for (m, c) in p.terms() {
                v[index[m]] = c.clone();
            }
            v
        };

        // Echelon rows: (vector, pivot column, combination of the u^k producing it).
        let mut rows: Vec<(Vec<F>, usize, Vec<F>)> = Vec::new();
        let mut power = self.normal_form(&Polynomial::one(self.vars()), MonomialOrder::GrevLex)?;
        for k in 0..=basis.len() {
            let mut v = coords(&power);
            let mut combo = vec![F::zero(); k + 1];
            combo[k] = F::one();
            for (row, pivot, rc) in &rows {
                if v[*pivot].is_zero() {
                    continue;
                }
                let factor = v[*pivot].clone() / row[*pivot].clone();
                for (a, b) in v.iter_mut().zip(row) {
                    *a = a.clone() - factor.clone() * b.clone();
                }
                for (a, b) in combo.iter_mut().zip(rc) {
                    *a = a.clone() - factor.clone() * b.clone();
                }
            }
            match v.iter().position(|c| !c.is_zero()) {
                Some(pivot) => rows.push((v, pivot, combo)),
                None => return Ok(UniPoly::new(combo).monic()),
            }
            power = self.normal_form(&(u * &power), MonomialOrder::GrevLex)?;
        }
        unreachable!("more than dim + 1 vectors are always dependent")
    }

    /// Distinct solutions in the algebraic closure, via the squarefree degree
    /// of a random linear form's minimal polynomial, confirmed by a second
    /// independent form.
    pub fn distinct_point_count(&self, seed: u64, coeff_bound: u32) -> Result<PointCount> {
        match self.krull_dimension()? {
            KrullDimension::Empty => return Ok(PointCount { count: 0, with_multiplicity: 0 }),
            KrullDimension::Dim(0) => {}
            KrullDimension::Dim(_) => return Err(Error::NotZeroDimensional),
        }
        let with_multiplicity = self.quotient_vector_dimension()?;
        let n = self.vars().len();
        let form = |index: u64| -> Polynomial<F> {
            let coeffs = seed::nonzero_integers(seed::derive(seed, "point-count", index), n, coeff_bound);
            let terms = coeffs.into_iter().enumerate().map(|(i, c)| (Monomial::var(n, i), F::from_i64(c)));
            Polynomial::from_terms(self.vars(), terms)
        };
        for attempt in 0..=COUNT_RETRIES {
            let a = self.minimal_polynomial(&form(2 * attempt))?.distinct_root_count();
            let b = self.minimal_polynomial(&form(2 * attempt + 1))?.distinct_root_count();
            if a == b {
                return Ok(PointCount { count: a, with_multiplicity });
            }
        }
        Err(Error::GenericityFailure(format!("linear forms failed to separate points after {COUNT_RETRIES} retries")))
    }
}
