//! Buchberger's algorithm on sorted sparse term vectors.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Vars};

/// Terms sorted ascending under the working order: the leading term is last.
pub(crate) type Terms<F> = Vec<(Monomial, F)>;

pub(crate) fn to_terms<F: Field>(p: &Polynomial<F>, order: MonomialOrder) -> Terms<F> {
    let mut t: Terms<F> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    t.sort_by(|a, b| order.compare(&a.0, &b.0));
    t
}

pub(crate) fn from_terms<F: Field>(vars: &Vars, t: Terms<F>) -> Polynomial<F> {
    Polynomial::from_terms(vars, t)
}

fn make_monic<F: Field>(t: &mut Terms<F>) {
    if let Some((_, lc)) = t.last() {
        if !lc.is_one() {
            let inv = lc.inv();
            for (_, c) in t.iter_mut() {
                *c = c.clone() * inv.clone();
            }
        }
    }
}

/// `p - c * m * g`, merged in order.
fn sub_mul<F: Field>(p: &Terms<F>, c: &F, m: &Monomial, g: &Terms<F>, order: MonomialOrder) -> Terms<F> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut a = p.iter().peekable();
    let mut b = g.iter().map(|(n, d)| (n * m, -(d.clone() * c.clone()))).peekable();
    loop {
        let step = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (Some(x), Some(y)) => order.compare(&x.0, &y.0),
        };
        match step {
            Ordering::Less => out.push(a.next().unwrap().clone()),
            Ordering::Greater => out.push(b.next().unwrap()),
            Ordering::Equal => {
                let (m1, c1) = a.next().unwrap();
                let (_, c2) = b.next().unwrap();
                let s = c1.clone() + c2;
                if !s.is_zero() {
                    out.push((m1.clone(), s));
                }
            }
        }
    }
    out
}

/// Full reduction of `p` modulo `basis` (every element nonzero).
pub(crate) fn reduce<F: Field>(p: Terms<F>, basis: &[&Terms<F>], order: MonomialOrder) -> Terms<F> {
    let mut p = p;
    let mut rem: Terms<F> = Vec::new();
    while let Some((lm, lc)) = p.last() {
        let divisor = basis.iter().find(|g| g.last().unwrap().0.divides(lm));
        match divisor {
            Some(g) => {
                let (glm, glc) = g.last().unwrap();
                let q = glm.quotient_of(lm).unwrap();
                let c = lc.clone() / glc.clone();
                p = sub_mul(&p, &c, &q, g, order);
            }
            None => rem.push(p.pop().unwrap()),
        }
    }
    rem.reverse();
    rem
}

fn s_polynomial<F: Field>(f: &Terms<F>, g: &Terms<F>, lcm: &Monomial, order: MonomialOrder) -> Terms<F> {
    let (fm, fc) = f.last().unwrap();
    let (gm, gc) = g.last().unwrap();
    let mf = fm.quotient_of(lcm).unwrap();
    let mg = gm.quotient_of(lcm).unwrap();
    let cf = fc.inv();
    let lhs: Terms<F> = f.iter().map(|(n, c)| (n * &mf, c.clone() * cf.clone())).collect();
    sub_mul(&lhs, &gc.inv(), &mg, g, order)
}

/// Reduced Gröbner basis, sorted by descending leading monomial.
pub(crate) fn reduced_basis<F: Field>(
    generators: &[Polynomial<F>],
    order: MonomialOrder,
    spair_limit: usize,
) -> Result<Vec<Terms<F>>> {
    let mut basis: Vec<Terms<F>> = Vec::new();
    // (lcm degree, j, i) with i < j
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let insert = |h: Terms<F>, basis: &mut Vec<Terms<F>>, queue: &mut BTreeSet<_>, pending: &mut HashSet<_>| {
        let j = basis.len();
        let hm = h.last().unwrap().0.clone();
        for (i, g) in basis.iter().enumerate() {
            let lcm = g.last().unwrap().0.lcm(&hm);
            queue.insert((lcm.degree(), j, i));
            pending.insert((i, j));
        }
        basis.push(h);
    };

    for g in generators {
        if g.is_zero() {
            continue;
        }
        let refs: Vec<&Terms<F>> = basis.iter().collect();
        let mut r = reduce(to_terms(g, order), &refs, order);
        if !r.is_empty() {
            make_monic(&mut r);
            insert(r, &mut basis, &mut queue, &mut pending);
        }
    }

    let mut processed = 0usize;
    while let Some(&entry) = queue.iter().next() {
        queue.remove(&entry);
        let (_, j, i) = entry;
        pending.remove(&(i, j));
        processed += 1;
        if processed > spair_limit {
            return Err(Error::ResourceLimit(spair_limit));
        }
        let mi = &basis[i].last().unwrap().0;
        let mj = &basis[j].last().unwrap().0;
        if mi.is_coprime(mj) {
            continue;
        }
        let lcm = mi.lcm(mj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].last().unwrap().0.divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], &lcm, order);
        let refs: Vec<&Terms<F>> = basis.iter().collect();
        let mut r = reduce(s, &refs, order);
        if !r.is_empty() {
            make_monic(&mut r);
            if r.last().unwrap().0.is_one() {
                return Ok(vec![r]);
            }
            insert(r, &mut basis, &mut queue, &mut pending);
        }
    }

    Ok(interreduce(basis, order))
}

fn interreduce<F: Field>(basis: Vec<Terms<F>>, order: MonomialOrder) -> Vec<Terms<F>> {
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            let mi = &basis[i].last().unwrap().0;
            !basis.iter().enumerate().any(|(k, g)| {
                let mk = &g.last().unwrap().0;
                k != i && mk.divides(mi) && (mk != mi || k < i)
            })
        })
        .collect();
    let mut out: Vec<Terms<F>> = keep
        .iter()
        .map(|&i| {
            let others: Vec<&Terms<F>> = keep.iter().filter(|&&k| k != i).map(|&k| &basis[k]).collect();
            let (lead, tail) = basis[i].split_last().unwrap();
            let mut r = reduce(tail.to_vec(), &others, order);
            r.push(lead.clone());
            make_monic(&mut r);
            r
        })
        .collect();
    out.sort_by(|a, b| order.compare(&b.last().unwrap().0, &a.last().unwrap().0));
    out
}
