use std::cmp::Ordering;

use super::Monomial;

/// Term order. It is a parameter of algorithms, never of stored data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Lexicographic with the first declared variable largest.
    Lex,
    /// Graded reverse lexicographic.
    GrevLex,
    /// Block order that eliminates the first `k` variables: grevlex on the
    /// first block, ties broken by grevlex on the rest.
    Elimination(usize),
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Elimination(k) => {
                let k = k.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_prefers_first_variable() {
        assert_eq!(MonomialOrder::Lex.compare(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn grevlex_degree_first_then_reverse() {
        let o = MonomialOrder::GrevLex;
        assert_eq!(o.compare(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
        // x*z < y^2 in grevlex(x>y>z)
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn elimination_block_dominates() {
        let o = MonomialOrder::Elimination(1);
        assert_eq!(o.compare(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[0, 2, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn orders_are_multiplicative() {
        let orders = [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::Elimination(2)];
        let mons = [m(&[1, 2, 0]), m(&[0, 0, 3]), m(&[2, 0, 1]), m(&[1, 1, 1])];
        let w = m(&[3, 1, 2]);
        for o in orders {
            for a in &mons {
                for b in &mons {
                    assert_eq!(o.compare(a, b), o.compare(&(a * &w), &(b * &w)));
                }
            }
        }
    }
}
