use itertools::Itertools;

use super::Polynomial;
use crate::error::{Error, Result};
use crate::field::Field;

/// All `size`×`size` minors, row subsets outermost, each subset in
/// lexicographic order.
pub fn minors<F: Field>(matrix: &[Vec<Polynomial<F>>], size: usize) -> Result<Vec<Polynomial<F>>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    if size == 0 || size > rows.min(cols) {
        return Err(Error::Size { size, rows, cols });
    }
    let mut out = Vec::new();
    for r in (0..rows).combinations(size) {
        for c in (0..cols).combinations(size) {
            let sub: Vec<Vec<&Polynomial<F>>> = r.iter().map(|&i| c.iter().map(|&j| &matrix[i][j]).collect()).collect();
            out.push(determinant(&sub));
        }
    }
    Ok(out)
}

/// Cofactor expansion along the first row.
fn determinant<F: Field>(m: &[Vec<&Polynomial<F>>]) -> Polynomial<F> {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero(m[0][0].vars());
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let sub: Vec<Vec<&Polynomial<F>>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, p)| *p).collect())
            .collect();
        let term = m[0][j] * &determinant(&sub);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Jacobian matrix: one row per polynomial, one column per variable.
pub fn jacobian<F: Field>(polys: &[Polynomial<F>]) -> Vec<Vec<Polynomial<F>>> {
    polys.iter().map(Polynomial::gradient).collect()
}
