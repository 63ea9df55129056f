use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyalg::Rational;

/// Solves `a x = b` exactly for every column of `b` by Gauss-Jordan elimination.
///
/// `a` is `n x n`; `b` is `n x k`. Pivots are the first nonzero entry in each column.
pub fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Vec<Rational>>) -> Result<Vec<Vec<Rational>>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularSystem)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut().chain(b[col].iter_mut()) {
            *v *= &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            let (pivot_a, pivot_b) = (a[col].clone(), b[col].clone());
            for (v, pv) in a[r].iter_mut().zip(&pivot_a) {
                *v -= &f * pv;
            }
            for (v, pv) in b[r].iter_mut().zip(&pivot_b) {
                *v -= &f * pv;
            }
        }
    }
    debug_assert!(a
        .iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, v)| *v == if i == j { Rational::one() } else { Rational::zero() })));
    Ok(b)
}
