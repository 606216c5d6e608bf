//! Exact linear solves over the rationals.
//!
//! Rows are scaled to integers and reduced with Bareiss' fraction-free
//! elimination, so intermediate entries stay integral and exactly divisible.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{common_denominator, Rational};

/// Solves the square system `m · x = rhs`.
pub fn solve(m: &[Vec<Rational>], rhs: &[Rational]) -> Result<Vec<Rational>> {
    let n = m.len();
    if rhs.len() != n || m.iter().any(|row| row.len() != n) {
        return Err(Error::Singular("system is not square".into()));
    }
    // augmented integer matrix
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            let den = common_denominator(row.iter().chain(std::iter::once(r)));
            row.iter()
                .chain(std::iter::once(r))
                .map(|x| (x * Rational::from_integer(den.clone())).to_integer())
                .collect()
        })
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Err(Error::Singular(format!("no pivot in column {k}")));
        };
        a.swap(k, p);
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for (x, p) in row[k + 1..].iter_mut().zip(&pivot_row[k + 1..]) {
                *x = (&*x * &pivot_row[k] - &factor * p) / &prev;
            }
        }
        prev = a[k][k].clone();
    }

    let mut x = vec![Rational::zero(); n];
    for k in (0..n).rev() {
        let mut acc = Rational::from_integer(a[k][n].clone());
        for c in k + 1..n {
            acc -= Rational::from_integer(a[k][c].clone()) * &x[c];
        }
        x[k] = acc / Rational::from_integer(a[k][k].clone());
    }
    Ok(x)
}
