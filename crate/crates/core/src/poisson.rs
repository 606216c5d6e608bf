//! Poisson masses and total-variation distance at high precision.
//!
//! `e^{-λ}` is the only irrational quantity; it is approximated by a
//! rational from the Taylor series of `e^{λ}` carried to well beyond the
//! requested precision, and every other step is exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::diagonal::Pmf;
use crate::error::{Error, Result};
use crate::rational::{to_decimal, to_f64, Rational};

/// Decimal digits carried in the `e^{-λ}` approximation.
const GUARD_DIGITS: usize = 80;

/// A real number held as a rational approximation with an absolute error
/// bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Real {
    pub approx: Rational,
    pub error: Rational,
}

impl Real {
    pub fn exact(r: Rational) -> Self {
        Real { approx: r, error: Rational::zero() }
    }

    /// `digits` significant digits, truncated.
    pub fn to_decimal(&self, digits: usize) -> String {
        to_decimal(&self.approx, digits)
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.approx)
    }

    /// `Some(true)` when `self < other` is certain given both error bounds,
    /// `None` when the intervals overlap.
    pub fn certainly_less(&self, other: &Real) -> Option<bool> {
        let gap = &other.approx - &self.approx;
        let slack = &self.error + &other.error;
        if gap > slack {
            Some(true)
        } else if -gap > slack {
            Some(false)
        } else {
            None
        }
    }
}

fn ten_pow(k: usize) -> BigInt {
    num_traits::pow(BigInt::from(10), k)
}

fn round_to(r: &Rational, digits: usize) -> Rational {
    let scale = ten_pow(digits);
    let scaled = (r * Rational::from_integer(scale.clone())).round().to_integer();
    Rational::new(scaled, scale)
}

/// `e^{-λ}` to about [`GUARD_DIGITS`] digits, with its error bound.
pub fn exp_neg(lambda: &Rational) -> Result<Real> {
    if lambda.is_negative() {
        return Err(Error::InadmissibleParams(format!("lambda = {lambda} must be non-negative")));
    }
    if lambda.is_zero() {
        return Ok(Real::exact(Rational::one()));
    }
    // e^λ = Σ λ^k / k!; once k + 1 > 2λ the tail after `term` is below `term`
    let eps = Rational::new(BigInt::one(), ten_pow(GUARD_DIGITS + 10));
    let mut sum = Rational::zero();
    let mut term = Rational::one();
    let mut k: u64 = 0;
    loop {
        sum += &term;
        k += 1;
        term = term * lambda / Rational::from_integer(BigInt::from(k));
        if Rational::from_integer(BigInt::from(k + 1)) > lambda * Rational::from_integer(BigInt::from(2)) && term < eps {
            break;
        }
    }
    // sum <= e^λ <= sum + 2 term, and e^λ >= 1
    let approx = round_to(&sum.recip(), GUARD_DIGITS);
    let error = Rational::new(BigInt::one(), ten_pow(GUARD_DIGITS - 2));
    Ok(Real { approx, error })
}

/// `P(Pois(λ) = k)` for `k = 0..=kmax`, sharing one `e^{-λ}` approximation.
pub fn poisson_masses(lambda: &Rational, kmax: usize) -> Result<(Vec<Rational>, Rational)> {
    let e = exp_neg(lambda)?;
    let mut out = Vec::with_capacity(kmax + 1);
    let mut factor = Rational::one(); // λ^k / k!
    for k in 0..=kmax {
        if k > 0 {
            factor = factor * lambda / Rational::from_integer(BigInt::from(k));
        }
        out.push(&e.approx * &factor);
    }
    Ok((out, e.error))
}

/// `(1/2) Σ_k |p(k) - Pois(λ)(k)|` over all `k >= 0`, including the
/// Poisson tail beyond the support of `p`.
pub fn tv_to_poisson(p: &Pmf, lambda: &Rational) -> Result<Real> {
    if !lambda.is_positive() {
        return Err(Error::InadmissibleParams(format!("lambda = {lambda} must be positive")));
    }
    let kmax = p.support_max();
    let (q, err) = poisson_masses(lambda, kmax)?;
    let mut l1 = Rational::zero();
    let mut head = Rational::zero();
    for (k, qk) in q.iter().enumerate() {
        l1 += (p.get(k) - qk).abs();
        head += qk;
    }
    let tail = Rational::one() - head;
    let total = (l1 + tail.abs()) / Rational::from_integer(BigInt::from(2));
    // each q(k) inherits err·λ^k/k!, summing to at most err·e^λ <= err·3^⌈λ⌉
    let exponent = usize::try_from(lambda.ceil().to_integer()).unwrap_or(usize::MAX);
    let error = err * crate::rational::pow(&Rational::from_integer(BigInt::from(3)), exponent);
    Ok(Real { approx: total, error })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn exp_values() {
        let e = exp_neg(&int(1)).unwrap();
        assert!((e.to_f64() - (-1.0f64).exp()).abs() < 1e-16);
        assert!(e.to_decimal(30).starts_with("0.367879441171442321595523770161"));
        let h = exp_neg(&frac(1, 2)).unwrap();
        assert!(h.to_decimal(30).starts_with("0.606530659712633423603799534991"));
        assert_eq!(exp_neg(&int(0)).unwrap().approx, int(1));
        assert!(exp_neg(&int(-1)).is_err());
    }

    #[test]
    fn self_distance_is_tail() {
        let (mut q, _) = poisson_masses(&int(1), 50).unwrap();
        let head: Rational = q.iter().sum();
        q[50] += Rational::one() - head;
        let p = Pmf::new(q).unwrap();
        let tv = tv_to_poisson(&p, &int(1)).unwrap();
        assert!(tv.to_f64() < 1e-15);
    }

    #[test]
    fn point_mass_distance() {
        // TV(δ_0, Pois(λ)) = 1 - e^{-λ}
        let p = Pmf::new(vec![int(1)]).unwrap();
        let tv = tv_to_poisson(&p, &int(1)).unwrap();
        assert!((tv.to_f64() - (1.0 - (-1.0f64).exp())).abs() < 1e-15);
        assert!(tv_to_poisson(&p, &int(0)).is_err());
    }

    #[test]
    fn ordering_with_error_bars() {
        let a = Real::exact(frac(1, 3));
        let b = Real::exact(frac(1, 2));
        assert_eq!(a.certainly_less(&b), Some(true));
        assert_eq!(b.certainly_less(&a), Some(false));
        let fuzzy = Real { approx: frac(1, 3), error: int(1) };
        assert_eq!(fuzzy.certainly_less(&b), None);
    }
}
