//! Exact rational arithmetic helpers.
//!
//! All probabilities and weights in the crate are [`Rational`]s, an
//! arbitrary-precision reduced fraction from `num-rational`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`. The result is reduced.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = || Error::BadRational(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// `"p/q"` with the denominator always present, so the JSON form is uniform.
pub fn to_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Rising factorial `x (x+1) ... (x+n-1)`; empty product for `n = 0`.
pub fn rising(x: &Rational, n: usize) -> Rational {
    (0..n).fold(Rational::one(), |acc, k| acc * (x + int(k as i64)))
}

/// Falling factorial `x (x-1) ... (x-r+1)`; empty product for `r = 0`.
pub fn falling(x: &Rational, r: usize) -> Rational {
    (0..r).fold(Rational::one(), |acc, k| acc * (x - int(k as i64)))
}

/// Integer falling factorial, which is zero once the factors reach zero.
pub fn falling_int(x: u64, r: usize) -> BigInt {
    (0..r as u64).fold(BigInt::one(), |acc, k| {
        if k > x {
            BigInt::zero()
        } else {
            acc * BigInt::from(x - k)
        }
    })
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `base^exp` with the convention `0^0 = 1`.
pub fn pow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Plain decimal rendering with `digits` significant digits, truncated
/// toward zero. Zero renders as `"0"`.
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let r = r.abs();
    let ten = BigInt::from(10);
    // exponent e such that 10^e <= r < 10^(e+1)
    let mut e: i64 = r.numer().to_string().len() as i64 - r.denom().to_string().len() as i64;
    let pow10 = |k: i64| -> Rational {
        if k >= 0 {
            Rational::from_integer(num_traits::pow(ten.clone(), k as usize))
        } else {
            Rational::new(BigInt::one(), num_traits::pow(ten.clone(), (-k) as usize))
        }
    };
    while r < pow10(e) {
        e -= 1;
    }
    while r >= pow10(e + 1) {
        e += 1;
    }
    let shift = digits as i64 - 1 - e;
    let scaled = (&r * pow10(shift)).floor().to_integer();
    let mut s = scaled.to_string();
    let out = if shift <= 0 {
        s.extend(std::iter::repeat_n('0', (-shift) as usize));
        s
    } else {
        let shift = shift as usize;
        if s.len() <= shift {
            let zeros = "0".repeat(shift - s.len());
            format!("0.{zeros}{s}")
        } else {
            let (a, b) = s.split_at(s.len() - shift);
            format!("{a}.{b}")
        }
    };
    if neg {
        format!("-{out}")
    } else {
        out
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse("3/6").unwrap(), frac(1, 2));
        assert_eq!(parse(" 5 ").unwrap(), int(5));
        assert_eq!(parse("-2/4").unwrap(), frac(-1, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert_eq!(to_pq(&int(3)), "3/1");
    }

    #[test]
    fn factorials() {
        assert_eq!(rising(&int(3), 0), int(1));
        assert_eq!(rising(&int(2), 3), int(24));
        assert_eq!(falling(&int(5), 2), int(20));
        assert_eq!(falling_int(3, 5), BigInt::zero());
        assert_eq!(falling_int(4, 4), BigInt::from(24));
        assert_eq!(binomial(10, 3), BigUint::from(120u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(pow(&int(0), 0), int(1));
    }

    #[test]
    fn decimals() {
        assert_eq!(to_decimal(&frac(1, 3), 5), "0.33333");
        assert_eq!(to_decimal(&frac(1, 300), 3), "0.00333");
        assert_eq!(to_decimal(&int(1234), 2), "1200");
        assert_eq!(to_decimal(&frac(-5, 2), 3), "-2.50");
        assert_eq!(to_decimal(&int(1), 3), "1.00");
    }
}
