//! Exact integer and rational scalars: binomials, factorials, powers, and the
//! `p/q` text format shared by every front end.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{Integer, Rational};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    // acc stays integral: after step i it equals C(n - k + i, i).
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

pub fn factorial(n: u32) -> Integer {
    (1..=n).fold(Integer::one(), |acc, i| acc * i)
}

/// Exact power with an integer exponent. `0^0 = 1`; `0^e` for `e < 0` is a
/// domain error.
pub fn int_pow(base: &Rational, exp: i64) -> Result<Rational> {
    if exp < 0 {
        if base.is_zero() {
            return Err(Error::domain("zero raised to a negative power"));
        }
        let e = u32::try_from(exp.unsigned_abs())
            .map_err(|_| Error::domain("exponent out of range"))?;
        Ok(crate::scalar::powu(&base.recip(), e))
    } else {
        let e = u32::try_from(exp).map_err(|_| Error::domain("exponent out of range"))?;
        Ok(crate::scalar::powu(base, e))
    }
}

/// Integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn binomial_rational(n: u32, k: u32) -> Rational {
    Rational::from_integer(binomial(n, k))
}

pub fn factorial_rational(n: u32) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `(-1)^e` as a rational.
pub fn sign_pow(e: u32) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Renders `p/q`, or just `p` when the value is an integer.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Parses `p`, `p/q` (sign on `p` only) or an exact decimal literal such as
/// `-0.25` or `1e-20`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let fail = || Error::Parse(text.to_string());
    let s = text.trim();
    if let Some((p, q)) = s.split_once('/') {
        let numer = parse_signed_digits(p).ok_or_else(fail)?;
        if q.starts_with(['+', '-']) {
            return Err(fail());
        }
        let denom = parse_signed_digits(q).ok_or_else(fail)?;
        if denom.is_zero() {
            return Err(fail());
        }
        return Ok(Rational::new(numer, denom));
    }
    parse_decimal(s).ok_or_else(fail)
}

fn parse_signed_digits(s: &str) -> Option<BigInt> {
    let (neg, digits) = split_sign(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let v: BigInt = digits.parse().ok()?;
    Some(if neg { -v } else { v })
}

fn split_sign(s: &str) -> (bool, &str) {
    match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    }
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (neg, rest) = split_sign(s);
    let (mantissa, exponent) = match rest.find(['e', 'E']) {
        Some(i) => (&rest[..i], Some(&rest[i + 1..])),
        None => (rest, None),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = digits.parse().ok()?;
    let mut shift = -i64::try_from(frac_part.len()).ok()?;
    if let Some(e) = exponent {
        let (eneg, edigits) = split_sign(e);
        if edigits.is_empty() || !all_digits(edigits) {
            return None;
        }
        let ev: i64 = edigits.parse().ok()?;
        shift += if eneg { -ev } else { ev };
    }
    let scale = int_pow(&rat(10), shift).ok()?;
    let value = Rational::from_integer(numer) * scale;
    Some(if neg { -value } else { value })
}

/// Absolute value helper that reads better at call sites than the trait path.
pub fn abs(value: &Rational) -> Rational {
    value.abs()
}
