//! Left- and right-hand sides of every catalogued identity.
//!
//! Sides are evaluated in cleared-denominator form, so apart from the
//! arguments `x/m`, `x^2/(m+2x)` and `-mx/(m+2x)` no division by a parameter
//! expression happens. Singular points are turned into skips up front.

use num_traits::{One, Zero};

use super::catalog::{IdentityTag, Variant};
use super::IdentityParams;
use crate::arith::{binomial_rational, factorial_rational, rat, sign_pow};
use crate::error::Error;
use crate::fps;
use crate::polynomials::{
    derivative_recurrence_step, ftilde_value, geometric_number, geometric_polynomial_shared,
    geometric_two_variable, geometric_value, tanny_dowling, TdVariant,
};
use crate::scalar::powu;
use crate::series::{self, Enclosure, PowerGeometricSeries};
use crate::triangles::{
    noncentral_whitney, noncentral_whitney_sum, stirling2_row, translated_whitney,
    translated_whitney_explicit,
};
use crate::Rational;

/// Width requested from series enclosures during identity checks.
pub fn series_eps() -> Rational {
    Rational::new(1.into(), num_bigint::BigInt::from(10).pow(20))
}

pub(crate) enum Sides {
    Exact { lhs: Rational, rhs: Rational },
    Enclosed { lhs: Rational, rhs: Enclosure },
}

pub(crate) enum Failure {
    /// Precondition violated or parameter missing.
    Skip(String),
    /// A series did not converge within its budget.
    Unconverged(String),
}

type Eval<T> = Result<T, Failure>;

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Unconverged(_) => Failure::Unconverged(e.to_string()),
            other => Failure::Skip(other.to_string()),
        }
    }
}

fn skip<T>(reason: impl Into<String>) -> Eval<T> {
    Err(Failure::Skip(reason.into()))
}

fn need<'a>(value: &'a Option<Rational>, name: &str) -> Eval<&'a Rational> {
    value
        .as_ref()
        .ok_or_else(|| Failure::Skip(format!("parameter {name} is required")))
}

fn nonzero_m(p: &IdentityParams) -> Eval<&Rational> {
    let m = need(&p.m, "m")?;
    if m.is_zero() {
        return skip("m must be nonzero");
    }
    Ok(m)
}

fn exact(lhs: Rational, rhs: Rational) -> Eval<Sides> {
    Ok(Sides::Exact { lhs, rhs })
}

fn binom(n: u32, k: u32) -> Rational {
    binomial_rational(n, k)
}

fn fact(k: u32) -> Rational {
    factorial_rational(k)
}

fn ft(m: &Rational, a: &Rational, n: u32, x: &Rational) -> Eval<Rational> {
    Ok(ftilde_value(m, a, n, x)?)
}

fn w(n: u32, y: &Rational) -> Rational {
    geometric_value(n, y)
}

/// `0^n`.
fn zero_pow(n: u32) -> Rational {
    if n == 0 {
        Rational::one()
    } else {
        Rational::zero()
    }
}

fn sum(range: std::ops::RangeInclusive<u32>, f: impl Fn(u32) -> Rational) -> Rational {
    range.map(f).fold(Rational::zero(), |acc, v| acc + v)
}

fn try_sum(
    range: std::ops::RangeInclusive<u32>,
    f: impl Fn(u32) -> Eval<Rational>,
) -> Eval<Rational> {
    range
        .map(f)
        .try_fold(Rational::zero(), |acc, v| Ok(acc + v?))
}

fn scaled(v: Variant, m: &Rational, n: u32, value: Rational) -> Rational {
    match v {
        Variant::AsPrinted => value,
        Variant::Corrected => powu(m, n) * value,
    }
}

fn enclosure(terms: PowerGeometricSeries) -> Eval<Enclosure> {
    Ok(terms.sum(&series_eps(), series::DEFAULT_MAX_TERMS)?)
}

pub(crate) fn evaluate(tag: IdentityTag, v: Variant, p: &IdentityParams) -> Eval<Sides> {
    use IdentityTag as T;
    let n = p.n;
    match tag {
        T::WEgf => {
            let x = need(&p.x, "x")?;
            let egf = fps::geometric_egf(x, n as usize)?;
            exact(w(n, x), egf[n as usize].clone())
        }
        T::WDerivRec => {
            let x = need(&p.x, "x")?;
            let stepped = derivative_recurrence_step(&geometric_polynomial_shared(n));
            exact(w(n + 1, x), stepped.eval(x))
        }
        T::F1Egf | T::F2Egf => {
            let (m, x) = (nonzero_m(p)?, need(&p.x, "x")?);
            let variant = if tag == T::F1Egf {
                TdVariant::First
            } else {
                TdVariant::Second
            };
            let lhs = tanny_dowling(variant, m, n)?.eval(x);
            let egf = fps::tanny_dowling_egf(variant, m, x, n as usize)?;
            exact(lhs, egf[n as usize].clone())
        }
        T::FtEgf => {
            let (m, a, x) = (nonzero_m(p)?, need(&p.a, "a")?, need(&p.x, "x")?);
            let egf = fps::ftilde_egf(m, a, x, n as usize)?;
            exact(ft(m, a, n, x)?, egf[n as usize].clone())
        }
        T::NcwSum => {
            let (m, a, x) = (nonzero_m(p)?, need(&p.a, "a")?, need(&p.x, "x")?);
            let rhs = try_sum(0..=n, |k| {
                Ok(fact(k) * noncentral_whitney_sum(m, a, n, k)? * powu(x, k))
            })?;
            exact(ft(m, a, n, x)?, rhs)
        }
        T::NcwA0 => {
            let (m, x) = (nonzero_m(p)?, need(&p.x, "x")?);
            let lhs = try_sum(0..=n, |k| {
                Ok(fact(k) * noncentral_whitney(m, &Rational::zero(), n, k)? * powu(x, k))
            })?;
            let s = stirling2_row(n);
            let rhs = sum(0..=n, |k| {
                fact(k) * powu(m, n - k) * &s[k as usize] * powu(x, k)
            });
            exact(lhs, rhs)
        }
        T::SpecA0 => {
            let (m, x) = (nonzero_m(p)?, need(&p.x, "x")?);
            let lhs = ft(m, &Rational::zero(), n, x)?;
            exact(lhs, scaled(v, m, n, w(n, &(x / m))))
        }
        T::SpecAm1 => {
            let (m, x) = (nonzero_m(p)?, need(&p.x, "x")?);
            let lhs = ft(m, &-Rational::one(), n, x)?;
            let egf = fps::tanny_dowling_egf(TdVariant::Second, m, x, n as usize)?;
            exact(lhs, egf[n as usize].clone())
        }
        T::Spec1mr => {
            let (r, x) = (need(&p.r, "r")?, need(&p.x, "x")?);
            let lhs = ft(&Rational::one(), &-r.clone(), n, x)?;
            let egf = fps::two_variable_geometric_egf(r, x, n as usize)?;
            exact(lhs, egf[n as usize].clone())
        }
        T::Thm1 => {
            let (m, a, x) = (nonzero_m(p)?, need(&p.a, "a")?, need(&p.x, "x")?);
            let y = x / m;
            let neg_a = -a.clone();
            let rhs = sum(0..=n, |k| {
                binom(n, k) * powu(m, k) * w(k, &y) * powu(&neg_a, n - k)
            });
            exact(ft(m, a, n, x)?, rhs)
        }
        T::KarginE13 => {
            let (r, x) = (need(&p.r, "r")?, need(&p.x, "x")?);
            let lhs = geometric_two_variable(r, n).eval(x);
            let rhs = sum(0..=n, |k| binom(n, k) * w(k, x) * powu(r, n - k));
            exact(lhs, rhs)
        }
        T::Thm2 => {
            let (m, a, x) = (nonzero_m(p)?, need(&p.a, "a")?, need(&p.x, "x")?);
            let lhs = x * ft(m, &(a - m), n, x)?;
            let rhs = (m + x) * ft(m, a, n, x)? - powu(&-a.clone(), n) * m;
            exact(lhs, rhs)
        }
        T::KarginE14 => {
            let (r, x) = (need(&p.r, "r")?, need(&p.x, "x")?);
            let lhs = x * geometric_two_variable(&(r + rat(1)), n).eval(x);
            let rhs = (rat(1) + x) * geometric_two_variable(r, n).eval(x) - powu(r, n);
            exact(lhs, rhs)
        }
        T::Spec6th => {
            let (m, x) = (nonzero_m(p)?, need(&p.x, "x")?);
            let lhs = x * ft(m, &-m.clone(), n, x)?;
            let wn = w(n, &(x / m));
            let rhs = match v {
                Variant::AsPrinted => (m + x) * wn,
                Variant::Corrected => (m + x) * powu(m, n) * wn - zero_pow(n) * m,
            };
            exact(lhs, rhs)
        }
        T::Spec7th => {
            let (m, x) = (nonzero_m(p)?, need(&p.x, "x")?);
            let lhs = (m + x) * ft(m, m, n, x)?;
            let rhs = x * scaled(v, m, n, w(n, &(x / m))) - powu(&-m.clone(), n + 1);
            exact(lhs, rhs)
        }
        T::Spec8th => {
            let (m, x) = (nonzero_m(p)?, need(&p.x, "x")?);
            let y = x / m;
            let binomial_sum = sum(0..=n, |k| binom(n, k) * w(k, &y));
            match v {
                Variant::AsPrinted => exact(x * powu(m, n) * binomial_sum, (m + x) * w(n, &y)),
                Variant::Corrected => exact(x * binomial_sum, (m + x) * w(n, &y) - zero_pow(n) * m),
            }
        }
        T::Spec9th => {
            let (m, x) = (nonzero_m(p)?, need(&p.x, "x")?);
            let y = x / m;
            let alternating = sum(0..=n, |k| binom(n, k) * sign_pow(n - k) * w(k, &y));
            match v {
                Variant::AsPrinted => exact(
                    (m + x) * powu(m, n) * alternating,
                    x * w(n, &y) - powu(&-m.clone(), n + 1),
                ),
                Variant::Corrected => exact((m + x) * alternating, x * w(n, &y) + sign_pow(n) * m),
            }
        }
        T::DilKurt1 => {
            if n == 0 {
                return skip("requires n >= 1");
            }
            let lhs = sum(0..=n, |k| binom(n, k) * geometric_number(k));
            exact(lhs, rat(2) * geometric_number(n))
        }
        T::DilKurt2 => {
            let lhs = rat(2) * sum(0..=n, |k| binom(n, k) * sign_pow(k) * geometric_number(k));
            exact(lhs, sign_pow(n) * geometric_number(n) + rat(1))
        }
        T::Thm3 => {
            let m = nonzero_m(p)?;
            let (a1, a2, x) = (need(&p.a1, "a1")?, need(&p.a2, "a2")?, need(&p.x, "x")?);
            let b = a1 + a2 + m;
            let lhs = x * try_sum(0..=n, |k| {
                Ok(binom(n, k) * ft(m, a1, k, x)? * ft(m, a2, n - k, x)?)
            })?;
            let rhs = ft(m, &b, n + 1, x)? + &b * ft(m, &b, n, x)?;
            exact(lhs, rhs)
        }
        T::Spec11th => {
            let (m, x) = (nonzero_m(p)?, need(&p.x, "x")?);
            let y = x / m;
            let lhs = (m + x) * sum(0..=n, |k| binom(n, k) * w(k, &y) * w(n - k, &y));
            let rhs = match v {
                Variant::AsPrinted => w(n + 1, &y) + m * w(n, &y),
                Variant::Corrected => m * (w(n + 1, &y) + w(n, &y)),
            };
            exact(lhs, rhs)
        }
        T::Kargin1 => {
            let x = need(&p.x, "x")?;
            let lhs = (x + rat(1)) * sum(0..=n, |k| binom(n, k) * w(k, x) * w(n - k, x));
            exact(lhs, w(n + 1, x) + w(n, x))
        }
        T::Thm4 => {
            let m = nonzero_m(p)?;
            let (a1, a2) = (need(&p.a1, "a1")?, need(&p.a2, "a2")?);
            let (x1, x2) = distinct_pair(p)?;
            let lhs = (x2 - x1)
                * try_sum(0..=n, |k| {
                    Ok(binom(n, k) * ft(m, a1, k, x1)? * ft(m, a2, n - k, x2)?)
                })?;
            let a = a1 + a2;
            let rhs = x2 * ft(m, &a, n, x2)? - x1 * ft(m, &a, n, x1)?;
            exact(lhs, rhs)
        }
        T::SpecThm4A0 => {
            let m = nonzero_m(p)?;
            let (x1, x2) = distinct_pair(p)?;
            let (y1, y2) = (x1 / m, x2 / m);
            let wm = |j: u32, y: &Rational| scaled(v, m, j, w(j, y));
            let lhs = (x2 - x1) * sum(0..=n, |k| binom(n, k) * wm(k, &y1) * wm(n - k, &y2));
            exact(lhs, x2 * wm(n, &y2) - x1 * wm(n, &y1))
        }
        T::Kargin2 => {
            let (x1, x2) = distinct_pair(p)?;
            let lhs = (x2 - x1) * sum(0..=n, |k| binom(n, k) * w(k, x1) * w(n - k, x2));
            exact(lhs, x2 * w(n, x2) - x1 * w(n, x1))
        }
        T::BininvFwd => {
            let (m, a, x) = (nonzero_m(p)?, need(&p.a, "a")?, need(&p.x, "x")?);
            let y = x / m;
            let rhs = sum(0..=n, |j| {
                sign_pow(n - j) * binom(n, j) * powu(m, j) * powu(a, n - j) * w(j, &y)
            });
            exact(ft(m, a, n, x)?, rhs)
        }
        T::BininvInv => {
            let (m, a, x) = (nonzero_m(p)?, need(&p.a, "a")?, need(&p.x, "x")?);
            let lhs = powu(m, n) * w(n, &(x / m));
            let rhs = try_sum(0..=n, |j| {
                Ok(binom(n, j) * powu(a, n - j) * ft(m, a, j, x)?)
            })?;
            exact(lhs, rhs)
        }
        T::Reflect => {
            let (m, a, x) = (nonzero_m(p)?, need(&p.a, "a")?, need(&p.x, "x")?);
            let lhs = ft(m, a, n, &(x - m))?;
            let rhs = sign_pow(n) * ft(m, &(-a.clone() - m), n, &-x.clone())?;
            exact(lhs, rhs)
        }
        T::Thm5 => {
            let (m, a, x) = (nonzero_m(p)?, need(&p.a, "a")?, need(&p.x, "x")?);
            let mx = m + x;
            if mx.is_zero() {
                return skip("requires x != -m");
            }
            let neg_a = -a.clone();
            let lhs = &mx * ft(m, a, n, x)?;
            let rhs = x * try_sum(0..=n, |k| {
                Ok(sign_pow(n + k) * fact(k) * noncentral_whitney(m, &neg_a, n, k)? * powu(&mx, k))
            })? + powu(&neg_a, n) * m;
            exact(lhs, rhs)
        }
        T::Spec17th | T::Spec18th => {
            let (m, x) = (nonzero_m(p)?, need(&p.x, "x")?);
            let mx = m + x;
            if mx.is_zero() {
                return skip("requires x != -m");
            }
            let s = stirling2_row(n);
            let tw = |k: u32| match tag {
                T::Spec17th => powu(m, n - k) * &s[k as usize],
                _ => translated_whitney(m, n, k),
            };
            let expansion = x * sum(0..=n, |k| sign_pow(n + k) * fact(k) * tw(k) * powu(&mx, k));
            let lhs = &mx * scaled(v, m, n, w(n, &(x / m)));
            let rhs = match v {
                Variant::AsPrinted => expansion,
                Variant::Corrected => expansion + zero_pow(n) * m,
            };
            exact(lhs, rhs)
        }
        T::Kargin3 => {
            let x = need(&p.x, "x")?;
            if n == 0 {
                return skip("requires n >= 1");
            }
            let x1 = x + rat(1);
            if x1.is_zero() {
                return skip("requires x != -1");
            }
            let s = stirling2_row(n);
            let rhs = x * sum(1..=n, |k| {
                &s[k as usize] * sign_pow(n + k) * fact(k) * powu(&x1, k)
            });
            exact(&x1 * w(n, x), rhs)
        }
        T::TwRec => {
            let (m, x) = (need(&p.m, "m")?, need(&p.x, "x")?);
            if n == 0 {
                return skip("requires n >= 1");
            }
            let lhs = sum(0..=n, |k| translated_whitney(m, n, k) * powu(x, k));
            let rhs = sum(0..=n, |k| {
                let diagonal = if k > 0 {
                    translated_whitney(m, n - 1, k - 1)
                } else {
                    Rational::zero()
                };
                (diagonal + m * rat(k as i64) * translated_whitney(m, n - 1, k)) * powu(x, k)
            });
            exact(lhs, rhs)
        }
        T::TwExplicit => {
            let (m, x) = (nonzero_m(p)?, need(&p.x, "x")?);
            let lhs = sum(0..=n, |k| translated_whitney(m, n, k) * powu(x, k));
            let rhs = try_sum(0..=n, |k| {
                Ok(translated_whitney_explicit(m, n, k)? * powu(x, k))
            })?;
            exact(lhs, rhs)
        }
        T::HalfArg => {
            let (m, a, x) = (nonzero_m(p)?, need(&p.a, "a")?, need(&p.x, "x")?);
            let d = m + rat(2) * x;
            if d.is_zero() {
                return skip("requires x != -m/2");
            }
            let two_a = rat(2) * a;
            let lhs = &d * ft(m, &two_a, n, x)?;
            let rhs = powu(&rat(2), n + 1) * (m + x) * ft(m, a, n, &(x * x / &d))?
                - m * ft(m, &two_a, n, &(-(m * x) / &d))?;
            exact(lhs, rhs)
        }
        T::Thm6 => {
            let (m, a, x) = (nonzero_m(p)?, need(&p.a, "a")?, need(&p.x, "x")?);
            let d = m + rat(2) * x;
            if d.is_zero() {
                return skip("requires x != -m/2");
            }
            let two_a = rat(2) * a;
            let lead = powu(&rat(2), n + 1) * (m + x);
            let neg_m = -m.clone();
            let lhs = powu(&d, n + 1) * ft(m, &two_a, n, x)?;
            let rhs = try_sum(0..=n, |k| {
                let xk = powu(x, k);
                let bracket = &lead * &xk * noncentral_whitney(m, a, n, k)?
                    + powu(&neg_m, k + 1) * noncentral_whitney(m, &two_a, n, k)?;
                Ok(fact(k) * xk * bracket * powu(&d, n - k))
            })?;
            exact(lhs, rhs)
        }
        T::Spec20th => {
            let (m, x) = (nonzero_m(p)?, need(&p.x, "x")?);
            let d = m + rat(2) * x;
            if d.is_zero() {
                return skip("requires x != -m/2");
            }
            let lead = powu(&rat(2), n + 1) * (m + x);
            let neg_m = -m.clone();
            let lhs = powu(&d, n + 1) * scaled(v, m, n, w(n, &(x / m)));
            let rhs = sum(0..=n, |k| {
                let xk = powu(x, k);
                fact(k)
                    * &xk
                    * translated_whitney(m, n, k)
                    * (&lead * &xk + powu(&neg_m, k + 1))
                    * powu(&d, n - k)
            });
            exact(lhs, rhs)
        }
        T::Kargin4 => {
            let x = need(&p.x, "x")?;
            let d = rat(2) * x + rat(1);
            if d.is_zero() {
                return skip("requires x != -1/2");
            }
            let lead = powu(&rat(2), n + 1) * (x + rat(1));
            let s = stirling2_row(n);
            let rhs = sum(0..=n, |k| {
                let xk = powu(x, k);
                &s[k as usize] * fact(k) * &xk * (&lead * &xk + sign_pow(k + 1)) * powu(&d, n - k)
            });
            exact(powu(&d, n + 1) * w(n, x), rhs)
        }
        T::Series21 => {
            let (m, a, x) = (nonzero_m(p)?, need(&p.a, "a")?, need(&p.x, "x")?);
            let q = series::check_convergence(m, x)?;
            let rhs = enclosure(PowerGeometricSeries {
                prefactor: m / (m + x),
                ratio: q,
                step: m.clone(),
                offset: a.clone(),
                power: n,
            })?;
            Ok(Sides::Enclosed {
                lhs: ft(m, a, n, x)?,
                rhs,
            })
        }
        T::Spec22nd => {
            let (m, x) = (nonzero_m(p)?, need(&p.x, "x")?);
            let q = series::check_convergence(m, x)?;
            let prefactor = match v {
                Variant::AsPrinted => powu(m, n + 1) / (m + x),
                Variant::Corrected => m / (m + x),
            };
            let rhs = enclosure(PowerGeometricSeries {
                prefactor,
                ratio: q,
                step: Rational::one(),
                offset: Rational::zero(),
                power: n,
            })?;
            Ok(Sides::Enclosed {
                lhs: w(n, &(x / m)),
                rhs,
            })
        }
        T::Series23 => {
            let x = need(&p.x, "x")?;
            let q = series::check_convergence(&Rational::one(), x)?;
            let rhs = enclosure(PowerGeometricSeries {
                prefactor: (x + rat(1)).recip(),
                ratio: q,
                step: Rational::one(),
                offset: Rational::zero(),
                power: n,
            })?;
            Ok(Sides::Enclosed { lhs: w(n, x), rhs })
        }
        T::Series24 => {
            let half = Rational::new(1.into(), 2.into());
            let rhs = enclosure(PowerGeometricSeries {
                prefactor: half.clone(),
                ratio: half,
                step: Rational::one(),
                offset: Rational::zero(),
                power: n,
            })?;
            Ok(Sides::Enclosed {
                lhs: geometric_number(n),
                rhs,
            })
        }
    }
}

fn distinct_pair(p: &IdentityParams) -> Eval<(&Rational, &Rational)> {
    let (x1, x2) = (need(&p.x1, "x1")?, need(&p.x2, "x2")?);
    if x1 == x2 {
        return skip("requires x1 != x2");
    }
    Ok((x1, x2))
}
