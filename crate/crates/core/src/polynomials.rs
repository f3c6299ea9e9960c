//! Geometric, Tanny-Dowling and noncentral Tanny-Dowling polynomials as exact
//! polynomials in `x`, built from the triangle caches.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::One;

use crate::arith::{factorial_rational, rat};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::{powu, Scalar};
use crate::triangles::{noncentral_whitney_row, stirling2_row, whitney};
use crate::{Rational, RationalPolynomial};

/// Which of the two Tanny-Dowling normalizations to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TdVariant {
    /// `sum_k m^k k! W_m(n, k) x^k`
    First,
    /// `sum_k k! W_m(n, k) x^k`
    Second,
}

impl FromStr for TdVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" | "first" => Ok(TdVariant::First),
            "2" | "second" => Ok(TdVariant::Second),
            other => Err(Error::domain(format!(
                "Tanny-Dowling variant must be 1 or 2, got {other:?}"
            ))),
        }
    }
}

impl fmt::Display for TdVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdVariant::First => write!(f, "1"),
            TdVariant::Second => write!(f, "2"),
        }
    }
}

type PolyMemo<K> = RwLock<HashMap<K, Arc<RationalPolynomial>>>;

fn memoized<K, F>(memo: &PolyMemo<K>, key: K, build: F) -> Result<Arc<RationalPolynomial>>
where
    K: std::hash::Hash + Eq,
    F: FnOnce() -> Result<RationalPolynomial>,
{
    if let Some(p) = memo.read().unwrap().get(&key) {
        return Ok(Arc::clone(p));
    }
    let p = Arc::new(build()?);
    Ok(Arc::clone(memo.write().unwrap().entry(key).or_insert(p)))
}

/// `sum_k k! row[k] x^k`
fn ordered_row_polynomial(row: &[Rational]) -> RationalPolynomial {
    let mut fact = Rational::one();
    let coeffs = row
        .iter()
        .enumerate()
        .map(|(k, v)| {
            if k > 0 {
                fact *= rat(k as i64);
            }
            &fact * v
        })
        .collect();
    Polynomial::new(coeffs)
}

/// `w_n(x) = sum_k k! S(n, k) x^k`.
pub fn geometric_polynomial(n: u32) -> RationalPolynomial {
    (*geometric_polynomial_shared(n)).clone()
}

pub(crate) fn geometric_polynomial_shared(n: u32) -> Arc<RationalPolynomial> {
    static MEMO: OnceLock<PolyMemo<u32>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    memoized(memo, n, || Ok(ordered_row_polynomial(&stirling2_row(n)))).unwrap()
}

/// Ordered Bell (Fubini) number `w_n(1)`.
pub fn geometric_number(n: u32) -> Rational {
    geometric_polynomial_shared(n).eval(&Rational::one())
}

/// `w_n(x)` at a point.
pub fn geometric_value(n: u32, x: &Rational) -> Rational {
    geometric_polynomial_shared(n).eval(x)
}

/// Noncentral Tanny-Dowling polynomial `sum_k k! W̃_{m,a}(n, k) x^k`.
pub fn noncentral_td(m: &Rational, a: &Rational, n: u32) -> Result<RationalPolynomial> {
    Ok((*noncentral_td_shared(m, a, n)?).clone())
}

pub(crate) fn noncentral_td_shared(
    m: &Rational,
    a: &Rational,
    n: u32,
) -> Result<Arc<RationalPolynomial>> {
    static MEMO: OnceLock<PolyMemo<(Rational, Rational, u32)>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    memoized(memo, (m.clone(), a.clone(), n), || {
        Ok(ordered_row_polynomial(&noncentral_whitney_row(m, a, n)?))
    })
}

/// `F̃_{m,a}(n; x)` at a point.
pub fn ftilde_value(m: &Rational, a: &Rational, n: u32, x: &Rational) -> Result<Rational> {
    Ok(noncentral_td_shared(m, a, n)?.eval(x))
}

/// Tanny-Dowling polynomial of the requested normalization.
pub fn tanny_dowling(variant: TdVariant, m: &Rational, n: u32) -> Result<RationalPolynomial> {
    let coeffs = (0..=n)
        .map(|k| {
            let base = factorial_rational(k) * whitney(m, n, k)?;
            Ok(match variant {
                TdVariant::First => base * powu(m, k),
                TdVariant::Second => base,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}

/// Two-variable geometric polynomial `w_n(r; x)`, i.e. `F̃_{1,-r}(n; x)`.
pub fn geometric_two_variable(r: &Rational, n: u32) -> RationalPolynomial {
    noncentral_td(&Rational::one(), &-r.clone(), n).expect("m = 1 is nonzero")
}

/// One step of `w_{n+1}(x) = x d/dx [(1 + x) w_n(x)]`.
pub fn derivative_recurrence_step<T: Scalar>(p: &Polynomial<T>) -> Polynomial<T> {
    let widened = p + &p.shift();
    widened.derivative().shift()
}

pub fn eval_poly<T: Scalar>(p: &Polynomial<T>, x: &T) -> T {
    p.eval(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use crate::fps::ftilde_egf;

    fn p(cs: &[i64]) -> RationalPolynomial {
        Polynomial::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn geometric_examples() {
        assert_eq!(geometric_polynomial(0), p(&[1]));
        assert_eq!(geometric_polynomial(2), p(&[0, 1, 2]));
        assert_eq!(geometric_polynomial(3).eval(&rat(1)), rat(13));
        assert_eq!(geometric_number(0), rat(1));
        assert_eq!(geometric_number(3), rat(13));
        assert_eq!(geometric_number(5), rat(541));
    }

    #[test]
    fn noncentral_td_examples() {
        assert_eq!(noncentral_td(&rat(4), &ratio(-2, 3), 0).unwrap(), p(&[1]));
        for n in 0..8 {
            assert_eq!(
                noncentral_td(&rat(1), &rat(0), n).unwrap(),
                geometric_polynomial(n)
            );
        }
        assert_eq!(noncentral_td(&rat(2), &rat(0), 2).unwrap(), p(&[0, 2, 2]));
        assert!(matches!(
            noncentral_td(&rat(0), &rat(0), 2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn noncentral_td_degree_and_leading_term() {
        for n in 0..10u32 {
            let q = noncentral_td(&rat(3), &rat(-2), n).unwrap();
            assert_eq!(q.degree(), Some(n as usize));
            assert_eq!(q.leading_coeff(), Some(&factorial_rational(n)));
        }
    }

    #[test]
    fn noncentral_td_matches_generating_function() {
        let (m, a, x) = (rat(2), rat(1), rat(1));
        let egf = ftilde_egf(&m, &a, &x, 3).unwrap();
        for n in 0..=3u32 {
            assert_eq!(ftilde_value(&m, &a, n, &x).unwrap(), egf[n as usize]);
        }
    }

    #[test]
    fn tanny_dowling_examples() {
        assert_eq!(
            tanny_dowling(TdVariant::Second, &rat(3), 0).unwrap(),
            p(&[1])
        );
        for n in 0..7 {
            assert_eq!(
                tanny_dowling(TdVariant::Second, &rat(1), n).unwrap(),
                noncentral_td(&rat(1), &rat(-1), n).unwrap()
            );
            for m in [rat(2), ratio(1, 3)] {
                let first = tanny_dowling(TdVariant::First, &m, n).unwrap();
                let second = tanny_dowling(TdVariant::Second, &m, n).unwrap();
                assert_eq!(first, second.compose_scale(&m));
            }
        }
    }

    #[test]
    fn two_variable_examples() {
        for n in 0..6 {
            assert_eq!(geometric_two_variable(&rat(0), n), geometric_polynomial(n));
        }
        assert_eq!(geometric_two_variable(&rat(1), 2).eval(&rat(1)), rat(6));
        assert_eq!(geometric_two_variable(&ratio(5, 2), 0), p(&[1]));
    }

    #[test]
    fn derivative_step_examples() {
        assert_eq!(derivative_recurrence_step(&p(&[1])), p(&[0, 1]));
        assert_eq!(derivative_recurrence_step(&p(&[0, 1])), p(&[0, 1, 2]));
        assert_eq!(derivative_recurrence_step(&p(&[0, 1, 2])), p(&[0, 1, 6, 6]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval_poly(&p(&[1]), &ratio(-9, 4)), rat(1));
        assert_eq!(eval_poly(&p(&[0, 1, 2]), &rat(1)), rat(3));
        assert_eq!(eval_poly(&p(&[0, 1, 2]), &ratio(1, 2)), rat(1));
    }

    #[test]
    fn variant_parsing() {
        assert_eq!("1".parse::<TdVariant>().unwrap(), TdVariant::First);
        assert_eq!("second".parse::<TdVariant>().unwrap(), TdVariant::Second);
        assert!("3".parse::<TdVariant>().is_err());
    }
}
