//! Certified summation of `prefactor * sum_{k>=0} q^k (step k - offset)^n`.
//!
//! Every result is an exact rational interval. The tail is bounded
//! geometrically: once the ratio of consecutive term magnitudes is at most
//! `rho = (1 + |q|) / 2`, and it stays there because the ratio decreases in `k`,
//! the remaining terms sum to at most `|term_k| * rho / (1 - rho)`.

use num_traits::{One, Signed, Zero};

use crate::arith::{rat, ratio};
use crate::error::{Error, Result};
use crate::scalar::powu;
use crate::Rational;

/// Default term budget for the convenience wrappers.
pub const DEFAULT_MAX_TERMS: usize = 10_000;

/// Exact interval `[lo, hi]` certified to contain a series value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
    pub terms_used: usize,
}

impl Enclosure {
    pub fn contains(&self, value: &Rational) -> bool {
        &self.lo <= value && value <= &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat(2)
    }

    /// True when `self` lies inside `other`.
    pub fn is_within(&self, other: &Enclosure) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }
}

/// State reached when the term budget ran out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialSum {
    pub partial_sum: Rational,
    /// Tail bound from the last term where one was available.
    pub tail_bound: Option<Rational>,
    pub terms_used: usize,
}

impl PartialSum {
    pub fn enclosure(&self) -> Option<Enclosure> {
        self.tail_bound.as_ref().map(|t| Enclosure {
            lo: &self.partial_sum - t,
            hi: &self.partial_sum + t,
            terms_used: self.terms_used,
        })
    }
}

/// `prefactor * sum_{k>=0} ratio^k (step k - offset)^power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerGeometricSeries {
    pub prefactor: Rational,
    pub ratio: Rational,
    pub step: Rational,
    pub offset: Rational,
    pub power: u32,
}

impl PowerGeometricSeries {
    /// Sums until the enclosure width is at most `eps`.
    pub fn sum(&self, eps: &Rational, max_terms: usize) -> Result<Enclosure> {
        if !eps.is_positive() {
            return Err(Error::domain("eps must be positive"));
        }
        if !self.step.is_positive() {
            return Err(Error::domain("step must be positive"));
        }
        let q_abs = self.ratio.abs();
        if q_abs >= Rational::one() {
            return Err(Error::domain("series requires |q| < 1"));
        }
        let n = self.power;
        if self.ratio.is_zero() {
            let value = &self.prefactor * powu(&-self.offset.clone(), n);
            return Ok(Enclosure {
                lo: value.clone(),
                hi: value,
                terms_used: 1,
            });
        }

        let rho = (Rational::one() + &q_abs) / rat(2);
        let tail_factor = self.prefactor.abs() * &rho / (Rational::one() - &rho);
        let mut sum = Rational::zero();
        let mut q_pow = Rational::one();
        let mut last_bound = None;
        for k in 0..max_terms {
            let base = &self.step * rat(k as i64) - &self.offset;
            let term = &q_pow * powu(&base, n);
            sum += &term;
            if n == 0 || base.is_positive() {
                let growth = if n == 0 {
                    Rational::one()
                } else {
                    powu(&((&base + &self.step) / &base), n)
                };
                if &q_abs * growth <= rho {
                    let tail = &tail_factor * term.abs();
                    let total = &self.prefactor * &sum;
                    if &tail * rat(2) <= *eps {
                        return Ok(Enclosure {
                            lo: &total - &tail,
                            hi: &total + &tail,
                            terms_used: k + 1,
                        });
                    }
                    last_bound = Some(tail);
                }
            }
            q_pow *= &self.ratio;
        }
        Err(Error::Unconverged(Box::new(PartialSum {
            partial_sum: &self.prefactor * sum,
            tail_bound: last_bound,
            terms_used: max_terms,
        })))
    }
}

/// `x / (m + x)`, the ratio of the noncentral Tanny-Dowling series.
pub fn ftilde_ratio(m: &Rational, x: &Rational) -> Result<Rational> {
    let denom = m + x;
    if denom.is_zero() {
        return Err(Error::domain("m + x must be nonzero"));
    }
    Ok(x / denom)
}

/// Checks `m > 0` and `|x/(m+x)| < 1`, returning the ratio.
pub fn check_convergence(m: &Rational, x: &Rational) -> Result<Rational> {
    if !m.is_positive() {
        return Err(Error::domain("series requires m > 0"));
    }
    // For m > 0, |x/(m+x)| < 1 exactly when x > -m/2.
    if x * rat(2) <= -m.clone() {
        return Err(Error::domain(format!(
            "series requires |x/(m+x)| < 1, violated for m = {m}, x = {x}"
        )));
    }
    ftilde_ratio(m, x)
}

/// Enclosure of `F̃_{m,a}(n; x) = (m/(m+x)) sum_k (x/(m+x))^k (m k - a)^n`.
pub fn ftilde_series(
    m: &Rational,
    a: &Rational,
    n: u32,
    x: &Rational,
    eps: &Rational,
    max_terms: usize,
) -> Result<Enclosure> {
    let q = check_convergence(m, x)?;
    PowerGeometricSeries {
        prefactor: m / (m + x),
        ratio: q,
        step: m.clone(),
        offset: a.clone(),
        power: n,
    }
    .sum(eps, max_terms)
}

/// Enclosure of `w_n(x) = (1/(x+1)) sum_k (x/(x+1))^k k^n`.
pub fn geometric_series_value(n: u32, x: &Rational, eps: &Rational) -> Result<Enclosure> {
    ftilde_series(
        &Rational::one(),
        &Rational::zero(),
        n,
        x,
        eps,
        DEFAULT_MAX_TERMS,
    )
}

/// Enclosure of the ordered Bell number `sum_k k^n / 2^{k+1}`.
pub fn ordered_bell_series(n: u32, eps: &Rational) -> Result<Enclosure> {
    PowerGeometricSeries {
        prefactor: ratio(1, 2),
        ratio: ratio(1, 2),
        step: Rational::one(),
        offset: Rational::zero(),
        power: n,
    }
    .sum(eps, DEFAULT_MAX_TERMS)
}
