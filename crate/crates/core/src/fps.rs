//! Truncated formal power series and the exponential generating functions
//! built from them.
//!
//! Coefficients are stored as ordinary coefficients of `z^k`; [`TruncatedSeries::egf_values`]
//! converts to the `n! * [z^n]` sequence an EGF encodes.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::polynomials::TdVariant;
use crate::scalar::{from_u64, Scalar};

/// Power series known through `z^order`. Always holds `order + 1` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncatedSeries<T> {
    /// Pads with zeros or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        TruncatedSeries { coeffs }
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    /// `e^{c z}`: coefficient `k` is `c^k / k!`.
    pub fn exp_linear(c: &T, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = T::one();
        coeffs.push(term.clone());
        for k in 1..=order {
            term = term * c.clone() / from_u64::<T>(k as u64);
            coeffs.push(term.clone());
        }
        TruncatedSeries { coeffs }
    }

    pub fn scale(&self, factor: &T) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.clone() * factor.clone())
                .collect(),
        }
    }

    /// Multiplicative inverse through the truncation order. Requires a
    /// nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::domain(
                "reciprocal of a series with zero constant term",
            ));
        }
        let inv0 = T::one() / c0.clone();
        let mut out: Vec<T> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = T::zero();
            for k in 1..=n {
                acc = acc + self.coeffs[k].clone() * out[n - k].clone();
            }
            out.push(-acc * inv0.clone());
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `n! * coeffs[n]` for `n = 0..=order`.
    pub fn egf_values(&self) -> Vec<T> {
        let mut fact = T::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact = fact.clone() * from_u64::<T>(n as u64);
                }
                c.clone() * fact.clone()
            })
            .collect()
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(T, T) -> T) -> Self {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|k| f(self.coeffs[k].clone(), rhs.coeffs[k].clone()))
                .collect(),
        }
    }
}

impl<T: Scalar> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<T: Scalar> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

/// Cauchy product truncated at the smaller order.
impl<T: Scalar> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n).fold(T::zero(), |acc, k| {
                    acc + self.coeffs[k].clone() * rhs.coeffs[n - k].clone()
                })
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl<T: Scalar> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn neg(self) -> TruncatedSeries<T> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

// 1 - scale * (e^{step z} - 1)
fn geometric_denominator<T: Scalar>(scale: &T, step: &T, order: usize) -> TruncatedSeries<T> {
    let shifted = &TruncatedSeries::exp_linear(step, order) - &TruncatedSeries::one(order);
    &TruncatedSeries::one(order) - &shifted.scale(scale)
}

fn egf_of_quotient<T: Scalar>(
    numerator: &TruncatedSeries<T>,
    denominator: &TruncatedSeries<T>,
) -> Result<Vec<T>> {
    Ok((numerator * &denominator.reciprocal()?).egf_values())
}

/// EGF values of `1 / (1 - x (e^z - 1))`, the geometric polynomials at `x`.
pub fn geometric_egf<T: Scalar>(x: &T, order: usize) -> Result<Vec<T>> {
    egf_of_quotient(
        &TruncatedSeries::one(order),
        &geometric_denominator(x, &T::one(), order),
    )
}

/// EGF values of `e^{r z} / (1 - x (e^z - 1))`.
pub fn two_variable_geometric_egf<T: Scalar>(r: &T, x: &T, order: usize) -> Result<Vec<T>> {
    egf_of_quotient(
        &TruncatedSeries::exp_linear(r, order),
        &geometric_denominator(x, &T::one(), order),
    )
}

/// EGF values of `e^z / (1 - x (e^{m z} - 1))` (first kind) or
/// `e^z / (1 - (x/m) (e^{m z} - 1))` (second kind).
pub fn tanny_dowling_egf<T: Scalar>(
    variant: TdVariant,
    m: &T,
    x: &T,
    order: usize,
) -> Result<Vec<T>> {
    if m.is_zero() {
        return Err(Error::domain("m must be nonzero"));
    }
    let scale = match variant {
        TdVariant::First => x.clone(),
        TdVariant::Second => x.clone() / m.clone(),
    };
    egf_of_quotient(
        &TruncatedSeries::exp_linear(&T::one(), order),
        &geometric_denominator(&scale, m, order),
    )
}

/// EGF values of `m e^{-a z} / (m - x (e^{m z} - 1))`.
pub fn ftilde_egf<T: Scalar>(m: &T, a: &T, x: &T, order: usize) -> Result<Vec<T>> {
    if m.is_zero() {
        return Err(Error::domain("m must be nonzero"));
    }
    let exp_shift = TruncatedSeries::exp_linear(&-a.clone(), order).scale(m);
    let shifted = &TruncatedSeries::exp_linear(m, order) - &TruncatedSeries::one(order);
    let denominator = &TruncatedSeries::constant(m.clone(), order) - &shifted.scale(x);
    egf_of_quotient(&exp_shift, &denominator)
}
