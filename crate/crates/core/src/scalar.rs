use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// Field element usable as a polynomial or power-series coefficient.
///
/// Exact results need [`crate::Rational`]; `f64` and `Ratio<i64>` also
/// satisfy the bound, which is handy for quick numerical experiments.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive {}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive {}

/// `value^exp` by repeated squaring, with `0^0 = 1`.
pub fn powu<T: Scalar>(value: &T, exp: u32) -> T {
    let mut base = value.clone();
    let mut exp = exp;
    let mut acc = T::one();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base.clone();
        }
        exp >>= 1;
        if exp > 0 {
            base = base.clone() * base;
        }
    }
    acc
}

/// Small unsigned integer embedded into the scalar field.
pub fn from_u64<T: Scalar>(n: u64) -> T {
    T::from_u64(n).expect("scalar type cannot represent a small integer")
}
