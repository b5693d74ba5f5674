//! Scalar bounds shared by the generic ring and numeric code.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{Float, FloatConst, FromPrimitive, Signed, ToPrimitive};

/// Signed integer scalar: `i32`, `i64`, `i128` or `BigInt`.
pub trait IntScalar:
    Clone + Debug + Display + Ord + Integer + Signed + FromPrimitive + ToPrimitive
{
}

impl<T> IntScalar for T where
    T: Clone + Debug + Display + Ord + Integer + Signed + FromPrimitive + ToPrimitive
{
}

/// Floating point scalar for character sums: `f32` or `f64`.
pub trait RealScalar: Float + FloatConst + FromPrimitive + Debug {}

impl<T> RealScalar for T where T: Float + FloatConst + FromPrimitive + Debug {}

/// Converts a small integer literal into any [`IntScalar`].
#[inline]
pub(crate) fn int<T: IntScalar>(v: i64) -> T {
    T::from_i64(v).expect("integer literal fits every scalar")
}

/// Converts a small integer into any [`RealScalar`].
#[inline]
pub(crate) fn real<F: RealScalar>(v: f64) -> F {
    F::from_f64(v).expect("finite literal")
}
