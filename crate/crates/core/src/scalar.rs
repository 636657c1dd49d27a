//! Scalar abstraction shared by every model type.
//!
//! All numeric code in this crate is generic over a floating-point type `T:
//! Scalar` instead of hard-coding `f64`. The default precision for everyday
//! use is `f64` (the crate root exports aliases for it); `f32` is available
//! for memory-bound sweeps or embedding in single-precision pipelines.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the models compute over.
///
/// [`Float`] supplies arithmetic, comparisons, and the transcendentals
/// (`log2`, `log10`, `powf`); [`FromPrimitive`] supplies checked conversions
/// from counts and `f64` constants.
pub trait Scalar: Float + FromPrimitive + Debug + Display {}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Converts an `f64` constant into `T`, rounding if `T` is narrower.
///
/// Panics only if `T` cannot represent anything near the input, which cannot
/// happen for the finite constants used in this crate.
pub(crate) fn lit<T: Scalar>(value: f64) -> T {
    T::from_f64(value).expect("finite f64 constant must convert into the scalar type")
}

/// 2^exp as a scalar. IEEE powers of two are exact until the exponent range
/// of `T` runs out, where this saturates to infinity — the right operand for
/// the magnitude comparisons that use it.
pub(crate) fn pow2<T: Scalar>(exp: i32) -> T {
    lit::<T>(2.0).powi(exp)
}

/// dB value to linear power ratio: 10^(db/10).
pub fn db_to_linear<T: Scalar>(db: T) -> T {
    lit::<T>(10.0).powf(db / lit(10.0))
}

/// Linear power ratio to dB: 10·log10(linear).
pub fn linear_to_db<T: Scalar>(linear: T) -> T {
    lit::<T>(10.0) * linear.log10()
}
