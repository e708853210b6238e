//! Scalar abstraction for the numeric core.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar the numeric core is generic over.
///
/// Implemented by `f32` and `f64` through the blanket impl; the training
/// pipeline instantiates everything at `f64`.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Sum<Self> + Debug + Display + Default + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Float
        + FromPrimitive
        + ToPrimitive
        + Sum<T>
        + Debug
        + Display
        + Default
        + Send
        + Sync
        + 'static
{
}

/// Converts an `f64` literal into the working scalar type.
#[inline]
pub fn cast<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("literal representable in scalar type")
}
