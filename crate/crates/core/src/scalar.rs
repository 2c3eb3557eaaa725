//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point types the quadrature, oracle and bound routines run on.
///
/// Implemented for `f32` and `f64`; anything satisfying the bounds gets it
/// for free.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Sum + Send + Sync + 'static
{
    /// Converts an `f64` literal into the working precision.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    /// Converts a count into the working precision.
    fn count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }

    /// Lossy view used for error messages.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Scalar for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + ToPrimitive
        + Debug
        + Display
        + Sum
        + Send
        + Sync
        + 'static
{
}

/// The positive Gauss-Legendre abscissa `sqrt(3)/3`, computed in working precision.
pub fn gauss_node<T: Scalar>() -> T {
    T::lit(3.0).sqrt() / T::lit(3.0)
}
