//! Scalar abstraction shared by the floating-point parts of the crate.
//!
//! Everything numeric (polynomial coefficients, interval bounds, solver
//! tolerances) is generic over [`Scalar`], which is implemented for `f32` and
//! `f64`. Exact arithmetic lives separately in the Sturm module, which works over
//! any ordered field and is normally instantiated with `BigRational`.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point type usable as a coefficient and interval bound.
pub trait Scalar:
    Float
    + FloatConst
    + NumAssign
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// Smallest representable value strictly greater than `self`.
    fn next_up(self) -> Self;
    /// Largest representable value strictly smaller than `self`.
    fn next_down(self) -> Self;

    /// Lossy conversion from an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn next_up(self) -> Self {
        f64::next_up(self)
    }
    fn next_down(self) -> Self {
        f64::next_down(self)
    }
}

impl Scalar for f32 {
    fn next_up(self) -> Self {
        f32::next_up(self)
    }
    fn next_down(self) -> Self {
        f32::next_down(self)
    }
}

/// Exact conversion of a small non-negative integer into the scalar type.
pub(crate) fn from_usize<T: Scalar>(k: usize) -> T {
    T::from_usize(k).expect("integer representable")
}
