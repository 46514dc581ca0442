//! Scalar abstraction for the floating-point kernels.
//!
//! Everything numeric in this crate is written against [`Real`] so the same
//! code instantiates at `f32` or `f64`. Accuracy statements in the docs are
//! quoted for `f64`; narrower types degrade with their epsilon.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;
use std::ops::AddAssign;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + Sum
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// Lossless-enough conversion from `f64` literals and tunables.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 constant not representable")
    }

    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("usize not representable")
    }

    fn of_i64(n: i64) -> Self {
        Self::from_i64(n).expect("i64 not representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}
