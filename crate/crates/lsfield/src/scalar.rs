//! Scalar abstraction for the grid math.
//!
//! Everything numeric in this crate is generic over [`Scalar`], which bundles
//! the floating-point traits the transforms and solvers need. `f32` and `f64`
//! satisfy the bound; parameters that live outside the grid (tolerances, seed
//! derivation, file headers) stay in `f64`.

use std::fmt::{Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, ToPrimitive};
use rustfft::FftNum;

pub trait Scalar:
    FftNum + Float + FloatConst + ToPrimitive + Sum + Display + LowerExp + Default
{
}

impl<T> Scalar for T where
    T: FftNum + Float + FloatConst + ToPrimitive + Sum + Display + LowerExp + Default
{
}

/// Convert an `f64` into the working scalar type (correctly rounded for `f32`).
#[inline]
pub fn cast<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("f64 must convert into the scalar type")
}

/// Convert a working scalar into `f64` (exact for `f32` and `f64`).
#[inline]
pub fn to_f64<T: Scalar>(x: T) -> f64 {
    x.to_f64().expect("scalar must convert into f64")
}
