//! The floating scalar abstraction.
//!
//! All numerical modules are generic over a [`Real`] scalar so that the same
//! code runs in `f64` (the intended production precision) and `f32`. The
//! trait is a thin bundle of `num-traits` capabilities plus the thread-safety
//! bounds required by the FFT backend; it carries two small conveniences:
//! [`Real::lit`] for converting `f64` literals (tolerances, quadrature
//! constants) into the working precision and [`Real::to_f64_lossy`] for
//! diagnostics that are reported in `f64` regardless of the working type.

use std::fmt::Debug;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssignOps, Signed, ToPrimitive};

/// Floating-point scalar usable throughout the solver.
///
/// Implemented for `f32` and `f64` through the blanket impl; any type
/// providing the same `num-traits` surface (and `Send + Sync + 'static`)
/// participates automatically. Matrix factorizations and eigensolves
/// additionally require `nalgebra::RealField`, so the entry points in
/// [`crate::tension`] and [`crate::spectra`] that factorize operators carry
/// that extra bound.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Signed
    + NumAssignOps
    + Debug
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal into this precision.
    ///
    /// Intended for compile-time constants (tolerances, kernel prefactors),
    /// which are always representable; panics only if the conversion is
    /// genuinely impossible for the target type.
    fn lit(value: f64) -> Self {
        Self::from_f64(value).expect("f64 literal not representable in scalar type")
    }

    /// 2π in this precision.
    fn two_pi() -> Self {
        Self::PI() + Self::PI()
    }

    /// Best-effort conversion to `f64` for error messages and reports.
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Real for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + ToPrimitive
        + Signed
        + NumAssignOps
        + Debug
        + Send
        + Sync
        + 'static
{
}
