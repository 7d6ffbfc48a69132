//! Scalar abstraction: every numerical routine in this crate is generic over
//! [`Real`], so the whole stack can run in `f64` (the default, and the only
//! width that meets the documented tolerances) or `f32` for quick scans.

use core::fmt::{Debug, Display};
use num_traits::{Float, FloatConst};

/// Floating-point scalar with the constants and formatting hooks the crate needs.
///
/// Implemented for `f32` and `f64` via the blanket impl; all tolerances quoted in
/// the API docs assume `f64`.
pub trait Real: Float + FloatConst + Debug + Display + 'static {
    /// Lifts an `f64` constant into `Self` (lossy for narrower types).
    #[inline]
    fn c(v: f64) -> Self {
        Self::from(v).expect("finite f64 constant must convert")
    }

    /// `self` as `f64` (for error messages and reports).
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Real for T where T: Float + FloatConst + Debug + Display + 'static {}
