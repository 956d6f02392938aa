use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, NumAssign};

/// Floating-point scalar the spectral kernels run on: `f32` or `f64`.
pub trait Scalar:
    Float + FromPrimitive + NumAssign + Debug + Display + Send + Sync + 'static
{
    /// Convergence floor for iterative kernels. Never below machine epsilon.
    fn convergence_floor() -> Self;

    fn from_usize_lossy(v: usize) -> Self {
        Self::from_usize(v).expect("usize is representable as a float")
    }

    fn from_f64_lossy(v: f64) -> Self {
        Self::from_f64(v).expect("f64 is representable")
    }
}

impl Scalar for f32 {
    fn convergence_floor() -> Self {
        4.0 * f32::EPSILON
    }
}

impl Scalar for f64 {
    fn convergence_floor() -> Self {
        1e-14
    }
}
