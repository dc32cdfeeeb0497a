//! Scalar abstraction shared by every geometric routine in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating point type the octahedron geometry can be evaluated in.
///
/// Tolerances live on the scalar because they only make sense relative to
/// the precision of the type: `EPS_IN` decides triangle membership and edge
/// snapping, `TIE_EPS` decides when two candidate trail lengths are equal.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// √3 rounded once to the precision of the type.
    const SQRT_3: Self;
    /// Membership / snapping tolerance, in edge-length units.
    const EPS_IN: Self;
    /// Two trail lengths closer than this are reported as a tie.
    const TIE_EPS: Self;

    /// Converts an `f64` literal; never fails for the implemented types.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn two() -> Self {
        Self::lit(2.0)
    }

    /// Height of the unit equilateral triangle, √3/2.
    #[inline]
    fn tri_height() -> Self {
        Self::SQRT_3 * Self::half()
    }
}

impl Scalar for f64 {
    const SQRT_3: f64 = 1.732_050_807_568_877_2;
    const EPS_IN: f64 = 1e-9;
    const TIE_EPS: f64 = 1e-12;
}

impl Scalar for f32 {
    const SQRT_3: f32 = 1.732_050_8;
    const EPS_IN: f32 = 1e-5;
    const TIE_EPS: f32 = 1e-6;
}
