//! Scalar abstraction and length-unit bookkeeping.
//!
//! Every numeric routine in the crate is generic over [`Real`], which is
//! implemented for `f32` and `f64`. Complex amplitudes are
//! `num_complex::Complex<T>`.

use std::fmt;
use std::ops::{Add, Mul, Neg};

use nalgebra::RealField;
use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{FloatConst, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Real scalar type the library is generic over.
pub trait Real:
    RealField + Copy + FloatConst + ToPrimitive + Default + Send + Sync + 'static
{
    /// Lossy conversion from an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }
}

impl<T> Real for T where
    T: RealField + Copy + FloatConst + ToPrimitive + Default + Send + Sync + 'static
{
}

/// Complex number over `T`.
pub type Cx<T> = Complex<T>;

#[inline]
pub fn cx<T: Real>(re: f64, im: f64) -> Cx<T> {
    Complex::new(T::lit(re), T::lit(im))
}

#[inline]
pub fn cr<T: Real>(re: T) -> Cx<T> {
    Complex::new(re, T::zero())
}

/// Modulus `|z|`.
#[inline]
pub fn cabs<T: Real>(z: Cx<T>) -> T {
    z.norm_sqr().sqrt()
}

#[inline]
pub fn sqrt2<T: Real>() -> T {
    T::SQRT_2()
}

#[inline]
pub fn frac_1_sqrt2<T: Real>() -> T {
    T::FRAC_1_SQRT_2()
}

/// Rational exponent `r` of the length-unit semispace, tagging a value as an
/// element of `L^r ⊗ V`. Numerical scale is fixed to one (natural units).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Scale(pub Ratio<i32>);

impl Scale {
    pub const ZERO: Scale = Scale(Ratio::new_raw(0, 1));

    pub fn new(numer: i32, denom: i32) -> Self {
        Scale(Ratio::new(numer, denom))
    }

    pub fn integer(n: i32) -> Self {
        Scale(Ratio::from_integer(n))
    }

    /// Unit tag of a Dirac field, `L^{-3/2}`.
    pub fn dirac_field() -> Self {
        Scale::new(-3, 2)
    }

    pub fn ensure_eq(self, other: Scale) -> Result<Scale> {
        if self == other {
            Ok(self)
        } else {
            Err(Error::ScaleMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl Default for Scale {
    fn default() -> Self {
        Scale::ZERO
    }
}

impl Add for Scale {
    type Output = Scale;
    fn add(self, rhs: Scale) -> Scale {
        Scale(self.0 + rhs.0)
    }
}

impl Neg for Scale {
    type Output = Scale;
    fn neg(self) -> Scale {
        Scale(-self.0)
    }
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L^{}", self.0)
    }
}

impl fmt::Debug for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A complex value tagged with its length-unit exponent.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaledValue<T: Real> {
    pub value: Cx<T>,
    pub scale: Scale,
}

impl<T: Real> ScaledValue<T> {
    pub fn new(value: Cx<T>, scale: Scale) -> Self {
        Self { value, scale }
    }

    pub fn unscaled(value: Cx<T>) -> Self {
        Self::new(value, Scale::ZERO)
    }

    /// Sum of two values; only defined for equal exponents.
    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        let scale = self.scale.ensure_eq(rhs.scale)?;
        Ok(Self::new(self.value + rhs.value, scale))
    }
}

impl<T: Real> Mul for ScaledValue<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(self.value * rhs.value, self.scale + rhs.scale)
    }
}
