//! Coefficient fields.
//!
//! Everything up to and including the Gröbner engine is written against
//! [`Field`]; the geometric layers fix the field to [`crate::Rational`].

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// An exact field of characteristic zero.
pub trait Field: Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + Send + Sync + 'static {
    fn from_i64(n: i64) -> Self;

    /// True when the element is an integer (denominator one).
    fn is_integral(&self) -> bool;

    fn is_negative(&self) -> bool;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl<T> Field for Ratio<T>
where
    T: Clone + Integer + Signed + FromPrimitive + Debug + Display + Send + Sync + 'static,
{
    fn from_i64(n: i64) -> Self {
        Ratio::from_integer(T::from_i64(n).expect("integer out of range for coefficient type"))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}
