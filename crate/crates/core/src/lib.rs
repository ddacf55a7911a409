//! Exact computation of global Euler obstructions, polar multiplicities,
//! Milnor numbers and Euler characteristics of affine varieties, together
//! with checkers for the stratified formulas relating them.
//!
//! The algebra (`poly`, `ideal`) is generic over an exact [`Field`]; the
//! geometric layers work over [`Rational`].

pub mod error;
pub mod euler;
pub mod field;
pub mod geometry;
pub mod ideal;
pub mod oracle;
pub mod polar;
pub mod poly;
pub mod seed;
pub mod strat;

pub use error::{Error, Result};
pub use field::Field;
pub use ideal::{Ideal, KrullDimension, PointCount};
pub use poly::{parse_polynomial, vars, Monomial, MonomialOrder, Polynomial, UniPoly, Vars};

/// Arbitrary-precision rationals, the ground field of every computation.
pub type Rational = num_rational::BigRational;
pub type Poly = Polynomial<Rational>;
pub type Point = Vec<Rational>;

/// Knobs shared by all engine computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Independent seeded trials that must agree before a generic count is accepted.
    pub trials: usize,
    /// Random coefficients are drawn from `[-coeff_bound, coeff_bound] \ {0}`.
    pub coeff_bound: u32,
    /// Largest truncation order tried when stabilising a Milnor number.
    pub milnor_cap: u32,
    pub spair_limit: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { trials: 3, coeff_bound: 997, milnor_cap: 64, spair_limit: ideal::DEFAULT_SPAIR_LIMIT }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::InvalidArgument("trials must be at least 1".into()));
        }
        if self.coeff_bound < 2 {
            return Err(Error::InvalidArgument("coefficient bound must be at least 2".into()));
        }
        if self.milnor_cap < 2 {
            return Err(Error::InvalidArgument("milnor cap must be at least 2".into()));
        }
        Ok(())
    }
}

pub(crate) fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
