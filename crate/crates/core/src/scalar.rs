//! Coefficient traits.
//!
//! Polynomial arithmetic only needs a commutative ring; the f-symmetry
//! checks additionally need exact division and gcd, which is what
//! [`IntegerCoefficient`] adds. Machine integers satisfy both bounds but may
//! overflow; [`crate::Integer`] never does.

use std::fmt::{Debug, Display};

use num_integer::{Integer, Roots};
use num_traits::{NumAssign, One, Signed, Zero};

/// A commutative ring element usable as a polynomial coefficient.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Neg<Output = Self>
    + for<'a> std::ops::AddAssign<&'a Self>
    + for<'a> std::ops::SubAssign<&'a Self>
    + Send
    + Sync
{
}

impl<T> Coefficient for T where
    T: Clone
        + Debug
        + Display
        + PartialEq
        + Zero
        + One
        + std::ops::Add<Output = T>
        + std::ops::Sub<Output = T>
        + std::ops::Mul<Output = T>
        + std::ops::Neg<Output = T>
        + for<'a> std::ops::AddAssign<&'a T>
        + for<'a> std::ops::SubAssign<&'a T>
        + Send
        + Sync
{
}

/// An exact signed integer type; `num_rational::Ratio<T>` is its field of
/// fractions.
pub trait IntegerCoefficient: Coefficient + Integer + Roots + Signed + NumAssign + Ord {}

impl<T> IntegerCoefficient for T where T: Coefficient + Integer + Roots + Signed + NumAssign + Ord {}
