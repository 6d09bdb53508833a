use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use super::cyclotomic::CycNum;
use super::rational::Q;

/// Exact scalar field used by the dense matrix routines.
pub trait Field:
    Copy
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Self;
    fn from_q(q: Q) -> Self;
    /// Cheap-to-divide pivots are preferred during elimination.
    fn is_simple(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Field for Q {
    fn zero() -> Self {
        Q::ZERO
    }
    fn one() -> Self {
        Q::ONE
    }
    fn is_zero(&self) -> bool {
        Q::is_zero(self)
    }
    fn inv(&self) -> Self {
        Q::inv(self)
    }
    fn from_q(q: Q) -> Self {
        q
    }
    fn is_simple(&self) -> bool {
        true
    }
}

impl Field for CycNum {
    fn zero() -> Self {
        CycNum::ZERO
    }
    fn one() -> Self {
        CycNum::ONE
    }
    fn is_zero(&self) -> bool {
        CycNum::is_zero(self)
    }
    fn inv(&self) -> Self {
        CycNum::inv(self)
    }
    fn from_q(q: Q) -> Self {
        CycNum::from_q(q)
    }
    fn is_simple(&self) -> bool {
        self.is_rational()
    }
}
