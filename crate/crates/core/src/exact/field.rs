use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rat;

/// The arithmetic every evaluator in the crate is written against.
///
/// Implemented by plain rationals, rational functions in λ (symbolic
/// spectral parameter) and dual rationals (Jacobians).
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_rat(r: &Rat) -> Self;
    /// `None` when the element is not invertible.
    fn inv(&self) -> Option<Self>;

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }

    fn from_int(n: i64) -> Self {
        Self::from_rat(&super::int(n))
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

impl Field for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}
