use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use rug::Rational;

use super::{Field, Rat};

/// GMP-backed rational for long exact orbits where num-bigint is too slow.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct GmpRat(pub Rational);

impl GmpRat {
    pub fn to_rat(&self) -> Rat {
        let n: num_bigint::BigInt = self.0.numer().to_string().parse().unwrap();
        let d: num_bigint::BigInt = self.0.denom().to_string().parse().unwrap();
        Rat::new(n, d)
    }

    /// Bit length of the larger of numerator and denominator.
    pub fn height_bits(&self) -> u32 {
        self.0.numer().significant_bits().max(self.0.denom().significant_bits())
    }
}

impl Add for GmpRat {
    type Output = GmpRat;
    fn add(self, o: GmpRat) -> GmpRat {
        GmpRat(self.0 + o.0)
    }
}

impl Sub for GmpRat {
    type Output = GmpRat;
    fn sub(self, o: GmpRat) -> GmpRat {
        GmpRat(self.0 - o.0)
    }
}

impl Mul for GmpRat {
    type Output = GmpRat;
    fn mul(self, o: GmpRat) -> GmpRat {
        GmpRat(self.0 * o.0)
    }
}

impl Neg for GmpRat {
    type Output = GmpRat;
    fn neg(self) -> GmpRat {
        GmpRat(-self.0)
    }
}

impl Zero for GmpRat {
    fn zero() -> Self {
        GmpRat(Rational::new())
    }
    fn is_zero(&self) -> bool {
        self.0.cmp0().is_eq()
    }
}

impl One for GmpRat {
    fn one() -> Self {
        GmpRat(Rational::from(1))
    }
}

impl Field for GmpRat {
    fn from_rat(r: &Rat) -> Self {
        let n: rug::Integer = r.numer().to_string().parse().unwrap();
        let d: rug::Integer = r.denom().to_string().parse().unwrap();
        GmpRat(Rational::from((n, d)))
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(GmpRat(self.0.clone().recip()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn round_trip_and_arithmetic() {
        let a = GmpRat::from_rat(&rat(-7, 12));
        let b = GmpRat::from_rat(&rat(5, 3));
        assert_eq!((a.clone() * b.clone() + a.clone()).to_rat(), rat(-7, 12) * rat(5, 3) + rat(-7, 12));
        assert_eq!(a.inv().unwrap().to_rat(), rat(-12, 7));
        assert!(GmpRat::zero().inv().is_none());
        assert_eq!(b.height_bits(), 3);
    }
}
