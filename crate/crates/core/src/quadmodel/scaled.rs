use std::fmt;

use num_traits::One;

use crate::exact::{Field, Mat2, RadicalMonomial, RatFun};

/// `radical · scalar · core` with a RatFun core and a formal radical prefactor.
#[derive(Clone, PartialEq)]
pub struct ScaledMatrix {
    pub core: Mat2<RatFun>,
    pub scalar: RatFun,
    pub radical: RadicalMonomial,
}

impl ScaledMatrix {
    pub fn new(core: Mat2<RatFun>, scalar: RatFun, radical: RadicalMonomial) -> Self {
        ScaledMatrix { core, scalar, radical }
    }

    pub fn identity() -> Self {
        Self::new(Mat2::identity(), RatFun::one(), RadicalMonomial::one())
    }

    pub fn mul(&self, o: &Self) -> Self {
        ScaledMatrix {
            core: self.core.mul(&o.core),
            scalar: self.scalar.clone() * o.scalar.clone(),
            radical: self.radical.mul(&o.radical),
        }
    }

    pub fn scale(&self, s: &RatFun) -> Self {
        ScaledMatrix { scalar: self.scalar.clone() * s.clone(), ..self.clone() }
    }

    /// Canonical split into a reduced radical (all exponents 1/2) and the
    /// full rational matrix.
    pub fn normalized(&self) -> (RadicalMonomial, Mat2<RatFun>) {
        let (factor, rest) = self.radical.reduce();
        (rest, self.core.scale(&(self.scalar.clone() * factor)))
    }

    /// Exact equality as matrices over the formal radical extension.
    pub fn equals(&self, o: &Self) -> bool {
        let (ra, ma) = self.normalized();
        let (rb, mb) = o.normalized();
        if ma.is_zero() && mb.is_zero() {
            return true;
        }
        ra == rb && ma == mb
    }

    /// Trace as (reduced radical, RatFun).
    pub fn trace(&self) -> (RadicalMonomial, RatFun) {
        let (factor, rest) = self.radical.reduce();
        (rest, self.scalar.clone() * factor * self.core.trace())
    }

    /// Determinant as (reduced radical, RatFun): `scalar² · radical² · det(core)`.
    pub fn det(&self) -> (RadicalMonomial, RatFun) {
        let sq = self.radical.mul(&self.radical);
        let (factor, rest) = sq.reduce();
        (rest, self.scalar.square() * factor * self.core.det())
    }
}

impl fmt::Debug for ScaledMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.core.m;
        write!(
            f,
            "[{}] · ({}) · [[{}, {}], [{}, {}]]",
            self.radical, self.scalar, m[0][0], m[0][1], m[1][0], m[1][1]
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::exact::{int, Poly};

    #[test]
    fn equality_absorbs_even_radicals() {
        let s = RatFun::from_poly(Poly::linear(&int(3)));
        let a = ScaledMatrix::new(Mat2::identity(), RatFun::one(), RadicalMonomial::power_of(s.clone(), 2));
        let b = ScaledMatrix::new(Mat2::identity(), s, RadicalMonomial::one());
        assert!(a.equals(&b));
        assert!(!a.equals(&ScaledMatrix::identity()));
    }

    #[test]
    fn determinant_squares_the_prefactor() {
        let s = RatFun::from_poly(Poly::linear(&int(3)));
        let m = ScaledMatrix::new(Mat2::identity(), RatFun::from_int(2), RadicalMonomial::inv_sqrt(s.clone()));
        let (rad, d) = m.det();
        assert!(rad.is_one());
        assert_eq!(d, RatFun::from_int(4) * s.inv().unwrap());
    }

    #[test]
    fn trace_of_zero_is_zero() {
        let z = ScaledMatrix::new(Mat2::zero(), RatFun::one(), RadicalMonomial::one());
        assert_eq!(z.trace().1, RatFun::zero());
    }
}
