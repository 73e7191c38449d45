use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Field, Poly, Rat};
use crate::error::{Error, Result};

/// Reduced ratio of polynomials in λ with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

/// Divides out the gcd and makes the denominator monic.
pub fn ratfun_reduce(num: Poly, den: Poly) -> Result<RatFun> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(RatFun::reduced(num, den))
}

impl RatFun {
    fn reduced(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero_fn();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let l = den.lead().unwrap().clone();
        if l.is_one() {
            RatFun { num, den }
        } else {
            let s = l.recip();
            RatFun { num: num.scale(&s), den: den.scale(&s) }
        }
    }

    fn zero_fn() -> Self {
        RatFun { num: Poly::zero(), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The spectral parameter λ.
    pub fn lambda() -> Self {
        Self::from_poly(Poly::lambda())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.den.degree() == Some(0) {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero_fn();
        }
        RatFun { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.inv().expect("pow of zero rational function") } else { self.clone() };
        let mut out = RatFun::one();
        for _ in 0..e.unsigned_abs() {
            out = out * base.clone();
        }
        out
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        if self.num.is_zero() {
            return rhs;
        }
        if rhs.num.is_zero() {
            return self;
        }
        if self.den == rhs.den {
            return RatFun::reduced(&self.num + &rhs.num, self.den);
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFun::reduced(num, &self.den * &rhs.den)
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: RatFun) -> RatFun {
        self + (-rhs)
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFun::zero_fn();
        }
        // inputs are reduced, so only cross cancellation is possible
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let div = |p: &Poly, g: &Poly| if g.degree() == Some(0) { p.clone() } else { p.exact_div(g).unwrap() };
        let num = &div(&self.num, &g1) * &div(&rhs.num, &g2);
        let den = &div(&self.den, &g2) * &div(&rhs.den, &g1);
        let l = den.lead().unwrap().clone();
        if l.is_one() {
            RatFun { num, den }
        } else {
            let s = l.recip();
            RatFun { num: num.scale(&s), den: den.scale(&s) }
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -self.num, den: self.den }
    }
}

impl Zero for RatFun {
    fn zero() -> Self {
        RatFun::zero_fn()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFun {
    fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }
}

impl Field for RatFun {
    fn from_rat(r: &Rat) -> Self {
        RatFun::constant(r.clone())
    }
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFun::reduced(self.den.clone(), self.num.clone()))
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

/// Multiplies `f` by the product of `(linear factor)^multiplicity` and
/// returns the coefficients of the resulting polynomial.
pub fn clear_known_denominator(f: &RatFun, factors: &[(Poly, u32)]) -> Result<Vec<Rat>> {
    let mut prod = Poly::one();
    for (p, m) in factors {
        prod = &prod * &p.pow(*m);
    }
    let cofactor = prod.exact_div(&f.den).ok_or(Error::DenominatorMismatch)?;
    let out = &f.num * &cofactor;
    if out.is_zero() {
        return Ok(vec![Rat::zero()]);
    }
    Ok(out.coeffs().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn reduce_examples() {
        let r = ratfun_reduce(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!((r.num(), r.den()), (&p(&[1, 1]), &Poly::one()));
        let r = ratfun_reduce(Poly::zero(), Poly::lambda()).unwrap();
        assert_eq!((r.num(), r.den()), (&Poly::zero(), &Poly::one()));
        let r = ratfun_reduce(p(&[2, 2]), p(&[4])).unwrap();
        assert_eq!(r.num(), &Poly::new(vec![rat(1, 2), rat(1, 2)]));
        assert_eq!(r.den(), &Poly::one());
        assert_eq!(ratfun_reduce(Poly::one(), Poly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn arithmetic_cancels() {
        let l = RatFun::lambda();
        let a = RatFun::one().checked_div(&(l.clone() - RatFun::from_int(1))).unwrap();
        let b = RatFun::one().checked_div(&(l.clone() + RatFun::from_int(1))).unwrap();
        // 1/(λ−1) − 1/(λ+1) = 2/(λ²−1)
        let d = a.clone() - b;
        assert_eq!(d.num(), &p(&[2]));
        assert_eq!(d.den(), &p(&[-1, 0, 1]));
        assert_eq!(a.clone() * (l - RatFun::from_int(1)), RatFun::one());
        assert_eq!(a.clone() - a, RatFun::zero());
    }

    #[test]
    fn clear_denominator_examples() {
        let l3 = Poly::linear(&int(3));
        let f = RatFun::from_int(4).checked_div(&RatFun::from_poly(l3.clone())).unwrap();
        assert_eq!(clear_known_denominator(&f, &[(l3.clone(), 1)]).unwrap(), vec![int(4)]);
        assert_eq!(clear_known_denominator(&RatFun::zero(), &[(l3.clone(), 2)]).unwrap(), vec![int(0)]);
        let l1 = Poly::linear(&int(1));
        let f = ratfun_reduce(p(&[1, 1]), l1.pow(2)).unwrap();
        assert_eq!(clear_known_denominator(&f, &[(l1.clone(), 2)]).unwrap(), vec![int(1), int(1)]);
        assert_eq!(clear_known_denominator(&f, &[(l1, 1)]), Err(Error::DenominatorMismatch));
    }
}
