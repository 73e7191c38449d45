use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Field, Rat};
use crate::error::{Error, Result};

/// First-order dual number `value + Σ partialsᵢ εᵢ` with εᵢεⱼ = 0.
///
/// Partial vectors of different lengths are padded with zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct DualRat {
    pub value: Rat,
    pub partials: Vec<Rat>,
}

impl DualRat {
    pub fn constant(value: Rat) -> Self {
        DualRat { value, partials: Vec::new() }
    }

    /// The `index`-th of `n` independent variables.
    pub fn variable(value: Rat, index: usize, n: usize) -> Self {
        let mut partials = vec![Rat::zero(); n];
        partials[index] = Rat::one();
        DualRat { value, partials }
    }

    pub fn partial(&self, i: usize) -> Rat {
        self.partials.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    fn zip(&self, o: &Self, f: impl Fn(Rat, Rat) -> Rat) -> Vec<Rat> {
        let n = self.partials.len().max(o.partials.len());
        (0..n).map(|i| f(self.partial(i), o.partial(i))).collect()
    }

    fn scaled(&self, s: &Rat) -> Vec<Rat> {
        self.partials.iter().map(|p| p * s).collect()
    }
}

impl Add for DualRat {
    type Output = DualRat;
    fn add(self, o: DualRat) -> DualRat {
        DualRat { partials: self.zip(&o, |a, b| a + b), value: self.value + o.value }
    }
}

impl Sub for DualRat {
    type Output = DualRat;
    fn sub(self, o: DualRat) -> DualRat {
        DualRat { partials: self.zip(&o, |a, b| a - b), value: self.value - o.value }
    }
}

impl Mul for DualRat {
    type Output = DualRat;
    fn mul(self, o: DualRat) -> DualRat {
        let (a, b) = (&self.value, &o.value);
        let partials = self.zip(&o, |da, db| a * db + da * b);
        DualRat { value: a * b, partials }
    }
}

impl Neg for DualRat {
    type Output = DualRat;
    fn neg(self) -> DualRat {
        DualRat { value: -self.value, partials: self.partials.into_iter().map(|p| -p).collect() }
    }
}

impl Zero for DualRat {
    fn zero() -> Self {
        DualRat::constant(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.partials.iter().all(Zero::is_zero)
    }
}

impl One for DualRat {
    fn one() -> Self {
        DualRat::constant(Rat::one())
    }
}

impl Field for DualRat {
    fn from_rat(r: &Rat) -> Self {
        DualRat::constant(r.clone())
    }
    /// Invertible iff the value part is nonzero.
    fn inv(&self) -> Option<Self> {
        if self.value.is_zero() {
            return None;
        }
        let r = self.value.recip();
        let s = -(&r * &r);
        Some(DualRat { partials: self.scaled(&s), value: r })
    }
}

/// Exact Jacobian of `g` at `point`, rows indexed by outputs.
pub fn dual_jacobian<G>(g: G, point: &[Rat]) -> Result<Vec<Vec<Rat>>>
where
    G: Fn(&[DualRat]) -> Result<Vec<DualRat>>,
{
    let n = point.len();
    let vars: Vec<DualRat> = point.iter().enumerate().map(|(i, v)| DualRat::variable(v.clone(), i, n)).collect();
    let out = g(&vars).map_err(|_| Error::SingularPoint)?;
    Ok(out.iter().map(|d| (0..n).map(|i| d.partial(i)).collect()).collect())
}

/// Rank of a rational matrix by exact Gaussian elimination.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let cols = m.iter().map(Vec::len).max().unwrap_or(0);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i].get(c).is_some_and(|x| !x.is_zero())) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && m[i].get(c).is_some_and(|x| !x.is_zero()) {
                let f = &m[i][c] / &pivot;
                for j in c..cols {
                    let v = &m[r][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn jacobian_examples() {
        let j = dual_jacobian(|x| Ok(vec![x[0].clone() * x[0].clone()]), &[int(3)]).unwrap();
        assert_eq!(j, vec![vec![int(6)]]);
        let j = dual_jacobian(
            |x| Ok(vec![x[0].clone() * x[1].clone(), x[0].clone() + x[1].clone()]),
            &[int(2), int(5)],
        )
        .unwrap();
        assert_eq!(j, vec![vec![int(5), int(2)], vec![int(1), int(1)]]);
    }

    #[test]
    fn singular_point_is_reported() {
        let r = dual_jacobian(|x| x[0].inv().map(|v| vec![v]).ok_or(Error::ZeroDenominator), &[int(0)]);
        assert_eq!(r, Err(Error::SingularPoint));
    }

    #[test]
    fn quotient_rule() {
        // d/dx (1/x) = −1/x²
        let x = DualRat::variable(int(2), 0, 1);
        assert_eq!(x.inv().unwrap().partial(0), Rat::new((-1).into(), 4.into()));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[vec![int(1), int(2)], vec![int(2), int(4)]]), 1);
        assert_eq!(rank(&[vec![int(0), int(1)], vec![int(1), int(0)]]), 2);
        assert_eq!(rank(&[vec![int(0), int(0)]]), 0);
        assert_eq!(rank(&[]), 0);
    }
}
