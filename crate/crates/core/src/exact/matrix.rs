use super::Field;

/// 2×2 matrix over any [`Field`], row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat2<F> {
    pub m: [[F; 2]; 2],
}

impl<F: Field> Mat2<F> {
    pub fn new(a: F, b: F, c: F, d: F) -> Self {
        Mat2 { m: [[a, b], [c, d]] }
    }

    pub fn identity() -> Self {
        Self::new(F::one(), F::zero(), F::zero(), F::one())
    }

    pub fn zero() -> Self {
        Self::new(F::zero(), F::zero(), F::zero(), F::zero())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| self.m[i][0].clone() * o.m[0][j].clone() + self.m[i][1].clone() * o.m[1][j].clone();
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn scale(&self, s: &F) -> Self {
        self.map(|x| s.clone() * x.clone())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Mat2<G> {
        Mat2::new(f(&self.m[0][0]), f(&self.m[0][1]), f(&self.m[1][0]), f(&self.m[1][1]))
    }

    pub fn trace(&self) -> F {
        self.m[0][0].clone() + self.m[1][1].clone()
    }

    pub fn det(&self) -> F {
        self.m[0][0].clone() * self.m[1][1].clone() - self.m[0][1].clone() * self.m[1][0].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.entries().all(|x| x.is_zero())
    }

    pub fn entries(&self) -> impl Iterator<Item = &F> {
        self.m.iter().flatten()
    }

    /// Möbius action `(a y + b)/(c y + d)`; `None` at the pole.
    pub fn mobius(&self, y: &F) -> Option<F> {
        let num = self.m[0][0].clone() * y.clone() + self.m[0][1].clone();
        let den = self.m[1][0].clone() * y.clone() + self.m[1][1].clone();
        num.checked_div(&den)
    }
}
