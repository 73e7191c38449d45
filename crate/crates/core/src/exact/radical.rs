use std::fmt;

use num_traits::{One, Zero};

use super::RatFun;

/// Product of square roots of rational functions, `∏ √(rᵢ)^{tᵢ}` with
/// integer twice-exponents `tᵢ`.
///
/// A symbol is identified by its exact radicand, so √(λ−μ) and √(μ−λ) are
/// different symbols. No branch is ever chosen.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RadicalMonomial {
    // sorted by the display form of the radicand, no zero exponents
    factors: Vec<(RatFun, i32)>,
}

impl RadicalMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// `√r` raised to the half-integer power `twice/2`.
    pub fn power_of(radicand: RatFun, twice: i32) -> Self {
        assert!(!radicand.is_zero(), "radical of zero");
        Self::one().with(radicand, twice)
    }

    pub fn sqrt(radicand: RatFun) -> Self {
        Self::power_of(radicand, 1)
    }

    pub fn inv_sqrt(radicand: RatFun) -> Self {
        Self::power_of(radicand, -1)
    }

    fn with(mut self, radicand: RatFun, twice: i32) -> Self {
        if twice == 0 {
            return self;
        }
        match self.factors.iter().position(|(r, _)| *r == radicand) {
            Some(i) => {
                self.factors[i].1 += twice;
                if self.factors[i].1 == 0 {
                    self.factors.remove(i);
                }
            }
            None => {
                self.factors.push((radicand, twice));
                self.factors.sort_by_cached_key(|(r, _)| r.to_string());
            }
        }
        self
    }

    pub fn factors(&self) -> &[(RatFun, i32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        other.factors.iter().fold(self.clone(), |acc, (r, t)| acc.with(r.clone(), *t))
    }

    pub fn inv(&self) -> Self {
        RadicalMonomial { factors: self.factors.iter().map(|(r, t)| (r.clone(), -t)).collect() }
    }

    /// Splits into a rational-function factor and a monomial whose
    /// twice-exponents are all 1, using `(√r)² = r`.
    pub fn reduce(&self) -> (RatFun, RadicalMonomial) {
        let mut rational = RatFun::one();
        let mut rest = Vec::new();
        for (r, t) in &self.factors {
            let (q, m) = (t.div_euclid(2), t.rem_euclid(2));
            rational = rational * r.pow(q);
            if m == 1 {
                rest.push((r.clone(), 1));
            }
        }
        (rational, RadicalMonomial { factors: rest })
    }

    /// True when no symbol depends on λ.
    pub fn is_lambda_free(&self) -> bool {
        self.factors.iter().all(|(r, _)| r.as_constant().is_some())
    }
}

impl fmt::Display for RadicalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (r, t)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            match t {
                1 => write!(f, "√({r})")?,
                t if t % 2 == 0 => write!(f, "({r})^{}", t / 2)?,
                t => write!(f, "√({r})^{t}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RadicalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Radical[{self}]")
    }
}
