
use super::{QuadId, ScaledMatrix};
use crate::error::{Error, Result};
use crate::exact::{Field, Mat2, RadicalMonomial, Rat, RatFun};

/// The rational part of a Lax or boundary matrix: `scalar · core`.
/// The radical prefactor is kept separately since it cannot be evaluated.
#[derive(Clone, Debug, PartialEq)]
pub struct LaxParts<F> {
    pub scalar: F,
    pub core: Mat2<F>,
}

impl<F: Field> LaxParts<F> {
    pub fn identity() -> Self {
        LaxParts { scalar: F::one(), core: Mat2::identity() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        LaxParts { scalar: self.scalar.clone() * o.scalar.clone(), core: self.core.mul(&o.core) }
    }

    pub fn full(&self) -> Mat2<F> {
        self.core.scale(&self.scalar)
    }
}

impl QuadId {
    /// Scalar and core of `L(x̃, x; α, λ)` for any field, `λ` given as an
    /// element of that field (use σ(λ) for the reversed row).
    pub fn lax_parts<F: Field>(self, xt: &F, x: &F, a: &F, lam: &F, mu: &F) -> Result<LaxParts<F>> {
        let c = Clone::clone;
        match self {
            QuadId::H1 => Ok(LaxParts {
                scalar: F::one(),
                core: Mat2::new(c(x), c(a) - c(lam) - c(xt) * c(x), F::one(), -c(xt)),
            }),
            QuadId::Q1Add => {
                let d = c(xt) - c(x);
                let scalar = F::one().checked_div(&d).ok_or(Error::DegenerateEdge)?;
                let ld = c(lam) * d;
                Ok(LaxParts {
                    scalar,
                    core: Mat2::new(
                        c(&ld) - c(a) * c(xt),
                        c(a) * c(xt) * c(x),
                        -c(a),
                        ld + c(a) * c(x),
                    ),
                })
            }
            QuadId::Q1Mult => {
                let d = c(xt) - c(x);
                let a2 = a.square();
                let l2 = lam.square();
                let scalar = c(mu).checked_div(&(c(&a2) * c(&d))).ok_or(Error::DegenerateEdge)?;
                Ok(LaxParts {
                    scalar,
                    core: Mat2::new(
                        c(&a2) * c(&d) - c(&l2) * c(xt),
                        c(&l2) * c(xt) * c(x),
                        -c(&l2),
                        a2 * d + l2 * c(x),
                    ),
                })
            }
        }
    }

    /// Radical prefactor of `L(·, ·; α, lam)`.
    pub fn lax_radical(self, a: &Rat, mu: &Rat, lam: &RatFun) -> RadicalMonomial {
        let m = RatFun::constant(mu.clone());
        match self {
            QuadId::H1 => RadicalMonomial::inv_sqrt(lam.clone() - m),
            QuadId::Q1Add => RadicalMonomial::inv_sqrt(lam.clone() * (lam.clone() - m)),
            QuadId::Q1Mult => RadicalMonomial::inv_sqrt(lam.square() - m.square())
                .mul(&RadicalMonomial::sqrt(RatFun::constant(a.clone()))),
        }
    }

    /// `ℓ(α, λ)` with `L(x, y) L(y, x) = ℓ · id` for the stored normalization.
    pub fn ell<F: Field>(self, a: &F, lam: &F, mu: &F) -> Result<F> {
        let c = Clone::clone;
        let r = match self {
            QuadId::H1 => (c(a) - c(lam)).checked_div(&(c(lam) - c(mu))),
            QuadId::Q1Add => (c(lam) - c(a)).checked_div(&(c(lam) - c(mu))),
            QuadId::Q1Mult => {
                let num = mu.square() * (a.square() - lam.square());
                num.checked_div(&(c(a) * (lam.square() - mu.square())))
            }
        };
        r.ok_or(Error::ZeroDenominator)
    }

    /// The linear factors that may appear in denominators of traces.
    pub fn structural_factors(self, mu: &Rat) -> Vec<Rat> {
        match self {
            QuadId::H1 => vec![mu.clone()],
            QuadId::Q1Add => vec![Rat::from_integer(0.into()), mu.clone(), -mu.clone(), mu * Rat::from_integer(2.into())],
            QuadId::Q1Mult => vec![Rat::from_integer(0.into()), mu.clone(), -mu.clone()],
        }
    }
}

/// `L(x̃, x; α, λ)` with symbolic λ.
pub fn lax_matrix(id: QuadId, xt: &Rat, x: &Rat, a: &Rat, mu: &Rat) -> Result<ScaledMatrix> {
    lax_matrix_at(id, xt, x, a, mu, &RatFun::lambda())
}

/// `L(x̃, x; α, lam)` for a spectral argument such as σ(λ).
pub fn lax_matrix_at(id: QuadId, xt: &Rat, x: &Rat, a: &Rat, mu: &Rat, lam: &RatFun) -> Result<ScaledMatrix> {
    let f = RatFun::constant;
    let parts = id.lax_parts(&f(xt.clone()), &f(x.clone()), &f(a.clone()), lam, &f(mu.clone()))?;
    Ok(ScaledMatrix::new(parts.core, parts.scalar, id.lax_radical(a, mu, lam)))
}
