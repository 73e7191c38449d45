//! Boundary equations, their duals and boundary matrices, with the
//! boundary-side verifiers.

mod verify;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Field, Mat2, RadicalMonomial, Rat, RatFun};
use crate::quadmodel::{LaxParts, QuadId, QuadSpec, ScaledMatrix};

pub use verify::{
    boundary_matrix_from_dual, boundary_zcc_with_sign, check_boundary_consistency, check_boundary_zcc,
    check_dual_boundary_consistency, check_k_involution, check_z2, det_k_is_field_independent, verify_duality,
    BoundaryConsistency, DualBoundaryConsistency, DualMatrix, DualityReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvolutionKind {
    Additive,
    Multiplicative,
}

/// σ(α) = 2μ − α or σ(α) = μ²/α.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    pub kind: InvolutionKind,
    pub mu: Rat,
}

impl Involution {
    pub fn new(kind: InvolutionKind, mu: Rat) -> Result<Self> {
        if kind == InvolutionKind::Multiplicative && mu.is_zero() {
            return Err(Error::InvolutionPole);
        }
        Ok(Involution { kind, mu })
    }

    pub fn apply(&self, a: &Rat) -> Result<Rat> {
        self.apply_field(a)
    }

    pub fn apply_field<F: Field>(&self, a: &F) -> Result<F> {
        let mu = F::from_rat(&self.mu);
        match self.kind {
            InvolutionKind::Additive => Ok(mu.clone() + mu - a.clone()),
            InvolutionKind::Multiplicative => mu.square().checked_div(a).ok_or(Error::InvolutionPole),
        }
    }

    /// The identity map; only used for negative controls.
    pub fn fixed_point(&self) -> Rat {
        self.mu.clone()
    }
}

pub fn sigma_apply(inv: &Involution, a: &Rat) -> Result<Rat> {
    inv.apply(a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryId {
    H1Yzx,
    H1Xz,
    Q1addRow1,
    Q1addRow2,
    Q1multRow1,
    Q1multRow2,
    Q1multRow3,
    Q1multRow4,
}

impl BoundaryId {
    pub const ALL: [BoundaryId; 8] = [
        BoundaryId::H1Yzx,
        BoundaryId::H1Xz,
        BoundaryId::Q1addRow1,
        BoundaryId::Q1addRow2,
        BoundaryId::Q1multRow1,
        BoundaryId::Q1multRow2,
        BoundaryId::Q1multRow3,
        BoundaryId::Q1multRow4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundaryId::H1Yzx => "h1_yzx",
            BoundaryId::H1Xz => "h1_xz",
            BoundaryId::Q1addRow1 => "q1add_row1",
            BoundaryId::Q1addRow2 => "q1add_row2",
            BoundaryId::Q1multRow1 => "q1mult_row1",
            BoundaryId::Q1multRow2 => "q1mult_row2",
            BoundaryId::Q1multRow3 => "q1mult_row3",
            BoundaryId::Q1multRow4 => "q1mult_row4",
        }
    }

    pub fn quad(self) -> QuadId {
        match self {
            BoundaryId::H1Yzx | BoundaryId::H1Xz => QuadId::H1,
            BoundaryId::Q1addRow1 | BoundaryId::Q1addRow2 => QuadId::Q1Add,
            _ => QuadId::Q1Mult,
        }
    }

    pub fn for_quad(q: QuadId) -> Vec<BoundaryId> {
        Self::ALL.into_iter().filter(|b| b.quad() == q).collect()
    }

    /// Rows whose `q` is `x + z`, i.e. `z = −x`.
    pub fn is_reflection(self) -> bool {
        matches!(self, BoundaryId::H1Xz | BoundaryId::Q1addRow2)
    }

    pub fn epsilon(self) -> i32 {
        match self {
            BoundaryId::H1Yzx | BoundaryId::Q1addRow1 | BoundaryId::Q1multRow1 | BoundaryId::Q1multRow3 => 1,
            _ => -1,
        }
    }
}

impl fmt::Display for BoundaryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundaryId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BoundaryId::ALL.into_iter().find(|b| b.as_str() == s).ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// A boundary equation `q(x, y, z; α)` together with its dual
/// `p(y, x, c; λ)` and boundary matrix `K(x; λ)`.
pub trait BoundaryEquation: Sync {
    fn label(&self) -> String;
    fn quad(&self) -> QuadSpec;
    fn involution(&self) -> &Involution;
    fn q<F: Field>(&self, x: &F, y: &F, z: &F, a: &F) -> Result<F>;
    fn p<F: Field>(&self, y: &F, x: &F, c: &F, lam: &F) -> Result<F>;
    /// Scalar and core of `K(x; lam)`.
    fn k_parts<F: Field>(&self, x: &F, lam: &F) -> Result<LaxParts<F>>;
    fn k_radical(&self, lam: &RatFun) -> RadicalMonomial;
    fn epsilon(&self) -> i32;

    fn sigma(&self, a: &Rat) -> Result<Rat> {
        self.involution().apply(a)
    }

    /// `z = f(x, y; α)` from `q = 0`.
    fn solve_z(&self, x: &Rat, y: &Rat, a: &Rat) -> Result<Rat> {
        affine_root(|t| self.q(x, y, t, a)).ok_or_else(|| Error::boundary("q: coefficient of z"))
    }

    /// `x` from `q(x, y, z; α) = 0`, used by the inverse step.
    fn solve_x(&self, y: &Rat, z: &Rat, a: &Rat) -> Result<Rat> {
        affine_root(|t| self.q(t, y, z, a)).ok_or_else(|| Error::boundary("q: coefficient of x"))
    }

    /// `c` from `p(y, x, c; λ) = 0`.
    fn solve_c(&self, y: &Rat, x: &Rat, lam: &Rat) -> Result<Rat> {
        affine_root(|t| self.p(y, x, t, lam)).ok_or_else(|| Error::boundary("p: coefficient of c"))
    }

    fn k_matrix(&self, x: &Rat, lam: &RatFun) -> Result<ScaledMatrix> {
        let parts = self.k_parts(&RatFun::constant(x.clone()), lam)?;
        Ok(ScaledMatrix::new(parts.core, parts.scalar, self.k_radical(lam)))
    }
}

/// Root of an affine function given by evaluation; `None` if the linear
/// coefficient vanishes or evaluation fails.
pub(crate) fn affine_root(f: impl Fn(&Rat) -> Result<Rat>) -> Option<Rat> {
    let f0 = f(&Rat::zero()).ok()?;
    let f1 = f(&Rat::one()).ok()?;
    let k = f1 - &f0;
    if k.is_zero() {
        return None;
    }
    Some(-f0 / k)
}

/// Registry entry: one row of the boundary tables at a given μ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundarySpec {
    pub id: BoundaryId,
    inv: Involution,
}

impl BoundarySpec {
    pub fn new(id: BoundaryId, mu: Rat) -> Result<Self> {
        Ok(BoundarySpec { id, inv: Involution::new(id.quad().involution_kind(), mu)? })
    }

    pub fn mu(&self) -> &Rat {
        &self.inv.mu
    }

    /// `h(α)` with `q(x,y,z;α) = h(α) q(z,y,x;σ(α))`.
    pub fn z2_factor(&self, a: &Rat) -> Result<Rat> {
        let mu2 = self.mu() * self.mu();
        let ratio = || a * a / &mu2;
        Ok(match self.id {
            BoundaryId::H1Yzx | BoundaryId::Q1addRow1 => -Rat::one(),
            BoundaryId::H1Xz | BoundaryId::Q1addRow2 => Rat::one(),
            BoundaryId::Q1multRow1 | BoundaryId::Q1multRow3 => -ratio(),
            BoundaryId::Q1multRow2 | BoundaryId::Q1multRow4 => ratio(),
        })
    }
}

impl BoundaryEquation for BoundarySpec {
    fn label(&self) -> String {
        self.id.as_str().to_string()
    }

    fn quad(&self) -> QuadSpec {
        QuadSpec::new(self.id.quad())
    }

    fn involution(&self) -> &Involution {
        &self.inv
    }

    fn epsilon(&self) -> i32 {
        self.id.epsilon()
    }

    fn q<F: Field>(&self, x: &F, y: &F, z: &F, a: &F) -> Result<F> {
        let c = Clone::clone;
        let mu = F::from_rat(self.mu());
        let mu2 = mu.square();
        let a2 = a.square();
        Ok(match self.id {
            BoundaryId::H1Yzx => c(y) * (c(z) - c(x)) + c(a) - mu,
            BoundaryId::H1Xz | BoundaryId::Q1addRow2 => c(x) + c(z),
            BoundaryId::Q1addRow1 => c(a) * (c(x) * c(z) - y.square()) - mu * (c(x) - c(y)) * (c(y) + c(z)),
            BoundaryId::Q1multRow1 => a2 * (c(x) - c(y)) + mu2 * (c(y) - c(z)),
            BoundaryId::Q1multRow2 => a2 * (c(x) - c(y)) - mu2 * (c(y) - c(z)),
            BoundaryId::Q1multRow3 => a2 * (c(x) - c(y)) * c(z) + mu2 * (c(y) - c(z)) * c(x),
            BoundaryId::Q1multRow4 => a2 * (c(x) - c(y)) * c(z) - mu2 * (c(y) - c(z)) * c(x),
        })
    }

    fn p<F: Field>(&self, y: &F, x: &F, cc: &F, lam: &F) -> Result<F> {
        let c = Clone::clone;
        let mu = F::from_rat(self.mu());
        let mu2 = mu.square();
        let l2 = lam.square();
        Ok(match self.id {
            BoundaryId::H1Yzx | BoundaryId::Q1addRow1 => c(y) + c(cc),
            BoundaryId::H1Xz => c(x) * (c(y) - c(cc)) + mu - c(lam),
            BoundaryId::Q1addRow2 => c(lam) * (x.square() - c(cc) * c(y)) + mu * (c(cc) + c(x)) * (c(y) - c(x)),
            BoundaryId::Q1multRow1 => l2 * (c(y) - c(x)) - mu2 * (c(x) - c(cc)),
            BoundaryId::Q1multRow2 => l2 * (c(y) - c(x)) + mu2 * (c(x) - c(cc)),
            BoundaryId::Q1multRow3 => l2 * (c(y) - c(x)) * c(cc) - mu2 * (c(x) - c(cc)) * c(y),
            BoundaryId::Q1multRow4 => l2 * (c(y) - c(x)) * c(cc) + mu2 * (c(x) - c(cc)) * c(y),
        })
    }

    fn k_parts<F: Field>(&self, x: &F, lam: &F) -> Result<LaxParts<F>> {
        let c = Clone::clone;
        let mu = F::from_rat(self.mu());
        let bad = || Error::boundary(format!("{}: K(x) at x = 0", self.id));
        let xinv = || x.inv().ok_or_else(bad);
        let div = |a: F, b: &F| a.checked_div(b).ok_or(Error::ZeroDenominator);
        let lm = c(lam) * c(&mu);
        let sum = lam.square() + mu.square();
        let diff = mu.square() - lam.square();
        let core = match self.id {
            BoundaryId::H1Yzx | BoundaryId::Q1addRow1 => Mat2::new(-F::one(), F::zero(), F::zero(), F::one()),
            BoundaryId::H1Xz => Mat2::new(F::one(), (mu - c(lam)) * xinv()?, F::zero(), F::one()),
            BoundaryId::Q1addRow2 => {
                let d = c(lam) - c(&mu);
                Mat2::new(c(&mu), c(&d) * c(x), d * xinv()?, mu)
            }
            BoundaryId::Q1multRow1 => Mat2::new(
                -div(c(lam), &mu)?,
                div(sum * c(x), &lm)?,
                F::zero(),
                div(c(&mu), lam)?,
            ),
            BoundaryId::Q1multRow2 => Mat2::new(
                div(c(lam), &mu)?,
                div(diff * c(x), &lm)?,
                F::zero(),
                div(c(&mu), lam)?,
            ),
            BoundaryId::Q1multRow3 => Mat2::new(
                -div(c(&mu), lam)?,
                F::zero(),
                -div(sum * xinv()?, &lm)?,
                div(c(lam), &mu)?,
            ),
            BoundaryId::Q1multRow4 => Mat2::new(
                div(c(&mu), lam)?,
                F::zero(),
                div(diff * xinv()?, &lm)?,
                div(c(lam), &mu)?,
            ),
        };
        Ok(LaxParts { scalar: F::one(), core })
    }

    fn k_radical(&self, lam: &RatFun) -> RadicalMonomial {
        match self.id {
            // κ = (λ(2μ−λ))^{−1/2}: its radicand is σ-invariant, so K(λ)K(σ(λ)) = id
            BoundaryId::Q1addRow2 => {
                let two_mu = RatFun::constant(self.mu() * Rat::from_integer(2.into()));
                RadicalMonomial::inv_sqrt(lam.clone() * (two_mu - lam.clone()))
            }
            _ => RadicalMonomial::one(),
        }
    }
}
