//! Bulk quad equations: evaluators, corner solvers, Lax matrices and the
//! bulk consistency verifiers.

mod lax;
mod scaled;
mod verify;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::boundarymodel::InvolutionKind;
use crate::error::{Error, Result};
use crate::exact::{Field, Rat};

pub use lax::{lax_matrix, lax_matrix_at, LaxParts};
pub use scaled::ScaledMatrix;
pub use verify::{
    check_3d_consistency, check_symmetries, check_zero_curvature, cube_routes, zero_curvature_holds, CubeResult,
    SymmetryReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QuadId {
    #[serde(rename = "h1")]
    H1,
    #[serde(rename = "q1_add")]
    Q1Add,
    #[serde(rename = "q1_mult")]
    Q1Mult,
}

impl QuadId {
    pub const ALL: [QuadId; 3] = [QuadId::H1, QuadId::Q1Add, QuadId::Q1Mult];

    pub fn as_str(self) -> &'static str {
        match self {
            QuadId::H1 => "h1",
            QuadId::Q1Add => "q1_add",
            QuadId::Q1Mult => "q1_mult",
        }
    }

    pub fn involution_kind(self) -> InvolutionKind {
        match self {
            QuadId::H1 | QuadId::Q1Add => InvolutionKind::Additive,
            QuadId::Q1Mult => InvolutionKind::Multiplicative,
        }
    }
}

impl fmt::Display for QuadId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for QuadId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        QuadId::ALL.into_iter().find(|q| q.as_str() == s).ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// A quad relation `Q(u, ũ, û, ŵ; α, β)`; `ũ` is the neighbour along the
/// α-edge, `û` along the β-edge, `ŵ` the opposite corner.
pub trait QuadEquation: Sync {
    fn label(&self) -> String;

    fn eval<F: Field>(&self, u: &F, ut: &F, uh: &F, w: &F, a: &F, b: &F) -> Result<F>;

    /// The stored `(ω, δ)` of the D4 relations.
    fn d4_signs(&self) -> (i32, i32);

    /// Far corner from the other three. Defaults to the affine-linear solve.
    fn corner_solve(&self, u: &Rat, ut: &Rat, uh: &Rat, a: &Rat, b: &Rat) -> Result<Rat> {
        let zero = Rat::zero();
        solve_slot(self, 3, [u, ut, uh, &zero], a, b)
    }
}

/// Solves `Q = 0` for the argument in position `slot` (0..4) using
/// affine-linearity. The value passed in that slot is ignored.
pub fn solve_slot<Q: QuadEquation + ?Sized>(eq: &Q, slot: usize, vals: [&Rat; 4], a: &Rat, b: &Rat) -> Result<Rat> {
    let at = |t: Rat| -> Result<Rat> {
        let mut v: [Rat; 4] = vals.map(Clone::clone);
        v[slot] = t;
        eq.eval(&v[0], &v[1], &v[2], &v[3], a, b)
    };
    let q0 = at(Rat::zero())?;
    let q1 = at(Rat::one())?;
    let coef = q1 - &q0;
    if coef.is_zero() {
        return Err(Error::corner(format!("slot {slot}")));
    }
    Ok(-q0 / coef)
}

/// Registry entry for one of the three bulk equations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadSpec {
    pub id: QuadId,
}

impl QuadSpec {
    pub fn new(id: QuadId) -> Self {
        QuadSpec { id }
    }
}

fn div<F: Field>(a: F, b: &F) -> Result<F> {
    a.checked_div(b).ok_or(Error::ZeroDenominator)
}

impl QuadEquation for QuadSpec {
    fn label(&self) -> String {
        self.id.as_str().to_string()
    }

    fn eval<F: Field>(&self, u: &F, ut: &F, uh: &F, w: &F, a: &F, b: &F) -> Result<F> {
        let c = Clone::clone;
        Ok(match self.id {
            QuadId::H1 => (c(u) - c(w)) * (c(ut) - c(uh)) + c(b) - c(a),
            QuadId::Q1Add => c(a) * (c(u) - c(uh)) * (c(ut) - c(w)) - c(b) * (c(u) - c(ut)) * (c(uh) - c(w)),
            QuadId::Q1Mult => {
                let p = (c(u) - c(uh)) * (c(ut) - c(w));
                let q = (c(u) - c(ut)) * (c(uh) - c(w));
                div(p, &a.square())? - div(q, &b.square())?
            }
        })
    }

    fn d4_signs(&self) -> (i32, i32) {
        (1, -1)
    }

    fn corner_solve(&self, u: &Rat, ut: &Rat, uh: &Rat, a: &Rat, b: &Rat) -> Result<Rat> {
        let degenerate = || Error::corner("far corner");
        match self.id {
            QuadId::H1 => {
                let d = ut - uh;
                if d == Rat::zero() {
                    return Err(degenerate());
                }
                Ok(u + (b - a) / d)
            }
            QuadId::Q1Add => {
                let den = a * (u - uh) - b * (u - ut);
                if den == Rat::zero() {
                    return Err(degenerate());
                }
                Ok((a * ut * (u - uh) - b * uh * (u - ut)) / den)
            }
            QuadId::Q1Mult => {
                if *a == Rat::zero() || *b == Rat::zero() {
                    return Err(Error::ZeroDenominator);
                }
                let (a2, b2) = (a * a, b * b);
                let den = &b2 * (u - uh) - &a2 * (u - ut);
                if den == Rat::zero() {
                    return Err(degenerate());
                }
                Ok((&b2 * ut * (u - uh) - &a2 * uh * (u - ut)) / den)
            }
        }
    }
}

pub fn quad_eval(spec: &QuadSpec, u: &Rat, ut: &Rat, uh: &Rat, w: &Rat, a: &Rat, b: &Rat) -> Result<Rat> {
    spec.eval(u, ut, uh, w, a, b)
}

pub fn corner_solve(spec: &QuadSpec, u: &Rat, ut: &Rat, uh: &Rat, a: &Rat, b: &Rat) -> Result<Rat> {
    spec.corner_solve(u, ut, uh, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::sampling::{random_nonzero_rat, random_rat, rng};

    const H1: QuadSpec = QuadSpec { id: QuadId::H1 };

    #[test]
    fn h1_eval_examples() {
        assert_eq!(quad_eval(&H1, &int(0), &int(1), &int(2), &int(-2), &int(1), &int(3)).unwrap(), int(0));
        assert_eq!(quad_eval(&H1, &int(0), &int(0), &int(0), &int(0), &int(5), &int(5)).unwrap(), int(0));
        let q1a = QuadSpec::new(QuadId::Q1Add);
        assert_eq!(quad_eval(&q1a, &int(1), &int(1), &int(1), &int(1), &int(2), &int(3)).unwrap(), int(0));
    }

    #[test]
    fn h1_corner_examples() {
        assert_eq!(corner_solve(&H1, &int(0), &int(1), &int(2), &int(1), &int(3)).unwrap(), int(-2));
        assert_eq!(corner_solve(&H1, &int(2), &int(5), &int(3), &int(1), &int(4)).unwrap(), rat(7, 2));
        let e = corner_solve(&H1, &int(4), &int(2), &int(2), &int(1), &int(1)).unwrap_err();
        assert_eq!(e.kind(), "degenerate-corner");
    }

    #[test]
    fn closed_form_matches_slot_solver() {
        let mut r = rng(11);
        for id in QuadId::ALL {
            let spec = QuadSpec::new(id);
            for _ in 0..50 {
                let (u, ut, uh) = (random_rat(&mut r), random_rat(&mut r), random_rat(&mut r));
                let (a, b) = (random_nonzero_rat(&mut r), random_nonzero_rat(&mut r));
                let closed = spec.corner_solve(&u, &ut, &uh, &a, &b);
                let generic = solve_slot(&spec, 3, [&u, &ut, &uh, &int(0)], &a, &b);
                assert_eq!(closed.is_ok(), generic.is_ok());
                if let Ok(w) = closed {
                    assert_eq!(Ok(w.clone()), generic);
                    assert_eq!(spec.eval(&u, &ut, &uh, &w, &a, &b).unwrap(), int(0));
                }
            }
        }
    }

    #[test]
    fn ids_round_trip() {
        for id in QuadId::ALL {
            assert_eq!(id.as_str().parse::<QuadId>().unwrap(), id);
        }
        assert!("h2".parse::<QuadId>().is_err());
    }
}
