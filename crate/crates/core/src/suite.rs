//! The randomized verification suite over the quad and boundary registry.

use rayon::prelude::*;
use serde::Serialize;

use crate::boundarymodel::{
    check_boundary_consistency, check_boundary_zcc, check_dual_boundary_consistency, check_k_involution, verify_duality, BoundaryId,
    BoundarySpec,
};
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::quadmodel::{check_3d_consistency, check_symmetries, check_zero_curvature, QuadId, QuadSpec};
use crate::sampling::{random_nonzero_rat, random_rat, substream, SampleRng, MAX_RETRIES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Symmetries,
    Consistency3d,
    ZeroCurvature,
    Duality,
    KInvolution,
    BoundaryConsistency,
    DualBoundaryConsistency,
    BoundaryZcc,
}

impl Check {
    pub const QUAD: [Check; 3] = [Check::Symmetries, Check::Consistency3d, Check::ZeroCurvature];
    pub const BOUNDARY: [Check; 5] =
        [Check::Duality, Check::KInvolution, Check::BoundaryConsistency, Check::DualBoundaryConsistency, Check::BoundaryZcc];

    pub fn as_str(self) -> &'static str {
        match self {
            Check::Symmetries => "symmetries",
            Check::Consistency3d => "consistency_3d",
            Check::ZeroCurvature => "zero_curvature",
            Check::Duality => "duality",
            Check::KInvolution => "k_involution",
            Check::BoundaryConsistency => "boundary_consistency",
            Check::DualBoundaryConsistency => "dual_boundary_consistency",
            Check::BoundaryZcc => "boundary_zcc",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Target {
    Quad(QuadId),
    Boundary(BoundaryId),
}

impl Target {
    pub fn label(self) -> String {
        match self {
            Target::Quad(q) => q.as_str().to_string(),
            Target::Boundary(b) => b.to_string(),
        }
    }
}

/// One cell of the pass/fail matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub target: Target,
    pub check: Check,
    pub passed: usize,
    pub failed: usize,
    /// Draws rejected as inadmissible before `samples` good ones were found.
    pub redrawn: usize,
    pub first_failure: Option<String>,
}

impl Cell {
    pub fn ok(&self, samples: usize) -> bool {
        self.failed == 0 && self.passed == samples
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub samples: usize,
    pub rng_seed: u64,
    pub cells: Vec<Cell>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.cells.iter().all(|c| c.ok(self.samples))
    }
}

/// Every (target, check) pair of the registry, in report order.
pub fn cells() -> Vec<(Target, Check)> {
    let mut out = Vec::new();
    for q in QuadId::ALL {
        out.extend(Check::QUAD.iter().map(|&c| (Target::Quad(q), c)));
    }
    for b in BoundaryId::ALL {
        out.extend(Check::BOUNDARY.iter().map(|&c| (Target::Boundary(b), c)));
    }
    out
}

fn nz(r: &mut SampleRng) -> Rat {
    random_nonzero_rat(r)
}

/// One sample: `Ok(None)` passes, `Ok(Some(msg))` fails, `Err` is redrawn.
fn one_sample(target: Target, check: Check, r: &mut SampleRng) -> Result<Option<String>> {
    let verdict = |ok: bool, what: String| Ok((!ok).then_some(what));
    match target {
        Target::Quad(q) => {
            let eq = QuadSpec::new(q);
            let (u, ut, uh, v) = (random_rat(r), random_rat(r), random_rat(r), random_rat(r));
            let (a, b, l, mu) = (nz(r), nz(r), nz(r), nz(r));
            let show = || format!("u={u} ũ={ut} û={uh} α={a} β={b}");
            match check {
                Check::Consistency3d => {
                    let c = check_3d_consistency(&eq, &u, &ut, &uh, &v, &a, &b, &l)?;
                    verdict(c.consistent, format!("{} v={v} λ={l}", show()))
                }
                Check::ZeroCurvature => {
                    let lams = [nz(r), nz(r), nz(r)];
                    verdict(check_zero_curvature(&eq, q, &u, &ut, &uh, &a, &b, &mu, &lams)?, format!("{} μ={mu}", show()))
                }
                _ => unreachable!(),
            }
        }
        Target::Boundary(id) => {
            let b = BoundarySpec::new(id, nz(r))?;
            let (x, y, u) = (random_rat(r), random_rat(r), random_rat(r));
            let (a, lp) = (nz(r), nz(r));
            let show = || format!("μ={} x={x} y={y} u={u} α={a} λ′={lp}", b.mu());
            match check {
                Check::KInvolution => verdict(check_k_involution(&b, &x)?, show()),
                Check::BoundaryConsistency => verdict(check_boundary_consistency(&b, &x, &y, &u, &a, &lp)?.consistent, show()),
                Check::DualBoundaryConsistency => {
                    verdict(check_dual_boundary_consistency(&b, &x, &y, &u, &a, &lp)?.consistent, show())
                }
                Check::BoundaryZcc => verdict(check_boundary_zcc(&b, &x, &u, &a)?, show()),
                _ => unreachable!(),
            }
        }
    }
}

/// Runs one cell with its own random stream.
pub fn run_cell(target: Target, check: Check, samples: usize, r: &mut SampleRng) -> Cell {
    let mut cell = Cell { target, check, passed: 0, failed: 0, redrawn: 0, first_failure: None };
    let fail = |cell: &mut Cell, msg: String| {
        cell.failed += 1;
        cell.first_failure.get_or_insert(msg);
    };
    match (target, check) {
        // these draw their own samples
        (Target::Quad(q), Check::Symmetries) => {
            let rep = check_symmetries(&QuadSpec::new(q), samples, r);
            if rep.all_pass() {
                cell.passed = samples;
            } else {
                fail(&mut cell, format!("{rep:?}"));
            }
        }
        (Target::Boundary(id), Check::Duality) => {
            let res = BoundarySpec::new(id, nz(r)).and_then(|b| verify_duality(&b, samples, r));
            match res {
                Ok(rep) if rep.all_pass() => cell.passed = samples,
                Ok(rep) => fail(&mut cell, format!("{rep:?}")),
                Err(e) => fail(&mut cell, e.to_string()),
            }
        }
        _ => {
            while cell.passed + cell.failed < samples && cell.redrawn < samples * MAX_RETRIES {
                match one_sample(target, check, r) {
                    Ok(None) => cell.passed += 1,
                    Ok(Some(msg)) => fail(&mut cell, msg),
                    Err(_) => cell.redrawn += 1,
                }
            }
            if cell.passed + cell.failed < samples {
                fail(&mut cell, Error::NoValidSamples.to_string());
            }
        }
    }
    cell
}

/// The full matrix, cells in parallel; cell `i` uses substream `i` of `rng_seed`.
pub fn run_suite(samples: usize, rng_seed: u64) -> SuiteReport {
    let cells: Vec<Cell> = cells()
        .into_par_iter()
        .enumerate()
        .map(|(i, (t, c))| run_cell(t, c, samples, &mut substream(rng_seed, i as u64)))
        .collect();
    SuiteReport { samples, rng_seed, cells }
}
