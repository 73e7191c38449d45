use serde::Serialize;

use super::{gallery_invariants, gallery_step, gallery_two_integrals, GalleryId, Point};
use crate::boundarymodel::BoundaryId;
use crate::error::{Error, Result};
use crate::exact::{fmt_rat, Rat};
use crate::quadmodel::QuadId;
use crate::strip::{iterate_with, Strip, StripConfig, StripState};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub id: GalleryId,
    pub steps_requested: usize,
    /// Steps compared before the end or a common singularity.
    pub steps_compared: usize,
    pub singular_at: Option<usize>,
    pub matched: bool,
    /// First disagreement, if any.
    pub diff: Option<String>,
    /// Invariant then 2-integral values per step, as `p/q`.
    pub invariants: Vec<Vec<String>>,
    pub two_integrals: Vec<Vec<String>>,
    pub invariant_drift_zero: bool,
    pub two_integrals_alternate: bool,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.matched && self.invariant_drift_zero && self.two_integrals_alternate
    }
}

fn expect_config(config: &StripConfig, quad: QuadId, minus: BoundaryId, plus: BoundaryId, n: usize, general: Option<bool>) -> Result<()> {
    let bad = |ptr: &str, msg: String| Err(Error::config(ptr, msg));
    if config.quad != quad {
        return bad("/equation", format!("expected {}", quad.as_str()));
    }
    if config.boundary_minus != minus {
        return bad("/boundary_minus", format!("expected {minus}"));
    }
    if config.boundary_plus != plus {
        return bad("/boundary_plus", format!("expected {plus}"));
    }
    if config.n != n {
        return bad("/n", format!("expected {n}"));
    }
    match general {
        Some(g) if g != config.is_general() => bad("/mode", format!("expected {} mode", if g { "general" } else { "autonomous" })),
        _ => Ok(()),
    }
}

/// Gallery coordinates and parameters of a strip state.
pub fn point_from_strip(id: GalleryId, config: &StripConfig, state: &StripState) -> Result<Point<Rat>> {
    let h1 = |n, general| expect_config(config, QuadId::H1, BoundaryId::H1Xz, BoundaryId::H1Yzx, n, general);
    let q1 = |n| expect_config(config, QuadId::Q1Mult, BoundaryId::Q1multRow1, BoundaryId::Q1multRow3, n, None);
    let mu = &config.mu;
    let x = state.fields.clone();
    let c_h1 = || Rat::from_integer(2.into()) * (mu - state.alpha(1));
    match id {
        GalleryId::H1_2d => h1(2, Some(false)).map(|_| Point::new(x, vec![c_h1()])),
        GalleryId::H1_3d => h1(3, Some(false)).map(|_| Point::new(x, vec![c_h1()])),
        GalleryId::H1_4d => h1(4, Some(false)).map(|_| Point::new(x, vec![c_h1()])),
        GalleryId::H1_3dNa => h1(3, None).map(|_| Point::new(x, vec![mu.clone(), state.alpha(1).clone(), state.alpha(2).clone()])),
        GalleryId::Q1_2d => {
            q1(2)?;
            let c = (mu / state.alpha(1)).clone();
            Ok(Point::new(x, vec![c]))
        }
        GalleryId::Q1_3d => {
            q1(3)?;
            Ok(Point::new(x, vec![state.alpha(1) / mu, state.alpha(2) / mu]))
        }
        _ => Err(Error::config("/gallery", format!("{id} has no strip realization"))),
    }
}

fn show(v: &[Rat]) -> String {
    format!("({})", v.iter().map(fmt_rat).collect::<Vec<_>>().join(", "))
}

/// Runs the strip engine and the closed form side by side from `seed`.
pub fn gallery_crosscheck(id: GalleryId, config: &StripConfig, seed: &[Rat], steps: usize) -> Result<CrosscheckReport> {
    let strip = Strip::new(config)?;
    let start = StripState::initial(config, seed.to_vec())?;
    let orbit = iterate_with(&strip, &start, steps);
    let mut pt = point_from_strip(id, config, &start)?;
    let strs = |v: Vec<Rat>| v.iter().map(fmt_rat).collect::<Vec<_>>();
    let mut report = CrosscheckReport {
        id,
        steps_requested: steps,
        steps_compared: 0,
        singular_at: None,
        matched: true,
        diff: None,
        invariants: vec![strs(gallery_invariants(id, &pt)?)],
        two_integrals: vec![strs(gallery_two_integrals(id, &pt)?)],
        invariant_drift_zero: true,
        two_integrals_alternate: true,
    };
    let inv0 = gallery_invariants(id, &pt)?;
    let two0 = gallery_two_integrals(id, &pt)?;
    for s in 1..=steps {
        let next = gallery_step(id, &pt);
        let strip_state = orbit.states.get(s);
        match (next, strip_state) {
            (Err(Error::SingularPoint), None) => {
                report.singular_at = Some(s);
                break;
            }
            (Ok(g), Some(st)) => {
                let expect = point_from_strip(id, config, st)?;
                if g != expect {
                    report.matched = false;
                    report.diff = Some(format!(
                        "step {s}: strip {} params {}, closed form {} params {}",
                        show(&expect.x),
                        show(&expect.p),
                        show(&g.x),
                        show(&g.p)
                    ));
                    break;
                }
                pt = g;
            }
            (Err(e), Some(_)) => {
                report.matched = false;
                report.diff = Some(format!("step {s}: closed form failed ({e}) but the strip step succeeded"));
                break;
            }
            (Ok(g), None) => {
                report.matched = false;
                let face = orbit.singular_at.as_ref().map_or("?".to_string(), |sg| sg.face.clone());
                report.diff = Some(format!("step {s}: strip singular at {face} but closed form gives {}", show(&g.x)));
                break;
            }
            (Err(e), None) => return Err(e),
        }
        report.steps_compared = s;
        let inv = gallery_invariants(id, &pt)?;
        let two = gallery_two_integrals(id, &pt)?;
        report.invariant_drift_zero &= inv == inv0;
        let sign = if s % 2 == 0 { Rat::from_integer(1.into()) } else { Rat::from_integer((-1).into()) };
        report.two_integrals_alternate &= two.iter().zip(&two0).all(|(a, b)| *a == &sign * b);
        report.invariants.push(strs(inv));
        report.two_integrals.push(strs(two));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::strip::Mode;

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn h1_examples_match() {
        let c = StripConfig::h1(3, int(3), Mode::Autonomous(int(2)));
        let r = gallery_crosscheck(GalleryId::H1_3d, &c, &ints(&[1, 1, 1]), 10).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!((r.steps_compared, r.singular_at), (2, Some(3)));
        assert_eq!(r.invariants[1], vec!["1", "4"]);
        assert_eq!(r.two_integrals, vec![vec!["4"], vec!["-4"], vec!["4"]]);

        let c = StripConfig::h1(4, int(3), Mode::Autonomous(int(2)));
        let r = gallery_crosscheck(GalleryId::H1_4d, &c, &ints(&[1, 2, 3, 4]), 12).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.steps_compared, 12);
        assert!(r.invariants.iter().all(|v| v[1] == "336"));

        let c = StripConfig::h1(3, int(3), Mode::General(ints(&[1, 2])));
        let r = gallery_crosscheck(GalleryId::H1_3dNa, &c, &ints(&[1, 1, 2]), 10).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.two_integrals[0..2], [vec!["-3".to_string()], vec!["3".to_string()]]);
        assert!(r.invariants.iter().all(|v| v[1] == "-3"));

        let c = StripConfig::h1(2, int(3), Mode::Autonomous(rat(1, 2)));
        let r = gallery_crosscheck(GalleryId::H1_2d, &c, &[rat(2, 3), int(5)], 6).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn q1_examples_match() {
        let c = StripConfig::new(QuadId::Q1Mult, BoundaryId::Q1multRow1, BoundaryId::Q1multRow3, 2, int(1), Mode::Autonomous(rat(1, 2)));
        let r = gallery_crosscheck(GalleryId::Q1_2d, &c, &ints(&[2, 1]), 20).unwrap();
        assert!(r.passed(), "{r:?}");
        let c = StripConfig::new(QuadId::Q1Mult, BoundaryId::Q1multRow1, BoundaryId::Q1multRow3, 3, int(1), Mode::General(ints(&[2, 3])));
        let r = gallery_crosscheck(GalleryId::Q1_3d, &c, &ints(&[3, 2, 1]), 10).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.invariants[0], vec!["103/6"]);
    }

    #[test]
    fn mismatched_configs_rejected() {
        let c = StripConfig::h1(3, int(3), Mode::Autonomous(int(2)));
        assert!(matches!(gallery_crosscheck(GalleryId::H1_4d, &c, &ints(&[1, 1, 1]), 1), Err(Error::Config { .. })));
        assert!(matches!(gallery_crosscheck(GalleryId::Gamma, &c, &ints(&[1, 1, 1]), 1), Err(Error::Config { .. })));
    }
}
