//! Closed-form maps with their invariant laws, used as oracles for the
//! strip engine.

mod crosscheck;
mod pencil;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Field;

pub use crosscheck::{gallery_crosscheck, point_from_strip, CrosscheckReport};
pub use pencil::{base_points, check_base_points, pencil_cubics};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GalleryId {
    H1_2d,
    H1_3d,
    H1_4d,
    H1_3dNa,
    H1Delta,
    H1_3dY,
    Q1_2d,
    Q1_3d,
    Q1Reduced,
    Gamma,
}

/// A gallery id's coordinates, parameters and realization on the strip.
#[derive(Clone, Debug, Serialize)]
pub struct GalleryEntry {
    pub id: GalleryId,
    pub dim: usize,
    pub params: &'static [&'static str],
    pub summary: &'static str,
    pub strip_realization: bool,
}

impl GalleryId {
    pub const ALL: [GalleryId; 10] = [
        GalleryId::H1_2d,
        GalleryId::H1_3d,
        GalleryId::H1_4d,
        GalleryId::H1_3dNa,
        GalleryId::H1Delta,
        GalleryId::H1_3dY,
        GalleryId::Q1_2d,
        GalleryId::Q1_3d,
        GalleryId::Q1Reduced,
        GalleryId::Gamma,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GalleryId::H1_2d => "h1_2d",
            GalleryId::H1_3d => "h1_3d",
            GalleryId::H1_4d => "h1_4d",
            GalleryId::H1_3dNa => "h1_3d_na",
            GalleryId::H1Delta => "h1_delta",
            GalleryId::H1_3dY => "h1_3d_y",
            GalleryId::Q1_2d => "q1_2d",
            GalleryId::Q1_3d => "q1_3d",
            GalleryId::Q1Reduced => "q1_reduced",
            GalleryId::Gamma => "gamma",
        }
    }

    pub fn entry(self) -> GalleryEntry {
        let (dim, params, summary): (usize, &'static [&'static str], &'static str) = match self {
            GalleryId::H1_2d => (2, &["c"], "H1 strip n=2, an involution"),
            GalleryId::H1_3d => (3, &["c"], "H1 strip n=3, autonomous"),
            GalleryId::H1_4d => (4, &["c"], "H1 strip n=4, autonomous"),
            GalleryId::H1_3dNa => (3, &["mu", "alpha_1", "alpha_2"], "H1 strip n=3, general parameters"),
            GalleryId::H1Delta => (2, &["x_1"], "plane map of the squared non-autonomous H1 map"),
            GalleryId::H1_3dY => (3, &[], "H1 n=3 map in y-coordinates"),
            GalleryId::Q1_2d => (2, &["c"], "Q1 multiplicative strip n=2"),
            GalleryId::Q1_3d => (3, &["c_1", "c_2"], "Q1 multiplicative strip n=3"),
            GalleryId::Q1Reduced => (2, &["c_1", "c_2"], "Q1 n=3 map in reduced variables"),
            GalleryId::Gamma => (2, &["alpha", "beta"], "non-QRT plane map preserving a genus 0 pencil"),
        };
        let strip_realization = matches!(
            self,
            GalleryId::H1_2d | GalleryId::H1_3d | GalleryId::H1_4d | GalleryId::H1_3dNa | GalleryId::Q1_2d | GalleryId::Q1_3d
        );
        GalleryEntry { id: self, dim, params, summary, strip_realization }
    }
}

impl fmt::Display for GalleryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GalleryId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GalleryId::ALL.into_iter().find(|g| g.as_str() == s).ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

pub fn gallery_list() -> Vec<GalleryEntry> {
    GalleryId::ALL.iter().map(|g| g.entry()).collect()
}

/// Coordinates `x` and parameters `p` of a gallery map.
#[derive(Clone, Debug, PartialEq)]
pub struct Point<F> {
    pub x: Vec<F>,
    pub p: Vec<F>,
}

impl<F: Field> Point<F> {
    pub fn new(x: Vec<F>, p: Vec<F>) -> Self {
        Point { x, p }
    }
}

fn div<F: Field>(a: F, b: F) -> Result<F> {
    a.checked_div(&b).ok_or(Error::SingularPoint)
}

fn check_shape<F>(id: GalleryId, pt: &Point<F>) -> Result<()> {
    let e = id.entry();
    if pt.x.len() != e.dim {
        return Err(Error::config("/initial", format!("{id} takes {} coordinates, got {}", e.dim, pt.x.len())));
    }
    if pt.p.len() != e.params.len() {
        return Err(Error::config("/params", format!("{id} takes parameters {:?}, got {}", e.params, pt.p.len())));
    }
    Ok(())
}

fn k<F: Field>(n: i64) -> F {
    F::from_int(n)
}

pub fn gallery_step<F: Field>(id: GalleryId, pt: &Point<F>) -> Result<Point<F>> {
    check_shape(id, pt)?;
    let x = |i: usize| pt.x[i - 1].clone();
    let p = |i: usize| pt.p[i].clone();
    let keep = |x: Vec<F>| Ok(Point { x, p: pt.p.clone() });
    match id {
        GalleryId::H1_2d => {
            let c = p(0);
            keep(vec![-x(1), x(2) + div(c, k::<F>(2) * x(1))?])
        }
        GalleryId::H1_3d => {
            let c = p(0);
            let d = k::<F>(2) * x(1) * x(2) + k::<F>(2) * x(2) * x(3) - c.clone();
            let x2 = x(2) + div(k::<F>(2) * c.clone() * x(2), d)?;
            let x3 = x(3) - div(c, k::<F>(2) * x(2))?;
            keep(vec![-x(1), x2, x3])
        }
        GalleryId::H1_4d => {
            let c = p(0);
            let d = x(2) - x(4);
            let x2 = x(2) + div(c.clone() * d.clone(), d.clone() * (x(1) + x(3)) - c.clone())?;
            let x3 = x(3) + div(c.clone(), -d.clone())?;
            let x4 = x(4) + div(c.clone() * d.clone(), k::<F>(2) * x(3) * (-d) + k::<F>(2) * c)?;
            keep(vec![-x(1), x2, x3, x4])
        }
        GalleryId::H1_3dNa => {
            let (mu, a1, a2) = (p(0), p(1), p(2));
            let x2 = x(2) + div(x(2) * (a2.clone() - a1.clone()), x(2) * (x(1) + x(3)) + mu.clone() - a2.clone())?;
            let x3 = x(3) + div(mu.clone() - a2.clone(), x(2))?;
            let two_mu = k::<F>(2) * mu.clone();
            Ok(Point { x: vec![-x(1), x2, x3], p: vec![mu, two_mu.clone() - a2, two_mu - a1] })
        }
        GalleryId::H1Delta => {
            let (y1, y2, s) = (x(1), x(2), p(0).square());
            let num = s.clone() * y1.clone() - k::<F>(2) * s.clone() * y2.clone() + y1.clone() * y2.square();
            let den = s - k::<F>(2) * y1 * y2.clone() + y2.square();
            keep(vec![y2, -div(num, den)?])
        }
        GalleryId::H1_3dY => {
            let (y1, y2, y3) = (x(1), x(2), x(3));
            let d = k::<F>(2) * y1.clone() + y3.clone() - y2.clone();
            let y2n = y2.clone() - div((y1 - y2.clone()) * (y2.clone() + y3.clone()), d)?;
            keep(vec![y2, y2n, -y3])
        }
        GalleryId::Q1_2d => {
            let c2 = p(0).square();
            let s = x(1) + (c2.clone() - F::one()) * x(2);
            keep(vec![div(s.clone(), c2.clone())?, div(x(2) * s, c2 * x(1))?])
        }
        GalleryId::Q1_3d => {
            let (c1s, c2s) = (p(0).square(), p(1).square());
            let n = |cs: F| x(2).square() + cs * (x(1) - x(2)) * (x(2) - x(3)) + x(1) * x(3) - k::<F>(2) * x(2) * x(3);
            let x1 = c1s * (x(1) - x(2)) + x(2);
            let x2 = div(x(2) * n(p(0).square()), n(c2s.clone()))?;
            let x3 = div(x(2) * x(3), c2s * (x(2) - x(3)) + x(3))?;
            Ok(Point { x: vec![x1, x2, x3], p: swap_inverse(&p(0), &p(1))? })
        }
        GalleryId::Q1Reduced => {
            let (z1, z2) = (x(1), x(2));
            let (c1s, c2s) = (p(0).square(), p(1).square());
            let common = c2s.clone() * z2.clone() * (F::one() + z2.clone()) + c1s * (z1.clone() + c2s.clone() * z1.clone() * z2.clone());
            let den = z1.clone() + z2.clone() + c2s.clone() * z1.clone() * z2.clone() + z2.square();
            let z1n = div(
                z1 * (F::one() + c2s * z2.clone()) * common.clone(),
                (F::one() + z2.clone()) * den.clone(),
            )?;
            let z2n = div(z2 * common, den)?;
            Ok(Point { x: vec![z1n, z2n], p: swap_inverse(&p(0), &p(1))? })
        }
        GalleryId::Gamma => {
            let (x, y, a, b) = (x(1), x(2), p(0), p(1));
            let one = F::one();
            let s_num = (x.clone() + y.clone()) * (a.clone() * x.clone() + b.clone() * (a.clone() * x.clone() + y.clone() + one.clone()) * y.clone()).square();
            let s_den = b.clone()
                * (x.clone() + (x.clone() * b.clone() + y.clone() + one.clone()) * y.clone())
                * ((a.square() + b.clone()) * x.clone() * y.square()
                    + a.clone() * (b.clone() * x.square() + y.square()) * y.clone()
                    + a.clone() * (x.clone() + y.clone()).square());
            let s = div(s_num, s_den)?;
            let u = div(
                x.clone() * (a.clone() * x.clone() + (a.clone() * b.clone() * x.clone() + b * y.clone() + a.clone()) * y.clone()),
                a.clone() * (x.clone() + (a * x + y.clone() + one) * y.clone()),
            )?;
            keep(vec![s.clone() * u, s * y])
        }
    }
}

/// `(c₁, c₂) ↦ (1/c₂, 1/c₁)`.
fn swap_inverse<F: Field>(c1: &F, c2: &F) -> Result<Vec<F>> {
    Ok(vec![c2.inv().ok_or(Error::SingularPoint)?, c1.inv().ok_or(Error::SingularPoint)?])
}

/// Functions with `I(step(p)) = I(p)`.
pub fn gallery_invariants<F: Field>(id: GalleryId, pt: &Point<F>) -> Result<Vec<F>> {
    check_shape(id, pt)?;
    let x = |i: usize| pt.x[i - 1].clone();
    let p = |i: usize| pt.p[i].clone();
    match id {
        GalleryId::H1_2d => Ok(vec![x(1).square()]),
        GalleryId::H1_3d | GalleryId::H1_4d | GalleryId::H1_3dNa => Ok(vec![x(1).square(), x1_times_i(id, pt)]),
        GalleryId::H1Delta => {
            let (y1, y2) = (x(1), x(2));
            Ok(vec![div(p(0).square() - y1.clone() * y2.clone(), y1 - y2)?])
        }
        GalleryId::H1_3dY => {
            let (y1, y2, y3) = (x(1), x(2), x(3));
            Ok(vec![div((y2.clone() - y3.clone()) * (y1.clone() + y3), y1 - y2)?])
        }
        GalleryId::Q1_2d => Ok(vec![div(x(1), x(2))?]),
        GalleryId::Q1_3d => {
            let (x1, x2, x3) = (x(1), x(2), x(3));
            let (c1, c2) = (p(0), p(1));
            let (c1s, c2s) = (c1.square(), c2.square());
            let num = c2s.clone() * x1.clone() * (x2.clone() - x3.clone()).square()
                + c1s * (x1.clone() - x2.clone()) * (c2s * (x1.clone() - x3.clone()) * (x2.clone() - x3.clone()) + (x1.clone() - x2.clone()) * x3.clone());
            Ok(vec![div(num, c1 * c2 * (x1 - x2.clone()) * (x2 - x3.clone()) * x3)?])
        }
        GalleryId::Q1Reduced => {
            let (z1, z2) = (x(1), x(2));
            let (c1s, c2s) = (p(0).square(), p(1).square());
            let num = c2s.clone() * z2.square() * (F::one() + z1.clone() + z2.clone())
                + c1s * z1.clone() * (z1.clone() + c2s.clone() * z1.clone() * z2.clone() + c2s.clone() * z2.square());
            Ok(vec![div(num, c2s * z1 * z2)?])
        }
        GalleryId::Gamma => {
            let (x, y, a, b) = (x(1), x(2), p(0), p(1));
            let num = y.square() * (F::one() + x.clone() + y.clone())
                + a * x.clone() * (div(x.clone(), b)? + x.clone() * y.clone() + y.square());
            Ok(vec![div(num, x * y)?])
        }
    }
}

/// Functions with `I(step(p)) = −I(p)`.
pub fn gallery_two_integrals<F: Field>(id: GalleryId, pt: &Point<F>) -> Result<Vec<F>> {
    check_shape(id, pt)?;
    match id {
        GalleryId::H1_3d | GalleryId::H1_4d | GalleryId::H1_3dNa => Ok(vec![div(x1_times_i(id, pt), pt.x[0].clone())?]),
        _ => Ok(Vec::new()),
    }
}

/// `x₁·I` for the H1 maps, `I` being the trace numerator.
fn x1_times_i<F: Field>(id: GalleryId, pt: &Point<F>) -> F {
    let x = |i: usize| pt.x[i - 1].clone();
    let p = |i: usize| pt.p[i].clone();
    let two = k::<F>(2);
    match id {
        GalleryId::H1_3d => (x(1) + x(3)) * (two * x(2) * (x(1) - x(3)) + p(0)),
        GalleryId::H1_4d => {
            let c = p(0);
            (x(1) + x(3)) * (two * x(3) * (x(4) - x(2)) + c.clone()) * ((x(2) - x(4)) * (x(1) - x(3)) + c)
        }
        _ => {
            let (mu, a1, a2) = (p(0), p(1), p(2));
            x(2) * (x(1).square() - x(3).square()) + mu * (x(1) - x(3)) - a1 * x(1) + a2 * x(3)
        }
    }
}

/// Outcome of iterating a gallery map while checking its laws at every step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawRun {
    pub steps_run: usize,
    pub singular_at: Option<usize>,
    /// First step where an invariant differs from its initial value.
    pub invariant_break: Option<usize>,
    /// First step where a 2-integral is not `(−1)^step` times its initial value.
    pub alternation_break: Option<usize>,
}

impl LawRun {
    pub fn holds(&self) -> bool {
        self.invariant_break.is_none() && self.alternation_break.is_none()
    }
}

/// Iterates without keeping the orbit, so heights may grow large.
pub fn run_laws<F: Field>(id: GalleryId, start: &Point<F>, steps: usize) -> Result<LawRun> {
    let inv0 = gallery_invariants(id, start)?;
    let two0 = gallery_two_integrals(id, start)?;
    let mut pt = start.clone();
    let mut run = LawRun { steps_run: 0, singular_at: None, invariant_break: None, alternation_break: None };
    for s in 1..=steps {
        pt = match gallery_step(id, &pt) {
            Ok(next) => next,
            Err(Error::SingularPoint) => {
                run.singular_at = Some(s);
                break;
            }
            Err(e) => return Err(e),
        };
        let (inv, two) = match (gallery_invariants(id, &pt), gallery_two_integrals(id, &pt)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(Error::SingularPoint), _) | (_, Err(Error::SingularPoint)) => {
                run.singular_at = Some(s);
                break;
            }
            (Err(e), _) | (_, Err(e)) => return Err(e),
        };
        run.steps_run = s;
        if inv != inv0 {
            run.invariant_break = Some(s);
        }
        let sign = if s % 2 == 0 { F::one() } else { -F::one() };
        if two.iter().zip(&two0).any(|(a, b)| *a != sign.clone() * b.clone()) {
            run.alternation_break = Some(s);
        }
        if !run.holds() {
            break;
        }
    }
    Ok(run)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, DualRat, GmpRat, Rat};
    use crate::sampling::{random_nonzero_rat, rng};

    fn pt(x: &[Rat], p: &[Rat]) -> Point<Rat> {
        Point::new(x.to_vec(), p.to_vec())
    }

    #[test]
    fn ids_round_trip() {
        for g in GalleryId::ALL {
            assert_eq!(g.as_str().parse::<GalleryId>().unwrap(), g);
            assert_eq!(serde_json::to_string(&g).unwrap(), format!("\"{g}\""));
        }
        assert!("h1_9d".parse::<GalleryId>().is_err());
        assert_eq!(gallery_list().len(), 10);
    }

    #[test]
    fn step_examples() {
        let s = gallery_step(GalleryId::H1_3d, &pt(&[int(1), int(1), int(1)], &[int(2)])).unwrap();
        assert_eq!(s.x, vec![int(-1), int(3), int(0)]);
        let s = gallery_step(GalleryId::H1Delta, &pt(&[int(2), int(3)], &[int(1)])).unwrap();
        assert_eq!(s.x, vec![int(3), int(7)]);
        let s = gallery_step(GalleryId::Gamma, &pt(&[int(1), int(1)], &[int(4), int(1)])).unwrap();
        assert_eq!(s.x, vec![rat(325, 574), rat(50, 41)]);
        let s = gallery_step(GalleryId::H1_4d, &pt(&[int(1), int(2), int(3), int(4)], &[int(2)])).unwrap();
        assert_eq!(s.x, vec![int(-1), rat(12, 5), int(4), rat(15, 4)]);
        let s = gallery_step(GalleryId::H1_3dNa, &pt(&[int(1), int(1), int(2)], &[int(3), int(1), int(2)])).unwrap();
        assert_eq!((s.x, s.p), (vec![int(-1), rat(5, 4), int(3)], vec![int(3), int(4), int(5)]));
        let s = gallery_step(GalleryId::Q1_2d, &pt(&[int(2), int(1)], &[int(2)])).unwrap();
        assert_eq!(s.x, vec![rat(5, 4), rat(5, 8)]);
        let s = gallery_step(GalleryId::Q1_3d, &pt(&[int(3), int(2), int(1)], &[int(2), int(3)])).unwrap();
        assert_eq!((s.x, s.p), (vec![int(6), rat(7, 6), rat(1, 5)], vec![rat(1, 3), rat(1, 2)]));
    }

    #[test]
    fn invariant_examples() {
        let p0 = pt(&[int(1), int(1), int(1)], &[int(2)]);
        assert_eq!(gallery_invariants(GalleryId::H1_3d, &p0).unwrap(), vec![int(1), int(4)]);
        let q = pt(&[int(3), int(2), int(1)], &[int(2), int(3)]);
        assert_eq!(gallery_invariants(GalleryId::Q1_3d, &q).unwrap(), vec![rat(103, 6)]);
        let g = pt(&[int(1), int(1)], &[int(4), int(1)]);
        let g1 = pt(&[rat(325, 574), rat(50, 41)], &[int(4), int(1)]);
        assert_eq!(gallery_invariants(GalleryId::Gamma, &g).unwrap(), vec![int(15)]);
        assert_eq!(gallery_invariants(GalleryId::Gamma, &g1).unwrap(), vec![int(15)]);
        let d = pt(&[int(2), int(3)], &[int(1)]);
        assert_eq!(gallery_invariants(GalleryId::H1Delta, &d).unwrap(), vec![int(5)]);
        let y = pt(&[int(1), int(2), int(3)], &[]);
        assert_eq!(gallery_invariants(GalleryId::H1_3dY, &y).unwrap(), vec![int(4)]);
        let na = pt(&[int(1), int(1), int(2)], &[int(3), int(1), int(2)]);
        assert_eq!(gallery_two_integrals(GalleryId::H1_3dNa, &na).unwrap(), vec![int(-3)]);
    }

    #[test]
    fn laws_hold_at_random_points() {
        let mut r = rng(11);
        for id in GalleryId::ALL {
            let e = id.entry();
            let mut checked = 0;
            for _ in 0..40 {
                let x: Vec<Rat> = (0..e.dim).map(|_| random_nonzero_rat(&mut r)).collect();
                let p: Vec<Rat> = match id {
                    GalleryId::H1_3dNa => vec![random_nonzero_rat(&mut r), random_nonzero_rat(&mut r), random_nonzero_rat(&mut r)],
                    _ => (0..e.params.len()).map(|_| random_nonzero_rat(&mut r)).collect(),
                };
                let Ok(run) = run_laws(id, &pt(&x, &p), 6) else { continue };
                assert!(run.holds(), "{id}: {run:?}");
                checked += 1;
            }
            assert!(checked > 20, "{id}");
        }
    }

    #[test]
    fn y_map_denominator_matters() {
        // with denominator 2y₁ alone J is not conserved
        let (y1, y2, y3) = (int(1), int(2), int(3));
        let printed = &y2 - (&y1 - &y2) * (&y2 + &y3) / (int(2) * &y1);
        let j = |a: &Rat, b: &Rat, c: &Rat| (b - c) * (a + c) / (a - b);
        assert_ne!(j(&y2, &printed, &-y3.clone()), j(&y1, &y2, &y3));
    }

    #[test]
    fn y_map_is_conjugate_to_h1_3d() {
        let c = int(2);
        let to_y = |x: &[Rat]| vec![x[2].clone(), &x[2] - &c / (int(2) * &x[1]), x[0].clone()];
        let mut x = vec![int(1), int(2), int(5)];
        for _ in 0..4 {
            let y = gallery_step(GalleryId::H1_3dY, &pt(&to_y(&x), &[])).unwrap();
            x = gallery_step(GalleryId::H1_3d, &pt(&x, &[c.clone()])).unwrap().x;
            assert_eq!(y.x, to_y(&x));
        }
    }

    #[test]
    fn reduced_is_conjugate_to_q1_3d_and_squares_to_gamma() {
        let mut q = pt(&[int(3), int(2), int(1)], &[int(2), int(1)]);
        let red = |q: &Point<Rat>| pt(&[(&q.x[0] - &q.x[1]) / &q.x[2], &q.x[1] / &q.x[2] - int(1)], &q.p);
        for _ in 0..3 {
            let z = gallery_step(GalleryId::Q1Reduced, &red(&q)).unwrap();
            q = gallery_step(GalleryId::Q1_3d, &q).unwrap();
            assert_eq!(z, red(&q));
        }
        let z = pt(&[int(1), int(1)], &[int(2), int(1)]);
        let twice = gallery_step(GalleryId::Q1Reduced, &gallery_step(GalleryId::Q1Reduced, &z).unwrap()).unwrap();
        let g = gallery_step(GalleryId::Gamma, &pt(&z.x, &[int(4), int(1)])).unwrap();
        assert_eq!(twice.x, g.x);
        assert_eq!(twice.p, z.p);
    }

    #[test]
    fn reduced_identity_at_unit_parameters() {
        let mut r = rng(3);
        for _ in 0..20 {
            let z = pt(&[random_nonzero_rat(&mut r), random_nonzero_rat(&mut r)], &[int(1), int(1)]);
            if let Ok(s) = gallery_step(GalleryId::Q1Reduced, &z) {
                assert_eq!(s, z);
            }
        }
    }

    #[test]
    fn h1_2d_is_involution() {
        let p0 = pt(&[rat(3, 7), rat(-2, 5)], &[int(2)]);
        let twice = gallery_step(GalleryId::H1_2d, &gallery_step(GalleryId::H1_2d, &p0).unwrap()).unwrap();
        assert_eq!(twice, p0);
    }

    #[test]
    fn singular_and_shape_errors() {
        let e = gallery_step(GalleryId::H1_3d, &pt(&[int(1), rat(3, 2), rat(-1, 3)], &[int(2)]));
        assert_eq!(e, Err(Error::SingularPoint));
        assert!(matches!(gallery_step(GalleryId::H1_3d, &pt(&[int(1)], &[int(2)])), Err(Error::Config { .. })));
        let run = run_laws(GalleryId::H1_3d, &pt(&[int(1), int(1), int(1)], &[int(2)]), 10).unwrap();
        assert_eq!((run.steps_run, run.singular_at), (2, Some(3)));
    }

    #[test]
    fn backends_agree() {
        let p0 = pt(&[int(1), int(2), int(3), int(4)], &[int(2)]);
        let g = Point::new(p0.x.iter().map(GmpRat::from_rat).collect(), vec![GmpRat::from_rat(&int(2))]);
        let mut a = p0.clone();
        let mut b = g;
        for _ in 0..8 {
            a = gallery_step(GalleryId::H1_4d, &a).unwrap();
            b = gallery_step(GalleryId::H1_4d, &b).unwrap();
        }
        assert_eq!(a.x, b.x.iter().map(GmpRat::to_rat).collect::<Vec<_>>());
        let d = Point::new(p0.x.iter().map(|v| DualRat::constant(v.clone())).collect(), vec![DualRat::constant(int(2))]);
        assert_eq!(gallery_invariants(GalleryId::H1_4d, &d).unwrap()[1].value, int(336));
    }
}
