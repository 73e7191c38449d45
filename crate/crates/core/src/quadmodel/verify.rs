use serde::Serialize;

use super::{lax_matrix, LaxParts, QuadEquation, QuadId};
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::sampling::{random_nonzero_rat, random_rat, SampleRng, MAX_RETRIES};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub affine_linear: bool,
    pub d4_omega: bool,
    pub d4_delta: bool,
    pub tetrahedron: bool,
}

impl SymmetryReport {
    pub fn all_pass(&self) -> bool {
        self.affine_linear && self.d4_omega && self.d4_delta && self.tetrahedron
    }
}

/// Randomized checks of affine-linearity, the two D4 relations with the
/// stored signs, and the tetrahedron property.
pub fn check_symmetries<Q: QuadEquation>(eq: &Q, samples: usize, rng: &mut SampleRng) -> SymmetryReport {
    let (omega, delta) = eq.d4_signs();
    let (omega, delta) = (Rat::from_integer(omega.into()), Rat::from_integer(delta.into()));
    let mut rep = SymmetryReport { affine_linear: true, d4_omega: true, d4_delta: true, tetrahedron: true };
    let mut done = 0;
    for _ in 0..samples * 4 {
        if done == samples {
            break;
        }
        let v: Vec<Rat> = (0..4).map(|_| random_rat(rng)).collect();
        let (a, b) = (random_nonzero_rat(rng), random_nonzero_rat(rng));
        let Ok(q) = eq.eval(&v[0], &v[1], &v[2], &v[3], &a, &b) else { continue };
        // second divided difference along each slot on a random triple
        for slot in 0..4 {
            let t: Vec<Rat> = (0..3).map(|_| random_rat(rng)).collect();
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                continue;
            }
            let at = |x: &Rat| {
                let mut w = v.clone();
                w[slot] = x.clone();
                eq.eval(&w[0], &w[1], &w[2], &w[3], &a, &b)
            };
            let (Ok(f0), Ok(f1), Ok(f2)) = (at(&t[0]), at(&t[1]), at(&t[2])) else { continue };
            let d1 = (&f1 - &f0) / (&t[1] - &t[0]);
            let d2 = (&f2 - &f1) / (&t[2] - &t[1]);
            if d1 != d2 {
                rep.affine_linear = false;
            }
        }
        match eq.eval(&v[1], &v[0], &v[3], &v[2], &a, &b) {
            Ok(w) if q == &omega * &w => {}
            _ => rep.d4_omega = false,
        }
        match eq.eval(&v[0], &v[2], &v[1], &v[3], &b, &a) {
            Ok(w) if q == &delta * &w => {}
            _ => rep.d4_delta = false,
        }
        done += 1;
    }
    rep.tetrahedron = tetrahedron(eq, samples.max(20), rng);
    rep
}

fn tetrahedron<Q: QuadEquation>(eq: &Q, samples: usize, rng: &mut SampleRng) -> bool {
    let mut good = 0;
    for _ in 0..samples * MAX_RETRIES {
        if good == samples {
            return true;
        }
        let (ut, uh, v) = (random_rat(rng), random_rat(rng), random_rat(rng));
        let (a, b, l) = (random_nonzero_rat(rng), random_nonzero_rat(rng), random_nonzero_rat(rng));
        let values: Vec<Rat> = (0..12)
            .filter_map(|_| cube_routes(eq, &random_rat(rng), &ut, &uh, &v, &a, &b, &l).ok())
            .map(|r| r[0].clone())
            .take(5)
            .collect();
        if values.len() < 5 {
            continue;
        }
        if values.iter().any(|x| *x != values[0]) {
            return false;
        }
        good += 1;
    }
    good == samples
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeResult {
    pub consistent: bool,
    pub value: Option<Rat>,
    pub routes: [Rat; 3],
}

/// The three evaluations of the cube's top far corner from `(u, ũ, û, v)`.
#[allow(clippy::too_many_arguments)]
pub fn cube_routes<Q: QuadEquation>(
    eq: &Q,
    u: &Rat,
    ut: &Rat,
    uh: &Rat,
    v: &Rat,
    a: &Rat,
    b: &Rat,
    l: &Rat,
) -> Result<[Rat; 3]> {
    let tag = |face: &'static str| move |e: Error| relabel(e, face);
    let w = eq.corner_solve(u, ut, uh, a, b).map_err(tag("bottom (α,β)"))?;
    let vt = eq.corner_solve(u, ut, v, a, l).map_err(tag("front (α,λ)"))?;
    let vh = eq.corner_solve(u, uh, v, b, l).map_err(tag("side (β,λ)"))?;
    let r1 = eq.corner_solve(ut, &w, &vt, b, l).map_err(tag("route 1 (ũ face)"))?;
    let r2 = eq.corner_solve(uh, &w, &vh, a, l).map_err(tag("route 2 (û face)"))?;
    let r3 = eq.corner_solve(v, &vt, &vh, a, b).map_err(tag("route 3 (top)"))?;
    Ok([r1, r2, r3])
}

fn relabel(e: Error, face: &str) -> Error {
    match e {
        Error::DegenerateCorner { .. } => Error::corner(face),
        other => other,
    }
}

#[allow(clippy::too_many_arguments)]
pub fn check_3d_consistency<Q: QuadEquation>(
    eq: &Q,
    u: &Rat,
    ut: &Rat,
    uh: &Rat,
    v: &Rat,
    a: &Rat,
    b: &Rat,
    l: &Rat,
) -> Result<CubeResult> {
    let routes = cube_routes(eq, u, ut, uh, v, a, b, l)?;
    let consistent = routes[0] == routes[1] && routes[1] == routes[2];
    Ok(CubeResult { consistent, value: consistent.then(|| routes[0].clone()), routes })
}

/// Zero curvature `L(ŵ,ũ;β)L(ũ,u;α) = L(ŵ,û;α)L(û,u;β)` for explicit corner
/// data, symbolically in λ and at each λ sample.
#[allow(clippy::too_many_arguments)]
pub fn zero_curvature_holds(
    id: QuadId,
    u: &Rat,
    ut: &Rat,
    uh: &Rat,
    w: &Rat,
    a: &Rat,
    b: &Rat,
    mu: &Rat,
    samples: &[Rat],
) -> Result<bool> {
    let lhs = lax_matrix(id, w, ut, b, mu)?.mul(&lax_matrix(id, ut, u, a, mu)?);
    let rhs = lax_matrix(id, w, uh, a, mu)?.mul(&lax_matrix(id, uh, u, b, mu)?);
    if !lhs.equals(&rhs) {
        return Ok(false);
    }
    let parts = |xt: &Rat, x: &Rat, p: &Rat, l: &Rat| id.lax_parts(xt, x, p, l, mu);
    for l in samples {
        let left: LaxParts<Rat> = parts(w, ut, b, l)?.mul(&parts(ut, u, a, l)?);
        let right = parts(w, uh, a, l)?.mul(&parts(uh, u, b, l)?);
        if left.full() != right.full() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[allow(clippy::too_many_arguments)]
pub fn check_zero_curvature<Q: QuadEquation>(
    eq: &Q,
    id: QuadId,
    u: &Rat,
    ut: &Rat,
    uh: &Rat,
    a: &Rat,
    b: &Rat,
    mu: &Rat,
    samples: &[Rat],
) -> Result<bool> {
    let w = eq.corner_solve(u, ut, uh, a, b)?;
    zero_curvature_holds(id, u, ut, uh, &w, a, b, mu, samples)
}

/// Debug helper used in reports.
#[cfg(test)]
pub(crate) fn show(r: &[Rat]) -> String {
    use crate::exact::fmt_rat;
    r.iter().map(fmt_rat).collect::<Vec<_>>().join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, Field};
    use crate::quadmodel::QuadSpec;
    use crate::sampling::rng;

    /// H1 with Q + 1: still affine, breaks the δ relation.
    struct ShiftedH1;

    impl QuadEquation for ShiftedH1 {
        fn label(&self) -> String {
            "h1+1".into()
        }
        fn eval<F: Field>(&self, u: &F, ut: &F, uh: &F, w: &F, a: &F, b: &F) -> Result<F> {
            Ok(QuadSpec::new(QuadId::H1).eval(u, ut, uh, w, a, b)? + F::one())
        }
        fn d4_signs(&self) -> (i32, i32) {
            (1, -1)
        }
    }

    /// H1 with β−α shifted by one on faces carrying the parameter pair (β, λ=7).
    struct OneFaceOff;

    impl QuadEquation for OneFaceOff {
        fn label(&self) -> String {
            "h1 one face off".into()
        }
        fn eval<F: Field>(&self, u: &F, ut: &F, uh: &F, w: &F, a: &F, b: &F) -> Result<F> {
            let base = QuadSpec::new(QuadId::H1).eval(u, ut, uh, w, a, b)?;
            if *b == F::from_int(7) && *a == F::from_int(3) {
                Ok(base + F::one())
            } else {
                Ok(base)
            }
        }
        fn d4_signs(&self) -> (i32, i32) {
            (1, -1)
        }
    }

    #[test]
    fn registry_symmetries_pass() {
        for id in QuadId::ALL {
            let rep = check_symmetries(&QuadSpec::new(id), 50, &mut rng(1));
            assert!(rep.all_pass(), "{id}: {rep:?}");
        }
    }

    #[test]
    fn wrong_d4_sign_is_caught() {
        struct Flipped;
        impl QuadEquation for Flipped {
            fn label(&self) -> String {
                "h1 (1,1)".into()
            }
            fn eval<F: Field>(&self, u: &F, ut: &F, uh: &F, w: &F, a: &F, b: &F) -> Result<F> {
                QuadSpec::new(QuadId::H1).eval(u, ut, uh, w, a, b)
            }
            fn d4_signs(&self) -> (i32, i32) {
                (1, 1)
            }
        }
        let rep = check_symmetries(&Flipped, 20, &mut rng(2));
        assert!(rep.d4_omega && !rep.d4_delta);
    }

    #[test]
    fn shifted_h1_fails_only_d4() {
        let rep = check_symmetries(&ShiftedH1, 30, &mut rng(3));
        assert!(rep.affine_linear);
        assert!(!rep.d4_delta);
    }

    #[test]
    fn cube_witness() {
        let h1 = QuadSpec::new(QuadId::H1);
        let r = check_3d_consistency(&h1, &int(0), &int(1), &int(3), &int(5), &int(2), &int(3), &int(7)).unwrap();
        assert!(r.consistent);
        assert_eq!(r.value, Some(rat(19, 3)));
        // hand-computed intermediates
        assert_eq!(h1.corner_solve(&int(0), &int(1), &int(3), &int(2), &int(3)).unwrap(), rat(-1, 2));
        assert_eq!(h1.corner_solve(&int(0), &int(1), &int(5), &int(2), &int(7)).unwrap(), rat(-5, 4));
        assert_eq!(h1.corner_solve(&int(0), &int(3), &int(5), &int(3), &int(7)).unwrap(), int(-2));
    }

    #[test]
    fn cube_degenerate_bottom() {
        let h1 = QuadSpec::new(QuadId::H1);
        let e = check_3d_consistency(&h1, &int(0), &int(2), &int(2), &int(5), &int(3), &int(3), &int(7)).unwrap_err();
        assert_eq!(e, Error::corner("bottom (α,β)"));
    }

    #[test]
    fn cube_mutated_face_is_inconsistent() {
        let r = check_3d_consistency(&OneFaceOff, &int(0), &int(1), &int(3), &int(5), &int(2), &int(3), &int(7)).unwrap();
        assert!(!r.consistent, "{}", show(&r.routes));
    }

    #[test]
    fn zero_curvature_examples() {
        let samples: Vec<Rat> = (0..4).map(|k| rat(2 * k + 1, 3)).collect();
        let h1 = QuadSpec::new(QuadId::H1);
        assert!(check_zero_curvature(&h1, QuadId::H1, &int(0), &int(1), &int(3), &int(2), &int(3), &int(5), &samples).unwrap());
        let w = h1.corner_solve(&int(0), &int(1), &int(3), &int(2), &int(3)).unwrap() + int(1);
        assert!(!zero_curvature_holds(QuadId::H1, &int(0), &int(1), &int(3), &w, &int(2), &int(3), &int(5), &samples).unwrap());
        let q = QuadSpec::new(QuadId::Q1Mult);
        let (u, ut, uh) = (rat(3, 7), rat(-2, 5), int(4));
        assert!(check_zero_curvature(&q, QuadId::Q1Mult, &u, &ut, &uh, &rat(5, 2), &int(-3), &rat(2, 3), &samples).unwrap());
    }
}
