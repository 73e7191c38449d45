use num_traits::{One, Zero};
use serde::Serialize;

use super::{BoundaryEquation, BoundarySpec};
use crate::error::{Error, Result};
use crate::exact::{Field, Mat2, RadicalMonomial, Rat, RatFun};
use crate::quadmodel::{lax_matrix_at, QuadEquation, ScaledMatrix};
use crate::sampling::{random_nonzero_rat, random_rat, SampleRng, MAX_RETRIES};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub holds: bool,
    #[serde(with = "crate::exact::serde_rat_vec")]
    pub chi_samples: Vec<Rat>,
    pub lemma_a: bool,
    pub lemma_b: bool,
    pub lemma_c: bool,
}

impl DualityReport {
    pub fn all_pass(&self) -> bool {
        self.holds && self.lemma_a && self.lemma_b && self.lemma_c
    }
}

/// `Some(χ)` if every `num/den` is defined and equal to the same nonzero χ.
fn common_ratio(pairs: &[(Rat, Rat)]) -> Option<Rat> {
    let mut out: Option<Rat> = None;
    for (n, d) in pairs {
        if d.is_zero() {
            return None;
        }
        let r = n / d;
        match &out {
            None => out = Some(r),
            Some(prev) if *prev != r => return None,
            _ => {}
        }
    }
    out.filter(|r| !r.is_zero())
}

fn distinct_triple(rng: &mut SampleRng) -> [Rat; 3] {
    loop {
        let t = [random_rat(rng), random_rat(rng), random_rat(rng)];
        if t[0] != t[1] && t[1] != t[2] && t[0] != t[2] {
            return t;
        }
    }
}

/// Randomized identity test of the duality `q₁·Q(x, y, c, −q₂/q₁) = χ·p(y, x, c)`
/// and of the three analogous eliminations. Samples at which a solve or
/// an evaluation degenerates are redrawn.
pub fn verify_duality<B: BoundaryEquation>(b: &B, samples: usize, rng: &mut SampleRng) -> Result<DualityReport> {
    let quad = b.quad();
    let mut rep = DualityReport { holds: true, chi_samples: Vec::new(), lemma_a: true, lemma_b: true, lemma_c: true };
    let mut good = 0;
    let mut tries = 0;
    while good < samples {
        tries += 1;
        if tries > samples * MAX_RETRIES {
            break;
        }
        let (x, y, z, c0) = (random_rat(rng), random_rat(rng), random_rat(rng), random_rat(rng));
        let a = random_nonzero_rat(rng);
        let Ok(sa) = b.sigma(&a) else { continue };
        let q_eval = |t: [&Rat; 4], w: &Rat| quad.eval(t[0], t[1], t[2], w, &a, &sa);
        let cs = distinct_triple(rng);
        let zs = distinct_triple(rng);

        // main duality: eliminate z, vary c
        let Ok(q2) = b.q(&x, &y, &Rat::zero(), &a) else { continue };
        let Ok(q1) = b.q(&x, &y, &Rat::one(), &a).map(|v| v - &q2) else { continue };
        if q1.is_zero() {
            continue;
        }
        let zz = -&q2 / &q1;
        let main: Result<Vec<(Rat, Rat)>> = cs
            .iter()
            .map(|c| Ok((&q1 * q_eval([&x, &y, c, &Rat::zero()], &zz)?, b.p(&y, &x, c, &a)?)))
            .collect();
        // (a): eliminate x from q, compare with p(c, z, y), vary c
        let la: Option<Result<Vec<(Rat, Rat)>>> = affine_coeffs(|t| b.q(t, &y, &z, &a)).map(|(q3, q4)| {
            let xx = -&q4 / &q3;
            cs.iter().map(|c| Ok((&q3 * q_eval([&xx, &y, c, &Rat::zero()], &z)?, b.p(c, &z, &y, &a)?))).collect()
        });
        // (b): eliminate c via p, compare with q(x, y, z), vary z
        let lb: Option<Result<Vec<(Rat, Rat)>>> = affine_coeffs(|t| b.p(&y, &x, t, &a)).map(|(p1, p2)| {
            let cc = -&p2 / &p1;
            zs.iter().map(|w| Ok((&p1 * q_eval([&x, &y, &cc, &Rat::zero()], w)?, b.q(&x, &y, w, &a)?))).collect()
        });
        // (c): eliminate y via p, compare with q(z, c, x), vary z
        let lc: Option<Result<Vec<(Rat, Rat)>>> = affine_coeffs(|t| b.p(t, &x, &c0, &a)).map(|(p3, p4)| {
            let yy = -&p4 / &p3;
            zs.iter().map(|w| Ok((&p3 * q_eval([&x, &yy, &c0, &Rat::zero()], w)?, b.q(w, &c0, &x, &a)?))).collect()
        });
        let (Ok(main), Some(Ok(la)), Some(Ok(lb)), Some(Ok(lc))) = (main, la, lb, lc) else { continue };
        // a vanishing numerator everywhere means the sample sits on a degenerate
        // locus (e.g. α at the fixed point of σ), not a counterexample
        let bad = |v: &Vec<(Rat, Rat)>| v.iter().any(|(_, d)| d.is_zero()) || v.iter().all(|(n, _)| n.is_zero());
        if [&main, &la, &lb, &lc].into_iter().any(bad) {
            continue;
        }
        match common_ratio(&main) {
            Some(chi) => {
                if rep.chi_samples.len() < 8 {
                    rep.chi_samples.push(chi);
                }
            }
            None => rep.holds = false,
        }
        rep.lemma_a &= common_ratio(&la).is_some();
        rep.lemma_b &= common_ratio(&lb).is_some();
        rep.lemma_c &= common_ratio(&lc).is_some();
        good += 1;
    }
    if good == 0 {
        return Err(Error::NoValidSamples);
    }
    Ok(rep)
}

/// `(coefficient, constant)` of an affine function, `None` if the
/// coefficient vanishes.
fn affine_coeffs(f: impl Fn(&Rat) -> Result<Rat>) -> Option<(Rat, Rat)> {
    let f0 = f(&Rat::zero()).ok()?;
    let k = f(&Rat::one()).ok()? - &f0;
    (!k.is_zero()).then_some((k, f0))
}

/// The boundary matrix read off the dual equation, next to the stored one.
#[derive(Clone, Debug, PartialEq)]
pub struct DualMatrix {
    /// Derived core rescaled to the stored normalization when they agree,
    /// the raw derived core otherwise.
    pub matrix: ScaledMatrix,
    pub raw_core: Mat2<RatFun>,
    pub matches_table: bool,
}

/// Writes `p(y, x, c; λ) = (a y + b) c + (c′ y + d)` so that `c = K[y]` with
/// core `[[−c′, −d], [a, b]]`, and compares with the stored K.
pub fn boundary_matrix_from_dual<B: BoundaryEquation>(b: &B, x: &Rat) -> Result<DualMatrix> {
    let lam = RatFun::lambda();
    let xf = RatFun::constant(x.clone());
    let p = |y: i64, c: i64| b.p(&RatFun::from_int(y), &xf, &RatFun::from_int(c), &lam);
    let (p00, p01, p10, p11) = (p(0, 0)?, p(0, 1)?, p(1, 0)?, p(1, 1)?);
    let bb = p01.clone() - p00.clone();
    let d = p00.clone();
    let cp = p10.clone() - p00.clone();
    let a = p11 - p10 - p01 + p00;
    if a.is_zero() && bb.is_zero() {
        return Err(Error::DegenerateDual);
    }
    let raw = Mat2::new(-cp, -d, a, bb);
    for y in [2i64, -3, 5] {
        let yf = RatFun::from_int(y);
        let num = raw.m[0][0].clone() * yf.clone() + raw.m[0][1].clone();
        let den = raw.m[1][0].clone() * yf.clone() + raw.m[1][1].clone();
        if den.is_zero() {
            continue;
        }
        let c = num.checked_div(&den).ok_or(Error::DegenerateDual)?;
        if !b.p(&yf, &xf, &c, &lam)?.is_zero() {
            return Err(Error::DegenerateDual);
        }
    }
    let stored = b.k_matrix(x, &lam)?;
    let full = stored.core.scale(&stored.scalar);
    let ratio = proportionality(&raw, &full);
    Ok(match ratio {
        Some(s) => DualMatrix {
            matrix: ScaledMatrix::new(raw.scale(&s), RatFun::one(), stored.radical.clone()),
            raw_core: raw,
            matches_table: true,
        },
        None => DualMatrix {
            matrix: ScaledMatrix::new(raw.clone(), RatFun::one(), RadicalMonomial::one()),
            raw_core: raw,
            matches_table: false,
        },
    })
}

/// `Some(s)` with `s·a = b` when `a` and `b` are nonzero and proportional.
fn proportionality(a: &Mat2<RatFun>, b: &Mat2<RatFun>) -> Option<RatFun> {
    let ea: Vec<&RatFun> = a.entries().collect();
    let eb: Vec<&RatFun> = b.entries().collect();
    let i = (0..4).find(|&i| !ea[i].is_zero())?;
    let s = eb[i].checked_div(ea[i])?;
    if s.is_zero() {
        return None;
    }
    (0..4).all(|j| ea[j].clone() * s.clone() == *eb[j]).then_some(s)
}

/// `K(x; λ)·K(x; σ(λ)) = id` as an identity in λ.
pub fn check_k_involution<B: BoundaryEquation>(b: &B, x: &Rat) -> Result<bool> {
    let lam = RatFun::lambda();
    let slam = b.involution().apply_field(&lam)?;
    let prod = b.k_matrix(x, &lam)?.mul(&b.k_matrix(x, &slam)?);
    Ok(prod.equals(&ScaledMatrix::identity()))
}

/// Field independence of `det K(x; λ)` over the given `x` values.
pub fn det_k_is_field_independent<B: BoundaryEquation>(b: &B, xs: &[Rat]) -> Result<bool> {
    let lam = RatFun::lambda();
    let dets: Vec<_> = xs.iter().map(|x| b.k_matrix(x, &lam).map(|k| k.det())).collect::<Result<_>>()?;
    Ok(dets.windows(2).all(|w| w[0] == w[1]))
}

/// `q(x,y,z;α) = h(α)·q(z,y,x;σα)` and `h(α)h(σα) = 1` at one point.
pub fn check_z2(b: &BoundarySpec, x: &Rat, y: &Rat, z: &Rat, a: &Rat) -> Result<bool> {
    let sa = b.sigma(a)?;
    let h = b.z2_factor(a)?;
    let lhs = b.q(x, y, z, a)?;
    let rhs = &h * b.q(z, y, x, &sa)?;
    Ok(lhs == rhs && (&h * b.z2_factor(&sa)?).is_one())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryConsistency {
    pub consistent: bool,
    pub t: Rat,
    pub routes: [Rat; 3],
}

fn tag(face: &'static str) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::DegenerateCorner { .. } => Error::corner(face),
        Error::DegenerateBoundary { .. } => Error::boundary(face),
        other => other,
    }
}

/// Builds the half rhombic dodecahedron from `(x, y, u)` and computes `t`
/// in the three available ways; `β = σ(α)`, `η = σ(λ′)`.
pub fn check_boundary_consistency<B: BoundaryEquation>(
    b: &B,
    x: &Rat,
    y: &Rat,
    u: &Rat,
    a: &Rat,
    lp: &Rat,
) -> Result<BoundaryConsistency> {
    boundary_consistency_with(b, |v| b.sigma(v), x, y, u, a, lp)
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn boundary_consistency_with<B: BoundaryEquation>(
    b: &B,
    sigma: impl Fn(&Rat) -> Result<Rat>,
    x: &Rat,
    y: &Rat,
    u: &Rat,
    a: &Rat,
    lp: &Rat,
) -> Result<BoundaryConsistency> {
    let quad = b.quad();
    let beta = sigma(a)?;
    let eta = sigma(lp)?;
    let f = |s: &Rat, t: &Rat, p: &Rat| b.solve_z(s, t, p);
    let big_f = |u0: &Rat, ut: &Rat, uh: &Rat, p: &Rat, q: &Rat| quad.corner_solve(u0, ut, uh, p, q);
    let z = f(x, y, a).map_err(tag("triangle (x,y,z)"))?;
    let v = big_f(x, y, u, a, lp).map_err(tag("quad (x,y,u,v)"))?;
    let r = f(x, u, lp).map_err(tag("triangle (x,u,r)"))?;
    let w = big_f(y, &z, &v, &beta, lp).map_err(tag("quad (y,z,v,w)"))?;
    let s = big_f(u, &v, &r, a, &eta).map_err(tag("quad (u,v,r,s)"))?;
    let t1 = f(&r, &s, a).map_err(tag("route 1 triangle (r,s,t)"))?;
    let t2 = f(&z, &w, lp).map_err(tag("route 2 triangle (z,w,t)"))?;
    let t3 = big_f(&v, &w, &s, &beta, &eta).map_err(tag("route 3 quad (v,w,s,t)"))?;
    let consistent = t1 == t2 && t2 == t3;
    Ok(BoundaryConsistency { consistent, t: t1.clone(), routes: [t1, t2, t3] })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBoundaryConsistency {
    pub consistent: bool,
    pub e: Rat,
    pub routes: [Rat; 2],
}

/// The two ways of computing `e`: through `q` first and then `p`, or
/// through `p` first.
pub fn check_dual_boundary_consistency<B: BoundaryEquation>(
    b: &B,
    x: &Rat,
    y: &Rat,
    u: &Rat,
    a: &Rat,
    lp: &Rat,
) -> Result<DualBoundaryConsistency> {
    let quad = b.quad();
    let beta = b.sigma(a)?;
    let eta = b.sigma(lp)?;
    let big_f = |u0: &Rat, ut: &Rat, uh: &Rat, p: &Rat, q: &Rat| quad.corner_solve(u0, ut, uh, p, q);
    let v = big_f(x, y, u, lp, a).map_err(tag("quad (x,y,u,v)"))?;
    let r = b.solve_z(x, u, a).map_err(tag("q triangle (x,u,r)"))?;
    let s = big_f(u, &v, &r, lp, &beta).map_err(tag("quad (u,v,r,s)"))?;
    let e1 = b.solve_c(&s, &r, lp).map_err(tag("p triangle (s,r,e)"))?;
    let c = b.solve_c(y, x, lp).map_err(tag("p triangle (y,x,c)"))?;
    let d = big_f(x, &c, u, &eta, a).map_err(tag("quad (x,c,u,d)"))?;
    let e2 = big_f(u, &d, &r, &eta, &beta).map_err(tag("quad (u,d,r,e)"))?;
    Ok(DualBoundaryConsistency { consistent: e1 == e2, e: e1.clone(), routes: [e1, e2] })
}

/// Boundary zero curvature with the stored ε.
pub fn check_boundary_zcc<B: BoundaryEquation>(b: &B, x: &Rat, u: &Rat, a: &Rat) -> Result<bool> {
    boundary_zcc_with_sign(b, x, u, a, b.epsilon())
}

/// `L(r,u;σα,σλ)L(u,x;α,σλ)K(x;λ) = ε·K(r;λ)L(r,u;σα,λ)L(u,x;α,λ)` with
/// `r = f(x, u; α)`.
pub fn boundary_zcc_with_sign<B: BoundaryEquation>(b: &B, x: &Rat, u: &Rat, a: &Rat, eps: i32) -> Result<bool> {
    let id = b.quad().id;
    let mu = b.involution().mu.clone();
    let r = b.solve_z(x, u, a)?;
    let sa = b.sigma(a)?;
    let lam = RatFun::lambda();
    let slam = b.involution().apply_field(&lam)?;
    let lhs = lax_matrix_at(id, &r, u, &sa, &mu, &slam)?
        .mul(&lax_matrix_at(id, u, x, a, &mu, &slam)?)
        .mul(&b.k_matrix(x, &lam)?);
    let rhs = b
        .k_matrix(&r, &lam)?
        .mul(&lax_matrix_at(id, &r, u, &sa, &mu, &lam)?)
        .mul(&lax_matrix_at(id, u, x, a, &mu, &lam)?)
        .scale(&RatFun::from_int(eps.into()));
    Ok(lhs.equals(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundarymodel::{BoundaryId, Involution, InvolutionKind};
    use crate::exact::{int, Poly};
    use crate::quadmodel::{LaxParts, QuadSpec};
    use crate::sampling::rng;

    /// Delegates to a registry row, with optional replacements.
    struct Mutated {
        base: BoundarySpec,
        dual: Option<BoundaryId>,
        k_shift: bool,
    }

    impl BoundaryEquation for Mutated {
        fn label(&self) -> String {
            format!("mutated {}", self.base.id)
        }
        fn quad(&self) -> QuadSpec {
            self.base.quad()
        }
        fn involution(&self) -> &Involution {
            self.base.involution()
        }
        fn q<F: Field>(&self, x: &F, y: &F, z: &F, a: &F) -> Result<F> {
            self.base.q(x, y, z, a)
        }
        fn p<F: Field>(&self, y: &F, x: &F, c: &F, lam: &F) -> Result<F> {
            match self.dual {
                Some(d) => BoundarySpec::new(d, self.base.mu().clone())?.p(y, x, c, lam),
                None => self.base.p(y, x, c, lam),
            }
        }
        fn k_parts<F: Field>(&self, x: &F, lam: &F) -> Result<LaxParts<F>> {
            let mut k = self.base.k_parts(x, lam)?;
            if self.k_shift {
                k.core.m[0][1] = k.core.m[0][1].clone() + F::one();
            }
            Ok(k)
        }
        fn k_radical(&self, lam: &RatFun) -> RadicalMonomial {
            self.base.k_radical(lam)
        }
        fn epsilon(&self) -> i32 {
            self.base.epsilon()
        }
    }

    fn spec(id: BoundaryId, mu: i64) -> BoundarySpec {
        BoundarySpec::new(id, int(mu)).unwrap()
    }

    #[test]
    fn duality_holds_for_registry() {
        let mut r = rng(11);
        for id in BoundaryId::ALL {
            let rep = verify_duality(&spec(id, 3), 30, &mut r).unwrap();
            assert!(rep.all_pass(), "{id}: {rep:?}");
        }
    }

    #[test]
    fn wrong_dual_fails() {
        let m = Mutated { base: spec(BoundaryId::H1Xz, 3), dual: Some(BoundaryId::H1Yzx), k_shift: false };
        let rep = verify_duality(&m, 20, &mut rng(2)).unwrap();
        assert!(!rep.holds);
    }

    #[test]
    fn k_matches_dual_for_registry() {
        for id in BoundaryId::ALL {
            for mu in [3, -2] {
                let b = spec(id, mu);
                let d = boundary_matrix_from_dual(&b, &int(5)).unwrap();
                assert!(d.matches_table, "{id}");
                assert!(d.matrix.equals(&b.k_matrix(&int(5), &RatFun::lambda()).unwrap()), "{id}");
            }
        }
    }

    #[test]
    fn dual_matrix_examples() {
        let lam = RatFun::lambda();
        let d = boundary_matrix_from_dual(&spec(BoundaryId::H1Yzx, 3), &int(2)).unwrap();
        let n = |r: &Mat2<RatFun>| {
            let s = r.m[1][1].inv().unwrap();
            r.scale(&s)
        };
        assert_eq!(n(&d.raw_core), Mat2::new(RatFun::from_int(-1), RatFun::zero(), RatFun::zero(), RatFun::one()));
        let d = boundary_matrix_from_dual(&spec(BoundaryId::H1Xz, 3), &int(2)).unwrap();
        let upper = (RatFun::from_int(3) - lam.clone()).scale(&crate::exact::rat(1, 2));
        assert_eq!(n(&d.raw_core), Mat2::new(RatFun::one(), upper, RatFun::zero(), RatFun::one()));
    }

    #[test]
    fn stored_q1mult_row1_core() {
        let b = spec(BoundaryId::Q1multRow1, 1);
        let k = b.k_matrix(&int(2), &RatFun::lambda()).unwrap();
        let lam = RatFun::lambda();
        let top_right = (lam.square() + RatFun::one()).scale(&int(2)).checked_div(&lam).unwrap();
        assert_eq!(k.core.m[0][0], -lam.clone());
        assert_eq!(k.core.m[0][1], top_right);
        assert_eq!(k.core.m[1][1], lam.inv().unwrap());
    }

    #[test]
    fn k_involution_and_det() {
        let xs: Vec<Rat> = [1, 2, -3, 5, 7].map(int).to_vec();
        for id in BoundaryId::ALL {
            let b = spec(id, 3);
            for x in &xs {
                assert!(check_k_involution(&b, x).unwrap(), "{id}");
            }
            assert!(det_k_is_field_independent(&b, &xs).unwrap(), "{id}");
        }
        let m = Mutated { base: spec(BoundaryId::H1Xz, 3), dual: None, k_shift: true };
        assert!(!check_k_involution(&m, &int(2)).unwrap());
        let e = check_k_involution(&spec(BoundaryId::H1Xz, 3), &int(0)).unwrap_err();
        assert_eq!(e.kind(), "degenerate-boundary");
    }

    #[test]
    fn q1add_row2_det_is_one() {
        let b = spec(BoundaryId::Q1addRow2, 3);
        let (rad, d) = b.k_matrix(&int(2), &RatFun::lambda()).unwrap().det();
        assert!(rad.is_one());
        assert_eq!(d, RatFun::one());
    }

    #[test]
    fn z2_symmetry() {
        let mut r = rng(4);
        for id in BoundaryId::ALL {
            let b = spec(id, 2);
            for _ in 0..20 {
                let (x, y, z, a) = (random_rat(&mut r), random_rat(&mut r), random_rat(&mut r), random_nonzero_rat(&mut r));
                assert!(check_z2(&b, &x, &y, &z, &a).unwrap(), "{id}");
            }
        }
    }

    #[test]
    fn consistency_checks_pass_for_registry() {
        let mut r = rng(8);
        for id in BoundaryId::ALL {
            let b = spec(id, 3);
            let mut ok = 0;
            while ok < 10 {
                let v: Vec<Rat> = (0..5).map(|_| random_nonzero_rat(&mut r)).collect();
                let (Ok(bc), Ok(dbc)) = (
                    check_boundary_consistency(&b, &v[0], &v[1], &v[2], &v[3], &v[4]),
                    check_dual_boundary_consistency(&b, &v[0], &v[1], &v[2], &v[3], &v[4]),
                ) else {
                    continue;
                };
                assert!(bc.consistent, "{id} {bc:?}");
                assert!(dbc.consistent, "{id} {dbc:?}");
                ok += 1;
            }
        }
    }

    #[test]
    fn identity_sigma_breaks_consistency() {
        let b = spec(BoundaryId::H1Yzx, 3);
        let ident = |v: &Rat| Ok(v.clone());
        let mut r = rng(9);
        let mut failures = 0;
        for _ in 0..20 {
            let v: Vec<Rat> = (0..5).map(|_| random_nonzero_rat(&mut r)).collect();
            if let Ok(bc) = boundary_consistency_with(&b, ident, &v[0], &v[1], &v[2], &v[3], &v[4]) {
                failures += usize::from(!bc.consistent);
            }
        }
        assert!(failures > 0);
    }

    #[test]
    fn wrong_dual_breaks_dual_consistency() {
        let m = Mutated { base: spec(BoundaryId::Q1multRow3, 2), dual: Some(BoundaryId::Q1multRow1), k_shift: false };
        let v = [3, 2, 5, 7, 11].map(int);
        let dbc = check_dual_boundary_consistency(&m, &v[0], &v[1], &v[2], &v[3], &v[4]).unwrap();
        assert!(!dbc.consistent);
    }

    #[test]
    fn constant_field_reports_error() {
        let b = spec(BoundaryId::H1Yzx, 3);
        let z = int(0);
        let e = check_boundary_consistency(&b, &z, &z, &z, &int(1), &int(2)).unwrap_err();
        assert_eq!(e.kind(), "degenerate-boundary");
    }

    #[test]
    fn boundary_zcc_needs_the_stored_sign() {
        let mut r = rng(10);
        for id in BoundaryId::ALL {
            let b = spec(id, 3);
            let mut ok = 0;
            while ok < 10 {
                let (x, u, a) = (random_nonzero_rat(&mut r), random_nonzero_rat(&mut r), random_nonzero_rat(&mut r));
                let Ok(good) = check_boundary_zcc(&b, &x, &u, &a) else { continue };
                assert!(good, "{id}");
                assert!(!boundary_zcc_with_sign(&b, &x, &u, &a, -b.epsilon()).unwrap(), "{id}");
                ok += 1;
            }
        }
    }

    #[test]
    fn involution_field_form_matches() {
        let inv = Involution::new(InvolutionKind::Additive, int(3)).unwrap();
        let s = inv.apply_field(&RatFun::lambda()).unwrap();
        assert_eq!(s, RatFun::from_poly(Poly::new(vec![int(6), int(-1)])));
    }
}
