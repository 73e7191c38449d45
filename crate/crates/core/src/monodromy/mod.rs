//! Single- and double-row monodromy matrices, the conjugation theorem and
//! invariant extraction from the trace.

mod invariants;


use crate::boundarymodel::BoundaryEquation;
use crate::error::{Error, Result};
use crate::exact::{Field, RadicalMonomial, Rat, RatFun};
use crate::quadmodel::{lax_matrix_at, LaxParts, ScaledMatrix};
use crate::strip::{Strip, StripConfig, StripState};

pub use invariants::{extract_invariants, interpolate, InvariantOptions, InvariantReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `L_{n,n−1} ⋯ L_{2,1}`.
    Forward,
    /// `L_{1,2} ⋯ L_{n−1,n}`.
    Reverse,
}

/// `𝒯(λ)` at one state, with the conjugator `E` when the next `x′₁` exists.
#[derive(Clone, Debug)]
pub struct DoubleRow {
    pub matrix: ScaledMatrix,
    pub conjugator: Option<ScaledMatrix>,
    pub config: StripConfig,
}

fn lax(strip: &Strip, xt: &Rat, x: &Rat, a: &Rat, lam: &RatFun) -> Result<ScaledMatrix> {
    lax_matrix_at(strip.quad.id, xt, x, a, &strip.inv.mu, lam)
}

pub fn single_row_at(strip: &Strip, state: &StripState, dir: Direction, lam: &RatFun) -> Result<ScaledMatrix> {
    let mut out = ScaledMatrix::identity();
    for j in 1..strip.n {
        let (x, xn, a) = (state.x(j), state.x(j + 1), state.alpha(j));
        out = match dir {
            Direction::Forward => lax(strip, xn, x, a, lam)?.mul(&out),
            Direction::Reverse => out.mul(&lax(strip, x, xn, a, lam)?),
        };
    }
    Ok(out)
}

/// Single-row monodromy at symbolic λ.
pub fn single_row_t(config: &StripConfig, state: &StripState, dir: Direction) -> Result<ScaledMatrix> {
    single_row_at(&Strip::new(config)?, state, dir, &RatFun::lambda())
}

/// `K₋(x₁; σλ) · Ť(σλ) · K₊(xₙ; λ) · T(λ)`.
pub fn double_row_matrix(strip: &Strip, state: &StripState) -> Result<ScaledMatrix> {
    let lam = RatFun::lambda();
    let slam = strip.inv.apply_field(&lam)?;
    let km = strip.minus.k_matrix(state.x(1), &slam)?;
    let kp = strip.plus.k_matrix(state.x(strip.n), &lam)?;
    let rev = single_row_at(strip, state, Direction::Reverse, &slam)?;
    let fwd = single_row_at(strip, state, Direction::Forward, &lam)?;
    Ok(km.mul(&rev).mul(&kp).mul(&fwd))
}

/// `E = L(x′₁, x₂; σα₁, λ) · L(x₂, x₁; α₁, λ)`.
pub fn conjugator(strip: &Strip, state: &StripState, x1_next: &Rat) -> Result<ScaledMatrix> {
    let lam = RatFun::lambda();
    let a1 = state.alpha(1);
    let sa1 = strip.inv.apply(a1)?;
    Ok(lax(strip, x1_next, state.x(2), &sa1, &lam)?.mul(&lax(strip, state.x(2), state.x(1), a1, &lam)?))
}

pub fn double_row(config: &StripConfig, state: &StripState) -> Result<DoubleRow> {
    let strip = Strip::new(config)?;
    let matrix = double_row_matrix(&strip, state)?;
    let conj = strip
        .minus
        .solve_z(state.x(1), state.x(2), state.alpha(1))
        .and_then(|x1| conjugator(&strip, state, &x1))
        .ok();
    Ok(DoubleRow { matrix, conjugator: conj, config: config.clone() })
}

/// `𝔱(λ) = Tr 𝒯(λ)` as (reduced radical, rational function).
pub fn trace_t(dr: &DoubleRow) -> (RadicalMonomial, RatFun) {
    dr.matrix.trace()
}

/// The scalar `ε₋ε₊ · ℓ(σα₁,λ)ℓ(σα_R,σλ) / (ℓ(α₁,σλ)ℓ(α_R,λ))` of the
/// conjugation relation.
pub fn conjugation_scalar(strip: &Strip, state: &StripState) -> Result<RatFun> {
    let id = strip.quad.id;
    let lam = RatFun::lambda();
    let slam = strip.inv.apply_field(&lam)?;
    let mu = RatFun::constant(strip.inv.mu.clone());
    let f = |a: &Rat| RatFun::constant(a.clone());
    let a1 = state.alpha(1);
    let ar = strip.right_param(&state.params)?;
    let (sa1, sar) = (strip.inv.apply(a1)?, strip.inv.apply(&ar)?);
    let num = id.ell(&f(&sa1), &lam, &mu)? * id.ell(&f(&sar), &slam, &mu)?;
    let den = id.ell(&f(a1), &slam, &mu)? * id.ell(&f(&ar), &lam, &mu)?;
    let eps = strip.minus.epsilon() * strip.plus.epsilon();
    Ok(num.checked_div(&den).ok_or(Error::ZeroDenominator)? * RatFun::from_int(eps.into()))
}

/// `𝒯′(λ)·E = scalar · E·𝒯(λ)` between a state and a claimed next state.
pub fn check_conjugation_between(config: &StripConfig, state: &StripState, next: &StripState) -> Result<bool> {
    let strip = Strip::new(config)?;
    let t = double_row_matrix(&strip, state)?;
    let tp = double_row_matrix(&strip, next)?;
    let e = conjugator(&strip, state, next.x(1))?;
    let s = conjugation_scalar(&strip, state)?;
    Ok(tp.mul(&e).equals(&e.mul(&t).scale(&s)))
}

pub fn check_conjugation(config: &StripConfig, state: &StripState) -> Result<bool> {
    let next = Strip::new(config)?.step_up(state)?;
    check_conjugation_between(config, state, &next)
}

/// Trace law along `steps` steps: one-step `𝔱′ = ε₋ε₊𝔱` when the ℓ-ratio is
/// 1, otherwise `(ε₋ε₊)^{n−1}` after each block of `n−1` steps.
pub fn check_trace_ratio(config: &StripConfig, state: &StripState, steps: usize) -> Result<bool> {
    if steps == 0 {
        return Ok(true);
    }
    let strip = Strip::new(config)?;
    let eps = strip.minus.epsilon() * strip.plus.epsilon();
    let ratio_one = conjugation_scalar(&strip, state)? == RatFun::from_int(eps.into());
    let block = if ratio_one { 1 } else { strip.n - 1 };
    let factor = RatFun::from_int(i64::from(eps).pow(block as u32));
    let mut states = vec![state.clone()];
    for _ in 0..steps {
        states.push(strip.step_up(states.last().unwrap())?);
    }
    let traces: Vec<_> = states.iter().map(|s| double_row_matrix(&strip, s).map(|m| m.trace())).collect::<Result<_>>()?;
    for i in 0..traces.len().saturating_sub(block) {
        let (r0, t0) = &traces[i];
        let (r1, t1) = &traces[i + block];
        if r0 != r1 || *t1 != factor.clone() * t0.clone() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The double row over any field with numeric spectral values `lam` and
/// `slam = σ(lam)`, radicals dropped.
pub fn double_row_parts<F: Field>(strip: &Strip, fields: &[F], params: &[Rat], lam: &F, slam: &F) -> Result<LaxParts<F>> {
    let id = strip.quad.id;
    let mu = F::from_rat(&strip.inv.mu);
    let a = |j: usize| F::from_rat(&params[j - 1]);
    let x = |j: usize| &fields[j - 1];
    let mut fwd = LaxParts::identity();
    let mut rev = LaxParts::identity();
    for j in 1..strip.n {
        fwd = id.lax_parts(x(j + 1), x(j), &a(j), lam, &mu)?.mul(&fwd);
        rev = rev.mul(&id.lax_parts(x(j), x(j + 1), &a(j), slam, &mu)?);
    }
    let km = strip.minus.k_parts(x(1), slam)?;
    let kp = strip.plus.k_parts(x(strip.n), lam)?;
    Ok(km.mul(&rev).mul(&kp).mul(&fwd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::boundarymodel::BoundaryId;
    use crate::exact::{int, Mat2, Poly};
    use crate::strip::Mode;

    fn h1_auto(n: usize) -> StripConfig {
        StripConfig::h1(n, int(3), Mode::Autonomous(int(2)))
    }

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn inv_lin(r: i64, k: i32) -> RatFun {
        RatFun::from_poly(Poly::linear(&int(r))).pow(-k)
    }

    #[test]
    fn single_row_n2() {
        let c = StripConfig::h1(2, int(3), Mode::Autonomous(int(1)));
        let s = StripState::initial(&c, ints(&[0, 1])).unwrap();
        let lam = RatFun::lambda();
        let f = single_row_t(&c, &s, Direction::Forward).unwrap();
        let one_minus = RatFun::one() - lam.clone();
        assert_eq!(f.core, Mat2::new(RatFun::from_int(0), one_minus.clone(), RatFun::one(), RatFun::from_int(-1)));
        let r = single_row_t(&c, &s, Direction::Reverse).unwrap();
        assert_eq!(r.core, Mat2::new(RatFun::one(), one_minus, RatFun::one(), RatFun::from_int(0)));
        let ell = crate::quadmodel::QuadId::H1.ell(&RatFun::one(), &lam, &RatFun::from_int(3)).unwrap();
        let expect = ScaledMatrix::new(Mat2::identity(), ell, RadicalMonomial::one());
        assert!(f.mul(&r).equals(&expect));
    }

    #[test]
    fn h1_traces() {
        let c = h1_auto(3);
        let s = StripState::initial(&c, ints(&[1, 1, 1])).unwrap();
        let (rad, t) = trace_t(&double_row(&c, &s).unwrap());
        assert!(rad.is_one());
        assert_eq!(t, inv_lin(3, 1).scale(&int(4)));
        let c = h1_auto(4);
        let s = StripState::initial(&c, ints(&[1, 2, 3, 4])).unwrap();
        let (rad, t) = trace_t(&double_row(&c, &s).unwrap());
        assert_eq!(rad.factors().len(), 2);
        assert_eq!(t, inv_lin(3, 3).scale(&int(-336)));
    }

    #[test]
    fn q1mult_trace() {
        let c = StripConfig::new(
            crate::quadmodel::QuadId::Q1Mult,
            BoundaryId::Q1multRow1,
            BoundaryId::Q1multRow3,
            3,
            int(1),
            Mode::General(ints(&[2, 3])),
        );
        let s = StripState::initial(&c, ints(&[3, 2, 1])).unwrap();
        let (rad, t) = trace_t(&double_row(&c, &s).unwrap());
        assert!(rad.is_one(), "{rad}");
        // μ²((λ²+μ²)²C + 2λ²μ²P)/(λ²−μ²)² with C = 103/6, P = 50/6
        let l = RatFun::lambda();
        let c_val = RatFun::constant(crate::exact::rat(103, 6));
        let p_val = RatFun::constant(crate::exact::rat(50, 6));
        let l2 = l.square();
        let num = (l2.clone() + RatFun::one()).square() * c_val + l2.clone() * p_val * RatFun::from_int(2);
        let den = (l2 - RatFun::one()).square();
        assert_eq!(t, num.checked_div(&den).unwrap());
    }

    #[test]
    fn conjugation_examples() {
        let c = h1_auto(3);
        let s = StripState::initial(&c, ints(&[1, 1, 1])).unwrap();
        assert!(check_conjugation(&c, &s).unwrap());
        let c = StripConfig::h1(3, int(3), Mode::General(ints(&[1, 2])));
        let s = StripState::initial(&c, ints(&[1, 1, 2])).unwrap();
        assert!(check_conjugation(&c, &s).unwrap());
        let strip = Strip::new(&c).unwrap();
        assert_eq!(conjugation_scalar(&strip, &s).unwrap(), RatFun::from_int(-1));
        let mut next = strip.step_up(&s).unwrap();
        next.fields[1] = next.fields[1].clone() + Rat::one();
        assert!(!check_conjugation_between(&c, &s, &next).unwrap());
    }

    #[test]
    fn trace_ratio_examples() {
        let c = h1_auto(3);
        let s = StripState::initial(&c, ints(&[1, 1, 1])).unwrap();
        assert!(check_trace_ratio(&c, &s, 2).unwrap());
        assert!(check_trace_ratio(&c, &s, 0).unwrap());
    }

    #[test]
    fn numeric_parts_match_symbolic() {
        let c = h1_auto(4);
        let strip = Strip::new(&c).unwrap();
        let s = StripState::initial(&c, ints(&[1, 2, 3, 4])).unwrap();
        let sym = double_row_matrix(&strip, &s).unwrap();
        let (factor, _) = sym.radical.reduce();
        let l0 = int(11);
        let sl0 = strip.inv.apply(&l0).unwrap();
        let num = double_row_parts(&strip, &s.fields, &s.params, &l0, &sl0).unwrap();
        let expect = (factor.clone() * sym.scalar.clone() * sym.core.trace()).eval(&l0).unwrap();
        assert_eq!(num.full().trace() * factor.eval(&l0).unwrap(), expect);
    }
}
