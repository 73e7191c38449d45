use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::double_row_parts;
use crate::error::{Error, Result};
use crate::exact::{clear_known_denominator, fmt_rat, parse_rat, rank, serde_rat_vec, DualRat, Field, Poly, RadicalMonomial, Rat, RatFun};
use crate::sampling::{random_vec, retry, substream};
use crate::strip::{iterate_with, Strip, StripConfig, StripState};

use super::double_row_matrix;

#[derive(Clone, Debug)]
pub struct InvariantOptions {
    /// Random field seeds besides the given state, used to drop constant coefficients.
    pub seeds: usize,
    /// Orbit length for the k probe; `None` means `2(n−1)`.
    pub probe_steps: Option<usize>,
    pub rng_seed: u64,
}

impl Default for InvariantOptions {
    fn default() -> Self {
        InvariantOptions { seeds: 5, probe_steps: None, rng_seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    /// Non-constant coefficients of the cleared trace numerator at the state.
    #[serde(with = "serde_rat_vec")]
    pub values: Vec<Rat>,
    /// Power of λ each value multiplies.
    pub powers: Vec<usize>,
    /// Smallest `k` with `I∘φᵏ = I` along the probe; 0 if none was seen.
    pub k_class: Vec<usize>,
    /// Rank of the Jacobian of the values together with `x₁²` / `xₙ²` for
    /// reflection boundaries.
    pub jacobian_rank: usize,
    pub functions: usize,
    pub probe_length: usize,
    /// Cleared denominator as `(root, multiplicity)`.
    pub denominator: Vec<(String, u32)>,
    /// Radical prefactor of the trace left after reduction.
    pub radical: String,
}

struct Trace {
    radical: RadicalMonomial,
    factor: RatFun,
    t: RatFun,
}

fn trace_of(strip: &Strip, state: &StripState) -> Result<Trace> {
    let m = double_row_matrix(strip, state)?;
    let (factor, radical) = m.radical.reduce();
    let (_, t) = m.trace();
    Ok(Trace { radical, factor, t })
}

/// Multiplicity of each structural root in `den`; anything else is a mismatch.
fn multiplicities(den: &Poly, roots: &[Rat]) -> Result<Vec<u32>> {
    let mut rest = den.clone();
    let mut out = Vec::with_capacity(roots.len());
    for r in roots {
        let lin = Poly::linear(r);
        let mut m = 0;
        while let Some(q) = rest.exact_div(&lin) {
            rest = q;
            m += 1;
        }
        out.push(m);
    }
    if rest.as_constant().is_none() {
        return Err(Error::DenominatorMismatch);
    }
    Ok(out)
}

fn padded(mut v: Vec<Rat>, len: usize) -> Vec<Rat> {
    v.resize(len, Rat::zero());
    v
}

/// Monomial coefficients of the interpolating polynomial through
/// `(xs[i], ys[i])`, over any field.
pub fn interpolate<F: Field>(xs: &[Rat], ys: &[F]) -> Result<Vec<F>> {
    let n = xs.len();
    let mut c = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let h = (&xs[i] - &xs[i - j]).inv().ok_or(Error::ZeroDenominator)?;
            c[i] = (c[i].clone() - c[i - 1].clone()) * F::from_rat(&h);
        }
    }
    let mut p: Vec<F> = vec![c[n - 1].clone()];
    for i in (0..n - 1).rev() {
        let x = F::from_rat(&xs[i]);
        let mut q = vec![F::zero(); p.len() + 1];
        for (k, pk) in p.iter().enumerate() {
            q[k + 1] = q[k + 1].clone() + pk.clone();
            q[k] = q[k].clone() - x.clone() * pk.clone();
        }
        q[0] = q[0].clone() + c[i].clone();
        p = q;
    }
    Ok(p)
}

/// Gradients of the cleared trace coefficients at `state`, by DualRat
/// evaluation at numeric λ and interpolation.
fn coefficient_gradients(strip: &Strip, state: &StripState, tr: &Trace, den: &Poly, coeffs: &[Rat]) -> Result<Vec<DualRat>> {
    let len = coeffs.len();
    let n = strip.n;
    let vars: Vec<DualRat> = state.fields.iter().enumerate().map(|(i, v)| DualRat::variable(v.clone(), i, n)).collect();
    let mut xs = Vec::with_capacity(len);
    let mut ys = Vec::with_capacity(len);
    let mut l0 = Rat::from_integer(97.into());
    while xs.len() < len {
        l0 += Rat::one();
        let Ok(sl0) = strip.inv.apply(&l0) else { continue };
        let Some(f0) = tr.factor.eval(&l0) else { continue };
        let lam = DualRat::constant(l0.clone());
        let slam = DualRat::constant(sl0);
        let Ok(parts) = double_row_parts(strip, &vars, &state.params, &lam, &slam) else { continue };
        let y = parts.full().trace() * DualRat::constant(f0 * den.eval(&l0));
        xs.push(l0.clone());
        ys.push(y);
    }
    let out = interpolate(&xs, &ys)?;
    for (d, c) in out.iter().zip(coeffs) {
        if &d.value != c {
            return Err(Error::RadicalMismatch("numeric double row disagrees with the symbolic trace".into()));
        }
    }
    Ok(out)
}

impl InvariantReport {
    /// The same coefficients at another state, cleared by the same denominator.
    pub fn values_at(&self, config: &StripConfig, state: &StripState) -> Result<Vec<Rat>> {
        let strip = Strip::new(config)?;
        let tr = trace_of(&strip, state)?;
        let factors: Vec<(Poly, u32)> =
            self.denominator.iter().map(|(r, m)| parse_rat(r).map(|r| (Poly::linear(&r), *m))).collect::<Result<_>>()?;
        let raw = clear_known_denominator(&tr.t, &factors)?;
        Ok(self.powers.iter().map(|&j| raw.get(j).cloned().unwrap_or_else(Rat::zero)).collect())
    }
}

/// Coefficients of the trace numerator after clearing the structural
/// denominator, filtered to those that vary with the fields, with their
/// periodicity class and the rank of their Jacobian.
pub fn extract_invariants(config: &StripConfig, state: &StripState, opts: &InvariantOptions) -> Result<InvariantReport> {
    let strip = Strip::new(config)?;
    let n = strip.n;
    let roots = strip.quad.id.structural_factors(&strip.inv.mu);
    let base = trace_of(&strip, state)?;

    let mut rng = substream(opts.rng_seed, 0);
    let mut seeds = Vec::with_capacity(opts.seeds);
    for _ in 0..opts.seeds {
        let s = retry(&mut rng, |r| {
            let s = StripState { fields: random_vec(r, n), params: state.params.clone(), step: 0 };
            trace_of(&strip, &s).map(|t| (s, t))
        })
        .ok_or(Error::NoValidSamples)?;
        seeds.push(s);
    }

    let probe_len = opts.probe_steps.unwrap_or(2 * (n - 1));
    let orbit = iterate_with(&strip, state, probe_len);
    let probe: Vec<Trace> = orbit.states.iter().skip(1).map(|s| trace_of(&strip, s)).collect::<Result<_>>()?;

    let all: Vec<&Trace> = std::iter::once(&base).chain(seeds.iter().map(|(_, t)| t)).chain(probe.iter()).collect();
    for t in &all {
        if t.radical != base.radical {
            return Err(Error::RadicalMismatch(format!("{} vs {}", t.radical, base.radical)));
        }
    }
    if base.radical.factors().iter().any(|(r, _)| r.as_constant().is_some()) {
        return Err(Error::RadicalMismatch(format!("parameter radicals do not cancel: {}", base.radical)));
    }

    let mut mult = vec![0u32; roots.len()];
    for t in &all {
        for (m, k) in mult.iter_mut().zip(multiplicities(t.t.den(), &roots)?) {
            *m = (*m).max(k);
        }
    }
    let factors: Vec<(Poly, u32)> = roots.iter().zip(&mult).filter(|(_, m)| **m > 0).map(|(r, m)| (Poly::linear(r), *m)).collect();
    let mut den = Poly::one();
    for (p, m) in &factors {
        den = &den * &p.pow(*m);
    }

    let raw: Vec<Vec<Rat>> = all.iter().map(|t| clear_known_denominator(&t.t, &factors)).collect::<Result<_>>()?;
    let len = raw.iter().map(Vec::len).max().unwrap_or(1);
    let raw: Vec<Vec<Rat>> = raw.into_iter().map(|v| padded(v, len)).collect();
    let fixed = 1 + seeds.len();
    let powers: Vec<usize> = (0..len).filter(|&j| raw[1..fixed].iter().any(|v| v[j] != raw[0][j])).collect();

    let along: Vec<&Vec<Rat>> = std::iter::once(&raw[0]).chain(raw[fixed..].iter()).collect();
    let k_class = powers
        .iter()
        .map(|&j| {
            (1..=probe_len)
                .find(|&k| k < along.len() && (0..along.len() - k).all(|i| along[i + k][j] == along[i][j]))
                .unwrap_or(0)
        })
        .collect();

    let grads = coefficient_gradients(&strip, state, &base, &den, &raw[0])?;
    let mut rows: Vec<Vec<Rat>> = powers.iter().map(|&j| (0..n).map(|i| grads[j].partial(i)).collect()).collect();
    let two = Rat::from_integer(2.into());
    let square_row = |i: usize| {
        let mut r = vec![Rat::zero(); n];
        r[i] = &two * &state.fields[i];
        r
    };
    if strip.minus.id.is_reflection() {
        rows.push(square_row(0));
    }
    if strip.plus.id.is_reflection() {
        rows.push(square_row(n - 1));
    }

    Ok(InvariantReport {
        values: powers.iter().map(|&j| raw[0][j].clone()).collect(),
        powers: powers.clone(),
        k_class,
        jacobian_rank: rank(&rows),
        functions: rows.len(),
        probe_length: orbit.states.len() - 1,
        denominator: roots.iter().zip(&mult).filter(|(_, m)| **m > 0).map(|(r, m)| (fmt_rat(r), *m)).collect(),
        radical: base.radical.to_string(),
    })
}
