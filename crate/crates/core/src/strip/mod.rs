//! Open boundary reductions on the strip: the maps `x ↦ x′` with their
//! parameter updates, their inverses and orbit plumbing.

mod faces;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::boundarymodel::{BoundaryEquation, BoundaryId, BoundarySpec, Involution};
use crate::error::{Error, Result};
use crate::exact::{serde_rat, serde_rat_vec, Rat};
use crate::quadmodel::{QuadEquation, QuadId, QuadSpec};

pub use faces::{Face, FaceKind, Slot};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// `αⱼ = α` for odd `j`, `σ(α)` for even `j`.
    Autonomous(#[serde(with = "serde_rat")] Rat),
    /// `α₁ … α_{n−1}`.
    General(#[serde(with = "serde_rat_vec")] Vec<Rat>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripConfig {
    pub quad: QuadId,
    pub boundary_minus: BoundaryId,
    pub boundary_plus: BoundaryId,
    pub n: usize,
    #[serde(with = "serde_rat")]
    pub mu: Rat,
    pub mode: Mode,
}

impl StripConfig {
    pub fn new(quad: QuadId, minus: BoundaryId, plus: BoundaryId, n: usize, mu: Rat, mode: Mode) -> Self {
        StripConfig { quad, boundary_minus: minus, boundary_plus: plus, n, mu, mode }
    }

    /// H1 with `q₋ = x + z` and `q₊ = y(z−x) + α − μ`.
    pub fn h1(n: usize, mu: Rat, mode: Mode) -> Self {
        Self::new(QuadId::H1, BoundaryId::H1Xz, BoundaryId::H1Yzx, n, mu, mode)
    }

    pub fn is_general(&self) -> bool {
        matches!(self.mode, Mode::General(_))
    }

    /// α₁ … α_{n−1} at step 0.
    pub fn initial_params(&self) -> Result<Vec<Rat>> {
        let strip = Strip::new(self)?;
        match &self.mode {
            Mode::Autonomous(a) => {
                let sa = strip.inv.apply(a)?;
                Ok((1..self.n).map(|j| if j % 2 == 1 { a.clone() } else { sa.clone() }).collect())
            }
            Mode::General(v) => Ok(v.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripState {
    #[serde(with = "serde_rat_vec")]
    pub fields: Vec<Rat>,
    #[serde(with = "serde_rat_vec")]
    pub params: Vec<Rat>,
    pub step: usize,
}

impl StripState {
    pub fn initial(config: &StripConfig, fields: Vec<Rat>) -> Result<Self> {
        if fields.len() != config.n {
            return Err(Error::config("/initial", format!("expected {} fields, got {}", config.n, fields.len())));
        }
        Ok(StripState { fields, params: config.initial_params()?, step: 0 })
    }

    /// `x_j`, 1-based.
    pub fn x(&self, j: usize) -> &Rat {
        &self.fields[j - 1]
    }

    /// `α_j`, 1-based.
    pub fn alpha(&self, j: usize) -> &Rat {
        &self.params[j - 1]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Singularity {
    pub step: usize,
    pub face: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitRecord {
    pub states: Vec<StripState>,
    pub singular_at: Option<Singularity>,
}

impl OrbitRecord {
    pub fn last(&self) -> &StripState {
        self.states.last().expect("orbit records hold the initial state")
    }
}

/// A validated configuration with its equations instantiated.
#[derive(Clone, Debug)]
pub struct Strip {
    pub n: usize,
    pub quad: QuadSpec,
    pub minus: BoundarySpec,
    pub plus: BoundarySpec,
    pub inv: Involution,
}

impl Strip {
    pub fn new(config: &StripConfig) -> Result<Self> {
        if config.n < 2 {
            return Err(Error::config("/n", "n must be at least 2"));
        }
        for (ptr, b) in [("/boundary_minus", config.boundary_minus), ("/boundary_plus", config.boundary_plus)] {
            if b.quad() != config.quad {
                return Err(Error::config(ptr, format!("{b} is a boundary for {}, not {}", b.quad(), config.quad)));
            }
        }
        if let Mode::General(v) = &config.mode {
            if v.len() != config.n - 1 {
                return Err(Error::config("/mode/general", format!("expected {} parameters, got {}", config.n - 1, v.len())));
            }
        }
        let minus = BoundarySpec::new(config.boundary_minus, config.mu.clone())
            .map_err(|e| Error::config("/mu", e.to_string()))?;
        let plus = BoundarySpec::new(config.boundary_plus, config.mu.clone())?;
        let inv = minus.involution().clone();
        Ok(Strip { n: config.n, quad: QuadSpec::new(config.quad), minus, plus, inv })
    }

    /// `k` with `n = 2k+1` or `n = 2k+2`.
    fn k(&self) -> usize {
        (self.n - 1) / 2
    }

    /// Index and σ-flag of the source of each updated parameter:
    /// `α′_j = σ^{flag}(α_{src})`.
    pub fn param_rule(&self) -> Vec<(usize, bool)> {
        let n = self.n;
        if n == 2 {
            return vec![(1, false)];
        }
        let k = self.k();
        let mut rule = vec![(0, false); n - 1];
        let mut set = |target: usize, src: usize, s: bool| rule[target - 1] = (src, s);
        set(2, 1, true);
        if n % 2 == 1 {
            for i in 1..k {
                set(2 * i - 1, 2 * i + 1, false);
                set(2 * i + 2, 2 * i, false);
            }
            set(2 * k - 1, 2 * k, true);
        } else {
            for i in 1..=k {
                set(2 * i - 1, 2 * i + 1, false);
            }
            for i in 1..k {
                set(2 * i + 2, 2 * i, false);
            }
            set(2 * k + 1, 2 * k, true);
        }
        rule
    }

    pub fn update_params(&self, params: &[Rat]) -> Result<Vec<Rat>> {
        self.param_rule()
            .into_iter()
            .map(|(src, s)| {
                let a = &params[src - 1];
                if s {
                    self.inv.apply(a)
                } else {
                    Ok(a.clone())
                }
            })
            .collect()
    }

    pub fn invert_params(&self, params: &[Rat]) -> Result<Vec<Rat>> {
        let mut out = vec![Rat::one(); params.len()];
        for (j, (src, s)) in self.param_rule().into_iter().enumerate() {
            out[src - 1] = if s { self.inv.apply(&params[j])? } else { params[j].clone() };
        }
        Ok(out)
    }

    /// Parameter carried by the right boundary triangle.
    pub fn right_param(&self, params: &[Rat]) -> Result<Rat> {
        if self.n == 2 {
            self.inv.apply(&params[0])
        } else {
            Ok(params[2 * self.k() - 1].clone())
        }
    }

    pub fn step_up(&self, state: &StripState) -> Result<StripState> {
        let new_params = self.update_params(&state.params)?;
        let faces = self.faces(&state.params, &new_params)?;
        let mut old: Vec<Option<Rat>> = state.fields.iter().cloned().map(Some).collect();
        let mut new: Vec<Option<Rat>> = vec![None; self.n];
        for f in &faces {
            let v = self.solve_face(f, &old, &new, true).map_err(|_| singular(state.step, f))?;
            set_slot(&mut old, &mut new, f.forward_unknown(), v);
        }
        Ok(StripState { fields: new.into_iter().map(Option::unwrap).collect(), params: new_params, step: state.step + 1 })
    }

    pub fn step_down(&self, state: &StripState) -> Result<StripState> {
        let old_params = self.invert_params(&state.params)?;
        let faces = self.faces(&old_params, &state.params)?;
        let mut old: Vec<Option<Rat>> = vec![None; self.n];
        let mut new: Vec<Option<Rat>> = state.fields.iter().cloned().map(Some).collect();
        for f in faces::backward_order(&faces) {
            let v = self.solve_face(f, &old, &new, false).map_err(|_| singular(state.step, f))?;
            set_slot(&mut old, &mut new, f.backward_unknown(), v);
        }
        Ok(StripState {
            fields: old.into_iter().map(Option::unwrap).collect(),
            params: old_params,
            step: state.step.saturating_sub(1),
        })
    }

    /// Rechecks every face of the staircase between two states: `Q = 0` on
    /// each bulk quadrilateral, `q = 0` on both boundary triangles.
    pub fn recheck_step(&self, before: &StripState, after: &StripState) -> Result<bool> {
        let faces = self.faces(&before.params, &after.params)?;
        if self.update_params(&before.params)? != after.params {
            return Ok(false);
        }
        for f in &faces {
            let v = |s: Slot| match s {
                Slot::Old(j) => before.fields[j - 1].clone(),
                Slot::New(j) => after.fields[j - 1].clone(),
            };
            let vals: Vec<Rat> = f.slots.iter().map(|s| v(*s)).collect();
            let r = match f.kind {
                FaceKind::Bulk => self.quad.eval(&vals[0], &vals[1], &vals[2], &vals[3], &f.a, &f.b)?,
                FaceKind::Minus => self.minus.q(&vals[0], &vals[1], &vals[2], &f.a)?,
                FaceKind::Plus => self.plus.q(&vals[0], &vals[1], &vals[2], &f.a)?,
            };
            if r != Rat::from_integer(0.into()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn solve_face(&self, f: &Face, old: &[Option<Rat>], new: &[Option<Rat>], forward: bool) -> Result<Rat> {
        let get = |s: &Slot| -> Result<Rat> {
            match s {
                Slot::Old(j) => old[j - 1].clone(),
                Slot::New(j) => new[j - 1].clone(),
            }
            .ok_or(Error::SingularPoint)
        };
        let zero = Rat::from_integer(0.into());
        let known = |skip: usize| -> Result<Vec<Rat>> {
            f.slots.iter().enumerate().map(|(i, s)| if i == skip { Ok(zero.clone()) } else { get(s) }).collect()
        };
        match (f.kind, forward) {
            (FaceKind::Bulk, true) => {
                let v = known(3)?;
                self.quad.corner_solve(&v[0], &v[1], &v[2], &f.a, &f.b)
            }
            (FaceKind::Bulk, false) => {
                let v = known(0)?;
                crate::quadmodel::solve_slot(&self.quad, 0, [&v[0], &v[1], &v[2], &v[3]], &f.a, &f.b)
            }
            (kind, fw) => {
                let b = if kind == FaceKind::Minus { &self.minus } else { &self.plus };
                if fw {
                    let v = known(2)?;
                    b.solve_z(&v[0], &v[1], &f.a)
                } else {
                    let v = known(0)?;
                    b.solve_x(&v[1], &v[2], &f.a)
                }
            }
        }
    }
}

fn set_slot(old: &mut [Option<Rat>], new: &mut [Option<Rat>], s: Slot, v: Rat) {
    match s {
        Slot::Old(j) => old[j - 1] = Some(v),
        Slot::New(j) => new[j - 1] = Some(v),
    }
}

fn singular(step: usize, f: &Face) -> Error {
    Error::SingularOrbit { step, face: f.label.clone() }
}

pub fn step_up(config: &StripConfig, state: &StripState) -> Result<StripState> {
    Strip::new(config)?.step_up(state)
}

pub fn step_down(config: &StripConfig, state: &StripState) -> Result<StripState> {
    Strip::new(config)?.step_down(state)
}

pub fn recheck_step(config: &StripConfig, before: &StripState, after: &StripState) -> Result<bool> {
    Strip::new(config)?.recheck_step(before, after)
}

/// Applies `step_up` `steps` times; a singular step ends the record.
pub fn iterate(config: &StripConfig, state: &StripState, steps: usize) -> Result<OrbitRecord> {
    let strip = Strip::new(config)?;
    Ok(iterate_with(&strip, state, steps))
}

pub fn iterate_with(strip: &Strip, state: &StripState, steps: usize) -> OrbitRecord {
    let mut states = vec![state.clone()];
    for _ in 0..steps {
        match strip.step_up(states.last().unwrap()) {
            Ok(s) => states.push(s),
            Err(Error::SingularOrbit { step, face }) => {
                return OrbitRecord { states, singular_at: Some(Singularity { step, face }) };
            }
            Err(e) => {
                let step = states.last().unwrap().step;
                return OrbitRecord { states, singular_at: Some(Singularity { step, face: e.to_string() }) };
            }
        }
    }
    OrbitRecord { states, singular_at: None }
}

/// The `(n−1)`-th power of the map, autonomous also in GENERAL mode.
pub fn autonomous_power(config: &StripConfig, state: &StripState) -> Result<StripState> {
    let strip = Strip::new(config)?;
    let mut s = state.clone();
    for _ in 0..config.n - 1 {
        s = strip.step_up(&s)?;
    }
    Ok(s)
}

/// Next seed after a singular orbit: every numerator increased by one.
pub fn reseed(fields: &[Rat]) -> Vec<Rat> {
    fields.iter().map(|x| Rat::new(x.numer() + 1, x.denom().clone())).collect()
}

/// Runs `steps` steps, restarting from [`reseed`] whenever the orbit hits a
/// singularity. Returns the full orbit and the number of reseeds.
pub fn iterate_reseeding(
    config: &StripConfig,
    fields: Vec<Rat>,
    steps: usize,
    max_reseeds: usize,
) -> Result<(OrbitRecord, usize)> {
    let strip = Strip::new(config)?;
    let mut seed = fields;
    for attempt in 0..=max_reseeds {
        let state = StripState::initial(config, seed.clone())?;
        let rec = iterate_with(&strip, &state, steps);
        if rec.singular_at.is_none() || attempt == max_reseeds {
            return Ok((rec, attempt));
        }
        seed = reseed(&seed);
    }
    unreachable!()
}
