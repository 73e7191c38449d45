//! Config-driven front end shared by the `latticemaps` binary and tests.

mod config;

use serde::Serialize;
use serde_json::{json, Value};

use crate::boundarymodel::{BoundaryEquation, BoundaryId};
use crate::error::{Error, Result};
use crate::exact::{fmt_rat, int, rat, Rat};
use crate::gallery::{check_base_points, gallery_crosscheck, gallery_list, run_laws, GalleryId, LawRun, Point};
use crate::monodromy::{extract_invariants, InvariantOptions, InvariantReport};
use crate::quadmodel::QuadId;
use crate::strip::{iterate_reseeding, iterate_with, Mode, Strip, StripConfig, StripState};
use crate::suite::run_suite;

pub use config::{config_from_value, parse_config, Command, Format, RunConfig, SEED_ENV};

/// Report body and whether every exact check passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub success: bool,
    pub body: String,
    pub summary: String,
}

fn rats(v: &[Rat]) -> Vec<String> {
    v.iter().map(fmt_rat).collect()
}

fn json_body<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_body(header: Vec<String>, rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(&header).map_err(io)?;
    for r in rows {
        w.write_record(&r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv is utf-8"))
}

fn no_csv(cfg: &RunConfig, what: &str) -> Result<()> {
    if cfg.format == Format::Csv {
        return Err(Error::config("/format", format!("{what} reports are JSON only")));
    }
    Ok(())
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    match cfg.command {
        Command::Verify => verify(cfg),
        Command::Orbit => orbit(cfg),
        Command::Invariants => invariants(cfg),
        Command::Gallery => match cfg.gallery {
            Some(id) => gallery_check(cfg, id),
            None => gallery_list_report(cfg),
        },
    }
}

fn verify(cfg: &RunConfig) -> Result<Outcome> {
    let rep = run_suite(cfg.samples, cfg.rng_seed);
    let ok = rep.cells.iter().filter(|c| c.ok(rep.samples)).count();
    let summary = format!("verify: {ok}/{} cells pass with {} samples each", rep.cells.len(), rep.samples);
    let body = match cfg.format {
        Format::Json => json_body(&rep),
        Format::Csv => csv_body(
            ["target", "check", "passed", "failed", "redrawn", "first_failure"].map(String::from).to_vec(),
            rep.cells
                .iter()
                .map(|c| {
                    vec![
                        c.target.label(),
                        c.check.as_str().to_string(),
                        c.passed.to_string(),
                        c.failed.to_string(),
                        c.redrawn.to_string(),
                        c.first_failure.clone().unwrap_or_default(),
                    ]
                })
                .collect(),
        )?,
    };
    Ok(Outcome { success: rep.all_pass(), body, summary })
}

fn invariant_options(cfg: &RunConfig) -> InvariantOptions {
    InvariantOptions { rng_seed: cfg.rng_seed, ..InvariantOptions::default() }
}

fn orbit(cfg: &RunConfig) -> Result<Outcome> {
    let strip_cfg = cfg.strip()?;
    let (rec, reseeds) = iterate_reseeding(strip_cfg, cfg.initial()?.to_vec(), cfg.steps, cfg.max_reseeds)?;
    let start = &rec.states[0];
    let report = extract_invariants(strip_cfg, start, &invariant_options(cfg)).ok();
    let invs: Vec<Vec<Rat>> = match &report {
        Some(r) => rec.states.iter().map(|s| r.values_at(strip_cfg, s)).collect::<Result<_>>()?,
        None => vec![Vec::new(); rec.states.len()],
    };
    let n = strip_cfg.n;
    let n_inv = report.as_ref().map_or(0, |r| r.values.len());
    let summary = match &rec.singular_at {
        None => format!("orbit: {} steps", rec.states.len() - 1),
        Some(s) => format!("orbit: {} steps, singular at step {} ({})", rec.states.len() - 1, s.step + 1, s.face),
    };
    let body = match cfg.format {
        Format::Csv => {
            let mut header = vec!["step".to_string()];
            header.extend((1..=n).map(|j| format!("x_{j}")));
            header.extend((1..n).map(|j| format!("alpha_{j}")));
            header.extend((0..n_inv).map(|j| format!("inv_{j}")));
            let rows = rec
                .states
                .iter()
                .zip(&invs)
                .map(|(s, inv)| {
                    let mut r = vec![s.step.to_string()];
                    r.extend(rats(&s.fields));
                    r.extend(rats(&s.params));
                    r.extend(rats(inv));
                    r
                })
                .collect();
            csv_body(header, rows)?
        }
        Format::Json => json_body(&json!({
            "config": cfg.to_json(),
            "seed": rats(&start.fields),
            "reseeds": reseeds,
            "singular_at": rec.singular_at,
            "invariant_powers": report.as_ref().map(|r| r.powers.clone()),
            "rows": rec.states.iter().zip(&invs).map(|(s, inv)| json!({
                "step": s.step,
                "fields": rats(&s.fields),
                "params": rats(&s.params),
                "invariants": rats(inv),
            })).collect::<Vec<_>>(),
        })),
    };
    Ok(Outcome { success: true, body, summary })
}

/// How a coefficient behaved along the orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    Invariant,
    TwoIntegral,
    Broken,
}

fn invariants(cfg: &RunConfig) -> Result<Outcome> {
    no_csv(cfg, "invariant")?;
    let strip_cfg = cfg.strip()?;
    let strip = Strip::new(strip_cfg)?;
    let start = StripState::initial(strip_cfg, cfg.initial()?.to_vec())?;
    let report = extract_invariants(strip_cfg, &start, &invariant_options(cfg))?;
    let rec = iterate_with(&strip, &start, cfg.steps);
    let eps = strip.minus.epsilon() * strip.plus.epsilon();
    let mut laws = vec![Law::Invariant; report.values.len()];
    let mut steps = Vec::new();
    for s in &rec.states {
        let vals = report.values_at(strip_cfg, s)?;
        let sign = int(if eps == -1 && s.step % 2 == 1 { -1 } else { 1 });
        let drift: Vec<Rat> = vals.iter().zip(&report.values).map(|(v, v0)| v - v0).collect();
        let signed: Vec<Rat> = vals.iter().zip(&report.values).map(|(v, v0)| v - &sign * v0).collect();
        for (j, law) in laws.iter_mut().enumerate() {
            let zero = Rat::from_integer(0.into());
            *law = match (*law, drift[j] == zero, signed[j] == zero) {
                (Law::Invariant, true, _) => Law::Invariant,
                (Law::Invariant | Law::TwoIntegral, _, true) if eps == -1 => Law::TwoIntegral,
                _ => Law::Broken,
            };
        }
        steps.push(json!({ "step": s.step, "values": rats(&vals), "drift": rats(&drift), "signed_drift": rats(&signed) }));
    }
    let success = laws.iter().all(|l| *l != Law::Broken);
    let summary = format!(
        "invariants: {} coefficient(s) {:?}, k {:?}, Jacobian rank {}, over {} steps",
        report.values.len(),
        laws,
        report.k_class,
        report.jacobian_rank,
        rec.states.len() - 1
    );
    let body = json_body(&json!({
        "config": cfg.to_json(),
        "report": report,
        "epsilon": eps,
        "laws": laws,
        "singular_at": rec.singular_at,
        "steps": steps,
    }));
    Ok(Outcome { success, body, summary })
}

fn gallery_list_report(cfg: &RunConfig) -> Result<Outcome> {
    let list = gallery_list();
    let body = match cfg.format {
        Format::Json => json_body(&list),
        Format::Csv => csv_body(
            ["id", "dim", "params", "strip_realization", "summary"].map(String::from).to_vec(),
            list.iter()
                .map(|e| vec![e.id.to_string(), e.dim.to_string(), e.params.join(" "), e.strip_realization.to_string(), e.summary.to_string()])
                .collect(),
        )?,
    };
    Ok(Outcome { success: true, body, summary: format!("gallery: {} maps", list.len()) })
}

/// The configuration each gallery id is checked with when none is given.
pub fn gallery_default(id: GalleryId) -> RunConfig {
    let h1 = |n, mode| Some(StripConfig::h1(n, int(3), mode));
    let q1 = |n, mode| Some(StripConfig::new(QuadId::Q1Mult, BoundaryId::Q1multRow1, BoundaryId::Q1multRow3, n, int(1), mode));
    let ints = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vec<_>>();
    let (strip, initial, params) = match id {
        GalleryId::H1_2d => (h1(2, Mode::Autonomous(int(2))), ints(&[1, 1]), None),
        GalleryId::H1_3d => (h1(3, Mode::Autonomous(int(2))), ints(&[1, 1, 1]), None),
        GalleryId::H1_4d => (h1(4, Mode::Autonomous(int(2))), ints(&[1, 2, 3, 4]), None),
        GalleryId::H1_3dNa => (h1(3, Mode::General(ints(&[1, 2]))), ints(&[1, 1, 2]), None),
        GalleryId::Q1_2d => (q1(2, Mode::Autonomous(rat(1, 2))), ints(&[2, 1]), None),
        GalleryId::Q1_3d => (q1(3, Mode::General(ints(&[2, 3]))), ints(&[3, 2, 1]), None),
        GalleryId::H1Delta => (None, ints(&[2, 3]), Some(ints(&[1]))),
        GalleryId::H1_3dY => (None, ints(&[1, 2, 3]), Some(Vec::new())),
        GalleryId::Q1Reduced => (None, ints(&[1, 1]), Some(ints(&[2, 3]))),
        GalleryId::Gamma => (None, ints(&[1, 1]), Some(ints(&[4, 1]))),
    };
    RunConfig { strip, initial: Some(initial), params, gallery: Some(id), ..RunConfig::new(Command::Gallery) }
}

#[derive(Serialize)]
struct LawReport {
    id: GalleryId,
    start: Vec<String>,
    params: Vec<String>,
    run: LawRun,
    base_points: Option<bool>,
}

fn gallery_check(cfg: &RunConfig, id: GalleryId) -> Result<Outcome> {
    no_csv(cfg, "gallery check")?;
    let defaults = gallery_default(id);
    let initial = cfg.initial.clone().or(defaults.initial).unwrap();
    if id.entry().strip_realization {
        let strip = cfg.strip.clone().or(defaults.strip).unwrap();
        let rep = gallery_crosscheck(id, &strip, &initial, cfg.steps)?;
        let summary = format!(
            "gallery {id}: {} steps compared, matched {}, invariants constant {}, 2-integrals alternate {}",
            rep.steps_compared, rep.matched, rep.invariant_drift_zero, rep.two_integrals_alternate
        );
        return Ok(Outcome { success: rep.passed(), body: json_body(&rep), summary });
    }
    let params = cfg.params.clone().or(defaults.params).unwrap();
    let run = run_laws(id, &Point::new(initial.clone(), params.clone()), cfg.steps)?;
    let base_points = (id == GalleryId::Gamma).then(|| check_base_points(&params[0], &params[1]));
    let success = run.holds() && base_points != Some(false);
    let summary = format!("gallery {id}: {} steps, laws hold {}", run.steps_run, run.holds());
    let rep = LawReport { id, start: rats(&initial), params: rats(&params), run, base_points };
    Ok(Outcome { success, body: json_body(&rep), summary })
}

/// Re-reads an orbit CSV into `(step, fields, params, invariants)` rows.
pub fn parse_orbit_csv(text: &str, n: usize) -> Result<Vec<(usize, Vec<Rat>, Vec<Rat>, Vec<Rat>)>> {
    let mut rd = csv::Reader::from_reader(text.as_bytes());
    let io = |e: csv::Error| Error::Io(e.to_string());
    let mut out = Vec::new();
    for rec in rd.records() {
        let rec = rec.map_err(io)?;
        let cols: Vec<&str> = rec.iter().collect();
        let step = cols[0].parse().map_err(|_| Error::Io(format!("bad step {:?}", cols[0])))?;
        let parse = |v: &[&str]| v.iter().map(|s| crate::exact::parse_rat(s)).collect::<Result<Vec<_>>>();
        out.push((step, parse(&cols[1..=n])?, parse(&cols[n + 1..2 * n])?, parse(&cols[2 * n..])?));
    }
    Ok(out)
}

/// Reads an invariant report back from a JSON body.
pub fn parse_invariant_report(body: &str) -> Result<InvariantReport> {
    let v: Value = serde_json::from_str(body).map_err(|e| Error::Io(e.to_string()))?;
    serde_json::from_value(v["report"].clone()).map_err(|e| Error::Io(e.to_string()))
}
