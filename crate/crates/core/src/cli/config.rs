use serde::Serialize;
use serde_json::{Map, Value};

use crate::boundarymodel::BoundaryId;
use crate::error::{Error, Result};
use crate::exact::{fmt_rat, parse_rat, Rat};
use crate::gallery::GalleryId;
use crate::quadmodel::QuadId;
use crate::strip::{Mode, StripConfig};

/// Overrides the configured `rng_seed`.
pub const SEED_ENV: &str = "LATTICEMAPS_RNG_SEED";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    Verify,
    Orbit,
    Invariants,
    Gallery,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub strip: Option<StripConfig>,
    pub initial: Option<Vec<Rat>>,
    pub steps: usize,
    pub samples: usize,
    pub rng_seed: u64,
    pub format: Format,
    pub out: Option<String>,
    pub gallery: Option<GalleryId>,
    /// Parameters for gallery ids without a strip realization.
    pub params: Option<Vec<Rat>>,
    /// Deterministic reseeds allowed when an orbit hits a singularity.
    pub max_reseeds: usize,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            strip: None,
            initial: None,
            steps: 10,
            samples: 100,
            rng_seed: 0,
            format: Format::Json,
            out: None,
            gallery: None,
            params: None,
            max_reseeds: 0,
        }
    }

    pub fn strip(&self) -> Result<&StripConfig> {
        self.strip.as_ref().ok_or_else(|| Error::config("/equation", "strip configuration required"))
    }

    pub fn initial(&self) -> Result<&[Rat]> {
        self.initial.as_deref().ok_or_else(|| Error::config("/initial", "initial fields required"))
    }

    /// `LATTICEMAPS_RNG_SEED` wins over the file.
    pub fn apply_env(&mut self) -> Result<()> {
        if let Ok(v) = std::env::var(SEED_ENV) {
            self.rng_seed = v.trim().parse().map_err(|_| Error::config("/rng_seed", format!("{SEED_ENV}={v:?} is not an unsigned integer")))?;
        }
        Ok(())
    }

    /// The configuration as a JSON document in the input schema.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        let s = |x: &str| Value::String(x.to_string());
        let rats = |v: &[Rat]| Value::Array(v.iter().map(|r| Value::String(fmt_rat(r))).collect());
        m.insert("command".into(), serde_json::to_value(self.command).unwrap());
        if let Some(c) = &self.strip {
            m.insert("equation".into(), s(c.quad.as_str()));
            m.insert("mu".into(), s(&fmt_rat(&c.mu)));
            m.insert("n".into(), c.n.into());
            m.insert("boundary_minus".into(), s(c.boundary_minus.as_str()));
            m.insert("boundary_plus".into(), s(c.boundary_plus.as_str()));
            m.insert("mode".into(), serde_json::to_value(&c.mode).unwrap());
        }
        if let Some(v) = &self.initial {
            m.insert("initial".into(), rats(v));
        }
        if let Some(g) = self.gallery {
            m.insert("gallery".into(), s(g.as_str()));
        }
        if let Some(p) = &self.params {
            m.insert("params".into(), rats(p));
        }
        m.insert("steps".into(), self.steps.into());
        m.insert("samples".into(), self.samples.into());
        m.insert("rng_seed".into(), self.rng_seed.into());
        m.insert("max_reseeds".into(), self.max_reseeds.into());
        m.insert("format".into(), serde_json::to_value(self.format).unwrap());
        if let Some(o) = &self.out {
            m.insert("out".into(), s(o));
        }
        Value::Object(m)
    }
}

const KEYS: [&str; 16] = [
    "command",
    "equation",
    "mu",
    "mode",
    "n",
    "boundary_minus",
    "boundary_plus",
    "initial",
    "steps",
    "samples",
    "rng_seed",
    "format",
    "out",
    "gallery",
    "params",
    "max_reseeds",
];

struct Doc<'a>(&'a Map<String, Value>);

fn err(ptr: &str, msg: impl Into<String>) -> Error {
    Error::config(ptr, msg)
}

fn rat_at(v: &Value, ptr: &str) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s).map_err(|e| match e {
            Error::Config { message, .. } => err(ptr, message),
            other => err(ptr, other.to_string()),
        }),
        _ => Err(err(ptr, "expected a rational as a \"p/q\" string")),
    }
}

fn rats_at(v: &Value, ptr: &str) -> Result<Vec<Rat>> {
    let Value::Array(a) = v else { return Err(err(ptr, "expected an array of \"p/q\" strings")) };
    a.iter().enumerate().map(|(i, x)| rat_at(x, &format!("{ptr}/{i}"))).collect()
}

impl Doc<'_> {
    fn get(&self, key: &str) -> Option<&Value> {
        self.0.get(key)
    }

    fn str(&self, key: &str) -> Result<Option<&str>> {
        match self.get(key) {
            None => Ok(None),
            Some(Value::String(s)) => Ok(Some(s)),
            Some(_) => Err(err(&format!("/{key}"), "expected a string")),
        }
    }

    fn uint(&self, key: &str) -> Result<Option<u64>> {
        match self.get(key) {
            None => Ok(None),
            Some(v) => v.as_u64().map(Some).ok_or_else(|| err(&format!("/{key}"), "expected a non-negative integer")),
        }
    }

    fn parsed<T: std::str::FromStr<Err = Error>>(&self, key: &str) -> Result<Option<T>> {
        self.str(key)?.map(|s| s.parse::<T>().map_err(|e| err(&format!("/{key}"), e.to_string()))).transpose()
    }
}

fn parse_mode(v: &Value) -> Result<Mode> {
    let Value::Object(m) = v else { return Err(err("/mode", "expected {\"autonomous\": \"p/q\"} or {\"general\": [...]}")) };
    if m.len() != 1 {
        return Err(err("/mode", "expected exactly one of \"autonomous\", \"general\""));
    }
    let (k, v) = m.iter().next().unwrap();
    match k.as_str() {
        "autonomous" => Ok(Mode::Autonomous(rat_at(v, "/mode/autonomous")?)),
        "general" => Ok(Mode::General(rats_at(v, "/mode/general")?)),
        other => Err(err(&format!("/mode/{other}"), "unknown mode")),
    }
}

/// Validates a JSON configuration document; errors carry JSON pointers.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let v: Value = serde_json::from_str(text).map_err(|e| err("", format!("invalid JSON: {e}")))?;
    config_from_value(&v)
}

pub fn config_from_value(v: &Value) -> Result<RunConfig> {
    let Value::Object(map) = v else { return Err(err("", "expected a JSON object")) };
    if let Some(k) = map.keys().find(|k| !KEYS.contains(&k.as_str())) {
        return Err(err(&format!("/{k}"), "unknown key"));
    }
    let d = Doc(map);
    let command = match d.str("command")? {
        None => return Err(err("/command", "missing")),
        Some("verify") => Command::Verify,
        Some("orbit") => Command::Orbit,
        Some("invariants") => Command::Invariants,
        Some("gallery") => Command::Gallery,
        Some(other) => return Err(err("/command", format!("unknown command {other:?}"))),
    };
    let mut cfg = RunConfig::new(command);

    let strip_keys = ["equation", "mu", "mode", "n", "boundary_minus", "boundary_plus"];
    if strip_keys.iter().any(|k| d.get(k).is_some()) {
        let missing = strip_keys.iter().find(|k| d.get(k).is_none());
        if let Some(k) = missing {
            return Err(err(&format!("/{k}"), "missing"));
        }
        let quad: QuadId = d.parsed("equation")?.unwrap();
        let minus: BoundaryId = d.parsed("boundary_minus")?.unwrap();
        let plus: BoundaryId = d.parsed("boundary_plus")?.unwrap();
        let n = d.uint("n")?.unwrap() as usize;
        let mu = rat_at(d.get("mu").unwrap(), "/mu")?;
        let mode = parse_mode(d.get("mode").unwrap())?;
        let strip = StripConfig::new(quad, minus, plus, n, mu, mode);
        crate::strip::Strip::new(&strip)?;
        cfg.strip = Some(strip);
    }
    if let Some(v) = d.get("initial") {
        let init = rats_at(v, "/initial")?;
        if let Some(s) = &cfg.strip {
            if init.len() != s.n {
                return Err(err("/initial", format!("expected {} fields, got {}", s.n, init.len())));
            }
        }
        cfg.initial = Some(init);
    }
    if let Some(v) = d.get("params") {
        cfg.params = Some(rats_at(v, "/params")?);
    }
    cfg.gallery = d.parsed("gallery")?;
    if let Some(s) = d.uint("steps")? {
        cfg.steps = s as usize;
    }
    if let Some(s) = d.uint("samples")? {
        if s == 0 {
            return Err(err("/samples", "must be positive"));
        }
        cfg.samples = s as usize;
    }
    if let Some(s) = d.uint("rng_seed")? {
        cfg.rng_seed = s;
    }
    if let Some(s) = d.uint("max_reseeds")? {
        cfg.max_reseeds = s as usize;
    }
    cfg.format = match d.str("format")? {
        None | Some("json") => Format::Json,
        Some("csv") => Format::Csv,
        Some(other) => return Err(err("/format", format!("expected \"json\" or \"csv\", got {other:?}"))),
    };
    cfg.out = d.str("out")?.map(str::to_string);
    match command {
        Command::Orbit | Command::Invariants => {
            cfg.strip()?;
            cfg.initial()?;
        }
        Command::Gallery if cfg.gallery.is_none() => return Err(err("/gallery", "missing")),
        _ => {}
    }
    Ok(cfg)
}
