use std::process::{Command, Output};

use latticemaps::boundarymodel::BoundaryId;
use latticemaps::cli::{parse_invariant_report, parse_orbit_csv, SEED_ENV};
use latticemaps::exact::{int, rat, Rat};
use latticemaps::monodromy::{extract_invariants, InvariantOptions};
use latticemaps::quadmodel::QuadId;
use latticemaps::strip::{iterate, Mode, StripConfig, StripState};
use serde_json::Value;

const ORBIT: &str = r#"{"command":"orbit","equation":"h1","mu":"3","mode":{"autonomous":"2"},"n":3,
  "boundary_minus":"h1_xz","boundary_plus":"h1_yzx","initial":["1","1","1"],"steps":3,"format":"csv"}"#;
const Q1: &str = r#"{"command":"invariants","equation":"q1_mult","mu":"1","mode":{"general":["2","3"]},"n":3,
  "boundary_minus":"q1mult_row1","boundary_plus":"q1mult_row3","initial":["3","2","1"],"steps":6,"rng_seed":7}"#;

fn bin(args: &[&str], config: Option<&str>, env: Option<(&str, &str)>) -> Output {
    let dir = tempfile::tempdir().unwrap();
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_latticemaps"));
    cmd.args(args).env_remove(SEED_ENV);
    if let Some(text) = config {
        let path = dir.path().join("config.json");
        std::fs::write(&path, text).unwrap();
        cmd.arg("--config").arg(path);
    }
    if let Some((k, v)) = env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| int(x)).collect()
}

#[test]
fn orbit_csv_round_trips() {
    let o = bin(&["orbit"], Some(ORBIT), None);
    assert_eq!(o.status.code(), Some(0));
    let rows = parse_orbit_csv(&stdout(&o), 3).unwrap();
    let c = StripConfig::h1(3, int(3), Mode::Autonomous(int(2)));
    let orbit = iterate(&c, &StripState::initial(&c, ints(&[1, 1, 1])).unwrap(), 3).unwrap();
    assert_eq!(rows.len(), orbit.states.len());
    for (row, s) in rows.iter().zip(&orbit.states) {
        assert_eq!((row.0, &row.1, &row.2), (s.step, &s.fields, &s.params));
    }
    assert_eq!(rows[1].1, ints(&[-1, 3, 0]));
    assert_eq!(rows.iter().map(|r| r.3[0].clone()).collect::<Vec<_>>(), ints(&[4, -4, 4]));
}

#[test]
fn invariants_report_round_trips() {
    let o = bin(&["invariants"], Some(Q1), None);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let body = stdout(&o);
    assert!(body.contains("\"103/6\""));
    let v: Value = serde_json::from_str(&body).unwrap();
    for step in v["steps"].as_array().unwrap() {
        assert!(step["drift"].as_array().unwrap().iter().all(|d| d == "0"));
    }
    let c = StripConfig::new(QuadId::Q1Mult, BoundaryId::Q1multRow1, BoundaryId::Q1multRow3, 3, int(1), Mode::General(ints(&[2, 3])));
    let s = StripState::initial(&c, ints(&[3, 2, 1])).unwrap();
    let expect = extract_invariants(&c, &s, &InvariantOptions { rng_seed: 7, ..InvariantOptions::default() }).unwrap();
    assert_eq!(parse_invariant_report(&body).unwrap(), expect);
    assert_eq!(expect.values[0], rat(103, 6));
}

#[test]
fn reports_are_deterministic() {
    let a = bin(&["verify", "--samples", "3"], None, None);
    let b = bin(&["verify", "--samples", "3"], None, None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&bin(&["invariants"], Some(Q1), None)), stdout(&bin(&["invariants"], Some(Q1), None)));
}

#[test]
fn seed_env_overrides_config() {
    let cfg = r#"{"command":"verify","samples":2,"rng_seed":7}"#;
    let v: Value = serde_json::from_str(&stdout(&bin(&["verify"], Some(cfg), None))).unwrap();
    assert_eq!(v["rng_seed"], 7);
    let v: Value = serde_json::from_str(&stdout(&bin(&["verify"], Some(cfg), Some((SEED_ENV, "11"))))).unwrap();
    assert_eq!(v["rng_seed"], 11);
    assert_eq!(v["samples"], 2);
    let bad = bin(&["verify"], Some(cfg), Some((SEED_ENV, "eleven")));
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn config_errors_exit_2_with_pointer() {
    let o = bin(&["orbit"], Some(&ORBIT.replace(r#"["1","1","1"]"#, r#"["1","1/0","1"]"#)), None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/initial/1"));
}

#[test]
fn out_flag_and_gallery_verbs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("list.json");
    let o = bin(&["gallery", "list", "--out", path.to_str().unwrap()], None, None);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let list: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(list.as_array().unwrap().len(), 10);
    for id in ["h1_3d", "q1_3d", "gamma", "h1_3d_y"] {
        assert_eq!(bin(&["gallery", "check", id], None, None).status.code(), Some(0), "{id}");
    }
}
