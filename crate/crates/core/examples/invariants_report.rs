//! Invariants from the trace: surviving coefficients, their periods and the Jacobian rank.
use latticemaps::boundarymodel::BoundaryId;
use latticemaps::exact::int;
use latticemaps::monodromy::{extract_invariants, InvariantOptions};
use latticemaps::quadmodel::QuadId;
use latticemaps::strip::{Mode, StripConfig, StripState};

fn main() -> latticemaps::Result<()> {
    let c = StripConfig::new(QuadId::Q1Mult, BoundaryId::Q1multRow1, BoundaryId::Q1multRow3, 3, int(1), Mode::General(vec![int(2), int(3)]));
    let s = StripState::initial(&c, vec![int(3), int(2), int(1)])?;
    let r = extract_invariants(&c, &s, &InvariantOptions::default())?;
    println!("{}", serde_json::to_string_pretty(&r).unwrap());

    for n in 3..=6 {
        let c = StripConfig::h1(n, int(3), Mode::Autonomous(int(2)));
        let seed = (1..=n as i64).map(|j| int(j * j + 1)).collect();
        let s = StripState::initial(&c, seed)?;
        let r = extract_invariants(&c, &s, &InvariantOptions::default())?;
        println!("H1 n={n}: {} coefficient(s), k {:?}, Jacobian rank {}", r.values.len(), r.k_class, r.jacobian_rank);
    }
    Ok(())
}
