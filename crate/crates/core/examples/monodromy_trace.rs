//! Double-row monodromy: the trace in λ and the conjugation identity across one step.
use latticemaps::boundarymodel::BoundaryId;
use latticemaps::exact::int;
use latticemaps::monodromy::{check_conjugation, check_trace_ratio, double_row, trace_t};
use latticemaps::quadmodel::QuadId;
use latticemaps::strip::{Mode, StripConfig, StripState};

fn main() -> latticemaps::Result<()> {
    let cases = [
        ("H1 n=3", StripConfig::h1(3, int(3), Mode::Autonomous(int(2))), vec![int(1), int(1), int(1)]),
        ("H1 n=4", StripConfig::h1(4, int(3), Mode::Autonomous(int(2))), vec![int(1), int(2), int(3), int(4)]),
        (
            "Q1 n=3",
            StripConfig::new(QuadId::Q1Mult, BoundaryId::Q1multRow1, BoundaryId::Q1multRow3, 3, int(1), Mode::General(vec![int(2), int(3)])),
            vec![int(3), int(2), int(1)],
        ),
    ];
    for (name, c, seed) in cases {
        let s = StripState::initial(&c, seed)?;
        let (rad, t) = trace_t(&double_row(&c, &s)?);
        println!("{name}: tr = {rad} · ({t})");
        println!("    conjugation across one step: {}", check_conjugation(&c, &s)?);
        println!("    trace ratio over 2 steps: {}", check_trace_ratio(&c, &s, 2)?);
    }
    Ok(())
}
