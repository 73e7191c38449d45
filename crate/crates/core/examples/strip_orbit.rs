//! Iterating strip maps, with and without deterministic reseeding.
use latticemaps::exact::{fmt_rat, int, Rat};
use latticemaps::strip::{iterate, iterate_reseeding, recheck_step, Mode, StripConfig, StripState};

fn show(v: &[Rat]) -> String {
    v.iter().map(fmt_rat).collect::<Vec<_>>().join(", ")
}

fn main() -> latticemaps::Result<()> {
    let c = StripConfig::h1(3, int(3), Mode::Autonomous(int(2)));
    let start = StripState::initial(&c, vec![int(1), int(1), int(1)])?;
    let orbit = iterate(&c, &start, 5)?;
    for s in &orbit.states {
        println!("step {}: x = ({}), α = ({})", s.step, show(&s.fields), show(&s.params));
    }
    if let Some(sg) = &orbit.singular_at {
        println!("step {} is singular at {}", sg.step + 1, sg.face);
    }
    println!("step 0 -> 1 satisfies every face equation: {}", recheck_step(&c, &orbit.states[0], &orbit.states[1])?);

    let c = StripConfig::h1(3, int(3), Mode::General(vec![int(1), int(2)]));
    let (orbit, reseeds) = iterate_reseeding(&c, vec![int(1), int(1), int(2)], 6, 5)?;
    println!("general mode, {reseeds} reseed(s), seed ({})", show(&orbit.states[0].fields));
    for s in &orbit.states {
        println!("step {}: α = ({})", s.step, show(&s.params));
    }
    Ok(())
}
