//! Driving a run from a JSON config document, as the binary does.
use latticemaps::cli::{parse_config, run};

const CONFIG: &str = r#"{"command":"invariants","equation":"q1_mult","mu":"1","mode":{"general":["2","3"]},"n":3,
  "boundary_minus":"q1mult_row1","boundary_plus":"q1mult_row3","initial":["3","2","1"],"steps":4,"rng_seed":7}"#;

fn main() -> latticemaps::Result<()> {
    let cfg = parse_config(CONFIG)?;
    let out = run(&cfg)?;
    println!("{}", out.summary);
    println!("{}", &out.body[..out.body.len().min(600)]);
    match parse_config(&CONFIG.replace(r#""3","2","1""#, r#""3","2""#)) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => println!("unexpectedly accepted"),
    }
    Ok(())
}
