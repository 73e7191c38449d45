//! The randomized pass/fail matrix over every quad and boundary equation.
use latticemaps::suite::run_suite;

fn main() {
    let samples = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20);
    let rep = run_suite(samples, 0);
    for c in &rep.cells {
        println!("{:12} {:26} {:>4}/{samples} redrawn {:>3}", c.target.label(), c.check.as_str(), c.passed, c.redrawn);
    }
    println!("all pass: {}", rep.all_pass());
}
