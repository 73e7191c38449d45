//! Far-corner of the cube by three routes, and the symmetry checks, for all quad equations.
use latticemaps::exact::{int, Rat};
use latticemaps::quadmodel::{check_3d_consistency, check_symmetries, QuadId, QuadSpec};
use latticemaps::sampling::rng;

fn main() -> latticemaps::Result<()> {
    let h1 = QuadSpec::new(QuadId::H1);
    let v = |x: i64| -> Rat { int(x) };
    let cube = check_3d_consistency(&h1, &v(0), &v(1), &v(3), &v(5), &v(2), &v(3), &v(7))?;
    println!("H1 cube (0,1,3,5; 2,3,7): routes {:?}", cube.routes.iter().map(|r| r.to_string()).collect::<Vec<_>>());

    let mut r = rng(1);
    for id in QuadId::ALL {
        let rep = check_symmetries(&QuadSpec::new(id), 50, &mut r);
        println!("{:8} symmetries over 50 samples: {}", id.as_str(), if rep.all_pass() { "pass" } else { "FAIL" });
    }
    Ok(())
}
