//! The planar map γ: one step, the pencil value, and its base points.
use latticemaps::exact::{fmt_rat, int, Field, GmpRat};
use latticemaps::gallery::{base_points, check_base_points, gallery_invariants, gallery_step, run_laws, GalleryId, Point};

fn main() -> latticemaps::Result<()> {
    let (a, b) = (int(4), int(1));
    let p = Point::new(vec![int(1), int(1)], vec![a.clone(), b.clone()]);
    let q = gallery_step(GalleryId::Gamma, &p)?;
    println!("γ(1, 1) = ({}, {})", fmt_rat(&q.x[0]), fmt_rat(&q.x[1]));
    println!("C = {} then {}", fmt_rat(&gallery_invariants(GalleryId::Gamma, &p)?[0]), fmt_rat(&gallery_invariants(GalleryId::Gamma, &q)?[0]));
    for bp in base_points(&a) {
        println!("base point ({} : {} : {})", fmt_rat(&bp[0]), fmt_rat(&bp[1]), fmt_rat(&bp[2]));
    }
    println!("both cubics vanish at all base points: {}", check_base_points(&a, &b));

    let big = Point::new(vec![GmpRat::from_int(1), GmpRat::from_int(1)], vec![GmpRat::from_rat(&a), GmpRat::from_rat(&b)]);
    let run = run_laws(GalleryId::Gamma, &big, 60)?;
    println!("60 steps over GMP: {run:?}");
    Ok(())
}
