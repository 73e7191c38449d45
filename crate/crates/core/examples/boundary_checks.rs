//! The boundary registry: duality, K-involution, boundary consistency and boundary ZCC.
use latticemaps::boundarymodel::{
    check_boundary_consistency, check_boundary_zcc, check_k_involution, verify_duality, BoundaryId, BoundarySpec,
};
use latticemaps::exact::{int, rat};
use latticemaps::sampling::rng;

fn main() -> latticemaps::Result<()> {
    let mut r = rng(3);
    let (x, y, u, a, lp) = (rat(2, 7), int(3), rat(-5, 2), rat(1, 3), int(11));
    for id in BoundaryId::ALL {
        let b = BoundarySpec::new(id, int(3))?;
        let dual = verify_duality(&b, 20, &mut r)?.all_pass();
        let k = check_k_involution(&b, &x)?;
        let cons = check_boundary_consistency(&b, &x, &y, &u, &a, &lp)?.consistent;
        let zcc = check_boundary_zcc(&b, &x, &u, &a)?;
        println!("{:12} ε={:+} duality {dual} K² {k} consistency {cons} zcc {zcc}", id.as_str(), id.epsilon());
    }
    Ok(())
}
