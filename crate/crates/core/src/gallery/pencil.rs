use crate::exact::{Field, Rat};

/// `(N₁, N₂)` with the pencil written as `N₁(x, y, z) = C·N₂(x, y, z)`:
/// `N₁ = y²(z+x+y) + αx(xz/β + xy + y²)`, `N₂ = xyz`.
pub fn pencil_cubics<F: Field>(x: &F, y: &F, z: &F, alpha: &F, beta: &F) -> Option<(F, F)> {
    let xz_b = (x.clone() * z.clone()).checked_div(beta)?;
    let n1 = y.square() * (z.clone() + x.clone() + y.clone()) + alpha.clone() * x.clone() * (xz_b + x.clone() * y.clone() + y.square());
    let n2 = x.clone() * y.clone() * z.clone();
    Some((n1, n2))
}

/// The five base points in homogeneous coordinates, `α = c₁²`.
pub fn base_points(alpha: &Rat) -> Vec<[Rat; 3]> {
    let (o, z) = (Rat::from_integer(1.into()), Rat::from_integer(0.into()));
    vec![
        [z.clone(), z.clone(), o.clone()],
        [z.clone(), -o.clone(), o.clone()],
        [o.clone(), z.clone(), z.clone()],
        [o.clone(), -o.clone(), z.clone()],
        [o, -alpha.clone(), z],
    ]
}

/// Whether every base point annihilates both cubics.
pub fn check_base_points(alpha: &Rat, beta: &Rat) -> bool {
    base_points(alpha).iter().all(|[x, y, z]| {
        pencil_cubics(x, y, z, alpha, beta).is_some_and(|(a, b)| a == Rat::from_integer(0.into()) && b == Rat::from_integer(0.into()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::gallery::{gallery_invariants, GalleryId, Point};

    #[test]
    fn base_points_annihilate() {
        assert!(check_base_points(&int(4), &int(1)));
        assert!(check_base_points(&rat(1, 16), &rat(7, 3)));
        // (1:−β:0) is not a base point unless α = β
        let (a, b) = (int(4), int(2));
        let (n1, _) = pencil_cubics(&int(1), &-b.clone(), &int(0), &a, &b).unwrap();
        assert_ne!(n1, int(0));
    }

    #[test]
    fn cubics_match_pencil_value() {
        let (x, y) = (rat(2, 3), rat(-5, 7));
        let (a, b) = (int(4), rat(1, 3));
        let (n1, n2) = pencil_cubics(&x, &y, &int(1), &a, &b).unwrap();
        let c = &gallery_invariants(GalleryId::Gamma, &Point::new(vec![x, y], vec![a, b])).unwrap()[0];
        assert_eq!(n1, c * n2);
    }
}
