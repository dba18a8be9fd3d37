use segrelab_core::complement::{affinize, check_affine_axiom, recover_directions, AffineAxiom};
use segrelab_core::instances::{grid, grid_perp_hyperplane, projective_square};
use segrelab_core::linalg::{gaussian_binomial, BilinearForm, PrimeField};
use segrelab_core::pls::{check_property, find_isomorphism, Property};
use segrelab_core::segre::{correlation_of, SegreProduct};
use segrelab_core::spaces::{affine_space, grassmann_space, polar_space, projective_space};

#[test]
fn projective_and_grassmann_counts() {
    for (n, p, pts, lines) in [(3, 2, 7, 7), (3, 3, 13, 13), (4, 2, 15, 35)] {
        let s = projective_space(n, p).unwrap();
        assert_eq!((s.num_points(), s.num_lines()), (pts, lines), "PG({}, {p})", n - 1);
        assert!(s.is_linear() && s.is_veblenian());
    }
    let g = grassmann_space(4, 2, 2).unwrap();
    assert_eq!(g.num_points() as u128, gaussian_binomial(4, 2, 2));
    assert_eq!(g.num_lines(), 15 * 7);
    assert!(g.is_gamma() && !g.is_linear());
    assert!(g.max_line_size() == 3 && g.min_line_size() == 3);
}

#[test]
fn symplectic_quadrangle_counts() {
    for p in [2, 3] {
        let w = polar_space(&BilinearForm::symplectic(PrimeField::new(p).unwrap(), 4).unwrap()).unwrap();
        let n = (p as usize + 1) * (p as usize * p as usize + 1);
        assert_eq!((w.num_points(), w.num_lines()), (n, n));
        assert!(w.is_gamma());
        assert_eq!(w.triangles().count(), 0);
    }
}

#[test]
fn affine_plane_parallel_classes() {
    let a = affine_space(3, 3).unwrap();
    assert_eq!(a.base().num_points(), 9);
    assert_eq!(a.base().num_lines(), 12);
    assert_eq!(a.classes().len(), 4);
    for ax in AffineAxiom::ALL {
        assert!(check_affine_axiom(&a, ax), "{ax:?}");
    }
}

#[test]
fn grid_hyperplanes_and_correlations() {
    let g = grid(3).unwrap();
    let hs = g.carrier().enumerate_hyperplanes().unwrap();
    assert!(hs.iter().all(|h| g.slice_criterion(h)));
    let nondeg: Vec<_> = hs.iter().filter(|h| g.is_nondegenerate(h).unwrap()).collect();
    assert_eq!(nondeg.len(), 24);
    for h in nondeg {
        let c = correlation_of(&g, h).unwrap();
        assert!(c.is_nondegenerate());
        assert_eq!(&c.reconstruct(&g), h);
    }
}

#[test]
fn grid_perp_complement_is_partial_affine() {
    let g = grid(3).unwrap();
    let h = grid_perp_hyperplane(&g).unwrap();
    assert_eq!(h.len(), 4);
    let a = affinize(g.carrier(), &h).unwrap();
    assert_eq!(a.structure().num_points(), 12);
    assert!(check_affine_axiom(a.carrier(), AffineAxiom::PartialAffine));
    let rec = recover_directions(&a).unwrap();
    assert_eq!(rec.num_points, 4);
}

#[test]
fn product_of_planes_is_not_isomorphic_to_a_plane() {
    let sq = projective_square(3, 2).unwrap();
    assert_eq!(sq.num_points(), 49);
    assert!(check_property(sq.carrier(), Property::Gamma).unwrap());
    let pg = projective_space(3, 2).unwrap();
    assert!(find_isomorphism(sq.carrier(), &pg).unwrap().is_none());
    let again = SegreProduct::new(vec![pg.clone(), pg]).unwrap();
    assert!(find_isomorphism(sq.carrier(), again.carrier()).unwrap().is_some());
}
