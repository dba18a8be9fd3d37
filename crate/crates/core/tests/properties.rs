use proptest::prelude::*;

use segrelab_core::complement::{affinize, check_affine_axiom, AffineAxiom};
use segrelab_core::instances::{bilinear_hyperplane, grid};
use segrelab_core::linalg::matrix::{bilinear, det, dot, null_space, rank, transpose};
use segrelab_core::linalg::{meet, rref, Matrix, PrimeField, Subspace};
use segrelab_core::segre::correlation_of;
use segrelab_core::PointSet;

fn prime() -> impl Strategy<Value = u32> {
    prop_oneof![Just(2u32), Just(3), Just(5), Just(7)]
}

fn matrix(p: u32, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(0..p, cols), rows)
}

fn field_and_matrix() -> impl Strategy<Value = (PrimeField, Matrix, usize)> {
    (prime(), 1usize..5, 1usize..5).prop_flat_map(|(p, r, c)| (Just(PrimeField::new(p).unwrap()), matrix(p, r, c), Just(c)))
}

fn matmul(a: &Matrix, b: &Matrix, f: PrimeField) -> Matrix {
    let bt = transpose(b, b[0].len());
    a.iter().map(|row| bt.iter().map(|col| dot(row, col, f)).collect()).collect()
}

proptest! {
    #[test]
    fn rank_is_transpose_invariant((f, m, c) in field_and_matrix()) {
        prop_assert_eq!(rank(&m, f), rank(&transpose(&m, c), f));
    }

    #[test]
    fn rref_is_idempotent((f, m, _c) in field_and_matrix()) {
        let (r, k) = rref(&m, f);
        let (r2, k2) = rref(&r, f);
        prop_assert_eq!(k, k2);
        prop_assert_eq!(r, r2);
    }

    #[test]
    fn null_space_has_complementary_dimension((f, m, c) in field_and_matrix()) {
        let ns = null_space(&m, c, f);
        prop_assert_eq!(ns.len() + rank(&m, f), c);
        for v in &ns {
            for row in &m {
                prop_assert_eq!(dot(row, v, f), 0);
            }
        }
    }

    #[test]
    fn determinant_is_multiplicative((p, n, a, b) in (prime(), 1usize..4).prop_flat_map(|(p, n)| (Just(p), Just(n), matrix(p, n, n), matrix(p, n, n)))) {
        let f = PrimeField::new(p).unwrap();
        prop_assert_eq!(det(&matmul(&a, &b, f), f), f.mul(det(&a, f), det(&b, f)));
        prop_assert_eq!(det(&a, f) != 0, rank(&a, f) == n);
    }

    #[test]
    fn subspace_join_and_meet_dimensions((p, vs, ws) in prime().prop_flat_map(|p| (Just(p), matrix(p, 2, 4), matrix(p, 2, 4)))) {
        let f = PrimeField::new(p).unwrap();
        let u = Subspace::span(f, 4, &vs).unwrap();
        let w = Subspace::span(f, 4, &ws).unwrap();
        let j = u.join(&w).unwrap();
        let m = meet(&u, &w).unwrap();
        prop_assert_eq!(j.dim() + m.dim(), u.dim() + w.dim());
        prop_assert!(j.contains(&u) && j.contains(&w) && u.contains(&m) && w.contains(&m));
    }

    #[test]
    fn point_set_de_morgan(a in prop::collection::vec(0usize..130, 0..40), b in prop::collection::vec(0usize..130, 0..40)) {
        let x = PointSet::from_indices(130, a);
        let y = PointSet::from_indices(130, b);
        prop_assert_eq!(x.union(&y).complement(), x.complement().intersection(&y.complement()));
        prop_assert_eq!(x.intersection_len(&y), x.intersection(&y).len());
        prop_assert_eq!(x.difference(&y).len() + x.intersection_len(&y), x.len());
        prop_assert!(x.intersection(&y).is_subset(&x));
    }

    #[test]
    fn product_coordinates_round_trip(p in prime(), x in 0usize..64) {
        let g = grid(p).unwrap();
        let x = x % g.num_points();
        let c = g.decode(x);
        prop_assert_eq!(g.encode(&c).unwrap(), x);
        prop_assert_eq!(g.coord(x, 0) + (p as usize + 1) * g.coord(x, 1), x);
        for i in 0..2 {
            prop_assert_eq!(g.fibre(x, i).unwrap().len(), p as usize + 1);
            prop_assert!(g.fibre(x, i).unwrap().contains(x));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bilinear_loci_are_hyperplanes((p, m) in prime().prop_flat_map(|p| (Just(p), matrix(p, 2, 2)))) {
        prop_assume!(m.iter().flatten().any(|&v| v != 0));
        let f = PrimeField::new(p).unwrap();
        let g = grid(p).unwrap();
        let h = bilinear_hyperplane(&g, &m).unwrap();
        prop_assert!(g.carrier().is_hyperplane(&h));
        prop_assert!(g.slice_criterion(&h));
        let x = g.factor(0).label(0).and_then(|l| l.subspace()).unwrap().basis()[0].clone();
        let nondeg = det(&m, f) != 0;
        prop_assert_eq!(g.is_nondegenerate(&h).unwrap(), nondeg);
        if nondeg {
            let c = correlation_of(&g, &h).unwrap();
            prop_assert_eq!(c.reconstruct(&g), h.clone());
            let a = affinize(g.carrier(), &h).unwrap();
            prop_assert!(check_affine_axiom(a.carrier(), AffineAxiom::PartialAffine));
        }
        prop_assert_eq!(bilinear(&x, &m, &x, f) == 0, h.contains(0));
    }
}
