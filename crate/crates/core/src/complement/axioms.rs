use serde::{Deserialize, Serialize};

use super::ComplementError;
use crate::pls::{IncidenceStructure, ParallelStructure};
use crate::PointSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AffineAxiom {
    /// Parallel lines are equal or disjoint.
    PartialAffine,
    /// Every point has a parallel to every line through it.
    AffinePls,
    Tamaschke,
    Parallelogram,
}

impl AffineAxiom {
    pub const ALL: [AffineAxiom; 4] = [Self::PartialAffine, Self::AffinePls, Self::Tamaschke, Self::Parallelogram];
}

pub fn check_affine_axiom(a: &ParallelStructure, axiom: AffineAxiom) -> bool {
    affine_axiom_counterexample(a, axiom).is_none()
}

/// A witness violating `axiom`:
/// `[L, K]` for partial affinity, `[point, line]` for the affine PLS axiom,
/// `[p, L1, L2, K1, K2]` for Tamaschke, `[L1, L2, K1, K2]` for the parallelogram rule.
pub fn affine_axiom_counterexample(a: &ParallelStructure, axiom: AffineAxiom) -> Option<Vec<usize>> {
    let s = a.base();
    match axiom {
        AffineAxiom::PartialAffine => a.classes().iter().find_map(|c| {
            c.iter().enumerate().find_map(|(i, &l)| c[i + 1..].iter().find(|&&k| s.lines_meet(l, k)).map(|&k| vec![l, k]))
        }),
        AffineAxiom::AffinePls => {
            for x in 0..s.num_points() {
                for (ci, c) in a.classes().iter().enumerate() {
                    if !s.lines_through(x).iter().any(|&l| a.class_of(l) == ci) {
                        return Some(vec![x, c[0]]);
                    }
                }
            }
            None
        }
        AffineAxiom::Tamaschke => tamaschke_counterexample(a, s),
        AffineAxiom::Parallelogram => parallelogram_counterexample(a, s),
    }
}

fn tamaschke_counterexample(a: &ParallelStructure, s: &IncidenceStructure) -> Option<Vec<usize>> {
    for p in 0..s.num_points() {
        let through = s.lines_through(p);
        for &l1 in through {
            for &l2 in through {
                if l1 == l2 {
                    continue;
                }
                for &q in s.line(l1) {
                    if q == p {
                        continue;
                    }
                    for &k1 in s.lines_through(q) {
                        if k1 == l1 || s.line_contains(k1, p) || !s.lines_meet(k1, l2) {
                            continue;
                        }
                        for &k2 in &a.classes()[a.class_of(k1)] {
                            if k2 == k1 || s.line_contains(k2, p) || !s.lines_meet(k2, l1) {
                                continue;
                            }
                            if !s.lines_meet(k2, l2) {
                                return Some(vec![p, l1, l2, k1, k2]);
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

fn parallelogram_counterexample(a: &ParallelStructure, s: &IncidenceStructure) -> Option<Vec<usize>> {
    let meeting = |l: usize| -> Vec<usize> {
        let mut out: Vec<usize> = s.line(l).iter().flat_map(|&x| s.lines_through(x).iter().copied()).collect();
        out.sort_unstable();
        out.dedup();
        out
    };
    for k1 in 0..s.num_lines() {
        for l1 in meeting(k1) {
            for &l2 in &a.classes()[a.class_of(l1)] {
                if !s.lines_meet(l2, k1) {
                    continue;
                }
                for &k2 in &a.classes()[a.class_of(k1)] {
                    if s.lines_meet(l1, k2) && !s.lines_meet(l2, k2) {
                        return Some(vec![l1, l2, k1, k2]);
                    }
                }
            }
        }
    }
    None
}

/// The substructure on `subset` with the lines inside it and the restricted parallelism;
/// also returns the map from new point indices to old ones.
pub fn induced_parallel(a: &ParallelStructure, subset: &PointSet) -> Result<(ParallelStructure, Vec<usize>), ComplementError> {
    let s = a.base();
    let lines = s.lines_within(subset);
    let (sub, map) = s.restrict(subset, &lines)?;
    let keys: Vec<usize> = (0..sub.num_lines())
        .map(|l| {
            let old: Vec<usize> = sub.line(l).iter().map(|&x| map[x]).collect();
            a.class_of(s.line_index(&old).expect("restricted line comes from the parent"))
        })
        .collect();
    Ok((ParallelStructure::from_keys(sub, keys)?, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complement::affinize;
    use crate::spaces::{affine_space, projective_space};

    #[test]
    fn affine_plane_satisfies_all_axioms() {
        let ag = affine_space(2, 3).unwrap();
        let a = &ag;
        for ax in AffineAxiom::ALL {
            assert!(check_affine_axiom(a, ax), "{ax:?}");
        }
    }

    #[test]
    fn trivial_parallelism_breaks_affinity() {
        let pg = projective_space(3, 3).unwrap();
        let a = affinize(&pg, &pg.line_set(0)).unwrap();
        let s = a.structure().clone();
        let n = s.num_lines();
        let trivial = ParallelStructure::from_keys(s, 0..n).unwrap();
        assert!(check_affine_axiom(&trivial, AffineAxiom::PartialAffine));
        assert!(!check_affine_axiom(&trivial, AffineAxiom::AffinePls));
    }

    #[test]
    fn induced_parallel_keeps_classes() {
        let ag = affine_space(3, 3).unwrap();
        let a = &ag;
        let s = a.base();
        let off = (0..s.num_points()).find(|&x| !s.line_contains(0, x)).unwrap();
        let seed = PointSet::from_indices(s.num_points(), s.line(0).iter().copied().chain([off]));
        let plane = s.subspace_closure(&seed);
        let (sub, map) = induced_parallel(a, &plane).unwrap();
        assert_eq!((map.len(), sub.classes().len()), (9, 4));
        for ax in AffineAxiom::ALL {
            assert!(check_affine_axiom(&sub, ax));
        }
    }
}
