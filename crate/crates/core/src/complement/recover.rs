use std::collections::{BTreeMap, BTreeSet, HashSet};

use super::{AffinizedStructure, ComplementError};
use crate::pls::IncidenceStructure;
use crate::PointSet;

/// The structure rebuilt on parallel classes: three classes are collinear when they are the
/// directions of the sides of some triangle of the complement.
///
/// Kept as raw data: the structure induced on a hyperplane may have isolated points or no lines.
#[derive(Clone, Debug)]
pub struct RecoveredDirections {
    /// One point per parallel class.
    pub num_points: usize,
    /// Sorted, lexicographically ordered lines on the classes.
    pub lines: Vec<Vec<usize>>,
    /// Ambient point on `H` represented by each class.
    pub class_direction: Vec<usize>,
}

impl RecoveredDirections {
    /// Whether the class map is an isomorphism onto the structure induced on `H`.
    pub fn matches_ambient(&self, a: &AffinizedStructure) -> bool {
        let h = a.removed();
        let m = a.ambient();
        let mut mapped: Vec<Vec<usize>> = self
            .lines
            .iter()
            .map(|l| {
                let mut v: Vec<usize> = l.iter().map(|&c| self.class_direction[c]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        mapped.sort();
        let mut expected: Vec<Vec<usize>> = m.lines_within(h).into_iter().map(|l| m.line(l).to_vec()).collect();
        expected.sort();
        let covered = PointSet::from_indices(m.num_points(), self.class_direction.iter().copied());
        mapped == expected && covered == *h
    }

    /// The recovered structure as a partial linear space, when it is one.
    pub fn structure(&self) -> Result<IncidenceStructure, ComplementError> {
        Ok(IncidenceStructure::new(self.num_points, self.lines.clone())?)
    }
}

/// Rebuilds `H` from the parallel classes of the complement. Needs a Veblenian gamma ambient
/// space with lines of at least 3 points and a flappy `H`.
pub fn recover_directions(a: &AffinizedStructure) -> Result<RecoveredDirections, ComplementError> {
    let m = a.ambient();
    if m.min_line_size() < 3 {
        return Err(ComplementError::HypothesisFailed("ambient lines need at least 3 points".into()));
    }
    if !m.is_gamma() || !m.is_veblenian() {
        return Err(ComplementError::HypothesisFailed("the ambient space is not a Veblenian gamma space".into()));
    }
    if !m.is_flappy(a.removed())? {
        return Err(ComplementError::HypothesisFailed("the hyperplane is not flappy".into()));
    }
    let par = a.carrier();
    let s = a.structure();
    let mut triples: HashSet<[usize; 3]> = HashSet::new();
    for [x, y, z] in s.triangles() {
        let side = |u: usize, v: usize| par.class_of(s.line_through(u, v).expect("triangle sides are lines"));
        let mut t = [side(y, z), side(x, z), side(x, y)];
        t.sort_unstable();
        if t[0] != t[1] && t[1] != t[2] {
            triples.insert(t);
        }
    }
    let mut through_pair: BTreeMap<(usize, usize), BTreeSet<usize>> = BTreeMap::new();
    for &[c0, c1, c2] in &triples {
        through_pair.entry((c0, c1)).or_default().insert(c2);
        through_pair.entry((c0, c2)).or_default().insert(c1);
        through_pair.entry((c1, c2)).or_default().insert(c0);
    }
    let lines: BTreeSet<Vec<usize>> = through_pair
        .iter()
        .map(|(&(c0, c1), rest)| {
            let mut l: Vec<usize> = rest.iter().copied().chain([c0, c1]).collect();
            l.sort_unstable();
            l
        })
        .collect();
    let nc = par.classes().len();
    let class_direction = (0..nc).map(|c| a.class_direction(c)).collect();
    Ok(RecoveredDirections { num_points: nc, lines: lines.into_iter().collect(), class_direction })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complement::affinize;
    use crate::spaces::projective_space;

    #[test]
    fn recovers_plane_at_infinity_of_solid() {
        let pg = projective_space(4, 3).unwrap();
        let h = PointSet::from_indices(
            pg.num_points(),
            (0..pg.num_points()).filter(|&x| pg.label(x).unwrap().subspace().unwrap().basis()[0][3] == 0),
        );
        let a = affinize(&pg, &h).unwrap();
        let r = recover_directions(&a).unwrap();
        assert_eq!((r.num_points, r.lines.len()), (13, 13));
        assert!(r.matches_ambient(&a));
    }

    #[test]
    fn line_free_hyperplane_is_recovered_as_points() {
        let g = crate::instances::grid(2).unwrap();
        let h = crate::instances::grid_perp_hyperplane(&g).unwrap();
        let a = affinize(g.carrier(), &h).unwrap();
        let r = recover_directions(&a).unwrap();
        assert_eq!((r.num_points, r.lines.len()), (3, 0));
        assert!(r.matches_ambient(&a));
        assert!(r.structure().is_err());
    }
}
