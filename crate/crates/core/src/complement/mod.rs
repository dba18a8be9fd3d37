//! Hyperplane complements with their natural parallelism.
//!
//! Removing a hyperplane `H` leaves the points off `H` and the lines not inside `H`, each
//! shortened by its unique point on `H` (its direction). Lines with the same direction are
//! parallel. On top of this representation the module provides the affine axioms, the
//! incidence-defined parallelisms, the covering by strong subspaces, recovery of `H` from the
//! parallel classes, and extension of automorphisms back to the ambient space.

mod automorphisms;
mod axioms;
mod covering;
mod incidence;
mod recover;

use crate::pls::{IncidenceStructure, ParallelStructure, PlsError};
use crate::segre::SegreError;
use crate::PointSet;

pub use automorphisms::{
    extend_automorphism, extension_hypotheses, near_flappy_violation, near_plane, near_plane_line_violation,
    restrict_automorphism, NearPlane, NearPlaneKind,
};
pub use axioms::{affine_axiom_counterexample, check_affine_axiom, induced_parallel, AffineAxiom};
pub use covering::{covering, strong_transfer_counterexample, CoveringMember};
pub use incidence::{
    ast_witness, par_ast, par_quadr, par_veblen, quadr_witness, quadrangle_relations, NaturalParallelism, QuadrangleRelations,
};
pub use recover::{recover_directions, RecoveredDirections};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplementError {
    #[error("the removed set is not a hyperplane")]
    NotAHyperplane,
    #[error("hypothesis not satisfied: {0}")]
    HypothesisFailed(String),
    #[error("the map is not an automorphism of the complement")]
    NotAnAutomorphism,
    #[error("the map does not preserve the parallelism")]
    NotParallelismPreserving,
    #[error("the extended map is not an automorphism preserving the hyperplane")]
    ExtensionFailed,
    #[error(transparent)]
    Pls(#[from] PlsError),
    #[error(transparent)]
    Segre(#[from] SegreError),
}

/// The complement of a hyperplane, with its direction map.
#[derive(Clone, Debug)]
pub struct AffinizedStructure {
    ambient: IncidenceStructure,
    removed: PointSet,
    carrier: ParallelStructure,
    direction: Vec<usize>,
    ambient_line: Vec<usize>,
    to_ambient: Vec<usize>,
    from_ambient: Vec<Option<usize>>,
}

/// Removes the hyperplane `h` from `m`.
pub fn affinize(m: &IncidenceStructure, h: &PointSet) -> Result<AffinizedStructure, ComplementError> {
    if h.capacity() != m.num_points() || !m.is_hyperplane(h) {
        return Err(ComplementError::NotAHyperplane);
    }
    let to_ambient: Vec<usize> = (0..m.num_points()).filter(|&x| !h.contains(x)).collect();
    let mut from_ambient = vec![None; m.num_points()];
    for (i, &x) in to_ambient.iter().enumerate() {
        from_ambient[x] = Some(i);
    }
    let mut surviving: Vec<(Vec<usize>, usize, usize)> = Vec::new();
    for (l, pts) in m.lines().iter().enumerate() {
        if pts.iter().all(|&x| h.contains(x)) {
            continue;
        }
        let dir = *pts.iter().find(|&&x| h.contains(x)).expect("every line meets a hyperplane");
        let kept: Vec<usize> = pts.iter().filter_map(|&x| from_ambient[x]).collect();
        surviving.push((kept, l, dir));
    }
    surviving.sort();
    let lines: Vec<Vec<usize>> = surviving.iter().map(|(pts, _, _)| pts.clone()).collect();
    let mut base = IncidenceStructure::new(to_ambient.len(), lines)?;
    if let Some(labels) = m.labels() {
        base = base.with_labels(to_ambient.iter().map(|&x| labels[x].clone()).collect())?;
    }
    debug_assert!(base.lines().iter().zip(&surviving).all(|(a, (b, _, _))| a == b));
    let direction: Vec<usize> = surviving.iter().map(|&(_, _, d)| d).collect();
    let ambient_line = surviving.iter().map(|&(_, l, _)| l).collect();
    let carrier = ParallelStructure::from_keys(base, direction.iter().copied())?;
    Ok(AffinizedStructure { ambient: m.clone(), removed: h.clone(), carrier, direction, ambient_line, to_ambient, from_ambient })
}

impl AffinizedStructure {
    pub fn ambient(&self) -> &IncidenceStructure {
        &self.ambient
    }

    pub fn removed(&self) -> &PointSet {
        &self.removed
    }

    pub fn carrier(&self) -> &ParallelStructure {
        &self.carrier
    }

    pub fn into_carrier(self) -> ParallelStructure {
        self.carrier
    }

    /// The incidence structure of the complement, without parallelism.
    pub fn structure(&self) -> &IncidenceStructure {
        self.carrier.base()
    }

    /// The ambient point on `H` that line `l` of the complement lost.
    pub fn direction(&self, l: usize) -> usize {
        self.direction[l]
    }

    pub fn ambient_line(&self, l: usize) -> usize {
        self.ambient_line[l]
    }

    pub fn to_ambient(&self, x: usize) -> usize {
        self.to_ambient[x]
    }

    pub fn from_ambient(&self, x: usize) -> Option<usize> {
        self.from_ambient[x]
    }

    /// Ambient indices of the complement's points, in order.
    pub fn point_map(&self) -> &[usize] {
        &self.to_ambient
    }

    /// Direction of each parallel class.
    pub fn class_direction(&self, c: usize) -> usize {
        self.direction[self.carrier.classes()[c][0]]
    }

    /// Complement line lying on the ambient line `l`, if `l` is not inside `H`.
    pub fn line_from_ambient(&self, l: usize) -> Option<usize> {
        let pts: Vec<usize> = self.ambient.line(l).iter().filter_map(|&x| self.from_ambient[x]).collect();
        if pts.len() < 2 {
            return None;
        }
        self.structure().line_index(&pts)
    }

    /// Ambient point set of a complement point set.
    pub fn set_to_ambient(&self, set: &PointSet) -> PointSet {
        PointSet::from_indices(self.ambient.num_points(), set.iter().map(|x| self.to_ambient[x]))
    }

    /// Complement point set of an ambient point set (points on `H` are dropped).
    pub fn set_from_ambient(&self, set: &PointSet) -> PointSet {
        PointSet::from_indices(self.to_ambient.len(), set.iter().filter_map(|x| self.from_ambient[x]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::projective_space;

    #[test]
    fn plane_minus_line_is_affine_plane() {
        let pg = projective_space(3, 3).unwrap();
        let a = affinize(&pg, &pg.line_set(0)).unwrap();
        let s = a.structure();
        assert_eq!((s.num_points(), s.num_lines(), a.carrier().classes().len()), (9, 12, 4));
        for l in 0..s.num_lines() {
            let amb = a.ambient_line(l);
            assert!(pg.line_contains(amb, a.direction(l)));
            assert!(a.removed().contains(a.direction(l)));
            assert_eq!(a.line_from_ambient(amb), Some(l));
        }
        for (c, cls) in a.carrier().classes().iter().enumerate() {
            assert!(cls.iter().all(|&l| a.direction(l) == a.class_direction(c)));
        }
    }

    #[test]
    fn rejects_non_hyperplane() {
        let pg = projective_space(3, 2).unwrap();
        assert!(matches!(affinize(&pg, &PointSet::from_indices(7, [0])), Err(ComplementError::NotAHyperplane)));
    }
}
