use serde::{Deserialize, Serialize};

use super::{SegreError, SegreProduct};
use crate::linalg::Subspace;
use crate::pls::IncidenceStructure;
use crate::PointSet;

/// How a hyperplane was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Enumerated,
    DegenerateProduct,
    Form,
    WitnessW,
    Intersection,
    Correlation,
    PolarForm,
}

/// A point set certified to be a hyperplane of the structure it was built on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneHandle {
    points: PointSet,
    provenance: Provenance,
}

impl HyperplaneHandle {
    pub fn new(s: &IncidenceStructure, points: PointSet, provenance: Provenance) -> Result<Self, SegreError> {
        if points.capacity() != s.num_points() || !s.is_hyperplane(&points) {
            return Err(SegreError::NotAHyperplane);
        }
        Ok(Self { points, provenance })
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn into_points(self) -> PointSet {
        self.points
    }
}

/// `⋃ᵢ S₁ × … × Hᵢ × … × Sₙ` for factor hyperplanes `Hᵢ`.
pub fn degenerate_product_hyperplane(p: &SegreProduct, factor_hyperplanes: &[PointSet]) -> Result<HyperplaneHandle, SegreError> {
    if factor_hyperplanes.len() != p.arity() {
        return Err(SegreError::WrongArity { expected: p.arity(), actual: factor_hyperplanes.len() });
    }
    for (i, h) in factor_hyperplanes.iter().enumerate() {
        if h.capacity() != p.factor(i).num_points() || !p.factor(i).is_hyperplane(h) {
            return Err(SegreError::FactorNotAHyperplane { factor: i });
        }
    }
    let n = p.num_points();
    let points = PointSet::from_indices(n, (0..n).filter(|&x| (0..p.arity()).any(|i| factor_hyperplanes[i].contains(p.coord(x, i)))));
    HyperplaneHandle::new(p.carrier(), points, Provenance::DegenerateProduct)
}

/// Subspace label of every point, all of dimension `k` in GF(p)^n.
pub(crate) fn subspace_labels(s: &IncidenceStructure, factor: usize) -> Result<Vec<&Subspace>, SegreError> {
    let labels = s.labels().ok_or(SegreError::FactorShape { factor })?;
    let subs: Option<Vec<&Subspace>> = labels.iter().map(|l| l.subspace()).collect();
    let subs = subs.ok_or(SegreError::FactorShape { factor })?;
    let (n, k) = (subs[0].ambient_dim(), subs[0].dim());
    if subs.iter().any(|u| u.ambient_dim() != n || u.dim() != k) {
        return Err(SegreError::FactorShape { factor });
    }
    Ok(subs)
}

/// `H(W)`: the k-subspaces meeting a fixed subspace `W` of codimension k nontrivially.
pub fn witness_hyperplane_w(g: &IncidenceStructure, w: &Subspace) -> Result<HyperplaneHandle, SegreError> {
    let subs = subspace_labels(g, 0)?;
    let (n, k) = (subs[0].ambient_dim(), subs[0].dim());
    if w.ambient_dim() != n || w.dim() + k != n {
        return Err(SegreError::InvalidDimension { n, k: w.dim() });
    }
    let points = PointSet::from_indices(subs.len(), (0..subs.len()).filter(|&x| subs[x].join_dim(w) < n));
    HyperplaneHandle::new(g, points, Provenance::WitnessW)
}

/// `{(U₁, U₂) : U₁ ∩ U₂ ≠ 0}` in the product of the k₁- and k₂-subspace Grassmann spaces of
/// one space of dimension k₁ + k₂.
pub fn intersection_hyperplane(p: &SegreProduct) -> Result<HyperplaneHandle, SegreError> {
    if p.arity() != 2 {
        return Err(SegreError::WrongArity { expected: 2, actual: p.arity() });
    }
    let s1 = subspace_labels(p.factor(0), 0)?;
    let s2 = subspace_labels(p.factor(1), 1)?;
    let (n, k1, k2) = (s1[0].ambient_dim(), s1[0].dim(), s2[0].dim());
    if s2[0].ambient_dim() != n || k1 + k2 != n || k1 <= 1 || k1 + 1 >= n {
        return Err(SegreError::InvalidDimension { n, k: k1 });
    }
    let total = p.num_points();
    let points = PointSet::from_indices(total, (0..total).filter(|&x| s1[p.coord(x, 0)].join_dim(s2[p.coord(x, 1)]) < n));
    HyperplaneHandle::new(p.carrier(), points, Provenance::Intersection)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PrimeField;
    use crate::spaces::{grassmann_space, projective_space};

    #[test]
    fn fano_square_degenerate_hyperplane() {
        let f = projective_space(3, 2).unwrap();
        let p = SegreProduct::new(vec![f.clone(), f.clone()]).unwrap();
        let line = f.line_set(0);
        let h = degenerate_product_hyperplane(&p, &[line.clone(), line]).unwrap();
        assert_eq!(h.len(), 33);
        assert!(!p.is_nondegenerate(h.points()).unwrap());
        assert!(!p.carrier().is_spiky(h.points()).unwrap());
    }

    #[test]
    fn witness_hyperplane_count() {
        let g = grassmann_space(4, 2, 2).unwrap();
        let field = PrimeField::new(2).unwrap();
        let w = Subspace::span(field, 4, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap();
        let h = witness_hyperplane_w(&g, &w).unwrap();
        assert_eq!(h.len(), 19);
        assert!(!g.is_spiky(h.points()).unwrap());
        let bad = Subspace::span(field, 4, &[vec![1, 0, 0, 0]]).unwrap();
        assert!(matches!(witness_hyperplane_w(&g, &bad), Err(SegreError::InvalidDimension { .. })));
    }

    #[test]
    fn rejects_non_hyperplanes() {
        let f = projective_space(3, 2).unwrap();
        assert!(matches!(
            HyperplaneHandle::new(&f, PointSet::from_indices(7, [0]), Provenance::Enumerated),
            Err(SegreError::NotAHyperplane)
        ));
    }
}
