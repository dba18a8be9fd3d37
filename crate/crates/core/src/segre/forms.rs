use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::hyperplanes::subspace_labels;
use super::{HyperplaneHandle, Provenance, SegreError, SegreProduct};
use crate::linalg::{wedge_table, BilinearForm, LinalgError, MultiForm, Subspace};
use crate::pls::IncidenceStructure;
use crate::PointSet;

/// Zero locus of a form: a hyperplane or the whole point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormLocus {
    Hyperplane(HyperplaneHandle),
    AllOfSpace,
}

impl FormLocus {
    pub fn hyperplane(&self) -> Option<&HyperplaneHandle> {
        match self {
            FormLocus::Hyperplane(h) => Some(h),
            FormLocus::AllOfSpace => None,
        }
    }
}

fn factor_wedges(s: &IncidenceStructure, factor: usize, dim: usize, arity: usize) -> Result<Vec<Vec<u32>>, SegreError> {
    let subs = subspace_labels(s, factor)?;
    if subs[0].ambient_dim() != dim || subs[0].dim() != arity {
        return Err(SegreError::Linalg(LinalgError::ShapeMismatch(format!(
            "factor {factor} holds {}-subspaces of dimension {}, the form expects {arity}-subspaces of dimension {dim}",
            subs[0].dim(),
            subs[0].ambient_dim()
        ))));
    }
    let owned: Vec<Subspace> = subs.into_iter().cloned().collect();
    Ok(wedge_table(&owned))
}

fn check_arity(p: &SegreProduct, mu: &MultiForm) -> Result<(), SegreError> {
    if mu.segments() != p.arity() {
        return Err(SegreError::WrongArity { expected: p.arity(), actual: mu.segments() });
    }
    Ok(())
}

/// `{(⟨u¹⟩, …, ⟨uⁿ⟩) : μ(u¹, …, uⁿ) = 0}`, evaluated on canonical bases of the point labels.
pub fn form_zero_locus(p: &SegreProduct, mu: &MultiForm) -> Result<PointSet, SegreError> {
    check_arity(p, mu)?;
    let tables = (0..p.arity())
        .map(|i| factor_wedges(p.factor(i), i, mu.dims()[i], mu.arities()[i]))
        .collect::<Result<Vec<_>, _>>()?;
    let ev = mu.evaluator();
    let n = p.num_points();
    let zeros: Vec<usize> = (0..n)
        .into_par_iter()
        .filter(|&x| {
            let w: Vec<&[u32]> = (0..p.arity()).map(|i| tables[i][p.coord(x, i)].as_slice()).collect();
            ev.eval(&w) == 0
        })
        .collect();
    Ok(PointSet::from_indices(n, zeros))
}

fn locus_to_result(s: &IncidenceStructure, locus: PointSet, provenance: Provenance) -> Result<FormLocus, SegreError> {
    if locus.is_full() {
        Ok(FormLocus::AllOfSpace)
    } else {
        Ok(FormLocus::Hyperplane(HyperplaneHandle::new(s, locus, provenance)?))
    }
}

/// Zero locus of a segment-wise alternating form on a product of Grassmann spaces.
pub fn hyperplane_from_form(p: &SegreProduct, mu: &MultiForm) -> Result<FormLocus, SegreError> {
    let locus = form_zero_locus(p, mu)?;
    locus_to_result(p.carrier(), locus, Provenance::Form)
}

/// Zero locus of a one-segment alternating form on a single Grassmann space.
pub fn grassmann_form_hyperplane(g: &IncidenceStructure, mu: &MultiForm) -> Result<FormLocus, SegreError> {
    if mu.segments() != 1 {
        return Err(SegreError::WrongArity { expected: 1, actual: mu.segments() });
    }
    let table = factor_wedges(g, 0, mu.dims()[0], mu.arities()[0])?;
    let ev = mu.evaluator();
    let n = g.num_points();
    let locus = PointSet::from_indices(n, (0..n).filter(|&x| ev.eval(&[table[x].as_slice()]) == 0));
    locus_to_result(g, locus, Provenance::Form)
}

/// The hypothesis clause that failed for a polar product construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum PolarClause {
    /// The product of isotropic point sets lies inside the zero locus.
    Containment,
    /// The form vanishes identically on some segment for some choice of the others.
    NonZeroOnSegment { segment: usize },
    /// A slice of the locus through `point` in direction `slot` has fewer than two points.
    SliceTooSmall { point: usize, slot: usize, size: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolarOutcome {
    Hyperplane(HyperplaneHandle),
    HypothesisFailed(PolarClause),
}

/// `H(μ) ∩ (Q₁ × … × Qₙ)` on a product of polar Grassmann spaces, after checking, in order,
/// containment, non-vanishing on every segment, and that every slice has at least two points.
pub fn polar_product_hyperplane(p: &SegreProduct, mu: &MultiForm, xis: &[BilinearForm]) -> Result<PolarOutcome, SegreError> {
    check_arity(p, mu)?;
    if xis.len() != p.arity() {
        return Err(SegreError::WrongArity { expected: p.arity(), actual: xis.len() });
    }
    for (i, xi) in xis.iter().enumerate() {
        let subs = subspace_labels(p.factor(i), i)?;
        if xi.dim() != subs[0].ambient_dim() || !subs.iter().all(|u| xi.is_totally_isotropic(u)) {
            return Err(SegreError::FactorShape { factor: i });
        }
    }
    let locus = form_zero_locus(p, mu)?;
    if locus.is_full() {
        return Ok(PolarOutcome::HypothesisFailed(PolarClause::Containment));
    }
    if let Some(segment) = (0..mu.segments()).find(|&i| !mu.segment_nonzero(i)) {
        return Ok(PolarOutcome::HypothesisFailed(PolarClause::NonZeroOnSegment { segment }));
    }
    for slot in 0..p.arity() {
        for a in p.fibre_bases(slot) {
            let size = p.slice(&locus, a, slot).len();
            if size < 2 {
                return Ok(PolarOutcome::HypothesisFailed(PolarClause::SliceTooSmall { point: a, slot, size }));
            }
        }
    }
    Ok(PolarOutcome::Hyperplane(HyperplaneHandle::new(p.carrier(), locus, Provenance::PolarForm)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PrimeField;
    use crate::spaces::{grassmann_space, polar_space, projective_space};

    #[test]
    fn identity_form_on_grid() {
        let f = PrimeField::new(2).unwrap();
        let l = projective_space(2, 2).unwrap();
        let p = SegreProduct::new(vec![l.clone(), l]).unwrap();
        let mu = MultiForm::bilinear(f, &[vec![1, 0], vec![0, 1]]).unwrap();
        let h = hyperplane_from_form(&p, &mu).unwrap();
        let h = h.hyperplane().unwrap();
        assert_eq!(h.len(), 3);
        assert!(p.is_nondegenerate(h.points()).unwrap());
        let zero = MultiForm::zero(f, vec![2, 2], vec![1, 1]).unwrap();
        assert_eq!(hyperplane_from_form(&p, &zero).unwrap(), FormLocus::AllOfSpace);
    }

    #[test]
    fn symplectic_form_on_grassmannian() {
        let f = PrimeField::new(2).unwrap();
        let g = grassmann_space(4, 2, 2).unwrap();
        let mu = BilinearForm::symplectic(f, 4).unwrap().to_multiform().unwrap();
        let h = grassmann_form_hyperplane(&g, &mu).unwrap();
        let h = h.hyperplane().unwrap();
        assert_eq!(h.len(), 15);
        assert!(g.is_flappy(h.points()).unwrap());
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let f = PrimeField::new(2).unwrap();
        let l = projective_space(2, 2).unwrap();
        let p = SegreProduct::new(vec![l.clone(), l]).unwrap();
        let mu = MultiForm::bilinear(f, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert!(matches!(hyperplane_from_form(&p, &mu), Err(SegreError::Linalg(LinalgError::ShapeMismatch(_)))));
    }

    #[test]
    fn polar_lines_fail_the_slice_clause() {
        let f = PrimeField::new(3).unwrap();
        let xi = BilinearForm::symplectic(f, 2).unwrap();
        let q = polar_space(&xi).unwrap();
        let p = SegreProduct::new(vec![q.clone(), q]).unwrap();
        let mu = MultiForm::bilinear(f, &[vec![1, 0], vec![0, 1]]).unwrap();
        let out = polar_product_hyperplane(&p, &mu, &[xi.clone(), xi.clone()]).unwrap();
        assert!(matches!(out, PolarOutcome::HypothesisFailed(PolarClause::SliceTooSmall { .. })));
        let zero = MultiForm::zero(f, vec![2, 2], vec![1, 1]).unwrap();
        let out = polar_product_hyperplane(&p, &zero, &[xi.clone(), xi]).unwrap();
        assert_eq!(out, PolarOutcome::HypothesisFailed(PolarClause::Containment));
    }
}
