use std::collections::HashMap;

use super::{affinize, AffinizedStructure, ComplementError};
use crate::segre::SegreProduct;
use crate::PointSet;

/// One member of the covering: the points of the complement obtained by substituting a
/// maximal strong subspace of a slice complement into slot `slot` of `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringMember {
    pub slot: usize,
    /// Product point whose `slot` coordinate is 0.
    pub base: usize,
    /// Factor points of the strong subspace.
    pub factor_points: Vec<usize>,
    /// The member as complement points.
    pub points: PointSet,
}

/// The family of substituted maximal strong subspaces of slice complements. Requires Veblenian
/// gamma factors with lines of at least 4 points.
pub fn covering(p: &SegreProduct, a: &AffinizedStructure) -> Result<Vec<CoveringMember>, ComplementError> {
    if a.ambient() != p.carrier() {
        return Err(ComplementError::HypothesisFailed("the complement is not taken in this product".into()));
    }
    for (i, f) in p.factors().iter().enumerate() {
        if f.min_line_size() < 4 || !f.is_gamma() || !f.is_veblenian() {
            return Err(ComplementError::HypothesisFailed(format!("factor {i} is not a Veblenian gamma space with lines of size at least 4")));
        }
    }
    let h = a.removed();
    let mut out = Vec::new();
    for slot in 0..p.arity() {
        let mut cache: HashMap<Vec<usize>, Vec<Vec<usize>>> = HashMap::new();
        for base in p.fibre_bases(slot) {
            let slice = p.slice(h, base, slot);
            if slice.is_full() {
                continue;
            }
            let key = slice.to_vec();
            if !cache.contains_key(&key) {
                let local = affinize(p.factor(slot), &slice)?;
                let strong = local.structure().strong_subspaces(true)?;
                let members = strong.iter().map(|x| x.iter().map(|y| local.to_ambient(y)).collect()).collect();
                cache.insert(key.clone(), members);
            }
            for factor_points in &cache[&key] {
                let mut pts = PointSet::empty(a.structure().num_points());
                for &y in factor_points {
                    let z = p.subst(base, slot, y)?;
                    pts.insert(a.from_ambient(z).expect("off the slice means off the hyperplane"));
                }
                out.push(CoveringMember { slot, base, factor_points: factor_points.clone(), points: pts });
            }
        }
    }
    Ok(out)
}

/// A maximal strong subspace on either side that does not transfer: a complement strong
/// subspace whose closure by directions is not strong in the ambient space, or an ambient one
/// (not inside `H`) whose trace on the complement is not strong there. Returned as ambient points.
pub fn strong_transfer_counterexample(a: &AffinizedStructure) -> Result<Option<PointSet>, ComplementError> {
    let s = a.structure();
    let m = a.ambient();
    for x in s.strong_subspaces(true)? {
        let mut y = a.set_to_ambient(&x);
        for l in s.lines_within(&x) {
            y.insert(a.direction(l));
        }
        if !(m.is_subspace(&y) && m.is_clique(&y)) {
            return Ok(Some(y));
        }
    }
    for y in m.strong_subspaces(true)? {
        if y.is_subset(a.removed()) {
            continue;
        }
        let x = a.set_from_ambient(&y);
        if !(s.is_subspace(&x) && s.is_clique(&x)) {
            return Ok(Some(y));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complement::{check_affine_axiom, induced_parallel, AffineAxiom};
    use crate::linalg::{MultiForm, PrimeField};
    use crate::segre::hyperplane_from_form;
    use crate::spaces::projective_space;

    #[test]
    fn planes_cover_the_complement() {
        let f = projective_space(3, 3).unwrap();
        let p = SegreProduct::new(vec![f.clone(), f]).unwrap();
        let field = PrimeField::new(3).unwrap();
        let mu = MultiForm::bilinear(field, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let h = hyperplane_from_form(&p, &mu).unwrap().hyperplane().unwrap().points().clone();
        let a = affinize(p.carrier(), &h).unwrap();
        let cover = covering(&p, &a).unwrap();
        assert_eq!(cover.len(), 26);
        let mut union = PointSet::empty(a.structure().num_points());
        for m in &cover {
            assert_eq!(m.points.len(), 9);
            union.union_with(&m.points);
            let (sub, _) = induced_parallel(a.carrier(), &m.points).unwrap();
            assert!(AffineAxiom::ALL.iter().all(|&ax| check_affine_axiom(&sub, ax)));
        }
        assert!(union.is_full());
        assert_eq!(strong_transfer_counterexample(&a).unwrap(), None);
    }
}
