use super::hyperplanes::subspace_labels;
use super::{HyperplaneHandle, Provenance, SegreError, SegreProduct};
use crate::linalg::{matrix, Matrix, PrimeField, Vector};
use crate::PointSet;

/// The two slice maps of a hyperplane in a product of two spaces: `forward[a₁]` is the set of
/// second coordinates over `a₁`, `backward[a₂]` the set of first coordinates over `a₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correlation {
    pub forward: Vec<PointSet>,
    pub backward: Vec<PointSet>,
}

impl Correlation {
    /// Builds the correlation determined by `forward` alone and checks it describes a hyperplane.
    pub fn from_forward(p: &SegreProduct, forward: Vec<PointSet>) -> Result<(Self, HyperplaneHandle), SegreError> {
        if p.arity() != 2 {
            return Err(SegreError::WrongArity { expected: 2, actual: p.arity() });
        }
        let (n1, n2) = (p.factor(0).num_points(), p.factor(1).num_points());
        if forward.len() != n1 || forward.iter().any(|s| s.capacity() != n2) {
            return Err(SegreError::IndexOutOfRange("forward map has the wrong shape".into()));
        }
        let backward = (0..n2)
            .map(|b| PointSet::from_indices(n1, (0..n1).filter(|&a| forward[a].contains(b))))
            .collect();
        let c = Self { forward, backward };
        let h = HyperplaneHandle::new(p.carrier(), c.reconstruct(p), Provenance::Correlation)?;
        Ok((c, h))
    }

    /// `{(a₁, a₂) : a₂ ∈ forward[a₁]}`.
    pub fn reconstruct(&self, p: &SegreProduct) -> PointSet {
        let n = p.num_points();
        PointSet::from_indices(n, (0..n).filter(|&x| self.forward[p.coord(x, 0)].contains(p.coord(x, 1))))
    }

    /// Both maps are mutually inverse in the incidence sense.
    pub fn is_compatible(&self) -> bool {
        self.backward.iter().enumerate().all(|(b, set)| {
            (0..self.forward.len()).all(|a| set.contains(a) == self.forward[a].contains(b))
        })
    }

    /// No value is a whole factor.
    pub fn is_nondegenerate(&self) -> bool {
        !self.forward.iter().chain(&self.backward).any(PointSet::is_full)
    }
}

/// The correlation of a hyperplane in a two-factor product.
pub fn correlation_of(p: &SegreProduct, h: &PointSet) -> Result<Correlation, SegreError> {
    if p.arity() != 2 {
        return Err(SegreError::WrongArity { expected: 2, actual: p.arity() });
    }
    if !p.carrier().is_hyperplane(h) {
        return Err(SegreError::NotAHyperplane);
    }
    let forward = (0..p.factor(0).num_points())
        .map(|a| p.slice(h, p.encode(&[a, 0]).expect("in range"), 1))
        .collect();
    let backward = (0..p.factor(1).num_points())
        .map(|b| p.slice(h, p.encode(&[0, b]).expect("in range"), 0))
        .collect();
    Ok(Correlation { forward, backward })
}

/// A matrix `X` with `h = {(⟨x⟩, ⟨y⟩) : xᵀ X y = 0}` in a product of two projective spaces,
/// normalised so that its first nonzero entry is 1.
pub fn sesquilinear_from_hyperplane(p: &SegreProduct, h: &PointSet) -> Result<Matrix, SegreError> {
    if p.arity() != 2 {
        return Err(SegreError::WrongArity { expected: 2, actual: p.arity() });
    }
    if !p.carrier().is_hyperplane(h) {
        return Err(SegreError::NotAHyperplane);
    }
    let s1 = subspace_labels(p.factor(0), 0)?;
    let s2 = subspace_labels(p.factor(1), 1)?;
    if s1[0].dim() != 1 || s2[0].dim() != 1 {
        return Err(SegreError::FactorShape { factor: if s1[0].dim() != 1 { 0 } else { 1 } });
    }
    let field = s1[0].field();
    let (d1, d2) = (s1[0].ambient_dim(), s2[0].ambient_dim());
    let rows: Vec<Vector> = h
        .iter()
        .map(|x| {
            let (u, v) = (&s1[p.coord(x, 0)].basis()[0], &s2[p.coord(x, 1)].basis()[0]);
            (0..d1 * d2).map(|e| field.mul(u[e / d2], v[e % d2])).collect()
        })
        .collect();
    let kernel = matrix::null_space(&rows, d1 * d2, field);
    if kernel.is_empty() {
        return Err(SegreError::NoFormExists);
    }
    let locus_of = |flat: &[u32]| -> PointSet {
        let m: Matrix = flat.chunks(d2).map(<[u32]>::to_vec).collect();
        let n = p.num_points();
        PointSet::from_indices(
            n,
            (0..n).filter(|&x| matrix::bilinear(&s1[p.coord(x, 0)].basis()[0], &m, &s2[p.coord(x, 1)].basis()[0], field) == 0),
        )
    };
    for coeffs in candidate_combinations(kernel.len(), field) {
        let flat = matrix::combine(&coeffs, &kernel, field);
        if &locus_of(&flat) == h {
            let flat = matrix::normalize(&flat, field);
            return Ok(flat.chunks(d2).map(<[u32]>::to_vec).collect());
        }
    }
    Err(SegreError::NoFormExists)
}

/// Projective representatives of coefficient vectors for a kernel of dimension `k`; for large
/// kernels only the basis vectors are tried.
fn candidate_combinations(k: usize, field: PrimeField) -> Vec<Vector> {
    if k <= 8 {
        matrix::projective_points(k, field)
    } else {
        (0..k).map(|i| (0..k).map(|j| u32::from(i == j)).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::MultiForm;
    use crate::segre::hyperplane_from_form;
    use crate::spaces::projective_space;

    #[test]
    fn grid_identity_round_trip() {
        let f = PrimeField::new(2).unwrap();
        let l = projective_space(2, 2).unwrap();
        let p = SegreProduct::new(vec![l.clone(), l]).unwrap();
        let mu = MultiForm::bilinear(f, &[vec![1, 0], vec![0, 1]]).unwrap();
        let h = hyperplane_from_form(&p, &mu).unwrap().hyperplane().unwrap().points().clone();
        let m = sesquilinear_from_hyperplane(&p, &h).unwrap();
        assert_eq!(m, vec![vec![1, 0], vec![0, 1]]);
        let c = correlation_of(&p, &h).unwrap();
        assert!(c.is_compatible() && c.is_nondegenerate());
        assert!(c.forward.iter().all(|s| s.len() == 1));
        assert_eq!(c.reconstruct(&p), h);
        let (c2, h2) = Correlation::from_forward(&p, c.forward.clone()).unwrap();
        assert_eq!((c2, h2.into_points()), (c, h));
    }
}
