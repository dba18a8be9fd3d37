//! Small hand-built structures used by tests, suites and the command line.

use crate::linalg::{Matrix, MultiForm, PrimeField, Vector};
use crate::pls::{restrict_set, IncidenceStructure};
use crate::segre::{hyperplane_from_form, FormLocus, SegreError, SegreProduct};
use crate::spaces::{projective_space, SpaceError};
use crate::PointSet;

/// Index of the projective point spanned by `v`.
pub fn point_of(s: &IncidenceStructure, v: &[u32]) -> Option<usize> {
    let labels = s.labels()?;
    labels.iter().position(|l| l.subspace().is_some_and(|u| u.dim() == 1 && u.contains_vector(v)))
}

fn unit(n: usize, i: usize) -> Vector {
    (0..n).map(|j| u32::from(i == j)).collect()
}

fn sum(a: &[u32], b: &[u32]) -> Vector {
    a.iter().zip(b).map(|(x, y)| (x + y) % 2).collect()
}

/// Points of the projective 3-space over GF(2) whose vectors lie in the span of the given
/// coordinate axes.
fn coordinate_subspace(pg: &IncidenceStructure, axes: &[usize]) -> PointSet {
    let n = pg.num_points();
    PointSet::from_indices(
        n,
        (0..n).filter(|&x| {
            let v = &pg.label(x).and_then(|l| l.subspace()).expect("projective labels").basis()[0];
            v.iter().enumerate().all(|(i, &c)| c == 0 || axes.contains(&i))
        }),
    )
}

/// The projective 3-space over GF(2) with its lines replaced by the three joins `a f(a)` of a
/// bijection `f` from a line `L` onto a skew line `M`, plus all lines disjoint from `L`.
/// Returned with the plane `x₃ = 0`, which contains `L`.
pub fn spiky_non_flappy_example() -> Result<(IncidenceStructure, PointSet), SpaceError> {
    let pg = projective_space(4, 2)?;
    let e: Vec<Vector> = (0..4).map(|i| unit(4, i)).collect();
    let l = coordinate_subspace(&pg, &[0, 1]);
    let pairs = [(e[0].clone(), e[2].clone()), (e[1].clone(), e[3].clone()), (sum(&e[0], &e[1]), sum(&e[2], &e[3]))];
    let mut lines: Vec<Vec<usize>> = Vec::new();
    for (a, b) in &pairs {
        let (x, y) = (point_of(&pg, a).expect("point"), point_of(&pg, b).expect("point"));
        lines.push(pg.line(pg.line_through(x, y).expect("distinct points")).to_vec());
    }
    lines.extend(pg.lines().iter().filter(|k| !k.iter().any(|&x| l.contains(x))).cloned());
    let s = IncidenceStructure::new(pg.num_points(), lines)?.with_labels(pg.labels().expect("labelled").to_vec())?;
    Ok((s, coordinate_subspace(&pg, &[0, 1, 2])))
}

/// The projective 3-space over GF(2) restricted to the union of the planes `⟨e₀, e₁, e₂⟩` and
/// `⟨e₀, e₁, e₃⟩`, returned with their common line.
pub fn two_planes_example() -> Result<(IncidenceStructure, PointSet), SpaceError> {
    let pg = projective_space(4, 2)?;
    let mut union = coordinate_subspace(&pg, &[0, 1, 2]);
    union.union_with(&coordinate_subspace(&pg, &[0, 1, 3]));
    let (s, map) = pg.induced(&union)?;
    let h = restrict_set(&coordinate_subspace(&pg, &[0, 1]), &map);
    Ok((s, h))
}

/// The product of two projective lines over GF(p): a (p+1)×(p+1) grid.
pub fn grid(p: u32) -> Result<SegreProduct, SegreError> {
    let l = projective_space(2, p)?;
    SegreProduct::new(vec![l.clone(), l])
}

/// The product of two copies of the projective space on GF(p)^n.
pub fn projective_square(n: usize, p: u32) -> Result<SegreProduct, SegreError> {
    let f = projective_space(n, p)?;
    SegreProduct::new(vec![f.clone(), f])
}

/// `{(⟨x⟩, ⟨y⟩) : xᵀ m y = 0}` in a product of two projective spaces.
pub fn bilinear_hyperplane(p: &SegreProduct, m: &Matrix) -> Result<PointSet, SegreError> {
    let field = p
        .factor(0)
        .label(0)
        .and_then(|l| l.subspace())
        .map(|u| u.field())
        .ok_or(SegreError::FactorShape { factor: 0 })?;
    let mu = MultiForm::bilinear(field, m)?;
    match hyperplane_from_form(p, &mu)? {
        FormLocus::Hyperplane(h) => Ok(h.into_points()),
        FormLocus::AllOfSpace => Err(SegreError::NotAHyperplane),
    }
}

/// The identity matrix over any field.
pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| unit(n, i)).collect()
}

/// The zero locus of the identity form in the grid: the pairs of orthogonal points.
pub fn grid_perp_hyperplane(g: &SegreProduct) -> Result<PointSet, SegreError> {
    bilinear_hyperplane(g, &identity(2))
}

/// Field of the first factor's labels.
pub fn product_field(p: &SegreProduct) -> Option<PrimeField> {
    p.factor(0).label(0).and_then(|l| l.subspace()).map(|u| u.field())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complement::affinize;

    #[test]
    fn spiky_non_flappy_example_shape() {
        let (s, h) = spiky_non_flappy_example().unwrap();
        assert_eq!((s.num_points(), s.num_lines(), h.len()), (15, 19, 7));
        assert!(s.is_hyperplane(&h));
        assert!(!s.is_flappy(&h).unwrap());
    }

    #[test]
    fn two_planes_example_shape() {
        let (s, h) = two_planes_example().unwrap();
        assert_eq!((s.num_points(), s.num_lines(), h.len()), (11, 13, 3));
        assert!(s.is_flappy(&h).unwrap());
        let a = affinize(&s, &h).unwrap();
        assert!(!a.structure().is_connected());
    }

    #[test]
    fn grid_perp() {
        let g = grid(2).unwrap();
        let h = grid_perp_hyperplane(&g).unwrap();
        assert_eq!(h.len(), 3);
        assert!(g.is_nondegenerate(&h).unwrap());
    }
}
