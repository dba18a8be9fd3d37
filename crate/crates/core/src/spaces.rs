//! Constructors for projective, Grassmann, polar, polar Grassmann and affine spaces over GF(p).
//!
//! Points carry their subspaces as [`PointLabel::Subspace`] labels, in the canonical
//! enumeration order of [`enumerate_subspaces`].

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::complement::{affinize, ComplementError};
use crate::linalg::{enumerate_subspaces, matrix, BilinearForm, FormKind, LinalgError, PrimeField, Subspace};
use crate::pls::{IncidenceStructure, ParallelStructure, PlsError, PointLabel};
use crate::PointSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceError {
    #[error("invalid dimension: n = {n}, k = {k}")]
    InvalidDimension { n: usize, k: usize },
    #[error("the form has no totally isotropic subspaces of dimension {k}")]
    EmptyPointSet { k: usize },
    #[error("form dimension {form} does not match ambient dimension {n}")]
    FormDimension { form: usize, n: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Pls(#[from] PlsError),
    #[error("affinization failed: {0}")]
    Complement(String),
}

impl From<ComplementError> for SpaceError {
    fn from(e: ComplementError) -> Self {
        SpaceError::Complement(e.to_string())
    }
}

fn labelled(points: &[Subspace], lines: Vec<Vec<usize>>) -> Result<IncidenceStructure, SpaceError> {
    let s = IncidenceStructure::new(points.len(), lines)?;
    Ok(s.with_labels(points.iter().cloned().map(PointLabel::Subspace).collect())?)
}

/// Lines `{U : H ⊂ U ⊂ B}` for every `(k+1)`-space `B` in `tops` and every `(k−1)`-space `H ⊂ B`.
fn pencils(index: &HashMap<Subspace, usize>, tops: &[Subspace], k: usize, field: PrimeField) -> Vec<Vec<usize>> {
    let model_u = enumerate_subspaces(k + 1, k, field).expect("k ≤ k+1");
    let model_h = enumerate_subspaces(k + 1, k - 1, field).expect("k-1 ≤ k+1");
    let model_lines: Vec<Vec<usize>> = model_h
        .iter()
        .map(|h| (0..model_u.len()).filter(|&u| model_u[u].contains(h)).collect())
        .collect();
    let mut lines = Vec::new();
    for b in tops {
        let n = b.ambient_dim();
        let images: Vec<Option<usize>> = model_u
            .iter()
            .map(|u| {
                let rows: Vec<Vec<u32>> = u.basis().iter().map(|c| matrix::combine(c, b.basis(), field)).collect();
                index.get(&Subspace::span(field, n, &rows).expect("rows have length n")).copied()
            })
            .collect();
        for ml in &model_lines {
            let line: Vec<usize> = ml.iter().filter_map(|&u| images[u]).collect();
            if line.len() >= 2 {
                lines.push(line);
            }
        }
    }
    lines
}

/// Projective space on GF(p)^n: points are 1-spaces, lines are 2-spaces.
pub fn projective_space(n: usize, p: u32) -> Result<IncidenceStructure, SpaceError> {
    if n < 2 {
        return Err(SpaceError::InvalidDimension { n, k: 1 });
    }
    grassmann_space(n, 1, p)
}

/// Grassmann space of k-subspaces of GF(p)^n with pencils `{U : H ⊂ U ⊂ B}` as lines.
pub fn grassmann_space(n: usize, k: usize, p: u32) -> Result<IncidenceStructure, SpaceError> {
    if k == 0 || k >= n {
        return Err(SpaceError::InvalidDimension { n, k });
    }
    let field = PrimeField::new(p)?;
    let points = enumerate_subspaces(n, k, field)?;
    let index: HashMap<Subspace, usize> = points.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let tops = enumerate_subspaces(n, k + 1, field)?;
    let lines = pencils(&index, &tops, k, field);
    labelled(&points, lines)
}

/// Totally isotropic k-subspaces of a reflexive form.
pub fn isotropic_subspaces(form: &BilinearForm, k: usize) -> Result<Vec<Subspace>, SpaceError> {
    Ok(enumerate_subspaces(form.dim(), k, form.field())?
        .into_iter()
        .filter(|u| form.is_totally_isotropic(u))
        .collect())
}

/// Polar Grassmann space: totally isotropic k-subspaces with isotropic pencils as lines.
///
/// When no totally isotropic (k+1)-subspaces exist (k is the top grade), the lines are the
/// sets `{U : H ⊂ U}` of isotropic k-spaces through a common isotropic (k−1)-space, which is
/// the usual dual polar space.
pub fn polar_grassmann_space(form: &BilinearForm, k: usize) -> Result<IncidenceStructure, SpaceError> {
    let n = form.dim();
    if k == 0 || k > n {
        return Err(SpaceError::InvalidDimension { n, k });
    }
    let field = form.field();
    let points = isotropic_subspaces(form, k)?;
    if points.is_empty() {
        return Err(SpaceError::EmptyPointSet { k });
    }
    let index: HashMap<Subspace, usize> = points.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let tops = if k < n { isotropic_subspaces(form, k + 1)? } else { Vec::new() };
    let lines = if !tops.is_empty() {
        pencils(&index, &tops, k, field)
    } else {
        let model_h = enumerate_subspaces(k, k - 1, field)?;
        let mut groups: HashMap<Subspace, Vec<usize>> = HashMap::new();
        for (i, u) in points.iter().enumerate() {
            for h in &model_h {
                let rows: Vec<Vec<u32>> = h.basis().iter().map(|c| matrix::combine(c, u.basis(), field)).collect();
                groups.entry(Subspace::span(field, n, &rows)?).or_default().push(i);
            }
        }
        groups.into_values().filter(|g| g.len() >= 2).collect()
    };
    labelled(&points, lines)
}

/// Polar space of a reflexive form: isotropic points and totally isotropic lines.
pub fn polar_space(form: &BilinearForm) -> Result<IncidenceStructure, SpaceError> {
    polar_grassmann_space(form, 1)
}

/// Affine space obtained from the projective space on GF(p)^n by deleting the hyperplane
/// `x_{n−1} = 0`; parallel classes are the deleted directions.
pub fn affine_space(n: usize, p: u32) -> Result<ParallelStructure, SpaceError> {
    let pg = projective_space(n, p)?;
    let at_infinity = PointSet::from_indices(
        pg.num_points(),
        (0..pg.num_points()).filter(|&x| {
            let s = pg.label(x).and_then(PointLabel::subspace).expect("projective points are labelled");
            s.basis()[0][n - 1] == 0
        }),
    );
    Ok(affinize(&pg, &at_infinity)?.into_carrier())
}

/// A reflexive form, as written in configuration files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum FormSpec {
    /// The standard symplectic form on an even-dimensional space.
    Symplectic,
    /// `Σ dᵢ xᵢ yᵢ`.
    Diagonal { entries: Vec<u32> },
    /// An explicit Gram matrix of the given kind.
    Matrix { kind: MatrixKind, matrix: Vec<Vec<u32>> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    Symmetric,
    Alternating,
}

impl FormSpec {
    pub fn build(&self, n: usize, p: u32) -> Result<BilinearForm, SpaceError> {
        let field = PrimeField::new(p)?;
        let form = match self {
            FormSpec::Symplectic => BilinearForm::symplectic(field, n)?,
            FormSpec::Diagonal { entries } => BilinearForm::diagonal(field, entries)?,
            FormSpec::Matrix { kind, matrix } => {
                let kind = match kind {
                    MatrixKind::Symmetric => FormKind::Symmetric,
                    MatrixKind::Alternating => FormKind::Alternating,
                };
                BilinearForm::new(field, matrix.clone(), kind)?
            }
        };
        if form.dim() != n {
            return Err(SpaceError::FormDimension { form: form.dim(), n });
        }
        Ok(form)
    }
}

/// A space described by its kind and parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpaceSpec {
    Projective { n: usize, p: u32 },
    Grassmann { n: usize, k: usize, p: u32 },
    Polar { n: usize, p: u32, form: FormSpec },
    PolarGrassmann { n: usize, k: usize, p: u32, form: FormSpec },
    Affine { n: usize, p: u32 },
}

/// A constructed space, with its parallelism when it has a natural one.
#[derive(Clone, Debug)]
pub enum Space {
    Plain(IncidenceStructure),
    WithParallelism(ParallelStructure),
}

impl Space {
    pub fn structure(&self) -> &IncidenceStructure {
        match self {
            Space::Plain(s) => s,
            Space::WithParallelism(a) => a.base(),
        }
    }

    pub fn parallelism(&self) -> Option<&ParallelStructure> {
        match self {
            Space::Plain(_) => None,
            Space::WithParallelism(a) => Some(a),
        }
    }
}

impl SpaceSpec {
    pub fn build(&self) -> Result<Space, SpaceError> {
        Ok(match self {
            SpaceSpec::Projective { n, p } => Space::Plain(projective_space(*n, *p)?),
            SpaceSpec::Grassmann { n, k, p } => Space::Plain(grassmann_space(*n, *k, *p)?),
            SpaceSpec::Polar { n, p, form } => Space::Plain(polar_space(&form.build(*n, *p)?)?),
            SpaceSpec::PolarGrassmann { n, k, p, form } => Space::Plain(polar_grassmann_space(&form.build(*n, *p)?, *k)?),
            SpaceSpec::Affine { n, p } => Space::WithParallelism(affine_space(*n, *p)?),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_counts() {
        let fano = projective_space(3, 2).unwrap();
        assert_eq!((fano.num_points(), fano.num_lines()), (7, 7));
        let pg3 = projective_space(4, 2).unwrap();
        assert_eq!((pg3.num_points(), pg3.num_lines()), (15, 35));
        let line = projective_space(2, 5).unwrap();
        assert_eq!(line.num_lines(), 1);
        assert_eq!(line.line(0).len(), 6);
        assert!(matches!(projective_space(1, 2), Err(SpaceError::InvalidDimension { .. })));
    }

    #[test]
    fn grassmann_counts() {
        let g = grassmann_space(4, 2, 2).unwrap();
        assert_eq!((g.num_points(), g.num_lines()), (35, 105));
        assert!(g.lines().iter().all(|l| l.len() == 3));
        assert!(!g.is_linear());
        assert_eq!(grassmann_space(3, 1, 3).unwrap(), projective_space(3, 3).unwrap());
        assert!(grassmann_space(4, 4, 2).is_err());
    }

    #[test]
    fn symplectic_polar_spaces() {
        let field = PrimeField::new(2).unwrap();
        let w = BilinearForm::symplectic(field, 4).unwrap();
        let pts = polar_space(&w).unwrap();
        assert_eq!((pts.num_points(), pts.num_lines()), (15, 15));
        let dual = polar_grassmann_space(&w, 2).unwrap();
        assert_eq!((dual.num_points(), dual.num_lines()), (15, 15));
    }

    #[test]
    fn anisotropic_form_has_no_points() {
        let field = PrimeField::new(3).unwrap();
        let f = BilinearForm::diagonal(field, &[1, 1]).unwrap();
        assert!(matches!(polar_space(&f), Err(SpaceError::EmptyPointSet { k: 1 })));
    }

    #[test]
    fn affine_counts() {
        let ag = affine_space(3, 3).unwrap();
        assert_eq!((ag.base().num_points(), ag.base().num_lines(), ag.classes().len()), (9, 12, 4));
        let ag2 = affine_space(3, 2).unwrap();
        assert_eq!((ag2.base().num_points(), ag2.base().num_lines()), (4, 6));
        assert!(ag2.base().lines().iter().all(|l| l.len() == 2));
    }
}
