//! Subspaces of GF(p)^n in canonical reduced row echelon form.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::matrix::{self, Matrix, Vector};
use super::{LinalgError, PrimeField};

/// A subspace of GF(p)^n, stored by its RREF basis so that equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subspace {
    field: PrimeField,
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    /// Span of the given vectors.
    pub fn span(field: PrimeField, ambient_dim: usize, vectors: &[Vector]) -> Result<Self, LinalgError> {
        matrix::check_rectangular(vectors, ambient_dim)?;
        let (basis, _) = matrix::rref(vectors, field);
        Ok(Self { field, ambient_dim, basis })
    }

    pub fn zero(field: PrimeField, ambient_dim: usize) -> Self {
        Self { field, ambient_dim, basis: Vec::new() }
    }

    pub fn whole(field: PrimeField, ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| (0..ambient_dim).map(|j| u32::from(i == j)).collect())
            .collect();
        Self { field, ambient_dim, basis }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical basis (rows of the RREF).
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        matrix::pivot_columns(&self.basis)
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        matrix::rank(&rows, self.field) == self.dim()
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim || self.field != other.field {
            return Err(LinalgError::AmbientMismatch);
        }
        Ok(())
    }

    pub fn join(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        let rows: Matrix = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::span(self.field, self.ambient_dim, &rows)
    }

    /// Dimension of `self + other` without building the sum.
    pub fn join_dim(&self, other: &Subspace) -> usize {
        let rows: Matrix = self.basis.iter().chain(&other.basis).cloned().collect();
        matrix::rank(&rows, self.field)
    }
}

/// Intersection of two subspaces of the same ambient space.
pub fn meet(u: &Subspace, w: &Subspace) -> Result<Subspace, LinalgError> {
    u.check_compatible(w)?;
    let field = u.field;
    let k = u.dim();
    let stacked: Matrix = u.basis.iter().chain(&w.basis).cloned().collect();
    if stacked.is_empty() {
        return Ok(Subspace::zero(field, u.ambient_dim));
    }
    // Coefficient vectors c with c·stacked = 0 give a = c[..k] and a·U ∈ U ∩ W.
    let relations = matrix::null_space(&matrix::transpose(&stacked, u.ambient_dim), stacked.len(), field);
    let vectors: Matrix = relations.iter().map(|c| matrix::combine(&c[..k], &u.basis, field)).collect();
    Subspace::span(field, u.ambient_dim, &vectors)
}

/// Number of k-subspaces of GF(q)^n.
pub fn gaussian_binomial(n: usize, k: usize, q: u32) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// All k-subspaces of GF(p)^n, ordered by pivot set (lexicographic), then by free entries
/// (lexicographic, row-major).
pub fn enumerate_subspaces(n: usize, k: usize, field: PrimeField) -> Result<Vec<Subspace>, LinalgError> {
    if k > n {
        return Err(LinalgError::InvalidDimension { n, k });
    }
    let p = field.p() as usize;
    let mut out = Vec::new();
    for pivots in (0..n).combinations(k) {
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| (pc + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let count = p.pow(free.len() as u32);
        for code in 0..count {
            let mut basis = vec![vec![0u32; n]; k];
            for (r, &pc) in pivots.iter().enumerate() {
                basis[r][pc] = 1;
            }
            let mut c = code;
            for &(r, col) in free.iter().rev() {
                basis[r][col] = (c % p) as u32;
                c /= p;
            }
            out.push(Subspace { field, ambient_dim: n, basis });
        }
    }
    Ok(out)
}

/// Plücker coordinates: the k×k minors of the k×n matrix `vectors`, with column subsets in
/// lexicographic order.
pub fn wedge_coords(field: PrimeField, n: usize, vectors: &[Vector]) -> Vec<u32> {
    let k = vectors.len();
    (0..n)
        .combinations(k)
        .map(|cols| minor(field, vectors, &cols))
        .collect()
}

/// Determinant of the square submatrix of `vectors` on the given columns.
pub fn minor(field: PrimeField, vectors: &[Vector], cols: &[usize]) -> u32 {
    let sub: Matrix = vectors.iter().map(|row| cols.iter().map(|&c| row[c]).collect()).collect();
    matrix::det(&sub, field)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_subspaces(3, 1, f(2)).unwrap().len(), 7);
        assert_eq!(enumerate_subspaces(4, 2, f(2)).unwrap().len(), 35);
        assert_eq!(enumerate_subspaces(4, 0, f(3)).unwrap().len(), 1);
        assert!(matches!(enumerate_subspaces(2, 3, f(2)), Err(LinalgError::InvalidDimension { .. })));
    }

    #[test]
    fn enumeration_order_starts_with_leading_pivots() {
        let subs = enumerate_subspaces(3, 1, f(2)).unwrap();
        let firsts: Vec<Vec<u32>> = subs.iter().map(|s| s.basis()[0].clone()).collect();
        assert_eq!(firsts[0], vec![1, 0, 0]);
        assert_eq!(firsts[1], vec![1, 0, 1]);
        assert_eq!(firsts[2], vec![1, 1, 0]);
        assert_eq!(firsts[3], vec![1, 1, 1]);
        assert_eq!(firsts[4], vec![0, 1, 0]);
        assert_eq!(firsts[6], vec![0, 0, 1]);
    }

    #[test]
    fn meet_and_join() {
        let field = f(2);
        let u = Subspace::span(field, 3, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let w = Subspace::span(field, 3, &[vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let m = meet(&u, &w).unwrap();
        assert_eq!(m.basis(), &[vec![0, 1, 0]]);
        assert_eq!(u.join(&w).unwrap().dim(), 3);
        let other = Subspace::zero(field, 4);
        assert!(matches!(meet(&u, &other), Err(LinalgError::AmbientMismatch)));
    }

    #[test]
    fn wedge_example() {
        let v = wedge_coords(f(2), 3, &[vec![1, 1, 0], vec![0, 1, 1]]);
        assert_eq!(v, vec![1, 1, 1]);
    }

    #[test]
    fn gaussian_binomials_match_enumeration() {
        for p in [2u32, 3] {
            for n in 0..=5usize {
                for k in 0..=n {
                    let count = enumerate_subspaces(n, k, f(p)).unwrap().len() as u128;
                    assert_eq!(count, gaussian_binomial(n, k, p), "n={n} k={k} p={p}");
                }
            }
        }
    }
}
