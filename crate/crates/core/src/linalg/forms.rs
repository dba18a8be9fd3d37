//! Reflexive bilinear forms and segment-wise alternating multilinear forms.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;

use super::matrix::{self, Matrix, Vector};
use super::subspace::{enumerate_subspaces, minor, wedge_coords, Subspace};
use super::{LinalgError, PrimeField};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    Symmetric,
    Alternating,
}

/// A reflexive bilinear form `(x, y) ↦ xᵀ M y` on GF(p)^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    field: PrimeField,
    matrix: Matrix,
    kind: FormKind,
}

impl BilinearForm {
    pub fn new(field: PrimeField, matrix: Matrix, kind: FormKind) -> Result<Self, LinalgError> {
        let n = matrix.len();
        matrix::check_rectangular(&matrix, n)?;
        let matrix: Matrix = matrix
            .into_iter()
            .map(|row| row.into_iter().map(|x| x % field.p()).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                let ok = match kind {
                    FormKind::Symmetric => matrix[i][j] == matrix[j][i],
                    FormKind::Alternating => {
                        matrix[i][j] == field.neg(matrix[j][i]) && (i != j || matrix[i][i] == 0)
                    }
                };
                if !ok {
                    return Err(LinalgError::NotReflexive { row: i, col: j });
                }
            }
        }
        Ok(Self { field, matrix, kind })
    }

    /// The standard symplectic form `x₀∧x₁ + x₂∧x₃ + …` on GF(p)^n, n even.
    pub fn symplectic(field: PrimeField, n: usize) -> Result<Self, LinalgError> {
        if n == 0 || n % 2 == 1 {
            return Err(LinalgError::InvalidDimension { n, k: 2 });
        }
        let mut m = vec![vec![0; n]; n];
        for i in (0..n).step_by(2) {
            m[i][i + 1] = 1;
            m[i + 1][i] = field.neg(1);
        }
        Self::new(field, m, FormKind::Alternating)
    }

    /// The symmetric form `Σ dᵢ xᵢ yᵢ`.
    pub fn diagonal(field: PrimeField, entries: &[u32]) -> Result<Self, LinalgError> {
        let n = entries.len();
        let mut m = vec![vec![0; n]; n];
        for (i, &d) in entries.iter().enumerate() {
            m[i][i] = d;
        }
        Self::new(field, m, FormKind::Symmetric)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn matrix(&self) -> &[Vector] {
        &self.matrix
    }

    pub fn eval(&self, x: &[u32], y: &[u32]) -> u32 {
        matrix::bilinear(x, &self.matrix, y, self.field)
    }

    /// Whether the form vanishes identically on the subspace.
    pub fn is_totally_isotropic(&self, u: &Subspace) -> bool {
        let b = u.basis();
        b.iter().all(|x| b.iter().all(|y| self.eval(x, y) == 0))
    }

    /// Radical `{x : ξ(x, ·) = 0}`.
    pub fn radical(&self) -> Subspace {
        let basis = matrix::null_space(&self.matrix, self.dim(), self.field);
        Subspace::span(self.field, self.dim(), &basis).expect("square matrix")
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.radical().dim() == 0
    }

    /// The same form as a one-segment multilinear form (alternating kind only).
    pub fn to_multiform(&self) -> Result<MultiForm, LinalgError> {
        if self.kind != FormKind::Alternating {
            return Err(LinalgError::ShapeMismatch("only alternating forms are 2-vector functionals".into()));
        }
        MultiForm::alternating_from_matrix(self.field, &self.matrix)
    }
}

/// Key of a coefficient: one strictly increasing column subset per segment.
pub type SubsetKey = Vec<Vec<usize>>;

/// A segment-wise alternating multilinear form
/// `μ(u¹,…,uⁿ) = Σ_{(A₁,…,Aₙ)} c · Πᵢ det(uⁱ restricted to columns Aᵢ)`,
/// where segment i consists of `kᵢ` vectors of GF(p)^{dᵢ}. Coefficients are sparse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiForm {
    field: PrimeField,
    dims: Vec<usize>,
    arities: Vec<usize>,
    coefficients: BTreeMap<SubsetKey, u32>,
}

impl MultiForm {
    pub fn zero(field: PrimeField, dims: Vec<usize>, arities: Vec<usize>) -> Result<Self, LinalgError> {
        if dims.is_empty() || dims.len() != arities.len() {
            return Err(LinalgError::ShapeMismatch("segment dims and arities must be nonempty and aligned".into()));
        }
        if let Some(i) = (0..dims.len()).find(|&i| arities[i] == 0 || arities[i] > dims[i]) {
            return Err(LinalgError::InvalidDimension { n: dims[i], k: arities[i] });
        }
        Ok(Self { field, dims, arities, coefficients: BTreeMap::new() })
    }

    /// Bilinear form `xᵀ M y` with two one-vector segments.
    pub fn bilinear(field: PrimeField, m: &[Vector]) -> Result<Self, LinalgError> {
        let rows = m.len();
        let cols = m.first().map_or(0, |r| r.len());
        matrix::check_rectangular(m, cols)?;
        let mut mu = Self::zero(field, vec![rows, cols], vec![1, 1])?;
        for (r, row) in m.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                mu.set(vec![vec![r], vec![c]], v)?;
            }
        }
        Ok(mu)
    }

    /// Multilinear form with one-vector segments and dense coefficient tensor given by `entry`.
    pub fn multilinear(field: PrimeField, dims: Vec<usize>, entry: impl Fn(&[usize]) -> u32) -> Result<Self, LinalgError> {
        let arities = vec![1; dims.len()];
        let mut mu = Self::zero(field, dims.clone(), arities)?;
        for idx in dims.iter().map(|&d| 0..d).multi_cartesian_product() {
            let v = entry(&idx);
            mu.set(idx.iter().map(|&i| vec![i]).collect(), v)?;
        }
        Ok(mu)
    }

    /// One-segment alternating 2-form `Σ_{i<j} m[i][j] (xᵢyⱼ − xⱼyᵢ)`.
    pub fn alternating_from_matrix(field: PrimeField, m: &[Vector]) -> Result<Self, LinalgError> {
        let n = m.len();
        matrix::check_rectangular(m, n)?;
        let mut mu = Self::zero(field, vec![n], vec![2])?;
        for i in 0..n {
            for j in i + 1..n {
                mu.set(vec![vec![i, j]], m[i][j])?;
            }
        }
        Ok(mu)
    }

    /// One-segment form of arity k with the given coefficients on k-subsets.
    pub fn alternating(field: PrimeField, dim: usize, k: usize, coeffs: &[(Vec<usize>, u32)]) -> Result<Self, LinalgError> {
        let mut mu = Self::zero(field, vec![dim], vec![k])?;
        for (subset, v) in coeffs {
            mu.set(vec![subset.clone()], *v)?;
        }
        Ok(mu)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn arities(&self) -> &[usize] {
        &self.arities
    }

    pub fn segments(&self) -> usize {
        self.dims.len()
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&SubsetKey, u32)> {
        self.coefficients.iter().map(|(k, &v)| (k, v))
    }

    pub fn get(&self, key: &SubsetKey) -> u32 {
        self.coefficients.get(key).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn set(&mut self, key: SubsetKey, value: u32) -> Result<(), LinalgError> {
        self.check_key(&key)?;
        let value = value % self.field.p();
        if value == 0 {
            self.coefficients.remove(&key);
        } else {
            self.coefficients.insert(key, value);
        }
        Ok(())
    }

    fn check_key(&self, key: &SubsetKey) -> Result<(), LinalgError> {
        if key.len() != self.segments() {
            return Err(LinalgError::ShapeMismatch(format!("key has {} segments, expected {}", key.len(), self.segments())));
        }
        for (i, a) in key.iter().enumerate() {
            let ok = a.len() == self.arities[i]
                && a.windows(2).all(|w| w[0] < w[1])
                && a.iter().all(|&c| c < self.dims[i]);
            if !ok {
                return Err(LinalgError::ShapeMismatch(format!("invalid column subset {a:?} for segment {i}")));
            }
        }
        Ok(())
    }

    fn check_segment(&self, i: usize, vectors: &[Vector]) -> Result<(), LinalgError> {
        if vectors.len() != self.arities[i] || vectors.iter().any(|v| v.len() != self.dims[i]) {
            return Err(LinalgError::ShapeMismatch(format!(
                "segment {i} expects {} vectors of length {}",
                self.arities[i], self.dims[i]
            )));
        }
        Ok(())
    }

    /// Evaluates μ on one vector list per segment.
    pub fn eval(&self, u: &[Vec<Vector>]) -> Result<u32, LinalgError> {
        if u.len() != self.segments() {
            return Err(LinalgError::ShapeMismatch(format!("expected {} segments, got {}", self.segments(), u.len())));
        }
        for (i, seg) in u.iter().enumerate() {
            self.check_segment(i, seg)?;
        }
        let f = self.field;
        let mut acc = 0;
        for (key, c) in self.coefficients() {
            let mut term = c;
            for (seg, cols) in u.iter().zip(key) {
                if term == 0 {
                    break;
                }
                term = f.mul(term, minor(f, seg, cols));
            }
            acc = f.add(acc, term);
        }
        Ok(acc)
    }

    /// The one-segment form `x ↦ μ(u¹,…,x,…,uⁿ)` on segment i; `u[i]` is ignored.
    pub fn restriction(&self, u: &[Vec<Vector>], i: usize) -> Result<MultiForm, LinalgError> {
        if u.len() != self.segments() || i >= self.segments() {
            return Err(LinalgError::ShapeMismatch("segment count or index out of range".into()));
        }
        for (j, seg) in u.iter().enumerate() {
            if j != i {
                self.check_segment(j, seg)?;
            }
        }
        let f = self.field;
        let mut out = MultiForm::zero(f, vec![self.dims[i]], vec![self.arities[i]])?;
        let mut acc: BTreeMap<Vec<usize>, u32> = BTreeMap::new();
        for (key, c) in self.coefficients() {
            let mut term = c;
            for (j, seg) in u.iter().enumerate() {
                if j != i && term != 0 {
                    term = f.mul(term, minor(f, seg, &key[j]));
                }
            }
            if term != 0 {
                let e = acc.entry(key[i].clone()).or_insert(0);
                *e = f.add(*e, term);
            }
        }
        for (subset, v) in acc {
            out.set(vec![subset], v)?;
        }
        Ok(out)
    }

    /// Precomputed evaluator on Plücker coordinates.
    pub fn evaluator(&self) -> WedgeEvaluator {
        WedgeEvaluator::new(self)
    }

    /// For every tuple of subspaces `(⟨uʲ⟩)_{j≠i}`, the restriction to segment i is nonzero.
    pub fn segment_nonzero(&self, i: usize) -> bool {
        if i >= self.segments() || self.is_zero() {
            return false;
        }
        self.for_all_other_segments(i, |eta| !eta.is_zero())
    }

    /// For every tuple `(⟨uʲ⟩)_{j≠i}` and every independent `x₁,…,x_{kᵢ−1}`, some `x_{kᵢ}` makes the
    /// restriction nonzero.
    pub fn segment_nondegenerate(&self, i: usize) -> bool {
        if i >= self.segments() || self.is_zero() {
            return false;
        }
        let (d, k) = (self.dims[i], self.arities[i]);
        let partials = enumerate_subspaces(d, k - 1, self.field).expect("k ≤ d");
        let units: Vec<Vector> = (0..d).map(|t| (0..d).map(|s| u32::from(s == t)).collect()).collect();
        self.for_all_other_segments(i, |eta| {
            partials.iter().all(|x| {
                units.iter().any(|e| {
                    let mut vs = x.basis().to_vec();
                    vs.push(e.clone());
                    eta.eval(&[vs]).expect("shape fixed") != 0
                })
            })
        })
    }

    fn for_all_other_segments(&self, i: usize, mut pred: impl FnMut(&MultiForm) -> bool) -> bool {
        let choices: Vec<Vec<Subspace>> = (0..self.segments())
            .map(|j| {
                if j == i {
                    vec![Subspace::zero(self.field, self.dims[j])]
                } else {
                    enumerate_subspaces(self.dims[j], self.arities[j], self.field).expect("arity ≤ dim")
                }
            })
            .collect();
        for combo in choices.iter().map(|c| c.iter()).multi_cartesian_product() {
            let u: Vec<Vec<Vector>> = combo.iter().map(|s| s.basis().to_vec()).collect();
            let eta = self.restriction(&u, i).expect("shapes from enumeration");
            if !pred(&eta) {
                return false;
            }
        }
        true
    }

    /// For every assignment of nonzero vectors to all slots, replacing some slot by some vector
    /// gives a nonzero value. Slots range over projective representatives.
    pub fn is_gkz_nondegenerate(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let f = self.field;
        let slots: Vec<usize> = (0..self.segments()).flat_map(|i| std::iter::repeat_n(i, self.arities[i])).collect();
        let reps: Vec<Vec<Vector>> = self.dims.iter().map(|&d| matrix::projective_points(d, f)).collect();
        let units: Vec<Vec<Vector>> = self
            .dims
            .iter()
            .map(|&d| (0..d).map(|t| (0..d).map(|s| u32::from(s == t)).collect()).collect())
            .collect();
        let to_segments = |assignment: &[&Vector]| -> Vec<Vec<Vector>> {
            let mut segs: Vec<Vec<Vector>> = vec![Vec::new(); self.segments()];
            for (s, v) in assignment.iter().enumerate() {
                segs[slots[s]].push((*v).clone());
            }
            segs
        };
        for assignment in slots.iter().map(|&i| reps[i].iter()).multi_cartesian_product() {
            let rescued = (0..slots.len()).any(|s| {
                units[slots[s]].iter().any(|e| {
                    let mut a = assignment.clone();
                    a[s] = e;
                    self.eval(&to_segments(&a)).expect("shapes fixed") != 0
                })
            });
            if !rescued {
                return false;
            }
        }
        true
    }
}

/// Lexicographic rank of a k-subset of `0..n` among all k-subsets.
pub fn subset_rank(n: usize, subset: &[usize]) -> usize {
    let k = subset.len();
    let mut rank = 0;
    let mut prev: isize = -1;
    for (i, &c) in subset.iter().enumerate() {
        for j in (prev + 1) as usize..c {
            rank += binomial(n - 1 - j, k - 1 - i);
        }
        prev = c as isize;
    }
    rank
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Evaluates a multiform from precomputed Plücker coordinates of each segment.
#[derive(Clone, Debug)]
pub struct WedgeEvaluator {
    field: PrimeField,
    terms: Vec<(Vec<usize>, u32)>,
}

impl WedgeEvaluator {
    fn new(mu: &MultiForm) -> Self {
        let terms = mu
            .coefficients()
            .map(|(key, c)| {
                let ranks = key.iter().zip(&mu.dims).map(|(a, &d)| subset_rank(d, a)).collect();
                (ranks, c)
            })
            .collect();
        Self { field: mu.field, terms }
    }

    pub fn eval(&self, wedges: &[&[u32]]) -> u32 {
        let f = self.field;
        let mut acc = 0;
        for (ranks, c) in &self.terms {
            let mut term = *c;
            for (w, &r) in wedges.iter().zip(ranks) {
                term = f.mul(term, w[r]);
                if term == 0 {
                    break;
                }
            }
            acc = f.add(acc, term);
        }
        acc
    }
}

/// Plücker coordinates of every subspace in a list, keyed by position.
pub fn wedge_table(subspaces: &[Subspace]) -> Vec<Vec<u32>> {
    subspaces.iter().map(|s| wedge_coords(s.field(), s.ambient_dim(), s.basis())).collect()
}

/// Index of each subspace in a list.
pub fn subspace_index(subspaces: &[Subspace]) -> HashMap<Subspace, usize> {
    subspaces.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn e(n: usize, i: usize) -> Vector {
        (0..n).map(|j| u32::from(i == j)).collect()
    }

    #[test]
    fn identity_bilinear_on_distinct_units_vanishes() {
        let mu = MultiForm::bilinear(f(2), &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(mu.eval(&[vec![e(2, 0)], vec![e(2, 1)]]).unwrap(), 0);
        assert_eq!(mu.eval(&[vec![e(2, 0)], vec![e(2, 0)]]).unwrap(), 1);
    }

    #[test]
    fn symplectic_pair_evaluates_to_one() {
        let mu = MultiForm::alternating(f(2), 2, 2, &[(vec![0, 1], 1)]).unwrap();
        assert_eq!(mu.eval(&[vec![e(2, 0), e(2, 1)]]).unwrap(), 1);
        assert_eq!(mu.eval(&[vec![e(2, 0), e(2, 0)]]).unwrap(), 0);
    }

    #[test]
    fn bad_shapes_are_rejected() {
        let mu = MultiForm::bilinear(f(3), &[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(matches!(mu.eval(&[vec![e(3, 0)], vec![e(2, 1)]]), Err(LinalgError::ShapeMismatch(_))));
        assert!(matches!(mu.eval(&[vec![e(2, 0)]]), Err(LinalgError::ShapeMismatch(_))));
    }

    #[test]
    fn restriction_of_identity_is_coordinate_functional() {
        let mu = MultiForm::bilinear(f(2), &[vec![1, 0], vec![0, 1]]).unwrap();
        let eta = mu.restriction(&[vec![], vec![e(2, 1)]], 0).unwrap();
        assert_eq!(eta.get(&vec![vec![1]]), 1);
        assert_eq!(eta.get(&vec![vec![0]]), 0);
        let zero = MultiForm::zero(f(2), vec![2, 2], vec![1, 1]).unwrap();
        assert!(zero.restriction(&[vec![e(2, 0)], vec![]], 1).unwrap().is_zero());
    }

    #[test]
    fn segment_predicates_examples() {
        let id = MultiForm::bilinear(f(2), &[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(id.segment_nonzero(0) && id.segment_nonzero(1));
        assert!(id.is_gkz_nondegenerate());
        let rank1 = MultiForm::bilinear(f(2), &[vec![1, 0], vec![0, 0]]).unwrap();
        assert!(!rank1.segment_nonzero(0));
        assert!(!rank1.is_gkz_nondegenerate());
        let zero = MultiForm::zero(f(2), vec![2, 2], vec![1, 1]).unwrap();
        assert!(!zero.segment_nonzero(0));
        assert!(!zero.is_gkz_nondegenerate());
    }

    #[test]
    fn symplectic_nondegeneracy() {
        let w = BilinearForm::symplectic(f(2), 4).unwrap().to_multiform().unwrap();
        assert!(w.segment_nondegenerate(0));
        let with_radical = MultiForm::alternating(f(2), 4, 2, &[(vec![0, 1], 1)]).unwrap();
        assert!(!with_radical.segment_nondegenerate(0));
        assert!(with_radical.segment_nonzero(0));
    }

    #[test]
    fn subset_ranks_are_lexicographic() {
        let all: Vec<Vec<usize>> = (0..5).combinations(3).collect();
        for (r, s) in all.iter().enumerate() {
            assert_eq!(subset_rank(5, s), r);
        }
    }

    #[test]
    fn bilinear_form_validation() {
        let field = f(3);
        assert!(BilinearForm::new(field, vec![vec![0, 1], vec![1, 0]], FormKind::Alternating).is_err());
        assert!(BilinearForm::new(field, vec![vec![0, 1], vec![2, 0]], FormKind::Alternating).is_ok());
        assert!(BilinearForm::new(field, vec![vec![1, 2], vec![1, 0]], FormKind::Symmetric).is_err());
        assert!(BilinearForm::symplectic(field, 3).is_err());
        let w = BilinearForm::symplectic(field, 4).unwrap();
        assert!(w.is_nondegenerate());
    }
}
