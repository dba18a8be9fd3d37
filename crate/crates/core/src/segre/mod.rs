//! Segre products of partial linear spaces, slices of point sets, and hyperplane constructions.
//!
//! Product points are coded in mixed radix with factor 0 varying fastest: the tuple
//! `(x₀, x₁, …)` has index `x₀ + n₀·(x₁ + n₁·(…))`.

mod correlation;
mod forms;
mod hyperplanes;

use serde::{Deserialize, Serialize};

use crate::linalg::LinalgError;
use crate::pls::{IncidenceStructure, ParallelStructure, PlsError, PointLabel};
use crate::spaces::SpaceError;
use crate::PointSet;

pub use correlation::{correlation_of, sesquilinear_from_hyperplane, Correlation};
pub use forms::{
    form_zero_locus, grassmann_form_hyperplane, hyperplane_from_form, polar_product_hyperplane, FormLocus, PolarClause,
    PolarOutcome,
};
pub use hyperplanes::{degenerate_product_hyperplane, intersection_hyperplane, witness_hyperplane_w, HyperplaneHandle, Provenance};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SegreError {
    #[error("a Segre product needs at least two factors (got {count})")]
    TooFewFactors { count: usize },
    #[error("{what} limited to {limit} (got {actual})")]
    LimitExceeded { what: &'static str, limit: usize, actual: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("the point set is not a hyperplane")]
    NotAHyperplane,
    #[error("factor {factor}: the point set is not a hyperplane")]
    FactorNotAHyperplane { factor: usize },
    #[error("expected {expected} factors, got {actual}")]
    WrongArity { expected: usize, actual: usize },
    #[error("factor {factor} does not carry subspace labels of the required shape")]
    FactorShape { factor: usize },
    #[error("invalid dimension: n = {n}, k = {k}")]
    InvalidDimension { n: usize, k: usize },
    #[error("no bilinear form has this zero locus")]
    NoFormExists,
    #[error("parallelism {factor} does not belong to the corresponding factor")]
    ParallelismMismatch { factor: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Pls(#[from] PlsError),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// Caps applied when building a product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductLimits {
    pub max_factors: usize,
    pub max_points: usize,
}

impl Default for ProductLimits {
    fn default() -> Self {
        Self { max_factors: 3, max_points: 20_000 }
    }
}

/// Where a product line comes from: `subst(base, slot, factor_line)`.
///
/// `base` is the product point whose `slot` coordinate is 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LineProvenance {
    pub slot: usize,
    pub base: usize,
    pub factor_line: usize,
}

/// The Segre product of finitely many partial linear spaces.
#[derive(Clone, Debug)]
pub struct SegreProduct {
    factors: Vec<IncidenceStructure>,
    strides: Vec<usize>,
    carrier: IncidenceStructure,
    provenance: Vec<LineProvenance>,
}

impl SegreProduct {
    pub fn new(factors: Vec<IncidenceStructure>) -> Result<Self, SegreError> {
        Self::with_limits(factors, ProductLimits::default())
    }

    pub fn with_limits(factors: Vec<IncidenceStructure>, limits: ProductLimits) -> Result<Self, SegreError> {
        if factors.len() < 2 {
            return Err(SegreError::TooFewFactors { count: factors.len() });
        }
        if factors.len() > limits.max_factors {
            return Err(SegreError::LimitExceeded { what: "number of factors", limit: limits.max_factors, actual: factors.len() });
        }
        let mut strides = Vec::with_capacity(factors.len());
        let mut total: usize = 1;
        for f in &factors {
            strides.push(total);
            total = total.saturating_mul(f.num_points());
            if total > limits.max_points {
                return Err(SegreError::LimitExceeded { what: "product points", limit: limits.max_points, actual: total });
            }
        }
        let mut lines = Vec::new();
        for (i, f) in factors.iter().enumerate() {
            for base in (0..total).filter(|&a| (a / strides[i]) % f.num_points() == 0) {
                for l in f.lines() {
                    lines.push(l.iter().map(|&x| base + x * strides[i]).collect::<Vec<usize>>());
                }
            }
        }
        let radices: Vec<usize> = factors.iter().map(IncidenceStructure::num_points).collect();
        let labels = (0..total)
            .map(|x| PointLabel::Tuple { coords: radices.iter().zip(&strides).map(|(&r, &s)| (x / s) % r).collect() })
            .collect();
        let carrier = IncidenceStructure::new(total, lines)?.with_labels(labels)?;
        let mut product = Self { factors, strides, carrier, provenance: Vec::new() };
        product.provenance = (0..product.carrier.num_lines()).map(|l| product.compute_provenance(l)).collect();
        Ok(product)
    }

    fn compute_provenance(&self, l: usize) -> LineProvenance {
        let pts = self.carrier.line(l);
        let (a, b) = (pts[0], pts[1]);
        let slot = (0..self.arity()).find(|&i| self.coord(a, i) != self.coord(b, i)).expect("distinct points");
        let coords: Vec<usize> = pts.iter().map(|&x| self.coord(x, slot)).collect();
        let base = a - self.coord(a, slot) * self.strides[slot];
        let factor_line = self.factors[slot].line_index(&coords).expect("product lines come from factor lines");
        LineProvenance { slot, base, factor_line }
    }

    pub fn factors(&self) -> &[IncidenceStructure] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> &IncidenceStructure {
        &self.factors[i]
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn carrier(&self) -> &IncidenceStructure {
        &self.carrier
    }

    pub fn num_points(&self) -> usize {
        self.carrier.num_points()
    }

    pub fn line_provenance(&self, l: usize) -> LineProvenance {
        self.provenance[l]
    }

    /// Coordinate `i` of point `x`.
    pub fn coord(&self, x: usize, i: usize) -> usize {
        (x / self.strides[i]) % self.factors[i].num_points()
    }

    pub fn encode(&self, coords: &[usize]) -> Result<usize, SegreError> {
        if coords.len() != self.arity() {
            return Err(SegreError::WrongArity { expected: self.arity(), actual: coords.len() });
        }
        let mut x = 0;
        for (i, &c) in coords.iter().enumerate() {
            if c >= self.factors[i].num_points() {
                return Err(SegreError::IndexOutOfRange(format!("coordinate {i} = {c}")));
            }
            x += c * self.strides[i];
        }
        Ok(x)
    }

    pub fn decode(&self, x: usize) -> Vec<usize> {
        (0..self.arity()).map(|i| self.coord(x, i)).collect()
    }

    /// The point `a` with coordinate `i` replaced by `x`.
    pub fn subst(&self, a: usize, i: usize, x: usize) -> Result<usize, SegreError> {
        if a >= self.num_points() || i >= self.arity() || x >= self.factors[i].num_points() {
            return Err(SegreError::IndexOutOfRange(format!("subst({a}, {i}, {x})")));
        }
        Ok(self.subst_unchecked(a, i, x))
    }

    fn subst_unchecked(&self, a: usize, i: usize, x: usize) -> usize {
        a - self.coord(a, i) * self.strides[i] + x * self.strides[i]
    }

    /// `{subst(a, i, x) : x ∈ set}`.
    pub fn subst_set(&self, a: usize, i: usize, set: &PointSet) -> Result<PointSet, SegreError> {
        if a >= self.num_points() || i >= self.arity() || set.capacity() != self.factors[i].num_points() {
            return Err(SegreError::IndexOutOfRange(format!("subst_set({a}, {i}, ·)")));
        }
        Ok(PointSet::from_indices(self.num_points(), set.iter().map(|x| self.subst_unchecked(a, i, x))))
    }

    /// The fibre `subst(a, i, Sᵢ)` through `a` in direction `i`.
    pub fn fibre(&self, a: usize, i: usize) -> Result<PointSet, SegreError> {
        self.subst_set(a, i, &PointSet::full(self.factors[i].num_points()))
    }

    /// `{x ∈ Sᵢ : subst(a, i, x) ∈ h}`.
    pub fn slice(&self, h: &PointSet, a: usize, i: usize) -> PointSet {
        let n = self.factors[i].num_points();
        PointSet::from_indices(n, (0..n).filter(|&x| h.contains(self.subst_unchecked(a, i, x))))
    }

    /// Points whose coordinate `i` is 0: one representative per fibre in direction `i`.
    pub fn fibre_bases(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.num_points()).filter(move |&a| self.coord(a, i) == 0)
    }

    /// Every slice is a factor hyperplane or the whole factor, and some slice is proper.
    pub fn slice_criterion(&self, x: &PointSet) -> bool {
        if x.capacity() != self.num_points() {
            return false;
        }
        let mut some_proper = false;
        for i in 0..self.arity() {
            for a in self.fibre_bases(i) {
                let s = self.slice(x, a, i);
                if s.is_full() {
                    continue;
                }
                if !self.factors[i].is_hyperplane(&s) {
                    return false;
                }
                some_proper = true;
            }
        }
        some_proper
    }

    /// A point and slot whose slice is the whole factor, if any.
    pub fn degeneracy_witness(&self, h: &PointSet) -> Option<(usize, usize)> {
        (0..self.arity()).find_map(|i| self.fibre_bases(i).find(|&a| self.slice(h, a, i).is_full()).map(|a| (a, i)))
    }

    /// No slice of the hyperplane is a whole factor.
    pub fn is_nondegenerate(&self, h: &PointSet) -> Result<bool, SegreError> {
        if !self.carrier.is_hyperplane(h) {
            return Err(SegreError::NotAHyperplane);
        }
        Ok(self.degeneracy_witness(h).is_none())
    }

    /// Parallelism on the product induced by parallelisms of the factors.
    pub fn parallelism(&self, factor_pars: &[ParallelStructure], kind: ProductParallelism) -> Result<ParallelStructure, SegreError> {
        if factor_pars.len() != self.arity() {
            return Err(SegreError::WrongArity { expected: self.arity(), actual: factor_pars.len() });
        }
        if let Some(i) = (0..self.arity()).find(|&i| factor_pars[i].base() != &self.factors[i]) {
            return Err(SegreError::ParallelismMismatch { factor: i });
        }
        let keys = self.provenance.iter().map(|pv| {
            let class = factor_pars[pv.slot].class_of(pv.factor_line);
            match kind {
                ProductParallelism::SomeComponent => (pv.slot, 0, class),
                ProductParallelism::Componentwise => (pv.slot, pv.base, class),
            }
        });
        Ok(ParallelStructure::from_keys(self.carrier.clone(), keys)?)
    }
}

/// The two parallelisms a product of spaces with parallelisms carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductParallelism {
    /// Lines varying in the same slot with parallel factor lines.
    SomeComponent,
    /// In addition, the remaining coordinates agree.
    Componentwise,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::projective_space;

    fn grid() -> SegreProduct {
        let l = projective_space(2, 2).unwrap();
        SegreProduct::new(vec![l.clone(), l]).unwrap()
    }

    #[test]
    fn grid_counts_and_coding() {
        let g = grid();
        assert_eq!((g.num_points(), g.carrier().num_lines()), (9, 6));
        for x in 0..9 {
            assert_eq!(g.encode(&g.decode(x)).unwrap(), x);
            assert_eq!(g.subst(x, 1, g.coord(x, 1)).unwrap(), x);
        }
        assert_eq!(g.decode(5), vec![2, 1]);
        assert!(!g.carrier().is_linear());
        assert!(g.carrier().triangles().next().is_none());
    }

    #[test]
    fn fano_square_counts() {
        let f = projective_space(3, 2).unwrap();
        let p = SegreProduct::new(vec![f.clone(), f]).unwrap();
        assert_eq!((p.num_points(), p.carrier().num_lines()), (49, 98));
        assert!(p.carrier().is_connected());
        for t in p.carrier().triangles().take(200) {
            let slot = (0..2).find(|&i| p.coord(t[0], i) != p.coord(t[1], i)).unwrap();
            let fib = p.fibre(t[0], slot).unwrap();
            assert!(t.iter().all(|&x| fib.contains(x)));
        }
    }

    #[test]
    fn provenance_round_trip() {
        let g = grid();
        for l in 0..g.carrier().num_lines() {
            let pv = g.line_provenance(l);
            let line = g.factor(pv.slot).line(pv.factor_line);
            let pts: Vec<usize> = line.iter().map(|&x| g.subst(pv.base, pv.slot, x).unwrap()).collect();
            assert_eq!(pts, g.carrier().line(l));
        }
    }

    #[test]
    fn criterion_rejects_whole_carrier() {
        let g = grid();
        assert!(!g.slice_criterion(&PointSet::full(9)));
        assert!(g.slice_criterion(&PointSet::from_indices(9, [0, 4, 8])));
    }

    #[test]
    fn limits_are_enforced() {
        let l = projective_space(2, 2).unwrap();
        assert!(matches!(SegreProduct::new(vec![l.clone()]), Err(SegreError::TooFewFactors { count: 1 })));
        let tight = ProductLimits { max_factors: 3, max_points: 8 };
        assert!(matches!(
            SegreProduct::with_limits(vec![l.clone(), l], tight),
            Err(SegreError::LimitExceeded { .. })
        ));
    }
}
