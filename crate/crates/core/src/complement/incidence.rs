//! Parallelisms defined from incidence alone, and the natural parallelism of a product
//! complement assembled from them.

use rayon::prelude::*;

use super::{AffinizedStructure, ComplementError};
use crate::pls::{overlap_components, IncidenceStructure};
use crate::segre::SegreProduct;
use crate::PointSet;

/// Distinct disjoint lines with two distinct transversals meeting off both lines.
pub fn par_veblen(s: &IncidenceStructure, l1: usize, l2: usize) -> bool {
    if l1 == l2 {
        return true;
    }
    if s.lines_meet(l1, l2) {
        return false;
    }
    let transversals: Vec<usize> = s
        .line(l1)
        .iter()
        .flat_map(|&x| s.lines_through(x).iter().copied())
        .filter(|&k| k != l1 && s.lines_meet(k, l2))
        .collect();
    transversals.iter().enumerate().any(|(i, &k1)| {
        transversals[i + 1..].iter().any(|&k2| match s.meet_point(k1, k2) {
            Some(p) => !s.line_contains(l1, p) && !s.line_contains(l2, p),
            None => false,
        })
    })
}

/// A quadrangle `(p, q, r, s)` without diagonals with `l1 = pq` and `l2 = rs`.
pub fn ast_witness(s: &IncidenceStructure, l1: usize, l2: usize) -> Option<[usize; 4]> {
    let (a, b) = (s.line(l1), s.line(l2));
    for &p in a {
        for &q in a {
            if p == q {
                continue;
            }
            for &r in b {
                if r == p || r == q || !s.collinear(q, r) || s.collinear(p, r) {
                    continue;
                }
                for &t in b {
                    if t != r && t != p && t != q && s.collinear(t, p) && !s.collinear(q, t) {
                        return Some([p, q, r, t]);
                    }
                }
            }
        }
    }
    None
}

pub fn par_ast(s: &IncidenceStructure, l1: usize, l2: usize) -> bool {
    ast_witness(s, l1, l2).is_some()
}

fn meeting_lines(s: &IncidenceStructure, l: usize) -> PointSet {
    PointSet::from_indices(s.num_lines(), s.line(l).iter().flat_map(|&x| s.lines_through(x).iter().copied()))
}

/// A quadrangle `(p, q, r, s)` without diagonals such that `l1` meets `pq` and `rs` while `l2`
/// meets `qr` and `sp`, for disjoint `l1`, `l2`.
pub fn quadr_witness(s: &IncidenceStructure, l1: usize, l2: usize) -> Option<[usize; 4]> {
    if s.lines_meet(l1, l2) {
        return None;
    }
    let (m1, m2) = (meeting_lines(s, l1), meeting_lines(s, l2));
    for k1 in m1.iter() {
        for &q in s.line(k1) {
            for &n1 in s.lines_through(q) {
                if n1 == k1 || !m2.contains(n1) {
                    continue;
                }
                for &p in s.line(k1) {
                    if p == q {
                        continue;
                    }
                    for &r in s.line(n1) {
                        if r == q || s.collinear(p, r) {
                            continue;
                        }
                        for &k2 in s.lines_through(r) {
                            if k2 == n1 || !m1.contains(k2) {
                                continue;
                            }
                            for &t in s.line(k2) {
                                if t == r || t == p || !s.collinear(t, p) || s.collinear(q, t) {
                                    continue;
                                }
                                let n2 = s.line_through(t, p).expect("collinear");
                                if m2.contains(n2) {
                                    return Some([p, q, r, t]);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn par_quadr(s: &IncidenceStructure, l1: usize, l2: usize) -> bool {
    quadr_witness(s, l1, l2).is_some()
}

/// Both quadrangle relations for all pairs of lines, as one bitset of lines per line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadrangleRelations {
    pub ast: Vec<PointSet>,
    pub quadr: Vec<PointSet>,
}

/// Enumerates every quadrangle without diagonals once per pairing of its sides.
pub fn quadrangle_relations(s: &IncidenceStructure) -> QuadrangleRelations {
    let nl = s.num_lines();
    let meets: Vec<PointSet> = (0..nl).map(|l| meeting_lines(s, l)).collect();
    let partial: Vec<(Vec<(usize, usize)>, Vec<(usize, usize)>)> = (0..s.num_points())
        .into_par_iter()
        .map(|p| {
            let mut ast = Vec::new();
            let mut quadr = Vec::new();
            let nb = s.neighbors(p);
            for q in nb.iter().filter(|&q| q > p) {
                for t in nb.iter().filter(|&t| t > p && t != q && !s.collinear(q, t)) {
                    for r in s.neighbors(q).intersection(s.neighbors(t)).iter() {
                        if r <= p || s.collinear(p, r) {
                            continue;
                        }
                        let k1 = s.line_through(p, q).expect("collinear");
                        let k2 = s.line_through(r, t).expect("collinear");
                        let n1 = s.line_through(q, r).expect("collinear");
                        let n2 = s.line_through(t, p).expect("collinear");
                        ast.push((k1, k2));
                        let x = meets[k1].intersection(&meets[k2]);
                        let y = meets[n1].intersection(&meets[n2]);
                        for a in x.iter() {
                            for b in y.iter() {
                                if !meets[a].contains(b) {
                                    quadr.push((a, b));
                                }
                            }
                        }
                    }
                }
            }
            (ast, quadr)
        })
        .collect();
    let mut ast = vec![PointSet::empty(nl); nl];
    let mut quadr = vec![PointSet::empty(nl); nl];
    for (a, q) in partial {
        for (x, y) in a {
            ast[x].insert(y);
            ast[y].insert(x);
        }
        for (x, y) in q {
            quadr[x].insert(y);
            quadr[y].insert(x);
        }
    }
    QuadrangleRelations { ast, quadr }
}

/// Decides parallelism of lines in the complement of a non-degenerate hyperplane of a product
/// from incidence alone: the Veblen relation inside a slice, the quadrangle relation across.
pub struct NaturalParallelism<'a> {
    complement: &'a AffinizedStructure,
    component: Vec<usize>,
    relations: QuadrangleRelations,
}

impl<'a> NaturalParallelism<'a> {
    pub fn new(product: &SegreProduct, a: &'a AffinizedStructure) -> Result<Self, ComplementError> {
        if a.ambient() != product.carrier() {
            return Err(ComplementError::HypothesisFailed("the complement is not taken in this product".into()));
        }
        if !product.is_nondegenerate(a.removed())? {
            return Err(ComplementError::HypothesisFailed("the hyperplane is degenerate".into()));
        }
        for (i, f) in product.factors().iter().enumerate() {
            if f.min_line_size() < 4 {
                return Err(ComplementError::HypothesisFailed(format!("factor {i} has lines with fewer than 4 points")));
            }
            if !f.is_gamma() || !f.is_veblenian() {
                return Err(ComplementError::HypothesisFailed(format!("factor {i} is not a Veblenian gamma space")));
            }
        }
        let s = a.structure();
        let strong = s.strong_subspaces(true)?;
        let groups = overlap_components(&strong, 2);
        let mut component = vec![usize::MAX; s.num_lines()];
        for (g, members) in groups.iter().enumerate() {
            for &m in members {
                for l in s.lines_within(&strong[m]) {
                    component[l] = g;
                }
            }
        }
        debug_assert!(component.iter().all(|&c| c != usize::MAX));
        Ok(Self { complement: a, component, relations: quadrangle_relations(s) })
    }

    /// Both lines lie in one connected family of overlapping maximal strong subspaces.
    pub fn same_slice(&self, l1: usize, l2: usize) -> bool {
        self.component[l1] == self.component[l2]
    }

    pub fn decide(&self, l1: usize, l2: usize) -> bool {
        if l1 == l2 {
            return true;
        }
        if self.same_slice(l1, l2) {
            par_veblen(self.complement.structure(), l1, l2)
        } else {
            self.relations.quadr[l1].contains(l2)
        }
    }

    pub fn relations(&self) -> &QuadrangleRelations {
        &self.relations
    }

    /// Pairs `l1 < l2` where the incidence decision differs from equality of directions.
    pub fn disagreements(&self) -> Vec<(usize, usize)> {
        let a = self.complement;
        let nl = a.structure().num_lines();
        (0..nl)
            .into_par_iter()
            .flat_map_iter(|l1| {
                (l1 + 1..nl).filter(move |&l2| self.decide(l1, l2) != (a.direction(l1) == a.direction(l2))).map(move |l2| (l1, l2))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complement::affinize;
    use crate::spaces::{affine_space, projective_space};

    #[test]
    fn affine_plane_veblen_parallelism_matches() {
        let ag = affine_space(2, 3).unwrap();
        let a = &ag;
        let s = a.base();
        for l in 0..s.num_lines() {
            for k in 0..s.num_lines() {
                assert_eq!(par_veblen(s, l, k), a.parallel(l, k), "{l} {k}");
            }
        }
    }

    #[test]
    fn quadrangle_relations_agree_with_direct_search() {
        let pg = projective_space(3, 3).unwrap();
        let a = affinize(&pg, &pg.line_set(0)).unwrap();
        let s = a.structure();
        let rel = quadrangle_relations(s);
        for l in 0..s.num_lines() {
            for k in 0..s.num_lines() {
                assert_eq!(rel.ast[l].contains(k), par_ast(s, l, k));
                assert_eq!(rel.quadr[l].contains(k), par_quadr(s, l, k));
            }
        }
    }

    fn identity_form_complement(n: usize, p: u32) -> (SegreProduct, AffinizedStructure) {
        let f = projective_space(n, p).unwrap();
        let prod = SegreProduct::new(vec![f.clone(), f]).unwrap();
        let h = crate::instances::bilinear_hyperplane(&prod, &crate::instances::identity(n)).unwrap();
        let a = affinize(prod.carrier(), &h).unwrap();
        (prod, a)
    }

    #[test]
    fn lines_of_four_points_miss_cross_slot_parallels() {
        let (prod, a) = identity_form_complement(3, 3);
        let nat = NaturalParallelism::new(&prod, &a).unwrap();
        let d = nat.disagreements();
        assert_eq!(d.len(), 52 * 9);
        for &(l, k) in &d {
            assert_eq!(a.direction(l), a.direction(k));
            assert!(!nat.same_slice(l, k) && !nat.decide(l, k));
        }
    }

    #[test]
    fn lines_of_six_points_decide_parallelism() {
        let (prod, a) = identity_form_complement(2, 5);
        let nat = NaturalParallelism::new(&prod, &a).unwrap();
        assert!(nat.disagreements().is_empty());
    }
}
