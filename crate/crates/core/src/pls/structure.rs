use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::PlsError;
use crate::linalg::Subspace;
use crate::PointSet;

/// Coordinates attached to a point by the constructor that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PointLabel {
    Subspace(Subspace),
    Tuple { coords: Vec<usize> },
}

impl PointLabel {
    pub fn subspace(&self) -> Option<&Subspace> {
        match self {
            PointLabel::Subspace(s) => Some(s),
            PointLabel::Tuple { .. } => None,
        }
    }
}

/// A finite partial linear space: points `0..num_points` and lines given as sorted point lists.
///
/// Lines are deduplicated and sorted lexicographically, so line indices are canonical.
#[derive(Clone, Debug)]
pub struct IncidenceStructure {
    num_points: usize,
    lines: Vec<Vec<usize>>,
    labels: Option<Vec<PointLabel>>,
    point_lines: Vec<Vec<usize>>,
    adjacency: Vec<PointSet>,
}

impl PartialEq for IncidenceStructure {
    fn eq(&self, other: &Self) -> bool {
        self.num_points == other.num_points && self.lines == other.lines
    }
}

impl Eq for IncidenceStructure {}

/// Validates raw point/line data against the partial linear space axioms.
pub fn validate_pls(num_points: usize, lines: Vec<Vec<usize>>) -> Result<IncidenceStructure, PlsError> {
    IncidenceStructure::new(num_points, lines)
}

impl IncidenceStructure {
    pub fn new(num_points: usize, lines: Vec<Vec<usize>>) -> Result<Self, PlsError> {
        if lines.is_empty() {
            return Err(PlsError::NoLines);
        }
        let mut lines: Vec<Vec<usize>> = lines
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        for (li, l) in lines.iter().enumerate() {
            if let Some(&x) = l.iter().find(|&&x| x >= num_points) {
                return Err(PlsError::PointOutOfRange { line: li, point: x });
            }
            if l.len() < 2 {
                return Err(PlsError::LineTooShort { line: li });
            }
        }
        lines.sort();
        lines.dedup();
        let mut point_lines = vec![Vec::new(); num_points];
        for (li, l) in lines.iter().enumerate() {
            for &x in l {
                point_lines[x].push(li);
            }
        }
        if let Some(x) = point_lines.iter().position(|pl| pl.is_empty()) {
            return Err(PlsError::IsolatedPoint { point: x });
        }
        let mut shared: HashMap<usize, usize> = HashMap::new();
        for (li, l) in lines.iter().enumerate() {
            shared.clear();
            for &x in l {
                for &m in &point_lines[x] {
                    if m > li {
                        let c = shared.entry(m).or_insert(0);
                        *c += 1;
                        if *c >= 2 {
                            return Err(PlsError::TwoLinesShareTwoPoints { first: li, second: m });
                        }
                    }
                }
            }
        }
        let mut adjacency = vec![PointSet::empty(num_points); num_points];
        for l in &lines {
            for &x in l {
                for &y in l {
                    if x != y {
                        adjacency[x].insert(y);
                    }
                }
            }
        }
        Ok(Self { num_points, lines, labels: None, point_lines, adjacency })
    }

    pub fn with_labels(mut self, labels: Vec<PointLabel>) -> Result<Self, PlsError> {
        if labels.len() != self.num_points {
            return Err(PlsError::LabelCountMismatch { expected: self.num_points, actual: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn line(&self, l: usize) -> &[usize] {
        &self.lines[l]
    }

    pub fn labels(&self) -> Option<&[PointLabel]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> Option<&PointLabel> {
        self.labels.as_ref().map(|ls| &ls[x])
    }

    /// Lines through a point, in increasing index order.
    pub fn lines_through(&self, x: usize) -> &[usize] {
        &self.point_lines[x]
    }

    /// Points collinear with `x`, excluding `x` itself.
    pub fn neighbors(&self, x: usize) -> &PointSet {
        &self.adjacency[x]
    }

    pub fn collinear(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(b)
    }

    pub fn all_points(&self) -> PointSet {
        PointSet::full(self.num_points)
    }

    pub fn line_contains(&self, l: usize, x: usize) -> bool {
        self.lines[l].binary_search(&x).is_ok()
    }

    /// The unique line through two distinct collinear points.
    pub fn line_through(&self, a: usize, b: usize) -> Option<usize> {
        if a == b || !self.collinear(a, b) {
            return None;
        }
        let (u, v) = if self.point_lines[a].len() <= self.point_lines[b].len() { (a, b) } else { (b, a) };
        self.point_lines[u].iter().copied().find(|&l| self.line_contains(l, v))
    }

    /// Common point of two distinct lines.
    pub fn meet_point(&self, l: usize, k: usize) -> Option<usize> {
        if l == k {
            return None;
        }
        let (a, b) = (&self.lines[l], &self.lines[k]);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return Some(a[i]),
            }
        }
        None
    }

    /// `L ∼ K`: the lines share a point (a line meets itself).
    pub fn lines_meet(&self, l: usize, k: usize) -> bool {
        l == k || self.meet_point(l, k).is_some()
    }

    pub fn line_set(&self, l: usize) -> PointSet {
        PointSet::from_indices(self.num_points, self.lines[l].iter().copied())
    }

    /// Index of the line with exactly this (sorted) point list.
    pub fn line_index(&self, points: &[usize]) -> Option<usize> {
        self.lines.binary_search_by(|l| l.as_slice().cmp(points)).ok()
    }

    pub fn min_line_size(&self) -> usize {
        self.lines.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_line_size(&self) -> usize {
        self.lines.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Lines entirely inside `x`.
    pub fn lines_within(&self, x: &PointSet) -> Vec<usize> {
        (0..self.lines.len()).filter(|&l| self.lines[l].iter().all(|&p| x.contains(p))).collect()
    }

    /// Substructure on `subset` with the given lines, re-indexed; returns the structure and the
    /// map from new indices to old ones.
    pub fn restrict(&self, subset: &PointSet, lines: &[usize]) -> Result<(IncidenceStructure, Vec<usize>), PlsError> {
        let old: Vec<usize> = subset.iter().collect();
        let mut new_index = vec![usize::MAX; self.num_points];
        for (i, &x) in old.iter().enumerate() {
            new_index[x] = i;
        }
        let mut new_lines = Vec::with_capacity(lines.len());
        for &l in lines {
            if !self.lines[l].iter().all(|&x| subset.contains(x)) {
                return Err(PlsError::LineNotInSubset { line: l });
            }
            new_lines.push(self.lines[l].iter().map(|&x| new_index[x]).collect());
        }
        let mut s = IncidenceStructure::new(old.len(), new_lines)?;
        if let Some(labels) = &self.labels {
            s = s.with_labels(old.iter().map(|&x| labels[x].clone()).collect())?;
        }
        Ok((s, old))
    }

    /// Substructure induced on `subset`: all lines contained in it.
    pub fn induced(&self, subset: &PointSet) -> Result<(IncidenceStructure, Vec<usize>), PlsError> {
        self.restrict(subset, &self.lines_within(subset))
    }

    /// Image of a point set under a permutation of points.
    pub fn map_set(set: &PointSet, perm: &[usize]) -> PointSet {
        PointSet::from_indices(set.capacity(), set.iter().map(|x| perm[x]))
    }

    /// Whether a point permutation maps lines onto lines.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        if perm.len() != self.num_points {
            return false;
        }
        let mut seen = PointSet::empty(self.num_points);
        for &y in perm {
            if y >= self.num_points || seen.contains(y) {
                return false;
            }
            seen.insert(y);
        }
        self.lines.iter().all(|l| {
            let mut img: Vec<usize> = l.iter().map(|&x| perm[x]).collect();
            img.sort_unstable();
            self.line_index(&img).is_some()
        })
    }

    /// Image of line `l` under a point permutation, if it is a line.
    pub fn map_line(&self, l: usize, perm: &[usize]) -> Option<usize> {
        let mut img: Vec<usize> = self.lines[l].iter().map(|&x| perm[x]).collect();
        img.sort_unstable();
        self.line_index(&img)
    }
}

/// Maps a set of old point indices into the re-indexed substructure.
pub fn restrict_set(set: &PointSet, new_to_old: &[usize]) -> PointSet {
    PointSet::from_indices(new_to_old.len(), (0..new_to_old.len()).filter(|&i| set.contains(new_to_old[i])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_line_is_valid() {
        let s = validate_pls(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(s.num_lines(), 1);
        assert!(s.collinear(0, 2));
        assert!(!s.collinear(0, 0));
    }

    #[test]
    fn axiom_violations_are_named() {
        assert!(matches!(
            validate_pls(4, vec![vec![0, 1, 2], vec![0, 1, 3]]),
            Err(PlsError::TwoLinesShareTwoPoints { first: 0, second: 1 })
        ));
        assert!(matches!(validate_pls(3, vec![vec![0, 1], vec![2]]), Err(PlsError::LineTooShort { line: 1 })));
        assert!(matches!(validate_pls(4, vec![vec![0, 1, 2]]), Err(PlsError::IsolatedPoint { point: 3 })));
        assert!(matches!(validate_pls(2, vec![]), Err(PlsError::NoLines)));
    }

    #[test]
    fn lines_are_canonical() {
        let s = validate_pls(4, vec![vec![3, 2], vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(s.lines(), &[vec![0, 1], vec![2, 3]]);
        assert_eq!(s.line_index(&[2, 3]), Some(1));
        assert_eq!(s.line_through(1, 0), Some(0));
        assert_eq!(s.line_through(1, 2), None);
    }

    #[test]
    fn restrict_everything_is_identity() {
        let s = validate_pls(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let (r, map) = s.restrict(&s.all_points(), &[0, 1]).unwrap();
        assert_eq!(r, s);
        assert_eq!(map, vec![0, 1, 2, 3, 4]);
        let part = PointSet::from_indices(5, [0, 1, 2]);
        assert!(matches!(s.restrict(&part, &[1]), Err(PlsError::LineNotInSubset { line: 1 })));
    }
}
