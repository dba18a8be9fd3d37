use std::collections::HashSet;

use super::{IncidenceStructure, PlsError};
use crate::PointSet;

/// Largest structure for which strong subspaces are enumerated.
pub const STRONG_SUBSPACE_CAP: usize = 1 << 14;

impl IncidenceStructure {
    /// Nonempty strong subspaces (subspaces whose points are pairwise collinear), or only the
    /// maximal ones. Sorted by their point lists.
    pub fn strong_subspaces(&self, maximal_only: bool) -> Result<Vec<PointSet>, PlsError> {
        let n = self.num_points();
        if n > STRONG_SUBSPACE_CAP {
            return Err(PlsError::CapExceeded { what: "strong subspace enumeration", limit: STRONG_SUBSPACE_CAP, actual: n });
        }
        let mut visited: HashSet<PointSet> = HashSet::new();
        let mut stack: Vec<PointSet> = Vec::new();
        let seeds: Vec<PointSet> = if maximal_only {
            (0..self.num_lines()).map(|l| self.line_set(l)).collect()
        } else {
            (0..n).map(|x| PointSet::from_indices(n, [x])).collect()
        };
        for s in seeds {
            if visited.insert(s.clone()) {
                stack.push(s);
            }
        }
        let mut maximal = Vec::new();
        while let Some(s) = stack.pop() {
            let mut candidates = PointSet::full(n);
            for x in s.iter() {
                candidates.intersect_with(self.neighbors(x));
            }
            let mut extended = false;
            for x in candidates.iter() {
                let mut t = s.clone();
                t.insert(x);
                let t = self.subspace_closure(&t);
                if self.is_clique(&t) {
                    extended = true;
                    if visited.insert(t.clone()) {
                        stack.push(t);
                    }
                }
            }
            if !extended {
                maximal.push(s);
            }
        }
        let mut out: Vec<PointSet> = if maximal_only { maximal } else { visited.into_iter().collect() };
        out.sort_by_key(|s| s.to_vec());
        Ok(out)
    }
}
