use std::collections::BTreeMap;

use super::{IncidenceStructure, PlsError};

/// An incidence structure with a parallelism: a partition of its lines into classes of
/// pairwise disjoint lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelStructure {
    base: IncidenceStructure,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ParallelStructure {
    /// Classes are normalised (each sorted, then sorted by content).
    pub fn new(base: IncidenceStructure, classes: Vec<Vec<usize>>) -> Result<Self, PlsError> {
        let mut classes: Vec<Vec<usize>> = classes
            .into_iter()
            .filter(|c| !c.is_empty())
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        classes.sort();
        let mut class_of = vec![usize::MAX; base.num_lines()];
        for (ci, c) in classes.iter().enumerate() {
            for &l in c {
                if l >= base.num_lines() || class_of[l] != usize::MAX {
                    return Err(PlsError::NotAPartition { line: l });
                }
                class_of[l] = ci;
            }
        }
        if let Some(l) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(PlsError::NotAPartition { line: l });
        }
        for c in &classes {
            for (i, &l) in c.iter().enumerate() {
                for &k in &c[i + 1..] {
                    if base.lines_meet(l, k) {
                        return Err(PlsError::NotPartialAffine { first: l, second: k });
                    }
                }
            }
        }
        Ok(Self { base, classes, class_of })
    }

    /// Parallelism given by a key per line: lines with equal keys are parallel.
    pub fn from_keys<K: Ord>(base: IncidenceStructure, keys: impl IntoIterator<Item = K>) -> Result<Self, PlsError> {
        let mut groups: BTreeMap<K, Vec<usize>> = BTreeMap::new();
        for (l, k) in keys.into_iter().enumerate() {
            groups.entry(k).or_default().push(l);
        }
        Self::new(base, groups.into_values().collect())
    }

    pub fn base(&self) -> &IncidenceStructure {
        &self.base
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, l: usize) -> usize {
        self.class_of[l]
    }

    pub fn parallel(&self, l: usize, k: usize) -> bool {
        self.class_of[l] == self.class_of[k]
    }

    /// Whether a point permutation is an automorphism mapping parallel lines to parallel lines.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        if !self.base.is_automorphism(perm) {
            return false;
        }
        let images: Vec<usize> = (0..self.base.num_lines())
            .map(|l| self.base.map_line(l, perm).expect("automorphism"))
            .collect();
        self.classes.iter().all(|c| c.iter().all(|&l| self.parallel(images[l], images[c[0]])))
    }
}
