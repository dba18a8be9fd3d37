use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{IncidenceStructure, PlsError};
use crate::PointSet;

/// Global properties decided by [`check_property`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Linear,
    Gamma,
    Veblenian,
    Connected,
    StronglyConnected,
}

impl Property {
    pub const ALL: [Property; 5] =
        [Property::Linear, Property::Gamma, Property::Veblenian, Property::Connected, Property::StronglyConnected];

    pub fn name(self) -> &'static str {
        match self {
            Property::Linear => "linear",
            Property::Gamma => "gamma",
            Property::Veblenian => "veblenian",
            Property::Connected => "connected",
            Property::StronglyConnected => "strongly_connected",
        }
    }

    pub fn parse(s: &str) -> Option<Property> {
        Property::ALL.into_iter().find(|p| p.name() == s)
    }
}

pub fn check_property(s: &IncidenceStructure, prop: Property) -> Result<bool, PlsError> {
    Ok(match prop {
        Property::Linear => s.is_linear(),
        Property::Gamma => s.is_gamma(),
        Property::Veblenian => s.is_veblenian(),
        Property::Connected => s.is_connected(),
        Property::StronglyConnected => s.is_strongly_connected()?,
    })
}

impl IncidenceStructure {
    /// Every two distinct points are collinear.
    pub fn is_linear(&self) -> bool {
        (0..self.num_points()).all(|x| self.neighbors(x).len() + 1 == self.num_points())
    }

    /// Every line not through `a` meets the neighbourhood of `a` in no, one, or all points.
    pub fn is_gamma(&self) -> bool {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        (0..self.num_points()).all(|a| {
            counts.clear();
            for y in self.neighbors(a).iter() {
                for &l in self.lines_through(y) {
                    if !self.line_contains(l, a) {
                        *counts.entry(l).or_insert(0) += 1;
                    }
                }
            }
            counts.iter().all(|(&l, &c)| c <= 1 || c == self.line(l).len())
        })
    }

    /// Veblen–Pasch: two lines meeting two concurrent lines away from their common point meet.
    pub fn is_veblenian(&self) -> bool {
        self.veblen_counterexample().is_none()
    }

    /// A configuration `(p, L₁, L₂, K₁, K₂)` violating the Veblen condition.
    pub fn veblen_counterexample(&self) -> Option<(usize, usize, usize, usize, usize)> {
        for p in 0..self.num_points() {
            let through = self.lines_through(p);
            let slot: HashMap<usize, usize> = through.iter().enumerate().map(|(i, &l)| (l, i)).collect();
            let mut transversals: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
            let mut visited = HashSet::new();
            for x in self.neighbors(p).iter() {
                for &k in self.lines_through(x) {
                    if self.line_contains(k, p) || !visited.insert(k) {
                        continue;
                    }
                    let mut hit: Vec<usize> = self
                        .line(k)
                        .iter()
                        .filter(|&&y| self.collinear(p, y))
                        .map(|&y| slot[&self.line_through(p, y).expect("collinear")])
                        .collect();
                    hit.sort_unstable();
                    for i in 0..hit.len() {
                        for j in i + 1..hit.len() {
                            transversals.entry((hit[i], hit[j])).or_default().push(k);
                        }
                    }
                }
            }
            let mut keys: Vec<_> = transversals.keys().copied().collect();
            keys.sort_unstable();
            for key in keys {
                let ks = &transversals[&key];
                for i in 0..ks.len() {
                    for j in i + 1..ks.len() {
                        if !self.lines_meet(ks[i], ks[j]) {
                            return Some((p, through[key.0], through[key.1], ks[i], ks[j]));
                        }
                    }
                }
            }
        }
        None
    }

    /// The collinearity graph is connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components of the collinearity graph.
    pub fn components(&self) -> Vec<PointSet> {
        let n = self.num_points();
        let mut seen = PointSet::empty(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = PointSet::empty(n);
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(x) = queue.pop_front() {
                comp.insert(x);
                for y in self.neighbors(x).iter() {
                    if !seen.contains(y) {
                        seen.insert(y);
                        queue.push_back(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Strong connectivity, evaluated on maximal strong subspaces: every component of the
    /// "share at least two points" graph on maximal strong subspaces must cover all points.
    pub fn is_strongly_connected(&self) -> Result<bool, PlsError> {
        let maximal = self.strong_subspaces(true)?;
        let comps = overlap_components(&maximal, 2);
        let n = self.num_points();
        Ok(comps.iter().all(|members| {
            let mut cover = PointSet::empty(n);
            for &m in members {
                cover.union_with(&maximal[m]);
            }
            cover.is_full()
        }))
    }

    /// Every line meeting `x` in at least two points lies in `x`.
    pub fn is_subspace(&self, x: &PointSet) -> bool {
        self.lines().iter().all(|l| {
            let c = x.count_in(l);
            c < 2 || c == l.len()
        })
    }

    /// A proper subspace met by every line.
    pub fn is_hyperplane(&self, x: &PointSet) -> bool {
        x.len() < self.num_points()
            && self.lines().iter().all(|l| {
                let c = x.count_in(l);
                c == 1 || c == l.len()
            })
    }

    fn require_hyperplane(&self, x: &PointSet) -> Result<(), PlsError> {
        if self.is_hyperplane(x) {
            Ok(())
        } else {
            Err(PlsError::NotAHyperplane)
        }
    }

    /// Every point of the hyperplane is collinear with a point off it.
    pub fn is_spiky(&self, x: &PointSet) -> Result<bool, PlsError> {
        self.require_hyperplane(x)?;
        Ok(self.non_spiky_point(x).is_none())
    }

    /// A point of `x` all of whose neighbours lie in `x`.
    pub fn non_spiky_point(&self, x: &PointSet) -> Option<usize> {
        x.iter().find(|&a| self.neighbors(a).is_subset(x))
    }

    /// Every line inside the hyperplane lies in the neighbourhood of a point off it.
    pub fn is_flappy(&self, x: &PointSet) -> Result<bool, PlsError> {
        self.require_hyperplane(x)?;
        Ok(self.non_flappy_line(x).is_none())
    }

    /// A line inside `x` with no common neighbour outside `x`.
    pub fn non_flappy_line(&self, x: &PointSet) -> Option<usize> {
        (0..self.num_lines()).find(|&l| {
            let pts = self.line(l);
            if !pts.iter().all(|&p| x.contains(p)) {
                return false;
            }
            let mut common = self.neighbors(pts[0]).difference(x);
            for &p in &pts[1..] {
                common.intersect_with(self.neighbors(p));
                if common.is_empty() {
                    break;
                }
            }
            common.is_empty()
        })
    }

    /// Triples of pairwise collinear points not on a common line, in lexicographic order.
    pub fn triangles(&self) -> impl Iterator<Item = [usize; 3]> + '_ {
        let n = self.num_points();
        (0..n).flat_map(move |a| {
            self.neighbors(a).iter().filter(move |&b| b > a).flat_map(move |b| {
                let ab = self.line_through(a, b).expect("collinear");
                self.neighbors(a)
                    .intersection(self.neighbors(b))
                    .to_vec()
                    .into_iter()
                    .filter(move |&c| c > b && !self.line_contains(ab, c))
                    .map(move |c| [a, b, c])
            })
        })
    }

    /// Smallest subspace containing `x`.
    pub fn subspace_closure(&self, x: &PointSet) -> PointSet {
        let mut set = x.clone();
        let mut queue: Vec<usize> = set.to_vec();
        while let Some(p) = queue.pop() {
            for &l in self.lines_through(p) {
                let pts = self.line(l);
                let c = set.count_in(pts);
                if c >= 2 && c < pts.len() {
                    for &q in pts {
                        if !set.contains(q) {
                            set.insert(q);
                            queue.push(q);
                        }
                    }
                }
            }
        }
        set
    }

    /// All points pairwise collinear.
    pub fn is_clique(&self, x: &PointSet) -> bool {
        x.iter().all(|a| {
            let mut others = x.clone();
            others.remove(a);
            others.is_subset(self.neighbors(a))
        })
    }
}

/// Components of the graph on `sets` joining two sets sharing at least `min_overlap` elements.
pub fn overlap_components(sets: &[PointSet], min_overlap: usize) -> Vec<Vec<usize>> {
    let n = sets.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if sets[i].intersection_len(&sets[j]) >= min_overlap {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}
