//! Isomorphism and automorphism search by colour refinement and individualisation.
//!
//! A structure is encoded as a vertex-coloured graph on points, lines and (optionally)
//! parallel classes. Colour refinement is run jointly on both graphs of a search, so colour
//! identifiers are comparable. Automorphism groups are computed along a stabiliser chain:
//! the order is the product of the base-point orbit sizes, and every orbit is established by
//! explicit automorphisms, so the result is exact.

use std::collections::{BTreeMap, VecDeque};

use super::{IncidenceStructure, ParallelStructure, PlsError};
use crate::PointSet;

/// Largest structure accepted by the symmetry search.
pub const SYMMETRY_SEARCH_CAP: usize = 512;

const LINE_COLOR: u32 = 1 << 30;
const CLASS_COLOR: u32 = LINE_COLOR + 1;

/// Order and generators of an automorphism group, with the base used to compute it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismGroup {
    pub order: u128,
    pub generators: Vec<Vec<usize>>,
    pub base: Vec<usize>,
    pub orbit_sizes: Vec<usize>,
}

struct Side<'a> {
    s: &'a IncidenceStructure,
    parallel: Option<&'a ParallelStructure>,
    point_colors: Option<&'a [u32]>,
    adj: Vec<Vec<usize>>,
    init: Vec<u32>,
}

impl<'a> Side<'a> {
    fn new(s: &'a IncidenceStructure, parallel: Option<&'a ParallelStructure>, point_colors: Option<&'a [u32]>) -> Self {
        let n = s.num_points();
        let nl = s.num_lines();
        let nc = parallel.map_or(0, |p| p.classes().len());
        let mut adj = vec![Vec::new(); n + nl + nc];
        for (l, pts) in s.lines().iter().enumerate() {
            for &x in pts {
                adj[x].push(n + l);
                adj[n + l].push(x);
            }
        }
        if let Some(p) = parallel {
            for (c, ls) in p.classes().iter().enumerate() {
                for &l in ls {
                    adj[n + l].push(n + nl + c);
                    adj[n + nl + c].push(n + l);
                }
            }
        }
        let mut init = Vec::with_capacity(adj.len());
        init.extend((0..n).map(|x| point_colors.map_or(0, |c| c[x])));
        init.extend(std::iter::repeat_n(LINE_COLOR, nl));
        init.extend(std::iter::repeat_n(CLASS_COLOR, nc));
        Self { s, parallel, point_colors, adj, init }
    }

    fn points(&self) -> usize {
        self.s.num_points()
    }
}

/// Jointly refines colourings of several graphs to their coarsest equitable refinement.
fn refine(sides: &[&Side<'_>], colors: &mut [Vec<u32>]) {
    let mut distinct = count_distinct(colors);
    loop {
        let mut sigs: Vec<Vec<(u32, Vec<u32>)>> = Vec::with_capacity(sides.len());
        for (side, col) in sides.iter().zip(colors.iter()) {
            sigs.push(
                side.adj
                    .iter()
                    .enumerate()
                    .map(|(v, nb)| {
                        let mut m: Vec<u32> = nb.iter().map(|&w| col[w]).collect();
                        m.sort_unstable();
                        (col[v], m)
                    })
                    .collect(),
            );
        }
        let mut ids: BTreeMap<&(u32, Vec<u32>), u32> = BTreeMap::new();
        for s in sigs.iter().flatten() {
            ids.insert(s, 0);
        }
        for (i, v) in ids.values_mut().enumerate() {
            *v = i as u32;
        }
        let new: Vec<Vec<u32>> = sigs.iter().map(|g| g.iter().map(|s| ids[s]).collect()).collect();
        let count = ids.len();
        for (c, n) in colors.iter_mut().zip(new) {
            *c = n;
        }
        if count == distinct {
            return;
        }
        distinct = count;
    }
}

fn count_distinct(colors: &[Vec<u32>]) -> usize {
    let mut all: Vec<u32> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

fn individualize(colors: &mut [u32], v: usize) {
    let fresh = colors.iter().max().copied().unwrap_or(0) + 1;
    colors[v] = fresh;
}

/// The non-singleton point cell to branch on: smallest size, then smallest colour.
fn target_cell(colors: &[u32], points: usize) -> Option<u32> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &colors[..points] {
        *counts.entry(c).or_insert(0) += 1;
    }
    counts.into_iter().filter(|&(_, k)| k > 1).min_by_key(|&(c, k)| (k, c)).map(|(c, _)| c)
}

fn same_histogram(a: &[u32], b: &[u32]) -> bool {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort_unstable();
    y.sort_unstable();
    x == y
}

/// Checks that a point bijection is an isomorphism respecting lines, classes and point colours.
fn verify(a: &Side<'_>, b: &Side<'_>, map: &[usize]) -> bool {
    let n = a.points();
    if map.len() != n || b.points() != n {
        return false;
    }
    let mut seen = PointSet::empty(n);
    for &y in map {
        if seen.contains(y) {
            return false;
        }
        seen.insert(y);
    }
    if let (Some(ca), Some(cb)) = (a.point_colors, b.point_colors) {
        if (0..n).any(|x| ca[x] != cb[map[x]]) {
            return false;
        }
    }
    let mut line_map = Vec::with_capacity(a.s.num_lines());
    for l in 0..a.s.num_lines() {
        let mut img: Vec<usize> = a.s.line(l).iter().map(|&x| map[x]).collect();
        img.sort_unstable();
        match b.s.line_index(&img) {
            Some(k) => line_map.push(k),
            None => return false,
        }
    }
    if let (Some(pa), Some(pb)) = (a.parallel, b.parallel) {
        let mut class_map = vec![usize::MAX; pa.classes().len()];
        let mut used = vec![false; pb.classes().len()];
        for (c, ls) in pa.classes().iter().enumerate() {
            let target = pb.class_of(line_map[ls[0]]);
            if used[target] || ls.iter().any(|&l| pb.class_of(line_map[l]) != target) {
                return false;
            }
            used[target] = true;
            class_map[c] = target;
        }
    }
    true
}

fn extend(a: &Side<'_>, b: &Side<'_>, ca: Vec<u32>, cb: Vec<u32>) -> Option<Vec<usize>> {
    let mut colors = [ca, cb];
    refine(&[a, b], &mut colors);
    let [ca, cb] = colors;
    if !same_histogram(&ca, &cb) {
        return None;
    }
    let n = a.points();
    match target_cell(&ca, n) {
        None => {
            let mut by_color: BTreeMap<u32, usize> = BTreeMap::new();
            for y in 0..n {
                by_color.insert(cb[y], y);
            }
            let map: Vec<usize> = (0..n).map(|x| by_color[&ca[x]]).collect();
            verify(a, b, &map).then_some(map)
        }
        Some(cell) => {
            let v = (0..n).find(|&x| ca[x] == cell).expect("cell nonempty");
            for w in (0..n).filter(|&y| cb[y] == cell) {
                let mut na = ca.clone();
                let mut nb = cb.clone();
                individualize(&mut na, v);
                individualize(&mut nb, w);
                if let Some(m) = extend(a, b, na, nb) {
                    return Some(m);
                }
            }
            None
        }
    }
}

fn check_cap(s: &IncidenceStructure) -> Result<(), PlsError> {
    if s.num_points() > SYMMETRY_SEARCH_CAP {
        return Err(PlsError::CapExceeded { what: "symmetry search", limit: SYMMETRY_SEARCH_CAP, actual: s.num_points() });
    }
    Ok(())
}

fn isomorphism_between(a: &Side<'_>, b: &Side<'_>) -> Option<Vec<usize>> {
    if a.points() != b.points() || a.s.num_lines() != b.s.num_lines() || a.adj.len() != b.adj.len() {
        return None;
    }
    extend(a, b, a.init.clone(), b.init.clone())
}

/// A line-preserving bijection from `s1` onto `s2`, if any.
pub fn find_isomorphism(s1: &IncidenceStructure, s2: &IncidenceStructure) -> Result<Option<Vec<usize>>, PlsError> {
    check_cap(s1)?;
    check_cap(s2)?;
    Ok(isomorphism_between(&Side::new(s1, None, None), &Side::new(s2, None, None)))
}

/// A bijection preserving lines and parallelism, if any.
pub fn find_parallel_isomorphism(a1: &ParallelStructure, a2: &ParallelStructure) -> Result<Option<Vec<usize>>, PlsError> {
    check_cap(a1.base())?;
    check_cap(a2.base())?;
    Ok(isomorphism_between(&Side::new(a1.base(), Some(a1), None), &Side::new(a2.base(), Some(a2), None)))
}

/// Automorphisms of `s`, optionally preserving a parallelism on it and a point colouring.
pub fn automorphism_group(
    s: &IncidenceStructure,
    parallel: Option<&ParallelStructure>,
    point_colors: Option<&[u32]>,
) -> Result<AutomorphismGroup, PlsError> {
    check_cap(s)?;
    if let Some(p) = parallel {
        if p.base() != s {
            return Err(PlsError::ParallelismMismatch);
        }
    }
    let side = Side::new(s, parallel, point_colors);
    let n = s.num_points();

    let mut base = Vec::new();
    let mut c = side.init.clone();
    loop {
        let mut cs = [c];
        refine(&[&side], &mut cs);
        let [refined] = cs;
        c = refined;
        match target_cell(&c, n) {
            None => break,
            Some(cell) => {
                let v = (0..n).find(|&x| c[x] == cell).expect("cell nonempty");
                base.push(v);
                individualize(&mut c, v);
            }
        }
    }

    let mut generators: Vec<Vec<usize>> = Vec::new();
    let mut orbit_sizes = vec![0; base.len()];
    for i in (0..base.len()).rev() {
        let mut prefix = side.init.clone();
        for &b in &base[..i] {
            individualize(&mut prefix, b);
        }
        let mut cs = [prefix];
        refine(&[&side], &mut cs);
        let [prefix] = cs;
        let target = base[i];
        let candidates: Vec<usize> = (0..n).filter(|&w| prefix[w] == prefix[target]).collect();
        let mut orbit = orbit_of(target, &generators, n);
        for &w in &candidates {
            if orbit.contains(w) {
                continue;
            }
            let mut ca = prefix.clone();
            let mut cb = prefix.clone();
            individualize(&mut ca, target);
            individualize(&mut cb, w);
            if let Some(g) = extend(&side, &side, ca, cb) {
                generators.push(g);
                orbit = orbit_of(target, &generators, n);
            }
        }
        orbit_sizes[i] = orbit.len();
    }
    let order = orbit_sizes.iter().map(|&k| k as u128).product();
    Ok(AutomorphismGroup { order, generators, base, orbit_sizes })
}

fn orbit_of(x: usize, gens: &[Vec<usize>], n: usize) -> PointSet {
    let mut orbit = PointSet::from_indices(n, [x]);
    let mut queue = VecDeque::from([x]);
    while let Some(y) = queue.pop_front() {
        for g in gens {
            let z = g[y];
            if !orbit.contains(z) {
                orbit.insert(z);
                queue.push_back(z);
            }
        }
    }
    orbit
}

/// All elements of the group generated by `gens`, by closure (for small groups).
pub fn group_elements(gens: &[Vec<usize>], n: usize, limit: usize) -> Option<Vec<Vec<usize>>> {
    let identity: Vec<usize> = (0..n).collect();
    let mut seen = std::collections::HashSet::new();
    seen.insert(identity.clone());
    let mut queue = VecDeque::from([identity]);
    let mut out = Vec::new();
    while let Some(g) = queue.pop_front() {
        for h in gens {
            let gh: Vec<usize> = (0..n).map(|x| h[g[x]]).collect();
            if seen.insert(gh.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(gh);
            }
        }
        out.push(g);
    }
    Some(out)
}

/// Composition `x ↦ g(f(x))`.
pub fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    f.iter().map(|&x| g[x]).collect()
}

pub fn invert(f: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; f.len()];
    for (x, &y) in f.iter().enumerate() {
        inv[y] = x;
    }
    inv
}
