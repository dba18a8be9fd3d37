use serde::{Deserialize, Serialize};

use super::{AffinizedStructure, ComplementError};
use crate::pls::IncidenceStructure;
use crate::PointSet;

/// Checks what the extension of automorphisms relies on: a Veblenian gamma ambient space with
/// lines of at least 3 points, and a flappy hyperplane.
pub fn extension_hypotheses(a: &AffinizedStructure) -> Result<(), ComplementError> {
    let m = a.ambient();
    if m.min_line_size() < 3 {
        return Err(ComplementError::HypothesisFailed("ambient lines need at least 3 points".into()));
    }
    if !m.is_gamma() || !m.is_veblenian() {
        return Err(ComplementError::HypothesisFailed("the ambient space is not a Veblenian gamma space".into()));
    }
    if !m.is_flappy(a.removed())? {
        return Err(ComplementError::HypothesisFailed("the hyperplane is not flappy".into()));
    }
    Ok(())
}

/// Extends an automorphism `f` of the complement with its parallelism to the ambient space:
/// a point `h` of `H` goes to the direction of `f(L)` for any line `L` with direction `h`.
pub fn extend_automorphism(a: &AffinizedStructure, f: &[usize]) -> Result<Vec<usize>, ComplementError> {
    extension_hypotheses(a)?;
    if !a.structure().is_automorphism(f) {
        return Err(ComplementError::NotAnAutomorphism);
    }
    if !a.carrier().is_automorphism(f) {
        return Err(ComplementError::NotParallelismPreserving);
    }
    let m = a.ambient();
    let s = a.structure();
    let mut ext = vec![usize::MAX; m.num_points()];
    for x in 0..s.num_points() {
        ext[a.to_ambient(x)] = a.to_ambient(f[x]);
    }
    for l in 0..s.num_lines() {
        let img = s.map_line(l, f).ok_or(ComplementError::NotAnAutomorphism)?;
        let (d, e) = (a.direction(l), a.direction(img));
        if ext[d] == usize::MAX {
            ext[d] = e;
        } else if ext[d] != e {
            return Err(ComplementError::ExtensionFailed);
        }
    }
    if ext.contains(&usize::MAX) || !m.is_automorphism(&ext) || IncidenceStructure::map_set(a.removed(), &ext) != *a.removed() {
        return Err(ComplementError::ExtensionFailed);
    }
    Ok(ext)
}

/// Restriction of an ambient automorphism stabilising `H` to the complement.
pub fn restrict_automorphism(a: &AffinizedStructure, g: &[usize]) -> Result<Vec<usize>, ComplementError> {
    let m = a.ambient();
    if !m.is_automorphism(g) || IncidenceStructure::map_set(a.removed(), g) != *a.removed() {
        return Err(ComplementError::NotAnAutomorphism);
    }
    Ok(a.point_map().iter().map(|&x| a.from_ambient(g[x]).expect("H is stabilised")).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NearPlaneKind {
    /// The point lies on the line.
    Star,
    /// No line through the point meets the line.
    Empty,
    SingleLine,
    NearPlane,
}

/// Union of the lines through `p` meeting `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearPlane {
    pub points: PointSet,
    pub kind: NearPlaneKind,
}

pub fn near_plane(m: &IncidenceStructure, p: usize, k: usize) -> NearPlane {
    let mut points = PointSet::empty(m.num_points());
    let mut count = 0;
    for &l in m.lines_through(p) {
        if m.lines_meet(l, k) {
            count += 1;
            for &x in m.line(l) {
                points.insert(x);
            }
        }
    }
    let kind = if m.line_contains(k, p) {
        NearPlaneKind::Star
    } else {
        match count {
            0 => NearPlaneKind::Empty,
            1 => NearPlaneKind::SingleLine,
            _ => NearPlaneKind::NearPlane,
        }
    };
    NearPlane { points, kind }
}

fn line_inside(m: &IncidenceStructure, k: usize, h: &PointSet) -> bool {
    m.line(k).iter().all(|&x| h.contains(x))
}

/// A pair `(p, K)` with `p ∉ H`, `K ⊄ H`, whose near-plane does not meet `H` in a line.
pub fn near_plane_line_violation(m: &IncidenceStructure, h: &PointSet) -> Option<(usize, usize)> {
    for p in (0..m.num_points()).filter(|&p| !h.contains(p)) {
        for k in (0..m.num_lines()).filter(|&k| !line_inside(m, k, h)) {
            let np = near_plane(m, p, k);
            if np.kind != NearPlaneKind::NearPlane {
                continue;
            }
            if m.line_index(&np.points.intersection(h).to_vec()).is_none() {
                return Some((p, k));
            }
        }
    }
    None
}

/// A line inside `H` contained in no near-plane `Π(p, K)` with `p ∉ H` and `K ⊄ H`.
pub fn near_flappy_violation(m: &IncidenceStructure, h: &PointSet) -> Option<usize> {
    m.lines_within(h).into_iter().find(|&l| {
        let pts = m.line(l);
        let mut candidates = m.neighbors(pts[0]).difference(h);
        for &x in &pts[1..] {
            candidates.intersect_with(m.neighbors(x));
        }
        let found = candidates.iter().any(|p| {
            (0..m.num_lines()).any(|k| {
                if line_inside(m, k, h) {
                    return false;
                }
                let np = near_plane(m, p, k);
                np.kind == NearPlaneKind::NearPlane && pts.iter().all(|&x| np.points.contains(x))
            })
        });
        !found
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complement::affinize;
    use crate::pls::automorphism_group;
    use crate::spaces::projective_space;

    #[test]
    fn affine_plane_automorphisms_extend() {
        let pg = projective_space(3, 3).unwrap();
        let h = pg.line_set(0);
        let a = affinize(&pg, &h).unwrap();
        let group = automorphism_group(a.structure(), Some(a.carrier()), None).unwrap();
        assert_eq!(group.order, 432);
        for g in &group.generators {
            let ext = extend_automorphism(&a, g).unwrap();
            assert_eq!(restrict_automorphism(&a, &ext).unwrap(), *g);
        }
        assert_eq!(near_plane_line_violation(&pg, &h), None);
        assert_eq!(near_flappy_violation(&pg, &h), None);
    }

    #[test]
    fn near_plane_kinds() {
        let pg = projective_space(3, 2).unwrap();
        let k = 0;
        let on = pg.line(k)[0];
        let off = (0..7).find(|&x| !pg.line_contains(k, x)).unwrap();
        assert_eq!(near_plane(&pg, on, k).kind, NearPlaneKind::Star);
        let np = near_plane(&pg, off, k);
        assert_eq!((np.kind, np.points.len()), (NearPlaneKind::NearPlane, 7));
    }
}
