use super::{IncidenceStructure, PlsError};
use crate::PointSet;

/// Largest structure whose hyperplanes are enumerated exhaustively.
pub const HYPERPLANE_ENUMERATION_CAP: usize = 40;

const UNSET: u8 = 2;

struct Search<'a> {
    s: &'a IncidenceStructure,
    value: Vec<u8>,
    inside: Vec<usize>,
    outside: Vec<usize>,
    trail: Vec<usize>,
    found: Vec<PointSet>,
}

impl<'a> Search<'a> {
    /// Assigns `x := v` and propagates the "one or all points" rule on every line.
    fn assign(&mut self, x: usize, v: u8) -> bool {
        let mut queue = vec![(x, v)];
        while let Some((y, v)) = queue.pop() {
            if self.value[y] != UNSET {
                if self.value[y] != v {
                    return false;
                }
                continue;
            }
            self.value[y] = v;
            self.trail.push(y);
            for &l in self.s.lines_through(y) {
                if v == 1 {
                    self.inside[l] += 1;
                } else {
                    self.outside[l] += 1;
                }
            }
            for &l in self.s.lines_through(y) {
                let (i, o, len) = (self.inside[l], self.outside[l], self.s.line(l).len());
                if (i >= 2 && o >= 1) || o == len {
                    return false;
                }
                let forced = if i >= 2 {
                    Some(1)
                } else if i == 1 && o >= 1 {
                    Some(0)
                } else if i == 0 && o == len - 1 {
                    Some(1)
                } else {
                    None
                };
                if let Some(f) = forced {
                    for &z in self.s.line(l) {
                        if self.value[z] == UNSET {
                            queue.push((z, f));
                        }
                    }
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let y = self.trail.pop().expect("nonempty trail");
            let v = self.value[y];
            for &l in self.s.lines_through(y) {
                if v == 1 {
                    self.inside[l] -= 1;
                } else {
                    self.outside[l] -= 1;
                }
            }
            self.value[y] = UNSET;
        }
    }

    fn run(&mut self) {
        let Some(x) = self.value.iter().position(|&v| v == UNSET) else {
            let set = PointSet::from_indices(self.value.len(), (0..self.value.len()).filter(|&i| self.value[i] == 1));
            if !set.is_full() {
                self.found.push(set);
            }
            return;
        };
        for v in [1u8, 0] {
            let mark = self.trail.len();
            if self.assign(x, v) {
                self.run();
            }
            self.undo_to(mark);
        }
    }
}

impl IncidenceStructure {
    /// All hyperplanes, by constraint search with propagation. Sorted by point lists.
    pub fn enumerate_hyperplanes(&self) -> Result<Vec<PointSet>, PlsError> {
        let n = self.num_points();
        if n > HYPERPLANE_ENUMERATION_CAP {
            return Err(PlsError::CapExceeded { what: "hyperplane enumeration", limit: HYPERPLANE_ENUMERATION_CAP, actual: n });
        }
        let mut search = Search {
            s: self,
            value: vec![UNSET; n],
            inside: vec![0; self.num_lines()],
            outside: vec![0; self.num_lines()],
            trail: Vec::new(),
            found: Vec::new(),
        };
        search.run();
        let mut out = search.found;
        out.sort_by_key(|s| s.to_vec());
        Ok(out)
    }
}
