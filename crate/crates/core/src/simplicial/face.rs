use std::fmt;

use serde::{Deserialize, Serialize};

/// Maximum number of vertices a complex may have.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices stored as a bit mask. Iteration and orientation
/// follow increasing index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Face(pub u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_vertices(vs: impl IntoIterator<Item = usize>) -> Face {
        let mut bits = 0u64;
        for v in vs {
            assert!(v < MAX_VERTICES, "vertex index {v} out of range");
            bits |= 1 << v;
        }
        Face(bits)
    }

    pub fn vertex(v: usize) -> Face {
        Face::from_vertices([v])
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn minus(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Face {
        self.union(Face::vertex(v))
    }

    pub fn without(self, v: usize) -> Face {
        self.minus(Face::vertex(v))
    }

    /// Number of vertices of `self` smaller than `v`.
    pub fn position(self, v: usize) -> usize {
        (self.0 & ((1u64 << v) - 1)).count_ones() as usize
    }

    pub fn vertices(self) -> FaceIter {
        FaceIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    /// All subsets of size `k`, sorted.
    pub fn subsets_of_size(self, k: usize) -> Vec<Face> {
        fn go(vs: &[usize], k: usize, start: usize, acc: Face, out: &mut Vec<Face>) {
            if acc.len() == k {
                out.push(acc);
                return;
            }
            for i in start..vs.len() {
                if vs.len() - i < k - acc.len() {
                    break;
                }
                go(vs, k, i + 1, acc.with(vs[i]), out);
            }
        }
        let vs = self.to_vec();
        let mut out = Vec::new();
        if k <= vs.len() {
            go(&vs, k, 0, Face::EMPTY, &mut out);
        }
        out.sort();
        out
    }

    /// All subsets, including the empty face and `self`.
    pub fn subsets(self) -> Vec<Face> {
        let mut out = Vec::with_capacity(1 << self.len());
        let mut s = self.0;
        loop {
            out.push(Face(s));
            if s == 0 {
                break;
            }
            s = (s - 1) & self.0;
        }
        out.sort();
        out
    }
}

/// Faces compare by size first, then by vertex sequence, so sorted face
/// lists are graded and lexicographic within each size.
impl Ord for Face {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.vertices().cmp(other.vertices()))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct FaceIter(u64);

impl Iterator for FaceIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let a = Face::from_vertices([0, 2, 5]);
        let b = Face::from_vertices([2, 3]);
        assert_eq!(a.len(), 3);
        assert_eq!(a.union(b).to_vec(), vec![0, 2, 3, 5]);
        assert_eq!(a.intersection(b).to_vec(), vec![2]);
        assert_eq!(a.minus(b).to_vec(), vec![0, 5]);
        assert_eq!(a.position(5), 2);
        assert_eq!(a.position(0), 0);
        assert!(Face::EMPTY.is_subset(a));
        assert!(!b.is_subset(a));
    }

    #[test]
    fn subsets_are_counted_by_binomials() {
        let f = Face::from_vertices([1, 3, 4, 7, 9]);
        let sizes: Vec<usize> = (0..=6).map(|k| f.subsets_of_size(k).len()).collect();
        assert_eq!(sizes, vec![1, 5, 10, 10, 5, 1, 0]);
        assert_eq!(f.subsets().len(), 32);
        assert!(f.subsets_of_size(3).iter().all(|s| s.len() == 3 && s.is_subset(f)));
    }

    #[test]
    fn ordering_is_graded_lex() {
        let mut fs = vec![Face::from_vertices([1, 2]), Face::vertex(3), Face::from_vertices([0, 3]), Face::EMPTY];
        fs.sort();
        assert_eq!(fs, vec![Face::EMPTY, Face::vertex(3), Face::from_vertices([0, 3]), Face::from_vertices([1, 2])]);
    }
}
