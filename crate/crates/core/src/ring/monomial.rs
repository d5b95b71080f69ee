use std::fmt;

use crate::simplicial::{Face, SimplicialComplex};

/// A monomial in the vertex variables, stored as its sorted multiset of
/// vertex indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FaceMonomial(Vec<u8>);

impl FaceMonomial {
    pub fn one() -> Self {
        FaceMonomial(Vec::new())
    }

    pub fn from_vertices(vs: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<u8> = vs.into_iter().map(|x| x as u8).collect();
        v.sort_unstable();
        FaceMonomial(v)
    }

    /// Squarefree monomial `x_F`.
    pub fn of_face(f: Face) -> Self {
        FaceMonomial::from_vertices(f.vertices())
    }

    pub fn var(v: usize) -> Self {
        FaceMonomial(vec![v as u8])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn support(&self) -> Face {
        Face::from_vertices(self.0.iter().map(|&v| v as usize))
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&v| v as usize)
    }

    pub fn exponent(&self, v: usize) -> usize {
        self.0.iter().filter(|&&x| x as usize == v).count()
    }

    pub fn mul(&self, other: &FaceMonomial) -> FaceMonomial {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] <= other.0[j] {
                v.push(self.0[i]);
                i += 1;
            } else {
                v.push(other.0[j]);
                j += 1;
            }
        }
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&other.0[j..]);
        FaceMonomial(v)
    }

    pub fn pow(&self, e: usize) -> FaceMonomial {
        (0..e).fold(FaceMonomial::one(), |acc, _| acc.mul(self))
    }

    pub fn display(&self, c: &SimplicialComplex) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.0.len() {
            let v = self.0[i];
            let e = self.0[i..].iter().take_while(|&&x| x == v).count();
            out.push_str(&format!("x{}", c.label(v as usize)));
            if e > 1 {
                out.push_str(&format!("^{e}"));
            }
            i += e;
        }
        out
    }
}

impl fmt::Debug for FaceMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

/// Degree-`k` monomials whose support is a face of `c`, sorted.
pub fn monomials_of_degree(c: &SimplicialComplex, k: usize) -> Vec<FaceMonomial> {
    fn spread(vs: &[usize], left: usize, acc: &mut Vec<u8>, out: &mut Vec<FaceMonomial>) {
        // each vertex appears once plus some share of the `left` extra degree
        match vs.split_first() {
            None => {
                if left == 0 {
                    out.push(FaceMonomial::from_vertices(acc.iter().map(|&v| v as usize)));
                }
            }
            Some((&v, rest)) => {
                for e in 0..=left {
                    let n = acc.len();
                    acc.extend(std::iter::repeat_n(v as u8, e + 1));
                    spread(rest, left - e, acc, out);
                    acc.truncate(n);
                }
            }
        }
    }
    if k == 0 {
        return if c.is_void() { Vec::new() } else { vec![FaceMonomial::one()] };
    }
    let mut out = Vec::new();
    for size in 1..=k.min(c.top_size()) {
        for &g in c.faces_of_size(size) {
            spread(&g.to_vec(), k - size, &mut Vec::with_capacity(k), &mut out);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{binomial, named};

    #[test]
    fn monomial_basics() {
        let a = FaceMonomial::from_vertices([2, 0]);
        let b = FaceMonomial::from_vertices([0]);
        let ab = a.mul(&b);
        assert_eq!(ab, FaceMonomial::from_vertices([0, 0, 2]));
        assert_eq!(ab.exponent(0), 2);
        assert!(!ab.is_squarefree());
        assert!(a.is_squarefree());
        assert_eq!(ab.support(), Face::from_vertices([0, 2]));
        assert_eq!(b.pow(3).degree(), 3);
    }

    #[test]
    fn simplex_counts_all_monomials() {
        // the full simplex on n vertices has every monomial: C(n + k - 1, k)
        let c = SimplicialComplex::from_index_facets(4, &[&[0, 1, 2, 3]]).unwrap();
        for k in 0..5 {
            assert_eq!(monomials_of_degree(&c, k).len() as u64, binomial(4 + k as u64 - 1, k as u64));
        }
    }

    #[test]
    fn cross_polytope_counts() {
        // faces of size j: C(4, j) 2^j, each with C(k-1, j-1) monomials
        let c = named::cross_polytope_boundary(4);
        let count = |k: u64| (1..=4u64.min(k)).map(|j| binomial(4, j) * (1 << j) * binomial(k - 1, j - 1)).sum::<u64>();
        for k in 1..=4 {
            let ms = monomials_of_degree(&c, k);
            assert_eq!(ms.len() as u64, count(k as u64));
            assert!(ms.iter().all(|m| c.contains_face(m.support())));
        }
    }
}
