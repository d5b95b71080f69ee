use std::collections::{BTreeSet, HashSet};

use super::face::{Face, MAX_VERTICES};
use crate::{Error, Result};

/// A finite simplicial complex over a fixed, ordered label universe.
///
/// The label order is the global vertex order used for every orientation
/// sign. A complex with no facets is the void complex; one whose only facet
/// is the empty face is `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<Face>,
    faces: Vec<Vec<Face>>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `facets`. Duplicate and non-maximal
    /// generators are dropped.
    pub fn new(labels: Vec<String>, facets: Vec<Face>) -> Result<Self> {
        if labels.len() > MAX_VERTICES {
            return Err(Error::InvalidComplex(format!("{} vertices exceed the limit of {MAX_VERTICES}", labels.len())));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidComplex(format!("duplicate vertex label {l:?}")));
            }
        }
        let universe = if labels.len() == 64 { u64::MAX } else { (1u64 << labels.len()) - 1 };
        if let Some(f) = facets.iter().find(|f| f.0 & !universe != 0) {
            return Err(Error::InvalidComplex(format!("facet {f:?} uses an unknown vertex")));
        }
        let mut sorted: Vec<Face> = facets.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        // largest first so containment only needs to look backwards
        sorted.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        let mut maximal: Vec<Face> = Vec::new();
        for f in sorted {
            if !maximal.iter().any(|m| f.is_subset(*m)) {
                maximal.push(f);
            }
        }
        maximal.sort();
        let top = maximal.iter().map(|f| f.len()).max().map_or(0, |m| m + 1);
        let mut by_size: Vec<BTreeSet<Face>> = vec![BTreeSet::new(); top];
        for f in &maximal {
            for s in f.subsets() {
                by_size[s.len()].insert(s);
            }
        }
        Ok(SimplicialComplex { labels, facets: maximal, faces: by_size.into_iter().map(|s| s.into_iter().collect()).collect() })
    }

    /// Convenience constructor from label lists.
    pub fn from_labeled<S: AsRef<str>>(labels: &[S], facets: &[Vec<S>]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let mut fs = Vec::with_capacity(facets.len());
        for f in facets {
            let mut face = Face::EMPTY;
            for l in f {
                let v =
                    labels.iter().position(|x| x == l.as_ref()).ok_or_else(|| Error::InvalidComplex(format!("unknown vertex {:?}", l.as_ref())))?;
                face = face.with(v);
            }
            fs.push(face);
        }
        SimplicialComplex::new(labels, fs)
    }

    /// Complex on vertices `0..n` labelled by their indices.
    pub fn from_index_facets(n: usize, facets: &[&[usize]]) -> Result<Self> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        SimplicialComplex::new(labels, facets.iter().map(|f| Face::from_vertices(f.iter().copied())).collect())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn face_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Face> {
        labels.iter().try_fold(Face::EMPTY, |f, l| {
            self.index_of(l.as_ref()).map(|v| f.with(v)).ok_or_else(|| Error::Domain(format!("unknown vertex {:?}", l.as_ref())))
        })
    }

    pub fn face_labels(&self, f: Face) -> Vec<String> {
        f.vertices().map(|v| self.labels[v].clone()).collect()
    }

    /// Size of the label universe.
    pub fn universe(&self) -> usize {
        self.labels.len()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Faces with exactly `k` vertices, sorted.
    pub fn faces_of_size(&self, k: usize) -> &[Face] {
        self.faces.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.faces.iter().flatten().copied()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn contains_face(&self, f: Face) -> bool {
        self.faces_of_size(f.len()).binary_search(&f).is_ok()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Largest facet size, written `d` throughout (dimension plus one).
    pub fn top_size(&self) -> usize {
        self.faces.len().saturating_sub(1)
    }

    /// Dimension; `-1` for `{∅}` and `-2` for the void complex.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 2
    }

    /// Union of all facets.
    pub fn vertex_set(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |a, f| a.union(*f))
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_set().len()
    }

    pub fn is_pure(&self) -> bool {
        let d = self.top_size();
        self.facets.iter().all(|f| f.len() == d)
    }

    fn with_facets(&self, facets: Vec<Face>) -> SimplicialComplex {
        SimplicialComplex::new(self.labels.clone(), facets).expect("facets drawn from the same universe")
    }

    fn require_face(&self, f: Face) -> Result<()> {
        if self.contains_face(f) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{:?} is not a face", self.face_labels(f))))
        }
    }

    /// Closed star: faces whose union with `tau` is a face.
    pub fn star(&self, tau: Face) -> Result<SimplicialComplex> {
        self.require_face(tau)?;
        Ok(self.with_facets(self.facets.iter().copied().filter(|f| tau.is_subset(*f)).collect()))
    }

    /// Faces disjoint from `tau` whose union with `tau` is a face.
    pub fn link(&self, tau: Face) -> Result<SimplicialComplex> {
        self.require_face(tau)?;
        Ok(self.with_facets(self.facets.iter().filter(|f| tau.is_subset(**f)).map(|f| f.minus(tau)).collect()))
    }

    /// Faces avoiding every vertex of `w`.
    pub fn deletion(&self, w: Face) -> SimplicialComplex {
        if self.is_void() {
            return self.clone();
        }
        self.with_facets(self.facets.iter().map(|f| f.minus(w)).collect())
    }

    /// Same facets over a larger label universe.
    pub fn extend_labels(&self, extra: &[String]) -> Result<SimplicialComplex> {
        let mut labels = self.labels.clone();
        labels.extend(extra.iter().cloned());
        SimplicialComplex::new(labels, self.facets.clone())
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.labels == other.labels && self.facets.iter().all(|f| other.contains_face(*f))
    }

    /// Free join with the two points `n` and `s`, appended after the
    /// existing vertices.
    pub fn suspension(&self) -> Suspension {
        let north_label = fresh_label(&self.labels, "n");
        let mut labels = self.labels.clone();
        labels.push(north_label);
        let south_label = fresh_label(&labels, "s");
        labels.push(south_label);
        let north = self.labels.len();
        let south = north + 1;
        let facets = self.facets.iter().flat_map(|f| [f.with(north), f.with(south)]).collect();
        let complex = SimplicialComplex::new(labels, facets).expect("suspension stays within the vertex limit");
        Suspension { complex, north, south }
    }

    /// Cone with a new apex vertex appended last.
    pub fn cone(&self, apex: &str) -> (SimplicialComplex, usize) {
        let mut labels = self.labels.clone();
        labels.push(fresh_label(&self.labels, apex));
        let a = self.labels.len();
        let facets = if self.is_void() { vec![Face::vertex(a)] } else { self.facets.iter().map(|f| f.with(a)).collect() };
        (SimplicialComplex::new(labels, facets).expect("cone stays within the vertex limit"), a)
    }

    /// Disjoint union; the second complex's vertices follow the first's and
    /// colliding labels are renamed.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let fresh = fresh_label(&labels, l);
            labels.push(fresh);
        }
        let shift = self.labels.len();
        let mut facets = self.facets.clone();
        facets.extend(other.facets.iter().map(|f| Face::from_vertices(f.vertices().map(|v| v + shift))));
        SimplicialComplex::new(labels, facets)
    }

    /// Stable 64-bit FNV-1a hash of labels and facets.
    pub fn fingerprint(&self) -> String {
        let mut h: u64 = 0xcbf29ce484222325;
        let mut eat = |bytes: &[u8]| {
            for b in bytes {
                h ^= *b as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        };
        for l in &self.labels {
            eat(l.as_bytes());
            eat(&[0]);
        }
        for f in &self.facets {
            eat(&f.0.to_le_bytes());
        }
        format!("{h:016x}")
    }
}

/// Suspension together with the indices of its two new vertices.
#[derive(Clone, Debug)]
pub struct Suspension {
    pub complex: SimplicialComplex,
    pub north: usize,
    pub south: usize,
}

fn fresh_label(taken: &[String], base: &str) -> String {
    if !taken.iter().any(|l| l == base) {
        return base.to_string();
    }
    (1..).map(|i| format!("{base}{i}")).find(|c| !taken.contains(c)).expect("infinite candidates")
}

/// A pair `(Δ, Γ)` with `Γ` a subcomplex of `Δ`; its faces are those of
/// `Δ` not in `Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeComplex {
    pub ambient: SimplicialComplex,
    pub sub: SimplicialComplex,
}

impl RelativeComplex {
    pub fn new(ambient: SimplicialComplex, sub: SimplicialComplex) -> Result<Self> {
        if !sub.is_subcomplex_of(&ambient) {
            return Err(Error::Domain("relative complex: Γ is not a subcomplex of Δ".into()));
        }
        Ok(RelativeComplex { ambient, sub })
    }

    pub fn contains_face(&self, f: Face) -> bool {
        self.ambient.contains_face(f) && !self.sub.contains_face(f)
    }

    pub fn star(&self, tau: Face) -> Result<RelativeComplex> {
        let ambient = self.ambient.star(tau)?;
        let sub = if self.sub.contains_face(tau) { self.sub.star(tau)? } else { self.sub.with_facets(vec![]) };
        Ok(RelativeComplex { ambient, sub })
    }

    pub fn link(&self, tau: Face) -> Result<RelativeComplex> {
        let ambient = self.ambient.link(tau)?;
        let sub = if self.sub.contains_face(tau) { self.sub.link(tau)? } else { self.sub.with_facets(vec![]) };
        Ok(RelativeComplex { ambient, sub })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::named;

    #[test]
    fn drops_non_maximal_generators() {
        let c = SimplicialComplex::from_index_facets(3, &[&[0, 1], &[0], &[0, 1, 2], &[1, 2]]).unwrap();
        assert_eq!(c.facets(), &[Face::from_vertices([0, 1, 2])]);
        assert_eq!(c.num_faces(), 8);
        assert!(SimplicialComplex::from_index_facets(2, &[&[0, 3]]).is_err());
        assert!(SimplicialComplex::from_labeled(&["a", "a"], &[vec!["a"]]).is_err());
    }

    #[test]
    fn void_and_empty_face() {
        let void = SimplicialComplex::new(vec![], vec![]).unwrap();
        assert!(void.is_void());
        assert_eq!(void.dim(), -2);
        let e = SimplicialComplex::new(vec![], vec![Face::EMPTY]).unwrap();
        assert_eq!(e.dim(), -1);
        assert_eq!(e.num_faces(), 1);
    }

    #[test]
    fn link_of_octahedron_vertex_is_a_square() {
        let oct = named::cross_polytope_boundary(3);
        let lk = oct.link(Face::vertex(0)).unwrap();
        assert_eq!(lk.facets().len(), 4);
        assert_eq!(lk.num_vertices(), 4);
        assert!(lk.facets().iter().all(|f| f.len() == 2));
        // every vertex of the link has degree two
        for v in lk.vertex_set().vertices() {
            assert_eq!(lk.facets().iter().filter(|f| f.contains(v)).count(), 2);
        }
    }

    #[test]
    fn star_of_empty_face_and_edge_link() {
        let s = named::boundary_simplex(3);
        assert_eq!(s.star(Face::EMPTY).unwrap(), s);
        let lk = s.link(Face::from_vertices([0, 1])).unwrap();
        assert_eq!(lk.facets(), &[Face::vertex(2), Face::vertex(3)]);
        assert!(s.link(Face::from_vertices([0, 1, 2, 3])).is_err());
    }

    #[test]
    fn suspension_counts() {
        let tri = named::boundary_simplex(2);
        let s = tri.suspension();
        assert_eq!(s.complex.facets().len(), 6);
        assert_eq!(s.complex.dim(), tri.dim() + 1);
        let pair = SimplicialComplex::from_labeled(&["n", "b"], &[vec!["n"], vec!["b"]]).unwrap();
        let sq = pair.suspension();
        assert_eq!(sq.complex.facets().len(), 4);
        // the colliding label is renamed deterministically
        assert_eq!(sq.complex.label(sq.north), "n1");
        assert_eq!(sq.complex.label(sq.south), "s");
    }

    #[test]
    fn relative_star_and_link() {
        let s = named::boundary_simplex(3);
        let gamma = SimplicialComplex::new(s.labels().to_vec(), vec![Face::from_vertices([0, 1, 2])]).unwrap();
        let rel = RelativeComplex::new(s.clone(), gamma).unwrap();
        assert!(!rel.contains_face(Face::from_vertices([0, 1])));
        assert!(rel.contains_face(Face::from_vertices([0, 1, 3])));
        let lk = rel.link(Face::vertex(3)).unwrap();
        assert!(lk.sub.is_void());
        let lk0 = rel.link(Face::vertex(0)).unwrap();
        assert_eq!(lk0.sub.facets(), &[Face::from_vertices([1, 2])]);
    }
}
