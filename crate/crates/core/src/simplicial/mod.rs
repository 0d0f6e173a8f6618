//! Finite simplicial complexes stored by their maximal faces.
//!
//! A [`Complex`] carries a vertex table (id -> label) shared between a complex
//! and everything derived from it, so links, deletions and traces all speak in
//! the same vertex ids. The complex with no vertices is `{∅}`, the unit of
//! [`Complex::join`].

mod graph;
mod iso;
mod json;

pub use graph::{flag_complex, flag_complex_labeled, Graph};
pub use iso::isomorphic;
pub use json::ComplexFile;

use std::collections::HashSet;
use std::sync::Arc;

use crate::arcs::Surface;
use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};

#[derive(Clone, Debug)]
pub struct Complex {
    labels: Arc<Vec<String>>,
    facets: Vec<Face>,
    surface: Option<Surface>,
}

/// Drops faces contained in other faces, deduplicates and sorts.
pub(crate) fn maximal_faces(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if f.is_empty() {
            continue;
        }
        if !kept.iter().any(|k| f.is_subset(*k)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

impl Complex {
    /// Builds a complex from arbitrary generating faces; non-maximal ones are dropped.
    pub fn new(labels: Vec<String>, faces: Vec<Face>) -> Result<Self> {
        Self::with_shared_labels(Arc::new(labels), faces)
    }

    pub(crate) fn with_shared_labels(labels: Arc<Vec<String>>, faces: Vec<Face>) -> Result<Self> {
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        for f in &faces {
            if let Some(v) = f.max_vertex() {
                if v >= labels.len() {
                    return Err(Error::UnknownVertex(v));
                }
            }
        }
        Ok(Complex {
            labels,
            facets: maximal_faces(faces),
            surface: None,
        })
    }

    /// Vertices labelled `0..n` by their ids.
    pub fn from_facets<I, F>(faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        let faces: Vec<Face> = faces.into_iter().map(|f| f.into_iter().collect()).collect();
        let n = faces.iter().filter_map(|f| f.max_vertex()).max().map_or(0, |m| m + 1);
        Self::new((0..n).map(|v| v.to_string()).collect(), faces)
    }

    /// A full simplex on the given vertices, labelled by id.
    pub fn simplex(vertices: usize) -> Self {
        Self::from_facets(std::iter::once(0..vertices)).expect("simplex within capacity")
    }

    /// The same vertex table with new faces.
    pub fn derive(&self, faces: Vec<Face>) -> Self {
        Complex {
            labels: Arc::clone(&self.labels),
            facets: maximal_faces(faces),
            surface: self.surface,
        }
    }

    pub fn with_surface(mut self, surface: Option<Surface>) -> Self {
        self.surface = surface;
        self
    }

    pub fn surface(&self) -> Option<Surface> {
        self.surface
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_id(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn face_labels(&self, face: Face) -> Vec<String> {
        face.iter().map(|v| self.labels[v].clone()).collect()
    }

    /// Face with the given vertex labels; unknown labels are an error.
    pub fn face_of(&self, labels: &[&str]) -> Result<Face> {
        labels
            .iter()
            .map(|l| {
                self.vertex_id(l).ok_or_else(|| Error::Schema {
                    path: "label".into(),
                    message: format!("no vertex labelled {l:?}"),
                })
            })
            .collect()
    }

    pub(crate) fn shares_table(&self, other: &Complex) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }

    /// Vertices appearing in some face.
    pub fn vertices(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |acc, f| acc | *f)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().len()
    }

    /// True for `{∅}`.
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `∅` counts as a face of every complex.
    pub fn contains_face(&self, face: Face) -> bool {
        face.is_empty() || self.facets.iter().any(|f| face.is_subset(*f))
    }

    pub fn facets_containing(&self, face: Face) -> impl Iterator<Item = Face> + '_ {
        self.facets.iter().copied().filter(move |f| face.is_subset(*f))
    }

    /// All nonempty faces, by decreasing dimension then canonical order.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen = HashSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                if !s.is_empty() {
                    seen.insert(s);
                }
            }
        }
        let mut faces: Vec<Face> = seen.into_iter().collect();
        faces.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        faces
    }

    /// Number of faces of each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0usize; (self.dimension() + 1) as usize];
        for face in self.faces() {
            f[face.len() - 1] += 1;
        }
        f
    }

    /// Largest facet dimension; `-1` for `{∅}`.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len()) || self.facets.len() <= 1
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// A vertex lying in every facet, lowest id first.
    pub fn is_cone(&self) -> Option<usize> {
        let mut it = self.facets.iter();
        let first = *it.next()?;
        it.fold(first, |acc, f| acc & *f).min_vertex()
    }

    pub fn link(&self, face: Face) -> Result<Complex> {
        if !self.contains_face(face) {
            return Err(Error::NotAFace(face));
        }
        Ok(self.derive(self.facets_containing(face).map(|f| f - face).collect()))
    }

    /// The closed star of a face as a subcomplex.
    pub fn star(&self, face: Face) -> Result<Complex> {
        if !self.contains_face(face) {
            return Err(Error::NotAFace(face));
        }
        Ok(self.derive(self.facets_containing(face).collect()))
    }

    /// Every face not containing `face`.
    pub fn face_deletion(&self, face: Face) -> Result<Complex> {
        if face.is_empty() {
            return Err(Error::EmptyFace);
        }
        if !self.contains_face(face) {
            return Err(Error::NotAFace(face));
        }
        Ok(self.delete_unchecked(face))
    }

    /// Facets not containing `face` stay maximal; only the faces exposed by
    /// removing the star need a maximality check.
    pub(crate) fn delete_unchecked(&self, face: Face) -> Complex {
        let (hit, mut kept): (Vec<Face>, Vec<Face>) = self.facets.iter().partition(|f| face.is_subset(**f));
        let mut exposed: Vec<Face> = hit
            .iter()
            .flat_map(|f| face.iter().map(move |v| f.without(v)))
            .filter(|c| !c.is_empty() && !kept.iter().any(|k| c.is_subset(*k)))
            .collect();
        exposed.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        exposed.dedup();
        let mut fresh: Vec<Face> = Vec::with_capacity(exposed.len());
        for c in exposed {
            if !fresh.iter().any(|k| c.is_subset(*k)) {
                fresh.push(c);
            }
        }
        kept.extend(fresh);
        kept.sort();
        Complex {
            labels: Arc::clone(&self.labels),
            facets: kept,
            surface: self.surface,
        }
    }

    pub fn vertex_deletion(&self, v: usize) -> Result<Complex> {
        if !self.vertices().contains(v) {
            return Err(Error::UnknownVertex(v));
        }
        self.face_deletion(Face::singleton(v))
    }

    /// Subcomplex of faces whose vertices all lie in `vertices`.
    pub fn induced(&self, vertices: Face) -> Complex {
        self.derive(self.facets.iter().map(|f| *f & vertices).collect())
    }

    /// Join with another complex.
    ///
    /// Complexes over the same vertex table must use disjoint vertex sets and
    /// keep their ids. Otherwise the second table is appended after the first
    /// and the two sides must not share any label of a used vertex.
    pub fn join(&self, other: &Complex) -> Result<Complex> {
        if self.shares_table(other) {
            let common = self.vertices() & other.vertices();
            if let Some(v) = common.min_vertex() {
                return Err(Error::LabelCollision(self.labels[v].clone()));
            }
            return Ok(self.derive(join_faces(&self.facets, &other.facets)));
        }
        let mine: HashSet<&str> = self.vertices().iter().map(|v| self.labels[v].as_str()).collect();
        if let Some(v) = other.vertices().iter().find(|&v| mine.contains(other.labels[v].as_str())) {
            return Err(Error::LabelCollision(other.labels[v].clone()));
        }
        let offset = self.labels.len();
        if offset + other.labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(offset + other.labels.len()));
        }
        let mut labels = (*self.labels).clone();
        labels.extend(other.labels.iter().cloned());
        let shifted: Vec<Face> = other
            .facets
            .iter()
            .map(|f| f.iter().map(|v| v + offset).collect())
            .collect();
        Complex::new(labels, join_faces(&self.facets, &shifted))
    }

    /// Apex `v` joined with this complex; `v` must be a vertex of the table not in use.
    pub fn cone_with(&self, apex: usize) -> Result<Complex> {
        if apex >= self.labels.len() {
            return Err(Error::UnknownVertex(apex));
        }
        let point = self.derive(vec![Face::singleton(apex)]);
        self.join(&point)
    }

    /// Facets adjacent iff they share a codimension-one face. Pure complexes only.
    pub fn dual_graph(&self) -> Result<Graph> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let mut g = Graph::new(self.facets.len());
        let d = self.facets.first().map_or(0, |f| f.len());
        for i in 0..self.facets.len() {
            for j in i + 1..self.facets.len() {
                if (self.facets[i] & self.facets[j]).len() + 1 == d {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }
}

fn join_faces(a: &[Face], b: &[Face]) -> Vec<Face> {
    match (a.is_empty(), b.is_empty()) {
        (true, _) => b.to_vec(),
        (_, true) => a.to_vec(),
        _ => a.iter().flat_map(|x| b.iter().map(move |y| *x | *y)).collect(),
    }
}

/// Equal facets, equal surfaces and equal labels on every used vertex.
impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
            && self.surface == other.surface
            && self.vertices().iter().all(|v| self.labels[v] == other.labels[v])
    }
}

impl Eq for Complex {}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(v: &[usize]) -> Face {
        v.iter().collect()
    }

    fn pentagon() -> Complex {
        Complex::from_facets([[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]]).unwrap()
    }

    #[test]
    fn basic_counts() {
        let c = pentagon();
        assert_eq!(c.f_vector(), vec![5, 5]);
        assert_eq!(c.euler_characteristic(), 0);
        assert_eq!(c.dimension(), 1);
        assert!(c.is_pure());
        assert_eq!(c.is_cone(), None);
        let p = Complex::simplex(1);
        assert_eq!(p.f_vector(), vec![1]);
        assert_eq!(p.euler_characteristic(), 1);
        assert_eq!(p.is_cone(), Some(0));
    }

    #[test]
    fn non_maximal_input_faces_are_dropped() {
        let c = Complex::from_facets(vec![vec![0, 1, 2], vec![0, 1], vec![3]]).unwrap();
        assert_eq!(c.facets(), &[face(&[0, 1, 2]), face(&[3])]);
        assert!(!c.is_pure());
    }

    #[test]
    fn link_and_deletion() {
        let c = Complex::simplex(3);
        assert!(c.link(face(&[0, 1, 2])).unwrap().is_void());
        assert_eq!(c.link(face(&[0])).unwrap().facets(), &[face(&[1, 2])]);
        let edge = Complex::simplex(2);
        let d = edge.face_deletion(face(&[0])).unwrap();
        assert_eq!(d.facets(), &[face(&[1])]);
        assert!(edge.link(face(&[5])).is_err());
        assert_eq!(edge.face_deletion(Face::EMPTY), Err(Error::EmptyFace));
        assert!(c.face_deletion(face(&[0, 1])).unwrap().dimension() <= c.dimension());
    }

    #[test]
    fn join_of_point_and_pentagon_is_a_cone() {
        let pt = Complex::new(vec!["apex".into()], vec![face(&[0])]).unwrap();
        let cone = pentagon().join(&pt).unwrap();
        assert_eq!(cone.f_vector(), vec![6, 10, 5]);
        assert_eq!(cone.is_cone(), Some(5));
        assert_eq!(cone.euler_characteristic(), 1);
        assert!(matches!(pentagon().join(&pentagon()), Err(Error::LabelCollision(_))));
        let void = pentagon().derive(vec![]);
        assert_eq!(pentagon().join(&void).unwrap(), pentagon());
    }

    #[test]
    fn dual_graph_requires_purity() {
        let c = Complex::from_facets(vec![vec![0, 1, 2], vec![3]]).unwrap();
        assert_eq!(c.dual_graph().unwrap_err(), Error::NotPure);
        let g = pentagon().dual_graph().unwrap();
        assert_eq!(g.edge_count(), 5);
    }
}
