//! Abstract simplicial complexes and the operators built on them.
//!
//! Faces are stored as sorted vertex lists grouped by dimension. Each
//! dimension keeps its faces in lexicographic order together with a hash
//! index, so face ids are reproducible and membership is O(1).

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use smallvec::SmallVec;
use thiserror::Error;

/// Vertex label.
pub type Vertex = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("no facets given")]
    EmptyInput,
    #[error("facet {0:?} repeats a vertex")]
    MalformedFacet(Vec<Vertex>),
    #[error("vertex {0} is not in the complex")]
    VertexNotFound(Vertex),
    #[error("vertex label {0} is already used by the complex")]
    LabelInUse(Vertex),
    #[error("face {0} is not a facet of the complex")]
    FacetNotFound(Face),
}

/// A nonempty simplex, stored as a strictly increasing vertex list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(SmallVec<[Vertex; 4]>);

impl Face {
    /// Builds a face from arbitrary vertices; sorts them and rejects repeats.
    pub fn new<I: IntoIterator<Item = Vertex>>(vertices: I) -> Result<Self, ComplexError> {
        let mut v: SmallVec<[Vertex; 4]> = vertices.into_iter().collect();
        v.sort_unstable();
        if v.is_empty() {
            return Err(ComplexError::EmptyInput);
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(ComplexError::MalformedFacet(v.to_vec()));
        }
        Ok(Face(v))
    }

    pub fn vertex(v: Vertex) -> Self {
        Face(smallvec::smallvec![v])
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    /// The codimension-one faces, in order of the omitted vertex.
    pub fn facets(&self) -> impl Iterator<Item = Face> + '_ {
        let n = self.0.len();
        (0..if n > 1 { n } else { 0 })
            .map(move |skip| Face(self.0.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect()))
    }

    /// The face with `v` added, or `None` if `v` is already present.
    pub fn with_vertex(&self, v: Vertex) -> Option<Face> {
        match self.0.binary_search(&v) {
            Ok(_) => None,
            Err(pos) => {
                let mut out = self.0.clone();
                out.insert(pos, v);
                Some(Face(out))
            }
        }
    }

    /// The face with `v` removed; `None` if that leaves nothing or `v` is absent.
    pub fn without_vertex(&self, v: Vertex) -> Option<Face> {
        let pos = self.0.binary_search(&v).ok()?;
        if self.0.len() == 1 {
            return None;
        }
        let mut out = self.0.clone();
        out.remove(pos);
        Some(Face(out))
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut v: SmallVec<[Vertex; 4]> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    pub fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex) -> Result<Face, ComplexError> {
        Face::new(self.0.iter().map(|&v| f(v)))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// Face counts per dimension.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn euler_characteristic(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) }).sum()
    }
}

/// A finite abstract simplicial complex, closed under taking nonempty subsets.
#[derive(Clone, Default)]
pub struct SimplicialComplex {
    faces: Vec<Vec<Face>>,
    index: Vec<HashMap<Face, usize>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.faces == other.faces
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("f_vector", &self.f_vector().0)
            .field("facets", &self.facets())
            .finish()
    }
}

impl SimplicialComplex {
    /// The complex with no faces at all.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Downward closure of the given facets. Facets that are faces of other
    /// facets are absorbed.
    pub fn from_facets<F, I>(facets: F) -> Result<Self, ComplexError>
    where
        F: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        let mut list = Vec::new();
        for facet in facets {
            let verts: Vec<Vertex> = facet.into_iter().collect();
            if verts.is_empty() {
                continue;
            }
            list.push(Face::new(verts.iter().copied()).map_err(|_| ComplexError::MalformedFacet(verts))?);
        }
        if list.is_empty() {
            return Err(ComplexError::EmptyInput);
        }
        Ok(Self::closure_of(list))
    }

    /// Downward closure of arbitrary faces; an empty input gives the empty complex.
    pub fn closure_of<I: IntoIterator<Item = Face>>(faces: I) -> Self {
        let mut sets: Vec<HashSet<Face>> = Vec::new();
        for face in faces {
            let d = face.dim();
            if sets.len() <= d {
                sets.resize_with(d + 1, HashSet::new);
            }
            sets[d].insert(face);
        }
        for d in (1..sets.len()).rev() {
            let lower: Vec<Face> = sets[d].iter().flat_map(|f| f.facets().collect::<Vec<_>>()).collect();
            sets[d - 1].extend(lower);
        }
        Self::from_sets(sets)
    }

    /// Assumes the sets are already downward closed.
    fn from_sets(sets: Vec<HashSet<Face>>) -> Self {
        let mut faces: Vec<Vec<Face>> = sets
            .into_iter()
            .map(|s| {
                let mut v: Vec<Face> = s.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect();
        while faces.last().is_some_and(|v| v.is_empty()) {
            faces.pop();
        }
        let index = faces.iter().map(|v| v.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect()).collect();
        SimplicialComplex { faces, index }
    }

    /// Keeps the faces satisfying `keep`; the predicate must be downward closed
    /// (if it holds for a face it holds for all of its subfaces).
    pub fn filter(&self, keep: impl Fn(&Face) -> bool) -> Self {
        let sets = self.faces.iter().map(|v| v.iter().filter(|f| keep(f)).cloned().collect()).collect();
        Self::from_sets(sets)
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Dimension; −1 for the empty complex.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 1
    }

    pub fn faces(&self, dim: usize) -> &[Face] {
        self.faces.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn all_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().flatten()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Position of `face` in the lexicographic order of its dimension.
    pub fn index_of(&self, face: &Face) -> Option<usize> {
        self.index.get(face.dim())?.get(face).copied()
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.index_of(face).is_some()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.contains(&Face::vertex(v))
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.faces(0).iter().map(|f| f.vertices()[0]).collect()
    }

    pub fn num_vertices(&self) -> usize {
        self.faces(0).len()
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.faces(0).last().map(|f| f.vertices()[0])
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.faces.iter().map(Vec::len).collect())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    /// Number of cofaces one dimension up, per face of dimension `dim`.
    pub fn coface_counts(&self, dim: usize) -> Vec<usize> {
        let mut counts = vec![0; self.faces(dim).len()];
        for sigma in self.faces(dim + 1) {
            for tau in sigma.facets() {
                counts[self.index[dim][&tau]] += 1;
            }
        }
        counts
    }

    /// Maximal faces, ordered by dimension then lexicographically.
    pub fn facets(&self) -> Vec<Face> {
        let mut out = Vec::new();
        for d in 0..self.faces.len() {
            let counts = self.coface_counts(d);
            out.extend(self.faces[d].iter().zip(counts).filter(|(_, c)| *c == 0).map(|(f, _)| f.clone()));
        }
        out
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets().iter().all(|f| f.dim() as isize == d)
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.all_faces().all(|f| other.contains(f))
    }

    fn require_vertex(&self, v: Vertex) -> Result<(), ComplexError> {
        if self.has_vertex(v) {
            Ok(())
        } else {
            Err(ComplexError::VertexNotFound(v))
        }
    }

    /// `{ σ : v ∉ σ, σ ∪ {v} ∈ C }`.
    pub fn link(&self, v: Vertex) -> Result<SimplicialComplex, ComplexError> {
        self.require_vertex(v)?;
        let sets = (1..self.faces.len())
            .map(|d| self.faces[d].iter().filter_map(|f| f.without_vertex(v).filter(|_| f.contains(v))).collect())
            .collect();
        Ok(Self::from_sets(sets))
    }

    /// Faces not containing `v`.
    pub fn deletion(&self, v: Vertex) -> Result<SimplicialComplex, ComplexError> {
        self.require_vertex(v)?;
        Ok(self.filter(|f| !f.contains(v)))
    }

    /// Closed star: closure of the faces containing `v`.
    pub fn star(&self, v: Vertex) -> Result<SimplicialComplex, ComplexError> {
        self.require_vertex(v)?;
        Ok(Self::closure_of(self.all_faces().filter(|f| f.contains(v)).cloned()))
    }

    /// Full subcomplex on the given vertices.
    pub fn induced(&self, vertices: &BTreeSet<Vertex>) -> SimplicialComplex {
        self.filter(|f| f.vertices().iter().all(|v| vertices.contains(v)))
    }

    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut sets: Vec<HashSet<Face>> = Vec::new();
        for f in self.all_faces().chain(other.all_faces()) {
            if sets.len() <= f.dim() {
                sets.resize_with(f.dim() + 1, HashSet::new);
            }
            sets[f.dim()].insert(f.clone());
        }
        Self::from_sets(sets)
    }

    /// Removes a single facet, keeping its boundary.
    pub fn remove_facet(&self, facet: &Face) -> Result<SimplicialComplex, ComplexError> {
        if !self.contains(facet) || self.faces(facet.dim() + 1).iter().any(|g| facet.is_subset_of(g)) {
            return Err(ComplexError::FacetNotFound(facet.clone()));
        }
        Ok(self.filter(|f| f != facet))
    }

    /// Applies an injective relabeling.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> SimplicialComplex {
        Self::closure_of(self.facets().into_iter().map(|f| f.map_vertices(&map).expect("relabeling must be injective")))
    }

    /// Closure of the codimension-one faces lying in exactly one top face.
    /// For a pure manifold-with-boundary this is the boundary complex.
    pub fn boundary(&self) -> SimplicialComplex {
        let d = self.dim();
        if d < 1 {
            return SimplicialComplex::empty();
        }
        let d = d as usize;
        let counts = self.coface_counts(d - 1);
        Self::closure_of(self.faces[d - 1].iter().zip(counts).filter(|(_, c)| *c == 1).map(|(f, _)| f.clone()))
    }

    /// Join with a complex whose vertices are shifted past ours when the
    /// label sets meet. Returns the join and the relabeling applied to `other`.
    pub fn join(&self, other: &SimplicialComplex) -> Join {
        let ours: BTreeSet<Vertex> = self.vertices().into_iter().collect();
        let theirs = other.vertices();
        let clash = theirs.iter().any(|v| ours.contains(v));
        let offset = if clash { self.max_vertex().map_or(0, |m| m + 1) - theirs[0] } else { 0 };
        let relabel: BTreeMap<Vertex, Vertex> = theirs.iter().map(|&v| (v, v + offset)).collect();
        let other_facets: Vec<Face> =
            other.facets().into_iter().map(|f| f.map_vertices(|v| relabel[&v]).unwrap()).collect();
        let mut faces = Vec::new();
        let ours_facets = self.facets();
        if ours_facets.is_empty() {
            faces.extend(other_facets.iter().cloned());
        } else if other_facets.is_empty() {
            faces.extend(ours_facets.iter().cloned());
        } else {
            for a in &ours_facets {
                for b in &other_facets {
                    faces.push(a.union(b));
                }
            }
        }
        Join { complex: Self::closure_of(faces), relabel }
    }

    /// `apex ∗ C`; fails if `apex` is already a vertex.
    pub fn cone(&self, apex: Vertex) -> Result<SimplicialComplex, ComplexError> {
        if self.has_vertex(apex) {
            return Err(ComplexError::LabelInUse(apex));
        }
        let point = SimplicialComplex::closure_of([Face::vertex(apex)]);
        Ok(self.join(&point).complex)
    }

    /// Cone over a fresh apex (one past the largest label).
    pub fn cone_fresh(&self) -> (SimplicialComplex, Vertex) {
        let apex = self.max_vertex().map_or(0, |m| m + 1);
        (self.cone(apex).expect("fresh label"), apex)
    }

    /// Suspension with two fresh apices, returned as (complex, north, south).
    pub fn suspension(&self) -> (SimplicialComplex, Vertex, Vertex) {
        let north = self.max_vertex().map_or(0, |m| m + 1);
        let south = north + 1;
        let poles = SimplicialComplex::closure_of([Face::vertex(north), Face::vertex(south)]);
        (self.join(&poles).complex, north, south)
    }

    /// Barycentric subdivision. Vertex `i` of the result is the barycenter of
    /// `labels[i]`; faces are ordered by (dimension, lexicographic).
    pub fn barycentric_subdivision(&self) -> Subdivision {
        let labels: Vec<Face> = self.all_faces().cloned().collect();
        let id: HashMap<&Face, Vertex> = labels.iter().enumerate().map(|(i, f)| (f, i as Vertex)).collect();
        let mut chains = Vec::new();
        for facet in self.facets() {
            let verts = facet.vertices().to_vec();
            for perm in permutations(&verts) {
                let mut chain = Vec::with_capacity(perm.len());
                for k in 1..=perm.len() {
                    let f = Face::new(perm[..k].iter().copied()).unwrap();
                    chain.push(id[&f]);
                }
                chains.push(Face::new(chain).unwrap());
            }
        }
        Subdivision { complex: Self::closure_of(chains), labels }
    }

    /// Pairs `(σ, Σ)` where `Σ` is the only proper coface of `σ`.
    pub fn free_faces(&self) -> Vec<(Face, Face)> {
        let mut out = Vec::new();
        for d in 0..self.faces.len().saturating_sub(1) {
            let counts = self.coface_counts(d);
            let upper = self.coface_counts(d + 1);
            let mut owner: HashMap<usize, usize> = HashMap::new();
            for (j, big) in self.faces[d + 1].iter().enumerate() {
                for small in big.facets() {
                    let i = self.index[d][&small];
                    if counts[i] == 1 {
                        owner.insert(i, j);
                    }
                }
            }
            let mut pairs: Vec<(usize, usize)> = owner.into_iter().filter(|&(_, j)| upper[j] == 0).collect();
            pairs.sort_unstable();
            out.extend(pairs.into_iter().map(|(i, j)| (self.faces[d][i].clone(), self.faces[d + 1][j].clone())));
        }
        out
    }

    /// Whether the 1-skeleton is connected (the empty complex is not).
    pub fn is_connected(&self) -> bool {
        let verts = self.vertices();
        if verts.is_empty() {
            return false;
        }
        let mut adj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
        for e in self.faces(1) {
            let (a, b) = (e.vertices()[0], e.vertices()[1]);
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let mut seen = HashSet::from([verts[0]]);
        let mut stack = vec![verts[0]];
        while let Some(v) = stack.pop() {
            for &w in adj.get(&v).map_or(&[][..], Vec::as_slice) {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == verts.len()
    }

    /// Connected components as vertex sets, ordered by smallest vertex.
    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut parent: HashMap<Vertex, Vertex> = self.vertices().into_iter().map(|v| (v, v)).collect();
        fn find(p: &mut HashMap<Vertex, Vertex>, mut v: Vertex) -> Vertex {
            while p[&v] != v {
                let up = p[&p[&v]];
                p.insert(v, up);
                v = up;
            }
            v
        }
        for e in self.faces(1) {
            let a = find(&mut parent, e.vertices()[0]);
            let b = find(&mut parent, e.vertices()[1]);
            if a != b {
                parent.insert(a.max(b), a.min(b));
            }
        }
        let mut comps: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
        for v in self.vertices() {
            let r = find(&mut parent, v);
            comps.entry(r).or_default().insert(v);
        }
        let mut out: Vec<_> = comps.into_values().collect();
        out.sort_by_key(|c| *c.iter().next().unwrap());
        out
    }

    /// Canonical text of the facet list, used for digests and equality across runs.
    pub fn canonical_string(&self) -> String {
        let mut s = String::new();
        for f in self.facets() {
            s.push_str(&f.to_string());
            s.push('\n');
        }
        s
    }
}

/// Result of [`SimplicialComplex::join`].
#[derive(Debug, Clone)]
pub struct Join {
    pub complex: SimplicialComplex,
    /// Labels of the second factor in the join.
    pub relabel: BTreeMap<Vertex, Vertex>,
}

/// Result of [`SimplicialComplex::barycentric_subdivision`].
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    pub labels: Vec<Face>,
}

fn permutations(items: &[Vertex]) -> Vec<Vec<Vertex>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(facets: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap()
    }

    fn e() -> SimplicialComplex {
        c(&[&[1, 2, 3], &[3, 4, 5], &[1, 5, 6], &[2, 4, 6]])
    }

    fn tetra_boundary() -> SimplicialComplex {
        c(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
    }

    #[test]
    fn from_facets_closure_and_absorption() {
        assert_eq!(c(&[&[1, 2, 3]]).f_vector().0, vec![3, 3, 1]);
        assert_eq!(e().f_vector().0, vec![6, 12, 4]);
        assert_eq!(c(&[&[1, 2], &[2, 3], &[1, 2, 3]]), c(&[&[1, 2, 3]]));
        assert_eq!(c(&[&[3, 1, 2]]).facets(), vec![Face::new([1, 2, 3]).unwrap()]);
    }

    #[test]
    fn from_facets_errors() {
        let none: Vec<Vec<Vertex>> = vec![];
        assert_eq!(SimplicialComplex::from_facets(none), Err(ComplexError::EmptyInput));
        assert!(matches!(SimplicialComplex::from_facets([vec![1, 2, 2]]), Err(ComplexError::MalformedFacet(_))));
    }

    #[test]
    fn links() {
        assert_eq!(c(&[&[1, 2, 3]]).link(1).unwrap(), c(&[&[2, 3]]));
        assert_eq!(e().link(1).unwrap(), c(&[&[2, 3], &[5, 6]]));
        assert_eq!(tetra_boundary().link(1).unwrap(), c(&[&[2, 3], &[2, 4], &[3, 4]]));
        assert_eq!(e().link(9), Err(ComplexError::VertexNotFound(9)));
    }

    #[test]
    fn deletions() {
        assert_eq!(tetra_boundary().deletion(4).unwrap(), c(&[&[1, 2, 3]]));
        // Set arithmetic: drop every face of E that contains vertex 1.
        let expected = c(&[&[3, 4, 5], &[2, 4, 6], &[5, 6], &[2, 3]]);
        assert_eq!(e().deletion(1).unwrap(), expected);
        let base = c(&[&[1, 2], &[2, 3]]);
        let cone = base.cone(9).unwrap();
        assert_eq!(cone.deletion(9).unwrap(), base);
    }

    #[test]
    fn stars() {
        assert_eq!(c(&[&[1, 2, 3]]).star(1).unwrap(), c(&[&[1, 2, 3]]));
        assert_eq!(e().star(1).unwrap(), c(&[&[1, 2, 3], &[1, 5, 6]]));
        let (cone, apex) = e().cone_fresh();
        assert_eq!(cone.star(apex).unwrap(), cone);
    }

    #[test]
    fn joins_cones_suspensions() {
        let tri = c(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(tri.cone(0).unwrap().f_vector().0, vec![4, 6, 3]);
        let two_points = c(&[&[1], &[2]]);
        let (s, n, so) = two_points.suspension();
        assert_eq!(s, c(&[&[1, n], &[2, n], &[1, so], &[2, so]]));
        let (sphere, _) = c(&[&[1, 2, 3, 4]]).cone_fresh();
        assert_eq!(sphere.boundary().f_vector().0, vec![5, 10, 10, 5]);
    }

    #[test]
    fn join_relabels_on_clash() {
        let a = c(&[&[1, 2]]);
        let j = a.join(&a);
        assert_eq!(j.relabel[&1], 3);
        assert_eq!(j.complex, c(&[&[1, 2, 3, 4]]));
    }

    #[test]
    fn barycentric_subdivision_counts() {
        let sd = c(&[&[1, 2, 3]]).barycentric_subdivision();
        assert_eq!(sd.complex.f_vector().0, vec![7, 12, 6]);
        let sd = c(&[&[1, 2]]).barycentric_subdivision();
        assert_eq!(sd.complex.f_vector().0, vec![3, 2]);
        assert_eq!(e().barycentric_subdivision().complex.euler_characteristic(), -2);
    }

    #[test]
    fn free_faces_examples() {
        let tri = c(&[&[1, 2, 3]]);
        let free = tri.free_faces();
        assert_eq!(free.len(), 3);
        assert!(free.iter().all(|(s, _)| s.dim() == 1));
        let free = e().free_faces();
        assert_eq!(free.len(), 12);
        assert!(free.iter().all(|(s, big)| s.dim() == 1 && big.dim() == 2));
        assert!(tetra_boundary().free_faces().is_empty());
    }

    #[test]
    fn free_face_needs_maximal_coface() {
        // Vertex 4 has one coface (edge 34) which is maximal: free.
        // Vertex 1 has two edge cofaces: not free.
        let k = c(&[&[1, 2, 3], &[3, 4]]);
        let free = k.free_faces();
        assert!(free.contains(&(Face::vertex(4), Face::new([3, 4]).unwrap())));
        assert!(!free.iter().any(|(s, _)| s == &Face::vertex(1)));
    }

    #[test]
    fn remove_facet_only_top_faces() {
        let t = c(&[&[1, 2, 3]]);
        let r = t.remove_facet(&Face::new([1, 2, 3]).unwrap()).unwrap();
        assert_eq!(r.f_vector().0, vec![3, 3]);
        assert!(t.remove_facet(&Face::new([1, 2]).unwrap()).is_err());
    }

    #[test]
    fn components_and_connectivity() {
        let k = c(&[&[1, 2], &[3], &[4, 5, 6]]);
        assert!(!k.is_connected());
        assert_eq!(k.components().len(), 3);
        assert!(e().is_connected());
    }
}
