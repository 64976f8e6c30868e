//! Discrete Morse functions as acyclic matchings on the Hasse diagram.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::sync::Arc;

use indexmap::IndexSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::hasse::Hasse;
use crate::homology::{betti_or_zero, BettiVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorseError {
    #[error("face {0} is not in the complex")]
    DanglingFace(Face),
    #[error("{0} is not a codimension-one face of {1}")]
    NotCoface(Face, Face),
    #[error("face {0} appears in more than one pair")]
    DoubleMatched(Face),
    #[error("matching has a closed V-path: {}", format_path(.0))]
    CycleFound(Vec<Face>),
    #[error("pair {}/{} at step {step} is not a free pair", .pair.0, .pair.1)]
    NotFreeAtStep { step: usize, pair: (Face, Face) },
    #[error("matching on the link has no critical vertex")]
    NoCriticalVertex,
    #[error("link is empty; the apex must be critical")]
    EmptyLink,
    #[error("apex {0} is a vertex of the link")]
    ApexInLink(Vertex),
    #[error("matching is defined on a different complex")]
    ComplexMismatch,
}

fn format_path(p: &[Face]) -> String {
    p.iter().map(ToString::to_string).collect::<Vec<_>>().join(" -> ")
}

/// Critical-face counts per dimension.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct MorseVector(pub Vec<usize>);

impl MorseVector {
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }

    /// c_i ≥ β_i in every dimension.
    pub fn dominates(&self, betti: &BettiVector) -> bool {
        let n = self.0.len().max(betti.values.len());
        (0..n).all(|i| self.get(i) >= betti.get(i))
    }

    /// Component-wise equality with trailing zeros ignored.
    pub fn matches(&self, betti: &BettiVector) -> bool {
        let n = self.0.len().max(betti.values.len());
        (0..n).all(|i| self.get(i) == betti.get(i))
    }
}

/// A partial matching of faces `σ ⊂ Σ` with `dim Σ = dim σ + 1`.
///
/// Construction checks that every pair is an incidence of the complex and
/// that no face is used twice. Acyclicity is checked by [`validate`].
///
/// [`validate`]: MorseMatching::validate
#[derive(Clone, Debug)]
pub struct MorseMatching {
    complex: Arc<SimplicialComplex>,
    up: HashMap<Face, Face>,
    down: HashMap<Face, Face>,
}

impl MorseMatching {
    pub fn new<I>(complex: impl Into<Arc<SimplicialComplex>>, pairs: I) -> Result<Self, MorseError>
    where
        I: IntoIterator<Item = (Face, Face)>,
    {
        let complex = complex.into();
        let mut up = HashMap::new();
        let mut down = HashMap::new();
        for (low, high) in pairs {
            for f in [&low, &high] {
                if !complex.contains(f) {
                    return Err(MorseError::DanglingFace(f.clone()));
                }
            }
            if high.dim() != low.dim() + 1 || !low.is_subset_of(&high) {
                return Err(MorseError::NotCoface(low, high));
            }
            for f in [&low, &high] {
                if up.contains_key(f) || down.contains_key(f) {
                    return Err(MorseError::DoubleMatched(f.clone()));
                }
            }
            down.insert(high.clone(), low.clone());
            up.insert(low, high);
        }
        Ok(MorseMatching { complex, up, down })
    }

    /// The matching with no pairs: every face is critical.
    pub fn empty(complex: impl Into<Arc<SimplicialComplex>>) -> Self {
        MorseMatching { complex: complex.into(), up: HashMap::new(), down: HashMap::new() }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn shared_complex(&self) -> Arc<SimplicialComplex> {
        Arc::clone(&self.complex)
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    /// Pairs sorted by the lower face (dimension, then lexicographic).
    pub fn pairs(&self) -> Vec<(Face, Face)> {
        let mut v: Vec<(Face, Face)> = self.up.iter().map(|(a, b)| (a.clone(), b.clone())).collect();
        v.sort_by(|a, b| (a.0.dim(), &a.0).cmp(&(b.0.dim(), &b.0)));
        v
    }

    pub fn partner(&self, face: &Face) -> Option<&Face> {
        self.up.get(face).or_else(|| self.down.get(face))
    }

    pub fn is_critical(&self, face: &Face) -> bool {
        self.complex.contains(face) && self.partner(face).is_none()
    }

    /// Checks that the modified Hasse diagram (matched edges pointing up,
    /// all others down) has no directed cycle. Any cycle lives between two
    /// adjacent dimensions, so each layer is checked separately.
    pub fn validate(&self) -> Result<(), MorseError> {
        let hasse = Hasse::new(&self.complex);
        let partner = self.partner_ids(&hasse);
        let top = self.complex.dim();
        for d in 0..top.max(0) as usize {
            if let Some(cycle) = layer_cycle(&hasse, &partner, d) {
                return Err(MorseError::CycleFound(cycle));
            }
        }
        Ok(())
    }

    fn partner_ids(&self, hasse: &Hasse<'_>) -> Vec<Option<usize>> {
        let mut partner = vec![None; hasse.len()];
        for (a, b) in &self.up {
            let (ia, ib) = (hasse.id(a).unwrap(), hasse.id(b).unwrap());
            partner[ia] = Some(ib);
            partner[ib] = Some(ia);
        }
        partner
    }

    /// Unmatched faces, by dimension then lexicographically.
    pub fn critical_faces(&self) -> Vec<Face> {
        self.complex.all_faces().filter(|f| self.partner(f).is_none()).cloned().collect()
    }

    pub fn morse_vector(&self) -> MorseVector {
        let d = (self.complex.dim() + 1).max(0) as usize;
        let mut counts = vec![0; d];
        for f in self.complex.all_faces() {
            if self.partner(f).is_none() {
                counts[f.dim()] += 1;
            }
        }
        MorseVector(counts)
    }

    /// Valid and with as many critical i-faces as β_i (non-reduced, Z2).
    pub fn is_perfect(&self) -> Result<bool, MorseError> {
        self.validate()?;
        Ok(self.morse_vector().matches(&betti_or_zero(&self.complex)))
    }

    /// Integer values realizing the matching: matched faces share a value,
    /// every other incidence strictly increases. Values are positions in a
    /// deterministic topological order.
    pub fn discrete_morse_function(&self) -> Result<Vec<(Face, i64)>, MorseError> {
        self.validate()?;
        let hasse = Hasse::new(&self.complex);
        let partner = self.partner_ids(&hasse);
        let n = hasse.len();
        // Node of a face: the lower face of its pair, or itself.
        let node = |id: usize| match partner[id] {
            Some(p) if hasse.dim_of(p) < hasse.dim_of(id) => p,
            _ => id,
        };
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for (id, facets) in hasse.facets.iter().enumerate().take(n) {
            for &f in facets {
                if partner[id] == Some(f) {
                    continue;
                }
                let (a, b) = (node(f), node(id));
                if a != b {
                    succ[a].push(b);
                    indeg[b] += 1;
                }
            }
        }
        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&i| node(i) == i && indeg[i] == 0).map(Reverse).collect();
        let mut value = vec![0i64; n];
        let mut next = 0;
        while let Some(Reverse(u)) = heap.pop() {
            value[u] = next;
            next += 1;
            for &w in &succ[u] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    heap.push(Reverse(w));
                }
            }
        }
        Ok((0..n).map(|id| (hasse.face(id).clone(), value[node(id)])).collect())
    }
}

/// Finds a directed cycle among faces of dimensions `d` and `d + 1`.
fn layer_cycle(hasse: &Hasse<'_>, partner: &[Option<usize>], d: usize) -> Option<Vec<Face>> {
    let lo = hasse.range(d);
    let hi = hasse.range(d + 1);
    let base = lo.start;
    let n = hi.end - base;
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for big in hi.clone() {
        for &small in &hasse.facets[big] {
            let (from, to) = if partner[small] == Some(big) { (small, big) } else { (big, small) };
            out[from - base].push(to - base);
            indeg[to - base] += 1;
        }
    }
    let mut queue: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut removed = vec![false; n];
    while let Some(u) = queue.pop() {
        removed[u] = true;
        for &w in &out[u] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push(w);
            }
        }
    }
    let start = (0..n).find(|&i| !removed[i])?;
    // Every surviving node has a surviving predecessor; walk backwards until
    // a node repeats.
    let mut pred: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, ws) in out.iter().enumerate().take(n) {
        for &w in ws {
            pred[w].push(u);
        }
    }
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let mut walk = vec![start];
    let mut cur = start;
    loop {
        seen.insert(cur, walk.len() - 1);
        cur = *pred[cur].iter().find(|&&p| !removed[p]).expect("surviving predecessor");
        if let Some(&pos) = seen.get(&cur) {
            let mut cycle: Vec<usize> = walk[pos..].to_vec();
            cycle.reverse();
            // Start the witness at a face of dimension d.
            let shift = cycle.iter().position(|&i| i + base < lo.end).unwrap_or(0);
            cycle.rotate_left(shift);
            cycle.push(cycle[0]);
            return Some(cycle.into_iter().map(|i| hasse.face(i + base).clone()).collect());
        }
        walk.push(cur);
    }
}

/// Matching whose pairs are exactly the given elementary collapses, checked
/// step by step: each `σ` must have `Σ` as its only remaining proper coface.
pub fn from_collapse_sequence(
    complex: impl Into<Arc<SimplicialComplex>>,
    steps: &[(Face, Face)],
) -> Result<MorseMatching, MorseError> {
    let complex = complex.into();
    {
        let hasse = Hasse::new(&complex);
        let mut alive = vec![true; hasse.len()];
        for (k, (low, high)) in steps.iter().enumerate() {
            let bad = || MorseError::NotFreeAtStep { step: k, pair: (low.clone(), high.clone()) };
            let (Some(a), Some(b)) = (hasse.id(low), hasse.id(high)) else {
                return Err(bad());
            };
            if !alive[a] || !alive[b] || !hasse.facets[b].contains(&a) {
                return Err(bad());
            }
            let live_cofaces: Vec<usize> = hasse.cofaces[a].iter().copied().filter(|&c| alive[c]).collect();
            if live_cofaces != [b] || hasse.cofaces[b].iter().any(|&c| alive[c]) {
                return Err(bad());
            }
            alive[a] = false;
            alive[b] = false;
        }
    }
    MorseMatching::new(complex, steps.iter().cloned())
}

/// Lifts a matching on `link` to the faces of `apex ∗ link` that contain the
/// apex: `(σ, Σ) ↦ (apex ∗ σ, apex ∗ Σ)`, and the apex is paired with the
/// edge to the smallest critical vertex `w`. The critical apex faces are
/// `apex ∗ τ` for the other critical faces `τ`. Faces of `link` itself are
/// left unmatched.
pub fn lift_matching_over_cone(
    apex: Vertex,
    link: &SimplicialComplex,
    link_matching: &MorseMatching,
) -> Result<MorseMatching, MorseError> {
    if link.is_empty() {
        return Err(MorseError::EmptyLink);
    }
    if link.has_vertex(apex) {
        return Err(MorseError::ApexInLink(apex));
    }
    if link_matching.complex() != link {
        return Err(MorseError::ComplexMismatch);
    }
    let cone = link.cone(apex).expect("apex not in link");
    Ok(MorseMatching::new(cone, lifted_pairs(apex, link_matching)?).expect("lift of a matching is a matching"))
}

/// The pairs of [`lift_matching_over_cone`] without building the cone.
pub(crate) fn lifted_pairs(apex: Vertex, link_matching: &MorseMatching) -> Result<Vec<(Face, Face)>, MorseError> {
    let w = link_matching
        .complex()
        .faces(0)
        .iter()
        .find(|f| link_matching.partner(f).is_none())
        .ok_or(MorseError::NoCriticalVertex)?
        .vertices()[0];
    let mut pairs: Vec<(Face, Face)> = link_matching
        .pairs()
        .into_iter()
        .map(|(a, b)| (a.with_vertex(apex).unwrap(), b.with_vertex(apex).unwrap()))
        .collect();
    pairs.push((Face::vertex(apex), Face::new([apex, w]).unwrap()));
    Ok(pairs)
}

/// Random collapse heuristic: repeatedly collapse a uniformly chosen free
/// pair; when none is left, declare a uniformly chosen top-dimensional face
/// critical and remove it. Deterministic for a given seed.
pub fn random_discrete_morse(complex: impl Into<Arc<SimplicialComplex>>, seed: u64) -> MorseMatching {
    let complex = complex.into();
    let pairs = {
        let hasse = Hasse::new(&complex);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut collapser = Collapser::new(&hasse);
        let mut pairs = Vec::new();
        while collapser.remaining > 0 {
            if let Some((a, b)) = collapser.random_free_pair(&mut rng) {
                collapser.collapse(a, b);
                pairs.push((hasse.face(a).clone(), hasse.face(b).clone()));
            } else {
                let top = collapser.random_top_face(&mut rng);
                collapser.remove(top);
            }
        }
        pairs
    };
    MorseMatching::new(complex, pairs).expect("collapse pairs form a matching")
}

/// Mutable collapse state over a Hasse diagram.
pub(crate) struct Collapser<'h, 'c> {
    hasse: &'h Hasse<'c>,
    pub alive: Vec<bool>,
    live_cofaces: Vec<usize>,
    free: IndexSet<usize>,
    pub remaining: usize,
}

impl<'h, 'c> Collapser<'h, 'c> {
    pub fn new(hasse: &'h Hasse<'c>) -> Self {
        let live_cofaces: Vec<usize> = hasse.cofaces.iter().map(Vec::len).collect();
        let free = (0..hasse.len()).filter(|&i| live_cofaces[i] == 1).collect();
        Collapser { hasse, alive: vec![true; hasse.len()], live_cofaces, free, remaining: hasse.len() }
    }

    fn refresh(&mut self, id: usize) {
        if self.alive[id] && self.live_cofaces[id] == 1 {
            self.free.insert(id);
        } else {
            self.free.swap_remove(&id);
        }
    }

    pub fn coface_of(&self, id: usize) -> usize {
        *self.hasse.cofaces[id].iter().find(|&&c| self.alive[c]).expect("free face has a coface")
    }

    pub fn free_count(&self) -> usize {
        self.free.len()
    }

    pub fn free_at(&self, i: usize) -> usize {
        *self.free.get_index(i).unwrap()
    }

    pub fn random_free_pair(&self, rng: &mut impl Rng) -> Option<(usize, usize)> {
        if self.free.is_empty() {
            return None;
        }
        let a = *self.free.get_index(rng.random_range(0..self.free.len())).unwrap();
        Some((a, self.coface_of(a)))
    }

    pub fn random_top_face(&self, rng: &mut impl Rng) -> usize {
        let top = (0..self.hasse.len()).rev().find(|&i| self.alive[i]).expect("nonempty");
        let d = self.hasse.dim_of(top);
        let candidates: Vec<usize> = self.hasse.range(d).filter(|&i| self.alive[i]).collect();
        candidates[rng.random_range(0..candidates.len())]
    }

    pub fn remove(&mut self, id: usize) {
        debug_assert!(self.alive[id]);
        self.alive[id] = false;
        self.remaining -= 1;
        self.free.swap_remove(&id);
        for k in 0..self.hasse.facets[id].len() {
            let f = self.hasse.facets[id][k];
            self.live_cofaces[f] -= 1;
            self.refresh(f);
        }
    }

    pub fn collapse(&mut self, low: usize, high: usize) {
        self.remove(high);
        self.remove(low);
    }
}
