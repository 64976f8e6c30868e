//! Collapse routines for complexes that embed in the plane.
//!
//! A 2-complex in the plane has at least one free edge as long as it has a
//! triangle, so collapsing free edges removes every triangle and leaves a
//! graph. A spanning forest of that graph then gives a perfect matching.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use super::nonevasive::NonEvasivenessCertificate;
use super::recognition::is_tree;
use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::hasse::Hasse;
use crate::homology::{betti_or_zero, BettiVector};
use crate::morse::MorseMatching;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlanarError {
    #[error("expected a complex of dimension at most 2, got {0}")]
    DimensionTooHigh(isize),
    #[error("no free edge left while {triangles} triangles remain")]
    StuckNoFreeEdge { triangles: usize },
    #[error("complex is not acyclic (Betti numbers {0:?})")]
    NotAcyclic(Vec<usize>),
    #[error("no vertex with a tree link among {} remaining vertices", .blocking.len())]
    StuckNoDeletableVertex { blocking: Vec<(Vertex, SimplicialComplex)> },
}

/// Perfect Morse matching on a 2-complex embedded in the plane.
///
/// Free edges are collapsed with their triangle, always taking the
/// lexicographically smallest free edge. The remaining graph is matched
/// along a breadth-first spanning forest rooted at the smallest vertex of
/// each component, pairing every non-root vertex with the edge to its parent.
/// Critical faces: one vertex per component and the non-tree edges.
pub fn planar_perfect_morse(d: &SimplicialComplex) -> Result<MorseMatching, PlanarError> {
    if d.dim() > 2 {
        return Err(PlanarError::DimensionTooHigh(d.dim()));
    }
    let pairs = {
        let hasse = Hasse::new(d);
        let mut pairs = Vec::new();
        let mut alive = vec![true; hasse.len()];
        let mut live: Vec<usize> = hasse.cofaces.iter().map(Vec::len).collect();
        let edges = hasse.range(1);
        let mut free: BTreeSet<usize> = edges.clone().filter(|&e| live[e] == 1).collect();
        let mut triangles = hasse.range(2).len();
        while triangles > 0 {
            let Some(e) = free.pop_first() else {
                return Err(PlanarError::StuckNoFreeEdge { triangles });
            };
            let t = *hasse.cofaces[e].iter().find(|&&t| alive[t]).unwrap();
            alive[t] = false;
            alive[e] = false;
            triangles -= 1;
            pairs.push((hasse.face(e).clone(), hasse.face(t).clone()));
            for &f in &hasse.facets[t] {
                live[f] -= 1;
                if alive[f] && live[f] == 1 {
                    free.insert(f);
                } else {
                    free.remove(&f);
                }
            }
        }
        let graph: Vec<&Face> = edges.filter(|&e| alive[e]).map(|e| hasse.face(e)).collect();
        pairs.extend(spanning_forest_pairs(d.faces(0), &graph));
        pairs
    };
    Ok(MorseMatching::new(d.clone(), pairs).expect("collapse and forest pairs are disjoint incidences"))
}

fn spanning_forest_pairs(vertices: &[Face], edges: &[&Face]) -> Vec<(Face, Face)> {
    let labels: Vec<Vertex> = vertices.iter().map(|f| f.vertices()[0]).collect();
    let pos = |v: Vertex| labels.binary_search(&v).unwrap();
    let mut adj: Vec<Vec<(usize, &Face)>> = vec![Vec::new(); labels.len()];
    for e in edges {
        let (a, b) = (pos(e.vertices()[0]), pos(e.vertices()[1]));
        adj[a].push((b, e));
        adj[b].push((a, e));
    }
    for list in &mut adj {
        list.sort_by_key(|&(w, _)| w);
    }
    let mut seen = vec![false; labels.len()];
    let mut pairs = Vec::new();
    for root in 0..labels.len() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    pairs.push((vertices[w].clone(), (*e).clone()));
                    queue.push_back(w);
                }
            }
        }
    }
    pairs
}

/// Non-evasiveness certificate for an acyclic complex embedded in the plane.
///
/// Repeatedly deletes the smallest vertex whose link is a tree (a point or a
/// connected acyclic graph). Trees are certified by deleting leaves.
pub fn planar_acyclic_nonevasive(d: &SimplicialComplex) -> Result<NonEvasivenessCertificate, PlanarError> {
    if d.dim() > 2 {
        return Err(PlanarError::DimensionTooHigh(d.dim()));
    }
    let b: BettiVector = betti_or_zero(d);
    if d.is_empty() || !b.is_acyclic() {
        return Err(PlanarError::NotAcyclic(b.values));
    }
    let mut current = d.clone();
    let mut steps = Vec::new();
    while current.num_vertices() > 1 {
        let links: Vec<(Vertex, SimplicialComplex)> =
            current.vertices().into_iter().map(|v| (v, current.link(v).unwrap())).collect();
        let Some(pos) = links.iter().position(|(_, l)| is_tree(l)) else {
            return Err(PlanarError::StuckNoDeletableVertex { blocking: links });
        };
        let (v, link) = links.into_iter().nth(pos).unwrap();
        steps.push((v, tree_certificate(&link)));
        current = current.deletion(v).unwrap();
    }
    Ok(fold(steps, current.vertices()[0]))
}

fn fold(steps: Vec<(Vertex, NonEvasivenessCertificate)>, last: Vertex) -> NonEvasivenessCertificate {
    steps.into_iter().rev().fold(NonEvasivenessCertificate::Point(last), |deletion, (vertex, link)| {
        NonEvasivenessCertificate::Step { vertex, link: Box::new(link), deletion: Box::new(deletion) }
    })
}

/// Certificate for a tree: delete the smallest leaf until one vertex remains.
pub(crate) fn tree_certificate(t: &SimplicialComplex) -> NonEvasivenessCertificate {
    let mut current = t.clone();
    let mut steps = Vec::new();
    while current.num_vertices() > 1 {
        let (leaf, nbr) = current
            .vertices()
            .into_iter()
            .find_map(|v| {
                let l = current.link(v).unwrap();
                (l.num_vertices() == 1).then(|| (v, l.vertices()[0]))
            })
            .expect("a tree with an edge has a leaf");
        steps.push((leaf, NonEvasivenessCertificate::Point(nbr)));
        current = current.deletion(leaf).unwrap();
    }
    fold(steps, current.vertices()[0])
}
