//! Combinatorial recognition of low-dimensional spheres, discs and balls.

use std::collections::HashMap;

use crate::complex::{SimplicialComplex, Vertex};
use crate::homology::betti_or_zero;

/// Whether `c` is a circle: connected, 1-dimensional, every vertex of degree 2.
pub fn is_cycle_graph(c: &SimplicialComplex) -> bool {
    c.dim() == 1 && c.is_pure() && c.is_connected() && degrees(c).values().all(|&d| d == 2)
}

/// Whether `c` is a path with at least one edge.
pub fn is_path_graph(c: &SimplicialComplex) -> bool {
    if c.dim() != 1 || !c.is_pure() || !c.is_connected() {
        return false;
    }
    let deg = degrees(c);
    deg.values().all(|&d| d <= 2) && deg.values().filter(|&&d| d == 1).count() == 2
}

/// Whether `c` is a tree: a single vertex, or a connected acyclic graph.
pub fn is_tree(c: &SimplicialComplex) -> bool {
    match c.dim() {
        0 => c.num_vertices() == 1,
        1 => c.is_connected() && c.faces(1).len() + 1 == c.num_vertices(),
        _ => false,
    }
}

fn degrees(c: &SimplicialComplex) -> HashMap<Vertex, usize> {
    let mut deg: HashMap<Vertex, usize> = c.vertices().into_iter().map(|v| (v, 0)).collect();
    for e in c.faces(1) {
        for v in e.vertices() {
            *deg.get_mut(v).unwrap() += 1;
        }
    }
    deg
}

/// Whether `c` is a triangulated 2-sphere.
pub fn is_2_sphere(c: &SimplicialComplex) -> bool {
    c.dim() == 2
        && c.is_pure()
        && c.is_connected()
        && c.coface_counts(1).iter().all(|&k| k == 2)
        && c.vertices().into_iter().all(|v| is_cycle_graph(&c.link(v).unwrap()))
        && c.euler_characteristic() == 2
}

/// Whether `c` is a triangulated 2-disc.
pub fn is_2_disc(c: &SimplicialComplex) -> bool {
    let counts = c.coface_counts(1);
    c.dim() == 2
        && c.is_pure()
        && c.is_connected()
        && counts.iter().all(|&k| k == 1 || k == 2)
        && counts.contains(&1)
        && c.vertices().into_iter().all(|v| {
            let l = c.link(v).unwrap();
            is_cycle_graph(&l) || is_path_graph(&l)
        })
        && c.euler_characteristic() == 1
}

/// Whether every vertex link is a 2-sphere or a 2-disc, so that `c` is a
/// 3-manifold, possibly with boundary.
pub fn is_3_manifold(c: &SimplicialComplex) -> bool {
    c.dim() == 3
        && c.is_pure()
        && c.vertices().into_iter().all(|v| {
            let l = c.link(v).unwrap();
            is_2_sphere(&l) || is_2_disc(&l)
        })
}

/// A 3-manifold with Z2 homology of a point whose boundary is a 2-sphere.
/// This is a homology-ball test; it does not exclude fake balls.
pub fn is_homology_3_ball(c: &SimplicialComplex) -> bool {
    is_3_manifold(c) && betti_or_zero(c).is_acyclic() && is_2_sphere(&c.boundary())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(facets: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap()
    }

    #[test]
    fn tetrahedron_boundary_is_a_sphere() {
        let s = c(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        assert!(is_2_sphere(&s));
        assert!(!is_2_disc(&s));
        let d = s.remove_facet(&crate::Face::new([2, 3, 4]).unwrap()).unwrap();
        assert!(is_2_disc(&d));
        assert!(!is_2_sphere(&d));
    }

    #[test]
    fn solid_tetrahedron_is_a_ball() {
        let b = c(&[&[1, 2, 3, 4]]);
        assert!(is_homology_3_ball(&b));
    }

    #[test]
    fn graphs() {
        assert!(is_tree(&c(&[&[1, 2], &[2, 3], &[2, 4]])));
        assert!(is_tree(&c(&[&[5]])));
        assert!(!is_tree(&c(&[&[1, 2], &[3, 4]])));
        assert!(is_path_graph(&c(&[&[1, 2], &[2, 3]])));
        assert!(is_cycle_graph(&c(&[&[1, 2], &[2, 3], &[1, 3]])));
    }
}
