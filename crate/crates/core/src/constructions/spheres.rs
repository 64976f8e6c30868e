//! Spheres and balls assembled from smaller balls.

use std::collections::{BTreeMap, BTreeSet};

use super::ConstructionError;
use crate::algorithms::recognition::{is_2_sphere, is_3_manifold};
use crate::complex::{ComplexError, Face, SimplicialComplex, Vertex};
use crate::geometry::GeometricRealization;
use crate::homology::betti_or_zero;
use crate::rational::{self, Scalar};

/// `B ∪ (v ∗ ∂B)` for a 3-ball `B`, a 3-sphere with apex `v`.
#[derive(Clone, Debug)]
pub struct ConeSphere {
    pub complex: SimplicialComplex,
    pub apex: Vertex,
}

impl ConeSphere {
    /// The facet `apex ∗ σ` for the smallest boundary triangle `σ`.
    pub fn apex_facet(&self) -> Face {
        let link = self.complex.link(self.apex).expect("apex is a vertex");
        link.faces(2)[0].with_vertex(self.apex).expect("apex is not in its link")
    }
}

fn check_ball(b: &SimplicialComplex) -> Result<SimplicialComplex, ConstructionError> {
    if b.dim() != 3 || !is_3_manifold(b) {
        return Err(ConstructionError::NotABall("not a pure 3-manifold".into()));
    }
    let betti = betti_or_zero(b);
    if !betti.is_acyclic() {
        return Err(ConstructionError::NotABall(format!("Betti numbers {:?}", betti.values)));
    }
    let boundary = b.boundary();
    if !is_2_sphere(&boundary) {
        return Err(ConstructionError::NotABall("boundary is not a 2-sphere".into()));
    }
    Ok(boundary)
}

/// Closes a 3-ball into a 3-sphere by coning its boundary from a fresh apex.
pub fn cone_sphere(b: &SimplicialComplex) -> Result<ConeSphere, ConstructionError> {
    let boundary = check_ball(b)?;
    let apex = b.max_vertex().expect("nonempty") + 1;
    let complex = b.union(&boundary.cone(apex)?);
    let betti = betti_or_zero(&complex);
    if betti.values != [1, 0, 0, 1] {
        return Err(ConstructionError::NotABall(format!("cone sphere has Betti numbers {:?}", betti.values)));
    }
    Ok(ConeSphere { complex, apex })
}

/// Removes a facet, keeping its boundary.
pub fn remove_facet(c: &SimplicialComplex, facet: &Face) -> Result<SimplicialComplex, ConstructionError> {
    c.remove_facet(facet).map_err(|e| match e {
        ComplexError::FacetNotFound(f) => ConstructionError::FacetNotFound(f),
        other => ConstructionError::Complex(other),
    })
}

/// Two 3-balls glued at a vertex and thickened into a single 3-ball.
#[derive(Clone, Debug)]
pub struct WedgeThickening {
    pub complex: SimplicialComplex,
    /// The new vertex; deleting it leaves the wedge plus two triangles.
    pub apex: Vertex,
    /// The shared vertex of the wedge.
    pub wedge_point: Vertex,
    /// `B1 ∪ B2` with `x2` identified to `x1`.
    pub wedge: SimplicialComplex,
}

/// Thickens the wedge of `b1` and `b2` at `t1 = (a1, b1, x1)` and
/// `t2 = (a2, b2, x2)`.
///
/// `x2` is renamed to `x1` and a fresh vertex `v` is coned over the square
/// pyramid with apex `x1` on the square `a1 b1 b2 a2`, adding the tetrahedra
/// `v x a1 b1`, `v x b1 b2`, `v x b2 a2` and `v x a2 a1`. The result is a
/// 3-ball whose deletion of `v` collapses onto the wedge.
pub fn wedge_thicken(
    b1: &SimplicialComplex,
    b2: &SimplicialComplex,
    t1: [Vertex; 3],
    t2: [Vertex; 3],
) -> Result<WedgeThickening, ConstructionError> {
    let clash: Vec<Vertex> = b1.vertices().into_iter().filter(|&v| b2.has_vertex(v)).collect();
    if !clash.is_empty() {
        return Err(ConstructionError::LabelClash(clash));
    }
    for (b, t) in [(b1, t1), (b2, t2)] {
        let boundary = check_ball(b)?;
        let face = Face::new(t)?;
        if !boundary.contains(&face) || face.dim() != 2 {
            return Err(ConstructionError::NotBoundaryTriangle(face));
        }
    }
    let [a1, c1, x] = t1;
    let [a2, c2, x2] = t2;
    let b2 = b2.relabel(|v| if v == x2 { x } else { v });
    let wedge = b1.union(&b2);
    let apex = wedge.max_vertex().expect("nonempty") + 1;
    let tets = [[apex, x, a1, c1], [apex, x, c1, c2], [apex, x, c2, a2], [apex, x, a2, a1]];
    let pyramid = SimplicialComplex::from_facets(tets)?;
    Ok(WedgeThickening { complex: wedge.union(&pyramid), apex, wedge_point: x, wedge })
}

/// Suspension of a realization in `R^k` placed in `R^{k+1}`: the base gets
/// distinct last coordinates in `(-eps, eps)` and the apices sit at `±e_{k+1}`.
/// Returns the realization and the apices `(north, south)`.
pub fn suspension_realization(base: &GeometricRealization, eps: &Scalar) -> (GeometricRealization, Vertex, Vertex) {
    let (complex, north, south) = base.complex().suspension();
    let k = base.ambient_dim();
    let n = base.coords().len() as i64;
    let mut coords: BTreeMap<Vertex, Vec<Scalar>> = BTreeMap::new();
    for (i, (v, p)) in base.coords().iter().enumerate() {
        let offset = rational::ratio(2 * i as i64 + 1 - n, n + 1) * eps;
        coords.insert(*v, p.iter().cloned().chain(std::iter::once(offset)).collect());
    }
    let pole = |s: i64| (0..=k).map(|i| rational::from_int(if i == k { s } else { 0 })).collect::<Vec<_>>();
    coords.insert(north, pole(1));
    coords.insert(south, pole(-1));
    let g = GeometricRealization::new(complex, coords, k + 1).expect("every vertex has coordinates");
    (g, north, south)
}

/// Vertex labels of `c` shifted so they do not meet `avoid`.
pub fn shift_apart(c: &SimplicialComplex, avoid: &SimplicialComplex) -> SimplicialComplex {
    let used: BTreeSet<Vertex> = avoid.vertices().into_iter().collect();
    if c.vertices().iter().all(|v| !used.contains(v)) {
        return c.clone();
    }
    let offset = avoid.max_vertex().map_or(0, |m| m + 1);
    c.relabel(|v| v + offset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::recognition::is_homology_3_ball;

    fn tet(vs: [Vertex; 4]) -> SimplicialComplex {
        SimplicialComplex::from_facets([vs]).unwrap()
    }

    #[test]
    fn cone_over_tetrahedron() {
        let s = cone_sphere(&tet([0, 1, 2, 3])).unwrap();
        assert_eq!(s.apex, 4);
        assert_eq!(s.complex.faces(3).len(), 5);
        let f = s.apex_facet();
        assert!(f.contains(4));
        let ball = remove_facet(&s.complex, &f).unwrap();
        assert!(betti_or_zero(&ball).is_acyclic());
    }

    #[test]
    fn cone_rejects_non_balls() {
        let s = tet([0, 1, 2, 3]).boundary();
        assert!(matches!(cone_sphere(&s), Err(ConstructionError::NotABall(_))));
    }

    #[test]
    fn wedge_of_two_tetrahedra() {
        let w = wedge_thicken(&tet([0, 1, 2, 3]), &tet([4, 5, 6, 7]), [1, 2, 0], [5, 6, 4]).unwrap();
        assert_eq!(w.complex.num_vertices(), 8);
        assert!(is_homology_3_ball(&w.complex));
        let deleted = w.complex.deletion(w.apex).unwrap();
        assert!(w.wedge.is_subcomplex_of(&deleted));
        assert_eq!(deleted.faces(2).len(), w.wedge.faces(2).len() + 2);
    }

    #[test]
    fn wedge_guards() {
        let a = tet([0, 1, 2, 3]);
        assert!(matches!(wedge_thicken(&a, &a, [1, 2, 0], [1, 2, 0]), Err(ConstructionError::LabelClash(_))));
        let b = shift_apart(&a, &a);
        assert_eq!(b.vertices(), vec![4, 5, 6, 7]);
        assert!(matches!(wedge_thicken(&a, &b, [1, 2, 9], [5, 6, 4]), Err(ConstructionError::NotBoundaryTriangle(_))));
    }

    #[test]
    fn suspension_of_a_segment() {
        let base = SimplicialComplex::from_facets([[0u32, 1]]).unwrap();
        let g = GeometricRealization::from_integer_coords(base, [(0, vec![0]), (1, vec![1])], 1).unwrap();
        let (s, north, south) = suspension_realization(&g, &rational::ratio(1, 10));
        assert_eq!(s.ambient_dim(), 2);
        assert_eq!(s.point(north)[1], rational::from_int(1));
        assert_eq!(s.point(south)[1], rational::from_int(-1));
        assert_ne!(s.point(0)[1], s.point(1)[1]);
    }
}
