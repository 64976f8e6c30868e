//! Small named complexes and a corpus of planar complexes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::geometry::GeometricRealization;

fn from_facets<const N: usize>(facets: &[[Vertex; N]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(facets.iter().copied()).expect("catalog facets are valid")
}

/// Four triangles in the plane, pairwise sharing one vertex, around a
/// triangular hole: every edge is free and every vertex link is two
/// disjoint edges, yet the complex is not collapsible.
pub fn e_complex() -> SimplicialComplex {
    from_facets(&[[1, 2, 3], [3, 4, 5], [1, 5, 6], [2, 4, 6]])
}

/// `e_complex` with integer coordinates in the plane.
pub fn e_realization() -> GeometricRealization {
    let coords =
        [(1, vec![0, 10]), (2, vec![-9, -5]), (3, vec![-2, 1]), (4, vec![0, -2]), (5, vec![2, 1]), (6, vec![9, -5])];
    GeometricRealization::from_integer_coords(e_complex(), coords, 2).unwrap()
}

/// A six-triangle annulus.
pub fn annulus() -> SimplicialComplex {
    from_facets(&[[1, 2, 4], [2, 4, 5], [2, 3, 5], [3, 5, 6], [1, 3, 6], [1, 4, 6]])
}

/// Annulus between an outer `n`-cycle `0..n` and an inner `n`-cycle `n..2n`.
pub fn ring(n: usize) -> SimplicialComplex {
    let n = n as Vertex;
    let facets: Vec<[Vertex; 3]> =
        (0..n).flat_map(|i| [[i, (i + 1) % n, n + i], [(i + 1) % n, n + i, n + (i + 1) % n]]).collect();
    from_facets(&facets)
}

/// `n` triangles around vertex 0, not closed up.
pub fn fan(n: usize) -> SimplicialComplex {
    let facets: Vec<[Vertex; 3]> = (1..=n as Vertex).map(|i| [0, i, i + 1]).collect();
    from_facets(&facets)
}

/// `n` triangles around vertex 0, closed up into a disc.
pub fn wheel(n: usize) -> SimplicialComplex {
    let n = n as Vertex;
    let facets: Vec<[Vertex; 3]> = (0..n).map(|i| [n, i, (i + 1) % n]).collect();
    from_facets(&facets)
}

pub fn path_graph(n: usize) -> SimplicialComplex {
    let facets: Vec<[Vertex; 2]> = (0..n as Vertex).map(|i| [i, i + 1]).collect();
    from_facets(&facets)
}

pub fn cycle_graph(n: usize) -> SimplicialComplex {
    let n = n as Vertex;
    let facets: Vec<[Vertex; 2]> = (0..n).map(|i| [i, (i + 1) % n]).collect();
    from_facets(&facets)
}

/// A random tree on `n` vertices: vertex `k` hangs off a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n <= 1 {
        return SimplicialComplex::closure_of([Face::vertex(0)]);
    }
    let facets: Vec<[Vertex; 2]> = (1..n as Vertex).map(|k| [rng.random_range(0..k), k]).collect();
    from_facets(&facets)
}

/// The `m × m` square grid, each square cut along its rising diagonal.
pub fn grid_disc(m: usize) -> GeometricRealization {
    let label = |i: usize, j: usize| (i + (m + 1) * j) as Vertex;
    let mut facets = Vec::new();
    for j in 0..m {
        for i in 0..m {
            facets.push([label(i, j), label(i + 1, j), label(i + 1, j + 1)]);
            facets.push([label(i, j), label(i, j + 1), label(i + 1, j + 1)]);
        }
    }
    let coords = (0..=m).flat_map(|j| (0..=m).map(move |i| (label(i, j), vec![i as i64, j as i64])));
    GeometricRealization::from_integer_coords(from_facets(&facets), coords, 2).unwrap()
}

/// A random subcomplex of `grid_disc(m)`: triangles are kept with
/// probability `p`, then uncovered edges and vertices with probability `p / 2`.
pub fn random_disc_subcomplex(m: usize, p: f64, seed: u64) -> SimplicialComplex {
    let disc = grid_disc(m);
    let disc = disc.complex();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut kept: Vec<Face> = disc.faces(2).iter().filter(|_| rng.random_bool(p)).cloned().collect();
    for d in [1, 0] {
        let covered = SimplicialComplex::closure_of(kept.iter().cloned());
        kept.extend(disc.faces(d).iter().filter(|f| !covered.contains(f) && rng.random_bool(p / 2.0)).cloned());
    }
    if kept.is_empty() {
        kept.push(Face::vertex(0));
    }
    SimplicialComplex::closure_of(kept)
}

/// The dunce hat: a 9-gon with boundary word `1 2 3 1 2 3 1 3 2`, an inner
/// ring `4..=12` and a centre `13`. Contractible with no free face.
pub fn dunce_hat() -> SimplicialComplex {
    const RIM: [Vertex; 9] = [1, 2, 3, 1, 2, 3, 1, 3, 2];
    let ring = |i: usize| 4 + (i % 9) as Vertex;
    let mut facets = Vec::new();
    for i in 0..9 {
        let (b0, b1) = (RIM[i], RIM[(i + 1) % 9]);
        facets.push([b0, b1, ring(i)]);
        facets.push([b1, ring(i), ring(i + 1)]);
        facets.push([13, ring(i), ring(i + 1)]);
    }
    from_facets(&facets)
}

/// Named complexes that embed in the plane: discs, annuli, fans, graphs,
/// the E complex and random subcomplexes of triangulated discs.
pub fn planar_corpus() -> Vec<(String, SimplicialComplex)> {
    let mut out: Vec<(String, SimplicialComplex)> = vec![
        ("E".into(), e_complex()),
        ("annulus".into(), annulus()),
        ("point".into(), SimplicialComplex::closure_of([Face::vertex(0)])),
    ];
    out.extend((1..=6).map(|n| (format!("fan({n})"), fan(n))));
    out.extend((3..=7).map(|n| (format!("wheel({n})"), wheel(n))));
    out.extend((3..=6).map(|n| (format!("ring({n})"), ring(n))));
    out.extend((1..=4).map(|m| (format!("grid_disc({m})"), grid_disc(m).complex().clone())));
    out.extend((1..=4).map(|n| (format!("path({n})"), path_graph(n))));
    out.extend((3..=5).map(|n| (format!("cycle({n})"), cycle_graph(n))));
    out.extend((0..5).map(|s| (format!("tree(8,{s})"), random_tree(8, s))));
    out.extend((0..30).map(|s| {
        let p = [0.3, 0.5, 0.7][s as usize % 3];
        (format!("disc_subcomplex(4,{p},{s})"), random_disc_subcomplex(4, p, s))
    }));
    out
}

/// Closure of `k` distinct random `dim`-faces on the vertices `0..n`.
pub fn random_complex(n: usize, k: usize, dim: usize, seed: u64) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut faces = std::collections::BTreeSet::new();
    let possible = (0..=dim).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
    while faces.len() < k.min(possible) {
        let mut vs: Vec<Vertex> = (0..n as Vertex).collect();
        for i in 0..=dim {
            let j = rng.random_range(i..n);
            vs.swap(i, j);
        }
        faces.insert(Face::new(vs[..=dim].iter().copied()).unwrap());
    }
    SimplicialComplex::closure_of(faces)
}

/// Everything above plus 3-dimensional fixtures, spheres and random small
/// complexes.
pub fn corpus() -> Vec<(String, SimplicialComplex)> {
    let mut out = planar_corpus();
    out.push(("dunce_hat".into(), dunce_hat()));
    out.push(("tetrahedron_boundary".into(), from_facets(&[[0, 1, 2, 3]]).boundary()));
    for name in [
        "simplex3",
        "stacked(3)",
        "stacked(6)",
        "stacked_random(5,1)",
        "octahedron_boundary",
        "bipyramid(5)",
        "schlegel_cross4",
    ] {
        out.push((name.into(), super::convex_fixture(name).unwrap().complex().clone()));
    }
    for dims in [[1, 1, 1], [2, 1, 1], [2, 2, 1]] {
        let g = super::grid_ball(dims[0], dims[1], dims[2]).unwrap();
        out.push((format!("grid_ball({},{},{})", dims[0], dims[1], dims[2]), g.complex().clone()));
    }
    let tet = from_facets(&[[0, 1, 2, 3]]);
    let s = super::cone_sphere(&tet).unwrap();
    out.push(("cone_sphere(simplex3)".into(), s.complex.clone()));
    out.push(("cone_sphere(simplex3)-facet".into(), s.complex.remove_facet(&s.apex_facet()).unwrap()));
    let w = super::wedge_thicken(&tet, &from_facets(&[[4, 5, 6, 7]]), [1, 2, 0], [5, 6, 4]).unwrap();
    out.push(("wedge(simplex3,simplex3)".into(), w.complex));
    for seed in 0..12 {
        let k = 2 + seed as usize % 5;
        out.push((format!("random(6,{k},2,{seed})"), random_complex(6, k, 2, seed)));
        out.push((format!("random(6,{k},3,{seed})"), random_complex(6, k, 3, seed)));
    }
    out
}
