//! Convex fixtures with exact rational coordinates.
//!
//! Stacked balls are built by placing each new vertex just beyond one hull
//! facet, so every stacked ball is the convex hull of its vertices and is
//! tight in every generic direction.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ConstructionError;
use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::geometry::GeometricRealization;
use crate::rational::{self, Scalar};

/// Named convex fixtures, parsed from `simplex3`, `octahedron_boundary`,
/// `stacked(k)`, `stacked_random(k,seed)`, `stacked_sphere(k)`,
/// `bipyramid(n)` and `schlegel_cross4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureName {
    Simplex3,
    OctahedronBoundary,
    Stacked(usize),
    StackedRandom(usize, u64),
    StackedSphere(usize),
    Bipyramid(usize),
    SchlegelCross4,
}

impl fmt::Display for FixtureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureName::Simplex3 => write!(f, "simplex3"),
            FixtureName::OctahedronBoundary => write!(f, "octahedron_boundary"),
            FixtureName::Stacked(k) => write!(f, "stacked({k})"),
            FixtureName::StackedRandom(k, s) => write!(f, "stacked_random({k},{s})"),
            FixtureName::StackedSphere(k) => write!(f, "stacked_sphere({k})"),
            FixtureName::Bipyramid(n) => write!(f, "bipyramid({n})"),
            FixtureName::SchlegelCross4 => write!(f, "schlegel_cross4"),
        }
    }
}

impl FromStr for FixtureName {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || ConstructionError::UnknownFixture(s.to_string());
        let s = s.trim();
        let (head, args) = match s.find('(') {
            Some(i) if s.ends_with(')') => (&s[..i], s[i + 1..s.len() - 1].split(',').map(str::trim).collect()),
            Some(_) => return Err(unknown()),
            None => (s, Vec::new()),
        };
        let nums: Vec<u64> = args.iter().map(|a| a.parse::<u64>()).collect::<Result<_, _>>().map_err(|_| unknown())?;
        let name = match (head, nums.as_slice()) {
            ("simplex3", []) => FixtureName::Simplex3,
            ("octahedron_boundary", []) => FixtureName::OctahedronBoundary,
            ("stacked", [k]) => FixtureName::Stacked(*k as usize),
            ("stacked_random", [k, seed]) => FixtureName::StackedRandom(*k as usize, *seed),
            ("stacked_sphere", [k]) => FixtureName::StackedSphere(*k as usize),
            ("bipyramid", [n]) if *n >= 3 => FixtureName::Bipyramid(*n as usize),
            ("schlegel_cross4", []) => FixtureName::SchlegelCross4,
            _ => return Err(unknown()),
        };
        Ok(name)
    }
}

/// Builds a fixture by name.
pub fn convex_fixture(name: &str) -> Result<GeometricRealization, ConstructionError> {
    Ok(match name.parse::<FixtureName>()? {
        FixtureName::Simplex3 => stacked_ball(0, None),
        FixtureName::OctahedronBoundary => octahedron_boundary(),
        FixtureName::Stacked(k) => stacked_ball(k, None),
        FixtureName::StackedRandom(k, seed) => stacked_ball(k, Some(seed)),
        FixtureName::StackedSphere(k) => {
            let g = stacked_ball(k, None);
            g.with_complex(g.complex().boundary())?
        }
        FixtureName::Bipyramid(n) => bipyramid(n),
        FixtureName::SchlegelCross4 => schlegel_cross4(),
    })
}

/// Boundaries of convex 3-polytopes other than the octahedron.
pub fn convex_spheres() -> Vec<(String, GeometricRealization)> {
    ["bipyramid(5)", "bipyramid(7)", "stacked_sphere(4)", "stacked_sphere(9)"]
        .into_iter()
        .map(|n| (n.to_string(), convex_fixture(n).expect("builtin fixture")))
        .collect()
}

type Point = Vec<Scalar>;

fn sub(a: &[Scalar], b: &[Scalar]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn cross(a: &[Scalar], b: &[Scalar]) -> Point {
    vec![&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]]
}

fn ints(p: [i64; 3]) -> Point {
    p.iter().map(|&x| rational::from_int(x)).collect()
}

/// A hull facet with outward normal.
struct HullFacet {
    verts: [Vertex; 3],
    normal: Point,
    base: Point,
}

impl HullFacet {
    fn new(verts: [Vertex; 3], coords: &BTreeMap<Vertex, Point>, inside: &[Scalar]) -> Self {
        let base = coords[&verts[0]].clone();
        let mut normal = cross(&sub(&coords[&verts[1]], &base), &sub(&coords[&verts[2]], &base));
        if rational::dot(&normal, &sub(inside, &base)).is_positive() {
            normal.iter_mut().for_each(|x| *x = -x.clone());
        }
        HullFacet { verts, normal, base }
    }

    fn side(&self, p: &[Scalar]) -> Scalar {
        rational::dot(&self.normal, &sub(p, &self.base))
    }
}

fn stacked_ball(k: usize, seed: Option<u64>) -> GeometricRealization {
    let mut coords: BTreeMap<Vertex, Point> = [(0, [0, 0, 0]), (1, [6, 0, 0]), (2, [0, 6, 0]), (3, [0, 0, 6])]
        .into_iter()
        .map(|(v, p)| (v, ints(p)))
        .collect();
    let inside = ints([1, 1, 1]);
    let mut hull: Vec<HullFacet> =
        [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]].into_iter().map(|t| HullFacet::new(t, &coords, &inside)).collect();
    let mut tets: Vec<Face> = vec![Face::new([0, 1, 2, 3]).unwrap()];
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    for step in 0..k {
        let v = 4 + step as Vertex;
        let pick = match rng.as_mut() {
            Some(r) => r.random_range(0..hull.len()),
            // Stack next to the previous vertex so the ball grows in a chain.
            None => hull.iter().position(|f| f.verts.contains(&(v - 1))).unwrap_or(0),
        };
        let facet = hull.swap_remove(pick);
        let centroid: Point =
            (0..3).map(|i| facet.verts.iter().map(|u| &coords[u][i]).sum::<Scalar>() / rational::from_int(3)).collect();
        let mut eps = rational::ratio(1, 2);
        let p = loop {
            let p: Point = centroid.iter().zip(&facet.normal).map(|(c, n)| c + n * &eps).collect();
            if facet.side(&p).is_positive() && hull.iter().all(|g| g.side(&p).is_negative()) {
                break p;
            }
            eps /= rational::from_int(2);
        };
        coords.insert(v, p);
        let [a, b, c] = facet.verts;
        tets.push(Face::new([a, b, c, v]).unwrap());
        for t in [[a, b, v], [a, c, v], [b, c, v]] {
            hull.push(HullFacet::new(t, &coords, &centroid));
        }
    }
    GeometricRealization::new(SimplicialComplex::closure_of(tets), coords, 3).expect("complete coordinates")
}

fn octahedron_boundary() -> GeometricRealization {
    let c = SimplicialComplex::from_facets([
        [1u32, 3, 5],
        [1, 3, 6],
        [1, 4, 5],
        [1, 4, 6],
        [2, 3, 5],
        [2, 3, 6],
        [2, 4, 5],
        [2, 4, 6],
    ])
    .unwrap();
    let coords = [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]];
    GeometricRealization::from_integer_coords(c, (1..=6).map(|v| (v, coords[v as usize - 1].to_vec())), 3).unwrap()
}

/// Apices `(0, 0, ±1)` over `n` points of the unit circle, given by the
/// rational parametrization `((1 - t²) / (1 + t²), 2t / (1 + t²))`.
fn bipyramid(n: usize) -> GeometricRealization {
    let mut coords: BTreeMap<Vertex, Point> = BTreeMap::new();
    for j in 0..n {
        let theta = std::f64::consts::PI * (2.0 * j as f64 + 0.5) / n as f64 - std::f64::consts::PI;
        let t = rational::ratio(((theta / 2.0).tan() * 1000.0).round() as i64, 1000);
        let one = rational::from_int(1);
        let d = &one + &t * &t;
        let x = (&one - &t * &t) / &d;
        let y = rational::from_int(2) * &t / &d;
        coords.insert(j as Vertex, vec![x, y, Scalar::zero()]);
    }
    let (north, south) = (n as Vertex, n as Vertex + 1);
    coords.insert(north, ints([0, 0, 1]));
    coords.insert(south, ints([0, 0, -1]));
    let facets = (0..n as Vertex).flat_map(|j| {
        let k = (j + 1) % n as Vertex;
        [[j, k, north], [j, k, south]]
    });
    GeometricRealization::new(SimplicialComplex::from_facets(facets).unwrap(), coords, 3).unwrap()
}

/// Schlegel diagram of the 4-dimensional cross-polytope, projected through
/// the facet `{+e1, +e2, +e3, +e4}`. Vertex `i` stands for `+e_{i+1}` and sits
/// on an outer tetrahedron; vertex `i + 4` stands for `-e_{i+1}` and sits at
/// `-1/9` of it.
fn schlegel_cross4() -> GeometricRealization {
    let outer = [[9, 9, 9], [9, -9, -9], [-9, 9, -9], [-9, -9, 9]];
    let mut coords: Vec<(Vertex, Vec<i64>)> = Vec::new();
    for (i, p) in outer.iter().enumerate() {
        coords.push((i as Vertex, p.to_vec()));
        coords.push((i as Vertex + 4, p.iter().map(|x| -x / 9).collect()));
    }
    let facets = (1u32..16).map(|mask| (0..4).map(move |i| if mask >> i & 1 == 1 { i + 4 } else { i }));
    GeometricRealization::from_integer_coords(SimplicialComplex::from_facets(facets).unwrap(), coords, 3).unwrap()
}
