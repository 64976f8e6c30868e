//! Cube-grid balls and balls with a tube drilled along a lattice path.

use std::collections::{BTreeMap, HashSet};

use super::ConstructionError;
use crate::algorithms::recognition::{is_2_sphere, is_3_manifold};
use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::geometry::GeometricRealization;
use crate::homology::betti_or_zero;
use crate::rational;

/// A box of `nx × ny × nz` unit cubes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GridDims {
    pub nx: usize,
    pub ny: usize,
    pub nz: usize,
}

impl GridDims {
    pub fn new(nx: usize, ny: usize, nz: usize) -> Result<Self, ConstructionError> {
        if nx == 0 || ny == 0 || nz == 0 {
            return Err(ConstructionError::InvalidDimensions(vec![nx, ny, nz]));
        }
        Ok(GridDims { nx, ny, nz })
    }

    /// Label of the lattice point `(i, j, k)`.
    pub fn label(&self, i: usize, j: usize, k: usize) -> Vertex {
        (i + (self.nx + 1) * (j + (self.ny + 1) * k)) as Vertex
    }

    pub fn point(&self, v: Vertex) -> [usize; 3] {
        let v = v as usize;
        let (a, b) = (self.nx + 1, self.ny + 1);
        [v % a, (v / a) % b, v / (a * b)]
    }

    /// The six tetrahedra of the cube with minimum corner `(i, j, k)`. Each
    /// follows a monotone lattice path from the minimum to the maximum corner,
    /// so every square face is cut along the diagonal through its minimum
    /// corner and neighbouring cubes agree on shared faces.
    pub fn cube_tetrahedra(&self, i: usize, j: usize, k: usize) -> Vec<Face> {
        const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        PERMS
            .iter()
            .map(|perm| {
                let mut p = [i, j, k];
                let mut verts = vec![self.label(p[0], p[1], p[2])];
                for &axis in perm {
                    p[axis] += 1;
                    verts.push(self.label(p[0], p[1], p[2]));
                }
                Face::new(verts).unwrap()
            })
            .collect()
    }

    fn cubes(&self) -> impl Iterator<Item = [usize; 3]> + '_ {
        (0..self.nz).flat_map(move |k| (0..self.ny).flat_map(move |j| (0..self.nx).map(move |i| [i, j, k])))
    }

    fn realize(&self, complex: SimplicialComplex) -> GeometricRealization {
        let coords: BTreeMap<Vertex, Vec<rational::Scalar>> = complex
            .vertices()
            .into_iter()
            .map(|v| (v, self.point(v).iter().map(|&x| rational::from_int(x as i64)).collect()))
            .collect();
        GeometricRealization::new(complex, coords, 3).expect("grid coordinates are complete")
    }
}

/// The box of `nx·ny·nz` unit cubes, each split into six tetrahedra, with
/// unit-grid coordinates.
pub fn grid_ball(nx: usize, ny: usize, nz: usize) -> Result<GeometricRealization, ConstructionError> {
    let dims = GridDims::new(nx, ny, nz)?;
    let tets: Vec<Face> = dims.cubes().flat_map(|[i, j, k]| dims.cube_tetrahedra(i, j, k)).collect();
    Ok(dims.realize(SimplicialComplex::closure_of(tets)))
}

/// A simple path of unit cubes, given by their minimum corners, from the top
/// layer of a box to the bottom layer.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LatticePath(pub Vec<[i64; 3]>);

impl LatticePath {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of unit steps.
    pub fn steps(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// Checks the path against a box:
    /// * consecutive cubes share a face and no cube repeats;
    /// * cubes that are three or more steps apart do not touch, so the
    ///   drilled tube never meets itself;
    /// * every cube keeps one cube of clearance from the side walls;
    /// * the path starts in the top layer, ends in the bottom layer and
    ///   visits neither layer in between.
    pub fn validate(&self, dims: GridDims) -> Result<(), ConstructionError> {
        let p = &self.0;
        if p.len() < 2 {
            return Err(ConstructionError::PathNotTopToBottom);
        }
        let (nx, ny, nz) = (dims.nx as i64, dims.ny as i64, dims.nz as i64);
        for (idx, c) in p.iter().enumerate() {
            if c[0] < 1 || c[0] > nx - 2 || c[1] < 1 || c[1] > ny - 2 || c[2] < 0 || c[2] > nz - 1 {
                return Err(ConstructionError::PathTouchesWall { index: idx });
            }
        }
        let last = p.len() - 1;
        if p[0][2] != nz - 1 || p[last][2] != 0 || p[1..last].iter().any(|c| c[2] == 0 || c[2] == nz - 1) {
            return Err(ConstructionError::PathNotTopToBottom);
        }
        for idx in 1..p.len() {
            let l1: i64 = (0..3).map(|a| (p[idx][a] - p[idx - 1][a]).abs()).sum();
            if l1 != 1 {
                return Err(ConstructionError::PathNotConnected { index: idx });
            }
        }
        let mut seen = HashSet::new();
        for (idx, c) in p.iter().enumerate() {
            if !seen.insert(*c) {
                return Err(ConstructionError::PathSelfIntersects { first: idx, second: idx });
            }
        }
        for a in 0..p.len() {
            for b in a + 3..p.len() {
                let cheb = (0..3).map(|k| (p[a][k] - p[b][k]).abs()).max().unwrap();
                if cheb < 2 {
                    return Err(ConstructionError::PathSelfIntersects { first: a, second: b });
                }
            }
        }
        Ok(())
    }

    /// Parses one point per line, coordinates separated by whitespace or
    /// commas; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, ConstructionError> {
        let mut pts = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let nums: Result<Vec<i64>, _> =
                line.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).map(str::parse).collect();
            match nums {
                Ok(v) if v.len() == 3 => pts.push([v[0], v[1], v[2]]),
                _ => return Err(ConstructionError::BadPathLine { line: n + 1 }),
            }
        }
        Ok(LatticePath(pts))
    }

    pub fn to_text(&self) -> String {
        self.0.iter().map(|c| format!("{} {} {}\n", c[0], c[1], c[2])).collect()
    }
}

/// A straight vertical path through the box column `(x, y)`.
pub fn straight_path(x: i64, y: i64, nz: usize) -> LatticePath {
    LatticePath((0..nz as i64).rev().map(|z| [x, y, z]).collect())
}

/// Box size for [`trefoil_path`].
pub const TREFOIL_BOX: [usize; 3] = [7, 7, 9];

/// A 50-step path in a 7×7×9 box whose closure outside the box is a trefoil
/// (Alexander polynomial `t² − t + 1`). The path follows a 3×3×4 grid of
/// spacing 2, so strands stay one cube apart. The knot type is metadata and
/// is not verified by this crate.
pub fn trefoil_path() -> LatticePath {
    const COARSE: [[i64; 3]; 25] = [
        [1, 1, 3],
        [1, 1, 2],
        [1, 0, 2],
        [2, 0, 2],
        [2, 0, 1],
        [2, 0, 0],
        [1, 0, 0],
        [1, 1, 0],
        [0, 1, 0],
        [0, 2, 0],
        [0, 2, 1],
        [0, 2, 2],
        [1, 2, 2],
        [1, 2, 3],
        [2, 2, 3],
        [2, 1, 3],
        [2, 0, 3],
        [1, 0, 3],
        [0, 0, 3],
        [0, 0, 2],
        [0, 1, 2],
        [0, 1, 1],
        [1, 1, 1],
        [2, 1, 1],
        [2, 1, 0],
    ];
    let fine = |c: [i64; 3]| c.map(|x| 1 + 2 * x);
    let mut pts = vec![{
        let s = fine(COARSE[0]);
        [s[0], s[1], 8]
    }];
    pts.push(fine(COARSE[0]));
    for w in COARSE.windows(2) {
        let (a, b) = (fine(w[0]), fine(w[1]));
        pts.push([(a[0] + b[0]) / 2, (a[1] + b[1]) / 2, (a[2] + b[2]) / 2]);
        pts.push(b);
    }
    let e = *pts.last().unwrap();
    pts.push([e[0], e[1], 0]);
    LatticePath(pts)
}

/// A ball with a tube drilled along a lattice path and the designated
/// spanning edge at the bottom of the tube.
#[derive(Clone, Debug)]
pub struct FurchBall {
    pub realization: GeometricRealization,
    pub spanning_edge: Face,
    pub removed_cubes: usize,
}

/// Drills the cubes of `path` out of the grid ball, except the final cube in
/// the bottom layer. The vertical edge of that cube below the tube, from
/// `(x, y, 1)` down to `(x, y, 0)` at its minimum corner, is the spanning
/// edge. The result is certified: a 3-manifold with the Z2 homology of a
/// point, 2-sphere boundary, and the edge interior with both endpoints on the
/// boundary.
pub fn furch_ball(nx: usize, ny: usize, nz: usize, path: &LatticePath) -> Result<FurchBall, ConstructionError> {
    let dims = GridDims::new(nx, ny, nz)?;
    path.validate(dims)?;
    let drilled: HashSet<[usize; 3]> = path.0[..path.len() - 1].iter().map(|c| c.map(|x| x as usize)).collect();
    let tets: Vec<Face> =
        dims.cubes().filter(|c| !drilled.contains(c)).flat_map(|[i, j, k]| dims.cube_tetrahedra(i, j, k)).collect();
    let complex = SimplicialComplex::closure_of(tets);
    let last = path.0[path.len() - 1].map(|x| x as usize);
    let spanning_edge = Face::new([dims.label(last[0], last[1], 0), dims.label(last[0], last[1], 1)]).unwrap();
    certify_spanning_ball(&complex, &spanning_edge)?;
    Ok(FurchBall { realization: dims.realize(complex), spanning_edge, removed_cubes: drilled.len() })
}

/// Checks that `c` is a homology 3-ball with 2-sphere boundary and that
/// `edge` is an interior edge with both endpoints on the boundary.
pub fn certify_spanning_ball(c: &SimplicialComplex, edge: &Face) -> Result<(), ConstructionError> {
    let not_ball = |why: &str| Err(ConstructionError::NotABall(why.to_string()));
    if !is_3_manifold(c) {
        return not_ball("some vertex link is neither a 2-sphere nor a 2-disc");
    }
    if betti_or_zero(c).values != [1, 0, 0, 0] {
        return not_ball("Betti numbers differ from (1,0,0,0)");
    }
    let boundary = c.boundary();
    if !is_2_sphere(&boundary) {
        return not_ball("boundary is not a 2-sphere");
    }
    if !c.contains(edge) || boundary.contains(edge) {
        return not_ball("spanning edge is not an interior edge");
    }
    if !edge.vertices().iter().all(|&v| boundary.has_vertex(v)) {
        return not_ball("spanning edge endpoints are not on the boundary");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cube() {
        let g = grid_ball(1, 1, 1).unwrap();
        let c = g.complex();
        assert_eq!(c.faces(3).len(), 6);
        assert_eq!(c.num_vertices(), 8);
        assert_eq!(c.euler_characteristic(), 1);
    }

    #[test]
    fn two_cubes() {
        let g = grid_ball(2, 1, 1).unwrap();
        assert_eq!(g.complex().faces(3).len(), 12);
        assert_eq!(g.complex().num_vertices(), 12);
    }

    #[test]
    fn zero_dims_rejected() {
        assert!(matches!(grid_ball(0, 1, 1), Err(ConstructionError::InvalidDimensions(_))));
    }

    #[test]
    fn straight_tube() {
        let path = straight_path(1, 1, 3);
        let f = furch_ball(3, 3, 3, &path).unwrap();
        assert_eq!(f.removed_cubes, 2);
        assert_eq!(f.spanning_edge, Face::new([5, 21]).unwrap());
    }

    #[test]
    fn wall_and_shape_guards() {
        let dims = GridDims::new(3, 3, 3).unwrap();
        assert!(matches!(straight_path(0, 1, 3).validate(dims), Err(ConstructionError::PathTouchesWall { .. })));
        let short = LatticePath(vec![[1, 1, 2], [1, 1, 1]]);
        assert_eq!(short.validate(dims), Err(ConstructionError::PathNotTopToBottom));
        let jump = LatticePath(vec![[1, 1, 2], [1, 1, 0]]);
        assert!(matches!(jump.validate(dims), Err(ConstructionError::PathNotConnected { .. })));
    }

    #[test]
    fn touching_strands_rejected() {
        let dims = GridDims::new(6, 4, 4).unwrap();
        // A U-turn whose arms are adjacent.
        let p =
            LatticePath(vec![[1, 1, 3], [1, 1, 2], [1, 1, 1], [2, 1, 1], [2, 1, 2], [3, 1, 2], [3, 1, 1], [3, 1, 0]]);
        assert!(matches!(p.validate(dims), Err(ConstructionError::PathSelfIntersects { .. })));
    }

    #[test]
    fn trefoil_path_is_valid() {
        let p = trefoil_path();
        assert_eq!(p.steps(), 50);
        let [nx, ny, nz] = TREFOIL_BOX;
        p.validate(GridDims::new(nx, ny, nz).unwrap()).unwrap();
    }

    #[test]
    fn path_text_round_trip() {
        let p = trefoil_path();
        assert_eq!(LatticePath::parse(&p.to_text()).unwrap(), p);
        assert!(LatticePath::parse("1 2\n").is_err());
    }
}
