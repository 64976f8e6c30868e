//! Exact check that a realization is a linear embedding.
//!
//! Each facet must be affinely independent, and any two facets must meet
//! exactly in the hull of their common vertices. The second condition holds
//! iff no point of `conv σ ∩ conv τ` has positive barycentric weight on a
//! vertex of `σ` outside `τ`; this is decided by a small linear program
//! solved exactly over the rationals. Checking facet pairs suffices because
//! faces of properly intersecting simplices intersect properly.

use num_traits::{One, Signed, Zero};

use super::GeometricRealization;
use crate::complex::Face;
use crate::rational::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EmbeddingViolation {
    #[error("vertices of facet {0} are affinely dependent")]
    Degenerate(Face),
    #[error("facets {0} and {1} intersect outside their common face")]
    BadIntersection(Face, Face),
}

pub fn verify_embedding(g: &GeometricRealization) -> Result<(), EmbeddingViolation> {
    let facets = g.complex().facets();
    for f in &facets {
        if !affinely_independent(g, f) {
            return Err(EmbeddingViolation::Degenerate(f.clone()));
        }
    }
    let boxes: Vec<(Vec<Scalar>, Vec<Scalar>)> = facets.iter().map(|f| bounding_box(g, f)).collect();
    for i in 0..facets.len() {
        for j in i + 1..facets.len() {
            if !boxes_meet(&boxes[i], &boxes[j]) {
                continue;
            }
            if !proper_intersection(g, &facets[i], &facets[j]) {
                return Err(EmbeddingViolation::BadIntersection(facets[i].clone(), facets[j].clone()));
            }
        }
    }
    Ok(())
}

fn bounding_box(g: &GeometricRealization, f: &Face) -> (Vec<Scalar>, Vec<Scalar>) {
    let k = g.ambient_dim();
    let pts: Vec<&[Scalar]> = f.vertices().iter().map(|&v| g.point(v)).collect();
    let lo = (0..k).map(|a| pts.iter().map(|p| p[a].clone()).min().unwrap()).collect();
    let hi = (0..k).map(|a| pts.iter().map(|p| p[a].clone()).max().unwrap()).collect();
    (lo, hi)
}

fn boxes_meet(a: &(Vec<Scalar>, Vec<Scalar>), b: &(Vec<Scalar>, Vec<Scalar>)) -> bool {
    (0..a.0.len()).all(|i| a.0[i] <= b.1[i] && b.0[i] <= a.1[i])
}

fn affinely_independent(g: &GeometricRealization, f: &Face) -> bool {
    let verts = f.vertices();
    let base = g.point(verts[0]);
    let rows: Vec<Vec<Scalar>> =
        verts[1..].iter().map(|&v| g.point(v).iter().zip(base).map(|(a, b)| a - b).collect()).collect();
    rank(rows) == verts.len() - 1
}

fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let mut r = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = &row[c] / &pivot[c];
                for (x, p) in row[c..cols].iter_mut().zip(&pivot[c..cols]) {
                    *x -= &factor * p;
                }
            }
        }
        r += 1;
    }
    r
}

fn proper_intersection(g: &GeometricRealization, s: &Face, t: &Face) -> bool {
    let k = g.ambient_dim();
    let sv = s.vertices();
    let tv = t.vertices();
    let n = sv.len() + tv.len();
    // Σλ_i p_i − Σμ_j q_j = 0 (k rows), Σλ = 1, Σμ = 1.
    let mut a = vec![vec![Scalar::zero(); n]; k + 2];
    for (i, &v) in sv.iter().enumerate() {
        for (axis, x) in g.point(v).iter().enumerate() {
            a[axis][i] = x.clone();
        }
        a[k][i] = Scalar::one();
    }
    for (j, &v) in tv.iter().enumerate() {
        for (axis, x) in g.point(v).iter().enumerate() {
            a[axis][sv.len() + j] = -x.clone();
        }
        a[k + 1][sv.len() + j] = Scalar::one();
    }
    let mut b = vec![Scalar::zero(); k + 2];
    b[k] = Scalar::one();
    b[k + 1] = Scalar::one();
    let mut c = vec![Scalar::zero(); n];
    for (i, v) in sv.iter().enumerate() {
        if !t.contains(*v) {
            c[i] = Scalar::one();
        }
    }
    match maximize(&c, a, b) {
        None => true,
        Some(opt) => opt.is_zero(),
    }
}

/// Maximizes `c·x` subject to `A x = b`, `x ≥ 0` with a two-phase tableau
/// simplex and Bland's rule. Returns `None` when infeasible. The feasible
/// region is assumed bounded.
fn maximize(c: &[Scalar], mut a: Vec<Vec<Scalar>>, mut b: Vec<Scalar>) -> Option<Scalar> {
    let m = a.len();
    let n = c.len();
    for i in 0..m {
        if b[i].is_negative() {
            b[i] = -b[i].clone();
            for x in &mut a[i] {
                *x = -x.clone();
            }
        }
    }
    // Columns: n originals, m artificials, then the right-hand side.
    let width = n + m + 1;
    let mut t: Vec<Vec<Scalar>> = (0..m)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend((0..m).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Phase 1: minimize the artificial sum, i.e. maximize its negation.
    let mut phase1 = vec![Scalar::zero(); n + m];
    for x in phase1.iter_mut().skip(n) {
        *x = -Scalar::one();
    }
    run_simplex(&mut t, &mut basis, &phase1, n + m);
    let infeasibility: Scalar = basis
        .iter()
        .enumerate()
        .filter(|(_, &col)| col >= n)
        .map(|(i, _)| t[i][width - 1].clone())
        .fold(Scalar::zero(), |acc, x| acc + x);
    if !infeasibility.is_zero() {
        return None;
    }
    // Drive remaining (zero-valued) artificials out of the basis.
    for i in 0..m {
        if basis[i] >= n {
            if let Some(col) = (0..n).find(|&j| !t[i][j].is_zero()) {
                pivot(&mut t, &mut basis, i, col);
            }
        }
    }
    let mut phase2 = c.to_vec();
    phase2.extend((0..m).map(|_| Scalar::zero()));
    // Artificial columns may not re-enter.
    run_simplex(&mut t, &mut basis, &phase2, n);
    Some(
        basis
            .iter()
            .enumerate()
            .filter(|(_, &col)| col < n)
            .map(|(i, &col)| &c[col] * &t[i][width - 1])
            .fold(Scalar::zero(), |acc, x| acc + x),
    )
}

fn pivot(t: &mut [Vec<Scalar>], basis: &mut [usize], row: usize, col: usize) {
    let p = t[row][col].clone();
    for x in t[row].iter_mut() {
        *x = &*x / &p;
    }
    let pivot_row = t[row].clone();
    for (i, r) in t.iter_mut().enumerate() {
        if i != row && !r[col].is_zero() {
            let f = r[col].clone();
            for (x, y) in r.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
    }
    basis[row] = col;
}

/// Maximizes `cost · x` over columns `0..enter_limit`.
fn run_simplex(t: &mut [Vec<Scalar>], basis: &mut [usize], cost: &[Scalar], enter_limit: usize) {
    let m = t.len();
    let rhs = t[0].len() - 1;
    loop {
        // Reduced cost of column j: cost_j − Σ cost_{basis_i} t[i][j].
        let entering = (0..enter_limit).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let z: Scalar = (0..m).map(|i| &cost[basis[i]] * &t[i][j]).fold(Scalar::zero(), |a, x| a + x);
            (&cost[j] - z).is_positive()
        });
        let Some(col) = entering else { return };
        let mut best: Option<(usize, Scalar)> = None;
        for i in 0..m {
            if t[i][col].is_positive() {
                let ratio = &t[i][rhs] / &t[i][col];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && basis[i] < basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
        }
        let Some((row, _)) = best else { return };
        pivot(t, basis, row, col);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;

    fn realize(facets: &[&[u32]], pts: &[(u32, Vec<i64>)], k: usize) -> GeometricRealization {
        let c = SimplicialComplex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap();
        GeometricRealization::from_integer_coords(c, pts.iter().cloned(), k).unwrap()
    }

    #[test]
    fn two_triangles_sharing_an_edge() {
        let g = realize(
            &[&[1, 2, 3], &[2, 3, 4]],
            &[(1, vec![0, 0]), (2, vec![2, 0]), (3, vec![0, 2]), (4, vec![2, 2])],
            2,
        );
        assert!(verify_embedding(&g).is_ok());
    }

    #[test]
    fn folded_triangles_overlap() {
        let g = realize(
            &[&[1, 2, 3], &[2, 3, 4]],
            &[(1, vec![0, 0]), (2, vec![2, 0]), (3, vec![0, 2]), (4, vec![1, 0])],
            2,
        );
        assert!(matches!(verify_embedding(&g), Err(EmbeddingViolation::BadIntersection(..))));
    }

    #[test]
    fn crossing_edges() {
        let g = realize(&[&[1, 2], &[3, 4]], &[(1, vec![0, 0]), (2, vec![2, 2]), (3, vec![0, 2]), (4, vec![2, 0])], 2);
        assert!(verify_embedding(&g).is_err());
        let g = realize(&[&[1, 2], &[3, 4]], &[(1, vec![0, 0]), (2, vec![2, 0]), (3, vec![0, 2]), (4, vec![2, 2])], 2);
        assert!(verify_embedding(&g).is_ok());
    }

    #[test]
    fn flat_tetrahedron_is_degenerate() {
        let g = realize(
            &[&[1, 2, 3, 4]],
            &[(1, vec![0, 0, 0]), (2, vec![1, 0, 0]), (3, vec![0, 1, 0]), (4, vec![1, 1, 0])],
            3,
        );
        assert!(matches!(verify_embedding(&g), Err(EmbeddingViolation::Degenerate(_))));
    }

    #[test]
    fn vertex_inside_a_triangle() {
        let g = realize(&[&[1, 2, 3], &[4]], &[(1, vec![0, 0]), (2, vec![3, 0]), (3, vec![0, 3]), (4, vec![1, 1])], 2);
        assert!(verify_embedding(&g).is_err());
    }
}
