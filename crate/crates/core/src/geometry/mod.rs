//! Geometric realizations, height orders and halfspace restrictions.
//!
//! Heights are computed exactly over the rationals. The restriction of a
//! realization to an open halfspace `⟨π, x⟩ > t` is modelled by the full
//! subcomplex on the vertices above `t`, which is a deformation retract of
//! the restriction for a linear embedding. Everything downstream of the
//! height sort is therefore combinatorial.

mod embedding;
mod tightness;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::complex::{SimplicialComplex, Vertex};
use crate::rational::{self, Scalar};

pub use embedding::{verify_embedding, EmbeddingViolation};
pub use tightness::{
    check_tightness_sampled, is_pi_tight, verify_lemma_betti_recursion, LemmaCheck, SampleFailure, SampledTightness,
    TightnessFailure, TightnessReport,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("vertex {0} has no coordinates")]
    MissingCoordinates(Vertex),
    #[error("vertex {vertex} has {got} coordinates, expected {expected}")]
    CoordinateCount { vertex: Vertex, expected: usize, got: usize },
    #[error("ambient dimension must be at least 1")]
    ZeroAmbient,
    #[error("a {face_dim}-face cannot be realized in R^{ambient}")]
    FaceTooLarge { face_dim: usize, ambient: usize },
    #[error("direction has {got} components, expected {expected}")]
    DirectionLength { expected: usize, got: usize },
    #[error("direction is zero")]
    ZeroDirection,
    #[error("direction is not generic; tied vertex pairs: {ties:?}")]
    DegenerateDirection { ties: Vec<(Vertex, Vertex)> },
    #[error("threshold equals the height of vertex {0}")]
    ThresholdHitsVertex(Vertex),
    #[error("realization is not tight in the given direction ({failures} failing checks)")]
    NotTight { failures: usize },
    #[error("complex is empty")]
    EmptyComplex,
}

/// A complex with a coordinate vector in `R^k` for every vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct GeometricRealization {
    complex: SimplicialComplex,
    coords: BTreeMap<Vertex, Vec<Scalar>>,
    ambient: usize,
}

impl GeometricRealization {
    pub fn new(
        complex: SimplicialComplex,
        coords: BTreeMap<Vertex, Vec<Scalar>>,
        ambient: usize,
    ) -> Result<Self, GeometryError> {
        if ambient == 0 {
            return Err(GeometryError::ZeroAmbient);
        }
        for v in complex.vertices() {
            let p = coords.get(&v).ok_or(GeometryError::MissingCoordinates(v))?;
            if p.len() != ambient {
                return Err(GeometryError::CoordinateCount { vertex: v, expected: ambient, got: p.len() });
            }
        }
        if complex.dim() > ambient as isize {
            return Err(GeometryError::FaceTooLarge { face_dim: complex.dim() as usize, ambient });
        }
        let coords = coords.into_iter().filter(|(v, _)| complex.has_vertex(*v)).collect();
        Ok(GeometricRealization { complex, coords, ambient })
    }

    /// Integer coordinates, for fixtures.
    pub fn from_integer_coords(
        complex: SimplicialComplex,
        coords: impl IntoIterator<Item = (Vertex, Vec<i64>)>,
        ambient: usize,
    ) -> Result<Self, GeometryError> {
        let coords = coords.into_iter().map(|(v, p)| (v, p.into_iter().map(rational::from_int).collect())).collect();
        Self::new(complex, coords, ambient)
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn coords(&self) -> &BTreeMap<Vertex, Vec<Scalar>> {
        &self.coords
    }

    pub fn point(&self, v: Vertex) -> &[Scalar] {
        &self.coords[&v]
    }

    /// The realization of the full subcomplex on `vertices`.
    pub fn restrict(&self, vertices: &BTreeSet<Vertex>) -> GeometricRealization {
        let complex = self.complex.induced(vertices);
        let coords = self.coords.iter().filter(|(v, _)| vertices.contains(v)).map(|(v, p)| (*v, p.clone())).collect();
        GeometricRealization { complex, coords, ambient: self.ambient }
    }

    /// Same coordinates, different (sub)complex.
    pub fn with_complex(&self, complex: SimplicialComplex) -> Result<GeometricRealization, GeometryError> {
        GeometricRealization::new(complex, self.coords.clone(), self.ambient)
    }

    fn check_direction(&self, direction: &[Scalar]) -> Result<(), GeometryError> {
        if direction.len() != self.ambient {
            return Err(GeometryError::DirectionLength { expected: self.ambient, got: direction.len() });
        }
        if direction.iter().all(Zero::is_zero) {
            return Err(GeometryError::ZeroDirection);
        }
        Ok(())
    }

    /// `(vertex, ⟨π, p_v⟩)` for every vertex, by label.
    pub fn heights(&self, direction: &[Scalar]) -> Result<Vec<(Vertex, Scalar)>, GeometryError> {
        self.check_direction(direction)?;
        Ok(self.coords.iter().map(|(v, p)| (*v, rational::dot(direction, p))).collect())
    }
}

/// Vertices in ascending order of height, all heights distinct.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepOrder {
    pub direction: Vec<Scalar>,
    pub vertices: Vec<Vertex>,
    pub heights: Vec<Scalar>,
}

impl SweepOrder {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn top(&self) -> Option<Vertex> {
        self.vertices.last().copied()
    }

    /// The `count` highest vertices.
    pub fn upper_set(&self, count: usize) -> BTreeSet<Vertex> {
        self.vertices[self.len() - count..].iter().copied().collect()
    }

    /// The `count` lowest vertices.
    pub fn lower_set(&self, count: usize) -> BTreeSet<Vertex> {
        self.vertices[..count].iter().copied().collect()
    }

    /// Midpoint between the heights of positions `i − 1` and `i`.
    pub fn threshold_below(&self, i: usize) -> Scalar {
        (&self.heights[i - 1] + &self.heights[i]) / rational::from_int(2)
    }
}

/// Sorts the vertices by height; any tie is reported.
pub fn sweep_order(g: &GeometricRealization, direction: &[Scalar]) -> Result<SweepOrder, GeometryError> {
    let mut hs = g.heights(direction)?;
    hs.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
    let mut ties = Vec::new();
    let mut i = 0;
    while i < hs.len() {
        let mut j = i + 1;
        while j < hs.len() && hs[j].1 == hs[i].1 {
            j += 1;
        }
        for a in i..j {
            for b in a + 1..j {
                ties.push((hs[a].0, hs[b].0));
            }
        }
        i = j;
    }
    if !ties.is_empty() {
        return Err(GeometryError::DegenerateDirection { ties });
    }
    let (vertices, heights) = hs.into_iter().unzip();
    Ok(SweepOrder { direction: direction.to_vec(), vertices, heights })
}

/// Full subcomplex on the vertices strictly above `threshold`.
pub fn upper_subcomplex(
    g: &GeometricRealization,
    direction: &[Scalar],
    threshold: &Scalar,
) -> Result<SimplicialComplex, GeometryError> {
    let mut above = BTreeSet::new();
    for (v, h) in g.heights(direction)? {
        match h.cmp(threshold) {
            std::cmp::Ordering::Equal => return Err(GeometryError::ThresholdHitsVertex(v)),
            std::cmp::Ordering::Greater => {
                above.insert(v);
            }
            std::cmp::Ordering::Less => {}
        }
    }
    Ok(g.complex().induced(&above))
}

/// Adds deterministic noise to `direction` until no two vertices share a
/// height. The noise moves every height by at most about `1e-9` times the
/// height spread (or times `|π|∞` when all heights coincide).
pub fn perturb_direction(
    g: &GeometricRealization,
    direction: &[Scalar],
    seed: u64,
) -> Result<Vec<Scalar>, GeometryError> {
    g.check_direction(direction)?;
    let hs: Vec<Scalar> = g.heights(direction)?.into_iter().map(|(_, h)| h).collect();
    let spread = match (hs.iter().max(), hs.iter().min()) {
        (Some(a), Some(b)) => a - b,
        _ => Scalar::zero(),
    };
    let base = if spread.is_zero() { rational::max_abs(direction) } else { spread };
    let radius = g
        .coords
        .values()
        .map(|p| rational::max_abs(p))
        .max()
        .filter(|r| !r.is_zero())
        .unwrap_or_else(|| rational::from_int(1));
    let scale = base * rational::ratio(1, 1_000_000_000) / (radius * rational::from_int(g.ambient as i64));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_ties = Vec::new();
    for _ in 0..32 {
        let candidate: Vec<Scalar> =
            direction.iter().map(|x| x + &scale * rational::from_f64(rng.random_range(-1.0..1.0))).collect();
        match sweep_order(g, &candidate) {
            Ok(_) => return Ok(candidate),
            Err(GeometryError::DegenerateDirection { ties }) => last_ties = ties,
            Err(e) => return Err(e),
        }
    }
    Err(GeometryError::DegenerateDirection { ties: last_ties })
}

/// Generic direction: `direction` itself when it is already generic,
/// otherwise a seeded perturbation of it.
pub fn generic_sweep(g: &GeometricRealization, direction: &[Scalar], seed: u64) -> Result<SweepOrder, GeometryError> {
    match sweep_order(g, direction) {
        Err(GeometryError::DegenerateDirection { .. }) => sweep_order(g, &perturb_direction(g, direction, seed)?),
        other => other,
    }
}

/// A random direction with independent standard normal components.
pub fn random_direction(ambient: usize, rng: &mut impl Rng) -> Vec<Scalar> {
    loop {
        let d: Vec<f64> = (0..ambient).map(|_| rng.sample(rand_distr::StandardNormal)).collect();
        if d.iter().any(|x: &f64| x.abs() > 1e-12) {
            return d.into_iter().map(rational::from_f64).collect();
        }
    }
}

/// Direction with the given float components, exactly.
pub fn direction_from_f64(components: &[f64]) -> Vec<Scalar> {
    components.iter().copied().map(rational::from_f64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::from_int;

    fn simplex3() -> GeometricRealization {
        let c = SimplicialComplex::from_facets([[0u32, 1, 2, 3]]).unwrap();
        GeometricRealization::from_integer_coords(
            c,
            [(0, vec![0, 0, 0]), (1, vec![1, 0, 0]), (2, vec![0, 1, 0]), (3, vec![0, 0, 1])],
            3,
        )
        .unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| from_int(x)).collect()
    }

    #[test]
    fn sweep_orders() {
        let g = simplex3();
        match sweep_order(&g, &ints(&[1, 1, 1])) {
            Err(GeometryError::DegenerateDirection { ties }) => assert_eq!(ties.len(), 3),
            other => panic!("{other:?}"),
        }
        let order = sweep_order(&g, &ints(&[1, 2, 4])).unwrap();
        assert_eq!(order.vertices, vec![0, 1, 2, 3]);
        assert_eq!(sweep_order(&g, &ints(&[0, 0, 0])).unwrap_err(), GeometryError::ZeroDirection);
    }

    #[test]
    fn planar_complex_is_degenerate_vertically() {
        let c = SimplicialComplex::from_facets([[1u32, 2, 3]]).unwrap();
        let g = GeometricRealization::from_integer_coords(
            c,
            [(1, vec![0, 0, 0]), (2, vec![1, 0, 0]), (3, vec![0, 1, 0])],
            3,
        )
        .unwrap();
        assert!(matches!(sweep_order(&g, &ints(&[0, 0, 1])), Err(GeometryError::DegenerateDirection { .. })));
        let p = perturb_direction(&g, &ints(&[0, 0, 1]), 7).unwrap();
        assert!(sweep_order(&g, &p).is_ok());
        assert_eq!(p, perturb_direction(&g, &ints(&[0, 0, 1]), 7).unwrap());
    }

    #[test]
    fn upper_subcomplexes() {
        let g = simplex3();
        let pi = ints(&[1, 2, 4]);
        let all = upper_subcomplex(&g, &pi, &from_int(-1)).unwrap();
        assert_eq!(&all, g.complex());
        let top = upper_subcomplex(&g, &pi, &rational::ratio(7, 2)).unwrap();
        assert_eq!(top.vertices(), vec![3]);
        let between = upper_subcomplex(&g, &pi, &from_int(3)).unwrap();
        assert_eq!(between.vertices(), vec![3]);
        assert_eq!(upper_subcomplex(&g, &pi, &from_int(2)), Err(GeometryError::ThresholdHitsVertex(2)));
    }

    #[test]
    fn construction_errors() {
        let c = SimplicialComplex::from_facets([[1u32, 2]]).unwrap();
        assert_eq!(
            GeometricRealization::from_integer_coords(c.clone(), [(1, vec![0])], 1).unwrap_err(),
            GeometryError::MissingCoordinates(2)
        );
        let tet = SimplicialComplex::from_facets([[1u32, 2, 3, 4]]).unwrap();
        assert!(matches!(
            GeometricRealization::from_integer_coords(
                tet,
                [(1, vec![0, 0]), (2, vec![1, 0]), (3, vec![0, 1]), (4, vec![1, 1])],
                2
            ),
            Err(GeometryError::FaceTooLarge { .. })
        ));
    }
}
