use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{generic_sweep, random_direction, sweep_order, GeometricRealization, GeometryError, SweepOrder};
use crate::complex::SimplicialComplex;
use crate::homology::{betti_or_zero, boundary_columns, cycle_basis, BitVec, EchelonBasis};
use crate::par::{derive_seed, Execution};
use crate::rational::{self, Scalar};

/// One failed injectivity check: the full subcomplex on the
/// `upper_vertices` highest vertices loses `kernel_dim` classes in `H_dim`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TightnessFailure {
    pub upper_vertices: usize,
    pub threshold: String,
    pub dim: usize,
    pub kernel_dim: usize,
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct TightnessReport {
    pub tight: bool,
    pub checks: usize,
    pub failures: Vec<TightnessFailure>,
}

/// Precomputed boundary spaces of the ambient complex.
struct InjectivityOracle<'a> {
    complex: &'a SimplicialComplex,
    boundaries: Vec<EchelonBasis>,
}

impl<'a> InjectivityOracle<'a> {
    fn new(complex: &'a SimplicialComplex) -> Self {
        let top = complex.dim().max(0) as usize;
        let boundaries = (0..=top)
            .map(|i| {
                let mut b = EchelonBasis::new();
                if i < top {
                    for col in boundary_columns(complex, i + 1) {
                        b.insert(col);
                    }
                }
                b
            })
            .collect();
        InjectivityOracle { complex, boundaries }
    }

    /// Dimension of the kernel of `H_i(sub) → H_i(complex)`.
    fn kernel_dim(&self, sub: &SimplicialComplex, i: usize) -> usize {
        if i as isize > sub.dim() {
            return 0;
        }
        let mut basis = self.boundaries[i].clone();
        let before = basis.rank();
        let n = self.complex.faces(i).len();
        let sub_faces = sub.faces(i);
        let cycles = cycle_basis(sub, i);
        let z = cycles.len();
        for cycle in cycles {
            let mut v = BitVec::zeros(n);
            for j in cycle.ones() {
                v.set(self.complex.index_of(&sub_faces[j]).expect("subcomplex"));
            }
            basis.insert(v);
        }
        let image = basis.rank() - before;
        let sub_boundaries = if (i as isize) < sub.dim() {
            let mut b = EchelonBasis::new();
            for col in boundary_columns(sub, i + 1) {
                b.insert(col);
            }
            b.rank()
        } else {
            0
        };
        z - sub_boundaries - image
    }
}

fn tightness_for_order(g: &GeometricRealization, order: &SweepOrder) -> TightnessReport {
    let c = g.complex();
    let oracle = InjectivityOracle::new(c);
    let n = order.len();
    let top = c.dim().max(0) as usize;
    let mut failures = Vec::new();
    let mut checks = 0;
    for count in 1..n {
        let upper = c.induced(&order.upper_set(count));
        for i in 0..=top {
            checks += 1;
            let k = oracle.kernel_dim(&upper, i);
            if k > 0 {
                failures.push(TightnessFailure {
                    upper_vertices: count,
                    threshold: rational::format_scalar(&order.threshold_below(n - count)),
                    dim: i,
                    kernel_dim: k,
                });
            }
        }
    }
    TightnessReport { tight: failures.is_empty(), checks, failures }
}

/// Checks that `H_i(h⁺ ∩ |C|) → H_i(|C|)` is injective for every hyperplane
/// `h ⟂ π` between consecutive vertex heights and every `i ≤ dim C`. Only
/// the `+π` side is examined.
pub fn is_pi_tight(g: &GeometricRealization, direction: &[Scalar]) -> Result<TightnessReport, GeometryError> {
    let order = sweep_order(g, direction)?;
    Ok(tightness_for_order(g, &order))
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct SampleFailure {
    pub index: usize,
    pub direction: Vec<f64>,
    pub report: TightnessReport,
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct SampledTightness {
    pub samples: usize,
    pub tight: usize,
    pub fraction: f64,
    pub failures: Vec<SampleFailure>,
}

/// Runs [`is_pi_tight`] on `samples` random directions (normal deviates,
/// perturbed to general position when needed). Sample `i` depends only on
/// `(seed, i)`.
pub fn check_tightness_sampled(
    g: &GeometricRealization,
    samples: usize,
    seed: u64,
    exec: Execution,
) -> Result<SampledTightness, GeometryError> {
    let results = exec.map_indexed(samples, |i| {
        let s = derive_seed(seed, i as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let direction = random_direction(g.ambient_dim(), &mut rng);
        let order = generic_sweep(g, &direction, s)?;
        let report = tightness_for_order(g, &order);
        Ok::<_, GeometryError>((order.direction, report))
    });
    let mut failures = Vec::new();
    let mut tight = 0;
    for (index, r) in results.into_iter().enumerate() {
        let (direction, report) = r?;
        if report.tight {
            tight += 1;
        } else {
            failures.push(SampleFailure { index, direction: direction.iter().map(rational::to_f64).collect(), report });
        }
    }
    Ok(SampledTightness {
        samples,
        tight,
        fraction: if samples == 0 { 1.0 } else { tight as f64 / samples as f64 },
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub enum LemmaCheck {
    /// The identity held in every dimension checked.
    Holds { dims_checked: usize },
    /// First dimension where `lhs ≠ rhs`.
    Violated { i: usize, lhs: i64, rhs: i64 },
}

/// With `v` the lowest vertex, checks
/// `β_i(link(v)) + β_{i+1}(C − v) − δ_{i0} = β_{i+1}(C)` for all `i ≥ 0`
/// (non-reduced Z2 Betti numbers). π-tightness concerns the halfspaces above
/// each height, and `C − v` is the one just above `v`, so the identity is
/// stated at the bottom of the order. When `v` is isolated the link is empty
/// and the identity degenerates to `β_0(C) = β_0(C − v) + 1`,
/// `β_j(C) = β_j(C − v)` for `j ≥ 1`, which is what is checked instead.
pub fn verify_lemma_betti_recursion(
    g: &GeometricRealization,
    direction: &[Scalar],
) -> Result<LemmaCheck, GeometryError> {
    let c = g.complex();
    if c.is_empty() {
        return Err(GeometryError::EmptyComplex);
    }
    let report = is_pi_tight(g, direction)?;
    if !report.tight {
        return Err(GeometryError::NotTight { failures: report.failures.len() });
    }
    let order = sweep_order(g, direction)?;
    Ok(betti_recursion_at(c, order.vertices[0]))
}

pub(crate) fn betti_recursion_at(c: &SimplicialComplex, v: crate::Vertex) -> LemmaCheck {
    let link = c.link(v).expect("vertex of complex");
    let rest = c.deletion(v).expect("vertex of complex");
    let b_c = betti_or_zero(c);
    let b_rest = betti_or_zero(&rest);
    let top = c.dim().max(0) as usize;
    if link.is_empty() {
        for j in 0..=top {
            let lhs = b_rest.get(j) as i64 + i64::from(j == 0);
            let rhs = b_c.get(j) as i64;
            if lhs != rhs {
                return LemmaCheck::Violated { i: j, lhs, rhs };
            }
        }
        return LemmaCheck::Holds { dims_checked: top + 1 };
    }
    let b_link = betti_or_zero(&link);
    for i in 0..top {
        let lhs = b_link.get(i) as i64 + b_rest.get(i + 1) as i64 - i64::from(i == 0);
        let rhs = b_c.get(i + 1) as i64;
        if lhs != rhs {
            return LemmaCheck::Violated { i, lhs, rhs };
        }
    }
    LemmaCheck::Holds { dims_checked: top }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::inclusion_induced_injective;
    use crate::rational::from_int;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| from_int(x)).collect()
    }

    fn v_path() -> GeometricRealization {
        let c = SimplicialComplex::from_facets([[1u32, 2], [2, 3]]).unwrap();
        GeometricRealization::from_integer_coords(c, [(1, vec![0, 2]), (2, vec![1, 0]), (3, vec![2, 2])], 2).unwrap()
    }

    #[test]
    fn v_path_fails_upwards() {
        let g = v_path();
        // Perturb so a and c are not tied.
        let pi = vec![rational::ratio(1, 1000), from_int(1)];
        let report = is_pi_tight(&g, &pi).unwrap();
        assert!(!report.tight);
        assert_eq!(report.failures.len(), 1);
        let f = &report.failures[0];
        assert_eq!((f.upper_vertices, f.dim, f.kernel_dim), (2, 0, 1));
        // Downwards the path is tight.
        let down = vec![rational::ratio(1, 1000), from_int(-1)];
        assert!(is_pi_tight(&g, &down).unwrap().tight);
    }

    #[test]
    fn oracle_matches_direct_injectivity() {
        let g = v_path();
        let c = g.complex();
        let oracle = InjectivityOracle::new(c);
        for keep in [vec![1u32, 3], vec![1], vec![2, 3], vec![1, 2, 3]] {
            let sub = c.induced(&keep.into_iter().collect());
            for i in 0..2 {
                assert_eq!(oracle.kernel_dim(&sub, i) == 0, inclusion_induced_injective(&sub, c, i).unwrap());
            }
        }
    }

    #[test]
    fn lemma_requires_tightness() {
        let g = v_path();
        let pi = vec![rational::ratio(1, 1000), from_int(1)];
        assert!(matches!(verify_lemma_betti_recursion(&g, &pi), Err(GeometryError::NotTight { .. })));
    }

    #[test]
    fn lemma_on_simplex() {
        let c = SimplicialComplex::from_facets([[0u32, 1, 2, 3]]).unwrap();
        let g = GeometricRealization::from_integer_coords(
            c,
            [(0, vec![0, 0, 0]), (1, vec![1, 0, 0]), (2, vec![0, 1, 0]), (3, vec![0, 0, 1])],
            3,
        )
        .unwrap();
        assert_eq!(verify_lemma_betti_recursion(&g, &ints(&[1, 2, 4])).unwrap(), LemmaCheck::Holds { dims_checked: 3 });
    }

    #[test]
    fn lemma_with_isolated_bottom_vertex() {
        let c = SimplicialComplex::from_facets([vec![1u32, 2], vec![3]]).unwrap();
        let g = GeometricRealization::from_integer_coords(c, [(1, vec![0]), (2, vec![1]), (3, vec![5])], 1).unwrap();
        assert!(matches!(verify_lemma_betti_recursion(&g, &ints(&[-1])).unwrap(), LemmaCheck::Holds { .. }));
        assert!(matches!(verify_lemma_betti_recursion(&g, &ints(&[1])).unwrap(), LemmaCheck::Holds { .. }));
    }

    #[test]
    fn single_point_is_tight_for_every_sample() {
        let c = SimplicialComplex::from_facets([[4u32]]).unwrap();
        let g = GeometricRealization::from_integer_coords(c, [(4, vec![1, 1, 1])], 3).unwrap();
        let s = check_tightness_sampled(&g, 10, 0, Execution::Sequential).unwrap();
        assert_eq!(s.fraction, 1.0);
    }
}
