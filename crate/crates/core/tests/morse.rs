use proptest::prelude::*;

use tightmorse::constructions::catalog::{corpus, random_complex};
use tightmorse::homology::betti;
use tightmorse::morse::{from_collapse_sequence, lift_matching_over_cone, random_discrete_morse, MorseError};
use tightmorse::{Face, MorseMatching, SimplicialComplex};

proptest! {
    #[test]
    fn random_matchings_satisfy_morse_inequalities(n in 4usize..8, k in 1usize..8, dim in 1usize..4, seed in 0u64..10_000) {
        let c = random_complex(n, k, dim.min(n - 1), seed);
        let m = random_discrete_morse(c.clone(), seed);
        prop_assert!(m.validate().is_ok());
        let b = betti(&c).unwrap();
        prop_assert!(m.morse_vector().dominates(&b));
        prop_assert_eq!(m.morse_vector().euler_characteristic(), c.euler_characteristic());
    }

    #[test]
    fn discrete_morse_function_respects_pairs(seed in 0u64..2000) {
        let c = random_complex(6, 4, 2, seed);
        let m = random_discrete_morse(c, seed);
        let f: std::collections::HashMap<Face, i64> = m.discrete_morse_function().unwrap().into_iter().collect();
        for (a, b) in m.pairs() {
            prop_assert!(f[&a] >= f[&b]);
        }
    }

    #[test]
    fn lifting_over_a_cone_adds_no_critical_vertex(seed in 0u64..2000) {
        let link = random_complex(5, 3, 2, seed);
        let m = random_discrete_morse(link.clone(), seed);
        let lifted = lift_matching_over_cone(99, &link, &m).unwrap();
        prop_assert!(lifted.validate().is_ok());
        let apex_critical = lifted.critical_faces().into_iter().filter(|f| f.contains(99)).count();
        prop_assert_eq!(apex_critical + 1, m.critical_faces().len());
    }
}

#[test]
fn corpus_runs_are_deterministic() {
    for (_, c) in corpus().into_iter().take(20) {
        assert_eq!(random_discrete_morse(c.clone(), 7).pairs(), random_discrete_morse(c, 7).pairs());
    }
}

#[test]
fn collapse_sequences_must_be_free() {
    let tri = SimplicialComplex::from_facets([[1u32, 2, 3]]).unwrap();
    let f = |v: &[u32]| Face::new(v.iter().copied()).unwrap();
    let good = [(f(&[1, 2]), f(&[1, 2, 3])), (f(&[1]), f(&[1, 3])), (f(&[2]), f(&[2, 3]))];
    let m = from_collapse_sequence(tri.clone(), &good).unwrap();
    assert_eq!(m.morse_vector().0, vec![1, 0, 0]);
    let bad = [(f(&[1]), f(&[1, 2]))];
    assert!(matches!(from_collapse_sequence(tri, &bad), Err(MorseError::NotFreeAtStep { step: 0, .. })));
}

#[test]
fn cyclic_matching_is_rejected() {
    let circle = SimplicialComplex::from_facets([[1u32, 2], [2, 3], [1, 3]]).unwrap();
    let f = |v: &[u32]| Face::new(v.iter().copied()).unwrap();
    let m = MorseMatching::new(circle, [(f(&[1]), f(&[1, 2])), (f(&[2]), f(&[2, 3])), (f(&[3]), f(&[1, 3]))]).unwrap();
    assert!(matches!(m.validate(), Err(MorseError::CycleFound(_))));
}
