use proptest::prelude::*;

use tightmorse::algorithms::recognition::is_homology_3_ball;
use tightmorse::algorithms::{
    collapse_onto, collapsible, nonevasive, planar_acyclic_nonevasive, planar_perfect_morse, relative_collapse,
    sweep_nonevasive, sweep_perfect_morse, CollapsibilityResult, NonEvasiveResult, NotCollapsibleReason, Strategy,
    SweepError, SweepOptions,
};
use tightmorse::constructions::catalog::{annulus, dunce_hat, e_realization, random_disc_subcomplex, random_tree};
use tightmorse::constructions::{grid_ball, wedge_thicken};
use tightmorse::homology::betti;
use tightmorse::rational::from_int;
use tightmorse::{Execution, SimplicialComplex};

proptest! {
    #[test]
    fn planar_matchings_are_perfect(seed in 0u64..3000, p in 0.2f64..0.9) {
        let c = random_disc_subcomplex(4, p, seed);
        let m = planar_perfect_morse(&c).unwrap();
        prop_assert!(m.validate().is_ok());
        prop_assert!(m.morse_vector().matches(&betti(&c).unwrap()));
    }

    #[test]
    fn acyclic_planar_complexes_are_non_evasive(seed in 0u64..3000) {
        let c = random_disc_subcomplex(3, 0.6, seed);
        if betti(&c).unwrap().is_acyclic() {
            let cert = planar_acyclic_nonevasive(&c).unwrap();
            prop_assert!(cert.verify(&c));
        }
    }

    #[test]
    fn trees_collapse(n in 1usize..30, seed in 0u64..1000) {
        let t = random_tree(n, seed);
        match collapsible(&t, Strategy::Greedy, 1, seed, Execution::Sequential) {
            CollapsibilityResult::Collapsible(seq) => prop_assert!(seq.verify()),
            other => prop_assert!(false, "{:?}", other),
        }
    }
}

#[test]
fn dunce_hat_is_contractible_but_not_collapsible() {
    let d = dunce_hat();
    assert!(matches!(
        collapsible(&d, Strategy::Backtracking, 100_000, 0, Execution::Sequential),
        CollapsibilityResult::NotCollapsible(NotCollapsibleReason::Exhausted)
    ));
    assert!(matches!(
        collapsible(&d, Strategy::Greedy, 20, 0, Execution::default()),
        CollapsibilityResult::BudgetExceeded { .. }
    ));
    assert!(!matches!(nonevasive(&d, 100_000), NonEvasiveResult::NonEvasive(_)));
}

#[test]
fn greedy_is_schedule_independent() {
    let b = grid_ball(2, 1, 1).unwrap();
    let seq = |exec| match collapsible(b.complex(), Strategy::Greedy, 16, 3, exec) {
        CollapsibilityResult::Collapsible(s) => s.steps,
        other => panic!("{other:?}"),
    };
    assert_eq!(seq(Execution::Sequential), seq(Execution::Parallel));
}

#[test]
fn annulus_collapses_onto_its_core() {
    let a = annulus();
    let core = SimplicialComplex::from_facets([[1u32, 2], [2, 3], [1, 3]]).unwrap();
    let seq = relative_collapse(&a, &core).unwrap();
    assert_eq!(seq.replay().unwrap(), core);
}

#[test]
fn wedge_deletion_collapses_onto_wedge() {
    let t1 = SimplicialComplex::from_facets([[0u32, 1, 2, 3]]).unwrap();
    let t2 = SimplicialComplex::from_facets([[4u32, 5, 6, 7]]).unwrap();
    let w = wedge_thicken(&t1, &t2, [1, 2, 0], [5, 6, 4]).unwrap();
    assert!(is_homology_3_ball(&w.complex));
    let deleted = w.complex.deletion(w.apex).unwrap();
    let seq = collapse_onto(&deleted, &w.wedge).unwrap();
    assert_eq!(seq.replay().unwrap(), w.wedge);
}

#[test]
fn grid_ball_sweeps() {
    let g = grid_ball(2, 2, 2).unwrap();
    let pi = [from_int(100), from_int(10), from_int(1)];
    let r = sweep_perfect_morse(&g, &pi, SweepOptions::default()).unwrap();
    assert_eq!(r.matching.morse_vector().0, vec![1, 0, 0, 0]);
    assert_eq!(r.order.len(), 27);
    let cert = sweep_nonevasive(&g, &pi, SweepOptions::default()).unwrap();
    assert!(cert.verify(g.complex()));
}

#[test]
fn e_sweeps_perfectly() {
    // Upper sets of E are induced subcomplexes, so no triangle boundary can
    // survive without its triangle and E is tight in every generic direction.
    let g = e_realization();
    let pi = [from_int(1), from_int(7)];
    let r = sweep_perfect_morse(&g, &pi, SweepOptions::default()).unwrap();
    assert_eq!(r.matching.morse_vector().0, vec![1, 3, 0]);
    assert!(matches!(sweep_nonevasive(&g, &pi, SweepOptions::default()), Err(SweepError::NotAcyclic(_))));
}
