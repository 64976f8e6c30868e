use tightmorse::constructions::catalog::grid_disc;
use tightmorse::constructions::{convex_fixture, convex_spheres, grid_ball};
use tightmorse::geometry::{check_tightness_sampled, is_pi_tight, verify_embedding, GeometricRealization};
use tightmorse::io::{parse_geom, write_geom};
use tightmorse::rational::from_int;
use tightmorse::{Execution, SimplicialComplex};

#[test]
fn convex_fixtures_are_tight_in_sampled_directions() {
    for name in ["simplex3", "stacked(4)", "stacked_random(7,2)", "schlegel_cross4", "octahedron_boundary"] {
        let g = convex_fixture(name).unwrap();
        let sampled = check_tightness_sampled(&g, 16, 5, Execution::default()).unwrap();
        assert_eq!(sampled.tight, 16, "{name}");
    }
    for (name, g) in convex_spheres() {
        assert_eq!(check_tightness_sampled(&g, 16, 5, Execution::default()).unwrap().tight, 16, "{name}");
    }
}

#[test]
fn sampling_is_schedule_independent() {
    let v = SimplicialComplex::from_facets([[1u32, 2], [2, 3]]).unwrap();
    let g =
        GeometricRealization::from_integer_coords(v, [(1, vec![0, 2]), (2, vec![1, 0]), (3, vec![2, 2])], 2).unwrap();
    let a = check_tightness_sampled(&g, 24, 9, Execution::Sequential).unwrap();
    let b = check_tightness_sampled(&g, 24, 9, Execution::Parallel).unwrap();
    assert_eq!(a.tight, b.tight);
    assert_eq!(a.failures.len(), b.failures.len());
    assert!(a.tight > 0 && a.tight < 24);
}

#[test]
fn grid_balls_are_tight() {
    let g = grid_ball(2, 2, 2).unwrap();
    let pi = [from_int(1), from_int(10), from_int(100)];
    assert!(is_pi_tight(&g, &pi).unwrap().tight);
    assert!(verify_embedding(&g).is_ok());
}

#[test]
fn crossing_edges_are_not_an_embedding() {
    let c = SimplicialComplex::from_facets([[1u32, 2], [3, 4]]).unwrap();
    let g = GeometricRealization::from_integer_coords(
        c,
        [(1, vec![0, 0]), (2, vec![2, 2]), (3, vec![0, 2]), (4, vec![2, 0])],
        2,
    )
    .unwrap();
    assert!(verify_embedding(&g).is_err());
    assert!(verify_embedding(&grid_disc(2)).is_ok());
}

#[test]
fn geometry_files_round_trip() {
    for name in ["stacked(3)", "bipyramid(5)"] {
        let g = convex_fixture(name).unwrap();
        assert_eq!(parse_geom(&write_geom(&g)).unwrap(), g);
    }
}
