use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use tightmorse::algorithms::{collapsible, sweep_perfect_morse, Strategy, SweepOptions};
use tightmorse::constructions::catalog::{dunce_hat, grid_disc};
use tightmorse::constructions::{convex_fixture, grid_ball};
use tightmorse::geometry::check_tightness_sampled;
use tightmorse::morse::random_discrete_morse;
use tightmorse::rational::from_int;
use tightmorse::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn tightness_samples(c: &mut Criterion) {
    let g = convex_fixture("stacked(10)").unwrap();
    let mut group = c.benchmark_group("tightness_samples");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, 64), &exec, |b, &exec| {
            b.iter(|| check_tightness_sampled(&g, 64, 0, exec).unwrap())
        });
    }
    group.finish();
}

fn greedy_restarts(c: &mut Criterion) {
    // A disc wedged onto the dunce hat: every restart collapses the disc and
    // then gets stuck, so all restarts run.
    let disc = grid_disc(8).complex().relabel(|v| if v == 0 { 1 } else { v + 100 });
    let d = dunce_hat().union(&disc);
    let mut group = c.benchmark_group("greedy_restarts");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, 256), &exec, |b, &exec| {
            b.iter(|| collapsible(&d, Strategy::Greedy, 256, 0, exec))
        });
    }
    group.finish();
}

fn random_morse_batch(c: &mut Criterion) {
    let g = grid_ball(3, 3, 3).unwrap();
    let complex = std::sync::Arc::new(g.complex().clone());
    let mut group = c.benchmark_group("random_discrete_morse");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, 32), &exec, |b, &exec| {
            b.iter(|| exec.map_indexed(32, |i| random_discrete_morse(complex.clone(), i as u64).morse_vector()))
        });
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let g = grid_ball(4, 4, 4).unwrap();
    let pi = [from_int(1), from_int(10), from_int(100)];
    c.bench_function("sweep_grid_ball_4", |b| {
        b.iter(|| sweep_perfect_morse(&g, &pi, SweepOptions::default()).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = tightness_samples, greedy_restarts, random_morse_batch, sweep
}
criterion_main!(benches);
