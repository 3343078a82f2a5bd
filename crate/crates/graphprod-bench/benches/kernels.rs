use criterion::{Criterion, criterion_group, criterion_main};
use std::hint::black_box;
use graphprod::enumeration::{Ball, BallSpec, left_divisors, p2_decompose};
use graphprod::fixtures;
use graphprod::group_function::{GroupFunction, convolve};
use graphprod::Complex64;
use graphprod::rd::{AlsOptions, LevelMode, MultiplicationTensor, level_set};
use graphprod_bench::deterministic_word;

fn bench_reduce(c: &mut Criterion) {
    let mut group = c.benchmark_group("reduce");
    for (name, graph, _) in fixtures::standard() {
        let words: Vec<_> = (0..64)
            .map(|i| deterministic_word(&graph, 24, i))
            .collect();
        group.bench_function(name, |b| {
            b.iter(|| {
                let mut total = 0usize;
                for w in &words {
                    total += graphprod_bench::reduce_word(&graph, black_box(w));
                }
                total
            })
        });
    }
    group.finish();
}

fn bench_sphere(c: &mut Criterion) {
    let mut group = c.benchmark_group("sphere");
    group.sample_size(20);
    let graph = fixtures::path_integers();
    group.bench_function("path-int lambda<=6 ell<=4", |b| {
        b.iter(|| Ball::build(&graph, BallSpec::new(6, 4)).element_count())
    });
    let graph = fixtures::path_z2();
    group.bench_function("path-z2 lambda<=10", |b| {
        let spec = BallSpec::saturating(&graph, 10).unwrap();
        b.iter(|| Ball::build(&graph, spec).element_count())
    });
    group.finish();
}

fn bench_divisors(c: &mut Criterion) {
    let graph = fixtures::path_integers();
    let ball = Ball::build(&graph, BallSpec::new(6, 4));
    let deep: Vec<_> = ball.sphere(4).iter().take(32).cloned().collect();
    c.bench_function("left_divisors depth 2 of lambda-4 words", |b| {
        b.iter(|| {
            let mut total = 0usize;
            for g in &deep {
                total += left_divisors(&graph, black_box(g), 2).len();
            }
            total
        })
    });
    let pairs: Vec<_> = ball
        .sphere(3)
        .iter()
        .take(16)
        .flat_map(|a| ball.sphere(3).iter().take(16).map(move |b| (a.clone(), b.clone())))
        .collect();
    c.bench_function("p2_decompose lambda-3 pairs", |b| {
        b.iter(|| {
            for (h1, h2) in &pairs {
                black_box(p2_decompose(&graph, h1, h2));
            }
        })
    });
}

fn bench_convolution_and_tensor(c: &mut Criterion) {
    let graph = fixtures::path_integers();
    let ball = Ball::build(&graph, BallSpec::new(6, 4));
    let level3 = ball.sphere(3);
    let phi = GroupFunction::from_pairs(
        level3
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), Complex64::new(1.0 + i as f64, -0.5))),
    );
    c.bench_function("convolve lambda-3 x lambda-3", |b| {
        b.iter(|| convolve(&graph, black_box(&phi), black_box(&phi)).support_size())
    });

    let a = level_set(&ball, LevelMode::Lambda, 3);
    let b_level = level_set(&ball, LevelMode::Lambda, 3);
    let c_level = level_set(&ball, LevelMode::Lambda, 4);
    let tensor = MultiplicationTensor::from_levels(&graph, &a, &b_level, &c_level, 0.0);
    let opts = AlsOptions {
        restarts: 4,
        ..Default::default()
    };
    c.bench_function("als spectral norm (3,3,4) levels", |bench| {
        bench.iter(|| tensor.spectral_norm_lower_bound(black_box(&opts), 7).sigma)
    });
}

criterion_group!(
    benches,
    bench_reduce,
    bench_sphere,
    bench_divisors,
    bench_convolution_and_tensor
);
criterion_main!(benches);
