//! Shared test-side oracles and generators, independent of the library
//! paths they check.
#![allow(dead_code)]

use graphprod::rd::MultiplicationTensor;
use graphprod::vertex_group::IDENTITY;
use graphprod::{PresentationGraph, Syllable, VertexGroup};
use nalgebra::DMatrix;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// A uniformly random valid syllable on a random vertex, with integer
/// values confined to a small band.
pub fn random_syllable(rng: &mut ChaCha8Rng, graph: &PresentationGraph) -> Syllable {
    let vertex = rng.random_range(0..graph.vertex_count());
    let value = match graph.group(vertex) {
        VertexGroup::Cyclic(n) => rng.random_range(1..i64::from(*n)),
        VertexGroup::Integers => *[-2i64, -1, 1, 2].choose(rng).unwrap(),
        VertexGroup::Table(t) => rng.random_range(1..t.order() as i64),
    };
    Syllable { vertex, value }
}

pub fn random_word(
    rng: &mut ChaCha8Rng,
    graph: &PresentationGraph,
    max_len: usize,
) -> Vec<Syllable> {
    let len = rng.random_range(0..=max_len);
    (0..len).map(|_| random_syllable(rng, graph)).collect()
}

/// One of Green's legal replacement moves applied at a position.
#[derive(Copy, Clone, Debug)]
pub enum Move {
    /// swap commuting neighbours at (i, i+1)
    Shuffle(usize),
    /// merge same-vertex neighbours at (i, i+1); deletes on cancellation
    Merge(usize),
}

/// All moves applicable to `word`.
pub fn legal_moves(graph: &PresentationGraph, word: &[Syllable]) -> Vec<Move> {
    let mut moves = Vec::new();
    for i in 0..word.len().saturating_sub(1) {
        let (a, b) = (word[i], word[i + 1]);
        if a.vertex == b.vertex {
            moves.push(Move::Merge(i));
        } else if graph.adjacent(a.vertex, b.vertex) {
            moves.push(Move::Shuffle(i));
        }
    }
    moves
}

pub fn apply_move(graph: &PresentationGraph, word: &mut Vec<Syllable>, mv: Move) {
    match mv {
        Move::Shuffle(i) => word.swap(i, i + 1),
        Move::Merge(i) => {
            let merged = graph
                .group(word[i].vertex)
                .multiply(word[i].value, word[i + 1].value);
            if merged == IDENTITY {
                word.drain(i..=i + 1);
            } else {
                word[i].value = merged;
                word.remove(i + 1);
            }
        }
    }
}

/// Applies up to `count` randomly chosen legal moves.
pub fn scramble(
    rng: &mut ChaCha8Rng,
    graph: &PresentationGraph,
    word: &mut Vec<Syllable>,
    count: usize,
) {
    for _ in 0..count {
        let moves = legal_moves(graph, word);
        if moves.is_empty() {
            break;
        }
        let mv = moves[rng.random_range(0..moves.len())];
        apply_move(graph, word, mv);
    }
}

/// Entry list with the a-slice weights folded in, as (i, j, k, value).
fn weighted_entries(t: &MultiplicationTensor) -> Vec<(usize, usize, usize, f64)> {
    t.entries()
        .iter()
        .map(|&(a, b, c)| {
            (
                a as usize,
                b as usize,
                c as usize,
                t.weight_a()[a as usize],
            )
        })
        .collect()
}

fn largest_singular_value(m: &DMatrix<f64>) -> f64 {
    m.singular_values().iter().copied().fold(0.0, f64::max)
}

/// Spectral norm of a small nonnegative 3-tensor by exhaustive maximisation
/// over a discretized unit sphere in the smallest mode, with the remaining
/// bilinear form handled by a dense SVD at every sample point. Valid because
/// a nonnegative tensor attains its norm at nonnegative unit vectors, and
/// the norm is invariant under permuting the three modes. Requires the
/// smallest mode dimension to be at most 3.
pub fn dense_spectral_norm(t: &MultiplicationTensor) -> f64 {
    let dims = [t.dims().0, t.dims().1, t.dims().2];
    if dims.contains(&0) {
        return 0.0;
    }
    // rotate the smallest mode to the front
    let lead = (0..3).min_by_key(|&i| dims[i]).unwrap();
    let entries: Vec<(usize, usize, usize, f64)> = weighted_entries(t)
        .into_iter()
        .map(|(a, b, c, v)| {
            let idx = [a, b, c];
            (idx[lead], idx[(lead + 1) % 3], idx[(lead + 2) % 3], v)
        })
        .collect();
    let d0 = dims[lead];
    let d1 = dims[(lead + 1) % 3];
    let d2 = dims[(lead + 2) % 3];
    assert!(d0 <= 4, "oracle needs a mode of dimension <= 4, got {d0}");

    // slice matrices: M_i[j,k] = Σ value over entries with leading index i
    let slices: Vec<DMatrix<f64>> = (0..d0)
        .map(|i| {
            let mut m = DMatrix::<f64>::zeros(d1, d2);
            for &(ei, ej, ek, v) in &entries {
                if ei == i {
                    m[(ej, ek)] += v;
                }
            }
            m
        })
        .collect();
    let eval = |phi: &[f64]| -> f64 {
        let mut m = DMatrix::<f64>::zeros(d1, d2);
        for (i, s) in slices.iter().enumerate() {
            m += s * phi[i];
        }
        largest_singular_value(&m)
    };

    match d0 {
        1 => eval(&[1.0]),
        2 => {
            let f = |theta: f64| eval(&[theta.cos(), theta.sin()]);
            maximise_1d(&f, 0.0, std::f64::consts::FRAC_PI_2)
        }
        3 => maximise_angles::<2>(&|t| {
            eval(&[t[0].cos(), t[0].sin() * t[1].cos(), t[0].sin() * t[1].sin()])
        }),
        4 => maximise_angles::<3>(&|t| {
            eval(&[
                t[0].cos(),
                t[0].sin() * t[1].cos(),
                t[0].sin() * t[1].sin() * t[2].cos(),
                t[0].sin() * t[1].sin() * t[2].sin(),
            ])
        }),
        _ => unreachable!(),
    }
}

/// Exhaustive grid over `N` spherical angles in [0, π/2], then rounds of
/// per-coordinate golden-section refinement around the best cell.
fn maximise_angles<const N: usize>(f: &dyn Fn(&[f64; N]) -> f64) -> f64 {
    let half_pi = std::f64::consts::FRAC_PI_2;
    let n: usize = if N == 2 { 80 } else { 28 };
    let mut best = f64::NEG_INFINITY;
    let mut best_t = [0.0f64; N];
    let mut idx = [0usize; N];
    loop {
        let mut t = [0.0f64; N];
        for d in 0..N {
            t[d] = half_pi * idx[d] as f64 / n as f64;
        }
        let v = f(&t);
        if v > best {
            best = v;
            best_t = t;
        }
        // odometer increment
        let mut d = 0;
        loop {
            idx[d] += 1;
            if idx[d] <= n {
                break;
            }
            idx[d] = 0;
            d += 1;
            if d == N {
                // refinement: alternate golden-section sweeps per coordinate
                let mut t = best_t;
                let mut radius = half_pi / n as f64;
                for _ in 0..60 {
                    for c in 0..N {
                        let base = t;
                        t[c] = argmax_1d(
                            &|x| {
                                let mut probe = base;
                                probe[c] = x;
                                f(&probe)
                            },
                            (t[c] - radius).max(0.0),
                            (t[c] + radius).min(half_pi),
                        );
                    }
                    radius *= 0.8;
                }
                return f(&t).max(best);
            }
        }
    }
}

fn maximise_1d(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64) -> f64 {
    f(argmax_1d(f, lo, hi))
}

/// Coarse scan plus golden-section refinement around the best bracket.
fn argmax_1d(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64) -> f64 {
    let n = 400;
    let step = (hi - lo) / n as f64;
    let mut best_x = lo;
    let mut best = f64::NEG_INFINITY;
    for i in 0..=n {
        let x = lo + step * i as f64;
        let v = f(x);
        if v > best {
            best = v;
            best_x = x;
        }
    }
    let (mut a, mut b) = ((best_x - step).max(lo), (best_x + step).min(hi));
    let inv_phi = 0.618_033_988_749_894_9;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..80 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let mid = 0.5 * (a + b);
    if f(mid) > best { mid } else { best_x }
}
