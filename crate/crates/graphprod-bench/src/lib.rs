//! Benchmark-only crate; see `benches/kernels.rs`.
//!
//! Shared helpers for the benchmark targets live here so the harness files
//! stay small.

use graphprod::{Expression, PresentationGraph, Syllable, VertexGroup};

/// Deterministic pseudo-random word over the graph's syllable alphabet,
/// derived from a linear congruential walk so the benches need no RNG crate.
pub fn deterministic_word(graph: &PresentationGraph, len: usize, seed: u64) -> Vec<Syllable> {
    let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1;
    let mut next = || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        state >> 33
    };
    (0..len)
        .map(|_| {
            let vertex = (next() as usize) % graph.vertex_count();
            let value = match graph.group(vertex) {
                VertexGroup::Cyclic(n) => 1 + (next() as i64) % (i64::from(*n) - 1).max(1),
                VertexGroup::Integers => {
                    let v = (next() as i64 % 4) - 2;
                    if v == 0 { 1 } else { v }
                }
                VertexGroup::Table(t) => 1 + (next() as i64) % (t.order() as i64 - 1).max(1),
            };
            Syllable { vertex, value }
        })
        .collect()
}

pub fn reduce_word(graph: &PresentationGraph, word: &[Syllable]) -> usize {
    graph
        .reduce(&Expression::from_syllables(word.to_vec()))
        .syllable_length()
}
