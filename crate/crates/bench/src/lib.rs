//! Inputs shared by the benchmarks.

use hyperabc::{generators, UniformHypergraph};

/// Seeded random hypergraphs of increasing size: `(label, graph)`.
pub fn random_ladder(k: usize) -> Vec<(String, UniformHypergraph)> {
    [16, 64, 256, 1024]
        .into_iter()
        .map(|m| {
            let g = generators::random_connected(m, m / 8, k, m as u64).expect("valid parameters");
            (format!("m{m}-k{k}"), g)
        })
        .collect()
}

/// A positive test vector of length `n`.
pub fn probe(n: usize) -> Vec<f64> {
    (0..n).map(|i| 0.5 + ((i * 37) % 101) as f64 / 101.0).collect()
}
