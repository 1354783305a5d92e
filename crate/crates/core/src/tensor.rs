//! Implicit symmetric tensors built from per-edge weights.
//!
//! For an edge `e` with weight `w_e`, the tensor has entry `w_e / (k-1)!` at
//! every ordering of `e`. Contracting with `x` in all but the first slot
//! cancels the factorial, which leaves
//!
//! ```text
//! (T x^{k-1})_i = sum over edges e containing i of  w_e * prod_{j in e, j != i} x_j
//! ```

use crate::hypergraph::UniformHypergraph;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Weighting {
    Adjacency,
    Abc,
    Randic,
}

impl Weighting {
    pub fn weight_for(self, degrees: &[usize]) -> f64 {
        let k = degrees.len() as f64;
        match self {
            Weighting::Adjacency => 1.0,
            Weighting::Abc => omega_from_degrees(degrees).powf(1.0 / k),
            Weighting::Randic => degrees.iter().map(|&d| (d as f64).powf(-1.0 / k)).product(),
        }
    }
}

impl std::str::FromStr for Weighting {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "adj" | "adjacency" => Ok(Weighting::Adjacency),
            "abc" => Ok(Weighting::Abc),
            "randic" => Ok(Weighting::Randic),
            other => Err(format!("unknown weighting `{other}` (expected abc, adj or randic)")),
        }
    }
}

/// `(sum d - k) / prod d` over the degrees of one edge.
///
/// Numerator and denominator are formed in integer arithmetic. If the
/// product overflows `u128` it falls back to a log-domain quotient.
pub fn omega_from_degrees(degrees: &[usize]) -> f64 {
    let k = degrees.len() as u128;
    let sum: u128 = degrees.iter().map(|&d| d as u128).sum();
    let num = sum - k;
    if num == 0 {
        return 0.0;
    }
    match degrees.iter().try_fold(1u128, |acc, &d| acc.checked_mul(d as u128)) {
        Some(prod) => num as f64 / prod as f64,
        None => {
            let log_prod: f64 = degrees.iter().map(|&d| (d as f64).ln()).sum();
            ((num as f64).ln() - log_prod).exp()
        }
    }
}

fn edge_degrees(g: &UniformHypergraph, degrees: &[usize], e: usize) -> Vec<usize> {
    g.edge(e).iter().map(|&v| degrees[v]).collect()
}

/// ABC radicand of edge `e`.
///
/// # Panics
/// If `e >= g.m()`.
pub fn omega(g: &UniformHypergraph, e: usize) -> f64 {
    let d = g.degrees();
    omega_from_degrees(&edge_degrees(g, &d.degrees, e))
}

/// # Panics
/// If `e >= g.m()`.
pub fn edge_weight(g: &UniformHypergraph, e: usize, w: Weighting) -> f64 {
    let d = g.degrees();
    w.weight_for(&edge_degrees(g, &d.degrees, e))
}

/// `(1/(k-1)!) * sum_e omega(e)^{1/k}`.
pub fn abc_index(g: &UniformHypergraph) -> f64 {
    let d = g.degrees();
    let total: f64 = (0..g.m()).map(|e| Weighting::Abc.weight_for(&edge_degrees(g, &d.degrees, e))).sum();
    let fact: f64 = (1..g.k()).map(|i| i as f64).product();
    total / fact
}

/// A hypergraph together with one cached weight per edge.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
    weights: Vec<f64>,
}

impl Operator {
    pub fn new(g: &UniformHypergraph, w: Weighting) -> Self {
        let d = g.degrees();
        let weights = (0..g.m()).map(|e| w.weight_for(&edge_degrees(g, &d.degrees, e))).collect();
        Self { k: g.k(), n: g.n(), edges: g.edges().to_vec(), weights }
    }

    /// Operator with caller-chosen edge weights, in `g.edges()` order.
    ///
    /// # Panics
    /// If the number of weights differs from `g.m()` or a weight is negative
    /// or not finite.
    pub fn from_weights(g: &UniformHypergraph, weights: Vec<f64>) -> Self {
        assert_eq!(weights.len(), g.m(), "one weight per edge");
        assert!(weights.iter().all(|w| w.is_finite() && *w >= 0.0), "weights must be finite and nonnegative");
        Self { k: g.k(), n: g.n(), edges: g.edges().to_vec(), weights }
    }

    /// Every weight multiplied by `c`.
    pub fn scaled(&self, c: f64) -> Self {
        let mut out = self.clone();
        for w in &mut out.weights {
            *w *= c;
        }
        out
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn is_zero(&self) -> bool {
        self.weights.iter().all(|&w| w == 0.0)
    }

    /// `T x^{k-1}`.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        self.apply_into(x, &mut out);
        out
    }

    /// Writes `T x^{k-1}` into `out`, overwriting it.
    ///
    /// # Panics
    /// If `x` or `out` does not have length `n`.
    pub fn apply_into(&self, x: &[f64], out: &mut [f64]) {
        assert_eq!(x.len(), self.n);
        assert_eq!(out.len(), self.n);
        out.fill(0.0);
        let k = self.k;
        let mut suffix = vec![1.0; k + 1];
        for (edge, &w) in self.edges.iter().zip(&self.weights) {
            if w == 0.0 {
                continue;
            }
            for j in (0..k).rev() {
                suffix[j] = suffix[j + 1] * x[edge[j]];
            }
            let mut prefix = w;
            for (j, &v) in edge.iter().enumerate() {
                out[v] += prefix * suffix[j + 1];
                prefix *= x[v];
            }
        }
    }

    /// `T x^k = x . (T x^{k-1}) = k * sum_e w_e prod_{j in e} x_j`.
    pub fn form(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.n);
        let sum: f64 = self
            .edges
            .iter()
            .zip(&self.weights)
            .map(|(edge, &w)| w * edge.iter().map(|&v| x[v]).product::<f64>())
            .sum();
        self.k as f64 * sum
    }
}
