//! Perron root of the implicit tensors by shifted power iteration.
//!
//! Each step forms `y = T x^{k-1} + s x^{[k-1]}` for a positive `x`. The
//! ratios `y_i / x_i^{k-1}` bracket `rho + s` from both sides, so every
//! iterate yields a certified enclosure and convergence is declared on the
//! width of that enclosure alone.

use crate::hypergraph::UniformHypergraph;
use crate::tensor::{Operator, Weighting};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InitialVector {
    Uniform,
    SeededRandom(u64),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveOptions {
    /// Relative width of the certified bracket at which iteration stops.
    pub tol: f64,
    pub max_iters: usize,
    pub shift: f64,
    pub initial: InitialVector,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { tol: 1e-10, max_iters: 200_000, shift: 1.0, initial: InitialVector::Uniform }
    }
}

impl SolveOptions {
    pub fn with_tol(tol: f64) -> Self {
        Self { tol, ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralEstimate {
    pub rho: f64,
    /// Positive, normalized so that the k-th powers sum to one.
    pub eigenvector: Vec<f64>,
    pub lower: f64,
    pub upper: f64,
    pub iters: usize,
    pub residual: f64,
}

impl SpectralEstimate {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("hypergraph is not connected")]
    NotConnected,
    #[error("invalid options: {0}")]
    BadOptions(String),
    #[error("no convergence after {iters} iterations; last bracket [{lower}, {upper}]")]
    NonConvergence { iters: usize, lower: f64, upper: f64 },
}

pub fn spectral_radius(
    g: &UniformHypergraph,
    w: Weighting,
    opts: &SolveOptions,
) -> Result<SpectralEstimate, SolveError> {
    if !g.is_connected() {
        return Err(SolveError::NotConnected);
    }
    solve(&Operator::new(g, w), opts)
}

/// Runs the iteration on an arbitrary operator. The caller is responsible
/// for its weak irreducibility; on a reducible operator the bracket is
/// still valid but may fail to close.
pub fn solve(op: &Operator, opts: &SolveOptions) -> Result<SpectralEstimate, SolveError> {
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(SolveError::BadOptions(format!("tol must be positive, got {}", opts.tol)));
    }
    if !opts.shift.is_finite() || opts.shift <= 0.0 {
        return Err(SolveError::BadOptions(format!("shift must be positive, got {}", opts.shift)));
    }
    let (n, k) = (op.n(), op.k());
    let km1 = (k - 1) as i32;
    let mut x = initial_vector(n, k, opts.initial);

    if op.is_zero() {
        return Ok(SpectralEstimate { rho: 0.0, eigenvector: x, lower: 0.0, upper: 0.0, iters: 0, residual: 0.0 });
    }

    let s = opts.shift;
    let mut y = vec![0.0; n];
    let (mut best_lo, mut best_hi) = (f64::NEG_INFINITY, f64::INFINITY);
    for iter in 1..=opts.max_iters {
        op.apply_into(&x, &mut y);
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for (yi, &xi) in y.iter_mut().zip(&x) {
            let xp = xi.powi(km1);
            *yi += s * xp;
            let r = *yi / xp;
            lo = lo.min(r);
            hi = hi.max(r);
        }
        best_lo = best_lo.max(lo);
        best_hi = best_hi.min(hi);
        if hi - lo <= opts.tol * (hi - s).max(1.0) {
            let (lower, upper) = ((best_lo - s).max(0.0), best_hi - s);
            let rho = 0.5 * (lower + upper);
            let residual = residual(op, rho, &x);
            return Ok(SpectralEstimate { rho, eigenvector: x, lower, upper, iters: iter, residual });
        }
        let inv = 1.0 / (k - 1) as f64;
        for (xi, &yi) in x.iter_mut().zip(&y) {
            *xi = if k == 2 { yi } else { yi.powf(inv) };
        }
        normalize_k(&mut x, k);
    }
    Err(SolveError::NonConvergence { iters: opts.max_iters, lower: best_lo - s, upper: best_hi - s })
}

/// `max_i |(T x^{k-1})_i - rho x_i^{k-1}|`.
pub fn residual(op: &Operator, rho: f64, x: &[f64]) -> f64 {
    let km1 = (op.k() - 1) as i32;
    op.apply(x).iter().zip(x).map(|(a, &xi)| (a - rho * xi.powi(km1)).abs()).fold(0.0, f64::max)
}

fn initial_vector(n: usize, k: usize, init: InitialVector) -> Vec<f64> {
    let mut x = match init {
        InitialVector::Uniform => vec![1.0; n],
        InitialVector::SeededRandom(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..n).map(|_| rng.gen_range(0.5..1.5)).collect()
        }
    };
    normalize_k(&mut x, k);
    x
}

fn normalize_k(x: &mut [f64], k: usize) {
    let scale = x.iter().map(|v| v.powi(k as i32)).sum::<f64>().powf(-1.0 / k as f64);
    for v in x {
        *v *= scale;
    }
}
