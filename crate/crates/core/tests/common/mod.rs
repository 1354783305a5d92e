//! Brute-force reference implementations. Everything here works on the
//! raw edge list and a dense `n^k` array, sharing no code with the crate
//! beyond `UniformHypergraph` accessors.

#![allow(dead_code)]

use hyperabc::UniformHypergraph;

#[derive(Clone, Copy, Debug)]
pub enum W {
    Adj,
    Abc,
    Randic,
}

pub fn degrees(g: &UniformHypergraph) -> Vec<usize> {
    let mut d = vec![0; g.n()];
    for e in g.edges() {
        for &v in e {
            d[v] += 1;
        }
    }
    d
}

pub fn weight(w: W, degs: &[usize]) -> f64 {
    let k = degs.len() as f64;
    match w {
        W::Adj => 1.0,
        W::Abc => {
            let sum: f64 = degs.iter().map(|&d| d as f64).sum();
            let prod: f64 = degs.iter().map(|&d| d as f64).product();
            ((sum - k) / prod).powf(1.0 / k)
        }
        W::Randic => degs.iter().map(|&d| (d as f64).powf(-1.0 / k)).product(),
    }
}

pub fn weights(g: &UniformHypergraph, w: W) -> Vec<f64> {
    let d = degrees(g);
    g.edges().iter().map(|e| weight(w, &e.iter().map(|&v| d[v]).collect::<Vec<_>>())).collect()
}

/// Dense symmetric tensor: every ordering of every edge carries
/// `w_e / (k-1)!`.
pub struct Dense {
    pub n: usize,
    pub k: usize,
    pub data: Vec<f64>,
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, first);
            out.push(p);
        }
    }
    out
}

impl Dense {
    pub fn new(g: &UniformHypergraph, w: W) -> Self {
        Self::from_weights(g, &weights(g, w))
    }

    pub fn from_weights(g: &UniformHypergraph, ws: &[f64]) -> Self {
        let (n, k) = (g.n(), g.k());
        let size = n.checked_pow(k as u32).expect("tensor size");
        assert!(size <= 4_000_000, "dense oracle limited to small tensors");
        let fact: f64 = (1..k).map(|i| i as f64).product();
        let mut data = vec![0.0; size];
        for (e, &we) in g.edges().iter().zip(ws) {
            for p in permutations(e) {
                data[p.iter().fold(0, |acc, &v| acc * n + v)] += we / fact;
            }
        }
        Self { n, k, data }
    }

    /// `(T x^{k-1})_i` by summing over every index tuple.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let stride = self.n.pow(self.k as u32 - 1);
        (0..self.n)
            .map(|i| {
                let block = &self.data[i * stride..(i + 1) * stride];
                block
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a != 0.0)
                    .map(|(idx, &a)| {
                        let mut rest = idx;
                        let mut prod = a;
                        for _ in 1..self.k {
                            prod *= x[rest % self.n];
                            rest /= self.n;
                        }
                        prod
                    })
                    .sum()
            })
            .collect()
    }

    pub fn form(&self, x: &[f64]) -> f64 {
        self.apply(x).iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// Spectral radius by the Ng-Qi-Zhou iteration on `T + I`, run until
    /// the min and max ratios agree to `1e-13` relative.
    pub fn spectral_radius(&self) -> f64 {
        let km1 = (self.k - 1) as i32;
        let mut x = vec![1.0; self.n];
        for _ in 0..2_000_000 {
            let mut y = self.apply(&x);
            for (yi, &xi) in y.iter_mut().zip(&x) {
                *yi += xi.powi(km1);
            }
            let ratios: Vec<f64> = y.iter().zip(&x).map(|(a, b)| a / b.powi(km1)).collect();
            let lo = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi = ratios.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            if hi - lo <= 1e-13 * hi {
                return 0.5 * (lo + hi) - 1.0;
            }
            let norm: f64 = y.iter().map(|v| v.powf(1.0 / km1 as f64)).sum();
            x = y.iter().map(|v| v.powf(1.0 / km1 as f64) / norm).collect();
        }
        panic!("oracle iteration did not converge");
    }
}

pub fn oracle_rho(g: &UniformHypergraph, w: W) -> f64 {
    Dense::new(g, w).spectral_radius()
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}
