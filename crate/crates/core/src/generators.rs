//! Constructors for the named hypergraph families.
//!
//! All generators number vertices deterministically. A new pendant edge
//! always takes the next `k - 1` unused ids, so two calls with the same
//! arguments produce identical edge lists.

use crate::hypergraph::{BuildError, CanonError, UniformHypergraph, Vertex};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid parameters for {family}: {reason}")]
    Params { family: &'static str, reason: String },
    #[error("{what} exceeds the budget of {budget}")]
    Budget { what: String, budget: usize },
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Canon(#[from] CanonError),
}

fn params(family: &'static str, reason: impl Into<String>) -> GenError {
    GenError::Params { family, reason: reason.into() }
}

/// Largest edge count [`complete`] will materialize.
pub const COMPLETE_EDGE_BUDGET: usize = 50_000;

/// Adds the edge `{v, n, n+1, ..., n+k-2}`.
///
/// # Panics
/// If `v` is not a vertex of `g`.
pub fn attach_pendant_edge(g: &UniformHypergraph, v: Vertex) -> UniformHypergraph {
    assert!(v < g.n(), "vertex {v} out of range");
    let (n, k) = (g.n(), g.k());
    let mut edges = g.edges().to_vec();
    let mut fresh = vec![v];
    fresh.extend(n..n + k - 1);
    edges.push(fresh);
    UniformHypergraph::build(k, n + k - 1, edges).expect("pendant edge on fresh vertices is valid")
}

fn single_edge(k: usize) -> UniformHypergraph {
    UniformHypergraph::build(k, k, vec![(0..k).collect()]).expect("k >= 2")
}

fn check_k(family: &'static str, k: usize) -> Result<(), GenError> {
    if k < 2 {
        return Err(params(family, format!("k must be at least 2, got {k}")));
    }
    Ok(())
}

/// `S_{m,k}`: `m` edges sharing vertex 0 and nothing else.
pub fn hyperstar(m: usize, k: usize) -> Result<UniformHypergraph, GenError> {
    check_k("hyperstar", k)?;
    if m == 0 {
        return Err(params("hyperstar", "m must be at least 1"));
    }
    let edges = (0..m).map(|e| std::iter::once(0).chain(1 + e * (k - 1)..1 + (e + 1) * (k - 1)).collect()).collect();
    Ok(UniformHypergraph::build(k, m * (k - 1) + 1, edges)?)
}

/// `P_{m,k}`: edge `i` is `{i(k-1), ..., i(k-1)+k-1}`.
pub fn hyperpath(m: usize, k: usize) -> Result<UniformHypergraph, GenError> {
    check_k("hyperpath", k)?;
    if m == 0 {
        return Err(params("hyperpath", "m must be at least 1"));
    }
    let edges = (0..m).map(|i| (i * (k - 1)..i * (k - 1) + k).collect()).collect();
    Ok(UniformHypergraph::build(k, m * (k - 1) + 1, edges)?)
}

/// `C_{g,k}`: edge `i` is `{i(k-1), ..., i(k-1)+k-1}` taken mod `g(k-1)`.
///
/// `k = 2` is accepted for `g >= 3` and gives the ordinary cycle.
pub fn hypercycle(g: usize, k: usize) -> Result<UniformHypergraph, GenError> {
    check_k("hypercycle", k)?;
    let min_g = if k == 2 { 3 } else { 2 };
    if g < min_g {
        return Err(params("hypercycle", format!("length must be at least {min_g} when k = {k}")));
    }
    let n = g * (k - 1);
    let edges = (0..g).map(|i| (0..k).map(|j| (i * (k - 1) + j) % n).collect()).collect();
    Ok(UniformHypergraph::build(k, n, edges)?)
}

/// `K_n^(k)`: every `k`-subset of `[0, n)`.
pub fn complete(n: usize, k: usize) -> Result<UniformHypergraph, GenError> {
    check_k("complete", k)?;
    if n <= k {
        return Err(params("complete", format!("need n > k, got n = {n}, k = {k}")));
    }
    let count = binomial(n, k);
    if count > COMPLETE_EDGE_BUDGET as u128 {
        return Err(GenError::Budget { what: format!("C({n},{k}) = {count} edges"), budget: COMPLETE_EDGE_BUDGET });
    }
    let mut edges = Vec::with_capacity(count as usize);
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        edges.push(subset.clone());
        // advance to the next subset in lexicographic order
        let Some(i) = (0..k).rev().find(|&i| subset[i] < n - k + i) else {
            break;
        };
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
    Ok(UniformHypergraph::build(k, n, edges)?)
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// The `k`-th power: every edge of `g` gets `k - r` fresh vertices, where
/// `r = g.k()`. Fresh ids are assigned edge by edge in `g`'s edge order.
pub fn power(g: &UniformHypergraph, k: usize) -> Result<UniformHypergraph, GenError> {
    let r = g.k();
    if k <= r {
        return Err(params("power", format!("target k = {k} must exceed {r}")));
    }
    let pad = k - r;
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, edge)| {
            let start = g.n() + e * pad;
            edge.iter().copied().chain(start..start + pad).collect()
        })
        .collect();
    Ok(UniformHypergraph::build(k, g.n() + g.m() * pad, edges)?)
}

/// `D_{m,a}`: 2-uniform double star with `m` edges. Centers 0 and 1 are
/// joined; vertex 0 carries `m - 1 - a` leaves and vertex 1 carries `a`.
pub fn double_star(m: usize, a: usize) -> Result<UniformHypergraph, GenError> {
    if m < 3 || a < 1 || 2 * a > m - 1 {
        return Err(params("double-star", format!("need m >= 3 and 1 <= a <= (m-1)/2, got m = {m}, a = {a}")));
    }
    let mut g = UniformHypergraph::build(2, 2, vec![vec![0, 1]])?;
    for _ in 0..m - 1 - a {
        g = attach_pendant_edge(&g, 0);
    }
    for _ in 0..a {
        g = attach_pendant_edge(&g, 1);
    }
    Ok(g)
}

/// `S_{m,k;a_1,...,a_k}`: the edge `{0, ..., k-1}` with `a[i]` pendant
/// edges attached at vertex `i`.
pub fn s_composition(m: usize, k: usize, a: &[usize]) -> Result<UniformHypergraph, GenError> {
    check_k("s-comp", k)?;
    if a.len() != k {
        return Err(params("s-comp", format!("composition has {} parts, expected k = {k}", a.len())));
    }
    if m == 0 || a.iter().sum::<usize>() != m - 1 {
        return Err(params("s-comp", format!("parts must sum to m - 1 = {}", m as isize - 1)));
    }
    Ok(attach_counts(single_edge(k), a, |i| i))
}

/// `U_{m,k,g}(a_1, ..., a_k)`: the hypercycle `C_{g,k}` with `a[i]` pendant
/// edges at vertex `i` of the edge `{0, ..., k-1}`. Vertex 0 and vertex
/// `k-1` are the cycle junctions of that edge.
pub fn unicyclic_family(m: usize, k: usize, g: usize, a: &[usize]) -> Result<UniformHypergraph, GenError> {
    if k < 3 {
        return Err(params("unicyclic", format!("k must be at least 3, got {k}")));
    }
    if !(2..=3).contains(&g) {
        return Err(params("unicyclic", format!("cycle length must be 2 or 3, got {g}")));
    }
    if a.len() != k {
        return Err(params("unicyclic", format!("composition has {} parts, expected k = {k}", a.len())));
    }
    if m < g || a.iter().sum::<usize>() != m - g {
        return Err(params("unicyclic", format!("parts must sum to m - g with m >= g (m = {m}, g = {g})")));
    }
    Ok(attach_counts(hypercycle(g, k)?, a, |i| i))
}

fn attach_counts(mut g: UniformHypergraph, a: &[usize], at: impl Fn(usize) -> Vertex) -> UniformHypergraph {
    for (i, &count) in a.iter().enumerate() {
        for _ in 0..count {
            g = attach_pendant_edge(&g, at(i));
        }
    }
    g
}

/// The four 3-uniform hypertrees `T_{m,1..4}`. In each, vertex 0 is the
/// vertex of degree `m - 3`.
///
/// * `T_{m,1}` is `S_{m,3;m-4,2,1}` (`m >= 6`).
/// * `T_{m,2}` extends `S_{m-1,3;m-4,1,1}` by a pendant edge at a pendant
///   vertex of one pendant edge at vertex 0.
/// * `T_{m,3}` extends `D_{m-2,1}^3` by pendant edges at both degree-1
///   vertices of the pendant edge at the degree-2 center.
/// * `T_{m,4}` extends `S_{m-1,3;m-4,1,1}` by a pendant edge at a pendant
///   vertex of the pendant edge at vertex 1.
pub fn t_family(m: usize, idx: usize) -> Result<UniformHypergraph, GenError> {
    let min_m = if idx == 1 { 6 } else { 5 };
    if !(1..=4).contains(&idx) || m < min_m {
        return Err(params("t-family", format!("need idx in 1..=4 and m >= {min_m}, got m = {m}, idx = {idx}")));
    }
    let g = match idx {
        1 => s_composition(m, 3, &[m - 4, 2, 1])?,
        2 => {
            // the pendant edge at vertex 0 is attached first and owns vertices 3, 4
            let base = s_composition(m - 1, 3, &[m - 4, 1, 1])?;
            attach_pendant_edge(&base, 3)
        }
        3 => {
            let base = power(&double_star(m - 2, 1)?, 3)?;
            let pendant = base
                .edges()
                .iter()
                .find(|e| e.contains(&1) && !e.contains(&0))
                .expect("double star has a leaf at center 1")
                .clone();
            let mut g = base;
            for v in pendant.into_iter().filter(|&v| v != 1) {
                g = attach_pendant_edge(&g, v);
            }
            g
        }
        _ => {
            let base = s_composition(m - 1, 3, &[m - 4, 1, 1])?;
            let pendant = base.edges().iter().find(|e| e[0] == 1).expect("one pendant edge sits at vertex 1").clone();
            attach_pendant_edge(&base, pendant[1])
        }
    };
    debug_assert_eq!(g.m(), m);
    Ok(g)
}

/// The hypertrees `H_1` (from `S_{2,3}`) and `H_2` (from `S_{3,4}`), each
/// with one new pendant edge at every pendant vertex of the star.
pub fn example_h(idx: usize) -> Result<UniformHypergraph, GenError> {
    let star = match idx {
        1 => hyperstar(2, 3)?,
        2 => hyperstar(3, 4)?,
        _ => return Err(params("example-h", format!("idx must be 1 or 2, got {idx}"))),
    };
    let leaves: Vec<Vertex> = (1..star.n()).collect();
    let mut g = star;
    for v in leaves {
        g = attach_pendant_edge(&g, v);
    }
    Ok(g)
}

/// Largest `m` accepted by [`enumerate_hypertrees`] for the given `k`.
pub fn enumeration_budget(k: usize) -> usize {
    match k {
        2 => 10,
        3 => 6,
        4 => 5,
        _ => 4,
    }
}

/// One representative per isomorphism class of `k`-uniform hypertrees with
/// `m` edges, grown level by level by pendant-edge attachment and deduped
/// by canonical code. Output is sorted by canonical code.
pub fn enumerate_hypertrees(m: usize, k: usize) -> Result<Vec<UniformHypergraph>, GenError> {
    check_k("enumerate", k)?;
    if m == 0 {
        return Err(params("enumerate", "m must be at least 1"));
    }
    let budget = enumeration_budget(k);
    if m > budget {
        return Err(GenError::Budget { what: format!("hypertree enumeration with m = {m}, k = {k}"), budget });
    }
    let mut level = vec![(single_edge(k).canonical_code()?, single_edge(k))];
    for _ in 1..m {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for (_, tree) in &level {
            for v in 0..tree.n() {
                let child = attach_pendant_edge(tree, v);
                let code = child.canonical_code()?;
                if seen.insert(code.clone()) {
                    next.push((code, child));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next;
    }
    Ok(level.into_iter().map(|(_, g)| g).collect())
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative
/// integers, in lexicographically decreasing order.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(rest);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=rest).rev() {
            prefix.push(first);
            rec(rest - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        rec(total, parts, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

/// A hypertree grown by attaching each new edge at a uniformly random
/// existing vertex.
pub fn random_hypertree(m: usize, k: usize, seed: u64) -> Result<UniformHypergraph, GenError> {
    check_k("random-hypertree", k)?;
    if m == 0 {
        return Err(params("random-hypertree", "m must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = single_edge(k);
    for _ in 1..m {
        let v = rng.gen_range(0..g.n());
        g = attach_pendant_edge(&g, v);
    }
    Ok(g)
}

/// A random hypertree with `m_tree` edges plus up to `extra` further
/// random `k`-subsets of its vertices. The result is connected and may
/// contain cycles. Duplicate draws are skipped, so fewer than `extra`
/// edges can be added on very small vertex sets.
pub fn random_connected(m_tree: usize, extra: usize, k: usize, seed: u64) -> Result<UniformHypergraph, GenError> {
    let tree = random_hypertree(m_tree, k, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let n = tree.n();
    let mut edges = tree.edges().to_vec();
    let mut seen: HashSet<Vec<Vertex>> = edges.iter().cloned().collect();
    for _ in 0..extra {
        let mut e = rand::seq::index::sample(&mut rng, n, k).into_vec();
        e.sort_unstable();
        if seen.insert(e.clone()) {
            edges.push(e);
        }
    }
    Ok(UniformHypergraph::build(k, n, edges)?)
}
