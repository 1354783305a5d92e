mod common;

use hyperabc::generators::{self, power, random_connected, random_hypertree, s_composition};
use hyperabc::hypergraph::Kind;
use hyperabc::spectral::solve;
use hyperabc::{omega, spectral_radius, Operator, SolveOptions, UniformHypergraph, Weighting};
use proptest::prelude::*;

fn any_weighting() -> impl Strategy<Value = Weighting> {
    prop_oneof![Just(Weighting::Adjacency), Just(Weighting::Abc), Just(Weighting::Randic)]
}

fn hypertree() -> impl Strategy<Value = UniformHypergraph> {
    (1usize..8, 2usize..5, any::<u64>()).prop_map(|(m, k, seed)| random_hypertree(m, k, seed).unwrap())
}

fn connected() -> impl Strategy<Value = UniformHypergraph> {
    (1usize..6, 0usize..4, 2usize..5, any::<u64>())
        .prop_map(|(m, extra, k, seed)| random_connected(m, extra, k, seed).unwrap())
}

fn with_perm(g: UniformHypergraph) -> impl Strategy<Value = (UniformHypergraph, Vec<usize>)> {
    let n = g.n();
    (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
}

fn positive_vector(n: usize) -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(0.1f64..2.0, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_code_ignores_labels((g, perm) in connected().prop_flat_map(with_perm)) {
        prop_assert_eq!(g.canonical_code().unwrap(), g.relabel(&perm).canonical_code().unwrap());
    }

    #[test]
    fn degree_sum_is_mk(g in connected()) {
        prop_assert_eq!(g.degrees().sum(), g.m() * g.k());
    }

    #[test]
    fn hypertrees_satisfy_vertex_count(g in hypertree()) {
        let r = g.classify();
        prop_assert_eq!(r.kind, Kind::Hypertree);
        prop_assert_eq!(g.n(), g.m() * (g.k() - 1) + 1);
        prop_assert!(r.girth.length().is_none());
    }

    #[test]
    fn power_of_tree_is_power_hypertree(m in 1usize..8, seed in any::<u64>(), k in 3usize..6) {
        let tree = random_hypertree(m, 2, seed).unwrap();
        let lifted = power(&tree, k).unwrap();
        prop_assert_eq!(lifted.classify().power_hypertree, Some(true));
        prop_assert_eq!(lifted.n(), tree.n() + tree.m() * (k - 2));
        let d = lifted.degrees();
        prop_assert!((tree.n()..lifted.n()).all(|v| d[v] == 1));
    }

    #[test]
    fn apply_is_homogeneous(g in connected(), w in any_weighting(), c in 0.2f64..3.0) {
        let op = Operator::new(&g, w);
        let x: Vec<f64> = (0..g.n()).map(|i| 0.3 + (i % 5) as f64 * 0.2).collect();
        let cx: Vec<f64> = x.iter().map(|v| c * v).collect();
        let scale = c.powi(g.k() as i32 - 1);
        for (a, b) in op.apply(&cx).iter().zip(op.apply(&x)) {
            prop_assert!((a - scale * b).abs() <= 1e-12 * a.abs().max(1.0));
        }
    }

    #[test]
    fn rayleigh_quotient_is_below_rho(g in connected(), w in any_weighting(), seed in any::<u64>()) {
        let n = g.n();
        let est = spectral_radius(&g, w, &SolveOptions::default()).unwrap();
        let op = Operator::new(&g, w);
        let mut x: Vec<f64> = (0..n).map(|i| ((seed >> (i % 60)) & 7) as f64 + 0.5).collect();
        let norm = x.iter().map(|v| v.powi(g.k() as i32)).sum::<f64>().powf(1.0 / g.k() as f64);
        x.iter_mut().for_each(|v| *v /= norm);
        prop_assert!(op.form(&x) <= est.upper + 1e-9);
    }

    #[test]
    fn scaling_scales_rho(g in connected(), w in any_weighting(), c in 0.1f64..10.0) {
        let op = Operator::new(&g, w);
        let opts = SolveOptions::default();
        let base = solve(&op, &opts).unwrap().rho;
        let scaled = solve(&op.scaled(c), &opts).unwrap().rho;
        prop_assert!((scaled - c * base).abs() <= 1e-8 * (c * base).max(1.0));
    }

    #[test]
    fn perron_vector_respects_automorphisms(m in 1usize..7, k in 2usize..5, w in any_weighting()) {
        // every leaf of a hyperstar is interchangeable
        let g = generators::hyperstar(m, k).unwrap();
        let est = spectral_radius(&g, w, &SolveOptions::with_tol(1e-12)).unwrap();
        let leaf = est.eigenvector[1];
        prop_assert!(est.eigenvector[1..].iter().all(|&v| (v - leaf).abs() < 1e-8));
    }

    #[test]
    fn heavier_weights_raise_rho(g in connected(), x in positive_vector(64), edge in 0usize..64) {
        let op = Operator::new(&g, Weighting::Abc);
        let heavier: Vec<f64> = op
            .weights()
            .iter()
            .enumerate()
            .map(|(i, w)| w + if i == edge % g.m() { x[i % x.len()] } else { 0.0 })
            .collect();
        let opts = SolveOptions::default();
        let a = solve(&op, &opts).unwrap();
        let b = solve(&Operator::from_weights(&g, heavier), &opts).unwrap();
        prop_assert!(a.lower <= b.upper + 1e-12);
    }

    #[test]
    fn omega_is_at_most_delta_ratio(g in connected()) {
        let delta = g.degrees().max_degree as f64;
        let cap = (delta - 1.0) / delta;
        for e in 0..g.m() {
            prop_assert!(omega(&g, e) <= cap + 1e-15);
        }
    }

    #[test]
    fn composition_order_does_not_matter(m in 1usize..8, k in 3usize..5, seed in any::<u64>(), shift in 0usize..4) {
        let parts = generators::compositions(m - 1, k);
        let a = &parts[seed as usize % parts.len()];
        let mut rotated = a.clone();
        rotated.rotate_left(shift % k);
        let g = s_composition(m, k, a).unwrap();
        let h = s_composition(m, k, &rotated).unwrap();
        prop_assert_eq!(g.canonical_code().unwrap(), h.canonical_code().unwrap());
    }

    #[test]
    fn dense_oracle_agrees_on_random_vectors(g in (1usize..4, 0usize..3, any::<u64>()).prop_map(|(m, e, s)| random_connected(m, e, 3, s).unwrap()), seed in any::<u64>()) {
        let x: Vec<f64> = (0..g.n()).map(|i| (((seed.rotate_left(i as u32 * 7)) % 1000) as f64 / 500.0) - 1.0).collect();
        let op = Operator::new(&g, Weighting::Abc);
        let dense = common::Dense::new(&g, common::W::Abc);
        prop_assert!((op.form(&x) - dense.form(&x)).abs() < 1e-10);
    }
}

#[test]
fn hypertree_counts() {
    // unlabeled trees by edge count, then triangular cacti (OEIS A003081)
    let counts: Vec<usize> = (1..=7).map(|m| generators::enumerate_hypertrees(m, 2).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 6, 11, 23]);
    let counts: Vec<usize> = (1..=6).map(|m| generators::enumerate_hypertrees(m, 3).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 4, 8, 19]);
}
