//! Acceptance criteria, one PASS/FAIL line each. Run with
//! `cargo test -p hyperabc --test acceptance`.

mod common;

use hyperabc::verify::{self, CheckResult, Status};
use hyperabc::{closed_forms, generators, spectral_radius, Operator, SolveOptions, UniformHypergraph, Weighting};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

struct Outcome {
    ok: bool,
    summary: String,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self { ok: true, summary: String::new(), failures: Vec::new() }
    }

    fn fail(&mut self, msg: String) {
        self.ok = false;
        if self.failures.len() < 10 {
            self.failures.push(msg);
        }
    }

    fn require(&mut self, cond: bool, msg: impl FnOnce() -> String) {
        if !cond {
            self.fail(msg());
        }
    }

    fn check(&mut self, r: &CheckResult) {
        if !r.passed() {
            self.fail(format!("{} {:?}: {}", r.name, r.status, r.detail));
        }
    }
}

fn tight() -> SolveOptions {
    SolveOptions::with_tol(1e-12)
}

fn rho(g: &UniformHypergraph, w: Weighting) -> f64 {
    spectral_radius(g, w, &tight()).expect("solver converges").rho
}

fn c1_hyperstars(o: &mut Outcome) {
    let mut worst: f64 = 0.0;
    for m in 1..=12 {
        for k in 2..=4 {
            let g = generators::hyperstar(m, k).unwrap();
            let expected = ((m - 1) as f64).powf(1.0 / k as f64);
            let err = (rho(&g, Weighting::Abc) - expected).abs();
            worst = worst.max(err);
            o.require(err <= 1e-7, || format!("S_{{{m},{k}}}: error {err:e}"));
        }
    }
    o.summary = format!("36 hyperstars, max abs error {worst:.2e}");
}

fn c2_closed_forms(o: &mut Outcome) {
    let (mut count, mut worst) = (0, 0.0f64);
    for name in closed_forms::NAMES {
        for k in 2..=4 {
            for m in 1..=10 {
                let (Ok(value), Ok((g, w))) =
                    (closed_forms::by_name(name, m, k), verify::generating_hypergraph(name, m, k))
                else {
                    continue;
                };
                let got = rho(&g, w);
                let rel = (got - value).abs() / value.abs().max(f64::MIN_POSITIVE);
                let rel = if value == 0.0 { got.abs() } else { rel };
                worst = worst.max(rel);
                count += 1;
                o.require(rel <= 1e-7, || format!("{name}(m={m}, k={k}): closed form {value} vs solver {got}"));
            }
        }
    }
    o.require(count > 100, || format!("only {count} grid points evaluated"));
    o.summary = format!("{count} (name, m, k) points, max rel error {worst:.2e}");
}

fn named_families_grid() -> Vec<(String, UniformHypergraph)> {
    let mut out = Vec::new();
    for k in 2..=4 {
        for m in 1..=10 {
            out.extend(verify::named_families(m, k));
        }
    }
    out
}

fn c3_randic(o: &mut Outcome) {
    let mut graphs = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for seed in 0..50 {
        let (m, k) = (rng.gen_range(1..=10), rng.gen_range(3..=4));
        graphs.push((format!("random_hypertree({m},{k},{seed})"), generators::random_hypertree(m, k, seed).unwrap()));
    }
    graphs.extend(named_families_grid());
    let mut worst: f64 = 0.0;
    for (label, g) in &graphs {
        let err = (rho(g, Weighting::Randic) - 1.0).abs();
        worst = worst.max(err);
        o.require(err <= 1e-8, || format!("{label}: |rho - 1| = {err:e}"));
    }
    o.summary = format!("{} hypergraphs, max |rho - 1| {worst:.2e}", graphs.len());
}

fn c4_bounds(o: &mut Outcome) {
    type Check = fn(&UniformHypergraph) -> Result<CheckResult, verify::VerifyError>;
    let checks: [Check; 4] = [
        verify::check_edge_sum_bounds,
        verify::check_regular_corollary,
        verify::check_mean_bound,
        verify::check_delta_bound,
    ];
    let mut graphs = named_families_grid();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for seed in 0..100 {
        let (m, extra, k) = (rng.gen_range(1..=8), rng.gen_range(0..=4), rng.gen_range(2..=4));
        graphs.push((
            format!("random_connected({m},{extra},{k},{seed})"),
            generators::random_connected(m, extra, k, seed).unwrap(),
        ));
    }
    let mut count = 0;
    for (label, g) in &graphs {
        for f in checks {
            let mut r = f(g).unwrap();
            r.name = format!("{}/{label}", r.name);
            o.check(&r);
            count += 1;
        }
    }

    let mut equalities = Vec::new();
    for k in 2..=4 {
        for len in 3..=6 {
            equalities.push((format!("hypercycle({len},{k})"), generators::hypercycle(len, k).unwrap(), vec![0]));
        }
        for m in 2..=8 {
            equalities.push((format!("hyperstar({m},{k})"), generators::hyperstar(m, k).unwrap(), vec![0, 3]));
        }
        for n in k + 1..=k + 3 {
            equalities.push((format!("complete({n},{k})"), generators::complete(n, k).unwrap(), vec![0, 1, 2]));
        }
    }
    for (label, g, which) in &equalities {
        for &i in which {
            let r = checks[i](g).unwrap();
            o.require(r.status == Status::EqualityAttained, || {
                format!("{}/{label}: expected equality, got {:?}", r.name, r.status)
            });
            count += 1;
        }
    }
    o.summary =
        format!("{count} bound evaluations on {} hypergraphs, {} equality cases", graphs.len(), equalities.len());
}

fn c5_power_lift(o: &mut Outcome) {
    let bases = [
        ("C_3", generators::hypercycle(3, 2).unwrap()),
        ("D_{5,1}", generators::double_star(5, 1).unwrap()),
        ("D_{7,2}", generators::double_star(7, 2).unwrap()),
        ("P_{5,2}", generators::hyperpath(5, 2).unwrap()),
        ("S_{4,3;1,1,1}", generators::s_composition(4, 3, &[1, 1, 1]).unwrap()),
    ];
    let (mut count, mut worst) = (0, 0.0f64);
    for (label, g) in &bases {
        let base = rho(g, Weighting::Abc);
        for k in 3..=5 {
            if k <= g.k() {
                continue;
            }
            let lifted = rho(&generators::power(g, k).unwrap(), Weighting::Abc);
            let err = (lifted - base.powf(g.k() as f64 / k as f64)).abs();
            worst = worst.max(err);
            count += 1;
            o.require(err <= 1e-7, || format!("{label}^{k}: error {err:e}"));
        }
    }
    o.summary = format!("{count} lifts, max abs error {worst:.2e}");
}

fn c6_hypertree_scans(o: &mut Outcome) {
    let mut parts = Vec::new();
    for (m, k) in [(4, 3), (5, 3), (6, 3), (4, 4), (5, 4)] {
        let report = verify::extremal_scan_hypertrees(m, k).unwrap();
        o.require(report.checks.len() == 3, || format!("(m={m}, k={k}): {} checks instead of 3", report.checks.len()));
        for r in &report.checks {
            o.check(r);
            o.require(r.margin > verify::RANK_GAP, || format!("{}: rank gap {:e}", r.name, r.margin));
        }
        parts.push(format!("({m},{k}):{}", report.table.len()));
    }
    o.summary = format!("classes scanned {}", parts.join(" "));
}

fn c7_unicyclic_scans(o: &mut Outcome) {
    let mut count = 0;
    for g in 2..=3 {
        for m in 3..=7 {
            if m < g {
                continue;
            }
            let report = verify::extremal_scan_unicyclic_family(m, 3, g).unwrap();
            o.require(!report.checks.is_empty(), || format!("(m={m}, g={g}): no checks"));
            for r in &report.checks {
                o.check(r);
            }
            let top = &report.table[0];
            let a = vec![m - g, 0, 0];
            let expected = generators::unicyclic_family(m, 3, g, &a).unwrap();
            o.require(top.edges == expected.edges(), || format!("(m={m}, g={g}): top is {}", top.label));
            let cf = if g == 2 { closed_forms::rho_abc_u2(m, 3) } else { closed_forms::rho_abc_u3(m, 3) }.unwrap();
            o.require((top.rho - cf).abs() <= 1e-9, || format!("(m={m}, g={g}): {} vs closed form {cf}", top.rho));
            count += 1;
        }
    }
    o.summary = format!("{count} composition families");
}

fn c8_example_numerics(o: &mut Outcome) {
    let results = verify::run_worked_examples().unwrap();
    for r in &results {
        o.check(r);
    }
    let printed = [
        (verify::example_f1(1.0), -0.366025),
        (verify::example_f1((2.0 * (std::f64::consts::PI / 8.0).cos().powi(2)).cbrt()), 0.07559),
        (verify::example_f2(1.0), -0.35499),
        (verify::example_f2((2.0 * (std::f64::consts::PI / 14.0).cos().powi(2)).powf(0.25)), 0.08894),
    ];
    for (got, want) in printed {
        o.require((got - want).abs() <= 5e-5, || format!("printed {want} vs computed {got}"));
    }
    for name in ["examples/h1-below-p63", "examples/h2-below-p12-4"] {
        o.require(results.iter().any(|r| r.name == name && r.status == Status::Holds), || {
            format!("{name} missing or not strict")
        });
    }
    o.summary = format!(
        "{} example checks; values {}",
        results.len(),
        printed.iter().map(|(g, _)| format!("{g:.6}")).collect::<Vec<_>>().join(", ")
    );
}

fn c9_dense_oracle(o: &mut Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut worst: f64 = 0.0;
    let mut pairs = 0;
    while pairs < 20 {
        let (m, extra) = (rng.gen_range(1..=3), rng.gen_range(0..=3));
        let g = generators::random_connected(m, extra, 3, rng.gen()).unwrap();
        if g.n() > 8 {
            continue;
        }
        let x: Vec<f64> = (0..g.n()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        for (w, cw) in [
            (Weighting::Adjacency, common::W::Adj),
            (Weighting::Abc, common::W::Abc),
            (Weighting::Randic, common::W::Randic),
        ] {
            let err = (Operator::new(&g, w).form(&x) - common::Dense::new(&g, cw).form(&x)).abs();
            worst = worst.max(err);
            o.require(err <= 1e-10, || format!("{:?} under {w:?}: form error {err:e}", g.edges()));
        }
        pairs += 1;
    }
    o.summary = format!("{pairs} random (G, x) pairs with n <= 8, max abs error {worst:.2e}");
}

type Criterion = (&'static str, fn(&mut Outcome), Option<Duration>);

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 hyperstar exactness", c1_hyperstars, Some(Duration::from_secs(5))),
        ("2 closed forms vs solver", c2_closed_forms, Some(Duration::from_secs(60))),
        ("3 Randic unit", c3_randic, None),
        ("4 bound suite", c4_bounds, None),
        ("5 power lift", c5_power_lift, None),
        ("6 hypertree scans", c6_hypertree_scans, Some(Duration::from_secs(600))),
        ("7 unicyclic scans", c7_unicyclic_scans, None),
        ("8 example numerics", c8_example_numerics, None),
        ("9 dense oracle", c9_dense_oracle, None),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let mut o = Outcome::new();
        let start = Instant::now();
        run(&mut o);
        let elapsed = start.elapsed();
        if let Some(limit) = limit {
            o.require(elapsed <= limit, || format!("took {elapsed:?}, limit {limit:?}"));
        }
        println!("{} {name}: {} [{:.2?}]", if o.ok { "PASS" } else { "FAIL" }, o.summary, elapsed);
        for f in &o.failures {
            println!("    {f}");
        }
        failed += usize::from(!o.ok);
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
