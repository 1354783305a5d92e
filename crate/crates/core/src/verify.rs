//! Numeric checks of the spectral bounds and extremal orderings.
//!
//! Comparisons never use bare floats. Each spectral radius enters as its
//! certified bracket `[lower, upper]`, closed forms enter as points, and an
//! inequality is reported violated only when the two sides are separated by
//! more than [`slack`].

use crate::closed_forms::{self, ClosedFormError};
use crate::generators::{self, GenError};
use crate::hypergraph::{CanonicalCode, UniformHypergraph};
use crate::spectral::{solve, SolveError, SolveOptions, SpectralEstimate};
use crate::tensor::{Operator, Weighting};
use serde::Serialize;
use std::collections::HashMap;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    EqualityAttained,
    Violated,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs` for inequalities `lhs <= rhs`; the absolute gap for equalities.
    pub margin: f64,
    pub detail: String,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Holds | Status::EqualityAttained)
    }

    fn new(name: impl Into<String>, status: Status, lhs: f64, rhs: f64, detail: impl Into<String>) -> Self {
        Self { name: name.into(), status, lhs, rhs, margin: rhs - lhs, detail: detail.into() }
    }

    fn inconclusive(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(name, Status::Inconclusive, f64::NAN, f64::NAN, detail)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("hypergraph is not connected")]
    NotConnected,
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}

/// Solver settings used by every check.
pub fn check_options() -> SolveOptions {
    SolveOptions::with_tol(1e-12)
}

/// Absolute tolerance for comparing values of size about `scale`.
pub fn slack(scale: f64) -> f64 {
    1e-11 * scale.abs().max(1.0)
}

/// A closed interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Iv {
    pub lo: f64,
    pub hi: f64,
}

impl Iv {
    pub fn point(v: f64) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn of(est: &SpectralEstimate) -> Self {
        Self { lo: est.lower, hi: est.upper }
    }

    pub fn mid(self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn scale(self, c: f64) -> Self {
        Self { lo: self.lo * c, hi: self.hi * c }
    }

    pub fn powf(self, p: f64) -> Self {
        Self { lo: self.lo.max(0.0).powf(p), hi: self.hi.max(0.0).powf(p) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    /// `a` is certainly below `b` by more than the slack.
    Below,
    /// The intervals meet within the slack.
    Touching,
    Above,
}

pub fn order(a: Iv, b: Iv) -> Order {
    let s = slack(a.hi.abs().max(b.hi.abs()));
    if a.hi < b.lo - s {
        Order::Below
    } else if a.lo > b.hi + s {
        Order::Above
    } else {
        Order::Touching
    }
}

fn radius(g: &UniformHypergraph, w: Weighting) -> Result<Result<SpectralEstimate, String>, VerifyError> {
    if !g.is_connected() {
        return Err(VerifyError::NotConnected);
    }
    match solve(&Operator::new(g, w), &check_options()) {
        Ok(est) => Ok(Ok(est)),
        Err(SolveError::NonConvergence { iters, lower, upper }) => {
            Ok(Err(format!("solver stopped after {iters} iterations with bracket [{lower}, {upper}]")))
        }
        Err(e) => Ok(Err(e.to_string())),
    }
}

macro_rules! solve_or_inconclusive {
    ($name:expr, $g:expr, $w:expr) => {
        match radius($g, $w)? {
            Ok(est) => est,
            Err(msg) => return Ok(CheckResult::inconclusive($name, msg)),
        }
    };
}

/// Status of a two-sided bound `lower <= rho <= upper` whose equality
/// cases are characterized by `condition`.
fn two_sided(name: &str, rho: Iv, lower: f64, upper: f64, condition: bool, condition_text: &str) -> CheckResult {
    let lo_order = order(Iv::point(lower), rho);
    let hi_order = order(rho, Iv::point(upper));
    let detail =
        format!("{lower:.12} <= rho in [{:.12}, {:.12}] <= {upper:.12}; {condition_text}: {condition}", rho.lo, rho.hi);
    let touching = lo_order == Order::Touching || hi_order == Order::Touching;
    let status = if lo_order == Order::Above || hi_order == Order::Above {
        Status::Violated
    } else if condition && lo_order == Order::Touching && hi_order == Order::Touching {
        Status::EqualityAttained
    } else if condition {
        // the bounds coincide under the condition, so rho must meet them
        Status::Violated
    } else if touching {
        Status::Inconclusive
    } else {
        Status::Holds
    };
    let mut r = CheckResult::new(name, status, rho.mid(), upper, detail);
    r.margin = (rho.lo - lower).min(upper - rho.hi);
    r
}

/// `min_e (sum_e d - k)^{1/k} <= rho_ABC <= max_e (sum_e d - k)^{1/k}`.
pub fn check_edge_sum_bounds(g: &UniformHypergraph) -> Result<CheckResult, VerifyError> {
    let name = "edge-sum-bounds";
    let est = solve_or_inconclusive!(name, g, Weighting::Abc);
    let d = g.degrees();
    let sums: Vec<usize> = g.edges().iter().map(|e| e.iter().map(|&v| d[v]).sum()).collect();
    let k = g.k();
    let root = |s: usize| ((s - k) as f64).powf(1.0 / k as f64);
    let lo = root(*sums.iter().min().expect("m >= 1"));
    let hi = root(*sums.iter().max().expect("m >= 1"));
    let constant = sums.iter().all(|&s| s == sums[0]);
    Ok(two_sided(name, Iv::of(&est), lo, hi, constant, "constant edge degree sums"))
}

/// `(k delta - k)^{1/k} <= rho_ABC <= (k Delta - k)^{1/k}`.
pub fn check_regular_corollary(g: &UniformHypergraph) -> Result<CheckResult, VerifyError> {
    let name = "regular-corollary";
    let est = solve_or_inconclusive!(name, g, Weighting::Abc);
    let d = g.degrees();
    let k = g.k() as f64;
    let lo = (k * d.min_degree as f64 - k).powf(1.0 / k);
    let hi = (k * d.max_degree as f64 - k).powf(1.0 / k);
    Ok(two_sided(name, Iv::of(&est), lo, hi, d.is_regular(), "regular"))
}

/// `rho_ABC >= (k/n) sum_e omega(e)^{1/k}`, with equality exactly when the
/// weighted row sums `sum_{e ∋ i} omega(e)^{1/k}` are all equal.
pub fn check_mean_bound(g: &UniformHypergraph) -> Result<CheckResult, VerifyError> {
    let name = "mean-bound";
    let est = solve_or_inconclusive!(name, g, Weighting::Abc);
    let op = Operator::new(g, Weighting::Abc);
    let bound = g.k() as f64 / g.n() as f64 * op.weights().iter().sum::<f64>();
    let mut rows = vec![0.0; g.n()];
    for (edge, &w) in op.edges().iter().zip(op.weights()) {
        for &v in edge {
            rows[v] += w;
        }
    }
    let (rmin, rmax) = rows.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &r| (a.min(r), b.max(r)));
    let constant = rmax - rmin <= 1e-12 * rmax.max(1.0);
    let rho = Iv::of(&est);
    let detail = format!("bound {bound:.12} <= rho in [{:.12}, {:.12}]; constant row sums: {constant}", rho.lo, rho.hi);
    let status = match (order(Iv::point(bound), rho), constant) {
        (Order::Above, _) => Status::Violated,
        (Order::Touching, true) => Status::EqualityAttained,
        (Order::Touching, false) => Status::Inconclusive,
        (Order::Below, true) => Status::Violated,
        (Order::Below, false) => Status::Holds,
    };
    let mut r = CheckResult::new(name, status, bound, rho.mid(), detail);
    r.margin = rho.lo - bound;
    Ok(r)
}

/// `rho_ABC <= ((Delta-1)/Delta)^{1/k} rho_A`, with equality exactly when
/// every edge has `omega = (Delta-1)/Delta`.
pub fn check_delta_bound(g: &UniformHypergraph) -> Result<CheckResult, VerifyError> {
    let name = "delta-bound";
    let abc = solve_or_inconclusive!(name, g, Weighting::Abc);
    let adj = solve_or_inconclusive!(name, g, Weighting::Adjacency);
    let d = g.degrees();
    let delta = d.max_degree as f64;
    let ratio = (delta - 1.0) / delta;
    let c = ratio.powf(1.0 / g.k() as f64);
    let rhs = Iv::of(&adj).scale(c);
    let all_equal = (0..g.m()).all(|e| {
        let w = crate::tensor::omega_from_degrees(&g.edge(e).iter().map(|&v| d[v]).collect::<Vec<_>>());
        (w - ratio).abs() <= 1e-15
    });
    let lhs = Iv::of(&abc);
    let detail = format!(
        "rho_ABC in [{:.12}, {:.12}] <= {c:.12} * rho_A in [{:.12}, {:.12}]; every omega = (Delta-1)/Delta: {all_equal}",
        lhs.lo, lhs.hi, rhs.lo, rhs.hi
    );
    let status = match (order(lhs, rhs), all_equal) {
        (Order::Above, _) => Status::Violated,
        (Order::Touching, true) => Status::EqualityAttained,
        (Order::Touching, false) => Status::Inconclusive,
        (Order::Below, true) => Status::Violated,
        (Order::Below, false) => Status::Holds,
    };
    let mut r = CheckResult::new(name, status, lhs.mid(), rhs.mid(), detail);
    r.margin = rhs.lo - lhs.hi;
    Ok(r)
}

/// `rho_ABC(G^k) = rho_ABC(G)^{r/k}` where `r = G.k()`.
pub fn check_power_relation(g: &UniformHypergraph, k: usize) -> Result<CheckResult, VerifyError> {
    let name = "power-relation";
    let lifted = generators::power(g, k)?;
    let base = solve_or_inconclusive!(name, g, Weighting::Abc);
    let top = solve_or_inconclusive!(name, &lifted, Weighting::Abc);
    let predicted = Iv::of(&base).powf(g.k() as f64 / k as f64);
    let actual = Iv::of(&top);
    let status = if order(actual, predicted) == Order::Touching { Status::EqualityAttained } else { Status::Violated };
    let detail = format!(
        "rho(G^{k}) in [{:.12}, {:.12}] vs rho(G)^({}/{k}) in [{:.12}, {:.12}]",
        actual.lo,
        actual.hi,
        g.k(),
        predicted.lo,
        predicted.hi
    );
    let mut r = CheckResult::new(name, status, actual.mid(), predicted.mid(), detail);
    r.margin = (actual.mid() - predicted.mid()).abs();
    Ok(r)
}

/// `rho(R(G)) = 1`, and `x_i = d_i^{1/k}` solves the eigen-equations exactly.
pub fn check_randic_unit(g: &UniformHypergraph) -> Result<CheckResult, VerifyError> {
    let name = "randic-unit";
    let est = solve_or_inconclusive!(name, g, Weighting::Randic);
    let op = Operator::new(g, Weighting::Randic);
    let k = g.k() as f64;
    let mut x: Vec<f64> = g.degrees().degrees.iter().map(|&d| (d as f64).powf(1.0 / k)).collect();
    let norm = x.iter().map(|v| v.powf(k)).sum::<f64>().powf(1.0 / k);
    x.iter_mut().for_each(|v| *v /= norm);
    let res = crate::spectral::residual(&op, 1.0, &x);
    let rho = Iv::of(&est);
    let ok = order(rho, Iv::point(1.0)) == Order::Touching && res <= 1e-13;
    let detail = format!("rho in [{:.14}, {:.14}]; residual of degree vector {res:.2e}", rho.lo, rho.hi);
    let mut r =
        CheckResult::new(name, if ok { Status::EqualityAttained } else { Status::Violated }, rho.mid(), 1.0, detail);
    r.margin = (rho.mid() - 1.0).abs();
    Ok(r)
}

/// The hypergraph and weighting on which a named closed form is attained.
pub fn generating_hypergraph(name: &str, m: usize, k: usize) -> Result<(UniformHypergraph, Weighting), VerifyError> {
    let lift = |g: UniformHypergraph| -> Result<UniformHypergraph, VerifyError> {
        if k == g.k() {
            Ok(g)
        } else {
            Ok(generators::power(&g, k)?)
        }
    };
    let padded = |head: &[usize]| -> Vec<usize> {
        let mut a = head.to_vec();
        a.resize(k.max(head.len()), 0);
        a
    };
    let pair = match name {
        "hyperstar" => (generators::hyperstar(m, k)?, Weighting::Abc),
        "double-star1" => (lift(generators::double_star(m, 1)?)?, Weighting::Abc),
        "adj-double-star2" => (lift(generators::double_star(m, 2)?)?, Weighting::Adjacency),
        "u2" => (generators::unicyclic_family(m, k, 2, &padded(&[m.saturating_sub(2)]))?, Weighting::Abc),
        "u3" => (generators::unicyclic_family(m, k, 3, &padded(&[m.saturating_sub(3)]))?, Weighting::Abc),
        "s311" => (generators::s_composition(m, k, &padded(&[m.saturating_sub(3), 1, 1]))?, Weighting::Abc),
        "t1" | "t2" | "t3" | "t4" => {
            if k != 3 {
                return Err(GenError::Params { family: "t-family", reason: format!("k must be 3, got {k}") }.into());
            }
            (generators::t_family(m, name[1..].parse().expect("digit"))?, Weighting::Abc)
        }
        "s1111" => (generators::s_composition(m, k, &padded(&[m.saturating_sub(4), 1, 1, 1]))?, Weighting::Abc),
        "adj-s421" => (generators::s_composition(m, k, &padded(&[m.saturating_sub(4), 2, 1]))?, Weighting::Adjacency),
        "hyperpath" => (generators::hyperpath(m, k)?, Weighting::Abc),
        "complete-bound" => (generators::complete(m, k)?, Weighting::Abc),
        other => return Err(VerifyError::UnknownCheck(format!("closed form {other}"))),
    };
    Ok(pair)
}

/// Compares a closed form with the solver on its generating hypergraph.
pub fn check_closed_form(name: &str, m: usize, k: usize) -> Result<CheckResult, VerifyError> {
    let value = closed_forms::by_name(name, m, k)?;
    let (g, w) = generating_hypergraph(name, m, k)?;
    let label = format!("closed-form/{name}");
    let est = solve_or_inconclusive!(label.clone(), &g, w);
    let rho = Iv::of(&est);
    let status =
        if order(rho, Iv::point(value)) == Order::Touching { Status::EqualityAttained } else { Status::Violated };
    let detail = format!("m = {m}, k = {k}: closed form {value:.15}, solver [{:.15}, {:.15}]", rho.lo, rho.hi);
    let mut r = CheckResult::new(label, status, rho.mid(), value, detail);
    r.margin = (rho.mid() - value).abs();
    Ok(r)
}

/// One hypergraph in a scan, with its certified radius.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRow {
    pub label: String,
    pub edges: Vec<Vec<usize>>,
    pub rho: f64,
    pub lower: f64,
    pub upper: f64,
    pub power_hypertree: Option<bool>,
    pub linear: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanReport {
    pub name: String,
    /// Every scanned isomorphism class, by decreasing radius.
    pub table: Vec<ScanRow>,
    pub checks: Vec<CheckResult>,
}

/// Required separation between the claimed maximizer and the runner-up.
pub const RANK_GAP: f64 = 1e-9;

fn scan_rows(
    members: Vec<(String, UniformHypergraph)>,
) -> Result<Result<Vec<(ScanRow, CanonicalCode)>, String>, VerifyError> {
    let mut rows = Vec::with_capacity(members.len());
    for (label, g) in members {
        let est = match radius(&g, Weighting::Abc)? {
            Ok(est) => est,
            Err(msg) => return Ok(Err(format!("{label}: {msg}"))),
        };
        let report = g.classify();
        let code = g.canonical_code_with_cap(usize::MAX).expect("no cap");
        rows.push((
            ScanRow {
                label,
                edges: g.edges().to_vec(),
                rho: est.rho,
                lower: est.lower,
                upper: est.upper,
                power_hypertree: report.power_hypertree,
                linear: report.linear,
            },
            code,
        ));
    }
    rows.sort_by(|a, b| b.0.rho.total_cmp(&a.0.rho));
    Ok(Ok(rows))
}

/// Checks that `expected` is the unique top entry of `rows` with a certified
/// gap above the runner-up, and that its radius equals `closed_form`.
fn unique_max(
    name: &str,
    rows: &[&(ScanRow, CanonicalCode)],
    expected: &CanonicalCode,
    closed_form: Option<f64>,
) -> CheckResult {
    let Some((top, top_code)) = rows.first().map(|r| (&r.0, &r.1)) else {
        return CheckResult::inconclusive(name, "empty scan");
    };
    if top_code != expected {
        return CheckResult::new(
            name,
            Status::Violated,
            top.rho,
            f64::NAN,
            format!("maximum attained by {} instead of the expected class", top.label),
        );
    }
    let gap = rows.get(1).map_or(f64::INFINITY, |r| top.lower - r.0.upper);
    let runner = rows.get(1).map_or(f64::NAN, |r| r.0.rho);
    let mut detail = format!("max {} = {:.12} over {} classes; gap to next {gap:.3e}", top.label, top.rho, rows.len());
    let mut status = if gap > RANK_GAP { Status::Holds } else { Status::Violated };
    if let Some(cf) = closed_form {
        let meets = order(Iv { lo: top.lower, hi: top.upper }, Iv::point(cf)) == Order::Touching;
        detail.push_str(&format!("; closed form {cf:.12} {}", if meets { "matches" } else { "differs" }));
        if !meets {
            status = Status::Violated;
        }
    }
    let mut r = CheckResult::new(name, status, runner, top.rho, detail);
    r.margin = gap;
    r
}

fn code_of(g: &UniformHypergraph) -> CanonicalCode {
    g.canonical_code_with_cap(usize::MAX).expect("no cap")
}

/// Enumerates all hypertrees with `m` edges and checks the top of the ABC
/// ordering: the hyperstar first, `D_{m,1}^k` second (`m >= 4`), and
/// `S_{m,k;m-3,1,1}` first among non-power hypertrees (`k >= 3`, `m >= 4`).
pub fn extremal_scan_hypertrees(m: usize, k: usize) -> Result<ScanReport, VerifyError> {
    let name = format!("hypertree-scan/m{m}-k{k}");
    let trees = match generators::enumerate_hypertrees(m, k) {
        Ok(t) => t,
        Err(e @ GenError::Budget { .. }) => {
            return Ok(ScanReport {
                name: name.clone(),
                table: Vec::new(),
                checks: vec![CheckResult::inconclusive(name, e.to_string())],
            })
        }
        Err(e) => return Err(e.into()),
    };

    let star = generators::hyperstar(m, k)?;
    let mut named: HashMap<CanonicalCode, String> = HashMap::new();
    named.insert(code_of(&star), format!("S_{{{m},{k}}}"));
    let second = if m >= 3 {
        let d = generators::double_star(m, 1)?;
        let d = if k > 2 { generators::power(&d, k)? } else { d };
        named.insert(code_of(&d), format!("D_{{{m},1}}^{k}"));
        Some(d)
    } else {
        None
    };
    let non_power = if k >= 3 && m >= 4 {
        let mut a = vec![m - 3, 1, 1];
        a.resize(k, 0);
        let s = generators::s_composition(m, k, &a)?;
        named.insert(code_of(&s), format!("S_{{{m},{k};{},1,1}}", m - 3));
        Some(s)
    } else {
        None
    };

    let members = trees
        .into_iter()
        .enumerate()
        .map(|(i, t)| {
            let label = named.get(&code_of(&t)).cloned().unwrap_or_else(|| format!("tree#{i}"));
            (label, t)
        })
        .collect();
    let rows = match scan_rows(members)? {
        Ok(rows) => rows,
        Err(msg) => {
            return Ok(ScanReport {
                name: name.clone(),
                table: Vec::new(),
                checks: vec![CheckResult::inconclusive(name, msg)],
            })
        }
    };

    let all: Vec<_> = rows.iter().collect();
    let mut checks = vec![unique_max(
        &format!("{name}/max-hyperstar"),
        &all,
        &code_of(&star),
        Some(closed_forms::rho_abc_hyperstar(m, k)?),
    )];
    if let (Some(d), true) = (&second, m >= 4) {
        checks.push(unique_max(
            &format!("{name}/second-double-star"),
            &all[1..],
            &code_of(d),
            Some(closed_forms::rho_abc_double_star1(m, k)?),
        ));
    }
    if let Some(s) = &non_power {
        let np: Vec<_> = rows.iter().filter(|r| r.0.power_hypertree == Some(false)).collect();
        checks.push(unique_max(
            &format!("{name}/max-non-power"),
            &np,
            &code_of(s),
            Some(closed_forms::rho_abc_s311(m, k)?),
        ));
    }
    Ok(ScanReport { name, table: rows.into_iter().map(|r| r.0).collect(), checks })
}

/// Scans every composition `a` of `m - g` into `k` parts for
/// `U_{m,k,g}(a)` and checks that `a = (m-g, 0, ..., 0)` is the unique
/// maximizer up to isomorphism, with the closed-form value.
pub fn extremal_scan_unicyclic_family(m: usize, k: usize, g: usize) -> Result<ScanReport, VerifyError> {
    let name = format!("unicyclic-scan/m{m}-k{k}-g{g}");
    if m < g {
        return Err(GenError::Params { family: "unicyclic", reason: format!("m = {m} < g = {g}") }.into());
    }
    let mut seen = HashMap::new();
    let mut members = Vec::new();
    for a in generators::compositions(m - g, k) {
        let u = generators::unicyclic_family(m, k, g, &a)?;
        if seen.insert(code_of(&u), ()).is_none() {
            let label = format!("U_{{{m},{k},{g}}}({})", a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
            members.push((label, u));
        }
    }
    let mut top = vec![m - g];
    top.resize(k, 0);
    let expected = code_of(&generators::unicyclic_family(m, k, g, &top)?);
    let closed = if g == 2 { closed_forms::rho_abc_u2(m, k)? } else { closed_forms::rho_abc_u3(m, k)? };
    let rows = match scan_rows(members)? {
        Ok(rows) => rows,
        Err(msg) => {
            return Ok(ScanReport {
                name: name.clone(),
                table: Vec::new(),
                checks: vec![CheckResult::inconclusive(name, msg)],
            })
        }
    };
    let all: Vec<_> = rows.iter().collect();
    let checks = vec![unique_max(&format!("{name}/max"), &all, &expected, Some(closed))];
    Ok(ScanReport { name, table: rows.into_iter().map(|r| r.0).collect(), checks })
}

/// Largest `m` for which [`scan_unicyclic_shapes`] enumerates all shapes.
pub const UNICYCLIC_SHAPE_BUDGET: usize = 5;

/// Every unicyclic `k`-uniform hypergraph with `m` edges, obtained from
/// `C_{g,k}` (`2 <= g <= m`) by pendant-edge attachment, one per class.
pub fn enumerate_unicyclic(m: usize, k: usize) -> Result<Vec<UniformHypergraph>, VerifyError> {
    if m > UNICYCLIC_SHAPE_BUDGET || k < 3 || m < 2 {
        return Err(GenError::Budget {
            what: format!("unicyclic enumeration with m = {m}, k = {k}"),
            budget: UNICYCLIC_SHAPE_BUDGET,
        }
        .into());
    }
    let mut out = Vec::new();
    let mut seen = HashMap::new();
    for g in 2..=m {
        let mut level = vec![generators::hypercycle(g, k)?];
        for _ in g..m {
            let mut next = Vec::new();
            let mut level_seen = HashMap::new();
            for h in &level {
                for v in 0..h.n() {
                    let child = generators::attach_pendant_edge(h, v);
                    if level_seen.insert(code_of(&child), ()).is_none() {
                        next.push(child);
                    }
                }
            }
            level = next;
        }
        for h in level {
            if seen.insert(code_of(&h), ()).is_none() {
                out.push(h);
            }
        }
    }
    Ok(out)
}

/// All unicyclic shapes with `m` edges: the unique maximum is
/// `U_{m,2}^{(k)}`, and among linear ones (`m >= 3`) it is `U_{m,3}^{(k)}`.
pub fn scan_unicyclic_shapes(m: usize, k: usize) -> Result<ScanReport, VerifyError> {
    let name = format!("unicyclic-shapes/m{m}-k{k}");
    let shapes = enumerate_unicyclic(m, k)?;
    let mut top2 = vec![m - 2];
    top2.resize(k, 0);
    let u2 = generators::unicyclic_family(m, k, 2, &top2)?;
    let u3 = if m >= 3 {
        let mut a = vec![m - 3];
        a.resize(k, 0);
        Some(generators::unicyclic_family(m, k, 3, &a)?)
    } else {
        None
    };
    let (c2, c3) = (code_of(&u2), u3.as_ref().map(code_of));
    let members = shapes
        .into_iter()
        .enumerate()
        .map(|(i, h)| {
            let c = code_of(&h);
            let label = if c == c2 {
                format!("U_{{{m},2}}^({k})")
            } else if Some(&c) == c3.as_ref() {
                format!("U_{{{m},3}}^({k})")
            } else {
                format!("unicyclic#{i}")
            };
            (label, h)
        })
        .collect();
    let rows = match scan_rows(members)? {
        Ok(rows) => rows,
        Err(msg) => {
            return Ok(ScanReport {
                name: name.clone(),
                table: Vec::new(),
                checks: vec![CheckResult::inconclusive(name, msg)],
            })
        }
    };
    let all: Vec<_> = rows.iter().collect();
    let mut checks = vec![unique_max(&format!("{name}/max"), &all, &c2, Some(closed_forms::rho_abc_u2(m, k)?))];
    if let Some(c3) = c3 {
        let linear: Vec<_> = rows.iter().filter(|r| r.0.linear).collect();
        checks.push(unique_max(&format!("{name}/max-linear"), &linear, &c3, Some(closed_forms::rho_abc_u3(m, k)?)));
    }
    Ok(ScanReport { name, table: rows.into_iter().map(|r| r.0).collect(), checks })
}

/// Reduced eigen-equation for `H_1`: `t^3 - (3/4)^{1/2} t^{3/2} - 1/2`.
pub fn example_f1(t: f64) -> f64 {
    t.powi(3) - 0.75f64.sqrt() * t.powf(1.5) - 0.5
}

/// Reduced eigen-equation for `H_2`: `t^4 - (5/8)^{1/3} t^{8/3} - 1/2`.
pub fn example_f2(t: f64) -> f64 {
    t.powi(4) - (5.0f64 / 8.0).cbrt() * t.powf(8.0 / 3.0) - 0.5
}

/// Tolerance for the four printed example values.
pub const EXAMPLE_TOL: f64 = 5e-5;

fn printed_value(name: &str, computed: f64, printed: f64) -> CheckResult {
    let gap = (computed - printed).abs();
    let status = if gap <= EXAMPLE_TOL { Status::EqualityAttained } else { Status::Violated };
    let mut r = CheckResult::new(name, status, computed, printed, format!("computed {computed:.8}, printed {printed}"));
    r.margin = gap;
    r
}

/// `f(rho) = 0` for the reduced equation, checked on the certified bracket.
fn reduction(name: &str, est: &SpectralEstimate, f: fn(f64) -> f64) -> CheckResult {
    let (lo, hi) = (f(est.lower), f(est.upper));
    let s = slack(1.0);
    let ok = lo <= s && hi >= -s;
    let mut r = CheckResult::new(
        name,
        if ok { Status::EqualityAttained } else { Status::Violated },
        f(est.rho),
        0.0,
        format!("f(lower) = {lo:.3e}, f(upper) = {hi:.3e}, rho = {:.12}", est.rho),
    );
    r.margin = f(est.rho).abs();
    r
}

fn strictly_below(name: &str, a: Iv, b: Iv, what: &str) -> CheckResult {
    let status = match order(a, b) {
        Order::Below => Status::Holds,
        Order::Touching => Status::Inconclusive,
        Order::Above => Status::Violated,
    };
    let mut r = CheckResult::new(
        name,
        status,
        a.mid(),
        b.mid(),
        format!("{what}: [{:.12}, {:.12}] vs [{:.12}, {:.12}]", a.lo, a.hi, b.lo, b.hi),
    );
    r.margin = b.lo - a.hi;
    r
}

/// Rebuilds both example hypertrees and checks their reduced equations,
/// the printed numerics and the comparisons with hyperpaths.
pub fn run_worked_examples() -> Result<Vec<CheckResult>, VerifyError> {
    let mut out = Vec::new();
    let h1 = generators::example_h(1)?;
    let h2 = generators::example_h(2)?;
    let Ok(e1) = radius(&h1, Weighting::Abc)? else {
        return Ok(vec![CheckResult::inconclusive("examples/h1", "solver did not converge")]);
    };
    let Ok(e2) = radius(&h2, Weighting::Abc)? else {
        return Ok(vec![CheckResult::inconclusive("examples/h2", "solver did not converge")]);
    };

    let p63 = (2.0 * (PI / 8.0).cos().powi(2)).cbrt();
    out.push(reduction("examples/h1-reduction", &e1, example_f1));
    out.push(printed_value("examples/h1-f(1)", example_f1(1.0), -0.366025));
    out.push(printed_value("examples/h1-f(p63)", example_f1(p63), 0.07559));
    let Ok(path6) = radius(&generators::hyperpath(6, 3)?, Weighting::Abc)? else {
        return Ok(vec![CheckResult::inconclusive("examples/p63", "solver did not converge")]);
    };
    out.push(strictly_below("examples/h1-below-p63", Iv::of(&e1), Iv::of(&path6), "rho(H_1) < rho(P_{6,3})"));

    let target = (2.0 * (PI / 14.0).cos().powi(2)).powf(0.25);
    out.push(reduction("examples/h2-reduction", &e2, example_f2));
    out.push(printed_value("examples/h2-f(1)", example_f2(1.0), -0.35499));
    out.push(printed_value("examples/h2-f(p12)", example_f2(target), 0.08894));
    out.push(strictly_below(
        "examples/h2-below-p12-4",
        Iv::of(&e2),
        Iv::point(target),
        "rho(H_2) < (2cos^2(pi/14))^(1/4) = rho(P_{12,4})",
    ));
    let p12_3 = closed_forms::rho_abc_hyperpath(12, 3)?;
    out.push(strictly_below(
        "examples/h2-below-p12-3",
        Iv::of(&e2),
        Iv::point(p12_3),
        "rho(H_2) < rho(P_{12,3}) = (2cos^2(pi/14))^(1/3)",
    ));

    // weight of the three edges through the degree-3 center of H_2
    let d = h2.degrees();
    let center = (0..h2.n()).find(|&v| d[v] == 3).expect("H_2 has a degree-3 center");
    let op = Operator::new(&h2, Weighting::Abc);
    let w = op
        .edges()
        .iter()
        .zip(op.weights())
        .find(|(e, _)| e.contains(&center))
        .map(|(_, &w)| w)
        .expect("center lies on an edge");
    let expected = (5.0f64 / 24.0).powf(0.25);
    let mut r = CheckResult::new(
        "examples/h2-center-weight",
        if (w - expected).abs() < 1e-15 { Status::EqualityAttained } else { Status::Violated },
        w,
        expected,
        format!("degrees (3,2,2,2) give omega = 5/24, weight {w:.12}; (1/3)^(1/4) = {:.12}", (1.0f64 / 3.0).powf(0.25)),
    );
    r.margin = (w - expected).abs();
    out.push(r);
    Ok(out)
}

/// Named families at size `m` and uniformity `k` used by the bound checks.
/// Families whose parameters do not apply at `(m, k)` are skipped.
pub fn named_families(m: usize, k: usize) -> Vec<(String, UniformHypergraph)> {
    let mut out = Vec::new();
    let mut push = |label: String, g: Result<UniformHypergraph, GenError>| {
        if let Ok(g) = g {
            out.push((label, g));
        }
    };
    push(format!("hyperstar({m},{k})"), generators::hyperstar(m, k));
    push(format!("hyperpath({m},{k})"), generators::hyperpath(m, k));
    push(format!("hypercycle({m},{k})"), generators::hypercycle(m, k));
    if m <= 7 {
        push(format!("complete({},{k})", k + 1 + m % 3), generators::complete(k + 1 + m % 3, k));
    }
    for a in 1..=(m.saturating_sub(1) / 2).min(2) {
        let d = generators::double_star(m, a).and_then(|d| if k > 2 { generators::power(&d, k) } else { Ok(d) });
        push(format!("double-star({m},{a})^{k}"), d);
    }
    if m >= 3 && k >= 3 {
        let mut a = vec![m - 3, 1, 1];
        a.resize(k, 0);
        push(format!("s-comp({m},{k};{a:?})"), generators::s_composition(m, k, &a));
    }
    if k >= 3 {
        for g in 2..=3 {
            if m >= g {
                let mut a = vec![m - g];
                a.resize(k, 0);
                push(format!("unicyclic({m},{k},{g})"), generators::unicyclic_family(m, k, g, &a));
            }
        }
    }
    if k == 3 {
        for idx in 1..=4 {
            push(format!("t-family({m},{idx})"), generators::t_family(m, idx));
        }
    }
    out
}

/// Names accepted by [`run_check`].
pub const CHECK_NAMES: &[&str] = &[
    "closed-forms",
    "delta-bound",
    "edge-sum-bounds",
    "hypertree-scan",
    "mean-bound",
    "power-relation",
    "randic-unit",
    "regular-corollary",
    "unicyclic-scan",
    "unicyclic-shapes",
    "worked-examples",
];

/// Parameters for [`run_check`]. `None` means "the default desk grid".
#[derive(Debug, Clone, Copy, Default)]
pub struct GridParams {
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub g: Option<usize>,
}

fn ms(p: &GridParams, default: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    p.m.map_or_else(|| default.collect(), |m| vec![m])
}

fn ks(p: &GridParams, default: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    p.k.map_or_else(|| default.collect(), |k| vec![k])
}

fn labelled(mut r: CheckResult, label: &str) -> CheckResult {
    r.name = format!("{}/{label}", r.name);
    r
}

/// Runs one named check over the grid described by `p`. Results are
/// sorted by name.
pub fn run_check(name: &str, p: &GridParams) -> Result<Vec<CheckResult>, VerifyError> {
    let mut out = Vec::new();
    match name {
        "edge-sum-bounds" | "regular-corollary" | "mean-bound" | "delta-bound" | "randic-unit" => {
            let f: fn(&UniformHypergraph) -> Result<CheckResult, VerifyError> = match name {
                "edge-sum-bounds" => check_edge_sum_bounds,
                "regular-corollary" => check_regular_corollary,
                "mean-bound" => check_mean_bound,
                "delta-bound" => check_delta_bound,
                _ => check_randic_unit,
            };
            for k in ks(p, 2..=4) {
                for m in ms(p, 1..=10) {
                    for (label, g) in named_families(m, k) {
                        out.push(labelled(f(&g)?, &label));
                    }
                }
            }
        }
        "power-relation" => {
            let bases: Vec<(&str, UniformHypergraph)> = vec![
                ("triangle", generators::hypercycle(3, 2)?),
                ("D_{5,1}", generators::double_star(5, 1)?),
                ("D_{7,2}", generators::double_star(7, 2)?),
                ("P_{4,2}", generators::hyperpath(4, 2)?),
                ("P_{5,2}", generators::hyperpath(5, 2)?),
                ("S_{4,3;1,1,1}", generators::s_composition(4, 3, &[1, 1, 1])?),
            ];
            for (label, base) in &bases {
                for k in ks(p, 3..=5) {
                    if k > base.k() {
                        out.push(labelled(check_power_relation(base, k)?, &format!("{label}^{k}")));
                    }
                }
            }
        }
        "closed-forms" => {
            for cf in closed_forms::NAMES {
                for k in ks(p, 2..=4) {
                    for m in ms(p, 2..=10) {
                        if let (Ok(_), Ok(_)) = (closed_forms::by_name(cf, m, k), generating_hypergraph(cf, m, k)) {
                            out.push(check_closed_form(cf, m, k)?);
                        }
                    }
                }
            }
        }
        "hypertree-scan" => {
            let grid: Vec<(usize, usize)> = match (p.m, p.k) {
                (None, None) => vec![(4, 3), (5, 3), (6, 3), (4, 4), (5, 4), (4, 2), (6, 2)],
                _ => {
                    let k = p.k.unwrap_or(3);
                    ms(p, 4..=generators::enumeration_budget(k)).into_iter().map(|m| (m, k)).collect()
                }
            };
            for (m, k) in grid {
                out.extend(extremal_scan_hypertrees(m, k)?.checks);
            }
        }
        "unicyclic-scan" => {
            let gs = p.g.map_or(vec![2, 3], |g| vec![g]);
            for k in ks(p, 3..=3) {
                for g in &gs {
                    for m in ms(p, 3..=7) {
                        if m >= *g {
                            out.extend(extremal_scan_unicyclic_family(m, k, *g)?.checks);
                        }
                    }
                }
            }
        }
        "unicyclic-shapes" => {
            for k in ks(p, 3..=3) {
                for m in ms(p, 2..=4) {
                    out.extend(scan_unicyclic_shapes(m, k)?.checks);
                }
            }
        }
        "worked-examples" => out.extend(run_worked_examples()?),
        other => return Err(VerifyError::UnknownCheck(other.to_string())),
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

/// Every check in [`CHECK_NAMES`], sorted by name.
pub fn run_all(p: &GridParams) -> Result<Vec<CheckResult>, VerifyError> {
    let mut out = Vec::new();
    for name in CHECK_NAMES {
        out.extend(run_check(name, p)?);
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn status(r: Result<CheckResult, VerifyError>) -> Status {
        r.unwrap().status
    }

    #[test]
    fn edge_sum_examples() {
        let c = check_edge_sum_bounds(&hypercycle(4, 3).unwrap()).unwrap();
        assert_eq!(c.status, Status::EqualityAttained);
        assert!((c.lhs - 2f64.cbrt()).abs() < 1e-10);
        assert_eq!(status(check_edge_sum_bounds(&hyperstar(5, 3).unwrap())), Status::EqualityAttained);
        assert_eq!(status(check_edge_sum_bounds(&double_star(5, 1).unwrap())), Status::Holds);
    }

    #[test]
    fn regular_corollary_examples() {
        assert_eq!(status(check_regular_corollary(&complete(4, 3).unwrap())), Status::EqualityAttained);
        let c = check_regular_corollary(&hypercycle(3, 3).unwrap()).unwrap();
        assert_eq!(c.status, Status::Holds);
        assert!((c.rhs - 3f64.cbrt()).abs() < 1e-14);
        assert_eq!(status(check_regular_corollary(&hyperstar(3, 3).unwrap())), Status::Holds);
    }

    #[test]
    fn mean_bound_examples() {
        let c = check_mean_bound(&hyperstar(2, 3).unwrap()).unwrap();
        assert_eq!(c.status, Status::Holds);
        assert!((c.lhs - 0.952_440_631_180_919_6).abs() < 1e-9);
        let edge = UniformHypergraph::build(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(status(check_mean_bound(&edge)), Status::EqualityAttained);
        assert_eq!(status(check_mean_bound(&hypercycle(5, 3).unwrap())), Status::Holds);
        assert_eq!(status(check_mean_bound(&complete(5, 3).unwrap())), Status::EqualityAttained);
    }

    #[test]
    fn delta_bound_examples() {
        assert_eq!(status(check_delta_bound(&hyperstar(4, 3).unwrap())), Status::EqualityAttained);
        assert_eq!(status(check_delta_bound(&hypercycle(3, 3).unwrap())), Status::EqualityAttained);
        assert_eq!(status(check_delta_bound(&double_star(5, 1).unwrap())), Status::Holds);
    }

    #[test]
    fn power_and_randic_examples() {
        assert_eq!(status(check_power_relation(&hypercycle(3, 2).unwrap(), 3)), Status::EqualityAttained);
        assert_eq!(status(check_power_relation(&double_star(5, 1).unwrap(), 4)), Status::EqualityAttained);
        for g in [hyperstar(4, 3).unwrap(), hypercycle(4, 3).unwrap(), random_hypertree(7, 3, 5).unwrap()] {
            assert_eq!(status(check_randic_unit(&g)), Status::EqualityAttained);
        }
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = UniformHypergraph::build(3, 6, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(check_edge_sum_bounds(&g), Err(VerifyError::NotConnected));
    }

    #[test]
    fn small_scans() {
        let r = extremal_scan_hypertrees(5, 3).unwrap();
        assert!(r.checks.iter().all(CheckResult::passed), "{:#?}", r.checks);
        assert_eq!(r.table[0].label, "S_{5,3}");
        let r = extremal_scan_hypertrees(4, 2).unwrap();
        assert!((r.table[0].rho - 3f64.sqrt()).abs() < 1e-10);

        let u = extremal_scan_unicyclic_family(3, 3, 3).unwrap();
        assert_eq!(u.table.len(), 1);
        assert!((u.table[0].rho - 2f64.cbrt()).abs() < 1e-10);
        let u = extremal_scan_unicyclic_family(5, 3, 2).unwrap();
        assert!(u.checks.iter().all(CheckResult::passed), "{:#?}", u.checks);
    }

    #[test]
    fn unicyclic_enumeration_is_unicyclic() {
        for m in 2..=4 {
            for h in enumerate_unicyclic(m, 3).unwrap() {
                assert_eq!(h.classify().kind, crate::hypergraph::Kind::Unicyclic);
            }
        }
    }

    #[test]
    fn examples() {
        let all = run_worked_examples().unwrap();
        assert!(all.iter().all(CheckResult::passed), "{all:#?}");
    }

    #[test]
    fn unknown_check_name() {
        assert!(matches!(run_check("nope", &GridParams::default()), Err(VerifyError::UnknownCheck(_))));
        assert!(CHECK_NAMES.windows(2).all(|w| w[0] < w[1]));
    }
}
