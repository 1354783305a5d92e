//! Closed-form spectral radii and the characteristic polynomials behind them.

use serde::Serialize;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootError {
    #[error("polynomial `{0}` has a nonpositive leading coefficient")]
    BadLeading(String),
    #[error("polynomial `{0}` has no real root")]
    NoRealRoot(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClosedFormError {
    #[error("{name} is undefined for {reason}")]
    Domain { name: &'static str, reason: String },
    #[error(transparent)]
    Root(#[from] RootError),
}

fn domain(name: &'static str, reason: String) -> ClosedFormError {
    ClosedFormError::Domain { name, reason }
}

/// A real polynomial with coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolynomialSpec {
    pub name: String,
    pub coeffs: Vec<f64>,
    /// Interval known to contain the largest real root.
    pub bracket: (f64, f64),
    /// Which spectral radius the root determines.
    pub provenance: String,
}

impl PolynomialSpec {
    pub fn eval(&self, t: f64) -> f64 {
        horner(&self.coeffs, t)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// True when the polynomial changes sign across the bracket.
    pub fn bracket_has_sign_change(&self) -> bool {
        self.eval(self.bracket.0) <= 0.0 && self.eval(self.bracket.1) > 0.0
    }
}

fn horner(coeffs: &[f64], t: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
}

fn derivative(coeffs: &[f64]) -> Vec<f64> {
    coeffs.iter().enumerate().skip(1).map(|(i, &c)| i as f64 * c).collect()
}

/// Largest real root of `p`, to within `tol`.
///
/// The critical points are isolated recursively, so `p` is monotone between
/// consecutive ones and the largest root sits in the right-most interval
/// whose left end is nonpositive. That interval is then bisected. The
/// result does not depend on `p.bracket`.
pub fn largest_real_root(p: &PolynomialSpec, tol: f64) -> Result<f64, RootError> {
    let lead = *p.coeffs.last().unwrap_or(&0.0);
    if lead.is_nan() || lead <= 0.0 {
        return Err(RootError::BadLeading(p.name.clone()));
    }
    real_roots(&p.coeffs, tol).last().copied().ok_or_else(|| RootError::NoRealRoot(p.name.clone()))
}

/// All distinct real roots in ascending order. Requires a nonzero leading
/// coefficient.
fn real_roots(coeffs: &[f64], tol: f64) -> Vec<f64> {
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![-coeffs[0] / lead];
    }
    // Cauchy bound on the modulus of every root
    let bound = 1.0 + coeffs[..deg].iter().map(|c| (c / lead).abs()).fold(0.0, f64::max);
    let mut knots = vec![-bound];
    knots.extend(real_roots(&derivative(coeffs), tol).into_iter().filter(|c| c.abs() < bound));
    knots.push(bound);

    let mut roots = Vec::new();
    for pair in knots.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let (fa, fb) = (horner(coeffs, a), horner(coeffs, b));
        if fa == 0.0 {
            push_distinct(&mut roots, a, tol);
        } else if fa.signum() != fb.signum() && fb != 0.0 {
            push_distinct(&mut roots, bisect(coeffs, a, b, tol), tol);
        }
    }
    if horner(coeffs, bound) == 0.0 {
        push_distinct(&mut roots, bound, tol);
    }
    roots
}

fn push_distinct(roots: &mut Vec<f64>, r: f64, tol: f64) {
    if roots.last().is_none_or(|&last| (r - last).abs() > tol) {
        roots.push(r);
    }
}

fn bisect(coeffs: &[f64], mut a: f64, mut b: f64, tol: f64) -> f64 {
    let fa_neg = horner(coeffs, a) < 0.0;
    while b - a > tol {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = horner(coeffs, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == fa_neg {
            a = mid;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

/// Tolerance used by the `rho_*` functions.
pub const ROOT_TOL: f64 = 1e-15;

fn root_of(p: &PolynomialSpec) -> Result<f64, ClosedFormError> {
    Ok(largest_real_root(p, ROOT_TOL)?)
}

fn need_k(name: &'static str, k: usize, min: usize) -> Result<f64, ClosedFormError> {
    if k < min {
        return Err(domain(name, format!("k = {k} (need k >= {min})")));
    }
    Ok(k as f64)
}

fn need_m(name: &'static str, m: usize, min: usize) -> Result<f64, ClosedFormError> {
    if m < min {
        return Err(domain(name, format!("m = {m} (need m >= {min})")));
    }
    Ok(m as f64)
}

/// `(m-1)^{1/k}`, attained by `S_{m,k}`.
pub fn rho_abc_hyperstar(m: usize, k: usize) -> Result<f64, ClosedFormError> {
    let k = need_k("rho_abc_hyperstar", k, 2)?;
    let m = need_m("rho_abc_hyperstar", m, 1)?;
    Ok((m - 1.0).powf(1.0 / k))
}

/// ABC spectral radius of `D_{m,1}^k`.
pub fn rho_abc_double_star1(m: usize, k: usize) -> Result<f64, ClosedFormError> {
    let k = need_k("rho_abc_double_star1", k, 2)?;
    let m = need_m("rho_abc_double_star1", m, 3)?;
    let disc = ((m - 1.0).powi(2) + (m - 2.0).powi(4)).sqrt();
    Ok(((m * m - 3.0 * m + 3.0 + disc) / (2.0 * (m - 1.0))).powf(1.0 / k))
}

/// Adjacency spectral radius of `D_{m,2}^k`.
pub fn rho_adj_double_star2(m: usize, k: usize) -> Result<f64, ClosedFormError> {
    let k = need_k("rho_adj_double_star2", k, 2)?;
    let m = need_m("rho_adj_double_star2", m, 5)?;
    Ok(((m + (m * m - 8.0 * m + 24.0).sqrt()) / 2.0).powf(1.0 / k))
}

/// ABC spectral radius of `U_{m,2}^{(k)}`.
pub fn rho_abc_u2(m: usize, k: usize) -> Result<f64, ClosedFormError> {
    let k = need_k("rho_abc_u2", k, 3)?;
    let m = need_m("rho_abc_u2", m, 2)?;
    Ok((m - 1.0 + 2.0 / m).powf(1.0 / k))
}

/// Cubic whose largest root `a_m` gives `rho(U_{m,3}^{(k)}) = a_m^{2/k}`.
pub fn f_u3(m: usize) -> Result<PolynomialSpec, ClosedFormError> {
    let m = need_m("f_u3", m, 3)?;
    let r2 = 2f64.sqrt();
    Ok(PolynomialSpec {
        name: format!("f_{m}"),
        coeffs: vec![
            r2 * (m * m - 5.0 * m + 6.0) / (2.0 * (m - 1.0)),
            -(m * m - 4.0 * m + 5.0) / (m - 1.0),
            -r2 / 2.0,
            1.0,
        ],
        bracket: ((m - 3.0).sqrt(), (m - 1.0).sqrt()),
        provenance: "a_m^(2/k) = ABC spectral radius of U_{m,3}^(k)".into(),
    })
}

pub fn rho_abc_u3(m: usize, k: usize) -> Result<f64, ClosedFormError> {
    let k = need_k("rho_abc_u3", k, 3)?;
    Ok(root_of(&f_u3(m)?)?.powf(2.0 / k))
}

/// Cubic whose largest root `b_m` gives `rho(S_{m,k;m-3,1,1}) = b_m^{1/k}`.
pub fn eta(m: usize) -> Result<PolynomialSpec, ClosedFormError> {
    let m = need_m("eta", m, 3)?;
    let d = 4.0 * (m - 2.0);
    Ok(PolynomialSpec {
        name: format!("eta_{m}"),
        coeffs: vec![
            -(m - 3.0).powi(2) / d,
            (4.0 * m * m - 23.0 * m + 34.0) / d,
            -(4.0 * m * m - 19.0 * m + 27.0) / d,
            1.0,
        ],
        bracket: (1.0, m - 1.0),
        provenance: "b_m^(1/k) = ABC spectral radius of S_{m,k;m-3,1,1}".into(),
    })
}

pub fn rho_abc_s311(m: usize, k: usize) -> Result<f64, ClosedFormError> {
    let k = need_k("rho_abc_s311", k, 3)?;
    Ok(root_of(&eta(m)?)?.powf(1.0 / k))
}

/// Cubic for `T_{m,idx}`; its largest root is `rho^3`.
pub fn h_t(m: usize, idx: usize) -> Result<PolynomialSpec, ClosedFormError> {
    let min_m = if idx == 1 { 6 } else { 5 };
    if !(1..=4).contains(&idx) {
        return Err(domain("h_t", format!("idx = {idx} (need 1..=4)")));
    }
    let m = need_m("h_t", m, min_m)?;
    let q = m - 3.0;
    let coeffs = match idx {
        1 => vec![
            -(2.0 * m * m - 16.0 * m + 32.0) / (3.0 * q),
            (11.0 * m * m - 84.0 * m + 164.0) / (6.0 * q),
            -(3.0 * m * m - 18.0 * m + 31.0) / (3.0 * q),
            1.0,
        ],
        2 => vec![
            -(m * m - 9.0 * m + 20.0) / (4.0 * q),
            (2.0 * m * m - 17.0 * m + 37.0) / (2.0 * q),
            -(4.0 * m * m - 29.0 * m + 60.0) / (4.0 * q),
            1.0,
        ],
        3 => vec![
            -(2.0 * m * m - 15.0 * m + 29.0) / (8.0 * q),
            (11.0 * m * m - 82.0 * m + 158.0) / (8.0 * q),
            -(8.0 * m * m - 49.0 * m + 83.0) / (8.0 * q),
            1.0,
        ],
        _ => {
            // (2t - 1)(4q t^2 - (4m^2 - 27m + 50) t + 4m^2 - 32m + 64) / (8q)
            let (a, b, c) = (4.0 * q, -(4.0 * m * m - 27.0 * m + 50.0), 4.0 * m * m - 32.0 * m + 64.0);
            let s = 8.0 * q;
            vec![-c / s, (2.0 * c - b) / s, (2.0 * b - a) / s, 2.0 * a / s]
        }
    };
    Ok(PolynomialSpec {
        name: format!("h{idx}_{m}"),
        coeffs,
        bracket: t_bracket(m, idx),
        provenance: format!("root^(1/3) = ABC spectral radius of T_{{m,{idx}}}"),
    })
}

fn t_bracket(m: f64, idx: usize) -> (f64, f64) {
    if m < 6.0 {
        (1.0, 2.0)
    } else if m < 7.0 {
        (1.5, 3.0)
    } else if idx == 2 && m >= 9.0 {
        (m - 6.0, m - 4.0)
    } else {
        (m - 5.0, m - 4.0)
    }
}

/// `(largest root of h_idx)^{1/3}`.
pub fn rho_abc_t(m: usize, idx: usize) -> Result<f64, ClosedFormError> {
    Ok(root_of(&h_t(m, idx)?)?.cbrt())
}

/// Quartic whose largest root is `rho(S_{m,4;m-4,1,1,1})^4`.
pub fn h_s1111(m: usize) -> Result<PolynomialSpec, ClosedFormError> {
    let m = need_m("h_s1111", m, 4)?;
    let q = m - 3.0;
    Ok(PolynomialSpec {
        name: format!("h_s1111_{m}"),
        coeffs: vec![
            (m * m - 8.0 * m + 16.0) / (8.0 * q),
            -(6.0 * m * m - 47.0 * m + 93.0) / (8.0 * q),
            (6.0 * m * m - 45.0 * m + 87.0) / (4.0 * q),
            -(8.0 * m * m - 51.0 * m + 91.0) / (8.0 * q),
            1.0,
        ],
        bracket: (1.0, m - 1.0),
        provenance: "root^(1/k) = ABC spectral radius of S_{m,k;m-4,1,1,1}".into(),
    })
}

pub fn rho_abc_s4_1111(m: usize) -> Result<f64, ClosedFormError> {
    rho_abc_s1111(m, 4)
}

/// The same root lifted to `S_{m,k;m-4,1,1,1}` for any `k >= 4`.
pub fn rho_abc_s1111(m: usize, k: usize) -> Result<f64, ClosedFormError> {
    let k = need_k("rho_abc_s1111", k, 4)?;
    Ok(root_of(&h_s1111(m)?)?.powf(1.0 / k))
}

/// Cubic whose largest root is `rho_A(S_{m,k;m-4,2,1})^k`.
pub fn adj_cubic_s421(m: usize) -> Result<PolynomialSpec, ClosedFormError> {
    let m = need_m("adj_cubic_s421", m, 5)?;
    Ok(PolynomialSpec {
        name: format!("adj_s421_{m}"),
        coeffs: vec![8.0 - 2.0 * m, 3.0 * m - 10.0, -m, 1.0],
        // the root exceeds m - 2 while m^2 - 10m + 20 < 0, i.e. for m <= 7
        bracket: if m >= 8.0 { (m - 3.0, m - 2.0) } else { (m - 2.0, m - 1.0) },
        provenance: "root^(1/k) = adjacency spectral radius of S_{m,k;m-4,2,1}".into(),
    })
}

pub fn rho_adj_s421(m: usize, k: usize) -> Result<f64, ClosedFormError> {
    let k = need_k("rho_adj_s421", k, 3)?;
    Ok(root_of(&adj_cubic_s421(m)?)?.powf(1.0 / k))
}

/// `(2 cos^2(pi/(m+2)))^{1/k}`, the ABC spectral radius of `P_{m,k}`.
pub fn rho_abc_hyperpath(m: usize, k: usize) -> Result<f64, ClosedFormError> {
    let k = need_k("rho_abc_hyperpath", k, 2)?;
    let m = need_m("rho_abc_hyperpath", m, 2)?;
    Ok((2.0 * (PI / (m + 2.0)).cos().powi(2)).powf(1.0 / k))
}

/// `(k C(n-1,k-1) - k)^{1/k}`, attained by the complete hypergraph.
pub fn rho_abc_complete_bound(n: usize, k: usize) -> Result<f64, ClosedFormError> {
    let kf = need_k("rho_abc_complete_bound", k, 2)?;
    if n <= k {
        return Err(domain("rho_abc_complete_bound", format!("n = {n} (need n > k = {k})")));
    }
    let c = crate::generators::binomial(n - 1, k - 1) as f64;
    Ok((kf * c - kf).powf(1.0 / kf))
}

/// Every named closed form, for CLI dispatch. The T family index is the
/// digit in the name and requires `k = 3`; the complete bound reads `n`
/// from the `m` slot.
pub const NAMES: &[&str] = &[
    "hyperstar",
    "double-star1",
    "adj-double-star2",
    "u2",
    "u3",
    "s311",
    "t1",
    "t2",
    "t3",
    "t4",
    "s1111",
    "adj-s421",
    "hyperpath",
    "complete-bound",
];

/// Evaluates a closed form by its short name.
pub fn by_name(name: &str, m: usize, k: usize) -> Result<f64, ClosedFormError> {
    match name {
        "hyperstar" => rho_abc_hyperstar(m, k),
        "double-star1" => rho_abc_double_star1(m, k),
        "adj-double-star2" => rho_adj_double_star2(m, k),
        "u2" => rho_abc_u2(m, k),
        "u3" => rho_abc_u3(m, k),
        "s311" => rho_abc_s311(m, k),
        "t1" | "t2" | "t3" | "t4" => {
            if k != 3 {
                return Err(domain("rho_abc_t", format!("k = {k} (T families are 3-uniform)")));
            }
            rho_abc_t(m, name[1..].parse().expect("digit"))
        }
        "s1111" => rho_abc_s1111(m, k),
        "adj-s421" => rho_adj_s421(m, k),
        "hyperpath" => rho_abc_hyperpath(m, k),
        "complete-bound" => rho_abc_complete_bound(m, k),
        _ => Err(domain("closed form", format!("unknown name `{name}`"))),
    }
}
