//! JSON records. Every float goes through [`F17`] so values print with 17
//! significant digits and reparse to the same bits.

use hyperabc::{CheckResult, SpectralEstimate, Status, StructureReport};
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// An `f64` serialized as `d.dddddddddddddddde±x`. Non-finite values
/// become `null`.
#[derive(Debug, Clone, Copy)]
pub struct F17(pub f64);

impl Serialize for F17 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(format!("{:.16e}", self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

fn f17s(v: &[f64]) -> Vec<F17> {
    v.iter().copied().map(F17).collect()
}

#[derive(Serialize)]
pub struct Shape {
    pub k: usize,
    pub n: usize,
    pub m: usize,
}

#[derive(Serialize)]
pub struct GenRecord {
    pub command: &'static str,
    #[serde(flatten)]
    pub shape: Shape,
    pub edges: Vec<Vec<usize>>,
}

#[derive(Serialize)]
pub struct RhoRecord {
    pub command: &'static str,
    #[serde(flatten)]
    pub shape: Shape,
    pub weighting: &'static str,
    pub rho: F17,
    pub lower: F17,
    pub upper: F17,
    pub iters: usize,
    pub residual: F17,
    pub eigenvector: Vec<F17>,
}

impl RhoRecord {
    pub fn new(shape: Shape, weighting: &'static str, est: &SpectralEstimate) -> Self {
        Self {
            command: "rho",
            shape,
            weighting,
            rho: F17(est.rho),
            lower: F17(est.lower),
            upper: F17(est.upper),
            iters: est.iters,
            residual: F17(est.residual),
            eigenvector: f17s(&est.eigenvector),
        }
    }
}

#[derive(Serialize)]
pub struct IndexRecord {
    pub command: &'static str,
    #[serde(flatten)]
    pub shape: Shape,
    pub abc_index: F17,
}

#[derive(Serialize)]
pub struct ClosedFormRecord {
    pub command: &'static str,
    pub name: String,
    pub m: usize,
    pub k: usize,
    pub value: F17,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<CheckRecord>,
}

#[derive(Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    pub lhs: F17,
    pub rhs: F17,
    pub margin: F17,
    pub detail: String,
}

impl From<&CheckResult> for CheckRecord {
    fn from(r: &CheckResult) -> Self {
        Self {
            name: r.name.clone(),
            status: r.status,
            lhs: F17(r.lhs),
            rhs: F17(r.rhs),
            margin: F17(r.margin),
            detail: r.detail.clone(),
        }
    }
}

#[derive(Serialize, Default)]
pub struct Summary {
    pub total: usize,
    pub holds: usize,
    pub equality_attained: usize,
    pub violated: usize,
    pub inconclusive: usize,
}

impl Summary {
    pub fn of(results: &[CheckResult]) -> Self {
        let mut s = Summary { total: results.len(), ..Summary::default() };
        for r in results {
            match r.status {
                Status::Holds => s.holds += 1,
                Status::EqualityAttained => s.equality_attained += 1,
                Status::Violated => s.violated += 1,
                Status::Inconclusive => s.inconclusive += 1,
            }
        }
        s
    }
}

#[derive(Serialize)]
pub struct VerifyRecord {
    pub command: &'static str,
    pub check: String,
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub g: Option<usize>,
    pub summary: Summary,
    pub results: Vec<CheckRecord>,
}

#[derive(Serialize)]
pub struct ClassifyRecord {
    pub command: &'static str,
    #[serde(flatten)]
    pub shape: Shape,
    #[serde(flatten)]
    pub report: StructureReport,
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    pub canonical_code: Option<String>,
}

#[derive(Serialize)]
pub struct ErrorRecord<'a> {
    pub command: &'static str,
    pub subcommand: Option<&'static str>,
    pub kind: &'a str,
    pub message: String,
}

pub fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("records serialize"));
}
