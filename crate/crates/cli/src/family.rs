//! Turning `--family` flags or an input file into a hypergraph.

use clap::{Args, ValueEnum};
use hyperabc::generators::{self, GenError};
use hyperabc::{parse_uhg, UniformHypergraph};
use std::io::Read;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Hyperstar,
    Hyperpath,
    Hypercycle,
    Complete,
    DoubleStar,
    Power,
    SComp,
    Unicyclic,
    #[value(name = "t-family")]
    T,
    ExampleH,
    RandomHypertree,
    RandomConnected,
}

/// Where the hypergraph comes from. Exactly one of `--input` and
/// `--family` must be given.
#[derive(Debug, Clone, Args)]
pub struct Source {
    /// UHG v1 file to read; `-` reads standard input
    #[arg(long, short, conflicts_with = "family")]
    pub input: Option<PathBuf>,

    /// Named family to generate instead of reading a file
    #[arg(long, value_enum)]
    pub family: Option<Family>,

    #[command(flatten)]
    pub params: FamilyParams,
}

#[derive(Debug, Clone, Default, Args)]
pub struct FamilyParams {
    /// Number of edges
    #[arg(long)]
    pub m: Option<usize>,
    /// Edge size (uniformity); for `power` the target uniformity
    #[arg(long)]
    pub k: Option<usize>,
    /// Vertex count, for `complete`
    #[arg(long)]
    pub n: Option<usize>,
    /// Cycle length, for `hypercycle` and `unicyclic`
    #[arg(long)]
    pub g: Option<usize>,
    /// Pendant counts: one number for `double-star`, a comma list otherwise
    #[arg(long, value_delimiter = ',')]
    pub a: Vec<usize>,
    /// Member index, for `t-family` (1-4) and `example-h` (1-2)
    #[arg(long)]
    pub idx: Option<usize>,
    /// Seed for the random families
    #[arg(long)]
    pub seed: Option<u64>,
    /// Extra random edges, for `random-connected`
    #[arg(long, default_value_t = 0)]
    pub extra: usize,
    /// Base family for `power`
    #[arg(long, value_enum)]
    pub base: Option<Family>,
    /// Uniformity of the base family for `power`
    #[arg(long, default_value_t = 2)]
    pub base_k: usize,
}

#[derive(Debug)]
pub enum SourceError {
    Usage(String),
    Io(String),
    Parse(String),
    Gen(GenError),
}

impl std::fmt::Display for SourceError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SourceError::Usage(m) | SourceError::Io(m) | SourceError::Parse(m) => f.write_str(m),
            SourceError::Gen(e) => write!(f, "{e}"),
        }
    }
}

impl From<GenError> for SourceError {
    fn from(e: GenError) -> Self {
        SourceError::Gen(e)
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: Family) -> Result<T, SourceError> {
    v.ok_or_else(|| SourceError::Usage(format!("--{flag} is required for family {}", family_name(family))))
}

pub fn family_name(f: Family) -> String {
    f.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

impl Source {
    pub fn load(&self) -> Result<UniformHypergraph, SourceError> {
        match (&self.input, self.family) {
            (Some(path), _) => read_file(path),
            (None, Some(f)) => build(f, &self.params, self.params.k),
            (None, None) => Err(SourceError::Usage("give either --input or --family".into())),
        }
    }
}

fn read_file(path: &PathBuf) -> Result<UniformHypergraph, SourceError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| SourceError::Io(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| SourceError::Io(format!("{}: {e}", path.display())))?
    };
    parse_uhg(&text).map_err(|e| SourceError::Parse(format!("{}: {e}", path.display())))
}

fn build(f: Family, p: &FamilyParams, k: Option<usize>) -> Result<UniformHypergraph, SourceError> {
    let g = match f {
        Family::Hyperstar => generators::hyperstar(need(p.m, "m", f)?, need(k, "k", f)?)?,
        Family::Hyperpath => generators::hyperpath(need(p.m, "m", f)?, need(k, "k", f)?)?,
        Family::Hypercycle => generators::hypercycle(need(p.g.or(p.m), "g", f)?, need(k, "k", f)?)?,
        Family::Complete => generators::complete(need(p.n, "n", f)?, need(k, "k", f)?)?,
        Family::DoubleStar => {
            let a = match p.a.as_slice() {
                [a] => *a,
                _ => return Err(SourceError::Usage("double-star takes a single --a".into())),
            };
            generators::double_star(need(p.m, "m", f)?, a)?
        }
        Family::Power => {
            let base = need(p.base, "base", f)?;
            if base == Family::Power {
                return Err(SourceError::Usage("--base power is not supported".into()));
            }
            let inner = build(base, p, Some(p.base_k))?;
            generators::power(&inner, need(k, "k", f)?)?
        }
        Family::SComp => generators::s_composition(need(p.m, "m", f)?, need(k, "k", f)?, &p.a)?,
        Family::Unicyclic => {
            generators::unicyclic_family(need(p.m, "m", f)?, need(k, "k", f)?, need(p.g, "g", f)?, &p.a)?
        }
        Family::T => generators::t_family(need(p.m, "m", f)?, need(p.idx, "idx", f)?)?,
        Family::ExampleH => generators::example_h(need(p.idx, "idx", f)?)?,
        Family::RandomHypertree => {
            generators::random_hypertree(need(p.m, "m", f)?, need(k, "k", f)?, need(p.seed, "seed", f)?)?
        }
        Family::RandomConnected => {
            generators::random_connected(need(p.m, "m", f)?, p.extra, need(k, "k", f)?, need(p.seed, "seed", f)?)?
        }
    };
    Ok(g)
}
