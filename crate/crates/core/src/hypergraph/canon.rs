use super::UniformHypergraph;
use canonical_form::Canonize;
use thiserror::Error;

/// Largest vertex count accepted by [`canonical_code`] unless overridden.
pub const DEFAULT_CANON_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("canonical labeling limited to {cap} vertices, got {n}")]
    TooLarge { n: usize, cap: usize },
}

/// Byte string identifying a hypergraph up to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

const EDGE_COLOR: u64 = u64::MAX;

/// Vertex-edge incidence graph. Nodes `0..n` are vertices, `n..n+m` edges.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Incidence {
    colors: Vec<u64>,
    adj: Vec<Vec<usize>>,
}

impl Canonize for Incidence {
    fn size(&self) -> usize {
        self.adj.len()
    }

    fn apply_morphism(&self, p: &[usize]) -> Self {
        let mut adj = vec![Vec::new(); self.adj.len()];
        let mut colors = vec![0; self.adj.len()];
        for (u, nbrs) in self.adj.iter().enumerate() {
            let mut mapped: Vec<usize> = nbrs.iter().map(|&v| p[v]).collect();
            mapped.sort_unstable();
            adj[p[u]] = mapped;
            colors[p[u]] = self.colors[u];
        }
        Self { colors, adj }
    }

    fn invariant_color(&self, u: usize) -> u64 {
        self.colors[u]
    }

    fn invariant_neighborhood(&self, u: usize) -> impl Iterator<Item = (usize, u64)> {
        self.adj[u].iter().map(|&v| (v, 0))
    }
}

pub(super) fn canonical_code(g: &UniformHypergraph, cap: usize) -> Result<CanonicalCode, CanonError> {
    if g.n() > cap {
        return Err(CanonError::TooLarge { n: g.n(), cap });
    }
    let (n, m) = (g.n(), g.m());
    let degrees = g.degrees();
    // vertices colored by degree, all edge nodes share one color
    let mut colors: Vec<u64> = degrees.degrees.iter().map(|&d| d as u64).collect();
    colors.extend(std::iter::repeat_n(EDGE_COLOR, m));
    let mut adj = vec![Vec::new(); n + m];
    for (e, edge) in g.edges().iter().enumerate() {
        for &v in edge {
            adj[v].push(n + e);
            adj[n + e].push(v);
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let canon = Incidence { colors, adj }.canonical();

    let mut bytes = Vec::new();
    for x in [g.k(), n, m] {
        bytes.extend_from_slice(&(x as u32).to_le_bytes());
    }
    for (color, nbrs) in canon.colors.iter().zip(&canon.adj) {
        bytes.extend_from_slice(&color.to_le_bytes());
        bytes.extend_from_slice(&(nbrs.len() as u32).to_le_bytes());
        for &v in nbrs {
            bytes.extend_from_slice(&(v as u32).to_le_bytes());
        }
    }
    Ok(CanonicalCode(bytes))
}
