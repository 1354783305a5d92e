//! k-uniform hypergraphs: construction, degrees, connectivity and
//! structural classification.

mod canon;
mod structure;
mod uhg;

pub use canon::{CanonicalCode, DEFAULT_CANON_CAP};
pub use structure::{Girth, Kind, StructureReport, DEFAULT_GIRTH_BUDGET};
pub use uhg::{parse_uhg, write_uhg, UhgError};

use serde::Serialize;
use std::collections::HashSet;
use thiserror::Error;

/// Vertex identifier, 0-based.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("edge cardinality k must be at least 2, got {0}")]
    BadUniformity(usize),
    #[error("vertex count n = {n} is smaller than k = {k}")]
    TooFewVertices { n: usize, k: usize },
    #[error("hypergraph has no edges")]
    NoEdges,
    #[error("edge {edge} has {len} vertices, expected {k}")]
    WrongCardinality { edge: usize, len: usize, k: usize },
    #[error("edge {edge} repeats vertex {vertex}")]
    RepeatedVertex { edge: usize, vertex: Vertex },
    #[error("edge {edge} contains vertex {vertex} outside [0, {n})")]
    VertexOutOfRange { edge: usize, vertex: Vertex, n: usize },
    #[error("edge {edge} duplicates edge {first}")]
    DuplicateEdge { edge: usize, first: usize },
}

/// A validated k-uniform hypergraph on the vertex set `[0, n)`.
///
/// Every edge is stored in ascending order and the edge list itself is
/// sorted lexicographically, so two hypergraphs with the same edge set
/// compare equal regardless of input order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct UniformHypergraph {
    k: usize,
    n: usize,
    edges: Vec<Vec<Vertex>>,
}

impl UniformHypergraph {
    /// Validates and normalizes an edge list. Error values carry the index
    /// of the offending edge in the caller's input order.
    pub fn build(k: usize, n: usize, edges: Vec<Vec<Vertex>>) -> Result<Self, BuildError> {
        if k < 2 {
            return Err(BuildError::BadUniformity(k));
        }
        if n < k {
            return Err(BuildError::TooFewVertices { n, k });
        }
        if edges.is_empty() {
            return Err(BuildError::NoEdges);
        }
        let mut seen: std::collections::HashMap<Vec<Vertex>, usize> =
            std::collections::HashMap::with_capacity(edges.len());
        let mut normalized = Vec::with_capacity(edges.len());
        for (idx, mut edge) in edges.into_iter().enumerate() {
            if edge.len() != k {
                return Err(BuildError::WrongCardinality { edge: idx, len: edge.len(), k });
            }
            if let Some(&v) = edge.iter().find(|&&v| v >= n) {
                return Err(BuildError::VertexOutOfRange { edge: idx, vertex: v, n });
            }
            edge.sort_unstable();
            if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                return Err(BuildError::RepeatedVertex { edge: idx, vertex: w[0] });
            }
            if let Some(&first) = seen.get(&edge) {
                return Err(BuildError::DuplicateEdge { edge: idx, first });
            }
            seen.insert(edge.clone(), idx);
            normalized.push(edge);
        }
        normalized.sort();
        Ok(Self { k, n, edges: normalized })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn edge(&self, idx: usize) -> &[Vertex] {
        &self.edges[idx]
    }

    pub fn degrees(&self) -> DegreeVector {
        let mut degrees = vec![0usize; self.n];
        for edge in &self.edges {
            for &v in edge {
                degrees[v] += 1;
            }
        }
        DegreeVector::from_counts(degrees)
    }

    /// For each vertex, the indices of the edges containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (e, edge) in self.edges.iter().enumerate() {
            for &v in edge {
                inc[v].push(e);
            }
        }
        inc
    }

    pub fn is_connected(&self) -> bool {
        let inc = self.incidence();
        let mut seen = vec![false; self.n];
        let mut edge_seen = vec![false; self.m()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &e in &inc[v] {
                if edge_seen[e] {
                    continue;
                }
                edge_seen[e] = true;
                for &w in &self.edges[e] {
                    if !seen[w] {
                        seen[w] = true;
                        reached += 1;
                        stack.push(w);
                    }
                }
            }
        }
        reached == self.n
    }

    /// True when every pair of distinct edges shares at most one vertex.
    pub fn is_linear(&self) -> bool {
        let mut pairs = HashSet::new();
        for edge in &self.edges {
            for (i, &a) in edge.iter().enumerate() {
                for &b in &edge[i + 1..] {
                    if !pairs.insert((a, b)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn classify(&self) -> StructureReport {
        structure::classify(self, DEFAULT_GIRTH_BUDGET)
    }

    pub fn classify_with_budget(&self, girth_budget: u64) -> StructureReport {
        structure::classify(self, girth_budget)
    }

    pub fn canonical_code(&self) -> Result<CanonicalCode, canon::CanonError> {
        canon::canonical_code(self, DEFAULT_CANON_CAP)
    }

    pub fn canonical_code_with_cap(&self, cap: usize) -> Result<CanonicalCode, canon::CanonError> {
        canon::canonical_code(self, cap)
    }

    /// Relabels vertices by `perm` (vertex `v` becomes `perm[v]`).
    ///
    /// # Panics
    /// If `perm` is not a permutation of `[0, n)`.
    pub fn relabel(&self, perm: &[Vertex]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let edges = self.edges.iter().map(|e| e.iter().map(|&v| perm[v]).collect()).collect();
        Self::build(self.k, self.n, edges).expect("relabeling by a permutation preserves validity")
    }
}

pub use canon::CanonError;

/// Vertex degrees with their extremes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeVector {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
}

impl DegreeVector {
    fn from_counts(degrees: Vec<usize>) -> Self {
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        Self { degrees, max_degree, min_degree }
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree == self.min_degree
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }
}

impl std::ops::Index<Vertex> for DegreeVector {
    type Output = usize;

    fn index(&self, v: Vertex) -> &usize {
        &self.degrees[v]
    }
}
