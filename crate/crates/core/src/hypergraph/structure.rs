use super::{UniformHypergraph, Vertex};
use serde::{Serialize, Serializer};

/// Node budget for the girth search before it gives up.
pub const DEFAULT_GIRTH_BUDGET: u64 = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Hypertree,
    Unicyclic,
    Other,
}

/// Outcome of the shortest-cycle search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    /// No cycle exists.
    Acyclic,
    Length(usize),
    /// The node budget ran out before a cycle was found or ruled out.
    Undetermined,
}

impl Girth {
    pub fn length(self) -> Option<usize> {
        match self {
            Girth::Length(l) => Some(l),
            _ => None,
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Acyclic => s.serialize_none(),
            Girth::Length(l) => s.serialize_u64(*l as u64),
            Girth::Undetermined => s.serialize_str("undetermined"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub connected: bool,
    pub kind: Kind,
    pub linear: bool,
    pub girth: Girth,
    /// Only defined for hypertrees with k >= 3.
    pub power_hypertree: Option<bool>,
}

pub(super) fn classify(g: &UniformHypergraph, girth_budget: u64) -> StructureReport {
    let connected = g.is_connected();
    let (n, m, k) = (g.n(), g.m(), g.k());
    let kind = if connected && n == m * (k - 1) + 1 {
        Kind::Hypertree
    } else if connected && n == m * (k - 1) {
        Kind::Unicyclic
    } else {
        Kind::Other
    };
    let power_hypertree = (kind == Kind::Hypertree && k >= 3).then(|| {
        let d = g.degrees();
        g.edges().iter().all(|e| e.iter().filter(|&&v| d[v] == 1).count() >= k - 2)
    });
    StructureReport { connected, kind, linear: g.is_linear(), girth: girth(g, girth_budget), power_hypertree }
}

/// Shortest cycle: distinct vertices v_1..v_l and distinct edges e_1..e_l
/// with {v_i, v_{i+1}} inside e_i (indices cyclic) and cyclically
/// non-consecutive edges disjoint.
pub fn girth(g: &UniformHypergraph, budget: u64) -> Girth {
    let mut search =
        CycleSearch { g, inc: g.incidence(), budget, spent: 0, vertices: Vec::new(), edges: Vec::new(), len: 0 };
    for len in 2..=g.m() {
        search.len = len;
        match search.run() {
            Some(true) => return Girth::Length(len),
            Some(false) => {}
            None => return Girth::Undetermined,
        }
    }
    Girth::Acyclic
}

struct CycleSearch<'a> {
    g: &'a UniformHypergraph,
    inc: Vec<Vec<usize>>,
    budget: u64,
    spent: u64,
    vertices: Vec<Vertex>,
    edges: Vec<usize>,
    len: usize,
}

impl CycleSearch<'_> {
    /// `Some(found)`, or `None` once the budget is exhausted.
    fn run(&mut self) -> Option<bool> {
        for v1 in 0..self.g.n() {
            for idx in 0..self.inc[v1].len() {
                let e1 = self.inc[v1][idx];
                self.vertices.clear();
                self.edges.clear();
                self.vertices.push(v1);
                self.edges.push(e1);
                if self.extend()? {
                    return Some(true);
                }
            }
        }
        Some(false)
    }

    fn extend(&mut self) -> Option<bool> {
        self.spent += 1;
        if self.spent > self.budget {
            return None;
        }
        let i = self.edges.len();
        if i == self.len {
            return Some(true);
        }
        let v1 = self.vertices[0];
        let current = self.edges[i - 1];
        let closing = i + 1 == self.len;
        for pos in 0..self.g.k() {
            let next_v = self.g.edge(current)[pos];
            // v_1 is the smallest vertex on the cycle
            if next_v <= v1 || self.vertices.contains(&next_v) {
                continue;
            }
            for idx in 0..self.inc[next_v].len() {
                let next_e = self.inc[next_v][idx];
                if self.edges.contains(&next_e) {
                    continue;
                }
                let edge = self.g.edge(next_e);
                if closing && edge.binary_search(&v1).is_err() {
                    continue;
                }
                // disjoint from every earlier edge except its predecessor,
                // and except e_1 when this edge closes the cycle
                let skip_first = usize::from(closing);
                let clash = self.edges[..i - 1].iter().skip(skip_first).any(|&e| intersects(self.g.edge(e), edge));
                if clash {
                    continue;
                }
                self.vertices.push(next_v);
                self.edges.push(next_e);
                let found = self.extend();
                self.vertices.pop();
                self.edges.pop();
                if found? {
                    return Some(true);
                }
            }
        }
        Some(false)
    }
}

fn intersects(a: &[Vertex], b: &[Vertex]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn hyperstar_report() {
        let r = hyperstar(4, 3).unwrap().classify();
        assert!(r.connected);
        assert_eq!(r.kind, Kind::Hypertree);
        assert!(r.linear);
        assert_eq!(r.girth, Girth::Acyclic);
        assert_eq!(r.power_hypertree, Some(true));
    }

    #[test]
    fn non_power_hypertree() {
        let g = s_composition(5, 3, &[2, 1, 1]).unwrap();
        let r = g.classify();
        assert_eq!(r.kind, Kind::Hypertree);
        assert_eq!(r.power_hypertree, Some(false));
    }

    #[test]
    fn unicyclic_digon() {
        let g = unicyclic_family(5, 3, 2, &[3, 0, 0]).unwrap();
        let r = g.classify();
        assert_eq!(r.kind, Kind::Unicyclic);
        assert!(!r.linear);
        assert_eq!(r.girth, Girth::Length(2));
        assert_eq!(r.power_hypertree, None);
    }

    #[test]
    fn hypercycle_girth_matches_length() {
        for g in 2..=6 {
            for k in 3..=4 {
                let c = hypercycle(g, k).unwrap();
                assert_eq!(c.classify().girth, Girth::Length(g), "C_{{{g},{k}}}");
                assert_eq!(c.classify().kind, Kind::Unicyclic);
            }
        }
    }

    #[test]
    fn ordinary_graph_girth() {
        assert_eq!(complete(5, 2).unwrap().classify().girth, Girth::Length(3));
        assert_eq!(hypercycle(5, 2).unwrap().classify().girth, Girth::Length(5));
        assert_eq!(complete(4, 3).unwrap().classify().girth, Girth::Length(2));
    }

    #[test]
    fn two_uniform_trees_have_no_power_flag() {
        let r = hyperpath(4, 2).unwrap().classify();
        assert_eq!(r.kind, Kind::Hypertree);
        assert_eq!(r.power_hypertree, None);
    }

    #[test]
    fn disconnected_is_other() {
        let g = UniformHypergraph::build(3, 6, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let r = g.classify();
        assert!(!r.connected);
        assert_eq!(r.kind, Kind::Other);
    }

    #[test]
    fn tiny_budget_reports_undetermined() {
        let g = hypercycle(6, 3).unwrap();
        assert_eq!(g.classify_with_budget(3).girth, Girth::Undetermined);
    }

    #[test]
    fn vertex_count_identity_agrees_with_cycle_search() {
        for m in 1..=6 {
            for t in enumerate_hypertrees(m, 3).unwrap() {
                assert_eq!(t.classify().girth, Girth::Acyclic);
            }
        }
        for m in 3..=6 {
            for g in [2, 3] {
                let u = unicyclic_family(m, 3, g, &[m - g, 0, 0]).unwrap();
                assert_eq!(u.classify().girth, Girth::Length(g));
            }
        }
    }
}
