//! Plumbing graphs and the topology of the plumbed 4-manifold `X(G)` and its
//! boundary 3-manifold `M(G)`.
//!
//! Vertex weights are the Euler numbers of the disk bundles, edge signs the
//! signs of the plumbing intersections. `H_1(M(G)) = coker A` where `A` is the
//! intersection matrix, and `H^2(M(G)) ≅ H_1(M(G))` by Poincaré duality.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, FinAbGroup, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        })
    }
}

/// Type of a simple singularity.
///
/// The parameter is the family parameter `n` of the defining germ, not the
/// subscript of the Dynkin diagram: `A` with `n` is `A_{n-1}` and `D` with `n`
/// is `D_{n+2}` (both need `n >= 2`); for `E` it is 6, 7 or 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinLabel {
    family: Family,
    param: u32,
}

impl DynkinLabel {
    pub fn new(family: Family, param: u32) -> Result<Self> {
        let ok = match family {
            Family::A | Family::D => param >= 2,
            Family::E => (6..=8).contains(&param),
        };
        if !ok {
            let expected = match family {
                Family::E => "6, 7 or 8",
                _ => "n >= 2",
            };
            return Err(Error::InvalidParameter(format!("{family} with parameter {param} (expected {expected})")));
        }
        Ok(Self { family, param })
    }

    /// `A_{n-1}`.
    pub fn a(n: u32) -> Result<Self> {
        Self::new(Family::A, n)
    }

    /// `D_{n+2}`.
    pub fn d(n: u32) -> Result<Self> {
        Self::new(Family::D, n)
    }

    /// `E_6`, `E_7` or `E_8`.
    pub fn e(k: u32) -> Result<Self> {
        Self::new(Family::E, k)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn param(&self) -> u32 {
        self.param
    }

    /// Number of vertices of the Dynkin diagram, i.e. the subscript of the label.
    pub fn vertex_count(&self) -> u64 {
        let n = u64::from(self.param);
        match self.family {
            Family::A => n - 1,
            Family::D => n + 2,
            Family::E => n,
        }
    }

    /// All labels whose family parameter is at most `max_param`, A then D then E.
    pub fn all_up_to(max_param: u32) -> Vec<Self> {
        let mut out: Vec<Self> = (2..=max_param).map(|n| Self { family: Family::A, param: n }).collect();
        out.extend((2..=max_param).map(|n| Self { family: Family::D, param: n }));
        out.extend((6..=8).map(|k| Self { family: Family::E, param: k }));
        out
    }
}

impl fmt::Display for DynkinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.vertex_count())
    }
}

/// Parses `"A 5"`, `"A5"`, `"D 3"`, `"E6"` or `"E 7"`; the number is the family parameter.
impl FromStr for DynkinLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(Error::InvalidParameter(format!("unrecognized label {s:?}"))),
        };
        let rest = chars.as_str().trim();
        let param = rest
            .parse::<u32>()
            .map_err(|_| Error::InvalidParameter(format!("missing or malformed parameter in {s:?}")))?;
        Self::new(family, param)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Vertex {
    pub id: i64,
    pub weight: i64,
}

fn default_sign() -> i64 {
    1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Edge {
    pub a: i64,
    pub b: i64,
    #[serde(default = "default_sign")]
    pub sign: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

/// Connected weighted graph defining a plumbing. Validated on construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphFile", into = "GraphFile")]
pub struct PlumbingGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    index: BTreeMap<i64, usize>,
}

impl TryFrom<GraphFile> for PlumbingGraph {
    type Error = Error;

    fn try_from(f: GraphFile) -> Result<Self> {
        Self::new(f.vertices, f.edges)
    }
}

impl From<PlumbingGraph> for GraphFile {
    fn from(g: PlumbingGraph) -> Self {
        GraphFile { vertices: g.vertices, edges: g.edges }
    }
}

impl PlumbingGraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        let mut index = BTreeMap::new();
        for (pos, v) in vertices.iter().enumerate() {
            if index.insert(v.id, pos).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex id {}", v.id)));
            }
        }
        for e in &edges {
            for end in [e.a, e.b] {
                if !index.contains_key(&end) {
                    return Err(Error::InvalidGraph(format!("edge endpoint {end} is not a vertex")));
                }
            }
            if e.a == e.b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {}", e.a)));
            }
            if e.sign != 1 && e.sign != -1 {
                return Err(Error::InvalidGraph(format!("edge sign {} is not +1 or -1", e.sign)));
            }
        }
        let g = Self { vertices, edges, index };
        if !g.is_connected() {
            return Err(Error::InvalidGraph("graph is disconnected".into()));
        }
        Ok(g)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidGraph(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes")
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Position of a vertex id in the row order of [`Self::intersection_matrix`].
    pub fn position(&self, id: i64) -> Option<usize> {
        self.index.get(&id).copied()
    }

    pub fn degree(&self, id: i64) -> usize {
        self.edges.iter().filter(|e| e.a == id || e.b == id).count()
    }

    fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            let (a, b) = (self.index[&e.a], self.index[&e.b]);
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    fn is_connected(&self) -> bool {
        let adj = self.neighbours();
        let mut seen = HashSet::from([0usize]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    /// Cycle rank `b_1` of the (connected) graph, counting parallel edges.
    pub fn first_betti_number(&self) -> usize {
        self.edges.len() + 1 - self.vertices.len()
    }

    pub fn is_tree(&self) -> bool {
        self.first_betti_number() == 0
    }

    /// Symmetric matrix with the weights on the diagonal and, off the diagonal,
    /// the sum of the signs of all edges joining the two vertices.
    pub fn intersection_matrix(&self) -> IntMatrix {
        let n = self.vertices.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, v) in self.vertices.iter().enumerate() {
            m[(i, i)] = BigInt::from(v.weight);
        }
        for e in &self.edges {
            let (a, b) = (self.index[&e.a], self.index[&e.b]);
            m[(a, b)] += e.sign;
            m[(b, a)] += e.sign;
        }
        m
    }

    /// `σ(X(G))`.
    pub fn filling_signature(&self) -> i64 {
        linalg::signature(&self.intersection_matrix()).expect("intersection matrix is symmetric")
    }

    /// `χ(X(G)) = 1 - b_1(G) + #V(G)`; for trees this is `1 + #V(G)`.
    pub fn filling_euler_characteristic(&self) -> i64 {
        1 - self.first_betti_number() as i64 + self.vertices.len() as i64
    }

    /// `H_1(M(G); Z) = coker A`, only for nondegenerate `A`.
    ///
    /// Cycles in the graph add free summands to `H_1(M(G))` that the
    /// intersection matrix does not see, so non-trees are rejected as well.
    pub fn link_first_homology(&self) -> Result<FinAbGroup> {
        let h = linalg::cokernel(&self.intersection_matrix());
        let free_rank = h.free_rank() + self.first_betti_number();
        if free_rank > 0 {
            return Err(Error::NotRationalHomologySphere { free_rank });
        }
        Ok(h)
    }

    /// `α(M(G))`: dimension of `T ⊗ Z/2` for the torsion `T` of `H_1`.
    pub fn alpha(&self) -> Result<usize> {
        self.link_first_homology().map(|h| h.two_rank())
    }
}

/// Recognizes a Dynkin diagram of type A, D or E: a tree with all weights
/// `-2`, all edge signs `+1`, and the matching shape.
pub fn recognize_dynkin(g: &PlumbingGraph) -> Option<DynkinLabel> {
    if !g.is_tree() || g.vertices().iter().any(|v| v.weight != -2) || g.edges().iter().any(|e| e.sign != 1) {
        return None;
    }
    let n = u32::try_from(g.vertex_count()).ok()?;
    let adj = g.neighbours();
    let branch: Vec<usize> = (0..adj.len()).filter(|&v| adj[v].len() >= 3).collect();
    match branch.as_slice() {
        [] => DynkinLabel::a(n + 1).ok(),
        [c] if adj[*c].len() == 3 => {
            // arm lengths, walking out from the branch vertex
            let mut arms: Vec<usize> = adj[*c]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*c, start, 1);
                    while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
                        (prev, cur) = (cur, next);
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => DynkinLabel::d(n - 2).ok(),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => DynkinLabel::e(n).ok(),
                _ => None,
            }
        }
        _ => None,
    }
}

pub fn dynkin_graph(label: DynkinLabel) -> PlumbingGraph {
    let n = label.vertex_count() as i64;
    let vertices = (0..n).map(|id| Vertex { id, weight: -2 }).collect();
    let edge = |a: i64, b: i64| Edge { a, b, sign: 1 };
    let edges = match label.family() {
        Family::A => (0..n - 1).map(|i| edge(i, i + 1)).collect(),
        // path 0..n-2 with the last vertex hanging off n-3
        Family::D => {
            let mut es: Vec<Edge> = (0..n - 2).map(|i| edge(i, i + 1)).collect();
            es.push(edge(n - 3, n - 1));
            es
        }
        // path 0..n-2 with the last vertex hanging off vertex 2
        Family::E => {
            let mut es: Vec<Edge> = (0..n - 2).map(|i| edge(i, i + 1)).collect();
            es.push(edge(2, n - 1));
            es
        }
    };
    PlumbingGraph::new(vertices, edges).expect("Dynkin diagrams are connected trees")
}
