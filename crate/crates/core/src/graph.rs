//! Commuting graphs `Γ(H)`: vertices are the non-identity elements of `H`,
//! with an edge between distinct commuting elements.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::monoid::BraidEngine;
use crate::planarity::{self, KuratowskiKind};
use crate::simple::{enum_simple, SimpleBraid};
use crate::symm::{self, enum_sym, perm_commute, Permutation};

/// Graph families studied here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Simple braids `SB_n`.
    Sb,
    /// Simple permutations `π(SB_n)`.
    Ssigma,
    /// The full symmetric group `Σ_n`.
    Sigma,
}

impl std::str::FromStr for Family {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sb" => Ok(Family::Sb),
            "ssigma" => Ok(Family::Ssigma),
            "sigma" => Ok(Family::Sigma),
            other => Err(BraidError::Precondition(format!(
                "unknown graph family `{other}` (expected sb, ssigma or sigma)"
            ))),
        }
    }
}

/// An undirected simple graph with string labels. Edges are stored as pairs
/// of vertex indices `(a, b)` with `a < b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingGraph {
    vertices: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
    index: BTreeMap<String, usize>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlanarityVerdict {
    pub planar: bool,
    pub witness: Option<Witness>,
}

impl CommutingGraph {
    /// Builds a graph from labels and index pairs. Loops are rejected;
    /// duplicate edges collapse.
    pub fn from_parts(vertices: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(BraidError::Precondition(format!("duplicate vertex `{v}`")));
            }
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b || a >= vertices.len() || b >= vertices.len() {
                return Err(BraidError::Precondition(format!("invalid edge ({a}, {b})")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(CommutingGraph {
            vertices,
            edges: set,
            index,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edges
            .iter()
            .map(|&(a, b)| (self.vertices[a].as_str(), self.vertices[b].as_str()))
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(x), Some(y)) => self.edges.contains(&(x.min(y), x.max(y))),
            _ => false,
        }
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn degrees(&self) -> BTreeMap<String, usize> {
        let adj = self.adjacency();
        self.vertices
            .iter()
            .cloned()
            .zip(adj.iter().map(Vec::len))
            .collect()
    }

    pub fn degree(&self, label: &str) -> Option<usize> {
        let v = self.index_of(label)?;
        Some(
            self.edges
                .iter()
                .filter(|&&(a, b)| a == v || b == v)
                .count(),
        )
    }

    /// Connected components, each listed in vertex order; components are
    /// ordered by their first vertex.
    pub fn components(&self) -> Vec<Vec<String>> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.vertices.len()];
        let mut out = Vec::new();
        for start in 0..self.vertices.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            let mut stack = vec![start];
            comp[start] = id;
            while let Some(v) = stack.pop() {
                for &u in &adj[v] {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        members.push(u);
                        stack.push(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(members.into_iter().map(|v| self.vertices[v].clone()).collect());
        }
        out
    }

    /// Vertices left after repeatedly deleting vertices of degree at most one.
    pub fn two_core(&self) -> Vec<String> {
        let adj = self.adjacency();
        let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
        let mut alive = vec![true; deg.len()];
        let mut queue: Vec<usize> = (0..deg.len()).filter(|&v| deg[v] <= 1).collect();
        while let Some(v) = queue.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &u in &adj[v] {
                if alive[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        queue.push(u);
                    }
                }
            }
        }
        (0..alive.len())
            .filter(|&v| alive[v])
            .map(|v| self.vertices[v].clone())
            .collect()
    }

    /// The subgraph induced by the listed vertices.
    pub fn induced(&self, labels: &[String]) -> Result<CommutingGraph> {
        let idx = self.lookup(labels)?;
        let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|(a, b)| Some((*pos.get(a)?, *pos.get(b)?)));
        CommutingGraph::from_parts(labels.to_vec(), edges)
    }

    fn lookup(&self, labels: &[impl AsRef<str>]) -> Result<Vec<usize>> {
        labels
            .iter()
            .map(|l| {
                self.index_of(l.as_ref()).ok_or_else(|| {
                    BraidError::Precondition(format!("`{}` is not a vertex", l.as_ref()))
                })
            })
            .collect()
    }

    /// Every pair of the listed vertices is adjacent.
    pub fn contains_clique(&self, labels: &[impl AsRef<str>]) -> Result<bool> {
        let idx = self.lookup(labels)?;
        Ok(idx.iter().enumerate().all(|(k, &a)| {
            idx[k + 1..]
                .iter()
                .all(|&b| a != b && self.edges.contains(&(a.min(b), a.max(b))))
        }))
    }

    /// Every vertex of `part_a` is adjacent to every vertex of `part_b`.
    pub fn contains_complete_bipartite(
        &self,
        part_a: &[impl AsRef<str>],
        part_b: &[impl AsRef<str>],
    ) -> Result<bool> {
        let a = self.lookup(part_a)?;
        let b = self.lookup(part_b)?;
        Ok(a.iter().all(|&x| {
            b.iter()
                .all(|&y| x != y && self.edges.contains(&(x.min(y), x.max(y))))
        }))
    }

    /// Some clique on `k` vertices, found by backtracking in vertex order.
    pub fn find_clique(&self, k: usize) -> Option<Vec<String>> {
        let n = self.vertices.len();
        let mut adj = vec![vec![false; n]; n];
        for &(a, b) in &self.edges {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        fn extend(adj: &[Vec<bool>], chosen: &mut Vec<usize>, from: usize, k: usize) -> bool {
            if chosen.len() == k {
                return true;
            }
            for v in from..adj.len() {
                if chosen.iter().all(|&c| adj[c][v]) {
                    chosen.push(v);
                    if extend(adj, chosen, v + 1, k) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        let mut chosen = Vec::new();
        extend(&adj, &mut chosen, 0, k)
            .then(|| chosen.iter().map(|&v| self.vertices[v].clone()).collect())
    }

    pub fn is_planar(&self) -> PlanarityVerdict {
        let edges: Vec<_> = self.edges.iter().copied().collect();
        let n = self.vertices.len();
        if planarity::is_planar_edges(n, &edges) {
            return PlanarityVerdict {
                planar: true,
                witness: None,
            };
        }
        let witness = planarity::find_kuratowski(n, &edges).map(|s| Witness {
            kind: s.kind,
            branch_vertices: s
                .branch_vertices
                .iter()
                .map(|&v| self.vertices[v].clone())
                .collect(),
            edges: s
                .edges
                .iter()
                .map(|&(a, b)| [self.vertices[a].clone(), self.vertices[b].clone()])
                .collect(),
        });
        PlanarityVerdict {
            planar: false,
            witness,
        }
    }

    /// Planarity decision alone, without witness extraction.
    pub fn planar(&self) -> bool {
        let edges: Vec<_> = self.edges.iter().copied().collect();
        planarity::is_planar_edges(self.vertices.len(), &edges)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for (a, b) in self.edges() {
            let _ = writeln!(out, "  \"{a}\" -- \"{b}\";");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.json_repr()).expect("graph serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.json_repr()).expect("graph serializes")
    }

    fn json_repr(&self) -> GraphJson {
        GraphJson {
            vertices: self.vertices.clone(),
            edges: self
                .edges()
                .map(|(a, b)| [a.to_string(), b.to_string()])
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: GraphJson = serde_json::from_str(text)
            .map_err(|e| BraidError::Precondition(format!("invalid graph JSON: {e}")))?;
        let index: BTreeMap<&str, usize> = raw
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let edges = raw
            .edges
            .iter()
            .map(|[a, b]| match (index.get(a.as_str()), index.get(b.as_str())) {
                (Some(&x), Some(&y)) => Ok((x, y)),
                _ => Err(BraidError::Precondition(format!(
                    "edge {a} -- {b} names an unknown vertex"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        CommutingGraph::from_parts(raw.vertices, edges)
    }
}

/// Commuting graph over labelled elements. Pairs are tested in parallel; the
/// result does not depend on scheduling. The caller leaves out the identity.
pub fn build_graph<T, F>(elements: &[(String, T)], commute: F) -> Result<CommutingGraph>
where
    T: Sync,
    F: Fn(&T, &T) -> Result<bool> + Sync,
{
    let n = elements.len();
    let edges = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut row = Vec::new();
            for b in a + 1..n {
                if commute(&elements[a].1, &elements[b].1)? {
                    row.push((a, b));
                }
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    CommutingGraph::from_parts(
        elements.iter().map(|(l, _)| l.clone()).collect(),
        edges.into_iter().flatten(),
    )
}

/// `Γ(SB_n)`, vertices labelled `x1x2` style in shortlex order.
pub fn graph_simple_braids(engine: &BraidEngine, n: usize) -> Result<CommutingGraph> {
    let limits = engine.limits();
    limits.check("simple-braid commuting graph", n, limits.max_graph_braid_n)?;
    let elements: Vec<(String, SimpleBraid)> = enum_simple(engine, n)?
        .into_iter()
        .filter(|b| !b.is_empty())
        .map(|b| (b.label(), b))
        .collect();
    build_graph(&elements, |a, b| engine.commutes(a.word(), b.word()))
}

fn perm_elements(perms: impl IntoIterator<Item = Permutation>) -> Vec<(String, Permutation)> {
    let mut v: Vec<Permutation> = perms.into_iter().filter(|p| !p.is_identity()).collect();
    v.sort();
    v.into_iter().map(|p| (p.to_string(), p)).collect()
}

/// `Γ(SΣ_n)`, vertices labelled by one-line notation.
pub fn graph_simple_perms(engine: &BraidEngine, n: usize) -> Result<CommutingGraph> {
    let limits = engine.limits();
    limits.check("simple-permutation commuting graph", n, limits.max_graph_perm_n)?;
    let elements = perm_elements(symm::enum_simple_perms(engine, n)?);
    build_graph(&elements, perm_commute)
}

/// `Γ(Σ_n)`, vertices labelled by one-line notation.
pub fn graph_sym(engine: &BraidEngine, n: usize) -> Result<CommutingGraph> {
    let limits = engine.limits();
    limits.check("symmetric-group commuting graph", n, limits.max_graph_perm_n)?;
    let elements = perm_elements(enum_sym(limits, n)?);
    build_graph(&elements, perm_commute)
}

pub fn graph_for(engine: &BraidEngine, family: Family, n: usize) -> Result<CommutingGraph> {
    match family {
        Family::Sb => graph_simple_braids(engine, n),
        Family::Ssigma => graph_simple_perms(engine, n),
        Family::Sigma => graph_sym(engine, n),
    }
}
