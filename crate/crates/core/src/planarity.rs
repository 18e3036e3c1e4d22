//! Exact planarity testing with the left-right (LR) criterion, plus
//! extraction and validation of Kuratowski subdivisions.
//!
//! The test follows the two-pass formulation: a DFS orients the graph and
//! computes lowpoints and nesting depths, then a second DFS over the
//! nesting-ordered adjacency lists maintains a stack of conflict pairs of
//! return-edge intervals. The graph is non-planar exactly when two intervals
//! are forced onto the same side.
//!
//! Witnesses are found by deletion: drop every vertex, then every edge, whose
//! removal keeps the graph non-planar. What remains is a minimal non-planar
//! graph, hence a subdivision of `K_5` or `K_{3,3}`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

/// An undirected simple graph on `0..n` given as an edge list.
#[derive(Debug, Clone)]
struct Adjacency {
    n: usize,
    /// Per vertex: (neighbour, undirected edge id).
    adj: Vec<Vec<(usize, usize)>>,
    edges: usize,
}

impl Adjacency {
    fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        let mut count = 0;
        for &(a, b) in edges {
            assert!(a < n && b < n, "edge ({a}, {b}) out of range for {n} vertices");
            if a == b || !seen.insert((a.min(b), a.max(b))) {
                continue;
            }
            adj[a].push((b, count));
            adj[b].push((a, count));
            count += 1;
        }
        Adjacency {
            n,
            adj,
            edges: count,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn single(e: usize) -> Self {
        Interval {
            low: Some(e),
            high: Some(e),
        }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy)]
struct ConflictPair {
    id: u64,
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

const UNSET: usize = usize::MAX;

struct LrState<'g> {
    g: &'g Adjacency,
    height: Vec<usize>,
    parent_edge: Vec<Option<usize>>,
    oriented: Vec<bool>,
    src: Vec<usize>,
    dst: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    out_edges: Vec<Vec<usize>>,
    reference: Vec<Option<usize>>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<Option<u64>>,
    stack: Vec<ConflictPair>,
    next_id: u64,
}

impl<'g> LrState<'g> {
    fn new(g: &'g Adjacency) -> Self {
        let m = g.edges;
        LrState {
            g,
            height: vec![UNSET; g.n],
            parent_edge: vec![None; g.n],
            oriented: vec![false; m],
            src: vec![UNSET; m],
            dst: vec![UNSET; m],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            out_edges: vec![Vec::new(); g.n],
            reference: vec![None; m],
            lowpt_edge: vec![UNSET; m],
            stack_bottom: vec![None; m],
            stack: Vec::new(),
            next_id: 0,
        }
    }

    fn run(mut self) -> bool {
        let mut roots = Vec::new();
        for v in 0..self.g.n {
            if self.height[v] == UNSET {
                self.height[v] = 0;
                roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..self.g.n {
            let depth = &self.nesting_depth;
            self.out_edges[v].sort_by_key(|&e| depth[e]);
        }
        roots.into_iter().all(|r| self.test(r))
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for k in 0..self.g.adj[v].len() {
            let (w, vw) = self.g.adj[v][k];
            if self.oriented[vw] {
                continue;
            }
            self.oriented[vw] = true;
            self.src[vw] = v;
            self.dst[vw] = w;
            self.out_edges[v].push(vw);
            self.lowpt[vw] = self.height[v];
            self.lowpt2[vw] = self.height[v];
            if self.height[w] == UNSET {
                self.parent_edge[w] = Some(vw);
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[vw] = self.height[w];
            }

            self.nesting_depth[vw] = 2 * self.lowpt[vw];
            if self.lowpt2[vw] < self.height[v] {
                // chordal
                self.nesting_depth[vw] += 1;
            }

            if let Some(e) = e {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn top_id(&self) -> Option<u64> {
        self.stack.last().map(|p| p.id)
    }

    fn push_new(&mut self, left: Interval, right: Interval) {
        let id = self.next_id;
        self.next_id += 1;
        self.stack.push(ConflictPair { id, left, right });
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        match i.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => UNSET,
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let edges = self.out_edges[v].clone();
        for (idx, &ei) in edges.iter().enumerate() {
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.top_id();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.push_new(Interval::default(), Interval::single(ei));
            }

            if self.lowpt[ei] < self.height[v] {
                let e = e.expect("only non-root vertices have return edges below them");
                if idx == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = e {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p_left = Interval::default();
        let mut p_right = Interval::default();

        // merge return edges of ei into the right interval
        while let Some(mut q) = self.stack.pop() {
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("non-empty interval");
            if self.lowpt[q_low] > self.lowpt[e] {
                if p_right.is_empty() {
                    p_right = q.right;
                } else if let Some(pl) = p_right.low {
                    self.reference[pl] = q.right.high;
                }
                p_right.low = q.right.low;
            } else {
                self.reference[q_low] = Some(self.lowpt_edge[e]);
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }

        // merge conflicting return edges of earlier siblings into the left
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(pl) = p_right.low {
                self.reference[pl] = q.right.high;
            }
            if q.right.low.is_some() {
                p_right.low = q.right.low;
            }
            if p_left.is_empty() {
                p_left = q.left;
            } else if let Some(pl) = p_left.low {
                self.reference[pl] = q.left.high;
            }
            p_left.low = q.left.low;
        }

        if !(p_left.is_empty() && p_right.is_empty()) {
            self.push_new(p_left, p_right);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            self.stack.pop();
        }

        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(low) = p.left.low.take() {
                    self.reference[low] = p.right.low;
                }
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(low) = p.right.low.take() {
                    self.reference[low] = p.left.low;
                }
            }
            self.stack.push(p);
        }

        if self.lowpt[e] < self.height[u] {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                self.reference[e] = match (hl, hr) {
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    (Some(l), None) => Some(l),
                    _ => hr,
                };
            }
        }
    }
}

/// Planarity of the simple graph on `0..n` with the given edges. Loops and
/// repeated edges are ignored.
pub fn is_planar_edges(n: usize, edges: &[(usize, usize)]) -> bool {
    let g = Adjacency::new(n, edges);
    if g.n > 2 && g.edges > 3 * g.n - 6 {
        return false;
    }
    LrState::new(&g).run()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of `K_5` or `K_{3,3}` inside a graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subdivision {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

/// A Kuratowski subdivision contained in the graph, or `None` if it is planar.
pub fn find_kuratowski(n: usize, edges: &[(usize, usize)]) -> Option<Subdivision> {
    if is_planar_edges(n, edges) {
        return None;
    }
    let mut current: BTreeSet<(usize, usize)> = edges
        .iter()
        .filter(|(a, b)| a != b)
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();

    for v in 0..n {
        let without: Vec<_> = current
            .iter()
            .copied()
            .filter(|&(a, b)| a != v && b != v)
            .collect();
        if without.len() != current.len() && !is_planar_edges(n, &without) {
            current = without.into_iter().collect();
        }
    }
    for edge in current.clone() {
        current.remove(&edge);
        let rest: Vec<_> = current.iter().copied().collect();
        if is_planar_edges(n, &rest) {
            current.insert(edge);
        }
    }

    let edges: Vec<_> = current.into_iter().collect();
    let (kind, branch_vertices) = classify_subdivision(&edges)?;
    Some(Subdivision {
        kind,
        branch_vertices,
        edges,
    })
}

/// Decides whether an edge list is exactly a subdivision of `K_5` or
/// `K_{3,3}`, returning its kind and sorted branch vertices.
pub fn classify_subdivision(edges: &[(usize, usize)]) -> Option<(KuratowskiKind, Vec<usize>)> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut seen = BTreeSet::new();
    for &(a, b) in edges {
        if a == b || !seen.insert((a.min(b), a.max(b))) {
            return None;
        }
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    if adj.values().any(|ns| ns.len() < 2) {
        return None;
    }
    let branch: Vec<usize> = adj
        .iter()
        .filter(|(_, ns)| ns.len() >= 3)
        .map(|(&v, _)| v)
        .collect();
    let kind = match branch.len() {
        5 if branch.iter().all(|v| adj[v].len() == 4) => KuratowskiKind::K5,
        6 if branch.iter().all(|v| adj[v].len() == 3) => KuratowskiKind::K33,
        _ => return None,
    };

    // follow every branch-to-branch path through degree-2 vertices
    let mut visited_inner = BTreeSet::new();
    let mut links: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &b in &branch {
        for &first in &adj[&b] {
            let (mut prev, mut cur) = (b, first);
            while adj[&cur].len() == 2 {
                visited_inner.insert(cur);
                let next = if adj[&cur][0] == prev {
                    adj[&cur][1]
                } else {
                    adj[&cur][0]
                };
                prev = cur;
                cur = next;
            }
            if cur == b {
                return None;
            }
            *links.entry((b.min(cur), b.max(cur))).or_default() += 1;
        }
    }
    let inner = adj.len() - branch.len();
    if visited_inner.len() != inner || links.values().any(|&c| c != 2) {
        return None;
    }

    let pairs: BTreeSet<(usize, usize)> = links.into_keys().collect();
    match kind {
        KuratowskiKind::K5 if pairs.len() == 10 => Some((kind, branch)),
        KuratowskiKind::K33 if pairs.len() == 9 => {
            let a = branch[0];
            let side_b: BTreeSet<usize> = pairs
                .iter()
                .filter_map(|&(x, y)| {
                    if x == a {
                        Some(y)
                    } else if y == a {
                        Some(x)
                    } else {
                        None
                    }
                })
                .collect();
            let side_a: BTreeSet<usize> =
                branch.iter().copied().filter(|v| !side_b.contains(v)).collect();
            let complete = side_a.len() == 3
                && side_b.len() == 3
                && side_a.iter().all(|&x| {
                    side_b
                        .iter()
                        .all(|&y| pairs.contains(&(x.min(y), x.max(y))))
                });
            complete.then_some((kind, branch))
        }
        _ => None,
    }
}
