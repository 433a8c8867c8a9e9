//! SPQRK trees: an SPQR-style decomposition extended with K-nodes (K₁, K₂)
//! and Q-nodes (cut vertices) so that every connected graph has one.
//!
//! Node minors are stored over the original vertex indices of the input.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NodeKind {
    S,
    P,
    Q,
    R,
    K,
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            NodeKind::S => "S",
            NodeKind::P => "P",
            NodeKind::Q => "Q",
            NodeKind::R => "R",
            NodeKind::K => "K",
        };
        f.write_str(c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NodeEdge {
    pub u: usize,
    pub v: usize,
    pub real: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpqrkNode {
    pub kind: NodeKind,
    pub vertices: VertexSet,
    /// Multigraph edges with `u < v`; parallel virtual copies occur only in P-nodes.
    pub edges: Vec<NodeEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpqrkTree {
    pub nodes: Vec<SpqrkNode>,
    pub tree_edges: Vec<(usize, usize)>,
}

/// Working piece: sorted original vertices and simple edge list.
struct Piece {
    verts: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl Piece {
    fn local(&self) -> Graph {
        let idx = |v: usize| self.verts.binary_search(&v).unwrap();
        Graph::from_edges_lossy(
            self.verts.len(),
            self.edges.iter().map(|&(u, v)| (idx(u), idx(v))),
        )
    }

    fn sub(&self, keep: &BTreeSet<usize>, extra: Option<(usize, usize)>) -> Piece {
        let mut edges: BTreeSet<(usize, usize)> = self
            .edges
            .iter()
            .copied()
            .filter(|(u, v)| keep.contains(u) && keep.contains(v))
            .collect();
        if let Some(e) = extra {
            edges.insert(e);
        }
        Piece {
            verts: keep.iter().copied().collect(),
            edges: edges.into_iter().collect(),
        }
    }
}

fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && (0..g.n()).all(|v| g.degree(v) == 2)
}

fn cut_vertex(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&v| g.components_avoiding(&VertexSet::new(vec![v])).len() >= 2)
}

/// Lexicographically smallest 2-cut whose vertices both have degree ≥ 3.
fn two_cut(g: &Graph, min_degree: usize) -> Option<(usize, usize)> {
    let n = g.n();
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| g.degree(a) >= min_degree && g.degree(b) >= min_degree)
        .find(|&(a, b)| g.components_avoiding(&VertexSet::new(vec![a, b])).len() >= 2)
}

fn is_three_connected(g: &Graph) -> bool {
    g.n() >= 4 && g.is_connected() && cut_vertex(g).is_none() && two_cut(g, 0).is_none()
}

struct Builder {
    nodes: Vec<SpqrkNode>,
    tree_edges: Vec<(usize, usize)>,
}

impl Builder {
    fn push(&mut self, kind: NodeKind, verts: &[usize], edges: Vec<NodeEdge>) -> usize {
        self.nodes.push(SpqrkNode {
            kind,
            vertices: VertexSet::new(verts.to_vec()),
            edges,
        });
        self.nodes.len() - 1
    }

    fn leaf(&mut self, kind: NodeKind, p: &Piece) {
        let edges = p
            .edges
            .iter()
            .map(|&(u, v)| NodeEdge { u, v, real: true })
            .collect();
        self.push(kind, &p.verts, edges);
    }

    /// Decomposes `p`; the created nodes occupy a contiguous index range.
    fn build(&mut self, p: Piece) -> std::ops::Range<usize> {
        let start = self.nodes.len();
        let g = p.local();
        if p.verts.len() <= 2 {
            self.leaf(NodeKind::K, &p);
        } else if is_cycle(&g) {
            self.leaf(NodeKind::S, &p);
        } else if is_three_connected(&g) {
            self.leaf(NodeKind::R, &p);
        } else if let Some(c) = cut_vertex(&g) {
            self.split_cut_vertex(&p, &g, c);
        } else {
            let (a, b) = two_cut(&g, 3).expect("2-connected non-cycle, non-3-connected graph has a 2-cut");
            self.split_two_cut(&p, &g, a, b);
        }
        start..self.nodes.len()
    }

    fn split_cut_vertex(&mut self, p: &Piece, g: &Graph, c: usize) {
        let x = p.verts[c];
        let q = self.push(NodeKind::Q, &[x], Vec::new());
        for comp in g.components_avoiding(&VertexSet::new(vec![c])) {
            let mut keep: BTreeSet<usize> = comp.iter().map(|i| p.verts[i]).collect();
            keep.insert(x);
            let range = self.build(p.sub(&keep, None));
            let holders: Vec<usize> = range
                .clone()
                .filter(|&i| self.nodes[i].vertices.contains(x))
                .collect();
            let target = if holders.len() == 1 {
                holders[0]
            } else {
                *holders
                    .iter()
                    .find(|&&i| self.nodes[i].kind == NodeKind::P)
                    .expect("a vertex shared by several nodes lies in a P-node cut")
            };
            self.tree_edges.push((q, target));
        }
    }

    fn split_two_cut(&mut self, p: &Piece, g: &Graph, a: usize, b: usize) {
        let (x, y) = (p.verts[a], p.verts[b]);
        let comps = g.components_avoiding(&VertexSet::new(vec![a, b]));
        let mut edges = vec![NodeEdge { u: x, v: y, real: false }; comps.len()];
        if g.has_edge(a, b) {
            edges.push(NodeEdge { u: x, v: y, real: true });
        }
        let pnode = self.push(NodeKind::P, &[x, y], edges);
        for comp in comps {
            let mut keep: BTreeSet<usize> = comp.iter().map(|i| p.verts[i]).collect();
            keep.insert(x);
            keep.insert(y);
            // the child's xy stands in for the rest of the graph
            let range = self.build(p.sub(&keep, Some((x, y))));
            let holder = range
                .clone()
                .find(|&i| {
                    self.nodes[i]
                        .edges
                        .iter()
                        .any(|e| e.real && (e.u, e.v) == (x, y))
                })
                .expect("child decomposition holds xy as a real edge");
            for e in &mut self.nodes[holder].edges {
                if e.real && (e.u, e.v) == (x, y) {
                    e.real = false;
                    break;
                }
            }
            self.tree_edges.push((pnode, holder));
        }
    }
}

/// Builds the SPQRK tree of a connected graph.
pub fn spqrk_build(g: &Graph) -> Result<SpqrkTree> {
    if g.n() == 0 {
        return Err(Error::pre("the empty graph has no SPQRK tree"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut b = Builder {
        nodes: Vec::new(),
        tree_edges: Vec::new(),
    };
    b.build(Piece {
        verts: (0..g.n()).collect(),
        edges: g.edges().collect(),
    });
    Ok(SpqrkTree {
        nodes: b.nodes,
        tree_edges: b.tree_edges,
    })
}

impl SpqrkTree {
    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(a, b) in &self.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    fn reachable(&self, adj: &[Vec<usize>]) -> Vec<usize> {
        self.side(adj, 0, None)
    }

    /// Nodes reachable from `start` without passing through `blocked`.
    fn side(&self, adj: &[Vec<usize>], start: usize, blocked: Option<usize>) -> Vec<usize> {
        let mut seen = vec![false; self.nodes.len()];
        if let Some(b) = blocked {
            seen[b] = true;
        }
        seen[start] = true;
        let mut out = vec![start];
        let mut i = 0;
        while i < out.len() {
            for &w in &adj[out[i]] {
                if !seen[w] {
                    seen[w] = true;
                    out.push(w);
                }
            }
            i += 1;
        }
        out
    }

    /// Indented rendering rooted at node 0.
    pub fn serialize(&self) -> String {
        let adj = self.adjacency();
        let mut out = String::new();
        if self.nodes.is_empty() {
            return out;
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![(0usize, 0usize)];
        seen[0] = true;
        while let Some((a, depth)) = stack.pop() {
            let node = &self.nodes[a];
            let _ = write!(out, "{}{} {}", "  ".repeat(depth), node.kind, node.vertices);
            for e in &node.edges {
                let _ = write!(out, " {}-{}{}", e.u, e.v, if e.real { 'R' } else { 'V' });
            }
            out.push('\n');
            let mut kids: Vec<usize> = adj[a].iter().copied().filter(|&w| !seen[w]).collect();
            kids.sort_unstable();
            for &w in kids.iter().rev() {
                seen[w] = true;
                stack.push((w, depth + 1));
            }
        }
        out
    }
}

/// BFS path from `x` to `y` using `edges`, avoiding `forbidden` interior vertices.
fn path_avoiding(
    edges: &BTreeSet<(usize, usize)>,
    x: usize,
    y: usize,
    forbidden: &VertexSet,
) -> Option<Vec<usize>> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(u, v) in edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let mut prev = BTreeMap::new();
    prev.insert(x, x);
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        if u == y {
            let mut path = vec![y];
            let mut c = y;
            while c != x {
                c = prev[&c];
                path.push(c);
            }
            return Some(path);
        }
        for &w in adj.get(&u).into_iter().flatten() {
            if prev.contains_key(&w) || (w != y && forbidden.contains(w)) {
                continue;
            }
            prev.insert(w, u);
            queue.push_back(w);
        }
    }
    None
}

/// Checks the three structural invariants of an SPQRK tree against `g`:
/// real edges partition `E(g)`, the nodes form a tree, and every node's
/// multigraph is a minor of `g` (each virtual edge is realised by a path
/// through a distinct neighbouring subtree, internally avoiding the node).
pub fn spqrk_validate(t: &SpqrkTree, g: &Graph) -> bool {
    let k = t.nodes.len();
    if k == 0 || t.tree_edges.len() != k - 1 {
        return false;
    }
    let adj = t.adjacency();
    if t.tree_edges.iter().any(|&(a, b)| a >= k || b >= k || a == b) {
        return false;
    }
    if t.reachable(&adj).len() != k {
        return false;
    }
    let mut real_count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for node in &t.nodes {
        for e in &node.edges {
            if e.u >= e.v || e.v >= g.n() || !node.vertices.contains(e.u) || !node.vertices.contains(e.v) {
                return false;
            }
            if e.real {
                if !g.has_edge(e.u, e.v) {
                    return false;
                }
                *real_count.entry((e.u, e.v)).or_default() += 1;
            }
        }
        if node.vertices.iter().any(|v| v >= g.n()) {
            return false;
        }
    }
    if real_count.len() != g.m() || real_count.values().any(|&c| c != 1) {
        return false;
    }
    (0..k).all(|a| node_is_minor(t, &adj, a))
}

fn node_is_minor(t: &SpqrkTree, adj: &[Vec<usize>], a: usize) -> bool {
    let node = &t.nodes[a];
    let virtuals: Vec<(usize, usize)> = node
        .edges
        .iter()
        .filter(|e| !e.real)
        .map(|e| (e.u, e.v))
        .collect();
    if virtuals.is_empty() {
        return true;
    }
    // per neighbouring subtree: its real edges
    let subtrees: Vec<BTreeSet<(usize, usize)>> = adj[a]
        .iter()
        .map(|&b| {
            t.side(adj, b, Some(a))
                .into_iter()
                .flat_map(|i| t.nodes[i].edges.iter().filter(|e| e.real).map(|e| (e.u, e.v)))
                .collect()
        })
        .collect();
    let paths: Vec<Vec<Option<Vec<usize>>>> = virtuals
        .iter()
        .map(|&(x, y)| {
            subtrees
                .iter()
                .map(|edges| path_avoiding(edges, x, y, &node.vertices))
                .collect()
        })
        .collect();
    // bipartite matching of virtual edges to subtrees (Kuhn)
    let mut owner: Vec<Option<usize>> = vec![None; subtrees.len()];
    fn augment(
        i: usize,
        paths: &[Vec<Option<Vec<usize>>>],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for j in 0..owner.len() {
            if paths[i][j].is_none() || seen[j] {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none_or(|o| augment(o, paths, owner, seen)) {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }
    for i in 0..virtuals.len() {
        let mut seen = vec![false; subtrees.len()];
        if !augment(i, &paths, &mut owner, &mut seen) {
            return false;
        }
    }
    let mut used = BTreeSet::new();
    for (j, o) in owner.iter().enumerate() {
        if let Some(i) = *o {
            let path = paths[i][j].as_ref().unwrap();
            for &v in &path[1..path.len() - 1] {
                if !used.insert(v) {
                    return false;
                }
            }
        }
    }
    true
}
