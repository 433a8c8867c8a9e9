//! Simple undirected graphs with positional vertex identity.
//!
//! Vertices are `0..n`. Every operation returns a new graph; labels carry
//! provenance (original vertex indices) through re-indexing operations such
//! as [`Graph::induced_subgraph`] and [`Graph::contract_edge`].

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Sorted, duplicate-free set of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut vs: Vec<usize>) -> Self {
        vs.sort_unstable();
        vs.dedup();
        VertexSet(vs)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::new(self.iter().chain(other.iter()).collect())
    }

    fn check_range(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// A simple undirected graph. Equality compares structure only, never labels.
#[derive(Debug, Clone, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
            labels: None,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::pre(format!("self-loop at {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::pre(format!("duplicate edge ({u}, {v})")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Like [`Graph::from_edges`] but silently merges duplicates and drops loops.
    pub(crate) fn from_edges_lossy(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u != v && !g.has_edge(u, v) {
                g.insert_edge(u, v);
            }
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges_lossy(n, edges)
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges_lossy(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.insert_edge(0, n - 1);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::from_edges_lossy(
            a + b,
            (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))),
        )
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.m += 1;
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::pre("label count does not match vertex count"));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet((0..self.n()).collect())
    }

    /// Subgraph induced by `s`, re-indexed in `s` order; labels record the
    /// original labels.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        s.check_range(self.n())?;
        let mut index = vec![usize::MAX; self.n()];
        for (i, v) in s.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(s.len());
        for (i, u) in s.iter().enumerate() {
            for &v in &self.adj[u] {
                let j = index[v];
                if j != usize::MAX && j > i {
                    g.adj[i].push(j);
                    g.adj[j].push(i);
                    g.m += 1;
                }
            }
        }
        for ns in &mut g.adj {
            ns.sort_unstable();
        }
        g.labels = Some(s.iter().map(|v| self.label(v)).collect());
        Ok(g)
    }

    pub fn delete_vertices(&self, s: &VertexSet) -> Result<Graph> {
        s.check_range(self.n())?;
        let keep: VertexSet = (0..self.n()).filter(|&v| !s.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_avoiding(&VertexSet::empty())
    }

    /// Components of `G - removed`, expressed in the original indices.
    pub fn components_avoiding(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        for v in removed.iter() {
            if v < n {
                seen[v] = true;
            }
        }
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    /// Contracts `e`, merging the larger endpoint into the smaller one.
    /// Vertices above the removed index shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let map = |x: usize| -> usize {
            let x = if x == gone { keep } else { x };
            if x > gone {
                x - 1
            } else {
                x
            }
        };
        let mut g = Graph::from_edges_lossy(self.n() - 1, self.edges().map(|(a, b)| (map(a), map(b))));
        let labels = (0..self.n()).filter(|&x| x != gone).map(|x| self.label(x)).collect();
        g.labels = Some(labels);
        Ok(g)
    }

    /// Inserts every missing edge inside `x`.
    pub fn add_clique(&self, x: &VertexSet) -> Result<Graph> {
        x.check_range(self.n())?;
        let mut g = self.clone();
        let xs = x.as_slice();
        for (i, &a) in xs.iter().enumerate() {
            for &b in &xs[i + 1..] {
                if !g.has_edge(a, b) {
                    g.insert_edge(a, b);
                }
            }
        }
        Ok(g)
    }

    /// Deletes every edge with both endpoints in `x`.
    pub fn remove_internal_edges(&self, x: &VertexSet) -> Result<Graph> {
        x.check_range(self.n())?;
        let edges: Vec<_> = self
            .edges()
            .filter(|&(a, b)| !(x.contains(a) && x.contains(b)))
            .collect();
        let mut g = Graph::from_edges_lossy(self.n(), edges);
        g.labels = self.labels.clone();
        Ok(g)
    }

    /// Vertices outside `s` adjacent to some vertex of `s`.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        s.iter()
            .flat_map(|u| self.adj[u].iter().copied())
            .filter(|&w| !s.contains(w))
            .collect()
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        Graph::from_edges_lossy(
            off + other.n(),
            self.edges().chain(other.edges().map(|(a, b)| (a + off, b + off))),
        )
    }

    pub fn parse(text: &str) -> Result<Graph> {
        parse_graph(text)
    }

    /// Canonical edge-list text: `n m` then sorted edges, one per line.
    pub fn serialize(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Parses the edge-list format: header `n m`, then `m` lines `u v`.
/// Lines starting with `#` and blank lines are skipped.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing header \"n m\"".into(),
    })?;
    let (n, m) = parse_pair(hline, header)?;

    let mut g = Graph::empty(n);
    let mut seen = BTreeSet::new();
    for (line, l) in lines {
        let (u, v) = parse_pair(line, l)?;
        let perr = |msg: String| Error::Parse { line, msg };
        if u >= n || v >= n {
            return Err(perr(format!("vertex {} out of range (n = {n})", u.max(v))));
        }
        if u == v {
            return Err(perr(format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(perr(format!("duplicate edge {u} {v}")));
        }
        g.insert_edge(u, v);
    }
    if g.m() != m {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header declares {m} edges, found {}", g.m()),
        });
    }
    Ok(g)
}

fn parse_pair(line: usize, l: &str) -> Result<(usize, usize)> {
    let perr = |msg: &str| Error::Parse { line, msg: msg.into() };
    let mut it = l.split_whitespace();
    let a = it.next().ok_or_else(|| perr("expected two integers"))?;
    let b = it.next().ok_or_else(|| perr("expected two integers"))?;
    if it.next().is_some() {
        return Err(perr("trailing tokens"));
    }
    let a = a.parse().map_err(|_| perr("malformed integer"))?;
    let b = b.parse().map_err(|_| perr("malformed integer"))?;
    Ok((a, b))
}
