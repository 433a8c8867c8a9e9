//! Extremal generators: flap pasting, tree blowups and splitting growth.

use std::collections::BTreeSet;

use crate::embedding::EmbeddedGraph;
use crate::error::{Error, Result};
use crate::flap::{flap_number, max_independent_flaps, tree_beta_set};
use crate::graph::Graph;

/// A graph on at most `n` vertices with at least `(⌊n/h⌋ − 1)^k` copies of
/// `H`, where `h = |V(H)|` and `k = f(H)`.
///
/// Each flap interior of a maximum independent family is cloned `q` times
/// with the same attachments to its cut; the interiors of 2-separations are
/// first removed and their cut joined by an edge, the interiors of
/// 1-separations stay. When `f(H) = 1` comes from `H` having no
/// (≤2)-separation at all there is nothing to paste, and the output is
/// `⌊n/h⌋` disjoint copies of `H`.
pub fn lower_bound_graph(h: &Graph, n: usize) -> Result<Graph> {
    if h.n() == 0 {
        return Err(Error::pre("pattern graph is empty"));
    }
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let hn = h.n();
    if n < 4 * hn {
        return Err(Error::pre(format!("n = {n} is below 4|V(H)| = {}", 4 * hn)));
    }
    let k = flap_number(h)?;
    if k == 0 {
        return Err(Error::pre("H is strongly non-planar: no flap to paste"));
    }
    let family = max_independent_flaps(h)?;
    if family.is_empty() {
        let mut g = Graph::empty(0);
        for _ in 0..n / hn {
            g = g.disjoint_union(h);
        }
        return Ok(g);
    }
    let q = n / hn - 1;
    let family: Vec<_> = family.iter().map(|s| s.tightened(h)).collect();

    let removed: BTreeSet<usize> = family
        .iter()
        .filter(|s| s.cut.len() == 2)
        .flat_map(|s| s.interior.iter())
        .collect();
    let kept: Vec<usize> = (0..hn).filter(|v| !removed.contains(v)).collect();
    let index = |v: usize| kept.binary_search(&v).expect("kept vertex");
    let mut edges: BTreeSet<(usize, usize)> = h
        .edges()
        .filter(|(u, v)| !removed.contains(u) && !removed.contains(v))
        .map(|(u, v)| (index(u), index(v)))
        .collect();
    for s in family.iter().filter(|s| s.cut.len() == 2) {
        let c = s.cut.as_slice();
        edges.insert((index(c[0]), index(c[1])));
    }
    let mut total = kept.len();
    for s in &family {
        let interior = s.interior.as_slice();
        for _ in 0..q {
            let base = total;
            total += interior.len();
            let local = |v: usize| -> usize {
                match interior.binary_search(&v) {
                    Ok(i) => base + i,
                    Err(_) => index(v),
                }
            };
            for &u in interior {
                for &w in h.neighbors(u) {
                    if w > u || !s.interior.contains(w) {
                        let (a, b) = (local(u), local(w));
                        edges.insert((a.min(b), a.max(b)));
                    }
                }
            }
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(total, &edges)
}

/// Replaces every vertex of a maximum stable set `I` of the degree-≤2
/// forest of `T` by `⌊(n − |V(T)|)/β(T)⌋` twins. Vertices `0..|V(T)|` keep
/// their identity; extra twins follow in order of `I`.
pub fn tree_blowup(t: &Graph, n: usize) -> Result<Graph> {
    let stable = tree_beta_set(t)?;
    let tn = t.n();
    if n < 2 * tn {
        return Err(Error::pre(format!("n = {n} is below 2|V(T)| = {}", 2 * tn)));
    }
    let r = (n - tn) / stable.len();
    let mut edges: Vec<(usize, usize)> = t.edges().collect();
    let mut next = tn;
    for v in stable.iter() {
        for _ in 1..r {
            edges.extend(t.neighbors(v).iter().map(|&u| (u, next)));
            next += 1;
        }
    }
    Graph::from_edges(next, &edges)
}

/// Grows a triangulation to `n` vertices by splitting, each time, the first
/// face in sorted vertex-triple order at its smallest vertex.
pub fn split_growth(seed: &EmbeddedGraph, n: usize) -> Result<EmbeddedGraph> {
    if !seed.is_triangulation() {
        return Err(Error::NotATriangulation);
    }
    if n < seed.n() {
        return Err(Error::pre(format!(
            "target n = {n} is below the seed's {} vertices",
            seed.n()
        )));
    }
    let mut e = seed.clone();
    while e.n() < n {
        let [a, b, c] = e.face_triples()[0];
        e = e.split_triangle(b, a, c)?;
    }
    Ok(e)
}

/// Host families for scaling experiments.
#[derive(Debug, Clone)]
pub enum Generator {
    TreeBlowup,
    LowerBound,
    SplitGrowth(EmbeddedGraph),
}

impl Generator {
    pub fn host(&self, h: &Graph, n: usize) -> Result<Graph> {
        match self {
            Generator::TreeBlowup => tree_blowup(h, n),
            Generator::LowerBound => lower_bound_graph(h, n),
            Generator::SplitGrowth(seed) => Ok(split_growth(seed, n)?.graph()),
        }
    }
}
