//! (≤2)-separations, flaps and the flap-number.
//!
//! A separation is stored canonically as `(X, S)`: the cut set `X` with
//! `|X| ≤ 2` and the interior `S = V(A) \ V(B)`, a nonempty union of
//! components of `H − X` that leaves a nonempty remainder. Planarity of `A⁺`
//! and independence depend only on `(X, S)`, never on which side the edges
//! inside `X` were assigned to, so that assignment is not stored.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::planarity::planar_unchecked;

pub const DEFAULT_FLAP_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Separation {
    pub cut: VertexSet,
    pub interior: VertexSet,
}

impl Separation {
    pub fn new(cut: Vec<usize>, interior: Vec<usize>) -> Self {
        Separation {
            cut: VertexSet::new(cut),
            interior: VertexSet::new(interior),
        }
    }

    /// Checks the structural invariants against `h`.
    pub fn validate(&self, h: &Graph) -> Result<()> {
        let n = h.n();
        if self.cut.len() > 2 {
            return Err(Error::pre(format!("cut {} has more than two vertices", self.cut)));
        }
        if self.interior.is_empty() {
            return Err(Error::pre("separation interior is empty"));
        }
        for v in self.cut.iter().chain(self.interior.iter()) {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        if !self.cut.is_disjoint(&self.interior) {
            return Err(Error::pre("cut and interior intersect"));
        }
        if self.cut.len() + self.interior.len() == n {
            return Err(Error::pre("the B-side interior is empty"));
        }
        let leaks = h
            .neighborhood(&self.interior)
            .iter()
            .any(|w| !self.cut.contains(w));
        if leaks {
            return Err(Error::pre(format!(
                "interior {} is not a union of components of H - {}",
                self.interior, self.cut
            )));
        }
        Ok(())
    }

    /// `A⁺`: the graph induced on `X ∪ S` with `X` made a clique.
    pub fn a_plus(&self, h: &Graph) -> Result<Graph> {
        let side = self.cut.union(&self.interior);
        let a = h.induced_subgraph(&side)?;
        let local: VertexSet = self
            .cut
            .iter()
            .map(|x| side.as_slice().binary_search(&x).unwrap())
            .collect();
        a.add_clique(&local)
    }

    /// The opposite orientation `(X, V − X − S)`.
    pub fn complement(&self, h: &Graph) -> Separation {
        Separation {
            cut: self.cut.clone(),
            interior: (0..h.n())
                .filter(|&v| !self.cut.contains(v) && !self.interior.contains(v))
                .collect(),
        }
    }

    /// Edges of `A⁻`: those with at least one endpoint in the interior.
    pub fn a_minus_edges(&self, h: &Graph) -> BTreeSet<(usize, usize)> {
        self.interior
            .iter()
            .flat_map(|u| h.neighbors(u).iter().map(move |&w| (u.min(w), u.max(w))))
            .collect()
    }

    /// Canonical form with the cut shrunk to the neighbourhood of the interior.
    pub fn tightened(&self, h: &Graph) -> Separation {
        Separation {
            cut: h.neighborhood(&self.interior),
            interior: self.interior.clone(),
        }
    }

    /// Parses `X=[..] S=[..]`.
    pub fn parse(line: &str) -> Result<Separation> {
        let perr = |msg: &str| Error::Parse { line: 1, msg: msg.into() };
        let field = |key: &str| -> Result<Vec<usize>> {
            let start = line.find(key).ok_or_else(|| perr("missing field"))? + key.len();
            let rest = &line[start..];
            let end = rest.find(']').ok_or_else(|| perr("unterminated list"))?;
            rest[..end]
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| perr("malformed vertex")))
                .collect()
        };
        Ok(Separation::new(field("X=[")?, field("S=[")?))
    }
}

impl fmt::Display for Separation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X={} S={}", self.cut, self.interior)
    }
}

/// Cut sets of size at most two, ordered by size then lexicographically.
fn small_cuts(n: usize) -> impl Iterator<Item = VertexSet> {
    std::iter::once(VertexSet::empty())
        .chain((0..n).map(|v| VertexSet::new(vec![v])))
        .chain((0..n).flat_map(move |a| (a + 1..n).map(move |b| VertexSet::new(vec![a, b]))))
}

/// All single-component canonical separations, flap or not.
fn single_component_separations(h: &Graph) -> Vec<Separation> {
    let n = h.n();
    let mut out = Vec::new();
    for cut in small_cuts(n) {
        let comps = h.components_avoiding(&cut);
        if comps.len() < 2 {
            continue;
        }
        for comp in comps {
            out.push(Separation {
                cut: cut.clone(),
                interior: comp,
            });
        }
    }
    out
}

/// True iff `h` has any (≤2)-separation.
pub fn has_small_separation(h: &Graph) -> bool {
    small_cuts(h.n()).any(|cut| h.components_avoiding(&cut).len() >= 2)
}

/// Every canonical separation `(X, S)` with `S` a single component of
/// `H − X` and `A⁺` planar, in enumeration order (X by size then
/// lexicographically, then S by smallest member).
pub fn enumerate_candidate_flaps(h: &Graph) -> Vec<Separation> {
    if h.n() < 2 {
        return Vec::new();
    }
    single_component_separations(h)
        .into_iter()
        .filter(|sep| a_plus_planar(h, sep))
        .collect()
}

fn a_plus_planar(h: &Graph, sep: &Separation) -> bool {
    planar_unchecked(&sep.a_plus(h).expect("candidate in range"))
}

/// True iff `A⁺` is planar for a structurally valid separation.
pub fn is_flap(h: &Graph, sep: &Separation) -> Result<bool> {
    sep.validate(h)?;
    Ok(a_plus_planar(h, sep))
}

/// Disjoint interiors and no edge of `H` between them.
pub fn are_independent(h: &Graph, a: &Separation, b: &Separation) -> bool {
    a.interior.is_disjoint(&b.interior)
        && !a
            .interior
            .iter()
            .any(|u| h.neighbors(u).iter().any(|&w| b.interior.contains(w)))
}

/// Whether `H` is strongly non-planar: non-planar, and `A⁺` is non-planar on
/// both sides of every (≤2)-separation.
pub fn is_strongly_non_planar(h: &Graph) -> bool {
    if planar_unchecked(h) {
        return false;
    }
    single_component_separations(h).iter().all(|sep| {
        !a_plus_planar(h, sep) && !a_plus_planar(h, &sep.complement(h))
    })
}

fn check_cap(h: &Graph, cap: usize) -> Result<()> {
    if h.n() > cap {
        return Err(Error::SizeCap {
            what: "flap-number",
            limit: cap,
            actual: h.n(),
        });
    }
    if h.n() == 0 {
        return Err(Error::pre("flap-number of the empty graph is undefined"));
    }
    Ok(())
}

/// One flap per distinct interior, keeping the first in enumeration order
/// and only those whose interior contains no other candidate's interior.
/// Shrinking an interior preserves independence, so the maximum family size
/// over this reduced list equals the maximum over all flaps.
fn minimal_flaps(h: &Graph) -> Vec<Separation> {
    let mut seen = BTreeSet::new();
    let mut uniq: Vec<Separation> = Vec::new();
    for sep in enumerate_candidate_flaps(h) {
        if seen.insert(sep.interior.clone()) {
            uniq.push(sep);
        }
    }
    uniq.iter()
        .filter(|a| {
            !uniq
                .iter()
                .any(|b| b.interior != a.interior && b.interior.is_subset(&a.interior))
        })
        .cloned()
        .collect()
}

/// Flap-number with the default 16-vertex cap.
pub fn flap_number(h: &Graph) -> Result<usize> {
    flap_number_capped(h, DEFAULT_FLAP_CAP)
}

pub fn flap_number_capped(h: &Graph, cap: usize) -> Result<usize> {
    check_cap(h, cap)?;
    if !has_small_separation(h) {
        return Ok(usize::from(planar_unchecked(h)));
    }
    let flaps = minimal_flaps(h);
    Ok(max_independent(h, &flaps, &[]).len())
}

/// A maximum family of pairwise independent flaps (empty when none exist).
pub fn max_independent_flaps(h: &Graph) -> Result<Vec<Separation>> {
    check_cap(h, DEFAULT_FLAP_CAP)?;
    let flaps = minimal_flaps(h);
    Ok(max_independent(h, &flaps, &[])
        .into_iter()
        .map(|i| flaps[i].clone())
        .collect())
}

/// Indices of a maximum pairwise-independent subfamily of `seps` among
/// those independent of every member of `fixed`.
fn max_independent(h: &Graph, seps: &[Separation], fixed: &[Separation]) -> Vec<usize> {
    let pool: Vec<usize> = (0..seps.len())
        .filter(|&i| fixed.iter().all(|f| are_independent(h, f, &seps[i])))
        .collect();
    let k = pool.len();
    let words = k.div_ceil(64).max(1);
    let mut adj = vec![vec![0u64; words]; k];
    for i in 0..k {
        for j in i + 1..k {
            if are_independent(h, &seps[pool[i]], &seps[pool[j]]) {
                adj[i][j / 64] |= 1 << (j % 64);
                adj[j][i / 64] |= 1 << (i % 64);
            }
        }
    }
    max_clique(&adj, k).into_iter().map(|i| pool[i]).collect()
}

/// Branch and bound maximum clique over bitset rows. Vertices are tried in
/// index order, include-first; the first maximum found is kept, so ties
/// resolve to the lexicographically earliest family.
pub(crate) fn max_clique(adj: &[Vec<u64>], k: usize) -> Vec<usize> {
    let words = k.div_ceil(64).max(1);
    let mut all = vec![0u64; words];
    for i in 0..k {
        all[i / 64] |= 1 << (i % 64);
    }
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand(adj, &all, &mut current, &mut best);
    best
}

fn bits(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(w, &word)| {
        let mut x = word;
        std::iter::from_fn(move || {
            if x == 0 {
                None
            } else {
                let b = x.trailing_zeros() as usize;
                x &= x - 1;
                Some(w * 64 + b)
            }
        })
    })
}

/// Greedy colouring of the candidate set: the number of colour classes
/// bounds the clique size inside it.
fn colour_bound(adj: &[Vec<u64>], cands: &[u64]) -> usize {
    let mut left = cands.to_vec();
    let mut colours = 0;
    while left.iter().any(|&w| w != 0) {
        colours += 1;
        let mut avail = left.clone();
        loop {
            let Some(v) = bits(&avail).next() else { break };
            left[v / 64] &= !(1 << (v % 64));
            avail[v / 64] &= !(1 << (v % 64));
            for (a, row) in avail.iter_mut().zip(&adj[v]) {
                *a &= !row;
            }
        }
    }
    colours
}

fn expand(adj: &[Vec<u64>], cands: &[u64], current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if cands.iter().all(|&w| w == 0) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    if current.len() + colour_bound(adj, cands) <= best.len() {
        return;
    }
    let mut rest = cands.to_vec();
    let order: Vec<usize> = bits(cands).collect();
    for v in order {
        let remaining = rest.iter().map(|w| w.count_ones() as usize).sum::<usize>();
        if current.len() + remaining <= best.len() {
            return;
        }
        let next: Vec<u64> = rest.iter().zip(&adj[v]).map(|(a, b)| a & b).collect();
        current.push(v);
        expand(adj, &next, current, best);
        current.pop();
        rest[v / 64] &= !(1 << (v % 64));
    }
}

/// Size of a maximum independent set of the forest on degree-≤2 vertices of
/// a tree.
pub fn tree_beta(t: &Graph) -> Result<usize> {
    Ok(tree_beta_set(t)?.len())
}

/// A maximum stable set among the degree-≤2 vertices of a tree, by the
/// usual take/skip dynamic programme on each component of that forest.
pub fn tree_beta_set(t: &Graph) -> Result<VertexSet> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.n();
    let low: Vec<bool> = (0..n).map(|v| t.degree(v) <= 2).collect();
    let mut visited = vec![false; n];
    let mut chosen = Vec::new();
    for root in 0..n {
        if !low[root] || visited[root] {
            continue;
        }
        // iterative DFS order within the forest component
        let mut order = Vec::new();
        let mut parent = vec![usize::MAX; n];
        let mut stack = vec![root];
        visited[root] = true;
        while let Some(u) = stack.pop() {
            order.push(u);
            for &w in t.neighbors(u) {
                if low[w] && !visited[w] {
                    visited[w] = true;
                    parent[w] = u;
                    stack.push(w);
                }
            }
        }
        let mut take = vec![0usize; n];
        let mut skip = vec![0usize; n];
        for &u in order.iter().rev() {
            take[u] += 1;
            if parent[u] != usize::MAX {
                let p = parent[u];
                take[p] += skip[u];
                skip[p] += take[u].max(skip[u]);
            }
        }
        // reconstruct top-down
        let mut pick = vec![false; n];
        for &u in &order {
            let parent_taken = parent[u] != usize::MAX && pick[parent[u]];
            pick[u] = !parent_taken && take[u] >= skip[u];
            if pick[u] {
                chosen.push(u);
            }
        }
    }
    Ok(VertexSet::new(chosen))
}

/// Whether the canonical A-side of `a` is a subgraph of that of `b`.
fn a_side_within(h: &Graph, a: &Separation, b: &Separation) -> bool {
    let a = a.tightened(h);
    let b = b.tightened(h);
    let vb = b.cut.union(&b.interior);
    if !a.cut.union(&a.interior).is_subset(&vb) {
        return false;
    }
    let eb = b.a_minus_edges(h);
    a.a_minus_edges(h)
        .iter()
        .all(|e| eb.contains(e) || (b.cut.contains(e.0) && b.cut.contains(e.1)))
}

fn strictly_within(h: &Graph, a: &Separation, b: &Separation) -> bool {
    a_side_within(h, a, b) && !a_side_within(h, b, a)
}

/// Flaps that begin some maximum independent family.
fn extendable_flaps(h: &Graph, f: usize) -> Vec<Separation> {
    let minimal = minimal_flaps(h);
    let mut seen = BTreeSet::new();
    enumerate_candidate_flaps(h)
        .into_iter()
        .map(|s| s.tightened(h))
        .filter(|s| seen.insert(s.interior.clone()))
        .filter(|c| 1 + max_independent(h, &minimal, std::slice::from_ref(c)).len() == f)
        .collect()
}

/// A maximum independent flap family whose first member has an A-side
/// maximal under subgraph inclusion among flaps that start a maximum family.
/// `None` when `H` has no flap.
pub fn maximal_flap_family(h: &Graph) -> Result<Option<Vec<Separation>>> {
    let f = flap_number(h)?;
    if f == 0 {
        return Ok(None);
    }
    let starts = extendable_flaps(h, f);
    let Some(first) = starts
        .iter()
        .find(|c| !starts.iter().any(|d| strictly_within(h, c, d)))
        .cloned()
    else {
        return Ok(None);
    };
    let minimal = minimal_flaps(h);
    let mut family = vec![first.clone()];
    family.extend(
        max_independent(h, &minimal, std::slice::from_ref(&first))
            .into_iter()
            .map(|i| minimal[i].clone()),
    );
    Ok(Some(family))
}

/// `B₁⁺ = add_clique(H − S₁, X₁)` for a maximum independent flap family
/// whose first member is maximal.
pub fn flap_reduction(h: &Graph, family: &[Separation]) -> Result<Graph> {
    let first = family
        .first()
        .ok_or_else(|| Error::pre("flap family is empty"))?;
    for sep in family {
        if !is_flap(h, sep)? {
            return Err(Error::pre(format!("{sep} is not a flap")));
        }
    }
    for (i, a) in family.iter().enumerate() {
        for b in &family[i + 1..] {
            if !are_independent(h, a, b) {
                return Err(Error::pre(format!("flaps {a} and {b} are not independent")));
            }
        }
    }
    let f = flap_number(h)?;
    if family.len() != f {
        return Err(Error::pre(format!(
            "family has {} flaps but the flap-number is {f}",
            family.len()
        )));
    }
    if let Some(bigger) = extendable_flaps(h, f)
        .iter()
        .find(|d| strictly_within(h, first, d))
    {
        return Err(Error::pre(format!(
            "first flap {first} is not maximal: contained in {bigger}"
        )));
    }
    let rest = h.delete_vertices(&first.interior)?;
    let shifted: VertexSet = first
        .cut
        .iter()
        .map(|x| x - first.interior.iter().filter(|&s| s < x).count())
        .collect();
    rest.add_clique(&shifted)
}
