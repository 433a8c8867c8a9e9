//! Independent oracles and generators shared by the integration tests. Every
//! oracle here works from the raw definitions on bitmasks and shares no code
//! with the library beyond the `Graph` container.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use rand::Rng;
use surfdens::Graph;

pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Uniform attachment tree: vertex `v > 0` hangs off a random earlier vertex.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Adjacency as bitmasks, one word per vertex.
pub fn adjacency(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect()
}

fn pair_bit(u: usize, v: usize) -> u64 {
    let (a, b) = (u.min(v), u.max(v));
    1 << (b * (b - 1) / 2 + a)
}

// ---------- isomorphism classes ----------

fn canonical_mask(n: usize, adj: &[u32]) -> u64 {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));
    // classes of equal degree, permuted independently
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match classes.last_mut() {
            Some(c) if adj[c[0]].count_ones() == adj[v].count_ones() => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut label = vec![0usize; n];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        classes: &mut [Vec<usize>],
        ci: usize,
        start: usize,
        pos: usize,
        label: &mut Vec<usize>,
        adj: &[u32],
        n: usize,
        best: &mut u64,
    ) {
        if ci == classes.len() {
            let mut m = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if adj[u] >> v & 1 == 1 {
                        m |= pair_bit(label[u], label[v]);
                    }
                }
            }
            *best = (*best).min(m);
            return;
        }
        let len = classes[ci].len();
        if start == len {
            rec(classes, ci + 1, 0, pos, label, adj, n, best);
            return;
        }
        for i in start..len {
            classes[ci].swap(start, i);
            label[classes[ci][start]] = pos;
            rec(classes, ci, start + 1, pos + 1, label, adj, n, best);
            classes[ci].swap(start, i);
        }
    }
    rec(&mut classes, 0, 0, 0, &mut label, adj, n, &mut best);
    best
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n {
        for u in 0..v {
            if mask & pair_bit(u, v) != 0 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices, grown vertex by vertex from the classes on `n − 1`.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let mut layer: Vec<u64> = vec![0];
    for k in 1..n {
        let mut next = HashSet::new();
        for &mask in &layer {
            for nb in 0u32..1 << k {
                let mut adj = vec![0u32; k + 1];
                for v in 0..k {
                    for u in 0..v {
                        if mask & pair_bit(u, v) != 0 {
                            adj[u] |= 1 << v;
                            adj[v] |= 1 << u;
                        }
                    }
                    if nb >> v & 1 == 1 {
                        adj[v] |= 1 << k;
                        adj[k] |= 1 << v;
                    }
                }
                next.insert(canonical_mask(k + 1, &adj));
            }
        }
        let mut v: Vec<u64> = next.into_iter().collect();
        v.sort_unstable();
        layer = v;
    }
    if n == 0 {
        return Vec::new();
    }
    layer.into_iter().map(|m| graph_from_mask(n, m)).collect()
}

// ---------- planarity via Kuratowski minors ----------

fn connected_within(adj: &[u32], set: u32) -> bool {
    let start = set & set.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & set & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == set
}

/// Branch sets with first-occurrence labelling; `accept` sees the `k` sets.
fn any_minor(adj: &[u32], k: usize, accept: &dyn Fn(&[u32], &[u32]) -> bool) -> bool {
    let n = adj.len();
    let mut sets = vec![0u32; k];
    fn rec(
        v: usize,
        used: usize,
        n: usize,
        k: usize,
        adj: &[u32],
        sets: &mut Vec<u32>,
        accept: &dyn Fn(&[u32], &[u32]) -> bool,
    ) -> bool {
        if k - used > n - v {
            return false;
        }
        if v == n {
            return sets.iter().all(|&s| connected_within(adj, s)) && accept(adj, sets);
        }
        if rec(v + 1, used, n, k, adj, sets, accept) {
            return true;
        }
        for b in 0..(used + 1).min(k) {
            sets[b] |= 1 << v;
            let found = rec(v + 1, used.max(b + 1), n, k, adj, sets, accept);
            sets[b] &= !(1 << v);
            if found {
                return true;
            }
        }
        false
    }
    rec(0, 0, n, k, adj, &mut sets, accept)
}

fn touches(adj: &[u32], a: u32, b: u32) -> bool {
    let mut bits = a;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if adj[v] & b != 0 {
            return true;
        }
    }
    false
}

fn has_k5_minor(adj: &[u32]) -> bool {
    any_minor(adj, 5, &|adj, s| {
        (0..5).all(|i| (i + 1..5).all(|j| touches(adj, s[i], s[j])))
    })
}

fn has_k33_minor(adj: &[u32]) -> bool {
    any_minor(adj, 6, &|adj, s| {
        (0u32..64).filter(|m| m.count_ones() == 3 && m & 1 == 1).any(|side| {
            (0..6).all(|i| {
                (0..6).all(|j| side >> i & 1 == side >> j & 1 || touches(adj, s[i], s[j]))
            })
        })
    })
}

/// Planarity by exhaustive K₅ / K₃,₃ minor search; meant for at most nine vertices.
pub fn planar_by_minors(adj: &[u32]) -> bool {
    let n = adj.len();
    let m: u32 = adj.iter().map(|a| a.count_ones()).sum::<u32>() / 2;
    if n <= 4 || m <= 8 {
        return true;
    }
    if m as usize > 3 * n - 6 {
        return false;
    }
    !has_k5_minor(adj) && !has_k33_minor(adj)
}

// ---------- flap-number from the literal definition ----------

/// Planarity cache keyed by (vertex count, edge mask) of a relabelled graph.
#[derive(Default)]
pub struct PlanarMemo(HashMap<(usize, u64), bool>);

impl PlanarMemo {
    fn planar(&mut self, adj: &[u32]) -> bool {
        let mut key = 0;
        for (v, &a) in adj.iter().enumerate() {
            for u in 0..v {
                if a >> u & 1 == 1 {
                    key |= pair_bit(u, v);
                }
            }
        }
        *self
            .0
            .entry((adj.len(), key))
            .or_insert_with(|| planar_by_minors(adj))
    }
}

fn components(adj: &[u32], live: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut rest = live;
    while rest != 0 {
        let start = rest & rest.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & live & !seen;
            seen |= new;
            frontier |= new;
        }
        out.push(seen);
        rest &= !seen;
    }
    out
}

fn induced(adj: &[u32], set: u32) -> Vec<u32> {
    let verts: Vec<usize> = (0..adj.len()).filter(|&v| set >> v & 1 == 1).collect();
    verts
        .iter()
        .map(|&v| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &w)| adj[v] >> w & 1 == 1)
                .fold(0, |m, (i, _)| m | 1 << i)
        })
        .collect()
}

/// A flap as its interior and the edge set of `A⁻`.
#[derive(Clone, Copy)]
struct RawFlap {
    interior: u32,
    edges: u64,
}

/// Every (≤2)-separation `(A, B)` of `H`: all cuts `X`, all nonempty proper
/// unions of components of `H − X` for `V(A) \ X`, and both placements of an
/// edge inside `X`. Returns whether any separation exists and the flaps
/// (those with `A⁺` planar) with their `A⁻` edges.
fn literal_flaps(adj: &[u32], memo: &mut PlanarMemo) -> (bool, Vec<RawFlap>) {
    let n = adj.len();
    let all: u32 = (1 << n) - 1;
    let mut cuts: Vec<u32> = vec![0];
    cuts.extend((0..n).map(|v| 1 << v));
    for a in 0..n {
        for b in a + 1..n {
            cuts.push(1 << a | 1 << b);
        }
    }
    let mut any = false;
    let mut flaps = Vec::new();
    for x in cuts {
        let comps = components(adj, all & !x);
        if comps.len() < 2 {
            continue;
        }
        let xs: Vec<usize> = (0..n).filter(|&v| x >> v & 1 == 1).collect();
        let x_edge = xs.len() == 2 && adj[xs[0]] >> xs[1] & 1 == 1;
        for pick in 1..(1u32 << comps.len()) - 1 {
            any = true;
            let s = comps
                .iter()
                .enumerate()
                .filter(|&(i, _)| pick >> i & 1 == 1)
                .fold(0, |m, (_, &c)| m | c);
            for a_has_xy in [false, true] {
                if a_has_xy && !x_edge {
                    continue;
                }
                // A: vertices X ∪ S, edges touching S, plus xy if assigned
                let mut a_edges = 0u64;
                for (v, &nb) in adj.iter().enumerate() {
                    if s >> v & 1 == 1 {
                        for w in 0..n {
                            if nb >> w & 1 == 1 {
                                a_edges |= pair_bit(v, w);
                            }
                        }
                    }
                }
                let xy = if xs.len() == 2 { pair_bit(xs[0], xs[1]) } else { 0 };
                if a_has_xy {
                    a_edges |= xy;
                }
                let minus = a_edges & !xy;
                let plus = a_edges | xy;
                let side = x | s;
                let mut plus_adj = vec![0u32; n];
                for v in 0..n {
                    for w in 0..v {
                        if plus & pair_bit(v, w) != 0 {
                            plus_adj[v] |= 1 << w;
                            plus_adj[w] |= 1 << v;
                        }
                    }
                }
                if memo.planar(&induced(&plus_adj, side)) {
                    flaps.push(RawFlap { interior: s, edges: minus });
                }
            }
        }
    }
    (any, flaps)
}

/// Drops every flap whose interior and `A⁻` edges both contain another
/// flap's: swapping in the smaller one keeps any family pairwise independent.
fn undominated(flaps: &[RawFlap]) -> Vec<RawFlap> {
    let mut uniq: Vec<RawFlap> = Vec::new();
    for f in flaps {
        if !uniq.iter().any(|u| u.interior == f.interior && u.edges == f.edges) {
            uniq.push(*f);
        }
    }
    let below = |a: &RawFlap, b: &RawFlap| a.interior & !b.interior == 0 && a.edges & !b.edges == 0;
    uniq.iter()
        .filter(|b| !uniq.iter().any(|a| below(a, b) && (a.interior, a.edges) != (b.interior, b.edges)))
        .copied()
        .collect()
}

fn max_pairwise_independent(flaps: &[RawFlap]) -> usize {
    let flaps = &undominated(flaps)[..];
    let mut order: Vec<usize> = (0..flaps.len()).collect();
    order.sort_by_key(|&i| flaps[i].interior.count_ones());
    let compatible = |a: &RawFlap, b: &RawFlap| a.interior & b.interior == 0 && a.edges & b.edges == 0;
    fn rec(flaps: &[RawFlap], cands: &[usize], size: usize, best: &mut usize, ok: &dyn Fn(&RawFlap, &RawFlap) -> bool) {
        *best = (*best).max(size);
        // each further member claims at least one fresh interior vertex
        let room = cands.iter().fold(0u32, |m, &i| m | flaps[i].interior).count_ones() as usize;
        if size + room.min(cands.len()) <= *best {
            return;
        }
        for (k, &i) in cands.iter().enumerate() {
            let next: Vec<usize> = cands[k + 1..]
                .iter()
                .copied()
                .filter(|&j| ok(&flaps[i], &flaps[j]))
                .collect();
            rec(flaps, &next, size + 1, best, ok);
        }
    }
    let mut best = 0;
    rec(flaps, &order, 0, &mut best, &compatible);
    best
}

/// Flap-number straight from the definition, including the special clause
/// for planar graphs without any (≤2)-separation.
pub fn literal_flap_number(g: &Graph, memo: &mut PlanarMemo) -> usize {
    let adj = adjacency(g);
    let (any, flaps) = literal_flaps(&adj, memo);
    if !any {
        return usize::from(memo.planar(&adj));
    }
    max_pairwise_independent(&flaps)
}

// ---------- counting ----------

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(p, k + 1, out);
            p.swap(k, i);
        }
    }
    rec(&mut p, 0, &mut out);
    out
}

/// Edge-preserving bijections of `H` onto itself.
pub fn brute_automorphisms(h: &Graph) -> u64 {
    let edges: Vec<_> = h.edges().collect();
    permutations(h.n())
        .iter()
        .filter(|p| edges.iter().all(|&(u, v)| h.has_edge(p[u], p[v])))
        .count() as u64
}

/// Injective edge-preserving maps, by trying every injection.
pub fn brute_injective_homs(h: &Graph, g: &Graph) -> u64 {
    let edges: Vec<_> = h.edges().collect();
    let mut count = 0;
    let mut image = vec![usize::MAX; h.n()];
    fn rec(i: usize, image: &mut Vec<usize>, used: u32, g: &Graph, edges: &[(usize, usize)], count: &mut u64) {
        if i == image.len() {
            if edges.iter().all(|&(u, v)| g.has_edge(image[u], image[v])) {
                *count += 1;
            }
            return;
        }
        for w in 0..g.n() {
            if used >> w & 1 == 0 {
                image[i] = w;
                rec(i + 1, image, used | 1 << w, g, edges, count);
            }
        }
    }
    rec(0, &mut image, 0, g, &edges, &mut count);
    count
}

/// Subgraphs of `G` isomorphic to `H`: every vertex subset of the right
/// size, every edge subset of the right size inside it, tested for
/// isomorphism by permutation.
pub fn brute_copies(h: &Graph, g: &Graph) -> u64 {
    let (hn, hm) = (h.n(), h.m());
    let h_edges: Vec<_> = h.edges().collect();
    let perms = permutations(hn);
    let mut count = 0;
    for vs in 0u32..1 << g.n() {
        if vs.count_ones() as usize != hn {
            continue;
        }
        let verts: Vec<usize> = (0..g.n()).filter(|&v| vs >> v & 1 == 1).collect();
        let inside: Vec<(usize, usize)> = (0..hn)
            .flat_map(|i| (i + 1..hn).map(move |j| (i, j)))
            .filter(|&(i, j)| g.has_edge(verts[i], verts[j]))
            .collect();
        if inside.len() < hm {
            continue;
        }
        for es in 0u64..1 << inside.len() {
            if es.count_ones() as usize != hm {
                continue;
            }
            let chosen: HashSet<(usize, usize)> = (0..inside.len())
                .filter(|&k| es >> k & 1 == 1)
                .map(|k| inside[k])
                .collect();
            let iso = perms.iter().any(|p| {
                h_edges.iter().all(|&(u, v)| {
                    let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                    chosen.contains(&(a, b))
                })
            });
            if iso {
                count += 1;
            }
        }
    }
    count
}
