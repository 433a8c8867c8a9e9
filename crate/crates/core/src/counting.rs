//! Exact counting of subgraph copies, homomorphisms and cliques, plus the
//! homomorphism inequalities built on those counts.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_WORK_CAP: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy)]
pub struct CountOptions {
    /// Maximum number of backtracking nodes before the count aborts.
    pub work_cap: u64,
    /// Worker threads for the top-level branch split; 1 runs inline.
    pub threads: usize,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            work_cap: DEFAULT_WORK_CAP,
            threads: 1,
        }
    }
}

/// Search plan: pattern vertices in placement order, with the earlier
/// neighbours of each position.
struct Plan {
    order: Vec<usize>,
    back: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

impl Plan {
    fn new(h: &Graph) -> Plan {
        let k = h.n();
        let mut placed = vec![false; k];
        let mut pos = vec![usize::MAX; k];
        let mut order = Vec::with_capacity(k);
        let mut links = vec![0usize; k];
        for _ in 0..k {
            let next = (0..k)
                .filter(|&v| !placed[v])
                .max_by(|&a, &b| {
                    (links[a], h.degree(a), std::cmp::Reverse(a))
                        .cmp(&(links[b], h.degree(b), std::cmp::Reverse(b)))
                })
                .unwrap();
            placed[next] = true;
            pos[next] = order.len();
            order.push(next);
            for &w in h.neighbors(next) {
                links[w] += 1;
            }
        }
        let back = order
            .iter()
            .map(|&v| {
                let mut b: Vec<usize> = h
                    .neighbors(v)
                    .iter()
                    .map(|&w| pos[w])
                    .filter(|&p| p < pos[v])
                    .collect();
                b.sort_unstable();
                b
            })
            .collect();
        let degree = order.iter().map(|&v| h.degree(v)).collect();
        Plan { order, back, degree }
    }
}

struct Search<'a> {
    plan: &'a Plan,
    g: &'a Graph,
    injective: bool,
    nodes: &'a AtomicU64,
    cap: u64,
}

impl Search<'_> {
    fn candidates(&self, i: usize, image: &[usize], used: &[bool]) -> Vec<usize> {
        let back = &self.plan.back[i];
        let pool: Vec<usize> = match back.iter().min_by_key(|&&p| self.g.degree(image[p])) {
            Some(&p) => self.g.neighbors(image[p]).to_vec(),
            None => (0..self.g.n()).collect(),
        };
        pool.into_iter()
            .filter(|&c| {
                (!self.injective || (!used[c] && self.g.degree(c) >= self.plan.degree[i]))
                    && back.iter().all(|&p| self.g.has_edge(image[p], c))
            })
            .collect()
    }

    /// Counts completions from position `i`; `Err` carries the partial count.
    fn extend(&self, i: usize, image: &mut Vec<usize>, used: &mut Vec<bool>) -> std::result::Result<u128, u128> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.cap {
            return Err(0);
        }
        let k = self.plan.order.len();
        let cands = self.candidates(i, image, used);
        if i + 1 == k {
            return Ok(cands.len() as u128);
        }
        let mut total = 0u128;
        for c in cands {
            image.push(c);
            used[c] = true;
            let r = self.extend(i + 1, image, used);
            used[c] = false;
            image.pop();
            match r {
                Ok(x) => total += x,
                Err(x) => return Err(total + x),
            }
        }
        Ok(total)
    }
}

fn count_maps(h: &Graph, g: &Graph, injective: bool, opts: &CountOptions) -> Result<BigUint> {
    if h.n() == 0 {
        return Ok(BigUint::from(1u32));
    }
    if injective && h.n() > g.n() {
        return Ok(BigUint::zero());
    }
    let plan = Plan::new(h);
    let nodes = AtomicU64::new(0);
    let search = Search {
        plan: &plan,
        g,
        injective,
        nodes: &nodes,
        cap: opts.work_cap,
    };
    if h.n() == 1 {
        let c = search.candidates(0, &[], &vec![false; g.n()]).len();
        return Ok(BigUint::from(c));
    }
    let roots = search.candidates(0, &[], &vec![false; g.n()]);
    let run_root = |&r: &usize| {
        let mut image = vec![r];
        let mut used = vec![false; g.n()];
        used[r] = true;
        search.extend(1, &mut image, &mut used)
    };
    let results: Vec<std::result::Result<u128, u128>> = if opts.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::pre(format!("thread pool: {e}")))?;
        pool.install(|| roots.par_iter().map(run_root).collect())
    } else {
        roots.iter().map(run_root).collect()
    };
    let mut total = 0u128;
    let mut aborted = false;
    for r in results {
        match r {
            Ok(x) => total += x,
            Err(x) => {
                total += x;
                aborted = true;
            }
        }
    }
    if aborted {
        return Err(Error::WorkCap {
            limit: opts.work_cap,
            partial: BigUint::from(total),
        });
    }
    Ok(BigUint::from(total))
}

/// Number of injective adjacency-preserving maps `V(H) -> V(G)`.
pub fn count_injective_hom(h: &Graph, g: &Graph) -> Result<BigUint> {
    count_injective_hom_with(h, g, &CountOptions::default())
}

pub fn count_injective_hom_with(h: &Graph, g: &Graph, opts: &CountOptions) -> Result<BigUint> {
    count_maps(h, g, true, opts)
}

/// Number of adjacency-preserving maps `V(H) -> V(G)`; computed per
/// component of `H` and multiplied.
pub fn count_hom(h: &Graph, g: &Graph) -> Result<BigUint> {
    count_hom_with(h, g, &CountOptions::default())
}

pub fn count_hom_with(h: &Graph, g: &Graph, opts: &CountOptions) -> Result<BigUint> {
    let mut total = BigUint::from(1u32);
    for comp in h.connected_components() {
        let part = h.induced_subgraph(&comp)?;
        total *= count_maps(&part, g, false, opts)?;
        if total.is_zero() {
            break;
        }
    }
    Ok(total)
}

/// Number of bijections `V(H) -> V(G)` preserving edges and non-edges.
pub fn count_isomorphisms(h: &Graph, g: &Graph) -> BigUint {
    if h.n() != g.n() || h.m() != g.m() {
        return BigUint::zero();
    }
    let opts = CountOptions {
        work_cap: u64::MAX,
        threads: 1,
    };
    // Equal edge counts make an injective edge-preserving bijection an isomorphism.
    count_maps(h, g, true, &opts).expect("uncapped search cannot abort")
}

/// Number of (not necessarily induced) subgraphs of `G` isomorphic to `H`.
pub fn count_copies(h: &Graph, g: &Graph) -> Result<BigUint> {
    count_copies_with(h, g, &CountOptions::default())
}

pub fn count_copies_with(h: &Graph, g: &Graph, opts: &CountOptions) -> Result<BigUint> {
    let inj = count_injective_hom_with(h, g, opts)?;
    if inj.is_zero() {
        return Ok(inj);
    }
    let aut = count_isomorphisms(h, h);
    Ok(inj / aut)
}

/// Number of `s`-vertex cliques of `G`.
pub fn count_cliques(g: &Graph, s: usize) -> BigUint {
    match s {
        0 => return BigUint::from(1u32),
        1 => return BigUint::from(g.n()),
        2 => return BigUint::from(g.m()),
        _ => {}
    }
    let n = g.n();
    // Orient each edge from lower to higher rank (degree, index).
    let rank = |v: usize| (g.degree(v), v);
    let fwd: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| rank(w) > rank(v))
                .collect()
        })
        .collect();

    fn grow(g: &Graph, cands: &[usize], need: usize) -> u64 {
        if need == 0 {
            return 1;
        }
        if need == 1 {
            return cands.len() as u64;
        }
        let mut total = 0;
        for (i, &v) in cands.iter().enumerate() {
            let next: Vec<usize> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            if next.len() + 1 >= need {
                total += grow(g, &next, need - 1);
            }
        }
        total
    }

    let total: u64 = (0..n)
        .map(|v| {
            let mut cands = fwd[v].clone();
            cands.sort_unstable_by_key(|&w| rank(w));
            grow(g, &cands, s - 1)
        })
        .sum();
    BigUint::from(total)
}

/// Total number of complete subgraphs, including the empty one.
pub fn total_cliques(g: &Graph) -> BigUint {
    let mut total = BigUint::zero();
    for s in 0.. {
        let c = count_cliques(g, s);
        if c.is_zero() {
            break;
        }
        total += c;
    }
    total
}

/// Big integers go to JSON as decimal strings.
fn decimal<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn decimals<S: serde::Serializer>(v: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|c| c.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityCheck {
    #[serde(serialize_with = "decimal")]
    pub lhs: BigInt,
    #[serde(serialize_with = "decimal")]
    pub rhs: BigInt,
    pub holds: bool,
}

impl InequalityCheck {
    fn new(lhs: BigInt, rhs: BigInt) -> Self {
        let holds = lhs >= rhs;
        InequalityCheck { lhs, rhs, holds }
    }
}

/// hom(K1,G)·hom(K3,G) ≥ hom(K2,G)·(2·hom(K2,G) − hom(K1,G)²).
pub fn check_goodman(g: &Graph) -> Result<InequalityCheck> {
    let h1 = BigInt::from(count_hom(&Graph::complete(1), g)?);
    let h2 = BigInt::from(count_hom(&Graph::complete(2), g)?);
    let h3 = BigInt::from(count_hom(&Graph::complete(3), g)?);
    let lhs = &h1 * &h3;
    let rhs = &h2 * (BigInt::from(2) * &h2 - &h1 * &h1);
    Ok(InequalityCheck::new(lhs, rhs))
}

/// Triangle lower bound for a graph of Euler genus `g`, in both forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusTriangleCheck {
    pub triangles: InequalityCheck,
    pub hom_form: InequalityCheck,
    pub components: usize,
}

/// `t ≥ 2m − 4n + 4 + 4c − 4g` (component-aware triangle form), alongside
/// `hom(K3) ≥ 6·hom(K2) − 24·hom(K1) + 48 − 24g`.
pub fn check_genus_triangle_bound(g: &Graph, genus: usize) -> Result<GenusTriangleCheck> {
    let n = BigInt::from(g.n());
    let m = BigInt::from(g.m());
    let c = BigInt::from(g.connected_components().len());
    let eg = BigInt::from(genus);
    let t = BigInt::from(count_cliques(g, 3));
    let rhs_t = BigInt::from(2) * &m - BigInt::from(4) * &n + 4 + BigInt::from(4) * &c - BigInt::from(4) * &eg;

    let h1 = BigInt::from(count_hom(&Graph::complete(1), g)?);
    let h2 = BigInt::from(count_hom(&Graph::complete(2), g)?);
    let h3 = BigInt::from(count_hom(&Graph::complete(3), g)?);
    let rhs_h = BigInt::from(6) * h2 - BigInt::from(24) * h1 + 48 - BigInt::from(24) * &eg;
    // The hom form is six times the connected (c = 1) triangle form.
    let connected = BigInt::from(2) * (&m - BigInt::from(2) * &n + 4 - BigInt::from(2) * &eg);
    debug_assert_eq!(rhs_h, BigInt::from(6) * connected);
    debug_assert_eq!(h3, BigInt::from(6) * &t);

    Ok(GenusTriangleCheck {
        triangles: InequalityCheck::new(t, rhs_t),
        hom_form: InequalityCheck::new(h3, rhs_h),
        components: g.connected_components().len(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ScalingReport {
    pub sizes: Vec<usize>,
    pub hosts: Vec<usize>,
    #[serde(serialize_with = "decimals")]
    pub counts: Vec<BigUint>,
    pub slope: f64,
}

/// Least-squares slope of `ln C(H, G_n)` against `ln |V(G_n)|` for the
/// hosts `G_n = host(n)`.
pub fn scaling_exponent<F>(h: &Graph, sizes: &[usize], mut host: F) -> Result<ScalingReport>
where
    F: FnMut(usize) -> Result<Graph>,
{
    scaling_exponent_with(h, sizes, &mut host, &CountOptions::default())
}

pub fn scaling_exponent_with<F>(
    h: &Graph,
    sizes: &[usize],
    host: &mut F,
    opts: &CountOptions,
) -> Result<ScalingReport>
where
    F: FnMut(usize) -> Result<Graph>,
{
    if sizes.len() < 3 {
        return Err(Error::pre("scaling needs at least three sizes"));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::pre("sizes must be strictly increasing"));
    }
    let mut counts = Vec::new();
    let mut hosts = Vec::new();
    let mut zero = Vec::new();
    for &n in sizes {
        let g = host(n)?;
        let c = count_copies_with(h, &g, opts)?;
        if c.is_zero() {
            zero.push(n);
        }
        hosts.push(g.n());
        counts.push(c);
    }
    if !zero.is_empty() {
        return Err(Error::pre(format!("zero copies at sizes {zero:?}; log undefined")));
    }
    // regress on the vertex count actually produced, which may fall short of n
    let xs: Vec<f64> = hosts.iter().map(|&n| (n as f64).ln()).collect();
    let ys: Vec<f64> = counts.iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY).ln()).collect();
    Ok(ScalingReport {
        sizes: sizes.to_vec(),
        hosts,
        counts,
        slope: ols_slope(&xs, &ys),
    })
}

fn ols_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn octahedron() -> Graph {
        let edges: Vec<_> = (0..6)
            .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
            .filter(|&(u, v)| !(v == u + 3))
            .collect();
        Graph::from_edges(6, &edges).unwrap()
    }

    #[test]
    fn copies_examples() {
        assert_eq!(count_copies(&Graph::complete(3), &Graph::complete(4)).unwrap(), big(4));
        assert_eq!(count_copies(&Graph::complete(3), &Graph::complete(6)).unwrap(), big(20));
        assert_eq!(count_copies(&Graph::path(3), &Graph::complete(3)).unwrap(), big(3));
    }

    #[test]
    fn hom_examples() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap();
        assert_eq!(count_hom(&Graph::complete(2), &g).unwrap(), big(8));
        assert_eq!(count_hom(&Graph::complete(1), &g).unwrap(), big(5));
        assert_eq!(count_hom(&Graph::complete(3), &Graph::complete(3)).unwrap(), big(6));
        // edgeless pattern: n^h
        assert_eq!(count_hom(&Graph::empty(3), &g).unwrap(), big(125));
    }

    #[test]
    fn injective_examples() {
        assert_eq!(count_injective_hom(&Graph::complete(3), &Graph::complete(3)).unwrap(), big(6));
        assert_eq!(count_injective_hom(&Graph::complete(2), &Graph::path(3)).unwrap(), big(4));
        assert_eq!(count_injective_hom(&Graph::path(3), &Graph::cycle(4)).unwrap(), big(8));
    }

    #[test]
    fn isomorphism_examples() {
        assert_eq!(count_isomorphisms(&Graph::complete(3), &Graph::complete(3)), big(6));
        assert_eq!(count_isomorphisms(&Graph::path(3), &Graph::complete(3)), big(0));
        assert_eq!(count_isomorphisms(&Graph::cycle(4), &Graph::cycle(4)), big(8));
    }

    #[test]
    fn clique_examples() {
        assert_eq!(count_cliques(&Graph::complete(6), 5), big(6));
        assert_eq!(count_cliques(&Graph::complete(6), 4), big(15));
        let oct = octahedron();
        assert_eq!(oct.m(), 12);
        assert_eq!(count_cliques(&oct, 3), big(8));
        assert_eq!(total_cliques(&Graph::complete(4)), big(16));
        assert_eq!(total_cliques(&Graph::complete(1)), big(2));
        assert_eq!(total_cliques(&oct), big(27));
    }

    #[test]
    fn goodman_examples() {
        let k3 = check_goodman(&Graph::complete(3)).unwrap();
        assert_eq!((k3.lhs, k3.rhs, k3.holds), (BigInt::from(18), BigInt::from(18), true));
        let e = check_goodman(&Graph::empty(4)).unwrap();
        assert_eq!((e.lhs, e.rhs, e.holds), (BigInt::from(0), BigInt::from(0), true));
        let k4 = check_goodman(&Graph::complete(4)).unwrap();
        assert_eq!((k4.lhs, k4.rhs, k4.holds), (BigInt::from(96), BigInt::from(96), true));
    }

    #[test]
    fn genus_triangle_examples() {
        let k4 = check_genus_triangle_bound(&Graph::complete(4), 0).unwrap();
        assert_eq!(k4.triangles.lhs, BigInt::from(4));
        assert_eq!(k4.triangles.rhs, BigInt::from(4));
        assert!(k4.triangles.holds);
        assert_eq!(k4.hom_form.rhs, BigInt::from(24));
        let oct = check_genus_triangle_bound(&octahedron(), 0).unwrap();
        assert_eq!((oct.triangles.lhs.clone(), oct.triangles.rhs.clone()), (BigInt::from(8), BigInt::from(8)));
        let forest = check_genus_triangle_bound(&Graph::path(6), 0).unwrap();
        assert!(forest.triangles.holds && forest.triangles.rhs < BigInt::from(0));
    }

    #[test]
    fn work_cap_reports_partial() {
        let opts = CountOptions { work_cap: 10, threads: 1 };
        let err = count_copies_with(&Graph::path(4), &Graph::complete(8), &opts).unwrap_err();
        assert!(matches!(err, Error::WorkCap { limit: 10, .. }));
    }

    #[test]
    fn threads_do_not_change_counts() {
        let g = Graph::complete(7);
        let one = count_injective_hom(&Graph::cycle(4), &g).unwrap();
        let four = count_injective_hom_with(&Graph::cycle(4), &g, &CountOptions { threads: 4, ..Default::default() }).unwrap();
        assert_eq!(one, four);
        assert_eq!(one, big(7 * 6 * 5 * 4));
    }

    #[test]
    fn scaling_on_stars() {
        // stars K_{1,n-1}: copies of P3 = C(n-1, 2), slope -> 2
        let r = scaling_exponent(&Graph::path(3), &[100, 200, 400], |n| {
            Ok(Graph::from_edges_lossy(n, (1..n).map(|v| (0, v))))
        })
        .unwrap();
        assert!((r.slope - 2.0).abs() < 0.05, "{}", r.slope);
        assert!(scaling_exponent(&Graph::path(3), &[1, 2], |n| Ok(Graph::empty(n))).is_err());
        assert!(scaling_exponent(&Graph::complete(3), &[3, 4, 5], |n| Ok(Graph::empty(n))).is_err());
    }
}
