//! Embedded graphs as signed rotation systems.
//!
//! A negative edge reverses the local orientation when crossed, which lets
//! one representation cover orientable and non-orientable surfaces. Surgery
//! (contraction of reducible edges, path and triangle splitting) returns new
//! values and keeps the surface fixed.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

const K6_PROJECTIVE: &str = include_str!("../data/k6_projective.emb");
const K7_MINUS_TRIANGLE: &str = include_str!("../data/n1_k7_minus_triangle.emb");

pub const MIN_GENUS_MAX_VERTICES: usize = 8;
pub const MIN_GENUS_MAX_EDGES: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    rot: Vec<Vec<usize>>,
    /// Negative edges as `(min, max)`.
    neg: BTreeSet<(usize, usize)>,
}

/// A closed facial walk, as the directed edges it traverses in order. An
/// isolated vertex bounds one face with no darts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FacialWalk {
    pub darts: Vec<(usize, usize)>,
}

impl FacialWalk {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|d| d.0)
    }
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Trace state: dart `u → v` entered with local orientation `plus`.
type State = (usize, usize, bool);

impl EmbeddedGraph {
    /// Validates that rotations describe a simple graph and that signs refer
    /// to its edges.
    pub fn new(rot: Vec<Vec<usize>>, negative: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = rot.len();
        for (v, r) in rot.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for &u in r {
                if u >= n {
                    return Err(Error::VertexOutOfRange { vertex: u, n });
                }
                if u == v {
                    return Err(Error::pre(format!("loop at vertex {v}")));
                }
                if !seen.insert(u) {
                    return Err(Error::pre(format!("duplicate neighbour {u} in rotation of {v}")));
                }
                if !rot[u].contains(&v) {
                    return Err(Error::pre(format!("{u} is in the rotation of {v} but not vice versa")));
                }
            }
        }
        let mut neg = BTreeSet::new();
        for (u, v) in negative {
            if u >= n || v >= n || !rot[u].contains(&v) {
                return Err(Error::NotAnEdge(u, v));
            }
            neg.insert(key(u, v));
        }
        Ok(EmbeddedGraph { rot, neg })
    }

    /// All-positive rotation system on the given rotations.
    pub fn orientable(rot: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(rot, [])
    }

    /// The tetrahedron on the sphere.
    pub fn tetrahedron() -> Self {
        Self::orientable(vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]])
            .expect("valid rotation")
    }

    /// K₆ in the projective plane, as the antipodal quotient of the icosahedron.
    pub fn k6_projective() -> Self {
        Self::parse(K6_PROJECTIVE).expect("bundled embedding parses")
    }

    /// K₇ minus a triangle in the projective plane: K₄ on {0,1,2,3} joined
    /// to three pairwise non-adjacent vertices.
    pub fn k7_minus_triangle_projective() -> Self {
        Self::parse(K7_MINUS_TRIANGLE).expect("bundled embedding parses")
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn m(&self) -> usize {
        self.rot.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn is_negative(&self, u: usize, v: usize) -> bool {
        self.neg.contains(&key(u, v))
    }

    pub fn sign(&self, u: usize, v: usize) -> i8 {
        if self.is_negative(u, v) {
            -1
        } else {
            1
        }
    }

    pub fn graph(&self) -> Graph {
        Graph::from_edges_lossy(
            self.n(),
            self.rot
                .iter()
                .enumerate()
                .flat_map(|(v, r)| r.iter().filter(move |&&u| v < u).map(move |&u| (v, u))),
        )
    }

    fn pos(&self, v: usize, u: usize) -> usize {
        self.rot[v].iter().position(|&w| w == u).expect("neighbour in rotation")
    }

    fn succ(&self, v: usize, u: usize) -> usize {
        let r = &self.rot[v];
        r[(self.pos(v, u) + 1) % r.len()]
    }

    fn pred(&self, v: usize, u: usize) -> usize {
        let r = &self.rot[v];
        r[(self.pos(v, u) + r.len() - 1) % r.len()]
    }

    /// Parses the line format `n` then `v: u₁ u₂- ...`, a trailing `-`
    /// marking a negative edge on both endpoint listings.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let perr = |line: usize, msg: String| Error::Parse { line, msg };
        let (hl, header) = lines.next().ok_or_else(|| perr(1, "missing vertex count".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| perr(hl, format!("bad vertex count {header:?}")))?;
        let mut rot: Vec<Option<Vec<usize>>> = vec![None; n];
        let mut signs: Vec<(usize, usize, bool, usize)> = Vec::new();
        for (ln, line) in lines {
            let (head, rest) = line
                .split_once(':')
                .ok_or_else(|| perr(ln, "expected `v: neighbours`".into()))?;
            let v: usize = head
                .trim()
                .parse()
                .map_err(|_| perr(ln, format!("bad vertex {head:?}")))?;
            if v >= n {
                return Err(perr(ln, format!("vertex {v} out of range for {n} vertices")));
            }
            if rot[v].is_some() {
                return Err(perr(ln, format!("second rotation for vertex {v}")));
            }
            let mut r = Vec::new();
            for tok in rest.split_whitespace() {
                let (num, negative) = match tok.strip_suffix('-') {
                    Some(t) => (t, true),
                    None => (tok, false),
                };
                let u: usize = num
                    .parse()
                    .map_err(|_| perr(ln, format!("bad neighbour {tok:?}")))?;
                if u >= n || u == v {
                    return Err(perr(ln, format!("invalid neighbour {u} of {v}")));
                }
                if r.contains(&u) {
                    return Err(perr(ln, format!("duplicate neighbour {u} of {v}")));
                }
                r.push(u);
                signs.push((v, u, negative, ln));
            }
            rot[v] = Some(r);
        }
        let rot: Vec<Vec<usize>> = rot
            .into_iter()
            .enumerate()
            .map(|(v, r)| r.ok_or_else(|| perr(hl, format!("no rotation for vertex {v}"))))
            .collect::<Result<_>>()?;
        let mut neg = BTreeSet::new();
        for &(v, u, negative, ln) in &signs {
            if !rot[u].contains(&v) {
                return Err(perr(ln, format!("{u} lists no edge back to {v}")));
            }
            let back = signs
                .iter()
                .find(|s| s.0 == u && s.1 == v)
                .map(|s| s.2)
                .expect("symmetric");
            if back != negative {
                return Err(perr(ln, format!("sign of edge {v}-{u} disagrees between endpoints")));
            }
            if negative {
                neg.insert(key(u, v));
            }
        }
        Ok(EmbeddedGraph { rot, neg })
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{}\n", self.n());
        for (v, r) in self.rot.iter().enumerate() {
            let _ = write!(out, "{v}:");
            for &u in r {
                let _ = write!(out, " {u}{}", if self.is_negative(v, u) { "-" } else { "" });
            }
            out.push('\n');
        }
        out
    }

    fn step(&self, (u, v, plus): State) -> State {
        let plus = plus != self.is_negative(u, v);
        let w = if plus { self.succ(v, u) } else { self.pred(v, u) };
        (v, w, plus)
    }

    fn mirror(&self, (u, v, plus): State) -> State {
        (v, u, !(plus != self.is_negative(u, v)))
    }

    /// Every facial walk. Each face is traced once; its reverse traversal is
    /// the mirror orbit and is skipped.
    pub fn trace_faces(&self) -> Vec<FacialWalk> {
        let mut visited = BTreeSet::new();
        let mut faces = Vec::new();
        for v in 0..self.n() {
            if self.rot[v].is_empty() {
                faces.push(FacialWalk { darts: Vec::new() });
            }
        }
        for u in 0..self.n() {
            for &v in &self.rot[u] {
                for plus in [true, false] {
                    let start = (u, v, plus);
                    if visited.contains(&start) {
                        continue;
                    }
                    let mut darts = Vec::new();
                    let mut s = start;
                    loop {
                        visited.insert(s);
                        visited.insert(self.mirror(s));
                        darts.push((s.0, s.1));
                        s = self.step(s);
                        if s == start {
                            break;
                        }
                    }
                    faces.push(FacialWalk { darts });
                }
            }
        }
        faces
    }

    /// `2 − n + m − f` for a connected embedding.
    pub fn euler_genus(&self) -> Result<usize> {
        if !self.graph().is_connected() {
            return Err(Error::Disconnected);
        }
        let f = self.trace_faces().len();
        let g = 2 + self.m() as isize - self.n() as isize - f as isize;
        usize::try_from(g).map_err(|_| Error::pre("negative Euler genus: corrupt rotation system"))
    }

    /// Every face has three distinct vertices and three distinct edges, and
    /// no two faces share a vertex triple (which rules out K₃).
    pub fn is_triangulation(&self) -> bool {
        let faces = self.trace_faces();
        let triples: BTreeSet<[usize; 3]> = faces
            .iter()
            .filter(|f| f.len() == 3)
            .map(|f| {
                let mut t = [f.darts[0].0, f.darts[1].0, f.darts[2].0];
                t.sort_unstable();
                t
            })
            .collect();
        !faces.is_empty()
            && triples.len() == faces.len()
            && faces.iter().all(|f| {
                let vs: BTreeSet<usize> = f.vertices().collect();
                let es: BTreeSet<(usize, usize)> = f.darts.iter().map(|&(a, b)| key(a, b)).collect();
                f.len() == 3 && vs.len() == 3 && es.len() == 3
            })
    }

    fn require_triangulation(&self) -> Result<()> {
        if self.is_triangulation() {
            Ok(())
        } else {
            Err(Error::NotATriangulation)
        }
    }

    fn common_neighbours(&self, v: usize, w: usize) -> Vec<usize> {
        self.rot[v].iter().copied().filter(|u| self.rot[w].contains(u)).collect()
    }

    /// Edges lying in exactly two triangles of the underlying graph.
    pub fn reducible_edges(&self) -> Result<Vec<(usize, usize)>> {
        self.require_triangulation()?;
        Ok(self
            .graph()
            .edges()
            .filter(|&(u, v)| self.common_neighbours(u, v).len() == 2)
            .collect())
    }

    /// No edge can be contracted to a smaller triangulation. K₄ qualifies:
    /// its edges are reducible but contracting one leaves K₃.
    pub fn is_irreducible(&self) -> Result<bool> {
        Ok(self
            .reducible_edges()?
            .into_iter()
            .all(|(u, v)| self.contract_reducible(u, v).is_err()))
    }

    /// Reverses the rotation at `w` and flips the signs of its edges; the
    /// embedding is unchanged.
    fn switch(&mut self, w: usize) {
        self.rot[w].reverse();
        for &u in &self.rot[w] {
            let k = key(u, w);
            if !self.neg.remove(&k) {
                self.neg.insert(k);
            }
        }
    }

    /// Contracts the reducible edge `vw` into `v`, deleting `wx` and `wy`
    /// where `vwx`, `vwy` are the faces at `vw`. Vertices above `w` shift
    /// down by one.
    pub fn contract_reducible(&self, v: usize, w: usize) -> Result<EmbeddedGraph> {
        self.require_triangulation()?;
        if v >= self.n() || w >= self.n() || !self.rot[v].contains(&w) {
            return Err(Error::NotAnEdge(v, w));
        }
        let mut common = self.common_neighbours(v, w);
        common.sort_unstable();
        if common.len() != 2 {
            return Err(Error::pre(format!("edge {v}-{w} is not reducible")));
        }
        let mut e = self.clone();
        if e.is_negative(v, w) {
            e.switch(w);
        }
        let x = e.pred(v, w);
        let y = e.succ(v, w);
        let faces_ok = {
            let mut c = vec![x, y];
            c.sort_unstable();
            c == common && e.succ(w, v) == x && e.pred(w, v) == y
        };
        if !faces_ok {
            return Err(Error::pre(format!(
                "the triangles at {v}-{w} are not both faces"
            )));
        }
        // rot(w) = (v, x, a₁..a_k, y)
        let pw = e.pos(w, v);
        let d = e.rot[w].len();
        let inner: Vec<usize> = (2..d - 1).map(|i| e.rot[w][(pw + i) % d]).collect();
        let pv = e.pos(v, w);
        e.rot[v].splice(pv..=pv, inner.iter().copied());
        for &a in &inner {
            if e.is_negative(w, a) {
                e.neg.insert(key(v, a));
            }
            let p = e.pos(a, w);
            e.rot[a][p] = v;
        }
        for z in [x, y] {
            let p = e.pos(z, w);
            e.rot[z].remove(p);
        }
        e.rot[w].clear();
        let neg: Vec<(usize, usize)> = e.neg.iter().copied().filter(|&(a, b)| a != w && b != w).collect();
        let shift = |u: usize| if u > w { u - 1 } else { u };
        let mut rot = e.rot;
        rot.remove(w);
        for r in &mut rot {
            for u in r.iter_mut() {
                *u = shift(*u);
            }
        }
        let out = EmbeddedGraph {
            rot,
            neg: neg.into_iter().map(|(a, b)| (shift(a), shift(b))).collect(),
        };
        if !out.is_triangulation() {
            return Err(Error::pre(format!("contracting {v}-{w} leaves no triangulation")));
        }
        Ok(out)
    }

    /// Splits the path `xvy` at `v`: a new vertex `w = n` takes over the
    /// neighbours of `v` strictly between `x` and `y` in the rotation of `v`
    /// and is joined to `x`, `v`, `y`.
    pub fn split_path(&self, x: usize, v: usize, y: usize) -> Result<EmbeddedGraph> {
        self.require_triangulation()?;
        let n = self.n();
        if v >= n || x >= n || y >= n || x == y {
            return Err(Error::pre(format!("{x}-{v}-{y} is not a split site")));
        }
        if !self.rot[v].contains(&x) || !self.rot[v].contains(&y) {
            return Err(Error::pre(format!("{x}-{v}-{y} is not a path")));
        }
        let d = self.rot[v].len();
        let px = self.pos(v, x);
        let mut inner = Vec::new();
        let mut i = (px + 1) % d;
        while self.rot[v][i] != y {
            inner.push(self.rot[v][i]);
            i = (i + 1) % d;
        }
        let first = inner.first().copied().unwrap_or(y);
        let last = inner.last().copied().unwrap_or(x);
        let mut e = self.clone();
        let w = n;
        let mut rw = vec![v, x];
        rw.extend(&inner);
        rw.push(y);
        e.rot.push(rw);
        let mut rv = vec![x, w];
        let mut j = (px + inner.len() + 1) % d;
        while self.rot[v][j] != x {
            rv.push(self.rot[v][j]);
            j = (j + 1) % d;
        }
        e.rot[v] = rv;
        for &a in &inner {
            let p = e.pos(a, v);
            e.rot[a][p] = w;
            if e.neg.remove(&key(v, a)) {
                e.neg.insert(key(w, a));
            }
        }
        for z in [x, y] {
            if self.is_negative(v, z) {
                e.neg.insert(key(w, z));
            }
        }
        // w goes next to v on the side facing `other`; a degree-two z has
        // `other` on both sides, so both placements are tried
        let mut sides = Vec::new();
        for (z, other) in [(x, first), (y, last)] {
            let r = &self.rot[z];
            let d = r.len();
            let pz = self.pos(z, v);
            let after = r[(pz + 1) % d] == other;
            let before = r[(pz + d - 1) % d] == other;
            sides.push(match (after, before) {
                (true, true) => vec![pz + 1, pz],
                (true, false) => vec![pz + 1],
                (false, true) => vec![pz],
                (false, false) => return Err(Error::pre(format!("{x}-{v}-{y} is not a split site"))),
            });
        }
        for &ix in &sides[0] {
            for &iy in &sides[1] {
                let mut cand = e.clone();
                cand.rot[x].insert(ix, w);
                cand.rot[y].insert(iy, w);
                if cand.is_triangulation() {
                    return Ok(cand);
                }
            }
        }
        Err(Error::pre(format!("{x}-{v}-{y} is not a split site")))
    }

    /// Adds a vertex inside the triangular face `xvy`.
    pub fn split_triangle(&self, x: usize, v: usize, y: usize) -> Result<EmbeddedGraph> {
        self.require_triangulation()?;
        if v >= self.n() || !self.rot[v].contains(&x) || !self.rot[v].contains(&y) {
            return Err(Error::pre(format!("{x}{v}{y} is not a face")));
        }
        if self.succ(v, x) == y {
            self.split_path(x, v, y)
        } else if self.succ(v, y) == x {
            self.split_path(y, v, x)
        } else {
            Err(Error::pre(format!("{x}{v}{y} is not a face")))
        }
    }

    /// Faces as sorted vertex triples, sorted. Only meaningful for triangulations.
    pub fn face_triples(&self) -> Vec<[usize; 3]> {
        let mut out: Vec<[usize; 3]> = self
            .trace_faces()
            .iter()
            .filter(|f| f.len() == 3)
            .map(|f| {
                let mut t = [f.darts[0].0, f.darts[1].0, f.darts[2].0];
                t.sort_unstable();
                t
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// Minimum Euler genus over all signed rotation systems of a connected
/// graph, with a witness. Rotations are fixed vertex by vertex; a partial
/// system bounds its face count by the closed orbits plus one face per six
/// undetermined trace states (faces of a simple connected graph on at least
/// three vertices have length at least three).
pub fn min_genus_search(g: &Graph) -> Result<(usize, EmbeddedGraph)> {
    if g.n() > MIN_GENUS_MAX_VERTICES {
        return Err(Error::SizeCap {
            what: "min-genus vertices",
            limit: MIN_GENUS_MAX_VERTICES,
            actual: g.n(),
        });
    }
    if g.m() > MIN_GENUS_MAX_EDGES {
        return Err(Error::SizeCap {
            what: "min-genus edges",
            limit: MIN_GENUS_MAX_EDGES,
            actual: g.m(),
        });
    }
    if g.n() == 0 {
        return Err(Error::pre("the empty graph has no embedding"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let rot: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
    if g.n() <= 2 {
        return Ok((0, EmbeddedGraph::orientable(rot)?));
    }
    // BFS order; tree edges stay positive (switching makes this w.l.o.g.)
    let mut order = vec![0];
    let mut parent = vec![usize::MAX; g.n()];
    parent[0] = 0;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
        i += 1;
    }
    let m = g.m();
    let lower = (2 + m).saturating_sub(g.n() + 2 * m / 3);
    let mut s = GenusSearch {
        g,
        order,
        parent,
        assigned: vec![false; g.n()],
        emb: EmbeddedGraph { rot, neg: BTreeSet::new() },
        best: None,
        lower,
    };
    s.descend(0);
    let (genus, emb) = s.best.expect("every connected graph embeds somewhere");
    Ok((genus, emb))
}

struct GenusSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    parent: Vec<usize>,
    assigned: Vec<bool>,
    emb: EmbeddedGraph,
    best: Option<(usize, EmbeddedGraph)>,
    lower: usize,
}

impl GenusSearch<'_> {
    fn done(&self) -> bool {
        self.best.as_ref().is_some_and(|b| b.0 <= self.lower)
    }

    /// Closed faces plus an optimistic count for undetermined states.
    fn face_bound(&self) -> usize {
        let e = &self.emb;
        let ready = |s: State| self.assigned[s.0] && self.assigned[s.1];
        let mut visited = BTreeSet::new();
        let mut closed = 0;
        let mut closed_states = 0;
        for u in 0..e.n() {
            for &v in &e.rot[u] {
                for plus in [true, false] {
                    let start = (u, v, plus);
                    if visited.contains(&start) || !ready(start) {
                        continue;
                    }
                    let mut orbit = vec![start];
                    let mut s = start;
                    let closes = loop {
                        let t = e.step(s);
                        if t == start {
                            break true;
                        }
                        if !ready(t) || orbit.len() > 4 * e.m() {
                            break false;
                        }
                        orbit.push(t);
                        s = t;
                    };
                    if closes {
                        closed += 1;
                        closed_states += 2 * orbit.len();
                        for st in orbit {
                            visited.insert(st);
                            visited.insert(e.mirror(st));
                        }
                    } else {
                        visited.insert(start);
                    }
                }
            }
        }
        closed + (4 * e.m() - closed_states) / 6
    }

    fn genus_for_faces(&self, f: usize) -> usize {
        (2 + self.emb.m()).saturating_sub(self.emb.n() + f)
    }

    fn descend(&mut self, depth: usize) {
        if self.done() {
            return;
        }
        if depth == self.order.len() {
            let genus = self.emb.euler_genus().expect("connected");
            if self.best.as_ref().is_none_or(|b| genus < b.0) {
                self.best = Some((genus, self.emb.clone()));
            }
            return;
        }
        if depth > 0 {
            let bound = self.face_bound();
            if let Some(b) = &self.best {
                if self.genus_for_faces(bound) >= b.0 {
                    return;
                }
            }
        }
        let v = self.order[depth];
        let nbrs = self.g.neighbors(v).to_vec();
        // signs of non-tree edges back to already placed vertices
        let back: Vec<usize> = nbrs
            .iter()
            .copied()
            .filter(|&u| self.assigned[u] && self.parent[v] != u && self.parent[u] != v)
            .collect();
        self.assigned[v] = true;
        let mut perm: Vec<usize> = nbrs[1..].to_vec();
        let mut rotations = Vec::new();
        permutations(&mut perm, 0, &mut |p| {
            // the root's mirror image gives the same embedding
            if depth == 0 && p.len() >= 2 && p[0] > p[p.len() - 1] {
                return;
            }
            let mut r = vec![nbrs[0]];
            r.extend_from_slice(p);
            rotations.push(r);
        });
        for r in rotations {
            self.emb.rot[v] = r;
            for mask in 0..1u32 << back.len() {
                for (b, &u) in back.iter().enumerate() {
                    let k = key(u, v);
                    if mask >> b & 1 == 1 {
                        self.emb.neg.insert(k);
                    } else {
                        self.emb.neg.remove(&k);
                    }
                }
                self.descend(depth + 1);
                if self.done() {
                    break;
                }
            }
            if self.done() {
                break;
            }
        }
        for &u in &back {
            self.emb.neg.remove(&key(u, v));
        }
        self.assigned[v] = false;
    }
}

fn permutations(a: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == a.len() {
        f(a);
        return;
    }
    for i in k..a.len() {
        a.swap(k, i);
        permutations(a, k + 1, f);
        a.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_cliques;

    fn octahedron() -> EmbeddedGraph {
        // poles 0 and 5 around the equator 1-2-3-4
        EmbeddedGraph::orientable(vec![
            vec![1, 2, 3, 4],
            vec![0, 4, 5, 2],
            vec![0, 1, 5, 3],
            vec![0, 2, 5, 4],
            vec![0, 3, 5, 1],
            vec![1, 4, 3, 2],
        ])
        .unwrap()
    }

    #[test]
    fn tetrahedron_is_a_sphere_triangulation() {
        let t = EmbeddedGraph::tetrahedron();
        assert_eq!(t.trace_faces().len(), 4);
        assert_eq!(t.euler_genus().unwrap(), 0);
        assert!(t.is_triangulation());
    }

    #[test]
    fn k6_projective_plane() {
        let k6 = EmbeddedGraph::k6_projective();
        assert_eq!(k6.graph(), Graph::complete(6));
        assert_eq!(k6.trace_faces().len(), 10);
        assert_eq!(k6.euler_genus().unwrap(), 1);
        assert!(k6.is_triangulation());
        assert!(k6.reducible_edges().unwrap().is_empty());
    }

    #[test]
    fn second_projective_triangulation() {
        let e = EmbeddedGraph::k7_minus_triangle_projective();
        assert_eq!(e.n(), 7);
        assert_eq!(e.m(), 18);
        assert!(e.is_triangulation());
        assert_eq!(e.euler_genus().unwrap(), 1);
        assert!(e.is_irreducible().unwrap());
        let g = e.graph();
        assert_eq!(count_cliques(&g, 3), 22u32.into());
        assert_eq!(count_cliques(&g, 4), 13u32.into());
        assert_eq!(count_cliques(&g, 5), 3u32.into());
    }

    #[test]
    fn k4_is_irreducible_though_every_edge_is_reducible() {
        let t = EmbeddedGraph::tetrahedron();
        assert!(t.is_irreducible().unwrap());
        assert!(t.contract_reducible(0, 1).is_err());
        assert!(!octahedron().is_irreducible().unwrap());
    }

    #[test]
    fn single_edge_has_one_face_of_length_two() {
        let k2 = EmbeddedGraph::orientable(vec![vec![1], vec![0]]).unwrap();
        let faces = k2.trace_faces();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 2);
        assert_eq!(k2.euler_genus().unwrap(), 0);
    }

    #[test]
    fn k5_all_positive_toroidal() {
        // rotation (v+1, v+2, v+4, v+3) mod 5 has five faces
        let rot = (0..5).map(|v| [1, 2, 4, 3].iter().map(|d| (v + d) % 5).collect()).collect();
        let k5 = EmbeddedGraph::orientable(rot).unwrap();
        assert_eq!(k5.trace_faces().len(), 5);
        assert_eq!(k5.euler_genus().unwrap(), 2);
    }

    #[test]
    fn parse_round_trip_and_errors() {
        assert_eq!(EmbeddedGraph::parse(K6_PROJECTIVE).unwrap().serialize(), K6_PROJECTIVE);
        assert!(EmbeddedGraph::parse("2\n0: 1-\n1: 0\n").is_err());
        assert!(EmbeddedGraph::parse("3\n0: 1 1\n1: 0\n2:\n").is_err());
        assert!(EmbeddedGraph::parse("3\n0: 1\n1:\n2:\n").is_err());
    }

    #[test]
    fn face_lengths_sum_to_twice_edges() {
        for e in [octahedron(), EmbeddedGraph::k6_projective(), EmbeddedGraph::tetrahedron()] {
            let total: usize = e.trace_faces().iter().map(FacialWalk::len).sum();
            assert_eq!(total, 2 * e.m());
        }
    }

    #[test]
    fn reducible_edge_examples() {
        assert_eq!(octahedron().reducible_edges().unwrap().len(), 12);
        assert_eq!(EmbeddedGraph::tetrahedron().reducible_edges().unwrap().len(), 6);
        let cube = EmbeddedGraph::orientable(vec![
            vec![1, 3, 4],
            vec![0, 5, 2],
            vec![1, 6, 3],
            vec![2, 7, 0],
            vec![0, 7, 5],
            vec![1, 4, 6],
            vec![2, 5, 7],
            vec![3, 6, 4],
        ])
        .unwrap();
        assert!(!cube.is_triangulation());
        assert_eq!(cube.reducible_edges(), Err(Error::NotATriangulation));
    }

    #[test]
    fn contract_octahedron_edge() {
        let o = octahedron();
        let c = o.contract_reducible(0, 1).unwrap();
        assert_eq!(c.n(), 5);
        assert!(c.is_triangulation());
        assert_eq!(c.euler_genus().unwrap(), 0);
        assert_eq!(c.m(), 9);
    }

    #[test]
    fn split_triangle_counts() {
        let t = EmbeddedGraph::tetrahedron();
        let s = t.split_triangle(0, 1, 2).unwrap();
        assert!(s.is_triangulation());
        assert_eq!(s.euler_genus().unwrap(), 0);
        let g = s.graph();
        assert_eq!(count_cliques(&g, 3), 7u32.into());
        assert_eq!(count_cliques(&g, 4), 2u32.into());
    }

    #[test]
    fn split_then_contract_restores() {
        let k6 = EmbeddedGraph::k6_projective();
        for [a, b, c] in k6.face_triples() {
            let s = k6.split_triangle(a, b, c).unwrap();
            assert_eq!(s.euler_genus().unwrap(), 1);
            let back = s.contract_reducible(b, 6).unwrap();
            assert_eq!(back.graph(), k6.graph());
            assert_eq!(back.euler_genus().unwrap(), 1);
        }
    }

    #[test]
    fn split_path_on_octahedron() {
        let o = octahedron();
        // rotation at 0 is (1,2,3,4): path 1-0-3 takes 2 to the new vertex
        let s = o.split_path(1, 0, 3).unwrap();
        assert_eq!(s.n(), 7);
        assert_eq!(s.euler_genus().unwrap(), 0);
        assert_eq!(s.rotation(6), [0, 1, 2, 3]);
        let back = s.contract_reducible(0, 6).unwrap();
        assert_eq!(back.graph(), o.graph());
    }

    #[test]
    fn min_genus_examples() {
        let (g, w) = min_genus_search(&Graph::complete(4)).unwrap();
        assert_eq!(g, 0);
        assert_eq!(w.euler_genus().unwrap(), 0);
        let (g, w) = min_genus_search(&Graph::complete(5)).unwrap();
        assert_eq!(g, 1);
        assert_eq!(w.graph(), Graph::complete(5));
        assert_eq!(min_genus_search(&Graph::complete_bipartite(3, 3)).unwrap().0, 1);
        assert!(min_genus_search(&Graph::complete(9)).is_err());
    }
}
