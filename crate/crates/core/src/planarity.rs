//! Planarity testing by path addition over fragments (Demoucron, Malgrange
//! and Pertuiset), run independently on each biconnected block.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_PLANARITY_CAP: usize = 512;

/// True iff `g` embeds in the sphere. Errors above the default size cap.
pub fn is_planar(g: &Graph) -> Result<bool> {
    is_planar_capped(g, DEFAULT_PLANARITY_CAP)
}

pub fn is_planar_capped(g: &Graph, cap: usize) -> Result<bool> {
    if g.n() > cap {
        return Err(Error::SizeCap {
            what: "planarity",
            limit: cap,
            actual: g.n(),
        });
    }
    Ok(planar_unchecked(g))
}

pub(crate) fn planar_unchecked(g: &Graph) -> bool {
    let n = g.n();
    if n <= 4 {
        return true;
    }
    if g.m() > 3 * n - 6 {
        return false;
    }
    biconnected_blocks(g).into_iter().all(|block| {
        let (k, edges) = block;
        k <= 4 || (edges.len() <= 3 * k - 6 && block_is_planar(k, &edges))
    })
}

/// Biconnected blocks as (vertex count, locally re-indexed edge list).
fn biconnected_blocks(g: &Graph) -> Vec<(usize, Vec<(usize, usize)>)> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            let ns = g.neighbors(u);
            if *idx < ns.len() {
                let w = ns[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push((u, w));
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (p, u) {
                                break;
                            }
                        }
                        blocks.push(reindex(&block));
                    }
                }
            }
        }
    }
    blocks
}

fn reindex(edges: &[(usize, usize)]) -> (usize, Vec<(usize, usize)>) {
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let idx = |v: usize| verts.binary_search(&v).unwrap();
    let local = edges.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    (verts.len(), local)
}

struct Fragment {
    attachments: Vec<usize>,
    /// Empty for a single chord; otherwise the non-embedded vertices.
    interior: Vec<usize>,
    chord: Option<(usize, usize)>,
}

fn block_is_planar(k: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); k];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let key = |a: usize, b: usize| (a.min(b), a.max(b));

    let cycle = dfs_cycle(&adj);
    let mut in_h = vec![false; k];
    let mut h_edges: HashSet<(usize, usize)> = HashSet::new();
    for (i, &v) in cycle.iter().enumerate() {
        in_h[v] = true;
        h_edges.insert(key(v, cycle[(i + 1) % cycle.len()]));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    while h_edges.len() < edges.len() {
        let fragments = fragments(&adj, &in_h, &h_edges);

        let mut faces_of: Vec<Vec<usize>> = vec![Vec::new(); k];
        for (fi, f) in faces.iter().enumerate() {
            for &v in f {
                faces_of[v].push(fi);
            }
        }
        let admissible = |frag: &Fragment| -> Vec<usize> {
            let pivot = frag
                .attachments
                .iter()
                .min_by_key(|&&a| faces_of[a].len())
                .copied()
                .unwrap();
            faces_of[pivot]
                .iter()
                .copied()
                .filter(|&fi| frag.attachments.iter().all(|&a| faces_of[a].contains(&fi)))
                .collect()
        };

        let mut choice: Option<(usize, usize)> = None;
        for (i, frag) in fragments.iter().enumerate() {
            let adm = admissible(frag);
            match adm.len() {
                0 => return false,
                1 => {
                    choice = Some((i, adm[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, adm[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("fragments exist while edges remain");
        let path = fragment_path(&adj, &in_h, &fragments[fi]);

        for w in path.windows(2) {
            h_edges.insert(key(w[0], w[1]));
        }
        for &v in &path {
            in_h[v] = true;
        }
        let (f1, f2) = split_face(&faces[face_idx], &path);
        faces[face_idx] = f1;
        faces.push(f2);
    }
    true
}

fn dfs_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let k = adj.len();
    let mut parent = vec![usize::MAX; k];
    let mut state = vec![0u8; k];
    let mut stack = vec![(0usize, 0usize)];
    state[0] = 1;
    while let Some(&mut (u, ref mut i)) = stack.last_mut() {
        if *i < adj[u].len() {
            let w = adj[u][*i];
            *i += 1;
            if state[w] == 0 {
                state[w] = 1;
                parent[w] = u;
                stack.push((w, 0));
            } else if state[w] == 1 && w != parent[u] {
                let mut cyc = vec![u];
                let mut x = u;
                while x != w {
                    x = parent[x];
                    cyc.push(x);
                }
                return cyc;
            }
        } else {
            state[u] = 2;
            stack.pop();
        }
    }
    unreachable!("biconnected block with >= 3 vertices has a cycle")
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], h_edges: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let k = adj.len();
    let mut out = Vec::new();
    for u in 0..k {
        if !in_h[u] {
            continue;
        }
        for &w in &adj[u] {
            if w > u && in_h[w] && !h_edges.contains(&(u, w)) {
                out.push(Fragment {
                    attachments: vec![u, w],
                    interior: Vec::new(),
                    chord: Some((u, w)),
                });
            }
        }
    }
    let mut seen = vec![false; k];
    let mut mark = vec![usize::MAX; k];
    for s in 0..k {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut attach = Vec::new();
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in &adj[u] {
                if in_h[w] {
                    if mark[w] != s {
                        mark[w] = s;
                        attach.push(w);
                    }
                } else if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        out.push(Fragment {
            attachments: attach,
            interior: comp,
            chord: None,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    if let Some((a, b)) = frag.chord {
        return vec![a, b];
    }
    let a = frag.attachments[0];
    let k = adj.len();
    let in_frag: HashSet<usize> = frag.interior.iter().copied().collect();
    let start = adj[a]
        .iter()
        .copied()
        .find(|w| in_frag.contains(w))
        .expect("attachment touches its fragment");
    let mut parent = vec![usize::MAX; k];
    let mut queue = std::collections::VecDeque::from([start]);
    parent[start] = start;
    while let Some(u) = queue.pop_front() {
        if let Some(&b) = adj[u].iter().find(|&&w| in_h[w] && w != a) {
            let mut path = vec![b, u];
            let mut x = u;
            while x != start {
                x = parent[x];
                path.push(x);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &w in &adj[u] {
            if !in_h[w] && parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment of a biconnected block has two attachments")
}

fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let len = face.len();
    let i = face.iter().position(|&v| v == a).unwrap();
    let j = face.iter().position(|&v| v == b).unwrap();
    let inner = &path[1..path.len() - 1];

    let mut f1 = Vec::new();
    let mut x = i;
    loop {
        f1.push(face[x]);
        if x == j {
            break;
        }
        x = (x + 1) % len;
    }
    f1.extend(inner.iter().rev());

    let mut f2 = Vec::new();
    let mut x = j;
    loop {
        f2.push(face[x]);
        if x == i {
            break;
        }
        x = (x + 1) % len;
    }
    f2.extend(inner.iter());
    (f1, f2)
}
