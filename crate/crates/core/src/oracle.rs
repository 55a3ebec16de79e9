//! Independent slow paths used to cross-check the fast predicates.
//!
//! Nothing here shares code with the outer-cycle search or the refinement
//! canonicaliser: planarity is decided by the Demoucron–Malgrange–Pertuiset
//! face-embedding procedure and isomorphism by trying every relabelling.

use crate::canon::{labelled_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{is_three_connected, radius, BitIter, Graph};

/// Largest order accepted by [`is_radius_one_polytope_oracle`].
pub const ORACLE_MAX_ORDER: usize = 10;

/// Largest order accepted by [`brute_force_code`].
pub const BRUTE_FORCE_MAX_ORDER: usize = 9;

/// Radius 1, 3-connected, and planar, each decided from first principles.
pub fn is_radius_one_polytope_oracle(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::OracleScaleExceeded { order: n, limit: ORACLE_MAX_ORDER });
    }
    if n < 4 || !g.is_connected() {
        return Ok(false);
    }
    Ok(radius(g)? == 1 && is_three_connected(g) && is_planar_biconnected(g))
}

/// Planarity of a 2-connected graph by incremental face embedding.
pub fn is_planar_biconnected(g: &Graph) -> bool {
    let n = g.order();
    let m = g.size();
    if m < 9 || n < 5 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let Some(cycle) = find_cycle(g) else {
        return true;
    };
    let mut emb = Embedding::new(g.order());
    for i in 0..cycle.len() {
        emb.add_edge(cycle[i], cycle[(i + 1) % cycle.len()]);
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];
    loop {
        let fragments = emb.fragments(g);
        if fragments.is_empty() {
            return true;
        }
        let face_masks: Vec<u32> = faces.iter().map(|f| f.iter().fold(0u32, |m, &v| m | 1 << v)).collect();
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len()).filter(|&k| frag.attachments & !face_masks[k] == 0).collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.unwrap();
        let path = fragments[fi].path(g, &emb);
        for w in path.windows(2) {
            emb.add_edge(w[0], w[1]);
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
}

/// Any cycle of `g`, as a vertex list.
fn find_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for w in BitIter(g.neighbors(v)) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    stack.push(w);
                } else if w != parent[v] && parent[w] != v {
                    // non-tree edge v-w closes a cycle through the tree
                    let (mut a, mut b) = (v, w);
                    let mut left = vec![a];
                    let mut right = vec![b];
                    while a != b {
                        if depth[a] >= depth[b] {
                            a = parent[a];
                            left.push(a);
                        } else {
                            b = parent[b];
                            right.push(b);
                        }
                    }
                    right.pop();
                    right.reverse();
                    left.extend(right);
                    return Some(left);
                }
            }
        }
    }
    None
}

struct Embedding {
    vertices: u32,
    adj: Vec<u32>,
}

struct Fragment {
    attachments: u32,
    /// Vertices of the fragment outside the embedding; empty for a lone edge.
    interior: u32,
    edge: Option<(usize, usize)>,
}

impl Embedding {
    fn new(n: usize) -> Self {
        Embedding { vertices: 0, adj: vec![0; n] }
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.vertices |= 1 << u | 1 << v;
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    fn fragments(&self, g: &Graph) -> Vec<Fragment> {
        let mut out = Vec::new();
        for (u, v) in g.edges() {
            let both = self.vertices >> u & 1 == 1 && self.vertices >> v & 1 == 1;
            if both && self.adj[u] >> v & 1 == 0 {
                out.push(Fragment { attachments: 1 << u | 1 << v, interior: 0, edge: Some((u, v)) });
            }
        }
        let mut rest = g.full_mask() & !self.vertices;
        while rest != 0 {
            let comp = g.reach_within(rest.trailing_zeros() as usize, rest);
            rest &= !comp;
            let mut attachments = 0;
            for v in BitIter(comp) {
                attachments |= g.neighbors(v) & self.vertices;
            }
            out.push(Fragment { attachments, interior: comp, edge: None });
        }
        out
    }
}

impl Fragment {
    /// A path through the fragment joining two distinct attachments.
    fn path(&self, g: &Graph, emb: &Embedding) -> Vec<usize> {
        if let Some((u, v)) = self.edge {
            return vec![u, v];
        }
        let start = self.attachments.trailing_zeros() as usize;
        let mut prev = vec![usize::MAX; g.order()];
        let mut queue = std::collections::VecDeque::new();
        for w in BitIter(g.neighbors(start) & self.interior) {
            prev[w] = start;
            queue.push_back(w);
        }
        while let Some(x) = queue.pop_front() {
            let exits = g.neighbors(x) & emb.vertices & !(1 << start);
            if exits != 0 {
                let mut path = vec![exits.trailing_zeros() as usize, x];
                let mut cur = x;
                while prev[cur] != start {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.push(start);
                path.reverse();
                return path;
            }
            for w in BitIter(g.neighbors(x) & self.interior) {
                if prev[w] == usize::MAX {
                    prev[w] = x;
                    queue.push_back(w);
                }
            }
        }
        unreachable!("fragment of a 2-connected graph has two attachments")
    }
}

/// Splits the cyclic face by a path whose endpoints lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let inner = &path[1..path.len() - 1];
    let ia = face.iter().position(|&v| v == a).unwrap();
    let ib = face.iter().position(|&v| v == b).unwrap();
    let walk = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut i = from;
        loop {
            out.push(face[i]);
            if i == to {
                break;
            }
            i = (i + 1) % face.len();
        }
        out
    };
    let mut f1 = walk(ia, ib);
    f1.extend(inner.iter().rev());
    let mut f2 = walk(ib, ia);
    f2.extend(inner.iter());
    (f1, f2)
}

/// Smallest labelled code over all `n!` relabellings.
pub fn brute_force_code(g: &Graph) -> Result<CanonicalCode> {
    let n = g.order();
    if n > BRUTE_FORCE_MAX_ORDER {
        return Err(Error::OracleScaleExceeded { order: n, limit: BRUTE_FORCE_MAX_ORDER });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = labelled_code(g);
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let code = labelled_code(&g.permuted(&perm));
            if code < best {
                best = code;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}
