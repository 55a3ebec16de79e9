//! Canonical labelling by partition refinement and individualisation.
//!
//! The search refines an ordered vertex partition to an equitable one,
//! individualises each vertex of the first smallest non-singleton cell in
//! turn, and recurses. Every discrete leaf yields a relabelled adjacency
//! matrix; the smallest one is the canonical form. All choices depend only on
//! the partition, so isomorphic inputs explore isomorphic trees and the
//! minimum is a complete invariant.

use std::fmt;

use crate::graph::{BitIter, Graph, MAX_ORDER};

/// Relabelling-invariant certificate: the order byte followed by the
/// upper-triangular adjacency bits of the canonical form, row by row,
/// most significant bit first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        CanonicalCode(bytes)
    }

    pub fn order(&self) -> usize {
        self.0.first().copied().unwrap_or(0) as usize
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", hex::encode(&self.0))
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&hex::encode(&self.0))
    }
}

/// Code of `g` exactly as labelled, without canonicalisation.
pub fn labelled_code(g: &Graph) -> CanonicalCode {
    let mut out = Vec::with_capacity(code_len(g.order()));
    write_labelled_code(g.rows(), &mut out);
    CanonicalCode(out)
}

fn code_len(n: usize) -> usize {
    1 + (n * n.saturating_sub(1) / 2).div_ceil(8)
}

fn write_labelled_code(rows: &[u32], out: &mut Vec<u8>) {
    let n = rows.len();
    out.clear();
    out.push(n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for (i, &row) in rows.iter().enumerate() {
        for j in i + 1..n {
            acc = acc << 1 | (row >> j & 1) as u8;
            filled += 1;
            if filled == 8 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (8 - filled));
    }
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    canonical_labelling(g).1
}

/// Canonically relabelled copy of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    g.permuted(&canonical_labelling(g).0)
}

/// Returns `perm` (old vertex to canonical label) and the code of
/// `g.permuted(&perm)`.
pub fn canonical_labelling(g: &Graph) -> (Vec<usize>, CanonicalCode) {
    let n = g.order();
    if n == 0 {
        return (Vec::new(), CanonicalCode(vec![0]));
    }
    let mut search = Search { g, best: Vec::new(), best_perm: Vec::new(), scratch: Vec::with_capacity(code_len(n)) };
    let mut cells = Partition::unit(n);
    search.descend(&mut cells);
    (search.best_perm, CanonicalCode(search.best))
}

/// Ordered partition stored as a vertex list with cell ends.
#[derive(Clone)]
struct Partition {
    verts: Vec<u8>,
    /// `ends[k]` is one past the last position of cell `k`.
    ends: Vec<u8>,
}

impl Partition {
    fn unit(n: usize) -> Self {
        Partition { verts: (0..n as u8).collect(), ends: vec![n as u8] }
    }

    fn cell_bounds(&self, k: usize) -> (usize, usize) {
        let start = if k == 0 { 0 } else { self.ends[k - 1] as usize };
        (start, self.ends[k] as usize)
    }

    fn is_discrete(&self) -> bool {
        self.ends.len() == self.verts.len()
    }

    fn cell_masks(&self) -> Vec<u32> {
        (0..self.ends.len())
            .map(|k| {
                let (s, e) = self.cell_bounds(k);
                self.verts[s..e].iter().fold(0u32, |m, &v| m | 1 << v)
            })
            .collect()
    }

    /// Splits cells by neighbour counts into every cell until stable.
    fn refine(&mut self, g: &Graph) {
        let mut keyed: Vec<([u8; MAX_ORDER], u8)> = Vec::with_capacity(self.verts.len());
        loop {
            let masks = self.cell_masks();
            let before = self.ends.len();
            let mut new_ends = Vec::with_capacity(self.verts.len());
            for k in 0..before {
                let (s, e) = self.cell_bounds(k);
                if e - s == 1 {
                    new_ends.push(e as u8);
                    continue;
                }
                keyed.clear();
                for &v in &self.verts[s..e] {
                    let row = g.neighbors(v as usize);
                    let mut key = [0u8; MAX_ORDER];
                    for (slot, &m) in key.iter_mut().zip(&masks) {
                        *slot = (row & m).count_ones() as u8;
                    }
                    keyed.push((key, v));
                }
                keyed.sort_unstable();
                for (i, &(key, v)) in keyed.iter().enumerate() {
                    self.verts[s + i] = v;
                    if i + 1 < keyed.len() && keyed[i + 1].0 != key {
                        new_ends.push((s + i + 1) as u8);
                    }
                }
                new_ends.push(e as u8);
            }
            self.ends = new_ends;
            if self.ends.len() == before {
                return;
            }
        }
    }

    /// First cell of minimum size above one.
    fn target_cell(&self) -> usize {
        let mut best = usize::MAX;
        let mut best_k = 0;
        for k in 0..self.ends.len() {
            let (s, e) = self.cell_bounds(k);
            let size = e - s;
            if size > 1 && size < best {
                best = size;
                best_k = k;
            }
        }
        best_k
    }

    /// Moves `v` (a member of cell `k`) into its own cell in front of `k`.
    fn individualise(&self, k: usize, v: u8) -> Partition {
        let (s, e) = self.cell_bounds(k);
        let mut out = self.clone();
        let pos = out.verts[s..e].iter().position(|&w| w == v).unwrap() + s;
        out.verts[s..=pos].rotate_right(1);
        out.ends.insert(k, (s + 1) as u8);
        out
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<u8>,
    best_perm: Vec<usize>,
    scratch: Vec<u8>,
}

impl Search<'_> {
    fn descend(&mut self, cells: &mut Partition) {
        cells.refine(self.g);
        if cells.is_discrete() {
            self.leaf(cells);
            return;
        }
        let k = cells.target_cell();
        let (s, e) = cells.cell_bounds(k);
        let members: Vec<u8> = cells.verts[s..e].to_vec();
        for v in members {
            let mut child = cells.individualise(k, v);
            self.descend(&mut child);
        }
    }

    fn leaf(&mut self, cells: &Partition) {
        let n = self.g.order();
        let mut perm = [0usize; MAX_ORDER];
        for (i, &v) in cells.verts.iter().enumerate() {
            perm[v as usize] = i;
        }
        let mut rows = [0u32; MAX_ORDER];
        for (v, &pv) in perm[..n].iter().enumerate() {
            let mut row = 0u32;
            for w in BitIter(self.g.neighbors(v)) {
                row |= 1 << perm[w];
            }
            rows[pv] = row;
        }
        write_labelled_code(&rows[..n], &mut self.scratch);
        if self.best.is_empty() || self.scratch < self.best {
            std::mem::swap(&mut self.best, &mut self.scratch);
            self.best_perm = perm[..n].to_vec();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_layout() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(labelled_code(&k4).as_bytes(), &[4, 0b1111_1100]);
        assert_eq!(canonical_code(&k4).as_bytes(), &[4, 0b1111_1100]);
        let single = Graph::new(1).unwrap();
        assert_eq!(canonical_code(&single).as_bytes(), &[1]);
    }

    #[test]
    fn relabelling_invariance_k4() {
        let k4 = Graph::complete(4).unwrap();
        let p = k4.permuted(&[2, 0, 3, 1]);
        assert_eq!(canonical_code(&k4), canonical_code(&p));
    }

    #[test]
    fn wheel_hub_first_vs_last() {
        let rim = 6;
        let mut first = Graph::new(7).unwrap();
        let mut last = Graph::new(7).unwrap();
        for i in 0..rim {
            first.add_edge(0, i + 1);
            first.add_edge(i + 1, (i + 1) % rim + 1);
            last.add_edge(6, i);
            last.add_edge(i, (i + 1) % rim);
        }
        assert_eq!(canonical_code(&first), canonical_code(&last));
    }

    #[test]
    fn distinguishes_same_degree_sequence() {
        // C6 versus two triangles
        let c6 = Graph::cycle(6).unwrap();
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_code(&c6), canonical_code(&two));
    }

    #[test]
    fn canonical_form_has_the_code() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4)]).unwrap();
        let (perm, code) = canonical_labelling(&g);
        assert_eq!(labelled_code(&g.permuted(&perm)), code);
        assert_eq!(canonical_code(&canonical_form(&g)), code);
    }
}
