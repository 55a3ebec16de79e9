//! Small simple graphs stored as one `u32` adjacency row per vertex.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order. Every adjacency row fits a single `u32`.
pub const MAX_ORDER: usize = 24;

/// Simple undirected graph on vertices `0..n`, `n <= MAX_ORDER`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_ORDER],
}

impl Graph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        Ok(Graph { n: n as u8, adj: [0; MAX_ORDER] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidEdge(u, v));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// The cycle `0-1-...-(n-1)-0`.
    pub fn cycle(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        if n >= 3 {
            for i in 0..n {
                g.add_edge(i, (i + 1) % n);
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for u in 0..n {
            g.adj[u] = g.full_mask() & !(1 << u);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn size(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Bit mask with one bit per vertex.
    #[inline]
    pub fn full_mask(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n as usize]
    }

    /// Neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Adds edge `uv`. Panics on loops or out-of-range vertices.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.order() && v < self.order(), "bad edge {u}-{v}");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Self {
        let mut g = *self;
        g.add_edge(u, v);
        g
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut g = *self;
        g.remove_edge(u, v);
        g
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            let higher = self.adj[u] & !((2u32 << u) - 1);
            BitIter(higher).map(move |v| (u, v))
        })
    }

    /// Pairs `(u, v)` with `u < v` that are not edges.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let full = self.full_mask();
        (0..self.order()).flat_map(move |u| {
            let higher = !self.adj[u] & full & !((2u32 << u) - 1);
            BitIter(higher).map(move |v| (u, v))
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    /// Subgraph induced by the vertices in `mask`, relabelled in increasing
    /// order. Returns the subgraph and the old label of each new vertex.
    pub fn induced(&self, mask: u32) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = BitIter(mask & self.full_mask()).collect();
        let mut new_label = [usize::MAX; MAX_ORDER];
        for (i, &v) in keep.iter().enumerate() {
            new_label[v] = i;
        }
        let mut h = Graph { n: keep.len() as u8, adj: [0; MAX_ORDER] };
        for (i, &v) in keep.iter().enumerate() {
            for w in BitIter(self.adj[v] & mask) {
                h.adj[i] |= 1 << new_label[w];
            }
        }
        (h, keep)
    }

    /// `g - v`, with the remaining vertices relabelled in increasing order.
    pub fn remove_vertex(&self, v: usize) -> (Graph, Vec<usize>) {
        self.induced(self.full_mask() & !(1 << v))
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order());
        let mut h = Graph { n: self.n, adj: [0; MAX_ORDER] };
        for (v, &pv) in perm.iter().enumerate() {
            let mut row = 0u32;
            for w in BitIter(self.adj[v]) {
                row |= 1 << perm[w];
            }
            h.adj[pv] = row;
        }
        h
    }

    /// Whether the vertices of `mask` induce a connected subgraph. The empty
    /// set counts as connected.
    pub fn is_connected_within(&self, mask: u32) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        self.reach_within(start, mask) == mask
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.full_mask())
    }

    /// Vertices reachable from `start` using only vertices of `mask`.
    pub fn reach_within(&self, start: usize, mask: u32) -> u32 {
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            next &= mask & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components, each as a vertex mask, ordered by lowest vertex.
    pub fn components(&self) -> Vec<u32> {
        let mut rest = self.full_mask();
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.reach_within(rest.trailing_zeros() as usize, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    /// Checks the representation invariants: symmetric, loop-free, no bits
    /// beyond `n`.
    pub fn is_well_formed(&self) -> bool {
        let full = self.full_mask();
        (0..self.order()).all(|u| {
            self.adj[u] & !full == 0
                && self.adj[u] >> u & 1 == 0
                && BitIter(self.adj[u]).all(|v| self.adj[v] >> u & 1 == 1)
        }) && self.adj[self.order()..].iter().all(|&r| r == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Iterates the set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub struct BitIter(pub u32);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Degree sequence, sorted non-increasing, with even sum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<u8>);

impl DegreeSequence {
    /// Sorts `degrees` non-increasing. Fails on an odd sum.
    pub fn new(mut degrees: Vec<u8>) -> Result<Self> {
        if degrees.iter().map(|&d| d as usize).sum::<usize>() % 2 == 1 {
            return Err(Error::InvalidSequence("degree sum is odd".into()));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence(degrees))
    }

    pub fn degrees(&self) -> &[u8] {
        &self.0
    }

    /// Number of entries, the order `p` of any realisation.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().map(|&d| d as usize).sum()
    }

    /// Size `q` of any realisation.
    pub fn edge_count(&self) -> usize {
        self.sum() / 2
    }

    pub fn count_of(&self, degree: u8) -> usize {
        self.0.iter().filter(|&&d| d == degree).count()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl std::str::FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let degrees = s
            .split(',')
            .map(|t| t.trim().parse::<u8>().map_err(|_| Error::InvalidSequence(format!("bad entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        DegreeSequence::new(degrees)
    }
}

pub fn degree_sequence(g: &Graph) -> DegreeSequence {
    let mut d: Vec<u8> = (0..g.order()).map(|v| g.degree(v) as u8).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    DegreeSequence(d)
}

/// Largest BFS distance from `v`.
pub fn eccentricity(g: &Graph, v: usize) -> Result<usize> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange(v));
    }
    let full = g.full_mask();
    let mut seen = 1u32 << v;
    let mut frontier = seen;
    let mut dist = 0;
    loop {
        let mut next = 0;
        for w in BitIter(frontier) {
            next |= g.neighbors(w);
        }
        next &= !seen;
        if next == 0 {
            break;
        }
        seen |= next;
        frontier = next;
        dist += 1;
    }
    if seen != full {
        return Err(Error::NotConnected);
    }
    Ok(dist)
}

pub fn radius(g: &Graph) -> Result<usize> {
    if g.order() == 0 {
        return Err(Error::NotConnected);
    }
    (0..g.order()).map(|v| eccentricity(g, v)).try_fold(usize::MAX, |acc, e| Ok(acc.min(e?)))
}

/// Vertices of degree `n - 1`, ascending.
pub fn universal_vertices(g: &Graph) -> Vec<usize> {
    let n = g.order();
    (0..n).filter(|&v| n >= 1 && g.degree(v) == n - 1).collect()
}

/// Brute force: `n >= 4` and deleting any two vertices leaves a connected graph.
pub fn is_three_connected(g: &Graph) -> bool {
    let n = g.order();
    if n < 4 {
        return false;
    }
    let full = g.full_mask();
    for u in 0..n {
        for v in u + 1..n {
            if !g.is_connected_within(full & !(1 << u) & !(1 << v)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn wheel_hub_first(p: usize) -> Graph {
        let mut g = Graph::new(p).unwrap();
        let rim = p - 1;
        for i in 0..rim {
            g.add_edge(0, i + 1);
            g.add_edge(i + 1, (i + 1) % rim + 1);
        }
        g
    }

    #[test]
    fn degree_sequences() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(degree_sequence(&k4).degrees(), &[3, 3, 3, 3]);
        let w7 = wheel_hub_first(7);
        assert_eq!(degree_sequence(&w7).degrees(), &[6, 3, 3, 3, 3, 3, 3]);
        // apex 4 over the 4-cycle with chord 0-2
        let mut g = Graph::cycle(5).unwrap();
        g.remove_edge(3, 4);
        g.remove_edge(4, 0);
        g.add_edge(3, 0);
        for v in 0..4 {
            g.add_edge(4, v);
        }
        g.add_edge(0, 2);
        assert_eq!(degree_sequence(&g).degrees(), &[4, 4, 4, 3, 3]);
        assert_eq!(universal_vertices(&g), vec![0, 2, 4]);
    }

    #[test]
    fn radius_and_eccentricity() {
        let k4 = Graph::complete(4).unwrap();
        for v in 0..4 {
            assert_eq!(eccentricity(&k4, v).unwrap(), 1);
        }
        assert_eq!(radius(&k4).unwrap(), 1);
        assert_eq!(radius(&Graph::cycle(6).unwrap()).unwrap(), 3);
        assert_eq!(radius(&wheel_hub_first(9)).unwrap(), 1);
        let two = Graph::new(2).unwrap();
        assert!(matches!(radius(&two), Err(Error::NotConnected)));
    }

    #[test]
    fn universal() {
        assert_eq!(universal_vertices(&Graph::complete(4).unwrap()), vec![0, 1, 2, 3]);
        assert_eq!(universal_vertices(&wheel_hub_first(7)), vec![0]);
        assert!(universal_vertices(&Graph::cycle(5).unwrap()).is_empty());
    }

    #[test]
    fn three_connectivity() {
        assert!(is_three_connected(&Graph::complete(4).unwrap()));
        assert!(!is_three_connected(&Graph::cycle(5).unwrap()));
        assert!(is_three_connected(&wheel_hub_first(8)));
        assert!(!is_three_connected(&Graph::complete(3).unwrap()));
        // wheel minus a spoke is only 2-connected at the spoke's rim vertex
        assert!(!is_three_connected(&wheel_hub_first(8).without_edge(0, 3)));
    }

    #[test]
    fn edges_and_induced() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]).unwrap();
        assert_eq!(g.size(), 6);
        assert_eq!(g.edges().count(), 6);
        assert_eq!(g.non_edges().count(), 4);
        let (h, map) = g.remove_vertex(0);
        assert_eq!(map, vec![1, 2, 3, 4]);
        assert_eq!(h.size(), 4);
        assert!(h.has_edge(0, 2));
        assert!(g.is_well_formed());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::new(25).is_err());
    }

    #[test]
    fn sequence_parsing() {
        let s: DegreeSequence = "3,4,3,4,4".parse().unwrap();
        assert_eq!(s.degrees(), &[4, 4, 4, 3, 3]);
        assert_eq!(s.edge_count(), 9);
        assert!("3,3,3".parse::<DegreeSequence>().is_err());
        assert!("3,x".parse::<DegreeSequence>().is_err());
    }
}
