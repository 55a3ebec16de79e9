//! Recognition of 2-connected outerplanar graphs through their outer cycle,
//! and the radius-one polytope predicate built on it.

use crate::graph::{universal_vertices, BitIter, Graph};

/// Cyclic vertex order of the outer face of a 2-connected outerplanar graph.
/// Every edge not on the cycle is a chord, and no two chords cross.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianCertificate {
    pub order: Vec<usize>,
}

impl HamiltonianCertificate {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Position of each vertex along the cycle.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Edges of `g` that are not cycle edges, as position pairs `(i, j)`
    /// with `i < j`, sorted.
    pub fn chords(&self, g: &Graph) -> Vec<(usize, usize)> {
        let pos = self.positions();
        let n = self.order.len();
        let mut out: Vec<(usize, usize)> = g
            .edges()
            .map(|(u, v)| {
                let (a, b) = (pos[u], pos[v]);
                (a.min(b), a.max(b))
            })
            .filter(|&(a, b)| b - a != 1 && !(a == 0 && b == n - 1))
            .collect();
        out.sort_unstable();
        out
    }
}

/// `{a, b}` and `{c, d}` (each ordered) interleave around the cycle.
#[inline]
pub fn chords_cross((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

pub fn chords_noncrossing(chords: &[(usize, usize)]) -> bool {
    chords.iter().enumerate().all(|(i, &x)| chords[i + 1..].iter().all(|&y| !chords_cross(x, y)))
}

/// Returns the outer cycle if `g` is 2-connected and outerplanar.
///
/// Backtracking search for Hamiltonian cycles through vertex 0, accepting the
/// first one whose remaining edges are pairwise noncrossing chords.
pub fn is_outerplanar_2connected(g: &Graph) -> Option<HamiltonianCertificate> {
    let n = g.order();
    if n < 3 {
        return None;
    }
    let m = g.size();
    if m < n || m > 2 * n - 3 {
        return None;
    }
    if (0..n).any(|v| g.degree(v) < 2) {
        return None;
    }
    let mut search = HamSearch { g, n, path: Vec::with_capacity(n), found: None };
    search.path.push(0);
    search.extend(1);
    search.found
}

struct HamSearch<'a> {
    g: &'a Graph,
    n: usize,
    path: Vec<usize>,
    found: Option<HamiltonianCertificate>,
}

impl HamSearch<'_> {
    fn extend(&mut self, visited: u32) -> bool {
        let g = self.g;
        let end = *self.path.last().unwrap();
        if self.path.len() == self.n {
            // each cycle is met in both directions; keep one
            if !g.has_edge(end, 0) || self.path[1] > end {
                return false;
            }
            let cert = HamiltonianCertificate { order: self.path.clone() };
            if chords_noncrossing(&cert.chords(g)) {
                self.found = Some(cert);
                return true;
            }
            return false;
        }
        let unvisited = g.full_mask() & !visited;
        // every unvisited vertex still needs two usable neighbours
        let open = unvisited | 1 | (1 << end);
        for w in BitIter(unvisited) {
            if (g.neighbors(w) & open).count_ones() < 2 {
                return false;
            }
        }
        if g.neighbors(0) & (unvisited | (1 << end)) == 0 {
            return false;
        }
        for next in BitIter(g.neighbors(end) & unvisited) {
            self.path.push(next);
            if self.extend(visited | 1 << next) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

/// Whether `g` is a 3-polytope (planar, 3-connected) of graph radius 1:
/// some universal vertex `v` leaves a 2-connected outerplanar `g - v`.
pub fn is_radius_one_polytope(g: &Graph) -> bool {
    g.order() >= 4
        && universal_vertices(g).into_iter().any(|v| is_outerplanar_2connected(&g.remove_vertex(v).0).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn apex_over(base: &Graph) -> Graph {
        let n = base.order();
        let mut g = Graph::new(n + 1).unwrap();
        for (u, v) in base.edges() {
            g.add_edge(u, v);
        }
        for v in 0..n {
            g.add_edge(n, v);
        }
        g
    }

    #[test]
    fn cycle_is_its_own_certificate() {
        let c5 = Graph::cycle(5).unwrap();
        let cert = is_outerplanar_2connected(&c5).unwrap();
        assert_eq!(cert.order, vec![0, 1, 2, 3, 4]);
        assert!(cert.chords(&c5).is_empty());
    }

    #[test]
    fn k4_is_not_outerplanar() {
        assert!(is_outerplanar_2connected(&Graph::complete(4).unwrap()).is_none());
    }

    #[test]
    fn fan_chords_from_zero() {
        let g = Graph::cycle(6).unwrap().with_edge(0, 2).with_edge(0, 3);
        let cert = is_outerplanar_2connected(&g).unwrap();
        assert_eq!(cert.order, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(cert.chords(&g), vec![(0, 2), (0, 3)]);
    }

    #[test]
    fn non_2connected_rejected() {
        // two triangles sharing a vertex
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert!(is_outerplanar_2connected(&g).is_none());
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(is_outerplanar_2connected(&path).is_none());
    }

    #[test]
    fn crossing_chords_rejected() {
        let base = Graph::cycle(6).unwrap().with_edge(0, 3).with_edge(1, 4);
        assert!(is_outerplanar_2connected(&base).is_none());
        assert!(!is_radius_one_polytope(&apex_over(&base)));
    }

    #[test]
    fn radius_one_membership() {
        assert!(is_radius_one_polytope(&Graph::complete(4).unwrap()));
        let octahedron = Graph::from_edges(
            6,
            &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)],
        )
        .unwrap();
        assert!(!is_radius_one_polytope(&octahedron));
        assert!(!is_radius_one_polytope(&Graph::complete(5).unwrap()));
        assert!(is_radius_one_polytope(&apex_over(&Graph::cycle(9).unwrap())));
    }

    #[test]
    fn crossing_predicate() {
        assert!(chords_cross((0, 3), (1, 4)));
        assert!(chords_cross((1, 4), (0, 3)));
        assert!(!chords_cross((0, 2), (0, 4)));
        assert!(!chords_cross((0, 5), (1, 4)));
        assert!(!chords_cross((0, 2), (2, 4)));
    }
}
