//! Noncrossing chord diagrams on a labelled cycle.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An `n`-cycle on `0..n` together with a set of pairwise noncrossing chords.
/// Chords are stored as `(i, j)` with `i < j`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram {
    n: usize,
    chords: Vec<(u8, u8)>,
}

impl ChordDiagram {
    pub fn new(n: usize, chords: &[(usize, usize)]) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidDiagram(format!("cycle length {n} below 3")));
        }
        if n + 1 > crate::graph::MAX_ORDER {
            return Err(Error::OrderTooLarge(n + 1));
        }
        let mut list = Vec::with_capacity(chords.len());
        for &(a, b) in chords {
            let (i, j) = (a.min(b), a.max(b));
            if j >= n || i == j {
                return Err(Error::InvalidDiagram(format!("chord {a}-{b} out of range")));
            }
            if j - i == 1 || (i == 0 && j == n - 1) {
                return Err(Error::InvalidDiagram(format!("{a}-{b} is a cycle edge")));
            }
            list.push((i as u8, j as u8));
        }
        list.sort_unstable();
        if list.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidDiagram("duplicate chord".into()));
        }
        let d = ChordDiagram { n, chords: list };
        if !d.is_noncrossing() {
            return Err(Error::InvalidDiagram("crossing chords".into()));
        }
        Ok(d)
    }

    pub(crate) fn from_sorted_unchecked(n: usize, chords: Vec<(u8, u8)>) -> Self {
        ChordDiagram { n, chords }
    }

    pub fn cycle_len(&self) -> usize {
        self.n
    }

    pub fn chords(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.chords.iter().map(|&(a, b)| (a as usize, b as usize))
    }

    pub fn chord_count(&self) -> usize {
        self.chords.len()
    }

    fn is_noncrossing(&self) -> bool {
        let c: Vec<(usize, usize)> = self.chords().collect();
        crate::outerplanar::chords_noncrossing(&c)
    }

    /// Image under `v -> (sign * v + shift) mod n`, re-sorted.
    fn transformed(&self, reflect: bool, shift: usize, buf: &mut Vec<(u8, u8)>) {
        let n = self.n;
        buf.clear();
        buf.extend(self.chords.iter().map(|&(a, b)| {
            let map = |v: u8| {
                let v = v as usize;
                let r = if reflect { (n - v) % n } else { v };
                ((r + shift) % n) as u8
            };
            let (x, y) = (map(a), map(b));
            (x.min(y), x.max(y))
        }));
        buf.sort_unstable();
    }

    /// Whether no rotation or reflection of the cycle gives a
    /// lexicographically smaller chord list.
    pub fn is_dihedral_minimal(&self) -> bool {
        let mut buf = Vec::with_capacity(self.chords.len());
        for reflect in [false, true] {
            for shift in 0..self.n {
                if !reflect && shift == 0 {
                    continue;
                }
                self.transformed(reflect, shift, &mut buf);
                if buf < self.chords {
                    return false;
                }
            }
        }
        true
    }

    /// Smallest chord list among all rotations and reflections.
    pub fn dihedral_normal_form(&self) -> ChordDiagram {
        let mut best = self.chords.clone();
        let mut buf = Vec::with_capacity(self.chords.len());
        for reflect in [false, true] {
            for shift in 0..self.n {
                self.transformed(reflect, shift, &mut buf);
                if buf < best {
                    best.clone_from(&buf);
                }
            }
        }
        ChordDiagram { n: self.n, chords: best }
    }

    /// Degree of each cycle vertex in the chord graph.
    pub fn chord_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for (a, b) in self.chords() {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    /// The cycle plus chords, on `n` vertices.
    pub fn outerplanar_graph(&self) -> Graph {
        let mut g = Graph::cycle(self.n).expect("order checked at construction");
        for (a, b) in self.chords() {
            g.add_edge(a, b);
        }
        g
    }
}

/// Constraint on the chord-degree multiset, used to prune the walk.
#[derive(Clone, Debug)]
pub struct DegreeTarget {
    /// `counts[d]` vertices must end with chord degree `d`.
    counts: Vec<usize>,
    max_degree: usize,
}

impl DegreeTarget {
    pub fn new(chord_degrees: &[usize]) -> Self {
        let max_degree = chord_degrees.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0; max_degree + 1];
        for &d in chord_degrees {
            counts[d] += 1;
        }
        DegreeTarget { counts, max_degree }
    }
}

/// Visits every noncrossing chord set of the `n`-cycle exactly once.
///
/// Vertices are processed in increasing order; at vertex `v` the walk picks a
/// set of chords `(v, j)`, `j > v`. A chord `(v, j)` crosses an earlier chord
/// `(a, b)` iff `a < v < b < j`, so `j` is capped by the nearest `b` above
/// `v` among chords spanning it. Vertex `v` is final once the walk moves on,
/// which lets a [`DegreeTarget`] prune by degree multiset.
pub fn for_each_diagram<F>(n: usize, target: Option<&DegreeTarget>, mut visit: F)
where
    F: FnMut(&[(u8, u8)]),
{
    if n < 3 {
        return;
    }
    let mut walk = Walk {
        n,
        target,
        chords: Vec::new(),
        degree: vec![0; n],
        used: target.map(|t| vec![0; t.counts.len()]).unwrap_or_default(),
    };
    walk.vertex(0, &mut visit);
}

struct Walk<'a> {
    n: usize,
    target: Option<&'a DegreeTarget>,
    chords: Vec<(u8, u8)>,
    degree: Vec<usize>,
    used: Vec<usize>,
}

impl Walk<'_> {
    /// Upper bound for the far endpoint of chords leaving `v`.
    fn cap(&self, v: usize) -> usize {
        let mut cap = if v == 0 { self.n - 2 } else { self.n - 1 };
        for &(a, b) in &self.chords {
            let (a, b) = (a as usize, b as usize);
            if a < v && v < b && b < cap {
                cap = b;
            }
        }
        cap
    }

    fn vertex<F: FnMut(&[(u8, u8)])>(&mut self, v: usize, visit: &mut F) {
        if v == self.n {
            visit(&self.chords);
            return;
        }
        let cap = self.cap(v);
        self.choose(v, v + 2, cap, visit);
    }

    /// Chooses the remaining chords `(v, j)` with `j >= from`.
    fn choose<F: FnMut(&[(u8, u8)])>(&mut self, v: usize, from: usize, cap: usize, visit: &mut F) {
        // stop adding at v: v becomes final
        if self.finalise(v) {
            self.vertex(v + 1, visit);
            self.unfinalise(v);
        }
        for j in from..=cap {
            if let Some(t) = self.target {
                if self.degree[v] + 1 > t.max_degree || self.degree[j] + 1 > t.max_degree {
                    continue;
                }
            }
            self.chords.push((v as u8, j as u8));
            self.degree[v] += 1;
            self.degree[j] += 1;
            self.choose(v, j + 1, cap, visit);
            self.degree[v] -= 1;
            self.degree[j] -= 1;
            self.chords.pop();
        }
    }

    fn finalise(&mut self, v: usize) -> bool {
        match self.target {
            None => true,
            Some(t) => {
                let d = self.degree[v];
                if d < t.counts.len() && self.used[d] < t.counts[d] {
                    self.used[d] += 1;
                    true
                } else {
                    false
                }
            }
        }
    }

    fn unfinalise(&mut self, v: usize) {
        if self.target.is_some() {
            self.used[self.degree[v]] -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over all subsets of admissible chords.
    fn brute_count(n: usize) -> usize {
        let all: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 2..n).map(move |j| (i, j))).filter(|&(i, j)| !(i == 0 && j == n - 1)).collect();
        (0u64..1 << all.len())
            .filter(|mask| {
                let pick: Vec<_> = (0..all.len()).filter(|k| mask >> k & 1 == 1).map(|k| all[k]).collect();
                crate::outerplanar::chords_noncrossing(&pick)
            })
            .count()
    }

    #[test]
    fn walk_matches_subset_brute_force() {
        for n in 3..=8 {
            let mut count = 0;
            for_each_diagram(n, None, |c| {
                let pairs: Vec<_> = c.iter().map(|&(a, b)| (a as usize, b as usize)).collect();
                assert!(ChordDiagram::new(n, &pairs).is_ok());
                count += 1;
            });
            assert_eq!(count, brute_count(n), "n = {n}");
        }
    }

    #[test]
    fn dissection_counts() {
        // dissections of an n-gon: 1, 3, 11, 45, 197 for n = 3..7
        let counts: Vec<usize> = (3..=7)
            .map(|n| {
                let mut c = 0;
                for_each_diagram(n, None, |_| c += 1);
                c
            })
            .collect();
        assert_eq!(counts, vec![1, 3, 11, 45, 197]);
    }

    #[test]
    fn degree_target_prunes_exactly() {
        let n = 7;
        let target = DegreeTarget::new(&[2, 1, 1, 0, 0, 0, 0]);
        let mut pruned = Vec::new();
        for_each_diagram(n, Some(&target), |c| pruned.push(c.to_vec()));
        let mut filtered = Vec::new();
        for_each_diagram(n, None, |c| {
            let d = ChordDiagram::from_sorted_unchecked(n, c.to_vec());
            let mut degs = d.chord_degrees();
            degs.sort_unstable_by(|a, b| b.cmp(a));
            if degs == [2, 1, 1, 0, 0, 0, 0] {
                filtered.push(c.to_vec());
            }
        });
        assert_eq!(pruned, filtered);
        assert!(!pruned.is_empty());
    }

    #[test]
    fn validation() {
        assert!(ChordDiagram::new(4, &[(0, 2)]).is_ok());
        assert!(ChordDiagram::new(4, &[(0, 1)]).is_err());
        assert!(ChordDiagram::new(4, &[(0, 3)]).is_err());
        assert!(ChordDiagram::new(6, &[(0, 3), (1, 4)]).is_err());
        assert!(ChordDiagram::new(6, &[(0, 2), (2, 0)]).is_err());
        assert!(ChordDiagram::new(2, &[]).is_err());
    }

    #[test]
    fn dihedral_forms() {
        let a = ChordDiagram::new(6, &[(2, 4)]).unwrap();
        let b = ChordDiagram::new(6, &[(1, 5)]).unwrap();
        assert_eq!(a.dihedral_normal_form(), b.dihedral_normal_form());
        assert_eq!(a.dihedral_normal_form().chords().collect::<Vec<_>>(), vec![(0, 2)]);
        assert!(!a.is_dihedral_minimal());
        assert!(ChordDiagram::new(6, &[(0, 2)]).unwrap().is_dihedral_minimal());
    }
}
