//! Deduplicated collections of radius-one polytopes keyed by order and size.

use std::collections::BTreeMap;

use crate::canon::{canonical_labelling, CanonicalCode};
use crate::graph::{degree_sequence, DegreeSequence, Graph};

/// One isomorphism class. `graph` is stored in canonical labelling, so two
/// records are equal iff their codes are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeRecord {
    pub graph: Graph,
    pub code: CanonicalCode,
    pub p: usize,
    pub q: usize,
    pub seq: DegreeSequence,
}

impl PolytopeRecord {
    /// Canonicalises `g`. Membership in the class is not checked here.
    pub fn new(g: &Graph) -> Self {
        let (perm, code) = canonical_labelling(g);
        PolytopeRecord::from_canonical(g.permuted(&perm), code)
    }

    pub(crate) fn from_canonical(graph: Graph, code: CanonicalCode) -> Self {
        PolytopeRecord { p: graph.order(), q: graph.size(), seq: degree_sequence(&graph), graph, code }
    }
}

/// Sorts by code and drops repeats.
pub(crate) fn sort_dedup(records: &mut Vec<PolytopeRecord>) {
    records.sort_unstable_by(|a, b| a.code.cmp(&b.code));
    records.dedup_by(|a, b| a.code == b.code);
}

/// Which `(p, q)` cells a catalog holds completely: every cell with
/// `q <= max_size`, and every cell with `p <= max_order`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Coverage {
    pub max_size: Option<usize>,
    pub max_order: Option<usize>,
}

impl Coverage {
    pub fn covers(&self, p: usize, q: usize) -> bool {
        self.max_size.is_some_and(|s| q <= s) || self.max_order.is_some_and(|o| p <= o)
    }

    /// All polytopes of order `p` are present (their sizes stop at `3p - 6`).
    pub fn order_complete(&self, p: usize) -> bool {
        self.max_order.is_some_and(|o| p <= o) || self.max_size.is_some_and(|s| 3 * p <= s + 6)
    }

    /// All polytopes of size `q` are present (their orders stop at `q/2 + 1`).
    pub fn size_complete(&self, q: usize) -> bool {
        self.max_size.is_some_and(|s| q <= s) || self.max_order.is_some_and(|o| q / 2 < o)
    }

    pub fn union(self, other: Coverage) -> Coverage {
        Coverage { max_size: self.max_size.max(other.max_size), max_order: self.max_order.max(other.max_order) }
    }
}

/// Cell `(p, q)` can hold radius-one polytopes: `2(p-1) <= q <= 3p-6`.
pub fn in_band(p: usize, q: usize) -> bool {
    p >= 4 && 2 * (p - 1) <= q && q + 6 <= 3 * p
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Catalog {
    cells: BTreeMap<(usize, usize), Vec<PolytopeRecord>>,
    coverage: Coverage,
}

impl Catalog {
    pub fn new(coverage: Coverage) -> Self {
        Catalog { cells: BTreeMap::new(), coverage }
    }

    /// Builds a catalog from arbitrary records, deduplicating by code.
    pub fn from_records(records: impl IntoIterator<Item = PolytopeRecord>, coverage: Coverage) -> Self {
        let mut cat = Catalog::new(coverage);
        for r in records {
            cat.cells.entry((r.p, r.q)).or_default().push(r);
        }
        for list in cat.cells.values_mut() {
            sort_dedup(list);
        }
        cat
    }

    pub fn coverage(&self) -> Coverage {
        self.coverage
    }

    pub fn set_coverage(&mut self, coverage: Coverage) {
        self.coverage = coverage;
    }

    /// Replaces the contents of cell `(p, q)`; `records` must be code-sorted.
    pub fn insert_cell(&mut self, p: usize, q: usize, records: Vec<PolytopeRecord>) {
        debug_assert!(records.windows(2).all(|w| w[0].code < w[1].code));
        debug_assert!(records.iter().all(|r| r.p == p && r.q == q));
        if records.is_empty() {
            self.cells.remove(&(p, q));
        } else {
            self.cells.insert((p, q), records);
        }
    }

    pub fn cell(&self, p: usize, q: usize) -> &[PolytopeRecord] {
        self.cells.get(&(p, q)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Non-empty cells in `(p, q)` order.
    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), &[PolytopeRecord])> {
        self.cells.iter().map(|(&k, v)| (k, v.as_slice()))
    }

    pub fn records(&self) -> impl Iterator<Item = &PolytopeRecord> {
        self.cells.values().flatten()
    }

    pub fn of_order(&self, p: usize) -> impl Iterator<Item = &PolytopeRecord> {
        self.cells.range((p, 0)..(p + 1, 0)).flat_map(|(_, v)| v)
    }

    pub fn of_size(&self, q: usize) -> impl Iterator<Item = &PolytopeRecord> {
        self.cells.iter().filter(move |((_, cq), _)| *cq == q).flat_map(|(_, v)| v)
    }

    pub fn len(&self) -> usize {
        self.cells.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Union of two catalogs; coverage is the union of both.
    pub fn merge(&mut self, other: Catalog) {
        self.coverage = self.coverage.union(other.coverage);
        for (key, mut list) in other.cells {
            let entry = self.cells.entry(key).or_default();
            entry.append(&mut list);
            sort_dedup(entry);
        }
    }

    /// Restriction to orders `p <= max_order`.
    pub fn restrict_orders(&self, max_order: usize) -> Catalog {
        Catalog {
            cells: self.cells.range(..(max_order + 1, 0)).map(|(&k, v)| (k, v.clone())).collect(),
            coverage: Coverage {
                max_size: None,
                max_order: (1..=max_order).rev().find(|&p| self.coverage.order_complete(p)),
            },
        }
    }
}
