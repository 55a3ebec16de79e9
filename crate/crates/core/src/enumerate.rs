//! The two generators of radius-one polytopes and their cross-check.
//!
//! * Edge addition: every non-pyramid of size `q` arises from one of size
//!   `q - 1` by adding an edge, so level `q` is the closure of level `q - 1`
//!   plus the wheel when `q` is even.
//! * Chord diagrams: deleting a universal vertex leaves a cycle with
//!   noncrossing chords, so each order `p` is the image of all dissections of
//!   the `(p-1)`-gon under "add an apex".
//!
//! Both generators deduplicate by canonical code, which is authoritative.

use rayon::prelude::*;

use crate::canon::canonical_labelling;
use crate::catalog::{sort_dedup, Catalog, Coverage, PolytopeRecord};
use crate::chord::{for_each_diagram, ChordDiagram, DegreeTarget};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::outerplanar::is_radius_one_polytope;

/// Hub plus a `(p-1)`-cycle; the hub is vertex `p - 1`.
pub fn wheel(p: usize) -> Result<Graph> {
    if p < 4 {
        return Err(Error::WheelTooSmall(p));
    }
    apex_graph(&ChordDiagram::new(p - 1, &[])?)
}

/// Cycle `0..n` plus chords plus apex `n` joined to every cycle vertex.
pub fn apex_graph(d: &ChordDiagram) -> Result<Graph> {
    let n = d.cycle_len();
    let mut g = Graph::new(n + 1)?;
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, n);
    }
    for (a, b) in d.chords() {
        g.add_edge(a, b);
    }
    debug_assert!(is_radius_one_polytope(&g));
    Ok(g)
}

fn apex_graph_raw(n: usize, chords: &[(u8, u8)]) -> Graph {
    let mut g = Graph::new(n + 1).expect("order bounded by caller");
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, n);
    }
    for &(a, b) in chords {
        g.add_edge(a as usize, b as usize);
    }
    g
}

fn record_of(g: &Graph) -> PolytopeRecord {
    let (perm, code) = canonical_labelling(g);
    PolytopeRecord::from_canonical(g.permuted(&perm), code)
}

/// All radius-one polytopes of order `p`, code-sorted.
///
/// Only dihedrally minimal diagrams are canonicalised; that is a shortcut,
/// the code-based deduplication is what makes the output isomorphism-free.
pub fn enumerate_chord_diagrams(p: usize) -> Result<Vec<PolytopeRecord>> {
    chord_records(p, None)
}

/// Radius-one polytopes of order `p` whose chord graph has the given degree
/// multiset (one entry per cycle vertex, apex excluded).
pub(crate) fn chord_records(p: usize, target: Option<&DegreeTarget>) -> Result<Vec<PolytopeRecord>> {
    if !(4..=MAX_ORDER).contains(&p) {
        return Err(Error::OrderTooLarge(p));
    }
    let n = p - 1;
    let mut reps: Vec<Vec<(u8, u8)>> = Vec::new();
    for_each_diagram(n, target, |chords| {
        let d = ChordDiagram::from_sorted_unchecked(n, chords.to_vec());
        if d.is_dihedral_minimal() {
            reps.push(chords.to_vec());
        }
    });
    let mut records: Vec<PolytopeRecord> =
        reps.par_iter().map(|chords| record_of(&apex_graph_raw(n, chords))).collect();
    sort_dedup(&mut records);
    Ok(records)
}

/// Chord-diagram catalog for all orders `4..=p_max`.
pub fn chord_catalog(p_max: usize) -> Result<Catalog> {
    let mut all = Vec::new();
    for p in 4..=p_max {
        all.extend(enumerate_chord_diagrams(p)?);
    }
    Ok(Catalog::from_records(all, Coverage { max_size: None, max_order: Some(p_max) }))
}

/// Level `q` of the edge-addition closure from level `q - 1`.
pub fn next_level(parents: &[PolytopeRecord], q: usize) -> Vec<PolytopeRecord> {
    let mut children: Vec<PolytopeRecord> = parents
        .par_iter()
        .flat_map_iter(|parent| {
            let g = parent.graph;
            let mut local: Vec<PolytopeRecord> = g
                .non_edges()
                .map(|(u, v)| g.with_edge(u, v))
                .filter(is_radius_one_polytope)
                .map(|child| record_of(&child))
                .collect();
            sort_dedup(&mut local);
            local
        })
        .collect();
    if q.is_multiple_of(2) && q / 2 < MAX_ORDER {
        children.push(record_of(&wheel(q / 2 + 1).expect("q >= 6")));
    }
    sort_dedup(&mut children);
    children
}

/// Runs the level-wise closure from `(start_q, start_level)` through `q_max`,
/// handing each new level to `on_level`. With no start, begins at `{K4}`.
pub fn edge_addition_levels<F>(start: Option<(usize, Vec<PolytopeRecord>)>, q_max: usize, mut on_level: F) -> Result<()>
where
    F: FnMut(usize, &[PolytopeRecord]) -> Result<()>,
{
    let (mut q, mut level) = match start {
        Some(s) => s,
        None => {
            let k4 = vec![record_of(&wheel(4)?)];
            on_level(6, &k4)?;
            (6, k4)
        }
    };
    while q < q_max {
        q += 1;
        level = next_level(&level, q);
        on_level(q, &level)?;
    }
    Ok(())
}

/// Levels `6..=q_max` as a catalog.
pub fn enumerate_by_edge_addition(q_max: usize) -> Result<Catalog> {
    let mut all = Vec::new();
    edge_addition_levels(None, q_max, |_, level| {
        all.extend_from_slice(level);
        Ok(())
    })?;
    Ok(Catalog::from_records(all, Coverage { max_size: Some(q_max), max_order: None }))
}

#[derive(Clone, Debug)]
pub struct CrossValidationReport {
    pub p_max: usize,
    /// `(p, q, count)` for every non-empty cell, identical in both catalogs.
    pub agreeing: Vec<(usize, usize, usize)>,
    pub discrepancies: Vec<String>,
}

impl CrossValidationReport {
    pub fn ok(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Compares both generators cell by cell for all orders up to `p_max`.
pub fn cross_validate(p_max: usize) -> Result<CrossValidationReport> {
    let by_edges = enumerate_by_edge_addition(3 * p_max - 6)?;
    let by_chords = chord_catalog(p_max)?;
    Ok(compare_catalogs(&by_edges, &by_chords, p_max))
}

pub fn compare_catalogs(a: &Catalog, b: &Catalog, p_max: usize) -> CrossValidationReport {
    let mut agreeing = Vec::new();
    let mut discrepancies = Vec::new();
    for p in 4..=p_max {
        for q in 2 * (p - 1)..=3 * p - 6 {
            let ca: Vec<_> = a.cell(p, q).iter().map(|r| &r.code).collect();
            let cb: Vec<_> = b.cell(p, q).iter().map(|r| &r.code).collect();
            if ca == cb {
                if !ca.is_empty() {
                    agreeing.push((p, q, ca.len()));
                }
            } else {
                discrepancies.push(format!(
                    "cell p={p} q={q}: edge-addition {} codes {:?}, chord-diagram {} codes {:?}",
                    ca.len(),
                    ca.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    cb.len(),
                    cb.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                ));
            }
        }
    }
    CrossValidationReport { p_max, agreeing, discrepancies }
}
