//! Count tables: per size (polytopes, sequences, unigraphic sequences) and
//! per order and size (polytopes, with unigraphic ones in brackets).

use std::collections::BTreeMap;
use std::fmt::Write;
use std::ops::RangeInclusive;

use crate::catalog::{in_band, Catalog};
use crate::error::{Error, Result};
use crate::sequences::group_by_sequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub q: usize,
    pub n_polytopes: usize,
    pub n_sequences: usize,
    pub n_unigraphic_sequences: usize,
}

/// Count of a `(p, q)` cell and how many of its polytopes are unigraphic.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Cell {
    pub count: usize,
    pub unigraphic: usize,
}

impl Cell {
    /// `count(unigraphic)` when any are unigraphic, else `count`.
    pub fn render(&self) -> String {
        if self.unigraphic > 0 {
            format!("{}({})", self.count, self.unigraphic)
        } else {
            self.count.to_string()
        }
    }
}

pub fn table1(catalog: &Catalog, qs: RangeInclusive<usize>) -> Result<Vec<TableRow>> {
    if let Some(q) = qs.clone().find(|&q| !catalog.coverage().size_complete(q)) {
        return Err(Error::IncompleteCatalog(format!("level q={q}")));
    }
    Ok(qs
        .map(|q| {
            let groups = group_by_sequence(catalog.of_size(q));
            TableRow {
                q,
                n_polytopes: catalog.of_size(q).count(),
                n_sequences: groups.len(),
                n_unigraphic_sequences: groups.iter().filter(|g| g.unigraphic).count(),
            }
        })
        .collect())
}

pub fn emit_table1(catalog: &Catalog, qs: RangeInclusive<usize>) -> Result<String> {
    let mut out = String::from("edges,polytopes,sequences,unigraphic_sequences\n");
    for r in table1(catalog, qs)? {
        writeln!(out, "{},{},{},{}", r.q, r.n_polytopes, r.n_sequences, r.n_unigraphic_sequences).unwrap();
    }
    Ok(out)
}

/// Sizes spanned by orders `ps`.
pub fn size_span(ps: &RangeInclusive<usize>) -> RangeInclusive<usize> {
    2 * (ps.start() - 1)..=3 * ps.end() - 6
}

/// In-band cells for orders `ps`, keyed `(p, q)`.
pub fn table23(catalog: &Catalog, ps: RangeInclusive<usize>) -> Result<BTreeMap<(usize, usize), Cell>> {
    if *ps.start() < 4 {
        return Err(Error::InvalidSequence(format!("order range must start at 4 or above, got {}", ps.start())));
    }
    let cov = catalog.coverage();
    for q in size_span(&ps) {
        if ps.clone().any(|p| in_band(p, q) && !cov.covers(p, q)) {
            return Err(Error::IncompleteCatalog(format!("level q={q}")));
        }
    }
    let mut cells = BTreeMap::new();
    for p in ps {
        for q in 2 * (p - 1)..=3 * p - 6 {
            let records = catalog.cell(p, q);
            let unigraphic = group_by_sequence(records).iter().filter(|g| g.unigraphic).count();
            cells.insert((p, q), Cell { count: records.len(), unigraphic });
        }
    }
    Ok(cells)
}

/// One row per size, one column per order; out-of-band cells are blank.
pub fn emit_table23(catalog: &Catalog, ps: RangeInclusive<usize>) -> Result<String> {
    let cells = table23(catalog, ps.clone())?;
    let mut out = String::from("edges");
    for p in ps.clone() {
        write!(out, ",{p}").unwrap();
    }
    out.push('\n');
    for q in size_span(&ps) {
        out.push_str(&q.to_string());
        for p in ps.clone() {
            out.push(',');
            if let Some(c) = cells.get(&(p, q)) {
                out.push_str(&c.render());
            }
        }
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{chord_catalog, enumerate_by_edge_addition};

    #[test]
    fn small_table1() {
        let cat = enumerate_by_edge_addition(15).unwrap();
        let rows = table1(&cat, 6..=15).unwrap();
        let triples: Vec<_> = rows.iter().map(|r| (r.n_polytopes, r.n_sequences, r.n_unigraphic_sequences)).collect();
        assert_eq!(
            triples,
            vec![
                (1, 1, 1),
                (0, 0, 0),
                (1, 1, 1),
                (1, 1, 1),
                (1, 1, 1),
                (1, 1, 1),
                (2, 2, 2),
                (2, 1, 0),
                (4, 3, 2),
                (5, 4, 3)
            ]
        );
        let err = table1(&cat, 6..=16).unwrap_err().to_string();
        assert!(err.contains("level q=16"), "{err}");
    }

    #[test]
    fn small_table23() {
        let cat = chord_catalog(7).unwrap();
        let text = emit_table23(&cat, 4..=7).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "edges,4,5,6,7");
        assert_eq!(lines[1], "6,1(1),,,");
        assert_eq!(lines[2], "7,,,,");
        assert_eq!(lines[7], "12,,,1(1),1(1)");
        assert_eq!(lines[8], "13,,,,2");
        assert_eq!(lines[10], "15,,,,3(3)");
        assert!(emit_table23(&cat, 4..=8).is_err());
    }

    #[test]
    fn rows_and_cells_agree() {
        let cat = chord_catalog(9).unwrap();
        let cells = table23(&cat, 4..=9).unwrap();
        for row in table1(&cat, 6..=16).unwrap() {
            let count: usize = cells.iter().filter(|((_, q), _)| *q == row.q).map(|(_, c)| c.count).sum();
            assert_eq!(count, row.n_polytopes);
        }
    }
}
