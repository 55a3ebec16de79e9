//! On-disk catalog: one graph6 shard per `(p, q)` cell plus completion
//! markers per edge level and per order.
//!
//! Shard layout:
//!
//! ```text
//! #radpoly shard v1 p=9 q=21 count=12 digest=<sha256 of the body>
//! <graph6 of canonical form>
//! ...
//! ```

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::catalog::{in_band, sort_dedup, Catalog, Coverage, PolytopeRecord};
use crate::enumerate::{edge_addition_levels, enumerate_chord_diagrams};
use crate::error::{Error, Result};
use crate::graph::MAX_ORDER;
use crate::graph6;

pub const SHARD_VERSION: u32 = 1;
pub const DIR_ENV: &str = "RADPOLY_DIR";
pub const DEFAULT_DIR: &str = "radpoly-data";

/// The records of one `(p, q)` cell, code-sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogShard {
    pub p: usize,
    pub q: usize,
    pub records: Vec<PolytopeRecord>,
}

impl CatalogShard {
    fn body(&self) -> String {
        let mut body = String::new();
        for r in &self.records {
            body.push_str(&graph6::encode(&r.graph));
            body.push('\n');
        }
        body
    }
}

fn digest(body: &str) -> String {
    hex::encode(Sha256::digest(body.as_bytes()))
}

/// Writes `text` via a temporary sibling and a rename.
fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(text.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn write_shard(path: &Path, shard: &CatalogShard) -> Result<()> {
    debug_assert!(shard.records.windows(2).all(|w| w[0].code < w[1].code));
    let body = shard.body();
    let header = format!(
        "#radpoly shard v{SHARD_VERSION} p={} q={} count={} digest={}\n",
        shard.p,
        shard.q,
        shard.records.len(),
        digest(&body)
    );
    write_atomic(path, &(header + &body))
}

/// Parses `key=value` fields of a header line after the fixed prefix.
fn header_fields<'a>(line: &'a str, path: &Path) -> Result<BTreeMap<&'a str, &'a str>> {
    line.split_whitespace()
        .map(|f| {
            f.split_once('=')
                .ok_or_else(|| Error::CorruptShard { path: path.into(), reason: format!("bad header field {f:?}") })
        })
        .collect()
}

fn field<T: std::str::FromStr>(fields: &BTreeMap<&str, &str>, key: &str, path: &Path) -> Result<T> {
    fields
        .get(key)
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::CorruptShard { path: path.into(), reason: format!("missing or invalid {key}") })
}

/// Reads a shard, checking version, digest, count, cell membership, canonical
/// labelling and code order.
pub fn read_shard(path: &Path) -> Result<CatalogShard> {
    let text = fs::read_to_string(path)?;
    let corrupt = |reason: String| Error::CorruptShard { path: path.into(), reason };
    let (header, body) = text.split_once('\n').ok_or_else(|| corrupt("missing header line".into()))?;
    let rest = header.strip_prefix("#radpoly shard v").ok_or_else(|| corrupt("not a shard header".into()))?;
    let (version, rest) = rest.split_once(' ').unwrap_or((rest, ""));
    let version: u32 = version.parse().map_err(|_| corrupt(format!("bad version {version:?}")))?;
    if version != SHARD_VERSION {
        return Err(Error::ShardVersion(version));
    }
    let fields = header_fields(rest, path)?;
    let p: usize = field(&fields, "p", path)?;
    let q: usize = field(&fields, "q", path)?;
    let count: usize = field(&fields, "count", path)?;
    let expected: &str = fields.get("digest").ok_or_else(|| corrupt("missing digest".into()))?;
    if digest(body) != expected {
        return Err(corrupt("digest mismatch".into()));
    }
    let lines: Vec<&str> = body.lines().collect();
    if lines.len() != count {
        return Err(corrupt(format!("header count {count} but {} records", lines.len())));
    }
    let mut records = Vec::with_capacity(count);
    for (i, line) in lines.iter().enumerate() {
        let g = graph6::decode(line).map_err(|e| corrupt(format!("line {}: {e}", i + 2)))?;
        let r = PolytopeRecord::new(&g);
        if r.graph != g {
            return Err(corrupt(format!("line {}: graph not in canonical labelling", i + 2)));
        }
        if (r.p, r.q) != (p, q) {
            return Err(corrupt(format!("line {}: graph has p={} q={}", i + 2, r.p, r.q)));
        }
        records.push(r);
    }
    if !records.windows(2).all(|w| w[0].code < w[1].code) {
        return Err(corrupt("records not strictly sorted by code".into()));
    }
    Ok(CatalogShard { p, q, records })
}

/// Directory of shards and completion markers.
#[derive(Clone, Debug)]
pub struct ShardStore {
    dir: PathBuf,
}

impl ShardStore {
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(ShardStore { dir })
    }

    /// `$RADPOLY_DIR`, else `./radpoly-data`.
    pub fn default_dir() -> PathBuf {
        std::env::var_os(DIR_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(DEFAULT_DIR))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn shard_path(&self, p: usize, q: usize) -> PathBuf {
        self.dir.join(format!("shard-p{p:02}-q{q:02}.txt"))
    }

    fn level_marker(&self, q: usize) -> PathBuf {
        self.dir.join(format!("level-q{q:02}.done"))
    }

    fn order_marker(&self, p: usize) -> PathBuf {
        self.dir.join(format!("order-p{p:02}.done"))
    }

    /// Cell contents; an absent shard is an empty cell.
    pub fn read_cell(&self, p: usize, q: usize) -> Result<Vec<PolytopeRecord>> {
        let path = self.shard_path(p, q);
        if !path.exists() {
            return Ok(Vec::new());
        }
        Ok(read_shard(&path)?.records)
    }

    /// Writes one shard per non-empty `(p, q)` among `records`, then a marker
    /// listing them. Returns the number of shards written.
    fn write_group(&self, records: &[PolytopeRecord], marker: &Path, label: &str) -> Result<usize> {
        let mut cells: BTreeMap<(usize, usize), Vec<PolytopeRecord>> = BTreeMap::new();
        for r in records {
            cells.entry((r.p, r.q)).or_default().push(r.clone());
        }
        let mut manifest = format!("#radpoly {label} v{SHARD_VERSION} count={}\n", records.len());
        for (&(p, q), list) in &mut cells {
            sort_dedup(list);
            let path = self.shard_path(p, q);
            write_shard(&path, &CatalogShard { p, q, records: std::mem::take(list) })?;
            manifest.push_str(&format!("{}\n", path.file_name().unwrap().to_string_lossy()));
        }
        write_atomic(marker, &manifest)?;
        Ok(cells.len())
    }

    /// Highest `q` such that levels `6..=q` are all marked complete.
    pub fn complete_levels(&self) -> Option<usize> {
        (6..).take_while(|&q| self.level_marker(q).exists()).last()
    }

    /// Highest `p` such that orders `4..=p` are all marked complete.
    pub fn complete_orders(&self) -> Option<usize> {
        (4..=MAX_ORDER).take_while(|&p| self.order_marker(p).exists()).last()
    }

    pub fn coverage(&self) -> Coverage {
        Coverage { max_size: self.complete_levels(), max_order: self.complete_orders() }
    }

    fn read_level(&self, q: usize) -> Result<Vec<PolytopeRecord>> {
        let mut level = Vec::new();
        for p in 4..=MAX_ORDER {
            if in_band(p, q) {
                level.extend(self.read_cell(p, q)?);
            }
        }
        sort_dedup(&mut level);
        Ok(level)
    }

    /// Extends the edge-addition levels through `q_max`, resuming after the
    /// highest complete level on disk. Progress goes to `log`.
    pub fn extend_by_edges(&self, q_max: usize, log: &mut dyn Write) -> Result<()> {
        let start = match self.complete_levels() {
            Some(q) => {
                writeln!(log, "resuming after complete level q={q}")?;
                Some((q, self.read_level(q)?))
            }
            None => None,
        };
        edge_addition_levels(start, q_max, |q, level| {
            self.write_group(level, &self.level_marker(q), &format!("level q={q}"))?;
            writeln!(log, "level q={q}: {} polytopes", level.len())?;
            Ok(())
        })
    }

    /// Enumerates every order `4..=p_max` not yet marked complete.
    pub fn extend_by_chords(&self, p_max: usize, log: &mut dyn Write) -> Result<()> {
        for p in 4..=p_max {
            if self.order_marker(p).exists() {
                writeln!(log, "order p={p}: already complete")?;
                continue;
            }
            let records = enumerate_chord_diagrams(p)?;
            self.write_group(&records, &self.order_marker(p), &format!("order p={p}"))?;
            writeln!(log, "order p={p}: {} polytopes", records.len())?;
        }
        Ok(())
    }

    /// Writes a whole catalog and marks what its coverage states.
    pub fn write_catalog(&self, catalog: &Catalog) -> Result<()> {
        let cov = catalog.coverage();
        let records: Vec<PolytopeRecord> = catalog.records().cloned().collect();
        if let Some(s) = cov.max_size {
            for q in 6..=s {
                let level: Vec<_> = records.iter().filter(|r| r.q == q).cloned().collect();
                self.write_group(&level, &self.level_marker(q), &format!("level q={q}"))?;
            }
        }
        if let Some(o) = cov.max_order {
            for p in 4..=o {
                let order: Vec<_> = records.iter().filter(|r| r.p == p).cloned().collect();
                self.write_group(&order, &self.order_marker(p), &format!("order p={p}"))?;
            }
        }
        Ok(())
    }

    /// All shards in the directory, with coverage from the markers.
    pub fn load_catalog(&self) -> Result<Catalog> {
        let mut names: Vec<PathBuf> = fs::read_dir(&self.dir)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| {
                p.file_name().and_then(|n| n.to_str()).is_some_and(|n| n.starts_with("shard-") && n.ends_with(".txt"))
            })
            .collect();
        names.sort();
        let mut catalog = Catalog::new(self.coverage());
        for path in names {
            let shard = read_shard(&path)?;
            catalog.insert_cell(shard.p, shard.q, shard.records);
        }
        Ok(catalog)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_by_edge_addition;

    #[test]
    fn shard_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cat = enumerate_by_edge_addition(14).unwrap();
        let records = cat.cell(7, 14).to_vec();
        assert_eq!(records.len(), 3);
        let path = dir.path().join("s.txt");
        write_shard(&path, &CatalogShard { p: 7, q: 14, records: records.clone() }).unwrap();
        let back = read_shard(&path).unwrap();
        assert_eq!((back.p, back.q), (7, 14));
        assert_eq!(back.records, records);
    }

    #[test]
    fn damaged_shards_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let cat = enumerate_by_edge_addition(14).unwrap();
        let path = dir.path().join("s.txt");
        write_shard(&path, &CatalogShard { p: 7, q: 14, records: cat.cell(7, 14).to_vec() }).unwrap();
        let text = fs::read_to_string(&path).unwrap();

        fs::write(&path, &text[..text.len() - 3]).unwrap();
        let err = read_shard(&path).unwrap_err();
        assert!(err.to_string().contains("corrupt shard"), "{err}");

        fs::write(&path, text.replace("shard v1", "shard v2")).unwrap();
        assert!(matches!(read_shard(&path), Err(Error::ShardVersion(2))));

        fs::write(&path, text.replace("count=3", "count=4")).unwrap();
        assert!(matches!(read_shard(&path), Err(Error::CorruptShard { .. })));
    }

    #[test]
    fn resume_recomputes_only_missing_levels() {
        let dir = tempfile::tempdir().unwrap();
        let store = ShardStore::open(dir.path()).unwrap();
        let mut log = Vec::new();
        store.extend_by_edges(14, &mut log).unwrap();
        assert_eq!(store.complete_levels(), Some(14));
        let mut log = Vec::new();
        store.extend_by_edges(16, &mut log).unwrap();
        let log = String::from_utf8(log).unwrap();
        assert_eq!(log, "resuming after complete level q=14\nlevel q=15: 5 polytopes\nlevel q=16: 7 polytopes\n");
        let cat = store.load_catalog().unwrap();
        assert_eq!(cat.coverage().max_size, Some(16));
        assert_eq!(cat, enumerate_by_edge_addition(16).unwrap());
    }

    #[test]
    fn chord_orders_resume() {
        let dir = tempfile::tempdir().unwrap();
        let store = ShardStore::open(dir.path()).unwrap();
        store.extend_by_chords(6, &mut Vec::new()).unwrap();
        let mut log = Vec::new();
        store.extend_by_chords(7, &mut log).unwrap();
        assert!(String::from_utf8(log).unwrap().ends_with("order p=7: 9 polytopes\n"));
        assert_eq!(store.complete_orders(), Some(7));
        assert_eq!(store.load_catalog().unwrap().len(), 1 + 2 + 3 + 9);
    }
}
