//! Degree-sequence analysis: the closed-form unigraphic families for two and
//! three degree-3 vertices, realisation search, and the set-equality check
//! between enumeration and the family lists.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::canon::CanonicalCode;
use crate::catalog::{Catalog, PolytopeRecord};
use crate::chord::{ChordDiagram, DegreeTarget};
use crate::enumerate::{apex_graph, chord_records};
use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, MAX_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    A1,
    A2,
    A3,
    A4,
    B1,
    C1,
    D1,
    /// The exceptional `5,4,4,3,3,3`.
    E1,
    /// The exceptional `6,5,5,5,3,3,3`.
    E2,
    Pyramid,
    None,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 10] = [
        FamilyTag::A1,
        FamilyTag::A2,
        FamilyTag::A3,
        FamilyTag::A4,
        FamilyTag::B1,
        FamilyTag::C1,
        FamilyTag::D1,
        FamilyTag::E1,
        FamilyTag::E2,
        FamilyTag::Pyramid,
    ];

    pub fn takes_x(self) -> bool {
        matches!(self, FamilyTag::A3 | FamilyTag::A4 | FamilyTag::B1)
    }

    /// Number of degree-3 vertices in every member; `None` for pyramids.
    pub fn threes(self) -> Option<usize> {
        match self {
            FamilyTag::A1 | FamilyTag::A2 | FamilyTag::A3 | FamilyTag::A4 => Some(2),
            FamilyTag::B1 | FamilyTag::C1 | FamilyTag::D1 | FamilyTag::E1 | FamilyTag::E2 => Some(3),
            FamilyTag::Pyramid | FamilyTag::None => None,
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.to_ascii_uppercase();
        FamilyTag::ALL
            .into_iter()
            .chain([FamilyTag::None])
            .find(|t| t.to_string().to_ascii_uppercase() == up)
            .ok_or_else(|| Error::FamilyParameters { family: s.into(), condition: "unknown family tag".into() })
    }
}

/// A family member: tag, order `p`, and parameter `x` for A3, A4 and B1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyClass {
    pub tag: FamilyTag,
    pub p: usize,
    pub x: Option<usize>,
}

impl FamilyClass {
    pub fn new(tag: FamilyTag, p: usize, x: Option<usize>) -> Result<Self> {
        let fc = FamilyClass { tag, p, x };
        fc.validate()?;
        Ok(fc)
    }

    fn violation(&self, condition: &str) -> Error {
        Error::FamilyParameters { family: self.to_string(), condition: condition.into() }
    }

    /// Checks the side conditions of the family.
    pub fn validate(&self) -> Result<()> {
        let p = self.p;
        if p > MAX_ORDER {
            return Err(self.violation("p <= 24"));
        }
        let x = match (self.tag.takes_x(), self.x) {
            (true, Some(x)) => x,
            (true, None) => return Err(self.violation("parameter x required")),
            (false, Some(_)) => return Err(self.violation("family takes no parameter x")),
            (false, None) => 0,
        };
        let check = |ok: bool, cond: &str| if ok { Ok(()) } else { Err(self.violation(cond)) };
        match self.tag {
            FamilyTag::A1 => {
                check(p >= 5, "p >= 5")?;
                check(p % 2 == 1, "p odd")
            }
            FamilyTag::A2 => check(p >= 8, "p >= 8"),
            FamilyTag::A3 => {
                check(p >= 6, "p >= 6")?;
                check(x >= 2, "x >= 2")?;
                check((p - 5).is_multiple_of(x - 1), "(p-5)/(x-1) integral")
            }
            FamilyTag::A4 => {
                check(p >= 8, "p >= 8")?;
                check((p - 1) / 2 <= x && x <= p - 5, "floor((p-1)/2) <= x <= p-5")
            }
            FamilyTag::B1 => {
                check(p >= 10, "p >= 10")?;
                check(3 <= x && x <= (p - 4) / 2, "3 <= x <= floor((p-4)/2)")
            }
            FamilyTag::C1 => check(p >= 8, "p >= 8"),
            FamilyTag::D1 => {
                check(p >= 12, "p >= 12")?;
                check(p.is_multiple_of(4), "p = 0 mod 4")
            }
            FamilyTag::E1 => check(p == 6, "p = 6"),
            FamilyTag::E2 => check(p == 7, "p = 7"),
            FamilyTag::Pyramid => check(p >= 4, "p >= 4"),
            FamilyTag::None => Err(self.violation("tag None has no sequence")),
        }
    }

    /// Admissible `x` values for order `p` (empty for parameterless tags).
    fn x_range(tag: FamilyTag, p: usize) -> Vec<usize> {
        match tag {
            FamilyTag::A3 => (2..=p.max(2)).filter(|&x| p >= 5 && (p - 5).is_multiple_of(x - 1)).collect(),
            FamilyTag::A4 if p >= 5 => ((p - 1) / 2..=p - 5).collect(),
            FamilyTag::B1 if p >= 4 => (3..=(p - 4) / 2).collect(),
            _ => Vec::new(),
        }
    }

    /// Every valid member of `tag` at order `p`.
    pub fn members(tag: FamilyTag, p: usize) -> Vec<FamilyClass> {
        let candidates: Vec<Option<usize>> =
            if tag.takes_x() { Self::x_range(tag, p).into_iter().map(Some).collect() } else { vec![None] };
        candidates.into_iter().filter_map(|x| FamilyClass::new(tag, p, x).ok()).collect()
    }
}

impl fmt::Display for FamilyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} p={}", self.tag, self.p)?;
        if let Some(x) = self.x {
            write!(f, " x={x}")?;
        }
        Ok(())
    }
}

/// Expands a family member into its degree sequence.
pub fn family_sequence(fc: &FamilyClass) -> Result<DegreeSequence> {
    fc.validate()?;
    let p = fc.p;
    let x = fc.x.unwrap_or(0);
    let mut d: Vec<usize> = vec![p - 1];
    let mut rep = |value: usize, count: usize| d.extend(std::iter::repeat_n(value, count));
    match fc.tag {
        FamilyTag::A1 => {
            rep(4, p - 3);
            rep(3, 2);
        }
        FamilyTag::A2 => {
            rep(p - 3, 1);
            rep(4, p - 4);
            rep(3, 2);
        }
        FamilyTag::A3 => {
            let k = (p - 5) / (x - 1);
            rep(x + 3, k);
            rep(4, k * (x - 2) + 2);
            rep(3, 2);
        }
        FamilyTag::A4 => {
            rep(x + 3, 1);
            rep(p - x, 1);
            rep(4, p - 5);
            rep(3, 2);
        }
        FamilyTag::B1 => {
            rep(x + 3, 2);
            // printed as p-1-2x+3
            rep(p + 2 - 2 * x, 1);
            rep(4, p - 7);
            rep(3, 3);
        }
        FamilyTag::C1 => {
            rep(6, 1);
            rep(5, p - 6);
            rep(4, 1);
            rep(3, 3);
        }
        FamilyTag::D1 => {
            rep(p / 4 + 3, 4);
            rep(4, p - 8);
            rep(3, 3);
        }
        FamilyTag::E1 => {
            rep(4, 2);
            rep(3, 3);
        }
        FamilyTag::E2 => {
            rep(5, 3);
            rep(3, 3);
        }
        FamilyTag::Pyramid => rep(3, p - 1),
        FamilyTag::None => unreachable!("rejected by validate"),
    }
    debug_assert_eq!(d.len(), p);
    DegreeSequence::new(d.into_iter().map(|v| v as u8).collect())
}

/// Every family member whose expansion equals `s`.
pub fn classify_sequence(s: &DegreeSequence) -> Vec<FamilyClass> {
    let p = s.len();
    FamilyTag::ALL
        .into_iter()
        .flat_map(|tag| FamilyClass::members(tag, p))
        .filter(|fc| family_sequence(fc).is_ok_and(|t| &t == s))
        .collect()
}

/// The families whose members have exactly `a` degree-3 vertices, at order `p`.
pub fn theorem_families(a: usize, p: usize) -> Vec<FamilyClass> {
    FamilyTag::ALL.into_iter().filter(|t| t.threes() == Some(a)).flat_map(|tag| FamilyClass::members(tag, p)).collect()
}

/// All radius-one polytopes with degree sequence `s`, code-sorted.
pub fn realize_sequence(s: &DegreeSequence) -> Result<Vec<PolytopeRecord>> {
    let p = s.len();
    let d = s.degrees();
    if !(4..=MAX_ORDER).contains(&p) || d[0] as usize != p - 1 || d.iter().any(|&v| v < 3 || v as usize > p - 1) {
        return Ok(Vec::new());
    }
    let chord_degrees: Vec<usize> = d[1..].iter().map(|&v| v as usize - 3).collect();
    let target = DegreeTarget::new(&chord_degrees);
    let mut found = chord_records(p, Some(&target))?;
    found.retain(|r| &r.seq == s);
    Ok(found)
}

/// Cycle layout under construction: vertices in cyclic order plus the
/// chord-graph edges between them.
#[derive(Default)]
struct Layout {
    cycle: Vec<usize>,
    edges: Vec<(usize, usize)>,
    count: usize,
}

impl Layout {
    fn vertex(&mut self) -> usize {
        self.count += 1;
        self.count - 1
    }

    fn vertices(&mut self, k: usize) -> Vec<usize> {
        (0..k).map(|_| self.vertex()).collect()
    }

    /// Star edges from `centre` to each of `leaves`.
    fn star(&mut self, centre: usize, leaves: &[usize]) {
        self.edges.extend(leaves.iter().map(|&l| (centre, l)));
    }

    fn diagram(&self) -> Result<ChordDiagram> {
        debug_assert_eq!(self.cycle.len(), self.count);
        let mut pos = vec![0; self.count];
        for (i, &v) in self.cycle.iter().enumerate() {
            pos[v] = i;
        }
        let chords: Vec<(usize, usize)> = self.edges.iter().map(|&(a, b)| (pos[a], pos[b])).collect();
        ChordDiagram::new(self.cycle.len(), &chords)
    }
}

/// Caterpillar with the given spine degrees plus two isolated vertices, in
/// zigzag: spine vertices alternate between the two arcs between the
/// isolated vertices, and each spine vertex's leaves sit on the opposite arc
/// between its spine neighbours.
fn caterpillar_layout(spine_degrees: &[usize]) -> Layout {
    let mut l = Layout::default();
    let len = spine_degrees.len();
    let spine = l.vertices(len);
    let (b1, b2) = (l.vertex(), l.vertex());
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for (i, &x) in spine_degrees.iter().enumerate() {
        let spine_nbrs = if len == 1 {
            0
        } else if i == 0 || i == len - 1 {
            1
        } else {
            2
        };
        let leaves = l.vertices(x - spine_nbrs);
        l.star(spine[i], &leaves);
        if i + 1 < len {
            l.edges.push((spine[i], spine[i + 1]));
        }
        let (own, opposite) = if i % 2 == 0 { (&mut top, &mut bottom) } else { (&mut bottom, &mut top) };
        own.push(spine[i]);
        opposite.extend(leaves);
    }
    l.cycle.push(b1);
    l.cycle.extend(top);
    l.cycle.push(b2);
    l.cycle.extend(bottom.into_iter().rev());
    l
}

/// A chord diagram realising the family member.
pub fn family_diagram(fc: &FamilyClass) -> Result<ChordDiagram> {
    fc.validate()?;
    let p = fc.p;
    let x = fc.x.unwrap_or(0);
    let layout = match fc.tag {
        FamilyTag::A1 => {
            // nested matching between two isolated vertices
            let mut l = Layout::default();
            let k = (p - 3) / 2;
            let (b1, b2) = (l.vertex(), l.vertex());
            let left = l.vertices(k);
            let right = l.vertices(k);
            l.edges.extend(left.iter().zip(&right).map(|(&a, &b)| (a, b)));
            l.cycle.push(b1);
            l.cycle.extend(&left);
            l.cycle.push(b2);
            l.cycle.extend(right.iter().rev());
            l
        }
        FamilyTag::A2 => {
            let mut l = Layout::default();
            let (b1, c, y1, b2, y2) = (l.vertex(), l.vertex(), l.vertex(), l.vertex(), l.vertex());
            let leaves = l.vertices(p - 6);
            l.star(c, &leaves);
            l.edges.push((y1, y2));
            l.cycle.extend([b1, c, y1, b2, y2]);
            l.cycle.extend(leaves);
            l
        }
        FamilyTag::A3 => caterpillar_layout(&vec![x; (p - 5) / (x - 1)]),
        FamilyTag::A4 => caterpillar_layout(&[x, p - 3 - x]),
        FamilyTag::B1 => triangle_with_stars(x - 2, x - 2, p - 3 - 2 * x),
        FamilyTag::D1 => {
            // triangle u v w plus c hanging off u; cyclic order
            // c b1 Lc u Lw b2 w Lv b3 v Lu
            let t = p / 4;
            let mut l = Layout::default();
            let (u, v, w, c) = (l.vertex(), l.vertex(), l.vertex(), l.vertex());
            let (b1, b2, b3) = (l.vertex(), l.vertex(), l.vertex());
            l.edges.extend([(u, v), (v, w), (w, u), (u, c)]);
            let leaves_u = l.vertices(t - 3);
            let leaves_v = l.vertices(t - 2);
            let leaves_w = l.vertices(t - 2);
            let leaves_c = l.vertices(t - 1);
            l.star(u, &leaves_u);
            l.star(v, &leaves_v);
            l.star(w, &leaves_w);
            l.star(c, &leaves_c);
            l.cycle.extend([c, b1]);
            l.cycle.extend(leaves_c);
            l.cycle.push(u);
            l.cycle.extend(leaves_w);
            l.cycle.extend([b2, w]);
            l.cycle.extend(leaves_v);
            l.cycle.extend([b3, v]);
            l.cycle.extend(leaves_u);
            l
        }
        FamilyTag::C1 => {
            let mut l = Layout::default();
            let (u, b1, v, b2, w) = (l.vertex(), l.vertex(), l.vertex(), l.vertex(), l.vertex());
            let arc = l.vertices(p - 6);
            l.edges.extend([(u, v), (v, w), (w, u)]);
            // zigzag path from u across the arc w..u; one arc vertex stays isolated
            let (mut lo, mut hi) = (0, arc.len() - 1);
            let mut prev = u;
            for step in 0..p - 7 {
                let next = if step % 2 == 0 {
                    lo += 1;
                    arc[lo - 1]
                } else {
                    hi -= 1;
                    arc[hi + 1]
                };
                l.edges.push((prev, next));
                prev = next;
            }
            l.cycle.extend([u, b1, v, b2, w]);
            l.cycle.extend(arc);
            l
        }
        FamilyTag::E1 => return ChordDiagram::new(5, &[(0, 2)]),
        FamilyTag::E2 => return ChordDiagram::new(6, &[(0, 2), (2, 4), (0, 4)]),
        FamilyTag::Pyramid => return ChordDiagram::new(p - 1, &[]),
        FamilyTag::None => unreachable!("rejected by validate"),
    };
    layout.diagram()
}

/// Triangle `u v w` with `lu`, `lv`, `lw` leaves on its corners, each arc of
/// the cycle opened by an isolated vertex.
fn triangle_with_stars(lu: usize, lv: usize, lw: usize) -> Layout {
    let mut l = Layout::default();
    let (u, v, w) = (l.vertex(), l.vertex(), l.vertex());
    let (b1, b2, b3) = (l.vertex(), l.vertex(), l.vertex());
    l.edges.extend([(u, v), (v, w), (w, u)]);
    let leaves_u = l.vertices(lu);
    let leaves_v = l.vertices(lv);
    let leaves_w = l.vertices(lw);
    l.star(u, &leaves_u);
    l.star(v, &leaves_v);
    l.star(w, &leaves_w);
    l.cycle.extend([u, b1]);
    l.cycle.extend(leaves_u);
    l.cycle.extend([v, b2]);
    l.cycle.extend(leaves_v);
    l.cycle.extend([w, b3]);
    l.cycle.extend(leaves_w);
    l
}

/// Builds the family member directly and checks it against the sequence
/// and against exhaustive realisation.
pub fn realize_family(fc: &FamilyClass) -> Result<PolytopeRecord> {
    let expected = family_sequence(fc)?;
    let record = PolytopeRecord::new(&apex_graph(&family_diagram(fc)?)?);
    if record.seq != expected {
        return Err(Error::Construction(format!("{fc}: built {} but expected {expected}", record.seq)));
    }
    let all = realize_sequence(&expected)?;
    if all.len() != 1 || all[0].code != record.code {
        return Err(Error::Construction(format!(
            "{fc}: {expected} has {} realisations, construction {}",
            all.len(),
            if all.iter().any(|r| r.code == record.code) { "among them" } else { "not among them" }
        )));
    }
    Ok(record)
}

/// Realisations of one degree sequence within a catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceGroup {
    pub seq: DegreeSequence,
    pub p: usize,
    pub q: usize,
    pub realisations: Vec<CanonicalCode>,
    pub unigraphic: bool,
}

/// Groups records by degree sequence, ordered by `(q, p, sequence)`.
pub fn group_by_sequence<'a>(records: impl IntoIterator<Item = &'a PolytopeRecord>) -> Vec<SequenceGroup> {
    let mut map: BTreeMap<(usize, usize, DegreeSequence), Vec<CanonicalCode>> = BTreeMap::new();
    for r in records {
        map.entry((r.q, r.p, r.seq.clone())).or_default().push(r.code.clone());
    }
    map.into_iter()
        .map(|((q, p, seq), mut realisations)| {
            realisations.sort_unstable();
            realisations.dedup();
            let unigraphic = realisations.len() == 1;
            SequenceGroup { seq, p, q, realisations, unigraphic }
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub a: usize,
    pub p: usize,
    /// Unigraphic sequences of order `p` with exactly `a` threes.
    pub enumerated: BTreeSet<DegreeSequence>,
    /// Family expansions at order `p`, with the members producing each.
    pub predicted: BTreeMap<DegreeSequence, Vec<FamilyClass>>,
}

impl TheoremReport {
    pub fn missing(&self) -> Vec<&DegreeSequence> {
        self.predicted.keys().filter(|s| !self.enumerated.contains(*s)).collect()
    }

    pub fn unexpected(&self) -> Vec<&DegreeSequence> {
        self.enumerated.iter().filter(|s| !self.predicted.contains_key(*s)).collect()
    }

    pub fn ok(&self) -> bool {
        self.enumerated.len() == self.predicted.len() && self.missing().is_empty()
    }
}

/// Compares the enumerated unigraphic sequences with exactly `a` threes at
/// order `p` against the family list for `a` (2 or 3).
pub fn verify_theorem(a: usize, p: usize, catalog: &Catalog) -> Result<TheoremReport> {
    if a != 2 && a != 3 {
        return Err(Error::InvalidSequence(format!("theorem check needs a = 2 or 3, got {a}")));
    }
    if p < 5 {
        return Err(Error::InvalidSequence(format!("theorem check needs p >= 5, got {p}")));
    }
    if !catalog.coverage().order_complete(p) {
        return Err(Error::IncompleteCatalog(format!("order p={p}")));
    }
    let enumerated = group_by_sequence(catalog.of_order(p))
        .into_iter()
        .filter(|g| g.unigraphic && g.seq.count_of(3) == a)
        .map(|g| g.seq)
        .collect();
    let mut predicted: BTreeMap<DegreeSequence, Vec<FamilyClass>> = BTreeMap::new();
    for fc in theorem_families(a, p) {
        predicted.entry(family_sequence(&fc)?).or_default().push(fc);
    }
    Ok(TheoremReport { a, p, enumerated, predicted })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(d: &[u8]) -> DegreeSequence {
        DegreeSequence::new(d.to_vec()).unwrap()
    }

    fn fc(tag: FamilyTag, p: usize, x: Option<usize>) -> FamilyClass {
        FamilyClass::new(tag, p, x).unwrap()
    }

    #[test]
    fn expansions() {
        assert_eq!(family_sequence(&fc(FamilyTag::A1, 7, None)).unwrap(), seq(&[6, 4, 4, 4, 4, 3, 3]));
        assert_eq!(family_sequence(&fc(FamilyTag::B1, 10, Some(3))).unwrap(), seq(&[9, 6, 6, 6, 4, 4, 4, 3, 3, 3]));
        assert_eq!(family_sequence(&fc(FamilyTag::D1, 12, None)).unwrap(), seq(&[11, 6, 6, 6, 6, 4, 4, 4, 4, 3, 3, 3]));
        assert_eq!(family_sequence(&fc(FamilyTag::A3, 6, Some(2))).unwrap(), seq(&[5, 5, 4, 4, 3, 3]));
        assert_eq!(family_sequence(&fc(FamilyTag::C1, 8, None)).unwrap(), seq(&[7, 6, 5, 5, 4, 3, 3, 3]));
        assert_eq!(family_sequence(&fc(FamilyTag::A4, 8, Some(3))).unwrap(), seq(&[7, 6, 5, 4, 4, 4, 3, 3]));
    }

    #[test]
    fn side_conditions() {
        assert!(FamilyClass::new(FamilyTag::A1, 6, None).is_err());
        assert!(FamilyClass::new(FamilyTag::A4, 8, Some(4)).is_err());
        assert!(FamilyClass::new(FamilyTag::A3, 8, Some(3)).is_err());
        assert!(FamilyClass::new(FamilyTag::A3, 9, Some(3)).is_ok());
        assert!(FamilyClass::new(FamilyTag::B1, 10, Some(4)).is_err());
        assert!(FamilyClass::new(FamilyTag::D1, 14, None).is_err());
        assert!(FamilyClass::new(FamilyTag::A3, 9, None).is_err());
        assert!(FamilyClass::new(FamilyTag::C1, 9, Some(1)).is_err());
        let err = FamilyClass::new(FamilyTag::A2, 7, None).unwrap_err().to_string();
        assert!(err.contains("p >= 8"), "{err}");
    }

    #[test]
    fn classification() {
        assert_eq!(classify_sequence(&seq(&[6, 4, 4, 4, 4, 3, 3])), vec![fc(FamilyTag::A1, 7, None)]);
        assert_eq!(classify_sequence(&seq(&[5, 4, 4, 3, 3, 3])), vec![fc(FamilyTag::E1, 6, None)]);
        assert_eq!(classify_sequence(&seq(&[3, 3, 3, 3])), vec![fc(FamilyTag::Pyramid, 4, None)]);
        assert!(classify_sequence(&seq(&[8, 6, 5, 4, 4, 4, 3, 3, 3])).is_empty());
    }

    #[test]
    fn realisation_counts() {
        assert_eq!(realize_sequence(&seq(&[4, 4, 4, 3, 3])).unwrap().len(), 1);
        assert_eq!(realize_sequence(&seq(&[6, 3, 3, 3, 3, 3, 3])).unwrap().len(), 1);
        assert!(realize_sequence(&seq(&[8, 6, 5, 4, 4, 4, 3, 3, 3])).unwrap().len() >= 2);
        assert!(realize_sequence(&seq(&[9, 9, 9, 9])).unwrap().is_empty());
    }

    #[test]
    fn constructions() {
        let e2 = realize_family(&fc(FamilyTag::E2, 7, None)).unwrap();
        assert_eq!(e2.seq, seq(&[6, 5, 5, 5, 3, 3, 3]));
        let c1 = realize_family(&fc(FamilyTag::C1, 8, None)).unwrap();
        assert_eq!(c1.seq, seq(&[7, 6, 5, 5, 4, 3, 3, 3]));
        let a1 = realize_family(&fc(FamilyTag::A1, 5, None)).unwrap();
        assert_eq!((a1.p, a1.q), (5, 9));
    }

    #[test]
    fn tag_parsing() {
        assert_eq!("a3".parse::<FamilyTag>().unwrap(), FamilyTag::A3);
        assert_eq!("Pyramid".parse::<FamilyTag>().unwrap(), FamilyTag::Pyramid);
        assert!("Z9".parse::<FamilyTag>().is_err());
    }
}
