//! Apex / outer cycle / chord graph decomposition of a radius-one polytope,
//! and checkers for the structural properties of its chord graph.

use std::collections::BTreeMap;

use crate::canon::canonical_code;
use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::graph::{universal_vertices, BitIter, DegreeSequence, Graph};
use crate::outerplanar::{is_outerplanar_2connected, is_radius_one_polytope, HamiltonianCertificate};
use crate::sequences::group_by_sequence;

/// `F = apex + H + G`: the apex is universal, `H` is the outer cycle of
/// `F - apex`, and the chord graph `G` holds the remaining edges.
///
/// `chord_graph` and `h_cycle` use the labels of `F - apex`, i.e. `F`'s
/// labels with the apex removed and higher labels shifted down; `vertices`
/// maps them back.
#[derive(Clone, Debug)]
pub struct StructureDecomposition {
    pub apex: usize,
    pub h_cycle: Vec<usize>,
    pub chord_graph: Graph,
    pub vertices: Vec<usize>,
    /// Number of degree-3 vertices of `F`.
    pub a: usize,
    /// Degree sequence of the chord graph.
    pub s_prime: DegreeSequence,
}

impl StructureDecomposition {
    pub fn isolated_count(&self) -> usize {
        (0..self.chord_graph.order()).filter(|&v| self.chord_graph.degree(v) == 0).count()
    }
}

pub fn count_degree_three(g: &Graph) -> usize {
    (0..g.order()).filter(|&v| g.degree(v) == 3).count()
}

/// Splits `g` at `apex`, or at a deterministic universal vertex when none is
/// given (the one whose chord graph has the smallest canonical code).
pub fn decompose(g: &Graph, apex: Option<usize>) -> Result<StructureDecomposition> {
    if !is_radius_one_polytope(g) {
        return Err(Error::NotRadiusOnePolytope);
    }
    let universal = universal_vertices(g);
    match apex {
        Some(v) if universal.contains(&v) => decompose_at(g, v),
        Some(v) => Err(Error::NotUniversal(v)),
        None => {
            let mut best: Option<(crate::canon::CanonicalCode, StructureDecomposition)> = None;
            for v in universal {
                let d = decompose_at(g, v)?;
                let code = canonical_code(&d.chord_graph);
                if best.as_ref().is_none_or(|(c, _)| code < *c) {
                    best = Some((code, d));
                }
            }
            Ok(best.expect("a polytope of radius 1 has a universal vertex").1)
        }
    }
}

/// Decompositions for every universal vertex, ascending by apex.
pub fn decompose_all(g: &Graph) -> Result<Vec<StructureDecomposition>> {
    if !is_radius_one_polytope(g) {
        return Err(Error::NotRadiusOnePolytope);
    }
    universal_vertices(g).into_iter().map(|v| decompose_at(g, v)).collect()
}

fn decompose_at(g: &Graph, apex: usize) -> Result<StructureDecomposition> {
    let (base, vertices) = g.remove_vertex(apex);
    let cert = is_outerplanar_2connected(&base).ok_or(Error::NotRadiusOnePolytope)?;
    let mut chord_graph = base;
    let k = cert.order.len();
    for i in 0..k {
        chord_graph.remove_edge(cert.order[i], cert.order[(i + 1) % k]);
    }
    let s_prime = crate::graph::degree_sequence(&chord_graph);
    Ok(StructureDecomposition { apex, h_cycle: cert.order, chord_graph, vertices, a: count_degree_three(g), s_prime })
}

/// `counts[i]` = number of 2-connected blocks of the chord graph bounded by
/// an `i`-cycle. Bridges are not counted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BlockProfile {
    pub counts: BTreeMap<usize, usize>,
}

impl BlockProfile {
    /// `sum over i of (i - 2) * counts[i]`.
    pub fn weighted_excess(&self) -> usize {
        self.counts.iter().map(|(&i, &c)| (i - 2) * c).sum()
    }

    pub fn block_count(&self) -> usize {
        self.counts.values().sum()
    }
}

/// Vertex sets of the blocks of `g` with at least three vertices.
pub fn cyclic_blocks(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut st =
        BlockSearch { g, disc: vec![usize::MAX; n], low: vec![0; n], time: 0, edges: Vec::new(), blocks: Vec::new() };
    for v in 0..n {
        if st.disc[v] == usize::MAX {
            st.visit(v, usize::MAX);
        }
    }
    st.blocks.retain(|b| b.count_ones() >= 3);
    st.blocks.sort_unstable();
    st.blocks
}

struct BlockSearch<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    edges: Vec<(usize, usize)>,
    blocks: Vec<u32>,
}

impl BlockSearch<'_> {
    fn visit(&mut self, v: usize, parent: usize) {
        self.disc[v] = self.time;
        self.low[v] = self.time;
        self.time += 1;
        for w in BitIter(self.g.neighbors(v)) {
            if self.disc[w] == usize::MAX {
                self.edges.push((v, w));
                self.visit(w, v);
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    let mut block = 0u32;
                    while let Some((a, b)) = self.edges.pop() {
                        block |= 1 << a | 1 << b;
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[v] {
                self.edges.push((v, w));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
    }
}

/// Block profile of a chord graph. Each cyclic block must be outerplanar
/// with outer cycle equal to its vertices taken in `h_cycle` order.
pub fn block_cycle_profile(chord_graph: &Graph, h_cycle: &[usize]) -> Result<BlockProfile> {
    let mut pos = vec![usize::MAX; chord_graph.order()];
    for (i, &v) in h_cycle.iter().enumerate() {
        if v < pos.len() {
            pos[v] = i;
        }
    }
    let mut profile = BlockProfile::default();
    for block in cyclic_blocks(chord_graph) {
        let (sub, labels) = chord_graph.induced(block);
        let cert = is_outerplanar_2connected(&sub).ok_or(Error::NonOuterplanarBlock)?;
        if !matches_cyclic_order(&cert, &labels, &pos) {
            return Err(Error::NonOuterplanarBlock);
        }
        *profile.counts.entry(labels.len()).or_default() += 1;
    }
    Ok(profile)
}

/// The certificate visits the block in the same cyclic order as `H`, in one
/// direction or the other.
fn matches_cyclic_order(cert: &HamiltonianCertificate, labels: &[usize], pos: &[usize]) -> bool {
    let seq: Vec<usize> = cert.order.iter().map(|&i| pos[labels[i]]).collect();
    if seq.contains(&usize::MAX) {
        return false;
    }
    let k = seq.len();
    let descents = |s: &[usize]| (0..k).filter(|&i| s[i] > s[(i + 1) % k]).count();
    let rev: Vec<usize> = seq.iter().rev().copied().collect();
    descents(&seq) == 1 || descents(&rev) == 1
}

/// `a >= 2 + sum (i - 2) B_G(i)` for every choice of universal apex.
pub fn check_lemma_block_inequality(g: &Graph) -> Result<bool> {
    let all = decompose_all(g)?;
    if all.iter().any(|d| d.chord_graph.size() == 0) {
        return Err(Error::PyramidInput);
    }
    for d in &all {
        let profile = block_cycle_profile(&d.chord_graph, &d.h_cycle)?;
        if d.a < 2 + profile.weighted_excess() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Acyclic, and every tree is a path once its leaves are removed.
pub fn is_caterpillar_forest(g: &Graph) -> bool {
    let comps = g.components();
    if g.size() + comps.len() != g.order() {
        return false;
    }
    comps.into_iter().all(|comp| {
        let spine = BitIter(comp).filter(|&v| g.degree(v) >= 2).fold(0u32, |m, v| m | 1 << v);
        BitIter(spine).all(|v| (g.neighbors(v) & spine).count_ones() <= 2)
    })
}

/// Exactly one cycle, it is a triangle, and the graph minus its isolated
/// vertices is connected with exactly `isolated` isolated vertices removed.
pub fn is_triangle_unicyclic(g: &Graph, isolated: usize) -> bool {
    let comps = g.components();
    if g.size() + comps.len() != g.order() + 1 {
        return false;
    }
    let blocks = cyclic_blocks(g);
    if blocks.len() != 1 || blocks[0].count_ones() != 3 {
        return false;
    }
    let lone = (0..g.order()).filter(|&v| g.degree(v) == 0).fold(0u32, |m, v| m | 1 << v);
    lone.count_ones() as usize == isolated && g.is_connected_within(g.full_mask() & !lone)
}

#[derive(Clone, Debug, Default)]
pub struct StructureReport {
    pub p: usize,
    /// Unigraphic sequences examined, with their degree-3 count.
    pub checked: Vec<(DegreeSequence, usize)>,
    pub violations: Vec<String>,
}

impl StructureReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For each unigraphic sequence of order `p`: with two degree-3 vertices the
/// chord graph is a caterpillar forest; with three and `p >= 8` it has one
/// cycle, a triangle, and is connected apart from its three isolated
/// vertices. Every universal apex is tried.
pub fn check_unigraphic_structure(catalog: &Catalog, p: usize) -> Result<StructureReport> {
    if !catalog.coverage().order_complete(p) {
        return Err(Error::IncompleteCatalog(format!("order p={p}")));
    }
    let mut report = StructureReport { p, ..Default::default() };
    for group in group_by_sequence(catalog.of_order(p)) {
        if !group.unigraphic {
            continue;
        }
        let a = group.seq.count_of(3);
        if a != 2 && !(a == 3 && p >= 8) {
            continue;
        }
        let record = catalog
            .cell(group.p, group.q)
            .iter()
            .find(|r| r.code == group.realisations[0])
            .expect("group built from this catalog");
        for d in decompose_all(&record.graph)? {
            let ok =
                if a == 2 { is_caterpillar_forest(&d.chord_graph) } else { is_triangle_unicyclic(&d.chord_graph, 3) };
            if !ok {
                report
                    .violations
                    .push(format!("{} (a={a}) apex {}: chord graph {:?}", group.seq, d.apex, d.chord_graph));
            }
        }
        report.checked.push((group.seq.clone(), a));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chord::ChordDiagram;
    use crate::enumerate::{apex_graph, wheel};

    fn apex(n: usize, chords: &[(usize, usize)]) -> Graph {
        apex_graph(&ChordDiagram::new(n, chords).unwrap()).unwrap()
    }

    #[test]
    fn decompose_wheel() {
        let d = decompose(&wheel(7).unwrap(), None).unwrap();
        assert_eq!(d.apex, 6);
        assert_eq!(d.h_cycle.len(), 6);
        assert_eq!(d.chord_graph.size(), 0);
        assert_eq!(d.a, 6);
    }

    #[test]
    fn decompose_single_chord() {
        let g = apex(4, &[(0, 2)]);
        let d = decompose(&g, Some(4)).unwrap();
        assert_eq!(d.chord_graph.size(), 1);
        assert_eq!(d.isolated_count(), 2);
        assert_eq!(d.a, 2);
        assert_eq!(d.s_prime.degrees(), &[1, 1, 0, 0]);
        // the other universal vertices give the same shape
        for d in decompose_all(&g).unwrap() {
            assert_eq!(d.s_prime.degrees(), &[1, 1, 0, 0]);
        }
    }

    #[test]
    fn decompose_triangle() {
        let g = apex(6, &[(0, 2), (2, 4), (0, 4)]);
        let d = decompose(&g, None).unwrap();
        assert_eq!(d.a, 3);
        assert_eq!(d.isolated_count(), 3);
        assert_eq!(d.chord_graph.size(), 3);
        let profile = block_cycle_profile(&d.chord_graph, &d.h_cycle).unwrap();
        assert_eq!(profile.counts, BTreeMap::from([(3, 1)]));
        assert!(check_lemma_block_inequality(&g).unwrap());
        assert!(is_triangle_unicyclic(&d.chord_graph, 3));
    }

    #[test]
    fn decompose_errors() {
        assert!(matches!(decompose(&Graph::cycle(6).unwrap(), None), Err(Error::NotRadiusOnePolytope)));
        let g = apex(4, &[(0, 2)]);
        assert!(matches!(decompose(&g, Some(1)), Err(Error::NotUniversal(1))));
        assert!(matches!(check_lemma_block_inequality(&wheel(6).unwrap()), Err(Error::PyramidInput)));
    }

    #[test]
    fn counting_threes() {
        assert_eq!(count_degree_three(&Graph::complete(4).unwrap()), 4);
        assert_eq!(count_degree_three(&apex(4, &[(0, 2)])), 2);
        assert_eq!(count_degree_three(&apex(6, &[(0, 2), (2, 4), (0, 4)])), 3);
    }

    #[test]
    fn profiles() {
        let forest = Graph::from_edges(6, &[(0, 2), (0, 3), (4, 1)]).unwrap();
        assert!(block_cycle_profile(&forest, &[0, 1, 2, 3, 4, 5]).unwrap().counts.is_empty());
        // two triangles on a 9-cycle: {0,2,4} and {5,7,0}? use {0,2,4} and {4,6,8}
        let g = apex(9, &[(0, 2), (2, 4), (0, 4), (4, 6), (6, 8), (4, 8)]);
        let d = decompose(&g, Some(9)).unwrap();
        let profile = block_cycle_profile(&d.chord_graph, &d.h_cycle).unwrap();
        assert_eq!(profile.counts, BTreeMap::from([(3, 2)]));
        assert_eq!(profile.weighted_excess(), 2);
        assert!(check_lemma_block_inequality(&g).unwrap());
        // a pentagon block of a 10-cycle
        let g = apex(10, &[(0, 2), (2, 4), (4, 6), (6, 8), (0, 8)]);
        let d = decompose(&g, Some(10)).unwrap();
        let profile = block_cycle_profile(&d.chord_graph, &d.h_cycle).unwrap();
        assert_eq!(profile.counts, BTreeMap::from([(5, 1)]));
    }

    #[test]
    fn lemma_is_tight_for_single_chord() {
        let g = apex(4, &[(0, 2)]);
        assert!(check_lemma_block_inequality(&g).unwrap());
        let d = decompose(&g, Some(4)).unwrap();
        assert_eq!(d.a, 2 + block_cycle_profile(&d.chord_graph, &d.h_cycle).unwrap().weighted_excess());
    }

    #[test]
    fn caterpillars() {
        // star with three leaves plus isolated vertices
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(is_caterpillar_forest(&star));
        // spider with three legs of length two
        let spider = Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
        assert!(!is_caterpillar_forest(&spider));
        assert!(!is_caterpillar_forest(&Graph::cycle(3).unwrap()));
        let path = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(is_caterpillar_forest(&path));
        assert!(is_caterpillar_forest(&Graph::new(4).unwrap()));
    }
}
