use proptest::prelude::*;

use radpoly::catalog::PolytopeRecord;
use radpoly::enumerate::{apex_graph, chord_catalog};
use radpoly::oracle::{brute_force_code, is_radius_one_polytope_oracle};
use radpoly::outerplanar::{is_outerplanar_2connected, is_radius_one_polytope};
use radpoly::sequences::{classify_sequence, family_sequence, realize_sequence, FamilyClass, FamilyTag};
use radpoly::tables::table1;
use radpoly::{canonical_code, canonical_form, graph6, ChordDiagram, DegreeSequence, Graph};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n).unwrap();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        g.add_edge(i, j);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Greedily keeps the candidate chords that fit, in order.
fn diagram_from(n: usize, candidates: &[(usize, usize)]) -> ChordDiagram {
    let mut kept: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in candidates {
        let (a, b) = (a % n, b % n);
        let mut trial = kept.clone();
        trial.push((a, b));
        if ChordDiagram::new(n, &trial).is_ok() {
            kept = trial;
        }
    }
    ChordDiagram::new(n, &kept).unwrap()
}

fn diagram_strategy(min_n: usize, max_n: usize) -> impl Strategy<Value = ChordDiagram> {
    (min_n..=max_n, proptest::collection::vec((0usize..64, 0usize..64), 0..40))
        .prop_map(|(n, cands)| diagram_from(n, &cands))
}

proptest! {
    #[test]
    fn canonical_code_ignores_labels(
        (g, perm) in graph_strategy(14).prop_flat_map(|g| { let n = g.order(); (Just(g), permutation(n)) })
    ) {
        prop_assert_eq!(canonical_code(&g), canonical_code(&g.permuted(&perm)));
        prop_assert_eq!(canonical_code(&canonical_form(&g)), canonical_code(&g));
    }

    #[test]
    fn canonical_code_decides_isomorphism(a in graph_strategy(7), b in graph_strategy(7)) {
        let same_fast = canonical_code(&a) == canonical_code(&b);
        let same_slow = brute_force_code(&a).unwrap() == brute_force_code(&b).unwrap();
        prop_assert_eq!(same_fast, same_slow);
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(24)) {
        let text = graph6::encode(&g);
        prop_assert_eq!(text.len(), 1 + (g.order() * g.order().saturating_sub(1) / 2).div_ceil(6));
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }

    #[test]
    fn apex_over_any_diagram_is_a_member(d in diagram_strategy(3, 16)) {
        let g = apex_graph(&d).unwrap();
        prop_assert!(is_radius_one_polytope(&g));
        prop_assert_eq!(g.size(), 2 * d.cycle_len() + d.chord_count());
        prop_assert!(is_outerplanar_2connected(&d.outerplanar_graph()).is_some());
    }

    #[test]
    fn membership_agrees_with_oracle(d in diagram_strategy(3, 8), flips in proptest::collection::vec((0usize..9, 0usize..9), 0..3)) {
        let mut g = apex_graph(&d).unwrap();
        let n = g.order();
        for (u, v) in flips {
            let (u, v) = (u % n, v % n);
            if u != v {
                g = if g.has_edge(u, v) { g.without_edge(u, v) } else { g.with_edge(u, v) };
            }
        }
        prop_assert_eq!(is_radius_one_polytope(&g), is_radius_one_polytope_oracle(&g).unwrap());
    }

    #[test]
    fn dihedral_images_share_a_normal_form(d in diagram_strategy(3, 14), shift in 0usize..14, reflect: bool) {
        let n = d.cycle_len();
        let map = |v: usize| (if reflect { (n - v) % n } else { v } + shift) % n;
        let image: Vec<(usize, usize)> = d.chords().map(|(a, b)| (map(a), map(b))).collect();
        let e = ChordDiagram::new(n, &image).unwrap();
        prop_assert_eq!(d.dihedral_normal_form(), e.dihedral_normal_form());
        prop_assert_eq!(
            canonical_code(&apex_graph(&d).unwrap()),
            canonical_code(&apex_graph(&e).unwrap())
        );
    }

    #[test]
    fn sequence_text_round_trip(mut d in proptest::collection::vec(0u8..30, 1..20)) {
        if d.iter().map(|&v| v as usize).sum::<usize>() % 2 == 1 {
            d.push(1);
        }
        let s = DegreeSequence::new(d).unwrap();
        prop_assert_eq!(s.to_string().parse::<DegreeSequence>().unwrap(), s.clone());
        prop_assert!(s.degrees().windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn realisations_have_the_sequence(d in diagram_strategy(3, 9)) {
        let r = PolytopeRecord::new(&apex_graph(&d).unwrap());
        let found = realize_sequence(&r.seq).unwrap();
        prop_assert!(found.iter().all(|x| x.seq == r.seq));
        prop_assert!(found.iter().any(|x| x.code == r.code));
    }
}

#[test]
fn every_family_member_classifies_back() {
    for p in 4..=24 {
        for tag in FamilyTag::ALL {
            for fc in FamilyClass::members(tag, p) {
                let s = family_sequence(&fc).unwrap();
                assert_eq!(s.len(), p);
                assert_eq!(s.degrees()[0] as usize, p - 1);
                assert!(classify_sequence(&s).contains(&fc), "{fc}: {s}");
            }
        }
    }
}

#[test]
fn table_rows_are_ordered() {
    let catalog = chord_catalog(12).unwrap();
    for row in table1(&catalog, 6..=22).unwrap() {
        assert!(row.n_unigraphic_sequences <= row.n_sequences);
        assert!(row.n_sequences <= row.n_polytopes);
    }
}

#[test]
fn catalog_graphs_survive_graph6() {
    let catalog = chord_catalog(11).unwrap();
    for r in catalog.records() {
        assert_eq!(graph6::decode(&graph6::encode(&r.graph)).unwrap(), r.graph);
    }
}
