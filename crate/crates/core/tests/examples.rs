use repwords::constructors::{represent, represent_123, represent_132, represent_321, represent_111, Certificate};
use repwords::geometry::{build_co132_interval_model, co132_word};
use repwords::oracle::{
    brute_force_representant, census, search_labelings, CensusConfig, SearchBudget, SearchOutcome,
};
use repwords::patterns::catalog::{FP12, FP132, PERMUTATION};
use repwords::patterns::find_any;
use repwords::word::{avoids, contains_pattern, twelve_represents};
use repwords::{Jobs, LabeledGraph, Pattern, Word};

fn g(n: usize, edges: &[(usize, usize)]) -> LabeledGraph {
    LabeledGraph::from_edges(n, edges).unwrap()
}

fn p(s: &str) -> Pattern {
    s.parse().unwrap()
}

fn fig1() -> LabeledGraph {
    g(6, &[(1, 4), (1, 2), (2, 6), (5, 6), (3, 5), (3, 4), (3, 6), (1, 6)])
}

fn co_x58() -> LabeledGraph {
    g(6, &[(1, 3), (1, 4), (1, 5), (1, 6), (2, 4), (2, 6), (3, 4)])
}

fn twin_house() -> LabeledGraph {
    g(6, &[(1, 2), (2, 3), (3, 4), (4, 6), (3, 6), (3, 5), (5, 6), (1, 6)])
}

#[test]
fn six_vertex_example_is_12_representable() {
    let w: Word = "4624153".parse().unwrap();
    assert!(twelve_represents(&w, &fig1()).unwrap());
    let found = brute_force_representant(&fig1(), &[], &SearchBudget::default());
    assert!(twelve_represents(found.word().unwrap(), &fig1()).unwrap());
    assert!(represent_111(&fig1(), Some(&SearchBudget::default())).is_represented());
}

#[test]
fn c5_has_no_good_labeling() {
    let c5 = LabeledGraph::cycle(5).unwrap();
    assert!(search_labelings(&c5, |h| find_any(h, FP12.iter()).is_none(), Jobs::ALL).is_none());
    assert_eq!(brute_force_representant(&c5, &[], &SearchBudget::default()), SearchOutcome::Absent);
}

#[test]
fn co_x58_word_contains_132() {
    // The endpoint word is built exactly, but it is not 132-avoiding.
    let m = build_co132_interval_model(&co_x58()).unwrap();
    let w = co132_word(&m).unwrap();
    assert_eq!(w.compact(), "654436235112");
    assert_eq!(contains_pattern(&w, &p("132")), Some(vec![2, 5, 8]));
    let c = represent_132(&co_x58());
    assert_eq!(c.witness().unwrap().vertices, vec![2, 3, 5, 6]);
    for occ in [2, 3] {
        let b = SearchBudget::default().with_max_occurrences(occ);
        assert_eq!(brute_force_representant(&co_x58(), &[p("132")], &b), SearchOutcome::Absent);
    }
}

#[test]
fn twin_house_is_co_interval_but_not_132() {
    assert!(search_labelings(&twin_house(), |h| find_any(h, FP132.iter()).is_none(), Jobs::ALL).is_none());
    let co = twin_house().complement();
    let interval = search_labelings(&co, |h| find_any(h, repwords::patterns::catalog::INTERVAL.iter()).is_none(), Jobs::ALL);
    assert!(interval.is_some());
}

#[test]
fn edge_13_is_321_representable_only_with_a_repeat() {
    let h = g(3, &[(1, 3)]);
    let c = represent_321(&h, None);
    assert_eq!(c.word().unwrap().compact(), "2312");
    assert!(find_any(&h, PERMUTATION.iter()).is_some());
    let perms_only = SearchBudget::default().with_max_occurrences(1);
    assert_eq!(brute_force_representant(&h, &[p("321")], &perms_only), SearchOutcome::Absent);
}

#[test]
fn complements_of_bipartite_permutation_graphs_are_123_representable() {
    for h in [LabeledGraph::path(5).unwrap(), LabeledGraph::cycle(4).unwrap(), g(5, &[(1, 2), (1, 3), (1, 4)])] {
        let co = h.complement();
        let perm = search_labelings(&co, |x| represent_123(x).is_represented(), Jobs::ALL).expect("some labeling");
        let c = represent_123(&co.relabel(&perm));
        assert!(avoids(c.word().unwrap(), &p("123")));
    }
}

#[test]
fn c5_is_self_complementary_and_never_123_representable() {
    let c5 = LabeledGraph::cycle(5).unwrap();
    let co = c5.complement();
    assert_eq!(co.edge_count(), 5);
    assert!((1..=5).all(|v| co.degree(v) == 2));
    assert!(search_labelings(&co, |x| represent_123(x).is_represented(), Jobs::ALL).is_none());
}

#[test]
fn p3_has_good_and_bad_labelings() {
    let p3 = LabeledGraph::path(3).unwrap();
    assert!(represent(&p3, &"121".parse().unwrap(), None).is_refuted());
    let good = search_labelings(&p3, |h| represent(h, &"121".parse().unwrap(), None).is_represented(), Jobs::ALL);
    assert_eq!(good, Some(vec![1, 3, 2]));
}

#[test]
fn cliques_are_found_at_once() {
    for n in 1..=5 {
        let k = LabeledGraph::complete(n).unwrap();
        assert_eq!(search_labelings(&k, |h| h.is_complete(), Jobs::ALL), Some((1..=n).collect()));
    }
}

#[test]
fn trivial_census_rows() {
    let cfg = CensusConfig::default();
    let rows = census(3, &["21".parse().unwrap(), "12".parse().unwrap()], &cfg).unwrap();
    assert_eq!(rows[0].labeled_count_oracle, Some(1));
    assert_eq!(rows[1].labeled_count_oracle, Some(1));
    let rows = census(4, &["123".parse().unwrap()], &cfg).unwrap();
    assert_eq!(rows[0].labeled_count_pattern, rows[0].labeled_count_oracle);
    assert_eq!(rows[0].agree, Some(true));
}

#[test]
fn unlabeled_counts() {
    // Frozen from the census; trivially perfect and bipartite counts match the
    // known totals 20 and 13 on five vertices.
    let cfg = CensusConfig::default();
    let pats: Vec<_> = ["121", "231", "321", "123", "132", "none"].iter().map(|s| s.parse().unwrap()).collect();
    let rows = census(5, &pats, &cfg).unwrap();
    let got: Vec<usize> = rows.iter().map(|r| r.unlabeled_count).collect();
    assert_eq!(got, vec![33, 20, 13, 33, 27, 33]);
    assert!(rows.iter().all(|r| r.unlabeled_total == 34));
}

#[test]
fn certificates_distinguish_methods() {
    let c = represent(&g(4, &[(1, 2), (3, 4)]), &"112".parse().unwrap(), Some(&SearchBudget::default()));
    match c {
        Certificate::Represented { method, .. } => assert_eq!(method, repwords::Method::Oracle),
        other => panic!("{other:?}"),
    }
    let v = serde_json::to_value(represent(&LabeledGraph::cycle(5).unwrap(), &"none".parse().unwrap(), None)).unwrap();
    assert_eq!(v["status"], "refuted");
    assert_eq!(v["method"], "pattern");
}
