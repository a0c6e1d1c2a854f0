use proptest::prelude::*;

use repwords::constructors::{represent, Avoidance};
use repwords::format::{decode_graph6, encode_graph6, parse_edge_list, to_edge_list};
use repwords::geometry::{
    hook_intersection_graph, hook_word, int, ratio, unit_adjust_intervals, unit_interval_to_hooks, Rational,
};
use repwords::word::{avoids, contains_pattern, contains_pattern_naive, graph_from_word, reduce, twelve_represents};
use repwords::{LabeledGraph, Pattern, Word};

fn word_strategy(max_n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    (1..=max_n).prop_flat_map(move |n| {
        // Every letter once, then extra copies, shuffled.
        (Just(n), prop::collection::vec(1..=n, 0..=max_len.saturating_sub(n)))
            .prop_flat_map(|(n, extra)| {
                let mut letters: Vec<usize> = (1..=n).collect();
                letters.extend(extra);
                Just(letters).prop_shuffle()
            })
            .prop_map(|l| Word::new(l).unwrap())
    })
}

fn pattern_strategy() -> impl Strategy<Value = Pattern> {
    prop::collection::vec(1usize..=4, 1..=4).prop_map(|v| {
        let w = reduce(&Word::new(v).unwrap()).unwrap();
        Pattern::new(w.letters().to_vec()).unwrap()
    })
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = LabeledGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mask = bits.iter().enumerate().fold(0u64, |m, (t, &b)| m | (u64::from(b) << t));
            LabeledGraph::from_edge_mask(n, mask).unwrap()
        })
    })
}

const CHARACTERIZED: [&str; 14] =
    ["121", "212", "231", "312", "123", "132", "213", "211", "221", "12", "21", "11", "set:121+212", "set:211+221"];

proptest! {
    #[test]
    fn containment_matches_naive(w in word_strategy(5, 8), p in pattern_strategy()) {
        prop_assert_eq!(contains_pattern(&w, &p), contains_pattern_naive(&w, &p));
    }

    #[test]
    fn reduce_is_idempotent(v in prop::collection::vec(1usize..20, 1..10)) {
        let once = reduce(&Word::new(v).unwrap()).unwrap();
        prop_assert_eq!(reduce(&once).unwrap(), once);
    }

    #[test]
    fn every_word_represents_its_graph(w in word_strategy(6, 12)) {
        let g = graph_from_word(&w).unwrap();
        prop_assert!(twelve_represents(&w, &g).unwrap());
    }

    #[test]
    fn restriction_is_hereditary(w in word_strategy(6, 12), keep in prop::collection::vec(any::<bool>(), 6), p in pattern_strategy()) {
        let n = w.max_letter();
        let kept: Vec<usize> = (1..=n).filter(|&v| keep[v - 1]).collect();
        prop_assume!(!kept.is_empty());
        let g = graph_from_word(&w).unwrap();
        let sub = w.restrict(|l| keep[l - 1]);
        let sub = reduce(&sub).unwrap();
        prop_assert!(twelve_represents(&sub, &g.induced(&kept).unwrap()).unwrap());
        if avoids(&w, &p) {
            prop_assert!(avoids(&sub, &p));
        }
    }

    #[test]
    fn reverse_complement_is_duality(w in word_strategy(6, 12), p in pattern_strategy()) {
        let n = w.max_letter();
        let g = graph_from_word(&w).unwrap();
        let d = w.reverse().complement(n).unwrap();
        prop_assert!(twelve_represents(&d, &g.supplement()).unwrap());
        prop_assert_eq!(avoids(&w, &p), avoids(&d, &p.dual()));
    }

    #[test]
    fn certificates_are_valid(g in graph_strategy(7), k in 0..CHARACTERIZED.len()) {
        let avoid: Avoidance = CHARACTERIZED[k].parse().unwrap();
        let c = represent(&g, &avoid, None);
        if let Some(w) = c.word() {
            prop_assert!(twelve_represents(w, &g).unwrap());
            prop_assert!(avoid.avoided_by(w));
        } else {
            prop_assert!(c.is_refuted());
            let dual = represent(&g.supplement(), &avoid.dual(), None);
            prop_assert!(dual.is_refuted());
        }
    }

    #[test]
    fn graph_formats_roundtrip(g in graph_strategy(9)) {
        prop_assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g.clone());
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.supplement().supplement(), g);
    }

    #[test]
    fn unit_adjust_keeps_order(steps in prop::collection::vec((1i64..6, 1i64..6, 1i64..4), 1..7)) {
        // Strictly increasing left and right ends give a proper family.
        let (mut a, mut b) = (0i64, 0i64);
        let mut ivs: Vec<(Rational, Rational)> = Vec::new();
        for (da, db, len) in steps {
            a += da;
            b = (b + db).max(a + len);
            ivs.push((ratio(a, 1), ratio(b, 1)));
        }
        let out = unit_adjust_intervals(&ivs).unwrap();
        let flat = |v: &[(Rational, Rational)]| v.iter().flat_map(|(x, y)| [x.clone(), y.clone()]).collect::<Vec<_>>();
        let (x, y) = (flat(&ivs), flat(&out));
        for i in 0..x.len() {
            for j in 0..x.len() {
                prop_assert_eq!(x[i].cmp(&x[j]), y[i].cmp(&y[j]));
            }
        }
        for (l, r) in &out {
            prop_assert_eq!(r - l, int(1));
        }
    }

    #[test]
    fn unit_hooks_represent_the_complement(starts in prop::collection::btree_set(0i64..40, 1..7)) {
        let starts: Vec<Rational> = starts.into_iter().map(|s| ratio(s, 8)).collect();
        let hooks = unit_interval_to_hooks(&starts).unwrap();
        let g = hook_intersection_graph(&hooks).unwrap();
        // Corner order is start order, and hooks meet exactly when the intervals do.
        for u in 1..=starts.len() {
            for v in u + 1..=starts.len() {
                let meet = &starts[v - 1] - &starts[u - 1] <= int(1);
                prop_assert_eq!(g.has_edge(u, v), meet);
            }
        }
        if let Ok(w) = hook_word(&hooks) {
            prop_assert!(twelve_represents(&w, &g.complement()).unwrap());
            prop_assert!(avoids(&w, &"123".parse().unwrap()));
        }
    }
}
