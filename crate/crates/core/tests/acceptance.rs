//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use repwords::constructors::{
    closure_211, descending_clique_check, pipeline_123, represent, represent_123, represent_132,
    represent_211, same_order, Avoidance,
};
use repwords::geometry::{
    build_mpt_model, co132_anchors, hook_intersection_graph, hook_to_mpt, hook_word, mpt_to_hook,
    nested_pair, unit_adjust, validate_mpt,
};
use repwords::graph::all_labeled_graphs;
use repwords::oracle::{
    brute_force_representant, class_oracles, crossvalidate, is_p4_c4_free, search_labelings,
    unlabeled_representatives, SearchBudget,
};
use repwords::patterns::catalog::{CFP123, FP123, FP132, FP211, FP_INT, GROUNDED_L};
use repwords::patterns::{find_any, find_pattern, PairConstraint};
use repwords::word::{avoids, graph_from_word, twelve_represents};
use repwords::{Jobs, LabeledGraph, OrderedPattern, Pattern, Word};

type Outcome = Result<(), String>;

fn g(n: usize, edges: &[(usize, usize)]) -> LabeledGraph {
    LabeledGraph::from_edges(n, edges).unwrap()
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn p(s: &str) -> Pattern {
    s.parse().unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn budget() -> SearchBudget {
    SearchBudget::default()
}

fn graphs_up_to(n: usize) -> Vec<LabeledGraph> {
    (1..=n).flat_map(all_labeled_graphs).collect()
}

fn first_failure(results: Vec<Outcome>) -> Outcome {
    let failures: Vec<String> = results.into_iter().filter_map(Result::err).collect();
    match failures.first() {
        None => Ok(()),
        Some(f) => Err(format!("{} failure(s), first: {f}", failures.len())),
    }
}

fn criterion_1() -> Outcome {
    let mut errs = Vec::new();
    let fig1 = g(6, &[(1, 4), (1, 2), (2, 6), (5, 6), (3, 5), (3, 4), (3, 6), (1, 6)]);
    if !twelve_represents(&w("4624153"), &fig1).unwrap() {
        errs.push("4624153 does not represent the six-vertex example".to_string());
    }
    let fig6 = g(5, &[(1, 3), (1, 4), (3, 4), (2, 3), (2, 4)]);
    let got = represent_123(&fig6).word().map(Word::compact);
    if got.as_deref() != Some("432152") {
        errs.push(format!("represent_123 gave {got:?}, expected 432152"));
    }
    let co_x58 = g(6, &[(1, 3), (1, 4), (1, 5), (1, 6), (2, 4), (2, 6), (3, 4)]);
    if co132_anchors(&co_x58) != [1, 1, 2, 4, 2, 3] {
        errs.push(format!("anchors {:?}", co132_anchors(&co_x58)));
    }
    let c = represent_132(&co_x58);
    let got = c.word().map(Word::compact);
    if got.as_deref() != Some("654436235112") {
        errs.push(format!(
            "represent_132 on co-X58 gave {got:?} with witness {:?}, expected 654436235112 \
             (that word contains 132 at 4-6-5)",
            c.witness()
        ));
    }
    let got = represent_211(&g(3, &[(1, 3)])).word().map(Word::compact);
    if got.as_deref() != Some("2312") {
        errs.push(format!("represent_211 gave {got:?}, expected 2312"));
    }
    ensure(errs.is_empty(), || errs.join("; "))
}

fn criterion_2() -> Outcome {
    let mut errs = Vec::new();
    for n in 1..=4 {
        for pat in ["121", "231", "123", "132", "211"] {
            let row = crossvalidate(n, &pat.parse().unwrap(), &budget(), Jobs::ALL).map_err(|e| e.to_string())?;
            if !row.agree() {
                errs.push(format!("n={n} p={pat}: {:?}", row.disagreements));
            }
        }
    }
    ensure(errs.is_empty(), || errs.join("; "))
}

fn criterion_3() -> Outcome {
    let graphs = graphs_up_to(6);
    let results = Jobs::ALL.map(&graphs, |h| {
        let h = h.clone();
        catch_unwind(AssertUnwindSafe(|| sweep_one(&h)))
            .unwrap_or_else(|_| Err(format!("panic on {h}")))
    });
    first_failure(results)
}

fn sweep_one(h: &LabeledGraph) -> Outcome {
    for pat in ["121", "231", "123", "132", "211"] {
        let pattern = p(pat);
        let cert = represent(h, &Avoidance::single(pattern.clone()), None);
        let word = match cert.word() {
            Some(word) => word,
            None => continue,
        };
        ensure(twelve_represents(word, h).unwrap() && avoids(word, &pattern), || {
            format!("{pat}: {word} is not a valid representant of {h}")
        })?;
        match pat {
            "231" => ensure(word.is_permutation_word() && avoids(word, &p("231")), || {
                format!("231: {word} is not a 231-avoiding permutation for {h}")
            })?,
            // The closure asserts both claims at every step.
            "211" => {
                let steps = closure_211(h);
                ensure(steps.len() == h.n(), || format!("211: closure length for {h}"))?;
            }
            "123" => {
                let pipe = pipeline_123(h).map_err(|e| format!("123: {e:?}"))?;
                ensure(same_order(&pipe.mpt, &pipe.unit), || format!("123: endpoint order changed for {h}"))?;
            }
            _ => {}
        }
    }
    Ok(())
}

/// `(k, i, j)` with `ij` an edge must have `ik` and `kj` edges too.
fn unit_interval_order() -> Vec<OrderedPattern> {
    vec![
        FP_INT.clone(),
        OrderedPattern::new("UNIT.b", 3, &[(0, 2, PairConstraint::Edge), (0, 1, PairConstraint::NonEdge)]),
    ]
}

fn some_labeling_represents(h: &LabeledGraph, avoid: &[Pattern], b: &SearchBudget) -> bool {
    search_labelings(h, |x| brute_force_representant(x, avoid, b).is_found(), Jobs::ALL).is_some()
}

fn criterion_4() -> Outcome {
    let mut errs = Vec::new();
    let occ3 = budget().with_max_occurrences(3);
    for n in 1..=5 {
        for h in unlabeled_representatives(n).unwrap() {
            let flags = class_oracles(&h, Jobs::ALL);
            let checks = [
                ("121 / permutation", some_labeling_represents(&h, &[p("121")], &budget()), flags.permutation),
                ("231 / trivially perfect", some_labeling_represents(&h, &[p("231")], &budget()), flags.trivially_perfect),
                ("231 / P4,C4-free", some_labeling_represents(&h, &[p("231")], &budget()), is_p4_c4_free(&h)),
                (
                    "321 / bipartite permutation",
                    some_labeling_represents(&h, &[p("321")], &budget()),
                    flags.bipartite_permutation,
                ),
                (
                    "111 / 12-representable",
                    some_labeling_represents(&h, &[p("111")], &occ3),
                    some_labeling_represents(&h, &[], &occ3),
                ),
            ];
            for (name, a, b) in checks {
                if a != b {
                    errs.push(format!("{name} on {h}: {a} vs {b}"));
                }
            }
        }
    }
    ensure(errs.is_empty(), || errs.join("; "))
}

fn criterion_5() -> Outcome {
    let mut errs = Vec::new();
    for n in [5, 6] {
        let c = LabeledGraph::cycle(n).unwrap();
        if let Some(l) = search_labelings(&c, |x| brute_force_representant(x, &[], &budget()).is_found(), Jobs::ALL) {
            errs.push(format!("C{n} is 12-representable under labeling {l:?}"));
        }
    }
    let twin_house = g(6, &[(1, 2), (2, 3), (3, 4), (4, 6), (3, 6), (3, 5), (5, 6), (1, 6)]);
    if let Some(l) = search_labelings(&twin_house, |x| find_any(x, FP132.iter()).is_none(), Jobs::ALL) {
        errs.push(format!("twin-house labeling {l:?} has no 132 pattern"));
    }
    for k in [3, 4] {
        if descending_clique_check(k, &budget()) != Some(true) {
            errs.push(format!("K{k} has a representant avoiding the descending pattern"));
        }
    }
    ensure(errs.is_empty(), || errs.join("; "))
}

/// Every word over `1..=n` using each letter once or twice.
fn small_words(n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for mult in repwords::oracle::multiplicity_vectors(n, 2) {
        let mut rem = mult.clone();
        let mut cur = Vec::new();
        extend(&mut rem, &mut cur, mult.iter().sum(), &mut out);
    }
    out
}

fn extend(rem: &mut [usize], cur: &mut Vec<usize>, len: usize, out: &mut Vec<Word>) {
    if cur.len() == len {
        out.push(Word::new(cur.clone()).unwrap());
        return;
    }
    for x in 0..rem.len() {
        if rem[x] > 0 {
            rem[x] -= 1;
            cur.push(x + 1);
            extend(rem, cur, len, out);
            cur.pop();
            rem[x] += 1;
        }
    }
}

const DUAL_PAIRS: [(&str, &str); 5] = [("112", "122"), ("121", "212"), ("211", "221"), ("132", "213"), ("231", "312")];

fn criterion_6() -> Outcome {
    let mut errs = Vec::new();
    for n in 1..=4 {
        for word in small_words(n) {
            let h = graph_from_word(&word).unwrap();
            let dual = word.reverse().complement(n).unwrap();
            if !twelve_represents(&dual, &h.supplement()).unwrap() {
                errs.push(format!("c(r({word})) does not represent the supplement"));
            }
            for (a, b) in DUAL_PAIRS {
                if avoids(&word, &p(a)) != avoids(&dual, &p(b)) {
                    errs.push(format!("{word} vs {dual} on {a}/{b}"));
                }
            }
        }
        for h in all_labeled_graphs(n) {
            let s = h.supplement();
            for (a, b) in DUAL_PAIRS {
                let x = represent(&h, &a.parse().unwrap(), Some(&budget())).is_represented();
                let y = represent(&s, &b.parse().unwrap(), Some(&budget())).is_represented();
                if x != y {
                    errs.push(format!("{h}: {a} {x}, supplement {b} {y}"));
                }
            }
        }
    }
    ensure(errs.is_empty(), || format!("{} failure(s), first: {}", errs.len(), errs[0]))
}

fn geometry_one(h: &LabeledGraph) -> Outcome {
    if find_any(h, CFP123.iter()).is_some() {
        return Ok(());
    }
    let m = build_mpt_model(h).map_err(|e| format!("{h}: {e}"))?;
    ensure(validate_mpt(&m, h), || format!("{h}: model invalid"))?;
    ensure(nested_pair(&m).is_none(), || format!("{h}: nested one-sided intervals"))?;
    let u = unit_adjust(&m).map_err(|e| format!("{h}: {e}"))?;
    ensure(validate_mpt(&u, h) && u.is_unit(), || format!("{h}: adjusted model invalid"))?;
    let hooks = mpt_to_hook(&u);
    ensure(hook_to_mpt(&hooks) == u, || format!("{h}: hook roundtrip"))?;
    let word = hook_word(&hooks).map_err(|e| format!("{h}: {e}"))?;
    ensure(hook_intersection_graph(&hooks).unwrap() == *h, || format!("{h}: hook graph"))?;
    ensure(twelve_represents(&word, &h.complement()).unwrap() && avoids(&word, &p("123")), || {
        format!("{h}: hook word {word}")
    })
}

fn criterion_7() -> Outcome {
    let graphs = graphs_up_to(6);
    let results = Jobs::ALL.map(&graphs, |h| {
        catch_unwind(AssertUnwindSafe(|| geometry_one(h))).unwrap_or_else(|_| Err(format!("panic on {h}")))
    });
    first_failure(results)
}

fn criterion_8() -> Outcome {
    let mut errs = Vec::new();
    let unit_order = unit_interval_order();
    let labeled_ok = |h: &LabeledGraph, set: &[OrderedPattern], pat: &str| {
        search_labelings(
            h,
            |x| find_any(x, set.iter()).is_none() && represent(x, &pat.parse().unwrap(), None).is_represented(),
            Jobs::ALL,
        )
        .is_some()
    };
    for n in 1..=5 {
        for h in unlabeled_representatives(n).unwrap() {
            let flags = class_oracles(&h, Jobs::ALL);
            let co = h.complement();
            if flags.bipartite_permutation && !labeled_ok(&co, &FP123, "123") {
                errs.push(format!("complement of bipartite permutation {h} not 123-representable"));
            }
            let unit = search_labelings(&h, |x| find_any(x, unit_order.iter()).is_none(), Jobs::ALL).is_some();
            if unit && !labeled_ok(&co, &FP123, "123") {
                errs.push(format!("complement of unit interval {h} not 123-representable"));
            }
            if flags.trivially_perfect && !labeled_ok(&co, &FP132, "132") {
                errs.push(format!("complement of trivially perfect {h} not 132-representable"));
            }
        }
        for h in all_labeled_graphs(n) {
            if find_any(&h, FP211.iter()).is_none() {
                if let Some(wit) = find_any(&h, GROUNDED_L.iter()) {
                    errs.push(format!("{h} is 211-pattern free but has {wit:?}"));
                }
            }
            if represent_123(&h).is_represented() {
                if let Some(wit) = find_pattern(&h.complement(), &CFP123[1]) {
                    errs.push(format!("complement of 123-representable {h} has {wit:?}"));
                }
            }
        }
    }
    ensure(errs.is_empty(), || errs.join("; "))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("golden words", criterion_1),
        ("labeled cross-validation, n <= 4", criterion_2),
        ("constructor soundness, n <= 6", criterion_3),
        ("unlabeled class equivalences, n <= 5", criterion_4),
        ("negative results", criterion_5),
        ("duality", criterion_6),
        ("geometry contracts, n <= 6", criterion_7),
        ("subclass corollaries, n <= 5", criterion_8),
    ];
    let mut failed = Vec::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({ms} ms)", k + 1),
            Err(e) => {
                println!("criterion {}: FAIL  {name} ({ms} ms): {e}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
