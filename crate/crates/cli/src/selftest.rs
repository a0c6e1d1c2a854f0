//! Randomized consistency checks over generated graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use repwords::constructors::{decide_by_patterns, represent, Avoidance};
use repwords::oracle::{brute_force_representant, SearchBudget};
use repwords::word::twelve_represents;
use repwords::LabeledGraph;

pub const PATTERNS: [&str; 16] = [
    "none", "111", "121", "212", "231", "312", "321", "123", "132", "213", "211", "221", "112", "122",
    "set:121+212", "set:211+221",
];

pub fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> LabeledGraph {
    let n = rng.random_range(1..=max_n);
    let mut g = LabeledGraph::empty(n).expect("n >= 1");
    let density: f64 = rng.random_range(0.1..0.9);
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.random_bool(density) {
                g.add_edge(i, j).expect("labels in range");
            }
        }
    }
    g
}

#[derive(Debug, Default)]
pub struct Report {
    pub cases: usize,
    pub represented: usize,
    pub refuted: usize,
    pub unknown: usize,
    pub failures: Vec<String>,
}

/// For each case: the certificate verifies, its dual agrees, and on small
/// graphs the word search agrees with it.
pub fn run(seed: u64, cases: usize, max_n: usize, budget: &SearchBudget) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::default();
    for _ in 0..cases {
        let g = random_graph(&mut rng, max_n);
        let name = PATTERNS[rng.random_range(0..PATTERNS.len())];
        let avoid: Avoidance = name.parse().expect("known selector");
        let oracle = (g.n() <= budget.max_n).then_some(budget);
        let cert = represent(&g, &avoid, oracle);
        report.cases += 1;
        let mut fail = |msg: String| report.failures.push(format!("{g} / {name}: {msg}"));
        if let Some(w) = cert.word() {
            if !twelve_represents(w, &g).unwrap_or(false) || !avoid.avoided_by(w) {
                fail(format!("word {w} does not verify"));
            }
        }
        let dual = represent(&g.supplement(), &avoid.dual(), oracle);
        if dual.status() != cert.status() {
            fail(format!("dual status {} vs {}", dual.status(), cert.status()));
        }
        if let Some(decided) = decide_by_patterns(&g, &avoid) {
            if decided != cert.is_represented() {
                fail(format!("pattern decision {decided} vs certificate {}", cert.status()));
            }
        }
        if g.n() <= 5 {
            let found = brute_force_representant(&g, avoid.patterns(), budget).is_found();
            if found != cert.is_represented() {
                fail(format!("word search {found} vs certificate {}", cert.status()));
            }
        }
        match cert.exit_code() {
            0 => report.represented += 1,
            1 => report.refuted += 1,
            _ => report.unknown += 1,
        }
    }
    report
}
