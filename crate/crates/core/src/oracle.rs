//! Exhaustive searches used as ground truth: representant words, labelings,
//! isomorphism classes, and small-graph censuses.

use std::time::{Duration, Instant};

use itertools::Itertools;
use serde::Serialize;

use crate::constructors::{decide_by_patterns, represent, Avoidance, Certificate};
use crate::error::{Error, Result};
use crate::graph::{pair_count, LabeledGraph};
use crate::parallel::Jobs;
use crate::patterns::catalog::{BIPARTITE_PERMUTATION, INTERVAL, PERMUTATION, TRIVIALLY_PERFECT};
use crate::patterns::{find_any, OrderedPattern};
use crate::word::{has_occurrence_ending_at_last, twelve_represents, Pattern, Word};

/// Limits for [`brute_force_representant`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    pub max_n: usize,
    /// Largest number of copies of any letter. At least 1.
    pub max_occurrences: usize,
    #[serde(rename = "time_limit_ms", serialize_with = "ser_millis")]
    pub time_limit: Option<Duration>,
}

fn ser_millis<S: serde::Serializer>(d: &Option<Duration>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match d {
        Some(d) => s.serialize_some(&(d.as_millis() as u64)),
        None => s.serialize_none(),
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { max_n: 6, max_occurrences: 2, time_limit: None }
    }
}

impl SearchBudget {
    pub fn with_max_occurrences(mut self, k: usize) -> Self {
        self.max_occurrences = k;
        self
    }

    pub fn with_max_n(mut self, n: usize) -> Self {
        self.max_n = n;
        self
    }

    pub fn with_time_limit(mut self, t: Duration) -> Self {
        self.time_limit = Some(t);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Word),
    /// Every word within the occurrence bound was ruled out.
    Absent,
    Exceeded(String),
}

impl SearchOutcome {
    pub fn word(&self) -> Option<&Word> {
        match self {
            SearchOutcome::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

/// Occurrence vectors in `{1..=k}^n`, by total length and then lexicographically.
pub fn multiplicity_vectors(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..n).map(|_| 1..=k).multi_cartesian_product().collect();
    if n == 0 {
        out = vec![Vec::new()];
    }
    out.sort_by(|a, b| a.iter().sum::<usize>().cmp(&b.iter().sum()).then_with(|| a.cmp(b)));
    out
}

/// A word that 12-represents `g` and avoids every pattern in `avoid`, using
/// each letter at most `budget.max_occurrences` times.
///
/// The first word found is the lexicographically smallest among those of the
/// shortest occurrence vector that has any, so results are reproducible.
pub fn brute_force_representant(g: &LabeledGraph, avoid: &[Pattern], budget: &SearchBudget) -> SearchOutcome {
    brute_force_representant_with(g, avoid, budget, Jobs::sequential())
}

/// [`brute_force_representant`] with occurrence vectors searched in parallel.
pub fn brute_force_representant_with(
    g: &LabeledGraph,
    avoid: &[Pattern],
    budget: &SearchBudget,
    jobs: Jobs,
) -> SearchOutcome {
    let n = g.n();
    if n > budget.max_n {
        return SearchOutcome::Exceeded(format!("n = {n} is above the search limit {}", budget.max_n));
    }
    if budget.max_occurrences == 0 {
        return SearchOutcome::Exceeded("at least one occurrence per letter is needed".into());
    }
    let deadline = budget.time_limit.map(|t| Instant::now() + t);
    let vectors = multiplicity_vectors(n, budget.max_occurrences);
    let found = jobs.find_map_first(&vectors, |m| {
        let mut s = Dfs::new(g, avoid, m, deadline);
        match s.run() {
            Step::Found => Some(Ok(Word::new(s.prefix).expect("letters are positive"))),
            Step::Timeout => Some(Err(())),
            Step::Dead => None,
        }
    });
    match found {
        Some(Ok(w)) => {
            assert!(twelve_represents(&w, g).expect("every letter placed"), "search produced {w} for {g}");
            SearchOutcome::Found(w)
        }
        Some(Err(())) => SearchOutcome::Exceeded("time limit reached".into()),
        None => SearchOutcome::Absent,
    }
}

enum Step {
    Found,
    Dead,
    Timeout,
}

struct Dfs<'a> {
    n: usize,
    adj: Vec<u64>,
    avoid: &'a [Pattern],
    remaining: Vec<usize>,
    /// Bit `v - 1` set while `v` has copies left.
    pending: u64,
    /// Bit `v - 1` set until the first copy of `v` is placed.
    unseen: u64,
    prefix: Vec<usize>,
    deadline: Option<Instant>,
    nodes: u64,
}

impl<'a> Dfs<'a> {
    fn new(g: &LabeledGraph, avoid: &'a [Pattern], mult: &[usize], deadline: Option<Instant>) -> Self {
        let n = g.n();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Self {
            n,
            adj: (1..=n).map(|v| g.neighbor_bits(v)).collect(),
            avoid,
            remaining: mult.to_vec(),
            pending: all,
            unseen: all,
            prefix: Vec::with_capacity(mult.iter().sum()),
            deadline,
            nodes: 0,
        }
    }

    fn run(&mut self) -> Step {
        if self.pending == 0 {
            return Step::Found;
        }
        self.nodes += 1;
        if self.nodes % 4096 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Step::Timeout;
                }
            }
        }
        for x in 1..=self.n {
            if self.remaining[x - 1] == 0 {
                continue;
            }
            let bit = 1u64 << (x - 1);
            let below = bit - 1;
            let above = !(below | bit);
            // A larger neighbor with copies left would end after this copy of x.
            if self.adj[x - 1] & above & self.pending != 0 {
                continue;
            }
            // Closing x while a smaller non-neighbor has not started makes them adjacent.
            if self.remaining[x - 1] == 1 && !self.adj[x - 1] & below & self.unseen != 0 {
                continue;
            }
            self.prefix.push(x);
            if self.avoid.iter().any(|p| has_occurrence_ending_at_last(&self.prefix, p)) {
                self.prefix.pop();
                continue;
            }
            let (pending, unseen) = (self.pending, self.unseen);
            self.remaining[x - 1] -= 1;
            self.unseen &= !bit;
            if self.remaining[x - 1] == 0 {
                self.pending &= !bit;
            }
            match self.run() {
                Step::Dead => {}
                done => return done,
            }
            self.remaining[x - 1] += 1;
            self.pending = pending;
            self.unseen = unseen;
            self.prefix.pop();
        }
        Step::Dead
    }
}

/// The first labeling (as `perm`, vertex `v` becoming `perm[v - 1]`) in
/// lexicographic order whose relabeled graph satisfies `pred`.
pub fn search_labelings<F>(g: &LabeledGraph, pred: F, jobs: Jobs) -> Option<Vec<usize>>
where
    F: Fn(&LabeledGraph) -> bool + Sync + Send,
{
    let perms: Vec<Vec<usize>> = (1..=g.n()).permutations(g.n()).collect();
    jobs.find_map_first(&perms, |p| pred(&g.relabel(p)).then(|| p.clone()))
}

/// Whether some labeling of `g` has no witness from `patterns`.
pub fn some_labeling_avoids(g: &LabeledGraph, patterns: &[OrderedPattern], jobs: Jobs) -> bool {
    search_labelings(g, |h| find_any(h, patterns.iter()).is_none(), jobs).is_some()
}

// Pair number of (i, j), 1-based with i < j, in edge-mask order.
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * (2 * n - i) / 2 + (j - i - 1)
}

/// For every labeling, the image of each pair bit.
fn pair_maps(n: usize) -> Vec<Vec<u8>> {
    (1..=n)
        .permutations(n)
        .map(|p| {
            let mut map = vec![0u8; pair_count(n)];
            for i in 1..=n {
                for j in i + 1..=n {
                    let (a, b) = (p[i - 1].min(p[j - 1]), p[i - 1].max(p[j - 1]));
                    map[pair_index(n, i, j)] = pair_index(n, a, b) as u8;
                }
            }
            map
        })
        .collect()
}

fn apply(map: &[u8], mut mask: u64) -> u64 {
    let mut out = 0u64;
    while mask != 0 {
        let t = mask.trailing_zeros() as usize;
        out |= 1 << map[t];
        mask &= mask - 1;
    }
    out
}

/// Smallest edge mask over all relabelings of `g`.
pub fn canonical_mask(g: &LabeledGraph) -> u64 {
    let mask = g.edge_mask();
    pair_maps(g.n()).iter().map(|m| apply(m, mask)).min().expect("at least one labeling")
}

/// Isomorphism classes of labeled graphs on `n` vertices.
#[derive(Debug, Clone)]
pub struct Orbits {
    n: usize,
    class_of: Vec<u32>,
    representatives: Vec<u64>,
}

impl Orbits {
    /// Sweeps masks in increasing order; an unvisited mask is the smallest of
    /// its class and becomes its representative. Needs `1 <= n <= 7`.
    pub fn new(n: usize) -> Result<Self> {
        if !(1..=7).contains(&n) {
            return Err(Error::Budget(format!("isomorphism classes need 1 <= n <= 7, got {n}")));
        }
        let maps = pair_maps(n);
        let total = 1usize << pair_count(n);
        let mut class_of = vec![u32::MAX; total];
        let mut representatives = Vec::new();
        for mask in 0..total as u64 {
            if class_of[mask as usize] != u32::MAX {
                continue;
            }
            let id = representatives.len() as u32;
            representatives.push(mask);
            for m in &maps {
                class_of[apply(m, mask) as usize] = id;
            }
        }
        Ok(Self { n, class_of, representatives })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn class_of(&self, g: &LabeledGraph) -> usize {
        self.class_of[g.edge_mask() as usize] as usize
    }

    pub fn class_of_mask(&self, mask: u64) -> usize {
        self.class_of[mask as usize] as usize
    }

    /// One graph per class, the one with the smallest edge mask.
    pub fn representatives(&self) -> Vec<LabeledGraph> {
        self.representatives
            .iter()
            .map(|&m| LabeledGraph::from_edge_mask(self.n, m).expect("n checked"))
            .collect()
    }
}

pub fn unlabeled_representatives(n: usize) -> Result<Vec<LabeledGraph>> {
    Ok(Orbits::new(n)?.representatives())
}

/// Unlabeled class membership, decided by searching labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub permutation: bool,
    pub trivially_perfect: bool,
    pub bipartite_permutation: bool,
    /// The complement is an interval graph.
    pub interval_complementable: bool,
}

pub fn class_oracles(g: &LabeledGraph, jobs: Jobs) -> ClassFlags {
    let trivially_perfect = some_labeling_avoids(g, &TRIVIALLY_PERFECT, jobs);
    assert_eq!(
        trivially_perfect,
        is_p4_c4_free(g),
        "labeling search and the P4/C4 test disagree on {g}"
    );
    ClassFlags {
        permutation: some_labeling_avoids(g, &PERMUTATION, jobs),
        trivially_perfect,
        bipartite_permutation: some_labeling_avoids(g, &BIPARTITE_PERMUTATION, jobs),
        interval_complementable: some_labeling_avoids(&g.complement(), &INTERVAL, jobs),
    }
}

/// No induced `P4` and no induced `C4`.
pub fn is_p4_c4_free(g: &LabeledGraph) -> bool {
    (1..=g.n()).combinations(4).all(|q| {
        let mut deg: Vec<usize> = q
            .iter()
            .map(|&u| q.iter().filter(|&&v| v != u && g.has_edge(u, v)).count())
            .collect();
        deg.sort_unstable();
        deg != [1, 1, 2, 2] && deg != [2, 2, 2, 2]
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusConfig {
    pub budget: SearchBudget,
    /// Largest `n` for which the word search runs.
    pub oracle_max_n: usize,
    /// Largest `n` for which the pattern decision runs.
    pub pattern_max_n: usize,
    pub jobs: Jobs,
}

impl Default for CensusConfig {
    fn default() -> Self {
        Self { budget: SearchBudget::default(), oracle_max_n: 5, pattern_max_n: 6, jobs: Jobs::ALL }
    }
}

/// Counts of representable graphs on `n` vertices for one pattern set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub pattern: String,
    pub labeled_total: usize,
    pub labeled_count_pattern: Option<usize>,
    pub labeled_count_oracle: Option<usize>,
    pub unlabeled_total: usize,
    pub unlabeled_count: usize,
    /// Graph-by-graph agreement of the two methods; `None` unless both ran.
    pub agree: Option<bool>,
    pub wall_time_ms: u64,
}

/// One census row per entry of `patterns`.
pub fn census(n: usize, patterns: &[Avoidance], cfg: &CensusConfig) -> Result<Vec<CensusRow>> {
    let orbits = Orbits::new(n)?;
    let graphs: Vec<LabeledGraph> = crate::graph::all_labeled_graphs(n).collect();
    patterns
        .iter()
        .map(|avoid| {
            let start = Instant::now();
            let by_pattern = (n <= cfg.pattern_max_n)
                .then(|| cfg.jobs.map(&graphs, |g| decide_by_patterns(g, avoid)))
                .and_then(|v| v.into_iter().collect::<Option<Vec<bool>>>());
            let by_oracle = if n <= cfg.oracle_max_n {
                let out = cfg.jobs.map(&graphs, |g| {
                    match brute_force_representant(g, avoid.patterns(), &cfg.budget) {
                        SearchOutcome::Found(_) => Ok(true),
                        SearchOutcome::Absent => Ok(false),
                        SearchOutcome::Exceeded(r) => Err(Error::Budget(r)),
                    }
                });
                Some(out.into_iter().collect::<Result<Vec<bool>>>()?)
            } else {
                None
            };
            let decided = by_pattern.as_ref().or(by_oracle.as_ref()).ok_or_else(|| {
                Error::Budget(format!("no method covers {avoid} at n = {n}"))
            })?;
            let mut classes = vec![false; orbits.len()];
            for (g, &yes) in graphs.iter().zip(decided) {
                classes[orbits.class_of(g)] |= yes;
            }
            let count = |v: &Option<Vec<bool>>| v.as_ref().map(|v| v.iter().filter(|&&b| b).count());
            let agree = match (&by_pattern, &by_oracle) {
                (Some(a), Some(b)) => Some(a == b),
                _ => None,
            };
            Ok(CensusRow {
                n,
                pattern: avoid.to_string(),
                labeled_total: graphs.len(),
                labeled_count_pattern: count(&by_pattern),
                labeled_count_oracle: count(&by_oracle),
                unlabeled_total: orbits.len(),
                unlabeled_count: classes.iter().filter(|&&b| b).count(),
                agree,
                wall_time_ms: start.elapsed().as_millis() as u64,
            })
        })
        .collect()
}

/// Labeled cross-validation of one pattern set on every graph with `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossRow {
    pub n: usize,
    pub pattern: String,
    pub graphs: usize,
    pub representable: usize,
    /// Graphs where the pattern decision, the constructor, and the word search
    /// do not all agree.
    pub disagreements: Vec<String>,
}

impl CrossRow {
    pub fn agree(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Compares the pattern decision, the constructor's certificate, and the word
/// search on every labeled graph with `n` vertices.
pub fn crossvalidate(n: usize, avoid: &Avoidance, budget: &SearchBudget, jobs: Jobs) -> Result<CrossRow> {
    if n > budget.max_n || !(1..=8).contains(&n) {
        return Err(Error::Budget(format!("n = {n} is above the search limit {}", budget.max_n)));
    }
    if decide_by_patterns(&LabeledGraph::empty(1)?, avoid).is_none() {
        return Err(Error::Budget(format!("{avoid} has no pattern characterization to check")));
    }
    let graphs: Vec<LabeledGraph> = crate::graph::all_labeled_graphs(n).collect();
    let results = jobs.map(&graphs, |g| {
        let decided = decide_by_patterns(g, avoid).expect("checked above");
        let oracle = brute_force_representant(g, avoid.patterns(), budget);
        let cert = represent(g, avoid, Some(budget));
        let built = match &cert {
            Certificate::Represented { word, .. } => {
                twelve_represents(word, g).unwrap_or(false) && avoid.avoided_by(word)
            }
            _ => false,
        };
        let ok = match oracle {
            SearchOutcome::Exceeded(_) => false,
            ref o => decided == o.is_found() && decided == built && (decided || cert.is_refuted()),
        };
        (decided, (!ok).then(|| g.to_string()))
    });
    Ok(CrossRow {
        n,
        pattern: avoid.to_string(),
        graphs: graphs.len(),
        representable: results.iter().filter(|r| r.0).count(),
        disagreements: results.into_iter().filter_map(|r| r.1).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> LabeledGraph {
        LabeledGraph::from_edges(n, edges).unwrap()
    }

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn multiplicity_order() {
        let v = multiplicity_vectors(2, 2);
        assert_eq!(v, vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        assert_eq!(multiplicity_vectors(3, 3).len(), 27);
    }

    #[test]
    fn finds_permutations_first() {
        let k3 = LabeledGraph::complete(3).unwrap();
        assert_eq!(brute_force_representant(&k3, &[], &budget()).word().unwrap().compact(), "321");
        let e = LabeledGraph::empty(3).unwrap();
        assert_eq!(brute_force_representant(&e, &[], &budget()).word().unwrap().compact(), "123");
    }

    #[test]
    fn k3_has_no_321_avoiding_representant() {
        let k3 = LabeledGraph::complete(3).unwrap();
        let p: Pattern = "321".parse().unwrap();
        assert_eq!(brute_force_representant(&k3, &[p], &budget()), SearchOutcome::Absent);
    }

    #[test]
    fn edge_13_needs_a_doubled_letter_to_avoid_321() {
        let h = g(3, &[(1, 3)]);
        let p: Pattern = "321".parse().unwrap();
        let w = brute_force_representant(&h, &[p], &budget());
        assert_eq!(w.word().unwrap().compact(), "2312");
    }

    #[test]
    fn c5_has_no_representant_with_identity_labeling() {
        let c5 = LabeledGraph::cycle(5).unwrap();
        assert_eq!(brute_force_representant(&c5, &[], &budget()), SearchOutcome::Absent);
    }

    #[test]
    fn budget_limits() {
        let big = LabeledGraph::empty(7).unwrap();
        assert!(matches!(brute_force_representant(&big, &[], &budget()), SearchOutcome::Exceeded(_)));
        let zero = budget().with_max_occurrences(0);
        assert!(matches!(brute_force_representant(&big, &[], &zero), SearchOutcome::Exceeded(_)));
        let tight = budget().with_time_limit(Duration::ZERO);
        // Small searches finish before the first clock check.
        assert!(brute_force_representant(&LabeledGraph::empty(2).unwrap(), &[], &tight).is_found());
    }

    #[test]
    fn parallel_search_matches_sequential() {
        let c4 = LabeledGraph::cycle(4).unwrap();
        let p: Pattern = "123".parse().unwrap();
        let a = brute_force_representant_with(&c4, std::slice::from_ref(&p), &budget(), Jobs::sequential());
        let b = brute_force_representant_with(&c4, std::slice::from_ref(&p), &budget(), Jobs::ALL);
        assert_eq!(a, b);
    }

    #[test]
    fn p3_labelings() {
        let p3 = LabeledGraph::path(3).unwrap();
        assert!(find_any(&p3, PERMUTATION.iter()).is_some());
        let l = search_labelings(&p3, |h| find_any(h, PERMUTATION.iter()).is_none(), Jobs::sequential());
        assert_eq!(l, Some(vec![1, 3, 2]));
    }

    #[test]
    fn class_counts() {
        assert_eq!(Orbits::new(3).unwrap().len(), 4);
        assert_eq!(Orbits::new(4).unwrap().len(), 11);
        assert_eq!(Orbits::new(5).unwrap().len(), 34);
        assert_eq!(Orbits::new(6).unwrap().len(), 156);
        assert!(Orbits::new(8).is_err());
    }

    #[test]
    fn canonical_masks_agree_with_orbits() {
        let o = Orbits::new(4).unwrap();
        for h in crate::graph::all_labeled_graphs(4) {
            let c = canonical_mask(&h);
            assert_eq!(o.class_of(&h), o.class_of_mask(c));
            assert_eq!(o.representatives()[o.class_of(&h)].edge_mask(), c);
        }
    }

    #[test]
    fn class_flag_examples() {
        let c5 = LabeledGraph::cycle(5).unwrap();
        let f = class_oracles(&c5, Jobs::sequential());
        assert!(!f.permutation && !f.trivially_perfect);
        assert!(class_oracles(&LabeledGraph::complete(4).unwrap(), Jobs::sequential()).trivially_perfect);
        let p4 = LabeledGraph::path(4).unwrap();
        let f = class_oracles(&p4, Jobs::sequential());
        assert!(!f.trivially_perfect && f.permutation && f.bipartite_permutation);
        assert!(!is_p4_c4_free(&LabeledGraph::cycle(4).unwrap()));
    }

    #[test]
    fn small_census() {
        let cfg = CensusConfig::default();
        let rows = census(3, &["12".parse().unwrap(), "21".parse().unwrap()], &cfg).unwrap();
        for r in &rows {
            assert_eq!(r.labeled_total, 8);
            assert_eq!(r.labeled_count_pattern, Some(1));
            assert_eq!(r.labeled_count_oracle, Some(1));
            assert_eq!(r.agree, Some(true));
        }
        let rows = census(3, &["112".parse().unwrap()], &cfg).unwrap();
        assert_eq!(rows[0].labeled_count_pattern, None);
        assert_eq!(rows[0].agree, None);
    }

    #[test]
    fn crossvalidate_small() {
        for p in ["121", "231", "123", "132", "211"] {
            let row = crossvalidate(3, &p.parse().unwrap(), &budget(), Jobs::ALL).unwrap();
            assert!(row.agree(), "{p}: {:?}", row.disagreements);
        }
        assert!(crossvalidate(3, &"112".parse().unwrap(), &budget(), Jobs::ALL).is_err());
    }
}
