//! Representant constructions for the patterns with a known characterization.
//!
//! Each `represent_*` function either builds a word that 12-represents the
//! graph and avoids the pattern, or returns an ordered-pattern witness showing
//! that no such word exists. Every word is re-verified before it is returned.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geometry::{
    build_co132_interval_model, build_mpt_model, co132_word, hook_to_mpt, hook_word,
    mpt_to_hook, nested_pair, unit_adjust, validate_mpt, HookModel, MptModel,
};
use crate::graph::LabeledGraph;
use crate::oracle::{brute_force_representant, SearchBudget, SearchOutcome};
use crate::patterns::catalog::{
    FP12, FP123, FP132, FP211, FP_COCOMP, FP_COMP, FP_TRIANGLE, PERMUTATION,
    TRIVIALLY_PERFECT,
};
use crate::patterns::{b_vertices, find_any, find_pattern, umbrellas, PatternWitness};
use crate::word::{avoids, normalize_at_most_twice, twelve_represents, Pattern, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Pattern,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// A verified representant avoiding every pattern in `avoided`.
    Represented { word: Word, avoided: Vec<Pattern>, method: Method },
    /// An ordered forbidden pattern present in the graph.
    Refuted(PatternWitness),
    /// The exhaustive search found nothing within the budget.
    RefutedByOracle { budget: SearchBudget },
    Unknown { reason: String },
}

impl Certificate {
    /// Builds a `Represented` certificate, panicking if the word is wrong.
    fn represented(g: &LabeledGraph, word: Word, avoided: &[Pattern], method: Method) -> Self {
        assert!(
            twelve_represents(&word, g).expect("constructed words use every label"),
            "word {word} does not 12-represent {g}"
        );
        for p in avoided {
            assert!(avoids(&word, p), "word {word} contains {p}");
        }
        Certificate::Represented { word, avoided: avoided.to_vec(), method }
    }

    pub fn word(&self) -> Option<&Word> {
        match self {
            Certificate::Represented { word, .. } => Some(word),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&PatternWitness> {
        match self {
            Certificate::Refuted(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_represented(&self) -> bool {
        matches!(self, Certificate::Represented { .. })
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Certificate::Refuted(_) | Certificate::RefutedByOracle { .. })
    }

    pub fn status(&self) -> &'static str {
        match self {
            Certificate::Represented { .. } => "represented",
            Certificate::Refuted(_) => "refuted",
            Certificate::RefutedByOracle { .. } => "refuted_by_oracle",
            Certificate::Unknown { .. } => "unknown",
        }
    }

    pub fn method(&self) -> Method {
        match self {
            Certificate::Represented { method, .. } => *method,
            Certificate::Refuted(_) => Method::Pattern,
            Certificate::RefutedByOracle { .. } | Certificate::Unknown { .. } => Method::Oracle,
        }
    }

    /// 0 represented, 1 refuted, 2 unknown.
    pub fn exit_code(&self) -> i32 {
        match self {
            Certificate::Represented { .. } => 0,
            Certificate::Refuted(_) | Certificate::RefutedByOracle { .. } => 1,
            Certificate::Unknown { .. } => 2,
        }
    }
}

#[derive(Serialize)]
struct CertificateJson<'a> {
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    word: Option<&'a Word>,
    #[serde(skip_serializing_if = "Option::is_none")]
    avoided_patterns: Option<&'a [Pattern]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a PatternWitness>,
    method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    budget: Option<&'a SearchBudget>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'a str>,
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut out = CertificateJson {
            status: self.status(),
            word: None,
            avoided_patterns: None,
            witness: None,
            method: self.method(),
            budget: None,
            reason: None,
        };
        match self {
            Certificate::Represented { word, avoided, .. } => {
                out.word = Some(word);
                out.avoided_patterns = Some(avoided);
            }
            Certificate::Refuted(w) => out.witness = Some(w),
            Certificate::RefutedByOracle { budget } => out.budget = Some(budget),
            Certificate::Unknown { reason } => out.reason = Some(reason),
        }
        out.serialize(s)
    }
}

/// A set of patterns a representant must avoid. Empty means plain 12-representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Avoidance(Vec<Pattern>);

impl Avoidance {
    pub fn new(mut patterns: Vec<Pattern>) -> Self {
        patterns.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        patterns.dedup();
        Self(patterns)
    }

    pub fn none() -> Self {
        Self(Vec::new())
    }

    pub fn single(p: Pattern) -> Self {
        Self(vec![p])
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.0
    }

    /// Each pattern replaced by `c(r(p))`.
    pub fn dual(&self) -> Self {
        Self::new(self.0.iter().map(Pattern::dual).collect())
    }

    pub fn avoided_by(&self, w: &Word) -> bool {
        self.0.iter().all(|p| avoids(w, p))
    }

    fn key(&self) -> Vec<String> {
        self.0.iter().map(|p| p.to_string()).collect()
    }
}

impl fmt::Display for Avoidance {
    /// `none`, `123`, or `set:121+212`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.as_slice() {
            [] => f.write_str("none"),
            [p] => write!(f, "{p}"),
            ps => write!(f, "set:{}", ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("+")),
        }
    }
}

impl FromStr for Avoidance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("none") {
            return Ok(Self::none());
        }
        let body = s.strip_prefix("set:").unwrap_or(s);
        let patterns = body
            .split('+')
            .map(|t| t.trim().parse::<Pattern>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(patterns))
    }
}

fn pat(s: &str) -> Pattern {
    s.parse().expect("pattern literal")
}

/// Arc of the tournament used for permutation graphs: for `i < j`, `i -> j`
/// when `ij` is a non-edge and `j -> i` when it is an edge.
pub fn orientation_arc(g: &LabeledGraph, u: usize, v: usize) -> bool {
    if u < v {
        !g.has_edge(u, v)
    } else {
        g.has_edge(u, v)
    }
}

/// The permutation 12-representing `g`, or a witness that none exists.
fn permutation_word(g: &LabeledGraph) -> std::result::Result<Word, PatternWitness> {
    if let Some(w) = find_any(g, PERMUTATION.iter()) {
        return Err(w);
    }
    let n = g.n();
    let out: Vec<usize> = (1..=n)
        .map(|v| (1..=n).filter(|&u| u != v && orientation_arc(g, v, u)).count())
        .collect();
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(out[v - 1]));
    // A transitive tournament has out-degrees n-1, ..., 0, so the order is unique.
    for (k, &v) in order.iter().enumerate() {
        assert_eq!(out[v - 1], n - 1 - k, "orientation of {g} is cyclic without a witness");
    }
    Ok(Word::new(order).expect("labels are positive"))
}

/// Source-first topological order of the orientation, as a permutation word.
pub fn permutation_representant(g: &LabeledGraph) -> Certificate {
    match permutation_word(g) {
        Ok(w) => Certificate::represented(g, w, &[], Method::Pattern),
        Err(w) => Certificate::Refuted(w),
    }
}

pub fn represent_121(g: &LabeledGraph) -> Certificate {
    match permutation_word(g) {
        Ok(w) => Certificate::represented(g, w, &[pat("121")], Method::Pattern),
        Err(w) => Certificate::Refuted(w),
    }
}

pub fn represent_231(g: &LabeledGraph) -> Certificate {
    if let Some(w) = find_any(g, TRIVIALLY_PERFECT.iter()) {
        return Certificate::Refuted(w);
    }
    assert_eq!(find_pattern(g, &FP_COCOMP), None, "FP_INT and FP_COMP free, yet FP_COCOMP in {g}");
    let w = permutation_word(g).expect("no permutation pattern");
    Certificate::represented(g, w, &[pat("231")], Method::Pattern)
}

fn isolated(g: &LabeledGraph) -> Vec<usize> {
    (1..=g.n()).filter(|&v| g.is_isolated(v)).collect()
}

fn lift_witness(w: PatternWitness, labels: &[usize]) -> PatternWitness {
    PatternWitness {
        pattern: w.pattern,
        vertices: w.vertices.iter().map(|&v| labels[v - 1]).collect(),
    }
}

/// 321-avoiding representant.
///
/// Without isolated vertices this is the permutation of a triangle-free
/// permutation graph. Isolated vertices may be needed twice: each is written
/// once just before the first larger letter and once just after the last
/// smaller one. If that arrangement ever fails, the oracle decides.
pub fn represent_321(g: &LabeledGraph, oracle: Option<&SearchBudget>) -> Certificate {
    let avoided = [pat("321")];
    let core_labels: Vec<usize> = (1..=g.n()).filter(|&v| !g.is_isolated(v)).collect();
    if core_labels.is_empty() {
        return Certificate::represented(g, Word::ascending(g.n()), &avoided, Method::Pattern);
    }
    let core = g.induced(&core_labels).expect("labels in range");
    let bad = [FP_COMP.clone(), FP_COCOMP.clone(), FP_TRIANGLE.clone()];
    if let Some(w) = find_any(&core, bad.iter()) {
        return Certificate::Refuted(lift_witness(w, &core_labels));
    }
    if find_any(g, bad.iter()).is_none() {
        let w = permutation_word(g).expect("no permutation pattern");
        return Certificate::represented(g, w, &avoided, Method::Pattern);
    }
    let pi = permutation_word(&core).expect("no permutation pattern in the core");
    let mut letters: Vec<usize> = pi.letters().iter().map(|&v| core_labels[v - 1]).collect();
    for d in isolated(g) {
        let first = letters.iter().position(|&x| x > d).unwrap_or(letters.len());
        letters.insert(first, d);
        let last = letters.iter().rposition(|&x| x < d).map_or(0, |p| p + 1);
        letters.insert(last.max(first + 1), d);
    }
    let w = Word::new(letters).expect("labels are positive");
    if twelve_represents(&w, g).unwrap_or(false) && avoids(&w, &avoided[0]) {
        return Certificate::represented(g, w, &avoided, Method::Pattern);
    }
    oracle_certificate(g, &Avoidance::single(pat("321")), oracle)
}

/// Everything the 123 construction builds on the way to its word.
#[derive(Debug, Clone)]
pub struct Pipeline123 {
    pub complement: LabeledGraph,
    pub mpt: MptModel,
    pub unit: MptModel,
    pub hooks: HookModel,
    pub word: Word,
}

/// Runs the 123 construction with every intermediate check asserted.
pub fn pipeline_123(g: &LabeledGraph) -> std::result::Result<Pipeline123, PatternWitness> {
    if let Some(w) = find_any(g, FP123.iter()) {
        return Err(w);
    }
    let h = g.complement();
    let mpt = match build_mpt_model(&h) {
        Ok(m) => m,
        Err(e) => panic!("MPT construction failed on the complement of {g}: {e}"),
    };
    if let Some(pair) = nested_pair(&mpt) {
        panic!("one-sided intervals {pair:?} are nested for {h}");
    }
    let unit = unit_adjust(&mpt).expect("proper family");
    assert!(unit.is_unit(), "unit adjustment left a non-unit interval");
    assert!(validate_mpt(&unit, &h), "unit adjustment changed the graph");
    assert!(same_order(&mpt, &unit), "unit adjustment reordered endpoints");
    let hooks = mpt_to_hook(&unit);
    assert_eq!(hook_to_mpt(&hooks), unit);
    let word = hook_word(&hooks).expect("unit model with distinct endpoints");
    Ok(Pipeline123 { complement: h, mpt, unit, hooks, word })
}

/// Whether two models order all their coordinates the same way.
pub fn same_order(a: &MptModel, b: &MptModel) -> bool {
    let flat = |m: &MptModel| {
        m.intervals()
            .iter()
            .flat_map(|iv| [iv.l.clone(), iv.p.clone(), iv.r.clone()])
            .collect::<Vec<_>>()
    };
    let (x, y) = (flat(a), flat(b));
    x.len() == y.len()
        && (0..x.len()).all(|i| (0..x.len()).all(|j| x[i].cmp(&x[j]) == y[i].cmp(&y[j])))
}

pub fn represent_123(g: &LabeledGraph) -> Certificate {
    match pipeline_123(g) {
        Ok(p) => Certificate::represented(g, p.word, &[pat("123")], Method::Pattern),
        Err(w) => Certificate::Refuted(w),
    }
}

pub fn represent_132(g: &LabeledGraph) -> Certificate {
    if let Some(w) = find_any(g, FP132.iter()) {
        return Certificate::Refuted(w);
    }
    let model = build_co132_interval_model(g).expect("no three-vertex 132 pattern");
    let w = co132_word(&model).expect("endpoints are distinct");
    Certificate::represented(g, w, &[pat("132")], Method::Pattern)
}

/// The graphs `G_1 = g, ..., G_n`: `G_i` adds `ij` to `G_{i-1}` for every
/// umbrella `(k, i, j)` of `G_{i-1}`.
///
/// For graphs without an `FP211` pattern each step is checked to create no
/// new b-vertex and no `FP_COMP` pattern.
pub fn closure_211(g: &LabeledGraph) -> Vec<LabeledGraph> {
    let check = find_any(g, FP211.iter()).is_none();
    let mut out = vec![g.clone()];
    for i in 2..=g.n() {
        let prev = out.last().expect("starts with g");
        let mut next = prev.clone();
        for j in i + 1..=g.n() {
            let umbrella = !prev.has_edge(i, j)
                && (1..i).any(|k| !prev.has_edge(k, i) && prev.has_edge(k, j));
            if umbrella {
                next.add_edge(i, j).expect("labels in range");
            }
        }
        if check {
            let before = b_vertices(prev);
            let after = b_vertices(&next);
            assert!(
                after.iter().all(|v| before.contains(v)),
                "step {i} of the closure of {g} creates b-vertices {after:?} from {before:?}"
            );
            assert_eq!(find_pattern(&next, &FP_COMP), None, "step {i} of the closure of {g}");
        }
        out.push(next);
    }
    out
}

/// `s . pi`: the b-vertices in ascending order, then the permutation of the closure.
pub fn represent_211(g: &LabeledGraph) -> Certificate {
    if let Some(w) = find_any(g, FP211.iter()) {
        return Certificate::Refuted(w);
    }
    let closure = closure_211(g);
    let last = closure.last().expect("nonempty");
    assert!(umbrellas(last).is_empty(), "closure of {g} still has an umbrella");
    let pi = permutation_word(last).expect("closure is a permutation graph");
    let s = Word::new(b_vertices(g)).expect("labels are positive");
    Certificate::represented(g, s.concat(&pi), &[pat("211")], Method::Pattern)
}

/// Rewrites a 211-avoiding representant into the form `s . pi`, where `s`
/// lists the doubled letters in ascending order and `pi` is a permutation.
pub fn canonicalize_211(w: &Word, g: &LabeledGraph) -> Result<Word> {
    let p211 = pat("211");
    if !avoids(w, &p211) {
        return Err(Error::ContainsPattern(p211.to_string()));
    }
    let w = normalize_at_most_twice(w, g)?;
    let doubled: Vec<usize> = (1..=g.n()).filter(|&v| w.occurrences(v) == 2).collect();
    let mut seen = vec![false; g.n() + 1];
    let mut rest = Vec::with_capacity(w.len());
    for &l in w.letters() {
        if w.occurrences(l) == 2 && !seen[l] {
            seen[l] = true;
            continue;
        }
        rest.push(l);
    }
    let out = Word::new(doubled)?.concat(&Word::new(rest)?);
    assert!(twelve_represents(&out, g)?, "moving first copies forward broke {w}");
    assert!(avoids(&out, &p211));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternSet {
    /// `{121, 212}`
    Set121And212,
    /// `{211, 221}`
    Set211And221,
}

impl PatternSet {
    pub fn patterns(self) -> Vec<Pattern> {
        match self {
            PatternSet::Set121And212 => vec![pat("121"), pat("212")],
            PatternSet::Set211And221 => vec![pat("211"), pat("221")],
        }
    }
}

/// Representants avoiding a whole set of patterns.
///
/// For `{211, 221}` only isolated vertices may repeat: with `D` the isolated
/// vertices in ascending order, the word is `D . pi . D` for the permutation
/// `pi` of the rest.
pub fn represent_set(g: &LabeledGraph, set: PatternSet) -> Certificate {
    let avoided = set.patterns();
    match permutation_word(g) {
        Ok(w) => return Certificate::represented(g, w, &avoided, Method::Pattern),
        Err(w) if set == PatternSet::Set121And212 => return Certificate::Refuted(w),
        Err(_) => {}
    }
    let d = isolated(g);
    let core_labels: Vec<usize> = (1..=g.n()).filter(|v| !d.contains(v)).collect();
    let core = g.induced(&core_labels).expect("a graph with a pattern has edges");
    match permutation_word(&core) {
        Ok(pi) => {
            let mid: Vec<usize> = pi.letters().iter().map(|&v| core_labels[v - 1]).collect();
            let dw = Word::new(d).expect("labels are positive");
            let w = dw.concat(&Word::new(mid).expect("labels are positive")).concat(&dw);
            Certificate::represented(g, w, &avoided, Method::Pattern)
        }
        Err(w) => Certificate::Refuted(lift_witness(w, &core_labels)),
    }
}

fn nonedge_witness(g: &LabeledGraph, want_edge: bool) -> Option<PatternWitness> {
    let n = g.n();
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .find(|&(i, j)| g.has_edge(i, j) != want_edge)
        .map(|(i, j)| PatternWitness {
            pattern: if want_edge { "NONEDGE" } else { "EDGE" }.into(),
            vertices: vec![i, j],
        })
}

/// Plain 12-representation (or 111-avoidance, which is the same thing).
fn represent_general(g: &LabeledGraph, avoid: &Avoidance, oracle: Option<&SearchBudget>) -> Certificate {
    if let Some(w) = find_any(g, FP12.iter()) {
        return Certificate::Refuted(w);
    }
    if let Ok(w) = permutation_word(g) {
        return Certificate::represented(g, w, avoid.patterns(), Method::Pattern);
    }
    oracle_certificate(g, avoid, oracle)
}

pub fn represent_111(g: &LabeledGraph, oracle: Option<&SearchBudget>) -> Certificate {
    represent_general(g, &Avoidance::single(pat("111")), oracle)
}

/// Exhaustive search, or `Unknown` when the oracle is off or out of budget.
pub fn oracle_certificate(g: &LabeledGraph, avoid: &Avoidance, oracle: Option<&SearchBudget>) -> Certificate {
    let Some(budget) = oracle else {
        return Certificate::Unknown {
            reason: format!("no pattern characterization for {avoid} and the oracle is disabled"),
        };
    };
    match brute_force_representant(g, avoid.patterns(), budget) {
        SearchOutcome::Found(w) => Certificate::represented(g, w, avoid.patterns(), Method::Oracle),
        SearchOutcome::Absent => Certificate::RefutedByOracle { budget: budget.clone() },
        SearchOutcome::Exceeded(reason) => Certificate::Unknown { reason },
    }
}

// Solves the dual problem on the supplement and maps the answer back.
fn via_supplement(g: &LabeledGraph, avoid: &Avoidance, f: impl FnOnce(&LabeledGraph) -> Certificate) -> Certificate {
    let n = g.n();
    match f(&g.supplement()) {
        Certificate::Represented { word, method, .. } => {
            let back = word.reverse().complement(n).expect("letters within 1..=n");
            Certificate::represented(g, back, avoid.patterns(), method)
        }
        Certificate::Refuted(w) => {
            let mut vertices: Vec<usize> = w.vertices.iter().map(|&v| n + 1 - v).collect();
            vertices.sort_unstable();
            Certificate::Refuted(PatternWitness { pattern: format!("rc({})", w.pattern), vertices })
        }
        other => other,
    }
}

/// Dispatches to the construction for `avoid`, falling back to the oracle
/// (when given) for pattern sets without a characterization.
pub fn represent(g: &LabeledGraph, avoid: &Avoidance, oracle: Option<&SearchBudget>) -> Certificate {
    let key = avoid.key();
    let key: Vec<&str> = key.iter().map(String::as_str).collect();
    match key.as_slice() {
        [] | ["111"] => represent_general(g, avoid, oracle),
        ["11"] => match permutation_word(g) {
            Ok(w) => Certificate::represented(g, w, avoid.patterns(), Method::Pattern),
            Err(w) => Certificate::Refuted(w),
        },
        ["12"] => match nonedge_witness(g, true) {
            None => Certificate::represented(g, Word::descending(g.n()), avoid.patterns(), Method::Pattern),
            Some(w) => Certificate::Refuted(w),
        },
        ["21"] => match nonedge_witness(g, false) {
            None => Certificate::represented(g, Word::ascending(g.n()), avoid.patterns(), Method::Pattern),
            Some(w) => Certificate::Refuted(w),
        },
        ["121"] => represent_121(g),
        ["212"] => via_supplement(g, avoid, represent_121),
        ["231"] => represent_231(g),
        ["312"] => via_supplement(g, avoid, represent_231),
        ["321"] => represent_321(g, oracle),
        ["123"] => represent_123(g),
        ["132"] => represent_132(g),
        ["213"] => via_supplement(g, avoid, represent_132),
        ["211"] => represent_211(g),
        ["221"] => via_supplement(g, avoid, represent_211),
        ["121", "212"] => represent_set(g, PatternSet::Set121And212),
        ["211", "221"] => represent_set(g, PatternSet::Set211And221),
        _ => oracle_certificate(g, avoid, oracle),
    }
}

/// The pattern-based yes/no answer, where a characterization exists.
pub fn decide_by_patterns(g: &LabeledGraph, avoid: &Avoidance) -> Option<bool> {
    let free = |g: &LabeledGraph, set: &[crate::patterns::OrderedPattern]| find_any(g, set.iter()).is_none();
    let key = avoid.key();
    let key: Vec<&str> = key.iter().map(String::as_str).collect();
    let sup = || g.supplement();
    Some(match key.as_slice() {
        [] | ["111"] => free(g, &FP12),
        ["11"] | ["121"] | ["121", "212"] => free(g, &PERMUTATION),
        ["212"] => free(&sup(), &PERMUTATION),
        ["12"] => g.is_complete(),
        ["21"] => g.is_edgeless(),
        ["231"] => free(g, &TRIVIALLY_PERFECT),
        ["312"] => free(&sup(), &TRIVIALLY_PERFECT),
        ["123"] => free(g, &FP123),
        ["132"] => free(g, &FP132),
        ["213"] => free(&sup(), &FP132),
        ["211"] => free(g, &FP211),
        ["221"] => free(&sup(), &FP211),
        ["211", "221"] => {
            let core: Vec<usize> = (1..=g.n()).filter(|&v| !g.is_isolated(v)).collect();
            core.is_empty() || free(&g.induced(&core).expect("labels in range"), &PERMUTATION)
        }
        _ => return None,
    })
}

/// Whether the oracle confirms that `K_k` has no representant avoiding
/// `k (k-1) ... 1`. `None` when `k` is outside the budget.
pub fn descending_clique_check(k: usize, budget: &SearchBudget) -> Option<bool> {
    assert!(k >= 2, "cliques start at k = 2");
    if k > budget.max_n {
        return None;
    }
    let g = LabeledGraph::complete(k).expect("k checked against the budget");
    match brute_force_representant(&g, &[Pattern::decreasing(k)], budget) {
        SearchOutcome::Found(_) => Some(false),
        SearchOutcome::Absent => Some(true),
        SearchOutcome::Exceeded(_) => None,
    }
}
