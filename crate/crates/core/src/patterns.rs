//! Ordered forbidden patterns and the pattern catalog.
//!
//! A pattern on `k` slots `x < y < z (< w)` constrains each slot pair to be an
//! edge, a non-edge, or unconstrained. A labeled graph contains the pattern
//! when some increasing vertex tuple satisfies all constraints; the vertex
//! order is always the order of the labels.

use std::fmt;
use std::sync::LazyLock;

use serde::Serialize;

use crate::graph::LabeledGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairConstraint {
    Edge,
    NonEdge,
    Free,
}

impl PairConstraint {
    #[inline]
    fn admits(self, adjacent: bool) -> bool {
        match self {
            PairConstraint::Edge => adjacent,
            PairConstraint::NonEdge => !adjacent,
            PairConstraint::Free => true,
        }
    }

    fn flipped(self) -> Self {
        match self {
            PairConstraint::Edge => PairConstraint::NonEdge,
            PairConstraint::NonEdge => PairConstraint::Edge,
            PairConstraint::Free => PairConstraint::Free,
        }
    }
}

/// An ordered pattern: `k` slots and one constraint per slot pair.
#[derive(Clone, PartialEq, Eq)]
pub struct OrderedPattern {
    name: String,
    arity: usize,
    // Constraint of slot pair (a, b), a < b, at index pair_index(a, b).
    constraints: Vec<PairConstraint>,
}

fn pair_index(a: usize, b: usize) -> usize {
    debug_assert!(a < b);
    b * (b - 1) / 2 + a
}

fn slot(c: char) -> usize {
    match c {
        'x' => 0,
        'y' => 1,
        'z' => 2,
        'w' => 3,
        _ => panic!("unknown slot {c:?}"),
    }
}

impl OrderedPattern {
    /// Builds a pattern from `(a, b, constraint)` triples with 0-based slots;
    /// unlisted pairs are free.
    pub fn new(name: impl Into<String>, arity: usize, pairs: &[(usize, usize, PairConstraint)]) -> Self {
        assert!(arity >= 2, "patterns need at least two slots");
        let mut constraints = vec![PairConstraint::Free; arity * (arity - 1) / 2];
        for &(a, b, c) in pairs {
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            assert!(a != b && b < arity, "slot pair ({a}, {b}) out of range");
            constraints[pair_index(a, b)] = c;
        }
        Self { name: name.into(), arity, constraints }
    }

    /// Compact constructor over slot letters: `edges = ["xz"], non_edges = ["yz"]`.
    fn from_slots(name: &str, arity: usize, edges: &[&str], non_edges: &[&str]) -> Self {
        let mut pairs = Vec::new();
        for (list, c) in [(edges, PairConstraint::Edge), (non_edges, PairConstraint::NonEdge)] {
            for s in list {
                let mut chars = s.chars();
                let (a, b) = (chars.next().unwrap(), chars.next().unwrap());
                pairs.push((slot(a), slot(b), c));
            }
        }
        Self::new(name, arity, &pairs)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn constraint(&self, a: usize, b: usize) -> PairConstraint {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.constraints[pair_index(a, b)]
    }

    /// The pattern with edges and non-edges exchanged.
    pub fn complemented(&self, name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            arity: self.arity,
            constraints: self.constraints.iter().map(|c| c.flipped()).collect(),
        }
    }

    /// Whether the vertices `tuple` (increasing) satisfy every constraint.
    pub fn matches(&self, g: &LabeledGraph, tuple: &[usize]) -> bool {
        tuple.len() == self.arity
            && tuple.windows(2).all(|p| p[0] < p[1])
            && (0..self.arity).all(|b| {
                (0..b).all(|a| self.constraints[pair_index(a, b)].admits(g.has_edge(tuple[a], tuple[b])))
            })
    }
}

impl fmt::Debug for OrderedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SLOTS: [char; 4] = ['x', 'y', 'z', 'w'];
        write!(f, "{}[", self.name)?;
        let mut first = true;
        for b in 0..self.arity {
            for a in 0..b {
                let c = self.constraints[pair_index(a, b)];
                if c == PairConstraint::Free {
                    continue;
                }
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                let name = |s: usize| SLOTS.get(s).copied().unwrap_or('?');
                let mark = if c == PairConstraint::Edge { "E" } else { "N" };
                write!(f, "{}{}:{mark}", name(a), name(b))?;
            }
        }
        f.write_str("]")
    }
}

/// A vertex tuple realizing a named pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PatternWitness {
    pub pattern: String,
    pub vertices: Vec<usize>,
}

/// Lexicographically smallest increasing tuple of `g` matching `p`.
pub fn find_pattern(g: &LabeledGraph, p: &OrderedPattern) -> Option<PatternWitness> {
    let mut tuple = Vec::with_capacity(p.arity);
    extend(g, p, &mut tuple).then(|| PatternWitness { pattern: p.name.clone(), vertices: tuple })
}

fn extend(g: &LabeledGraph, p: &OrderedPattern, tuple: &mut Vec<usize>) -> bool {
    let t = tuple.len();
    if t == p.arity {
        return true;
    }
    let n = g.n();
    let lo = tuple.last().map_or(1, |&v| v + 1);
    // Leave room for the slots after this one.
    let hi = (n + t + 1).saturating_sub(p.arity);
    for v in lo..=hi {
        let fits = tuple
            .iter()
            .enumerate()
            .all(|(a, &u)| p.constraints[pair_index(a, t)].admits(g.has_edge(u, v)));
        if fits {
            tuple.push(v);
            if extend(g, p, tuple) {
                return true;
            }
            tuple.pop();
        }
    }
    false
}

/// First witness over `patterns`, scanning them in the given order.
pub fn find_any<'a, I>(g: &LabeledGraph, patterns: I) -> Option<PatternWitness>
where
    I: IntoIterator<Item = &'a OrderedPattern>,
{
    patterns.into_iter().find_map(|p| find_pattern(g, p))
}

/// All umbrellas `a < b < c` with `ab, bc` non-edges and `ac` an edge.
pub fn umbrellas(g: &LabeledGraph) -> Vec<(usize, usize, usize)> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 1..=n {
        for c in a + 2..=n {
            if !g.has_edge(a, c) {
                continue;
            }
            for b in a + 1..c {
                if !g.has_edge(a, b) && !g.has_edge(b, c) {
                    out.push((a, b, c));
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Middle vertices of umbrellas, ascending and without repetition.
pub fn b_vertices(g: &LabeledGraph) -> Vec<usize> {
    let mut bs: Vec<usize> = umbrellas(g).into_iter().map(|(_, b, _)| b).collect();
    bs.sort_unstable();
    bs.dedup();
    bs
}

/// The constant pattern catalog.
pub mod catalog {
    use super::*;

    fn p3(name: &str, edges: &[&str], non_edges: &[&str]) -> OrderedPattern {
        OrderedPattern::from_slots(name, 3, edges, non_edges)
    }

    fn p4(name: &str, edges: &[&str], non_edges: &[&str]) -> OrderedPattern {
        OrderedPattern::from_slots(name, 4, edges, non_edges)
    }

    /// Interval orderings: if `xz` is an edge then so is `yz`.
    pub static FP_INT: LazyLock<OrderedPattern> = LazyLock::new(|| p3("FP_INT", &["xz"], &["yz"]));
    pub static FP_COMP: LazyLock<OrderedPattern> =
        LazyLock::new(|| p3("FP_COMP", &["xy", "yz"], &["xz"]));
    pub static FP_COCOMP: LazyLock<OrderedPattern> =
        LazyLock::new(|| p3("FP_COCOMP", &["xz"], &["xy", "yz"]));
    pub static FP_TRIANGLE: LazyLock<OrderedPattern> =
        LazyLock::new(|| p3("FP_TRIANGLE", &["xy", "yz", "xz"], &[]));

    /// Interval graphs.
    pub static INTERVAL: LazyLock<Vec<OrderedPattern>> = LazyLock::new(|| vec![FP_INT.clone()]);
    /// Permutation graphs; also labeled 121-representability.
    pub static PERMUTATION: LazyLock<Vec<OrderedPattern>> =
        LazyLock::new(|| vec![FP_COMP.clone(), FP_COCOMP.clone()]);
    /// Trivially perfect graphs; also labeled 231-representability.
    pub static TRIVIALLY_PERFECT: LazyLock<Vec<OrderedPattern>> =
        LazyLock::new(|| vec![FP_INT.clone(), FP_COMP.clone()]);
    pub static BIPARTITE_PERMUTATION: LazyLock<Vec<OrderedPattern>> =
        LazyLock::new(|| vec![FP_COMP.clone(), FP_COCOMP.clone(), FP_TRIANGLE.clone()]);

    /// Labeled 12-representability.
    pub static FP12: LazyLock<Vec<OrderedPattern>> = LazyLock::new(|| {
        vec![
            p3("FP12.a", &["xy", "yz"], &["xz"]),
            p4("FP12.b", &["xz", "yw"], &["xw", "xy", "yz", "zw"]),
            p4("FP12.c", &["xw", "yz"], &["xy", "xz", "yw", "zw"]),
        ]
    });

    /// Labeled 123-representability.
    pub static FP123: LazyLock<Vec<OrderedPattern>> = LazyLock::new(|| {
        vec![
            p3("FP123.a", &["xy", "yz"], &["xz"]),
            p4("FP123.b", &["yz"], &["xz", "yw"]),
            p4("FP123.c", &["xz"], &["xw", "yz"]),
            p4("FP123.d", &["yw"], &["xw", "yz"]),
        ]
    });

    /// Complements of [`FP123`]; `CFP123.b` alone characterizes MPT graphs.
    pub static CFP123: LazyLock<Vec<OrderedPattern>> = LazyLock::new(|| {
        vec![
            p3("CFP123.a", &["xz"], &["xy", "yz"]),
            p4("CFP123.b", &["xz", "yw"], &["yz"]),
            p4("CFP123.c", &["xw", "yz"], &["xz"]),
            p4("CFP123.d", &["xw", "yz"], &["yw"]),
        ]
    });

    /// Labeled 132-representability.
    pub static FP132: LazyLock<Vec<OrderedPattern>> = LazyLock::new(|| {
        vec![
            p3("FP132.a", &["yz"], &["xz"]),
            p4("FP132.b", &["xw"], &["xz", "yw"]),
        ]
    });

    /// Labeled 211-representability.
    pub static FP211: LazyLock<Vec<OrderedPattern>> = LazyLock::new(|| {
        vec![
            p3("FP211.a", &["xy", "yz"], &["xz"]),
            p4("FP211.b", &["xw", "yz"], &["xy", "yw"]),
            p4("FP211.c", &["xz", "yw"], &["xy", "yz"]),
        ]
    });

    /// Grounded L-graphs.
    pub static GROUNDED_L: LazyLock<Vec<OrderedPattern>> = LazyLock::new(|| {
        vec![
            p4("FP_GROUNDED_L.1", &["xz", "yw"], &["xy", "yz"]),
            p4("FP_GROUNDED_L.2", &["xw", "xy", "yz"], &["xz"]),
        ]
    });

    /// Looks a pattern up by its stable name.
    pub fn by_name(name: &str) -> Option<OrderedPattern> {
        let singles = [&*FP_INT, &*FP_COMP, &*FP_COCOMP, &*FP_TRIANGLE];
        let sets = [&*FP12, &*FP123, &*CFP123, &*FP132, &*FP211, &*GROUNDED_L];
        singles
            .into_iter()
            .chain(sets.into_iter().flatten())
            .find(|p| p.name() == name)
            .cloned()
    }
}
