//! Interval models of complements, read off into 132-avoiding words.

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::patterns::{catalog::FP132, find_pattern};
use crate::word::Word;

use super::{int, ratio, Rational};

/// Intervals `[l_i, r_i]` indexed by vertex, with `r_i = i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Co132IntervalModel {
    anchors: Vec<usize>,
    intervals: Vec<(Rational, Rational)>,
}

impl Co132IntervalModel {
    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    /// The integer anchors `l'_i`.
    pub fn anchors(&self) -> &[usize] {
        &self.anchors
    }

    pub fn intervals(&self) -> &[(Rational, Rational)] {
        &self.intervals
    }

    /// Intersection graph of the intervals (closed).
    pub fn intersection_graph(&self) -> LabeledGraph {
        let n = self.n();
        let mut g = LabeledGraph::empty(n).expect("models are built from graphs");
        for u in 1..=n {
            for v in u + 1..=n {
                let (a, b) = &self.intervals[u - 1];
                let (c, d) = &self.intervals[v - 1];
                if a <= d && c <= b {
                    g.add_edge(u, v).expect("labels in range");
                }
            }
        }
        g
    }
}

/// `l'_i = min(i, j)` where `j` is the smallest non-neighbor of `i`.
pub fn co132_anchors(g: &LabeledGraph) -> Vec<usize> {
    (1..=g.n())
        .map(|i| (1..i).find(|&j| !g.has_edge(i, j)).unwrap_or(i))
        .collect()
}

/// Interval model of the complement of `g`: `l_i = l'_i - i/(n+1)`, `r_i = i`.
///
/// Needs only the three-vertex 132 pattern to be absent, which makes every
/// vertex adjacent to an initial run of smaller labels. The four-vertex
/// pattern matters for avoidance of the word, not for the model.
pub fn build_co132_interval_model(g: &LabeledGraph) -> Result<Co132IntervalModel> {
    if let Some(w) = find_pattern(g, &FP132[0]) {
        return Err(Error::Forbidden(w));
    }
    let n = g.n() as i64;
    let anchors = co132_anchors(g);
    let intervals = anchors
        .iter()
        .enumerate()
        .map(|(k, &a)| {
            let i = k as i64 + 1;
            (int(a as i64) - ratio(i, n + 1), int(i))
        })
        .collect();
    let model = Co132IntervalModel { anchors, intervals };
    assert_eq!(
        model.intersection_graph(),
        g.complement(),
        "interval model does not describe the complement"
    );
    Ok(model)
}

/// Labels of all `2n` endpoints, largest coordinate first.
pub fn co132_word(m: &Co132IntervalModel) -> Result<Word> {
    let mut ends: Vec<(&Rational, usize)> = Vec::with_capacity(2 * m.n());
    for (k, (l, r)) in m.intervals().iter().enumerate() {
        ends.push((l, k + 1));
        ends.push((r, k + 1));
    }
    ends.sort_by(|a, b| b.0.cmp(a.0));
    if let Some(w) = ends.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(Error::Coincident(format!(
            "endpoints of intervals {} and {}",
            w[0].1, w[1].1
        )));
    }
    Word::new(ends.into_iter().map(|(_, v)| v).collect())
}
