//! Hooks and sticks with their corners on the line `y = -x`.
//!
//! A hook with corner `(c, -c)` has a vertical arm up to `(c, -l)` and a
//! horizontal arm right to `(r, -c)`. When an arm has length zero the hook is a
//! stick. For unit hooks both free endpoints lie on the line `y = -x + 1`.

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::word::Word;

use super::mpt::{MptModel, PointedInterval};
use super::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hook {
    /// `-y` of the top endpoint.
    pub l: Rational,
    /// `x` of the corner.
    pub c: Rational,
    /// `x` of the right endpoint.
    pub r: Rational,
}

type Point = (Rational, Rational);

impl Hook {
    pub fn corner(&self) -> Point {
        (self.c.clone(), -self.c.clone())
    }

    pub fn top(&self) -> Point {
        (self.c.clone(), -self.l.clone())
    }

    pub fn right(&self) -> Point {
        (self.r.clone(), -self.c.clone())
    }

    pub fn is_vertical_stick(&self) -> bool {
        self.r == self.c && self.l != self.c
    }

    pub fn is_horizontal_stick(&self) -> bool {
        self.l == self.c && self.r != self.c
    }

    // Both arms as closed boxes; a missing arm degenerates to the corner.
    fn arms(&self) -> [(Point, Point); 2] {
        let (cx, cy) = self.corner();
        let (_, ty) = self.top();
        let (rx, _) = self.right();
        [((cx.clone(), cy.clone()), (cx.clone(), ty)), ((cx, cy.clone()), (rx, cy))]
    }

    /// Whether the two L-shapes share a point. Touching counts.
    pub fn intersects(&self, other: &Hook) -> bool {
        self.arms()
            .iter()
            .any(|a| other.arms().iter().any(|b| boxes_overlap(a, b)))
    }
}

// Boxes spanned by two corner points, closed.
fn boxes_overlap(a: &(Point, Point), b: &(Point, Point)) -> bool {
    let span = |p: &Rational, q: &Rational| if p <= q { (p.clone(), q.clone()) } else { (q.clone(), p.clone()) };
    let (ax0, ax1) = span(&a.0 .0, &a.1 .0);
    let (ay0, ay1) = span(&a.0 .1, &a.1 .1);
    let (bx0, bx1) = span(&b.0 .0, &b.1 .0);
    let (by0, by1) = span(&b.0 .1, &b.1 .1);
    ax0 <= bx1 && bx0 <= ax1 && ay0 <= by1 && by0 <= ay1
}

/// Hooks indexed by vertex `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HookModel {
    hooks: Vec<Hook>,
}

impl HookModel {
    pub fn new(hooks: Vec<Hook>) -> Result<Self> {
        if hooks.is_empty() {
            return Err(Error::InvalidModel("no hooks".into()));
        }
        if let Some(h) = hooks.iter().find(|h| h.l > h.c || h.c > h.r) {
            return Err(Error::InvalidModel(format!("hook needs l <= c <= r, got {h:?}")));
        }
        Ok(Self { hooks })
    }

    pub fn n(&self) -> usize {
        self.hooks.len()
    }

    pub fn hooks(&self) -> &[Hook] {
        &self.hooks
    }

    pub fn get(&self, v: usize) -> &Hook {
        &self.hooks[v - 1]
    }

    /// Each arm has length 0 or 1, and at least one has length 1.
    pub fn is_unit(&self) -> bool {
        let (zero, one) = (int(0), int(1));
        self.hooks.iter().all(|h| {
            let up = &h.c - &h.l;
            let right = &h.r - &h.c;
            (up == zero || up == one) && (right == zero || right == one) && (up == one || right == one)
        })
    }

    /// Vertex indices sorted by corner, top-left first. Corners must be distinct.
    pub fn corner_order(&self) -> Result<Vec<usize>> {
        let mut order: Vec<usize> = (1..=self.n()).collect();
        order.sort_by(|&a, &b| self.get(a).c.cmp(&self.get(b).c));
        if let Some(w) = order.windows(2).find(|w| self.get(w[0]).c == self.get(w[1]).c) {
            return Err(Error::Coincident(format!("corners of hooks {} and {}", w[0], w[1])));
        }
        Ok(order)
    }
}

pub fn mpt_to_hook(m: &MptModel) -> HookModel {
    let hooks = m
        .intervals()
        .iter()
        .map(|iv| Hook { l: iv.l.clone(), c: iv.p.clone(), r: iv.r.clone() })
        .collect();
    HookModel { hooks }
}

pub fn hook_to_mpt(h: &HookModel) -> MptModel {
    let intervals = h
        .hooks()
        .iter()
        .map(|k| PointedInterval { l: k.l.clone(), p: k.c.clone(), r: k.r.clone() })
        .collect();
    MptModel::new(intervals).expect("hook models are nonempty")
}

/// Intersection graph of the hooks, vertices labeled by corner order.
pub fn hook_intersection_graph(h: &HookModel) -> Result<LabeledGraph> {
    let order = h.corner_order()?;
    let mut g = LabeledGraph::empty(h.n())?;
    for (a, &u) in order.iter().enumerate() {
        for (b, &v) in order.iter().enumerate().skip(a + 1) {
            if h.get(u).intersects(h.get(v)) {
                g.add_edge(a + 1, b + 1)?;
            }
        }
    }
    Ok(g)
}

/// Reads the free endpoints on `y = -x + 1` from bottom-right to top-left,
/// writing the corner-order label of each one's hook.
///
/// The word 12-represents the complement of the intersection graph and
/// avoids 123.
pub fn hook_word(h: &HookModel) -> Result<Word> {
    if !h.is_unit() {
        return Err(Error::NotUnit("every arm must have length 0 or 1".into()));
    }
    let order = h.corner_order()?;
    let mut ends: Vec<(Rational, usize)> = Vec::new();
    for (rank, &v) in order.iter().enumerate() {
        let k = h.get(v);
        if k.l != k.c {
            ends.push((k.c.clone(), rank + 1));
        }
        if k.r != k.c {
            ends.push((k.r.clone(), rank + 1));
        }
    }
    ends.sort_by(|a, b| b.0.cmp(&a.0));
    if let Some(w) = ends.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(Error::Coincident(format!(
            "endpoints of hooks {} and {} at x = {}",
            w[0].1, w[1].1, w[0].0
        )));
    }
    Word::new(ends.into_iter().map(|(_, label)| label).collect())
}

/// Unit hooks for a unit interval model given by its left endpoints.
///
/// The interval starting at `s` becomes the hook with corner `(s, -s)`, whose
/// top and right endpoints are the interval's ends on `y = -x + 1`. Hooks are
/// returned in corner order, so hook `k` is the `k`-th smallest start.
pub fn unit_interval_to_hooks(starts: &[Rational]) -> Result<HookModel> {
    let mut sorted = starts.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Coincident("two intervals share a left endpoint".into()));
    }
    let one = int(1);
    HookModel::new(
        sorted
            .into_iter()
            .map(|s| Hook { l: &s - &one, r: &s + &one, c: s })
            .collect(),
    )
}
