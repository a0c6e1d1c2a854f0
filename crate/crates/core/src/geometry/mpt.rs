//! Max point-tolerance models: every vertex gets an interval `[l, r]` with a
//! marked point `p` inside it, and `uv` is an edge exactly when both marked
//! points lie in both intervals.

use crate::error::{Error, Result, Side};
use crate::graph::LabeledGraph;
use crate::patterns::{catalog::CFP123, find_any};

use super::{int, ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointedInterval {
    pub l: Rational,
    pub p: Rational,
    pub r: Rational,
}

impl PointedInterval {
    pub fn new(l: Rational, p: Rational, r: Rational) -> Result<Self> {
        if l > p || p > r {
            return Err(Error::InvalidModel(format!("need l <= p <= r, got {l}, {p}, {r}")));
        }
        Ok(Self { l, p, r })
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.l <= x && x <= &self.r
    }

    /// The one-sided interval on `side`, or `None` when it is a single point.
    pub fn side(&self, side: Side) -> Option<(&Rational, &Rational)> {
        match side {
            Side::Left => (self.l != self.p).then_some((&self.l, &self.p)),
            Side::Right => (self.p != self.r).then_some((&self.p, &self.r)),
        }
    }
}

/// Pointed intervals indexed by vertex `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MptModel {
    intervals: Vec<PointedInterval>,
}

impl MptModel {
    pub fn new(intervals: Vec<PointedInterval>) -> Result<Self> {
        if intervals.is_empty() {
            return Err(Error::InvalidModel("no vertices".into()));
        }
        Ok(Self { intervals })
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn get(&self, v: usize) -> &PointedInterval {
        &self.intervals[v - 1]
    }

    pub fn intervals(&self) -> &[PointedInterval] {
        &self.intervals
    }

    /// The family of nondegenerate one-sided intervals, as `(vertex, side, a, b)`.
    pub fn one_sided(&self) -> Vec<(usize, Side, Rational, Rational)> {
        let mut out = Vec::new();
        for (k, iv) in self.intervals.iter().enumerate() {
            for side in [Side::Left, Side::Right] {
                if let Some((a, b)) = iv.side(side) {
                    out.push((k + 1, side, a.clone(), b.clone()));
                }
            }
        }
        out
    }

    /// Every one-sided interval has length 0 or 1, and not both sides are 0.
    pub fn is_unit(&self) -> bool {
        let one = int(1);
        self.intervals.iter().all(|iv| {
            let left = &iv.p - &iv.l;
            let right = &iv.r - &iv.p;
            let ok = |d: &Rational| d == &int(0) || d == &one;
            ok(&left) && ok(&right) && (left == one || right == one)
        })
    }

    /// The graph this model describes.
    pub fn graph(&self) -> LabeledGraph {
        let n = self.n();
        let mut g = LabeledGraph::empty(n).expect("model has at least one vertex");
        for u in 1..=n {
            for v in u + 1..=n {
                if mpt_adjacent(self.get(u), self.get(v)) {
                    g.add_edge(u, v).expect("labels in range");
                }
            }
        }
        g
    }
}

fn mpt_adjacent(a: &PointedInterval, b: &PointedInterval) -> bool {
    a.contains(&b.p) && b.contains(&a.p)
}

/// Whether `m` is an MPT model of `h`, vertex by vertex.
pub fn validate_mpt(m: &MptModel, h: &LabeledGraph) -> bool {
    m.n() == h.n() && m.graph() == *h
}

/// Builds the MPT model of a graph with no `CFP123` pattern.
///
/// For a graph without isolated vertices, `p_i = i`,
/// `l_i = min(i, j - (n - i + 1)/(n + 1))` with `j` the smallest neighbor of
/// `i`, and `r_i = max(i, j + i/(n + 1))` with `j` the largest neighbor.
/// Isolated vertices split the labels into blocks with no edges between them;
/// each block is built on its own and the blocks are laid out left to right,
/// with every isolated vertex drawn as a unit stick `[p, p + 1]` in its own gap.
pub fn build_mpt_model(h: &LabeledGraph) -> Result<MptModel> {
    if let Some(w) = find_any(h, CFP123.iter()) {
        return Err(Error::Forbidden(w));
    }
    let n = h.n();
    let mut intervals = Vec::with_capacity(n);
    let mut cursor = 0i64;
    let mut v = 1;
    while v <= n {
        if h.is_isolated(v) {
            let p = int(cursor + 1);
            intervals.push(PointedInterval { l: p.clone(), r: &p + int(1), p });
            cursor += 3;
            v += 1;
            continue;
        }
        let start = v;
        while v <= n && !h.is_isolated(v) {
            v += 1;
        }
        let block: Vec<usize> = (start..v).collect();
        let local = h.induced(&block)?;
        let offset = int(cursor);
        for iv in block_model(&local) {
            intervals.push(PointedInterval {
                l: iv.l + &offset,
                p: iv.p + &offset,
                r: iv.r + &offset,
            });
        }
        cursor += local.n() as i64 + 1;
    }
    let model = MptModel::new(intervals)?;
    assert!(validate_mpt(&model, h), "constructed MPT model does not describe the graph");
    assert_distinct_endpoints(&model);
    Ok(model)
}

fn block_model(h: &LabeledGraph) -> Vec<PointedInterval> {
    let n = h.n() as i64;
    (1..=h.n())
        .map(|i| {
            let ii = i as i64;
            let p = int(ii);
            let mut l = p.clone();
            let mut r = p.clone();
            if let Some(j) = h.neighbors(i).next() {
                l = l.min(int(j as i64) - ratio(n - ii + 1, n + 1));
            }
            if let Some(j) = h.neighbors(i).last() {
                r = r.max(int(j as i64) + ratio(ii, n + 1));
            }
            PointedInterval { l, p, r }
        })
        .collect()
}

fn assert_distinct_endpoints(m: &MptModel) {
    let mut seen: Vec<&Rational> = Vec::new();
    for iv in m.intervals() {
        for x in [&iv.l, &iv.r] {
            if x != &iv.p {
                seen.push(x);
            }
        }
        seen.push(&iv.p);
    }
    let total = seen.len();
    seen.sort();
    seen.dedup();
    assert_eq!(seen.len(), total, "MPT model has coincident endpoints");
}

/// First pair of one-sided intervals where one contains the other.
pub fn nested_pair(m: &MptModel) -> Option<((usize, Side), (usize, Side))> {
    let family = m.one_sided();
    let ranges: Vec<_> = family.iter().map(|(_, _, a, b)| (a.clone(), b.clone())).collect();
    nested_index_pair(&ranges).map(|(x, y)| ((family[x].0, family[x].1), (family[y].0, family[y].1)))
}

fn nested_index_pair(ranges: &[(Rational, Rational)]) -> Option<(usize, usize)> {
    for (x, (a1, b1)) in ranges.iter().enumerate() {
        for (y, (a2, b2)) in ranges.iter().enumerate().skip(x + 1) {
            if (a1 <= a2 && b2 <= b1) || (a2 <= a1 && b1 <= b2) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Stretches every one-sided interval of the model to length 1.
///
/// The intervals `[l, p]` and `[p, r]` must form a proper family (no member
/// contains another). The relative order of all model coordinates is kept, so
/// the adjusted model describes the same graph.
pub fn unit_adjust(m: &MptModel) -> Result<MptModel> {
    if let Some((first, second)) = nested_pair(m) {
        return Err(Error::Nested { first, second });
    }
    // Coordinates l, p, r of vertex v live at 3(v - 1) + {0, 1, 2}.
    let mut coords: Vec<Rational> = Vec::with_capacity(3 * m.n());
    for iv in m.intervals() {
        coords.extend([iv.l.clone(), iv.p.clone(), iv.r.clone()]);
    }
    let mut members = Vec::new();
    for (k, iv) in m.intervals().iter().enumerate() {
        if iv.l != iv.p {
            members.push((3 * k, 3 * k + 1));
        }
        if iv.p != iv.r {
            members.push((3 * k + 1, 3 * k + 2));
        }
    }
    stretch(&mut coords, &members);
    let intervals = coords
        .chunks(3)
        .map(|c| PointedInterval { l: c[0].clone(), p: c[1].clone(), r: c[2].clone() })
        .collect();
    Ok(MptModel { intervals })
}

/// The same adjustment for a bare proper family of closed intervals.
pub fn unit_adjust_intervals(intervals: &[(Rational, Rational)]) -> Result<Vec<(Rational, Rational)>> {
    if let Some(x) = intervals.iter().position(|(a, b)| a > b) {
        return Err(Error::InvalidModel(format!("interval #{x} is reversed")));
    }
    if let Some((x, y)) = nested_index_pair(intervals) {
        return Err(Error::NestedIntervals(x, y));
    }
    let mut coords = Vec::with_capacity(2 * intervals.len());
    for (a, b) in intervals {
        coords.extend([a.clone(), b.clone()]);
    }
    let members: Vec<_> = (0..intervals.len()).map(|k| (2 * k, 2 * k + 1)).collect();
    stretch(&mut coords, &members);
    Ok(coords.chunks(2).map(|c| (c[0].clone(), c[1].clone())).collect())
}

// Left-to-right sweep. For the leftmost unadjusted member [a, b], let alpha be
// the rightmost right endpoint of an adjusted member inside [a, b] (or a). The
// map fixes everything up to alpha, sends (alpha, b) linearly onto
// (alpha, a + 1), and translates [b, oo) to [a + 1, oo).
fn stretch(coords: &mut [Rational], members: &[(usize, usize)]) {
    let mut order: Vec<usize> = (0..members.len()).collect();
    // Monotone maps keep this order, so sorting once is enough.
    order.sort_by(|&x, &y| coords[members[x].0].cmp(&coords[members[y].0]));
    let one = int(1);
    let mut done: Vec<usize> = Vec::new();
    for &k in &order {
        let (ia, ib) = members[k];
        let a = coords[ia].clone();
        let b = coords[ib].clone();
        let alpha = done
            .iter()
            .map(|&d| &coords[members[d].1])
            .filter(|&x| &a <= x && x <= &b)
            .max()
            .cloned()
            .unwrap_or_else(|| a.clone());
        let target = &a + &one;
        assert!(alpha < target, "adjusted interval reaches past a + 1");
        let scale = (&target - &alpha) / (&b - &alpha);
        let shift = &target - &b;
        for x in coords.iter_mut() {
            if *x <= alpha {
                continue;
            }
            if *x < b {
                *x = &alpha + (&*x - &alpha) * &scale;
            } else {
                *x += &shift;
            }
        }
        done.push(k);
    }
}
