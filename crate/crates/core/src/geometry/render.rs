//! SVG, TikZ, and record views of the geometric models.
//!
//! All output is deterministic: coordinates are printed from exact rationals,
//! SVG positions rounded to three decimals.

use std::fmt::Write;

use serde::Serialize;

use super::hook::HookModel;
use super::interval::Co132IntervalModel;
use super::mpt::MptModel;
use super::{fmt_decimal, fmt_rational, int, Rational};

/// Pixels per model unit.
pub const SCALE: i64 = 40;
const MARGIN: i64 = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelRecord {
    pub vertex: usize,
    pub l: String,
    pub p: String,
    pub r: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalRecord {
    pub vertex: usize,
    pub l: String,
    pub r: String,
}

pub fn mpt_records(m: &MptModel) -> Vec<ModelRecord> {
    m.intervals()
        .iter()
        .enumerate()
        .map(|(k, iv)| ModelRecord {
            vertex: k + 1,
            l: fmt_rational(&iv.l),
            p: fmt_rational(&iv.p),
            r: fmt_rational(&iv.r),
        })
        .collect()
}

/// Hooks as `(l, p, r)` with `p` the corner's `x`.
pub fn hook_records(h: &HookModel) -> Vec<ModelRecord> {
    h.hooks()
        .iter()
        .enumerate()
        .map(|(k, hk)| ModelRecord {
            vertex: k + 1,
            l: fmt_rational(&hk.l),
            p: fmt_rational(&hk.c),
            r: fmt_rational(&hk.r),
        })
        .collect()
}

pub fn interval_records(m: &Co132IntervalModel) -> Vec<IntervalRecord> {
    m.intervals()
        .iter()
        .enumerate()
        .map(|(k, (l, r))| IntervalRecord { vertex: k + 1, l: fmt_rational(l), r: fmt_rational(r) })
        .collect()
}

fn px(q: &Rational, origin: &Rational) -> String {
    fmt_decimal(&((q - origin) * int(SCALE) + int(MARGIN)), 3)
}

fn svg_open(width: &Rational, height: &Rational) -> String {
    let w = fmt_decimal(&(width * int(SCALE) + int(2 * MARGIN)), 3);
    let h = fmt_decimal(&(height * int(SCALE) + int(2 * MARGIN)), 3);
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n\
         <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    )
}

/// The hook model in the plane, with `L: y = -x` and `L': y = -x + 1`.
///
/// Screen coordinates flip `y`, so a model point `(x, y)` is drawn at
/// `(x, -y)`; both lines then run from top-left to bottom-right.
pub fn hook_svg(h: &HookModel) -> String {
    let hooks = h.hooks();
    let lo = hooks.iter().map(|k| &k.l).min().expect("nonempty") - int(1);
    let hi = hooks.iter().map(|k| &k.r).max().expect("nonempty") + int(1);
    let span = &hi - &lo;
    let mut out = svg_open(&span, &span);
    let line = |out: &mut String, shift: i64, class: &str| {
        // Points (t, t - shift) in screen units, for t across the canvas.
        let (a, b) = (lo.clone() + int(shift), hi.clone());
        let _ = writeln!(
            out,
            "<line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>",
            px(&a, &lo),
            px(&(&a - int(shift)), &lo),
            px(&b, &lo),
            px(&(&b - int(shift)), &lo),
        );
    };
    line(&mut out, 0, "L");
    line(&mut out, 1, "L-prime");
    let order = h.corner_order().unwrap_or_else(|_| (1..=h.n()).collect());
    for (rank, &v) in order.iter().enumerate() {
        let k = h.get(v);
        let (cx, cy) = (px(&k.c, &lo), px(&k.c, &lo));
        let top = px(&k.l, &lo);
        let right = px(&k.r, &lo);
        let _ = writeln!(
            out,
            "<polyline points=\"{cx},{top} {cx},{cy} {right},{cy}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>"
        );
        let _ = writeln!(out, "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"3\" fill=\"black\"/>");
        let _ = writeln!(
            out,
            "<text x=\"{cx}\" y=\"{cy}\" dx=\"-12\" dy=\"14\" font-size=\"12\">{}</text>",
            rank + 1
        );
    }
    out.push_str("</svg>\n");
    out
}

pub fn hook_tikz(h: &HookModel) -> String {
    let hooks = h.hooks();
    let lo = hooks.iter().map(|k| &k.l).min().expect("nonempty") - int(1);
    let hi = hooks.iter().map(|k| &k.r).max().expect("nonempty") + int(1);
    let q = fmt_rational;
    let mut out = String::from("\\begin{tikzpicture}\n");
    let _ = writeln!(
        out,
        "\\draw [dashed] ({}, {}) -- ({}, {}) node [right] {{$\\mathcal{{L}}$}};",
        q(&lo),
        q(&-lo.clone()),
        q(&hi),
        q(&-hi.clone())
    );
    let (a, b) = (lo.clone() + int(1), hi.clone());
    let _ = writeln!(
        out,
        "\\draw [dashed] ({}, {}) -- ({}, {}) node [right] {{$\\mathcal{{L}}'$}};",
        q(&a),
        q(&(int(1) - &a)),
        q(&b),
        q(&(int(1) - &b))
    );
    let order = h.corner_order().unwrap_or_else(|_| (1..=h.n()).collect());
    for (rank, &v) in order.iter().enumerate() {
        let k = h.get(v);
        let _ = writeln!(
            out,
            "\\draw [thick] ({c}, {nl}) -- ({c}, {nc}) -- ({r}, {nc}) node [pos=0, below left] {{${}$}};",
            rank + 1,
            c = q(&k.c),
            nl = q(&-k.l.clone()),
            nc = q(&-k.c.clone()),
            r = q(&k.r),
        );
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

// One row per vertex: the segment [a, b] and optional marked point.
fn rows_svg(rows: &[(Rational, Option<Rational>, Rational)]) -> String {
    let lo = rows.iter().map(|r| &r.0).min().expect("nonempty") - int(1);
    let hi = rows.iter().map(|r| &r.2).max().expect("nonempty") + int(1);
    let height = int(rows.len() as i64);
    let mut out = svg_open(&(&hi - &lo), &height);
    let zero = int(0);
    for (k, (a, p, b)) in rows.iter().enumerate() {
        let y = px(&(int(k as i64) + Rational::new(1.into(), 2.into())), &zero);
        let (xa, xb) = (px(a, &lo), px(b, &lo));
        let _ = writeln!(
            out,
            "<line x1=\"{xa}\" y1=\"{y}\" x2=\"{xb}\" y2=\"{y}\" stroke=\"black\" stroke-width=\"2\"/>"
        );
        for x in [&xa, &xb] {
            let _ = writeln!(out, "<circle cx=\"{x}\" cy=\"{y}\" r=\"2\" fill=\"black\"/>");
        }
        if let Some(p) = p {
            let _ = writeln!(out, "<circle cx=\"{}\" cy=\"{y}\" r=\"4\" fill=\"white\" stroke=\"black\"/>", px(p, &lo));
        }
        let _ = writeln!(out, "<text x=\"{xb}\" y=\"{y}\" dx=\"6\" dy=\"4\" font-size=\"12\">{}</text>", k + 1);
    }
    out.push_str("</svg>\n");
    out
}

fn rows_tikz(rows: &[(Rational, Option<Rational>, Rational)]) -> String {
    let q = fmt_rational;
    let mut out = String::from("\\begin{tikzpicture}\n");
    for (k, (a, p, b)) in rows.iter().enumerate() {
        let y = -(k as i64);
        let _ = writeln!(
            out,
            "\\draw [thick, |-|] ({}, {y}) -- ({}, {y}) node [right] {{${}$}};",
            q(a),
            q(b),
            k + 1
        );
        if let Some(p) = p {
            let _ = writeln!(out, "\\node [draw, circle, inner sep=1pt] at ({}, {y}) {{}};", q(p));
        }
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

fn mpt_rows(m: &MptModel) -> Vec<(Rational, Option<Rational>, Rational)> {
    m.intervals().iter().map(|iv| (iv.l.clone(), Some(iv.p.clone()), iv.r.clone())).collect()
}

fn interval_rows(m: &Co132IntervalModel) -> Vec<(Rational, Option<Rational>, Rational)> {
    m.intervals().iter().map(|(l, r)| (l.clone(), None, r.clone())).collect()
}

pub fn mpt_svg(m: &MptModel) -> String {
    rows_svg(&mpt_rows(m))
}

pub fn mpt_tikz(m: &MptModel) -> String {
    rows_tikz(&mpt_rows(m))
}

pub fn interval_svg(m: &Co132IntervalModel) -> String {
    rows_svg(&interval_rows(m))
}

pub fn interval_tikz(m: &Co132IntervalModel) -> String {
    rows_tikz(&interval_rows(m))
}
