//! Text formats for graphs: the edge-list format and graph6.
//!
//! Edge lists are a first line holding `n`, then one `i j` pair per line
//! (1-based). Blank lines and lines starting with `#` are ignored.
//!
//! graph6 follows the format description shipped with nauty: `N(n)` followed by
//! the upper triangle of the adjacency matrix, column by column, packed six
//! bits per byte with an offset of 63. Vertex `k` of the graph6 string is
//! label `k + 1`.

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

const GRAPH6_HEADER: &str = ">>graph6<<";

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let first = lines.next().ok_or_else(|| Error::Parse("missing vertex count".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex count {first:?}")))?;
    let mut g = LabeledGraph::empty(n)?;
    for line in lines {
        let mut parts = line.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Parse(format!("expected `i j`, got {line:?}")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad vertex {s:?}")))
        };
        g.add_edge(parse(a)?, parse(b)?)?;
    }
    Ok(g)
}

pub fn to_edge_list(g: &LabeledGraph) -> String {
    let mut out = format!("{}\n", g.n());
    for (i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

/// Parses the inline form `1-2,2-3`. Without `n`, the largest label is used.
pub fn parse_inline_edges(spec: &str, n: Option<usize>) -> Result<LabeledGraph> {
    let mut edges = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (a, b) = item
            .split_once('-')
            .ok_or_else(|| Error::Parse(format!("expected `i-j`, got {item:?}")))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad vertex {s:?}")))
        };
        edges.push((parse(a)?, parse(b)?));
    }
    let n = match n {
        Some(n) => n,
        None => edges
            .iter()
            .map(|&(a, b)| a.max(b))
            .max()
            .ok_or_else(|| Error::Parse("no edges and no vertex count".into()))?,
    };
    LabeledGraph::from_edges(n, &edges)
}

pub fn decode_graph6(text: &str) -> Result<LabeledGraph> {
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside 63..=126")));
    }
    let (n, rest) = decode_size(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if rest.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n={n}, found {}",
            rest.len()
        )));
    }
    let mut g = LabeledGraph::empty(n).map_err(|_| Error::Graph6(format!("unsupported n={n}")))?;
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i + 1, j + 1)?;
            }
            k += 1;
        }
    }
    // Padding bits must be zero.
    for pad in bits..expected * 6 {
        if bit(pad) {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let take = |chunk: &[u8]| chunk.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    match bytes {
        [] => Err(Error::Graph6("empty input".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => Ok((take(&rest[..6]), &rest[6..])),
        [126, rest @ ..] if rest.len() >= 3 && rest[0] != 126 => Ok((take(&rest[..3]), &rest[3..])),
        [126, ..] => Err(Error::Graph6("truncated size field".into())),
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
    }
}

pub fn encode_graph6(g: &LabeledGraph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i + 1, j + 1) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Edge list when the first significant byte is an ASCII digit, graph6 otherwise.
pub fn parse_graph_auto(text: &str) -> Result<LabeledGraph> {
    let trimmed = text.trim_start();
    match trimmed.bytes().next() {
        Some(b) if b.is_ascii_digit() || b == b'#' => parse_edge_list(text),
        Some(_) => decode_graph6(trimmed.lines().next().unwrap_or_default()),
        None => Err(Error::Parse("empty input".into())),
    }
}
