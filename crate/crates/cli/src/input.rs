use std::io::Read;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use repwords::format::{decode_graph6, parse_graph_auto, parse_inline_edges};
use repwords::LabeledGraph;

/// Where the graph comes from. Exactly one source is used.
#[derive(Debug, Args)]
pub struct GraphInput {
    /// Edge list or graph6 file, detected by its first byte; `-` reads stdin.
    pub file: Option<PathBuf>,
    /// Inline edges such as `1-2,2-3`.
    #[arg(long, conflicts_with_all = ["file", "graph6"])]
    pub edges: Option<String>,
    /// Vertex count for `--edges`; defaults to the largest label.
    #[arg(long, requires = "edges")]
    pub n: Option<usize>,
    /// A graph6 string.
    #[arg(long, conflicts_with = "file")]
    pub graph6: Option<String>,
}

impl GraphInput {
    pub fn load(&self) -> Result<LabeledGraph> {
        if let Some(spec) = &self.edges {
            return parse_inline_edges(spec, self.n).context("reading --edges");
        }
        if let Some(s) = &self.graph6 {
            return decode_graph6(s.trim()).context("reading --graph6");
        }
        let Some(path) = &self.file else {
            bail!("no graph given; pass a file, --edges, or --graph6");
        };
        let text = if path.as_os_str() == "-" {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
            s
        } else {
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        };
        parse_graph_auto(&text).with_context(|| format!("parsing {}", path.display()))
    }
}
