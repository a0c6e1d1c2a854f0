//! Labeled simple graphs on the vertex set `{1..n}`.
//!
//! Labels are the vertices: a relabeling is a permutation of `{1..n}` and
//! produces a different [`LabeledGraph`], even when the two are isomorphic.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count. Adjacency rows are stored as `u64` bitsets.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph on `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    n: usize,
    // adj[i - 1] has bit (j - 1) set iff ij is an edge.
    adj: Vec<u64>,
}

impl LabeledGraph {
    /// The edgeless graph on `{1..n}`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Self::empty(n)?.complement())
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The cycle `1 - 2 - ... - n - 1`.
    pub fn cycle(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for i in 1..=n {
            let j = i % n + 1;
            if i != j {
                g.add_edge(i, j)?;
            }
        }
        Ok(g)
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for i in 1..n {
            g.add_edge(i, i + 1)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u - 1] |= 1 << (v - 1);
        self.adj[v - 1] |= 1 << (u - 1);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u - 1] &= !(1 << (v - 1));
        self.adj[v - 1] &= !(1 << (u - 1));
        Ok(())
    }

    /// Symmetric adjacency test. Out-of-range vertices are never adjacent.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != 0 && v != 0 && u <= self.n && v <= self.n && self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    /// Neighbor bitset of `v` (bit `j - 1` for neighbor `j`).
    #[inline]
    pub fn neighbor_bits(&self, v: usize) -> u64 {
        self.adj[v - 1]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let bits = self.adj[v - 1];
        (1..=self.n).filter(move |&j| bits >> (j - 1) & 1 == 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adj[v - 1] == 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Self {
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(i, row)| !row & full & !(1 << i))
            .collect();
        Self { n: self.n, adj }
    }

    /// The supplement `c(G)`: every label `i` becomes `n + 1 - i`.
    pub fn supplement(&self) -> Self {
        let perm: Vec<usize> = (1..=self.n).map(|i| self.n + 1 - i).collect();
        self.relabel(&perm)
    }

    /// Applies the labeling `v -> perm[v - 1]`. `perm` must be a permutation of `{1..n}`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "relabeling has the wrong length");
        let mut adj = vec![0u64; self.n];
        for u in 1..=self.n {
            let pu = perm[u - 1];
            for v in self.neighbors(u) {
                adj[pu - 1] |= 1 << (perm[v - 1] - 1);
            }
        }
        Self { n: self.n, adj }
    }

    /// Induced subgraph on `vertices`, relabeled order-preservingly to `{1..k}`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        for &v in &vs {
            self.check_vertex(v)?;
        }
        let mut g = Self::empty(vs.len())?;
        for (a, &u) in vs.iter().enumerate() {
            for (b, &v) in vs.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.adj[a] |= 1 << b;
                    g.adj[b] |= 1 << a;
                }
            }
        }
        Ok(g)
    }

    /// Edge set encoded over the pairs `(1,2), (1,3), ..., (n-1,n)` in
    /// lexicographic order; pair number `t` is bit `t`. Requires `n <= 11`.
    pub fn edge_mask(&self) -> u64 {
        assert!(self.n <= 11, "edge masks need n <= 11");
        let mut mask = 0u64;
        let mut t = 0;
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if self.has_edge(i, j) {
                    mask |= 1 << t;
                }
                t += 1;
            }
        }
        mask
    }

    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self> {
        if n > 11 {
            return Err(Error::VertexCount(n));
        }
        let mut g = Self::empty(n)?;
        let mut t = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                if mask >> t & 1 == 1 {
                    g.adj[i - 1] |= 1 << (j - 1);
                    g.adj[j - 1] |= 1 << (i - 1);
                }
                t += 1;
            }
        }
        Ok(g)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&r| r == 0)
    }
}

/// Number of unordered pairs on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Every labeled graph on `{1..n}`, in edge-mask order. Requires `n <= 8`.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = LabeledGraph> {
    assert!((1..=8).contains(&n), "exhaustive enumeration needs 1 <= n <= 8");
    let total = 1u64 << pair_count(n);
    (0..total).map(move |m| LabeledGraph::from_edge_mask(n, m).expect("n checked above"))
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for LabeledGraph {
    /// `n=4 {1-2,2-3}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{", self.n)?;
        for (k, (i, j)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}-{j}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_are_symmetric_and_sorted() {
        let g = LabeledGraph::from_edges(4, &[(3, 1), (2, 4)]).unwrap();
        assert!(g.has_edge(1, 3) && g.has_edge(3, 1));
        assert_eq!(g.edges(), vec![(1, 3), (2, 4)]);
        assert!(!g.has_edge(1, 1));
        assert!(!g.has_edge(0, 1));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(LabeledGraph::empty(0), Err(Error::VertexCount(0)));
        let mut g = LabeledGraph::empty(3).unwrap();
        assert_eq!(g.add_edge(2, 2), Err(Error::SelfLoop(2)));
        assert_eq!(g.add_edge(1, 4), Err(Error::VertexOutOfRange { vertex: 4, n: 3 }));
    }

    #[test]
    fn supplement_is_an_involution() {
        let g = LabeledGraph::from_edges(5, &[(1, 2), (1, 5), (3, 4)]).unwrap();
        let c = g.supplement();
        assert_eq!(c.edges(), vec![(1, 5), (2, 3), (4, 5)]);
        assert_eq!(c.supplement(), g);
    }

    #[test]
    fn complement_and_masks() {
        let g = LabeledGraph::path(4).unwrap();
        let h = g.complement();
        assert_eq!(h.edges(), vec![(1, 3), (1, 4), (2, 4)]);
        assert_eq!(h.complement(), g);
        for m in 0..64 {
            let g = LabeledGraph::from_edge_mask(4, m).unwrap();
            assert_eq!(g.edge_mask(), m);
        }
        assert_eq!(all_labeled_graphs(4).count(), 64);
    }

    #[test]
    fn induced_reduces_labels() {
        let g = LabeledGraph::from_edges(5, &[(2, 5), (1, 3)]).unwrap();
        let h = g.induced(&[5, 2, 4]).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), vec![(1, 3)]);
    }

    #[test]
    fn display() {
        let g = LabeledGraph::from_edges(3, &[(1, 3)]).unwrap();
        assert_eq!(g.to_string(), "n=3 {1-3}");
    }
}
