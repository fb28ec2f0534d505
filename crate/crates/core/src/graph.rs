//! Simple undirected graphs on vertices `0..t`.
//!
//! Adjacency is stored as one 64-bit neighbor mask per vertex, which bounds the
//! order at [`MAX_ORDER`]. Every algorithm in this crate is exponential in the
//! order long before that bound matters.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order a [`Graph`] can hold.
pub const MAX_ORDER: usize = 64;

/// A simple undirected graph. Loop-free and symmetric by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::InvalidParameter(format!(
                "graph order must be in 1..={MAX_ORDER}, got {order}"
            )));
        }
        Ok(Graph {
            adj: vec![0; order],
        })
    }

    /// Builds a graph from an edge list. Repeated edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from neighbor masks. The masks must already be
    /// symmetric and loop-free; this is checked.
    pub(crate) fn from_masks(adj: Vec<u64>) -> Result<Self> {
        let g = Graph { adj };
        let n = g.order();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidParameter(format!(
                "graph order must be in 1..={MAX_ORDER}, got {n}"
            )));
        }
        let full = if n == 64 { u64::MAX } else { bit(n) - 1 };
        for v in 0..n {
            let m = g.adj[v];
            if m & !full != 0 || m & bit(v) != 0 {
                return Err(Error::InvalidParameter(format!("bad neighbor mask at {v}")));
            }
            for u in Self::iter_mask(m) {
                if g.adj[u] & bit(v) == 0 {
                    return Err(Error::InvalidParameter(format!("asymmetric edge {v}-{u}")));
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] & bit(v) != 0
    }

    /// Neighbor mask of `v`; bit `u` is set iff `{u, v}` is an edge.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn masks(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        Self::iter_mask(self.adj[v])
    }

    pub(crate) fn iter_mask(mut m: u64) -> impl Iterator<Item = usize> {
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(v)
            }
        })
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order() {
            for v in Self::iter_mask(self.adj[u]) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Degree sequence in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let full = if n == 64 { u64::MAX } else { bit(n) - 1 };
        Graph {
            adj: (0..n).map(|v| !self.adj[v] & full & !bit(v)).collect(),
        }
    }

    /// Subgraph induced by `vertices`, relabeled by ascending original index.
    /// Duplicates in `vertices` are ignored.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut keep = 0u64;
        for &v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
            keep |= bit(v);
        }
        if keep == 0 {
            return Err(Error::InvalidParameter(
                "induced subgraph needs at least one vertex".into(),
            ));
        }
        Ok(self.induced_by_mask(keep))
    }

    pub(crate) fn induced_by_mask(&self, keep: u64) -> Graph {
        let old: Vec<usize> = Self::iter_mask(keep).collect();
        let mut adj = vec![0u64; old.len()];
        for (i, &u) in old.iter().enumerate() {
            for (j, &v) in old.iter().enumerate() {
                if self.adj[u] & bit(v) != 0 {
                    adj[i] |= bit(j);
                }
            }
        }
        Graph { adj }
    }

    /// Relabels vertices: vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        check_permutation(perm, n)?;
        let mut adj = vec![0u64; n];
        for u in 0..n {
            for v in Self::iter_mask(self.adj[u]) {
                adj[perm[u]] |= bit(perm[v]);
            }
        }
        Ok(Graph { adj })
    }

    /// Graph whose vertex `i` is `ordering[i]` of `self`. Inverse of
    /// [`Graph::relabel`] for the same slice.
    pub(crate) fn reorder(&self, ordering: &[usize]) -> Graph {
        let n = self.order();
        let mut adj = vec![0u64; n];
        for i in 0..n {
            let mi = self.adj[ordering[i]];
            for (j, &v) in ordering.iter().enumerate() {
                if mi & bit(v) != 0 {
                    adj[i] |= bit(j);
                }
            }
        }
        Graph { adj }
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            order: self.order(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_edge_list(list: &EdgeList) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = list.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(list.order, &edges)
    }

    /// Parses the JSON edge-list form `{"order": t, "edges": [[u, v], ...]}`.
    pub fn from_json(text: &str) -> Result<Graph> {
        let list: EdgeList = serde_json::from_str(text).map_err(|e| Error::Malformed {
            offset: json_offset(text, e.line(), e.column()),
            reason: e.to_string(),
        })?;
        Graph::from_edge_list(&list)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_edge_list()).expect("edge list serializes")
    }
}

fn json_offset(text: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let start: usize = text
        .split_inclusive('\n')
        .take(line - 1)
        .map(str::len)
        .sum();
    start + column.saturating_sub(1)
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::NotAPermutation(format!(
            "expected {n} entries, got {}",
            perm.len()
        )));
    }
    let mut seen = 0u64;
    for &v in perm {
        if v >= n {
            return Err(Error::NotAPermutation(format!("entry {v} is out of range")));
        }
        if seen & bit(v) != 0 {
            return Err(Error::NotAPermutation(format!("entry {v} repeats")));
        }
        seen |= bit(v);
    }
    Ok(())
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(order={}, edges={:?})", self.order(), self.edges())
    }
}

/// JSON interchange form of a graph. Edges are emitted with `u < v` in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub order: usize,
    pub edges: Vec<[usize; 2]>,
}
