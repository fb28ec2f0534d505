//! Canonical labeling and isomorphism testing.
//!
//! The canonical form of a graph is the relabeling whose upper-triangle
//! bitstring (graph6 column order) is lexicographically smallest among the
//! orderings visited by an invariant backtracking search:
//!
//! * positions are filled left to right;
//! * at each position only vertices minimizing the new bitstring column are
//!   tried, and among those only the ones with the smallest refined color
//!   (degree refinement with the already placed vertices individualized);
//! * of several candidates that are twins (equal neighborhoods apart from
//!   each other) only one is explored, since swapping twins is an
//!   automorphism fixing the placed prefix.
//!
//! Every restriction is defined in terms of isomorphism-invariant data, so
//! the visited set of bitstrings, and its minimum, depends only on the
//! isomorphism class.

use std::fmt;

use crate::error::Result;
use crate::graph::{bit, Graph};
use crate::graph6;
use crate::limits::{self, Limits};
use crate::refine::{individualized, refine};

/// Canonical encoding of an isomorphism class: the graph6 string of the
/// canonical relabeling. Ordering on keys is by order, then by bitstring.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(String);

impl CanonicalKey {
    pub fn as_graph6(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn order(&self) -> usize {
        (self.0.as_bytes()[0] - 63) as usize
    }

    /// The canonical representative of the class.
    pub fn to_graph(&self) -> Graph {
        graph6::parse_graph6(&self.0).expect("canonical keys are valid graph6")
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.0)
    }
}

pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    canonical_key_with_limit(g, Limits::DEFAULT.canonical)
}

pub fn canonical_key_with_limit(g: &Graph, limit: usize) -> Result<CanonicalKey> {
    let ordering = canonical_ordering_with_limit(g, limit)?;
    Ok(key_of_ordering(g, &ordering))
}

/// The ordering realizing the canonical form: canonical vertex `i` is
/// `ordering[i]` of `g`.
pub fn canonical_ordering(g: &Graph) -> Result<Vec<usize>> {
    canonical_ordering_with_limit(g, Limits::DEFAULT.canonical)
}

fn canonical_ordering_with_limit(g: &Graph, limit: usize) -> Result<Vec<usize>> {
    limits::check(
        "canonical labeling",
        "--max-canonical",
        g.order(),
        limit,
        Limits::HARD.canonical,
    )?;
    let mut search = Search {
        adj: g.masks(),
        n: g.order(),
        prefix: Vec::with_capacity(g.order()),
        columns: Vec::with_capacity(g.order()),
        best: None,
    };
    search.descend(0, false);
    Ok(search.best.expect("search visits at least one leaf").1)
}

pub(crate) fn key_of_ordering(g: &Graph, ordering: &[usize]) -> CanonicalKey {
    let adj = g.masks();
    CanonicalKey(graph6::encode_short(g.order(), |i, j| {
        adj[ordering[i]] & bit(ordering[j]) != 0
    }))
}

/// Canonical form of `g` as a graph.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(g.reorder(&canonical_ordering(g)?))
}

/// True iff `g` and `h` are isomorphic. Decided by a direct
/// individualization-refinement search for an isomorphism, independent of
/// [`canonical_key`]; no order limit applies.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return false;
    }
    crate::automorphism::find_isomorphism(g, h).is_some()
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    prefix: Vec<usize>,
    columns: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn column(&self, v: usize) -> u64 {
        self.prefix
            .iter()
            .fold(0u64, |acc, &p| (acc << 1) | ((self.adj[p] >> v) & 1))
    }

    /// `less` records that the current prefix already beats the best leaf.
    fn descend(&mut self, placed: u64, less: bool) {
        let depth = self.prefix.len();
        if depth == self.n {
            let better = match &self.best {
                None => true,
                Some((cols, _)) => less || self.columns < *cols,
            };
            if better {
                self.best = Some((self.columns.clone(), self.prefix.clone()));
            }
            return;
        }

        let remaining = || (0..self.n).filter(|&v| placed & bit(v) == 0);
        let min_col = remaining()
            .map(|v| self.column(v))
            .min()
            .expect("vertex left");

        let mut less = less;
        if !less {
            if let Some((cols, _)) = &self.best {
                match min_col.cmp(&cols[depth]) {
                    std::cmp::Ordering::Greater => return,
                    std::cmp::Ordering::Less => less = true,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }

        let mut colors = individualized(self.n, &self.prefix);
        refine(self.adj, &mut colors);
        let mut candidates: Vec<usize> =
            remaining().filter(|&v| self.column(v) == min_col).collect();
        let min_color = candidates
            .iter()
            .map(|&v| colors[v])
            .min()
            .expect("candidate");
        candidates.retain(|&v| colors[v] == min_color);

        let mut explored: Vec<usize> = Vec::with_capacity(candidates.len());
        for v in candidates {
            if explored.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            explored.push(v);
            self.prefix.push(v);
            self.columns.push(min_col);
            self.descend(placed | bit(v), less);
            self.prefix.pop();
            self.columns.pop();
            // a new best leaf below shares this prefix
            if less {
                if let Some((cols, _)) = &self.best {
                    less = self.columns[..] < cols[..depth];
                }
            }
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        self.adj[u] & !bit(v) == self.adj[v] & !bit(u)
    }
}
