//! Named graph families with fixed labelings.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Complete,
    /// `K_{1,t-1}` centered at vertex 0.
    Star,
    Path,
    Cycle,
    Empty,
    /// `s` disjoint edges `{2j, 2j+1}` plus `t - 2s` isolated vertices.
    Matching,
    /// The edge `{0, 1}` plus `t - 2` isolated vertices.
    OneEdge,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::Complete,
        FamilyKind::Star,
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Empty,
        FamilyKind::Matching,
        FamilyKind::OneEdge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Complete => "complete",
            FamilyKind::Star => "star",
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Empty => "empty",
            FamilyKind::Matching => "matching",
            FamilyKind::OneEdge => "one-edge",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family `{s}`")))
    }
}

/// A family member: kind, order `t`, and matching size `s` (ignored by every
/// kind except [`FamilyKind::Matching`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub order: usize,
    pub size: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, order: usize) -> Self {
        FamilySpec {
            kind,
            order,
            size: 0,
        }
    }

    pub fn matching(order: usize, size: usize) -> Self {
        FamilySpec {
            kind: FamilyKind::Matching,
            order,
            size,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let t = self.order;
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        if t == 0 || t > crate::graph::MAX_ORDER {
            return bad(format!("{} needs an order in 1..=64, got {t}", self.kind));
        }
        match self.kind {
            FamilyKind::Cycle if t < 3 => bad(format!("cycle needs t >= 3, got {t}")),
            FamilyKind::Star if t < 2 => bad(format!("star needs t >= 2, got {t}")),
            FamilyKind::OneEdge if t < 2 => bad(format!("one-edge needs t >= 2, got {t}")),
            FamilyKind::Matching if 2 * self.size > t => bad(format!(
                "a matching of size {} does not fit on {t} vertices",
                self.size
            )),
            _ => Ok(()),
        }
    }
}

pub fn make_family(spec: FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let t = spec.order;
    let edges: Vec<(usize, usize)> = match spec.kind {
        FamilyKind::Complete => (0..t)
            .flat_map(|u| (u + 1..t).map(move |v| (u, v)))
            .collect(),
        FamilyKind::Star => (1..t).map(|v| (0, v)).collect(),
        FamilyKind::Path => (1..t).map(|v| (v - 1, v)).collect(),
        FamilyKind::Cycle => (1..t).map(|v| (v - 1, v)).chain([(t - 1, 0)]).collect(),
        FamilyKind::Empty => Vec::new(),
        FamilyKind::Matching => (0..spec.size).map(|j| (2 * j, 2 * j + 1)).collect(),
        FamilyKind::OneEdge => vec![(0, 1)],
    };
    Graph::from_edges(t, &edges)
}
