//! One representative per isomorphism class of a given order.

use std::collections::BTreeMap;

use crate::canon::{canonical_key, CanonicalKey};
use crate::error::Result;
use crate::graph::{bit, Graph};
use crate::limits::{self, Limits};

/// Canonical representatives of every isomorphism class of order `t`,
/// sorted by [`CanonicalKey`].
pub fn enumerate_nonisomorphic(t: usize) -> Result<Vec<Graph>> {
    enumerate_nonisomorphic_with_limit(t, Limits::DEFAULT.census)
}

pub fn enumerate_nonisomorphic_with_limit(t: usize, limit: usize) -> Result<Vec<Graph>> {
    Ok(classes_with_limit(t, limit)?.into_values().collect())
}

/// Like [`enumerate_nonisomorphic`], keyed by canonical key.
///
/// Order `t` classes are generated from order `t - 1` representatives by
/// attaching a new vertex to every subset of the old vertices. Every graph
/// arises this way, since deleting its last vertex leaves a graph isomorphic
/// to some smaller representative.
pub(crate) fn classes_with_limit(t: usize, limit: usize) -> Result<BTreeMap<CanonicalKey, Graph>> {
    limits::check(
        "census enumeration",
        "--max-census",
        t,
        limit,
        Limits::HARD.census,
    )?;
    let mut classes = BTreeMap::new();
    let k1 = Graph::empty(t.max(1))?;
    if t <= 1 {
        classes.insert(canonical_key(&k1)?, k1);
        return Ok(classes);
    }
    let smaller = classes_with_limit(t - 1, limit)?;
    for rep in smaller.values() {
        for subset in 0u64..1 << (t - 1) {
            let mut adj: Vec<u64> = rep.masks().to_vec();
            for (u, m) in adj.iter_mut().enumerate() {
                if subset & bit(u) != 0 {
                    *m |= bit(t - 1);
                }
            }
            adj.push(subset);
            let g = Graph::from_masks(adj)?;
            let key = canonical_key(&g)?;
            classes.entry(key).or_insert_with_key(|k| k.to_graph());
        }
    }
    Ok(classes)
}
