use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use super::{ratio, Rational};
use crate::automorphism::automorphism_count;
use crate::canon::{canonical_key, CanonicalKey};
use crate::combinatorics::{binomial, factorial};
use crate::enumerate::classes_with_limit;
use crate::error::Result;
use crate::graph::{bit, Graph};
use crate::likelihood::likelihood_exact;
use crate::limits::{self, Limits};

/// One isomorphism class in a census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    pub key: CanonicalKey,
    pub likelihood: Rational,
    pub automorphisms: u128,
}

/// `L` of every isomorphism class of order `t`, sorted by canonical key.
pub fn likelihood_census(t: usize) -> Result<Vec<CensusEntry>> {
    likelihood_census_with_limit(t, Limits::DEFAULT.census)
}

pub fn likelihood_census_with_limit(t: usize, limit: usize) -> Result<Vec<CensusEntry>> {
    let classes: Vec<(CanonicalKey, Graph)> = classes_with_limit(t, limit)?.into_iter().collect();
    classes
        .into_par_iter()
        .map(|(key, g)| {
            Ok(CensusEntry {
                key,
                likelihood: likelihood_exact(&g)?,
                automorphisms: automorphism_count(&g)?,
            })
        })
        .collect()
}

/// Distribution of the process output straight from its definition: every
/// labeled graph on `0..t` gets `prod_i 1 / (i * C(i - 1, d_i))` with vertex
/// `i - 1` added at step `i`, and the weights are summed per isomorphism
/// class. No automorphism or coset argument is involved.
pub fn process_distribution_oracle(t: usize) -> Result<Vec<(CanonicalKey, Rational)>> {
    process_distribution_oracle_with_limit(t, Limits::DEFAULT.process)
}

pub fn process_distribution_oracle_with_limit(
    t: usize,
    limit: usize,
) -> Result<Vec<(CanonicalKey, Rational)>> {
    limits::check(
        "labeled process enumeration",
        "--max-process",
        t,
        limit,
        Limits::HARD.process,
    )?;
    if t == 0 {
        return Err(crate::Error::InvalidParameter(
            "order must be at least 1".into(),
        ));
    }
    let mut walk = LabeledWalk {
        t,
        t_factorial: factorial(t),
        adj: Vec::with_capacity(t),
        classes: BTreeMap::new(),
    };
    walk.extend(1)?;
    Ok(walk.classes.into_iter().collect())
}

/// Depth-first walk over labeled graphs, one vertex per level: the neighbor
/// set of vertex `i` among `0..i` ranges over every subset.
struct LabeledWalk {
    t: usize,
    t_factorial: BigUint,
    adj: Vec<u64>,
    classes: BTreeMap<CanonicalKey, Rational>,
}

impl LabeledWalk {
    /// `product` is `prod C(i - 1, d_i)` over the vertices placed so far.
    fn extend(&mut self, product: u128) -> Result<()> {
        let i = self.adj.len();
        if i == self.t {
            let g = Graph::from_masks(self.adj.clone())?;
            let weight = ratio(1u8, &self.t_factorial * product);
            *self
                .classes
                .entry(canonical_key(&g)?)
                .or_insert_with(Rational::zero) += weight;
            return Ok(());
        }
        for back in 0u64..1 << i {
            for u in Graph::iter_mask(back) {
                self.adj[u] |= bit(i);
            }
            self.adj.push(back);
            let d = back.count_ones() as usize;
            self.extend(product * binomial(i, d) as u128)?;
            self.adj.pop();
            for u in Graph::iter_mask(back) {
                self.adj[u] &= !bit(i);
            }
        }
        Ok(())
    }
}
