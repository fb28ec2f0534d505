//! Exact likelihood of a graph under the uniform vertex-addition process.
//!
//! The process starts from one vertex. At step `i` it picks `k` uniformly
//! from `0..i`, picks a uniform `k`-subset of the `i - 1` existing vertices,
//! and adds vertex `i` joined to that subset. The likelihood `L(G)` of a
//! `t`-vertex graph is the probability that step `t` yields a graph
//! isomorphic to `G`.
//!
//! Adding vertices of `G` in a fixed order `v_1, ..., v_t` happens with
//! probability `prod_i 1 / (i * C(i - 1, d_i))`, where `d_i` is the number of
//! neighbors of `v_i` among `v_1..v_{i-1}`. Orderings that differ by an
//! automorphism produce the same labeled graph, so
//! `L(G) = sum over orderings / |Aut(G)|`. Three routes evaluate this:
//!
//! * [`likelihood_exact`]: a subset dynamic program over induced subgraphs;
//! * [`likelihood_by_orderings`]: the sum over all `t!` orderings;
//! * [`likelihood_from_paths`]: the sum over one ordering per coset of
//!   `Aut(G)` ([`enumerate_path_constructions`]).

mod bounds;
mod census;
mod closed_form;
mod dp;
mod paths;

pub use bounds::{likelihood_bounds, likelihood_bounds_with_limit, LikelihoodBounds};
pub use census::{
    likelihood_census, likelihood_census_with_limit, process_distribution_oracle,
    process_distribution_oracle_with_limit, CensusEntry,
};
pub use closed_form::{cycle_from_path_relation, family_closed_form};
pub use dp::{likelihood_exact, likelihood_exact_with_limits, ordering_sum};
pub use paths::{
    enumerate_path_constructions, enumerate_path_constructions_with_limit, likelihood_from_paths,
    path_tree, PathConstruction, PathTree, PathTreeNode,
};

use std::collections::HashMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::automorphism::automorphism_count_with_limit;
use crate::combinatorics::{binomial, factorial, next_permutation};
use crate::error::Result;
use crate::graph::{bit, check_permutation, Graph};
use crate::limits::{self, Limits};

/// Exact rational number; every probability in this crate is one.
pub type Rational = BigRational;

pub(crate) fn ratio(num: impl Into<BigUint>, den: impl Into<BigUint>) -> Rational {
    Rational::new(num.into().into(), den.into().into())
}

/// Number of neighbors of `ordering[i]` among `ordering[..i]`, for each `i`.
pub fn back_degrees(g: &Graph, ordering: &[usize]) -> Result<Vec<usize>> {
    check_permutation(ordering, g.order())?;
    Ok(back_degrees_unchecked(g, ordering))
}

pub(crate) fn back_degrees_unchecked(g: &Graph, ordering: &[usize]) -> Vec<usize> {
    let mut placed = 0u64;
    ordering
        .iter()
        .map(|&v| {
            let d = (g.neighbor_mask(v) & placed).count_ones() as usize;
            placed |= bit(v);
            d
        })
        .collect()
}

/// `prod_{i=1..t} C(i - 1, d_i)`. Fits in `u128` for `t <= 16`.
pub(crate) fn binomial_product(back: &[usize]) -> u128 {
    back.iter()
        .enumerate()
        .map(|(i, &d)| binomial(i, d) as u128)
        .product()
}

/// Probability that the process adds the vertices of `g` in exactly the
/// order `ordering` (and so produces `g` with that labeling).
pub fn ordering_probability(g: &Graph, ordering: &[usize]) -> Result<Rational> {
    let back = back_degrees(g, ordering)?;
    let den: BigUint = back
        .iter()
        .enumerate()
        .fold(BigUint::one(), |acc, (i, &d)| {
            acc * ((i + 1) as u64 * binomial(i, d))
        });
    Ok(ratio(1u8, den))
}

/// `L(g)` as the sum of [`ordering_probability`] over all `t!` orderings,
/// divided by `|Aut(g)|`.
pub fn likelihood_by_orderings(g: &Graph) -> Result<Rational> {
    likelihood_by_orderings_with_limit(g, Limits::DEFAULT.oracle)
}

pub fn likelihood_by_orderings_with_limit(g: &Graph, limit: usize) -> Result<Rational> {
    let t = g.order();
    limits::check(
        "ordering enumeration",
        "--max-oracle",
        t,
        limit,
        Limits::HARD.oracle,
    )?;
    let aut = automorphism_count_with_limit(g, Limits::HARD.automorphism)?;

    // Orderings are tallied by their binomial product; each contributes
    // 1 / (t! * product).
    let mut tally: HashMap<u128, u64> = HashMap::new();
    let mut ordering: Vec<usize> = (0..t).collect();
    loop {
        *tally
            .entry(binomial_product(&back_degrees_unchecked(g, &ordering)))
            .or_default() += 1;
        if !next_permutation(&mut ordering) {
            break;
        }
    }
    let mut sum = Rational::zero();
    for (product, count) in tally {
        sum += ratio(count, product);
    }
    Ok(sum / ratio(factorial(t) * aut, 1u8))
}
