//! Subset dynamic program for the ordering sum.
//!
//! For a vertex set `S` let `g(S)` be the sum over all orderings of `S` of
//! `prod_j 1 / C(j - 1, d_j)`, with back-degrees taken in the induced
//! subgraph `G[S]`. The last vertex `v` of an ordering contributes
//! `1 / C(|S| - 1, deg_{G[S]}(v))`, so
//!
//! ```text
//! g(S) = sum_{v in S} g(S - v) / C(|S| - 1, deg_{G[S]}(v)),   g({}) = 1.
//! ```
//!
//! All values on layer `k = |S|` share the denominator `D_k = prod_{j<=k} M_j`
//! with `M_j = lcm_d C(j - 1, d)`, so the table stores integer numerators
//! `N(S) = g(S) * D_k` and each step multiplies by the integer
//! `M_k / C(k - 1, d)`. Only two layers are kept; layer members are indexed
//! by their colex rank.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{ratio, Rational};
use crate::automorphism::automorphism_count_with_limit;
use crate::combinatorics::{binomial, binomial_row_lcm, factorial};
use crate::error::Result;
use crate::graph::Graph;
use crate::limits::{self, Limits};

/// Layers smaller than this are evaluated on the calling thread.
const PARALLEL_LAYER: usize = 4096;

/// Exact `L(g)` via the subset dynamic program.
pub fn likelihood_exact(g: &Graph) -> Result<Rational> {
    likelihood_exact_with_limits(g, &Limits::DEFAULT)
}

pub fn likelihood_exact_with_limits(g: &Graph, limits: &Limits) -> Result<Rational> {
    let sum = ordering_sum_with_limit(g, limits.dp)?;
    let aut = automorphism_count_with_limit(g, limits.automorphism)?;
    Ok(sum / ratio(aut, 1u8))
}

/// Probability that the process produces `g` with its given labeling,
/// summed over all orderings of the vertices; `L(g) * |Aut(g)|`.
pub fn ordering_sum(g: &Graph) -> Result<Rational> {
    ordering_sum_with_limit(g, Limits::DEFAULT.dp)
}

pub(crate) fn ordering_sum_with_limit(g: &Graph, limit: usize) -> Result<Rational> {
    let t = g.order();
    limits::check(
        "subset dynamic program",
        "--max-dp",
        t,
        limit,
        Limits::HARD.dp,
    )?;
    let (numerator, denominator) = subset_sum(g);
    Ok(ratio(numerator, denominator * factorial(t)))
}

/// Returns `(N(V), D_t)` with `g(V) = N(V) / D_t`.
fn subset_sum(g: &Graph) -> (BigUint, BigUint) {
    let t = g.order();
    let adj: Vec<u32> = g.masks().iter().map(|&m| m as u32).collect();

    let mut denominator = BigUint::one();
    let mut prev: Vec<BigUint> = vec![BigUint::one()];
    for k in 1..=t {
        let lcm = binomial_row_lcm(k - 1);
        denominator *= lcm;
        let multiplier: Vec<u64> = (0..k).map(|d| lcm / binomial(k - 1, d)).collect();
        let members = k_subsets(t, k);
        let step = |&set: &u32| -> BigUint {
            let bits: Vec<usize> = (0..t).filter(|&b| set >> b & 1 == 1).collect();
            // rank(S - bits[i]) = sum_{m<i} C(b_m, m+1) + sum_{m>i} C(b_m, m)
            let mut after: u64 = bits
                .iter()
                .enumerate()
                .skip(1)
                .map(|(m, &b)| binomial(b, m))
                .sum();
            let mut before: u64 = 0;
            let mut acc = BigUint::zero();
            for (i, &v) in bits.iter().enumerate() {
                let rank = (before + after) as usize;
                let degree = (adj[v] & set).count_ones() as usize;
                acc += &prev[rank] * multiplier[degree];
                before += binomial(v, i + 1);
                if i + 1 < bits.len() {
                    after -= binomial(bits[i + 1], i + 1);
                }
            }
            acc
        };
        prev = if members.len() >= PARALLEL_LAYER {
            members.par_iter().map(step).collect()
        } else {
            members.iter().map(step).collect()
        };
    }
    debug_assert_eq!(prev.len(), 1);
    (prev.pop().expect("full set"), denominator)
}

/// All `k`-subsets of `0..t` as bitmasks, in increasing numeric (colex) order.
fn k_subsets(t: usize, k: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(binomial(t, k) as usize);
    if k == 0 {
        out.push(0);
        return out;
    }
    let limit = 1u64 << t;
    let mut x: u64 = (1u64 << k) - 1;
    while x < limit {
        out.push(x as u32);
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}
