use num_bigint::BigUint;
use num_traits::One;

use super::{ratio, Rational};
use crate::automorphism::automorphism_count_with_limit;
use crate::combinatorics::binomial;
use crate::error::Result;
use crate::graph::Graph;
use crate::limits::Limits;

/// Automorphism bounds on `L(G)`: every path construction weighs at most
/// `1 / t!` and at least `1 / (t! * prod_i C(i - 1, floor((i - 1) / 2)))`,
/// and there are `t! / |Aut(G)|` of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LikelihoodBounds {
    pub lower: Rational,
    pub upper: Rational,
}

impl LikelihoodBounds {
    pub fn contains(&self, value: &Rational) -> bool {
        self.lower <= *value && *value <= self.upper
    }
}

pub fn likelihood_bounds(g: &Graph) -> Result<LikelihoodBounds> {
    likelihood_bounds_with_limit(g, Limits::DEFAULT.automorphism)
}

pub fn likelihood_bounds_with_limit(g: &Graph, limit: usize) -> Result<LikelihoodBounds> {
    let aut = automorphism_count_with_limit(g, limit)?;
    let widest: BigUint = (0..g.order())
        .map(|i| binomial(i, i / 2))
        .fold(BigUint::one(), |acc, c| acc * c);
    Ok(LikelihoodBounds {
        lower: ratio(1u8, widest * aut),
        upper: ratio(1u8, aut),
    })
}
