//! Exact likelihood of graphs under uniform random vertex addition.
//!
//! A graph grows from a single vertex; at step `i` a new vertex picks a
//! uniform degree in `0..i` and a uniform set of that many existing
//! neighbors. The likelihood of a `t`-vertex graph `G` is the probability
//! that `t` steps produce a graph isomorphic to `G`.
//!
//! ```
//! use graph_likelihood::{likelihood_exact, parse_graph6};
//!
//! let k4 = parse_graph6("C~").unwrap();
//! assert_eq!(likelihood_exact(&k4).unwrap().to_string(), "1/24");
//! ```

pub mod automorphism;
pub mod canon;
mod combinatorics;
pub mod enumerate;
mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod likelihood;
pub mod limits;
mod refine;
pub mod report;
pub mod sim;
pub mod verify;

pub use automorphism::{automorphism_count, automorphism_count_with_limit};
pub use canon::{
    are_isomorphic, canonical_form, canonical_key, canonical_key_with_limit, CanonicalKey,
};
pub use combinatorics::{binomial, factorial};
pub use enumerate::{enumerate_nonisomorphic, enumerate_nonisomorphic_with_limit};
pub use error::{Error, Result};
pub use family::{make_family, FamilyKind, FamilySpec};
pub use graph::{EdgeList, Graph, MAX_ORDER};
pub use graph6::{parse_graph6, to_graph6};
pub use likelihood::{
    back_degrees, cycle_from_path_relation, enumerate_path_constructions,
    enumerate_path_constructions_with_limit, family_closed_form, likelihood_bounds,
    likelihood_bounds_with_limit, likelihood_by_orderings, likelihood_by_orderings_with_limit,
    likelihood_census, likelihood_census_with_limit, likelihood_exact,
    likelihood_exact_with_limits, likelihood_from_paths, ordering_probability, ordering_sum,
    path_tree, process_distribution_oracle, process_distribution_oracle_with_limit, CensusEntry,
    LikelihoodBounds, PathConstruction, PathTree, PathTreeNode, Rational,
};
pub use limits::Limits;
pub use sim::{
    class_counts, estimate_likelihood, grow, uniform_subset, Estimate, GrowthStep, GrowthTrace,
    SplitMix64,
};
