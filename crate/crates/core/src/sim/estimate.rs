//! Monte Carlo estimates of `Pr[G_t ~ G]`.
//!
//! Sample `j` of a run is drawn from stream `j / STREAM_LEN` of the seed
//! ([`SplitMix64::stream`]), so totals do not depend on how streams are
//! spread over threads.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::{grow_masks, SplitMix64};
use crate::canon::{canonical_key, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::likelihood::Rational;

/// Samples per derived stream.
pub const STREAM_LEN: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq)]
pub struct Estimate {
    pub hits: u64,
    pub samples: u64,
    pub p_hat: f64,
    /// Normal-approximation standard error `sqrt(p_hat (1 - p_hat) / n)`.
    pub stderr: f64,
}

impl Estimate {
    pub fn from_counts(hits: u64, samples: u64) -> Self {
        let p_hat = hits as f64 / samples as f64;
        Estimate {
            hits,
            samples,
            p_hat,
            stderr: (p_hat * (1.0 - p_hat) / samples as f64).sqrt(),
        }
    }

    /// `(p_hat - exact) / stderr`; infinite when the standard error is zero
    /// and the estimate misses.
    pub fn z_score(&self, exact: &Rational) -> f64 {
        let diff = self.p_hat - exact.to_f64().unwrap_or(f64::NAN);
        if diff == 0.0 {
            0.0
        } else {
            diff / self.stderr
        }
    }

    /// True iff `|p_hat - exact| <= sigmas * stderr`.
    pub fn agrees_with(&self, exact: &Rational, sigmas: f64) -> bool {
        self.z_score(exact).abs() <= sigmas
    }
}

/// Runs `samples` growths of `target.order()` steps and counts outcomes
/// isomorphic to `target`.
pub fn estimate_likelihood(target: &Graph, samples: u64, seed: u64) -> Result<Estimate> {
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be at least 1".into()));
    }
    let t = target.order();
    let key = canonical_key(target)?;
    let edges = target.edge_count();
    let degrees = target.degree_sequence();
    let hits = run_streams(t, samples, seed, |adj, hits: &mut u64| {
        let g = Graph::from_masks(adj.to_vec()).expect("process output is a graph");
        if g.edge_count() == edges
            && g.degree_sequence() == degrees
            && canonical_key(&g).expect("same order as target") == key
        {
            *hits += 1;
        }
    })
    .into_iter()
    .sum();
    Ok(Estimate::from_counts(hits, samples))
}

/// Outcome counts per isomorphism class over `samples` growths of `t` steps.
pub fn class_counts(t: usize, samples: u64, seed: u64) -> Result<BTreeMap<CanonicalKey, u64>> {
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be at least 1".into()));
    }
    // validates t against the canonical limit up front
    canonical_key(&Graph::empty(t)?)?;
    let per_stream = run_streams(
        t,
        samples,
        seed,
        |adj, counts: &mut BTreeMap<CanonicalKey, u64>| {
            let g = Graph::from_masks(adj.to_vec()).expect("process output is a graph");
            *counts
                .entry(canonical_key(&g).expect("order checked"))
                .or_default() += 1;
        },
    );
    let mut total = BTreeMap::new();
    for counts in per_stream {
        for (k, c) in counts {
            *total.entry(k).or_default() += c;
        }
    }
    Ok(total)
}

fn run_streams<A: Default + Send>(
    t: usize,
    samples: u64,
    seed: u64,
    record: impl Fn(&[u64], &mut A) + Sync,
) -> Vec<A> {
    let streams = samples.div_ceil(STREAM_LEN);
    (0..streams)
        .into_par_iter()
        .map(|s| {
            let mut rng = SplitMix64::stream(seed, s);
            let len = STREAM_LEN.min(samples - s * STREAM_LEN);
            let mut acc = A::default();
            let mut adj = Vec::with_capacity(t);
            let mut pool = Vec::with_capacity(t);
            for _ in 0..len {
                grow_masks(t, &mut rng, &mut adj, &mut pool);
                record(&adj, &mut acc);
            }
            acc
        })
        .collect()
}
