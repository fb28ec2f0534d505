//! Seeded simulation of the vertex-addition process and Monte Carlo
//! estimation of likelihoods.
//!
//! Step `i >= 2` of a growth draws the degree `k = below(i)` and then a
//! uniform `k`-subset of `0..i-1` by a partial Fisher-Yates shuffle (`k` more
//! draws). Step 1 draws nothing. A `(t, seed)` pair therefore fixes the whole
//! trace on every platform.

mod estimate;
mod rng;

pub use estimate::{class_counts, estimate_likelihood, Estimate, STREAM_LEN};
pub use rng::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// One step of a growth: the new vertex's degree and its neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthStep {
    pub degree: usize,
    /// Ascending; all below the new vertex's index.
    pub neighbors: Vec<usize>,
}

/// Full record of one run of the process; step `i` (0-based) adds vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthTrace {
    pub steps: Vec<GrowthStep>,
}

impl GrowthTrace {
    /// Rebuilds the graph the trace describes.
    pub fn to_graph(&self) -> Result<Graph> {
        let mut g = Graph::empty(self.steps.len())?;
        for (v, step) in self.steps.iter().enumerate() {
            if step.neighbors.len() != step.degree {
                return Err(Error::InvalidParameter(format!(
                    "step {v} records degree {} but {} neighbors",
                    step.degree,
                    step.neighbors.len()
                )));
            }
            for &u in &step.neighbors {
                if u >= v {
                    return Err(Error::VertexOutOfRange {
                        vertex: u,
                        order: v,
                    });
                }
                g.insert_edge(u, v);
            }
        }
        Ok(g)
    }
}

/// Runs the process for `t` steps from `seed`.
pub fn grow(t: usize, seed: u64) -> Result<(Graph, GrowthTrace)> {
    let mut rng = SplitMix64::new(seed);
    let trace = grow_trace(t, &mut rng)?;
    let g = trace.to_graph()?;
    Ok((g, trace))
}

pub(crate) fn grow_trace(t: usize, rng: &mut SplitMix64) -> Result<GrowthTrace> {
    if t == 0 {
        return Err(Error::InvalidParameter("growth needs t >= 1".into()));
    }
    let mut steps = Vec::with_capacity(t);
    let mut pool: Vec<usize> = Vec::with_capacity(t);
    steps.push(GrowthStep {
        degree: 0,
        neighbors: Vec::new(),
    });
    for existing in 1..t {
        let degree = rng.below(existing as u64 + 1) as usize;
        pool.clear();
        pool.extend(0..existing);
        let neighbors = shuffle_prefix(rng, &mut pool, degree);
        steps.push(GrowthStep { degree, neighbors });
    }
    Ok(GrowthTrace { steps })
}

/// Neighbor masks only; the hot path of the estimators.
pub(crate) fn grow_masks(
    t: usize,
    rng: &mut SplitMix64,
    adj: &mut Vec<u64>,
    pool: &mut Vec<usize>,
) {
    adj.clear();
    adj.push(0);
    for existing in 1..t {
        let degree = rng.below(existing as u64 + 1) as usize;
        pool.clear();
        pool.extend(0..existing);
        let mut mask = 0u64;
        for i in 0..degree {
            let j = i + rng.below((existing - i) as u64) as usize;
            pool.swap(i, j);
            let u = pool[i];
            mask |= 1 << u;
            adj[u] |= 1 << existing;
        }
        adj.push(mask);
    }
}

/// Uniformly random `k`-subset of `0..n`, ascending. Draws exactly `k`
/// bounded integers from `rng`.
pub fn uniform_subset(rng: &mut SplitMix64, n: usize, k: usize) -> Result<Vec<usize>> {
    if k > n {
        return Err(Error::InvalidSubsetSize { n, k });
    }
    let mut pool: Vec<usize> = (0..n).collect();
    Ok(shuffle_prefix(rng, &mut pool, k))
}

fn shuffle_prefix(rng: &mut SplitMix64, pool: &mut [usize], k: usize) -> Vec<usize> {
    let n = pool.len();
    for i in 0..k {
        let j = i + rng.below((n - i) as u64) as usize;
        pool.swap(i, j);
    }
    let mut chosen = pool[..k].to_vec();
    chosen.sort_unstable();
    chosen
}
