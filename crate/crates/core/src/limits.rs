//! Hard ceilings for the exponential-cost routines.
//!
//! Every routine that enumerates subsets, orderings or labeled graphs refuses
//! inputs above its ceiling instead of running for hours. The defaults can be
//! overridden per call (the CLI exposes one flag per field).

use crate::error::{Error, Result};

/// Maximum graph order accepted by each family of algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Subset dynamic program (`2^t` states).
    pub dp: usize,
    /// Enumeration of all `t!` orderings.
    pub oracle: usize,
    /// Path-construction enumeration (one representative per coset).
    pub paths: usize,
    /// Census over all isomorphism classes of one order.
    pub census: usize,
    /// Canonical labeling search.
    pub canonical: usize,
    /// Automorphism group order.
    pub automorphism: usize,
    /// Direct enumeration of every labeled outcome of the growth process.
    pub process: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        dp: 20,
        oracle: 9,
        paths: 8,
        census: 7,
        canonical: 16,
        automorphism: 20,
        process: 5,
    };

    /// Absolute ceilings that overrides cannot exceed. They follow from the
    /// integer widths used internally (`u32` subset masks, `u128` binomial
    /// products and group orders, one-byte graph6 sizes).
    pub const HARD: Limits = Limits {
        dp: 30,
        oracle: 16,
        paths: 12,
        census: 10,
        canonical: 62,
        automorphism: 34,
        process: 7,
    };
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}

pub(crate) fn check(
    what: &'static str,
    flag: &'static str,
    order: usize,
    limit: usize,
    hard: usize,
) -> Result<()> {
    let limit = limit.min(hard);
    if order > limit {
        Err(Error::LimitExceeded {
            what,
            flag,
            order,
            limit,
        })
    } else {
        Ok(())
    }
}
