//! Machine-readable report shapes shared by the CLI and the tests.
//!
//! Rationals serialize as `{"num": "...", "den": "..."}` with decimal
//! strings, so no precision is lost in JSON.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::canon::CanonicalKey;
use crate::likelihood::{CensusEntry, LikelihoodBounds, PathConstruction, Rational};
use crate::sim::Estimate;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RationalJson {
    fn from(r: &Rational) -> Self {
        RationalJson {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl RationalJson {
    pub fn to_rational(&self) -> Option<Rational> {
        let num: BigInt = self.num.parse().ok()?;
        let den: BigInt = self.den.parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(Rational::new(num, den))
    }
}

/// `num/den`, always with both parts.
pub fn plain(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal expansion truncated to `digits` places after the point.
pub fn decimal(r: &Rational, digits: usize) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let num = r.numer().abs();
    let den = r.denom().clone();
    let (whole, mut rem) = num.div_rem(&den);
    let mut out = format!("{sign}{whole}");
    if digits > 0 {
        out.push('.');
        for _ in 0..digits {
            rem *= 10u8;
            let (d, r2) = rem.div_rem(&den);
            out.push_str(&d.to_string());
            rem = r2;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsJson {
    pub lower: RationalJson,
    pub upper: RationalJson,
}

impl From<&LikelihoodBounds> for BoundsJson {
    fn from(b: &LikelihoodBounds) -> Self {
        BoundsJson {
            lower: (&b.lower).into(),
            upper: (&b.upper).into(),
        }
    }
}

/// Result of `compute`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LikelihoodReport {
    pub graph6: String,
    pub likelihood: RationalJson,
    pub aut: u128,
    /// `t! / |Aut|`, as a decimal string.
    pub paths: String,
    pub bounds: BoundsJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathJson {
    pub ordering: Vec<usize>,
    pub back_degrees: Vec<usize>,
    pub weight: RationalJson,
}

impl From<&PathConstruction> for PathJson {
    fn from(p: &PathConstruction) -> Self {
        PathJson {
            ordering: p.ordering.clone(),
            back_degrees: p.back_degrees.clone(),
            weight: (&p.weight).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathsReport {
    pub graph6: String,
    pub count: usize,
    pub paths: Vec<PathJson>,
    pub likelihood: RationalJson,
}

/// Result of `simulate`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub target: String,
    pub samples: u64,
    pub seed: u64,
    pub hits: u64,
    pub p_hat: f64,
    pub stderr: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<RationalJson>,
    /// `(p_hat - exact) / stderr`, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<f64>,
}

impl SimulationReport {
    pub fn new(target: String, seed: u64, est: &Estimate) -> Self {
        SimulationReport {
            target,
            samples: est.samples,
            seed,
            hits: est.hits,
            p_hat: est.p_hat,
            stderr: est.stderr,
            exact: None,
            z: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub graph6: String,
    pub likelihood: RationalJson,
    pub aut: u128,
}

impl From<&CensusEntry> for CensusRow {
    fn from(e: &CensusEntry) -> Self {
        CensusRow {
            graph6: e.key.to_string(),
            likelihood: (&e.likelihood).into(),
            aut: e.automorphisms,
        }
    }
}

/// CSV with header `graph6,num,den,aut`.
pub fn census_csv(entries: &[CensusEntry]) -> String {
    let mut out = String::from("graph6,num,den,aut\n");
    for e in entries {
        out.push_str(&format!(
            "{},{},{},{}\n",
            e.key,
            e.likelihood.numer(),
            e.likelihood.denom(),
            e.automorphisms
        ));
    }
    out
}

/// Key lookup helper for tables keyed by canonical graph6.
pub fn key_label(key: &CanonicalKey) -> &str {
    key.as_graph6()
}
