//! Self-checks over small orders, grouped into named suites.
//!
//! Each suite returns one [`Check`] per property instance; a suite passes
//! iff all of its checks do.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::automorphism::automorphism_count;
use crate::combinatorics::{factorial, next_permutation};
use crate::enumerate::enumerate_nonisomorphic;
use crate::error::{Error, Result};
use crate::family::{make_family, FamilyKind, FamilySpec};
use crate::graph::Graph;
use crate::likelihood::{
    cycle_from_path_relation, enumerate_path_constructions, family_closed_form, likelihood_bounds,
    likelihood_by_orderings, likelihood_census, likelihood_exact, likelihood_from_paths,
    process_distribution_oracle, ratio, Rational,
};
use crate::report::plain;
use crate::sim::class_counts;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Figure1,
    Normalization,
    Definition,
    Oracle,
    Complement,
    Bounds,
    Paths,
    ClosedForms,
    MonteCarlo,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Figure1,
        Suite::Normalization,
        Suite::Definition,
        Suite::Oracle,
        Suite::Complement,
        Suite::Bounds,
        Suite::Paths,
        Suite::ClosedForms,
        Suite::MonteCarlo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Figure1 => "figure1",
            Suite::Normalization => "normalization",
            Suite::Definition => "definition",
            Suite::Oracle => "oracle",
            Suite::Complement => "complement",
            Suite::Bounds => "bounds",
            Suite::Paths => "paths",
            Suite::ClosedForms => "closed-forms",
            Suite::MonteCarlo => "monte-carlo",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::InvalidParameter(format!(
                    "unknown suite {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Samples per order in the Monte Carlo suite.
    pub samples: u64,
    pub seed: u64,
    /// Band half-width, in standard errors.
    pub sigmas: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            samples: 1_000_000,
            seed: 1,
            sigmas: 4,
        }
    }
}

/// One row of the reference table of all graphs on at most four vertices.
#[derive(Debug, Clone, Copy)]
pub struct ReferenceEntry {
    pub name: &'static str,
    pub order: usize,
    pub edges: &'static [(usize, usize)],
    pub num: u64,
    pub den: u64,
}

impl ReferenceEntry {
    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.order, self.edges).expect("table edges are valid")
    }

    pub fn likelihood(&self) -> Rational {
        ratio(self.num, self.den)
    }
}

macro_rules! entry {
    ($name:expr, $t:expr, [$($e:expr),*], $num:expr, $den:expr) => {
        ReferenceEntry { name: $name, order: $t, edges: &[$($e),*], num: $num, den: $den }
    };
}

pub const REFERENCE_TABLE: [ReferenceEntry; 18] = [
    entry!("K1", 1, [], 1, 1),
    entry!("2K1", 2, [], 1, 2),
    entry!("K2", 2, [(0, 1)], 1, 2),
    entry!("3K1", 3, [], 1, 6),
    entry!("K2+K1", 3, [(0, 1)], 1, 3),
    entry!("P3", 3, [(0, 1), (1, 2)], 1, 3),
    entry!("K3", 3, [(0, 1), (1, 2), (0, 2)], 1, 6),
    entry!("4K1", 4, [], 1, 24),
    entry!("K2+2K1", 4, [(0, 1)], 1, 8),
    entry!("2K2", 4, [(0, 1), (2, 3)], 1, 36),
    entry!("P3+K1", 4, [(0, 1), (1, 2)], 13, 72),
    entry!("P4", 4, [(0, 1), (1, 2), (2, 3)], 1, 9),
    entry!("C4", 4, [(0, 1), (1, 2), (2, 3), (3, 0)], 1, 36),
    entry!("K1,3", 4, [(0, 1), (0, 2), (0, 3)], 5, 72),
    entry!("K3+K1", 4, [(0, 1), (1, 2), (0, 2)], 5, 72),
    entry!("paw", 4, [(0, 1), (1, 2), (0, 2), (2, 3)], 13, 72),
    entry!("diamond", 4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)], 1, 8),
    entry!(
        "K4",
        4,
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        1,
        24
    ),
];

pub fn run_suite(suite: Suite, options: &VerifyOptions) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Figure1 => figure1()?,
        Suite::Normalization => normalization(6)?,
        Suite::Definition => definition(5)?,
        Suite::Oracle => oracle(7)?,
        Suite::Complement => complement(6)?,
        Suite::Bounds => bounds(6)?,
        Suite::Paths => paths(7, 6)?,
        Suite::ClosedForms => closed_forms(9)?,
        Suite::MonteCarlo => monte_carlo(4, options)?,
    };
    Ok(SuiteReport { suite, checks })
}

fn figure1() -> Result<Vec<Check>> {
    REFERENCE_TABLE
        .iter()
        .map(|e| {
            let got = likelihood_exact(&e.graph())?;
            let want = e.likelihood();
            Ok(Check::new(
                format!("L({}) = {}", e.name, plain(&want)),
                got == want,
                format!("got {}", plain(&got)),
            ))
        })
        .collect()
}

fn normalization(max_t: usize) -> Result<Vec<Check>> {
    (1..=max_t)
        .map(|t| {
            let census = likelihood_census(t)?;
            let sum: Rational = census.iter().map(|e| &e.likelihood).sum();
            Ok(Check::new(
                format!("t={t}: sum over {} classes = 1", census.len()),
                sum.is_one(),
                format!("sum {}", plain(&sum)),
            ))
        })
        .collect()
}

fn definition(max_t: usize) -> Result<Vec<Check>> {
    (1..=max_t)
        .map(|t| {
            let census: Vec<_> = likelihood_census(t)?
                .into_iter()
                .map(|e| (e.key, e.likelihood))
                .collect();
            let direct = process_distribution_oracle(t)?;
            let mismatch = census.iter().zip(&direct).find(|(a, b)| a != b);
            let detail = match (census.len() == direct.len(), mismatch) {
                (false, _) => format!("{} classes vs {}", census.len(), direct.len()),
                (true, Some((a, b))) => {
                    format!("{} {} vs {} {}", a.0, plain(&a.1), b.0, plain(&b.1))
                }
                (true, None) => format!("{} classes", census.len()),
            };
            Ok(Check::new(
                format!("t={t}: process distribution = census"),
                census == direct,
                detail,
            ))
        })
        .collect()
}

fn per_graph(
    max_t: usize,
    label: &str,
    mut test: impl FnMut(&Graph) -> Result<Option<String>>,
) -> Result<Vec<Check>> {
    (1..=max_t)
        .map(|t| {
            let graphs = enumerate_nonisomorphic(t)?;
            let mut failure = None;
            for g in &graphs {
                if let Some(why) = test(g)? {
                    failure = Some(why);
                    break;
                }
            }
            Ok(Check::new(
                format!("t={t}: {label} ({} graphs)", graphs.len()),
                failure.is_none(),
                failure.unwrap_or_default(),
            ))
        })
        .collect()
}

fn g6(g: &Graph) -> String {
    crate::graph6::to_graph6(g).unwrap_or_else(|_| format!("{g:?}"))
}

fn oracle(max_t: usize) -> Result<Vec<Check>> {
    per_graph(max_t, "dp = orderings = paths", |g| {
        let dp = likelihood_exact(g)?;
        let by_orderings = likelihood_by_orderings(g)?;
        let by_paths = likelihood_from_paths(&enumerate_path_constructions(g)?);
        Ok((dp != by_orderings || dp != by_paths).then(|| {
            format!(
                "{}: {} / {} / {}",
                g6(g),
                plain(&dp),
                plain(&by_orderings),
                plain(&by_paths)
            )
        }))
    })
}

fn complement(max_t: usize) -> Result<Vec<Check>> {
    per_graph(max_t, "L(G) = L(complement) > 0", |g| {
        let a = likelihood_exact(g)?;
        let b = likelihood_exact(&g.complement())?;
        Ok((a != b || a <= Rational::zero())
            .then(|| format!("{}: {} vs {}", g6(g), plain(&a), plain(&b))))
    })
}

fn bounds(max_t: usize) -> Result<Vec<Check>> {
    per_graph(max_t, "lower <= L <= upper", |g| {
        let l = likelihood_exact(g)?;
        let b = likelihood_bounds(g)?;
        Ok((!b.contains(&l)).then(|| {
            format!(
                "{}: {} not in [{}, {}]",
                g6(g),
                plain(&l),
                plain(&b.lower),
                plain(&b.upper)
            )
        }))
    })
}

fn brute_automorphisms(g: &Graph) -> u128 {
    let mut p: Vec<usize> = (0..g.order()).collect();
    let mut count = 0;
    loop {
        if g.relabel(&p).expect("permutation") == *g {
            count += 1;
        }
        if !next_permutation(&mut p) {
            return count;
        }
    }
}

fn paths(max_t: usize, brute_t: usize) -> Result<Vec<Check>> {
    let mut checks = per_graph(max_t, "|Path| * |Aut| = t!, Path nonempty", |g| {
        let count = enumerate_path_constructions(g)?.len();
        let aut = automorphism_count(g)?;
        let ok = count > 0 && factorial(g.order()) == num_bigint::BigUint::from(count) * aut;
        Ok((!ok).then(|| format!("{}: {count} paths, aut {aut}", g6(g))))
    })?;
    checks.extend(per_graph(brute_t, "aut = brute-force count", |g| {
        let fast = automorphism_count(g)?;
        let slow = brute_automorphisms(g);
        Ok((fast != slow).then(|| format!("{}: {fast} vs {slow}", g6(g))))
    })?);
    Ok(checks)
}

fn closed_forms(max_t: usize) -> Result<Vec<Check>> {
    let mut specs = Vec::new();
    for t in 2..=max_t {
        specs.push(FamilySpec::new(FamilyKind::Complete, t));
        specs.push(FamilySpec::new(FamilyKind::Star, t));
        specs.push(FamilySpec::new(FamilyKind::OneEdge, t));
        for s in 2..=3 {
            if 2 * s <= t {
                specs.push(FamilySpec::matching(t, s));
            }
        }
    }
    let mut checks = Vec::new();
    for spec in specs {
        let closed = family_closed_form(spec)?;
        let dp = likelihood_exact(&make_family(spec)?)?;
        let label = match spec.kind {
            FamilyKind::Matching => {
                format!("{} t={} s={}", spec.kind.name(), spec.order, spec.size)
            }
            _ => format!("{} t={}", spec.kind.name(), spec.order),
        };
        checks.push(Check::new(
            format!("{label}: closed form = dp"),
            closed == dp,
            format!("{} vs {}", plain(&closed), plain(&dp)),
        ));
    }
    for n in 3..=max_t {
        let relation = cycle_from_path_relation(n)?;
        let dp = likelihood_exact(&make_family(FamilySpec::new(FamilyKind::Cycle, n))?)?;
        checks.push(Check::new(
            format!("cycle n={n}: L(P_{}) / (n C(n-1,2)) = dp", n - 1),
            relation == dp,
            format!("{} vs {}", plain(&relation), plain(&dp)),
        ));
    }
    Ok(checks)
}

fn monte_carlo(max_t: usize, options: &VerifyOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for t in 1..=max_t {
        let counts = class_counts(t, options.samples, options.seed)?;
        for entry in likelihood_census(t)? {
            let hits = counts.get(&entry.key).copied().unwrap_or(0);
            let est = crate::sim::Estimate::from_counts(hits, options.samples);
            let z = est.z_score(&entry.likelihood);
            checks.push(Check::new(
                format!(
                    "t={t} {}: within {} stderr of {}",
                    entry.key,
                    options.sigmas,
                    plain(&entry.likelihood)
                ),
                z.abs() <= f64::from(options.sigmas),
                format!("p_hat {:.6} z {:+.3}", est.p_hat, z),
            ));
        }
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn reference_table_is_a_distribution_per_order() {
        for t in 1..=4 {
            let sum: Rational = REFERENCE_TABLE
                .iter()
                .filter(|e| e.order == t)
                .map(|e| e.likelihood())
                .sum();
            assert!(sum.is_one(), "t={t}");
        }
    }

    #[test]
    fn quick_suites_pass() {
        let opts = VerifyOptions::default();
        for s in [Suite::Figure1, Suite::ClosedForms, Suite::Complement] {
            let report = run_suite(s, &opts).unwrap();
            assert!(report.passed(), "{report:?}");
        }
        assert_eq!(run_suite(Suite::Figure1, &opts).unwrap().checks.len(), 18);
    }
}
