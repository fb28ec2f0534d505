//! Closed forms for named families.
//!
//! * complete `K_t`: `1 / t!`;
//! * empty graph: equal to its complement `K_t`, so `1 / t!`;
//! * star `K_{1,t-1}`: `t / (t!)^2 * sum_{i=0}^{t-1} i!` for `t >= 3`;
//! * one edge plus isolated vertices: `(t - 1) / t!`;
//! * `s` disjoint edges plus isolated vertices:
//!   `1/t! * sum_{2 <= i_1 < ... < i_s <= t} prod_j (i_j + 1 - 2j) / (i_j - 1)`;
//! * cycle `C_n`: `L(P_{n-1}) / (n * C(n - 1, 2))`, see
//!   [`cycle_from_path_relation`].
//!
//! Paths have no closed form here.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{likelihood_exact, ratio, Rational};
use crate::combinatorics::{binomial, factorial};
use crate::error::{Error, Result};
use crate::family::{make_family, FamilyKind, FamilySpec};
use crate::limits::{self, Limits};

pub fn family_closed_form(spec: FamilySpec) -> Result<Rational> {
    spec.validate()?;
    let t = spec.order;
    match spec.kind {
        FamilyKind::Complete | FamilyKind::Empty => Ok(ratio(1u8, factorial(t))),
        // K_{1,1} is K_2; the star sum counts its two orderings twice
        FamilyKind::Star if t == 2 => Ok(ratio(1u8, 2u8)),
        FamilyKind::Star => {
            let sum: BigUint = (0..t).map(factorial).sum();
            let tf = factorial(t);
            Ok(ratio(sum * t, &tf * &tf))
        }
        FamilyKind::OneEdge => Ok(ratio(t - 1, factorial(t))),
        FamilyKind::Matching => Ok(matching_sum(t, spec.size) / ratio(factorial(t), 1u8)),
        FamilyKind::Path => Err(Error::NoClosedForm("path")),
        FamilyKind::Cycle => Err(Error::NoClosedForm("cycle")),
    }
}

/// `sum_{2 <= i_1 < ... < i_s <= t} prod_j (i_j + 1 - 2j) / (i_j - 1)`.
fn matching_sum(t: usize, s: usize) -> Rational {
    fn go(t: usize, s: usize, j: usize, from: usize) -> Rational {
        if j > s {
            return Rational::one();
        }
        let mut total = Rational::zero();
        for i in from..=t {
            // i + 1 - 2j counts the isolated vertices available at level i
            let free = (i + 1).saturating_sub(2 * j);
            if free == 0 {
                continue;
            }
            total += ratio(free, i - 1) * go(t, s, j + 1, i + 1);
        }
        total
    }
    go(t, s, 1, 2)
}

/// `L(C_n)` from `L(P_{n-1})`: every path construction of `C_n` ends by
/// joining a new vertex to both ends of a path on `n - 1` vertices.
pub fn cycle_from_path_relation(n: usize) -> Result<Rational> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle relation needs n >= 3, got {n}"
        )));
    }
    limits::check(
        "cycle relation",
        "--max-dp",
        n - 1,
        Limits::DEFAULT.dp,
        Limits::HARD.dp,
    )?;
    let path = make_family(FamilySpec::new(FamilyKind::Path, n - 1))?;
    Ok(likelihood_exact(&path)? / ratio(n as u64 * binomial(n - 1, 2), 1u8))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_values() {
        assert_eq!(
            family_closed_form(FamilySpec::new(FamilyKind::Complete, 5)).unwrap(),
            ratio(1u8, 120u8)
        );
        assert_eq!(
            family_closed_form(FamilySpec::new(FamilyKind::Star, 4)).unwrap(),
            ratio(5u8, 72u8)
        );
        assert_eq!(
            family_closed_form(FamilySpec::matching(4, 2)).unwrap(),
            ratio(1u8, 36u8)
        );
        assert_eq!(
            family_closed_form(FamilySpec::new(FamilyKind::OneEdge, 4)).unwrap(),
            ratio(1u8, 8u8)
        );
    }

    #[test]
    fn matching_sum_for_two_edges_on_four_vertices() {
        // (i1, i2) in {(2,3), (2,4), (3,4)}: 1*0/2 + 1*1/3 + 1*1/3
        assert_eq!(matching_sum(4, 2), ratio(2u8, 3u8));
        assert_eq!(matching_sum(7, 0), ratio(1u8, 1u8));
    }

    #[test]
    fn no_closed_form_for_paths_and_cycles() {
        assert_eq!(
            family_closed_form(FamilySpec::new(FamilyKind::Path, 4)),
            Err(Error::NoClosedForm("path"))
        );
        assert!(family_closed_form(FamilySpec::new(FamilyKind::Cycle, 4)).is_err());
        assert!(family_closed_form(FamilySpec::matching(3, 2)).is_err());
    }

    #[test]
    fn cycle_relation_small() {
        assert_eq!(cycle_from_path_relation(3).unwrap(), ratio(1u8, 6u8));
        assert_eq!(cycle_from_path_relation(4).unwrap(), ratio(1u8, 36u8));
        let c5 = make_family(FamilySpec::new(FamilyKind::Cycle, 5)).unwrap();
        assert_eq!(
            cycle_from_path_relation(5).unwrap(),
            likelihood_exact(&c5).unwrap()
        );
        assert!(cycle_from_path_relation(2).is_err());
    }
}
