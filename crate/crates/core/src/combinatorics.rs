use num_bigint::BigUint;
use num_integer::Integer;

/// `C(n, k)` for `n <= 64` (the largest value, `C(64, 32)`, fits in `u64`).
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial fits in u64 for n <= 64")
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::from(1u8), |acc, i| acc * i)
}

/// `lcm(C(n, 0), ..., C(n, n))`.
pub(crate) fn binomial_row_lcm(n: usize) -> u64 {
    (0..=n).fold(1u64, |acc, k| acc.lcm(&binomial(n, k)))
}

/// Advances `p` to the next permutation in lexicographic order. Returns false
/// (leaving `p` sorted descending) when `p` was the last one.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("a larger suffix element exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
        for n in 1..30 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn row_lcms() {
        assert_eq!(binomial_row_lcm(0), 1);
        assert_eq!(binomial_row_lcm(3), 3);
        assert_eq!(binomial_row_lcm(4), 12);
        assert_eq!(binomial_row_lcm(5), 10);
    }

    #[test]
    fn permutations_in_lex_order() {
        let mut p = vec![0, 1, 2];
        let mut seen = vec![p.clone()];
        while next_permutation(&mut p) {
            seen.push(p.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
    }
}
