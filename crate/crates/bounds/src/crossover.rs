use std::cmp::Ordering;

use num_bigint::BigInt;
use setfam_sets::{binomial, Error, Result};

fn c(a: i64, b: i64) -> BigInt {
    BigInt::from(binomial(a, b))
}

/// Closed-form `|K_2(n,k)|` and `|J_3(n,k)|`, their order, and the
/// equivalent single-binomial test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossover {
    pub n: usize,
    pub k: usize,
    pub k2: BigInt,
    pub j3: BigInt,
    /// `|K_2|` against `|J_3|`
    pub ordering: Ordering,
    /// `C(n-k-3,k-3) >= C(n-k-3,k-2) + 1`
    pub reformulation: bool,
    /// `2k+1 <= n <= 3k-3`
    pub in_window: bool,
}

pub fn k2_size(n: usize, k: usize) -> BigInt {
    let (n, k) = (n as i64, k as i64);
    c(n - 1, k - 1) - 2 * c(n - k - 1, k - 1) + c(n - k - 3, k - 1) + 2
}

pub fn j3_size(n: usize, k: usize) -> BigInt {
    let (n, k) = (n as i64, k as i64);
    c(n - 1, k - 1) - c(n - k - 1, k - 1) - c(n - k - 2, k - 2) - c(n - k - 3, k - 3) + 3
}

pub fn crossover_compare(n: usize, k: usize) -> Result<Crossover> {
    if k < 4 || n < 2 * k + 1 {
        return Err(Error::domain(format!(
            "crossover needs k >= 4 and n >= 2k+1, got n={n}, k={k}"
        )));
    }
    let k2 = k2_size(n, k);
    let j3 = j3_size(n, k);
    let ordering = k2.cmp(&j3);
    let (ni, ki) = (n as i64, k as i64);
    let reformulation = c(ni - ki - 3, ki - 3) > c(ni - ki - 3, ki - 2);
    assert_eq!(
        ordering != Ordering::Less,
        reformulation,
        "size comparison and reformulation disagree at n={n}, k={k}"
    );
    Ok(Crossover {
        n,
        k,
        k2,
        j3,
        ordering,
        reformulation,
        in_window: n + 3 <= 3 * k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_at_nine_four() {
        let x = crossover_compare(9, 4).unwrap();
        assert_eq!(x.ordering, Ordering::Equal);
        assert_eq!(x.k2, BigInt::from(50));
    }

    #[test]
    fn window_edges_at_k5() {
        assert_ne!(crossover_compare(12, 5).unwrap().ordering, Ordering::Less);
        assert_eq!(crossover_compare(13, 5).unwrap().ordering, Ordering::Less);
        assert!(crossover_compare(8, 4).is_err());
    }
}
