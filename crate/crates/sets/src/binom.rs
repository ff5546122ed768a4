use num_bigint::BigUint;
use num_traits::{One, Zero};

pub type BigCount = BigUint;

/// C(a, b), zero outside `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> BigCount {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= BigUint::from((a - i) as u64);
        acc /= BigUint::from((i + 1) as u64);
    }
    acc
}

/// Machine-word binomial used for ranking. Exact for `a <= 64`.
pub fn binom_u64(a: u32, b: u32) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigCount {
        BigUint::from(v)
    }

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(-1, 0), big(0));
        assert_eq!(binomial(4, -1), big(0));
        assert_eq!(binomial(7, 0), big(1));
    }

    #[test]
    fn pascal_identity() {
        for a in 1..=40i64 {
            for b in 1..=a {
                assert_eq!(binomial(a, b), binomial(a - 1, b) + binomial(a - 1, b - 1));
            }
        }
    }

    #[test]
    fn word_and_big_agree() {
        for a in 0..=64u32 {
            for b in 0..=a {
                assert_eq!(
                    big(binom_u64(a, b)),
                    binomial(a as i64, b as i64),
                    "C({a},{b})"
                );
            }
        }
    }

    #[test]
    fn large_exact() {
        // C(100,50) from its known decimal expansion
        let expect: BigUint = "100891344545564193334812497256".parse().unwrap();
        assert_eq!(binomial(100, 50), expect);
    }
}
