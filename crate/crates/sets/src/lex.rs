use std::cmp::Ordering;

use crate::{binom_u64, Error, KSet, Result, MAX_N};

/// Lexicographic comparison of two sets of equal size.
pub fn lex_compare(f: &KSet, g: &KSet) -> Result<Ordering> {
    if f.len() != g.len() {
        return Err(Error::param(format!(
            "lex_compare needs equal sizes, got {} and {}",
            f.len(),
            g.len()
        )));
    }
    if f.ground_n() != g.ground_n() {
        return Err(Error::param("lex_compare needs a common ground set"));
    }
    Ok(f.cmp(g))
}

/// Iterator over the k-subsets of `[n]` in lexicographic order.
pub struct KSubsets {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Iterator for KSubsets {
    type Item = KSet;

    fn next(&mut self) -> Option<KSet> {
        if self.done {
            return None;
        }
        let bits = self.idx.iter().fold(0u64, |b, &i| b | 1u64 << i);
        let out = KSet::from_bits_unchecked(self.n, bits);
        let k = self.idx.len();
        // advance to the next index tuple
        let mut p = k;
        loop {
            if p == 0 {
                self.done = true;
                break;
            }
            p -= 1;
            if self.idx[p] < self.n - k + p {
                self.idx[p] += 1;
                for q in p + 1..k {
                    self.idx[q] = self.idx[q - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// All k-subsets of `[n]`, lex-ascending.
pub fn ksubsets(n: usize, k: usize) -> Result<KSubsets> {
    if n == 0 || n > MAX_N || k > n {
        return Err(Error::param(format!(
            "ksubsets needs 0 <= k <= n <= {MAX_N}, got n={n}, k={k}"
        )));
    }
    Ok(KSubsets {
        n,
        idx: (0..k).collect(),
        done: false,
    })
}

/// Position of `f` among the `|f|`-subsets of its ground set in lex order.
pub fn lex_rank(f: &KSet) -> u64 {
    let n = f.ground_n() as u32;
    let k = f.len() as u32;
    let mut rank = 0u64;
    let mut prev: i64 = -1;
    for (pos, label) in f.labels().into_iter().enumerate() {
        let a = label as i64 - 1;
        let remaining = k - pos as u32 - 1;
        for x in (prev + 1)..a {
            rank += binom_u64(n - 1 - x as u32, remaining);
        }
        prev = a;
    }
    rank
}

/// Inverse of [`lex_rank`].
pub fn lex_unrank(n: usize, k: usize, index: u64) -> Result<KSet> {
    if n == 0 || n > MAX_N || k > n {
        return Err(Error::param(format!(
            "lex_unrank needs 0 <= k <= n <= {MAX_N}"
        )));
    }
    let total = binom_u64(n as u32, k as u32);
    if index >= total {
        return Err(Error::param(format!("index {index} outside [0, {total})")));
    }
    let mut rest = index;
    let mut bits = 0u64;
    let mut x = 0u32;
    for pos in 0..k as u32 {
        let remaining = k as u32 - pos - 1;
        loop {
            let block = binom_u64(n as u32 - 1 - x, remaining);
            if rest < block {
                break;
            }
            rest -= block;
            x += 1;
        }
        bits |= 1u64 << x;
        x += 1;
    }
    Ok(KSet::from_bits_unchecked(n, bits))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, l: &[usize]) -> KSet {
        KSet::new(n, l).unwrap()
    }

    #[test]
    fn three_choose_two() {
        let v: Vec<_> = ksubsets(3, 2).unwrap().map(|s| s.labels()).collect();
        assert_eq!(v, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn empty_subset() {
        let v: Vec<_> = ksubsets(4, 0).unwrap().collect();
        assert_eq!(v.len(), 1);
        assert!(v[0].is_empty());
    }

    #[test]
    fn four_choose_two_ends() {
        let v: Vec<_> = ksubsets(4, 2).unwrap().collect();
        assert_eq!(v.len(), 6);
        assert_eq!(v[0], set(4, &[1, 2]));
        assert_eq!(v[5], set(4, &[3, 4]));
    }

    #[test]
    fn rejects_bad_params() {
        assert!(ksubsets(3, 4).is_err());
        assert!(ksubsets(65, 1).is_err());
        assert!(lex_unrank(4, 2, 6).is_err());
    }

    #[test]
    fn compare_examples() {
        assert_eq!(
            lex_compare(&set(5, &[1, 4]), &set(5, &[2, 3])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            lex_compare(&set(5, &[1, 3]), &set(5, &[1, 3])).unwrap(),
            Ordering::Equal
        );
        assert_eq!(
            lex_compare(&set(5, &[2, 5]), &set(5, &[2, 4])).unwrap(),
            Ordering::Greater
        );
        assert!(lex_compare(&set(5, &[1]), &set(5, &[2, 3])).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(lex_rank(&set(4, &[1, 2])), 0);
        assert_eq!(lex_unrank(4, 2, 5).unwrap(), set(4, &[3, 4]));
    }
}
