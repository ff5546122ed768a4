use std::cmp::Ordering;

use proptest::prelude::*;
use setfam_sets::{binom_u64, binomial, ksubsets, lex_compare, lex_rank, lex_unrank, KSet};

// Direct reading of the rule min(F \ G) < min(G \ F) on label vectors.
fn rule_less(f: &[usize], g: &[usize]) -> bool {
    let fg: Vec<_> = f.iter().filter(|x| !g.contains(x)).collect();
    let gf: Vec<_> = g.iter().filter(|x| !f.contains(x)).collect();
    match (fg.iter().min(), gf.iter().min()) {
        (Some(a), Some(b)) => a < b,
        _ => false,
    }
}

fn brute_force_sorted(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = (0u64..1 << n)
        .filter(|b| b.count_ones() as usize == k)
        .map(|b| (0..n).filter(|i| b >> i & 1 == 1).map(|i| i + 1).collect())
        .collect();
    all.sort_by(|a, b| {
        if a == b {
            Ordering::Equal
        } else if rule_less(a, b) {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    });
    all
}

#[test]
fn enumeration_matches_brute_force_sort() {
    for n in 1..=10 {
        for k in 0..=n {
            let got: Vec<Vec<usize>> = ksubsets(n, k).unwrap().map(|s| s.labels()).collect();
            assert_eq!(got, brute_force_sorted(n, k), "n={n} k={k}");
        }
    }
}

#[test]
fn enumeration_count_and_strict_order() {
    for n in 1..=12 {
        for k in 0..=n {
            let v: Vec<KSet> = ksubsets(n, k).unwrap().collect();
            assert_eq!(v.len() as u64, binom_u64(n as u32, k as u32));
            assert_eq!(binomial(n as i64, k as i64), (v.len() as u64).into());
            for w in v.windows(2) {
                assert_eq!(lex_compare(&w[0], &w[1]).unwrap(), Ordering::Less);
            }
        }
    }
}

#[test]
fn rank_unrank_exhaustive() {
    for n in 1..=10 {
        for k in 0..=n {
            for (i, s) in ksubsets(n, k).unwrap().enumerate() {
                assert_eq!(lex_rank(&s), i as u64);
                assert_eq!(lex_unrank(n, k, i as u64).unwrap(), s);
            }
        }
    }
}

#[test]
fn rank_at_large_ground() {
    let last = lex_unrank(64, 3, binom_u64(64, 3) - 1).unwrap();
    assert_eq!(last.labels(), vec![62, 63, 64]);
    assert_eq!(lex_rank(&last), binom_u64(64, 3) - 1);
}

fn kset_strategy() -> impl Strategy<Value = (usize, u64, u64)> {
    (2usize..=64).prop_flat_map(|n| {
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        (
            Just(n),
            any::<u64>().prop_map(move |b| b & mask),
            any::<u64>().prop_map(move |b| b & mask),
        )
    })
}

proptest! {
    #[test]
    fn order_agrees_with_rule((n, a, b) in kset_strategy()) {
        let f = KSet::from_bits(n, a).unwrap();
        let g = KSet::from_bits(n, b).unwrap();
        let (fl, gl) = (f.labels(), g.labels());
        if f.len() == g.len() {
            prop_assert_eq!(f < g, rule_less(&fl, &gl));
        }
        prop_assert_eq!(f.cmp(&g), g.cmp(&f).reverse());
    }

    #[test]
    fn rank_is_monotone((n, a, b) in kset_strategy()) {
        let f = KSet::from_bits(n, a).unwrap();
        let g = KSet::from_bits(n, b).unwrap();
        if f.len() == g.len() {
            prop_assert_eq!(lex_rank(&f).cmp(&lex_rank(&g)), f.cmp(&g));
            prop_assert_eq!(lex_unrank(n, f.len(), lex_rank(&f)).unwrap(), f);
        }
    }
}
