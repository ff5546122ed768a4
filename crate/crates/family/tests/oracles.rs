use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use setfam_family::*;
use setfam_sets::ksubsets;

fn random_family(rng: &mut ChaCha8Rng, n: usize, k: usize, p: f64) -> Family {
    let sets = ksubsets(n, k).unwrap().filter(|_| rng.gen_bool(p));
    Family::uniform(n, k, sets).unwrap()
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (1..=n).collect();
    fn rec(i: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == p.len() {
            out.push(p.clone());
            return;
        }
        for j in i..p.len() {
            p.swap(i, j);
            rec(i + 1, p, out);
            p.swap(i, j);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

fn brute_iso(f: &Family, g: &Family, perms: &[Vec<usize>]) -> bool {
    perms.iter().any(|p| f.permuted(p) == *g)
}

fn brute_embeds(f: &Family, h: &Family, perms: &[Vec<usize>]) -> bool {
    perms.iter().any(|p| f.permuted(p).is_subfamily_of(h))
}

#[test]
fn isomorphism_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for n in 3..=6 {
        let perms = all_perms(n);
        for _ in 0..60 {
            let k = rng.gen_range(1..n);
            let p = rng.gen_range(0.1..0.6);
            let f = random_family(&mut rng, n, k, p);
            // half the time compare against a relabeled copy with one tweak
            let sigma = perms.choose(&mut rng).unwrap();
            let mut g = f.permuted(sigma);
            if rng.gen_bool(0.5) {
                let extra = ksubsets(n, k).unwrap().find(|s| !g.contains(s));
                if let Some(s) = extra {
                    let keep: Vec<_> = g.iter().skip(1).copied().chain([s]).collect();
                    g = Family::uniform(n, k, keep).unwrap();
                }
            }
            assert_eq!(
                is_isomorphic(&f, &g).unwrap(),
                brute_iso(&f, &g, &perms),
                "{f} vs {g}"
            );
        }
    }
}

#[test]
fn canonical_form_is_invariant_and_idempotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [5, 7, 9, 10] {
        for _ in 0..8 {
            let k = rng.gen_range(2..=3);
            let f = random_family(&mut rng, n, k, 0.3);
            let c = canonical_form(&f).unwrap();
            assert_eq!(f.permuted(&c.perm), c.family);
            assert_eq!(canonical_form(&c.family).unwrap().family, c.family);
            let mut labels: Vec<usize> = (1..=n).collect();
            for _ in 0..100 {
                labels.shuffle(&mut rng);
                assert_eq!(
                    canonical_form(&f.permuted(&labels)).unwrap().family,
                    c.family
                );
            }
        }
    }
}

#[test]
fn pair_canonical_is_simultaneous() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..40 {
        let n = 6;
        let f = random_family(&mut rng, n, 2, 0.3);
        let g = random_family(&mut rng, n, 3, 0.2);
        let c = canonical_pair(&f, &g).unwrap();
        assert_eq!(f.permuted(&c.perm), c.f);
        assert_eq!(g.permuted(&c.perm), c.g);
        let mut sigma: Vec<usize> = (1..=n).collect();
        sigma.shuffle(&mut rng);
        let d = canonical_pair(&f.permuted(&sigma), &g.permuted(&sigma)).unwrap();
        assert_eq!((c.f, c.g), (d.f, d.g));
    }
}

#[test]
fn embedding_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 4..=6 {
        let perms = all_perms(n);
        for _ in 0..80 {
            let k = rng.gen_range(1..n);
            let p = rng.gen_range(0.3..0.8);
            let h = random_family(&mut rng, n, k, p);
            let p = rng.gen_range(0.05..0.3);
            let f = random_family(&mut rng, n, k, p);
            assert_eq!(
                embeds_up_to_iso(&f, &h).unwrap(),
                brute_embeds(&f, &h, &perms),
                "{f} into {h}"
            );
        }
    }
}

#[test]
fn shift_preserves_size_exhaustive_small() {
    for n in 2..=7 {
        for k in 1..=3.min(n) {
            let all: Vec<_> = ksubsets(n, k).unwrap().collect();
            if all.len() > 15 {
                continue;
            }
            for mask in 0u32..1 << all.len() {
                let f = Family::uniform(
                    n,
                    k,
                    all.iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, s)| *s),
                )
                .unwrap();
                for i in 1..=n {
                    for j in i + 1..=n {
                        let s = shift(&f, i, j).unwrap();
                        assert_eq!(s.len(), f.len());
                        assert!(s.iter().all(|x| x.len() == k));
                    }
                }
                let full = full_shift(&f);
                assert!(is_shifted(&full));
                assert_eq!(full.len(), f.len());
            }
        }
    }
}

#[test]
fn shift_preserves_size_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..10_000 {
        let n = rng.gen_range(2..=12);
        let k = rng.gen_range(1..=n.min(4));
        let p = rng.gen_range(0.01..0.2);
        let f = random_family(&mut rng, n, k, p);
        let i = rng.gen_range(1..n);
        let j = rng.gen_range(i + 1..=n);
        let s = shift(&f, i, j).unwrap();
        assert_eq!(s.len(), f.len());
        assert_eq!(s.uniform_k(), f.uniform_k());
    }
}

#[test]
fn shift_keeps_cross_and_t_intersection() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 2000 {
        let n = rng.gen_range(4..=8);
        let t = rng.gen_range(1..=2);
        // grow a t-intersecting F greedily, then take its full partner subset
        let mut pool: Vec<_> = ksubsets(n, 3.min(n - 1)).unwrap().collect();
        pool.shuffle(&mut rng);
        let mut chosen = Vec::new();
        for s in pool {
            if chosen
                .iter()
                .all(|c: &setfam_sets::KSet| c.intersection_size(&s) >= t)
                && rng.gen_bool(0.5)
            {
                chosen.push(s);
            }
        }
        let f = Family::new(n, chosen).unwrap();
        let partner = max_cross_partner(&f, 2).unwrap();
        let g = Family::new(n, partner.iter().filter(|_| rng.gen_bool(0.7)).copied()).unwrap();
        let i = rng.gen_range(1..n);
        let j = rng.gen_range(i + 1..=n);
        let (sf, sg) = (shift(&f, i, j).unwrap(), shift(&g, i, j).unwrap());
        assert!(is_cross_intersecting(&sf, &sg).unwrap());
        assert!(is_t_intersecting(&sf, t));
        checked += 1;
    }
}

#[test]
fn full_shift_fixpoint_size_is_order_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..300 {
        let n = rng.gen_range(3..=7);
        let f = random_family(&mut rng, n, 2, 0.4);
        // random operator order until no operator changes anything
        let mut cur = f.clone();
        let mut pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        loop {
            pairs.shuffle(&mut rng);
            let before = cur.clone();
            for &(i, j) in &pairs {
                cur = shift(&cur, i, j).unwrap();
            }
            if cur == before {
                break;
            }
        }
        assert!(is_shifted(&cur));
        let swept = full_shift(&f);
        assert_eq!(cur.len(), swept.len());
        if is_t_intersecting(&f, 1) {
            assert!(is_t_intersecting(&cur, 1) && is_t_intersecting(&swept, 1));
        }
    }
}

#[test]
fn link_delete_split() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=9);
        let k = rng.gen_range(1..=n);
        let p = rng.gen_range(0.05..0.6);
        let f = random_family(&mut rng, n, k, p);
        let i = rng.gen_range(1..=n);
        assert_eq!(
            f.len(),
            link(&f, i).unwrap().len() + delete(&f, i).unwrap().len()
        );
        if n >= 2 {
            let j = (i % n) + 1;
            let split = double_link(&f, i, j).unwrap().len()
                + link_delete(&f, i, j).unwrap().len()
                + link_delete(&f, j, i).unwrap().len()
                + double_delete(&f, i, j).unwrap().len();
            assert_eq!(split, f.len());
        }
    }
}

#[test]
fn disjointness_and_partner_oracle() {
    let star = Family::filter_ksubsets(7, 3, |s| s.contains(1)).unwrap();
    assert_eq!(disjointness_family(&star, 3).unwrap().len(), 20);

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..200 {
        let n = rng.gen_range(3..=8);
        let k = rng.gen_range(1..n);
        let ell = rng.gen_range(1..n);
        let p = rng.gen_range(0.02..0.5);
        let f = random_family(&mut rng, n, k, p);
        let d = disjointness_family(&f, ell).unwrap();
        let g = max_cross_partner(&f, ell).unwrap();
        assert_eq!(d.len() + g.len(), ksubsets(n, ell).unwrap().count());
        assert!(is_cross_intersecting(&f, &g).unwrap());
        for s in ksubsets(n, ell).unwrap() {
            let can_join = f.iter().all(|x| x.meets(&s));
            assert_eq!(can_join, g.contains(&s));
            assert_eq!(!can_join, d.contains(&s));
        }
    }
}

#[test]
fn complete_family_partner() {
    // all k-sets: partner l-sets must meet every k-set, impossible when n - l >= k
    for n in 4..=8 {
        for k in 1..n {
            let all = Family::filter_ksubsets(n, k, |_| true).unwrap();
            for ell in 1..n {
                let g = max_cross_partner(&all, ell).unwrap();
                let expect = if n - ell >= k {
                    0
                } else {
                    ksubsets(n, ell).unwrap().count()
                };
                assert_eq!(g.len(), expect, "n={n} k={k} l={ell}");
            }
        }
    }
}

#[test]
fn text_round_trip_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let n = rng.gen_range(1..=12);
        let k = rng.gen_range(0..=n);
        let f = random_family(&mut rng, n, k, 0.3);
        let text = write_family(&f);
        let back = parse_family(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(write_family(&back), text);
    }
}
