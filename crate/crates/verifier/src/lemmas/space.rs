//! Candidate universes of at most 128 sets, with families as bit masks.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use setfam_family::{full_shift, Family};
use setfam_sets::{ksubsets, Error, KSet, Result};

use super::{LemmaParams, LemmaRun, Method};

pub(crate) const MAX_UNIVERSE: usize = 128;

pub(crate) struct Universe {
    pub n: usize,
    pub sets: Vec<KSet>,
    index: HashMap<u64, usize>,
}

impl Universe {
    pub fn from_sets(n: usize, sets: Vec<KSet>) -> Result<Self> {
        if sets.len() > MAX_UNIVERSE {
            return Err(Error::resource(format!(
                "{} candidate sets exceed {MAX_UNIVERSE}",
                sets.len()
            )));
        }
        let index = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.bits(), i))
            .collect();
        Ok(Universe { n, sets, index })
    }

    /// `C([n], k)` in lex order.
    pub fn uniform(n: usize, k: usize) -> Result<Self> {
        Universe::from_sets(n, ksubsets(n, k)?.collect())
    }

    /// Non-empty subsets of `[n]` by size, then lex.
    pub fn nonempty(n: usize) -> Result<Self> {
        let mut sets = Vec::new();
        for k in 1..=n {
            sets.extend(ksubsets(n, k)?);
        }
        Universe::from_sets(n, sets)
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn full(&self) -> u128 {
        if self.len() == 128 {
            !0
        } else {
            (1u128 << self.len()) - 1
        }
    }

    pub fn family(&self, mask: u128) -> Family {
        Family::new(self.n, members(mask).map(|i| self.sets[i]))
            .expect("universe sets share the ground set")
    }

    pub fn mask_of(&self, f: &Family) -> u128 {
        f.iter()
            .map(|s| 1u128 << self.index[&s.bits()])
            .fold(0, |a, b| a | b)
    }

    /// `out[i]`: members `j != i` with `rel(i, j)`.
    pub fn relation(&self, rel: impl Fn(&KSet, &KSet) -> bool) -> Vec<u128> {
        self.sets
            .iter()
            .enumerate()
            .map(|(i, a)| {
                self.sets
                    .iter()
                    .enumerate()
                    .filter(|&(j, b)| j != i && rel(a, b))
                    .fold(0u128, |m, (j, _)| m | 1 << j)
            })
            .collect()
    }

    /// `out[i]`: members of `other` meeting set `i`.
    pub fn meets_in(&self, other: &Universe) -> Vec<u128> {
        self.sets
            .iter()
            .map(|a| {
                other
                    .sets
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| a.meets(b))
                    .fold(0u128, |m, (j, _)| m | 1 << j)
            })
            .collect()
    }

    /// Immediate shift predecessors: replace some `x` by `x-1 ∉ A`.
    pub fn preds(&self) -> Vec<u128> {
        self.sets
            .iter()
            .map(|a| {
                a.labels()
                    .into_iter()
                    .filter(|&x| x > 1 && !a.contains(x - 1))
                    .map(|x| 1u128 << self.index[&a.without(x).with(x - 1).bits()])
                    .fold(0, |m, b| m | b)
            })
            .collect()
    }

    /// Members of `other` meeting every member of `mask`.
    pub fn partner(&self, meets: &[u128], mask: u128, other: &Universe) -> u128 {
        members(mask).fold(other.full(), |acc, i| acc & meets[i])
    }

    /// Per pair `i < j`, where `s_{i,j}` sends each member (if it moves).
    pub fn shift_targets(&self) -> Vec<((usize, usize), Vec<Option<usize>>)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                let t = self
                    .sets
                    .iter()
                    .map(|s| {
                        (s.contains(j) && !s.contains(i))
                            .then(|| self.index[&s.without(j).with(i).bits()])
                    })
                    .collect();
                out.push(((i, j), t));
            }
        }
        out
    }

    /// Bit mask of members satisfying `pred`.
    pub fn select(&self, pred: impl Fn(&KSet) -> bool) -> u128 {
        self.sets
            .iter()
            .enumerate()
            .filter(|(_, s)| pred(s))
            .fold(0, |m, (j, _)| m | 1 << j)
    }
}

pub(crate) fn members(mask: u128) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i)
    })
}

pub(crate) fn count(mask: u128) -> usize {
    mask.count_ones() as usize
}

/// `s_{i,j}` on a mask, given that pair's targets.
pub(crate) fn apply_shift(mask: u128, targets: &[Option<usize>]) -> u128 {
    let mut out = mask;
    for i in members(mask) {
        if let Some(j) = targets[i] {
            if mask >> j & 1 == 0 {
                out = (out & !(1u128 << i)) | 1u128 << j;
            }
        }
    }
    out
}

/// Whether the members of `mask` are pairwise `compat`.
pub(crate) fn is_clique(mask: u128, compat: &[u128]) -> bool {
    members(mask).all(|i| mask & !compat[i] & !(1u128 << i) == 0)
}

/// Visits every family inside `allowed` whose members are pairwise
/// `compat` and, with `preds`, closed under immediate shift predecessors.
/// Stops after `cap` visits; returns the number visited and whether the
/// enumeration finished.
pub(crate) fn for_each_family(
    compat: &[u128],
    preds: Option<&[u128]>,
    allowed: u128,
    cap: u64,
    visit: &mut dyn FnMut(u128),
) -> (u64, bool) {
    fn rec(
        cur: u128,
        avail: u128,
        compat: &[u128],
        preds: Option<&[u128]>,
        cap: u64,
        seen: &mut u64,
        visit: &mut dyn FnMut(u128),
    ) -> bool {
        if *seen >= cap {
            return false;
        }
        *seen += 1;
        visit(cur);
        for i in members(avail) {
            if preds.is_some_and(|p| p[i] & !cur != 0) {
                continue;
            }
            let above = if i == 127 { 0 } else { !0u128 << (i + 1) };
            if !rec(
                cur | 1 << i,
                avail & compat[i] & above,
                compat,
                preds,
                cap,
                seen,
                visit,
            ) {
                return false;
            }
        }
        true
    }
    let mut seen = 0;
    let done = rec(0, allowed, compat, preds, cap, &mut seen, visit);
    (seen, done)
}

/// A random sub-mask of `allowed`: each member kept with a random density,
/// or with high density inside a random star.
pub(crate) fn random_mask(rng: &mut impl Rng, u: &Universe, allowed: u128) -> u128 {
    let p: f64 = rng.gen();
    let star = if rng.gen_bool(0.5) {
        let x = rng.gen_range(1..=u.n);
        u.select(|s| s.contains(x))
    } else {
        u.full()
    };
    let mut m = 0u128;
    for i in members(allowed) {
        let keep = if star >> i & 1 == 1 {
            p.max(0.7)
        } else {
            p * 0.3
        };
        if rng.gen_bool(keep) {
            m |= 1 << i;
        }
    }
    m
}

/// A random family inside `allowed` with pairwise `compat` members.
pub(crate) fn random_clique(
    rng: &mut impl Rng,
    u: &Universe,
    compat: &[u128],
    allowed: u128,
) -> u128 {
    let mut order: Vec<usize> = members(random_mask(rng, u, allowed)).collect();
    order.shuffle(rng);
    let mut m = 0u128;
    for i in order {
        if m & !compat[i] == 0 {
            m |= 1 << i;
        }
    }
    m
}

/// Fully shifts a mask through the library operator.
pub(crate) fn shifted(u: &Universe, mask: u128) -> u128 {
    u.mask_of(&full_shift(&u.family(mask)))
}

/// Runs `check` over every admissible family; past `run.limit` of them,
/// adds `run.samples` random draws instead of finishing.
pub(crate) fn sweep(
    run: &LemmaRun,
    p: &LemmaParams,
    compat: &[u128],
    preds: Option<&[u128]>,
    allowed: u128,
    sample: &mut dyn FnMut(&mut ChaCha8Rng) -> u128,
    check: &mut dyn FnMut(u128),
) -> Method {
    if for_each_family(compat, preds, allowed, run.limit, check).1 {
        return Method::Exhaustive;
    }
    let mut rng = run.rng(p);
    for _ in 0..run.samples {
        let m = sample(&mut rng);
        check(m);
    }
    Method::Sampled
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use setfam_family::is_shifted;

    #[test]
    fn shifted_enumeration_matches_filter() {
        let u = Universe::uniform(5, 2).unwrap();
        let all = u.relation(|_, _| true);
        let mut by_filter = 0;
        let (total, done) = for_each_family(&all, None, u.full(), u64::MAX, &mut |m| {
            if is_shifted(&u.family(m)) {
                by_filter += 1;
            }
        });
        assert!(done);
        assert_eq!(total, 1 << 10);
        let preds = u.preds();
        let (shifted, _) = for_each_family(&all, Some(&preds), u.full(), u64::MAX, &mut |m| {
            assert!(is_shifted(&u.family(m)));
        });
        assert_eq!(shifted, by_filter);
    }

    #[test]
    fn mask_shift_matches_library() {
        let u = Universe::uniform(6, 3).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for ((i, j), t) in u.shift_targets() {
            for _ in 0..20 {
                let m = random_mask(&mut rng, &u, u.full());
                let want = setfam_family::shift(&u.family(m), i, j).unwrap();
                assert_eq!(u.family(apply_shift(m, &t)), want);
            }
        }
    }

    #[test]
    fn cap_stops_early() {
        let u = Universe::uniform(5, 2).unwrap();
        let all = u.relation(|_, _| true);
        assert_eq!(
            for_each_family(&all, None, u.full(), 100, &mut |_| {}),
            (100, false)
        );
    }
}
