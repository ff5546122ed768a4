//! Canonical labeling by colour refinement plus individualization, with
//! twin labels (whose transposition is an automorphism) explored once.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use setfam_sets::{Error, KSet, Result};

use crate::family::same_ground;
use crate::Family;

pub const DEFAULT_ISO_LIMIT: usize = 10;

/// A family in canonical labeling with the witnessing permutation
/// (`perm[old - 1] = new`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub family: Family,
    pub perm: Vec<usize>,
}

/// A pair canonicalized under one simultaneous permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalPair {
    pub f: Family,
    pub g: Family,
    pub perm: Vec<usize>,
}

fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::resource(format!(
            "ground size {n} exceeds isomorphism limit {limit}"
        )));
    }
    Ok(())
}

fn hash_of<T: Hash>(v: &T) -> u64 {
    let mut h = DefaultHasher::new();
    v.hash(&mut h);
    h.finish()
}

struct Structure<'a> {
    n: usize,
    fams: &'a [&'a Family],
    // (tag, bits) for every member of every family
    tagged: Vec<(usize, u64)>,
    twin_rep: Vec<usize>,
}

impl<'a> Structure<'a> {
    fn new(fams: &'a [&'a Family]) -> Self {
        let n = fams[0].ground_n();
        let tagged: Vec<(usize, u64)> = fams
            .iter()
            .enumerate()
            .flat_map(|(t, f)| f.iter().map(move |s| (t, s.bits())))
            .collect();
        let mut s = Structure {
            n,
            fams,
            tagged,
            twin_rep: (0..n).collect(),
        };
        s.twin_rep = s.twins();
        s
    }

    fn twins(&self) -> Vec<usize> {
        let present: Vec<HashSet<u64>> = self
            .fams
            .iter()
            .map(|f| f.iter().map(|s| s.bits()).collect())
            .collect();
        let mut rep: Vec<usize> = (0..self.n).collect();
        for x in 0..self.n {
            if rep[x] != x {
                continue;
            }
            for y in x + 1..self.n {
                if rep[y] != y {
                    continue;
                }
                let swap_ok = self.tagged.iter().all(|&(t, b)| {
                    let bx = b >> x & 1;
                    let by = b >> y & 1;
                    if bx == by {
                        return true;
                    }
                    let swapped = b ^ (1u64 << x) ^ (1u64 << y);
                    present[t].contains(&swapped)
                });
                if swap_ok {
                    rep[y] = x;
                }
            }
        }
        rep
    }

    /// Colour refinement to a stable ordered partition.
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let mut distinct = count_distinct(&colors);
        loop {
            let set_keys: Vec<u64> = self
                .tagged
                .iter()
                .map(|&(t, b)| {
                    let mut cs: Vec<u32> = bits_iter(b).map(|x| colors[x]).collect();
                    cs.sort_unstable();
                    hash_of(&(t, cs))
                })
                .collect();
            let mut per_label: Vec<Vec<u64>> = vec![Vec::new(); self.n];
            for (i, &(_, b)) in self.tagged.iter().enumerate() {
                for x in bits_iter(b) {
                    per_label[x].push(set_keys[i]);
                }
            }
            let sigs: Vec<(u32, u64)> = per_label
                .iter_mut()
                .enumerate()
                .map(|(x, keys)| {
                    keys.sort_unstable();
                    (colors[x], hash_of(keys))
                })
                .collect();
            let mut order: Vec<(u32, u64)> = sigs.clone();
            order.sort_unstable();
            order.dedup();
            let next: Vec<u32> = sigs
                .iter()
                .map(|s| order.binary_search(s).unwrap() as u32)
                .collect();
            let d = order.len();
            colors = next;
            if d == distinct {
                return colors;
            }
            distinct = d;
        }
    }

    fn image(&self, perm: &[usize]) -> Vec<Family> {
        self.fams.iter().map(|f| f.permuted(perm)).collect()
    }

    fn search(&self, colors: Vec<u32>, best: &mut Option<(Vec<Family>, Vec<usize>)>) {
        let colors = self.refine(colors);
        let mut cell_of: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (x, &c) in colors.iter().enumerate() {
            cell_of[c as usize].push(x);
        }
        let Some(target) = cell_of.iter().position(|c| c.len() > 1) else {
            let perm: Vec<usize> = colors.iter().map(|&c| c as usize + 1).collect();
            let img = self.image(&perm);
            if best.as_ref().is_none_or(|(b, _)| img < *b) {
                *best = Some((img, perm));
            }
            return;
        };
        let cell = &cell_of[target];
        let mut tried_reps = Vec::new();
        for &v in cell {
            let rep = self.twin_rep[v];
            if tried_reps.contains(&rep) {
                continue;
            }
            tried_reps.push(rep);
            let split: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(y, &c)| 2 * c + u32::from(c as usize == target && y != v))
                .collect();
            self.search(split, best);
        }
    }

    fn canonicalize(&self) -> (Vec<Family>, Vec<usize>) {
        let mut best = None;
        self.search(vec![0; self.n], &mut best);
        best.expect("search visits at least one leaf")
    }
}

fn count_distinct(c: &[u32]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn bits_iter(mut b: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (b != 0).then(|| {
            let x = b.trailing_zeros() as usize;
            b &= b - 1;
            x
        })
    })
}

pub fn canonical_form(f: &Family) -> Result<CanonicalForm> {
    canonical_form_with_limit(f, DEFAULT_ISO_LIMIT)
}

pub fn canonical_form_with_limit(f: &Family, limit: usize) -> Result<CanonicalForm> {
    check_limit(f.ground_n(), limit)?;
    let fams = [f];
    let (mut img, perm) = Structure::new(&fams).canonicalize();
    Ok(CanonicalForm {
        family: img.remove(0),
        perm,
    })
}

pub fn canonical_pair(f: &Family, g: &Family) -> Result<CanonicalPair> {
    canonical_pair_with_limit(f, g, DEFAULT_ISO_LIMIT)
}

pub fn canonical_pair_with_limit(f: &Family, g: &Family, limit: usize) -> Result<CanonicalPair> {
    same_ground(f, g)?;
    check_limit(f.ground_n(), limit)?;
    let fams = [f, g];
    let (mut img, perm) = Structure::new(&fams).canonicalize();
    let g = img.pop().unwrap();
    let f = img.pop().unwrap();
    Ok(CanonicalPair { f, g, perm })
}

pub fn is_isomorphic(f: &Family, g: &Family) -> Result<bool> {
    same_ground(f, g)?;
    if f.len() != g.len() {
        return Ok(false);
    }
    Ok(canonical_form(f)?.family == canonical_form(g)?.family)
}

/// Whether one permutation maps `f1 -> f2` and `g1 -> g2` together.
pub fn is_pair_isomorphic(f1: &Family, g1: &Family, f2: &Family, g2: &Family) -> Result<bool> {
    same_ground(f1, f2)?;
    if f1.len() != f2.len() || g1.len() != g2.len() {
        return Ok(false);
    }
    let a = canonical_pair(f1, g1)?;
    let b = canonical_pair(f2, g2)?;
    Ok(a.f == b.f && a.g == b.g)
}

pub fn embeds_up_to_iso(f: &Family, h: &Family) -> Result<bool> {
    embeds_up_to_iso_with_limit(f, h, DEFAULT_ISO_LIMIT)
}

/// Whether some permutation of `[n]` maps every member of `f` into `h`.
pub fn embeds_up_to_iso_with_limit(f: &Family, h: &Family, limit: usize) -> Result<bool> {
    same_ground(f, h)?;
    check_limit(f.ground_n(), limit)?;
    if f.len() > h.len() {
        return Ok(false);
    }
    Ok(Embedder::new(f, h).run())
}

struct Embedder {
    n: usize,
    f_sets: Vec<u64>,
    h_sets: Vec<u64>,
    h_present: HashSet<u64>,
    order: Vec<usize>,
    deg_f: Vec<usize>,
    deg_h: Vec<usize>,
}

impl Embedder {
    fn new(f: &Family, h: &Family) -> Self {
        let n = f.ground_n();
        let f_sets: Vec<u64> = f.iter().map(KSet::bits).collect();
        let h_sets: Vec<u64> = h.iter().map(KSet::bits).collect();
        let deg = |sets: &[u64], x: usize| sets.iter().filter(|&&b| b >> x & 1 == 1).count();
        let deg_f: Vec<usize> = (0..n).map(|x| deg(&f_sets, x)).collect();
        let deg_h: Vec<usize> = (0..n).map(|x| deg(&h_sets, x)).collect();
        let mut order: Vec<usize> = (0..n).filter(|&x| deg_f[x] > 0).collect();
        order.sort_by_key(|&x| (std::cmp::Reverse(deg_f[x]), x));
        let h_present = h_sets.iter().copied().collect();
        Embedder {
            n,
            f_sets,
            h_sets,
            h_present,
            order,
            deg_f,
            deg_h,
        }
    }

    fn run(&self) -> bool {
        let sizes_ok = self.f_sets.iter().all(|&b| {
            self.h_sets
                .iter()
                .any(|&c| c.count_ones() == b.count_ones())
        });
        if !sizes_ok {
            return false;
        }
        if self.f_sets.contains(&0) && !self.h_present.contains(&0) {
            return false;
        }
        let mut map = vec![usize::MAX; self.n];
        self.extend(0, &mut map, 0)
    }

    fn partial_ok(&self, map: &[usize], assigned: u64, x: usize) -> bool {
        for &s in &self.f_sets {
            if s >> x & 1 == 0 {
                continue;
            }
            let known = s & assigned;
            let img = bits_iter(known).fold(0u64, |acc, y| acc | 1u64 << map[y]);
            if known == s {
                if !self.h_present.contains(&img) {
                    return false;
                }
            } else {
                let size = s.count_ones();
                if !self
                    .h_sets
                    .iter()
                    .any(|&c| c.count_ones() == size && img & !c == 0)
                {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&self, depth: usize, map: &mut Vec<usize>, used: u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        let assigned: u64 = self.order[..=depth].iter().fold(0, |a, &y| a | 1u64 << y);
        for target in 0..self.n {
            if used >> target & 1 == 1 || self.deg_h[target] < self.deg_f[x] {
                continue;
            }
            map[x] = target;
            if self.partial_ok(map, assigned, x)
                && self.extend(depth + 1, map, used | 1u64 << target)
            {
                return true;
            }
        }
        map[x] = usize::MAX;
        false
    }
}
