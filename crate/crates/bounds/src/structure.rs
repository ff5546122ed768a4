//! "Isomorphic to a subfamily of" tests against the named families.
//! The direct tests search only over the free parameters of the target
//! family and agree with `embeds_up_to_iso`; they fall back to it where
//! no shortcut applies.

use setfam_constructions::{appendix_family, hm_family, j_family_default, AppendixId};
use setfam_family::{embeds_up_to_iso_with_limit, is_ekr, is_t_intersecting, Family};
use setfam_sets::{ksubsets, KSet, Result, MAX_N};

fn embeds(f: &Family, h: &Family) -> Result<bool> {
    embeds_up_to_iso_with_limit(f, h, MAX_N)
}

/// `Some(k)` for a non-empty k-uniform family, `None` if empty.
fn arity(f: &Family) -> Option<Option<usize>> {
    if f.is_empty() {
        None
    } else {
        Some(f.uniform_k())
    }
}

fn missing(f: &Family, x: usize) -> Vec<KSet> {
    f.iter().filter(|s| !s.contains(x)).copied().collect()
}

/// Isomorphic to a subfamily of `HM(n,k)`.
pub fn is_hm(f: &Family) -> Result<bool> {
    let k = match arity(f) {
        None => return Ok(true),
        Some(None) => return Ok(false),
        Some(Some(k)) => k,
    };
    let n = f.ground_n();
    if k == 0 || n < k + 1 || !is_t_intersecting(f, 1) {
        return Ok(false);
    }
    if !is_ekr(f) {
        // the member missing x0 plays the role of [2, k+1]
        return Ok((1..=n).any(|x| missing(f, x).len() == 1));
    }
    embeds(f, &hm_family(n, k)?)
}

/// Isomorphic to a subfamily of `T(n,3)`.
pub fn is_sub_t3(f: &Family) -> Result<bool> {
    match arity(f) {
        None => return Ok(true),
        Some(Some(3)) => {}
        Some(_) => return Ok(false),
    }
    let n = f.ground_n();
    Ok(ksubsets(n, 3)?.any(|t0| f.iter().all(|s| s.intersection_size(&t0) >= 2)))
}

/// Isomorphic to a subfamily of `G_i(n,k)` with `k = f`'s uniformity.
pub fn is_sub_g(f: &Family, i: usize) -> Result<bool> {
    let k = match arity(f) {
        None => return Ok(true),
        Some(None) => return Ok(false),
        Some(Some(k)) => k,
    };
    let n = f.ground_n();
    if i < 2 || i > k || n < i + 1 {
        return Ok(false);
    }
    for e in ksubsets(n, i)? {
        for x0 in (1..=n).filter(|&x| !e.contains(x)) {
            if f.iter()
                .all(|s| e.is_subset(s) || (s.contains(x0) && s.meets(&e)))
            {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn j2_fits(f: &Family, e: KSet, x0: usize, j1: usize, j2: usize) -> bool {
    let (l1, l2) = (e.with(j1), e.with(j2));
    f.iter()
        .all(|s| *s == l1 || *s == l2 || (s.contains(x0) && s.meets(&l1) && s.meets(&l2)))
}

/// Isomorphic to a subfamily of `J_2(n,k)` with `k = f`'s uniformity.
pub fn is_sub_j2(f: &Family) -> Result<bool> {
    let k = match arity(f) {
        None => return Ok(true),
        Some(None) => return Ok(false),
        Some(Some(k)) => k,
    };
    let n = f.ground_n();
    if k < 3 || n < k + 2 {
        return Ok(false);
    }
    if is_ekr(f) {
        return embeds(f, &j_family_default(n, k, 2)?);
    }
    for x0 in 1..=n {
        let m = missing(f, x0);
        match m.len() {
            1 => {
                let l1 = m[0];
                for y in l1.labels() {
                    let e = l1.without(y);
                    for j2 in 1..=n {
                        if j2 != x0 && !l1.contains(j2) && j2_fits(f, e, x0, y, j2) {
                            return Ok(true);
                        }
                    }
                }
            }
            2 => {
                let e = m[0].intersection(&m[1]);
                if e.len() == k - 1 {
                    let j1 = m[0].difference(&e).min_label().unwrap();
                    let j2 = m[1].difference(&e).min_label().unwrap();
                    if j2_fits(f, e, x0, j1, j2) {
                        return Ok(true);
                    }
                }
            }
            _ => {}
        }
    }
    Ok(false)
}

/// Isomorphic to a subfamily of the appendix family `id` on `[n]`.
pub fn is_sub_appendix(f: &Family, id: AppendixId) -> Result<bool> {
    if f.is_empty() {
        return Ok(true);
    }
    embeds(f, &appendix_family(id, f.ground_n(), None)?)
}
