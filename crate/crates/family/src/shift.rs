use std::collections::HashSet;

use setfam_sets::{Error, KSet, Result};

use crate::Family;

fn check_pair(f: &Family, i: usize, j: usize) -> Result<()> {
    if i == 0 || j > f.ground_n() || i >= j {
        return Err(Error::param(format!(
            "shift needs 1 <= i < j <= {}, got i={i}, j={j}",
            f.ground_n()
        )));
    }
    Ok(())
}

fn apply(f: &Family, i: usize, j: usize) -> Option<Family> {
    let (bi, bj) = (1u64 << (i - 1), 1u64 << (j - 1));
    let present: HashSet<u64> = f.iter().map(|s| s.bits()).collect();
    let mut changed = false;
    let out: Vec<KSet> = f
        .iter()
        .map(|s| {
            let b = s.bits();
            if b & bj != 0 && b & bi == 0 {
                let moved = (b & !bj) | bi;
                if !present.contains(&moved) {
                    changed = true;
                    return KSet::from_bits_unchecked(f.ground_n(), moved);
                }
            }
            *s
        })
        .collect();
    changed.then(|| {
        let mut out = out;
        out.sort_unstable();
        Family::from_sorted_unchecked(f.ground_n(), out, f.uniform_k())
    })
}

/// The shifting operator `s_{i,j}`: replace `j` by `i` wherever the
/// result is not already a member.
pub fn shift(f: &Family, i: usize, j: usize) -> Result<Family> {
    check_pair(f, i, j)?;
    Ok(apply(f, i, j).unwrap_or_else(|| f.clone()))
}

/// Sweeps all `s_{i,j}` with `i < j` in lex order of `(i, j)` until a
/// whole sweep changes nothing.
pub fn full_shift(f: &Family) -> Family {
    let n = f.ground_n();
    let mut cur = f.clone();
    loop {
        let mut changed = false;
        for i in 1..=n {
            for j in i + 1..=n {
                if let Some(next) = apply(&cur, i, j) {
                    cur = next;
                    changed = true;
                }
            }
        }
        if !changed {
            return cur;
        }
    }
}

pub fn is_shifted(f: &Family) -> bool {
    let present: HashSet<u64> = f.iter().map(|s| s.bits()).collect();
    f.iter().all(|s| {
        let b = s.bits();
        let mut rest = b;
        while rest != 0 {
            let j = rest.trailing_zeros();
            rest &= rest - 1;
            for i in 0..j {
                if b >> i & 1 == 0 && !present.contains(&((b & !(1u64 << j)) | 1u64 << i)) {
                    return false;
                }
            }
        }
        true
    })
}
