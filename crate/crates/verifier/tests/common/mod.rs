//! Slow reference implementations over plain label bit masks.
#![allow(dead_code)]

use setfam_family::Family;

/// All `k`-subsets of `[n]` as label masks, in lex order.
pub fn ksets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    fn rec(n: usize, k: usize, from: usize, cur: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for x in from..=n {
            if n - x + 1 >= k {
                rec(n, k - 1, x + 1, cur | 1 << (x - 1), out);
            }
        }
    }
    rec(n, k, 1, 0, &mut out);
    out
}

fn ones(m: u64) -> usize {
    m.count_ones() as usize
}

/// Largest `|F| + |G|` over F in C([n], k+t) with pairwise intersections
/// of at least `need` (0 for no condition), `|F| >= min_f`, `G` the
/// k-sets meeting every member, and `|G| >= |F|` when asked. Plain DFS
/// over every admissible F; `None` past `budget` families.
pub fn cross_max(
    n: usize,
    k: usize,
    t: usize,
    need: usize,
    min_f: usize,
    g_ge_f: bool,
    budget: u64,
) -> Option<u64> {
    let a = ksets(n, k + t);
    let b = ksets(n, k);
    let meets: Vec<Vec<bool>> = a
        .iter()
        .map(|&x| b.iter().map(|&y| x & y != 0).collect())
        .collect();
    struct St<'a> {
        a: &'a [u64],
        meets: &'a [Vec<bool>],
        need: usize,
        min_f: usize,
        g_ge_f: bool,
        left: u64,
        best: Option<u64>,
    }
    fn rec(s: &mut St, chosen: &mut Vec<usize>, g: &[bool], from: usize) -> bool {
        if s.left == 0 {
            return false;
        }
        s.left -= 1;
        let nf = chosen.len();
        let ng = g.iter().filter(|&&x| x).count();
        if nf >= s.min_f && (!s.g_ge_f || ng >= nf) {
            let v = (nf + ng) as u64;
            s.best = Some(s.best.map_or(v, |b| b.max(v)));
        }
        for i in from..s.a.len() {
            if chosen.iter().any(|&j| ones(s.a[i] & s.a[j]) < s.need) {
                continue;
            }
            let g2: Vec<bool> = g.iter().zip(&s.meets[i]).map(|(&x, &y)| x && y).collect();
            chosen.push(i);
            let ok = rec(s, chosen, &g2, i + 1);
            chosen.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    let mut s = St {
        a: &a,
        meets: &meets,
        need,
        min_f,
        g_ge_f,
        left: budget,
        best: None,
    };
    let full = vec![true; b.len()];
    rec(&mut s, &mut Vec::new(), &full, 0)
        .then_some(s.best)
        .flatten()
}

/// Largest intersecting, non-star subfamily of C([n], k), by trying all.
pub fn non_star_max(n: usize, k: usize) -> u64 {
    let a = ksets(n, k);
    assert!(a.len() <= 20);
    let mut best = 0;
    for mask in 0u64..1 << a.len() {
        let f: Vec<u64> = (0..a.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| a[i])
            .collect();
        let inter = f.iter().all(|&x| f.iter().all(|&y| x & y != 0));
        let common = f.iter().fold(!0u64, |c, &x| c & x);
        if inter && !f.is_empty() && common == 0 {
            best = best.max(f.len() as u64);
        }
    }
    best
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

fn relabel(m: u64, perm: &[usize]) -> u64 {
    (0..perm.len())
        .filter(|&i| m >> i & 1 == 1)
        .fold(0, |acc, i| acc | 1 << perm[i])
}

fn masks(f: &Family) -> Vec<u64> {
    f.iter().map(|s| s.bits()).collect()
}

/// Canonical key of a pair under one simultaneous relabelling, by trying
/// every permutation of `[n]`.
pub fn brute_canonical(n: usize, f: &Family, g: Option<&Family>) -> (Vec<u64>, Vec<u64>) {
    assert!(n <= 8);
    let (fm, gm) = (masks(f), g.map(masks).unwrap_or_default());
    permutations(n)
        .iter()
        .map(|p| {
            let mut a: Vec<u64> = fm.iter().map(|&m| relabel(m, p)).collect();
            let mut b: Vec<u64> = gm.iter().map(|&m| relabel(m, p)).collect();
            a.sort_unstable();
            b.sort_unstable();
            (a, b)
        })
        .min()
        .unwrap()
}

/// Whether `f` maps into `h` under some permutation of `[n]`.
pub fn brute_embeds(n: usize, f: &Family, h: &Family) -> bool {
    let hm: std::collections::HashSet<u64> = masks(h).into_iter().collect();
    let fm = masks(f);
    permutations(n)
        .iter()
        .any(|p| fm.iter().all(|&m| hm.contains(&relabel(m, p))))
}

/// Shiftedness straight from the definition.
pub fn brute_shifted(n: usize, f: &[u64]) -> bool {
    f.iter().all(|&a| {
        (1..=n).all(|j| {
            (1..j).all(|i| {
                let (bi, bj) = (1u64 << (i - 1), 1u64 << (j - 1));
                a & bj == 0 || a & bi != 0 || f.contains(&((a & !bj) | bi))
            })
        })
    })
}
