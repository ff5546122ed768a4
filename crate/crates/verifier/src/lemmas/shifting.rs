//! The shifting lemmas, checked over every (shifted) family on small
//! ground sets.

use setfam_sets::Result;

use super::space::{
    apply_shift, count, for_each_family, is_clique, members, random_clique, random_mask, shifted,
    sweep, Universe,
};
use super::{show, show_pair, LemmaId, LemmaInstance, LemmaParams, LemmaRun, Method, Tally};

fn universe(n: usize, size: usize, nonuniform: bool) -> Result<Universe> {
    if nonuniform {
        Universe::nonempty(n)
    } else {
        Universe::uniform(n, size)
    }
}

pub(super) fn s1(p: &LemmaParams, run: &LemmaRun) -> Result<LemmaInstance> {
    let (n, k, t) = (p.n, p.k, p.t);
    let u = universe(n, k + t, k == 0)?;
    let compat = u.relation(|a, b| a.intersection_size(b) > t);
    let tighter = u.relation(|a, b| a.intersection_size(b) > t + 1);
    let preds = u.preds();
    let no1 = u.select(|s| !s.contains(1));
    let has_n = u.select(|s| s.contains(n));
    let second = k >= 1 && n >= 2 * k + t;
    let mut tally = Tally::new();
    let method = sweep(
        run,
        p,
        &compat,
        Some(&preds),
        u.full(),
        &mut |rng| shifted(&u, random_clique(rng, &u, &compat, u.full())),
        &mut |m| {
            tally.checked += 1;
            if !is_clique(m & no1, &tighter) {
                tally.fail(|| {
                    format!(
                        "F(1-bar) is not {}-intersecting: F = {}",
                        t + 2,
                        show(&u.family(m))
                    )
                });
            }
            // (A - n) and (B - n) share |A & B| - 1 labels
            if second && !is_clique(m & has_n, &tighter) {
                tally.fail(|| {
                    format!(
                        "F(n) is not {}-intersecting: F = {}",
                        t + 1,
                        show(&u.family(m))
                    )
                });
            }
        },
    );
    Ok(tally.finish(LemmaId::S1, *p, method))
}

pub(super) fn s2(p: &LemmaParams, run: &LemmaRun) -> Result<LemmaInstance> {
    let u = Universe::uniform(p.n, p.k + p.t)?;
    let all = u.relation(|_, _| true);
    let preds = u.preds();
    let no_n = u.select(|s| !s.contains(p.n));
    let mut tally = Tally::new();
    let method = sweep(
        run,
        p,
        &all,
        Some(&preds),
        u.full(),
        &mut |rng| shifted(&u, random_mask(rng, &u, u.full())),
        &mut |m| {
            if count(m) < 3 {
                return;
            }
            tally.checked += 1;
            if count(m & no_n) < 3 {
                tally.fail(|| {
                    format!(
                        "|F(n-bar)| = {}: F = {}",
                        count(m & no_n),
                        show(&u.family(m))
                    )
                });
            }
        },
    );
    Ok(tally.finish(LemmaId::S2, *p, method))
}

pub(super) fn s3(p: &LemmaParams, run: &LemmaRun) -> Result<LemmaInstance> {
    let (n, k, t) = (p.n, p.k, p.t);
    let uf = universe(n, k + t, k == 0)?;
    let ug = universe(n, k, k == 0)?;
    let compat = uf.relation(|a, b| a.intersection_size(b) >= t);
    let meets = uf.meets_in(&ug);
    let tf = uf.shift_targets();
    let tg = ug.shift_targets();
    let mut tally = Tally::new();
    let check = |f: u128, g: u128, tally: &mut Tally| {
        tally.checked += 1;
        for (((i, j), a), (_, b)) in tf.iter().zip(&tg) {
            let (f2, g2) = (apply_shift(f, a), apply_shift(g, b));
            let cross = members(f2).all(|x| g2 & !meets[x] == 0);
            if !cross || !is_clique(f2, &compat) {
                let what = if cross {
                    format!("s_{i},{j}(F) is not {t}-intersecting")
                } else {
                    format!("s_{i},{j} breaks cross-intersection")
                };
                tally.fail(|| format!("{what}: {}", show_pair(&uf.family(f), &ug.family(g))));
            }
        }
    };
    // pairs counted up front: sum over F of 2^|P(F)|
    let mut pairs = 0u64;
    for_each_family(&compat, None, uf.full(), run.limit, &mut |f| {
        let pm = uf.partner(&meets, f, &ug);
        pairs = pairs.saturating_add(1u64.checked_shl(count(pm) as u32).unwrap_or(u64::MAX));
    });
    let method = if pairs <= run.limit {
        for_each_family(&compat, None, uf.full(), u64::MAX, &mut |f| {
            let pm = uf.partner(&meets, f, &ug);
            let mut g = pm;
            loop {
                check(f, g, &mut tally);
                if g == 0 {
                    break;
                }
                g = (g - 1) & pm;
            }
        });
        Method::Exhaustive
    } else {
        let mut rng = run.rng(p);
        for _ in 0..run.samples {
            let f = random_clique(&mut rng, &uf, &compat, uf.full());
            let g = random_mask(&mut rng, &ug, uf.partner(&meets, f, &ug));
            check(f, g, &mut tally);
        }
        Method::Sampled
    };
    Ok(tally.finish(LemmaId::S3, *p, method))
}

pub(super) fn s4(p: &LemmaParams, run: &LemmaRun) -> Result<LemmaInstance> {
    let (n, k, t) = (p.n, p.k, p.t);
    let uf = Universe::uniform(n, k + t)?;
    let ug = Universe::uniform(n, k)?;
    let (af, ag) = (uf.relation(|_, _| true), ug.relation(|_, _| true));
    let (pf, pg) = (uf.preds(), ug.preds());
    let meets = uf.meets_in(&ug);
    let meets2: Vec<u128> = uf
        .sets
        .iter()
        .map(|a| ug.select(|b| a.intersection_size(b) >= 2))
        .collect();
    let (fn_, gn) = (uf.select(|s| s.contains(n)), ug.select(|s| s.contains(n)));
    let mut tally = Tally::new();
    let check = |f: u128, g: u128, tally: &mut Tally| {
        tally.checked += 1;
        // (A - n) meets (B - n) iff |A & B| >= 2
        if !members(f & fn_).all(|a| g & gn & !meets2[a] == 0) {
            tally.fail(|| {
                format!(
                    "F(n), G(n) not cross-intersecting: {}",
                    show_pair(&uf.family(f), &ug.family(g))
                )
            });
        }
    };
    let mut budget = run.limit;
    let mut done = true;
    for_each_family(&af, Some(&pf), uf.full(), u64::MAX, &mut |f| {
        if !done {
            return;
        }
        let pm = uf.partner(&meets, f, &ug);
        let (seen, fin) =
            for_each_family(&ag, Some(&pg), pm, budget, &mut |g| check(f, g, &mut tally));
        budget -= seen;
        done &= fin && budget > 0;
    });
    let method = if done {
        Method::Exhaustive
    } else {
        let mut rng = run.rng(p);
        for _ in 0..run.samples {
            let f = shifted(&uf, random_mask(&mut rng, &uf, uf.full()));
            let g = shifted(&ug, random_mask(&mut rng, &ug, uf.partner(&meets, f, &ug)));
            check(f, g, &mut tally);
        }
        Method::Sampled
    };
    Ok(tally.finish(LemmaId::S4, *p, method))
}
