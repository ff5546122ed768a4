//! Cross-intersecting pair inequalities. For each `F` only the partner
//! `P(F)` (the sets meeting every member of `F`) or the largest admissible
//! `G` inside it needs checking: every lemma here is monotone in `G`.

use rand::Rng;
use setfam_bounds::{bound_i64, spec, Params, Relation, TheoremId};
use setfam_family::Family;
use setfam_sets::{ksubsets, KSet, Result};

use super::space::{count, members, random_clique, random_mask, shifted, sweep, Universe};
use super::{
    inventory, show_pair, Inventory, LemmaId, LemmaInstance, LemmaParams, LemmaRun, Method, Tally,
};
use crate::problem::{Mode, SearchProblem, Verdict};
use crate::search::{run_search_with_configs, Config};

fn bound_of(id: TheoremId, p: &Params) -> Result<u64> {
    let b = bound_i64(id, p)
        .ok_or_else(|| setfam_sets::Error::domain(format!("{id} bound out of range")))?;
    Ok(b as u64)
}

/// Resolves a candidate counterexample through the registry.
fn confirm(
    id: TheoremId,
    p: &Params,
    f: &Family,
    g: &Family,
    tally: &mut Tally,
) -> Result<Relation> {
    let a = spec(id).assess(p, f, Some(g))?;
    if a.failed.is_empty() && a.relation == Relation::Above {
        tally.fail(|| format!("|F|+|G| = {} > {}: {}", a.value, a.bound, show_pair(f, g)));
    }
    Ok(if a.failed.is_empty() {
        a.relation
    } else {
        Relation::Below
    })
}

fn first_err(slot: &mut Option<setfam_sets::Error>, r: Result<()>) {
    if let Err(e) = r {
        slot.get_or_insert(e);
    }
}

pub(super) fn ln(p: &LemmaParams, run: &LemmaRun) -> Result<LemmaInstance> {
    let (n, k, l) = (p.n, p.k, p.l.unwrap_or(0));
    let uf = Universe::uniform(n, k)?;
    let ug = Universe::uniform(n, l)?;
    let meets = uf.meets_in(&ug);
    // largest m2 with L(n,l,m2) cross-intersecting L(n,k,m1); members are lex-ordered
    let lex_ok: Vec<usize> = (0..=uf.len())
        .map(|m1| {
            let prefix = if m1 == 128 { !0 } else { (1u128 << m1) - 1 };
            (uf.partner(&meets, prefix, &ug).trailing_ones() as usize).min(ug.len())
        })
        .collect();
    let all = uf.relation(|_, _| true);
    let mut tally = Tally::new();
    let method = sweep(
        run,
        p,
        &all,
        None,
        uf.full(),
        &mut |rng| random_mask(rng, &uf, uf.full()),
        &mut |f| {
            tally.checked += 1;
            let pm = uf.partner(&meets, f, &ug);
            if count(pm) > lex_ok[count(f)] {
                tally.fail(|| {
                    format!(
                        "L(n,{k},{}) and L(n,{l},{}) are not cross-intersecting: {}",
                        count(f),
                        count(pm),
                        show_pair(&uf.family(f), &ug.family(pm))
                    )
                });
            }
        },
    );
    Ok(tally.finish(LemmaId::Ln, *p, method))
}

pub(super) fn f24(p: &LemmaParams, run: &LemmaRun) -> Result<LemmaInstance> {
    let id = TheoremId::F24;
    let bp = Params::new(p.n, p.k, 0);
    let bound = bound_of(id, &bp)?;
    let u = Universe::uniform(p.n, p.k)?;
    let meets = u.meets_in(&u);
    let common = |m: u128| members(m).fold(!0u64, |acc, i| acc & u.sets[i].bits());
    let trivial = |m: u128| m == 0 || common(m) != 0;
    let all = u.relation(|_, _| true);
    let regime = (spec(id).equality_regime)(&bp);
    let mut tally = Tally::new();
    let mut configs = Vec::new();
    let mut err = None;
    let method = sweep(
        run,
        p,
        &all,
        None,
        u.full(),
        &mut |rng| random_mask(rng, &u, u.full()),
        &mut |f| {
            if trivial(f) {
                return;
            }
            let g = u.partner(&meets, f, &u);
            if trivial(g) {
                return;
            }
            tally.checked += 1;
            let v = (count(f) + count(g)) as u64;
            tally.value(v);
            if v >= bound {
                let (ff, gf) = (u.family(f), u.family(g));
                match confirm(id, &bp, &ff, &gf, &mut tally) {
                    Ok(Relation::Attains) if regime => configs.push(Config { f: ff, g: Some(gf) }),
                    Ok(_) => {}
                    Err(e) => first_err(&mut err, Err(e)),
                }
            }
        },
    );
    if let Some(e) = err {
        return Err(e);
    }
    let mut out = tally.finish(LemmaId::F24, *p, method);
    out.bound = Some(bound);
    if regime && method == Method::Exhaustive {
        out.inventory = Some(inventory(id, &bp, &configs)?);
    }
    Ok(out)
}

/// HK31, HK32 and HP51: `G = P(F)` judged by the registry hypotheses.
pub(super) fn partner_assessed(
    id: LemmaId,
    p: &LemmaParams,
    run: &LemmaRun,
) -> Result<LemmaInstance> {
    let th = id.theorem().expect("registered lemma");
    let bp = Params::new(p.n, p.k, p.t);
    let bound = bound_of(th, &bp)?;
    let (fk, min_f, t_int, shifted_f) = match id {
        LemmaId::HK31 => (3, 2, 2, false),
        LemmaId::HK32 => (2, 2, 0, false),
        _ => (4, 3, 2, true),
    };
    let uf = Universe::uniform(p.n, fk)?;
    let ug = Universe::uniform(p.n, p.k)?;
    let meets = uf.meets_in(&ug);
    let compat = uf.relation(|a, b| a.intersection_size(b) >= t_int);
    let preds = uf.preds();
    let regime = (spec(th).equality_regime)(&bp);
    let s = spec(th);
    let mut tally = Tally::new();
    let mut configs = Vec::new();
    let mut err = None;
    let mut sample = |rng: &mut rand_chacha::ChaCha8Rng| {
        let f = random_clique(rng, &uf, &compat, uf.full());
        if shifted_f {
            shifted(&uf, f)
        } else {
            f
        }
    };
    let method = sweep(
        run,
        p,
        &compat,
        shifted_f.then_some(&preds[..]),
        uf.full(),
        &mut sample,
        &mut |f| {
            if count(f) < min_f {
                return;
            }
            let (ff, gf) = (uf.family(f), ug.family(uf.partner(&meets, f, &ug)));
            let a = match s.assess(&bp, &ff, Some(&gf)) {
                Ok(a) => a,
                Err(e) => return first_err(&mut err, Err(e)),
            };
            if !a.failed.is_empty() {
                return;
            }
            tally.checked += 1;
            tally.value((ff.len() + gf.len()) as u64);
            match a.relation {
                Relation::Above => tally
                    .fail(|| format!("|F|+|G| = {} > {bound}: {}", a.value, show_pair(&ff, &gf))),
                Relation::Attains if regime => configs.push(Config { f: ff, g: Some(gf) }),
                _ => {}
            }
        },
    );
    if let Some(e) = err {
        return Err(e);
    }
    let mut out = tally.finish(id, *p, method);
    out.bound = Some(bound);
    if regime && method == Method::Exhaustive {
        out.inventory = Some(inventory(th, &bp, &configs)?);
    }
    Ok(out)
}

/// PR3 and PR5: `G` is `P(F) - F` plus as many of `P(F) & F` as allowed.
pub(super) fn overlap_limited(
    id: LemmaId,
    p: &LemmaParams,
    run: &LemmaRun,
) -> Result<LemmaInstance> {
    let th = id.theorem().expect("registered lemma");
    let bp = Params::new(p.n, p.k, 0);
    let bound = bound_of(th, &bp)?;
    let (overlap, min) = if id == LemmaId::PR3 { (1, 2) } else { (2, 3) };
    let u = Universe::uniform(p.n, p.k)?;
    let meets = u.meets_in(&u);
    let all = u.relation(|_, _| true);
    let mut tally = Tally::new();
    let mut err = None;
    let mut sample = |rng: &mut rand_chacha::ChaCha8Rng| {
        let f = random_mask(rng, &u, u.full());
        if rng.gen_bool(0.5) {
            shifted(&u, f)
        } else {
            f
        }
    };
    let method = sweep(run, p, &all, None, u.full(), &mut sample, &mut |f| {
        if count(f) < min {
            return;
        }
        let pm = u.partner(&meets, f, &u);
        let shared: Vec<usize> = members(pm & f).take(overlap).collect();
        let g = shared.iter().fold(pm & !f, |m, &i| m | 1u128 << i);
        if count(g) < min {
            return;
        }
        tally.checked += 1;
        let v = (count(f) + count(g)) as u64;
        tally.value(v);
        if v > bound {
            first_err(
                &mut err,
                confirm(th, &bp, &u.family(f), &u.family(g), &mut tally).map(|_| ()),
            );
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    let mut out = tally.finish(id, *p, method);
    out.bound = Some(bound);
    Ok(out)
}

pub(super) fn lem52(p: &LemmaParams, run: &LemmaRun) -> Result<LemmaInstance> {
    let th = TheoremId::LEM52;
    let n = p.n;
    let mut bp = Params::new(n, 3, 0);
    bp.pair = Some((1, 2));
    let bound = bound_of(th, &bp)?;
    let core = KSet::new(n, &[1, 2])?;
    let rest: Vec<KSet> = ksubsets(n, 3)?
        .filter(|s| s.intersection_size(&core) == 1)
        .collect();
    let r: Vec<KSet> = ksubsets(n, 3)?.filter(|s| core.is_subset(s)).collect();
    let u = Universe::from_sets(n, rest)?;
    let meets = u.meets_in(&u);
    let all = u.relation(|_, _| true);
    let base = 2 * r.len() as u64;
    let mut tally = Tally::new();
    let mut err = None;
    let method = sweep(
        run,
        p,
        &all,
        None,
        u.full(),
        &mut |rng| random_mask(rng, &u, u.full()),
        &mut |f| {
            if f == 0 {
                return;
            }
            // members of R meet everything in M, so only F - R constrains G - R
            let g = u.partner(&meets, f, &u) & !f;
            if g == 0 {
                return;
            }
            tally.checked += 1;
            let v = base + (count(f) + count(g)) as u64;
            tally.value(v);
            if v > bound {
                let full =
                    |m: u128| Family::new(n, u.family(m).iter().copied().chain(r.iter().copied()));
                let res = full(f)
                    .and_then(|ff| full(g).and_then(|gf| confirm(th, &bp, &ff, &gf, &mut tally)))
                    .map(|_| ());
                first_err(&mut err, res);
            }
        },
    );
    if let Some(e) = err {
        return Err(e);
    }
    let mut out = tally.finish(LemmaId::LEM52, *p, method);
    out.bound = Some(bound);
    Ok(out)
}

/// W231 and W232 through the cross-pair search.
pub(super) fn ordered(id: LemmaId, p: &LemmaParams) -> Result<LemmaInstance> {
    let th = id.theorem().expect("registered lemma");
    let bp = Params::new(p.n, p.k, 0);
    // shifting keeps sizes and cross-intersection, so past n = 8 the
    // value comes from shifted F alone and no inventory is taken
    let full = p.n <= 8;
    let regime = full && (spec(th).equality_regime)(&bp);
    let mode = if full { Mode::Full } else { Mode::ShiftedOnly };
    let sp = SearchProblem::for_theorem(th, p.n, p.k, 0)?
        .with_mode(mode)
        .with_enumerate(regime);
    let (report, _) = run_search_with_configs(&sp)?;
    let mut tally = Tally::new();
    tally.checked = report.stats.nodes_explored;
    if let Some(v) = report
        .optimum
        .as_ref()
        .and_then(num_traits::ToPrimitive::to_u64)
    {
        tally.value(v);
    }
    if report.verdict == Verdict::Violation {
        tally.fail(|| {
            format!(
                "search optimum {:?} exceeds {}",
                report.optimum, report.paper_bound
            )
        });
    }
    let method = if report.verdict == Verdict::Incomplete {
        Method::Incomplete
    } else {
        Method::Pruned
    };
    let mut out = tally.finish(id, *p, method);
    out.bound = Some(bound_of(th, &bp)?);
    out.inventory = report.extremal.map(|e| Inventory {
        classes: e.classes,
        missing: e.missing,
        extra: e.extra,
    });
    Ok(out)
}
