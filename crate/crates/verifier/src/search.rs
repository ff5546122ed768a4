use std::time::Instant;

use num_bigint::BigInt;
use setfam_bounds::{bound_value, extremal_catalog, Extremal};
use setfam_constructions::k2_family_default;
use setfam_family::{
    canonical_form_with_limit, canonical_pair_with_limit, is_t_intersecting, max_cross_partner,
    Family,
};
use setfam_sets::{binomial, BigCount, Error, Result};

use crate::budget::Meter;
use crate::cross::CrossIndex;
use crate::driver::Merged;
use crate::problem::{
    Exclusion, ExtremalClass, ExtremalReport, Mode, SearchKind, SearchProblem, SearchReport, Stats,
    TwoMissing, Verdict,
};
use crate::restricted::{first_failure, RestrictedIndex};

/// Ground sets up to this size are canonicalized during enumeration.
pub const ENUM_ISO_LIMIT: usize = 12;

/// One optimum-attaining configuration as families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub f: Family,
    pub g: Option<Family>,
}

struct Raw {
    merged: Merged,
    configs: Vec<Config>,
    two_missing: Option<TwoMissing>,
}

fn verdict(complete: bool, optimum: Option<&BigCount>, bound: &BigCount) -> Verdict {
    match (complete, optimum) {
        (false, _) => Verdict::Incomplete,
        (true, None) => Verdict::Below,
        (true, Some(v)) => match v.cmp(bound) {
            std::cmp::Ordering::Equal => Verdict::Match,
            std::cmp::Ordering::Less => Verdict::Below,
            std::cmp::Ordering::Greater => Verdict::Violation,
        },
    }
}

fn run_cross(p: &SearchProblem, meter: &Meter) -> Result<Raw> {
    let ix = CrossIndex::new(p)?;
    let merged = ix.solve(p, meter)?;
    let configs = merged
        .configs
        .iter()
        .map(|c| {
            let f = ix.family_f(c);
            let g = max_cross_partner(&f, ix.k)?;
            Ok(Config { f, g: Some(g) })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Raw {
        merged,
        configs,
        two_missing: None,
    })
}

/// The chain `C(n-1,k-1) - 2C(n-k-1,k-1) + C(n-k-i-1,k-1) + 2` for the
/// case that some label is missed by exactly two members meeting in `k-i`.
pub fn two_missing_branch(
    n: usize,
    k: usize,
    exclusions: &[Exclusion],
) -> Result<(TwoMissing, Option<Family>)> {
    let (ni, ki) = (n as i64, k as i64);
    let mut best: Option<(BigInt, usize)> = None;
    for i in 2..=k {
        let v = BigInt::from(binomial(ni - 1, ki - 1))
            - 2 * BigInt::from(binomial(ni - ki - 1, ki - 1))
            + BigInt::from(binomial(ni - ki - i as i64 - 1, ki - 1))
            + 2;
        if best.as_ref().is_none_or(|(b, _)| v > *b) {
            best = Some((v, i));
        }
    }
    let (v, i) = best.ok_or_else(|| Error::domain("two-missing branch needs k >= 2"))?;
    let chain_max = v
        .to_biguint()
        .ok_or_else(|| Error::domain("two-missing chain is negative"))?;
    let k2 = k2_family_default(n, k)?;
    let rest: Vec<Exclusion> = exclusions
        .iter()
        .copied()
        .filter(|&e| e != Exclusion::CapMissingGe3)
        .collect();
    let two = (1..=n).any(|x| k2.iter().filter(|s| !s.contains(x)).count() == 2);
    let attained = BigCount::from(k2.len()) == chain_max
        && is_t_intersecting(&k2, 1)
        && two
        && first_failure(&rest, &k2)?.is_none();
    Ok((
        TwoMissing {
            chain_max,
            argmax_i: i,
            attained,
        },
        attained.then_some(k2),
    ))
}

fn run_restricted(p: &SearchProblem, meter: &Meter) -> Result<Raw> {
    let ix = RestrictedIndex::new(p)?;
    let mut merged = ix.solve(p, meter)?;
    let mut configs: Vec<Config> = merged
        .configs
        .iter()
        .map(|c| Config {
            f: ix.family(c),
            g: None,
        })
        .collect();
    let mut two_missing = None;
    if p.exclusions.contains(&Exclusion::CapMissingGe3) {
        let (tm, k2) = two_missing_branch(p.params.n, p.params.k, &p.exclusions)?;
        if let Some(k2) = k2 {
            let v = k2.len() as u64;
            if merged.best.is_none_or(|b| v > b) {
                merged.best = Some(v);
                configs.clear();
            }
            if merged.best == Some(v) && p.enumerate {
                configs.push(Config { f: k2, g: None });
            }
        }
        two_missing = Some(tm);
    }
    Ok(Raw {
        merged,
        configs,
        two_missing,
    })
}

fn canonical(c: &Config) -> Result<Config> {
    Ok(match &c.g {
        Some(g) => {
            let cp = canonical_pair_with_limit(&c.f, g, ENUM_ISO_LIMIT)?;
            Config {
                f: cp.f,
                g: Some(cp.g),
            }
        }
        None => Config {
            f: canonical_form_with_limit(&c.f, ENUM_ISO_LIMIT)?.family,
            g: None,
        },
    })
}

/// Deduplicates configurations up to isomorphism, in canonical order.
pub fn classes_of(configs: &[Config]) -> Result<Vec<Config>> {
    let mut out: Vec<(Vec<Vec<usize>>, Option<Vec<Vec<usize>>>, Config)> = Vec::new();
    for c in configs {
        let cc = canonical(c)?;
        let key = (
            cc.f.to_label_lists(),
            cc.g.as_ref().map(|g| g.to_label_lists()),
        );
        if !out.iter().any(|(f, g, _)| (f, g) == (&key.0, &key.1)) {
            out.push((key.0, key.1, cc));
        }
    }
    out.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
    Ok(out.into_iter().map(|(_, _, c)| c).collect())
}

fn extremal_report(p: &SearchProblem, configs: &[Config]) -> Result<ExtremalReport> {
    let classes = classes_of(configs)?;
    let full = p.mode == Mode::Full;
    let catalog: Vec<(&str, Config)> = extremal_catalog(p.theorem, &p.params)?
        .into_iter()
        .map(|(name, Extremal { f, g })| Ok((name, canonical(&Config { f, g })?)))
        .collect::<Result<_>>()?;
    let mut out_classes = Vec::new();
    let mut extra = Vec::new();
    for (i, c) in classes.iter().enumerate() {
        let hit = catalog
            .iter()
            .find(|(_, e)| e == c)
            .map(|(name, _)| name.to_string());
        if hit.is_none() && full {
            extra.push(i);
        }
        out_classes.push(ExtremalClass {
            f: c.f.to_label_lists(),
            g: c.g.as_ref().map(|g| g.to_label_lists()),
            catalog: hit,
        });
    }
    let missing = if full {
        catalog
            .iter()
            .filter(|(_, e)| !classes.contains(e))
            .map(|(n, _)| n.to_string())
            .collect()
    } else {
        Vec::new()
    };
    Ok(ExtremalReport {
        raw_count: configs.len(),
        classes: out_classes,
        missing,
        extra,
        uniqueness_checked: full,
    })
}

/// Runs the search, returning the report together with the raw
/// optimum-attaining configurations (empty unless enumerating).
pub fn run_search_with_configs(p: &SearchProblem) -> Result<(SearchReport, Vec<Config>)> {
    p.validate()?;
    let bound = bound_value(p.theorem, &p.params)?;
    let start = Instant::now();
    let meter = Meter::new(&p.budget);
    let raw = match p.kind {
        SearchKind::CrossPair => run_cross(p, &meter)?,
        SearchKind::RestrictedIntersecting => run_restricted(p, &meter)?,
        SearchKind::LemmaCheck => unreachable!("rejected by validate"),
    };
    let complete = raw.merged.complete;
    let optimum = raw.merged.best.map(BigCount::from);
    let verdict = verdict(complete, optimum.as_ref(), &bound);
    let extremal = if p.enumerate && verdict == Verdict::Match {
        Some(extremal_report(p, &raw.configs)?)
    } else {
        None
    };
    let report = SearchReport {
        theorem: p.theorem,
        kind: p.kind,
        mode: p.mode,
        n: p.params.n,
        k: p.params.k,
        t: p.params.t,
        min_f: p.min_f,
        exclusions: p.exclusions.clone(),
        optimum,
        paper_bound: bound,
        verdict,
        two_missing: raw.two_missing,
        extremal,
        stats: Stats {
            nodes_explored: raw.merged.nodes,
            pruned: raw.merged.pruned,
            subproblems: raw.merged.subproblems,
            runtime_ms: p.record_time.then(|| start.elapsed().as_millis() as u64),
        },
        threads: p.threads,
        seed: p.seed,
    };
    let configs = if verdict == Verdict::Match {
        raw.configs
    } else {
        Vec::new()
    };
    Ok((report, configs))
}

pub fn run_search(p: &SearchProblem) -> Result<SearchReport> {
    run_search_with_configs(p).map(|(r, _)| r)
}

pub fn max_cross_pair(p: &SearchProblem) -> Result<SearchReport> {
    if p.kind != SearchKind::CrossPair {
        return Err(Error::param("max_cross_pair needs a CROSS_PAIR problem"));
    }
    run_search(p)
}

pub fn max_restricted_intersecting(p: &SearchProblem) -> Result<SearchReport> {
    if p.kind != SearchKind::RestrictedIntersecting {
        return Err(Error::param(
            "max_restricted_intersecting needs a RESTRICTED_INTERSECTING problem",
        ));
    }
    run_search(p)
}

/// Extremal classes of a completed MATCH search, compared against the catalog.
pub fn enumerate_extremal(p: &SearchProblem) -> Result<ExtremalReport> {
    let p = p.clone().with_enumerate(true);
    let r = run_search(&p)?;
    match (r.verdict, r.extremal) {
        (Verdict::Match, Some(e)) => Ok(e),
        (v, _) => Err(Error::domain(format!(
            "enumeration needs a complete MATCH search, got {v:?}"
        ))),
    }
}
