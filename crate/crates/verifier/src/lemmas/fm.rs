//! The disjointness-family lower bound with its equality inventory.

use setfam_bounds::{bound_i64, TheoremId};
use setfam_sets::{binom_u64, Error, Result};

use super::space::{count, Universe};
use super::{inventory, show, LemmaId, LemmaInstance, LemmaParams, LemmaRun, Method, Tally};
use crate::search::Config;

struct Walk<'a> {
    disj: &'a [u128],
    size: usize,
    target: usize,
    m: usize,
    /// only families with `|D| <= target` are expanded
    prune: bool,
    nodes: u64,
    limit: u64,
    below: Vec<u128>,
    equal: Vec<u128>,
}

impl Walk<'_> {
    fn go(&mut self, f: u128, d: u128, next: usize) -> bool {
        self.nodes += 1;
        if self.nodes > self.limit {
            return false;
        }
        if self.prune && count(d) > self.target {
            return true;
        }
        if count(f) == self.size {
            match count(d).cmp(&self.target) {
                std::cmp::Ordering::Less => self.below.push(f),
                std::cmp::Ordering::Equal => self.equal.push(f),
                std::cmp::Ordering::Greater => {}
            }
            return true;
        }
        let need = self.size - count(f);
        for i in next..=self.m - need {
            if !self.go(f | 1u128 << i, d | self.disj[i], i + 1) {
                return false;
            }
        }
        true
    }
}

pub(super) fn fm(p: &LemmaParams, run: &LemmaRun) -> Result<LemmaInstance> {
    let (n, k) = (p.n, p.k);
    let (l, r) = (p.l.unwrap_or(0), p.r.unwrap_or(0));
    let bp = {
        let mut b = setfam_bounds::Params::new(n, k, 0);
        b.l = Some(l);
        b.r = Some(r);
        b
    };
    let target = bound_i64(TheoremId::Fm, &bp)
        .ok_or_else(|| Error::domain("FM bound out of range"))? as usize;
    let size = binom_u64((n - r) as u32, (k - r) as u32) as usize;
    let uf = Universe::uniform(n, k)?;
    let ul = Universe::uniform(n, l)?;
    let disj: Vec<u128> = uf.sets.iter().map(|a| ul.select(|b| !a.meets(b))).collect();
    let m = uf.len();
    let exhaustive = binom_u64(m as u32, size as u32) <= run.limit;
    let mut w = Walk {
        disj: &disj,
        size,
        target,
        m,
        prune: !exhaustive,
        nodes: 0,
        limit: if exhaustive { u64::MAX } else { run.limit },
        below: Vec::new(),
        equal: Vec::new(),
    };
    // up to relabelling, any member can be taken to be [k]
    let done = if exhaustive {
        w.go(0, 0, 0)
    } else {
        w.go(1, disj[0], 1)
    };
    let mut tally = Tally::new();
    tally.checked = if exhaustive {
        binom_u64(m as u32, size as u32)
    } else {
        w.nodes
    };
    for &f in &w.below {
        tally.fail(|| format!("|D_{l}(F)| < {target}: F = {}", show(&uf.family(f))));
    }
    let method = match (done, exhaustive) {
        (false, _) => Method::Incomplete,
        (true, true) => Method::Exhaustive,
        (true, false) => Method::Pruned,
    };
    let mut out = tally.finish(LemmaId::FM, *p, method);
    out.bound = Some(target as u64);
    if done {
        let configs: Vec<Config> = w
            .equal
            .iter()
            .map(|&f| Config {
                f: uf.family(f),
                g: None,
            })
            .collect();
        out.inventory = Some(inventory(TheoremId::Fm, &bp, &configs)?);
    }
    Ok(out)
}
