//! Max-clique branch and bound on the intersection graph of k-sets, with
//! structural exclusions applied to the families it completes.

use setfam_bounds::structure::{is_hm, is_sub_appendix, is_sub_g, is_sub_j2};
use setfam_constructions::AppendixId;
use setfam_family::{is_ekr, Family};
use setfam_sets::{ksubsets, KSet, Result};

use crate::bits::Bits;
use crate::budget::Meter;
use crate::driver::{run_split, Incumbent, Merged};
use crate::problem::{Exclusion, SearchProblem};

/// Whether `f` satisfies `e`.
pub fn satisfies(e: Exclusion, f: &Family) -> Result<bool> {
    Ok(match e {
        Exclusion::NotEkr => !is_ekr(f),
        Exclusion::NotHm => !is_hm(f)?,
        Exclusion::NotSubJ2 => !is_sub_j2(f)?,
        Exclusion::NotSubG2 => !is_sub_g(f, 2)?,
        Exclusion::NotSubG3 => !is_sub_g(f, 3)?,
        Exclusion::NotSubA => !is_sub_appendix(f, AppendixId::A)?,
        Exclusion::NotSubB => !is_sub_appendix(f, AppendixId::B)?,
        Exclusion::NotSubC => !is_sub_appendix(f, AppendixId::C)?,
        Exclusion::CapMissingGe3 => {
            (1..=f.ground_n()).all(|x| f.iter().filter(|s| !s.contains(x)).count() >= 3)
        }
    })
}

/// The first exclusion `f` fails, if any.
pub fn first_failure(exclusions: &[Exclusion], f: &Family) -> Result<Option<Exclusion>> {
    for &e in exclusions {
        if !satisfies(e, f)? {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

pub(crate) struct RestrictedIndex {
    pub n: usize,
    pub sets: Vec<KSet>,
    adj: Vec<Bits>,
    next: Vec<Bits>,
    /// sets missing label `x`, indexed `x - 1`
    missing: Vec<Bits>,
    exclusions: Vec<Exclusion>,
}

impl RestrictedIndex {
    pub fn new(p: &SearchProblem) -> Result<Self> {
        let (n, k) = (p.params.n, p.params.k);
        let sets: Vec<KSet> = ksubsets(n, k)?.collect();
        let m = sets.len();
        let mut adj = Vec::with_capacity(m);
        let mut next = Vec::with_capacity(m);
        for (i, a) in sets.iter().enumerate() {
            let mut b = Bits::zeros(m);
            let mut nx = Bits::zeros(m);
            for (j, s) in sets.iter().enumerate() {
                if j != i && a.meets(s) {
                    b.set(j);
                    if j > i {
                        nx.set(j);
                    }
                }
            }
            adj.push(b);
            next.push(nx);
        }
        let missing = (1..=n)
            .map(|x| {
                let mut b = Bits::zeros(m);
                for (j, s) in sets.iter().enumerate() {
                    if !s.contains(x) {
                        b.set(j);
                    }
                }
                b
            })
            .collect();
        let mut exclusions = p.exclusions.clone();
        exclusions.sort();
        exclusions.dedup();
        Ok(RestrictedIndex {
            n,
            sets,
            adj,
            next,
            missing,
            exclusions,
        })
    }

    pub fn family(&self, ix: &[usize]) -> Family {
        Family::new(self.n, ix.iter().map(|&i| self.sets[i]))
            .expect("indexed sets share the ground set")
    }

    fn colour_bound(&self, pool: &Bits) -> usize {
        let mut blocked: Vec<Bits> = Vec::new();
        for a in pool.iter() {
            match blocked.iter_mut().find(|b| !b.get(a)) {
                Some(b) => b.or_assign(&self.adj[a]),
                None => blocked.push(self.adj[a].clone()),
            }
        }
        blocked.len()
    }

    /// Necessary conditions every completion must meet, checked on `F ∪ pool`.
    fn union_hopeless(&self, fbits: &Bits, pool: &Bits) -> bool {
        let mut live = fbits.clone();
        live.or_assign(pool);
        for e in &self.exclusions {
            match e {
                Exclusion::NotEkr => {
                    let common = live.iter().fold(!0u64, |acc, i| acc & self.sets[i].bits());
                    if common != 0 {
                        return true;
                    }
                }
                Exclusion::CapMissingGe3
                    if self.missing.iter().any(|m| {
                        let mut x = m.clone();
                        x.and_assign(&live);
                        x.count() < 3
                    }) =>
                {
                    return true;
                }
                _ => {}
            }
        }
        false
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        inc: &mut Incumbent,
        meter: &Meter,
        f: &mut Vec<usize>,
        fbits: &mut Bits,
        pool: &Bits,
        mut sat: bool,
        err: &mut Option<setfam_sets::Error>,
    ) {
        if !meter.tick() || err.is_some() {
            return;
        }
        inc.nodes += 1;
        let nf = f.len() as u64;
        // exclusions are only evaluated where the answer could matter
        if !inc.can_prune(nf) {
            if !sat {
                match first_failure(&self.exclusions, &self.family(f)) {
                    Ok(r) => sat = r.is_none(),
                    Err(e) => {
                        *err = Some(e);
                        return;
                    }
                }
            }
            if sat {
                inc.offer(nf, f);
            }
        }
        if pool.is_empty() {
            return;
        }
        if inc.can_prune(nf + self.colour_bound(pool) as u64)
            || (!sat && self.union_hopeless(fbits, pool))
        {
            inc.pruned += 1;
            return;
        }
        for a in pool.iter() {
            let mut p2 = pool.clone();
            p2.and_assign(&self.next[a]);
            f.push(a);
            fbits.set(a);
            self.dfs(inc, meter, f, fbits, &p2, sat, err);
            fbits.clear(a);
            f.pop();
            if meter.exhausted() || err.is_some() {
                return;
            }
        }
    }

    pub fn solve(&self, p: &SearchProblem, meter: &Meter) -> Result<Merged> {
        let m = self.sets.len();
        let mut root = Incumbent::new(None, p.enumerate, p.enum_cap);
        let empty = self.family(&[]);
        if first_failure(&self.exclusions, &empty)?.is_none() {
            root.offer(0, &[]);
        }
        // every non-empty family has a copy containing [k]
        let mut f0 = Bits::zeros(m);
        f0.set(0);
        let sat0 = first_failure(&self.exclusions, &self.family(&[0]))?.is_none();
        if meter.tick() {
            root.nodes += 1;
            if sat0 {
                root.offer(1, &[0]);
            }
        }
        let subs: Vec<usize> = self.next[0].iter().collect();
        let errs = std::sync::Mutex::new(None);
        let merged = run_split(
            p.threads,
            meter,
            p.enumerate,
            p.enum_cap,
            None,
            root,
            &subs,
            |&a, inc| {
                let mut fb = f0.clone();
                fb.set(a);
                let mut pool = self.next[0].clone();
                pool.and_assign(&self.next[a]);
                let mut f = vec![0, a];
                let mut err = None;
                self.dfs(inc, meter, &mut f, &mut fb, &pool, sat0, &mut err);
                if let Some(e) = err {
                    errs.lock().unwrap().get_or_insert(e);
                }
            },
        )?;
        if let Some(e) = errs.into_inner().unwrap() {
            return Err(e);
        }
        Ok(merged)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use setfam_bounds::TheoremId;

    fn opt(id: TheoremId, n: usize, k: usize) -> (u64, usize) {
        let p = SearchProblem::for_theorem(id, n, k, 0)
            .unwrap()
            .with_enumerate(true);
        let ix = RestrictedIndex::new(&p).unwrap();
        let meter = Meter::new(&p.budget);
        let m = ix.solve(&p, &meter).unwrap();
        (m.best.unwrap(), m.configs.len())
    }

    #[test]
    fn small_hm_values() {
        assert_eq!(opt(TheoremId::HmStab, 5, 2).0, 3);
        // non-star intersecting graphs are triangles
        assert_eq!(opt(TheoremId::HmStab, 6, 2).0, 3);
    }
}
