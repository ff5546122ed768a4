//! Branch and bound for `max |F| + |G|` with `G` the largest partner of `F`.
//!
//! Members of `F` are chosen in lex order. The bound treats the choice as an
//! independent set in the conflict graph on `pool ∪ G`, where a candidate
//! conflicts with every partner set it is disjoint from and with every
//! candidate it may not sit beside in `F`. Each partner set is put in one
//! clique with at most one matched candidate, and the unmatched candidates
//! are greedily covered by cliques of their own.

use setfam_family::Family;
use setfam_sets::{ksubsets, KSet, Result};

use crate::bits::Bits;
use crate::budget::Meter;
use crate::driver::{run_split, Incumbent, Merged};
use crate::problem::{Mode, SearchProblem};

pub(crate) struct CrossIndex {
    pub n: usize,
    pub k: usize,
    pub a_sets: Vec<KSet>,
    pub b_sets: Vec<KSet>,
    /// partner sets disjoint from candidate `a`
    disj: Vec<Bits>,
    /// candidates that may not join `a` in `F`
    conflict: Vec<Bits>,
    /// candidates after `a` that may join it
    next: Vec<Bits>,
    /// immediate shift predecessors of `a`
    preds: Vec<Bits>,
    shifted: bool,
    min_f: usize,
    g_at_least_f: bool,
}

impl CrossIndex {
    pub fn new(p: &SearchProblem) -> Result<Self> {
        let (n, k, t) = (p.params.n, p.params.k, p.params.t);
        let a_sets: Vec<KSet> = ksubsets(n, k + t)?.collect();
        let b_sets: Vec<KSet> = ksubsets(n, k)?.collect();
        let (ma, mb) = (a_sets.len(), b_sets.len());
        let need = if p.f_intersecting { t + 1 } else { 0 };
        let mut disj = Vec::with_capacity(ma);
        let mut conflict = Vec::with_capacity(ma);
        let mut next = Vec::with_capacity(ma);
        let mut preds = Vec::with_capacity(ma);
        for (i, a) in a_sets.iter().enumerate() {
            let mut d = Bits::zeros(mb);
            for (j, b) in b_sets.iter().enumerate() {
                if !a.meets(b) {
                    d.set(j);
                }
            }
            let mut c = Bits::zeros(ma);
            let mut nx = Bits::zeros(ma);
            for (j, b) in a_sets.iter().enumerate() {
                if j == i {
                    continue;
                }
                if a.intersection_size(b) < need {
                    c.set(j);
                } else if j > i {
                    nx.set(j);
                }
            }
            let mut pr = Bits::zeros(ma);
            for x in a.labels() {
                if x > 1 && !a.contains(x - 1) {
                    let q = a.without(x).with(x - 1);
                    let idx = a_sets
                        .binary_search_by(|s| lex_cmp(s, &q))
                        .expect("predecessor is a (k+t)-set");
                    pr.set(idx);
                }
            }
            disj.push(d);
            conflict.push(c);
            next.push(nx);
            preds.push(pr);
        }
        Ok(CrossIndex {
            n,
            k,
            a_sets,
            b_sets,
            disj,
            conflict,
            next,
            preds,
            shifted: p.mode == Mode::ShiftedOnly,
            min_f: p.min_f,
            g_at_least_f: p.g_at_least_f,
        })
    }

    pub fn family_f(&self, ix: &[usize]) -> Family {
        Family::new(self.n, ix.iter().map(|&i| self.a_sets[i]))
            .expect("indexed sets share the ground set")
    }

    #[inline]
    fn feasible(&self, nf: usize, ng: usize) -> bool {
        nf >= self.min_f && (!self.g_at_least_f || ng >= nf)
    }

    #[inline]
    fn admissible(&self, a: usize, fbits: &Bits) -> bool {
        !self.shifted || self.preds[a].is_subset(fbits)
    }

    fn upper_bound(&self, nf: usize, g: &Bits, pool: &Bits, fbits: &Bits) -> u64 {
        let ng = g.count();
        let mut avail = fbits.clone();
        avail.or_assign(pool);
        // a candidate missing a predecessor for good can never be added
        let live: Vec<usize> = pool
            .iter()
            .filter(|&a| !self.shifted || self.preds[a].is_subset(&avail))
            .collect();

        let mut used = Bits::zeros(self.b_sets.len());
        let mut cliques: Vec<Bits> = Vec::new();
        for &a in &live {
            if let Some(b) = g.first_and_and_not(&self.disj[a], &used) {
                used.set(b);
                continue;
            }
            match cliques.iter_mut().find(|c| c.get(a)) {
                Some(c) => c.and_assign(&self.conflict[a]),
                None => cliques.push(self.conflict[a].clone()),
            }
        }
        let by_matching = (nf + ng + cliques.len()) as u64;

        // Each partner set lost to a chosen group S is charged evenly to the
        // live candidates that would drop it, so S gains at most the sum of
        // its members' deficits 1 - charge.
        let mut hits = vec![0u32; self.b_sets.len()];
        for &a in &live {
            let mut l = self.disj[a].clone();
            l.and_assign(g);
            for b in l.iter() {
                hits[b] += 1;
            }
        }
        let mut groups: Vec<(Bits, f64)> = Vec::new();
        for &a in &live {
            let mut l = self.disj[a].clone();
            l.and_assign(g);
            let charge: f64 = l.iter().map(|b| 1.0 / hits[b] as f64).sum();
            let deficit = 1.0 - charge;
            if deficit <= 0.0 {
                continue;
            }
            match groups.iter_mut().find(|(c, _)| c.get(a)) {
                Some((c, d)) => {
                    c.and_assign(&self.conflict[a]);
                    *d = d.max(deficit);
                }
                None => groups.push((self.conflict[a].clone(), deficit)),
            }
        }
        let gain: f64 = groups.iter().map(|(_, d)| d).sum();
        let by_charge = (nf + ng) as u64 + (gain + 1e-6).floor() as u64;

        let mut ub = by_matching.min(by_charge);
        if self.g_at_least_f {
            ub = ub.min(2 * ng as u64);
        }
        ub
    }

    fn dfs(
        &self,
        inc: &mut Incumbent,
        meter: &Meter,
        f: &mut Vec<usize>,
        fbits: &mut Bits,
        g: &Bits,
        pool: &Bits,
    ) {
        if !meter.tick() {
            return;
        }
        inc.nodes += 1;
        let (nf, ng) = (f.len(), g.count());
        if self.feasible(nf, ng) {
            inc.offer((nf + ng) as u64, f);
        }
        if self.g_at_least_f && nf + 1 > ng {
            return;
        }
        if pool.is_empty() {
            return;
        }
        if inc.can_prune(self.upper_bound(nf, g, pool, fbits)) {
            inc.pruned += 1;
            return;
        }
        for a in pool.iter() {
            if !self.admissible(a, fbits) {
                continue;
            }
            let mut g2 = g.clone();
            g2.and_not_assign(&self.disj[a]);
            let mut p2 = pool.clone();
            p2.and_assign(&self.next[a]);
            f.push(a);
            fbits.set(a);
            self.dfs(inc, meter, f, fbits, &g2, &p2);
            fbits.clear(a);
            f.pop();
            if meter.exhausted() {
                return;
            }
        }
    }

    /// Greedy descent from `[k+t]`; a feasible value to start pruning from.
    fn dive(&self) -> Option<u64> {
        let ma = self.a_sets.len();
        let mut f = vec![0usize];
        let mut fbits = Bits::zeros(ma);
        fbits.set(0);
        let mut g = Bits::ones(self.b_sets.len());
        g.and_not_assign(&self.disj[0]);
        let mut pool = self.next[0].clone();
        let mut best = None;
        loop {
            let ng = g.count();
            if self.feasible(f.len(), ng) {
                best = best.max(Some((f.len() + ng) as u64));
            }
            let pick = pool
                .iter()
                .filter(|&a| self.admissible(a, &fbits))
                .max_by_key(|&a| (g.count_and_not(&self.disj[a]), std::cmp::Reverse(a)));
            let Some(a) = pick else { break };
            g.and_not_assign(&self.disj[a]);
            pool.and_assign(&self.next[a]);
            f.push(a);
            fbits.set(a);
        }
        best
    }

    pub fn solve(&self, p: &SearchProblem, meter: &Meter) -> Result<Merged> {
        let ma = self.a_sets.len();
        let all_g = Bits::ones(self.b_sets.len());
        let seed_best = self.dive();
        let mut root = Incumbent::new(seed_best, p.enumerate, p.enum_cap);
        if self.feasible(0, self.b_sets.len()) {
            root.offer(self.b_sets.len() as u64, &[]);
        }
        // [k+t] is the lex-least set and every (k+t)-set lies in its orbit
        let mut fbits = Bits::zeros(ma);
        fbits.set(0);
        let mut g0 = all_g.clone();
        g0.and_not_assign(&self.disj[0]);
        if meter.tick() {
            root.nodes += 1;
            if self.feasible(1, g0.count()) {
                root.offer(1 + g0.count() as u64, &[0]);
            }
        }
        let subs: Vec<usize> = self.next[0]
            .iter()
            .filter(|&a| self.admissible(a, &fbits))
            .collect();
        let mut m = run_split(
            p.threads,
            meter,
            p.enumerate,
            p.enum_cap,
            seed_best,
            root,
            &subs,
            |&a, inc| {
                let mut fb = fbits.clone();
                fb.set(a);
                let mut g = g0.clone();
                g.and_not_assign(&self.disj[a]);
                let mut pool = self.next[0].clone();
                pool.and_assign(&self.next[a]);
                let mut f = vec![0, a];
                self.dfs(inc, meter, &mut f, &mut fb, &g, &pool);
            },
        )?;
        m.best = m.best.max(seed_best);
        Ok(m)
    }
}

fn lex_cmp(a: &KSet, b: &KSet) -> std::cmp::Ordering {
    a.labels().cmp(&b.labels())
}
