//! Root-split execution shared by the search engines.
//!
//! Subproblems run in fixed-size waves. Every subproblem of a wave starts
//! from the incumbent left by the previous wave and keeps its own, so the
//! merged result depends only on the problem, never on scheduling.

use rayon::prelude::*;
use setfam_sets::{Error, Result};

use crate::budget::Meter;

pub(crate) const WAVE: usize = 16;

/// Incumbent bookkeeping inside one subproblem.
pub(crate) struct Incumbent {
    threshold: Option<u64>,
    pub best: Option<u64>,
    pub configs: Vec<Vec<usize>>,
    pub overflow: bool,
    enumerate: bool,
    cap: usize,
    pub nodes: u64,
    pub pruned: u64,
}

impl Incumbent {
    pub fn new(threshold: Option<u64>, enumerate: bool, cap: usize) -> Self {
        Incumbent {
            threshold,
            best: None,
            configs: Vec::new(),
            overflow: false,
            enumerate,
            cap,
            nodes: 0,
            pruned: 0,
        }
    }

    fn level(&self) -> Option<u64> {
        self.threshold.max(self.best)
    }

    /// Whether a subtree whose objective is at most `ub` can be skipped.
    #[inline]
    pub fn can_prune(&self, ub: u64) -> bool {
        match self.level() {
            None => false,
            Some(b) => ub < b || (!self.enumerate && ub == b),
        }
    }

    pub fn offer(&mut self, value: u64, config: &[usize]) {
        let lvl = self.level();
        let better = lvl.is_none_or(|b| value > b);
        if !(better || (self.enumerate && lvl == Some(value))) {
            return;
        }
        if self.best != Some(value) {
            self.best = Some(value);
            self.configs.clear();
            self.overflow = false;
        }
        if self.enumerate {
            if self.configs.len() < self.cap {
                self.configs.push(config.to_vec());
            } else {
                self.overflow = true;
            }
        }
    }
}

pub(crate) struct Merged {
    pub best: Option<u64>,
    pub configs: Vec<Vec<usize>>,
    pub nodes: u64,
    pub pruned: u64,
    pub subproblems: usize,
    pub complete: bool,
}

impl Merged {
    fn absorb(&mut self, inc: Incumbent, overflow: &mut bool) {
        self.nodes += inc.nodes;
        self.pruned += inc.pruned;
        let Some(v) = inc.best else { return };
        if self.best.is_none_or(|b| v > b) {
            self.best = Some(v);
            self.configs.clear();
            *overflow = false;
        }
        if self.best == Some(v) {
            self.configs.extend(inc.configs);
            *overflow |= inc.overflow;
        }
    }
}

/// Runs `root` then every subproblem, merging incumbents wave by wave.
pub(crate) fn run_split<S: Sync>(
    threads: usize,
    meter: &Meter,
    enumerate: bool,
    cap: usize,
    seed_best: Option<u64>,
    root: Incumbent,
    subs: &[S],
    solve: impl Fn(&S, &mut Incumbent) + Sync,
) -> Result<Merged> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::resource(format!("thread pool: {e}")))?;
    let mut overflow = false;
    let mut m = Merged {
        best: None,
        configs: Vec::new(),
        nodes: 0,
        pruned: 0,
        subproblems: subs.len(),
        complete: true,
    };
    m.absorb(root, &mut overflow);
    for wave in subs.chunks(WAVE) {
        if meter.exhausted() {
            break;
        }
        let start = m.best.max(seed_best);
        let results: Vec<Incumbent> = pool.install(|| {
            wave.par_iter()
                .map(|s| {
                    let mut inc = Incumbent::new(start, enumerate, cap);
                    solve(s, &mut inc);
                    inc
                })
                .collect()
        });
        for r in results {
            m.absorb(r, &mut overflow);
        }
    }
    m.complete = !meter.exhausted();
    if overflow || m.configs.len() > cap {
        return Err(Error::resource(format!(
            "more than {cap} optimum-attaining configurations before deduplication"
        )));
    }
    Ok(m)
}
