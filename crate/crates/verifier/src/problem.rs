use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize, Serializer};
use setfam_bounds::{spec, Params, TheoremId};
use setfam_sets::{binom_u64, BigCount, Error, Result, MAX_N};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SearchKind {
    CrossPair,
    RestrictedIntersecting,
    LemmaCheck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Mode {
    ShiftedOnly,
    Full,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "shifted" | "shifted_only" => Ok(Mode::ShiftedOnly),
            "full" => Ok(Mode::Full),
            _ => Err(Error::param(format!("unknown mode `{s}` (shifted|full)"))),
        }
    }
}

/// Structural side conditions on a restricted search. Each one is closed
/// upward: once a family satisfies it, so does every superfamily.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Exclusion {
    NotEkr,
    NotHm,
    NotSubJ2,
    NotSubG2,
    NotSubG3,
    NotSubA,
    NotSubB,
    NotSubC,
    /// every label is missed by at least three members
    CapMissingGe3,
}

impl fmt::Display for Exclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().unwrap_or_default())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub nodes: u64,
    pub wall: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            nodes: 100_000_000,
            wall: Duration::from_secs(600),
        }
    }
}

pub const BUDGET_ENV: &str = "SETFAM_BUDGET_NODES";

impl Budget {
    /// Default budget with the node limit taken from `SETFAM_BUDGET_NODES` if set.
    pub fn from_env() -> Result<Self> {
        let mut b = Budget::default();
        if let Ok(v) = std::env::var(BUDGET_ENV) {
            b.nodes = v.trim().parse().map_err(|_| {
                Error::param(format!(
                    "{BUDGET_ENV} must be a non-negative integer, got `{v}`"
                ))
            })?;
        }
        Ok(b)
    }
}

pub const DEFAULT_ENUM_CAP: usize = 10_000;

/// Largest candidate pool a search will index.
pub const MAX_CANDIDATES: u64 = 4096;

#[derive(Clone, Debug, PartialEq)]
pub struct SearchProblem {
    pub kind: SearchKind,
    pub theorem: TheoremId,
    pub params: Params,
    pub min_f: usize,
    /// `F` must be `(t+1)`-intersecting
    pub f_intersecting: bool,
    /// `|G| >= |F|`
    pub g_at_least_f: bool,
    pub exclusions: Vec<Exclusion>,
    pub mode: Mode,
    pub budget: Budget,
    pub threads: usize,
    pub enumerate: bool,
    pub enum_cap: usize,
    pub seed: u64,
    /// report wall-clock time (breaks byte-identical output)
    pub record_time: bool,
}

impl SearchProblem {
    /// The search that tests `id` at `(n, k, t)`, in FULL mode with the default budget.
    pub fn for_theorem(id: TheoremId, n: usize, k: usize, t: usize) -> Result<Self> {
        let s = spec(id);
        let params = s.normalize(Params::new(n, k, t));
        s.check_domain(&params)?;
        use TheoremId::*;
        let (kind, min_f, f_intersecting, g_at_least_f) = match id {
            Mainh => (SearchKind::CrossPair, 1, false, true),
            W231 => (SearchKind::CrossPair, 2, false, true),
            W232 => (SearchKind::CrossPair, 3, false, true),
            F16 => (SearchKind::CrossPair, 1, true, false),
            W23 => (SearchKind::CrossPair, 2, true, false),
            Main51 => (SearchKind::CrossPair, 3, true, false),
            HmStab | HkStab | HpStabI | HpStabII => {
                (SearchKind::RestrictedIntersecting, 0, true, false)
            }
            _ => (SearchKind::LemmaCheck, 0, false, false),
        };
        let k = params.k;
        let exclusions = match id {
            HmStab => vec![Exclusion::NotEkr],
            HkStab if k == 3 => vec![Exclusion::NotEkr, Exclusion::NotHm, Exclusion::NotSubG2],
            HkStab => vec![Exclusion::NotEkr, Exclusion::NotHm],
            HpStabI | HpStabII if k == 4 => vec![
                Exclusion::NotEkr,
                Exclusion::NotHm,
                Exclusion::NotSubJ2,
                Exclusion::NotSubG2,
                Exclusion::NotSubG3,
                Exclusion::CapMissingGe3,
            ],
            HpStabI | HpStabII => {
                vec![
                    Exclusion::NotEkr,
                    Exclusion::NotHm,
                    Exclusion::NotSubJ2,
                    Exclusion::CapMissingGe3,
                ]
            }
            _ => Vec::new(),
        };
        Ok(SearchProblem {
            kind,
            theorem: id,
            params,
            min_f,
            f_intersecting,
            g_at_least_f,
            exclusions,
            mode: Mode::Full,
            budget: Budget::default(),
            threads: 1,
            enumerate: false,
            enum_cap: DEFAULT_ENUM_CAP,
            seed: 0,
            record_time: false,
        })
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_min_f(mut self, min_f: usize) -> Self {
        self.min_f = min_f;
        self
    }

    pub fn with_enumerate(mut self, on: bool) -> Self {
        self.enumerate = on;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let p = &self.params;
        if p.n == 0 || p.n > MAX_N || p.k == 0 {
            return Err(Error::param(format!(
                "need 1 <= n <= {MAX_N} and k >= 1, got n={}, k={}",
                p.n, p.k
            )));
        }
        if self.threads == 0 {
            return Err(Error::param("threads must be positive"));
        }
        match self.kind {
            SearchKind::CrossPair => {
                if !self.exclusions.is_empty() {
                    return Err(Error::param("cross-pair searches take no exclusions"));
                }
                if p.k + p.t > p.n {
                    return Err(Error::param("k+t exceeds n"));
                }
                let m = binom_u64(p.n as u32, (p.k + p.t) as u32)
                    .max(binom_u64(p.n as u32, p.k as u32));
                if m > MAX_CANDIDATES {
                    return Err(Error::resource(format!(
                        "{m} candidate sets exceed the desk-scale cap {MAX_CANDIDATES}"
                    )));
                }
            }
            SearchKind::RestrictedIntersecting => {
                if self.mode == Mode::ShiftedOnly {
                    return Err(Error::param(
                        "restricted searches need FULL mode: exclusions are not shift-stable",
                    ));
                }
                if binom_u64(p.n as u32, p.k as u32) > MAX_CANDIDATES {
                    return Err(Error::resource("candidate pool exceeds the desk-scale cap"));
                }
            }
            SearchKind::LemmaCheck => {
                return Err(Error::param(format!(
                    "{} is checked by the lemma suite, not by search",
                    self.theorem
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Match,
    Below,
    Violation,
    Incomplete,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub nodes_explored: u64,
    pub pruned: u64,
    pub subproblems: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

/// One extremal configuration in canonical labelling.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ExtremalClass {
    pub f: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<Vec<usize>>>,
    /// catalog entry this class is isomorphic to
    pub catalog: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    /// optimum-attaining configurations visited before deduplication
    pub raw_count: usize,
    pub classes: Vec<ExtremalClass>,
    /// catalog entries with no matching class
    pub missing: Vec<String>,
    /// indices into `classes` with no catalog entry
    pub extra: Vec<usize>,
    /// uniqueness is only claimed in FULL mode
    pub uniqueness_checked: bool,
}

/// The two-sets-missing branch of the restricted searches run with
/// `CAP_MISSING_GE3`, settled by the closed-form chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoMissing {
    #[serde(serialize_with = "ser_big")]
    pub chain_max: BigCount,
    /// `|E1 ∩ E2| = k - i` maximising the chain
    pub argmax_i: usize,
    /// `K_2(n,k)` meets the exclusions and has the chain's size
    pub attained: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    #[serde(serialize_with = "ser_id")]
    pub theorem: TheoremId,
    pub kind: SearchKind,
    pub mode: Mode,
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub min_f: usize,
    pub exclusions: Vec<Exclusion>,
    #[serde(serialize_with = "ser_big_opt")]
    pub optimum: Option<BigCount>,
    #[serde(serialize_with = "ser_big")]
    pub paper_bound: BigCount,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_missing: Option<TwoMissing>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extremal: Option<ExtremalReport>,
    pub stats: Stats,
    pub threads: usize,
    pub seed: u64,
}

pub(crate) fn ser_id<S: Serializer>(id: &TheoremId, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(id.name())
}

pub(crate) fn ser_big<S: Serializer>(v: &BigCount, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

fn ser_big_opt<S: Serializer>(v: &Option<BigCount>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => ser_big(v, s),
        None => s.serialize_none(),
    }
}
