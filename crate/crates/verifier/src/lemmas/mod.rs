//! Exhaustive, pruned or sampled checks of the auxiliary lemmas on small
//! parameters.

mod fm;
mod pairs;
mod shifting;
mod space;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use setfam_bounds::{extremal_catalog, Extremal, Params, TheoremId};
use setfam_family::{write_family, Family};
use setfam_sets::{Error, Result};

use crate::problem::ExtremalClass;
use crate::search::{classes_of, Config};

/// Enumerations larger than this fall back to sampling.
pub const EXHAUSTIVE_LIMIT: u64 = 10_000_000;
pub const DEFAULT_SAMPLES: u64 = 10_000;
const MAX_EXAMPLES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LemmaId {
    S1,
    S2,
    S3,
    S4,
    #[serde(rename = "LN")]
    Ln,
    FM,
    W231,
    W232,
    F24,
    HK31,
    HK32,
    PR3,
    HP51,
    PR5,
    LEM52,
}

impl LemmaId {
    pub const ALL: [LemmaId; 15] = [
        LemmaId::S1,
        LemmaId::S2,
        LemmaId::S3,
        LemmaId::S4,
        LemmaId::Ln,
        LemmaId::FM,
        LemmaId::W231,
        LemmaId::W232,
        LemmaId::F24,
        LemmaId::HK31,
        LemmaId::HK32,
        LemmaId::PR3,
        LemmaId::HP51,
        LemmaId::PR5,
        LemmaId::LEM52,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::S1 => "S1",
            LemmaId::S2 => "S2",
            LemmaId::S3 => "S3",
            LemmaId::S4 => "S4",
            LemmaId::Ln => "LN",
            LemmaId::FM => "FM",
            LemmaId::W231 => "W231",
            LemmaId::W232 => "W232",
            LemmaId::F24 => "F24",
            LemmaId::HK31 => "HK31",
            LemmaId::HK32 => "HK32",
            LemmaId::PR3 => "PR3",
            LemmaId::HP51 => "HP51",
            LemmaId::PR5 => "PR5",
            LemmaId::LEM52 => "LEM52",
        }
    }

    /// The registered bound this lemma is checked against, if any.
    pub fn theorem(self) -> Option<TheoremId> {
        Some(match self {
            LemmaId::S1 | LemmaId::S2 | LemmaId::S3 | LemmaId::S4 | LemmaId::Ln => return None,
            LemmaId::FM => TheoremId::Fm,
            LemmaId::W231 => TheoremId::W231,
            LemmaId::W232 => TheoremId::W232,
            LemmaId::F24 => TheoremId::F24,
            LemmaId::HK31 => TheoremId::HK31,
            LemmaId::HK32 => TheoremId::HK32,
            LemmaId::PR3 => TheoremId::PR3,
            LemmaId::HP51 => TheoremId::HP51,
            LemmaId::PR5 => TheoremId::PR5,
            LemmaId::LEM52 => TheoremId::LEM52,
        })
    }

    pub fn summary(self) -> &'static str {
        match self {
            LemmaId::S1 => "shifted (t+1)-intersecting F: F(1-bar) is (t+2)-intersecting; F(n) is (t+1)-intersecting for n >= 2k+t",
            LemmaId::S2 => "shifted F in C([n],k+t) with |F| >= 3 and n >= k+t+3: |F(n-bar)| >= 3",
            LemmaId::S3 => "shifting keeps a pair cross-intersecting and F t-intersecting",
            LemmaId::S4 => "shifted cross-intersecting F, G with n >= 2k+t: F(n), G(n) cross-intersecting",
            LemmaId::Ln => "cross-intersecting F, G with n > k+l: the lex families of the same sizes are cross-intersecting",
            _ => "inequality from the bound registry",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::param(format!("unknown lemma {s:?}")))
    }
}

/// Parameters of one lemma instance. `k = 0` selects the non-uniform
/// variant of S1 and S3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaParams {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
}

impl LemmaParams {
    pub fn new(n: usize, k: usize, t: usize) -> Self {
        LemmaParams {
            n,
            k,
            t,
            l: None,
            r: None,
        }
    }

    pub fn with_l(mut self, l: usize) -> Self {
        self.l = Some(l);
        self
    }

    pub fn with_r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    fn bound_params(&self) -> Params {
        let mut p = Params::new(self.n, self.k, self.t);
        p.l = self.l;
        p.r = self.r;
        p
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    Exhaustive,
    /// exhaustive up to isomorphism, skipping subtrees that cannot matter
    Pruned,
    Sampled,
    /// the search budget ran out
    Incomplete,
}

/// Equality-attaining configurations against the catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inventory {
    pub classes: Vec<ExtremalClass>,
    pub missing: Vec<String>,
    pub extra: Vec<usize>,
}

impl Inventory {
    pub fn matches(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaInstance {
    pub lemma: LemmaId,
    pub params: LemmaParams,
    pub method: Method,
    /// hypothesis instances examined
    pub checked: u64,
    pub counterexamples: u64,
    pub examples: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_value: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inventory: Option<Inventory>,
}

impl LemmaInstance {
    pub fn holds(&self) -> bool {
        self.counterexamples == 0 && self.inventory.as_ref().is_none_or(Inventory::matches)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub instances: Vec<LemmaInstance>,
    pub counterexamples: u64,
    /// every instance was settled without sampling
    pub complete: bool,
    pub holds: bool,
}

/// Run settings shared by every instance.
#[derive(Clone, Copy, Debug)]
pub struct LemmaRun {
    pub samples: u64,
    pub seed: u64,
    pub limit: u64,
}

impl Default for LemmaRun {
    fn default() -> Self {
        LemmaRun {
            samples: DEFAULT_SAMPLES,
            seed: 0,
            limit: EXHAUSTIVE_LIMIT,
        }
    }
}

impl LemmaRun {
    pub(crate) fn rng(&self, p: &LemmaParams) -> ChaCha8Rng {
        let mix = (p.n as u64) << 48 ^ (p.k as u64) << 40 ^ (p.t as u64) << 32;
        let mix = mix ^ (p.l.unwrap_or(0) as u64) << 24 ^ (p.r.unwrap_or(0) as u64) << 16;
        ChaCha8Rng::seed_from_u64(self.seed ^ mix)
    }
}

/// Running counts for one instance.
pub(crate) struct Tally {
    pub checked: u64,
    pub counterexamples: u64,
    pub examples: Vec<String>,
    pub max_value: Option<u64>,
}

impl Tally {
    pub fn new() -> Self {
        Tally {
            checked: 0,
            counterexamples: 0,
            examples: Vec::new(),
            max_value: None,
        }
    }

    pub fn fail(&mut self, describe: impl FnOnce() -> String) {
        self.counterexamples += 1;
        if self.examples.len() < MAX_EXAMPLES {
            self.examples.push(describe());
        }
    }

    pub fn value(&mut self, v: u64) {
        self.max_value = self.max_value.max(Some(v));
    }

    pub fn finish(self, lemma: LemmaId, params: LemmaParams, method: Method) -> LemmaInstance {
        LemmaInstance {
            lemma,
            params,
            method,
            checked: self.checked,
            counterexamples: self.counterexamples,
            examples: self.examples,
            max_value: self.max_value,
            bound: None,
            inventory: None,
        }
    }
}

pub(crate) fn show_pair(f: &Family, g: &Family) -> String {
    format!(
        "F = {}; G = {}",
        write_family(f).trim().replace('\n', " "),
        write_family(g).trim().replace('\n', " ")
    )
}

pub(crate) fn show(f: &Family) -> String {
    write_family(f).trim().replace('\n', " ")
}

/// Compares equality configurations with the catalog of `id`.
pub(crate) fn inventory(id: TheoremId, p: &Params, configs: &[Config]) -> Result<Inventory> {
    let classes = classes_of(configs)?;
    let names: Vec<(&str, Config)> = extremal_catalog(id, p)?
        .into_iter()
        .map(|(name, Extremal { f, g })| Ok((name, classes_of(&[Config { f, g }])?.remove(0))))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut extra = Vec::new();
    for (i, c) in classes.iter().enumerate() {
        let hit = names
            .iter()
            .find(|(_, e)| e == c)
            .map(|(n, _)| n.to_string());
        if hit.is_none() {
            extra.push(i);
        }
        out.push(ExtremalClass {
            f: c.f.to_label_lists(),
            g: c.g.as_ref().map(|g| g.to_label_lists()),
            catalog: hit,
        });
    }
    let missing = names
        .iter()
        .filter(|(_, e)| !classes.contains(e))
        .map(|(n, _)| n.to_string())
        .collect();
    Ok(Inventory {
        classes: out,
        missing,
        extra,
    })
}

/// Rejects parameters outside the lemma's hypotheses or beyond the
/// candidate-universe limits.
pub fn check_params(id: LemmaId, p: &LemmaParams) -> Result<()> {
    let need = |ok: bool, msg: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::domain(format!("{id}: {msg}")))
        }
    };
    match id {
        LemmaId::S1 | LemmaId::S3 => need(p.n >= 2 && p.n >= p.k + p.t, "need n >= max(2, k+t)"),
        LemmaId::S2 => need(
            p.k >= 1 && p.n >= p.k + p.t + 3,
            "need k >= 1 and n >= k+t+3",
        ),
        LemmaId::S4 => need(
            p.k >= 1 && p.n >= 2 * p.k + p.t,
            "need k >= 1 and n >= 2k+t",
        ),
        LemmaId::Ln => {
            let l = p.l.unwrap_or(0);
            need(
                p.k >= 1 && l >= 1 && p.n > p.k + l,
                "need k, l >= 1 and n > k+l",
            )
        }
        _ => {
            let th = id.theorem().expect("registered lemma");
            let spec = setfam_bounds::spec(th);
            spec.check_domain(&spec.normalize(p.bound_params()))
        }
    }
}

/// Small instances inside every lemma's hypotheses.
pub fn default_instances(id: LemmaId) -> Vec<LemmaParams> {
    let p = LemmaParams::new;
    match id {
        LemmaId::S1 => vec![
            p(6, 2, 1),
            p(6, 3, 0),
            p(7, 2, 1),
            p(7, 3, 0),
            p(5, 0, 0),
            p(5, 0, 1),
        ],
        LemmaId::S2 => vec![p(5, 2, 0), p(6, 2, 1), p(6, 3, 0), p(7, 3, 1)],
        LemmaId::S3 => vec![p(5, 2, 0), p(5, 2, 1), p(5, 1, 1), p(4, 0, 0), p(4, 0, 1)],
        LemmaId::S4 => vec![p(5, 2, 1), p(6, 3, 0), p(6, 2, 1), p(7, 3, 1)],
        LemmaId::Ln => vec![
            p(5, 2, 0).with_l(2),
            p(6, 2, 0).with_l(3),
            p(6, 3, 0).with_l(2),
            p(7, 3, 0).with_l(3),
        ],
        LemmaId::FM => vec![
            p(5, 2, 0).with_l(2).with_r(1),
            p(6, 2, 0).with_l(3).with_r(1),
            p(6, 3, 0).with_l(2).with_r(1),
            p(7, 3, 0).with_l(3).with_r(2),
            p(7, 3, 0).with_l(3).with_r(1),
        ],
        LemmaId::W231 => vec![p(6, 3, 0), p(7, 3, 0)],
        LemmaId::W232 => vec![p(8, 4, 0), p(9, 4, 0)],
        LemmaId::F24 => vec![p(5, 2, 0), p(6, 2, 0), p(7, 2, 0), p(7, 3, 0)],
        LemmaId::HK31 => vec![p(6, 2, 1), p(7, 2, 1)],
        LemmaId::HK32 => vec![p(4, 2, 0), p(5, 2, 0), p(6, 2, 0)],
        LemmaId::PR3 => vec![p(5, 2, 0), p(6, 2, 0), p(7, 2, 0)],
        LemmaId::HP51 => vec![p(7, 3, 1), p(8, 3, 1)],
        LemmaId::PR5 => vec![p(7, 3, 0)],
        LemmaId::LEM52 => vec![p(7, 3, 0)],
    }
}

/// Checks one instance.
pub fn verify_instance(id: LemmaId, p: &LemmaParams, run: &LemmaRun) -> Result<LemmaInstance> {
    check_params(id, p)?;
    let mut p = *p;
    if let Some(th) = id.theorem() {
        let q = setfam_bounds::spec(th).normalize(p.bound_params());
        (p.k, p.t) = (q.k, q.t);
    }
    let p = &p;
    match id {
        LemmaId::S1 => shifting::s1(p, run),
        LemmaId::S2 => shifting::s2(p, run),
        LemmaId::S3 => shifting::s3(p, run),
        LemmaId::S4 => shifting::s4(p, run),
        LemmaId::Ln => pairs::ln(p, run),
        LemmaId::FM => fm::fm(p, run),
        LemmaId::W231 | LemmaId::W232 => pairs::ordered(id, p),
        LemmaId::F24 => pairs::f24(p, run),
        LemmaId::HK31 | LemmaId::HK32 | LemmaId::HP51 => pairs::partner_assessed(id, p, run),
        LemmaId::PR3 | LemmaId::PR5 => pairs::overlap_limited(id, p, run),
        LemmaId::LEM52 => pairs::lem52(p, run),
    }
}

/// Checks every instance in `params` and summarises.
pub fn verify_lemma(id: LemmaId, params: &[LemmaParams], run: &LemmaRun) -> Result<LemmaReport> {
    let instances = params
        .iter()
        .map(|p| verify_instance(id, p, run))
        .collect::<Result<Vec<_>>>()?;
    Ok(LemmaReport {
        lemma: id,
        counterexamples: instances.iter().map(|i| i.counterexamples).sum(),
        complete: instances
            .iter()
            .all(|i| matches!(i.method, Method::Exhaustive | Method::Pruned)),
        holds: instances.iter().all(LemmaInstance::holds),
        instances,
    })
}

/// Every lemma on its default instances with `n <= max_n`.
pub fn default_suite(max_n: usize, run: &LemmaRun) -> Result<Vec<LemmaReport>> {
    LemmaId::ALL
        .into_iter()
        .map(|id| {
            let ps: Vec<LemmaParams> = default_instances(id)
                .into_iter()
                .filter(|p| p.n <= max_n)
                .collect();
            verify_lemma(id, &ps, run)
        })
        .collect()
}
