//! Independent checking of externally supplied configurations.

use serde::{Deserialize, Serialize};
use setfam_bounds::{spec, Direction, Params, Relation, TheoremId};
use setfam_family::Family;
use setfam_sets::{Error, KSet, Result};

use crate::problem::ser_id;

/// A claimed configuration. Labels are 1-based; sets and families sorted
/// ascending. `r`, `l` are read by FM only, `x1`, `x2` by LEM52 only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub theorem: String,
    pub family_f: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family_g: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x1: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x2: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CertVerdict {
    Attains,
    /// strictly inside an upper bound
    Below,
    /// strictly inside a lower bound
    Above,
    Violates,
    HypothesisFailed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    #[serde(serialize_with = "ser_id")]
    pub theorem: TheoremId,
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub verdict: CertVerdict,
    pub value: u64,
    pub bound: u64,
    pub failed: Vec<String>,
}

fn line_of(text: &str, key: &str) -> usize {
    let needle = format!("\"{key}\"");
    text.lines()
        .position(|l| l.contains(&needle))
        .map_or(1, |i| i + 1)
}

fn family(text: &str, field: &str, n: usize, lists: &[Vec<usize>]) -> Result<Family> {
    let bad = |msg: String| Error::parse(line_of(text, field), format!("{field}: {msg}"));
    for (i, s) in lists.iter().enumerate() {
        if let Some(&x) = s.iter().find(|&&x| x == 0 || x > n) {
            return Err(bad(format!("set {} has label {x} outside [1, {n}]", i + 1)));
        }
        if s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad(format!("set {} is not strictly ascending", i + 1)));
        }
    }
    let sets = lists
        .iter()
        .map(|s| KSet::new(n, s))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| bad(e.to_string()))?;
    if sets.windows(2).any(|w| w[0] >= w[1]) {
        return Err(bad("sets are not in strictly ascending order".to_string()));
    }
    Family::new(n, sets).map_err(|e| bad(e.to_string()))
}

/// Parses certificate JSON, reporting the line and field of any defect.
pub fn parse_certificate(text: &str) -> Result<(Certificate, Family, Option<Family>)> {
    let c: Certificate =
        serde_json::from_str(text).map_err(|e| Error::parse(e.line().max(1), e.to_string()))?;
    if c.n == 0 || c.n > setfam_sets::MAX_N {
        return Err(Error::parse(
            line_of(text, "n"),
            format!("n: {} outside [1, {}]", c.n, setfam_sets::MAX_N),
        ));
    }
    let f = family(text, "family_f", c.n, &c.family_f)?;
    let g = c
        .family_g
        .as_ref()
        .map(|g| family(text, "family_g", c.n, g))
        .transpose()?;
    Ok((c, f, g))
}

/// Checks a certificate's hypotheses and compares it with the bound.
pub fn check_certificate(text: &str) -> Result<CertificateReport> {
    let (c, f, g) = parse_certificate(text)?;
    let id: TheoremId = c
        .theorem
        .parse()
        .map_err(|e: Error| Error::parse(line_of(text, "theorem"), format!("theorem: {e}")))?;
    let s = spec(id);
    let mut p = Params::new(c.n, c.k, c.t);
    p.r = c.r;
    p.l = c.l;
    if let (Some(a), Some(b)) = (c.x1, c.x2) {
        p = p.with_pair(a, b);
    }
    let a = s.assess(&p, &f, g.as_ref())?;
    let verdict = if !a.failed.is_empty() {
        CertVerdict::HypothesisFailed
    } else {
        match (s.direction, a.relation) {
            (_, Relation::Attains) => CertVerdict::Attains,
            (Direction::Upper, Relation::Below) => CertVerdict::Below,
            (Direction::Lower, Relation::Above) => CertVerdict::Above,
            _ => CertVerdict::Violates,
        }
    };
    let small = |v: &setfam_sets::BigCount| num_traits::ToPrimitive::to_u64(v).unwrap_or(u64::MAX);
    Ok(CertificateReport {
        theorem: id,
        n: c.n,
        k: c.k,
        t: c.t,
        verdict,
        value: small(&a.value),
        bound: small(&a.bound),
        failed: a.failed,
    })
}

/// Certificate JSON for a configuration.
pub fn certificate_json(id: TheoremId, p: &Params, f: &Family, g: Option<&Family>) -> String {
    let c = Certificate {
        n: p.n,
        k: p.k,
        t: p.t,
        theorem: id.name().to_string(),
        family_f: f.to_label_lists(),
        family_g: g.map(Family::to_label_lists),
        r: p.r,
        l: p.l,
        x1: p.pair.map(|x| x.0),
        x2: p.pair.map(|x| x.1),
    };
    serde_json::to_string_pretty(&c).expect("certificates serialise")
}
