//! Plain-text family format:
//!
//! ```text
//! # comment
//! n=5
//! 1,2
//! 1,3
//! ```
//!
//! One member per line, labels ascending and comma-separated. The empty
//! set is written `{}` so that it survives the blank-line rule.

use std::collections::HashSet;
use std::fmt;

use setfam_sets::{Error, KSet, Result};

use crate::Family;

pub fn write_family(f: &Family) -> String {
    let mut out = format!("n={}\n", f.ground_n());
    for s in f {
        if s.is_empty() {
            out.push_str("{}");
        } else {
            let labels: Vec<String> = s.labels().iter().map(|x| x.to_string()).collect();
            out.push_str(&labels.join(","));
        }
        out.push('\n');
    }
    out
}

pub fn parse_family(text: &str) -> Result<Family> {
    let mut n: Option<usize> = None;
    let mut sets = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(ground) = n else {
            let v = line
                .strip_prefix("n=")
                .ok_or_else(|| Error::parse(line_no, "expected header `n=<int>`"))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad ground size `{v}`")))?;
            if v == 0 || v > setfam_sets::MAX_N {
                return Err(Error::parse(
                    line_no,
                    format!("ground size {v} outside [1, 64]"),
                ));
            }
            n = Some(v);
            continue;
        };
        let set = if line == "{}" {
            KSet::empty(ground)?
        } else {
            let mut labels = Vec::new();
            for tok in line.split(',') {
                let tok = tok.trim();
                let x: usize = tok
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad label `{tok}`")))?;
                if labels.last().is_some_and(|&p| p >= x) {
                    return Err(Error::parse(line_no, "labels must be strictly ascending"));
                }
                labels.push(x);
            }
            KSet::new(ground, &labels).map_err(|e| Error::parse(line_no, e.to_string()))?
        };
        if !seen.insert(set) {
            return Err(Error::parse(line_no, format!("duplicate set {set}")));
        }
        sets.push(set);
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing header `n=<int>`"))?;
    Family::new(n, sets)
}

/// One-line rendering, e.g. `{1,2} {1,3}`.
impl fmt::Display for Family {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, set) in self.iter().enumerate() {
            if i > 0 {
                write!(out, " ")?;
            }
            write!(out, "{set}")?;
        }
        Ok(())
    }
}
