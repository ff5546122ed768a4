use std::fmt;
use std::str::FromStr;

use setfam_family::Family;
use setfam_sets::{ksubsets, Error, KSet, Result};

/// The auxiliary families used by the k = 3, 4 case analyses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AppendixId {
    /// `{{1,2,i}} + {2-sets meeting {1,2}}` (mixed 3- and 2-sets)
    A,
    /// `{{1,i} : i in [2,n]}`
    B,
    /// `{[3] + {i}} + {3-sets meeting [3]}`
    C,
    /// `{{1,2,i}} + {3-sets meeting {1,2}}`
    P,
    /// full star of 3-sets at 1
    Q,
    /// `{A in C([n],3) : {x1,x2} in A}`
    R,
}

impl AppendixId {
    pub const ALL: [AppendixId; 6] = [
        AppendixId::A,
        AppendixId::B,
        AppendixId::C,
        AppendixId::P,
        AppendixId::Q,
        AppendixId::R,
    ];

    fn min_n(self) -> usize {
        match self {
            AppendixId::A | AppendixId::P | AppendixId::Q | AppendixId::R => 3,
            AppendixId::B => 2,
            AppendixId::C => 4,
        }
    }
}

impl fmt::Display for AppendixId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AppendixId::A => "A",
            AppendixId::B => "B",
            AppendixId::C => "C",
            AppendixId::P => "P",
            AppendixId::Q => "Q",
            AppendixId::R => "R",
        };
        f.write_str(s)
    }
}

impl FromStr for AppendixId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AppendixId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::param(format!("unknown appendix family `{s}`")))
    }
}

fn core_plus_one(n: usize, core: KSet) -> impl Iterator<Item = KSet> {
    let m = core.len();
    (m + 1..=n).map(move |i| core.with(i))
}

/// Builds an appendix family. `pair` supplies `(x1, x2)` for `R` and is
/// ignored otherwise; it defaults to `(1, 2)`.
pub fn appendix_family(id: AppendixId, n: usize, pair: Option<(usize, usize)>) -> Result<Family> {
    if n < id.min_n() || n > 64 {
        return Err(Error::param(format!(
            "family {id} needs n >= {}",
            id.min_n()
        )));
    }
    let meets = |k: usize, core: KSet| -> Result<Vec<KSet>> {
        Ok(ksubsets(n, k)?.filter(|s| s.meets(&core)).collect())
    };
    match id {
        AppendixId::A => {
            let c = KSet::interval(n, 1, 2)?;
            let mut v: Vec<KSet> = core_plus_one(n, c).collect();
            v.extend(meets(2, c)?);
            Family::new(n, v)
        }
        AppendixId::B => Family::uniform(n, 2, (2..=n).map(|i| KSet::new(n, &[1, i]).unwrap())),
        AppendixId::C => {
            let c = KSet::interval(n, 1, 3)?;
            let mut v: Vec<KSet> = core_plus_one(n, c).collect();
            v.extend(meets(3, c)?);
            Family::new(n, v)
        }
        AppendixId::P => {
            let c = KSet::interval(n, 1, 2)?;
            let mut v: Vec<KSet> = core_plus_one(n, c).collect();
            v.extend(meets(3, c)?);
            Family::uniform(n, 3, v)
        }
        AppendixId::Q => Family::filter_ksubsets(n, 3, |s| s.contains(1)),
        AppendixId::R => {
            let (x1, x2) = pair.unwrap_or((1, 2));
            if x1 == x2 {
                return Err(Error::param("R needs x1 != x2"));
            }
            let p = KSet::new(n, &[x1, x2])?;
            Family::filter_ksubsets(n, 3, |s| p.is_subset(s))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let b = appendix_family(AppendixId::B, 5, None).unwrap();
        assert_eq!(
            b.to_label_lists(),
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![1, 5]]
        );
        assert_eq!(appendix_family(AppendixId::A, 6, None).unwrap().len(), 13);
        let q = appendix_family(AppendixId::Q, 6, None).unwrap();
        assert_eq!(q.len(), 10);
        assert_eq!(
            appendix_family(AppendixId::R, 7, Some((3, 5)))
                .unwrap()
                .len(),
            5
        );
        assert!(appendix_family(AppendixId::R, 7, Some((3, 3))).is_err());
        assert!(appendix_family(AppendixId::C, 3, None).is_err());
    }

    #[test]
    fn parse_ids() {
        assert_eq!("c".parse::<AppendixId>().unwrap(), AppendixId::C);
        assert!("Z".parse::<AppendixId>().is_err());
    }
}
