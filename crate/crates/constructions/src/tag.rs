use std::fmt;
use std::str::FromStr;

use setfam_family::Family;
use setfam_sets::{Error, Result};

use crate::appendix::{appendix_family, AppendixId};
use crate::named::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionTag {
    FullStar,
    Hm,
    T3,
    J,
    G,
    K2,
    Triple,
    FranklSunflower,
    Appendix(AppendixId),
}

impl ConstructionTag {
    pub fn all() -> Vec<ConstructionTag> {
        use ConstructionTag::*;
        let mut v = vec![FullStar, Hm, T3, J, G, K2, Triple, FranklSunflower];
        v.extend(AppendixId::ALL.into_iter().map(Appendix));
        v
    }
}

impl fmt::Display for ConstructionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionTag::FullStar => f.write_str("FULL_STAR"),
            ConstructionTag::Hm => f.write_str("HM"),
            ConstructionTag::T3 => f.write_str("T3"),
            ConstructionTag::J => f.write_str("J"),
            ConstructionTag::G => f.write_str("G"),
            ConstructionTag::K2 => f.write_str("K2"),
            ConstructionTag::Triple => f.write_str("TRIPLE"),
            ConstructionTag::FranklSunflower => f.write_str("FRANKL_SUNFLOWER"),
            ConstructionTag::Appendix(id) => write!(f, "APPENDIX_{id}"),
        }
    }
}

impl FromStr for ConstructionTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.to_ascii_uppercase().replace('-', "_");
        ConstructionTag::all()
            .into_iter()
            .find(|t| t.to_string() == up)
            .ok_or_else(|| Error::param(format!("unknown construction `{s}`")))
    }
}

/// Free choices for [`build`]; unset fields fall back to the canonical
/// defaults of each construction.
#[derive(Clone, Debug, Default)]
pub struct ConstructionParams {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    /// index `i` of `J_i` / `G_i`
    pub i: Option<usize>,
    /// star centre
    pub x: Option<usize>,
    /// sunflower core size; defaults to `k + t - 1`
    pub core: Option<usize>,
    /// `(x1, x2)` for appendix family R
    pub pair: Option<(usize, usize)>,
}

/// A family, or a cross-intersecting pair `(F, G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub tag: ConstructionTag,
    pub f: Family,
    pub g: Option<Family>,
}

pub fn build(tag: ConstructionTag, p: &ConstructionParams) -> Result<Construction> {
    let single = |f: Family| Construction { tag, f, g: None };
    let need_i = || {
        p.i.ok_or_else(|| Error::param(format!("{tag} needs an index i")))
    };
    Ok(match tag {
        ConstructionTag::FullStar => single(full_star(p.n, p.k, p.x.unwrap_or(1))?),
        ConstructionTag::Hm => single(hm_family(p.n, p.k)?),
        ConstructionTag::T3 => {
            if p.k != 3 && p.k != 0 {
                return Err(Error::param("T3 is 3-uniform"));
            }
            single(t3_family(p.n)?)
        }
        ConstructionTag::J => single(j_family_default(p.n, p.k, need_i()?)?),
        ConstructionTag::G => single(g_family_default(p.n, p.k, need_i()?)?),
        ConstructionTag::K2 => single(k2_family_default(p.n, p.k)?),
        ConstructionTag::Triple => {
            let (f, g) = triple_family(p.n, p.k, p.t)?;
            Construction { tag, f, g: Some(g) }
        }
        ConstructionTag::FranklSunflower => {
            let core = p.core.unwrap_or((p.k + p.t).saturating_sub(1));
            let (f, g) = sunflower_family(p.n, p.k, p.t, core)?;
            Construction { tag, f, g: Some(g) }
        }
        ConstructionTag::Appendix(id) => single(appendix_family(id, p.n, p.pair)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_round_trip() {
        for t in ConstructionTag::all() {
            assert_eq!(t.to_string().parse::<ConstructionTag>().unwrap(), t);
        }
        assert_eq!(
            "appendix-c".parse::<ConstructionTag>().unwrap(),
            ConstructionTag::Appendix(AppendixId::C)
        );
        assert!("nope".parse::<ConstructionTag>().is_err());
    }

    #[test]
    fn build_dispatch() {
        let p = ConstructionParams {
            n: 9,
            k: 4,
            i: Some(3),
            ..Default::default()
        };
        assert_eq!(build(ConstructionTag::J, &p).unwrap().f.len(), 50);
        assert_eq!(build(ConstructionTag::K2, &p).unwrap().f.len(), 50);
        let pair = build(
            ConstructionTag::FranklSunflower,
            &ConstructionParams {
                n: 7,
                k: 2,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(pair.f.len(), 6);
        assert!(build(
            ConstructionTag::G,
            &ConstructionParams {
                n: 9,
                k: 4,
                ..Default::default()
            }
        )
        .is_err());
    }
}
