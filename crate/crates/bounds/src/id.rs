use std::fmt;
use std::str::FromStr;

use setfam_sets::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// cross-intersecting k-uniform pair, `|G| >= |F| >= 1`
    Mainh,
    /// `(t+1)`-intersecting `F`, `|F| >= 1`
    F16,
    /// `(t+1)`-intersecting `F`, `|F| >= 2`
    W23,
    /// `(t+1)`-intersecting `F`, `|F| >= 3`
    Main51,
    /// intersecting, not EKR
    HmStab,
    /// intersecting, neither EKR nor HM
    HkStab,
    /// next level for `2k+1 <= n <= 3k-3`
    HpStabI,
    /// next level for `n >= 3k-2`
    HpStabII,
    /// k-uniform pair, `|G| >= |F| >= 2`
    W231,
    /// k-uniform pair, `|G| >= |F| >= 3`
    W232,
    /// lower bound on the disjointness family
    Fm,
    /// both members of the pair non-trivial
    F24,
    HK31,
    HK32,
    PR3,
    HP51,
    PR5,
    LEM52,
}

impl TheoremId {
    pub const ALL: [TheoremId; 18] = [
        TheoremId::Mainh,
        TheoremId::F16,
        TheoremId::W23,
        TheoremId::Main51,
        TheoremId::HmStab,
        TheoremId::HkStab,
        TheoremId::HpStabI,
        TheoremId::HpStabII,
        TheoremId::W231,
        TheoremId::W232,
        TheoremId::Fm,
        TheoremId::F24,
        TheoremId::HK31,
        TheoremId::HK32,
        TheoremId::PR3,
        TheoremId::HP51,
        TheoremId::PR5,
        TheoremId::LEM52,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Mainh => "MAINH",
            TheoremId::F16 => "F16",
            TheoremId::W23 => "W23",
            TheoremId::Main51 => "MAIN51",
            TheoremId::HmStab => "HM_STAB",
            TheoremId::HkStab => "HK_STAB",
            TheoremId::HpStabI => "HP_STAB_I",
            TheoremId::HpStabII => "HP_STAB_II",
            TheoremId::W231 => "W231",
            TheoremId::W232 => "W232",
            TheoremId::Fm => "FM",
            TheoremId::F24 => "F24",
            TheoremId::HK31 => "HK31",
            TheoremId::HK32 => "HK32",
            TheoremId::PR3 => "PR3",
            TheoremId::HP51 => "HP51",
            TheoremId::PR5 => "PR5",
            TheoremId::LEM52 => "LEM52",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase().replace('-', "_");
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name() == up)
            .ok_or_else(|| Error::param(format!("unknown theorem `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.name().parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!(
            "hp-stab-i".parse::<TheoremId>().unwrap(),
            TheoremId::HpStabI
        );
        assert!("MAIN52".parse::<TheoremId>().is_err());
    }
}
