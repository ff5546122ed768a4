use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use setfam_constructions::{
    full_star, g_family_default, hm_family, j_family_default, k2_family_default, sunflower_family,
    t3_family, triple_family, AppendixId,
};
use setfam_family::{
    disjointness_family, is_cross_intersecting, is_ekr, is_shifted, is_t_intersecting,
    max_cross_partner, Family,
};
use setfam_sets::{binomial, BigCount, Error, KSet, Result};

use crate::formula::{Formula, Lin, Term};
use crate::id::TheoremId;
use crate::params::Params;
use crate::structure::{is_hm, is_sub_appendix, is_sub_g, is_sub_j2};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// objective <= bound
    Upper,
    /// objective >= bound
    Lower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    /// `|F| + |G|`
    PairSum,
    /// `|F|`
    Single,
    /// `|D_l(F)|`
    Disjointness,
}

/// A family or pair named by a theorem's equality clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremal {
    pub f: Family,
    pub g: Option<Family>,
}

pub struct CatalogEntry {
    pub name: &'static str,
    pub applies: fn(&Params) -> bool,
    pub build: fn(&Params) -> Result<Extremal>,
    /// desk-scale instance used by [`self_check`]
    pub sample: Params,
}

pub struct TheoremSpec {
    pub id: TheoremId,
    pub summary: &'static str,
    /// `(k, t)` forced by the statement
    pub fixed: Option<(usize, usize)>,
    pub uses_t: bool,
    pub direction: Direction,
    pub objective: Objective,
    pub formula: Formula,
    pub param_domain: fn(&Params) -> Result<()>,
    pub hypothesis: fn(&Params, &Family, Option<&Family>) -> Result<Vec<String>>,
    pub equality_regime: fn(&Params) -> bool,
    pub equality: &'static str,
    pub catalog: Vec<CatalogEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Attains,
    Below,
    Above,
}

/// Outcome of evaluating a concrete family or pair against a theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assessment {
    pub value: BigCount,
    pub bound: BigCount,
    pub relation: Relation,
    pub failed: Vec<String>,
}

impl Assessment {
    /// The hypotheses hold and the inequality fails.
    pub fn violates(&self, dir: Direction) -> bool {
        self.failed.is_empty()
            && matches!(
                (dir, self.relation),
                (Direction::Upper, Relation::Above) | (Direction::Lower, Relation::Below)
            )
    }
}

impl TheoremSpec {
    /// Fills in forced `k`, `t` when the caller left them at 0.
    pub fn normalize(&self, mut p: Params) -> Params {
        if let Some((k, t)) = self.fixed {
            if p.k == 0 {
                p.k = k;
                p.t = t;
            }
        }
        p
    }

    pub fn check_domain(&self, p: &Params) -> Result<()> {
        if let Some((k, t)) = self.fixed {
            if p.k != k || p.t != t {
                return Err(Error::domain(format!(
                    "{} is stated for k={k}, t={t}",
                    self.id
                )));
            }
        } else if !self.uses_t && p.t != 0 {
            return Err(Error::domain(format!("{} takes no t (need t=0)", self.id)));
        }
        (self.param_domain)(p)
    }

    pub fn bound(&self, p: &Params) -> Result<BigCount> {
        self.check_domain(p)?;
        let v = self.formula.eval(p);
        v.to_biguint()
            .ok_or_else(|| Error::domain(format!("{} evaluates negative ({v}) at {p:?}", self.id)))
    }

    pub fn objective_value(&self, p: &Params, f: &Family, g: Option<&Family>) -> Result<BigCount> {
        Ok(match self.objective {
            Objective::Single => BigUint::from(f.len()),
            Objective::PairSum => {
                let g =
                    g.ok_or_else(|| Error::param(format!("{} needs a pair (F, G)", self.id)))?;
                BigUint::from(f.len() + g.len())
            }
            Objective::Disjointness => {
                let l = p.l.ok_or_else(|| Error::param("FM needs l"))?;
                BigUint::from(disjointness_family(f, l)?.len())
            }
        })
    }

    pub fn assess(&self, p: &Params, f: &Family, g: Option<&Family>) -> Result<Assessment> {
        let bound = self.bound(p)?;
        let mut failed = Vec::new();
        if f.ground_n() != p.n || g.is_some_and(|g| g.ground_n() != p.n) {
            failed.push(format!("families must live on [{}]", p.n));
        } else if self.objective == Objective::PairSum && g.is_none() {
            failed.push("a second family G is required".to_string());
        } else {
            failed = (self.hypothesis)(p, f, g)?;
        }
        let value = self.objective_value(p, f, g).unwrap_or_default();
        let relation = match value.cmp(&bound) {
            std::cmp::Ordering::Equal => Relation::Attains,
            std::cmp::Ordering::Less => Relation::Below,
            std::cmp::Ordering::Greater => Relation::Above,
        };
        Ok(Assessment {
            value,
            bound,
            relation,
            failed,
        })
    }
}

// ---------------------------------------------------------------- formulas

const fn lin(n: i64, k: i64, t: i64, c: i64) -> Lin {
    Lin::nk(n, k, t, c)
}

const fn c(coef: i64, top: Lin, bot: Lin) -> Term {
    Term { coef, top, bot }
}

const N: Lin = lin(1, 0, 0, 0);
const K: Lin = lin(0, 1, 0, 0);

fn formula(terms: Vec<Term>, constant: i64) -> Formula {
    Formula { terms, constant }
}

/// `C(n,k) - C(n-k-t,k) - ... ` with `depth` correction terms.
fn cross_formula(depth: i64, t: i64) -> Formula {
    let mut terms = vec![c(1, N, K)];
    for d in 0..depth {
        terms.push(c(-1, lin(1, -1, -t, -d), lin(0, 1, 0, -d)));
    }
    formula(terms, depth)
}

fn star_formula(depth: i64) -> Formula {
    let mut terms = vec![c(1, lin(1, 0, 0, -1), lin(0, 1, 0, -1))];
    for d in 0..depth {
        terms.push(c(-1, lin(1, -1, 0, -1 - d), lin(0, 1, 0, -1 - d)));
    }
    formula(terms, depth)
}

fn fixed_formula(k: i64, tops: &[i64], bots: &[i64], constant: i64) -> Formula {
    let mut terms = vec![c(1, N, Lin::konst(k))];
    for (&a, &b) in tops.iter().zip(bots) {
        terms.push(c(-1, lin(1, 0, 0, -a), Lin::konst(b)));
    }
    formula(terms, constant)
}

// ---------------------------------------------------------------- domains

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::domain(msg.to_string()))
    }
}

// ---------------------------------------------------------------- hypotheses

#[derive(Default)]
struct Hyp(Vec<String>);

impl Hyp {
    fn req(&mut self, cond: bool, msg: impl Into<String>) -> &mut Self {
        if !cond {
            self.0.push(msg.into());
        }
        self
    }

    fn done(&mut self) -> Result<Vec<String>> {
        Ok(std::mem::take(&mut self.0))
    }
}

fn uniform_of(f: &Family, k: usize) -> bool {
    f.iter().all(|s| s.len() == k)
}

fn pair_of(g: Option<&Family>) -> Result<&Family> {
    g.ok_or_else(|| Error::param("a second family G is required"))
}

fn cross_pair_hyp(p: &Params, f: &Family, g: Option<&Family>, min_f: usize) -> Result<Vec<String>> {
    let g = pair_of(g)?;
    let mut h = Hyp::default();
    h.req(
        uniform_of(f, p.k + p.t),
        format!("F must be {}-uniform", p.k + p.t),
    )
    .req(uniform_of(g, p.k), format!("G must be {}-uniform", p.k))
    .req(
        is_cross_intersecting(f, g)?,
        "F and G are not cross-intersecting",
    )
    .req(
        is_t_intersecting(f, p.t + 1),
        format!("F is not {}-intersecting", p.t + 1),
    )
    .req(f.len() >= min_f, format!("|F| < {min_f}"));
    h.done()
}

fn same_k_pair_hyp(p: &Params, f: &Family, g: &Family, h: &mut Hyp) -> Result<()> {
    h.req(uniform_of(f, p.k), format!("F must be {}-uniform", p.k))
        .req(uniform_of(g, p.k), format!("G must be {}-uniform", p.k))
        .req(
            is_cross_intersecting(f, g)?,
            "F and G are not cross-intersecting",
        );
    Ok(())
}

fn ordered_pair_hyp(
    p: &Params,
    f: &Family,
    g: Option<&Family>,
    min_f: usize,
) -> Result<Vec<String>> {
    let g = pair_of(g)?;
    let mut h = Hyp::default();
    same_k_pair_hyp(p, f, g, &mut h)?;
    h.req(g.len() >= f.len(), "|G| < |F|")
        .req(f.len() >= min_f, format!("|F| < {min_f}"));
    h.done()
}

/// Intersecting, non-EKR, and (from `level` 1) not HM and so on.
fn stability_hyp(p: &Params, f: &Family, level: usize) -> Result<Vec<String>> {
    let mut h = Hyp::default();
    h.req(uniform_of(f, p.k), format!("F must be {}-uniform", p.k))
        .req(is_t_intersecting(f, 1), "F is not intersecting")
        .req(!is_ekr(f), "F is EKR");
    if !h.0.is_empty() {
        return h.done();
    }
    if level >= 1 {
        h.req(!is_hm(f)?, "F is HM");
        if level == 1 && p.k == 3 {
            h.req(!is_sub_g(f, 2)?, "F is contained in a copy of G_2(n,3)");
        }
    }
    if level >= 2 {
        h.req(!is_sub_j2(f)?, "F is contained in a copy of J_2(n,k)");
        if p.k == 4 {
            h.req(!is_sub_g(f, 2)?, "F is contained in a copy of G_2(n,4)")
                .req(!is_sub_g(f, 3)?, "F is contained in a copy of G_3(n,4)");
        }
    }
    h.done()
}

fn union_avoids(f: &Family, g: &Family, id: AppendixId, h: &mut Hyp) -> Result<()> {
    let u = f.union(g)?;
    h.req(
        !is_sub_appendix(&u, id)?,
        format!("F + G is contained in a copy of family {id}"),
    );
    Ok(())
}

fn hyp_mainh(p: &Params, f: &Family, g: Option<&Family>) -> Result<Vec<String>> {
    let g = pair_of(g)?;
    let mut h = Hyp::default();
    same_k_pair_hyp(p, f, g, &mut h)?;
    h.req(!f.is_empty() && !g.is_empty(), "F and G must be non-empty")
        .req(g.len() >= f.len(), "|G| < |F|");
    h.done()
}

fn hyp_fm(p: &Params, f: &Family, _g: Option<&Family>) -> Result<Vec<String>> {
    let r = p.r.unwrap_or(0);
    let want = binomial(p.n as i64 - r as i64, p.k as i64 - r as i64);
    let mut h = Hyp::default();
    h.req(uniform_of(f, p.k), format!("F must be {}-uniform", p.k))
        .req(
            BigUint::from(f.len()) == want,
            format!("|F| != C(n-r,k-r) = {want}"),
        );
    h.done()
}

fn hyp_f24(p: &Params, f: &Family, g: Option<&Family>) -> Result<Vec<String>> {
    let g = pair_of(g)?;
    let mut h = Hyp::default();
    same_k_pair_hyp(p, f, g, &mut h)?;
    h.req(!f.is_empty() && !is_ekr(f), "F is trivial")
        .req(!g.is_empty() && !is_ekr(g), "G is trivial");
    h.done()
}

fn hyp_hk31(_p: &Params, f: &Family, g: Option<&Family>) -> Result<Vec<String>> {
    let g = pair_of(g)?;
    let mut h = Hyp::default();
    h.req(uniform_of(f, 3), "F must be 3-uniform")
        .req(uniform_of(g, 2), "G must be 2-uniform")
        .req(
            is_cross_intersecting(f, g)?,
            "F and G are not cross-intersecting",
        )
        .req(f.len() >= 2, "|F| < 2")
        .req(is_t_intersecting(f, 2), "F is not 2-intersecting");
    union_avoids(f, g, AppendixId::A, &mut h)?;
    h.done()
}

fn hyp_hk32(p: &Params, f: &Family, g: Option<&Family>) -> Result<Vec<String>> {
    let g = pair_of(g)?;
    let mut h = Hyp::default();
    same_k_pair_hyp(p, f, g, &mut h)?;
    h.req(g.len() >= f.len(), "|G| < |F|")
        .req(f.len() >= 2, "|F| < 2");
    union_avoids(f, g, AppendixId::B, &mut h)?;
    h.done()
}

fn hyp_pr3(p: &Params, f: &Family, g: Option<&Family>) -> Result<Vec<String>> {
    let g = pair_of(g)?;
    let mut h = Hyp::default();
    same_k_pair_hyp(p, f, g, &mut h)?;
    h.req(f.intersection(g)?.len() <= 1, "|F & G| > 1")
        .req(f.len() >= 2, "|F| < 2")
        .req(g.len() >= 2, "|G| < 2");
    h.done()
}

fn hyp_hp51(_p: &Params, f: &Family, g: Option<&Family>) -> Result<Vec<String>> {
    let g = pair_of(g)?;
    let mut h = Hyp::default();
    h.req(uniform_of(f, 4), "F must be 4-uniform")
        .req(uniform_of(g, 3), "G must be 3-uniform")
        .req(
            is_cross_intersecting(f, g)?,
            "F and G are not cross-intersecting",
        )
        .req(f.len() >= 3, "|F| < 3")
        .req(is_t_intersecting(f, 2), "F is not 2-intersecting")
        .req(is_shifted(f), "F is not shifted")
        .req(is_shifted(g), "G is not shifted");
    union_avoids(f, g, AppendixId::C, &mut h)?;
    h.done()
}

fn hyp_pr5(p: &Params, f: &Family, g: Option<&Family>) -> Result<Vec<String>> {
    let g = pair_of(g)?;
    let mut h = Hyp::default();
    same_k_pair_hyp(p, f, g, &mut h)?;
    h.req(f.intersection(g)?.len() <= 2, "|F & G| > 2")
        .req(f.len() >= 3, "|F| < 3")
        .req(g.len() >= 3, "|G| < 3");
    h.done()
}

/// `R = {A in C([n],3) : {x1,x2} in A}`.
pub fn lem52_core(n: usize, x1: usize, x2: usize) -> Result<Family> {
    let p = KSet::new(n, &[x1, x2])?;
    Family::filter_ksubsets(n, 3, |s| p.is_subset(s))
}

fn hyp_lem52(p: &Params, f: &Family, g: Option<&Family>) -> Result<Vec<String>> {
    let g = pair_of(g)?;
    let (x1, x2) = p.pair.unwrap_or((1, 2));
    let core = KSet::new(p.n, &[x1, x2])?;
    let r = lem52_core(p.n, x1, x2)?;
    let mut h = Hyp::default();
    same_k_pair_hyp(p, f, g, &mut h)?;
    h.req(
        f.iter().chain(g.iter()).all(|s| s.meets(&core)),
        "a member misses {x1, x2}",
    )
    .req(
        r.is_subfamily_of(f) && f.len() > r.len(),
        "R is not a proper subfamily of F",
    )
    .req(
        r.is_subfamily_of(g) && g.len() > r.len(),
        "R is not a proper subfamily of G",
    )
    .req(
        f.difference(&r)?
            .intersection(&g.difference(&r)?)?
            .is_empty(),
        "(F - R) and (G - R) meet",
    );
    h.done()
}

// ---------------------------------------------------------------- catalog builders

fn block(n: usize, lo: usize, hi: usize) -> Result<KSet> {
    if lo > hi {
        KSet::empty(n)
    } else {
        KSet::interval(n, lo, hi)
    }
}

fn with_partner(f: Family, k: usize) -> Result<Extremal> {
    let g = max_cross_partner(&f, k)?;
    Ok(Extremal { f, g: Some(g) })
}

fn single(f: Family) -> Result<Extremal> {
    Ok(Extremal { f, g: None })
}

/// `F = {[k+t]}` with its partner.
pub fn singleton_pair(p: &Params) -> Result<Extremal> {
    let f = Family::uniform(p.n, p.k + p.t, [block(p.n, 1, p.k + p.t)?])?;
    with_partner(f, p.k)
}

/// `F = {[k+t-1] + {k+t}, [k+t-1] + {k+t+1}}` with its partner.
pub fn two_set_pair(p: &Params) -> Result<Extremal> {
    let core = block(p.n, 1, p.k + p.t - 1)?;
    let f = Family::uniform(
        p.n,
        p.k + p.t,
        [core.with(p.k + p.t), core.with(p.k + p.t + 1)],
    )?;
    with_partner(f, p.k)
}

fn triple(p: &Params) -> Result<Extremal> {
    let (f, g) = triple_family(p.n, p.k, p.t)?;
    Ok(Extremal { f, g: Some(g) })
}

fn sunflower(p: &Params) -> Result<Extremal> {
    let (f, g) = sunflower_family(p.n, p.k, p.t, p.k + p.t - 1)?;
    Ok(Extremal { f, g: Some(g) })
}

/// `F = {(t+3)-sets containing [t+1]}`, `G = {3-sets meeting [t+1]}`.
fn thick_star_pair(p: &Params) -> Result<Extremal> {
    let core = block(p.n, 1, p.t + 1)?;
    let f = Family::filter_ksubsets(p.n, p.t + 3, |s| core.is_subset(s))?;
    let g = Family::filter_ksubsets(p.n, 3, |s| s.meets(&core))?;
    Ok(Extremal { f, g: Some(g) })
}

fn equal_stars(p: &Params) -> Result<Extremal> {
    let s = full_star(p.n, p.k, 1)?;
    Ok(Extremal {
        f: s.clone(),
        g: Some(s),
    })
}

fn disjoint_pair(p: &Params) -> Result<Extremal> {
    let f = Family::uniform(
        p.n,
        p.k,
        [block(p.n, 1, p.k)?, block(p.n, p.k + 1, 2 * p.k)?],
    )?;
    with_partner(f, p.k)
}

fn r_star(p: &Params) -> Result<Extremal> {
    let core = block(p.n, 1, p.r.unwrap_or(0))?;
    single(Family::filter_ksubsets(p.n, p.k, |s| core.is_subset(s))?)
}

fn entry(
    name: &'static str,
    applies: fn(&Params) -> bool,
    build: fn(&Params) -> Result<Extremal>,
    sample: Params,
) -> CatalogEntry {
    CatalogEntry {
        name,
        applies,
        build,
        sample,
    }
}

fn always(_: &Params) -> bool {
    true
}

// ---------------------------------------------------------------- registry

fn build_registry() -> Vec<TheoremSpec> {
    use TheoremId::*;
    vec![
        TheoremSpec {
            id: Mainh,
            summary: "F, G in C([n],k) non-empty cross-intersecting with |G| >= |F|: |F|+|G| <= bound",
            fixed: None,
            uses_t: false,
            direction: Direction::Upper,
            objective: Objective::PairSum,
            formula: cross_formula(1, 0),
            param_domain: |p| need(p.k >= 1, "need k >= 1").and(need(p.n >= 2 * p.k, "need n >= 2k")),
            hypothesis: hyp_mainh,
            equality_regime: |p| p.n > 2 * p.k,
            equality: "F = {F1}, G = k-sets meeting F1; or k = 2 and F = G a full star",
            catalog: vec![
                entry("singleton", always, singleton_pair, Params::new(7, 3, 0)),
                entry("equal full stars", |p| p.k == 2, equal_stars, Params::new(5, 2, 0)),
            ],
        },
        TheoremSpec {
            id: F16,
            summary: "F in C([n],k+t) (t+1)-intersecting, G in C([n],k), cross-intersecting, |F| >= 1",
            fixed: None,
            uses_t: true,
            direction: Direction::Upper,
            objective: Objective::PairSum,
            formula: cross_formula(1, 1),
            param_domain: |p| need(p.k >= 1, "need k >= 1").and(need(p.n >= 2 * p.k + p.t, "need n >= 2k+t")),
            hypothesis: |p, f, g| cross_pair_hyp(p, f, g, 1),
            equality_regime: |p| p.n > 2 * p.k + p.t,
            equality: "F = {F1}, G = k-sets meeting F1; or k = 2, F = {[t+1] + {i}}, G = k-sets meeting [t+1]",
            catalog: vec![
                entry("singleton", always, singleton_pair, Params::new(9, 3, 1)),
                entry("sunflower", |p| p.k == 2, sunflower, Params::new(6, 2, 1)),
            ],
        },
        TheoremSpec {
            id: W23,
            summary: "as F16 with |F| >= 2 and k >= 3",
            fixed: None,
            uses_t: true,
            direction: Direction::Upper,
            objective: Objective::PairSum,
            formula: cross_formula(2, 1),
            param_domain: |p| need(p.k >= 3, "need k >= 3").and(need(p.n >= 2 * p.k + p.t, "need n >= 2k+t")),
            hypothesis: |p, f, g| cross_pair_hyp(p, f, g, 2),
            equality_regime: |p| p.n > 2 * p.k + p.t,
            equality: "F = {F1, F2} with |F1 & F2| = k+t-1, G = k-sets meeting both; or k = 3 and \
                       F = {[t+2] + {i}}, G = 3-sets meeting [t+2]; or k = 3 and F = (t+3)-sets containing \
                       [t+1], G = 3-sets meeting [t+1]",
            catalog: vec![
                entry("two sets", always, two_set_pair, Params::new(8, 3, 0)),
                entry("sunflower", |p| p.k == 3, sunflower, Params::new(8, 3, 0)),
                entry("thick star", |p| p.k == 3, thick_star_pair, Params::new(9, 3, 1)),
            ],
        },
        TheoremSpec {
            id: Main51,
            summary: "as F16 with |F| >= 3 and k >= 4",
            fixed: None,
            uses_t: true,
            direction: Direction::Upper,
            objective: Objective::PairSum,
            formula: cross_formula(3, 1),
            param_domain: |p| need(p.k >= 4, "need k >= 4").and(need(p.n >= 2 * p.k + p.t, "need n >= 2k+t")),
            hypothesis: |p, f, g| cross_pair_hyp(p, f, g, 3),
            equality_regime: |p| p.n > 2 * p.k + p.t,
            equality: "F = {[k+t-1] + {k+t-1+i} : i in [3]}, G = k-sets meeting all three; or k = 4 and \
                       F = {[t+3] + {i}}, G = 4-sets meeting [t+3]",
            catalog: vec![
                entry("triple", always, triple, Params::new(9, 4, 0)),
                entry("sunflower", |p| p.k == 4, sunflower, Params::new(9, 4, 0)),
            ],
        },
        TheoremSpec {
            id: HmStab,
            summary: "F in C([n],k) intersecting and not EKR: |F| <= bound",
            fixed: None,
            uses_t: false,
            direction: Direction::Upper,
            objective: Objective::Single,
            formula: star_formula(1),
            param_domain: |p| need(p.k >= 2, "need k >= 2").and(need(p.n > 2 * p.k, "need n >= 2k+1")),
            hypothesis: |p, f, _| stability_hyp(p, f, 0),
            equality_regime: always,
            equality: "F = HM(n,k); or k = 3 and F = T(n,3)",
            catalog: vec![
                entry("HM", always, |p| single(hm_family(p.n, p.k)?), Params::new(7, 3, 0)),
                entry("T3", |p| p.k == 3, |p| single(t3_family(p.n)?), Params::new(7, 3, 0)),
            ],
        },
        TheoremSpec {
            id: HkStab,
            summary: "F intersecting, neither EKR nor HM, and not within G_2(n,3) when k = 3",
            fixed: None,
            uses_t: false,
            direction: Direction::Upper,
            objective: Objective::Single,
            formula: star_formula(2),
            param_domain: |p| need(p.k >= 3, "need k >= 3").and(need(p.n > 2 * p.k, "need n >= 2k+1")),
            hypothesis: |p, f, _| stability_hyp(p, f, 1),
            equality_regime: always,
            equality: "F = J_2(n,k); or k = 4 and F = G_2(n,4) or G_3(n,4)",
            catalog: vec![
                entry("J2", always, |p| single(j_family_default(p.n, p.k, 2)?), Params::new(7, 3, 0)),
                entry("G2", |p| p.k == 4, |p| single(g_family_default(p.n, 4, 2)?), Params::new(9, 4, 0)),
                entry("G3", |p| p.k == 4, |p| single(g_family_default(p.n, 4, 3)?), Params::new(9, 4, 0)),
            ],
        },
        TheoremSpec {
            id: HpStabI,
            summary: "F intersecting, not EKR, not HM, not within J_2 (nor G_2, G_3 when k = 4); 2k+1 <= n <= 3k-3",
            fixed: None,
            uses_t: false,
            direction: Direction::Upper,
            objective: Objective::Single,
            formula: formula(
                vec![
                    c(1, lin(1, 0, 0, -1), lin(0, 1, 0, -1)),
                    c(-2, lin(1, -1, 0, -1), lin(0, 1, 0, -1)),
                    c(1, lin(1, -1, 0, -3), lin(0, 1, 0, -1)),
                ],
                2,
            ),
            param_domain: |p| {
                need(p.k >= 4, "need k >= 4")
                    .and(need(p.n > 2 * p.k, "need n >= 2k+1"))
                    .and(need(p.n + 3 <= 3 * p.k, "need n <= 3k-3"))
            },
            hypothesis: |p, f, _| stability_hyp(p, f, 2),
            equality_regime: always,
            equality: "F = K_2(n,k); or k = 4 and F = J_3(n,4)",
            catalog: vec![
                entry("K2", always, |p| single(k2_family_default(p.n, p.k)?), Params::new(9, 4, 0)),
                entry("J3", |p| p.k == 4, |p| single(j_family_default(p.n, 4, 3)?), Params::new(9, 4, 0)),
            ],
        },
        TheoremSpec {
            id: HpStabII,
            summary: "as HP_STAB_I for n >= 3k-2",
            fixed: None,
            uses_t: false,
            direction: Direction::Upper,
            objective: Objective::Single,
            formula: star_formula(3),
            param_domain: |p| need(p.k >= 4, "need k >= 4").and(need(p.n + 2 >= 3 * p.k, "need n >= 3k-2")),
            hypothesis: |p, f, _| stability_hyp(p, f, 2),
            equality_regime: always,
            equality: "F = J_3(n,k); or k = 5 and F = G_4(n,5)",
            catalog: vec![
                entry("J3", always, |p| single(j_family_default(p.n, p.k, 3)?), Params::new(10, 4, 0)),
                entry("G4", |p| p.k == 5, |p| single(g_family_default(p.n, 5, 4)?), Params::new(13, 5, 0)),
            ],
        },
        TheoremSpec {
            id: W231,
            summary: "F, G in C([n],k) cross-intersecting, |G| >= |F| >= 2",
            fixed: None,
            uses_t: false,
            direction: Direction::Upper,
            objective: Objective::PairSum,
            formula: cross_formula(2, 0),
            param_domain: |p| need(p.k >= 3, "need k >= 3").and(need(p.n >= 2 * p.k, "need n >= 2k")),
            hypothesis: |p, f, g| ordered_pair_hyp(p, f, g, 2),
            equality_regime: |p| p.n > 2 * p.k,
            equality: "F = {F1, F2} with |F1 & F2| = k-1, G = k-sets meeting both; or k = 3 and \
                       F = {[2] + {i}}, G = 3-sets meeting [2]; or k = 3 and F = G a full star",
            catalog: vec![
                entry("two sets", always, two_set_pair, Params::new(7, 3, 0)),
                entry(
                    "sunflower",
                    |p| p.k == 3,
                    |p| {
                        let (f, g) = sunflower_family(p.n, 3, 0, 2)?;
                        Ok(Extremal { f, g: Some(g) })
                    },
                    Params::new(7, 3, 0),
                ),
                entry("equal full stars", |p| p.k == 3, equal_stars, Params::new(7, 3, 0)),
            ],
        },
        TheoremSpec {
            id: W232,
            summary: "F, G in C([n],k) cross-intersecting, |G| >= |F| >= 3",
            fixed: None,
            uses_t: false,
            direction: Direction::Upper,
            objective: Objective::PairSum,
            formula: cross_formula(3, 0),
            param_domain: |p| need(p.k >= 4, "need k >= 4").and(need(p.n >= 2 * p.k, "need n >= 2k")),
            hypothesis: |p, f, g| ordered_pair_hyp(p, f, g, 3),
            equality_regime: |p| p.n > 2 * p.k,
            equality: "F = {[k-1] + {k-1+i} : i in [3]}, G = k-sets meeting all three; or k = 4 and \
                       F = {[3] + {i}}, G = 4-sets meeting [3]",
            catalog: vec![
                entry("triple", always, triple, Params::new(9, 4, 0)),
                entry("sunflower", |p| p.k == 4, sunflower, Params::new(9, 4, 0)),
            ],
        },
        TheoremSpec {
            id: Fm,
            summary: "F in C([n],k) with |F| = C(n-r,k-r): |D_l(F)| >= C(n-r,l)",
            fixed: None,
            uses_t: false,
            direction: Direction::Lower,
            objective: Objective::Disjointness,
            formula: formula(vec![c(1, Lin { n: 1, k: 0, t: 0, r: -1, l: 0, c: 0 }, Lin { n: 0, k: 0, t: 0, r: 0, l: 1, c: 0 })], 0),
            param_domain: |p| match (p.r, p.l) {
                (Some(r), Some(l)) => need(l >= 1, "need l >= 1")
                    .and(need(p.n > p.k + l, "need n > k+l"))
                    .and(need(r <= p.k, "need r <= k")),
                _ => Err(Error::domain("FM needs r and l")),
            },
            hypothesis: hyp_fm,
            equality_regime: always,
            equality: "F = k-sets containing a fixed r-set R",
            catalog: vec![entry("R-star", always, r_star, Params::new(7, 3, 0).with_rl(1, 3))],
        },
        TheoremSpec {
            id: F24,
            summary: "F, G in C([n],k) non-trivial cross-intersecting",
            fixed: None,
            uses_t: false,
            direction: Direction::Upper,
            objective: Objective::PairSum,
            formula: formula(
                vec![c(1, N, K), c(-2, lin(1, -1, 0, 0), K), c(1, lin(1, -2, 0, 0), K)],
                2,
            ),
            param_domain: |p| need(p.k >= 2, "need 2k+1 >= 5").and(need(p.n > 2 * p.k, "need n >= 2k+1")),
            hypothesis: hyp_f24,
            equality_regime: |p| p.k >= 3,
            equality: "k >= 3: F = {F1, F2} disjoint, G = k-sets meeting both",
            catalog: vec![entry("disjoint pair", always, disjoint_pair, Params::new(7, 3, 0))],
        },
        TheoremSpec {
            id: HK31,
            summary: "F in C([n],3) 2-intersecting, |F| >= 2, G in C([n],2), cross-intersecting, F + G not within A",
            fixed: Some((2, 1)),
            uses_t: true,
            direction: Direction::Upper,
            objective: Objective::PairSum,
            formula: fixed_formula(2, &[3, 4], &[2, 1], 2),
            param_domain: |p| need(p.n >= 6, "need n >= 6"),
            hypothesis: hyp_hk31,
            equality_regime: always,
            equality: "F = {F1, F2} with |F1 & F2| = 2, G = 2-sets meeting both",
            catalog: vec![entry("two sets", always, two_set_pair, Params::new(6, 2, 1))],
        },
        TheoremSpec {
            id: HK32,
            summary: "F, G in C([n],2) cross-intersecting, |G| >= |F| >= 2, F + G not within B",
            fixed: Some((2, 0)),
            uses_t: false,
            direction: Direction::Upper,
            objective: Objective::PairSum,
            formula: fixed_formula(2, &[2, 3], &[2, 1], 2),
            param_domain: |p| need(p.n >= 4, "need n >= 4"),
            hypothesis: hyp_hk32,
            equality_regime: |p| p.n >= 5,
            equality: "F = {F1, F2} with |F1 & F2| = 1, G = 2-sets meeting both",
            catalog: vec![entry("two sets", always, two_set_pair, Params::new(5, 2, 0))],
        },
        TheoremSpec {
            id: PR3,
            summary: "F, G in C([n],2) cross-intersecting, |F & G| <= 1, |F|, |G| >= 2",
            fixed: Some((2, 0)),
            uses_t: false,
            direction: Direction::Upper,
            objective: Objective::PairSum,
            formula: fixed_formula(2, &[2, 3], &[2, 1], 1),
            param_domain: |p| need(p.n >= 5, "need n >= 5"),
            hypothesis: hyp_pr3,
            equality_regime: |_| false,
            equality: "no equality characterization",
            catalog: vec![],
        },
        TheoremSpec {
            id: HP51,
            summary: "F in C([n],4) 2-intersecting, |F| >= 3, G in C([n],3), both shifted, cross-intersecting, F + G not within C",
            fixed: Some((3, 1)),
            uses_t: true,
            direction: Direction::Upper,
            objective: Objective::PairSum,
            formula: fixed_formula(3, &[4, 5, 6], &[3, 2, 1], 3),
            param_domain: |p| need(p.n >= 7, "need n >= 7"),
            hypothesis: hyp_hp51,
            equality_regime: |p| p.n >= 8,
            equality: "F = {[3] + {3+i} : i in [3]}, G = 3-sets meeting all three",
            catalog: vec![entry("triple", always, triple, Params::new(8, 3, 1))],
        },
        TheoremSpec {
            id: PR5,
            summary: "F, G in C([n],3) non-empty cross-intersecting, |F & G| <= 2, |F|, |G| >= 3",
            fixed: Some((3, 0)),
            uses_t: false,
            direction: Direction::Upper,
            objective: Objective::PairSum,
            formula: fixed_formula(3, &[3, 4, 5], &[3, 2, 1], 2),
            param_domain: |p| need(p.n >= 7, "need n >= 7"),
            hypothesis: hyp_pr5,
            equality_regime: |_| false,
            equality: "no equality characterization",
            catalog: vec![],
        },
        TheoremSpec {
            id: LEM52,
            summary: "F, G within 3-sets meeting {x1,x2}, cross-intersecting, R proper in both, (F-R) & (G-R) empty",
            fixed: Some((3, 0)),
            uses_t: false,
            direction: Direction::Upper,
            objective: Objective::PairSum,
            formula: fixed_formula(3, &[3, 4, 5], &[3, 2, 1], 2),
            param_domain: |p| {
                need(p.n >= 7, "need n >= 7")?;
                let (x1, x2) = p.pair.unwrap_or((1, 2));
                need(x1 != x2 && (1..=p.n).contains(&x1) && (1..=p.n).contains(&x2), "need distinct x1, x2 in [n]")
            },
            hypothesis: hyp_lem52,
            equality_regime: |_| false,
            equality: "no equality characterization",
            catalog: vec![],
        },
    ]
}

/// Every registered statement, in [`TheoremId::ALL`] order.
pub fn registry() -> &'static [TheoremSpec] {
    static REG: OnceLock<Vec<TheoremSpec>> = OnceLock::new();
    REG.get_or_init(build_registry)
}

pub fn spec(id: TheoremId) -> &'static TheoremSpec {
    registry()
        .iter()
        .find(|s| s.id == id)
        .expect("every id is registered")
}

pub fn bound_value(id: TheoremId, p: &Params) -> Result<BigCount> {
    spec(id).bound(p)
}

/// Catalog members that apply at `p`, built. Empty outside the equality regime.
pub fn extremal_catalog(id: TheoremId, p: &Params) -> Result<Vec<(&'static str, Extremal)>> {
    let s = spec(id);
    s.check_domain(p)?;
    if !(s.equality_regime)(p) {
        return Ok(Vec::new());
    }
    s.catalog
        .iter()
        .filter(|e| (e.applies)(p))
        .map(|e| Ok((e.name, (e.build)(p)?)))
        .collect()
}

/// One line per catalog entry; `Err` lists the failures.
pub fn self_check() -> std::result::Result<Vec<String>, Vec<String>> {
    let mut ok = Vec::new();
    let mut bad = Vec::new();
    for s in registry() {
        for e in &s.catalog {
            let p = e.sample;
            let line =
                |msg: String| format!("{} / {} at {:?}: {msg}", s.id, e.name, (p.n, p.k, p.t));
            let res = (|| -> Result<String> {
                if !(s.equality_regime)(&p) || !(e.applies)(&p) {
                    return Err(Error::domain("sample outside the entry's regime"));
                }
                let ex = (e.build)(&p)?;
                let a = s.assess(&p, &ex.f, ex.g.as_ref())?;
                if !a.failed.is_empty() {
                    return Err(Error::domain(format!(
                        "hypothesis failed: {}",
                        a.failed.join("; ")
                    )));
                }
                if a.relation != Relation::Attains {
                    return Err(Error::domain(format!(
                        "value {} != bound {}",
                        a.value, a.bound
                    )));
                }
                Ok(format!("attains {}", a.bound))
            })();
            match res {
                Ok(m) => ok.push(line(m)),
                Err(err) => bad.push(line(err.to_string())),
            }
        }
    }
    if bad.is_empty() {
        Ok(ok)
    } else {
        Err(bad)
    }
}

/// Exact value of a bound as `i64`, for tables.
pub fn bound_i64(id: TheoremId, p: &Params) -> Option<i64> {
    bound_value(id, p).ok().and_then(|v| v.to_i64())
}
