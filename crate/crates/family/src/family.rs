use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use setfam_sets::{ksubsets, Error, KSet, Result, MAX_N};

/// A set of subsets of `[n]`, stored lex-sorted without duplicates.
#[derive(Clone, Debug)]
pub struct Family {
    n: usize,
    sets: Vec<KSet>,
    uniform_k: Option<usize>,
}

fn witness(sets: &[KSet]) -> Option<usize> {
    let k = sets.first()?.len();
    sets.iter().all(|s| s.len() == k).then_some(k)
}

impl Family {
    pub fn new(n: usize, sets: impl IntoIterator<Item = KSet>) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::param(format!(
                "ground size {n} outside [1, {MAX_N}]"
            )));
        }
        let mut v: Vec<KSet> = sets.into_iter().collect();
        if let Some(bad) = v.iter().find(|s| s.ground_n() != n) {
            return Err(Error::param(format!(
                "set {bad} lives on [{}], family on [{n}]",
                bad.ground_n()
            )));
        }
        v.sort_unstable();
        v.dedup();
        let uniform_k = witness(&v);
        Ok(Family {
            n,
            sets: v,
            uniform_k,
        })
    }

    /// Like [`Family::new`] but records `k` as the uniformity witness,
    /// which also covers the empty family.
    pub fn uniform(n: usize, k: usize, sets: impl IntoIterator<Item = KSet>) -> Result<Self> {
        let mut f = Family::new(n, sets)?;
        if f.sets.iter().any(|s| s.len() != k) {
            return Err(Error::param(format!("family is not {k}-uniform")));
        }
        f.uniform_k = Some(k);
        Ok(f)
    }

    pub fn empty(n: usize) -> Result<Self> {
        Family::new(n, [])
    }

    /// Builds from 1-based label lists.
    pub fn from_labels(n: usize, sets: &[&[usize]]) -> Result<Self> {
        let v = sets
            .iter()
            .map(|l| KSet::new(n, l))
            .collect::<Result<Vec<_>>>()?;
        Family::new(n, v)
    }

    /// Every k-subset of `[n]` satisfying `pred`.
    pub fn filter_ksubsets(n: usize, k: usize, pred: impl Fn(&KSet) -> bool) -> Result<Self> {
        Family::uniform(n, k, ksubsets(n, k)?.filter(|s| pred(s)))
    }

    pub(crate) fn from_sorted_unchecked(
        n: usize,
        sets: Vec<KSet>,
        uniform_k: Option<usize>,
    ) -> Self {
        debug_assert!(sets.windows(2).all(|w| w[0] < w[1]));
        let uniform_k = uniform_k.or_else(|| witness(&sets));
        Family { n, sets, uniform_k }
    }

    pub fn ground_n(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[KSet] {
        &self.sets
    }

    pub fn iter(&self) -> std::slice::Iter<'_, KSet> {
        self.sets.iter()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn uniform_k(&self) -> Option<usize> {
        self.uniform_k
    }

    pub fn contains(&self, s: &KSet) -> bool {
        self.sets.binary_search(s).is_ok()
    }

    pub fn is_subfamily_of(&self, other: &Family) -> bool {
        self.n == other.n && self.sets.iter().all(|s| other.contains(s))
    }

    pub fn union(&self, other: &Family) -> Result<Family> {
        same_ground(self, other)?;
        Family::new(self.n, self.sets.iter().chain(other.sets.iter()).copied())
    }

    pub fn intersection(&self, other: &Family) -> Result<Family> {
        same_ground(self, other)?;
        Family::new(
            self.n,
            self.sets.iter().filter(|s| other.contains(s)).copied(),
        )
    }

    pub fn difference(&self, other: &Family) -> Result<Family> {
        same_ground(self, other)?;
        Family::new(
            self.n,
            self.sets.iter().filter(|s| !other.contains(s)).copied(),
        )
    }

    /// Image under `perm[old - 1] = new`.
    pub fn permuted(&self, perm: &[usize]) -> Family {
        let mut v: Vec<KSet> = self.sets.iter().map(|s| s.permuted(perm)).collect();
        v.sort_unstable();
        Family::from_sorted_unchecked(self.n, v, self.uniform_k)
    }

    /// Intersection of all members; `None` for the empty family.
    pub fn common_intersection(&self) -> Option<KSet> {
        let first = *self.sets.first()?;
        Some(self.sets.iter().fold(first, |acc, s| acc.intersection(s)))
    }

    /// Number of members containing `label`.
    pub fn degree(&self, label: usize) -> usize {
        self.sets.iter().filter(|s| s.contains(label)).count()
    }

    pub fn to_label_lists(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|s| s.labels()).collect()
    }
}

pub(crate) fn same_ground(f: &Family, g: &Family) -> Result<()> {
    if f.n != g.n {
        return Err(Error::param(format!(
            "ground mismatch: [{}] vs [{}]",
            f.n, g.n
        )));
    }
    Ok(())
}

impl PartialEq for Family {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.sets == other.sets
    }
}

impl Eq for Family {}

impl Hash for Family {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.sets.hash(state);
    }
}

/// Families compare as their lex-sorted member sequences.
impl Ord for Family {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.sets.cmp(&other.sets))
    }
}

impl PartialOrd for Family {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> IntoIterator for &'a Family {
    type Item = &'a KSet;
    type IntoIter = std::slice::Iter<'a, KSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

/// Every two distinct members share at least `t` labels.
pub fn is_t_intersecting(f: &Family, t: usize) -> bool {
    let s = f.sets();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i].intersection_size(&s[j]) < t {
                return false;
            }
        }
    }
    true
}

/// Every member of `f` meets every member of `g`.
pub fn is_cross_intersecting(f: &Family, g: &Family) -> Result<bool> {
    same_ground(f, g)?;
    Ok(f.iter().all(|a| g.iter().all(|b| a.meets(b))))
}

/// Contained in a full star. The empty family counts as EKR.
pub fn is_ekr(f: &Family) -> bool {
    f.common_intersection().is_none_or(|c| !c.is_empty())
}

/// Non-empty with empty common intersection.
pub fn is_trivial_free(f: &Family) -> bool {
    !f.is_empty() && !is_ekr(f)
}
