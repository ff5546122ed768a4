use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

pub const MAX_N: usize = 64;

/// A subset of `[n]` packed in one word.
///
/// The derived total order extends the lexicographic order on sets of
/// equal size: `F < G` iff the least element of `F ^ G` lies in `F`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct KSet {
    n: u8,
    bits: u64,
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::param(format!(
            "ground size {n} outside [1, {MAX_N}]"
        )));
    }
    Ok(())
}

impl KSet {
    /// Builds a set from 1-based labels. Repeated labels are rejected.
    pub fn new(n: usize, labels: &[usize]) -> Result<Self> {
        check_n(n)?;
        let mut bits = 0u64;
        for &x in labels {
            if x == 0 || x > n {
                return Err(Error::param(format!("label {x} outside [1, {n}]")));
            }
            let b = 1u64 << (x - 1);
            if bits & b != 0 {
                return Err(Error::param(format!("label {x} repeated")));
            }
            bits |= b;
        }
        Ok(KSet { n: n as u8, bits })
    }

    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        check_n(n)?;
        if bits & !full_mask(n) != 0 {
            return Err(Error::param(format!(
                "bits {bits:#x} exceed ground size {n}"
            )));
        }
        Ok(KSet { n: n as u8, bits })
    }

    /// Caller guarantees `n` in range and no stray bits.
    pub fn from_bits_unchecked(n: usize, bits: u64) -> Self {
        debug_assert!((1..=MAX_N).contains(&n) && bits & !full_mask(n) == 0);
        KSet { n: n as u8, bits }
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::from_bits(n, 0)
    }

    /// `{lo, lo+1, ..., hi}`; empty when `lo > hi`.
    pub fn interval(n: usize, lo: usize, hi: usize) -> Result<Self> {
        let labels: Vec<usize> = (lo..=hi).collect();
        Self::new(n, &labels)
    }

    pub fn ground_n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, label: usize) -> bool {
        label >= 1 && label <= self.n as usize && self.bits >> (label - 1) & 1 == 1
    }

    /// Ascending 1-based labels.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut b = self.bits;
        while b != 0 {
            out.push(b.trailing_zeros() as usize + 1);
            b &= b - 1;
        }
        out
    }

    pub fn min_label(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize + 1)
    }

    pub fn max_label(&self) -> Option<usize> {
        (self.bits != 0).then(|| 64 - self.bits.leading_zeros() as usize)
    }

    pub fn intersection_size(&self, other: &KSet) -> usize {
        (self.bits & other.bits).count_ones() as usize
    }

    pub fn meets(&self, other: &KSet) -> bool {
        self.bits & other.bits != 0
    }

    pub fn is_subset(&self, other: &KSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &KSet) -> KSet {
        KSet {
            n: self.n,
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &KSet) -> KSet {
        KSet {
            n: self.n,
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(&self, other: &KSet) -> KSet {
        KSet {
            n: self.n,
            bits: self.bits & !other.bits,
        }
    }

    pub fn complement(&self) -> KSet {
        KSet {
            n: self.n,
            bits: !self.bits & full_mask(self.n as usize),
        }
    }

    /// Adds `label`; panics when the label is out of range.
    pub fn with(&self, label: usize) -> KSet {
        assert!(
            label >= 1 && label <= self.n as usize,
            "label {label} out of range"
        );
        KSet {
            n: self.n,
            bits: self.bits | 1u64 << (label - 1),
        }
    }

    pub fn without(&self, label: usize) -> KSet {
        assert!(
            label >= 1 && label <= self.n as usize,
            "label {label} out of range"
        );
        KSet {
            n: self.n,
            bits: self.bits & !(1u64 << (label - 1)),
        }
    }

    /// Image under a permutation given as `perm[old_label - 1] = new_label`.
    pub fn permuted(&self, perm: &[usize]) -> KSet {
        let mut bits = 0u64;
        let mut b = self.bits;
        while b != 0 {
            let i = b.trailing_zeros() as usize;
            bits |= 1u64 << (perm[i] - 1);
            b &= b - 1;
        }
        KSet { n: self.n, bits }
    }

    /// Same members over a different ground size.
    pub fn regrounded(&self, n: usize) -> Result<KSet> {
        KSet::from_bits(n, self.bits)
    }
}

impl Ord for KSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            let d = self.bits ^ other.bits;
            if d == 0 {
                Ordering::Equal
            } else if self.bits & (d & d.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for KSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.labels().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
