//! Fixed-width bitsets over candidate indices, sized once per search.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bits {
    words: Box<[u64]>,
}

impl Bits {
    pub fn zeros(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)].into_boxed_slice(),
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut b = Bits::zeros(len);
        for i in 0..len {
            b.set(i);
        }
        b
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn and_assign(&mut self, o: &Bits) {
        for (a, b) in self.words.iter_mut().zip(o.words.iter()) {
            *a &= b;
        }
    }

    pub fn and_not_assign(&mut self, o: &Bits) {
        for (a, b) in self.words.iter_mut().zip(o.words.iter()) {
            *a &= !b;
        }
    }

    pub fn or_assign(&mut self, o: &Bits) {
        for (a, b) in self.words.iter_mut().zip(o.words.iter()) {
            *a |= b;
        }
    }

    /// `|self & !o|`
    pub fn count_and_not(&self, o: &Bits) -> usize {
        self.words
            .iter()
            .zip(o.words.iter())
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, o: &Bits) -> bool {
        self.words
            .iter()
            .zip(o.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    /// Lowest index set in `self & a & !b`.
    pub fn first_and_and_not(&self, a: &Bits, b: &Bits) -> Option<usize> {
        for (i, ((x, y), z)) in self
            .words
            .iter()
            .zip(a.words.iter())
            .zip(b.words.iter())
            .enumerate()
        {
            let w = x & y & !z;
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Set indices at or above `from`, ascending.
    pub fn iter_from(&self, from: usize) -> impl Iterator<Item = usize> + '_ {
        let start = from / 64;
        self.words
            .iter()
            .enumerate()
            .skip(start)
            .flat_map(move |(i, &w)| {
                let w = if i == start && !from.is_multiple_of(64) {
                    w & (!0u64 << (from % 64))
                } else {
                    w
                };
                BitIter { w, base: i * 64 }
            })
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.iter_from(0)
    }
}

struct BitIter {
    w: u64,
    base: usize,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.w == 0 {
            return None;
        }
        let tz = self.w.trailing_zeros() as usize;
        self.w &= self.w - 1;
        Some(self.base + tz)
    }
}
