use std::fmt;

const WORDS: usize = 4;

/// Fixed-capacity bitset over root ids. 256 bits covers every root of E8.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct RootSet([u64; WORDS]);

impl RootSet {
    pub const CAPACITY: usize = 64 * WORDS;

    pub const fn new() -> Self {
        RootSet([0; WORDS])
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> Self {
        let mut s = RootSet::new();
        for id in ids {
            s.insert(id);
        }
        s
    }

    /// Ids `0..n`.
    pub fn range(start: usize, end: usize) -> Self {
        Self::from_ids(start..end)
    }

    #[inline]
    pub fn insert(&mut self, id: usize) -> bool {
        let (w, b) = (id / 64, id % 64);
        let had = self.0[w] >> b & 1 == 1;
        self.0[w] |= 1 << b;
        !had
    }

    #[inline]
    pub fn remove(&mut self, id: usize) -> bool {
        let (w, b) = (id / 64, id % 64);
        let had = self.0[w] >> b & 1 == 1;
        self.0[w] &= !(1 << b);
        had
    }

    #[inline]
    pub fn contains(&self, id: usize) -> bool {
        id < Self::CAPACITY && self.0[id / 64] >> (id % 64) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a |= b;
        }
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a &= b;
        }
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a &= !b;
        }
        out
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    /// Image of the set under a permutation of ids.
    pub fn map(&self, perm: &[u16]) -> Self {
        RootSet::from_ids(self.iter().map(|i| perm[i] as usize))
    }

    pub fn iter(&self) -> Iter {
        Iter { words: self.0, word: 0 }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl Ord for RootSet {
    /// Numeric order of the bitset value, highest id most significant.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for RootSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        RootSet::from_ids(iter)
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word] &= w - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

impl IntoIterator for &RootSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}
