//! Fixed-capacity bit-set over element ids.

use std::fmt;

const WORD: usize = 64;

/// A set of element ids `0..capacity`, stored as packed 64-bit words.
///
/// Two sets compare equal only if they have the same capacity and members,
/// so sets drawn from different groups never alias.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet {
    capacity: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn new(capacity: usize) -> Self {
        ElemSet {
            capacity,
            words: vec![0; capacity.div_ceil(WORD)],
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = ElemSet::new(capacity);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.trim();
        s
    }

    pub fn from_elems(capacity: usize, elems: impl IntoIterator<Item = usize>) -> Self {
        let mut s = ElemSet::new(capacity);
        for x in elems {
            s.insert(x);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.capacity % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.capacity && self.words[x / WORD] >> (x % WORD) & 1 == 1
    }

    /// Inserts `x`; returns true if it was not already present.
    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(
            x < self.capacity,
            "element {x} out of range {}",
            self.capacity
        );
        let bit = 1u64 << (x % WORD);
        let w = &mut self.words[x / WORD];
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        if x < self.capacity {
            self.words[x / WORD] &= !(1u64 << (x % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        debug_assert_eq!(self.capacity, other.capacity);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let tz = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD + tz)
                }
            })
        })
    }

    /// Packs the set into a single word. Only valid for capacity ≤ 64.
    pub fn as_u64(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
