//! Fixed-width bit set used for adjacency rows and clique-extension candidate
//! sets. Word-level AND is the hot operation in clique enumeration.

const WORD_BITS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
    nbits: usize,
}

impl BitSet {
    pub fn new(nbits: usize) -> Self {
        BitSet {
            words: vec![0; nbits.div_ceil(WORD_BITS)],
            nbits,
        }
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 != 0
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Overwrites `self` with a copy of `other`.
    pub fn copy_from(&mut self, other: &BitSet) {
        debug_assert_eq!(other.nbits, self.nbits);
        self.words.copy_from_slice(&other.words);
    }

    /// Overwrites `self` with `a & b`. All three must share the same width.
    pub fn assign_and(&mut self, a: &BitSet, b: &BitSet) {
        debug_assert_eq!(a.nbits, self.nbits);
        debug_assert_eq!(b.nbits, self.nbits);
        for (w, (&x, &y)) in self.words.iter_mut().zip(a.words.iter().zip(&b.words)) {
            *w = x & y;
        }
    }

    /// Clears all bits at positions `<= v`.
    pub fn truncate_through(&mut self, v: usize) {
        let word = v / WORD_BITS;
        let bit = v % WORD_BITS;
        for w in &mut self.words[..word] {
            *w = 0;
        }
        if word < self.words.len() {
            let keep = if bit == WORD_BITS - 1 {
                0
            } else {
                !0u64 << (bit + 1)
            };
            self.words[word] &= keep;
        }
    }

    pub fn iter_ones(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let tz = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + tz)
    }
}
