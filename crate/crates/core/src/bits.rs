//! Fixed-length bitset with shifted word reads, used for the finite windows
//! of cofinite integer sets.

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub(crate) struct Bits {
    words: Vec<u64>,
    len: usize,
}

#[inline]
fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

impl Bits {
    pub(crate) fn zeros(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub(crate) fn ones(len: usize) -> Self {
        let mut b = Bits {
            words: vec![!0; len.div_ceil(64)],
            len,
        };
        b.trim();
        b
    }

    /// Keeps the bits past `len` in the last word zero.
    fn trim(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= low_mask(rem);
            }
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + b)
                }
            })
        })
    }

    pub(crate) fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * 64 + w.trailing_zeros() as usize)
    }

    /// Index of the last zero bit, if any.
    pub(crate) fn last_zero(&self) -> Option<usize> {
        for k in (0..self.words.len()).rev() {
            let valid = if k + 1 == self.words.len() && !self.len.is_multiple_of(64) {
                low_mask(self.len % 64)
            } else {
                !0
            };
            let zeros = !self.words[k] & valid;
            if zeros != 0 {
                return Some(k * 64 + 63 - zeros.leading_zeros() as usize);
            }
        }
        None
    }

    /// The 64 bits starting at position `p` (bit 0 of the result is position
    /// `p`). Positions below 0 read as `below`, positions at or past `len`
    /// read as `above`.
    pub(crate) fn word_at(&self, p: i64, below: bool, above: bool) -> u64 {
        let len = self.len as i64;
        let mut out = 0u64;
        let lo = p.max(0);
        let hi = (p + 64).min(len);
        if lo < hi {
            out |= self.extract(lo as usize, (hi - lo) as usize) << (lo - p);
        }
        if below && p < 0 {
            out |= low_mask((-p).min(64) as usize);
        }
        if above && p + 64 > len {
            let start = (len - p).max(0) as usize;
            out |= !low_mask(start);
        }
        out
    }

    fn extract(&self, start: usize, n: usize) -> u64 {
        let w = start / 64;
        let b = start % 64;
        let mut v = self.words[w] >> b;
        if b > 0 && w + 1 < self.words.len() {
            v |= self.words[w + 1] << (64 - b);
        }
        v & low_mask(n)
    }

    /// Rebuilds the bitset word by word from a generator taking the absolute
    /// start position of each word.
    pub(crate) fn fill_words(&mut self, mut f: impl FnMut(i64) -> u64) {
        for (k, w) in self.words.iter_mut().enumerate() {
            *w = f(64 * k as i64);
        }
        self.trim();
    }

    pub(crate) fn or_words(&mut self, mut f: impl FnMut(i64) -> u64) {
        for (k, w) in self.words.iter_mut().enumerate() {
            *w |= f(64 * k as i64);
        }
        self.trim();
    }

    pub(crate) fn and_words(&mut self, mut f: impl FnMut(i64) -> u64) {
        for (k, w) in self.words.iter_mut().enumerate() {
            *w &= f(64 * k as i64);
        }
    }

    /// Copy of positions `[start, start + len)`.
    pub(crate) fn slice(&self, start: usize, len: usize) -> Bits {
        let mut out = Bits::zeros(len);
        out.fill_words(|p| self.word_at(start as i64 + p, false, false));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(b: &Bits, p: i64, below: bool, above: bool) -> u64 {
        let mut out = 0;
        for i in 0..64 {
            let q = p + i;
            let bit = if q < 0 {
                below
            } else if q >= b.len() as i64 {
                above
            } else {
                b.get(q as usize)
            };
            if bit {
                out |= 1 << i;
            }
        }
        out
    }

    #[test]
    fn word_at_matches_bitwise_read() {
        let mut b = Bits::zeros(150);
        for i in [0, 3, 63, 64, 65, 100, 127, 128, 149] {
            b.set(i);
        }
        for p in -130..220 {
            for (below, above) in [(false, false), (true, false), (false, true), (true, true)] {
                assert_eq!(b.word_at(p, below, above), naive(&b, p, below, above), "p={p}");
            }
        }
    }

    #[test]
    fn last_zero_and_first_one() {
        let b = Bits::ones(70);
        assert_eq!(b.last_zero(), None);
        assert_eq!(b.first_one(), Some(0));
        let mut c = Bits::zeros(70);
        c.set(69);
        assert_eq!(c.last_zero(), Some(68));
        assert_eq!(c.first_one(), Some(69));
        assert_eq!(c.iter_ones().collect::<Vec<_>>(), vec![69]);
        assert_eq!(Bits::zeros(0).last_zero(), None);
    }
}
