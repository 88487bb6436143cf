//! Fixed-length bitsets with the shifted boolean operations the ideal
//! arithmetic needs.
//!
//! Bits past `len` are always kept clear in storage. Reads past the end go
//! through [`Bits::extract`], which lets the caller choose what the tail
//! looks like.

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl std::fmt::Debug for Bits {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        write!(f, "Bits({s})")
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
            words: vec![u64::MAX; len.div_ceil(64)],
            len,
        };
        b.trim();
        b
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    pub(crate) fn get(&self, i: usize) -> bool {
        i < self.len && (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub(crate) fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub(crate) fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + t)
                }
            })
        })
    }

    fn trim(&mut self) {
        let r = self.len % 64;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }

    /// Storage word `i`, with positions at or past `len` reading as `fill`.
    fn word_ext(&self, i: usize, fill: bool) -> u64 {
        let start = i * 64;
        if start >= self.len {
            return if fill { u64::MAX } else { 0 };
        }
        let w = self.words[i];
        let valid = self.len - start;
        if valid >= 64 || !fill {
            w
        } else {
            w | (u64::MAX << valid)
        }
    }

    /// The 64 bits starting at signed position `start`: bit `k` of the result
    /// is bit `start + k`, where negative positions read as 0 and positions
    /// at or past `len` read as `fill`.
    pub(crate) fn extract(&self, start: i64, fill: bool) -> u64 {
        if start < 0 {
            if start <= -64 {
                return 0;
            }
            return self.extract(0, fill) << (-start);
        }
        let start = start as usize;
        let (w, o) = (start / 64, start % 64);
        let lo = self.word_ext(w, fill);
        if o == 0 {
            lo
        } else {
            (lo >> o) | (self.word_ext(w + 1, fill) << (64 - o))
        }
    }

    /// `self[t] |= other[t - shift]`, reading `other` as zero outside its range.
    pub(crate) fn or_shifted_up(&mut self, other: &Bits, shift: i64) {
        for k in 0..self.words.len() {
            self.words[k] |= other.extract(64 * k as i64 - shift, false);
        }
        self.trim();
    }

    /// `self[t] &= other[t + shift]`, reading `other` as one past its end.
    pub(crate) fn and_shifted_down_fill(&mut self, other: &Bits, shift: i64) {
        for k in 0..self.words.len() {
            self.words[k] &= other.extract(64 * k as i64 + shift, true);
        }
    }

    /// `self &= !other`, position by position.
    pub(crate) fn and_not(&mut self, other: &Bits) {
        for k in 0..self.words.len() {
            self.words[k] &= !other.extract(64 * k as i64, false);
        }
    }

    /// A copy moved down by `shift` positions with ones shifted in at the top.
    pub(crate) fn shifted_down_fill(&self, shift: usize) -> Bits {
        let mut out = Bits::ones(self.len);
        out.and_shifted_down_fill(self, shift as i64);
        out
    }
}
