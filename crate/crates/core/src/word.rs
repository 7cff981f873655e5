//! Bit-packed binary words.
//!
//! [`BinaryWord`] is the immutable value type used at every interface.
//! [`Tape`] is the mutable working copy used by the simulator: symbols are
//! appended at the tail and consumed from the head by advancing a read
//! offset, with whole words reclaimed once the dead prefix outgrows the
//! live part.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseWordError;

const BITS: usize = 64;

#[inline]
fn mask(n: usize) -> u64 {
    if n >= BITS {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Reads `n <= 64` bits starting at bit `start`, least significant bit first.
#[inline]
fn read_bits(words: &[u64], start: usize, n: usize) -> u64 {
    debug_assert!(n <= BITS);
    if n == 0 {
        return 0;
    }
    let w = start / BITS;
    let off = start % BITS;
    let mut v = words[w] >> off;
    if off != 0 && off + n > BITS {
        v |= words[w + 1] << (BITS - off);
    }
    v & mask(n)
}

/// Writes `n <= 64` bits of `v` at bit position `start`. Target bits must be zero.
#[inline]
fn or_bits(words: &mut Vec<u64>, start: usize, n: usize, v: u64) {
    if n == 0 {
        return;
    }
    let end_word = (start + n - 1) / BITS;
    if words.len() <= end_word {
        words.resize(end_word + 1, 0);
    }
    let w = start / BITS;
    let off = start % BITS;
    let v = v & mask(n);
    words[w] |= v << off;
    if off != 0 && off + n > BITS {
        words[w + 1] |= v >> (BITS - off);
    }
}

fn ranges_equal(a: &[u64], a_start: usize, b: &[u64], b_start: usize, len: usize) -> bool {
    let mut done = 0;
    while done < len {
        let n = (len - done).min(BITS);
        if read_bits(a, a_start + done, n) != read_bits(b, b_start + done, n) {
            return false;
        }
        done += n;
    }
    true
}

/// A finite sequence over {0, 1}.
///
/// Bits past `len` are always zero, so derived equality and hashing are exact.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    bits: Vec<u64>,
    len: usize,
}

impl BinaryWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(symbols: usize) -> Self {
        Self {
            bits: Vec::with_capacity(symbols.div_ceil(BITS)),
            len: 0,
        }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        let mut w = Self::new();
        for b in iter {
            w.push(b);
        }
        w
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Symbol at `i`, `true` meaning 1.
    #[inline]
    pub fn get(&self, i: usize) -> Option<bool> {
        (i < self.len).then(|| (self.bits[i / BITS] >> (i % BITS)) & 1 == 1)
    }

    pub fn first(&self) -> Option<bool> {
        self.get(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| (self.bits[i / BITS] >> (i % BITS)) & 1 == 1)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn push(&mut self, bit: bool) {
        if self.len.is_multiple_of(BITS) {
            self.bits.push(0);
        }
        if bit {
            self.bits[self.len / BITS] |= 1 << (self.len % BITS);
        }
        self.len += 1;
    }

    pub fn extend_from(&mut self, other: &BinaryWord) {
        self.append_range(&other.bits, 0, other.len);
    }

    fn append_range(&mut self, src: &[u64], start: usize, len: usize) {
        let mut done = 0;
        while done < len {
            let n = (len - done).min(BITS);
            let v = read_bits(src, start + done, n);
            or_bits(&mut self.bits, self.len, n, v);
            self.len += n;
            done += n;
        }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        let mut out = BinaryWord::with_capacity(self.len + other.len);
        out.extend_from(self);
        out.extend_from(other);
        out
    }

    /// `self` repeated `times` times.
    pub fn repeat(&self, times: usize) -> BinaryWord {
        let mut out = BinaryWord::with_capacity(self.len * times);
        for _ in 0..times {
            out.extend_from(self);
        }
        out
    }

    /// The subword `[start, end)`. Panics if the range is out of bounds.
    pub fn slice(&self, start: usize, end: usize) -> BinaryWord {
        assert!(start <= end && end <= self.len, "slice out of bounds");
        let mut out = BinaryWord::with_capacity(end - start);
        out.append_range(&self.bits, start, end - start);
        out
    }

    /// `self` with its first `n` symbols removed, or `None` if it is shorter than `n`.
    pub fn drop_front(&self, n: usize) -> Option<BinaryWord> {
        (n <= self.len).then(|| self.slice(n, self.len))
    }

    pub fn starts_with(&self, prefix: &BinaryWord) -> bool {
        prefix.len <= self.len && ranges_equal(&self.bits, 0, &prefix.bits, 0, prefix.len)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.iter().map(|b| if b { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len <= 96 {
            write!(f, "BinaryWord(\"{self}\")")
        } else {
            let head: String = self
                .iter()
                .take(32)
                .map(|b| if b { '1' } else { '0' })
                .collect();
            write!(f, "BinaryWord(len={}, \"{head}...\")", self.len)
        }
    }
}

impl FromStr for BinaryWord {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut w = BinaryWord::with_capacity(s.len());
        for (position, ch) in s.chars().enumerate() {
            match ch {
                '0' => w.push(false),
                '1' => w.push(true),
                found => return Err(ParseWordError { position, found }),
            }
        }
        Ok(w)
    }
}

/// Mutable configuration with amortized O(1) deletion from the front.
#[derive(Clone, Debug)]
pub struct Tape {
    bits: Vec<u64>,
    head: usize,
    tail: usize,
}

impl Tape {
    pub fn from_word(word: &BinaryWord) -> Self {
        Self {
            bits: word.bits.clone(),
            head: 0,
            tail: word.len,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.tail - self.head
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.head == self.tail
    }

    #[inline]
    pub fn front(&self) -> Option<bool> {
        (!self.is_empty()).then(|| (self.bits[self.head / BITS] >> (self.head % BITS)) & 1 == 1)
    }

    pub fn push_word(&mut self, word: &BinaryWord) {
        let mut done = 0;
        while done < word.len {
            let n = (word.len - done).min(BITS);
            let v = read_bits(&word.bits, done, n);
            or_bits(&mut self.bits, self.tail, n, v);
            self.tail += n;
            done += n;
        }
    }

    /// Removes up to `n` leading symbols.
    pub fn pop_front(&mut self, n: usize) {
        let n = n.min(self.len());
        // Dead bits must read as zero once compaction moves them.
        let mut cleared = 0;
        while cleared < n {
            let pos = self.head + cleared;
            let k = (n - cleared).min(BITS - pos % BITS);
            self.bits[pos / BITS] &= !(mask(k) << (pos % BITS));
            cleared += k;
        }
        self.head += n;
        self.compact_if_sparse();
    }

    fn compact_if_sparse(&mut self) {
        let dead_words = self.head / BITS;
        if dead_words == 0 || dead_words * BITS < self.len() {
            return;
        }
        self.bits.drain(..dead_words);
        self.head -= dead_words * BITS;
        self.tail -= dead_words * BITS;
    }

    pub fn to_word(&self) -> BinaryWord {
        let mut out = BinaryWord::with_capacity(self.len());
        out.append_range(&self.bits, self.head, self.len());
        out
    }

    pub fn eq_tape(&self, other: &Tape) -> bool {
        self.len() == other.len()
            && ranges_equal(&self.bits, self.head, &other.bits, other.head, self.len())
    }

    pub fn eq_word(&self, word: &BinaryWord) -> bool {
        self.len() == word.len && ranges_equal(&self.bits, self.head, &word.bits, 0, word.len)
    }
}
