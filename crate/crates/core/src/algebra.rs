//! Residues mod 3, front cutting, and the one-pass maps.
//!
//! One pass of the system over a word `s` (enough steps to delete every
//! original symbol) reads exactly the symbols at positions 0, 3, 6, … of
//! `s`. [`sample_produce`] writes the productions of those symbols, and
//! [`full_pass_closed_form`] cuts the surplus the last step deletes from
//! that output. [`full_pass`] computes the same thing by simulation.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use crate::error::AlgebraError;
use crate::tag::{step_n, TagRules};
use crate::word::BinaryWord;

/// Words passed to the one-pass maps must have at least this many symbols.
pub const MIN_PASS_LEN: usize = 4;

/// An integer modulo 3.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue(u8);

impl Residue {
    pub const ZERO: Residue = Residue(0);
    pub const ONE: Residue = Residue(1);
    pub const TWO: Residue = Residue(2);

    pub fn new(value: i64) -> Self {
        Residue(value.rem_euclid(3) as u8)
    }

    pub fn of_len(len: usize) -> Self {
        Residue((len % 3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl From<u8> for Residue {
    fn from(v: u8) -> Self {
        Residue(v % 3)
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        Residue((self.0 + rhs.0) % 3)
    }
}

impl AddAssign for Residue {
    fn add_assign(&mut self, rhs: Residue) {
        *self = *self + rhs;
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        Residue((self.0 + 3 - rhs.0) % 3)
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue((3 - self.0) % 3)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Length of `word` modulo 3.
pub fn length_residue(word: &BinaryWord) -> Residue {
    Residue::of_len(word.len())
}

/// `word` without its first `x` symbols.
pub fn cut(word: &BinaryWord, x: Residue) -> Result<BinaryWord, AlgebraError> {
    word.drop_front(x.value() as usize)
        .ok_or(AlgebraError::WordTooShort {
            len: word.len(),
            needed: x.value() as usize,
        })
}

/// Productions of the symbols at positions 0, 3, 6, … concatenated.
pub fn sample_produce(word: &BinaryWord) -> BinaryWord {
    let rules = TagRules::post();
    let mut out = BinaryWord::with_capacity(4 * word.len().div_ceil(3));
    for i in (0..word.len()).step_by(3) {
        out.extend_from(rules.production(word.get(i).expect("in range")));
    }
    out
}

fn check_pass_len(word: &BinaryWord) -> Result<(), AlgebraError> {
    if word.len() < MIN_PASS_LEN {
        return Err(AlgebraError::WordTooShort {
            len: word.len(),
            needed: MIN_PASS_LEN,
        });
    }
    Ok(())
}

/// Number of steps one pass over a word of `len` symbols takes.
pub fn pass_steps(len: usize) -> usize {
    len.div_ceil(3)
}

/// One pass by direct simulation: `ceil(len/3)` steps of the system.
pub fn full_pass(word: &BinaryWord) -> Result<BinaryWord, AlgebraError> {
    check_pass_len(word)?;
    Ok(step_n(word, &TagRules::post(), pass_steps(word.len()))?)
}

/// One pass in closed form: the sampled productions cut by `-l(word)`.
pub fn full_pass_closed_form(word: &BinaryWord) -> Result<BinaryWord, AlgebraError> {
    check_pass_len(word)?;
    cut(&sample_produce(word), -length_residue(word))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn residue_arithmetic() {
        assert_eq!(Residue::new(-1), Residue::TWO);
        assert_eq!(Residue::new(-4), Residue::TWO);
        assert_eq!(Residue::ONE - Residue::TWO, Residue::TWO);
        assert_eq!(-Residue::ZERO, Residue::ZERO);
        assert_eq!(-Residue::ONE, Residue::TWO);
        assert_eq!(Residue::TWO + Residue::TWO, Residue::ONE);
        // l(a) = 2, l(b) = 1 gives l(ab) = 0 and l(aab) = 2
        let (la, lb) = (Residue::TWO, Residue::ONE);
        assert_eq!(la + lb, Residue::ZERO);
        assert_eq!(la + la + lb, Residue::TWO);
    }

    #[test]
    fn cutting_examples() {
        assert_eq!(cut(&w("1010001"), Residue::TWO).unwrap(), w("10001"));
        assert_eq!(cut(&w("101"), Residue::ZERO).unwrap(), w("101"));
        assert_eq!(cut(&w("101100"), -Residue::new(1)).unwrap(), w("1100"));
        let n = Residue::ONE;
        assert_eq!(cut(&w("0111000"), n + n + n + n).unwrap(), w("111000"));
        assert_eq!(
            cut(&w("1"), Residue::TWO),
            Err(AlgebraError::WordTooShort { len: 1, needed: 2 })
        );
    }

    #[test]
    fn sampling_examples() {
        assert_eq!(sample_produce(&w("1")), w("1101"));
        assert_eq!(sample_produce(&w("000100")), w("001101"));
        assert_eq!(sample_produce(&w("")), w(""));
        assert_eq!(sample_produce(&w("0000")), w("0000"));
    }

    #[test]
    fn pass_examples() {
        // 0000 -> 000 -> 00 by hand.
        assert_eq!(full_pass(&w("0000")).unwrap(), w("00"));
        assert_eq!(full_pass_closed_form(&w("0000")).unwrap(), w("00"));
        let s = w("110111");
        let expected = cut(&sample_produce(&s), -length_residue(&s)).unwrap();
        assert_eq!(full_pass(&s).unwrap(), expected);
        assert!(matches!(
            full_pass(&w("011")),
            Err(AlgebraError::WordTooShort { len: 3, needed: 4 })
        ));
        assert!(full_pass_closed_form(&w("")).is_err());
    }
}
