use std::fmt;
use std::str::FromStr;

use crate::error::BlockError;

/// Block alphabet. Declaration order is the canonical order `0 < 1 < u < v < w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlockSymbol {
    Zero,
    One,
    U,
    V,
    W,
}

impl BlockSymbol {
    pub const ALL: [BlockSymbol; 5] = [
        BlockSymbol::Zero,
        BlockSymbol::One,
        BlockSymbol::U,
        BlockSymbol::V,
        BlockSymbol::W,
    ];

    pub fn is_literal(self) -> bool {
        matches!(self, BlockSymbol::Zero | BlockSymbol::One)
    }

    pub fn as_char(self) -> char {
        match self {
            BlockSymbol::Zero => '0',
            BlockSymbol::One => '1',
            BlockSymbol::U => 'u',
            BlockSymbol::V => 'v',
            BlockSymbol::W => 'w',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        Some(match c {
            '0' => BlockSymbol::Zero,
            '1' => BlockSymbol::One,
            'u' => BlockSymbol::U,
            'v' => BlockSymbol::V,
            'w' => BlockSymbol::W,
            _ => return None,
        })
    }
}

/// A word over `{v, u, w, 0, 1}`, ordered lexicographically by [`BlockSymbol`] order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockWord(pub Vec<BlockSymbol>);

impl BlockWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[BlockSymbol] {
        &self.0
    }

    pub fn concat(&self, other: &BlockWord) -> BlockWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        BlockWord(v)
    }

    /// Number of occurrences of `symbol`.
    pub fn count(&self, symbol: BlockSymbol) -> usize {
        self.0.iter().filter(|&&s| s == symbol).count()
    }

    pub fn literal_count(&self) -> usize {
        self.0.iter().filter(|s| s.is_literal()).count()
    }
}

impl fmt::Display for BlockWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|s| s.as_char()).collect();
        f.write_str(&s)
    }
}

impl FromStr for BlockWord {
    type Err = BlockError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(position, c)| {
                BlockSymbol::from_char(c).ok_or(BlockError::BadSymbol { position, found: c })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BlockWord)
    }
}

impl From<&[BlockSymbol]> for BlockWord {
    fn from(s: &[BlockSymbol]) -> Self {
        BlockWord(s.to_vec())
    }
}

/// Drops `v`, `u`, `w` and replaces each `0` by `00` and each `1` by `1101`.
pub fn expand_literals(word: &BlockWord) -> BlockWord {
    use BlockSymbol::*;
    let mut out = Vec::with_capacity(4 * word.literal_count());
    for &s in &word.0 {
        match s {
            Zero => out.extend_from_slice(&[Zero, Zero]),
            One => out.extend_from_slice(&[One, One, Zero, One]),
            _ => {}
        }
    }
    BlockWord(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(s: &str) -> BlockWord {
        s.parse().unwrap()
    }

    #[test]
    fn counting() {
        assert_eq!(bw("vv0w").count(BlockSymbol::V), 2);
        let s = bw("1uu1uu0w");
        assert_eq!(s.count(BlockSymbol::Zero) + s.count(BlockSymbol::One), 3);
        assert_eq!(bw("").count(BlockSymbol::W), 0);
    }

    #[test]
    fn expansion() {
        assert_eq!(expand_literals(&bw("1uu1")), bw("11011101"));
        assert_eq!(expand_literals(&bw("v0uu0w")), bw("0000"));
        assert_eq!(expand_literals(&bw("vvw")), bw(""));
    }

    #[test]
    fn canonical_order() {
        let mut words = [bw("w"), bw("v"), bw("u"), bw("1"), bw("0"), bw("0w")];
        words.sort();
        let rendered: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(rendered, ["0", "0w", "1", "u", "v", "w"]);
        assert!(matches!(
            "0x".parse::<BlockWord>(),
            Err(BlockError::BadSymbol {
                position: 1,
                found: 'x'
            })
        ));
    }
}
