use std::fmt;

use super::building::BuildingBlock;
use super::word::{BlockSymbol, BlockWord};

/// Where a block came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    /// Produced by initial-block creation from `seed` with `depth` levels.
    Initial { seed: BlockWord, depth: usize },
    /// Supplied from outside; history unknown.
    External,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Provenance {
    pub origin: Origin,
    /// Right extensions applied since the origin.
    pub extensions: usize,
}

impl Provenance {
    pub fn initial(seed: BlockWord, depth: usize) -> Self {
        Self {
            origin: Origin::Initial { seed, depth },
            extensions: 0,
        }
    }

    pub fn external() -> Self {
        Self {
            origin: Origin::External,
            extensions: 0,
        }
    }

    pub fn extended(&self) -> Self {
        Self {
            origin: self.origin.clone(),
            extensions: self.extensions + 1,
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.origin {
            Origin::Initial { seed, depth } => {
                write!(
                    f,
                    "initial seed={seed} depth={depth} extensions={}",
                    self.extensions
                )
            }
            Origin::External => write!(f, "external extensions={}", self.extensions),
        }
    }
}

/// The four periodicity conditions for a block `b₁ … bₙ₊₁`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ConditionReport {
    /// Built from an initial block by zero or more right extensions.
    pub cond_i: bool,
    /// `b₁ = bₙ₊₁`.
    pub cond_ii: bool,
    /// `c(bᵢ, w) + c(bᵢ₊₁, v) = 2` for every `i ≤ n`.
    pub cond_iii: bool,
    /// `c(bᵢ, v) = 0` for some `i ≤ n`.
    pub cond_iv: bool,
}

impl ConditionReport {
    /// Conditions (ii) to (iv), the ones a search targets.
    pub fn search_target(&self) -> bool {
        self.cond_ii && self.cond_iii && self.cond_iv
    }

    pub fn all(&self) -> bool {
        self.cond_i && self.search_target()
    }
}

pub fn check_conditions(block: &BuildingBlock, provenance: &Provenance) -> ConditionReport {
    let rows = block.rows();
    let n = rows.len() - 1;
    ConditionReport {
        cond_i: matches!(provenance.origin, Origin::Initial { .. }),
        cond_ii: rows[0] == rows[n],
        cond_iii: rows
            .windows(2)
            .all(|p| p[0].count(BlockSymbol::W) + p[1].count(BlockSymbol::V) == 2),
        cond_iv: rows[..n].iter().any(|r| r.count(BlockSymbol::V) == 0),
    }
}

/// Whether no sequence of right extensions can ever satisfy condition (iv).
///
/// Extensions never turn a `v` into anything else, so a row's `v` count
/// never decreases; once every row `b₁ … bₙ` has a `v`, that stays so.
pub fn cond_iv_unreachable(block: &BuildingBlock) -> bool {
    let rows = block.rows();
    rows[..rows.len() - 1]
        .iter()
        .all(|r| r.count(BlockSymbol::V) > 0)
}
