//! Building blocks and the two procedures that produce them: creation of an
//! initial block from a short seed, and extension of a block on the right.
//!
//! Both procedures pick "an element" of a converting set at every row; here
//! every element is followed, so each call returns the set of all blocks the
//! procedure can produce.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::converting::{converting_set, unique_conversion};
use super::language::{is_in_b, is_initial_seed};
use super::word::{expand_literals, BlockSymbol, BlockWord};
use crate::error::BlockError;

/// Longest right-extension suffix tried by [`extend_right`].
pub const DEFAULT_MAX_SUFFIX: usize = 6;

/// Rows `b₁ … bₙ₊₁`, each a member of `B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BuildingBlock {
    rows: Vec<BlockWord>,
}

impl BuildingBlock {
    pub fn new(rows: Vec<BlockWord>) -> Result<Self, BlockError> {
        if rows.is_empty() {
            return Err(BlockError::InvalidBlock(
                "a block needs at least one row".into(),
            ));
        }
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| !is_in_b(r)) {
            return Err(BlockError::InvalidBlock(format!(
                "row {} ({row}) is not in B",
                i + 1
            )));
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[BlockWord] {
        &self.rows
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }
}

impl fmt::Display for BuildingBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

impl FromStr for BuildingBlock {
    type Err = BlockError;

    /// One row per line.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()?;
        BuildingBlock::new(rows)
    }
}

/// All initial blocks with `depth + 1` rows grown from `seed`.
///
/// Row `i` is any member of the converting set of the expanded literals of
/// row `i - 1` (of `seed` itself for the first row). A branch dies when a
/// row before the last has no literal left.
pub fn create_initial_blocks(
    seed: &BlockWord,
    depth: usize,
) -> Result<BTreeSet<BuildingBlock>, BlockError> {
    if !is_initial_seed(seed) {
        return Err(BlockError::InvalidSeed(seed.to_string()));
    }
    if depth == 0 {
        return Err(BlockError::ZeroDepth);
    }
    let mut out = BTreeSet::new();
    let mut rows = Vec::with_capacity(depth + 1);
    grow_initial(seed.clone(), depth, &mut rows, &mut out);
    Ok(out)
}

fn grow_initial(
    pending: BlockWord,
    depth: usize,
    rows: &mut Vec<BlockWord>,
    out: &mut BTreeSet<BuildingBlock>,
) {
    let last = rows.len() == depth;
    for row in converting_set(&pending) {
        if last {
            rows.push(row);
            out.insert(BuildingBlock { rows: rows.clone() });
            rows.pop();
            continue;
        }
        if row.literal_count() == 0 {
            continue;
        }
        let next = expand_literals(&row);
        rows.push(row);
        grow_initial(next, depth, rows, out);
        rows.pop();
    }
}

/// Binary suffixes `s` such that `B(b₁·s)` is a single word with exactly one
/// more literal than `b₁`. Shortest first, then canonical order.
pub fn extension_suffixes(first_row: &BlockWord, max_suffix: usize) -> Vec<BlockWord> {
    let base_literals = first_row.literal_count();
    let mut out = Vec::new();
    for len in 1..=max_suffix {
        for bits in 0..(1u32 << len) {
            let suffix = BlockWord(
                (0..len)
                    .map(|k| {
                        if bits >> (len - 1 - k) & 1 == 1 {
                            BlockSymbol::One
                        } else {
                            BlockSymbol::Zero
                        }
                    })
                    .collect(),
            );
            let joined = first_row.concat(&suffix);
            if let Some(only) = unique_conversion(&joined) {
                if only.literal_count() == base_literals + 1 {
                    out.push(suffix);
                }
            }
        }
    }
    out
}

/// All right extensions of `block` with suffixes up to [`DEFAULT_MAX_SUFFIX`].
pub fn extend_right(block: &BuildingBlock) -> Result<BTreeSet<BuildingBlock>, BlockError> {
    extend_right_with(block, DEFAULT_MAX_SUFFIX)
}

/// All right extensions of `block` with suffixes of at most `max_suffix` symbols.
///
/// For each qualifying first suffix the appended material is pushed down
/// the rows: row `i` becomes a member of `B(bᵢ·ŝᵢ)`, and the literals of
/// `ŝᵢ` that survive unchanged are expanded into `ŝᵢ₊₁`. A branch stops
/// once no appended literal survives, or after the last row.
pub fn extend_right_with(
    block: &BuildingBlock,
    max_suffix: usize,
) -> Result<BTreeSet<BuildingBlock>, BlockError> {
    let block = BuildingBlock::new(block.rows.clone())?;
    let suffixes = extension_suffixes(&block.rows[0], max_suffix);
    if suffixes.is_empty() {
        return Err(BlockError::NoExtension);
    }
    let mut out = BTreeSet::new();
    for suffix in suffixes {
        let mut rows = block.rows.clone();
        push_down(&mut rows, 0, suffix, &mut out);
    }
    Ok(out)
}

fn push_down(
    rows: &mut Vec<BlockWord>,
    i: usize,
    suffix: BlockWord,
    out: &mut BTreeSet<BuildingBlock>,
) {
    if i == rows.len() {
        out.insert(BuildingBlock { rows: rows.clone() });
        return;
    }
    let original = rows[i].clone();
    let joined = original.concat(&suffix);
    for replaced in converting_set(&joined) {
        let survivors: Vec<BlockSymbol> = (original.len()..joined.len())
            .map(|j| (joined.symbols()[j], replaced.symbols()[j]))
            .filter(|&(from, to)| from.is_literal() && from == to)
            .map(|(from, _)| from)
            .collect();
        rows[i] = replaced;
        if survivors.is_empty() {
            out.insert(BuildingBlock { rows: rows.clone() });
        } else {
            push_down(rows, i + 1, expand_literals(&BlockWord(survivors)), out);
        }
    }
    rows[i] = original;
}

/// Extension on the left side.
///
/// Not defined: it needs a converting set for prepended material that has
/// no published definition.
pub fn extend_left(_block: &BuildingBlock) -> Result<BTreeSet<BuildingBlock>, BlockError> {
    Err(BlockError::LeftExtensionUndefined)
}
