//! Building blocks over `{v, u, w, 0, 1}` and the search for periodic candidates.

mod building;
mod conditions;
mod converting;
mod language;
mod search;
mod word;

pub use building::{
    create_initial_blocks, extend_left, extend_right, extend_right_with, extension_suffixes,
    BuildingBlock, DEFAULT_MAX_SUFFIX,
};
pub use conditions::{check_conditions, cond_iv_unreachable, ConditionReport, Origin, Provenance};
pub use converting::{converting_members, converting_set, replacements, unique_conversion};
pub use language::{is_in_b, is_initial_seed, BState};
pub use search::{initial_seeds, render_outcome, search, Found, SearchConfig, SearchOutcome};
pub use word::{expand_literals, BlockSymbol, BlockWord};
