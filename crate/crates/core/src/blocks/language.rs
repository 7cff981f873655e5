//! Deterministic recognizer for `B = {ε,v,vv}{0,1}{uu0,uu1}*{ε,w,ww}`.

use super::word::{BlockSymbol, BlockWord};

/// Recognizer states. `Literal`, `W1` and `W2` accept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BState {
    Start,
    V1,
    V2,
    Literal,
    U1,
    U2,
    W1,
    W2,
}

impl BState {
    pub const ALL: [BState; 8] = [
        BState::Start,
        BState::V1,
        BState::V2,
        BState::Literal,
        BState::U1,
        BState::U2,
        BState::W1,
        BState::W2,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_accepting(self) -> bool {
        matches!(self, BState::Literal | BState::W1 | BState::W2)
    }

    /// Transition, `None` meaning the dead state.
    pub fn next(self, symbol: BlockSymbol) -> Option<BState> {
        use BState::*;
        use BlockSymbol::*;
        match (self, symbol) {
            (Start, V) => Some(V1),
            (V1, V) => Some(V2),
            (Start | V1 | V2 | U2, Zero | One) => Some(Literal),
            (Literal, U) => Some(U1),
            (U1, U) => Some(U2),
            (Literal, W) => Some(W1),
            (W1, W) => Some(W2),
            _ => None,
        }
    }
}

pub fn run_from(state: BState, symbols: &[BlockSymbol]) -> Option<BState> {
    symbols.iter().try_fold(state, |s, &c| s.next(c))
}

/// Membership in `B`.
pub fn is_in_b(word: &BlockWord) -> bool {
    run_from(BState::Start, word.symbols()).is_some_and(BState::is_accepting)
}

/// Membership in `{ε,v,vv}{0,1}{ε,w,ww}`, the seeds of initial blocks.
pub fn is_initial_seed(word: &BlockWord) -> bool {
    is_in_b(word) && word.count(BlockSymbol::U) == 0 && word.literal_count() == 1
}
