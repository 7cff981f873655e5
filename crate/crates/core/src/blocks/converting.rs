//! Converting sets `B(s)`: members of `B` reachable from `s` by the allowed
//! position-wise replacements.
//!
//! Built as a product of the per-position choice sets with the `B`
//! recognizer: a backward pass marks which recognizer states can still
//! reach acceptance from each position, and a forward walk only follows
//! live transitions, so every leaf it reaches is a member.

use std::collections::BTreeSet;

use super::language::BState;
use super::word::{BlockSymbol, BlockWord};

/// Symbols position `i` may hold in a member of `B(s)` when `s[i] = symbol`, canonical order.
pub fn replacements(symbol: BlockSymbol) -> &'static [BlockSymbol] {
    use BlockSymbol::*;
    match symbol {
        Zero => &[Zero, U, V, W],
        One => &[One, U, V, W],
        W => &[U, W],
        V => &[V],
        U => &[U],
    }
}

type StateSet = u16;

fn contains(set: StateSet, s: BState) -> bool {
    set & (1 << s.index()) != 0
}

fn live_states(word: &BlockWord) -> Vec<StateSet> {
    let n = word.len();
    let mut live = vec![0 as StateSet; n + 1];
    for s in BState::ALL {
        if s.is_accepting() {
            live[n] |= 1 << s.index();
        }
    }
    for i in (0..n).rev() {
        let choices = replacements(word.symbols()[i]);
        for s in BState::ALL {
            let ok = choices
                .iter()
                .any(|&c| s.next(c).is_some_and(|t| contains(live[i + 1], t)));
            if ok {
                live[i] |= 1 << s.index();
            }
        }
    }
    live
}

/// Up to `limit` members of `B(word)` in canonical order.
pub fn converting_members(word: &BlockWord, limit: usize) -> Vec<BlockWord> {
    let live = live_states(word);
    let mut out = Vec::new();
    if !contains(live[0], BState::Start) || limit == 0 {
        return out;
    }
    let mut buf = Vec::with_capacity(word.len());
    walk(word, &live, BState::Start, &mut buf, &mut out, limit);
    out
}

fn walk(
    word: &BlockWord,
    live: &[StateSet],
    state: BState,
    buf: &mut Vec<BlockSymbol>,
    out: &mut Vec<BlockWord>,
    limit: usize,
) {
    let i = buf.len();
    if i == word.len() {
        out.push(BlockWord(buf.clone()));
        return;
    }
    for &c in replacements(word.symbols()[i]) {
        if out.len() >= limit {
            return;
        }
        if let Some(next) = state.next(c).filter(|&t| contains(live[i + 1], t)) {
            buf.push(c);
            walk(word, live, next, buf, out, limit);
            buf.pop();
        }
    }
}

/// `B(word)`.
pub fn converting_set(word: &BlockWord) -> BTreeSet<BlockWord> {
    converting_members(word, usize::MAX).into_iter().collect()
}

/// The single member of `B(word)`, if there is exactly one.
pub fn unique_conversion(word: &BlockWord) -> Option<BlockWord> {
    let mut members = converting_members(word, 2);
    (members.len() == 1).then(|| members.pop().expect("one member"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(words: &[&str]) -> BTreeSet<BlockWord> {
        words.iter().map(|s| s.parse().unwrap()).collect()
    }

    fn b(s: &str) -> BTreeSet<BlockWord> {
        converting_set(&s.parse().unwrap())
    }

    #[test]
    fn worked_examples() {
        assert_eq!(b("1uu11100"), set(&["1uu1uu0w"]));
        assert_eq!(b("v1w0"), set(&["v1ww"]));
        assert_eq!(b("0000"), set(&["0uu0", "v0ww", "vv0w"]));
        assert_eq!(b("111"), set(&["1ww", "v1w", "vv1"]));
        assert_eq!(b("10101"), set(&["1uu0w", "v0uu1", "vv1ww"]));
        assert_eq!(b("w1v"), set(&[]));
    }

    #[test]
    fn output_is_canonically_ordered_and_limited() {
        let all = converting_members(&"0000".parse().unwrap(), usize::MAX);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(converting_members(&"0000".parse().unwrap(), 2).len(), 2);
        assert_eq!(
            unique_conversion(&"v1w0".parse().unwrap())
                .unwrap()
                .to_string(),
            "v1ww"
        );
        assert_eq!(unique_conversion(&"0000".parse().unwrap()), None);
        assert_eq!(unique_conversion(&"w1v".parse().unwrap()), None);
    }

    #[test]
    fn empty_word_has_no_conversion() {
        assert!(b("").is_empty());
    }
}
