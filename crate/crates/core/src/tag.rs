//! The tag system itself: single steps and classified bounded runs.

use crate::error::TagError;
use crate::word::{BinaryWord, Tape};

/// Deletion number and productions for a two-symbol tag system.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TagRules {
    deletion: usize,
    on_zero: BinaryWord,
    on_one: BinaryWord,
}

impl TagRules {
    pub fn new(deletion: usize, on_zero: BinaryWord, on_one: BinaryWord) -> Result<Self, TagError> {
        if deletion == 0 {
            return Err(TagError::ZeroDeletion);
        }
        Ok(Self {
            deletion,
            on_zero,
            on_one,
        })
    }

    /// Post's system: delete 3, 0 → 00, 1 → 1101.
    pub fn post() -> Self {
        Self {
            deletion: 3,
            on_zero: BinaryWord::from_bits([false, false]),
            on_one: BinaryWord::from_bits([true, true, false, true]),
        }
    }

    pub fn deletion_number(&self) -> usize {
        self.deletion
    }

    pub fn production(&self, symbol: bool) -> &BinaryWord {
        if symbol {
            &self.on_one
        } else {
            &self.on_zero
        }
    }

    /// Advances `tape` by one step; `false` if the configuration is halted.
    #[inline]
    pub(crate) fn advance(&self, tape: &mut Tape) -> bool {
        if tape.len() < self.deletion {
            return false;
        }
        let head = tape.front().expect("non-empty");
        tape.push_word(self.production(head));
        tape.pop_front(self.deletion);
        true
    }
}

impl Default for TagRules {
    fn default() -> Self {
        Self::post()
    }
}

/// One application of the rules.
pub fn step(word: &BinaryWord, rules: &TagRules) -> Result<BinaryWord, TagError> {
    let mut tape = Tape::from_word(word);
    if !rules.advance(&mut tape) {
        return Err(TagError::WordTooShort {
            len: word.len(),
            needed: rules.deletion,
        });
    }
    Ok(tape.to_word())
}

/// Applies `count` steps, failing if the configuration halts first.
pub fn step_n(word: &BinaryWord, rules: &TagRules, count: usize) -> Result<BinaryWord, TagError> {
    let mut tape = Tape::from_word(word);
    for _ in 0..count {
        if !rules.advance(&mut tape) {
            return Err(TagError::WordTooShort {
                len: tape.len(),
                needed: rules.deletion,
            });
        }
    }
    Ok(tape.to_word())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OutcomeKind {
    /// The configuration became shorter than the deletion number.
    Halted,
    /// The configuration at `steps_taken` equals the one at `steps_taken - cycle_length`.
    Cycled {
        cycle_length: u64,
    },
    BudgetExhausted,
    TargetReached,
}

impl OutcomeKind {
    pub fn name(&self) -> &'static str {
        match self {
            OutcomeKind::Halted => "Halted",
            OutcomeKind::Cycled { .. } => "Cycled",
            OutcomeKind::BudgetExhausted => "BudgetExhausted",
            OutcomeKind::TargetReached => "TargetReached",
        }
    }
}

/// Result of [`run`].
///
/// For `Cycled`, `steps_taken` is the index of the first repeated
/// configuration and `final_word` is the configuration that starts the
/// cycle, i.e. the one reached at `steps_taken - cycle_length` and again at
/// `steps_taken`. For every other kind `final_word` is the configuration
/// after `steps_taken` steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub kind: OutcomeKind,
    pub steps_taken: u64,
    pub final_word: BinaryWord,
}

impl RunOutcome {
    pub fn cycle_length(&self) -> Option<u64> {
        match self.kind {
            OutcomeKind::Cycled { cycle_length } => Some(cycle_length),
            _ => None,
        }
    }
}

enum Event {
    Halted,
    Target,
}

/// Runs the system from `start` for at most `budget` steps.
///
/// Cycle detection races a second copy at double speed (Floyd) and then
/// recovers the tail length and period, so memory stays at a few
/// configurations regardless of run length. The lead copy also checks
/// every index it passes for halting and for `target`; the first event in
/// step order wins.
pub fn run(
    start: &BinaryWord,
    rules: &TagRules,
    budget: u64,
    target: Option<&BinaryWord>,
) -> Result<RunOutcome, TagError> {
    if budget == 0 {
        return Err(TagError::ZeroBudget);
    }
    let event_at = |tape: &Tape| -> Option<Event> {
        if target.is_some_and(|t| tape.eq_word(t)) {
            Some(Event::Target)
        } else if tape.len() < rules.deletion {
            Some(Event::Halted)
        } else {
            None
        }
    };
    let finish = |event: Event, index: u64, tape: &Tape| RunOutcome {
        kind: match event {
            Event::Halted => OutcomeKind::Halted,
            Event::Target => OutcomeKind::TargetReached,
        },
        steps_taken: index,
        final_word: tape.to_word(),
    };

    let mut hare = Tape::from_word(start);
    let mut hare_index = 0u64;
    if let Some(event) = event_at(&hare) {
        return Ok(finish(event, 0, &hare));
    }
    let mut tortoise = Tape::from_word(start);
    let mut tortoise_index = 0u64;
    let mut at_budget: Option<BinaryWord> = None;

    let exhausted = |at_budget: Option<BinaryWord>| RunOutcome {
        kind: OutcomeKind::BudgetExhausted,
        steps_taken: budget,
        final_word: at_budget.expect("lead copy passed the budget"),
    };

    loop {
        for _ in 0..2 {
            rules.advance(&mut hare);
            hare_index += 1;
            if hare_index == budget {
                at_budget = Some(hare.to_word());
            }
            if let Some(event) = event_at(&hare) {
                // Events past the budget rule out any earlier repeat as well.
                if hare_index <= budget {
                    return Ok(finish(event, hare_index, &hare));
                }
                return Ok(exhausted(at_budget));
            }
        }
        rules.advance(&mut tortoise);
        tortoise_index += 1;
        if tortoise.eq_tape(&hare) {
            break;
        }
        // Meeting index is at least max(tail, period), so the first repeat is past the budget.
        if tortoise_index > budget {
            return Ok(exhausted(at_budget));
        }
    }

    let mut tail = 0u64;
    let mut from_start = Tape::from_word(start);
    while !from_start.eq_tape(&tortoise) {
        rules.advance(&mut from_start);
        rules.advance(&mut tortoise);
        tail += 1;
    }
    let mut period = 1u64;
    let mut probe = from_start.clone();
    rules.advance(&mut probe);
    while !probe.eq_tape(&from_start) {
        rules.advance(&mut probe);
        period += 1;
    }
    if tail + period > budget {
        return Ok(exhausted(at_budget));
    }
    Ok(RunOutcome {
        kind: OutcomeKind::Cycled {
            cycle_length: period,
        },
        steps_taken: tail + period,
        final_word: from_start.to_word(),
    })
}
