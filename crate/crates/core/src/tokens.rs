//! Compact rendering of words built from the two productions.
//!
//! `Z` stands for `00` and `O` for `1101`.

use std::fmt;
use std::str::FromStr;

use crate::error::TokenError;
use crate::word::BinaryWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    /// `00`
    Z,
    /// `1101`
    O,
}

impl Token {
    pub fn expansion(self) -> &'static [bool] {
        match self {
            Token::Z => &[false, false],
            Token::O => &[true, true, false, true],
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Token::Z => 'Z',
            Token::O => 'O',
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TokenWord(pub Vec<Token>);

impl TokenWord {
    pub fn tokens(&self) -> &[Token] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for TokenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|t| t.as_char()).collect();
        f.write_str(&s)
    }
}

impl FromStr for TokenWord {
    type Err = TokenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(position, c)| match c {
                'Z' => Ok(Token::Z),
                'O' => Ok(Token::O),
                found => Err(TokenError::BadToken { position, found }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(TokenWord)
    }
}

/// Greedy parse into `00` / `1101` segments.
///
/// The two tokens start with different symbols, so greedy parsing is the only parsing.
pub fn encode_tokens(word: &BinaryWord) -> Result<TokenWord, TokenError> {
    let mut tokens = Vec::with_capacity(word.len() / 2);
    let mut i = 0;
    while i < word.len() {
        let token = match word.get(i) {
            Some(false) => Token::Z,
            _ => Token::O,
        };
        let expected = token.expansion();
        let fits = expected
            .iter()
            .enumerate()
            .all(|(k, &bit)| word.get(i + k) == Some(bit));
        if !fits {
            return Err(TokenError::NotTokenizable { position: i });
        }
        tokens.push(token);
        i += expected.len();
    }
    Ok(TokenWord(tokens))
}

pub fn decode_tokens(tokens: &TokenWord) -> BinaryWord {
    BinaryWord::from_bits(tokens.0.iter().flat_map(|t| t.expansion().iter().copied()))
}
