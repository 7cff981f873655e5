//! The words `a`, `b`, `c` of the growing family and the published ω tables.

use crate::algebra::Residue;
use crate::error::FamilyError;
use crate::tokens::{decode_tokens, TokenWord};
use crate::word::BinaryWord;

const A_TEXT: &str = include_str!("../data/a.txt");
const B_TEXT: &str = include_str!("../data/b.txt");
const C_TEXT: &str = include_str!("../data/c.txt");
const OMEGA_TABLE: &str = include_str!("../data/omega_table.txt");

pub const A_LEN: usize = 18;
pub const B_LEN: usize = 2402;
pub const C_LEN: usize = 54;

/// Steps from `b` to `a·b·c`.
pub const B_TO_ABC_STEPS: u64 = 10444;

/// Upper bound on tag iterations for one pass around the ω chain.
pub const CHAIN_ITERATION_BOUND: u64 = 20000;

/// Cutting indices x₁ … x₁₄ of the published chain.
pub const OMEGA_CUTS: [u8; 14] = [0, 1, 0, 2, 1, 0, 1, 0, 1, 2, 0, 0, 1, 0];

fn parse_embedded(name: &'static str, text: &str) -> BinaryWord {
    text.trim()
        .parse()
        .unwrap_or_else(|e| panic!("embedded word {name} is malformed: {e}"))
}

pub fn word_a() -> BinaryWord {
    parse_embedded("a", A_TEXT)
}

pub fn word_b() -> BinaryWord {
    parse_embedded("b", B_TEXT)
}

pub fn word_c() -> BinaryWord {
    parse_embedded("c", C_TEXT)
}

/// Checks the embedded words against their known lengths.
pub fn verify_embedded() -> Result<(), FamilyError> {
    for (name, word, expected) in [
        ("a", word_a(), A_LEN),
        ("b", word_b(), B_LEN),
        ("c", word_c(), C_LEN),
    ] {
        if word.len() != expected {
            return Err(FamilyError::CorruptConstant {
                name,
                found: word.len(),
                expected,
            });
        }
    }
    Ok(())
}

/// One row of the published table: `(a_i, c_i, x_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub a: BinaryWord,
    pub c: BinaryWord,
    pub x: Residue,
}

/// The 14 `(a_i, c_i, x_i)` rows of the published chain, decoded from token form.
pub fn omega_table() -> Vec<TableEntry> {
    OMEGA_TABLE
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let mut fields = line.split_whitespace();
            let mut next = || fields.next().expect("three fields per row");
            let a: TokenWord = next().parse().expect("token row");
            let c: TokenWord = next().parse().expect("token row");
            let x: u8 = next().parse().expect("cut index");
            TableEntry {
                a: decode_tokens(&a),
                c: decode_tokens(&c),
                x: Residue::from(x),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tokens::encode_tokens;

    #[test]
    fn embedded_words_have_published_lengths() {
        verify_embedded().unwrap();
        assert_eq!(word_a().to_string(), "000011011101110100");
        assert_eq!(
            word_c().to_string(),
            "000000110111011101000000110111011101000000110111011101"
        );
        assert!(word_b().to_string().starts_with("000000110111010000001101"));
        assert!(word_b()
            .to_string()
            .ends_with("0111010011010000000000110111011101"));
    }

    #[test]
    fn all_three_are_token_words() {
        assert_eq!(encode_tokens(&word_a()).unwrap().to_string(), "ZZOOOZ");
        assert_eq!(
            encode_tokens(&word_c()).unwrap().to_string(),
            "ZZZOOOZZZOOOZZZOOO"
        );
        assert!(encode_tokens(&word_b()).is_ok());
    }

    #[test]
    fn table_rows() {
        let rows = omega_table();
        assert_eq!(rows.len(), 14);
        let cuts: Vec<u8> = rows.iter().map(|r| r.x.value()).collect();
        assert_eq!(cuts, OMEGA_CUTS);
        for i in [0, 13] {
            assert_eq!(rows[i].a, word_a());
            assert_eq!(rows[i].c, word_c());
            assert_eq!(rows[i].x, Residue::ZERO);
        }
        assert_eq!(rows[1].a.to_string(), "000000110111011101");
        // a₁₀ = ZZOOOZ, and a₁₁ = ZOOOZZ
        assert_eq!(encode_tokens(&rows[9].a).unwrap().to_string(), "ZZOOOZ");
        assert_eq!(rows[9].x, Residue::TWO);
        assert_eq!(encode_tokens(&rows[10].a).unwrap().to_string(), "ZOOOZZ");
    }
}
