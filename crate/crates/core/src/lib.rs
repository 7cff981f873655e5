//! Post's tag system `{N = 3, 0 → 00, 1 → 1101}`: a fast simulator, the
//! mod-3 algebra of one-pass maps, a checker for the infinitely growing
//! family `aⁿ b cᵐ`, and the building-block search tools.

pub mod algebra;
pub mod blocks;
pub mod certificate;
pub mod constants;
pub mod error;
pub mod family;
pub mod tag;
pub mod tokens;
pub mod word;

pub use algebra::{cut, full_pass, full_pass_closed_form, length_residue, sample_produce, Residue};
pub use error::{AlgebraError, BlockError, CertificateError, FamilyError, TagError, TokenError};
pub use family::{derive_next, instantiate, verify_chain, verify_theorem_direct, Quadruplet};
pub use tag::{run, step, OutcomeKind, RunOutcome, TagRules};
pub use tokens::{decode_tokens, encode_tokens, Token, TokenWord};
pub use word::BinaryWord;
