//! Error type shared by all word, map, and diagram operations.

use thiserror::Error;

/// Errors produced by word validation, parsing, homomorphisms, the
/// rewriting oracle, and diagram operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A letter references a strand outside `1..=n` of its context.
    #[error("letter {position}: strand index {index} out of range 1..={n}")]
    IndexOutOfRange {
        position: usize,
        index: usize,
        n: usize,
    },
    /// A letter species is not legal in the word's context kind.
    #[error("letter {position}: {letter} is not legal in a {kind} context")]
    LetterKindMismatch {
        position: usize,
        letter: String,
        kind: String,
    },
    /// A crossing was built or supplied with indices not in canonical
    /// `i < j` order (equal indices included).
    #[error("letter {position}: crossing indices must satisfy i < j")]
    NonCanonicalCrossing { position: usize },
    /// Two words that must share a context do not, or a map was applied
    /// to a word from the wrong group.
    #[error("context mismatch: expected {expected}, got {got}")]
    ContextMismatch { expected: String, got: String },
    /// Text did not match the word or diagram grammar.
    #[error("syntax error at byte {position}: expected {expected}")]
    Syntax { position: usize, expected: String },
    /// A dotted word has an odd number of dots on some strand, so it is
    /// outside the even-dot subgroup.
    #[error("odd number of dots on strand {strand}")]
    OddDotCount { strand: usize },
    /// A diagram event references a crossing position outside `1..=n-1`.
    #[error("event {index}: position {position} out of range 1..={max}")]
    EventOutOfRange {
        index: usize,
        position: usize,
        max: usize,
    },
    /// A word was requested for a diagram whose permutation is not the
    /// identity.
    #[error("diagram is not pure: permutation is not the identity")]
    NotPure,
    /// A coloring is not a bijection on the diagram's strands.
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    /// An Artin move does not match the diagram at the stated location.
    #[error("move pattern does not match: {0}")]
    PatternMismatch(String),
    /// A witness step's left-hand side does not match the word at the
    /// stated position.
    #[error("witness step {step} does not apply at position {position}")]
    WitnessMismatch { step: usize, position: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
