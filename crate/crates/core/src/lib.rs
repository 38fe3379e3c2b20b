//! Free braid groups on `n` strands, presented by involutive crossing
//! generators, together with their parity and dotted enhancements and
//! the forbidden-move quotient that absorbs dots into an extra strand.
//!
//! The crate provides:
//!
//! * words over the four presentations with validation, involutive
//!   reduction, and a text grammar ([`word`], [`grammar`]);
//! * the presentations as rewrite rules with one-step neighborhoods and
//!   a bounded, witness-producing equivalence oracle ([`rewrite`]);
//! * the homomorphisms between the groups: parity embedding and
//!   projection, the dot expansion of parity words and its inverse
//!   reading, strand deletion, and the dot-to-strand encoding
//!   ([`maps`]);
//! * normal forms: the balanced block form on even-dot words and the
//!   exact alternating form for two-strand parity words ([`normal`]);
//! * class invariants, strand-deletion profiles, nontriviality
//!   certificates, and a Brunnian candidate detector ([`invariants`]);
//! * position-encoded braid diagrams with Artin moves and the word map
//!   on colored pure diagrams ([`diagram`]).
//!
//! All values are immutable after construction and all operations are
//! pure functions, so everything is safe to share across threads.
//!
//! ```
//! use freebraid::{parse, GroupContext};
//! use freebraid::invariants::{brunnian_check, CandidateVerdict};
//! use freebraid::rewrite::SearchBounds;
//!
//! // a braid whose every strand deletion is trivial, yet which is
//! // certified nontrivial through its deletion parities
//! let beta = parse(
//!     "a(1,2) a(2,3) a(1,3) a(2,3) a(1,3) a(2,3) a(1,2) a(2,3)",
//!     GroupContext::plain(3),
//! )?;
//! let report = brunnian_check(&beta, &SearchBounds::default())?;
//! assert_eq!(report.candidate, CandidateVerdict::Candidate);
//! assert_eq!(report.certificate.unwrap().strand, 1);
//! # Ok::<(), freebraid::Error>(())
//! ```

pub mod diagram;
pub mod error;
pub mod grammar;
pub mod invariants;
pub mod maps;
pub mod normal;
pub mod rewrite;
mod search;
pub mod word;

pub use error::{Error, Result};
pub use grammar::{parse, render};
pub use word::{GroupContext, GroupKind, Letter, Parity, Strand, Word};
