//! Letters, words, and group contexts.
//!
//! Four families of groups share the same word machinery. Each is
//! presented by involutive generators:
//!
//! * plain: one crossing generator `a(i,j)` per strand pair,
//! * parity: crossings carry a bit, `a(i,j;0)` and `a(i,j;1)`,
//! * dotted: plain crossings plus a dot generator `t(i)` per strand,
//! * quotient-forbidden: the plain presentation on `n` strands with the
//!   extra relations making crossings on the last strand commute.
//!
//! A [`Word`] is a finite letter sequence tagged with its
//! [`GroupContext`]; the empty word is the identity. All values are
//! immutable after construction.

use std::fmt;

use crate::error::{Error, Result};

/// 1-based strand index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Strand(usize);

impl Strand {
    /// Panics if `index` is zero; strands are numbered from 1.
    pub fn new(index: usize) -> Self {
        assert!(index >= 1, "strand indices are 1-based");
        Strand(index)
    }

    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for Strand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Crossing parity bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Option<Self> {
        match bit {
            0 => Some(Parity::Even),
            1 => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_count(count: usize) -> Self {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl std::ops::BitXor for Parity {
    type Output = Parity;

    fn bitxor(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// One symbol of a word.
///
/// Crossings store their strand pair in canonical `i < j` order; the
/// constructors sort unordered input silently. Hand-built variants that
/// break the order are rejected by [`Word::new`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// Crossing of strands `i` and `j` (plain, dotted, and quotient
    /// contexts).
    Crossing(Strand, Strand),
    /// Crossing with a parity bit (parity contexts).
    ParityCrossing(Strand, Strand, Parity),
    /// Dot on one strand (dotted contexts).
    Dot(Strand),
}

impl Letter {
    /// Panics if `i == j` or either index is zero.
    pub fn crossing(i: usize, j: usize) -> Self {
        assert!(i != j, "crossing strands must be distinct");
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        Letter::Crossing(Strand::new(i), Strand::new(j))
    }

    /// Panics if `i == j` or either index is zero.
    pub fn parity_crossing(i: usize, j: usize, parity: Parity) -> Self {
        assert!(i != j, "crossing strands must be distinct");
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        Letter::ParityCrossing(Strand::new(i), Strand::new(j), parity)
    }

    /// Panics if `i` is zero.
    pub fn dot(i: usize) -> Self {
        Letter::Dot(Strand::new(i))
    }

    /// Strand pair of a crossing letter, `None` for dots.
    pub fn pair(&self) -> Option<(Strand, Strand)> {
        match *self {
            Letter::Crossing(i, j) | Letter::ParityCrossing(i, j, _) => Some((i, j)),
            Letter::Dot(_) => None,
        }
    }

    pub fn parity(&self) -> Option<Parity> {
        match *self {
            Letter::ParityCrossing(_, _, p) => Some(p),
            _ => None,
        }
    }

    pub fn dot_strand(&self) -> Option<Strand> {
        match *self {
            Letter::Dot(i) => Some(i),
            _ => None,
        }
    }

    pub fn is_crossing(&self) -> bool {
        !matches!(self, Letter::Dot(_))
    }

    /// True if the letter touches strand `s`.
    pub fn involves(&self, s: Strand) -> bool {
        match *self {
            Letter::Crossing(i, j) | Letter::ParityCrossing(i, j, _) => i == s || j == s,
            Letter::Dot(i) => i == s,
        }
    }

    /// Largest strand index referenced by the letter.
    pub fn max_strand(&self) -> usize {
        match *self {
            Letter::Crossing(_, j) | Letter::ParityCrossing(_, j, _) => j.get(),
            Letter::Dot(i) => i.get(),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Letter::Crossing(i, j) => write!(f, "a({i},{j})"),
            Letter::ParityCrossing(i, j, p) => write!(f, "a({i},{j};{p})"),
            Letter::Dot(i) => write!(f, "t({i})"),
        }
    }
}

/// Which relation set applies to a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupKind {
    Plain,
    Parity,
    Dotted,
    /// Plain presentation whose last strand is distinguished: crossings
    /// that both touch it commute.
    QuotientForbidden,
}

impl GroupKind {
    pub fn name(self) -> &'static str {
        match self {
            GroupKind::Plain => "plain",
            GroupKind::Parity => "parity",
            GroupKind::Dotted => "dotted",
            GroupKind::QuotientForbidden => "quotient-forbidden",
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Strand count plus relation-set kind; travels with every word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupContext {
    n: usize,
    kind: GroupKind,
}

impl GroupContext {
    /// Panics if `n` is zero.
    pub fn new(n: usize, kind: GroupKind) -> Self {
        assert!(n >= 1, "strand count must be positive");
        GroupContext { n, kind }
    }

    pub fn plain(n: usize) -> Self {
        Self::new(n, GroupKind::Plain)
    }

    pub fn parity(n: usize) -> Self {
        Self::new(n, GroupKind::Parity)
    }

    pub fn dotted(n: usize) -> Self {
        Self::new(n, GroupKind::Dotted)
    }

    /// Quotient of the plain `n`-strand group by commutation of
    /// crossings sharing the last strand.
    pub fn quotient(n: usize) -> Self {
        Self::new(n, GroupKind::QuotientForbidden)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    /// The distinguished strand of a quotient context (its last).
    pub fn distinguished_strand(&self) -> Option<Strand> {
        match self.kind {
            GroupKind::QuotientForbidden => Some(Strand::new(self.n)),
            _ => None,
        }
    }

    /// Context-kind legality of a letter species, ignoring index bounds.
    pub fn admits(&self, letter: &Letter) -> bool {
        match (self.kind, letter) {
            (GroupKind::Parity, Letter::ParityCrossing(..)) => true,
            (GroupKind::Parity, _) => false,
            (GroupKind::Dotted, Letter::ParityCrossing(..)) => false,
            (GroupKind::Dotted, _) => true,
            (_, Letter::Crossing(..)) => true,
            _ => false,
        }
    }

    /// Every generator of the context as a single letter, in canonical
    /// order.
    pub fn generators(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                match self.kind {
                    GroupKind::Parity => {
                        out.push(Letter::parity_crossing(i, j, Parity::Even));
                        out.push(Letter::parity_crossing(i, j, Parity::Odd));
                    }
                    _ => out.push(Letter::crossing(i, j)),
                }
            }
        }
        if self.kind == GroupKind::Dotted {
            for i in 1..=self.n {
                out.push(Letter::dot(i));
            }
        }
        out
    }
}

impl fmt::Display for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={})", self.kind, self.n)
    }
}

/// A word in one of the four groups: the identity is the empty word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    context: GroupContext,
    letters: Vec<Letter>,
}

impl Word {
    /// Builds a word after checking every letter against the context;
    /// this is the validation entry point.
    pub fn new(context: GroupContext, letters: Vec<Letter>) -> Result<Self> {
        for (position, letter) in letters.iter().enumerate() {
            validate_letter(&context, position, letter)?;
        }
        Ok(Word { context, letters })
    }

    /// The identity element of the context's group.
    pub fn identity(context: GroupContext) -> Self {
        Word {
            context,
            letters: Vec::new(),
        }
    }

    /// Internal constructor for letters already known to be valid.
    pub(crate) fn unchecked(context: GroupContext, letters: Vec<Letter>) -> Self {
        debug_assert!(letters
            .iter()
            .enumerate()
            .all(|(p, l)| validate_letter(&context, p, l).is_ok()));
        Word { context, letters }
    }

    pub fn context(&self) -> GroupContext {
        self.context
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Re-checks every letter of an existing word.
    pub fn validate(&self) -> Result<()> {
        for (position, letter) in self.letters.iter().enumerate() {
            validate_letter(&self.context, position, letter)?;
        }
        Ok(())
    }

    /// Concatenation within one context.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.context != other.context {
            return Err(Error::ContextMismatch {
                expected: self.context.to_string(),
                got: other.context.to_string(),
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            context: self.context,
            letters,
        })
    }

    /// Deletes adjacent equal letters until none remain. Every
    /// generator is an involution, so the result is equal to the input
    /// in its group. Parity crossings cancel only when indices and
    /// parity bit all match.
    pub fn involutive_reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &letter in &self.letters {
            if stack.last() == Some(&letter) {
                stack.pop();
            } else {
                stack.push(letter);
            }
        }
        Word {
            context: self.context,
            letters: stack,
        }
    }

    /// The group inverse: since every generator is an involution this
    /// is the letter reversal.
    pub fn inverse(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word {
            context: self.context,
            letters,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, letter) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

fn validate_letter(context: &GroupContext, position: usize, letter: &Letter) -> Result<()> {
    if !context.admits(letter) {
        return Err(Error::LetterKindMismatch {
            position,
            letter: letter.to_string(),
            kind: context.kind().name().to_string(),
        });
    }
    if let Some((i, j)) = letter.pair() {
        if i >= j {
            return Err(Error::NonCanonicalCrossing { position });
        }
    }
    let max = letter.max_strand();
    if max > context.n() {
        return Err(Error::IndexOutOfRange {
            position,
            index: max,
            n: context.n(),
        });
    }
    Ok(())
}
