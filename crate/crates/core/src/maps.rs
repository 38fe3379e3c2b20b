//! Homomorphisms between the four group families.
//!
//! All maps act letterwise and are pure. The parity embedding and its
//! retraction relate plain and parity words; [`parity_to_dots`] and
//! [`dots_to_parity`] realize the isomorphism between the parity group
//! and the even-dot subgroup of the dotted group; the strand-deletion
//! maps and [`dots_to_strand`] relate dotted words on `n` strands to
//! plain words on `n + 1`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::word::{GroupContext, GroupKind, Letter, Parity, Strand, Word};

/// Number of dots per strand of a dotted word; strands with no dots are
/// present with count zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DotCounts {
    counts: BTreeMap<usize, usize>,
}

impl DotCounts {
    pub fn count(&self, strand: usize) -> usize {
        self.counts.get(&strand).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&s, &c)| (s, c))
    }

    pub fn all_even(&self) -> bool {
        self.counts.values().all(|c| c % 2 == 0)
    }

    /// Smallest strand with an odd count, if any.
    pub fn first_odd(&self) -> Option<usize> {
        self.counts
            .iter()
            .find(|(_, c)| *c % 2 == 1)
            .map(|(&s, _)| s)
    }
}

fn expect_kind(word: &Word, kind: GroupKind) -> Result<()> {
    if word.context().kind() != kind {
        return Err(Error::ContextMismatch {
            expected: format!("{}(n={})", kind.name(), word.context().n()),
            got: word.context().to_string(),
        });
    }
    Ok(())
}

/// Embeds a plain word into the parity group by marking every crossing
/// even. Section by [`project_parity`].
pub fn embed_parity(word: &Word) -> Result<Word> {
    expect_kind(word, GroupKind::Plain)?;
    let letters = word
        .letters()
        .iter()
        .map(|l| match *l {
            Letter::Crossing(i, j) => Letter::ParityCrossing(i, j, Parity::Even),
            _ => unreachable!("plain words hold crossings only"),
        })
        .collect();
    Ok(Word::unchecked(
        GroupContext::parity(word.context().n()),
        letters,
    ))
}

/// Retraction of [`embed_parity`]: even crossings keep their pair, odd
/// crossings are erased.
pub fn project_parity(word: &Word) -> Result<Word> {
    expect_kind(word, GroupKind::Parity)?;
    let letters = word
        .letters()
        .iter()
        .filter_map(|l| match *l {
            Letter::ParityCrossing(i, j, Parity::Even) => Some(Letter::Crossing(i, j)),
            Letter::ParityCrossing(_, _, Parity::Odd) => None,
            _ => unreachable!("parity words hold parity crossings only"),
        })
        .collect();
    Ok(Word::unchecked(
        GroupContext::plain(word.context().n()),
        letters,
    ))
}

/// Expands a parity word into a dotted word: an even crossing maps to
/// the bare crossing, an odd crossing `a(i,j;1)` to `t(i) a(i,j) t(i)`.
/// The image always lies in the even-dot subgroup.
pub fn parity_to_dots(word: &Word) -> Result<Word> {
    expect_kind(word, GroupKind::Parity)?;
    let mut letters = Vec::new();
    for l in word.letters() {
        match *l {
            Letter::ParityCrossing(i, j, Parity::Even) => letters.push(Letter::Crossing(i, j)),
            Letter::ParityCrossing(i, j, Parity::Odd) => {
                letters.push(Letter::Dot(i));
                letters.push(Letter::Crossing(i, j));
                letters.push(Letter::Dot(i));
            }
            _ => unreachable!("parity words hold parity crossings only"),
        }
    }
    Ok(Word::unchecked(
        GroupContext::dotted(word.context().n()),
        letters,
    ))
}

/// Exact occurrence count of each dot generator.
pub fn dot_counts(word: &Word) -> Result<DotCounts> {
    expect_kind(word, GroupKind::Dotted)?;
    let mut counts: BTreeMap<usize, usize> = (1..=word.context().n()).map(|s| (s, 0)).collect();
    for l in word.letters() {
        if let Some(s) = l.dot_strand() {
            *counts.get_mut(&s.get()).expect("strand in range") += 1;
        }
    }
    Ok(DotCounts { counts })
}

/// True when every strand carries an even number of dots, i.e. the word
/// lies in the even-dot subgroup.
pub fn all_dots_even(word: &Word) -> Result<bool> {
    Ok(dot_counts(word)?.all_even())
}

/// Reads a parity word off an even-dot word in a single left-to-right
/// pass: the crossing `a(i,j)` receives the bit `(dots on i or j seen
/// so far) mod 2`, and the dots themselves are consumed.
pub fn dots_to_parity(word: &Word) -> Result<Word> {
    let counts = dot_counts(word)?;
    if let Some(strand) = counts.first_odd() {
        return Err(Error::OddDotCount { strand });
    }
    let n = word.context().n();
    let mut seen = vec![0usize; n + 1];
    let mut letters = Vec::new();
    for l in word.letters() {
        match *l {
            Letter::Dot(s) => seen[s.get()] += 1,
            Letter::Crossing(i, j) => {
                let bit = Parity::from_count(seen[i.get()] + seen[j.get()]);
                letters.push(Letter::ParityCrossing(i, j, bit));
            }
            _ => unreachable!("dotted words hold crossings and dots only"),
        }
    }
    Ok(Word::unchecked(GroupContext::parity(n), letters))
}

/// Deletes the last strand of a plain word: crossings avoiding it pass
/// through, a crossing with it leaves a dot on the surviving strand.
pub fn delete_last_strand(word: &Word) -> Result<Word> {
    expect_kind(word, GroupKind::Plain)?;
    delete(word, word.context().n())
}

/// Deletes strand `m` of a plain word: crossings with `m` become dots
/// on the partner strand and every index above `m` shifts down by one.
/// Deleting the last strand coincides with [`delete_last_strand`].
pub fn delete_strand(word: &Word, m: usize) -> Result<Word> {
    expect_kind(word, GroupKind::Plain)?;
    if m < 1 || m > word.context().n() {
        return Err(Error::IndexOutOfRange {
            position: 0,
            index: m,
            n: word.context().n(),
        });
    }
    delete(word, m)
}

fn delete(word: &Word, m: usize) -> Result<Word> {
    let n = word.context().n();
    if n < 2 {
        return Err(Error::ContextMismatch {
            expected: "plain context with at least 2 strands".to_string(),
            got: word.context().to_string(),
        });
    }
    let shift = |s: usize| if s > m { s - 1 } else { s };
    let letters = word
        .letters()
        .iter()
        .map(|l| match *l {
            Letter::Crossing(i, j) => {
                let (i, j) = (i.get(), j.get());
                if i == m {
                    Letter::dot(shift(j))
                } else if j == m {
                    Letter::dot(shift(i))
                } else {
                    Letter::crossing(shift(i), shift(j))
                }
            }
            _ => unreachable!("plain words hold crossings only"),
        })
        .collect();
    Ok(Word::unchecked(GroupContext::dotted(n - 1), letters))
}

/// Re-encodes a dotted word on `n` strands as a word on `n + 1` strands
/// in the quotient-forbidden context: crossings pass through and the
/// dot `t(i)` becomes the crossing `a(i, n+1)` with the new strand.
pub fn dots_to_strand(word: &Word) -> Result<Word> {
    expect_kind(word, GroupKind::Dotted)?;
    let new = word.context().n() + 1;
    let letters = word
        .letters()
        .iter()
        .map(|l| match *l {
            Letter::Crossing(i, j) => Letter::Crossing(i, j),
            Letter::Dot(i) => Letter::Crossing(i, Strand::new(new)),
            _ => unreachable!("dotted words hold crossings and dots only"),
        })
        .collect();
    Ok(Word::unchecked(GroupContext::quotient(new), letters))
}

/// Erases every dot, keeping crossings; a homomorphism onto the plain
/// group since each dotted relation maps to a plain relation or a
/// tautology.
pub fn forget_dots(word: &Word) -> Result<Word> {
    expect_kind(word, GroupKind::Dotted)?;
    let letters = word
        .letters()
        .iter()
        .filter(|l| l.is_crossing())
        .copied()
        .collect();
    Ok(Word::unchecked(
        GroupContext::plain(word.context().n()),
        letters,
    ))
}
