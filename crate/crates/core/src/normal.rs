//! Normal forms.
//!
//! Even-dot words normalize to a balanced block form, one block
//! `t(i)^e a(i,j) t(i)^e` per crossing; flattening the block form of
//! `w` agrees letter-for-letter with expanding the parity reading of
//! `w` back into dots. [`block_form_witness`] additionally derives the
//! block form by literal rule applications, pairing each unmatched dot
//! with the nearest following crossing on its strand, so the whole
//! derivation replays step by step.
//!
//! Two-strand parity words form the free product of two order-2
//! generators; [`z2z2_reduce`] computes their exact alternating normal
//! form, which is empty precisely for the identity.

use std::fmt;

use crate::error::{Error, Result};
use crate::maps;
use crate::rewrite::{
    apply_rule_at, commute_rule, dot_shift_rule, square_rule, unwrap_rule, Direction, Witness,
    WitnessStep,
};
use crate::word::{GroupContext, GroupKind, Letter, Parity, Strand, Word};

/// One balanced block `t(i)^e a(i,j) t(i)^e` with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    i: Strand,
    j: Strand,
    parity: Parity,
}

impl Block {
    pub fn new(i: usize, j: usize, parity: Parity) -> Self {
        assert!(i != j, "block strands must be distinct");
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        Block {
            i: Strand::new(i),
            j: Strand::new(j),
            parity,
        }
    }

    pub fn i(&self) -> Strand {
        self.i
    }

    pub fn j(&self) -> Strand {
        self.j
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.parity)
    }
}

/// A sequence of balanced blocks over `n` strands; flattens to an
/// even-dot word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockWord {
    n: usize,
    blocks: Vec<Block>,
}

impl BlockWord {
    pub fn new(n: usize, blocks: Vec<Block>) -> Self {
        assert!(blocks.iter().all(|b| b.j.get() <= n));
        BlockWord { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Expands each block `(i,j,e)` to `t(i)^e a(i,j) t(i)^e`.
    pub fn flatten(&self) -> Word {
        let mut letters = Vec::new();
        for block in &self.blocks {
            let crossing = Letter::Crossing(block.i, block.j);
            match block.parity {
                Parity::Even => letters.push(crossing),
                Parity::Odd => {
                    letters.push(Letter::Dot(block.i));
                    letters.push(crossing);
                    letters.push(Letter::Dot(block.i));
                }
            }
        }
        Word::unchecked(GroupContext::dotted(self.n), letters)
    }
}

impl fmt::Display for BlockWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, block) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{block}")?;
        }
        Ok(())
    }
}

/// Balanced block form of an even-dot word, computed through its parity
/// reading: block `k` carries the parity of the dots on its two strands
/// preceding crossing `k`. Flattening the result equals expanding the
/// parity reading, letter for letter.
pub fn block_form(word: &Word) -> Result<BlockWord> {
    let reading = maps::dots_to_parity(word)?;
    let blocks = reading
        .letters()
        .iter()
        .map(|l| match *l {
            Letter::ParityCrossing(i, j, p) => Block {
                i,
                j,
                parity: p,
            },
            _ => unreachable!("parity words hold parity crossings only"),
        })
        .collect();
    Ok(BlockWord {
        n: word.context().n(),
        blocks,
    })
}

/// Derives the block form by literal rule applications and returns the
/// replayable step sequence from the input to the flattened block word.
///
/// Crossings are processed left to right. Dots that commute past the
/// next crossing are pushed through it; a dot stuck on one of the
/// crossing's strands is balanced around it with a square insertion
/// (switching strands with the balanced-shift rule when needed); a
/// full dot pair slides through its crossing via one unwrap. Leftover
/// dots travel to the end and cancel, which the even-dot precondition
/// guarantees.
pub fn block_form_witness(word: &Word) -> Result<(BlockWord, Witness)> {
    if word.context().kind() != GroupKind::Dotted {
        return Err(Error::ContextMismatch {
            expected: format!("dotted(n={})", word.context().n()),
            got: word.context().to_string(),
        });
    }
    if let Some(strand) = maps::dot_counts(word)?.first_odd() {
        return Err(Error::OddDotCount { strand });
    }

    let mut rw = Rewriter {
        context: word.context(),
        letters: word.letters().to_vec(),
        steps: Vec::new(),
    };
    let mut blocks = Vec::new();
    let mut frozen = 0usize;

    while let Some(offset) = rw.letters[frozen..].iter().position(Letter::is_crossing) {
        let mut c = frozen + offset;
        let (i, j) = rw.letters[c].pair().expect("crossing");
        let (i, j) = (i.get(), j.get());
        c = rw.normalize_zone(frozen, c);
        c = rw.push_through(frozen, c, i, j);
        let has_i = rw.letters[frozen..c].contains(&Letter::dot(i));
        let has_j = rw.letters[frozen..c].contains(&Letter::dot(j));
        match (has_i, has_j) {
            (false, false) => {
                blocks.push(Block::new(i, j, Parity::Even));
                frozen = c + 1;
            }
            (true, false) => {
                rw.insert_pair(c + 1, Letter::dot(i));
                blocks.push(Block::new(i, j, Parity::Odd));
                frozen = c + 2;
            }
            (false, true) => {
                rw.insert_pair(c + 1, Letter::dot(j));
                rw.apply(c - 1, dot_shift_rule(j, i));
                blocks.push(Block::new(i, j, Parity::Odd));
                frozen = c + 2;
            }
            (true, true) => {
                rw.insert_pair(c + 1, Letter::dot(j));
                rw.insert_pair(c + 2, Letter::dot(i));
                rw.apply(c - 2, unwrap_rule(i, j));
                blocks.push(Block::new(i, j, Parity::Even));
                frozen = c - 1;
            }
        }
    }
    let end = rw.normalize_zone(frozen, rw.letters.len());
    debug_assert_eq!(end, frozen, "even-dot words leave no trailing dots");

    let block_word = BlockWord {
        n: word.context().n(),
        blocks,
    };
    debug_assert_eq!(rw.letters, block_word.flatten().letters());
    Ok((block_word, Witness::from_steps(rw.steps)))
}

struct Rewriter {
    context: GroupContext,
    letters: Vec<Letter>,
    steps: Vec<WitnessStep>,
}

impl Rewriter {
    fn apply(&mut self, position: usize, rule: crate::rewrite::RewriteRule) {
        self.letters = apply_rule_at(&self.letters, position, &rule)
            .expect("derivation steps are constructed to match");
        self.steps.push(WitnessStep::new(position, rule));
    }

    fn swap(&mut self, position: usize) {
        let rule = commute_rule(
            self.context,
            &self.letters[position],
            &self.letters[position + 1],
        )
        .expect("swapped letters commute");
        self.apply(position, rule);
    }

    fn insert_pair(&mut self, position: usize, letter: Letter) {
        let rule = square_rule(self.context, letter, Direction::Backward);
        self.apply(position, rule);
    }

    fn delete_pair(&mut self, position: usize) {
        let rule = square_rule(self.context, self.letters[position], Direction::Forward);
        self.apply(position, rule);
    }

    /// Sorts the all-dot zone `[start, end)` by strand and cancels
    /// equal adjacent dots; returns the new zone end.
    fn normalize_zone(&mut self, start: usize, end: usize) -> usize {
        let mut end = end;
        // bubble sort, emitting commutation steps
        loop {
            let mut swapped = false;
            for k in start..end.saturating_sub(1) {
                let (a, b) = (self.letters[k], self.letters[k + 1]);
                if a.dot_strand().expect("zone holds dots") > b.dot_strand().expect("dots") {
                    self.swap(k);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        let mut k = start;
        while k + 1 < end {
            if self.letters[k] == self.letters[k + 1] {
                self.delete_pair(k);
                end -= 2;
                k = k.saturating_sub(1).max(start);
            } else {
                k += 1;
            }
        }
        end
    }

    /// Moves every zone dot not on strands `i`, `j` rightward past the
    /// crossing at `c`; returns the crossing's new position.
    fn push_through(&mut self, start: usize, c: usize, i: usize, j: usize) -> usize {
        let mut c = c;
        let mut k = c;
        while k > start {
            let s = self.letters[k - 1]
                .dot_strand()
                .expect("zone holds dots")
                .get();
            if s == i || s == j {
                k -= 1;
            } else {
                for p in (k - 1)..c {
                    self.swap(p);
                }
                c -= 1;
                k -= 1;
            }
        }
        c
    }
}

/// Alternating normal form in the two-strand parity group: adjacent
/// letters with equal bits cancel until none remain. The result is
/// empty exactly when the word is the identity.
pub fn z2z2_reduce(word: &Word) -> Result<Word> {
    let (reduced, _) = z2z2_witness(word)?;
    Ok(reduced)
}

/// [`z2z2_reduce`] with the cancellation steps recorded.
pub(crate) fn z2z2_witness(word: &Word) -> Result<(Word, Witness)> {
    if word.context().kind() != GroupKind::Parity || word.context().n() != 2 {
        return Err(Error::ContextMismatch {
            expected: "parity(n=2)".to_string(),
            got: word.context().to_string(),
        });
    }
    let mut stack: Vec<Letter> = Vec::new();
    let mut steps = Vec::new();
    for &letter in word.letters() {
        if stack.last() == Some(&letter) {
            stack.pop();
            steps.push(WitnessStep::new(
                stack.len(),
                square_rule(word.context(), letter, Direction::Forward),
            ));
        } else {
            stack.push(letter);
        }
    }
    Ok((
        Word::unchecked(word.context(), stack),
        Witness::from_steps(steps),
    ))
}

/// Keeps exactly the letters on the strand pair `(i, j)`, reindexed to
/// the two-strand parity group. Composing with [`z2z2_reduce`] yields a
/// computable invariant of the word's class.
pub fn pair_projection(word: &Word, i: usize, j: usize) -> Result<Word> {
    if word.context().kind() != GroupKind::Parity {
        return Err(Error::ContextMismatch {
            expected: format!("parity(n={})", word.context().n()),
            got: word.context().to_string(),
        });
    }
    if i < 1 || i >= j || j > word.context().n() {
        return Err(Error::IndexOutOfRange {
            position: 0,
            index: j.max(i),
            n: word.context().n(),
        });
    }
    let letters = word
        .letters()
        .iter()
        .filter_map(|l| match *l {
            Letter::ParityCrossing(a, b, p) if (a.get(), b.get()) == (i, j) => {
                Some(Letter::parity_crossing(1, 2, p))
            }
            _ => None,
        })
        .collect();
    Ok(Word::unchecked(GroupContext::parity(2), letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse;
    use crate::rewrite::replay;

    fn dotted(n: usize, text: &str) -> Word {
        parse(text, GroupContext::dotted(n)).unwrap()
    }

    fn parity(n: usize, text: &str) -> Word {
        parse(text, GroupContext::parity(n)).unwrap()
    }

    #[test]
    fn wrapped_crossing_normalizes_to_a_bare_block() {
        let w = dotted(2, "t(1) t(2) a(1,2) t(2) t(1)");
        let b = block_form(&w).unwrap();
        assert_eq!(b.blocks(), &[Block::new(1, 2, Parity::Even)]);
        assert_eq!(b.flatten(), dotted(2, "a(1,2)"));
    }

    #[test]
    fn deleted_strand_word_normalizes_to_alternating_blocks() {
        let w = dotted(2, "t(1) a(1,2) t(2) a(1,2) t(2) a(1,2) t(1) a(1,2)");
        let b = block_form(&w).unwrap();
        let bits: Vec<Parity> = b.blocks().iter().map(|b| b.parity()).collect();
        assert_eq!(
            bits,
            vec![Parity::Odd, Parity::Even, Parity::Odd, Parity::Even]
        );
        assert!(b.blocks().iter().all(|b| (b.i().get(), b.j().get()) == (1, 2)));
    }

    #[test]
    fn bare_crossing_is_already_a_block() {
        let b = block_form(&dotted(2, "a(1,2)")).unwrap();
        assert_eq!(b.blocks(), &[Block::new(1, 2, Parity::Even)]);
    }

    #[test]
    fn block_form_rejects_odd_dot_counts() {
        assert_eq!(
            block_form(&dotted(2, "t(1) a(1,2)")).unwrap_err(),
            Error::OddDotCount { strand: 1 }
        );
        assert!(block_form_witness(&dotted(2, "t(1) a(1,2)")).is_err());
    }

    #[test]
    fn witness_derivation_lands_on_the_flattened_blocks() {
        for text in [
            "t(1) t(2) a(1,2) t(2) t(1)",
            "t(1) a(1,2) t(2) a(1,2) t(2) a(1,2) t(1) a(1,2)",
            "t(2) a(1,2) t(3) a(1,3) t(2) t(3)",
            "t(1) t(1) t(2) t(2)",
            "",
        ] {
            let w = dotted(3, text);
            let (blocks, witness) = block_form_witness(&w).unwrap();
            assert_eq!(blocks, block_form(&w).unwrap(), "blocks for {text:?}");
            let replayed = replay(&w, &witness).unwrap();
            assert_eq!(replayed, blocks.flatten(), "replay for {text:?}");
        }
    }

    #[test]
    fn flatten_expands_blocks() {
        let b = BlockWord::new(2, vec![Block::new(1, 2, Parity::Odd)]);
        assert_eq!(b.flatten(), dotted(2, "t(1) a(1,2) t(1)"));
        assert!(BlockWord::new(2, vec![]).flatten().is_empty());
        let b = BlockWord::new(
            3,
            vec![Block::new(1, 2, Parity::Even), Block::new(1, 3, Parity::Odd)],
        );
        assert_eq!(b.flatten(), dotted(3, "a(1,2) t(1) a(1,3) t(1)"));
    }

    #[test]
    fn alternating_form_cancels_equal_bits() {
        let w = parity(2, "a(1,2;1) a(1,2;1) a(1,2;0)");
        assert_eq!(z2z2_reduce(&w).unwrap(), parity(2, "a(1,2;0)"));
        let alternating = parity(2, "a(1,2;1) a(1,2;0) a(1,2;1) a(1,2;0)");
        assert_eq!(z2z2_reduce(&alternating).unwrap(), alternating);
        assert!(z2z2_reduce(&Word::identity(GroupContext::parity(2)))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn z2z2_witness_replays() {
        let w = parity(2, "a(1,2;1) a(1,2;1) a(1,2;0) a(1,2;0) a(1,2;1)");
        let (reduced, witness) = z2z2_witness(&w).unwrap();
        assert_eq!(replay(&w, &witness).unwrap(), reduced);
        assert_eq!(reduced, parity(2, "a(1,2;1)"));
    }

    #[test]
    fn pair_projection_filters_and_reindexes() {
        let w = parity(3, "a(1,2;1) a(1,3;0) a(1,2;0)");
        assert_eq!(
            pair_projection(&w, 1, 2).unwrap(),
            parity(2, "a(1,2;1) a(1,2;0)")
        );
        assert!(pair_projection(&w, 2, 3).unwrap().is_empty());
        assert!(pair_projection(&w, 1, 4).is_err());
        assert!(pair_projection(&w, 2, 2).is_err());
    }
}
