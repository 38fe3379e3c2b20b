//! Position-encoded free braid diagrams.
//!
//! A diagram is a strand count plus an ordered list of crossing events,
//! each naming the pair of adjacent positions whose occupants cross,
//! read top to bottom. Pure diagrams (identity permutation) with a
//! strand coloring map to plain words: each event emits the crossing of
//! the two component numbers occupying the crossing positions. The
//! three Artin moves act on the event list and change the word by at
//! most one relation application.
//!
//! Text format: the header `braid n=<n>` followed by whitespace-
//! separated event positions, e.g. `braid n=3 1 2 2 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{GroupContext, Letter, Word};

/// Colored strand count plus crossing events on adjacent positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidDiagram {
    n: usize,
    events: Vec<usize>,
}

impl BraidDiagram {
    /// Events are 1-based positions in `1..=n-1`.
    pub fn new(n: usize, events: Vec<usize>) -> Result<Self> {
        assert!(n >= 1, "strand count must be positive");
        for (index, &position) in events.iter().enumerate() {
            if position < 1 || position >= n {
                return Err(Error::EventOutOfRange {
                    index,
                    position,
                    max: n.saturating_sub(1),
                });
            }
        }
        Ok(BraidDiagram { n, events })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn events(&self) -> &[usize] {
        &self.events
    }

    /// Final position of each strand: entry `s - 1` is where the strand
    /// starting at position `s` ends, found by replaying the events as
    /// adjacent transpositions.
    pub fn permutation(&self) -> Vec<usize> {
        let mut occupant: Vec<usize> = (1..=self.n).collect();
        for &p in &self.events {
            occupant.swap(p - 1, p);
        }
        let mut perm = vec![0; self.n];
        for (slot, &strand) in occupant.iter().enumerate() {
            perm[strand - 1] = slot + 1;
        }
        perm
    }

    /// True when every strand returns to its starting position.
    pub fn is_pure(&self) -> bool {
        self.permutation()
            .iter()
            .enumerate()
            .all(|(k, &p)| p == k + 1)
    }
}

impl fmt::Display for BraidDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "braid n={}", self.n)?;
        for &p in &self.events {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

/// Assignment of component numbers to initial positions; a bijection on
/// `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        let n = colors.len();
        let mut seen = vec![false; n];
        for &c in &colors {
            if c < 1 || c > n || seen[c - 1] {
                return Err(Error::InvalidColoring(format!(
                    "expected a bijection on 1..={n}"
                )));
            }
            seen[c - 1] = true;
        }
        Ok(Coloring { colors })
    }

    /// Component numbers matching initial positions.
    pub fn identity(n: usize) -> Self {
        Coloring {
            colors: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Component number at initial position `q`.
    pub fn color(&self, q: usize) -> usize {
        self.colors[q - 1]
    }
}

/// Reads a plain word off a colored pure diagram: each event, in height
/// order, emits the crossing of the component numbers currently at the
/// two crossing positions. The word length equals the event count.
pub fn diagram_to_word(diagram: &BraidDiagram, coloring: &Coloring) -> Result<Word> {
    if coloring.len() != diagram.n() {
        return Err(Error::InvalidColoring(format!(
            "coloring covers {} strands, diagram has {}",
            coloring.len(),
            diagram.n()
        )));
    }
    if !diagram.is_pure() {
        return Err(Error::NotPure);
    }
    let mut occupant: Vec<usize> = (1..=diagram.n()).map(|q| coloring.color(q)).collect();
    let mut letters = Vec::with_capacity(diagram.events().len());
    for &p in diagram.events() {
        letters.push(Letter::crossing(occupant[p - 1], occupant[p]));
        occupant.swap(p - 1, p);
    }
    Ok(Word::unchecked(GroupContext::plain(diagram.n()), letters))
}

/// The three Artin moves, addressed by event index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArtinMove {
    /// Insert two equal events at `index`.
    InsertSquare { index: usize, position: usize },
    /// Delete the equal events at `index` and `index + 1`.
    DeleteSquare { index: usize },
    /// Swap the events at `index` and `index + 1`, whose positions must
    /// differ by at least 2.
    FarCommute { index: usize },
    /// Rewrite events `p q p` at `index` (with `|p - q| = 1`) to
    /// `q p q`.
    Triangle { index: usize },
}

/// Applies one Artin move; the word of the result differs from the word
/// of the input by at most one relation application.
pub fn apply_artin_move(diagram: &BraidDiagram, mv: &ArtinMove) -> Result<BraidDiagram> {
    let events = diagram.events();
    let mut out = events.to_vec();
    match *mv {
        ArtinMove::InsertSquare { index, position } => {
            if index > events.len() {
                return Err(Error::PatternMismatch(format!(
                    "insertion index {index} past the {} events",
                    events.len()
                )));
            }
            if position < 1 || position >= diagram.n() {
                return Err(Error::PatternMismatch(format!(
                    "position {position} outside 1..={}",
                    diagram.n().saturating_sub(1)
                )));
            }
            out.splice(index..index, [position, position]);
        }
        ArtinMove::DeleteSquare { index } => {
            if index + 1 >= events.len() || events[index] != events[index + 1] {
                return Err(Error::PatternMismatch(format!(
                    "no equal event pair at index {index}"
                )));
            }
            out.drain(index..index + 2);
        }
        ArtinMove::FarCommute { index } => {
            if index + 1 >= events.len() {
                return Err(Error::PatternMismatch(format!(
                    "no event pair at index {index}"
                )));
            }
            let (p, q) = (events[index], events[index + 1]);
            if p.abs_diff(q) < 2 {
                return Err(Error::PatternMismatch(format!(
                    "positions {p} and {q} are not far apart"
                )));
            }
            out.swap(index, index + 1);
        }
        ArtinMove::Triangle { index } => {
            if index + 2 >= events.len() {
                return Err(Error::PatternMismatch(format!(
                    "no event triple at index {index}"
                )));
            }
            let (p, q, r) = (events[index], events[index + 1], events[index + 2]);
            if p != r || p.abs_diff(q) != 1 {
                return Err(Error::PatternMismatch(format!(
                    "events {p} {q} {r} do not form a triangle pattern"
                )));
            }
            out[index] = q;
            out[index + 1] = p;
            out[index + 2] = q;
        }
    }
    BraidDiagram::new(diagram.n(), out)
}

/// Parses the `braid n=<n> <events...>` text format.
pub fn parse_diagram(text: &str) -> Result<BraidDiagram> {
    let mut tokens = Vec::new();
    let bytes = text.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        tokens.push((start, &text[start..pos]));
    }
    let mut iter = tokens.into_iter();
    match iter.next() {
        Some((_, "braid")) => {}
        other => {
            return Err(Error::Syntax {
                position: other.map(|(p, _)| p).unwrap_or(0),
                expected: "header 'braid'".to_string(),
            });
        }
    }
    let (hpos, header) = iter.next().ok_or(Error::Syntax {
        position: text.len(),
        expected: "'n=<count>'".to_string(),
    })?;
    let n: usize = header
        .strip_prefix("n=")
        .and_then(|v| v.parse().ok())
        .filter(|&n| n >= 1)
        .ok_or(Error::Syntax {
            position: hpos,
            expected: "'n=<count>' with a positive count".to_string(),
        })?;
    let mut events = Vec::new();
    for (tpos, token) in iter {
        let p: usize = token.parse().map_err(|_| Error::Syntax {
            position: tpos,
            expected: "event position".to_string(),
        })?;
        events.push(p);
    }
    BraidDiagram::new(n, events)
}

/// Canonical text for a diagram; inverse of [`parse_diagram`].
pub fn render_diagram(diagram: &BraidDiagram) -> String {
    diagram.to_string()
}
