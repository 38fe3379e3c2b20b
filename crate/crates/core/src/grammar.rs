//! Text grammar for words.
//!
//! Whitespace-separated tokens:
//!
//! ```text
//! crossing        := "a(" i "," j ")"
//! parity crossing := "a(" i "," j ";" bit ")"
//! dot             := "t(" i ")"
//! ```
//!
//! with decimal strand indices ≥ 1; the empty string is the identity
//! word. [`parse`] round-trips with [`render`], and `render ∘ parse`
//! yields the canonical spelling of any accepted text (unordered
//! crossing pairs are sorted).

use crate::error::{Error, Result};
use crate::word::{GroupContext, Letter, Parity, Word};

/// Parses a word in the grammar above against `context`. Errors carry
/// the byte offset of the offending token.
pub fn parse(text: &str, context: GroupContext) -> Result<Word> {
    let mut letters = Vec::new();
    let bytes = text.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        let mut cursor = Cursor {
            bytes,
            pos,
            token_start: start,
        };
        letters.push(cursor.letter()?);
        pos = cursor.pos;
        if pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            return Err(Error::Syntax {
                position: pos,
                expected: "whitespace between letters".to_string(),
            });
        }
    }
    Word::new(context, letters)
}

/// Canonical text for a word; inverse of [`parse`] on valid words.
pub fn render(word: &Word) -> String {
    word.to_string()
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    token_start: usize,
}

impl Cursor<'_> {
    fn letter(&mut self) -> Result<Letter> {
        match self.bytes.get(self.pos) {
            Some(b'a') => {
                self.pos += 1;
                self.expect(b'(')?;
                let i = self.index()?;
                self.expect(b',')?;
                let j = self.index()?;
                if i == j {
                    return Err(Error::Syntax {
                        position: self.token_start,
                        expected: "distinct strand indices".to_string(),
                    });
                }
                match self.bytes.get(self.pos) {
                    Some(b';') => {
                        self.pos += 1;
                        let bit = self.index_or_zero()?;
                        let parity = Parity::from_bit(bit as u8).ok_or(Error::Syntax {
                            position: self.pos,
                            expected: "parity bit 0 or 1".to_string(),
                        })?;
                        self.expect(b')')?;
                        Ok(Letter::parity_crossing(i, j, parity))
                    }
                    Some(b')') => {
                        self.pos += 1;
                        Ok(Letter::crossing(i, j))
                    }
                    _ => Err(Error::Syntax {
                        position: self.pos,
                        expected: "';' or ')'".to_string(),
                    }),
                }
            }
            Some(b't') => {
                self.pos += 1;
                self.expect(b'(')?;
                let i = self.index()?;
                self.expect(b')')?;
                Ok(Letter::dot(i))
            }
            _ => Err(Error::Syntax {
                position: self.pos,
                expected: "letter 'a(i,j)', 'a(i,j;e)' or 't(i)'".to_string(),
            }),
        }
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.bytes.get(self.pos) == Some(&byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Syntax {
                position: self.pos,
                expected: format!("'{}'", byte as char),
            })
        }
    }

    fn index(&mut self) -> Result<usize> {
        let value = self.index_or_zero()?;
        if value == 0 {
            return Err(Error::Syntax {
                position: self.pos,
                expected: "strand index >= 1".to_string(),
            });
        }
        Ok(value)
    }

    fn index_or_zero(&mut self) -> Result<usize> {
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Syntax {
                position: start,
                expected: "decimal integer".to_string(),
            });
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are valid utf-8")
            .parse()
            .map_err(|_| Error::Syntax {
                position: start,
                expected: "integer within machine range".to_string(),
            })
    }
}
