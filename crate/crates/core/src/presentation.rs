//! Parsing of two-generator presentations.
//!
//! Grammar (whitespace insignificant, `A` = a⁻¹, `B` = b⁻¹):
//!
//! ```text
//! pres   := stmt (';' stmt)*
//! stmt   := word '=' word | word '=' '1'
//! word   := factor+
//! factor := atom ('^' int)?
//! atom   := 'a' | 'b' | 'A' | 'B' | '(' word ')'
//! ```
//!
//! An equation `lhs = rhs` is normalized to the single relator `lhs·rhs⁻¹`;
//! powers and parentheses are expanded into explicit words.

use crate::word::{Letter, Word};
use thiserror::Error;

/// A parsed presentation: each relator `r` means `r = 1` in the group.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub relators: Vec<Word>,
    pub source_text: String,
}

impl Presentation {
    /// True when every relator has even length, in which case word-length
    /// parity descends to the presented group.
    pub fn all_relators_even_length(&self) -> bool {
        self.relators.iter().all(|r| r.len() % 2 == 0)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty presentation")]
    Empty,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator '{ch}' at position {pos} (expected a, b, A or B)")]
    UnknownGenerator { pos: usize, ch: char },
    #[error("exponent at position {pos} must be a positive integer")]
    NonPositiveExponent { pos: usize },
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    cursor: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Parser<'a> {
        Parser {
            chars: text
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            cursor: 0,
            text,
        }
    }

    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.cursor).copied()
    }

    fn bump(&mut self) -> Option<(usize, char)> {
        let c = self.peek();
        if c.is_some() {
            self.cursor += 1;
        }
        c
    }

    fn end_pos(&self) -> usize {
        self.text.len()
    }

    fn parse_presentation(&mut self) -> Result<Vec<Word>, ParseError> {
        if self.peek().is_none() {
            return Err(ParseError::Empty);
        }
        let mut relators = Vec::new();
        loop {
            relators.push(self.parse_statement()?);
            match self.peek() {
                None => break,
                Some((_, ';')) => {
                    self.bump();
                    // allow a trailing semicolon
                    if self.peek().is_none() {
                        break;
                    }
                }
                Some((pos, c)) => {
                    return Err(ParseError::Syntax {
                        pos,
                        msg: format!("expected ';' or end of input, found '{c}'"),
                    })
                }
            }
        }
        Ok(relators)
    }

    /// One statement, normalized to a relator word.
    fn parse_statement(&mut self) -> Result<Word, ParseError> {
        let lhs = self.parse_word()?;
        match self.bump() {
            Some((_, '=')) => {}
            Some((pos, c)) => {
                return Err(ParseError::Syntax {
                    pos,
                    msg: format!("expected '=', found '{c}'"),
                })
            }
            None => {
                return Err(ParseError::Syntax {
                    pos: self.end_pos(),
                    msg: "expected '=', found end of input".to_string(),
                })
            }
        }
        if let Some((_, '1')) = self.peek() {
            self.bump();
            return Ok(lhs);
        }
        let rhs = self.parse_word()?;
        Ok(lhs.concat(&rhs.inverse()))
    }

    fn parse_word(&mut self) -> Result<Word, ParseError> {
        let mut letters = Vec::new();
        let mut first = true;
        loop {
            match self.peek() {
                Some((_, c)) if c == 'a' || c == 'b' || c == 'A' || c == 'B' || c == '(' => {
                    let factor = self.parse_factor()?;
                    letters.extend_from_slice(factor.letters());
                    first = false;
                }
                Some((pos, c)) if first => {
                    return if c.is_ascii_alphabetic() {
                        Err(ParseError::UnknownGenerator { pos, ch: c })
                    } else {
                        Err(ParseError::Syntax {
                            pos,
                            msg: format!("expected a word, found '{c}'"),
                        })
                    };
                }
                None if first => {
                    return Err(ParseError::Syntax {
                        pos: self.end_pos(),
                        msg: "expected a word, found end of input".to_string(),
                    })
                }
                // Letters other than the generators inside a word scan as an
                // unknown generator rather than as a word boundary.
                Some((pos, c)) if c.is_ascii_alphabetic() => {
                    return Err(ParseError::UnknownGenerator { pos, ch: c });
                }
                _ => break,
            }
        }
        Ok(Word(letters))
    }

    fn parse_factor(&mut self) -> Result<Word, ParseError> {
        let base = self.parse_atom()?;
        if let Some((_, '^')) = self.peek() {
            self.bump();
            let exp = self.parse_exponent()?;
            let mut letters = Vec::with_capacity(base.len() * exp);
            for _ in 0..exp {
                letters.extend_from_slice(base.letters());
            }
            return Ok(Word(letters));
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<Word, ParseError> {
        match self.bump() {
            Some((_, c)) if Letter::from_char(c).is_some() => {
                Ok(Word(vec![Letter::from_char(c).unwrap()]))
            }
            Some((_, '(')) => {
                let inner = self.parse_word()?;
                match self.bump() {
                    Some((_, ')')) => Ok(inner),
                    Some((pos, c)) => Err(ParseError::Syntax {
                        pos,
                        msg: format!("expected ')', found '{c}'"),
                    }),
                    None => Err(ParseError::Syntax {
                        pos: self.end_pos(),
                        msg: "expected ')', found end of input".to_string(),
                    }),
                }
            }
            Some((pos, c)) if c.is_ascii_alphabetic() => {
                Err(ParseError::UnknownGenerator { pos, ch: c })
            }
            Some((pos, c)) => Err(ParseError::Syntax {
                pos,
                msg: format!("expected a generator, found '{c}'"),
            }),
            None => Err(ParseError::Syntax {
                pos: self.end_pos(),
                msg: "expected a generator, found end of input".to_string(),
            }),
        }
    }

    fn parse_exponent(&mut self) -> Result<usize, ParseError> {
        let (start, first) = match self.peek() {
            Some(pc) => pc,
            None => {
                return Err(ParseError::Syntax {
                    pos: self.end_pos(),
                    msg: "expected an exponent, found end of input".to_string(),
                })
            }
        };
        if first == '-' || first == '0' {
            // consume the offending number so the position points at its start
            self.bump();
            while matches!(self.peek(), Some((_, c)) if c.is_ascii_digit()) {
                self.bump();
            }
            return Err(ParseError::NonPositiveExponent { pos: start });
        }
        if !first.is_ascii_digit() {
            return Err(ParseError::Syntax {
                pos: start,
                msg: format!("expected an exponent, found '{first}'"),
            });
        }
        let mut value: usize = 0;
        while let Some((pos, c)) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            self.bump();
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(c.to_digit(10).unwrap() as usize))
                .ok_or(ParseError::Syntax {
                    pos,
                    msg: "exponent overflow".to_string(),
                })?;
        }
        Ok(value)
    }
}

/// Parses a presentation from its plain-text form.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut parser = Parser::new(text);
    let relators = parser.parse_presentation()?;
    Ok(Presentation {
        relators,
        source_text: text.to_string(),
    })
}

/// The presentation ⟨a,b | a²=b², a^{4m} = b^{4m} = (ab)^m = (ba)^m = 1⟩.
///
/// These are exactly the groups of order 4m² whose associated invariant ring
/// turns out to be a polynomial ring; `m < 2` is rejected.
pub fn gamma_m_presentation(m: usize) -> Result<Presentation, GammaError> {
    if m < 2 {
        return Err(GammaError::MTooSmall { m });
    }
    let text = format!(
        "a^2 = b^2; a^{n} = 1; b^{n} = 1; (ab)^{m} = 1; (ba)^{m} = 1",
        n = 4 * m,
        m = m
    );
    Ok(parse_presentation(&text).expect("generated text is grammatical"))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GammaError {
    #[error("m must be at least 2, got {m}")]
    MTooSmall { m: usize },
}
