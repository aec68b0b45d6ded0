//! Text syntax for bracketed words and derived-letter words.
//!
//! ```text
//! word   := "1" | term (SP term)*
//! term   := ident | ident "^-1" | "<" word ">" | "<" word ">^-1"
//! ident  := [A-Za-z_][A-Za-z0-9_]*
//! ```
//!
//! `B(word)` is accepted as an alias for `<word>`. Derived letters are written
//! `x.n` (with `x` short for `x.0`) and may not contain brackets. Input need not
//! be reduced; the parsers return reduced words.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::differential::{DiffLetter, DiffWord};
use crate::words::{Atom, AtomKind, Sign, Symbol, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unbalanced bracket at byte {offset}")]
    Unbalanced { offset: usize },
    #[error("invalid token {found:?} at byte {offset}")]
    InvalidToken { offset: usize, found: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Delim {
    Angle,
    Paren,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok<'a> {
    Ident(&'a str),
    One,
    Inverse,
    Order(u32),
    Open(Delim),
    Close(Delim),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok<'_>)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'<' => {
                out.push((start, Tok::Open(Delim::Angle)));
                i += 1;
            }
            b'>' => {
                out.push((start, Tok::Close(Delim::Angle)));
                i += 1;
            }
            b')' => {
                out.push((start, Tok::Close(Delim::Paren)));
                i += 1;
            }
            b'^' => {
                if text[i..].starts_with("^-1") {
                    out.push((start, Tok::Inverse));
                    i += 3;
                } else {
                    return Err(invalid(text, start));
                }
            }
            b'.' => {
                i += 1;
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == digits_start {
                    return Err(ParseError::Syntax {
                        offset: start,
                        message: "expected a derivative order after '.'".into(),
                    });
                }
                let n = text[digits_start..i].parse::<u32>().map_err(|_| ParseError::Syntax {
                    offset: digits_start,
                    message: "derivative order out of range".into(),
                })?;
                out.push((start, Tok::Order(n)));
            }
            b'0'..=b'9' => {
                let mut j = i;
                while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_') {
                    j += 1;
                }
                if &text[i..j] == "1" {
                    out.push((start, Tok::One));
                    i = j;
                } else {
                    return Err(ParseError::InvalidToken { offset: start, found: text[i..j].to_string() });
                }
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let ident = &text[start..i];
                if ident == "B" && bytes.get(i) == Some(&b'(') {
                    out.push((start, Tok::Open(Delim::Paren)));
                    i += 1;
                } else {
                    out.push((start, Tok::Ident(ident)));
                }
            }
            _ => return Err(invalid(text, start)),
        }
    }
    Ok(out)
}

fn invalid(text: &str, offset: usize) -> ParseError {
    let found = text[offset..].chars().next().map(String::from).unwrap_or_default();
    ParseError::InvalidToken { offset, found }
}

struct Parser<'a> {
    toks: Vec<(usize, Tok<'a>)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Result<Self, ParseError> {
        Ok(Parser { toks: lex(text)?, pos: 0, end: text.len() })
    }

    fn peek(&self) -> Option<&(usize, Tok<'a>)> {
        self.toks.get(self.pos)
    }

    fn offset(&self) -> usize {
        self.peek().map(|t| t.0).unwrap_or(self.end)
    }

    fn take_inverse(&mut self) -> Sign {
        if let Some((_, Tok::Inverse)) = self.peek() {
            self.pos += 1;
            Sign::Neg
        } else {
            Sign::Pos
        }
    }

    /// Parses terms until end of input (`closer == None`) or the matching
    /// closing delimiter, which is consumed.
    fn word(&mut self, closer: Option<(usize, Delim)>) -> Result<Word, ParseError> {
        let mut atoms = Vec::new();
        let mut terms = 0usize;
        loop {
            let Some((offset, tok)) = self.peek().cloned() else {
                return match closer {
                    Some((open_at, _)) => Err(ParseError::Unbalanced { offset: open_at }),
                    None if terms == 0 => {
                        Err(ParseError::Syntax { offset: self.end, message: "expected a word".into() })
                    }
                    None => Ok(Word::from_atoms(atoms)),
                };
            };
            self.pos += 1;
            match tok {
                Tok::Ident(name) => {
                    let symbol = Symbol::new(name).expect("lexer yields identifiers");
                    if let Some((at, Tok::Order(_))) = self.peek() {
                        return Err(ParseError::Syntax {
                            offset: *at,
                            message: "derivative orders are only valid for differential words".into(),
                        });
                    }
                    let sign = self.take_inverse();
                    atoms.push(Atom { kind: AtomKind::Gen(symbol), sign });
                }
                Tok::One => {
                    self.take_inverse();
                }
                Tok::Open(delim) => {
                    let body = self.word(Some((offset, delim)))?;
                    let sign = self.take_inverse();
                    atoms.push(Atom { kind: AtomKind::Br(body.into()), sign });
                }
                Tok::Close(delim) => match closer {
                    Some((_, expected)) if expected == delim => {
                        if terms == 0 {
                            return Err(ParseError::Syntax { offset, message: "empty bracket; write <1>".into() });
                        }
                        return Ok(Word::from_atoms(atoms));
                    }
                    _ => return Err(ParseError::Unbalanced { offset }),
                },
                Tok::Inverse => return Err(ParseError::Syntax { offset, message: "'^-1' must follow a term".into() }),
                Tok::Order(_) => {
                    return Err(ParseError::Syntax { offset, message: "'.n' must follow a generator".into() })
                }
            }
            terms += 1;
        }
    }

    fn diff_word(&mut self) -> Result<DiffWord, ParseError> {
        let mut letters = Vec::new();
        let mut terms = 0usize;
        while let Some((offset, tok)) = self.peek().cloned() {
            self.pos += 1;
            match tok {
                Tok::Ident(name) => {
                    let symbol = Symbol::new(name).expect("lexer yields identifiers");
                    let order = match self.peek() {
                        Some((_, Tok::Order(n))) => {
                            let n = *n;
                            self.pos += 1;
                            n
                        }
                        _ => 0,
                    };
                    let sign = self.take_inverse();
                    letters.push(DiffLetter { symbol, order, sign });
                }
                Tok::One => {
                    self.take_inverse();
                }
                Tok::Open(_) | Tok::Close(_) => {
                    return Err(ParseError::Syntax {
                        offset,
                        message: "brackets are not allowed in differential words".into(),
                    })
                }
                Tok::Inverse => return Err(ParseError::Syntax { offset, message: "'^-1' must follow a term".into() }),
                Tok::Order(_) => {
                    return Err(ParseError::Syntax { offset, message: "'.n' must follow a generator".into() })
                }
            }
            terms += 1;
        }
        if terms == 0 {
            return Err(ParseError::Syntax { offset: self.offset(), message: "expected a word".into() });
        }
        Ok(DiffWord::from_letters(letters))
    }
}

/// Parse a bracketed word, reducing it.
pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    Parser::new(text)?.word(None)
}

/// Parse a word over derived letters `x.n`, reducing it.
pub fn parse_diff_word(text: &str) -> Result<DiffWord, ParseError> {
    Parser::new(text)?.diff_word()
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

impl FromStr for DiffWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_diff_word(s)
    }
}

fn write_sign(f: &mut fmt::Formatter<'_>, sign: Sign) -> fmt::Result {
    match sign {
        Sign::Pos => Ok(()),
        Sign::Neg => f.write_str("^-1"),
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            AtomKind::Gen(s) => write!(f, "{s}")?,
            AtomKind::Br(body) => write!(f, "<{body}>")?,
        }
        write_sign(f, self.sign)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        for (i, a) in self.atoms().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl fmt::Display for DiffLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.symbol, self.order)?;
        write_sign(f, self.sign)
    }
}

impl fmt::Display for DiffWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        for (i, l) in self.letters().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
