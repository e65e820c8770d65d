use std::fmt;

use thiserror::Error;

use super::{Equation, Term};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownOperator(char),
    BadConstant(String),
    Unexpected { found: String, expected: &'static str },
    UnexpectedEnd { expected: &'static str },
    MissingEquals,
    ExtraEquals,
}

/// A syntax error at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: ", self.position)?;
        match &self.kind {
            ParseErrorKind::UnknownOperator(c) => write!(f, "unknown operator `{c}`"),
            ParseErrorKind::BadConstant(s) => write!(f, "`{s}` is not a constant (only 0 and 1 are)"),
            ParseErrorKind::Unexpected { found, expected } => {
                write!(f, "expected {expected}, found `{found}`")
            }
            ParseErrorKind::UnexpectedEnd { expected } => write!(f, "expected {expected}, found end of input"),
            ParseErrorKind::MissingEquals => f.write_str("an equation needs one `=`"),
            ParseErrorKind::ExtraEquals => f.write_str("an equation has exactly one `=`"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    Dot,
    Amp,
    Bar,
    Tilde,
    LParen,
    RParen,
    Equals,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => f.write_str(s),
            Tok::Zero => f.write_str("0"),
            Tok::One => f.write_str("1"),
            Tok::Dot => f.write_str("."),
            Tok::Amp => f.write_str("&"),
            Tok::Bar => f.write_str("|"),
            Tok::Tilde => f.write_str("~"),
            Tok::LParen => f.write_str("("),
            Tok::RParen => f.write_str(")"),
            Tok::Equals => f.write_str("="),
        }
    }
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        let single = match c {
            '.' => Some(Tok::Dot),
            '&' => Some(Tok::Amp),
            '|' => Some(Tok::Bar),
            '~' => Some(Tok::Tilde),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '=' => Some(Tok::Equals),
            _ => None,
        };
        if let Some(tok) = single {
            chars.next();
            out.push((pos, tok));
        } else if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() || c.is_alphabetic() || c == '_' {
            let mut word = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_alphanumeric() || c == '_' {
                    word.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            let tok = if word.starts_with(|c: char| c.is_ascii_digit()) {
                match word.as_str() {
                    "0" => Tok::Zero,
                    "1" => Tok::One,
                    _ => {
                        return Err(ParseError {
                            position: pos,
                            kind: ParseErrorKind::BadConstant(word),
                        })
                    }
                }
            } else {
                Tok::Ident(word)
            };
            out.push((pos, tok));
        } else {
            return Err(ParseError {
                position: pos,
                kind: ParseErrorKind::UnknownOperator(c),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        let kind = match self.peek() {
            Some(t) => ParseErrorKind::Unexpected {
                found: t.to_string(),
                expected,
            },
            None => ParseErrorKind::UnexpectedEnd { expected },
        };
        ParseError {
            position: self.offset(),
            kind,
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn binary(
        &mut self,
        op: Tok,
        build: fn(Term, Term) -> Term,
        next: fn(&mut Self) -> Result<Term, ParseError>,
    ) -> Result<Term, ParseError> {
        let mut lhs = next(self)?;
        while self.eat(&op) {
            let rhs = next(self)?;
            lhs = build(lhs, rhs);
        }
        Ok(lhs)
    }

    fn join(&mut self) -> Result<Term, ParseError> {
        self.binary(Tok::Bar, Term::join, Self::meet)
    }

    fn meet(&mut self) -> Result<Term, ParseError> {
        self.binary(Tok::Amp, Term::meet, Self::dot)
    }

    fn dot(&mut self) -> Result<Term, ParseError> {
        self.binary(Tok::Dot, Term::dot, Self::unary)
    }

    fn unary(&mut self) -> Result<Term, ParseError> {
        if self.eat(&Tok::Tilde) {
            return Ok(Term::neg(self.unary()?));
        }
        let term = match self.peek() {
            Some(Tok::Ident(name)) => Term::Var(name.clone()),
            Some(Tok::Zero) => Term::Zero,
            Some(Tok::One) => Term::One,
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.join()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.unexpected("`)`"));
                }
                return Ok(inner);
            }
            _ => return Err(self.unexpected("a variable, constant, `~` or `(`")),
        };
        self.pos += 1;
        Ok(term)
    }
}

fn parser(text: &str) -> Result<Parser, ParseError> {
    Ok(Parser {
        toks: tokenize(text)?,
        pos: 0,
        end: text.len(),
    })
}

/// Parses a single term (no `=`).
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = parser(text)?;
    let t = p.join()?;
    if p.peek().is_some() {
        return Err(p.unexpected("end of input"));
    }
    Ok(t)
}

/// Parses `lhs = rhs`.
pub fn parse(text: &str) -> Result<Equation, ParseError> {
    let mut p = parser(text)?;
    let lhs = p.join()?;
    match p.peek() {
        Some(Tok::Equals) => p.pos += 1,
        None => {
            return Err(ParseError {
                position: p.end,
                kind: ParseErrorKind::MissingEquals,
            })
        }
        Some(_) => return Err(p.unexpected("an operator or `=`")),
    }
    let rhs = p.join()?;
    match p.peek() {
        None => Ok(Equation::new(lhs, rhs)),
        Some(Tok::Equals) => Err(ParseError {
            position: p.offset(),
            kind: ParseErrorKind::ExtraEquals,
        }),
        Some(_) => Err(p.unexpected("an operator or end of input")),
    }
}
