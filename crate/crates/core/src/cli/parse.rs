//! Textual polynomial grammar.
//!
//! ```text
//! poly   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := int ['/' int] | name ['^' int]
//! ```
//!
//! Whitespace between tokens is ignored. Names are ASCII identifiers.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::polyalg::{Monomial, Polynomial, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected a term")]
    ExpectedTerm,
    #[error("expected an integer exponent")]
    ExpectedExponent,
    #[error("expected an integer denominator")]
    ExpectedDenominator,
    #[error("exponent too large")]
    ExponentTooLarge,
    #[error("division by zero")]
    ZeroDenominator,
    #[error("undeclared variable `{0}`")]
    UndeclaredVariable(String),
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("invalid variable list: {0}")]
    InvalidVariables(String),
}

/// Parse failure at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

struct Lexer<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    /// Next non-whitespace character, not consumed.
    fn peek_token(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek_token() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !pred(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.text[start..self.pos]
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            offset: self.pos,
            kind,
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        digits.parse().ok()
    }
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Splits a comma-separated variable list; names must be distinct
/// identifiers.
pub fn parse_variables(list: &str) -> Result<Vec<String>, ParseError> {
    let invalid = |msg: String| ParseError {
        offset: 0,
        kind: ParseErrorKind::InvalidVariables(msg),
    };
    let mut names: Vec<String> = Vec::new();
    for raw in list.split(',') {
        let name = raw.trim();
        let valid =
            name.chars().next().is_some_and(is_name_start) && name.chars().all(is_name_char);
        if !valid {
            return Err(invalid(format!("`{name}` is not an identifier")));
        }
        if names.iter().any(|n| n == name) {
            return Err(invalid(format!("`{name}` is declared twice")));
        }
        names.push(name.to_string());
    }
    Ok(names)
}

/// Variable names in order of first appearance in `text`.
pub fn infer_variables(text: &str) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    let mut lexer = Lexer { text, pos: 0 };
    while let Some(c) = lexer.peek() {
        if is_name_start(c) {
            let name = lexer.take_while(is_name_char).to_string();
            if !names.contains(&name) {
                names.push(name);
            }
        } else if c.is_ascii_digit() {
            lexer.take_while(|c| c.is_ascii_digit());
        } else {
            lexer.pos += c.len_utf8();
        }
    }
    names
}

/// Parses `text` as a polynomial over the rationals in `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<Ring>) -> Result<Polynomial<Rational>, ParseError> {
    let mut lexer = Lexer { text, pos: 0 };
    let mut terms = Vec::new();
    let mut negative = if lexer.eat('-') {
        true
    } else {
        lexer.eat('+');
        false
    };
    loop {
        let (m, c) = parse_term(&mut lexer, ring)?;
        terms.push((m, if negative { -c } else { c }));
        if lexer.eat('+') {
            negative = false;
        } else if lexer.eat('-') {
            negative = true;
        } else {
            break;
        }
    }
    if let Some(c) = lexer.peek_token() {
        return Err(lexer.err(ParseErrorKind::UnexpectedChar(c)));
    }
    Ok(Polynomial::from_terms(ring, terms).expect("monomials built in the ring"))
}

fn parse_term(lexer: &mut Lexer<'_>, ring: &Arc<Ring>) -> Result<(Monomial, Rational), ParseError> {
    let mut exps = vec![0u32; ring.nvars()];
    let mut coeff = Rational::one();
    loop {
        parse_factor(lexer, ring, &mut exps, &mut coeff)?;
        if !lexer.eat('*') {
            break;
        }
    }
    Ok((Monomial::from_exponents(exps), coeff))
}

fn parse_factor(
    lexer: &mut Lexer<'_>,
    ring: &Arc<Ring>,
    exps: &mut [u32],
    coeff: &mut Rational,
) -> Result<(), ParseError> {
    match lexer.peek_token() {
        Some(c) if c.is_ascii_digit() => {
            let numer = lexer.integer().expect("starts with a digit");
            let denom = if lexer.eat('/') {
                let at = lexer.pos;
                let d = lexer
                    .integer()
                    .ok_or_else(|| lexer.err(ParseErrorKind::ExpectedDenominator))?;
                if d.is_zero() {
                    return Err(ParseError {
                        offset: at,
                        kind: ParseErrorKind::ZeroDenominator,
                    });
                }
                d
            } else {
                BigInt::one()
            };
            *coeff *= Rational::new(numer, denom);
            Ok(())
        }
        Some(c) if is_name_start(c) => {
            let start = lexer.pos;
            let name = lexer.take_while(is_name_char);
            let index = ring.index_of(name).ok_or(ParseError {
                offset: start,
                kind: ParseErrorKind::UndeclaredVariable(name.to_string()),
            })?;
            let power = if lexer.eat('^') {
                lexer.skip_ws();
                let at = lexer.pos;
                let e = lexer
                    .integer()
                    .ok_or_else(|| lexer.err(ParseErrorKind::ExpectedExponent))?;
                u32::try_from(e).map_err(|_| ParseError {
                    offset: at,
                    kind: ParseErrorKind::ExponentTooLarge,
                })?
            } else {
                1
            };
            exps[index] = exps[index].checked_add(power).ok_or(ParseError {
                offset: start,
                kind: ParseErrorKind::ExponentTooLarge,
            })?;
            Ok(())
        }
        _ => Err(lexer.err(ParseErrorKind::ExpectedTerm)),
    }
}
