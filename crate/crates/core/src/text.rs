//! Exact text syntax shared by the CLI and the file formats.
//!
//! Rational literals are `p/q` fractions, integers, or decimals; decimals
//! convert exactly (`0.15` is 3/20 — no floating point is involved
//! anywhere). Polynomials read like `3*w^2 - w + 1/2` and full ω-expressions
//! like `(w + 1)/(w)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::omega::OmegaRational;
use crate::poly::Polynomial;
use crate::{Omega, Poly, Rat};

/// Exponents above this are rejected to keep expressions desk-sized.
const MAX_EXPONENT: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        msg: msg.into(),
    })
}

/// Parses an exact rational literal: `7`, `-3/4`, `0.25`, `-1.5`.
pub fn parse_rat(s: &str) -> Result<Rat, ParseError> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return err(0, "empty rational literal");
    }
    let (negative, body) = match trimmed.strip_prefix('-') {
        Some(rest) => (true, rest.trim_start()),
        None => (false, trimmed.strip_prefix('+').unwrap_or(trimmed)),
    };
    let value = if let Some((num, den)) = body.split_once('/') {
        let n = parse_bigint(num.trim())?;
        let d = parse_bigint(den.trim())?;
        if d.is_zero() {
            return err(0, "zero denominator in rational literal");
        }
        Rat::new(n, d)
    } else if let Some((int_part, frac_part)) = body.split_once('.') {
        parse_decimal(int_part, frac_part)?
    } else {
        Rat::from_integer(parse_bigint(body)?)
    };
    Ok(if negative { -value } else { value })
}

fn parse_bigint(s: &str) -> Result<BigInt, ParseError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return err(0, format!("expected digits, found {s:?}"));
    }
    Ok(s.parse::<BigInt>().expect("digit string"))
}

fn parse_decimal(int_part: &str, frac_part: &str) -> Result<Rat, ParseError> {
    if frac_part.is_empty() {
        return err(0, "digits required after the decimal point");
    }
    let int_digits = if int_part.is_empty() { "0" } else { int_part };
    let int = parse_bigint(int_digits)?;
    let frac = parse_bigint(frac_part)?;
    let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
    Ok(Rat::from_integer(int) + Rat::new(frac, scale))
}

/// Parses a full ω-expression: either a bare polynomial, a parenthesized
/// polynomial, or the canonical ratio form `(<poly>)/(<poly>)`.
pub fn parse_omega(s: &str) -> Result<Omega, ParseError> {
    parse_omega_in(s, 'w')
}

/// Same grammar with a caller-chosen variable token (sequence rules use `n`).
pub fn parse_omega_in(s: &str, var: char) -> Result<Omega, ParseError> {
    let trimmed = s.trim();
    if !trimmed.starts_with('(') {
        let num = parse_poly_in(trimmed, var)?;
        return Ok(OmegaRational::from_poly(num));
    }
    let close = matching_paren(trimmed, 0)?;
    let num = parse_poly_in(&trimmed[1..close], var)?;
    let rest = trimmed[close + 1..].trim_start();
    if rest.is_empty() {
        return Ok(OmegaRational::from_poly(num));
    }
    let Some(rest) = rest.strip_prefix('/') else {
        return err(close + 1, "expected '/' between numerator and denominator");
    };
    let rest = rest.trim();
    if !rest.starts_with('(') || !rest.ends_with(')') {
        return err(close + 1, "denominator must be parenthesized");
    }
    let den_close = matching_paren(rest, 0)?;
    if den_close != rest.len() - 1 {
        return err(close + 1 + den_close, "trailing input after denominator");
    }
    let den = parse_poly_in(&rest[1..den_close], var)?;
    if den.is_zero() {
        return err(close + 1, "denominator polynomial is zero");
    }
    Ok(OmegaRational::new(num, den).expect("non-zero denominator"))
}

fn matching_paren(s: &str, open: usize) -> Result<usize, ParseError> {
    let mut depth = 0usize;
    for (i, b) in s.bytes().enumerate().skip(open) {
        match b {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth == 0 {
                    return Ok(i);
                }
            }
            _ => {}
        }
    }
    err(open, "unbalanced parenthesis")
}

/// Parses a polynomial in `w`, e.g. `3*w^2 - w + 1/2`.
pub fn parse_poly(s: &str) -> Result<Poly, ParseError> {
    parse_poly_in(s, 'w')
}

fn parse_poly_in(s: &str, var: char) -> Result<Poly, ParseError> {
    let tokens = tokenize(s, var)?;
    Parser { tokens, at: 0 }.poly()
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number(Rat),
    Var,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(s: &str, var: char) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            _ if c == var => {
                out.push((i, Tok::Var));
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                let mut text = &s[start..i];
                if i < bytes.len() && bytes[i] == b'.' {
                    i += 1;
                    let frac_start = i;
                    while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                        i += 1;
                    }
                    if i == frac_start {
                        return err(start, "digits expected after decimal point");
                    }
                    text = &s[start..i];
                }
                let value = parse_rat(text).map_err(|e| ParseError {
                    pos: start + e.pos,
                    msg: e.msg,
                })?;
                out.push((start, Tok::Number(value)));
            }
            _ => return err(i, format!("unexpected character {c:?}")),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.at).map_or(usize::MAX, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn poly(&mut self) -> Result<Poly, ParseError> {
        let mut acc = Poly::zero();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(Tok::Plus) if !first => {
                    self.bump();
                    false
                }
                Some(Tok::Minus) => {
                    self.bump();
                    true
                }
                Some(_) if first => false,
                Some(_) => return err(self.pos(), "expected '+' or '-' between terms"),
                None if first => return err(0, "empty polynomial"),
                None => break,
            };
            let term = self.term()?;
            acc = if negative { acc - term } else { acc + term };
            first = false;
            if self.peek().is_none() {
                break;
            }
        }
        Ok(acc)
    }

    /// One additive term: `coefficient`, `coefficient '*'? variable-power`,
    /// or a bare variable-power. Coefficients admit `p/q` fractions.
    fn term(&mut self) -> Result<Poly, ParseError> {
        let coeff = match self.peek() {
            Some(Tok::Number(_)) => {
                let Some(Tok::Number(n)) = self.bump() else {
                    unreachable!()
                };
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.bump();
                    let pos = self.pos();
                    match self.bump() {
                        Some(Tok::Number(d)) => {
                            if d.is_zero() {
                                return err(pos, "zero denominator in coefficient");
                            }
                            Some(n / d)
                        }
                        _ => return err(pos, "expected denominator digits after '/'"),
                    }
                } else {
                    Some(n)
                }
            }
            _ => None,
        };
        let has_star = if matches!(self.peek(), Some(Tok::Star)) {
            if coeff.is_none() {
                return err(self.pos(), "'*' needs a coefficient on its left");
            }
            self.bump();
            true
        } else {
            false
        };
        match self.peek() {
            Some(Tok::Var) => {
                self.bump();
                let exp = if matches!(self.peek(), Some(Tok::Caret)) {
                    self.bump();
                    let pos = self.pos();
                    match self.bump() {
                        // the tokenizer only lexes unsigned numbers, so an
                        // integer check suffices here
                        Some(Tok::Number(n)) if n.is_integer() => {
                            let e: usize = n
                                .to_integer()
                                .try_into()
                                .map_err(|_| ParseError {
                                    pos,
                                    msg: "exponent too large".into(),
                                })?;
                            if e > MAX_EXPONENT {
                                return err(pos, "exponent too large");
                            }
                            e
                        }
                        _ => return err(pos, "expected a non-negative integer exponent"),
                    }
                } else {
                    1
                };
                Ok(Polynomial::monomial(coeff.unwrap_or_else(Rat::one), exp))
            }
            _ if has_star => err(self.pos(), "expected variable after '*'"),
            _ => match coeff {
                Some(c) => Ok(Polynomial::constant(c)),
                None => err(self.pos(), "expected a term"),
            },
        }
    }
}
