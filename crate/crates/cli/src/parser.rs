//! Rational-function literals such as `(1-x)/(1+x)` or `x*(1-2*x)/(1+3*x)`.
//!
//! Accepted syntax: integers, `x`, `+ - * / ^`, parentheses and whitespace.
//! `^` takes a non-negative integer exponent, `*` may be omitted before `x`
//! or `(`, and unary signs are allowed. Coefficients stay integral, so a
//! value like `1/2` becomes numerator `1` over denominator `2`.

use lbp_core::series::{Poly, RatFunc, SeriesError};
use num_bigint::BigInt;

const MAX_EXPONENT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{message} at offset {offset}")]
    Syntax { offset: usize, message: String },
    #[error("denominator vanishes at x = 0")]
    ZeroDenominatorConstant,
}

impl ParseError {
    /// Byte offset of a syntax error.
    pub fn offset(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { offset, .. } => Some(*offset),
            ParseError::ZeroDenominatorConstant => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        offset,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let value = text[start..i].parse().expect("ascii digits");
                out.push((start, Token::Int(value)));
                continue;
            }
            b'x' | b'X' => Token::X,
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::Open,
            b')' => Token::Close,
            _ => {
                let ch = text[i..].chars().next().expect("in bounds");
                return Err(syntax(i, format!("unexpected character {ch:?}")));
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

/// Numerator and denominator with no condition on the denominator yet.
#[derive(Debug, Clone)]
struct Quotient {
    num: Poly,
    den: Poly,
}

impl Quotient {
    fn poly(p: Poly) -> Self {
        Quotient {
            num: p,
            den: Poly::constant(BigInt::from(1)),
        }
    }

    fn add(self, other: Quotient, negate: bool) -> Quotient {
        let rhs = if negate { other.num.neg() } else { other.num };
        if self.den == other.den {
            return Quotient {
                num: self.num.add(&rhs),
                den: self.den,
            };
        }
        Quotient {
            num: self.num.mul(&other.den).add(&rhs.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    fn mul(self, other: Quotient) -> Quotient {
        Quotient {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    fn div(self, other: Quotient) -> Quotient {
        Quotient {
            num: self.num.mul(&other.den),
            den: self.den.mul(&other.num),
        }
    }
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn expr(&mut self) -> Result<Quotient, ParseError> {
        let mut acc = self.term()?;
        while let Some(tok @ (Token::Plus | Token::Minus)) = self.peek() {
            let negate = *tok == Token::Minus;
            self.pos += 1;
            acc = acc.add(self.term()?, negate);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Quotient, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.mul(self.unary()?);
                }
                Some(Token::Slash) => {
                    let at = self.offset();
                    self.pos += 1;
                    let rhs = self.unary()?;
                    if rhs.num.is_zero() {
                        return Err(syntax(at, "division by zero"));
                    }
                    acc = acc.div(rhs);
                }
                Some(Token::X | Token::Open) => acc = acc.mul(self.power()?),
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Quotient, ParseError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                let mut q = self.unary()?;
                q.num = q.num.neg();
                Ok(q)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Quotient, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.offset();
        match self.peek() {
            Some(Token::Int(k)) => {
                let k: usize = k
                    .try_into()
                    .ok()
                    .filter(|&k| k <= MAX_EXPONENT)
                    .ok_or_else(|| syntax(at, format!("exponent above {MAX_EXPONENT}")))?;
                self.pos += 1;
                Ok(Quotient {
                    num: base.num.pow(k),
                    den: base.den.pow(k),
                })
            }
            _ => Err(syntax(at, "expected a non-negative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Quotient, ParseError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Token::Int(v)) => {
                self.pos += 1;
                Ok(Quotient::poly(Poly::constant(v)))
            }
            Some(Token::X) => {
                self.pos += 1;
                Ok(Quotient::poly(Poly::x()))
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(syntax(self.offset(), "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => Err(syntax(at, "expected a number, 'x' or '('")),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }
}

/// Parses a rational function; a common power of `x` in numerator and
/// denominator is cancelled, after which the denominator must not vanish at 0.
pub fn parse_ratfunc(text: &str) -> Result<RatFunc, ParseError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
        end: text.len(),
    };
    let q = parser.expr()?;
    if parser.pos < tokens.len() {
        let (offset, tok) = &tokens[parser.pos];
        let what = if *tok == Token::Close { "unmatched ')'" } else { "unexpected token" };
        return Err(syntax(*offset, what));
    }
    RatFunc::from_quotient(q.num, q.den).map_err(|e| match e {
        SeriesError::ZeroDenominatorConstant => ParseError::ZeroDenominatorConstant,
        other => syntax(0, other.to_string()),
    })
}
