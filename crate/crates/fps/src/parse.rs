//! Expression parser for exact-mode series literals.
//!
//! Grammar (ASCII, whitespace-insensitive except inside literals):
//!
//! ```text
//! input    := expr ('@' uint)?          -- optional truncation directive
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := '-' factor | primary ('^' uint)*
//! primary  := number | 'i' | 'z' | '(' expr ')'
//! number   := uint ('/' uint)? 'i'?     -- rational literal, no spaces
//! ```
//!
//! `i` is the imaginary unit; `3/4i` reads as (3/4)i. Without `@N` the
//! result order is the natural degree of the polynomial; with it, the
//! series is truncated or zero-padded to exactly N. Errors carry the byte
//! offset of the offending token.

use crate::coeff::{imaginary_unit, Coeff, GaussRational};
use crate::error::{Error, Result};
use crate::series::Series;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::Zero;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(GaussRational),
    Z,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    At,
}

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => pos += 1,
            '+' => {
                tokens.push((pos, Token::Plus));
                pos += 1;
            }
            '-' => {
                tokens.push((pos, Token::Minus));
                pos += 1;
            }
            '*' => {
                tokens.push((pos, Token::Star));
                pos += 1;
            }
            '^' => {
                tokens.push((pos, Token::Caret));
                pos += 1;
            }
            '(' => {
                tokens.push((pos, Token::LParen));
                pos += 1;
            }
            ')' => {
                tokens.push((pos, Token::RParen));
                pos += 1;
            }
            '@' => {
                tokens.push((pos, Token::At));
                pos += 1;
            }
            'z' => {
                tokens.push((pos, Token::Z));
                pos += 1;
            }
            'i' => {
                tokens.push((pos, Token::Number(imaginary_unit())));
                pos += 1;
            }
            '0'..='9' => {
                let start = pos;
                let numer = read_uint_digits(bytes, &mut pos);
                let denom = if pos < bytes.len()
                    && bytes[pos] == b'/'
                    && pos + 1 < bytes.len()
                    && bytes[pos + 1].is_ascii_digit()
                {
                    pos += 1;
                    let d = read_uint_digits(bytes, &mut pos);
                    if d.is_zero() {
                        return Err(err(start, "zero denominator"));
                    }
                    d
                } else {
                    BigInt::from(1)
                };
                let value = BigRational::new(numer, denom);
                let coeff = if pos < bytes.len() && bytes[pos] == b'i' {
                    pos += 1;
                    imaginary_unit() * GaussRational::new(value, BigRational::zero())
                } else {
                    GaussRational::new(value, BigRational::zero())
                };
                // '@' directives want a plain machine-sized integer; keep
                // the token generic and let the parser narrow it
                tokens.push((start, Token::Number(coeff)));
            }
            other => return Err(err(pos, format!("unexpected character {other:?}"))),
        }
    }
    Ok(tokens)
}

fn read_uint_digits(bytes: &[u8], pos: &mut usize) -> BigInt {
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    std::str::from_utf8(&bytes[start..*pos])
        .expect("digits are utf8")
        .parse()
        .expect("digits parse as an integer")
}

/// Polynomial accumulator with exact coefficients; grows as needed.
#[derive(Clone, Debug)]
struct Poly(Vec<GaussRational>);

impl Poly {
    fn constant(c: GaussRational) -> Self {
        Poly(vec![c])
    }

    fn z() -> Self {
        Poly(vec![Coeff::zero(), Coeff::one()])
    }

    fn add(mut self, other: Poly) -> Poly {
        if self.0.len() < other.0.len() {
            self.0.resize(other.0.len(), Coeff::zero());
        }
        for (i, c) in other.0.into_iter().enumerate() {
            self.0[i] = self.0[i].clone() + c;
        }
        self
    }

    fn neg(self) -> Poly {
        Poly(self.0.into_iter().map(|c| -c).collect())
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![<GaussRational as Coeff>::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_negligible(0.0) {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly(out)
    }

    fn pow(&self, exponent: usize) -> Poly {
        let mut acc = Poly::constant(Coeff::one());
        for _ in 0..exponent {
            acc = acc.mul(self);
        }
        acc
    }

    fn into_series(self, order: Option<usize>) -> Series<GaussRational> {
        match order {
            Some(n) => Series::new(self.0).resized(n),
            None => {
                let degree = self
                    .0
                    .iter()
                    .rposition(|c| !c.is_negligible(0.0))
                    .unwrap_or(0);
                Series::new(self.0).resized(degree)
            }
        }
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
    input_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map(|(o, _)| *o)
            .unwrap_or(self.input_len)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.cursor).map(|(_, t)| t.clone());
        self.cursor += 1;
        t
    }

    fn expect_uint(&mut self) -> Result<usize> {
        let offset = self.offset();
        match self.bump() {
            Some(Token::Number(c)) => {
                let re = &c.re;
                if !c.im.is_zero() || !re.is_integer() {
                    return Err(err(offset, "expected a nonnegative integer"));
                }
                let value: BigInt = re.to_integer();
                u64::try_from(value)
                    .map(|v| v as usize)
                    .map_err(|_| err(offset, "integer out of range"))
            }
            _ => Err(err(offset, "expected a nonnegative integer")),
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = acc.add(self.term()?);
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = acc.add(self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        let mut base = self.primary()?;
        while matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            let exponent = self.expect_uint()?;
            base = base.pow(exponent);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Poly> {
        let offset = self.offset();
        match self.bump() {
            Some(Token::Number(c)) => Ok(Poly::constant(c)),
            Some(Token::Z) => Ok(Poly::z()),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(err(close, "expected ')'")),
                }
            }
            Some(other) => Err(err(offset, format!("unexpected token {other:?}"))),
            None => Err(err(offset, "unexpected end of input")),
        }
    }
}

/// Parses an exact-mode series expression, e.g. `"z + z^2 @4"` or
/// `"(1-z)^2 @3"` or `"1/2 + z @2"`.
pub fn parse_series_expr(text: &str) -> Result<Series<GaussRational>> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, cursor: 0, input_len: text.len() };
    let poly = parser.expr()?;
    let order = if matches!(parser.peek(), Some(Token::At)) {
        parser.bump();
        Some(parser.expect_uint()?)
    } else {
        None
    };
    if parser.peek().is_some() {
        return Err(err(parser.offset(), "trailing input after expression"));
    }
    Ok(poly.into_series(order))
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = Series<GaussRational>;

    #[test]
    fn grammar_literals() {
        assert_eq!(parse_series_expr("z + z^2 @4").unwrap(), S::from_ints(&[0, 1, 1, 0, 0]));
        assert_eq!(parse_series_expr("(1-z)^2 @3").unwrap(), S::from_ints(&[1, -2, 1, 0]));
        let half = parse_series_expr("1/2 + z @2").unwrap();
        assert_eq!(half.coeff(0), GaussRational::from_ratio(1, 2));
        assert_eq!(half.coeff(1), Coeff::one());
        assert_eq!(half.order(), 2);
    }

    #[test]
    fn natural_degree_without_directive() {
        assert_eq!(parse_series_expr("(1+z)^3").unwrap(), S::from_ints(&[1, 3, 3, 1]));
        assert_eq!(parse_series_expr("5").unwrap().order(), 0);
        // cancellation trims back to the true degree
        assert_eq!(parse_series_expr("z^3 - z^3 + z").unwrap(), S::from_ints(&[0, 1]));
    }

    #[test]
    fn complex_literals() {
        let s = parse_series_expr("i*z + 3i + 1/2i*z^2").unwrap();
        assert_eq!(s.coeff(0), GaussRational::from_int(3) * imaginary_unit());
        assert_eq!(s.coeff(1), imaginary_unit());
        assert_eq!(s.coeff(2), GaussRational::from_ratio(1, 2) * imaginary_unit());
    }

    #[test]
    fn minus_binds_looser_than_power() {
        assert_eq!(parse_series_expr("-z^2").unwrap(), S::from_ints(&[0, 0, -1]));
    }

    #[test]
    fn truncation_directive_truncates_too() {
        assert_eq!(parse_series_expr("1 + z + z^3 @1").unwrap(), S::from_ints(&[1, 1]));
    }

    #[test]
    fn errors_carry_byte_offsets() {
        match parse_series_expr("z + $") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_series_expr("(z + 1") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_series_expr("z ^ i") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_series_expr("1/0").is_err());
    }

    #[test]
    fn round_trips_through_display_sanity() {
        // not a grammar guarantee, just a sanity check that parsing the
        // JSON-exported coefficients matches the original
        let s = parse_series_expr("3/4 - 2*z + z^5 @6").unwrap();
        assert_eq!(s.coeff(5), Coeff::one());
        assert_eq!(s.coeff(6), Coeff::zero());
        assert_eq!(s.order(), 6);
    }
}
