//! Parser for polynomial expressions over a declared list of variables.
//!
//! ```text
//! poly   := ['-'] term (('+'|'-') term)*
//! term   := [coeff '*'] factor ('*' factor)* | coeff
//! factor := ident ['^' nat]
//! coeff  := int ['/' posint]
//! ident  := letter (letter | digit | '_')*
//! ```
//!
//! Whitespace is allowed between tokens. Offsets in errors are byte offsets
//! into the source text.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{GradedPolynomial, Monomial, MAX_EXPONENT};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable {name:?} at byte {offset}")]
    UnknownVariable { name: String, offset: usize },
    #[error("exponent at byte {offset} exceeds 2^31 - 1")]
    ExponentOverflow { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::UnknownVariable { offset, .. }
            | ParseError::ExponentOverflow { offset } => *offset,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                out.push((start, Token::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().expect("in bounds");
                return Err(ParseError::Syntax {
                    offset: start,
                    message: format!("unexpected character {ch:?}"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    variables: &'a [&'a str],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn syntax<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            offset: self.offset(),
            message: message.to_string(),
        })
    }

    fn poly(&mut self) -> Result<GradedPolynomial, ParseError> {
        let mut terms = Vec::new();
        let mut negate = false;
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            negate = true;
        }
        loop {
            let (c, m) = self.term()?;
            terms.push((if negate { -c } else { c }, m));
            match self.peek() {
                Some(Token::Plus) => negate = false,
                Some(Token::Minus) => negate = true,
                None => break,
                Some(_) => return self.syntax("expected '+', '-' or end of input"),
            }
            self.pos += 1;
        }
        Ok(GradedPolynomial::from_terms(terms))
    }

    fn term(&mut self) -> Result<(BigRational, Monomial), ParseError> {
        let mut exps = vec![0u32; self.variables.len()];
        let coeff = match self.peek() {
            Some(Token::Int(_)) => {
                let c = self.coeff()?;
                if self.peek() != Some(&Token::Star) {
                    return Ok((c, Monomial::new(exps)));
                }
                self.pos += 1;
                c
            }
            Some(Token::Ident(_)) => BigRational::one(),
            _ => return self.syntax("expected a coefficient or variable"),
        };
        loop {
            self.factor(&mut exps)?;
            if self.peek() != Some(&Token::Star) {
                break;
            }
            self.pos += 1;
        }
        Ok((coeff, Monomial::new(exps)))
    }

    fn coeff(&mut self) -> Result<BigRational, ParseError> {
        let Some(Token::Int(n)) = self.peek().cloned() else {
            return self.syntax("expected an integer");
        };
        self.pos += 1;
        if self.peek() != Some(&Token::Slash) {
            return Ok(BigRational::from_integer(n));
        }
        self.pos += 1;
        match self.peek().cloned() {
            Some(Token::Int(d)) if !d.is_zero() => {
                self.pos += 1;
                Ok(BigRational::new(n, d))
            }
            Some(Token::Int(_)) => self.syntax("zero denominator"),
            _ => self.syntax("expected a positive denominator"),
        }
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<(), ParseError> {
        let offset = self.offset();
        let Some(Token::Ident(name)) = self.peek().cloned() else {
            return self.syntax("expected a variable");
        };
        self.pos += 1;
        let idx = self
            .variables
            .iter()
            .position(|v| *v == name)
            .ok_or(ParseError::UnknownVariable { name, offset })?;
        let mut e: u32 = 1;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let exp_offset = self.offset();
            let Some(Token::Int(n)) = self.peek().cloned() else {
                return self.syntax("expected an exponent");
            };
            self.pos += 1;
            e = u32::try_from(&n)
                .ok()
                .filter(|e| *e <= MAX_EXPONENT)
                .ok_or(ParseError::ExponentOverflow { offset: exp_offset })?;
        }
        exps[idx] = exps[idx]
            .checked_add(e)
            .filter(|s| *s <= MAX_EXPONENT)
            .ok_or(ParseError::ExponentOverflow { offset })?;
        Ok(())
    }
}

/// Parses `text` into a canonical polynomial in `variables`.
pub fn parse_polynomial(text: &str, variables: &[&str]) -> Result<GradedPolynomial, ParseError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        variables,
    };
    if parser.peek().is_none() {
        return parser.syntax("empty expression");
    }
    parser.poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const XYZ: &[&str] = &["x", "y", "z"];

    #[test]
    fn quadric_relation() {
        let p = parse_polynomial("x*y - z^2", XYZ).unwrap();
        let terms = p.terms();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].0, BigRational::one());
        assert_eq!(terms[0].1.exponents(), &[1, 1, 0]);
        assert_eq!(terms[1].0, -BigRational::one());
        assert_eq!(terms[1].1.exponents(), &[0, 0, 2]);
    }

    #[test]
    fn merges_terms() {
        let p = parse_polynomial("x + x", XYZ).unwrap();
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.terms()[0].0, BigRational::from_integer(2.into()));
        assert!(parse_polynomial("x - x", XYZ).unwrap().is_zero());
        assert_eq!(parse_polynomial("x*x*y^2", XYZ).unwrap().terms()[0].1.exponents(), &[2, 2, 0]);
    }

    #[test]
    fn rational_coefficient() {
        let p = parse_polynomial("1/2*x^2*y", XYZ).unwrap();
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.terms()[0].0, BigRational::new(1.into(), 2.into()));
        assert_eq!(p.terms()[0].1.exponents(), &[2, 1, 0]);
        let c = parse_polynomial("-6/4", XYZ).unwrap();
        assert_eq!(c.terms()[0].0, BigRational::new((-3).into(), 2.into()));
    }

    #[test]
    fn error_offsets() {
        assert_eq!(
            parse_polynomial("x + w", XYZ),
            Err(ParseError::UnknownVariable { name: "w".into(), offset: 4 })
        );
        assert_eq!(parse_polynomial("x +", XYZ).unwrap_err().offset(), 3);
        assert_eq!(parse_polynomial("x $ y", XYZ).unwrap_err().offset(), 2);
        assert_eq!(parse_polynomial("x y", XYZ).unwrap_err().offset(), 2);
        assert_eq!(parse_polynomial("1/0*x", XYZ).unwrap_err().offset(), 2);
        assert_eq!(parse_polynomial("x - -y", XYZ).unwrap_err().offset(), 4);
        assert_eq!(parse_polynomial("x*2", XYZ).unwrap_err().offset(), 2);
        assert!(parse_polynomial("", XYZ).is_err());
        assert!(parse_polynomial("   ", XYZ).is_err());
    }

    #[test]
    fn exponent_limits() {
        assert!(parse_polynomial("x^2147483647", XYZ).is_ok());
        assert_eq!(
            parse_polynomial("x^2147483648", XYZ),
            Err(ParseError::ExponentOverflow { offset: 2 })
        );
        assert!(matches!(
            parse_polynomial("x^2147483647*x", XYZ),
            Err(ParseError::ExponentOverflow { .. })
        ));
    }

    fn arb_poly() -> impl Strategy<Value = GradedPolynomial> {
        let term = (-20i64..20, 1i64..6, proptest::collection::vec(0u32..4, 3));
        proptest::collection::vec(term, 0..6).prop_map(|ts| {
            GradedPolynomial::from_terms(
                ts.into_iter()
                    .map(|(n, d, e)| (BigRational::new(n.into(), d.into()), Monomial::new(e))),
            )
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(p in arb_poly()) {
            let text = p.display(XYZ).to_string();
            let back = parse_polynomial(&text, XYZ).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.display(XYZ).to_string(), text);
        }
    }
}
