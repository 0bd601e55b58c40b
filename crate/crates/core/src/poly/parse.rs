use thiserror::Error;

use crate::exactnum::Rational;

use super::{Monomial, PolyRing, Polynomial};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ParsePolyError {
    #[error("unexpected character {0:?} at byte {1}")]
    Unexpected(char, usize),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("malformed number at byte {0}")]
    BadNumber(usize),
    #[error("empty term at byte {0}")]
    EmptyTerm(usize),
}

/// Parse the canonical polynomial grammar (plus arbitrary whitespace):
/// signed terms of the form `c`, `c*x1^2*y3`, or `x1*y2`, with `*` or `·`
/// as the multiplication sign.
pub fn parse_polynomial(ring: PolyRing, input: &str) -> Result<Polynomial, ParsePolyError> {
    let mut lexer = Lexer::new(input);
    let mut terms: Vec<(Monomial, Rational)> = Vec::new();
    let mut sign = Rational::one();
    let mut first = true;
    loop {
        lexer.skip_ws();
        if lexer.peek().is_none() {
            if first {
                // empty input parses as zero
                break;
            }
            return Err(ParsePolyError::EmptyTerm(lexer.pos));
        }
        // optional leading sign / separator
        match lexer.peek() {
            Some('+') => {
                lexer.bump();
            }
            Some('-') => {
                sign = -sign;
                lexer.bump();
            }
            _ if first => {}
            Some(c) => return Err(ParsePolyError::Unexpected(c, lexer.pos)),
            None => unreachable!(),
        }
        // consume any further signs (e.g. "- -" never printed, but cheap)
        lexer.skip_ws();
        let (mono, coeff) = parse_term(ring, &mut lexer)?;
        terms.push((mono, &sign * &coeff));
        sign = Rational::one();
        first = false;
        lexer.skip_ws();
        match lexer.peek() {
            None => break,
            Some('+') | Some('-') => continue,
            Some(c) => return Err(ParsePolyError::Unexpected(c, lexer.pos)),
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

fn parse_term(ring: PolyRing, lexer: &mut Lexer) -> Result<(Monomial, Rational), ParsePolyError> {
    let mut coeff = Rational::one();
    let mut exps = vec![0u32; ring.num_vars()];
    let mut saw_factor = false;
    loop {
        lexer.skip_ws();
        match lexer.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = lexer.take_rational()?;
                coeff = &coeff * &num;
                saw_factor = true;
            }
            Some(c) if c == 'x' || c == 'y' => {
                let name = lexer.take_var_name();
                let idx = ring
                    .var_index(&name)
                    .ok_or(ParsePolyError::UnknownVariable(name))?;
                let mut e = 1u32;
                if lexer.peek() == Some('^') {
                    lexer.bump();
                    e = lexer.take_exponent()?;
                }
                exps[idx] += e;
                saw_factor = true;
            }
            _ => break,
        }
        lexer.skip_ws();
        match lexer.peek() {
            Some('*') | Some('·') => {
                lexer.bump();
            }
            _ => break,
        }
    }
    if !saw_factor {
        return Err(ParsePolyError::EmptyTerm(lexer.pos));
    }
    Ok((Monomial::from_exps(exps), coeff))
}

struct Lexer<'a> {
    chars: Vec<char>,
    pos: usize,
    _input: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer {
            chars: input.chars().collect(),
            pos: 0,
            _input: input,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn take_digits(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn take_rational(&mut self) -> Result<Rational, ParsePolyError> {
        let at = self.pos;
        let numer = self.take_digits();
        if numer.is_empty() {
            return Err(ParsePolyError::BadNumber(at));
        }
        let mut text = numer;
        if self.peek() == Some('/') {
            self.bump();
            let denom = self.take_digits();
            if denom.is_empty() {
                return Err(ParsePolyError::BadNumber(self.pos));
            }
            text = format!("{}/{}", text, denom);
        }
        text.parse().map_err(|_| ParsePolyError::BadNumber(at))
    }

    fn take_exponent(&mut self) -> Result<u32, ParsePolyError> {
        let at = self.pos;
        let digits = self.take_digits();
        digits.parse().map_err(|_| ParsePolyError::BadNumber(at))
    }

    fn take_var_name(&mut self) -> String {
        let start = self.pos;
        self.bump(); // block letter
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        self.chars[start..self.pos].iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_canonical_strings() {
        let t = PolyRing::bigraded(2, 3);
        for s in [
            "x1*y1 - x2*y2",
            "-y1*y2 + y1*y3 + y2*y3",
            "x2*y3^4 - 3/2*x1^2 - 7",
            "0",
            "1",
            "-x1",
        ] {
            let p = parse_polynomial(t, s).unwrap();
            assert_eq!(p.to_string(), s, "round trip failed for {s}");
        }
    }

    #[test]
    fn accepts_whitespace_and_middle_dot() {
        let t = PolyRing::bigraded(2, 2);
        let a = parse_polynomial(t, "  x1 * y1-  x2*y2 ").unwrap();
        let b = parse_polynomial(t, "x1·y1 - x2·y2").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "x1*y1 - x2*y2");
    }

    #[test]
    fn rejects_garbage() {
        let t = PolyRing::bigraded(1, 1);
        assert!(parse_polynomial(t, "x2").is_err());
        assert!(parse_polynomial(t, "z1").is_err());
        assert!(parse_polynomial(t, "1 +").is_err());
        assert!(parse_polynomial(t, "3//2").is_err());
    }

    #[test]
    fn merges_repeated_factors() {
        let t = PolyRing::x_only(1);
        let p = parse_polynomial(t, "x1*x1*x1").unwrap();
        assert_eq!(p.to_string(), "x1^3");
        let q = parse_polynomial(t, "2*3*x1").unwrap();
        assert_eq!(q.to_string(), "6*x1");
    }
}
