//! Text format for polynomials.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := ('-' | '+')? factor (('*' | '/') factor)*
//! factor   := base ('^' uint)?
//! base     := 'x' | 'y' | 'z' | rational | '(' expr ')'
//! rational := int ('/' uint)?
//! ```
//!
//! Whitespace is ignored. Multiplication must be explicit. A leading sign is
//! read as `0 - term`. Division is only allowed by a nonzero constant.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, Rational, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Unexpected input; `expected` lists what would have been accepted.
    Syntax { found: Option<char>, expected: Vec<&'static str> },
    NegativeExponent,
    NonConstantDivisor,
    DivisionByZero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax { found, expected } => {
                write!(f, "syntax error at offset {}: ", self.offset)?;
                match found {
                    Some(c) => write!(f, "found `{c}`")?,
                    None => write!(f, "found end of input")?,
                }
                write!(f, ", expected one of: {}", expected.join(", "))
            }
            ParseErrorKind::NegativeExponent => write!(f, "negative exponent at offset {}", self.offset),
            ParseErrorKind::NonConstantDivisor => {
                write!(f, "division by a non-constant at offset {}", self.offset)
            }
            ParseErrorKind::DivisionByZero => write!(f, "division by zero at offset {}", self.offset),
        }
    }
}

impl std::error::Error for ParseError {}

pub fn parse(text: &str) -> Result<Poly> {
    let mut parser = Parser { src: text.as_bytes(), pos: 0 };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.syntax(&["'+'", "'-'", "'*'", "'/'", "end of input"]).into());
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&mut self, expected: &[&'static str]) -> ParseError {
        let found = self.peek().map(|b| b as char);
        ParseError { offset: self.pos, kind: ParseErrorKind::Syntax { found, expected: expected.to_vec() } }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = &acc * &rhs;
                }
                Some(b'/') => {
                    let at = self.pos;
                    self.pos += 1;
                    let rhs = self.factor()?;
                    let Some(c) = rhs.constant_value() else {
                        return Err(ParseError { offset: at, kind: ParseErrorKind::NonConstantDivisor }.into());
                    };
                    if c.is_zero() {
                        return Err(ParseError { offset: at, kind: ParseErrorKind::DivisionByZero }.into());
                    }
                    acc = acc.scale(&c.recip());
                }
                _ => break,
            }
        }
        Ok(if negate { -acc } else { acc })
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            match self.peek() {
                Some(b'-') => {
                    return Err(ParseError { offset: self.pos, kind: ParseErrorKind::NegativeExponent }.into());
                }
                Some(b) if b.is_ascii_digit() => {
                    let e = self.uint()?;
                    let e: u32 = e.try_into().map_err(|_| self.syntax(&["exponent below 2^32"]))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.syntax(&["unsigned integer"]).into()),
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Poly::var(Var::X))
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(Poly::var(Var::Y))
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(Poly::var(Var::Z))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax(&["')'", "'+'", "'-'", "'*'"]).into());
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => {
                let n = self.uint()?;
                let mut value = Rational::from_integer(n);
                // rational literal: digits '/' digits
                let save = self.pos;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        let at = self.pos;
                        let d = self.uint()?;
                        if d.is_zero() {
                            return Err(ParseError { offset: at, kind: ParseErrorKind::DivisionByZero }.into());
                        }
                        value = Rational::new(value.to_integer(), d);
                    } else {
                        self.pos = save;
                    }
                }
                Ok(Poly::constant(value))
            }
            _ => Err(self.syntax(&["'x'", "'y'", "'z'", "integer", "'('"]).into()),
        }
    }

    fn uint(&mut self) -> std::result::Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax(&["unsigned integer"]));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }
}

/// Canonical text: terms by increasing total degree, and within one degree
/// in decreasing lexicographic order (`x > y > z`). Coefficients are reduced
/// fractions; unit coefficients are omitted.
pub fn render(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&Monomial, &Rational)> = p.terms().collect();
    terms.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| b.0.lex_cmp(a.0)));
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let abs = c.abs();
        let mono = render_monomial(m);
        if mono.is_empty() {
            out.push_str(&render_rational(&abs));
        } else {
            if !abs.is_one() {
                out.push_str(&render_rational(&abs));
                out.push('*');
            }
            out.push_str(&mono);
        }
    }
    out
}

pub fn render_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let p = parse(text)?;
    p.constant_value().ok_or_else(|| {
        Error::Parse(ParseError {
            offset: 0,
            kind: ParseErrorKind::Syntax { found: text.chars().next(), expected: vec!["rational constant"] },
        })
    })
}

fn render_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for v in Var::ALL {
        match m.exp(v) {
            0 => {}
            1 => parts.push(v.name().to_string()),
            e => parts.push(format!("{}^{}", v.name(), e)),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    #[test]
    fn parses_potentials() {
        let a = parse("1/2*z^2 - 2*x*y").unwrap();
        assert_eq!(a.coeff(&Monomial::new(0, 0, 2)), ratio(1, 2));
        assert_eq!(a.coeff(&Monomial::new(1, 1, 0)), ratio(-2, 1));
        assert_eq!(a.num_terms(), 2);
        let q = parse("x*y*z - x^2 - y^2 - z^2 + 4").unwrap();
        assert_eq!(q.num_terms(), 5);
        assert_eq!(q.coeff(&Monomial::ONE), ratio(4, 1));
    }

    #[test]
    fn syntax_error_offsets() {
        let err = parse("x^").unwrap_err();
        let Error::Parse(e) = err else { panic!("expected parse error") };
        assert_eq!(e.offset, 2);
        assert!(matches!(e.kind, ParseErrorKind::Syntax { found: None, .. }));

        let Error::Parse(e) = parse("x^-2").unwrap_err() else { panic!() };
        assert_eq!(e.kind, ParseErrorKind::NegativeExponent);

        let Error::Parse(e) = parse("x/y").unwrap_err() else { panic!() };
        assert_eq!((e.offset, e.kind), (1, ParseErrorKind::NonConstantDivisor));

        let Error::Parse(e) = parse("2 x").unwrap_err() else { panic!() };
        assert_eq!(e.offset, 2);

        assert!(parse("").is_err());
        assert!(parse("(x + 1").is_err());
        assert!(parse("w").is_err());
    }

    #[test]
    fn renders_canonically() {
        assert_eq!(render(&Poly::zero()), "0");
        assert_eq!(render(&parse("y + x").unwrap()), "x + y");
        assert_eq!(render(&parse("2/4*x").unwrap()), "1/2*x");
        assert_eq!(render(&parse("2*(1 - x*y)").unwrap()), "2 - 2*x*y");
        assert_eq!(render(&parse("-x - y - z").unwrap()), "-x - y - z");
        assert_eq!(render(&parse("-(1/3)").unwrap()), "-1/3");
        assert_eq!(render(&parse("x^2*y - 3/2*z^3 + y").unwrap()), "y + x^2*y - 3/2*z^3");
    }

    #[test]
    fn whitespace_and_signs() {
        assert_eq!(parse(" x ^ 2 -  - y ").unwrap(), parse("x^2 + y").unwrap());
        assert_eq!(parse("-x^2").unwrap(), -parse("x^2").unwrap());
        assert_eq!(parse("(x + y)/2").unwrap(), parse("1/2*x + 1/2*y").unwrap());
        assert_eq!(parse("3/6").unwrap(), Poly::constant(ratio(1, 2)));
    }
}
