//! Surface syntax:
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := 'P(' expr ')' | ident | '1' | '(' expr ')'
//! coeff  := int ('/' posint)?
//! ```
//!
//! Identifiers are runs of ASCII letters other than `P`; a run names one
//! basis word of the generator, so `ab` is the single letter `ab`.

use std::collections::BTreeSet;
use std::fmt;

use mrba_core::rational::{self, int};
use mrba_core::{Expr, GeneratorBialgebra};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Syntax { offset: usize, expected: String },
    UnknownIdentifier { offset: usize, ident: String },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::UnknownIdentifier { offset, .. } => *offset,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { offset, expected } => {
                write!(f, "syntax error at offset {offset}: expected {expected}")
            }
            ParseError::UnknownIdentifier { offset, ident } => {
                write!(f, "unknown identifier `{ident}` at offset {offset}")
            }
        }
    }
}

impl std::error::Error for ParseError {}

/// Syntax only; identifiers are not checked.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    Parser { src: text.as_bytes(), pos: 0, gen: None }.parse_all()
}

/// Parses and rejects identifiers outside the generator's basis.
pub fn parse_in(text: &str, gen: &dyn GeneratorBialgebra) -> Result<Expr, ParseError> {
    Parser { src: text.as_bytes(), pos: 0, gen: Some(gen) }.parse_all()
}

/// All identifiers occurring in `e`.
pub fn identifiers(e: &Expr) -> BTreeSet<String> {
    fn go(e: &Expr, out: &mut BTreeSet<String>) {
        match e {
            Expr::Sum(xs) | Expr::Prod(xs) => xs.iter().for_each(|x| go(x, out)),
            Expr::Scale(_, x) | Expr::Op(x) => go(x, out),
            Expr::Gen(s) => {
                out.insert(s.clone());
            }
            Expr::Unit => {}
        }
    }
    let mut out = BTreeSet::new();
    go(e, &mut out);
    out
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    gen: Option<&'a dyn GeneratorBialgebra>,
}

fn is_ident_byte(b: u8) -> bool {
    b.is_ascii_alphabetic() && b != b'P'
}

impl Parser<'_> {
    fn parse_all(mut self) -> Result<Expr, ParseError> {
        let e = self.expr()?;
        self.skip_ws();
        if self.pos < self.src.len() {
            return Err(self.expected("end of input"));
        }
        Ok(e)
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.expected(&format!("`{}`", b as char)))
        }
    }

    fn expected(&self, what: &str) -> ParseError {
        ParseError::Syntax { offset: self.pos, expected: what.to_string() }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let negate = self.eat(b'-');
        let first = self.term()?;
        let mut terms = vec![if negate { Expr::scale(int(-1), first) } else { first }];
        loop {
            if self.eat(b'+') {
                terms.push(self.term()?);
            } else if self.eat(b'-') {
                terms.push(Expr::scale(int(-1), self.term()?));
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let coeff = match self.peek() {
            Some(b) if b.is_ascii_digit() => self.coeff()?,
            _ => None,
        };
        let mut factors = Vec::new();
        if coeff.is_none() {
            factors.push(self.factor()?);
        }
        while self.eat(b'*') {
            factors.push(self.factor()?);
        }
        let body = match factors.len() {
            0 => Expr::Unit,
            1 => factors.pop().unwrap(),
            _ => Expr::Prod(factors),
        };
        Ok(match coeff {
            Some(c) => Expr::scale(c, body),
            None => body,
        })
    }

    /// `None` for a bare `1`, which is the unit factor rather than a coefficient.
    fn coeff(&mut self) -> Result<Option<mrba_core::Rational>, ParseError> {
        let start = self.pos;
        let num = self.digits();
        if self.eat(b'/') {
            let den_start = self.pos;
            let den = self.digits();
            if den.is_empty() || den.bytes().all(|b| b == b'0') {
                self.pos = den_start;
                return Err(self.expected("positive integer"));
            }
            let c = rational::parse(&format!("{num}/{den}")).expect("digits");
            return Ok(Some(c));
        }
        if num == "1" {
            self.pos = start;
            return Ok(None);
        }
        Ok(Some(rational::parse(&num).expect("digits")))
    }

    fn digits(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(b'P') => {
                self.pos += 1;
                self.expect(b'(')?;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(Expr::op(inner))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'1') if !self.src.get(self.pos + 1).is_some_and(u8::is_ascii_digit) => {
                self.pos += 1;
                Ok(Expr::Unit)
            }
            Some(b) if is_ident_byte(b) => {
                let start = self.pos;
                while self.src.get(self.pos).copied().is_some_and(is_ident_byte) {
                    self.pos += 1;
                }
                let ident = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                if let Some(gen) = self.gen {
                    if !gen.contains(&ident) {
                        return Err(ParseError::UnknownIdentifier { offset: start, ident });
                    }
                }
                Ok(Expr::Gen(ident))
            }
            _ => Err(self.expected("`P(`, `(`, `1` or an identifier")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mrba_core::rational::ratio;
    use mrba_core::FreePrimitiveGenerator;

    #[test]
    fn examples() {
        assert_eq!(parse("P(a)*P(b)").unwrap(), Expr::prod(Expr::op(Expr::gen("a")), Expr::op(Expr::gen("b"))));
        assert_eq!(
            parse("1/2*P(1) + a").unwrap(),
            Expr::Sum(vec![Expr::scale(ratio(1, 2), Expr::op(Expr::Unit)), Expr::gen("a")])
        );
        assert_eq!(parse("P(a").unwrap_err().offset(), 3);
    }

    #[test]
    fn whitespace_and_signs() {
        assert_eq!(parse(" P ( a ) ").unwrap(), Expr::op(Expr::gen("a")));
        assert_eq!(
            parse("-a - 2").unwrap(),
            Expr::Sum(vec![
                Expr::scale(int(-1), Expr::gen("a")),
                Expr::scale(int(-1), Expr::scale(int(2), Expr::Unit))
            ])
        );
        assert_eq!(parse("3/6*ab").unwrap(), Expr::scale(ratio(1, 2), Expr::gen("ab")));
        assert_eq!(parse("1*a").unwrap(), Expr::Prod(vec![Expr::Unit, Expr::gen("a")]));
        assert_eq!(parse("10").unwrap(), Expr::scale(int(10), Expr::Unit));
    }

    #[test]
    fn errors() {
        assert_eq!(parse("").unwrap_err().offset(), 0);
        assert_eq!(parse("a b").unwrap_err().offset(), 2);
        assert_eq!(parse("1/0*a").unwrap_err().offset(), 2);
        assert_eq!(parse("a*2").unwrap_err().offset(), 2);
        assert_eq!(parse("Pa").unwrap_err().offset(), 1);
        let gen = FreePrimitiveGenerator::new(['a']).unwrap();
        assert_eq!(
            parse_in("a + P(c)", &gen).unwrap_err(),
            ParseError::UnknownIdentifier { offset: 6, ident: "c".into() }
        );
    }
}
