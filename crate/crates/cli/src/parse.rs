//! Parser for the expression language:
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' signed-int)?
//! atom   := 'b[' i ',' j ']' | 'g[' j ',' i ']' | 'q' | rational | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use qpbw_core::{FreeElement, Generator, LaurentElement, LaurentScalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("{generator} at position {pos} is not a generator for n = {n}")]
    Index { pos: usize, generator: String, n: usize },
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    n: usize,
}

fn syntax(pos: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        pos,
        message: message.into(),
    }
}

/// Parses `text` into an element of the rank-`n` FRT algebra. The result is
/// not normal-formed.
pub fn parse_expression(text: &str, n: usize) -> Result<LaurentElement, ParseError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        n,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(syntax(p.pos, format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(e)
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(syntax(self.pos, format!("expected '{c}', found '{x}'"))),
            None => Err(syntax(self.pos, format!("expected '{c}', found end of input"))),
        }
    }

    fn expr(&mut self) -> Result<LaurentElement, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some('-') => {
                negate = true;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentElement, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentElement, ParseError> {
        let start = self.pos;
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let k = self.integer()?;
        let k = u32::try_from(k).map_err(|_| syntax(self.pos, "exponent too large"))?;
        if !neg {
            return Ok(base.pow(k));
        }
        invert(&base)
            .map(|inv| inv.pow(k))
            .ok_or_else(|| syntax(start, "negative power of an element that is not a unit"))
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(syntax(start, "expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits"))
    }

    fn index(&mut self) -> Result<usize, ParseError> {
        let pos = self.pos;
        let v = self.integer()?;
        usize::try_from(v).map_err(|_| syntax(pos, "index too large"))
    }

    fn atom(&mut self) -> Result<LaurentElement, ParseError> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return Err(syntax(self.pos, "unexpected end of input")),
        };
        match self.chars[start] {
            '(' => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            'q' => {
                self.pos += 1;
                Ok(FreeElement::scalar(LaurentScalar::q()))
            }
            c @ ('b' | 'g') => {
                self.pos += 1;
                self.expect('[')?;
                let r = self.index()?;
                self.expect(',')?;
                let s = self.index()?;
                self.expect(']')?;
                let ok = r >= 1 && s >= 1 && r <= self.n && s <= self.n;
                let ok = ok && if c == 'b' { r <= s } else { r >= s };
                if !ok {
                    return Err(ParseError::Index {
                        pos: start,
                        generator: format!("{c}[{r},{s}]"),
                        n: self.n,
                    });
                }
                let g = if c == 'b' {
                    Generator::beta(r, s)
                } else {
                    Generator::gamma(r, s)
                };
                Ok(FreeElement::letter(g))
            }
            c if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = BigRational::from_integer(num);
                if self.chars.get(self.pos) == Some(&'/') {
                    self.pos += 1;
                    let den_pos = self.pos;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(syntax(den_pos, "zero denominator"));
                    }
                    value /= BigRational::from_integer(den);
                }
                Ok(FreeElement::scalar(LaurentScalar::constant(value)))
            }
            c => Err(syntax(start, format!("unexpected '{c}'"))),
        }
    }
}

/// Inverse of a unit: a single word of diagonal letters times an invertible
/// scalar.
fn invert(e: &LaurentElement) -> Option<LaurentElement> {
    let mut terms = e.terms();
    let (w, c) = terms.next()?;
    if terms.next().is_some() {
        return None;
    }
    let c_inv = c.inverse()?;
    let mut inv = Vec::with_capacity(w.len());
    for x in w.iter().rev() {
        if !x.is_diagonal() {
            return None;
        }
        let k = x.row();
        inv.push(if x.kind() == qpbw_core::GeneratorKind::Beta {
            Generator::gamma(k, k)
        } else {
            Generator::beta(k, k)
        });
    }
    Some(FreeElement::monomial(inv, c_inv))
}
