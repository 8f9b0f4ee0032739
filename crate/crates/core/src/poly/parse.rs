//! Text form of polynomials.
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := rat | var | var '^' uint
//! var    := 'x[' uint ',' uint ']' | 't[' uint ']' | 'b' | 'a'
//! rat    := uint | uint '/' uint
//! ```
//!
//! Whitespace is insignificant. `b` is β and `a` is α.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial::{PairIndex, XMonomial};
use super::tpoly::TPoly;
use super::xpoly::XPoly;
use crate::error::{Error, Result};
use crate::ring::{ParamCoeff, Rational};

#[derive(Debug)]
struct Term {
    coeff: Rational,
    beta: u32,
    alpha: u32,
    xs: Vec<(usize, usize, u32, usize)>,
    ts: Vec<(usize, u32, usize)>,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an unsigned integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn small_uint(&mut self) -> Result<usize> {
        let start = self.pos;
        let v = self.uint()?;
        usize::try_from(v).map_err(|_| Error::Parse {
            pos: start,
            message: "integer too large".into(),
        })
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.eat(b'^') {
            let start = self.pos;
            let v = self.small_uint()?;
            u32::try_from(v).map_err(|_| Error::Parse {
                pos: start,
                message: "exponent too large".into(),
            })
        } else {
            Ok(1)
        }
    }

    fn expr(&mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        let mut neg = self.eat(b'-');
        loop {
            let mut t = self.term()?;
            if neg {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                break;
            }
        }
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<Term> {
        let mut t = Term {
            coeff: Rational::one(),
            beta: 0,
            alpha: 0,
            xs: Vec::new(),
            ts: Vec::new(),
        };
        loop {
            self.factor(&mut t)?;
            if !self.eat(b'*') {
                return Ok(t);
            }
        }
    }

    fn factor(&mut self, t: &mut Term) -> Result<()> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                let den = if self.eat(b'/') {
                    let d = self.uint()?;
                    if d.is_zero() {
                        return self.err("zero denominator");
                    }
                    d
                } else {
                    BigInt::one()
                };
                t.coeff *= Rational::new(num, den);
            }
            Some(b'x') => {
                self.pos += 1;
                self.expect(b'[')?;
                let i = self.small_uint()?;
                self.expect(b',')?;
                let j = self.small_uint()?;
                self.expect(b']')?;
                let e = self.exponent()?;
                t.xs.push((i, j, e, start));
            }
            Some(b't') => {
                self.pos += 1;
                self.expect(b'[')?;
                let i = self.small_uint()?;
                self.expect(b']')?;
                let e = self.exponent()?;
                t.ts.push((i, e, start));
            }
            Some(b'b') => {
                self.pos += 1;
                t.beta += self.exponent()?;
            }
            Some(b'a') => {
                self.pos += 1;
                t.alpha += self.exponent()?;
            }
            Some(_) => return self.err("expected a number, x[i,j], t[i], b or a"),
            None => return self.err("unexpected end of input"),
        }
        Ok(())
    }
}

fn term_coeff(t: &Term) -> ParamCoeff {
    ParamCoeff::monomial(t.coeff.clone(), t.beta, t.alpha)
}

/// Parse a polynomial in the `x[i,j]` for ambient size `n`.
pub fn parse_poly(text: &str, n: usize) -> Result<XPoly> {
    let terms = Parser::new(text).expr()?;
    let mut out = XPoly::zero(n);
    for t in &terms {
        if let Some(&(_, _, pos)) = t.ts.first() {
            return Err(Error::Parse {
                pos,
                message: "t-variables are not allowed in an x-polynomial".into(),
            });
        }
        let mut m = XMonomial::one(n);
        for &(i, j, e, _) in &t.xs {
            let p = PairIndex::new(i, j, n)?;
            m = m.mul(&XMonomial::from_exponents(n, [(p, e)])?);
        }
        out.add_term(m, term_coeff(t));
    }
    Ok(out)
}

/// Parse a polynomial in `t_1..t_n`.
pub fn parse_tpoly(text: &str, n: usize) -> Result<TPoly> {
    let terms = Parser::new(text).expr()?;
    let mut out = TPoly::zero(n);
    for t in &terms {
        if let Some(&(_, _, _, pos)) = t.xs.first() {
            return Err(Error::Parse {
                pos,
                message: "x-variables are not allowed in a t-polynomial".into(),
            });
        }
        let mut e = vec![0u32; n];
        for &(i, k, _) in &t.ts {
            if i < 1 || i > n {
                return Err(Error::Index(format!("t[{i}] needs 1 <= i <= {n}")));
            }
            e[i - 1] += k;
        }
        out.add_term(e, term_coeff(t));
    }
    Ok(out)
}

/// Parse a bare monomial such as `x[1,2]*x[2,3]^2` (or `1`).
pub fn parse_monomial(text: &str, n: usize) -> Result<XMonomial> {
    let p = parse_poly(text, n)?;
    match p.head() {
        Some((m, c)) if p.num_terms() == 1 && c.is_one() => Ok(m.clone()),
        _ => Err(Error::Parse {
            pos: 0,
            message: format!("expected a single monomial with coefficient 1, got {p}"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_generator() {
        let p = parse_poly("x[1,2]*x[2,3] - b*x[1,3] - a", 3).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.to_string(), "x[1,2]*x[2,3] - b*x[1,3] - a");
    }

    #[test]
    fn zero_and_constants() {
        assert!(parse_poly("0", 3).unwrap().is_zero());
        assert!(parse_poly("x[1,2] - x[1,2]", 3).unwrap().is_zero());
        let p = parse_poly("-3/6*b^2 + 2", 2).unwrap();
        assert_eq!(p.to_string(), "-1/2*b^2 + 2");
    }

    #[test]
    fn index_errors() {
        assert!(matches!(parse_poly("x[2,2]", 3), Err(Error::Index(_))));
        assert!(matches!(parse_poly("x[1,4]", 3), Err(Error::Index(_))));
        assert!(matches!(parse_tpoly("t[5]", 4), Err(Error::Index(_))));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_poly("x[1,2] + * x[1,3]", 3) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 9),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_poly("x[1,2", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("1/0", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("t[1]", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("", 3), Err(Error::Parse { .. })));
    }

    #[test]
    fn whitespace_and_powers() {
        let p = parse_poly("  x[ 1 , 2 ] ^ 2 *x[1,2]* b ", 3).unwrap();
        assert_eq!(p.to_string(), "b*x[1,2]^3");
    }

    #[test]
    fn tpoly_parsing() {
        let p = parse_tpoly("t[1]^2*t[2] + a*t[3]", 3).unwrap();
        assert_eq!(p.to_string(), "t[1]^2*t[2] + a*t[3]");
        assert!(parse_tpoly("x[1,2]", 3).is_err());
    }

    #[test]
    fn monomial_parsing() {
        let m = parse_monomial("x[1,3]*x[1,2]", 3).unwrap();
        assert_eq!(m.to_string(), "x[1,2]*x[1,3]");
        assert!(parse_monomial("2*x[1,2]", 3).is_err());
        assert!(parse_monomial("x[1,2] + x[1,3]", 3).is_err());
        assert!(parse_monomial("1", 3).unwrap().is_one());
    }
}
