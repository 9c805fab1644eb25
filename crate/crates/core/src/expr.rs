//! Recursive-descent parser and printer for polynomial expressions.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*'? unary)*          implicit product allowed
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' INT)?              exponent at most 64
//! atom   := INT ('/' INT)? | VAR | '(' expr ')'
//! ```
//!
//! Variables are matched greedily against the ring's names, so with names
//! `x, y` the input `xy` means `x*y`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{MultiPoly, Rational, Ring};

pub const MAX_EXPONENT: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at offset {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
    /// Ring names sorted by length, longest first.
    names: Vec<(usize, &'a str)>,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, position: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position,
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

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' || c == b'_' => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let at = self.pos;
        let Some(e) = self.integer() else {
            return self.err(at, "expected a non-negative integer exponent");
        };
        if e > BigInt::from(MAX_EXPONENT) {
            return self.err(at, format!("exponent {e} exceeds {MAX_EXPONENT}"));
        }
        let e: u32 = e.try_into().unwrap();
        Ok(base.pow(e))
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Some(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        let at = match self.peek() {
            None => return self.err(self.pos, "unexpected end of input"),
            Some(_) => self.pos,
        };
        let c = self.src[at];
        if c.is_ascii_digit() {
            let num = self.integer().unwrap();
            let save = self.pos;
            if self.peek() == Some(b'/') {
                self.pos += 1;
                self.skip_ws();
                let dat = self.pos;
                match self.integer() {
                    Some(den) if den.is_zero() => return self.err(dat, "division by zero"),
                    Some(den) => {
                        return Ok(MultiPoly::constant(self.ring, Rational::new(num, den)))
                    }
                    None => return self.err(dat, "expected an integer denominator"),
                }
            }
            self.pos = save;
            return Ok(MultiPoly::constant(self.ring, Rational::from_integer(num)));
        }
        if c == b'(' {
            self.pos += 1;
            let inner = self.expr()?;
            if self.peek() != Some(b')') {
                return self.err(self.pos, "expected ')'");
            }
            self.pos += 1;
            return Ok(inner);
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            let rest = &self.src[at..];
            for &(idx, name) in &self.names {
                if rest.starts_with(name.as_bytes()) {
                    self.pos += name.len();
                    return Ok(MultiPoly::var(self.ring, idx));
                }
            }
            let end = rest
                .iter()
                .position(|b| !(b.is_ascii_alphanumeric() || *b == b'_'))
                .unwrap_or(rest.len());
            let word = std::str::from_utf8(&rest[..end]).unwrap_or("?");
            return self.err(at, format!("unknown variable '{word}'"));
        }
        self.err(at, format!("unexpected character '{}'", c as char))
    }
}

/// Parse `text` as a polynomial in `ring`.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<MultiPoly, ParseError> {
    if let Some(p) = text.bytes().position(|b| !b.is_ascii()) {
        return Err(ParseError {
            position: p,
            message: "non-ASCII character".into(),
        });
    }
    let mut names: Vec<(usize, &str)> = ring.names().iter().map(|s| s.as_str()).enumerate().collect();
    names.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then(a.0.cmp(&b.0)));
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
        names,
    };
    let out = p.expr()?;
    if let Some(c) = p.peek() {
        return p.err(p.pos, format!("unexpected character '{}'", c as char));
    }
    Ok(out)
}

fn write_rational(out: &mut String, q: &Rational) {
    out.push_str(&q.numer().to_string());
    if !q.denom().is_one() {
        out.push('/');
        out.push_str(&q.denom().to_string());
    }
}

/// Print in the syntax accepted by [`parse_poly`], terms in degrevlex order,
/// e.g. `x^2*y - 3/4*z + 1`.
pub fn print_poly(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let ring = p.ring();
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mut factors: Vec<String> = Vec::new();
        for (v, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(ring.name(v).to_string()),
                _ => factors.push(format!("{}^{}", ring.name(v), e)),
            }
        }
        if factors.is_empty() || !a.is_one() {
            let mut s = String::new();
            write_rational(&mut s, &a);
            factors.insert(0, s);
        }
        out.push_str(&factors.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    fn r4() -> Ring {
        Ring::new(&["x", "y", "z", "t"])
    }

    #[test]
    fn implicit_products_and_precedence() {
        let r = r4();
        let a = parse_poly("2xy^2 - -z", &r).unwrap();
        let b = parse_poly("2*x*(y^2) + z", &r).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            parse_poly("-x^2", &r).unwrap(),
            -parse_poly("x*x", &r).unwrap()
        );
        assert_eq!(
            parse_poly("(x+y)(x-y)", &r).unwrap(),
            parse_poly("x^2-y^2", &r).unwrap()
        );
        assert_eq!(
            parse_poly("1/2 x + 3/6", &r).unwrap(),
            &MultiPoly::var(&r, 0).scale(&ratio(1, 2)) + &MultiPoly::constant(&r, ratio(1, 2))
        );
    }

    #[test]
    fn error_positions() {
        let r = r4();
        assert_eq!(parse_poly("x^2(", &r).unwrap_err().position, 4);
        let e = parse_poly("x + w", &r).unwrap_err();
        assert_eq!(e.position, 4);
        assert!(e.message.contains("unknown variable"));
        assert_eq!(parse_poly("x^65", &r).unwrap_err().position, 2);
        assert!(parse_poly("x^64", &r).is_ok());
        assert_eq!(parse_poly("x)", &r).unwrap_err().position, 1);
        assert_eq!(parse_poly("1/0", &r).unwrap_err().position, 2);
        assert_eq!(parse_poly("", &r).unwrap_err().position, 0);
    }

    #[test]
    fn longest_name_wins() {
        let r = Ring::new(&["p1", "p13", "c"]);
        let p = parse_poly("p13 c p1", &r).unwrap();
        assert_eq!(p.terms()[0].0.exponents(), &[1, 1, 1]);
        let p = parse_poly("p13p1", &r).unwrap();
        assert_eq!(p.terms()[0].0.exponents(), &[1, 1, 0]);
    }

    #[test]
    fn print_round_trip() {
        let r = r4();
        for s in [
            "x^8+y^8+z^8+t^8+168x^2y^2z^2t^2+14(x^4y^4+x^4z^4+x^4t^4+y^4z^4+y^4t^4+z^4t^4)",
            "-3/4 x y + z - 1",
            "0",
            "-1",
        ] {
            let p = parse_poly(s, &r).unwrap();
            let printed = print_poly(&p);
            assert_eq!(parse_poly(&printed, &r).unwrap(), p, "{printed}");
        }
        assert_eq!(
            print_poly(&parse_poly("1 - 3/4 x y + x^2", &r).unwrap()),
            "x^2 - 3/4*x*y + 1"
        );
        assert_eq!(print_poly(&MultiPoly::constant(&r, int(-5))), "-5");
    }
}
