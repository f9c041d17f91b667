//! Text grammar for rational functions over Q.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' digits)?
//! atom  := digits | var | '(' expr ')'
//! ```

use num_bigint::BigInt;

use crate::{ExactError, Polynomial, RationalFunction, Rational};

type RF = RationalFunction<Rational>;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    var: u8,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExactError> {
        Err(ExactError::Parse { pos: self.pos, msg: msg.into() })
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

    fn digits(&mut self) -> Result<BigInt, ExactError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(s.parse().expect("digits parse"))
    }

    fn expr(&mut self) -> Result<RF, ExactError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RF, ExactError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                b'/' => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    acc = acc.checked_div(&d).map_err(|_| ExactError::Parse { pos: at, msg: "division by zero".into() })?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RF, ExactError> {
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

    fn power(&mut self) -> Result<RF, ExactError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.digits()?;
            let e: u32 = match e.try_into() {
                Ok(e) if e <= 10_000 => e,
                _ => return self.err("exponent too large"),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RF, ExactError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                Ok(RF::constant(Rational::from_integer(n)))
            }
            Some(c) if c == self.var => {
                self.pos += 1;
                Ok(RF::from_poly(Polynomial::x()))
            }
            Some(c) => self.err(format!("unexpected '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` in the variable `var` (a single ASCII letter).
pub fn parse_rational_function(text: &str, var: char) -> Result<RF, ExactError> {
    if !var.is_ascii_alphabetic() {
        return Err(ExactError::Parse { pos: 0, msg: format!("invalid variable '{var}'") });
    }
    let mut p = Parser { src: text.as_bytes(), pos: 0, var: var as u8 };
    let r = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(r)
}

/// Parses an exact rational such as `-5/2` or `3`.
pub fn parse_rational(text: &str) -> Result<Rational, ExactError> {
    let r = parse_rational_function(text, 'x')?;
    if !r.is_polynomial() || r.num().degree().unwrap_or(0) > 0 {
        return Err(ExactError::Parse { pos: 0, msg: format!("not a rational constant: {text}") });
    }
    Ok(r.num().coeff(0) / r.den().coeff(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    #[test]
    fn basic() {
        let r = parse_rational_function("1/(4*x^2)", 'x').unwrap();
        assert_eq!(r.to_string(), "(1/4)/x^2");
        assert_eq!(r.den(), &Polynomial::monomial(q(1, 1), 2));
        assert_eq!(r.num().coeff(0), q(1, 4));
        let r = parse_rational_function("-z^2 + 3*z - (z-1)/2", 'z').unwrap();
        assert_eq!(r.to_string_var("z"), "-z^2 + 5/2*z + 1/2");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_rational_function("1/(x-x)", 'x'), Err(ExactError::Parse { .. })));
        assert!(matches!(parse_rational_function("x +", 'x'), Err(ExactError::Parse { .. })));
        assert!(matches!(parse_rational_function("y", 'x'), Err(ExactError::Parse { .. })));
        assert!(matches!(parse_rational_function("x^-1", 'x'), Err(ExactError::Parse { .. })));
    }

    #[test]
    fn round_trip_printed_forms() {
        for s in ["0", "1", "x", "1/x^4", "(x^3 - 3*x^2 - 4*x + 1)/(4*x^3 - 4*x^2)", "-1/2*x + 7/3", "3*x/(x - 1)"] {
            let r = parse_rational_function(s, 'x').unwrap();
            let back = parse_rational_function(&r.to_string(), 'x').unwrap();
            assert_eq!(back, r, "{s}");
        }
        assert_eq!(parse_rational("-5/2").unwrap(), q(-5, 2));
        assert!(parse_rational("x").is_err());
    }
}
