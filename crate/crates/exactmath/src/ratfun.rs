//! Reduced quotients of polynomials.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};


use num_complex::Complex64;

use crate::field::Field;
use crate::{ExactError, Polynomial, RadicalNumber, Rational};

/// `num/den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction<F> {
    num: Polynomial<F>,
    den: Polynomial<F>,
}

/// Canonical reduced form of `num/den`.
pub fn reduce<F: Field>(num: Polynomial<F>, den: Polynomial<F>) -> Result<RationalFunction<F>, ExactError> {
    RationalFunction::new(num, den)
}

impl<F: Field> RationalFunction<F> {
    pub fn new(num: Polynomial<F>, den: Polynomial<F>) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZeroPolynomial);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let mut n = num.exact_div(&g)?;
        let mut d = den.exact_div(&g)?;
        let lc = d.leading().cloned().expect("nonzero").inv().expect("nonzero");
        n = n.scale(&lc);
        d = d.scale(&lc);
        Ok(RationalFunction { num: n, den: d })
    }

    pub fn from_poly(p: Polynomial<F>) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn x() -> Self {
        Self::from_poly(Polynomial::x())
    }

    /// `c/(x − a)^k`.
    pub fn pole_term(c: F, a: F, k: u32) -> Self {
        let lin = Polynomial::linear(-a, F::one());
        Self::new(Polynomial::constant(c), lin.pow(k)).expect("nonzero denominator")
    }

    pub fn num(&self) -> &Polynomial<F> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den).expect("nonzero denominator")
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ExactError> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, k: u32) -> Self {
        RationalFunction { num: self.num.pow(k), den: self.den.pow(k) }
    }

    /// `None` at a pole.
    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x);
        self.num.eval(x).checked_div(&d)
    }

    pub fn eval_c64(&self, x: Complex64) -> Complex64 {
        self.num.eval_c64(x) / self.den.eval_c64(x)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> RationalFunction<G> {
        RationalFunction::new(self.num.map(&f), self.den.map(&f)).expect("nonzero denominator")
    }

    /// Exact rational view, if all coefficients are rational.
    pub fn to_rational(&self) -> Option<RationalFunction<Rational>> {
        let conv = |p: &Polynomial<F>| -> Option<Polynomial<Rational>> {
            p.coeffs().iter().map(|c| c.as_rational()).collect::<Option<Vec<_>>>().map(Polynomial::new)
        };
        Some(RationalFunction { num: conv(&self.num)?, den: conv(&self.den)? })
    }

    pub fn to_string_var(&self, var: &str) -> String {
        let n = self.num.to_string_var(var);
        if self.den.is_one_poly() {
            return n;
        }
        let d = self.den.to_string_var(var);
        let wrap = |s: String, p: &Polynomial<F>| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1 && !s.contains([' ', '/']) {
                s
            } else {
                format!("({s})")
            }
        };
        format!("{}/{}", wrap(n, &self.num), wrap(d, &self.den))
    }
}

impl RationalFunction<Rational> {
    pub fn to_radical(&self) -> RationalFunction<RadicalNumber> {
        RationalFunction {
            num: self.num.map(|c| RadicalNumber::from_rational(c.clone())),
            den: self.den.map(|c| RadicalNumber::from_rational(c.clone())),
        }
    }
}

trait IsOnePoly {
    fn is_one_poly(&self) -> bool;
}

impl<F: Field> IsOnePoly for Polynomial<F> {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }
}

impl<F: Field> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("x"))
    }
}

impl<F: Field> From<Polynomial<F>> for RationalFunction<F> {
    fn from(p: Polynomial<F>) -> Self {
        Self::from_poly(p)
    }
}

impl<'a, F: Field> Add<&'a RationalFunction<F>> for &'a RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn add(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        let g = self.den.gcd(&rhs.den);
        let a = rhs.den.exact_div(&g).expect("gcd divides");
        let b = self.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &a) + &(&rhs.num * &b);
        RationalFunction::new(num, &self.den * &a).expect("nonzero")
    }
}

impl<'a, F: Field> Sub<&'a RationalFunction<F>> for &'a RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn sub(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        self + &(-rhs)
    }
}

impl<'a, F: Field> Mul<&'a RationalFunction<F>> for &'a RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn mul(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n = &self.num.exact_div(&g1).unwrap() * &rhs.num.exact_div(&g2).unwrap();
        let d = &self.den.exact_div(&g2).unwrap() * &rhs.den.exact_div(&g1).unwrap();
        RationalFunction::new(n, d).expect("nonzero")
    }
}

/// Panics on division by the zero function; see [`RationalFunction::checked_div`].
impl<'a, F: Field> Div<&'a RationalFunction<F>> for &'a RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn div(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl<F: Field> Neg for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn neg(self) -> RationalFunction<F> {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl<F: Field> Neg for RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn neg(self) -> RationalFunction<F> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr<RationalFunction<F>> for RationalFunction<F> {
            type Output = RationalFunction<F>;
            fn $m(self, rhs: RationalFunction<F>) -> RationalFunction<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    fn p(v: &[i64]) -> Polynomial<Rational> {
        Polynomial::new(v.iter().map(|&c| q(c, 1)).collect())
    }

    #[test]
    fn reduce_examples() {
        let r = reduce(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(r, RationalFunction::from_poly(p(&[1, 1])));
        assert!(reduce(p(&[]), p(&[0, 1])).unwrap().is_zero());
        let r = reduce(p(&[2, 2]), p(&[4])).unwrap();
        assert_eq!(r.num(), &Polynomial::new(vec![q(1, 2), q(1, 2)]));
        assert_eq!(r.den(), &p(&[1]));
        assert_eq!(reduce(p(&[1]), p(&[])), Err(ExactError::DivisionByZeroPolynomial));
    }

    #[test]
    fn quotient_rule() {
        let r = reduce(p(&[1, 0, 1]), p(&[0, 1])).unwrap();
        // (1 + x^2)/x -> 1 - 1/x^2
        let want = reduce(p(&[-1, 0, 1]), p(&[0, 0, 1])).unwrap();
        assert_eq!(r.derivative(), want);
    }

    #[test]
    fn printing() {
        let r = reduce(p(&[1]), p(&[0, 0, -1, 1])).unwrap();
        assert_eq!(r.to_string(), "1/(x^3 - x^2)");
        let r = reduce(p(&[0, 3]), p(&[0, 0, 1])).unwrap();
        assert_eq!(r.to_string(), "3/x");
    }
}
