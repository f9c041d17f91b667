//! Q-linear combinations of square roots of squarefree integers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::factor::{factorize, square_split};
use crate::field::{rational_to_f64, Field};
use crate::{ExactError, Rational};

/// `rational + Σ c_d √d` over squarefree `d ∉ {0, 1}`.
///
/// Negative keys are allowed; `√d` for `d < 0` means `i·√|d|`, so the
/// span is closed under the square roots of negative discriminants too.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct RadicalNumber {
    rational: Rational,
    terms: BTreeMap<BigInt, Rational>,
}

impl RadicalNumber {
    pub fn from_rational(q: Rational) -> Self {
        RadicalNumber { rational: q, terms: BTreeMap::new() }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn radical_terms(&self) -> &BTreeMap<BigInt, Rational> {
        &self.terms
    }

    /// Exact `√q`, choosing the principal branch (`i·√|q|` for `q < 0`).
    pub fn sqrt_rational(q: &Rational) -> Result<Self, ExactError> {
        if q.is_zero() {
            return Ok(Self::zero());
        }
        let n = q.numer() * q.denom();
        let (s, d) = square_split(n.magnitude())?;
        let coeff = Rational::new(BigInt::from(s), q.denom().clone());
        let key = if q.is_negative() { -BigInt::from(d) } else { BigInt::from(d) };
        if key.is_one() {
            return Ok(Self::from_rational(coeff));
        }
        let mut terms = BTreeMap::new();
        terms.insert(key, coeff);
        Ok(RadicalNumber { rational: Rational::zero(), terms })
    }

    pub fn is_rational(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        if self.is_rational() && self.rational.is_integer() {
            Some(self.rational.to_integer())
        } else {
            None
        }
    }

    /// True exactly when every radical coefficient is zero and the rational
    /// part is an integer `≥ 0`.
    pub fn is_nonnegative_integer(&self) -> bool {
        self.as_integer().is_some_and(|n| !n.is_negative())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RadicalNumber {
            rational: &self.rational * c,
            terms: self.terms.iter().map(|(d, v)| (d.clone(), v * c)).collect(),
        }
    }

    /// Image under the automorphism flipping `√g` for a prime `g`, or `i`
    /// for `g = -1`.
    pub fn conjugate_by(&self, g: &BigInt) -> Self {
        let flips = |d: &BigInt| {
            if *g == BigInt::from(-1) {
                d.is_negative()
            } else {
                d.is_multiple_of(g)
            }
        };
        RadicalNumber {
            rational: self.rational.clone(),
            terms: self
                .terms
                .iter()
                .map(|(d, v)| (d.clone(), if flips(d) { -v.clone() } else { v.clone() }))
                .collect(),
        }
    }

    fn generators(&self) -> BTreeSet<BigInt> {
        let mut gens = BTreeSet::new();
        for d in self.terms.keys() {
            if d.is_negative() {
                gens.insert(BigInt::from(-1));
            }
            let factors = factorize(d.magnitude()).expect("keys are factored at construction");
            for (p, _) in factors {
                gens.insert(BigInt::from(p));
            }
        }
        gens
    }

    fn insert_term(terms: &mut BTreeMap<BigInt, Rational>, rational: &mut Rational, key: BigInt, c: Rational) {
        if c.is_zero() {
            return;
        }
        if key.is_one() {
            *rational += c;
            return;
        }
        let entry = terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            terms.remove(&key);
        }
    }
}

/// `√d·√e = k·√m` with `m` squarefree (possibly 1).
fn mul_keys(d: &BigInt, e: &BigInt) -> (BigInt, BigInt) {
    let g = d.magnitude().gcd(e.magnitude());
    let g = BigInt::from(g);
    let m = (d / &g) * (e / &g);
    let sign = if d.is_negative() && e.is_negative() { -BigInt::one() } else { BigInt::one() };
    (sign * g, m)
}

impl Zero for RadicalNumber {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.terms.is_empty()
    }
}

impl One for RadicalNumber {
    fn one() -> Self {
        Self::from_integer(1)
    }
}

impl Add<&RadicalNumber> for RadicalNumber {
    type Output = RadicalNumber;
    fn add(mut self, rhs: &RadicalNumber) -> RadicalNumber {
        self.rational += &rhs.rational;
        for (d, c) in &rhs.terms {
            Self::insert_term(&mut self.terms, &mut self.rational, d.clone(), c.clone());
        }
        self
    }
}

impl Add for RadicalNumber {
    type Output = RadicalNumber;
    fn add(self, rhs: RadicalNumber) -> RadicalNumber {
        self + &rhs
    }
}

impl Neg for RadicalNumber {
    type Output = RadicalNumber;
    fn neg(self) -> RadicalNumber {
        RadicalNumber {
            rational: -self.rational,
            terms: self.terms.into_iter().map(|(d, c)| (d, -c)).collect(),
        }
    }
}

impl Sub<&RadicalNumber> for RadicalNumber {
    type Output = RadicalNumber;
    fn sub(self, rhs: &RadicalNumber) -> RadicalNumber {
        self + &(-rhs.clone())
    }
}

impl Sub for RadicalNumber {
    type Output = RadicalNumber;
    fn sub(self, rhs: RadicalNumber) -> RadicalNumber {
        self + &(-rhs)
    }
}

impl Mul<&RadicalNumber> for RadicalNumber {
    type Output = RadicalNumber;
    fn mul(self, rhs: &RadicalNumber) -> RadicalNumber {
        let mut rational = &self.rational * &rhs.rational;
        let mut terms = BTreeMap::new();
        if !self.rational.is_zero() {
            for (d, c) in &rhs.terms {
                Self::insert_term(&mut terms, &mut rational, d.clone(), c * &self.rational);
            }
        }
        if !rhs.rational.is_zero() {
            for (d, c) in &self.terms {
                Self::insert_term(&mut terms, &mut rational, d.clone(), c * &rhs.rational);
            }
        }
        for (d, c) in &self.terms {
            for (e, f) in &rhs.terms {
                let (k, m) = mul_keys(d, e);
                let coeff = c * f * Rational::from_integer(k);
                Self::insert_term(&mut terms, &mut rational, m, coeff);
            }
        }
        RadicalNumber { rational, terms }
    }
}

impl Mul for RadicalNumber {
    type Output = RadicalNumber;
    fn mul(self, rhs: RadicalNumber) -> RadicalNumber {
        self * &rhs
    }
}

impl Field for RadicalNumber {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            return Some(Self::from_rational(self.rational.recip()));
        }
        let mut x = self.clone();
        let mut acc = Self::one();
        for g in self.generators() {
            let xb = x.conjugate_by(&g);
            acc = acc * &xb;
            x = x * &xb;
        }
        debug_assert!(x.is_rational());
        Some(acc.scale(&x.rational.recip()))
    }

    fn from_rational(q: Rational) -> Self {
        RadicalNumber::from_rational(q)
    }

    fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.rational.clone())
    }

    fn to_c64(&self) -> Complex64 {
        let mut z = Complex64::new(rational_to_f64(&self.rational), 0.0);
        for (d, c) in &self.terms {
            let mag = d.magnitude().to_f64().unwrap_or(f64::NAN).sqrt() * rational_to_f64(c);
            if d.sign() == Sign::Minus {
                z.im += mag;
            } else {
                z.re += mag;
            }
        }
        z
    }
}

impl From<Rational> for RadicalNumber {
    fn from(q: Rational) -> Self {
        RadicalNumber::from_rational(q)
    }
}

impl fmt::Display for RadicalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "{}", self.rational);
        }
        let mut first = true;
        if !self.rational.is_zero() {
            write!(f, "{}", self.rational)?;
            first = false;
        }
        for (d, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if mag.is_one() {
                write!(f, "sqrt({d})")?;
            } else {
                write!(f, "{mag}*sqrt({d})")?;
            }
        }
        Ok(())
    }
}

impl Serialize for RadicalNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Terms<'a>(&'a BTreeMap<BigInt, Rational>);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut m = serializer.serialize_map(Some(self.0.len()))?;
                for (d, c) in self.0 {
                    m.serialize_entry(&d.to_string(), &c.to_string())?;
                }
                m.end()
            }
        }
        let mut m = serializer.serialize_map(Some(2))?;
        m.serialize_entry("rational", &self.rational.to_string())?;
        m.serialize_entry("terms", &Terms(&self.terms))?;
        m.end()
    }
}
