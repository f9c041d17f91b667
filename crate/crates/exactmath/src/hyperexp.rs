//! Closed-form hyperexponential functions `P · Π (x−a_i)^{e_i} · exp(E)`.

use std::fmt;

use num_complex::Complex64;
use num_traits::Zero;

use crate::field::{rational_to_f64, Field};
use crate::laurent::partial_fractions;
use crate::{ExactError, Polynomial, RationalFunction, Rational};

/// `poly(x) · Π (x − a)^e · exp(exponent(x))`, determined up to a constant.
#[derive(Clone, PartialEq, Debug)]
pub struct Hyperexponential<F> {
    pub poly: Polynomial<F>,
    /// `(a, e)` pairs, sorted by `a`, `e ≠ 0`.
    pub factors: Vec<(Rational, F)>,
    pub exponent: RationalFunction<F>,
}

impl<F: Field> Hyperexponential<F> {
    pub fn one() -> Self {
        Hyperexponential { poly: Polynomial::one(), factors: Vec::new(), exponent: RationalFunction::zero() }
    }

    /// `exp(∫ w)` for a rational `w` whose poles are rational.
    pub fn exp_integral(w: &RationalFunction<F>) -> Result<Self, ExactError> {
        let pf = partial_fractions(w)?;
        let mut exponent = RationalFunction::from_poly(Polynomial::new(
            std::iter::once(F::zero())
                .chain(pf.polynomial.coeffs().iter().enumerate().map(|(k, c)| c.clone() * F::from_i64(k as i64 + 1).inv().expect("nonzero")))
                .collect(),
        ));
        let mut factors = Vec::new();
        for (a, parts) in &pf.terms {
            for (i, c) in parts.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let j = i as i64 + 1;
                if j == 1 {
                    factors.push((a.clone(), c.clone()));
                } else {
                    // ∫ c (x−a)^{−j} = −c/(j−1) (x−a)^{1−j}
                    let k = -c.clone() * F::from_i64(j - 1).inv().expect("nonzero");
                    exponent = &exponent + &RationalFunction::pole_term(k, F::from_rational(a.clone()), (j - 1) as u32);
                }
            }
        }
        Ok(Hyperexponential { poly: Polynomial::one(), factors, exponent })
    }

    pub fn with_poly(mut self, p: Polynomial<F>) -> Self {
        self.poly = &self.poly * &p;
        self
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (a, e) in &other.factors {
            match factors.iter_mut().find(|(b, _)| b == a) {
                Some((_, f)) => *f = f.clone() + e,
                None => factors.push((a.clone(), e.clone())),
            }
        }
        factors.retain(|(_, e)| !e.is_zero());
        factors.sort_by(|x, y| x.0.cmp(&y.0));
        Hyperexponential { poly: &self.poly * &other.poly, factors, exponent: &self.exponent + &other.exponent }
    }

    /// `f'/f` as an exact rational function.
    pub fn log_derivative(&self) -> RationalFunction<F> {
        let mut acc = self.exponent.derivative();
        for (a, e) in &self.factors {
            acc = &acc + &RationalFunction::pole_term(e.clone(), F::from_rational(a.clone()), 1);
        }
        if !self.poly.is_zero() {
            let p = RationalFunction::from_poly(self.poly.clone());
            acc = &acc + &(&p.derivative() / &p);
        }
        acc
    }

    /// Principal-branch complex value at a real point (one fixed constant
    /// multiple of the function on each pole-free interval).
    pub fn eval_c64(&self, x: f64) -> Complex64 {
        let xc = Complex64::new(x, 0.0);
        let mut log = self.exponent.eval_c64(xc);
        for (a, e) in &self.factors {
            log += e.to_c64() * (xc - rational_to_f64(a)).ln();
        }
        self.poly.eval_c64(xc) * log.exp()
    }

    /// True when the function is `exp(exponent)` with no algebraic prefactor.
    pub fn is_pure_exponential(&self) -> bool {
        self.factors.is_empty() && self.poly.is_constant()
    }

    pub fn to_string_var(&self, var: &str) -> String {
        let mut parts = Vec::new();
        if !self.poly.is_constant() || !self.poly.coeff(0).is_one() {
            parts.push(format!("({})", self.poly.to_string_var(var)));
        }
        for (a, e) in &self.factors {
            let base = if a.is_zero() { var.to_string() } else { format!("({var} - {a})").replace("- -", "+ ") };
            parts.push(format!("{base}^({e})"));
        }
        if !self.exponent.is_zero() {
            parts.push(format!("exp({})", self.exponent.to_string_var(var)));
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl<F: Field> fmt::Display for Hyperexponential<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{parse_rational_function, q, RadicalNumber};
    use num_traits::One;

    #[test]
    fn integrates_log_derivative() {
        let w = parse_rational_function("2/x - 1/(x-1)^2 + 3*x", 'x').unwrap();
        let h = Hyperexponential::exp_integral(&w).unwrap();
        assert_eq!(h.factors, vec![(q(0, 1), q(2, 1))]);
        assert_eq!(h.log_derivative(), w);
        assert_eq!(h.to_string(), "x^(2)*exp((3/2*x^3 - 3/2*x^2 + 1)/(x - 1))");
    }

    #[test]
    fn radical_exponents() {
        let s = RadicalNumber::sqrt_rational(&q(2, 1)).unwrap();
        let w = RationalFunction::pole_term(s.clone(), RadicalNumber::zero(), 1);
        let h = Hyperexponential::exp_integral(&w).unwrap();
        let p = Polynomial::linear(RadicalNumber::one(), RadicalNumber::one());
        let hp = h.with_poly(p.clone());
        let want = &w + &(&RationalFunction::from_poly(p.derivative()) / &RationalFunction::from_poly(p));
        assert_eq!(hp.log_derivative(), want);
        assert!(!hp.is_pure_exponential());
    }
}
