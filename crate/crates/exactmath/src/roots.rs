//! Rational root finding and pole data of rational functions.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::factor::factorize;
use crate::field::Field;
use crate::{ExactError, Polynomial, RationalFunction, Rational};

fn divisors(n: &BigUint) -> Result<Vec<BigUint>, ExactError> {
    let mut out = vec![BigUint::one()];
    for (p, e) in factorize(n)? {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = BigUint::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

/// Integer polynomial with the same roots (content not removed).
fn clear_denominators(p: &Polynomial<Rational>) -> Vec<BigInt> {
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs().iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect()
}

/// Distinct rational roots of `p`, ascending, plus the cofactor without them.
pub fn rational_roots(p: &Polynomial<Rational>) -> Result<(Vec<Rational>, Polynomial<Rational>), ExactError> {
    let mut rest = p.clone();
    let mut roots = Vec::new();
    if rest.is_zero() {
        return Ok((roots, rest));
    }
    let x = Polynomial::<Rational>::x();
    if rest.coeff(0).is_zero() {
        roots.push(Rational::zero());
        while rest.coeff(0).is_zero() {
            rest = rest.exact_div(&x)?;
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        let ints = clear_denominators(&rest);
        let a0 = ints.first().expect("nonzero").magnitude().clone();
        let an = ints.last().expect("nonzero").magnitude().clone();
        let ps = divisors(&a0)?;
        let qs = divisors(&an)?;
        let mut cands: Vec<Rational> = Vec::new();
        for pp in &ps {
            for qq in &qs {
                let c = Rational::new(BigInt::from(pp.clone()), BigInt::from(qq.clone()));
                cands.push(c.clone());
                cands.push(-c);
            }
        }
        cands.sort();
        cands.dedup();
        for c in cands {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            if rest.eval(&c).is_zero() {
                let lin = Polynomial::linear(-c.clone(), Rational::one());
                while rest.eval(&c).is_zero() {
                    rest = rest.exact_div(&lin)?;
                }
                roots.push(c);
            }
        }
    }
    roots.sort();
    Ok((roots, rest))
}

/// Finite poles of `r` with their orders, ascending by location.
pub fn finite_poles(r: &RationalFunction<Rational>) -> Result<Vec<(Rational, usize)>, ExactError> {
    let mut out = Vec::new();
    for (g, mult) in r.den().squarefree_decomposition() {
        let (roots, rest) = rational_roots(&g)?;
        if rest.degree().unwrap_or(0) > 0 {
            return Err(ExactError::UnsupportedPoleField { factor: rest.monic().to_string() });
        }
        out.extend(roots.into_iter().map(|c| (c, mult)));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// `deg(den) − deg(num)`.
pub fn order_at_infinity<F: Field>(r: &RationalFunction<F>) -> Result<i64, ExactError> {
    let n = r.num().degree().ok_or(ExactError::OrderOfZero)?;
    let d = r.den().degree().expect("nonzero denominator");
    Ok(d as i64 - n as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, reduce};

    fn p(v: &[i64]) -> Polynomial<Rational> {
        Polynomial::new(v.iter().map(|&c| q(c, 1)).collect())
    }

    #[test]
    fn poles_of_double_and_simple() {
        // 1/(z^2 (z-1))
        let r = reduce(p(&[1]), p(&[0, 0, -1, 1])).unwrap();
        assert_eq!(finite_poles(&r).unwrap(), vec![(q(0, 1), 2), (q(1, 1), 1)]);
    }

    #[test]
    fn three_simple_poles() {
        // 1/(z(1-z)(3-2z))
        let d = &(&p(&[0, 1]) * &p(&[1, -1])) * &p(&[3, -2]);
        let r = reduce(p(&[1]), d).unwrap();
        let poles = finite_poles(&r).unwrap();
        assert_eq!(poles, vec![(q(0, 1), 1), (q(1, 1), 1), (q(3, 2), 1)]);
    }

    #[test]
    fn polynomial_has_no_poles() {
        let r = RationalFunction::from_poly(p(&[1, 1]));
        assert!(finite_poles(&r).unwrap().is_empty());
    }

    #[test]
    fn irreducible_quadratic_rejected() {
        let r = reduce(p(&[1]), p(&[2, 0, 1])).unwrap();
        match finite_poles(&r) {
            Err(ExactError::UnsupportedPoleField { factor }) => assert_eq!(factor, "x^2 + 2"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infinity_orders() {
        let r = reduce(p(&[1]), p(&[0, 0, 0, 1])).unwrap();
        assert_eq!(order_at_infinity(&r).unwrap(), 3);
        let r = RationalFunction::from_poly(p(&[0, 0, 1]));
        assert_eq!(order_at_infinity(&r).unwrap(), -2);
        assert_eq!(order_at_infinity(&RationalFunction::<Rational>::zero()), Err(ExactError::OrderOfZero));
    }
}
