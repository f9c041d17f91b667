//! Laurent expansions, truncated square-root branches and partial fractions.

use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::field::Field;
use crate::roots::finite_poles;
use crate::{ExactError, Polynomial, RadicalNumber, RationalFunction, Rational};

pub const DEFAULT_TERMS: usize = 8;

/// A point of the projective line with rational finite part.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Point {
    Finite(Rational),
    Infinity,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(c) => write!(f, "{c}"),
            Point::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Local expansion `Σ_k c_k τ^k`, with `τ = x − c` at a finite point and
/// `τ = 1/x` at infinity (so `coeff(k)` there multiplies `x^{−k}`).
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentExpansion<F> {
    pub center: Point,
    pub min_exponent: i64,
    pub coefficients: Vec<F>,
}

impl<F: Field> LaurentExpansion<F> {
    /// First exponent not covered by the stored coefficients.
    pub fn truncation_order(&self) -> i64 {
        self.min_exponent + self.coefficients.len() as i64
    }

    /// Coefficient of `τ^k`; zero below `min_exponent`.
    ///
    /// Panics when `k` lies beyond the truncation order.
    pub fn coeff(&self, k: i64) -> F {
        assert!(k < self.truncation_order(), "coefficient {k} beyond truncation");
        if k < self.min_exponent {
            F::zero()
        } else {
            self.coefficients[(k - self.min_exponent) as usize].clone()
        }
    }

    pub fn leading(&self) -> &F {
        &self.coefficients[0]
    }

    /// Coefficient of `(x − c)^{−1}` at a finite point; at infinity the
    /// residue `−c_1` of the form `r dx`.
    pub fn residue(&self) -> F {
        match self.center {
            Point::Finite(_) => self.coeff(-1),
            Point::Infinity => -self.coeff(1),
        }
    }
}

/// `a/b` as a power series in `τ` with `b(0) ≠ 0`, `n` terms.
fn series_div<F: Field>(a: &[F], b: &[F], n: usize) -> Vec<F> {
    let b0_inv = b[0].inv().expect("nonzero constant term");
    let mut out: Vec<F> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = a.get(k).cloned().unwrap_or_else(F::zero);
        for j in 1..=k.min(b.len().saturating_sub(1)) {
            acc = acc - &(b[j].clone() * &out[k - j]);
        }
        out.push(acc * &b0_inv);
    }
    out
}

fn valuation<F: Field>(p: &Polynomial<F>) -> usize {
    p.coeffs().iter().position(|c| !c.is_zero()).expect("nonzero polynomial")
}

/// Laurent expansion of `r` at `c` with `n_terms` coefficients from the
/// leading exponent on. The zero function expands to zeros from exponent 0.
pub fn laurent_at<F: Field>(r: &RationalFunction<F>, c: &Point, n_terms: usize) -> Result<LaurentExpansion<F>, ExactError> {
    if n_terms == 0 {
        return Err(ExactError::EmptyExpansion);
    }
    if r.is_zero() {
        return Ok(LaurentExpansion { center: c.clone(), min_exponent: 0, coefficients: vec![F::zero(); n_terms] });
    }
    let (n, d, min_exponent) = match c {
        Point::Finite(a) => {
            let a = F::from_rational(a.clone());
            let n = r.num().taylor_shift(&a);
            let d = r.den().taylor_shift(&a);
            let (vn, vd) = (valuation(&n), valuation(&d));
            (
                n.coeffs()[vn..].to_vec(),
                d.coeffs()[vd..].to_vec(),
                vn as i64 - vd as i64,
            )
        }
        Point::Infinity => {
            let dn = r.num().degree().expect("nonzero");
            let dd = r.den().degree().expect("nonzero");
            let n = r.num().reverse(dn);
            let d = r.den().reverse(dd);
            (n.coeffs().to_vec(), d.coeffs().to_vec(), dd as i64 - dn as i64)
        }
    };
    Ok(LaurentExpansion { center: c.clone(), min_exponent, coefficients: series_div(&n, &d, n_terms) })
}

/// Truncated branch `[√r]_c = Σ_j s_j τ^{−j}`, `j` from `j_min` to `v`
/// (`j_min = 2` at finite points, `0` at infinity).
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct SqrtBranch {
    pub center: Point,
    pub v: i64,
    /// `coeffs[i]` multiplies `τ^{−(j_min + i)}`.
    pub coeffs: Vec<RadicalNumber>,
    /// Coefficient of `τ^{−(v + j_min − 1)}` in `r − [√r]²`.
    pub b: RadicalNumber,
}

impl SqrtBranch {
    pub fn j_min(&self) -> i64 {
        match self.center {
            Point::Finite(_) => 2,
            Point::Infinity => 0,
        }
    }

    /// Leading coefficient `a` of `τ^{−v}`.
    pub fn leading(&self) -> &RadicalNumber {
        self.coeffs.last().expect("nonempty branch")
    }

    pub fn as_rational_function(&self) -> RationalFunction<RadicalNumber> {
        let j_min = self.j_min();
        let mut acc = RationalFunction::zero();
        for (i, s) in self.coeffs.iter().enumerate() {
            let j = (j_min + i as i64) as u32;
            let term = match &self.center {
                Point::Finite(c) => RationalFunction::pole_term(s.clone(), RadicalNumber::from_rational(c.clone()), j),
                Point::Infinity => RationalFunction::from_poly(Polynomial::monomial(s.clone(), j as usize)),
            };
            acc = &acc + &term;
        }
        acc
    }

    pub fn negated(&self) -> SqrtBranch {
        SqrtBranch { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(), ..self.clone() }
    }
}

/// The truncated square-root branch at `c`, where `○(r_c) = 2v ≥ 4`
/// (finite) or `○(r_∞) = −2v ≤ 0`.
pub fn sqrt_branch(r: &RationalFunction<Rational>, c: &Point, v: i64) -> Result<SqrtBranch, ExactError> {
    let j_min: i64 = match c {
        Point::Finite(_) => 2,
        Point::Infinity => 0,
    };
    if v < j_min {
        return Err(ExactError::SqrtBranchUndefined(format!("half order {v} at {c}")));
    }
    let probe = laurent_at(r, c, 1)?;
    if probe.min_exponent != -2 * v {
        return Err(ExactError::SqrtBranchUndefined(format!(
            "order {} at {c} is not {}",
            -probe.min_exponent,
            2 * v
        )));
    }
    let n_terms = (v - j_min + 2) as usize;
    let ex = laurent_at(r, c, n_terms)?;
    let rc = |k: i64| RadicalNumber::from_rational(ex.coeff(k));
    // s[i] multiplies τ^{−(v − i)}
    let mut s: Vec<RadicalNumber> = Vec::new();
    s.push(RadicalNumber::sqrt_rational(ex.leading())?);
    let two_a_inv = (s[0].clone() * RadicalNumber::from_integer(2)).inv().expect("nonzero leading");
    let n_branch = (v - j_min + 1) as usize;
    let square_coeff = |s: &[RadicalNumber], i: usize| -> RadicalNumber {
        // coefficient of τ^{−(2v − i)} in (Σ s_k τ^{−(v−k)})², counting only
        // pairs with both indices < s.len()
        let mut acc = RadicalNumber::zero();
        for k in 0..=i {
            if k < s.len() && i - k < s.len() {
                acc = acc + &(s[k].clone() * &s[i - k]);
            }
        }
        acc
    };
    for i in 1..n_branch {
        let target = rc(-2 * v + i as i64);
        let known = square_coeff(&s, i);
        s.push((target - &known) * &two_a_inv);
    }
    let i_b = n_branch;
    let b = rc(-2 * v + i_b as i64) - &square_coeff(&s, i_b);
    s.reverse();
    Ok(SqrtBranch { center: c.clone(), v, coeffs: s, b })
}

/// Polynomial part plus principal parts at each finite pole.
#[derive(Clone, PartialEq, Debug)]
pub struct PartialFractions<F> {
    pub polynomial: Polynomial<F>,
    /// `(c, [a_1, a_2, ...])` meaning `Σ_j a_j/(x − c)^j`.
    pub terms: Vec<(Rational, Vec<F>)>,
}

impl<F: Field> PartialFractions<F> {
    pub fn to_rational_function(&self) -> RationalFunction<F> {
        let mut acc = RationalFunction::from_poly(self.polynomial.clone());
        for (c, parts) in &self.terms {
            for (j, a) in parts.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                acc = &acc + &RationalFunction::pole_term(a.clone(), F::from_rational(c.clone()), j as u32 + 1);
            }
        }
        acc
    }

    /// The `1/(x − c)` coefficient at `c`, zero if `c` is not a pole.
    pub fn residue_at(&self, c: &Rational) -> F {
        self.terms
            .iter()
            .find(|(p, _)| p == c)
            .and_then(|(_, v)| v.first().cloned())
            .unwrap_or_else(F::zero)
    }
}

/// Partial-fraction decomposition; the denominator must have rational
/// coefficients and split over the rationals.
pub fn partial_fractions<F: Field>(r: &RationalFunction<F>) -> Result<PartialFractions<F>, ExactError> {
    let den_q = Polynomial::new(r.den().coeffs().iter().map(|c| c.as_rational()).collect::<Option<Vec<_>>>().ok_or(ExactError::NotRational)?);
    let poles = finite_poles(&RationalFunction::new(Polynomial::one(), den_q)?)?;
    let (poly, _) = r.num().div_rem(r.den())?;
    let mut terms = Vec::new();
    for (c, order) in poles {
        let ex = laurent_at(r, &Point::Finite(c.clone()), order)?;
        let parts: Vec<F> = (1..=order as i64).map(|j| ex.coeff(-j)).collect();
        terms.push((c, parts));
    }
    let pf = PartialFractions { polynomial: poly, terms };
    debug_assert_eq!(&pf.to_rational_function(), r);
    Ok(pf)
}

/// Principal part `Σ_{k<0} c_k τ^k` of `r` at a finite point as a rational function.
pub fn principal_part<F: Field>(r: &RationalFunction<F>, c: &Rational) -> Result<RationalFunction<F>, ExactError> {
    let ex = laurent_at(r, &Point::Finite(c.clone()), 1)?;
    if ex.min_exponent >= 0 {
        return Ok(RationalFunction::zero());
    }
    let k = (-ex.min_exponent) as usize;
    let ex = laurent_at(r, &Point::Finite(c.clone()), k)?;
    let mut acc = RationalFunction::zero();
    for j in 1..=k {
        let a = ex.coeff(-(j as i64));
        if !a.is_zero() {
            acc = &acc + &RationalFunction::pole_term(a, F::from_rational(c.clone()), j as u32);
        }
    }
    Ok(acc)
}

impl<F: Field> LaurentExpansion<F> {
    /// Termwise derivative with respect to `x`. The leading stored
    /// coefficient may vanish (constant terms differentiate to zero).
    pub fn derivative(&self) -> LaurentExpansion<F> {
        match self.center {
            Point::Finite(_) => {
                let coeffs: Vec<F> = self
                    .coefficients
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c.clone() * F::from_i64(self.min_exponent + i as i64))
                    .collect();
                LaurentExpansion { center: self.center.clone(), min_exponent: self.min_exponent - 1, coefficients: coeffs }
            }
            Point::Infinity => {
                // d/dx u^k = −k u^{k+1}
                let coeffs: Vec<F> = self
                    .coefficients
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c.clone() * F::from_i64(-(self.min_exponent + i as i64)))
                    .collect();
                LaurentExpansion { center: self.center.clone(), min_exponent: self.min_exponent + 1, coefficients: coeffs }
            }
        }
    }
}
