//! Laplace-domain ODEs of the birth-death families and their normal forms.

use exactmath::{Hyperexponential, Polynomial, Rational, RationalFunction};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::PipelineError;

pub type RF = RationalFunction<Rational>;

fn c(q: &Rational) -> RF {
    RF::constant(q.clone())
}

fn one_minus_z() -> RF {
    RF::from_poly(Polynomial::linear(Rational::one(), -Rational::one()))
}

/// `δ − βz`
fn death_factor(beta: &Rational, delta: &Rational) -> RF {
    RF::from_poly(Polynomial::linear(delta.clone(), -beta.clone()))
}

fn z_pow(n: u32) -> RF {
    RF::from_poly(Polynomial::monomial(Rational::one(), n as usize))
}

/// `Σ coefficients[k] G^{(k)} = rhs` with the leading coefficient 1.
#[derive(Clone, PartialEq, Debug)]
pub struct LaplaceODE {
    pub order: u8,
    /// Lowest derivative first.
    pub coefficients: Vec<RF>,
    pub rhs: RF,
}

impl LaplaceODE {
    /// For `G' = fG + h`.
    pub fn first_order(f: RF, h: RF) -> Self {
        LaplaceODE { order: 1, coefficients: vec![-f, RF::one()], rhs: h }
    }

    /// For `G'' + aG' + bG = rhs`.
    pub fn second_order(a: RF, b: RF, rhs: RF) -> Self {
        LaplaceODE { order: 2, coefficients: vec![b, a, RF::one()], rhs }
    }

    pub fn f(&self) -> Option<RF> {
        (self.order == 1).then(|| -self.coefficients[0].clone())
    }

    pub fn h(&self) -> Option<RF> {
        (self.order == 1).then(|| self.rhs.clone())
    }

    pub fn a(&self) -> Option<&RF> {
        (self.order == 2).then(|| &self.coefficients[1])
    }

    pub fn b(&self) -> Option<&RF> {
        (self.order == 2).then(|| &self.coefficients[0])
    }

    pub fn is_homogeneous(&self) -> bool {
        self.rhs.is_zero()
    }

    /// `Σ coefficients[k] G^{(k)}/G` for `G = exp(∫ w)`, with `w = G'/G`.
    pub fn apply_log_derivative(&self, w: &RF) -> RF {
        // G^{(k)}/G via u_{k+1} = u_k' + w u_k, u_0 = 1.
        let mut u = RF::one();
        let mut acc = RF::zero();
        for (k, coeff) in self.coefficients.iter().enumerate() {
            if k > 0 {
                u = &u.derivative() + &(w * &u);
            }
            acc = &acc + &(coeff * &u);
        }
        acc
    }
}

/// `f = s/((1−z)(δ−βz))`, `h = −z^{N0}/((1−z)(δ−βz))`.
pub fn build_first_order_11(beta: &Rational, delta: &Rational, n0: u32, s: &Rational) -> LaplaceODE {
    let den = &one_minus_z() * &death_factor(beta, delta);
    let f = &c(s) / &den;
    let h = -(&z_pow(n0) / &den);
    LaplaceODE::first_order(f, h)
}

/// `G'' − (f + h'/h)G' + (f h'/h − f')G = 0`, annihilating `e^{∫f}` and the
/// solutions of `G' = fG + h`.
pub fn lift_to_second_order(f: &RF, h: &RF) -> Result<LaplaceODE, PipelineError> {
    if h.is_zero() {
        return Err(PipelineError::LiftUndefined);
    }
    let lh = &h.derivative() / h;
    let a = -(f + &lh);
    let b = &(f * &lh) - &f.derivative();
    Ok(LaplaceODE::second_order(a, b, RF::zero()))
}

#[derive(Clone, PartialEq, Debug)]
pub struct NormalForm {
    /// Potential of `H'' = rH`.
    pub r: RF,
    /// `ψ` with `G = Hψ`, i.e. `exp(−½∫a)`.
    pub psi: Hyperexponential<Rational>,
}

/// A factor `(z − location)^exponent` of `ψ`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct PsiFactor {
    #[serde(serialize_with = "kovacic::json::rational")]
    pub location: Rational,
    #[serde(serialize_with = "kovacic::json::rational")]
    pub exponent: Rational,
}

impl NormalForm {
    pub fn psi_factors(&self) -> Vec<PsiFactor> {
        self.psi.factors.iter().map(|(a, e)| PsiFactor { location: a.clone(), exponent: e.clone() }).collect()
    }

    /// Exponent of the factor at `location`, zero when absent.
    pub fn psi_exponent_at(&self, location: &Rational) -> Rational {
        self.psi.factors.iter().find(|(a, _)| a == location).map(|(_, e)| e.clone()).unwrap_or_else(Rational::zero)
    }
}

/// `r = ½a' + ¼a² − b` and `ψ` from the partial fractions of `−a/2`.
pub fn normal_form(a: &RF, b: &RF) -> Result<NormalForm, PipelineError> {
    let half = Rational::new(1.into(), 2.into());
    let quarter = Rational::new(1.into(), 4.into());
    let r = &(&a.derivative().scale(&half) + &(a * a).scale(&quarter)) - b;
    let psi = Hyperexponential::exp_integral(&a.scale(&-half))?;
    Ok(NormalForm { r, psi })
}

/// `G'' + aG' + bG = −z^{N0}/(δz(1−z))` with `a = (δ−βz)/(δz)`,
/// `b = −s/(δz(1−z))`, together with its normal form.
pub fn build_12_ode(beta: &Rational, delta: &Rational, n0: u32, s: &Rational) -> Result<(LaplaceODE, NormalForm), PipelineError> {
    let z = RF::x();
    let dz = z.scale(delta);
    let a = &death_factor(beta, delta) / &dz;
    let dz1 = &dz * &one_minus_z();
    let b = -(&c(s) / &dz1);
    let rhs = -(&z_pow(n0) / &dz1);
    let nf = normal_form(&a, &b)?;
    Ok((LaplaceODE::second_order(a, b, rhs), nf))
}

/// Lift and normal form of the (1,1) family in one step.
pub fn family11(beta: &Rational, delta: &Rational, n0: u32, s: &Rational) -> Result<(LaplaceODE, LaplaceODE, NormalForm), PipelineError> {
    let first = build_first_order_11(beta, delta, n0, s);
    let lifted = lift_to_second_order(&first.f().expect("order 1"), &first.h().expect("order 1"))?;
    let nf = normal_form(lifted.a().expect("order 2"), lifted.b().expect("order 2"))?;
    Ok((first, lifted, nf))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactmath::{parse_rational_function, q};

    fn rf(t: &str) -> RF {
        parse_rational_function(t, 'z').unwrap()
    }

    #[test]
    fn fh_instances() {
        let o = build_first_order_11(&q(2, 1), &q(3, 1), 1, &q(1, 1));
        assert_eq!(o.f().unwrap(), rf("1/((1-z)*(3-2*z))"));
        assert_eq!(o.h().unwrap(), rf("-z/((1-z)*(3-2*z))"));
        let o = build_first_order_11(&q(2, 1), &q(3, 1), 0, &q(0, 1));
        assert!(o.f().unwrap().is_zero());
        assert_eq!(o.h().unwrap(), rf("-1/((1-z)*(3-2*z))"));
    }

    #[test]
    fn lift_matches_displayed_coefficients() {
        let (beta, delta, n0, s) = (q(2, 1), q(3, 1), 2u32, q(1, 1));
        let (_, lifted, _) = family11(&beta, &delta, n0, &s).unwrap();
        // a = −((N0−2)βz² + (s − (N0−1)(δ+β))z + δN0)/(z(1−z)(δ−βz)), b = sN0/(z(1−z)(δ−βz))
        assert_eq!(lifted.a().unwrap(), &rf("-((1-5)*z + 6)/(z*(1-z)*(3-2*z))"));
        assert_eq!(lifted.b().unwrap(), &rf("2/(z*(1-z)*(3-2*z))"));
    }

    #[test]
    fn degenerate_lift() {
        let l = lift_to_second_order(&RF::zero(), &RF::one()).unwrap();
        assert!(l.a().unwrap().is_zero() && l.b().unwrap().is_zero());
        assert!(matches!(lift_to_second_order(&RF::one(), &RF::zero()), Err(PipelineError::LiftUndefined)));
        let nf = normal_form(&RF::zero(), &RF::zero()).unwrap();
        assert!(nf.r.is_zero());
        assert_eq!(nf.psi, Hyperexponential::one());
    }

    #[test]
    fn lift_annihilates_exp_integral_f() {
        let o = build_first_order_11(&q(5, 2), &q(1, 3), 3, &q(-7, 4));
        let f = o.f().unwrap();
        let l = lift_to_second_order(&f, &o.h().unwrap()).unwrap();
        assert!(l.apply_log_derivative(&f).is_zero());
    }

    #[test]
    fn psi_exponents_distinct_rates() {
        let (beta, delta, n0, s) = (q(2, 1), q(3, 1), 2u32, q(1, 2));
        let (_, _, nf) = family11(&beta, &delta, n0, &s).unwrap();
        let shat = &s / (&delta - &beta);
        let half = q(1, 2);
        assert_eq!(nf.psi_exponent_at(&q(0, 1)), q(n0 as i64, 2));
        assert_eq!(nf.psi_exponent_at(&q(1, 1)), -&half * (q(1, 1) + &shat));
        assert_eq!(nf.psi_exponent_at(&(&delta / &beta)), -&half * (q(1, 1) - &shat));
        assert!(nf.psi.exponent.is_zero());
    }

    #[test]
    fn psi_equal_rates_has_exponential_part() {
        let (_, _, nf) = family11(&q(1, 1), &q(1, 1), 2, &q(1, 1)).unwrap();
        assert_eq!(nf.psi_exponent_at(&q(0, 1)), q(1, 1));
        assert_eq!(nf.psi_exponent_at(&q(1, 1)), q(-1, 1));
        assert_eq!(nf.psi.exponent, rf("1/(2*(1-z))"));
    }

    #[test]
    fn quadratic_death_potential() {
        let (_, nf) = build_12_ode(&q(1, 1), &q(1, 1), 3, &q(1, 1)).unwrap();
        // −δ(4s − 2β + δ) = −3 at β = δ = s = 1
        assert_eq!(nf.r, rf("(z^3 - 3*z^2 - 3*z + 1)/(4*z^2*(z-1))"));
        assert_eq!(nf.psi_exponent_at(&q(0, 1)), q(-1, 2));
        assert_eq!(nf.psi.exponent, rf("z/2"));
    }
}
