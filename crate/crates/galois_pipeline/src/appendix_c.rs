//! Sign patterns of the (1,1) family whose degree ties `s` or `N0` to `m`.

use std::fmt;

use exactmath::{Polynomial, Rational, RationalFunction};
use kovacic::{recu1, search_monic, Sign};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::ode::{family11, RF};
use crate::PipelineError;

/// `(ε(∞), ε(δ/β), ε(1), ε(0))`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum AppendixPattern {
    #[serde(rename = "(-,-,-,-)")]
    MinusMinusMinusMinus,
    #[serde(rename = "(-,+,+,-)")]
    MinusPlusPlusMinus,
    #[serde(rename = "(+,+,-,-)")]
    PlusPlusMinusMinus,
    #[serde(rename = "(+,-,+,-)")]
    PlusMinusPlusMinus,
}

impl AppendixPattern {
    pub const ALL: [AppendixPattern; 4] = [
        AppendixPattern::MinusMinusMinusMinus,
        AppendixPattern::MinusPlusPlusMinus,
        AppendixPattern::PlusPlusMinusMinus,
        AppendixPattern::PlusMinusPlusMinus,
    ];

    pub fn signs(self) -> [Sign; 4] {
        use Sign::{Minus as M, Plus as P};
        match self {
            AppendixPattern::MinusMinusMinusMinus => [M, M, M, M],
            AppendixPattern::MinusPlusPlusMinus => [M, P, P, M],
            AppendixPattern::PlusPlusMinusMinus => [P, P, M, M],
            AppendixPattern::PlusMinusPlusMinus => [P, M, P, M],
        }
    }
}

impl fmt::Display for AppendixPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self.signs().iter().map(|s| s.symbol()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Which potential the exponents are tested against. `Direct` is the normal
/// form at `s`; `Mirrored` keeps `α` in terms of `ŝ = s/(δ−β)` but uses the
/// potential at `−s`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    Direct,
    Mirrored,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct AppendixCRecord {
    pub pattern: AppendixPattern,
    pub convention: Convention,
    #[serde(serialize_with = "kovacic::json::rational")]
    pub beta: Rational,
    #[serde(serialize_with = "kovacic::json::rational")]
    pub delta: Rational,
    pub n0: u32,
    #[serde(serialize_with = "kovacic::json::rational")]
    pub s: Rational,
    pub m: u64,
    pub omega: String,
    /// `ω' + ω² − r`.
    pub riccati_defect: String,
    /// The closed-form polynomial claimed for this pattern, if any.
    pub candidate: Option<String>,
    pub candidate_passes: Option<bool>,
    /// Monic degree-`m` solution of the polynomial equation, if one exists.
    pub searched: Option<String>,
    /// `G'/G` of `H ψ` equals that of `((δ−βz)/(1−z))^{±m}`.
    pub reconstruction_exact: Option<bool>,
}

fn half(q: Rational) -> Rational {
    q / Rational::from_integer(2.into())
}

/// `s` with `s/(δ−β) = shat`.
pub fn s_for_shat(beta: &Rational, delta: &Rational, shat: &Rational) -> Rational {
    shat * (delta - beta)
}

fn linear(c0: Rational, c1: Rational) -> Polynomial<Rational> {
    Polynomial::linear(c0, c1)
}

pub fn appendix_c_case(
    beta: &Rational,
    delta: &Rational,
    n0: u32,
    s: &Rational,
    pattern: AppendixPattern,
    convention: Convention,
) -> Result<AppendixCRecord, PipelineError> {
    if beta == delta {
        return Err(PipelineError::ShatUndefined);
    }
    let shat = s / (delta - beta);
    let one = Rational::one();
    let n0q = Rational::from_integer(n0.into());
    let [e_inf, e_db, e_1, e_0] = pattern.signs();
    let a1 = |sg: Sign| match sg {
        Sign::Plus => half(&one + &shat),
        Sign::Minus => half(&one - &shat),
    };
    let a0 = match e_0 {
        Sign::Plus => &one + half(n0q.clone()),
        Sign::Minus => -half(n0q.clone()),
    };
    let a_inf = match e_inf {
        Sign::Plus => half(n0q.clone()),
        Sign::Minus => &one - half(n0q.clone()),
    };
    let (al1, aldb) = (a1(e_1), a1(e_db));
    let m = &a_inf - &a0 - &al1 - &aldb;
    if !m.is_integer() || m.is_negative() {
        return Err(match pattern {
            AppendixPattern::MinusMinusMinusMinus | AppendixPattern::MinusPlusPlusMinus => PipelineError::PatternRequiresIntegerShat,
            _ => PipelineError::InvalidParameters(format!("m = {m} is not a nonnegative integer")),
        });
    }
    let m_u: u64 = m.to_integer().try_into().expect("nonnegative");
    let omega = &(&RationalFunction::pole_term(a0, Rational::zero(), 1) + &RationalFunction::pole_term(al1, one.clone(), 1))
        + &RationalFunction::pole_term(aldb, delta / beta, 1);

    let s_pot = match convention {
        Convention::Direct => s.clone(),
        Convention::Mirrored => -s.clone(),
    };
    let (_, lifted, nf) = family11(beta, delta, n0, &s_pot)?;
    let r = nf.r;
    let defect = &(&omega.derivative() + &(&omega * &omega)) - &r;

    let candidate: Option<Polynomial<Rational>> = match pattern {
        AppendixPattern::MinusMinusMinusMinus => Some(linear(delta.clone(), -beta.clone()).pow(m_u as u32)),
        AppendixPattern::MinusPlusPlusMinus => Some(linear(one.clone(), -one.clone()).pow(m_u as u32)),
        AppendixPattern::PlusPlusMinusMinus => match m_u {
            0 => Some(Polynomial::one()),
            1 if !s.is_zero() => Some(linear(-(delta / s), one.clone())),
            _ => None,
        },
        AppendixPattern::PlusMinusPlusMinus => (m_u == 0).then(Polynomial::one),
    };
    let candidate_passes = candidate.as_ref().map(|p| recu1(&omega, &r, p).is_zero());
    let searched = search_monic(m_u as usize, |p: &Polynomial<Rational>| recu1(&omega, &r, p));

    let reconstruction_exact = match (pattern, convention, &candidate) {
        (AppendixPattern::MinusMinusMinusMinus | AppendixPattern::MinusPlusPlusMinus, Convention::Direct, Some(p)) => {
            let pr = RF::from_poly(p.clone());
            let neg_half_a = lifted.a().expect("order 2").scale(&-half(one.clone()));
            let g_log = &(&(&pr.derivative() / &pr) + &omega) + &neg_half_a;
            // d/dz log((δ−βz)/(1−z)) = −β/(δ−βz) + 1/(1−z)
            let k = if pattern == AppendixPattern::MinusMinusMinusMinus { m.clone() } else { -m.clone() };
            let target = (&RF::pole_term(one.clone(), delta / beta, 1) - &RF::pole_term(one.clone(), one.clone(), 1)).scale(&k);
            Some(g_log == target)
        }
        _ => None,
    };

    Ok(AppendixCRecord {
        pattern,
        convention,
        beta: beta.clone(),
        delta: delta.clone(),
        n0,
        s: s.clone(),
        m: m_u,
        omega: omega.to_string_var("z"),
        riccati_defect: defect.to_string_var("z"),
        candidate: candidate.map(|p| p.to_string_var("z")),
        candidate_passes,
        searched: searched.map(|p| p.to_string_var("z")),
        reconstruction_exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactmath::q;

    #[test]
    fn first_pattern_example() {
        let (b, d) = (q(2, 1), q(3, 1));
        let rec = appendix_c_case(&b, &d, 2, &s_for_shat(&b, &d, &q(2, 1)), AppendixPattern::MinusMinusMinusMinus, Convention::Direct).unwrap();
        assert_eq!(rec.m, 2);
        assert_eq!(rec.candidate_passes, Some(true));
        assert_eq!(rec.reconstruction_exact, Some(true));
    }

    #[test]
    fn second_pattern_example() {
        let (b, d) = (q(3, 1), q(2, 1));
        let rec = appendix_c_case(&b, &d, 1, &s_for_shat(&b, &d, &q(-1, 1)), AppendixPattern::MinusPlusPlusMinus, Convention::Direct).unwrap();
        assert_eq!(rec.m, 1);
        assert_eq!(rec.candidate.as_deref(), Some("-z + 1"));
        assert_eq!(rec.candidate_passes, Some(true));
    }

    #[test]
    fn integer_shat_required() {
        let r = appendix_c_case(&q(2, 1), &q(3, 1), 2, &q(1, 2), AppendixPattern::MinusMinusMinusMinus, Convention::Direct);
        assert!(matches!(r, Err(PipelineError::PatternRequiresIntegerShat)));
    }
}
