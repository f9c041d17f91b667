use exactmath::{Point, Polynomial, RadicalNumber, Rational, RationalFunction};
use num_traits::Zero;
use serde::Serialize;

use crate::classify::{SingularityProfile, Subcase};
use crate::search::{recu1, search_monic};
use crate::{Execution, Sign, SignAssignment};

pub type RadicalRF = RationalFunction<RadicalNumber>;

/// One sign assignment of case 1 and what came of it.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Case1Trial {
    pub assignment: SignAssignment,
    /// `α_∞ − Σ α_c`; kept even when it is not a nonnegative integer.
    pub n: RadicalNumber,
    pub in_d_set: bool,
    #[serde(skip)]
    pub omega: Option<RadicalRF>,
    #[serde(skip)]
    pub p: Option<Polynomial<RadicalNumber>>,
    pub found: bool,
}

#[derive(Clone, PartialEq, Debug)]
pub struct CandidateOmega {
    pub assignment: SignAssignment,
    pub n: u64,
    pub omega: RadicalRF,
    pub p: Polynomial<RadicalNumber>,
}

impl CandidateOmega {
    /// `P'' + 2ωP' + (ω' + ω² − r)P`, identically zero for a valid certificate.
    pub fn residual(&self, r: &RationalFunction<Rational>) -> RadicalRF {
        recu1(&self.omega, &r.to_radical(), &self.p)
    }

    /// `ζ1'/ζ1 = ω + P'/P`.
    pub fn log_derivative(&self) -> RadicalRF {
        let p = RationalFunction::from_poly(self.p.clone());
        &self.omega + &(&p.derivative() / &p)
    }
}

/// Why the whole of case 1 is inapplicable, if it is.
pub fn case1_blocker(profiles: &[SingularityProfile]) -> Option<String> {
    profiles
        .iter()
        .find(|p| p.subcase == Subcase::Inapplicable)
        .map(|p| format!("no case-1 subcase at {} (order {})", p.location, p.order))
}

/// All assignments in lexicographic order over `Γ` (finite points
/// ascending, then ∞), `+` before `−`.
pub fn assignments(profiles: &[SingularityProfile]) -> Vec<SignAssignment> {
    let k = profiles.len();
    (0..1usize << k)
        .map(|idx| {
            SignAssignment(
                profiles
                    .iter()
                    .enumerate()
                    .map(|(i, p)| {
                        let bit = (idx >> (k - 1 - i)) & 1;
                        (p.location.clone(), if bit == 0 { Sign::Plus } else { Sign::Minus })
                    })
                    .collect(),
            )
        })
        .collect()
}

fn branch_rf(p: &SingularityProfile) -> RadicalRF {
    p.sqrt_branch.as_ref().map(|b| b.as_rational_function()).unwrap_or_else(RationalFunction::zero)
}

/// `n` for an assignment (profiles must all be case-1 applicable).
pub fn degree_for(profiles: &[SingularityProfile], a: &SignAssignment) -> RadicalNumber {
    let mut n = RadicalNumber::zero();
    for (p, (_, s)) in profiles.iter().zip(&a.0) {
        let alpha = p.alpha(*s == Sign::Plus).expect("applicable profile").clone();
        n = if p.is_infinity() { n + alpha } else { n - alpha };
    }
    n
}

/// `ω = ε(∞)[√r]_∞ + Σ (ε(c)[√r]_c + α_c^{ε(c)}/(x − c))`.
pub fn omega_for(profiles: &[SingularityProfile], a: &SignAssignment) -> RadicalRF {
    let mut w = RationalFunction::zero();
    for (p, (_, s)) in profiles.iter().zip(&a.0) {
        let plus = *s == Sign::Plus;
        let br = branch_rf(p);
        w = if plus { &w + &br } else { &w - &br };
        if let Point::Finite(c) = &p.location {
            let alpha = p.alpha(plus).expect("applicable profile").clone();
            if !alpha.is_zero() {
                w = &w + &RationalFunction::pole_term(alpha, RadicalNumber::from_rational(c.clone()), 1);
            }
        }
    }
    w
}

/// Evaluates every assignment; first-success selection is left to the caller.
pub fn case1_trials(r: &RationalFunction<Rational>, profiles: &[SingularityProfile], exec: Execution) -> Vec<Case1Trial> {
    let rr = r.to_radical();
    exec.map(assignments(profiles), |a| {
        let n = degree_for(profiles, &a);
        let in_d_set = n.is_nonnegative_integer();
        let mut trial = Case1Trial { assignment: a, n, in_d_set, omega: None, p: None, found: false };
        if in_d_set {
            let deg: usize = n_as_usize(&trial.n);
            let w = omega_for(profiles, &trial.assignment);
            trial.p = search_monic(deg, |p: &Polynomial<RadicalNumber>| recu1(&w, &rr, p));
            trial.found = trial.p.is_some();
            trial.omega = Some(w);
        }
        trial
    })
}

fn n_as_usize(n: &RadicalNumber) -> usize {
    n.as_integer().and_then(|v| usize::try_from(v).ok()).expect("nonnegative integer degree")
}

pub fn successes(trials: &[Case1Trial]) -> Vec<CandidateOmega> {
    trials
        .iter()
        .filter(|t| t.found)
        .map(|t| CandidateOmega {
            assignment: t.assignment.clone(),
            n: n_as_usize(&t.n) as u64,
            omega: t.omega.clone().expect("searched"),
            p: t.p.clone().expect("found"),
        })
        .collect()
}
