//! Kovacic's algorithm for `ζ'' = r ζ` with `r ∈ Q(x)`.
//!
//! [`kovacic`] decides which of the four cases holds and returns an exactly
//! checked certificate together with a complete, deterministic audit log.

mod case1;
mod case2;
mod case3;
mod classify;
mod exec;
pub mod json;
pub mod numeric;
mod search;
mod second;

use std::fmt;

use exactmath::{ExactError, Point, Polynomial, RadicalNumber, Rational, RationalFunction};
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

pub use case1::{assignments, case1_blocker, case1_trials, degree_for, omega_for, successes, CandidateOmega, Case1Trial, RadicalRF};
pub use case2::{case2_esets, case2_trials, Case2Certificate, ESet, ETrial};
pub use case3::{case3_esets, case3_precondition, case3_trials, finite_product, recursion, Case3Certificate, Case3Precondition};
pub use classify::{classify, SingularityProfile, Subcase};
pub use exec::Execution;
pub use search::{recu1, search_monic, Recu2};
pub use second::{integrate, QuadratureError, SecondSolution};

type RF = RationalFunction<Rational>;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

/// A sign for every point of `Γ`, in `Γ` order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct SignAssignment(pub Vec<(Point, Sign)>);

impl SignAssignment {
    pub fn get(&self, p: &Point) -> Option<Sign> {
        self.0.iter().find(|(q, _)| q == p).map(|(_, s)| *s)
    }
}

impl fmt::Display for SignAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(p, s)| format!("{p}:{}", s.symbol())).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum Verdict {
    Case1(CandidateOmega),
    Case2(Case2Certificate),
    Case3(Case3Certificate),
    Case4,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Case1(_) => "case1",
            Verdict::Case2(_) => "case2",
            Verdict::Case3(_) => "case3",
            Verdict::Case4 => "case4",
        }
    }

    pub fn is_liouvillian(&self) -> bool {
        !matches!(self, Verdict::Case4)
    }
}

#[derive(Clone, PartialEq, Debug, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum AuditEntry {
    Trivial { reason: String },
    Classify { profiles: Vec<SingularityProfile> },
    Case1Skipped { reason: String },
    Case1Assignment(Case1Trial),
    Case1DSet { values: Vec<u64> },
    Case2ESets { sets: Vec<ESet> },
    Case2Tuple(ETrial),
    Case3Precondition(Case3Precondition),
    Case3ESets { m: u32, sets: Vec<ESet> },
    Case3Tuple { m: u32, trial: ETrial },
    CertificateCheck { case: u8, residual_zero: bool },
}

#[derive(Clone, PartialEq, Debug)]
pub struct KovacicResult {
    pub verdict: Verdict,
    pub audit: Vec<AuditEntry>,
}

impl KovacicResult {
    pub fn profiles(&self) -> Option<&[SingularityProfile]> {
        self.audit.iter().find_map(|e| match e {
            AuditEntry::Classify { profiles } => Some(profiles.as_slice()),
            _ => None,
        })
    }

    pub fn case1_trials(&self) -> impl Iterator<Item = &Case1Trial> {
        self.audit.iter().filter_map(|e| match e {
            AuditEntry::Case1Assignment(t) => Some(t),
            _ => None,
        })
    }

    pub fn case2_esets(&self) -> Option<&[ESet]> {
        self.audit.iter().find_map(|e| match e {
            AuditEntry::Case2ESets { sets } => Some(sets.as_slice()),
            _ => None,
        })
    }

    pub fn case2_trials(&self) -> impl Iterator<Item = &ETrial> {
        self.audit.iter().filter_map(|e| match e {
            AuditEntry::Case2Tuple(t) => Some(t),
            _ => None,
        })
    }

    pub fn case3_precondition(&self) -> Option<&Case3Precondition> {
        self.audit.iter().find_map(|e| match e {
            AuditEntry::Case3Precondition(p) => Some(p),
            _ => None,
        })
    }

    pub fn to_json(&self, var: &str) -> Value {
        let certificate = match &self.verdict {
            Verdict::Case1(c) => json!({
                "assignment": c.assignment,
                "n": c.n,
                "omega": json::ratfun(&c.omega, var),
                "P": json::poly(&c.p, var),
            }),
            Verdict::Case2(c) => json!({
                "tuple": c.tuple,
                "n": c.n,
                "theta": json::ratfun(&c.theta, var),
                "P": json::poly(&c.p, var),
                "phi": json::ratfun(&c.phi, var),
                "omega_quadratic": c.quadratic.iter().map(|q| json::ratfun(q, var)).collect::<Vec<_>>(),
                "discriminant": json::ratfun(&c.discriminant, var),
            }),
            Verdict::Case3(c) => json!({
                "m": c.m,
                "tuple": c.tuple,
                "n": c.n,
                "theta": json::ratfun(&c.theta, var),
                "P": json::poly(&c.p, var),
                "S": json::poly(&c.s, var),
                "omega_equation": c.coefficients.iter().map(|q| json::ratfun(q, var)).collect::<Vec<_>>(),
            }),
            Verdict::Case4 => Value::Null,
        };
        json!({
            "verdict": self.verdict.label(),
            "certificate": certificate,
            "audit": serde_json::to_value(&self.audit).expect("audit serializes"),
        })
    }
}

fn trivial_zero() -> CandidateOmega {
    CandidateOmega { assignment: SignAssignment(Vec::new()), n: 0, omega: RationalFunction::zero(), p: Polynomial::one() }
}

/// Runs cases 1 → 2 → 3 and returns the verdict with its audit.
pub fn kovacic(r: &RF) -> Result<KovacicResult, ExactError> {
    kovacic_with(r, Execution::default())
}

pub fn kovacic_with(r: &RF, exec: Execution) -> Result<KovacicResult, ExactError> {
    let mut audit = Vec::new();
    if r.is_zero() {
        audit.push(AuditEntry::Trivial { reason: "r = 0: solutions 1 and x".into() });
        return Ok(KovacicResult { verdict: Verdict::Case1(trivial_zero()), audit });
    }
    let profiles = classify(r)?;
    audit.push(AuditEntry::Classify { profiles: profiles.clone() });

    match case1_blocker(&profiles) {
        Some(reason) => audit.push(AuditEntry::Case1Skipped { reason }),
        None => {
            let trials = case1_trials(r, &profiles, exec);
            let d_set: Vec<u64> = trials
                .iter()
                .filter(|t| t.in_d_set)
                .filter_map(|t| t.n.as_integer().and_then(|v| u64::try_from(v).ok()))
                .collect();
            audit.extend(trials.iter().cloned().map(AuditEntry::Case1Assignment));
            audit.push(AuditEntry::Case1DSet { values: d_set });
            if let Some(c) = successes(&trials).into_iter().next() {
                let ok = c.residual(r).is_zero();
                audit.push(AuditEntry::CertificateCheck { case: 1, residual_zero: ok });
                debug_assert!(ok);
                return Ok(KovacicResult { verdict: Verdict::Case1(c), audit });
            }
        }
    }

    let sets = case2_esets(&profiles);
    audit.push(AuditEntry::Case2ESets { sets: sets.clone() });
    let trials = case2_trials(r, &sets, exec);
    audit.extend(trials.iter().cloned().map(AuditEntry::Case2Tuple));
    if let Some(t) = trials.iter().find(|t| t.found) {
        let c = Case2Certificate::from_trial(t, r);
        let ok = c.residual(r).is_zero();
        audit.push(AuditEntry::CertificateCheck { case: 2, residual_zero: ok });
        return Ok(KovacicResult { verdict: Verdict::Case2(c), audit });
    }

    let pre = case3_precondition(&profiles);
    audit.push(AuditEntry::Case3Precondition(pre.clone()));
    if pre.satisfied {
        for m in [4u32, 6, 12] {
            let sets = case3_esets(&profiles, m);
            audit.push(AuditEntry::Case3ESets { m, sets: sets.clone() });
            let trials = case3_trials(r, &profiles, m, &sets, exec);
            audit.extend(trials.iter().cloned().map(|trial| AuditEntry::Case3Tuple { m, trial }));
            if let Some(t) = trials.iter().find(|t| t.found) {
                let c = Case3Certificate::from_trial(t, m, &profiles, r);
                let ok = c.residual(r).is_zero();
                audit.push(AuditEntry::CertificateCheck { case: 3, residual_zero: ok });
                return Ok(KovacicResult { verdict: Verdict::Case3(c), audit });
            }
        }
    }
    Ok(KovacicResult { verdict: Verdict::Case4, audit })
}

/// First case-1 certificate in enumeration order, if any.
pub fn case1(r: &RF) -> Result<Option<CandidateOmega>, ExactError> {
    Ok(case1_all(r)?.into_iter().next())
}

/// Every case-1 certificate, in enumeration order.
pub fn case1_all(r: &RF) -> Result<Vec<CandidateOmega>, ExactError> {
    if r.is_zero() {
        return Ok(vec![trivial_zero()]);
    }
    let profiles = classify(r)?;
    if case1_blocker(&profiles).is_some() {
        return Ok(Vec::new());
    }
    Ok(successes(&case1_trials(r, &profiles, Execution::default())))
}

/// Case 2 on its own, ignoring whether case 1 would succeed.
pub fn case2(r: &RF) -> Result<Option<Case2Certificate>, ExactError> {
    let profiles = classify(r)?;
    let sets = case2_esets(&profiles);
    let trials = case2_trials(r, &sets, Execution::default());
    Ok(trials.iter().find(|t| t.found).map(|t| Case2Certificate::from_trial(t, r)))
}

/// Case 3 on its own; `None` immediately when its precondition fails.
pub fn case3(r: &RF) -> Result<Option<Case3Certificate>, ExactError> {
    let profiles = classify(r)?;
    if !case3_precondition(&profiles).satisfied {
        return Ok(None);
    }
    for m in [4u32, 6, 12] {
        let sets = case3_esets(&profiles, m);
        let trials = case3_trials(r, &profiles, m, &sets, Execution::default());
        if let Some(t) = trials.iter().find(|t| t.found) {
            return Ok(Some(Case3Certificate::from_trial(t, m, &profiles, r)));
        }
    }
    Ok(None)
}

/// Radical-coefficient view of a rational potential.
pub fn radical(r: &RF) -> RationalFunction<RadicalNumber> {
    r.to_radical()
}
