//! Integrability certificates for the two birth-death families.

use std::collections::BTreeSet;

use exactmath::{Field, Hyperexponential, Point, Rational};
use kovacic::{classify, kovacic_with, successes, ESet, Execution, KovacicResult, SignAssignment, Subcase, Verdict};
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::ode::{build_12_ode, family11, RF};
use crate::table::{alpha_table_symbolic, conjecture_check, MTable};
use crate::{Family, PipelineError};

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Parameters {
    #[serde(serialize_with = "kovacic::json::rational")]
    pub beta: Rational,
    #[serde(serialize_with = "kovacic::json::rational")]
    pub delta: Rational,
    pub n0: u32,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct SingularityInfo {
    pub location: Point,
    pub order: i64,
    pub subcase: Subcase,
    /// `regular` or `irregular` for `H'' = rH`.
    pub kind: &'static str,
}

/// Singular points of `H'' = rH`: finite poles of order ≤ 2 and `○(∞) ≥ 2`
/// are regular.
pub fn singularity_inventory(r: &RF) -> Result<Vec<SingularityInfo>, PipelineError> {
    Ok(classify(r)?
        .into_iter()
        .map(|p| {
            let regular = if p.is_infinity() { p.order >= 2 } else { p.order <= 2 };
            SingularityInfo { location: p.location, order: p.order, subcase: p.subcase, kind: if regular { "regular" } else { "irregular" } }
        })
        .collect())
}

/// Heun-family label read off the singularity inventory.
pub fn heun_label(inv: &[SingularityInfo]) -> String {
    let list = |kind: &str| -> String {
        let v: Vec<String> = inv.iter().filter(|s| s.kind == kind).map(|s| format!("z = {}", s.location)).collect();
        if v.is_empty() {
            "none".into()
        } else {
            v.join(", ")
        }
    };
    let irregular = inv.iter().filter(|s| s.kind == "irregular").count();
    let name = match (inv.len(), irregular) {
        (4, 0) => "general Heun",
        (3, 1) => "confluent Heun",
        _ => "outside the Heun classes",
    };
    format!("{name}; regular: {}; irregular: {}", list("regular"), list("irregular"))
}

/// One sampled `s` of the (1,1) family.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Prop1Sample {
    #[serde(serialize_with = "kovacic::json::rational")]
    pub s: Rational,
    pub verdict: &'static str,
    /// Assignment of the certificate reproducing `G'/G = f`.
    pub assignment: Option<SignAssignment>,
    pub degree: Option<u64>,
    pub omega: Option<String>,
    pub p: Option<String>,
    pub riccati_residual_zero: bool,
    /// `ω + P'/P − a/2 = f`.
    pub reconstruction_exact: bool,
    pub h: Option<String>,
    pub g: Option<String>,
    /// `β ≠ δ` only: `ω` equals `−N0/(2z) − ½(1−ŝ)/(1−z) − ½(1+ŝ)β/(δ−βz)`.
    pub omega_matches_display: Option<bool>,
    /// `β = δ` only: `H = z^{−N0/2}(1−z)e^{s/(2δ(1−z))}`, `G = e^{s/(δ(1−z))}`
    /// and `z = 1` handled by subcase (c3).
    pub equal_rate_structure: Option<bool>,
    #[serde(skip)]
    pub h_exact: Option<Hyperexponential<Rational>>,
    #[serde(skip)]
    pub g_exact: Option<Hyperexponential<Rational>>,
}

/// One sampled `s` of the (1,2) family.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Prop2Sample {
    #[serde(serialize_with = "kovacic::json::rational")]
    pub s: Rational,
    pub verdict: &'static str,
    /// Distinct case-1 degrees over all assignments, ascending.
    pub case1_degrees: Vec<String>,
    pub case2_esets: Vec<ESet>,
    pub case2_degrees: Vec<String>,
    pub case2_admissible: bool,
    pub case3_blocked: bool,
    pub case3_reason: String,
    /// Everything above equals the expected non-integrability audit.
    pub audit_matches: bool,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
#[serde(untagged)]
pub enum SampleOutcomes {
    Certificates(Vec<Prop1Sample>),
    Audits(Vec<Prop2Sample>),
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct FamilyVerdict {
    pub family: Family,
    pub parameters: Parameters,
    #[serde(serialize_with = "rational_list")]
    pub samples: Vec<Rational>,
    /// `integrable`, `non-integrable` or `inconsistent`.
    pub verdict: &'static str,
    pub integrable: bool,
    /// Every sample agrees with the expected verdict.
    pub consistent: bool,
    pub m_table: Option<MTable>,
    pub conjecture_flags: Vec<bool>,
    pub singularities: Vec<SingularityInfo>,
    pub heun: String,
    pub outcomes: SampleOutcomes,
}

fn rational_list<S: serde::Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for q in v {
        seq.serialize_element(&q.to_string())?;
    }
    seq.end()
}

impl FamilyVerdict {
    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("verdict serializes");
        let obj = v.as_object_mut().expect("object");
        let outcomes = obj.remove("outcomes").expect("present");
        let key = match self.outcomes {
            SampleOutcomes::Certificates(_) => "certificate",
            SampleOutcomes::Audits(_) => "audit",
        };
        obj.insert(key.into(), outcomes);
        if let Some(t) = &self.m_table {
            obj.insert("m_table_text".into(), json!(t.render()));
        }
        v
    }
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

/// `−N0/(2z) − ½(1−ŝ)/(1−z) − ½(1+ŝ)β/(δ−βz)`.
pub fn displayed_omega(beta: &Rational, delta: &Rational, n0: u32, s: &Rational) -> RF {
    let shat = s / (delta - beta);
    let one = Rational::one();
    let n0q = Rational::from_integer(n0.into());
    // −c/(1−z) = c/(z−1), −cβ/(δ−βz) = c/(z−δ/β)
    &(&RF::pole_term(-(n0q * half()), Rational::zero(), 1) + &RF::pole_term(half() * (&one - &shat), one.clone(), 1))
        + &RF::pole_term(half() * (&one + &shat), delta / beta, 1)
}

fn prop1_sample(beta: &Rational, delta: &Rational, n0: u32, s: &Rational) -> Result<Prop1Sample, PipelineError> {
    let (first, lifted, nf) = family11(beta, delta, n0, s)?;
    let f = first.f().expect("order 1");
    let neg_half_a = lifted.a().expect("order 2").scale(&-half());
    let res: KovacicResult = kovacic_with(&nf.r, Execution::Sequential)?;
    let mut out = Prop1Sample {
        s: s.clone(),
        verdict: res.verdict.label(),
        assignment: None,
        degree: None,
        omega: None,
        p: None,
        riccati_residual_zero: false,
        reconstruction_exact: false,
        h: None,
        g: None,
        omega_matches_display: None,
        equal_rate_structure: None,
        h_exact: None,
        g_exact: None,
    };
    if !matches!(res.verdict, Verdict::Case1(_)) {
        return Ok(out);
    }
    let trials: Vec<_> = res.case1_trials().cloned().collect();
    let target = (&f - &neg_half_a).to_radical();
    // prefer the lowest degree among certificates reproducing e^{∫f}
    let chosen = successes(&trials).into_iter().filter(|c| c.log_derivative() == target).min_by_key(|c| c.n);
    let Some(c) = chosen else {
        return Ok(out);
    };
    out.riccati_residual_zero = c.residual(&nf.r).is_zero();
    out.reconstruction_exact = true;
    out.assignment = Some(c.assignment.clone());
    out.degree = Some(c.n);
    out.omega = Some(c.omega.to_string_var("z"));
    out.p = Some(c.p.to_string_var("z"));
    if let (Some(w), Some(p)) = (c.omega.to_rational(), c.p.coeffs().iter().map(|x| x.as_rational()).collect::<Option<Vec<_>>>()) {
        let h = Hyperexponential::exp_integral(&w)?.with_poly(exactmath::Polynomial::new(p));
        let g = h.mul(&nf.psi);
        out.h = Some(h.to_string_var("z"));
        out.g = Some(g.to_string_var("z"));
        if beta != delta {
            out.omega_matches_display = Some(c.p.is_constant() && w == displayed_omega(beta, delta, n0, s));
        } else {
            let one = Rational::one();
            let mut factors = Vec::new();
            if n0 != 0 {
                factors.push((Rational::zero(), -(Rational::from_integer(n0.into()) * half())));
            }
            factors.push((one.clone(), one.clone()));
            // s/(2δ(1−z)) = −(s/(2δ))/(z−1)
            let k = s / (delta * Rational::from_integer(2.into()));
            let h_expected_exp = RF::pole_term(-k.clone(), one.clone(), 1);
            let g_expected_exp = RF::pole_term(-(k.clone() * Rational::from_integer(2.into())), one.clone(), 1);
            let c3_at_one = res
                .profiles()
                .and_then(|ps| ps.iter().find(|p| p.location == Point::Finite(one.clone())))
                .is_some_and(|p| p.subcase == Subcase::C3 && p.order == 4);
            let h_ok = h.poly.is_constant() && h.factors == factors && h.exponent == h_expected_exp;
            let g_ok = g.poly.is_constant() && g.factors.is_empty() && g.exponent == g_expected_exp;
            out.equal_rate_structure = Some(h_ok && g_ok && c3_at_one);
        }
        out.h_exact = Some(h);
        out.g_exact = Some(g);
    } else {
        out.reconstruction_exact = false;
    }
    Ok(out)
}

/// Case 1 at every sample, with `G = Hψ` reproducing `G'/G = f` exactly.
pub fn proposition1_certificate(beta: &Rational, delta: &Rational, n0: u32, samples: &[Rational]) -> Result<FamilyVerdict, PipelineError> {
    proposition1_certificate_with(beta, delta, n0, samples, Execution::default())
}

pub fn proposition1_certificate_with(
    beta: &Rational,
    delta: &Rational,
    n0: u32,
    samples: &[Rational],
    exec: Execution,
) -> Result<FamilyVerdict, PipelineError> {
    check_params(beta, delta, samples)?;
    let family = if beta == delta { Family::Linear11Equal } else { Family::Linear11Distinct };
    let outcomes: Vec<Prop1Sample> =
        exec.map(samples.to_vec(), |s| prop1_sample(beta, delta, n0, &s)).into_iter().collect::<Result<_, _>>()?;
    let integrable = outcomes.iter().all(|o| {
        o.verdict == "case1"
            && o.riccati_residual_zero
            && o.reconstruction_exact
            && o.omega_matches_display.unwrap_or(true)
            && o.equal_rate_structure.unwrap_or(true)
    });
    let r0 = family11(beta, delta, n0, &samples[0])?.2.r;
    let singularities = singularity_inventory(&r0)?;
    let (m_table, conjecture_flags) = match family {
        Family::Linear11Distinct => {
            let t = alpha_table_symbolic(family)?;
            let flags = conjecture_check(&t);
            (Some(t), flags)
        }
        _ => (None, Vec::new()),
    };
    Ok(FamilyVerdict {
        family,
        parameters: Parameters { beta: beta.clone(), delta: delta.clone(), n0 },
        samples: samples.to_vec(),
        verdict: if integrable { "integrable" } else { "inconsistent" },
        integrable,
        consistent: integrable,
        m_table,
        conjecture_flags,
        heun: heun_label(&singularities),
        singularities,
        outcomes: SampleOutcomes::Certificates(outcomes),
    })
}

fn check_params(beta: &Rational, delta: &Rational, samples: &[Rational]) -> Result<(), PipelineError> {
    if *beta <= Rational::zero() || *delta <= Rational::zero() {
        return Err(PipelineError::InvalidParameters("β and δ must be positive".into()));
    }
    if samples.is_empty() || samples.iter().any(|s| s.is_zero()) {
        return Err(PipelineError::InvalidParameters("samples must be nonempty and exclude s = 0".into()));
    }
    let set: BTreeSet<_> = samples.iter().collect();
    if set.len() != samples.len() {
        return Err(PipelineError::InvalidParameters("samples must be distinct".into()));
    }
    Ok(())
}

fn expected_esets() -> Vec<ESet> {
    vec![
        ESet { location: Point::Finite(Rational::zero()), values: vec![2] },
        ESet { location: Point::Finite(Rational::one()), values: vec![4] },
        ESet { location: Point::Infinity, values: vec![0] },
    ]
}

fn prop2_sample(beta: &Rational, delta: &Rational, n0: u32, s: &Rational) -> Result<Prop2Sample, PipelineError> {
    let (_, nf) = build_12_ode(beta, delta, n0, s)?;
    let res = kovacic_with(&nf.r, Execution::Sequential)?;
    let degrees: BTreeSet<Rational> = res.case1_trials().filter_map(|t| t.n.as_rational()).collect();
    let case1_degrees: Vec<String> = degrees.iter().map(|q| q.to_string()).collect();
    let case2_esets = res.case2_esets().map(|s| s.to_vec()).unwrap_or_default();
    let c2: Vec<_> = res.case2_trials().collect();
    let case2_degrees = c2.iter().map(|t| t.n.to_string()).collect();
    let case2_admissible = c2.iter().any(|t| t.in_d_set);
    let pre = res.case3_precondition();
    let case3_blocked = pre.is_some_and(|p| !p.satisfied);
    let case3_reason = pre.map(|p| p.reason.clone()).unwrap_or_default();
    let inf_order = res.profiles().and_then(|ps| ps.iter().find(|p| p.is_infinity()).map(|p| p.order));
    let expected_degrees: BTreeSet<Rational> = [-2i64, -1].iter().map(|&k| Rational::from_integer(k.into())).collect();
    let audit_matches = matches!(res.verdict, Verdict::Case4)
        && degrees == expected_degrees
        && case2_esets == expected_esets()
        && c2.len() == 1
        && !case2_admissible
        && case3_blocked
        && inf_order == Some(0);
    Ok(Prop2Sample {
        s: s.clone(),
        verdict: res.verdict.label(),
        case1_degrees,
        case2_esets,
        case2_degrees,
        case2_admissible,
        case3_blocked,
        case3_reason,
        audit_matches,
    })
}

/// Case 4 at every sample, with the audit of all three cases recorded.
pub fn proposition2_certificate(beta: &Rational, delta: &Rational, n0: u32, samples: &[Rational]) -> Result<FamilyVerdict, PipelineError> {
    proposition2_certificate_with(beta, delta, n0, samples, Execution::default())
}

pub fn proposition2_certificate_with(
    beta: &Rational,
    delta: &Rational,
    n0: u32,
    samples: &[Rational],
    exec: Execution,
) -> Result<FamilyVerdict, PipelineError> {
    check_params(beta, delta, samples)?;
    let outcomes: Vec<Prop2Sample> =
        exec.map(samples.to_vec(), |s| prop2_sample(beta, delta, n0, &s)).into_iter().collect::<Result<_, _>>()?;
    let none_solvable = outcomes.iter().all(|o| o.verdict == "case4");
    let consistent = outcomes.iter().all(|o| o.audit_matches);
    let r0 = build_12_ode(beta, delta, n0, &samples[0])?.1.r;
    let singularities = singularity_inventory(&r0)?;
    let t = alpha_table_symbolic(Family::Quadratic12)?;
    let flags = conjecture_check(&t);
    Ok(FamilyVerdict {
        family: Family::Quadratic12,
        parameters: Parameters { beta: beta.clone(), delta: delta.clone(), n0 },
        samples: samples.to_vec(),
        verdict: if none_solvable && consistent { "non-integrable" } else { "inconsistent" },
        integrable: !none_solvable,
        consistent,
        m_table: Some(t),
        conjecture_flags: flags,
        heun: heun_label(&singularities),
        singularities,
        outcomes: SampleOutcomes::Audits(outcomes),
    })
}
