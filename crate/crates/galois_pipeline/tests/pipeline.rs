use exactmath::{laurent_at, parse_rational_function, q, Point, Rational};
use galois_pipeline::*;
use kovacic::kovacic;
use num_traits::Zero;

#[test]
fn golden_tables() {
    let t11 = alpha_table_symbolic(Family::Linear11Distinct).unwrap();
    assert_eq!(t11.render(), GOLDEN_11);
    let flags = conjecture_check(&t11);
    assert_eq!(flags, vec![false, false, false, false, true, true, true, true]);
    // per assignment: exactly the 8 with ε(1) ≠ ε(δ/β)
    for (e, flag) in t11.entries.iter().zip(conjecture_flags(&t11)) {
        assert_eq!(flag, e.signs[1] != e.signs[2], "{:?}", e.signs);
    }
    let t12 = alpha_table_symbolic(Family::Quadratic12).unwrap();
    assert_eq!(t12.render(), GOLDEN_12);
    assert!(conjecture_check(&t12).iter().all(|&f| f));
    assert!(t12.entries.iter().all(|e| e.m.const_part < Rational::zero()));
}

#[test]
fn table_rows_named_in_text() {
    let t = alpha_table_symbolic(Family::Linear11Distinct).unwrap();
    let last = t.rows.last().unwrap();
    assert_eq!(last.columns, ["-", "±", "∓", "-"]);
    assert_eq!(last.m_text, "0");
    assert_eq!(t.rows[5].m_text, "N0 - 1");
    let t12 = alpha_table_symbolic(Family::Quadratic12).unwrap();
    assert!(t12.rows.iter().filter(|r| r.columns[0] == "-").all(|r| r.m_text == "-1"));
}

#[test]
fn laurent_data_of_the_linear_family() {
    let (beta, delta, n0, s) = (q(2, 1), q(3, 1), 2u32, q(1, 1));
    let r = family11(&beta, &delta, n0, &s).unwrap().2.r;
    let shat = &s / (&delta - &beta);
    let quarter = q(1, 4);
    let at = |c: Point| laurent_at(&r, &c, 4).unwrap();
    assert_eq!(at(Point::Finite(q(0, 1))).coeff(-2), q((n0 * (n0 + 2)) as i64, 4));
    let mid = &quarter * (q(-1, 1) + &shat * &shat);
    assert_eq!(at(Point::Finite(q(1, 1))).coeff(-2), mid);
    assert_eq!(at(Point::Finite(&delta / &beta)).coeff(-2), mid);
    // N0(N0−2)/4 = 0 here; the first nonzero term at ∞ sits deeper
    assert_eq!(at(Point::Infinity).coeff(2), q(0, 1));
    let r5 = family11(&beta, &delta, 5, &s).unwrap().2.r;
    assert_eq!(laurent_at(&r5, &Point::Infinity, 4).unwrap().coeff(2), q(15, 4));
}

#[test]
fn quadratic_family_closed_form_potential() {
    for (b, d, s) in [(q(2, 1), q(3, 1), q(5, 7)), (q(5, 2), q(7, 3), q(-3, 1))] {
        let (_, nf) = build_12_ode(&b, &d, 2, &s).unwrap();
        let text = format!(
            "(({b})^2*z^3 - ({b})*(({b}) + 2*({d}))*z^2 - ({d})*(4*({s}) - 2*({b}) + ({d}))*z + ({d})^2)/(4*({d})^2*z^2*(z-1))"
        );
        assert_eq!(nf.r, parse_rational_function(&text, 'z').unwrap());
        assert_eq!(laurent_at(&nf.r, &Point::Finite(q(1, 1)), 3).unwrap().residue(), -(&s / &d));
        assert_eq!(laurent_at(&nf.r, &Point::Infinity, 3).unwrap().coeff(0), (&b * &b) / (q(4, 1) * &d * &d));
    }
}

#[test]
fn normal_form_identity_and_lift() {
    for (b, d, n0, s) in [(q(2, 1), q(3, 1), 0u32, q(1, 3)), (q(1, 1), q(1, 1), 4, q(-2, 5)), (q(7, 2), q(1, 5), 3, q(9, 1))] {
        let (first, lifted, nf) = family11(&b, &d, n0, &s).unwrap();
        let f = first.f().unwrap();
        assert!(lifted.apply_log_derivative(&f).is_zero());
        // 2ψ' + aψ = 0
        let a = lifted.a().unwrap();
        assert!((&nf.psi.log_derivative().scale(&q(2, 1)) + a).is_zero());
    }
}

#[test]
fn singularity_structure() {
    let r = family11(&q(3, 1), &q(2, 1), 3, &q(1, 2)).unwrap().2.r;
    let inv = singularity_inventory(&r).unwrap();
    assert_eq!(inv.len(), 4);
    assert!(inv.iter().all(|s| s.kind == "regular"));
    assert!(heun_label(&inv).starts_with("general Heun"));

    let r = family11(&q(2, 1), &q(2, 1), 3, &q(1, 2)).unwrap().2.r;
    let inv = singularity_inventory(&r).unwrap();
    let one = inv.iter().find(|s| s.location == Point::Finite(q(1, 1))).unwrap();
    assert_eq!((one.order, one.kind), (4, "irregular"));
    assert!(heun_label(&inv).starts_with("confluent Heun"));

    let r = build_12_ode(&q(1, 1), &q(1, 1), 3, &q(2, 1)).unwrap().1.r;
    let inv = singularity_inventory(&r).unwrap();
    let orders: Vec<(Point, i64)> = inv.iter().map(|s| (s.location.clone(), s.order)).collect();
    assert_eq!(orders, vec![(Point::Finite(q(0, 1)), 2), (Point::Finite(q(1, 1)), 1), (Point::Infinity, 0)]);
    assert!(heun_label(&inv).starts_with("confluent Heun"));
}

#[test]
fn proposition1_distinct_rates() {
    let (b, d) = (q(3, 1), q(2, 1));
    let samples = sample_s(Family::Linear11Distinct, &b, &d, DEFAULT_SAMPLE_COUNT, DEFAULT_SAMPLE_SEED);
    let v = proposition1_certificate(&b, &d, 2, &samples).unwrap();
    assert!(v.integrable && v.consistent, "{}", v.to_json());
    let SampleOutcomes::Certificates(outs) = &v.outcomes else { panic!() };
    assert!(outs.iter().all(|o| o.omega_matches_display == Some(true)));
}

#[test]
fn proposition1_equal_rates() {
    let v = proposition1_certificate(&q(1, 1), &q(1, 1), 2, &[q(1, 1)]).unwrap();
    assert!(v.integrable, "{}", v.to_json());
    let SampleOutcomes::Certificates(outs) = &v.outcomes else { panic!() };
    let g = outs[0].g_exact.as_ref().unwrap();
    assert_eq!(g.exponent, parse_rational_function("1/(1-z)", 'z').unwrap());
    assert_eq!(outs[0].equal_rate_structure, Some(true));
}

#[test]
fn proposition1_empty_population() {
    let v = proposition1_certificate(&q(2, 1), &q(3, 1), 0, &[q(1, 2), q(-3, 7)]).unwrap();
    assert!(v.integrable, "{}", v.to_json());
}

#[test]
fn proposition2_audit() {
    let v = proposition2_certificate(&q(1, 1), &q(1, 1), 3, &[q(2, 1)]).unwrap();
    assert_eq!(v.verdict, "non-integrable");
    let SampleOutcomes::Audits(a) = &v.outcomes else { panic!() };
    assert_eq!(a[0].case1_degrees, ["-2", "-1"]);
    assert!(a[0].case3_reason.contains("order at infinity is 0"));
    let v = proposition2_certificate(&q(5, 2), &q(7, 3), 1, &[q(-3, 1)]).unwrap();
    assert!(v.consistent && !v.integrable);
}

#[test]
fn forcing_case2_on_the_linear_family_terminates() {
    let r = family11(&q(3, 1), &q(2, 1), 1, &q(1, 1)).unwrap().2.r;
    if let Some(c) = kovacic::case2(&r).unwrap() {
        assert!(c.residual(&r).is_zero());
    }
    assert_eq!(kovacic(&r).unwrap().verdict.label(), "case1");
}

#[test]
fn appendix_c_patterns() {
    use AppendixPattern::*;
    for (b, d) in [(q(2, 1), q(3, 1)), (q(3, 1), q(2, 1))] {
        for m in 0..=5i64 {
            let s = s_for_shat(&b, &d, &q(m, 1));
            let rec = appendix_c_case(&b, &d, 2, &s, MinusMinusMinusMinus, Convention::Direct).unwrap();
            assert_eq!(rec.candidate_passes, Some(true), "{rec:?}");
            assert_eq!(rec.reconstruction_exact, Some(true));
            let s = s_for_shat(&b, &d, &q(-m, 1));
            let rec = appendix_c_case(&b, &d, 2, &s, MinusPlusPlusMinus, Convention::Direct).unwrap();
            assert_eq!(rec.candidate_passes, Some(true), "{rec:?}");
            assert_eq!(rec.reconstruction_exact, Some(true));
        }
    }
    // m = N0 − 1 = 1 with δ = s − β
    let rec = appendix_c_case(&q(1, 1), &q(2, 1), 2, &q(3, 1), PlusPlusMinusMinus, Convention::Mirrored).unwrap();
    assert_eq!(rec.candidate.as_deref(), Some("z - 2/3"));
    assert_eq!(rec.candidate_passes, Some(true));
    let rec = appendix_c_case(&q(1, 1), &q(2, 1), 2, &q(4, 1), PlusPlusMinusMinus, Convention::Mirrored).unwrap();
    assert_eq!(rec.candidate_passes, Some(false));
    let rec = appendix_c_case(&q(1, 1), &q(2, 1), 1, &q(3, 1), PlusPlusMinusMinus, Convention::Mirrored).unwrap();
    assert_eq!(rec.candidate_passes, Some(false));
    let rec = appendix_c_case(&q(1, 1), &q(2, 1), 1, &q(3, 1), PlusMinusPlusMinus, Convention::Mirrored).unwrap();
    assert_eq!(rec.riccati_defect, "0");
    assert_eq!(rec.candidate_passes, Some(true));
}

#[test]
fn appendix_c_direct_convention() {
    use AppendixPattern::*;
    // against the potential at +s the last two patterns trade places
    let rec = appendix_c_case(&q(1, 1), &q(2, 1), 1, &q(3, 1), PlusPlusMinusMinus, Convention::Direct).unwrap();
    assert_eq!(rec.riccati_defect, "0");
    assert_eq!(rec.candidate_passes, Some(true));
    let rec = appendix_c_case(&q(1, 1), &q(2, 1), 2, &q(3, 1), PlusPlusMinusMinus, Convention::Direct).unwrap();
    assert_eq!(rec.searched, None);
    let rec = appendix_c_case(&q(1, 1), &q(2, 1), 1, &q(3, 1), PlusMinusPlusMinus, Convention::Direct).unwrap();
    assert_eq!(rec.riccati_defect, "3/(z^3 - 3*z^2 + 2*z)");
    assert_eq!(rec.candidate_passes, Some(false));
}

#[test]
fn sweep_is_schedule_independent() {
    let (b, d) = (q(2, 1), q(5, 1));
    let samples = sample_s(Family::Quadratic12, &b, &d, 6, 3);
    let a = proposition2_certificate_with(&b, &d, 2, &samples, Execution::Sequential).unwrap();
    let c = proposition2_certificate(&b, &d, 2, &samples).unwrap();
    assert_eq!(a.to_json().to_string(), c.to_json().to_string());
}
