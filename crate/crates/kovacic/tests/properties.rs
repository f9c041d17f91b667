use exactmath::{q, Polynomial, Rational, RationalFunction};
use kovacic::{kovacic, kovacic_with, Execution, Verdict};
use proptest::prelude::*;

/// `ω = Σ a_i/(x − c_i) + p(x)` with distinct integer `c_i`.
fn riccati_omega() -> impl Strategy<Value = RationalFunction<Rational>> {
    (prop::collection::btree_map(-3i64..=3, (-4i64..=4, 1i64..=2), 0..=2), prop::collection::vec(-2i64..=2, 0..=2)).prop_map(
        |(poles, poly)| {
            let mut w = RationalFunction::from_poly(Polynomial::new(poly.into_iter().map(|c| q(c, 1)).collect()));
            for (c, (a, d)) in poles {
                w = &w + &RationalFunction::pole_term(q(a, d), q(c, 1), 1);
            }
            w
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Potentials of the form ω' + ω² always admit an exponential solution.
    #[test]
    fn riccati_potentials_are_case1(w in riccati_omega()) {
        let r = &w.derivative() + &(&w * &w);
        let res = kovacic(&r).unwrap();
        match &res.verdict {
            Verdict::Case1(c) => prop_assert!(c.residual(&r).is_zero()),
            v => prop_assert!(false, "expected case 1 for r = {}, got {}", r, v.label()),
        }
    }

    #[test]
    fn schedule_does_not_change_output(w in riccati_omega(), k in -3i64..=3) {
        let r = &(&w.derivative() + &(&w * &w)) + &RationalFunction::constant(q(k, 4));
        prop_assume!(!r.is_zero());
        let a = kovacic_with(&r, Execution::Sequential).unwrap();
        let b = kovacic(&r).unwrap();
        prop_assert_eq!(a.to_json("x"), b.to_json("x"));
    }
}
