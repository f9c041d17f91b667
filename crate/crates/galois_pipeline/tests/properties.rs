use exactmath::{Rational, RationalFunction};
use galois_pipeline::*;
use num_traits::Zero;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (1i64..=12, 1i64..=6).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    (1i64..=30, 1i64..=7, any::<bool>()).prop_map(|(n, d, neg)| Rational::new((if neg { -n } else { n }).into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lift_annihilates_exp_integral(beta in rat(), delta in rat(), n0 in 0u32..6, s in nonzero()) {
        let (first, lifted, nf) = family11(&beta, &delta, n0, &s).unwrap();
        let f = first.f().unwrap();
        prop_assert!(lifted.apply_log_derivative(&f).is_zero());
        // G = Hψ turns the lifted equation into H'' = rH: with w = G'/G = f,
        // v = w + a/2 satisfies v' + v² = r
        let a = lifted.a().unwrap();
        let v = &f + &a.scale(&Rational::new(1.into(), 2.into()));
        prop_assert_eq!(&(&v.derivative() + &(&v * &v)), &nf.r);
    }

    #[test]
    fn reconstruction_reproduces_f(beta in rat(), delta in rat(), n0 in 0u32..5, s in nonzero()) {
        prop_assume!(beta != delta && !(&s / (&delta - &beta)).is_integer());
        let v = proposition1_certificate(&beta, &delta, n0, &[s]).unwrap();
        prop_assert!(v.integrable, "{}", v.to_json());
    }

    #[test]
    fn quadratic_family_is_case4(beta in rat(), delta in rat(), s in nonzero()) {
        let v = proposition2_certificate(&beta, &delta, 2, &[s]).unwrap();
        prop_assert!(v.consistent && !v.integrable, "{}", v.to_json());
    }

    #[test]
    fn normal_form_of_arbitrary_coefficients(n in -5i64..5, k in 1i64..4) {
        // a = n/z, b = k/z²: r = ½a' + ¼a² − b
        let a = RationalFunction::pole_term(Rational::from_integer(n.into()), Rational::zero(), 1);
        let b = RationalFunction::pole_term(Rational::from_integer(k.into()), Rational::zero(), 2);
        let nf = normal_form(&a, &b).unwrap();
        let c = Rational::new((n * n - 2 * n - 4 * k).into(), 4.into());
        prop_assert_eq!(nf.r, RationalFunction::pole_term(c, Rational::zero(), 2));
    }
}
