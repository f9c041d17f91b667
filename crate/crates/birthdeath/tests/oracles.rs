use birthdeath::*;

fn sup(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[test]
fn series_matches_master_equation() {
    let m = BirthDeathModel::linear(2.0, 3.0, 2).unwrap();
    let snap = integrate_master(&m, 1.0, 200, 1e-2);
    let g = ClosedFormG::from_model(&m).unwrap();
    let series = g.series_coefficients(1.0, 200);
    assert!(sup(&series, &snap.p) < 1e-6);
    assert!((series[0] - g.eval(0.0, 1.0).unwrap()).abs() < 1e-15);
    assert!(snap.warning.is_none());
}

#[test]
fn equal_rates_extinction() {
    let m = BirthDeathModel::linear(1.0, 1.0, 3).unwrap();
    let snap = integrate_master(&m, 2.0, 200, 1e-2);
    assert!((snap.p[0] - 8.0 / 27.0).abs() < 1e-6);
    assert!((extinction_probability(&m, 2.0).unwrap() - 8.0 / 27.0).abs() < 1e-15);
    assert!((extinction_probability(&BirthDeathModel::linear(1.0, 1.0, 2).unwrap(), 1.0).unwrap() - 0.25).abs() < 1e-15);
}

#[test]
fn long_time_extinction_when_death_dominates() {
    let m = BirthDeathModel::linear(2.0, 3.0, 1).unwrap();
    let p = extinction_probability(&m, 20.0).unwrap();
    let snap = integrate_master(&m, 20.0, 200, 1e-2);
    assert!((p - snap.p[0]).abs() < 1e-6);
    assert!(1.0 - p < 1e-7);
}

#[test]
fn moments_against_differences_and_vector() {
    let g = ClosedFormG::new(2.0, 3.0, 4);
    let (mean, var) = g.moments(1.0);
    assert!((mean - 4.0 * (-1.0f64).exp()).abs() < 1e-12);
    let h = 1e-5;
    let fd = (g.eval_unchecked(1.0 + h, 1.0) - g.eval_unchecked(1.0 - h, 1.0)) / (2.0 * h);
    assert!((fd - mean).abs() < 1e-7);
    let (vm, vv) = vector_moments(&g.series_coefficients(1.0, 200));
    assert!((vm - mean).abs() < 1e-9 && (vv - var).abs() < 1e-8);
    let eq = ClosedFormG::new(1.5, 1.5, 6);
    for t in [0.3, 2.0, 7.0] {
        assert!((eq.moments(t).0 - 6.0).abs() < 1e-10);
    }
    assert_eq!(g.moments(0.0), (4.0, 0.0));
}

#[test]
fn pde_residuals_both_orders() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for g in [ClosedFormG::new(3.0, 2.0, 2), ClosedFormG::new(2.0, 3.0, 2), ClosedFormG::new(1.0, 1.0, 3)] {
        for _ in 0..100 {
            let z = rng.random_range(0.05..0.95);
            let t = rng.random_range(0.1..5.0);
            assert!(g.pde_residual(z, t, 1e-5).abs() <= 1e-6, "{g:?} at ({z}, {t})");
        }
    }
}

#[test]
fn series_mass_is_conserved() {
    for (b, d, n0) in [(2.0, 3.0, 1), (1.0, 1.0, 3), (0.5, 2.0, 5)] {
        let g = ClosedFormG::new(b, d, n0);
        for t in [0.5, 1.0, 5.0, 10.0] {
            let c = g.series_coefficients(t, 200);
            let sum: f64 = c.iter().sum();
            assert!(sum <= 1.0 + 1e-9 && c.iter().all(|&v| v >= -1e-12));
            if b <= d && !(b == d && t > 5.0) {
                assert!((1.0 - sum).abs() < 1e-9, "{b} {d} {n0} {t}: {sum}");
            }
        }
    }
}

#[test]
fn gillespie_extinction_matches_closed_form() {
    let m = BirthDeathModel::linear(1.0, 1.0, 3).unwrap();
    let e = gillespie(&m, &GillespieConfig::new(2.0, 100_000, 2024));
    let p: f64 = 8.0 / 27.0;
    let se = (p * (1.0 - p) / 1e5).sqrt();
    assert!((e.extinct_fraction() - p).abs() < 3.0 * se, "{}", e.extinct_fraction());
    assert_eq!(e.capped_paths, 0);
}

#[test]
fn gillespie_mean_matches_master_for_quadratic_death() {
    let m = BirthDeathModel::new(1.0, 1.0, 1, 2, 5).unwrap();
    let e = gillespie(&m, &GillespieConfig::new(1.0, 100_000, 99));
    let snap = integrate_master(&m, 1.0, 200, 1e-3);
    let (mean, _) = vector_moments(&snap.p);
    let s = e.summary();
    let se = (s.var / s.n_paths as f64).sqrt();
    assert!((s.mean - mean).abs() < 3.0 * se, "{} vs {mean}", s.mean);
}

#[test]
fn leakage_warning_on_tight_truncation() {
    let m = BirthDeathModel::linear(2.0, 3.0, 5).unwrap();
    let snap = integrate_master(&m, 2.0, 10, 1e-2);
    assert!(snap.leakage > LEAKAGE_WARN);
    assert!(snap.warning.as_deref().unwrap().starts_with("truncation insufficient"));
    assert!(snap.mass_defect.abs() < 1e-12);
}

#[test]
fn csv_and_summary_shapes() {
    let mut buf = Vec::new();
    write_distribution_csv(&mut buf, 0.5, &[0.25, 0.75]).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert_eq!(text.lines().next(), Some("t,N,P_N"));
    assert_eq!(text.lines().count(), 3);

    let m = BirthDeathModel::linear(1.0, 2.0, 2).unwrap();
    let mut cfg = GillespieConfig::new(0.5, 3, 5);
    cfg.record_events = true;
    let e = gillespie(&m, &cfg);
    let mut buf = Vec::new();
    write_trajectories_csv(&mut buf, &e).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert!(text.starts_with("path,t_event,N\n0,"));
    let v = serde_json::to_value(e.summary()).unwrap();
    for k in ["seed", "n_paths", "mean", "var", "extinct_fraction", "ci"] {
        assert!(v.get(k).is_some(), "{k}");
    }
}
