//! Cross-checks of one family: exact certificates, the PDE, the truncated
//! master equation and a Gillespie ensemble.

use birthdeath::{gillespie, integrate_master, vector_moments, BirthDeathModel, ClosedFormG, GillespieConfig, DistributionSnapshot};
use galois_pipeline::{proposition1_certificate, proposition2_certificate, sample_s};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{FamilyArg, VerifyArgs};
use crate::commands::{family_of, float_rates, render_json, Config};
use crate::{CliError, Outcome};

pub const PDE_TOL: f64 = 1e-6;
pub const PDE_STEP: f64 = 1e-5;
pub const MASTER_TOL: f64 = 1e-6;
pub const MASS_TOL: f64 = 1e-8;
pub const SIGMAS: f64 = 3.0;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub pass: bool,
    pub checks: Vec<Check>,
}

/// `|x − want| ≤ k·se`, with `se = 0` demanding agreement to round-off.
fn within_se(x: f64, want: f64, se: f64) -> bool {
    (x - want).abs() <= (SIGMAS * se).max(1e-12)
}

fn kovacic_check(a: &VerifyArgs) -> Result<Check, CliError> {
    let (beta, delta) = (&a.rates.beta, &a.rates.delta);
    let family = family_of(a.family, beta, delta);
    let samples = sample_s(family, beta, delta, a.samples, a.sample_seed);
    let (v, pass) = match a.family {
        FamilyArg::Linear => {
            let v = proposition1_certificate(beta, delta, a.n0, &samples)?;
            let pass = v.integrable && v.consistent;
            (v, pass)
        }
        FamilyArg::Quadratic => {
            let v = proposition2_certificate(beta, delta, a.n0, &samples)?;
            let pass = !v.integrable && v.consistent;
            (v, pass)
        }
    };
    Ok(Check {
        name: "kovacic_samples",
        pass,
        detail: json!({
            "family": family,
            "samples": samples.len(),
            "verdict": v.verdict,
            "consistent": v.consistent,
            "heun": v.heun,
        }),
    })
}

/// Central-difference residual on a 10 × 10 grid of `[0.05, 0.95] × [0.1, 5]`.
pub fn pde_check(g: &ClosedFormG) -> Check {
    let mut worst = 0.0f64;
    for i in 0..10 {
        let z = 0.05 + 0.9 * i as f64 / 9.0;
        for j in 0..10 {
            let t = 0.1 + 4.9 * j as f64 / 9.0;
            worst = worst.max(g.pde_residual(z, t, PDE_STEP).abs());
        }
    }
    Check { name: "pde_residual", pass: worst <= PDE_TOL, detail: json!({"points": 100, "max_residual": worst, "tolerance": PDE_TOL}) }
}

fn snapshot_detail(s: &DistributionSnapshot) -> Value {
    json!({
        "nmax": s.nmax,
        "dt": s.dt,
        "refinements": s.refinements,
        "leakage": s.leakage,
        "mass_defect": s.mass_defect,
        "warning": s.warning,
    })
}

fn master_check(snap: &DistributionSnapshot, series: Option<&[f64]>) -> Check {
    let mut detail = snapshot_detail(snap);
    let mut pass = snap.warning.is_none() && snap.mass_defect.abs() <= MASS_TOL;
    if let Some(c) = series {
        let sup = c.iter().zip(&snap.p).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        detail["sup_diff_vs_closed_form"] = json!(sup);
        pass &= sup <= MASTER_TOL;
    }
    Check { name: "master_equation", pass, detail }
}

fn gillespie_check(model: &BirthDeathModel, a: &VerifyArgs, want_p0: f64, want_mean: f64, want_var: f64) -> Check {
    let ens = gillespie(model, &GillespieConfig::new(a.t, a.paths, a.seed));
    let s = ens.summary();
    let n = a.paths as f64;
    let se_p = (want_p0 * (1.0 - want_p0) / n).max(0.0).sqrt();
    let se_mean = (want_var / n).max(0.0).sqrt();
    let pass = ens.capped_paths == 0 && within_se(s.extinct_fraction, want_p0, se_p) && within_se(s.mean, want_mean, se_mean);
    Check {
        name: "gillespie",
        pass,
        detail: json!({
            "paths": a.paths,
            "seed": a.seed,
            "extinct_fraction": s.extinct_fraction,
            "expected_extinction": want_p0,
            "mean": s.mean,
            "expected_mean": want_mean,
            "sigmas": SIGMAS,
            "capped_paths": ens.capped_paths,
        }),
    }
}

pub fn verify_report(a: &VerifyArgs) -> Result<VerifyReport, CliError> {
    if a.samples == 0 || a.paths == 0 {
        return Err(CliError::Input("--samples and --paths must be at least 1".into()));
    }
    let (beta, delta) = float_rates(&a.rates);
    let mut checks = vec![kovacic_check(a)?];
    match a.family {
        FamilyArg::Linear => {
            let model = BirthDeathModel::linear(beta, delta, a.n0 as u64)?;
            let g = ClosedFormG::new(beta, delta, a.n0 as u64);
            checks.push(pde_check(&g));
            let snap = integrate_master(&model, a.t, a.nmax, a.dt);
            let series = g.series_coefficients(a.t, a.nmax);
            checks.push(master_check(&snap, Some(&series)));
            let (mean, var) = g.moments(a.t);
            checks.push(gillespie_check(&model, a, g.extinction(a.t), mean, var));
        }
        FamilyArg::Quadratic => {
            let model = BirthDeathModel::new(beta, delta, 1, 2, a.n0 as u64)?;
            let snap = integrate_master(&model, a.t, a.nmax, a.dt);
            checks.push(master_check(&snap, None));
            let (mean, var) = vector_moments(&snap.p);
            checks.push(gillespie_check(&model, a, snap.p[0], mean, var));
        }
    }
    Ok(VerifyReport { pass: checks.iter().all(|c| c.pass), checks })
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let report = verify_report(a)?;
    let mut cfg = Config::new("verify");
    cfg.push("family", a.family.label())
        .rates(&a.rates)
        .push("n0", a.n0)
        .push("samples", a.samples)
        .push("sample_seed", a.sample_seed)
        .push("t", a.t)
        .push("nmax", a.nmax)
        .push("dt", a.dt)
        .push("paths", a.paths)
        .push("seed", a.seed);
    let doc = json!({"pass": report.pass, "checks": report.checks});
    Ok(Outcome { text: render_json(doc, &cfg), ok: report.pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_error_window() {
        assert!(within_se(0.52, 0.5, 0.01));
        assert!(!within_se(0.54, 0.5, 0.01));
        assert!(within_se(1.0, 1.0, 0.0));
        assert!(!within_se(0.999, 1.0, 0.0));
    }

    #[test]
    fn pde_check_on_both_rate_orders() {
        assert!(pde_check(&ClosedFormG::new(3.0, 2.0, 2)).pass);
        assert!(pde_check(&ClosedFormG::new(2.0, 3.0, 1)).pass);
        assert!(pde_check(&ClosedFormG::new(1.0, 1.0, 3)).pass);
    }
}
