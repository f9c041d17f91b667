//! Closed-form generating function of the linear birth-death process.

use serde::Serialize;

use crate::{BirthDeathModel, ModelError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Variant {
    /// `β ≠ δ`.
    LinearDistinct,
    /// `β = δ`.
    LinearEqual,
}

/// `g(z, t) = q(z, t)^{N0}` with `q` a Möbius map in `z`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosedFormG {
    pub variant: Variant,
    pub beta: f64,
    pub delta: f64,
    pub n0: u64,
}

impl ClosedFormG {
    pub fn new(beta: f64, delta: f64, n0: u64) -> Self {
        let variant = if beta == delta { Variant::LinearEqual } else { Variant::LinearDistinct };
        ClosedFormG { variant, beta, delta, n0 }
    }

    pub fn with_variant(variant: Variant, beta: f64, delta: f64, n0: u64) -> Result<Self, ModelError> {
        let g = Self::new(beta, delta, n0);
        if g.variant != variant {
            return Err(ModelError::VariantMismatch(format!("{variant:?} with beta = {beta}, delta = {delta}")));
        }
        Ok(g)
    }

    pub fn from_model(model: &BirthDeathModel) -> Result<Self, ModelError> {
        if model.b_exp != 1 || model.d_exp != 1 {
            return Err(ModelError::NotLinear { b: model.b_exp, d: model.d_exp });
        }
        Ok(Self::new(model.beta, model.delta, model.n0))
    }

    /// `(A, B, C, D)` with `q = (A + Bz)/(C + Dz)`, scaled so that the
    /// exponential entering is `e^{−|β−δ|t} ≤ 1`.
    pub fn mobius(&self, t: f64) -> (f64, f64, f64, f64) {
        let (b, d) = (self.beta, self.delta);
        match self.variant {
            Variant::LinearDistinct if b > d => {
                let e = ((d - b) * t).exp();
                (d * e - d, d - b * e, d * e - b, b - b * e)
            }
            Variant::LinearDistinct => {
                let e = ((b - d) * t).exp();
                (d - d * e, d * e - b, d - b * e, b * e - b)
            }
            Variant::LinearEqual => (d * t, 1.0 - d * t, d * t + 1.0, -d * t),
        }
    }

    fn check(z: f64, t: f64) -> Result<(), ModelError> {
        if !(0.0..=1.0).contains(&z) || t < 0.0 || !t.is_finite() {
            return Err(ModelError::OutOfRange(format!("z = {z}, t = {t}")));
        }
        Ok(())
    }

    /// `g(z, t)` for `0 ≤ z ≤ 1`, `t ≥ 0`.
    pub fn eval(&self, z: f64, t: f64) -> Result<f64, ModelError> {
        Self::check(z, t)?;
        Ok(self.eval_unchecked(z, t))
    }

    /// `g` without domain checks (used by finite-difference probes).
    pub fn eval_unchecked(&self, z: f64, t: f64) -> f64 {
        (1.0 - self.one_minus_q(z, t)).powi(self.n0 as i32)
    }

    /// `1 − q(z, t)` in a form free of cancellation for either sign of `β − δ`.
    fn one_minus_q(&self, z: f64, t: f64) -> f64 {
        let (b, d) = (self.beta, self.delta);
        let w = 1.0 - z;
        match self.variant {
            Variant::LinearEqual => w / (1.0 + d * t * w),
            Variant::LinearDistinct => {
                let k = b - d;
                if k > 0.0 {
                    let e = (-k * t).exp();
                    k * w / (-b * w * (-k * t).exp_m1() + k * e)
                } else {
                    let e = (k * t).exp();
                    k * w * e / (b * w * (k * t).exp_m1() + k)
                }
            }
        }
    }

    /// Taylor coefficients `P_0..P_nmax` of `g(·, t)` at `z = 0`.
    pub fn series_coefficients(&self, t: f64, nmax: usize) -> Vec<f64> {
        let (a, b, c, d) = self.mobius(t);
        // 1/(C + Dz) = (1/C) Σ (−D/C)^k z^k
        let ratio = -d / c;
        let mut recip = Vec::with_capacity(nmax + 1);
        let mut term = 1.0 / c;
        for _ in 0..=nmax {
            recip.push(term);
            term *= ratio;
        }
        let mut q = vec![0.0; nmax + 1];
        for k in 0..=nmax {
            q[k] = a * recip[k] + if k > 0 { b * recip[k - 1] } else { 0.0 };
        }
        series_pow(&q, self.n0, nmax)
    }

    /// `(mean, variance)` from `g_z(1, t)` and `g_zz(1, t)`.
    pub fn moments(&self, t: f64) -> (f64, f64) {
        let (a, b, c, d) = self.mobius(t);
        let n = self.n0 as f64;
        let w = c + d;
        let det = b * c - a * d;
        let q1 = det / (w * w);
        let q2 = -2.0 * d * det / (w * w * w);
        let mean = n * q1;
        let g2 = n * (n - 1.0) * q1 * q1 + n * q2;
        (mean, g2 + mean - mean * mean)
    }

    /// `P_0(t) = g(0, t)`.
    pub fn extinction(&self, t: f64) -> f64 {
        self.eval_unchecked(0.0, t)
    }

    /// `g_t − (1 − z)(δ − βz) g_z` by central differences of step `h`.
    pub fn pde_residual(&self, z: f64, t: f64, h: f64) -> f64 {
        let gt = (self.eval_unchecked(z, t + h) - self.eval_unchecked(z, t - h)) / (2.0 * h);
        let gz = (self.eval_unchecked(z + h, t) - self.eval_unchecked(z - h, t)) / (2.0 * h);
        gt - (1.0 - z) * (self.delta - self.beta * z) * gz
    }
}

fn convolve(a: &[f64], b: &[f64], nmax: usize) -> Vec<f64> {
    let mut out = vec![0.0; nmax + 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0.0 {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(nmax + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `q^k` truncated at degree `nmax`, by binary powering.
pub fn series_pow(q: &[f64], k: u64, nmax: usize) -> Vec<f64> {
    let mut acc = vec![0.0; nmax + 1];
    acc[0] = 1.0;
    let mut base = q.to_vec();
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            acc = convolve(&acc, &base, nmax);
        }
        e >>= 1;
        if e > 0 {
            base = convolve(&base, &base, nmax);
        }
    }
    acc
}

/// Extinction probability of the linear model from the closed form.
pub fn extinction_probability(model: &BirthDeathModel, t: f64) -> Result<f64, ModelError> {
    let g = ClosedFormG::from_model(model)?;
    if t < 0.0 {
        return Err(ModelError::OutOfRange(format!("t = {t}")));
    }
    let n = model.n0 as i32;
    let (b, d) = (model.beta, model.delta);
    Ok(match g.variant {
        Variant::LinearDistinct => {
            let e = ((b - d) * t).exp();
            (d * (e - 1.0) / (b * e - d)).powi(n)
        }
        Variant::LinearEqual => (d * t / (d * t + 1.0)).powi(n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_values() {
        for g in [ClosedFormG::new(2.0, 3.0, 3), ClosedFormG::new(1.0, 1.0, 2), ClosedFormG::new(3.0, 2.0, 1)] {
            for t in [0.0, 0.7, 3.0] {
                assert!((g.eval(1.0, t).unwrap() - 1.0).abs() < 1e-14);
            }
            assert!((g.eval(0.5, 0.0).unwrap() - 0.5f64.powi(g.n0 as i32)).abs() < 1e-15);
        }
        let g = ClosedFormG::new(1.0, 1.0, 2);
        assert!((g.eval(0.0, 1.0).unwrap() - 0.25).abs() < 1e-15);
        assert!(g.eval(1.5, 1.0).is_err());
        assert!(ClosedFormG::with_variant(Variant::LinearEqual, 2.0, 3.0, 1).is_err());
    }

    #[test]
    fn series_head_and_moments() {
        let g = ClosedFormG::new(2.0, 3.0, 4);
        let c = g.series_coefficients(1.0, 60);
        assert!((c[0] - g.extinction(1.0)).abs() < 1e-15);
        let (mean, _) = g.moments(1.0);
        assert!((mean - 4.0 * (-1.0f64).exp()).abs() < 1e-13);
        let c0 = g.series_coefficients(0.0, 10);
        assert_eq!(c0.iter().position(|&v| v == 1.0), Some(4));
        let (m, v) = g.moments(0.0);
        assert!((m - 4.0).abs() < 1e-14 && v.abs() < 1e-12);
        let (m, _) = ClosedFormG::new(1.5, 1.5, 3).moments(2.0);
        assert!((m - 3.0).abs() < 1e-13);
    }

    #[test]
    fn extinction_examples() {
        let m = BirthDeathModel::linear(1.0, 1.0, 2).unwrap();
        assert!((extinction_probability(&m, 1.0).unwrap() - 0.25).abs() < 1e-15);
        let m = BirthDeathModel::linear(2.0, 3.0, 1).unwrap();
        assert_eq!(extinction_probability(&m, 0.0).unwrap(), 0.0);
        assert!((extinction_probability(&m, 40.0).unwrap() - 1.0).abs() < 1e-12);
        let m0 = BirthDeathModel::linear(2.0, 3.0, 0).unwrap();
        assert_eq!(extinction_probability(&m0, 0.0).unwrap(), 1.0);
    }
}
