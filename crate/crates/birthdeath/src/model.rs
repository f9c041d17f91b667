use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("rates must be positive (beta = {beta}, delta = {delta})")]
    NonPositiveRate { beta: f64, delta: f64 },
    #[error("closed form requires b = d = 1, got b = {b}, d = {d}")]
    NotLinear { b: u32, d: u32 },
    #[error("closed-form variant does not match parameters: {0}")]
    VariantMismatch(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

/// Rates `B_N = β N^b`, `D_N = δ N^d` with initial count `N0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BirthDeathModel {
    pub beta: f64,
    pub delta: f64,
    pub b_exp: u32,
    pub d_exp: u32,
    pub n0: u64,
}

impl BirthDeathModel {
    pub fn new(beta: f64, delta: f64, b_exp: u32, d_exp: u32, n0: u64) -> Result<Self, ModelError> {
        if !(beta > 0.0 && delta > 0.0) {
            return Err(ModelError::NonPositiveRate { beta, delta });
        }
        Ok(BirthDeathModel { beta, delta, b_exp, d_exp, n0 })
    }

    pub fn linear(beta: f64, delta: f64, n0: u64) -> Result<Self, ModelError> {
        Self::new(beta, delta, 1, 1, n0)
    }

    /// `(B_N, D_N)`; `D_0 = 0` always, and `B_0 = 0` whenever `b ≥ 1`.
    pub fn rates(&self, n: u64) -> (f64, f64) {
        let nf = n as f64;
        let birth = self.beta * nf.powi(self.b_exp as i32);
        let death = if n == 0 { 0.0 } else { self.delta * nf.powi(self.d_exp as i32) };
        (birth, death)
    }
}
