//! Numerical second solution `ζ2 = ζ1 ∫ dx/ζ1²` from a case-1 certificate.

use exactmath::{partial_fractions, rational_to_f64, ExactError, Hyperexponential, RadicalNumber, RationalFunction};
use num_complex::Complex64;
use thiserror::Error;

use crate::case1::CandidateOmega;
use crate::numeric::real_roots;

#[derive(Debug, Error, PartialEq)]
pub enum QuadratureError {
    #[error("quadrature across singularity at {0}")]
    AcrossSingularity(f64),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("adaptive quadrature failed to converge on [{0}, {1}]")]
    NoConvergence(f64, f64),
}

const GK_NODES: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const K15_W: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const G7_W: [f64; 4] = [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut k = Complex64::new(0.0, 0.0);
    let mut g = Complex64::new(0.0, 0.0);
    for i in 0..7 {
        let x = h * GK_NODES[i];
        let s = f(c - x) + f(c + x);
        k += s * K15_W[i];
        if i % 2 == 1 {
            g += s * G7_W[i / 2];
        }
    }
    let fc = f(c);
    k += fc * K15_W[7];
    g += fc * G7_W[3];
    (k * h, ((k - g) * h).norm())
}

/// Adaptive Gauss–Kronrod (7/15) with absolute tolerance `tol`.
pub fn integrate<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, tol: f64) -> Result<Complex64, QuadratureError> {
    fn rec<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> Result<Complex64, QuadratureError> {
        let (v, err) = gk15(f, a, b);
        if err <= tol.max(1e-15 * v.norm()) {
            return Ok(v);
        }
        if depth == 0 {
            return Err(QuadratureError::NoConvergence(a, b));
        }
        let m = 0.5 * (a + b);
        Ok(rec(f, a, m, tol / 2.0, depth - 1)? + rec(f, m, b, tol / 2.0, depth - 1)?)
    }
    if a == b {
        return Ok(Complex64::new(0.0, 0.0));
    }
    rec(f, a, b, tol, 40)
}

/// Evaluator for `ζ1 = P e^{∫ω}` and `ζ2 = ζ1 ∫_{x0}^{x} dt/ζ1(t)²` on a
/// fixed pole-free interval.
pub struct SecondSolution {
    zeta1: Hyperexponential<RadicalNumber>,
    dlog: RationalFunction<RadicalNumber>,
    pub x0: f64,
    pub interval: (f64, f64),
    pub tol: f64,
}

impl SecondSolution {
    pub fn new(cert: &CandidateOmega, interval: (f64, f64)) -> Result<Self, QuadratureError> {
        let (lo, hi) = interval;
        let zeta1 = Hyperexponential::exp_integral(&cert.omega)?.with_poly(cert.p.clone());
        for (c, _) in partial_fractions(&cert.omega)?.terms {
            let c = rational_to_f64(&c);
            if c >= lo && c <= hi {
                return Err(QuadratureError::AcrossSingularity(c));
            }
        }
        for z in real_roots(&cert.p) {
            if z >= lo && z <= hi {
                return Err(QuadratureError::AcrossSingularity(z));
            }
        }
        Ok(SecondSolution { dlog: cert.log_derivative(), zeta1, x0: lo, interval, tol: 1e-12 })
    }

    pub fn zeta1(&self, x: f64) -> Complex64 {
        self.zeta1.eval_c64(x)
    }

    pub fn zeta1_prime(&self, x: f64) -> Complex64 {
        self.dlog.eval_c64(Complex64::new(x, 0.0)) * self.zeta1(x)
    }

    fn inner(&self, x: f64) -> Result<Complex64, QuadratureError> {
        let (lo, hi) = self.interval;
        if x < lo || x > hi {
            return Err(QuadratureError::AcrossSingularity(x));
        }
        integrate(&|t| self.zeta1(t).powi(-2), self.x0, x, self.tol)
    }

    /// `(ζ2(x), ζ2'(x))`.
    pub fn eval(&self, x: f64) -> Result<(Complex64, Complex64), QuadratureError> {
        let i = self.inner(x)?;
        let z1 = self.zeta1(x);
        Ok((z1 * i, self.zeta1_prime(x) * i + z1.inv()))
    }

    /// `ζ1ζ2' − ζ1'ζ2` at `x`.
    pub fn wronskian(&self, x: f64) -> Result<Complex64, QuadratureError> {
        let (z2, dz2) = self.eval(x)?;
        Ok(self.zeta1(x) * dz2 - self.zeta1_prime(x) * z2)
    }
}
