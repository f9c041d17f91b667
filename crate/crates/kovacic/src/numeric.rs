//! Floating-point checks of algebraic Riccati certificates.

use exactmath::{Field, Polynomial, Rational, RationalFunction};
use num_complex::Complex64;

/// All complex roots of `Σ c_k z^k` by Durand–Kerner iteration.
pub fn poly_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.last().is_some_and(|v| v.norm() == 0.0) {
        c.pop();
    }
    let n = c.len().saturating_sub(1);
    if n == 0 {
        return Vec::new();
    }
    let lead = c[n];
    let monic: Vec<Complex64> = c.iter().map(|v| v / lead).collect();
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, v| acc * z + v);
    let radius = 1.0 + monic[..n].iter().map(|v| v.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * radius.min(10.0).max(0.5)).collect();
    for _ in 0..2000 {
        let mut delta: f64 = 0.0;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}

/// Riccati residual `ω' + ω² − r` at `x0` for every root `ω` of
/// `F(x, ω) = Σ_i c_i(x) ω^i`, with `ω'` from implicit differentiation.
pub fn algebraic_riccati_residuals<F: Field>(coeffs: &[RationalFunction<F>], r: &RationalFunction<Rational>, x0: f64) -> Vec<(Complex64, f64)> {
    let x = Complex64::new(x0, 0.0);
    let cs: Vec<Complex64> = coeffs.iter().map(|c| c.eval_c64(x)).collect();
    let dcs: Vec<Complex64> = coeffs.iter().map(|c| c.derivative().eval_c64(x)).collect();
    let rv = r.eval_c64(x);
    poly_roots(&cs)
        .into_iter()
        .map(|w| {
            let fx: Complex64 = dcs.iter().enumerate().map(|(i, d)| d * w.powu(i as u32)).sum();
            let fw: Complex64 = cs.iter().enumerate().skip(1).map(|(i, c)| c * (i as f64) * w.powu(i as u32 - 1)).sum();
            let dw = -fx / fw;
            (w, (dw + w * w - rv).norm())
        })
        .collect()
}

/// Convenience: real roots of a polynomial with exact coefficients.
pub fn real_roots<F: Field>(p: &Polynomial<F>) -> Vec<f64> {
    let cs: Vec<Complex64> = p.coeffs().iter().map(|c| c.to_c64()).collect();
    poly_roots(&cs).into_iter().filter(|z| z.im.abs() < 1e-9 * (1.0 + z.re.abs())).map(|z| z.re).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_cubic() {
        // (z-1)(z+2)(z-3) = z^3 - 2z^2 - 5z + 6
        let c = [6.0, -5.0, -2.0, 1.0].map(|v| Complex64::new(v, 0.0));
        let mut r: Vec<f64> = poly_roots(&c).iter().map(|z| z.re).collect();
        r.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (a, b) in r.iter().zip([-2.0, 1.0, 3.0]) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}
