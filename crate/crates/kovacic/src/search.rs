//! Monic polynomial solutions of linear differential relations by
//! undetermined coefficients.

use exactmath::{solve_linear, Field, Polynomial, RationalFunction};

/// Monic `P` of degree `n` with `op(P) = 0`, where `op` is linear.
pub fn search_monic<F, Op>(n: usize, op: Op) -> Option<Polynomial<F>>
where
    F: Field,
    Op: Fn(&Polynomial<F>) -> RationalFunction<F>,
{
    let images: Vec<RationalFunction<F>> = (0..=n).map(|k| op(&Polynomial::monomial(F::one(), k))).collect();
    let den = images.iter().fold(Polynomial::one(), |acc, im| acc.lcm(im.den()));
    let nums: Vec<Polynomial<F>> = images
        .iter()
        .map(|im| im.num() * &den.exact_div(im.den()).expect("lcm is divisible"))
        .collect();
    let rows = nums.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
    let a: Vec<Vec<F>> = (0..rows).map(|j| (0..n).map(|k| nums[k].coeff(j)).collect()).collect();
    let b: Vec<F> = (0..rows).map(|j| -nums[n].coeff(j)).collect();
    let mut coeffs = if rows == 0 { Vec::new() } else { solve_linear(a, b)? };
    coeffs.resize(n, F::zero());
    coeffs.push(F::one());
    let p = Polynomial::new(coeffs);
    op(&p).is_zero().then_some(p)
}

/// `P'' + 2ωP' + (ω' + ω² − r)P`.
pub fn recu1<F: Field>(omega: &RationalFunction<F>, r: &RationalFunction<F>, p: &Polynomial<F>) -> RationalFunction<F> {
    let rp = RationalFunction::from_poly(p.clone());
    let d1 = RationalFunction::from_poly(p.derivative());
    let d2 = RationalFunction::from_poly(p.derivative().derivative());
    let two = RationalFunction::constant(F::from_i64(2));
    let pot = &(&omega.derivative() + &(omega * omega)) - r;
    &(&d2 + &(&(&two * omega) * &d1)) + &(&pot * &rp)
}

/// Coefficients of the third-order relation satisfied by `P` in case 2:
/// `P''' + 3θP'' + (3θ' + 3θ² − 4r)P' + (θ'' + 3θθ' + θ³ − 4rθ − 2r')P`.
pub struct Recu2<F: Field> {
    c2: RationalFunction<F>,
    c1: RationalFunction<F>,
    c0: RationalFunction<F>,
}

impl<F: Field> Recu2<F> {
    pub fn new(theta: &RationalFunction<F>, r: &RationalFunction<F>) -> Self {
        let k = |n: i64| RationalFunction::constant(F::from_i64(n));
        let th1 = theta.derivative();
        let th2 = th1.derivative();
        let c2 = &k(3) * theta;
        let c1 = &(&(&k(3) * &th1) + &(&k(3) * &(theta * theta))) - &(&k(4) * r);
        let c0 = &(&(&(&th2 + &(&k(3) * &(theta * &th1))) + &theta.pow(3)) - &(&k(4) * &(r * theta))) - &(&k(2) * &r.derivative());
        Recu2 { c2, c1, c0 }
    }

    pub fn apply(&self, p: &Polynomial<F>) -> RationalFunction<F> {
        let d1 = p.derivative();
        let d2 = d1.derivative();
        let d3 = d2.derivative();
        let f = |q: Polynomial<F>| RationalFunction::from_poly(q);
        &(&(&f(d3) + &(&self.c2 * &f(d2))) + &(&self.c1 * &f(d1))) + &(&self.c0 * &f(p.clone()))
    }
}
