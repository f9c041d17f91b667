use exactmath::{Point, Polynomial, Rational, RationalFunction};
use num_traits::One;
use serde::Serialize;

use crate::case2::{as_degree, degree_for, shifted_integers, theta_for, tuples, ESet, ETrial};
use crate::classify::SingularityProfile;
use crate::search::search_monic;
use crate::Execution;

type RF = RationalFunction<Rational>;

#[derive(Clone, PartialEq, Debug)]
pub struct Case3Certificate {
    pub m: u32,
    pub tuple: Vec<(Point, i64)>,
    pub n: u64,
    pub theta: RF,
    pub p: Polynomial<Rational>,
    pub s: Polynomial<Rational>,
    /// `coefficients[i] = S^i P_i/(m − i)!`, multiplying `ω^i`.
    pub coefficients: Vec<RF>,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Case3Precondition {
    pub satisfied: bool,
    pub reason: String,
}

pub fn case3_precondition(profiles: &[SingularityProfile]) -> Case3Precondition {
    for p in profiles {
        match p.location {
            Point::Finite(_) if p.order > 2 => {
                return Case3Precondition { satisfied: false, reason: format!("pole of order {} at {}", p.order, p.location) };
            }
            Point::Infinity if p.order < 2 => {
                return Case3Precondition { satisfied: false, reason: format!("order at infinity is {} < 2", p.order) };
            }
            _ => {}
        }
    }
    Case3Precondition { satisfied: true, reason: "all finite poles of order <= 2 and order at infinity >= 2".into() }
}

pub fn case3_esets(profiles: &[SingularityProfile], m: u32) -> Vec<ESet> {
    let ks = |lo: i64, hi: i64, scale: Rational| -> Vec<Rational> {
        (lo..=hi).map(|k| Rational::from_integer(k.into()) * &scale).collect()
    };
    profiles
        .iter()
        .map(|p| {
            let values = match (&p.location, p.order) {
                (Point::Finite(_), 1) => vec![12],
                (Point::Finite(_), _) => shifted_integers(6, &ks(-6, 6, Rational::one()), &p.b_rational().expect("c2 b")),
                (Point::Infinity, o) => {
                    let b = if o == 2 { p.b_rational().expect("inf2 b") } else { Rational::from_integer(0.into()) };
                    let h = (m / 2) as i64;
                    shifted_integers(6, &ks(-h, h, Rational::new(12.into(), (m as i64).into())), &b)
                }
            };
            ESet { location: p.location.clone(), values }
        })
        .collect()
}

/// Downward recursion `P_m = −P`, `P_{i−1} = −S P_i' + ((m−i)S' − Sθ)P_i − (m−i)(i+1)S² r P_{i+1}`.
/// Returns `[P_{-1}, P_0, ..., P_m]`.
pub fn recursion(p: &Polynomial<Rational>, m: u32, s: &Polynomial<Rational>, theta: &RF, r: &RF) -> Vec<RF> {
    let s_rf = RF::from_poly(s.clone());
    let ds = RF::from_poly(s.derivative());
    let s_theta = &s_rf * theta;
    let s2r = &(&s_rf * &s_rf) * r;
    let mut ps: Vec<RF> = vec![RF::zero(); m as usize + 2];
    // ps[i + 1] holds P_i
    ps[m as usize + 1] = -RF::from_poly(p.clone());
    let k = |n: i64| RF::constant(Rational::from_integer(n.into()));
    for i in (0..=m as i64).rev() {
        let pi = ps[(i + 1) as usize].clone();
        let next = if i < m as i64 { ps[(i + 2) as usize].clone() } else { RF::zero() };
        let mi = m as i64 - i;
        let t1 = -&(&s_rf * &pi.derivative());
        let t2 = &(&(&k(mi) * &ds) - &s_theta) * &pi;
        let t3 = &(&k(mi * (i + 1)) * &s2r) * &next;
        ps[i as usize] = &(&t1 + &t2) - &t3;
    }
    ps
}

fn factorial(n: u32) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * Rational::from_integer(k.into()))
}

pub fn case3_trials(r: &RF, profiles: &[SingularityProfile], m: u32, sets: &[ESet], exec: Execution) -> Vec<ETrial> {
    let scale = Rational::new((m as i64).into(), 12.into());
    let s = finite_product(profiles);
    exec.map(tuples(sets), |tuple| {
        let n = degree_for(&tuple, &scale);
        let deg = as_degree(&n);
        let mut t = ETrial { tuple, n, in_d_set: deg.is_some(), found: false, p: None, theta: None };
        if let Some(d) = deg {
            let theta = theta_for(&t.tuple, &scale);
            t.p = search_monic(d, |p: &Polynomial<Rational>| recursion(p, m, &s, &theta, r)[0].clone());
            t.found = t.p.is_some();
            t.theta = Some(theta);
        }
        t
    })
}

/// `S = Π (x − c)` over the finite poles.
pub fn finite_product(profiles: &[SingularityProfile]) -> Polynomial<Rational> {
    profiles.iter().fold(Polynomial::one(), |acc, p| match &p.location {
        Point::Finite(c) => &acc * &Polynomial::linear(-c.clone(), Rational::one()),
        Point::Infinity => acc,
    })
}

impl Case3Certificate {
    pub fn from_trial(t: &ETrial, m: u32, profiles: &[SingularityProfile], r: &RF) -> Self {
        let theta = t.theta.clone().expect("searched");
        let p = t.p.clone().expect("found");
        let s = finite_product(profiles);
        let ps = recursion(&p, m, &s, &theta, r);
        let s_rf = RF::from_poly(s.clone());
        let coefficients = (0..=m)
            .map(|i| {
                let c = RF::constant(factorial(m - i).recip());
                &(&s_rf.pow(i) * &ps[i as usize + 1]) * &c
            })
            .collect();
        Case3Certificate { m, tuple: t.tuple.clone(), n: as_degree(&t.n).expect("degree") as u64, theta, p, s, coefficients }
    }

    /// `P_{−1}`; zero for a valid certificate.
    pub fn residual(&self, r: &RF) -> RF {
        recursion(&self.p, self.m, &self.s, &self.theta, r)[0].clone()
    }
}
