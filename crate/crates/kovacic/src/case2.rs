use exactmath::{Point, Polynomial, RadicalNumber, Rational, RationalFunction};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::classify::SingularityProfile;
use crate::search::{search_monic, Recu2};
use crate::Execution;

type RF = RationalFunction<Rational>;

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct ESet {
    pub location: Point,
    pub values: Vec<i64>,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct ETrial {
    pub tuple: Vec<(Point, i64)>,
    #[serde(serialize_with = "crate::json::rational")]
    pub n: Rational,
    pub in_d_set: bool,
    pub found: bool,
    #[serde(skip)]
    pub p: Option<Polynomial<Rational>>,
    #[serde(skip)]
    pub theta: Option<RF>,
}

#[derive(Clone, PartialEq, Debug)]
pub struct Case2Certificate {
    pub tuple: Vec<(Point, i64)>,
    pub n: u64,
    pub theta: RF,
    pub p: Polynomial<Rational>,
    pub phi: RF,
    /// `[c0, c1, c2]` of `c2·ω² + c1·ω + c0 = 0`.
    pub quadratic: [RF; 3],
    pub discriminant: RF,
}

/// Integer members of `{2 + k√(1+4b) : k ∈ ks}` (or with centre/scale given).
pub(crate) fn shifted_integers(centre: i64, scale: &[Rational], b: &Rational) -> Vec<i64> {
    let disc = Rational::one() + Rational::from_integer(4.into()) * b;
    let root = RadicalNumber::sqrt_rational(&disc).expect("small radicand");
    let mut out: Vec<i64> = scale
        .iter()
        .filter_map(|k| {
            let v = RadicalNumber::from_integer(centre) + &root.scale(k);
            v.as_integer().and_then(|n| i64::try_from(n).ok())
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn ints(ks: &[i64]) -> Vec<Rational> {
    ks.iter().map(|&k| Rational::from_integer(k.into())).collect()
}

pub fn case2_esets(profiles: &[SingularityProfile]) -> Vec<ESet> {
    profiles
        .iter()
        .map(|p| {
            let values = match (&p.location, p.order) {
                (Point::Finite(_), 1) => vec![4],
                (Point::Finite(_), 2) => shifted_integers(2, &ints(&[0, 2, -2]), &p.b_rational().expect("c2 b")),
                (Point::Finite(_), v) => vec![v],
                (Point::Infinity, o) if o > 2 => vec![0, 2, 4],
                (Point::Infinity, 2) => shifted_integers(2, &ints(&[0, 2, -2]), &p.b_rational().expect("inf2 b")),
                (Point::Infinity, o) => vec![o],
            };
            ESet { location: p.location.clone(), values }
        })
        .collect()
}

/// Cartesian product in lexicographic order.
pub(crate) fn tuples(sets: &[ESet]) -> Vec<Vec<(Point, i64)>> {
    let mut out: Vec<Vec<(Point, i64)>> = vec![Vec::new()];
    for s in sets {
        let mut next = Vec::with_capacity(out.len() * s.values.len());
        for t in &out {
            for &v in &s.values {
                let mut t2 = t.clone();
                t2.push((s.location.clone(), v));
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

/// `scale · Σ e_c/(x − c)` over finite points of the tuple.
pub(crate) fn theta_for(tuple: &[(Point, i64)], scale: &Rational) -> RF {
    let mut th = RF::zero();
    for (p, e) in tuple {
        if let Point::Finite(c) = p {
            if *e != 0 {
                th = &th + &RF::pole_term(scale * Rational::from_integer((*e).into()), c.clone(), 1);
            }
        }
    }
    th
}

/// `scale · (e_∞ − Σ e_c)`.
pub(crate) fn degree_for(tuple: &[(Point, i64)], scale: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for (p, e) in tuple {
        let e = Rational::from_integer((*e).into());
        acc = if *p == Point::Infinity { acc + e } else { acc - e };
    }
    acc * scale
}

pub(crate) fn as_degree(n: &Rational) -> Option<usize> {
    (n.is_integer() && *n >= Rational::zero()).then(|| usize::try_from(n.to_integer()).expect("small degree"))
}

pub fn case2_trials(r: &RF, sets: &[ESet], exec: Execution) -> Vec<ETrial> {
    let half = Rational::new(1.into(), 2.into());
    exec.map(tuples(sets), |tuple| {
        let n = degree_for(&tuple, &half);
        let deg = as_degree(&n);
        let mut t = ETrial { tuple, n, in_d_set: deg.is_some(), found: false, p: None, theta: None };
        if let Some(d) = deg {
            let theta = theta_for(&t.tuple, &half);
            let op = Recu2::new(&theta, r);
            t.p = search_monic(d, |p: &Polynomial<Rational>| op.apply(p));
            t.found = t.p.is_some();
            t.theta = Some(theta);
        }
        t
    })
}

impl Case2Certificate {
    pub fn from_trial(t: &ETrial, r: &RF) -> Self {
        let theta = t.theta.clone().expect("searched");
        let p = t.p.clone().expect("found");
        let pr = RF::from_poly(p.clone());
        let phi = &theta + &(&pr.derivative() / &pr);
        let two = RF::constant(Rational::from_integer(2.into()));
        let half = RF::constant(Rational::new(1.into(), 2.into()));
        let c0 = &half * &(&(&phi.derivative() + &(&phi * &phi)) - &(&two * r));
        let c1 = -&phi;
        let c2 = RF::one();
        let four = RF::constant(Rational::from_integer(4.into()));
        let discriminant = &(&c1 * &c1) - &(&four * &c0);
        Case2Certificate {
            tuple: t.tuple.clone(),
            n: as_degree(&t.n).expect("degree") as u64,
            theta,
            p,
            phi,
            quadratic: [c0, c1, c2],
            discriminant,
        }
    }

    /// The third-order relation evaluated on `P`; zero for a valid certificate.
    pub fn residual(&self, r: &RF) -> RF {
        Recu2::new(&self.theta, r).apply(&self.p)
    }
}
