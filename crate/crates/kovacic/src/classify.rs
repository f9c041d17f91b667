//! Singularity classification and the `α` exponents of case 1.

use exactmath::{
    finite_poles, laurent_at, order_at_infinity, sqrt_branch, ExactError, Field, Point, RadicalNumber, Rational,
    RationalFunction, SqrtBranch,
};
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Subcase {
    #[serde(rename = "c1")]
    C1,
    #[serde(rename = "c2")]
    C2,
    #[serde(rename = "c3")]
    C3,
    #[serde(rename = "inf1")]
    Inf1,
    #[serde(rename = "inf2")]
    Inf2,
    #[serde(rename = "inf3")]
    Inf3,
    /// Odd finite order ≥ 3 or odd order < 2 at infinity.
    #[serde(rename = "inapplicable")]
    Inapplicable,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct SingularityProfile {
    pub location: Point,
    /// `○(r_c)`, or `○(r_∞)` at infinity.
    pub order: i64,
    pub subcase: Subcase,
    /// `[√r]_c`; absent means the branch is zero.
    pub sqrt_branch: Option<SqrtBranch>,
    pub b: Option<RadicalNumber>,
    pub alpha_plus: Option<RadicalNumber>,
    pub alpha_minus: Option<RadicalNumber>,
}

impl SingularityProfile {
    pub fn alpha(&self, plus: bool) -> Option<&RadicalNumber> {
        if plus {
            self.alpha_plus.as_ref()
        } else {
            self.alpha_minus.as_ref()
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.location == Point::Infinity
    }

    /// The Laurent coefficient `b` as a rational (present for (c2)/(∞2)).
    pub fn b_rational(&self) -> Option<Rational> {
        self.b.as_ref().and_then(|b| b.as_rational())
    }
}

fn half() -> RadicalNumber {
    RadicalNumber::from_rational(Rational::new(1.into(), 2.into()))
}

/// `(1 ± √(1+4b))/2`.
fn quadratic_alphas(b: &Rational) -> Result<(RadicalNumber, RadicalNumber), ExactError> {
    let disc = Rational::one() + Rational::from_integer(4.into()) * b;
    let root = RadicalNumber::sqrt_rational(&disc)?;
    let h = half();
    Ok(((RadicalNumber::one() + &root) * &h, (RadicalNumber::one() - root) * &h))
}

/// `½(±b/a + sign·v)` for the (c3)/(∞3) branches.
fn branch_alphas(br: &SqrtBranch, v_sign: i64) -> (RadicalNumber, RadicalNumber) {
    let ratio = br.b.clone() * &br.leading().inv().expect("nonzero leading coefficient");
    let v = RadicalNumber::from_integer(v_sign * br.v);
    let h = half();
    ((ratio.clone() + &v) * &h, (v - ratio) * &h)
}

/// One profile per point of `Γ = Γ' ∪ {∞}`, finite points ascending.
pub fn classify(r: &RationalFunction<Rational>) -> Result<Vec<SingularityProfile>, ExactError> {
    let mut out = Vec::new();
    for (c, ord) in finite_poles(r)? {
        let ord = ord as i64;
        let at = Point::Finite(c);
        let mut p = SingularityProfile {
            location: at.clone(),
            order: ord,
            subcase: Subcase::Inapplicable,
            sqrt_branch: None,
            b: None,
            alpha_plus: None,
            alpha_minus: None,
        };
        match ord {
            1 => {
                p.subcase = Subcase::C1;
                p.alpha_plus = Some(RadicalNumber::one());
                p.alpha_minus = Some(RadicalNumber::one());
            }
            2 => {
                let b = laurent_at(r, &at, 1)?.leading().clone();
                let (ap, am) = quadratic_alphas(&b)?;
                p.subcase = Subcase::C2;
                p.b = Some(RadicalNumber::from_rational(b));
                p.alpha_plus = Some(ap);
                p.alpha_minus = Some(am);
            }
            o if o % 2 == 0 => {
                let br = sqrt_branch(r, &at, o / 2)?;
                let (ap, am) = branch_alphas(&br, 1);
                p.subcase = Subcase::C3;
                p.b = Some(br.b.clone());
                p.sqrt_branch = Some(br);
                p.alpha_plus = Some(ap);
                p.alpha_minus = Some(am);
            }
            _ => {}
        }
        out.push(p);
    }
    let ord = order_at_infinity(r)?;
    let mut p = SingularityProfile {
        location: Point::Infinity,
        order: ord,
        subcase: Subcase::Inapplicable,
        sqrt_branch: None,
        b: None,
        alpha_plus: None,
        alpha_minus: None,
    };
    if ord > 2 {
        p.subcase = Subcase::Inf1;
        p.alpha_plus = Some(RadicalNumber::zero());
        p.alpha_minus = Some(RadicalNumber::one());
    } else if ord == 2 {
        let b = laurent_at(r, &Point::Infinity, 1)?.leading().clone();
        let (ap, am) = quadratic_alphas(&b)?;
        p.subcase = Subcase::Inf2;
        p.b = Some(RadicalNumber::from_rational(b));
        p.alpha_plus = Some(ap);
        p.alpha_minus = Some(am);
    } else if ord % 2 == 0 {
        let br = sqrt_branch(r, &Point::Infinity, -ord / 2)?;
        let (ap, am) = branch_alphas(&br, -1);
        p.subcase = Subcase::Inf3;
        p.b = Some(br.b.clone());
        p.sqrt_branch = Some(br);
        p.alpha_plus = Some(ap);
        p.alpha_minus = Some(am);
    }
    out.push(p);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactmath::parse_rational_function;

    #[test]
    fn fourth_order_pole() {
        let r = parse_rational_function("1/x^4", 'x').unwrap();
        let ps = classify(&r).unwrap();
        assert_eq!(ps[0].subcase, Subcase::C3);
        assert_eq!(ps[0].sqrt_branch.as_ref().unwrap().v, 2);
        assert_eq!(ps[1].subcase, Subcase::Inf1);
        assert_eq!(ps[1].alpha_plus, Some(RadicalNumber::zero()));
        assert_eq!(ps[1].alpha_minus, Some(RadicalNumber::one()));
    }

    #[test]
    fn c2_alphas_sum_to_one() {
        let r = parse_rational_function("2/x^2 + 1/(x-1)", 'x').unwrap();
        let ps = classify(&r).unwrap();
        let a = &ps[0];
        assert_eq!(a.subcase, Subcase::C2);
        assert_eq!(a.alpha_plus.clone().unwrap() + a.alpha_minus.as_ref().unwrap(), RadicalNumber::one());
        assert_eq!(a.alpha_plus, Some(RadicalNumber::from_integer(2)));
        assert_eq!(ps[1].subcase, Subcase::C1);
        assert_eq!(ps[2].order, 1);
        assert_eq!(ps[2].subcase, Subcase::Inapplicable);
    }

    #[test]
    fn constant_potential() {
        let r = parse_rational_function("1", 'x').unwrap();
        let ps = classify(&r).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].subcase, Subcase::Inf3);
        assert_eq!(ps[0].alpha_plus, Some(RadicalNumber::zero()));
        assert_eq!(ps[0].b, Some(RadicalNumber::zero()));
    }
}
