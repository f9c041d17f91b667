//! Exact arithmetic for differential-algebra work: rationals, square-root
//! extensions, polynomials, rational functions and their local expansions.

mod error;
mod factor;
mod field;
mod hyperexp;
mod laurent;
mod linsolve;
mod parse;
mod poly;
mod radical;
mod ratfun;
mod roots;

pub use error::ExactError;
pub use factor::{factorize, square_split};
pub use field::{rational_to_f64, Field};
pub use hyperexp::Hyperexponential;
pub use laurent::{
    laurent_at, partial_fractions, principal_part, sqrt_branch, LaurentExpansion, PartialFractions, Point, SqrtBranch,
    DEFAULT_TERMS,
};
pub use linsolve::solve_linear;
pub use parse::{parse_rational, parse_rational_function};
pub use poly::Polynomial;
pub use radical::RadicalNumber;
pub use ratfun::{reduce, RationalFunction};
pub use roots::{finite_poles, order_at_infinity, rational_roots};

pub use num_bigint::BigInt;

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`]; panics on `d = 0`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
