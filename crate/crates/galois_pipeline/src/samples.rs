//! Deterministic exact-rational samples of the Laplace parameter.

use std::collections::BTreeSet;

use exactmath::Rational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::Family;

pub const DEFAULT_SAMPLE_COUNT: usize = 25;
pub const DEFAULT_SAMPLE_SEED: u64 = 7;

/// `count` distinct nonzero `s = ±p/q` with `p ≤ 40`, `q ≤ 9`, in draw order.
/// For `(1,1)` with `β ≠ δ`, integer `ŝ` is skipped so that no sample
/// lands on a degree where the `ŝ`-dependent rows become admissible.
pub fn sample_s(family: Family, beta: &Rational, delta: &Rational, count: usize, seed: u64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p: i64 = rng.random_range(1..=40);
        let q: i64 = rng.random_range(1..=9);
        let sign = if rng.random::<bool>() { 1 } else { -1 };
        let s = Rational::new((sign * p).into(), q.into());
        if s.is_zero() {
            continue;
        }
        if family == Family::Linear11Distinct && (&s / (delta - beta)).is_integer() {
            continue;
        }
        if seen.insert(s.clone()) {
            out.push(s);
        }
    }
    out
}
