//! Small-integer factorization by trial division.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::ExactError;

const TRIAL_LIMIT: u64 = 1_000_000;

/// Prime factorization of `n > 0`, ascending by prime.
pub fn factorize(n: &BigUint) -> Result<Vec<(BigUint, u32)>, ExactError> {
    assert!(!n.is_zero(), "factorize(0)");
    if let Some(small) = n.to_u64() {
        return factorize_u64(small);
    }
    let mut out = Vec::new();
    let mut m = n.clone();
    let mut p: u64 = 2;
    while p <= TRIAL_LIMIT {
        let bp = BigUint::from(p);
        if &bp * &bp > m {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = m.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            m = q;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
            if let Some(small) = m.to_u64() {
                out.extend(factorize_u64(small)?.into_iter().filter(|(q, _)| !q.is_one()));
                return Ok(out);
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m.is_one() {
        return Ok(out);
    }
    let limit = BigUint::from(TRIAL_LIMIT);
    if m < &limit * &limit {
        out.push((m, 1));
        return Ok(out);
    }
    let root = m.sqrt();
    if &root * &root == m && root < &limit * &limit {
        out.push((root, 2));
        return Ok(out);
    }
    Err(ExactError::RadicandTooLarge(n.to_string()))
}

fn factorize_u64(mut m: u64) -> Result<Vec<(BigUint, u32)>, ExactError> {
    let mut out = Vec::new();
    let mut p: u64 = 2;
    while p.saturating_mul(p) <= m {
        if p > TRIAL_LIMIT {
            // no factor below the trial limit: m is prime, a prime square, or out of reach
            let r = isqrt(m);
            if r * r == m {
                out.push((BigUint::from(r), 2));
                return Ok(out);
            }
            if (m as u128) < (TRIAL_LIMIT as u128) * (TRIAL_LIMIT as u128) {
                break;
            }
            return Err(ExactError::RadicandTooLarge(m.to_string()));
        }
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((BigUint::from(p), e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((BigUint::from(m), 1));
    }
    Ok(out)
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1).saturating_mul(r + 1) <= n {
        r += 1;
    }
    r
}

/// Splits `n > 0` as `s² · d` with `d` squarefree.
pub fn square_split(n: &BigUint) -> Result<(BigUint, BigUint), ExactError> {
    let mut s = BigUint::one();
    let mut d = BigUint::one();
    for (p, e) in factorize(n)? {
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            d *= p;
        }
    }
    Ok((s, d))
}
