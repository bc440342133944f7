//! Exact Bernoulli numbers through the tangent-number triangle.
//!
//! The Stirling tails of log-gamma, psi, and the Euler-Maclaurin zeta all
//! consume B_2k at working precision. Tangent numbers are integers, so the
//! whole pipeline stays exact until the final rounding into an APReal.

use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::apcore::APReal;

fn tangent_cache() -> &'static Mutex<Vec<BigUint>> {
    static CACHE: OnceLock<Mutex<Vec<BigUint>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

/// Tangent numbers T_1..T_n (Knuth-Buckholtz triangle).
fn tangent_numbers(n: usize) -> Vec<BigUint> {
    let mut t: Vec<BigUint> = vec![BigUint::one(); n + 1];
    for k in 2..=n {
        t[k] = &t[k - 1] * BigUint::from(k as u64 - 1);
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = &t[j - 1] * BigUint::from((j - k) as u64)
                + &t[j] * BigUint::from((j - k + 2) as u64);
        }
    }
    t[1..].to_vec()
}

fn ensure_tangent(n: usize) {
    let mut cache = tangent_cache().lock().unwrap();
    if cache.len() < n {
        *cache = tangent_numbers(n.max(16));
    }
}

fn tangent(n: usize) -> BigUint {
    ensure_tangent(n);
    tangent_cache().lock().unwrap()[n - 1].clone()
}

/// B_{2n} as an exact (numerator, denominator) pair, n >= 1.
///
/// B_{2n} = (-1)^{n-1} T_n * 2n / (4^n (4^n - 1)).
pub fn bernoulli_2n_ratio(n: usize) -> (BigInt, BigInt) {
    let t = tangent(n);
    let num = BigInt::from(t) * BigInt::from(2 * n as u64);
    let four_n = BigUint::from(4u32).pow(n as u32);
    let den = BigInt::from(&four_n * (&four_n - BigUint::one()));
    if n % 2 == 1 {
        (num, den)
    } else {
        (-num, den)
    }
}

/// B_{2n} rounded to the requested precision.
pub fn bernoulli_2n(n: usize, precision: u32) -> APReal {
    let (num, den) = bernoulli_2n_ratio(n);
    APReal::from_ratio(&num, &den, precision)
}

/// B_{2n} / (2n)! rounded to the requested precision (zeta tail weight).
pub fn bernoulli_2n_over_fact(n: usize, precision: u32) -> APReal {
    let (num, mut den) = bernoulli_2n_ratio(n);
    den *= BigInt::from(factorial(2 * n));
    APReal::from_ratio(&num, &den, precision)
}

/// B_{2n} / (2n (2n - 1)) rounded to the requested precision (Stirling weight).
pub fn bernoulli_2n_over_pair(n: usize, precision: u32) -> APReal {
    let (num, mut den) = bernoulli_2n_ratio(n);
    den *= BigInt::from((2 * n as u64) * (2 * n as u64 - 1));
    APReal::from_ratio(&num, &den, precision)
}

/// n! as a BigUint.
pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n as u64 {
        acc *= BigUint::from(i);
    }
    acc
}
