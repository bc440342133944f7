//! Gamma and polygamma functions by Stirling series with argument shift.
//!
//! The asymptotic tails reuse the exact Bernoulli numbers. Arguments are
//! shifted right until the Stirling remainder at the working precision is
//! provably below the requested accuracy, then pulled back through the
//! recurrence. All entry points accept complex arguments; poles at the
//! non-positive integers surface as domain errors.

use num_traits::ToPrimitive;

use crate::apcore::{pi, APComplex, APReal};
use crate::error::{Error, Result};
use crate::specfun::bernoulli::{bernoulli_2n, bernoulli_2n_over_pair};

/// Real part threshold beyond which the Stirling tails converge below
/// 10^-(wp+4) before the asymptotic terms turn around.
fn stirling_threshold(wp: u32) -> i64 {
    (0.4 * wp as f64).ceil() as i64 + 10
}

fn shift_count(z: &APComplex, wp: u32) -> u32 {
    let re = z.re().to_f64_approx();
    let need = stirling_threshold(wp) as f64;
    if re >= need {
        0
    } else {
        (need - re).ceil() as u32
    }
}

fn is_nonpositive_integer(z: &APComplex) -> bool {
    if !z.im().is_zero() || z.re().is_positive() {
        return false;
    }
    let n = z.re().round_to_integer();
    let back = APReal::from_bigint(n, z.precision());
    (&back - z.re()).is_zero()
}

/// Stirling series for log-gamma, valid once re(z) clears the threshold.
fn lgamma_stirling(z: &APComplex, wp: u32) -> Result<APComplex> {
    let half = APReal::one(wp).div_i64(2);
    let ln_z = z.ln()?;
    let two_pi = pi(wp).mul_i64(2);
    let mut acc = &(&(z - &APComplex::from_real(half.clone())) * &ln_z) - z;
    acc = &acc + &APComplex::from_real(two_pi.ln()?.div_i64(2));
    let z_inv = z.recip();
    let z_inv2 = &z_inv * &z_inv;
    let mut pow = z_inv;
    let floor = -((wp as i64) + 4);
    for k in 1..(8 * wp as usize) {
        let c = bernoulli_2n_over_pair(k, wp);
        let term = pow.scale(&c);
        if term.abs().sci_exponent() < floor {
            break;
        }
        acc = &acc + &term;
        pow = &pow * &z_inv2;
    }
    Ok(acc)
}

/// Log-gamma with argument shift; the imaginary part may differ from the
/// principal branch by a multiple of 2 pi (exp of the result is exact).
pub fn lgamma(z: &APComplex, precision: u32) -> Result<APComplex> {
    if is_nonpositive_integer(z) {
        return Err(Error::Domain(format!(
            "log-gamma pole at {}",
            z.to_display_string(6)
        )));
    }
    let wp = precision + 14;
    let zw = z.with_precision(wp);
    let m = shift_count(&zw, wp);
    let mut acc = lgamma_stirling(&shifted(&zw, m), wp)?;
    for j in 0..m {
        acc = &acc - &shifted(&zw, j).ln()?;
    }
    Ok(acc.with_precision(precision))
}

fn shifted(z: &APComplex, j: u32) -> APComplex {
    let off = APReal::from_i64(j as i64, z.precision());
    APComplex::new(z.re() + &off, z.im().clone())
}

/// Gamma function for arbitrary complex arguments off the poles.
pub fn gamma(z: &APComplex, precision: u32) -> Result<APComplex> {
    if is_nonpositive_integer(z) {
        return Err(Error::Domain(format!(
            "gamma pole at {}",
            z.to_display_string(6)
        )));
    }
    // exact factorials for small positive integers
    if z.im().is_zero() && z.re().is_positive() {
        if let Some(n) = exact_small_integer(z.re()) {
            if n <= 40 {
                let mut acc = APReal::one(precision);
                for i in 2..n {
                    acc = acc.mul_i64(i as i64);
                }
                return Ok(APComplex::from_real(acc));
            }
        }
    }
    let wp = precision + 14;
    let zw = z.with_precision(wp);
    if zw.re().to_f64_approx() >= 1.0 {
        return Ok(lgamma(&zw, wp)?.exp().with_precision(precision));
    }
    // pull up through Gamma(z) = Gamma(z+m) / (z (z+1) ... (z+m-1))
    let m = (1.0 - zw.re().to_f64_approx()).ceil() as u32 + 1;
    let top = gamma(&shifted(&zw, m), wp)?;
    let mut denom = APComplex::one(wp);
    for j in 0..m {
        denom = &denom * &shifted(&zw, j);
    }
    if denom.is_zero() {
        return Err(Error::Domain(format!(
            "gamma pole at {}",
            z.to_display_string(6)
        )));
    }
    Ok((&top / &denom).with_precision(precision))
}

fn exact_small_integer(x: &APReal) -> Option<u64> {
    let n = x.round_to_integer();
    let back = APReal::from_bigint(n.clone(), x.precision());
    if (&back - x).is_zero() {
        n.to_u64()
    } else {
        None
    }
}

/// Digamma psi^(0).
pub fn psi0(z: &APComplex, precision: u32) -> Result<APComplex> {
    if is_nonpositive_integer(z) {
        return Err(Error::Domain(format!(
            "psi0 pole at {}",
            z.to_display_string(6)
        )));
    }
    let wp = precision + 14;
    let zw = z.with_precision(wp);
    let m = shift_count(&zw, wp);
    let zs = shifted(&zw, m);
    // psi0(z) = ln z - 1/(2z) - sum B_2k / (2k z^2k)
    let ln_z = zs.ln()?;
    let z_inv = zs.recip();
    let mut acc = &ln_z - &z_inv.div_i64(2);
    let z_inv2 = &z_inv * &z_inv;
    let mut pow = z_inv2.clone();
    let floor = -((wp as i64) + 4);
    for k in 1..(8 * wp as usize) {
        let term = pow.scale(&bernoulli_2n(k, wp).div_i64(2 * k as i64));
        if term.abs().sci_exponent() < floor {
            break;
        }
        acc = &acc - &term;
        pow = &pow * &z_inv2;
    }
    for j in 0..m {
        acc = &acc - &shifted(&zw, j).recip();
    }
    Ok(acc.with_precision(precision))
}

/// Trigamma psi^(1).
pub fn psi1(z: &APComplex, precision: u32) -> Result<APComplex> {
    if is_nonpositive_integer(z) {
        return Err(Error::Domain(format!(
            "psi1 pole at {}",
            z.to_display_string(6)
        )));
    }
    let wp = precision + 14;
    let zw = z.with_precision(wp);
    let m = shift_count(&zw, wp);
    let zs = shifted(&zw, m);
    // psi1(z) = 1/z + 1/(2z^2) + sum B_2k / z^(2k+1)
    let z_inv = zs.recip();
    let z_inv2 = &z_inv * &z_inv;
    let mut acc = &z_inv + &z_inv2.div_i64(2);
    let mut pow = &z_inv * &z_inv2;
    let floor = -((wp as i64) + 4);
    for k in 1..(8 * wp as usize) {
        let term = pow.scale(&bernoulli_2n(k, wp));
        if term.abs().sci_exponent() < floor {
            break;
        }
        acc = &acc + &term;
        pow = &pow * &z_inv2;
    }
    for j in 0..m {
        let f = shifted(&zw, j);
        acc = &acc + &(&f * &f).recip();
    }
    Ok(acc.with_precision(precision))
}

/// Euler's constant, gamma = -psi0(1).
pub fn euler_gamma(precision: u32) -> APReal {
    let one = APComplex::one(precision + 6);
    psi0(&one, precision + 6)
        .expect("psi0(1) is regular")
        .re()
        .neg()
        .with_precision(precision)
}
