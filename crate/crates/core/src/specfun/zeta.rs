//! Riemann zeta by Euler-Maclaurin summation, for complex arguments and for
//! truncated Taylor expansions in a formal displacement.
//!
//! The series-valued variant runs the same summation over `PowerSeries`
//! arithmetic, which yields zeta derivatives of any modest order and, at the
//! expansion point s = 1, the Stieltjes constants from the regular part of
//! the Laurent series. Continuation below re(s) = 1 comes from the Bernoulli
//! tail terms of the summation formula itself.

use num_bigint::BigInt;

use crate::apcore::{series_mul, APComplex, APReal, PowerSeries, Scalar, SeriesVar};
use crate::error::{Error, Result};
use crate::specfun::bernoulli::{bernoulli_2n_over_fact, factorial};

fn em_params(s: &APComplex, wp: u32) -> (u32, usize) {
    let sigma = s.re().to_f64_approx();
    let t = s.im().to_f64_approx().abs();
    let n = (0.45 * (wp as f64 + 10.0) + 0.6 * t + sigma.min(0.0).abs()).ceil() as u32 + 10;
    let k_max = 4 * (n as usize) + 40;
    (n, k_max)
}

/// zeta(s) for complex s != 1.
pub fn zeta(s: &APComplex, precision: u32) -> Result<APComplex> {
    if (s - &APComplex::one(s.precision())).is_zero() {
        return Err(Error::Domain("zeta pole at s = 1".into()));
    }
    let wp = precision + 14;
    let sw = s.with_precision(wp);
    let (n, k_max) = em_params(&sw, wp);
    let floor = -((wp as i64) + 4);

    // direct sum over n^-s
    let mut acc = APComplex::one(wp);
    for j in 2..n {
        acc = &acc + &pow_int_neg_s(j, &sw, wp)?;
    }
    // N^(1-s)/(s-1) + N^-s/2
    let n_neg_s = pow_int_neg_s(n, &sw, wp)?;
    let n_big = APComplex::from_real(APReal::from_i64(n as i64, wp));
    let s_minus_1 = &sw - &APComplex::one(wp);
    acc = &acc + &(&(&n_neg_s * &n_big) / &s_minus_1);
    acc = &acc + &n_neg_s.div_i64(2);

    // Bernoulli tail: B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1)
    let n_inv2 = APComplex::from_real(
        APReal::from_i64((n as i64) * (n as i64), wp).recip(),
    );
    let mut poch = sw.clone(); // s ... (s + 2k - 2), starts at k=1 as just s
    let mut npow = &n_neg_s * &n_big; // N^(-s+1-2k+2) tracked with n_inv2 steps
    let mut k = 1usize;
    loop {
        npow = &npow * &n_inv2; // now N^(-s+1-2k)... see loop invariant below
        let term = (&poch * &npow).scale(&bernoulli_2n_over_fact(k, wp));
        // loop invariant: npow = N^(-s + 1 - 2k), poch = s (s+1) ... (s + 2k - 2)
        if term.abs().sci_exponent() < floor {
            break;
        }
        acc = &acc + &term;
        if k >= k_max {
            return Err(Error::AccuracyLoss {
                requested: precision,
                achieved: 0,
            });
        }
        let a = offset(&sw, 2 * k as i64 - 1);
        let b = offset(&sw, 2 * k as i64);
        poch = &(&poch * &a) * &b;
        k += 1;
    }
    Ok(acc.with_precision(precision))
}

fn offset(s: &APComplex, j: i64) -> APComplex {
    APComplex::new(s.re() + &APReal::from_i64(j, s.precision()), s.im().clone())
}

fn pow_int_neg_s(n: u32, s: &APComplex, wp: u32) -> Result<APComplex> {
    // n^-s = exp(-s ln n)
    let ln_n = APReal::from_i64(n as i64, wp).ln()?;
    Ok(s.scale(&ln_n).neg().exp())
}

/// Taylor coefficients of zeta about s0:
/// returns [c_0, ..., c_order] with zeta(s0 + d) = sum c_j d^j.
///
/// At s0 = 1 the simple pole 1/d is dropped and the coefficients describe
/// the regular part, whose c_j carry the Stieltjes constants.
pub fn zeta_series(s0: &APComplex, order: usize, precision: u32) -> Result<PowerSeries<APComplex>> {
    let wp = precision + 16 + 2 * order as u32;
    let s0w = s0.with_precision(wp);
    let at_one = (&s0w - &APComplex::one(wp)).is_zero();
    let (n, k_max) = em_params(&s0w, wp);
    let floor = -((wp as i64) + 4);
    let zero = APComplex::zero(wp);
    let mut coeffs = vec![zero.clone(); order + 1];

    // direct sum: n^(-s0-d) = n^-s0 * sum_j (-ln n)^j/j! d^j
    for j in 1..n {
        let ln_j = APReal::from_i64(j as i64, wp).ln()?;
        let base = if j == 1 {
            APComplex::one(wp)
        } else {
            pow_int_neg_s(j, &s0w, wp)?
        };
        accumulate_exp_series(&mut coeffs, &base, &ln_j.neg());
    }

    let ln_n = APReal::from_i64(n as i64, wp).ln()?;
    let n_neg_s = pow_int_neg_s(n, &s0w, wp)?;
    let n_big = APComplex::from_real(APReal::from_i64(n as i64, wp));

    // N^(1-s0-d)/(s0-1+d)
    let lead = &n_neg_s * &n_big;
    let mut numer = vec![zero.clone(); order + 2];
    accumulate_exp_series(&mut numer, &lead, &ln_n.neg());
    if at_one {
        // numer/d: constant term of numer is exactly N^0 = 1; drop the pole
        for j in 0..=order {
            coeffs[j] = coeffs[j].add(&numer[j + 1]);
        }
    } else {
        let a = &s0w - &APComplex::one(wp);
        // series division by (a + d)
        let mut prev = &numer[0] / &a;
        coeffs[0] = coeffs[0].add(&prev);
        for j in 1..=order {
            prev = &(&numer[j] - &prev) / &a;
            coeffs[j] = coeffs[j].add(&prev);
        }
    }

    // N^(-s0-d)/2
    accumulate_exp_series_scaled_half(&mut coeffs, &n_neg_s, &ln_n.neg());

    // Bernoulli tail over series arithmetic
    let n_inv2 = APReal::from_i64((n as i64) * (n as i64), wp).recip();
    let mut tail_sum = PowerSeries::new(zero.clone(), SeriesVar::S, vec![zero.clone(); order + 1]);
    let mut poch = linear_series(&s0w, order, wp); // s0 + d
    let mut scale = (&n_neg_s * &n_big).scale(&n_inv2.powi(1));
    let mut k = 1usize;
    loop {
        let weight = bernoulli_2n_over_fact(k, wp);
        let term = poch.scale(&scale.scale(&weight));
        let lead_mag = term
            .coeffs()
            .iter()
            .map(|c| c.abs().sci_exponent())
            .max()
            .unwrap_or(i64::MIN);
        if lead_mag < floor {
            break;
        }
        tail_sum = tail_sum.add(&term)?;
        if k >= k_max {
            return Err(Error::AccuracyLoss {
                requested: precision,
                achieved: 0,
            });
        }
        // poch *= (s0 + 2k - 1 + d)(s0 + 2k + d)
        poch = series_mul(&poch, &linear_series(&offset(&s0w, 2 * k as i64 - 1), order, wp))?;
        poch = series_mul(&poch, &linear_series(&offset(&s0w, 2 * k as i64), order, wp))?;
        scale = scale.scale(&n_inv2);
        k += 1;
    }
    // multiply the whole tail by N^-d once
    let mut exp_nd = vec![zero.clone(); order + 1];
    accumulate_exp_series(&mut exp_nd, &APComplex::one(wp), &ln_n.neg());
    let exp_nd = PowerSeries::new(zero.clone(), SeriesVar::S, exp_nd);
    let tail = series_mul(&tail_sum, &exp_nd)?;
    for j in 0..=order {
        coeffs[j] = coeffs[j].add(tail.coeff(j));
    }

    let out: Vec<APComplex> = coeffs
        .into_iter()
        .map(|c| c.with_precision(precision))
        .collect();
    Ok(PowerSeries::new(
        APComplex::zero(precision),
        SeriesVar::S,
        out,
    ))
}

/// coeffs[j] += base * x^j / j!
fn accumulate_exp_series(coeffs: &mut [APComplex], base: &APComplex, x: &APReal) {
    let mut term = base.clone();
    coeffs[0] = coeffs[0].add(&term);
    for (j, c) in coeffs.iter_mut().enumerate().skip(1) {
        term = term.scale(x).div_i64(j as i64);
        *c = c.add(&term);
    }
}

fn accumulate_exp_series_scaled_half(coeffs: &mut [APComplex], base: &APComplex, x: &APReal) {
    let mut term = base.div_i64(2);
    coeffs[0] = coeffs[0].add(&term);
    for (j, c) in coeffs.iter_mut().enumerate().skip(1) {
        term = term.scale(x).div_i64(j as i64);
        *c = c.add(&term);
    }
}

/// The linear series z + d at the given truncation order.
fn linear_series(z: &APComplex, order: usize, wp: u32) -> PowerSeries<APComplex> {
    let mut coeffs = vec![APComplex::zero(wp); order + 1];
    coeffs[0] = z.clone();
    if order >= 1 {
        coeffs[1] = APComplex::one(wp);
    }
    PowerSeries::new(APComplex::zero(wp), SeriesVar::S, coeffs)
}

/// k-th derivative of zeta at s (k = 0 is zeta itself).
pub fn zeta_deriv(s: &APComplex, k: usize, precision: u32) -> Result<APComplex> {
    if k == 0 {
        return zeta(s, precision);
    }
    let series = zeta_series(s, k, precision + 4)?;
    let k_fact = APReal::from_bigint(BigInt::from(factorial(k)), precision + 4);
    Ok(series.coeff(k).scale(&k_fact).with_precision(precision))
}

/// Stieltjes constant gamma_k from the Laurent expansion about s = 1.
pub fn stieltjes(k: usize, precision: u32) -> APReal {
    let series = zeta_series(&APComplex::one(precision + 6), k, precision + 6)
        .expect("zeta series at s = 1 is regular after removing the pole");
    let k_fact = APReal::from_bigint(BigInt::from(factorial(k)), precision + 6);
    let v = series.coeff(k).re() * &k_fact;
    let signed = if k % 2 == 1 { v.neg() } else { v };
    signed.with_precision(precision)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apcore::pi;
    use crate::specfun::gamma::euler_gamma;

    fn real(s: &str, p: u32) -> APComplex {
        APComplex::from_real(APReal::parse(s, p).unwrap())
    }

    #[test]
    fn zeta_two_is_pi_squared_over_six() {
        let p = 40;
        let z = zeta(&real("2", p), p).unwrap();
        let expect = (&pi(p) * &pi(p)).div_i64(6);
        assert!((z.re() - &expect).abs().sci_exponent() < -(p as i64 - 2));
        assert!(z.im().is_zero());
    }

    #[test]
    fn zeta_four_is_pi_fourth_over_ninety() {
        let p = 40;
        let z = zeta(&real("4", p), p).unwrap();
        let pi2 = &pi(p) * &pi(p);
        let expect = (&pi2 * &pi2).div_i64(90);
        assert!((z.re() - &expect).abs().sci_exponent() < -(p as i64 - 2));
    }

    #[test]
    fn zeta_continuation_special_values() {
        let p = 40;
        // zeta(0) = -1/2, zeta(-1) = -1/12
        let z0 = zeta(&real("0", p), p).unwrap();
        let expect0 = APReal::parse("-0.5", p).unwrap();
        assert!((z0.re() - &expect0).abs().sci_exponent() < -(p as i64 - 2));
        let zm1 = zeta(&real("-1", p), p).unwrap();
        let expect1 = APReal::one(p).div_i64(-12);
        assert!((zm1.re() - &expect1).abs().sci_exponent() < -(p as i64 - 2));
    }

    #[test]
    fn zeta_rejects_the_pole() {
        assert!(zeta(&real("1", 30), 30).is_err());
    }

    #[test]
    fn zeta_derivative_at_zero() {
        // zeta'(0) = -ln(2 pi)/2
        let p = 38;
        let d = zeta_deriv(&real("0", p), 1, p).unwrap();
        let expect = pi(p).mul_i64(2).ln().unwrap().div_i64(-2);
        assert!((d.re() - &expect).abs().sci_exponent() < -(p as i64 - 2));
    }

    #[test]
    fn stieltjes_zero_is_euler_gamma() {
        let p = 40;
        let g0 = stieltjes(0, p);
        let g = euler_gamma(p);
        assert!((&g0 - &g).abs().sci_exponent() < -(p as i64 - 2));
    }

    #[test]
    fn series_constant_term_matches_scalar_zeta() {
        let p = 36;
        let s = real("0.5", p);
        let series = zeta_series(&s, 2, p).unwrap();
        let scalar = zeta(&s, p).unwrap();
        assert!(series.coeff(0).dist_exp10(&scalar) < -(p as i64 - 2));
    }

    #[test]
    fn complex_argument_agrees_with_doubled_precision() {
        let p = 30;
        let s = APComplex::new(
            APReal::parse("0.5", p).unwrap(),
            APReal::parse("3.7", p).unwrap(),
        );
        let lo = zeta(&s, p).unwrap();
        let hi = zeta(&s.with_precision(2 * p), 2 * p).unwrap();
        assert!(lo.dist_exp10(&hi.with_precision(p)) < -(p as i64 - 2));
    }
}
