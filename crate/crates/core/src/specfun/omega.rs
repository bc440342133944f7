//! The theta-kernel sum omega(x) = sum_{n>=1} exp(-pi n^2 x).

use crate::apcore::{pi, APReal};
use crate::error::{Error, Result};
use crate::specfun::SpecFunContext;

/// Number of terms needed so the first omitted term e^(-pi N^2 x) falls
/// below 10^-(precision+10) at the evaluation point.
pub fn omega_terms(x_lower: f64, precision: u32) -> u32 {
    let need = (precision as f64 + 12.0) * std::f64::consts::LN_10;
    let n2 = need / (std::f64::consts::PI * x_lower.max(1e-6));
    (n2.sqrt().ceil() as u32).max(1) + 1
}

/// Partial theta sum with adaptive truncation; monotone decreasing in x.
pub fn omega(x: &APReal, ctx: &SpecFunContext) -> Result<APReal> {
    if !x.is_positive() {
        return Err(Error::Domain("omega requires x > 0".into()));
    }
    let prec = ctx.precision;
    let wp = prec + 14;
    let n_terms = omega_terms(x.to_f64_approx(), prec);
    if n_terms > ctx.omega_truncation {
        return Err(Error::AccuracyLoss {
            requested: prec,
            achieved: 0,
        });
    }
    let xw = x.with_precision(wp);
    // q = e^(-pi x); q^(n^2) built by q^((n+1)^2) = q^(n^2) * q^(2n+1)
    let q = (&pi(wp) * &xw).neg().exp();
    let q2 = &q * &q;
    let mut sq = q.clone(); // q^(n^2)
    let mut odd = q.clone(); // q^(2n-1)
    let mut sum = q.clone();
    for _ in 2..=n_terms {
        odd = &odd * &q2;
        sq = &sq * &odd;
        sum = &sum + &sq;
    }
    Ok(sum.with_precision(prec))
}
