//! Zero-power sums sigma_k from the log-xi Taylor series, the tau and
//! lambda sequences by binomial transform, and the Li-criterion report.
//!
//! sigma_k comes purely from the series pipeline: with xi(s)/xi(0) expanded
//! about s = 0, the m-th coefficient of its logarithm equals -sigma_m / m.
//! Zero enumeration never enters. The transforms use exact integer
//! binomials with accumulation at ten extra digits, sized for the
//! alternating cancellation up to k = 64; beyond that the margin is
//! exhausted and the tail entries lose digits.

use serde::Serialize;

use crate::apcore::{binom_int, series_log, APReal, PowerSeries, SeriesVar};
use crate::error::{Error, Result};
use crate::expansions::{NamedSeries, SeriesId};

/// Computed sigma/tau/lambda sequences with their precision.
#[derive(Clone, Debug)]
pub struct ZeroSumTable {
    pub max_k: usize,
    /// sigma_1 .. sigma_max_k
    pub sigma: Vec<APReal>,
    /// tau_0 .. tau_max_k
    pub tau: Vec<APReal>,
    /// lambda_0 .. lambda_max_k
    pub lambda: Vec<APReal>,
    pub precision: u32,
}

/// sigma_m = -m * (m-th coefficient of log(xi(s)/xi(0))) for m = 1..=max_k.
pub fn sigma_from_series(xi_at_zero: &NamedSeries, max_k: usize) -> Result<Vec<APReal>> {
    if xi_at_zero.id != SeriesId::XiOfS {
        return Err(Error::UnknownId(format!(
            "sigma_from_series wants xi_of_s, got {}",
            xi_at_zero.id.as_str()
        )));
    }
    if max_k > xi_at_zero.series.order() {
        return Err(Error::Truncation {
            required_max_r: max_k,
            available: xi_at_zero.series.order(),
        });
    }
    let prec = xi_at_zero.source_precision;
    let wp = prec + 10;
    let f0 = xi_at_zero.series.coeff(0).with_precision(wp);
    let normalized: Vec<APReal> = xi_at_zero
        .series
        .coeffs()
        .iter()
        .map(|c| &c.with_precision(wp) / &f0)
        .collect();
    let series = PowerSeries::new(APReal::zero(wp), SeriesVar::S, normalized);
    let logged = series_log(&series)?;
    Ok((1..=max_k)
        .map(|m| logged.coeff(m).mul_i64(-(m as i64)).with_precision(prec))
        .collect())
}

/// tau_0 = sigma_1; tau_k = sum_{j=1}^{k} binom(k-1, j-1) (-1)^j sigma_{j+1}.
pub fn tau_from_sigma(sigma: &[APReal], max_k: usize) -> Result<Vec<APReal>> {
    if sigma.len() < max_k + 1 {
        return Err(Error::Domain(format!(
            "tau_{max_k} needs sigma up to {}, have {}",
            max_k + 1,
            sigma.len()
        )));
    }
    let prec = sigma[0].precision();
    let wp = prec + 10;
    let mut out = Vec::with_capacity(max_k + 1);
    out.push(sigma[0].clone()); // tau_0 = sigma_1, exactly
    for k in 1..=max_k {
        let mut acc = APReal::zero(wp);
        for j in 1..=k {
            let b = APReal::from_bigint(binom_int(k as u64 - 1, j as u64 - 1), wp);
            let term = &b * &sigma[j].with_precision(wp); // sigma_{j+1}
            acc = if j % 2 == 1 { &acc - &term } else { &acc + &term };
        }
        out.push(acc.with_precision(prec));
    }
    Ok(out)
}

/// lambda_0 = 0; lambda_k = sum_{j=1}^{k} ((-1)^(j-1)/j) binom(k-1, j-1) sigma_j.
pub fn lambda_from_sigma(sigma: &[APReal], max_k: usize) -> Result<Vec<APReal>> {
    if max_k >= 1 && sigma.len() < max_k {
        return Err(Error::Domain(format!(
            "lambda_{max_k} needs sigma up to {max_k}, have {}",
            sigma.len()
        )));
    }
    let prec = sigma.first().map(|s| s.precision()).unwrap_or(30);
    let wp = prec + 10;
    let mut out = Vec::with_capacity(max_k + 1);
    out.push(APReal::zero(prec)); // lambda_0 = 0, exactly
    for k in 1..=max_k {
        let mut acc = APReal::zero(wp);
        for j in 1..=k {
            let b = APReal::from_bigint(binom_int(k as u64 - 1, j as u64 - 1), wp);
            let term = (&b * &sigma[j - 1].with_precision(wp)).div_i64(j as i64);
            acc = if j % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        out.push(acc.with_precision(prec));
    }
    Ok(out)
}

/// Build the full table from the xi(s) series about 0.
pub fn zero_sum_table(xi_at_zero: &NamedSeries, max_k: usize) -> Result<ZeroSumTable> {
    let sigma = sigma_from_series(xi_at_zero, max_k + 1)?;
    let tau = tau_from_sigma(&sigma, max_k)?;
    let lambda = lambda_from_sigma(&sigma, max_k)?;
    Ok(ZeroSumTable {
        max_k,
        sigma: sigma[..max_k].to_vec(),
        tau,
        lambda,
        precision: xi_at_zero.source_precision,
    })
}

/// One flagged entry of a criterion report.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub kind: String,
    pub k: usize,
    pub value: String,
}

/// The tau bound as printed in the reference tables; it transposes a digit
/// of the computed 2 sigma_1 = 0.0461914179322... and is carried here for
/// comparison, never used as the operative bound.
pub const REFERENCE_TAU_BOUND: &str = "0.046191479322";

/// Li-criterion and tau-bound diagnostics over a computed table.
#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub sigma: Vec<String>,
    pub tau: Vec<String>,
    pub lambda: Vec<String>,
    pub violations: Vec<Violation>,
    /// Operative bound 2 sigma_1 on |tau_k|.
    pub bound: String,
    /// The bound as printed in the reference tables (known transposition).
    pub reference_bound: String,
    /// Margin bound - |tau_k| per k, decimal strings.
    pub tau_margins: Vec<String>,
}

/// Flag lambda_k < 0 (Li violation) and |tau_k| above the 2 sigma_1 bound.
///
/// Violations are report events, never panics; an empty list is the
/// expected outcome on the computed range.
pub fn criterion_report(table: &ZeroSumTable) -> CriterionReport {
    let prec = table.precision;
    // 2 sigma_1, read through tau_0 = sigma_1 so a max_k = 0 table works too
    let bound = table.tau[0].mul_i64(2);
    let mut violations = Vec::new();
    for (k, l) in table.lambda.iter().enumerate() {
        if k >= 1 && l.is_negative() {
            violations.push(Violation {
                kind: "li_lambda_negative".into(),
                k,
                value: l.to_decimal_string(prec),
            });
        }
    }
    let mut tau_margins = Vec::with_capacity(table.tau.len());
    for (k, t) in table.tau.iter().enumerate() {
        let margin = &bound - &t.abs();
        if !margin.is_positive() {
            violations.push(Violation {
                kind: "tau_bound_exceeded".into(),
                k,
                value: t.to_decimal_string(prec),
            });
        }
        tau_margins.push(margin.to_decimal_string(prec));
    }
    let render = |v: &Vec<APReal>| v.iter().map(|x| x.to_decimal_string(prec)).collect();
    CriterionReport {
        sigma: render(&table.sigma),
        tau: render(&table.tau),
        lambda: render(&table.lambda),
        violations,
        bound: bound.to_decimal_string(prec),
        reference_bound: REFERENCE_TAU_BOUND.to_string(),
        tau_margins,
    }
}

impl CriterionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Order m beyond which an off-line zero with ordinate above T could first
/// show up in the lambda sequence: roughly 2 T^2.
pub fn exception_order_estimate(t: &APReal) -> Result<APReal> {
    if !t.is_positive() {
        return Err(Error::Domain("exception order needs T > 0".into()));
    }
    Ok((t * t).mul_i64(2))
}
