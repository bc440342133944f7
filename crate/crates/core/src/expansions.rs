//! Derived power series: xi re-centered in s, the even/odd combinations,
//! the Mobius-composed series in w, their logarithms, and the log-series
//! growth diagnostic.
//!
//! Every coefficient here is an r-sum over a [`CoeffTable`]. Inner sums are
//! truncated a posteriori: once the next positive term drops below
//! 10^-(P+5) the tail is dominated by the super-geometric decay of xi_r.
//! Exhausting the table before that point is a truncation error naming the
//! depth that would have been needed.

use num_bigint::BigInt;

use crate::apcore::{binom, series_log, APReal, PowerSeries, SeriesVar};
use crate::error::{Error, Result};
use crate::pustylnikov::CoeffTable;

/// Identifier of a derived series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesId {
    XiOfS,
    XiOf1PlusS,
    XiMinusHalfOfS,
    XiPlus,
    XiMinus,
    XiHOfW,
    XiMOfW,
    XiPlusOfW,
    XiMinusOfW,
    LogXiHOfW,
    LogXiMOfW,
    LogXiPlusOfW,
    LogXiMinusOfW,
    XiMRecenteredHalf,
}

impl SeriesId {
    pub fn as_str(self) -> &'static str {
        match self {
            SeriesId::XiOfS => "xi_of_s",
            SeriesId::XiOf1PlusS => "xi_of_1_plus_s",
            SeriesId::XiMinusHalfOfS => "xi_minus_half_of_s",
            SeriesId::XiPlus => "xi_plus",
            SeriesId::XiMinus => "xi_minus",
            SeriesId::XiHOfW => "xi_h_of_w",
            SeriesId::XiMOfW => "xi_m_of_w",
            SeriesId::XiPlusOfW => "xi_plus_of_w",
            SeriesId::XiMinusOfW => "xi_minus_of_w",
            SeriesId::LogXiHOfW => "log_xi_h_of_w",
            SeriesId::LogXiMOfW => "log_xi_m_of_w",
            SeriesId::LogXiPlusOfW => "log_xi_plus_of_w",
            SeriesId::LogXiMinusOfW => "log_xi_minus_of_w",
            SeriesId::XiMRecenteredHalf => "xi_m_recentered_half",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(match text {
            "xi_of_s" => Self::XiOfS,
            "xi_of_1_plus_s" => Self::XiOf1PlusS,
            "xi_minus_half_of_s" => Self::XiMinusHalfOfS,
            "xi_plus" => Self::XiPlus,
            "xi_minus" => Self::XiMinus,
            "xi_h_of_w" => Self::XiHOfW,
            "xi_m_of_w" => Self::XiMOfW,
            "xi_plus_of_w" => Self::XiPlusOfW,
            "xi_minus_of_w" => Self::XiMinusOfW,
            "log_xi_h_of_w" => Self::LogXiHOfW,
            "log_xi_m_of_w" => Self::LogXiMOfW,
            "log_xi_plus_of_w" => Self::LogXiPlusOfW,
            "log_xi_minus_of_w" => Self::LogXiMinusOfW,
            "xi_m_recentered_half" => Self::XiMRecenteredHalf,
            other => return Err(Error::UnknownId(other.to_string())),
        })
    }
}

/// A series tagged with its identity and the table it came from.
#[derive(Clone, Debug)]
pub struct NamedSeries {
    pub id: SeriesId,
    pub series: PowerSeries<APReal>,
    pub source_depth: usize,
    pub source_precision: u32,
}

/// Re-centering target of the xi(s + 1/2) master series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecenterTarget {
    /// xi(s) about s = 0 (the F_n).
    AtZero,
    /// xi(1 + s) about s = 0.
    AtOne,
    /// xi(s - 1/2) about s = 0 (the D_n).
    MinusHalf,
}

struct TailSum<'a> {
    table: &'a CoeffTable,
    threshold_exp: i64,
}

impl<'a> TailSum<'a> {
    fn new(table: &'a CoeffTable) -> Self {
        TailSum {
            table,
            threshold_exp: -(table.precision as i64 + 5),
        }
    }

    /// Sum term(r) for r in r_min..=max_r, stopping once two consecutive
    /// terms fall under the threshold. Errors if the table runs out first.
    fn sum(&self, r_min: usize, wp: u32, mut term: impl FnMut(usize) -> APReal) -> Result<APReal> {
        let mut acc = APReal::zero(wp);
        let mut below = 0u32;
        let mut last_mag = f64::NEG_INFINITY;
        let mut prev_mag = f64::NEG_INFINITY;
        for r in r_min..=self.table.max_r {
            let t = term(r);
            let mag = t.abs().sci_exponent();
            acc = &acc + &t;
            if mag < self.threshold_exp {
                below += 1;
                if below >= 2 {
                    return Ok(acc);
                }
            } else {
                below = 0;
            }
            prev_mag = last_mag;
            last_mag = mag as f64;
        }
        // extrapolate the decay to estimate the depth that would suffice
        let step = (prev_mag - last_mag).max(0.5);
        let needed = ((last_mag - self.threshold_exp as f64) / step).ceil() as usize + 2;
        Err(Error::Truncation {
            required_max_r: self.table.max_r + needed,
            available: self.table.max_r,
        })
    }
}

fn pow2_scaled(table: &CoeffTable, r: usize, n: usize, wp: u32) -> APReal {
    // xi_r * 2^(n - 2r), n <= 2r on every call site
    let shift = 2 * r as i64 - n as i64;
    let denom = BigInt::from(1u8) << (shift as usize);
    &table.value(r).with_precision(wp) / &APReal::from_bigint(denom, wp)
}

fn binom_ap(n: u64, k: u64, wp: u32) -> APReal {
    APReal::from_bigint(BigInt::from(binom(n, k)), wp)
}

/// Taylor coefficients of xi about the requested center.
pub fn recenter_xi(
    target: RecenterTarget,
    order: usize,
    table: &CoeffTable,
) -> Result<NamedSeries> {
    let prec = table.precision;
    let wp = prec + 10;
    let tail = TailSum::new(table);
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let c = match target {
            RecenterTarget::AtZero | RecenterTarget::AtOne => {
                // sum_{r >= n/2} binom(2r, n) xi_r (+-1/2)^(2r-n)
                let s = tail.sum(n.div_ceil(2), wp, |r| {
                    &binom_ap(2 * r as u64, n as u64, wp) * &pow2_scaled(table, r, n, wp)
                })?;
                if target == RecenterTarget::AtZero && n % 2 == 1 {
                    s.neg()
                } else {
                    s
                }
            }
            RecenterTarget::MinusHalf => {
                // (-1)^n sum_{2r >= n} binom(2r, n) xi_r
                let s = tail.sum(n.div_ceil(2), wp, |r| {
                    &binom_ap(2 * r as u64, n as u64, wp) * &table.value(r).with_precision(wp)
                })?;
                if n % 2 == 1 {
                    s.neg()
                } else {
                    s
                }
            }
        };
        coeffs.push(c.with_precision(prec));
    }
    let (id, center) = match target {
        RecenterTarget::AtZero => (SeriesId::XiOfS, APReal::zero(prec)),
        RecenterTarget::AtOne => (SeriesId::XiOf1PlusS, APReal::zero(prec)),
        RecenterTarget::MinusHalf => (SeriesId::XiMinusHalfOfS, APReal::zero(prec)),
    };
    Ok(NamedSeries {
        id,
        series: PowerSeries::new(center, SeriesVar::S, coeffs),
        source_depth: table.max_r,
        source_precision: prec,
    })
}

/// Coefficient lists E_n^+ and E_n^- of xi_+(s) and xi_-(s).
///
/// Computed from the double r-sums directly, not from the re-centered
/// series, so the sum/difference identities give an independent check.
pub fn combine_plus_minus(order: usize, table: &CoeffTable) -> Result<(NamedSeries, NamedSeries)> {
    let prec = table.precision;
    let wp = prec + 10;
    let tail = TailSum::new(table);
    let mut plus = Vec::with_capacity(order + 1);
    let mut minus = Vec::with_capacity(order + 1);
    for m in 0..=order {
        let n = m / 2;
        let cross = tail.sum(n + 1, wp, |r| {
            &binom_ap(2 * r as u64, m as u64, wp) * &table.value(r).with_precision(wp)
        })?;
        if m % 2 == 0 {
            // even order 2n: xi_+ has xi_n + cross/2, xi_- has -cross/2
            let own = table.value(n).with_precision(wp);
            plus.push((&own + &cross.div_i64(2)).with_precision(prec));
            minus.push(cross.div_i64(-2).with_precision(prec));
        } else {
            plus.push(cross.div_i64(-2).with_precision(prec));
            minus.push(cross.div_i64(2).with_precision(prec));
        }
    }
    let mk = |id, coeffs| NamedSeries {
        id,
        series: PowerSeries::new(APReal::zero(prec), SeriesVar::S, coeffs),
        source_depth: table.max_r,
        source_precision: prec,
    };
    Ok((mk(SeriesId::XiPlus, plus), mk(SeriesId::XiMinus, minus)))
}

/// Any of the s-domain series by id.
pub fn s_series(id: SeriesId, order: usize, table: &CoeffTable) -> Result<NamedSeries> {
    match id {
        SeriesId::XiOfS => recenter_xi(RecenterTarget::AtZero, order, table),
        SeriesId::XiOf1PlusS => recenter_xi(RecenterTarget::AtOne, order, table),
        SeriesId::XiMinusHalfOfS => recenter_xi(RecenterTarget::MinusHalf, order, table),
        SeriesId::XiPlus => Ok(combine_plus_minus(order, table)?.0),
        SeriesId::XiMinus => Ok(combine_plus_minus(order, table)?.1),
        other => Err(Error::UnknownId(format!(
            "{} is not an s-domain series",
            other.as_str()
        ))),
    }
}

/// Taylor series about w = 0 of the Mobius-composed functions.
///
/// xi_h coefficients exchange the summation order (coefficient-wise in n),
/// with exact r-tail control; the xi_m r-sum is finite for every n.
pub fn w_series(id: SeriesId, order: usize, table: &CoeffTable) -> Result<NamedSeries> {
    let prec = table.precision;
    let wp = prec + 10;
    match id {
        SeriesId::XiHOfW | SeriesId::XiMOfW => {}
        SeriesId::XiPlusOfW | SeriesId::XiMinusOfW => {
            let h = w_series(SeriesId::XiHOfW, order, table)?;
            let m = w_series(SeriesId::XiMOfW, order, table)?;
            let coeffs: Vec<APReal> = (0..=order)
                .map(|n| {
                    let a = h.series.coeff(n).with_precision(wp);
                    let b = m.series.coeff(n).with_precision(wp);
                    let v = if id == SeriesId::XiPlusOfW {
                        &a + &b
                    } else {
                        &a - &b
                    };
                    v.div_i64(2).with_precision(prec)
                })
                .collect();
            return Ok(NamedSeries {
                id,
                series: PowerSeries::new(APReal::zero(prec), SeriesVar::W, coeffs),
                source_depth: table.max_r,
                source_precision: prec,
            });
        }
        other => {
            return Err(Error::UnknownId(format!(
                "{} is not a base w-domain series",
                other.as_str()
            )))
        }
    }
    let tail = TailSum::new(table);
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let c = match id {
            SeriesId::XiHOfW => {
                // sum_r xi_r binom(n + 2r - 1, n); r = 0 only feeds n = 0
                let mut s = tail.sum(1, wp, |r| {
                    &binom_ap(n as u64 + 2 * r as u64 - 1, n as u64, wp)
                        * &table.value(r).with_precision(wp)
                })?;
                if n == 0 {
                    s = &s + &table.value(0).with_precision(wp);
                }
                s
            }
            SeriesId::XiMOfW => {
                // finite sum: xi_r binom(n - 1, 2r - 1) for 1 <= r <= n/2
                let mut s = if n == 0 {
                    table.value(0).with_precision(wp)
                } else {
                    APReal::zero(wp)
                };
                for r in 1..=(n / 2) {
                    if r > table.max_r {
                        return Err(Error::Truncation {
                            required_max_r: n / 2,
                            available: table.max_r,
                        });
                    }
                    let t = &binom_ap(n as u64 - 1, 2 * r as u64 - 1, wp)
                        * &table.value(r).with_precision(wp);
                    s = &s + &t;
                }
                s
            }
            _ => unreachable!(),
        };
        coeffs.push(c.with_precision(prec));
    }
    Ok(NamedSeries {
        id,
        series: PowerSeries::new(APReal::zero(prec), SeriesVar::W, coeffs),
        source_depth: table.max_r,
        source_precision: prec,
    })
}

/// Logarithm of the corresponding w-domain series.
pub fn w_log_series(id: SeriesId, order: usize, table: &CoeffTable) -> Result<NamedSeries> {
    let base_id = match id {
        SeriesId::LogXiHOfW => SeriesId::XiHOfW,
        SeriesId::LogXiMOfW => SeriesId::XiMOfW,
        SeriesId::LogXiPlusOfW => SeriesId::XiPlusOfW,
        SeriesId::LogXiMinusOfW => SeriesId::XiMinusOfW,
        other => {
            return Err(Error::UnknownId(format!(
                "{} is not a log series",
                other.as_str()
            )))
        }
    };
    let base = w_series(base_id, order, table)?;
    if !base.series.coeff(0).is_positive() {
        return Err(Error::Domain(format!(
            "{}: constant term must be positive",
            base_id.as_str()
        )));
    }
    let prec = table.precision;
    let wp = prec + 10;
    let lifted = PowerSeries::new(
        APReal::zero(wp),
        SeriesVar::W,
        base.series
            .coeffs()
            .iter()
            .map(|c| c.with_precision(wp))
            .collect(),
    );
    let logged = series_log(&lifted)?;
    let coeffs = logged
        .coeffs()
        .iter()
        .map(|c| c.with_precision(prec))
        .collect();
    Ok(NamedSeries {
        id,
        series: PowerSeries::new(APReal::zero(prec), SeriesVar::W, coeffs),
        source_depth: table.max_r,
        source_precision: prec,
    })
}

/// xi(1/(1-w) - 1/2) re-expanded about w = 1/2 (series in w-hat = w - 1/2).
///
/// Coefficient of w-hat^n: sum_r xi_r [2^n sum_j binom(2r, j) binom(n-j+2r-1, 2r-1)].
pub fn recenter_w_half(order: usize, table: &CoeffTable) -> Result<NamedSeries> {
    let prec = table.precision;
    let wp = prec + 10;
    let tail = TailSum::new(table);
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut s = tail.sum(1, wp, |r| {
            let mut inner = BigInt::from(0);
            for j in 0..=n.min(2 * r) {
                inner += BigInt::from(binom(2 * r as u64, j as u64))
                    * BigInt::from(binom((n - j + 2 * r - 1) as u64, 2 * r as u64 - 1));
            }
            inner <<= n;
            &APReal::from_bigint(inner, wp) * &table.value(r).with_precision(wp)
        })?;
        if n == 0 {
            s = &s + &table.value(0).with_precision(wp);
        }
        coeffs.push(s.with_precision(prec));
    }
    Ok(NamedSeries {
        id: SeriesId::XiMRecenteredHalf,
        series: PowerSeries::new(
            APReal::one(prec).div_i64(2),
            SeriesVar::W,
            coeffs,
        ),
        source_depth: table.max_r,
        source_precision: prec,
    })
}

/// One scanned point of the log-series growth diagnostic.
#[derive(Clone, Debug)]
pub struct GrowthRow {
    pub w: APReal,
    /// (truncation order, partial sum) pairs in schedule order.
    pub partials: Vec<(usize, APReal)>,
    pub converging: bool,
}

/// Output of [`log_growth_scan`].
#[derive(Clone, Debug)]
pub struct GrowthReport {
    pub id: SeriesId,
    /// Cauchy-root radius estimate from the coefficient growth fit.
    pub radius_estimate: APReal,
    pub rows: Vec<GrowthRow>,
}

/// Partial sums of a log series along real w with a Cauchy-root verdict.
///
/// The radius estimate is a least-squares fit of log|c_n| against n over the
/// top half of the available orders; the per-point verdict compares |w|
/// against it.
pub fn log_growth_scan(
    id: SeriesId,
    w_values: &[APReal],
    order_schedule: &[usize],
    table: &CoeffTable,
) -> Result<GrowthReport> {
    let prec = table.precision;
    for w in w_values {
        if w.abs().cmp_exact(&APReal::one(prec)) != std::cmp::Ordering::Less {
            return Err(Error::Domain(format!(
                "scan point {} outside (-1, 1)",
                w.to_decimal_string(6)
            )));
        }
    }
    let max_order = order_schedule.iter().copied().max().unwrap_or(12).max(64);
    let series = w_log_series(id, max_order, table)?;
    let radius = radius_from_growth(&series.series)?;
    let mut rows = Vec::with_capacity(w_values.len());
    for w in w_values {
        let partials: Vec<(usize, APReal)> = order_schedule
            .iter()
            .map(|&ord| (ord, series.series.eval_partial(w, ord)))
            .collect();
        let converging = w.abs().cmp_exact(&radius) == std::cmp::Ordering::Less;
        rows.push(GrowthRow {
            w: w.clone(),
            partials,
            converging,
        });
    }
    Ok(GrowthReport {
        id,
        radius_estimate: radius,
        rows,
    })
}

/// exp(-slope) of the least-squares line through (n, ln |c_n|) for the top
/// half of the orders; the Cauchy-root shadow of the convergence radius.
pub fn cauchy_radius_estimate(series: &PowerSeries<APReal>) -> Result<APReal> {
    radius_from_growth(series)
}

fn radius_from_growth(series: &PowerSeries<APReal>) -> Result<APReal> {
    let prec = series.precision();
    let n_max = series.order();
    let lo = n_max / 2;
    let mut k = 0i64;
    let mut sx = APReal::zero(prec);
    let mut sy = APReal::zero(prec);
    let mut sxx = APReal::zero(prec);
    let mut sxy = APReal::zero(prec);
    for n in lo..=n_max {
        let c = series.coeff(n);
        if c.is_zero() {
            continue;
        }
        let x = APReal::from_i64(n as i64, prec);
        let y = c.abs().ln()?;
        k += 1;
        sx = &sx + &x;
        sy = &sy + &y;
        sxx = &sxx + &(&x * &x);
        sxy = &sxy + &(&x * &y);
    }
    if k < 2 {
        return Err(Error::Domain(
            "growth fit needs at least two nonzero coefficients".into(),
        ));
    }
    let kf = APReal::from_i64(k, prec);
    let denom = &(&kf * &sxx) - &(&sx * &sx);
    let slope = &(&(&kf * &sxy) - &(&sx * &sy)) / &denom;
    Ok(slope.neg().exp())
}

/// CSV export: header line naming the series, then `n,<decimal>` rows.
pub fn series_to_csv(s: &NamedSeries) -> String {
    let mut out = format!(
        "# id={} center={} variable={} precision={}\n",
        s.id.as_str(),
        s.series.center.to_decimal_string(6),
        s.series.variable,
        s.source_precision
    );
    for (n, c) in s.series.coeffs().iter().enumerate() {
        out.push_str(&format!(
            "{n},{}\n",
            c.to_decimal_string(s.source_precision)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pustylnikov::xi_coeff_table;
    use crate::specfun::SpecFunContext;
    use std::sync::OnceLock;

    fn table() -> &'static CoeffTable {
        static TABLE: OnceLock<CoeffTable> = OnceLock::new();
        TABLE.get_or_init(|| xi_coeff_table(40, &SpecFunContext::new(30)).unwrap())
    }

    fn expect(s: &str) -> APReal {
        APReal::parse(s, 40).unwrap()
    }

    fn close(a: &APReal, b: &APReal, exp: i64) -> bool {
        (a - b).abs().sci_exponent() < exp
    }

    #[test]
    fn f_series_leading_coefficients() {
        let f = recenter_xi(RecenterTarget::AtZero, 4, table()).unwrap();
        assert!(close(
            f.series.coeff(0),
            &expect("0.500000000000000000000000"),
            -22
        ));
        assert!(close(
            f.series.coeff(1),
            &expect("-0.0115478544830605169071551"),
            -22
        ));
        assert!(close(
            f.series.coeff(2),
            &expect("0.0116719322671130915674412"),
            -22
        ));
    }

    #[test]
    fn d_series_leading_coefficients() {
        let d = recenter_xi(RecenterTarget::MinusHalf, 2, table()).unwrap();
        assert!(close(
            d.series.coeff(0),
            &expect("0.508731038726323958025671"),
            -22
        ));
        assert!(close(
            d.series.coeff(1),
            &expect("-0.0234707786048020825988372"),
            -22
        ));
    }

    #[test]
    fn one_plus_s_series_mirrors_signs() {
        let f = recenter_xi(RecenterTarget::AtZero, 6, table()).unwrap();
        let g = recenter_xi(RecenterTarget::AtOne, 6, table()).unwrap();
        for n in 0..=6 {
            let mirrored = if n % 2 == 1 {
                f.series.coeff(n).neg()
            } else {
                f.series.coeff(n).clone()
            };
            assert!(close(g.series.coeff(n), &mirrored, -24), "n = {n}");
        }
    }

    #[test]
    fn plus_minus_split_matches_published_values() {
        let (p, m) = combine_plus_minus(2, table()).unwrap();
        assert!(close(
            p.series.coeff(0),
            &expect("0.502925908457319033969223"),
            -22
        ));
        assert!(close(
            m.series.coeff(0),
            &expect("-0.005805130269004924056449"),
            -22
        ));
        assert!(close(
            p.series.coeff(1),
            &expect("-0.0117353893024010412994186"),
            -22
        ));
    }

    #[test]
    fn sum_and_difference_identities() {
        let order = 8;
        let (p, m) = combine_plus_minus(order, table()).unwrap();
        let d = recenter_xi(RecenterTarget::MinusHalf, order, table()).unwrap();
        for n in 0..=order {
            // E_n^+ + E_n^- is the n-th coefficient of xi(s + 1/2)
            let sum = &p.series.coeff(n).clone() + m.series.coeff(n);
            let c_n = if n % 2 == 0 {
                table().value(n / 2).clone()
            } else {
                APReal::zero(30)
            };
            assert!(close(&sum, &c_n, -24), "sum identity at {n}");
            let diff = &p.series.coeff(n).clone() - m.series.coeff(n);
            assert!(close(&diff, d.series.coeff(n), -24), "difference at {n}");
        }
    }

    #[test]
    fn w_series_match_published_leading_terms() {
        let h = w_series(SeriesId::XiHOfW, 3, table()).unwrap();
        assert!(close(
            h.series.coeff(0),
            &expect("0.508731038726323958025671"),
            -22
        ));
        assert!(close(
            h.series.coeff(1),
            &expect("0.0234707786048020825988372"),
            -22
        ));
        let m = w_series(SeriesId::XiMOfW, 3, table()).unwrap();
        assert!(close(
            m.series.coeff(0),
            &expect("0.497120778188314109912774"),
            -22
        ));
        assert!(m.series.coeff(1).is_zero());
        // coefficient of w^3 is exactly 2 xi_1
        assert!(close(
            m.series.coeff(3),
            &table().value(1).mul_i64(2),
            -24
        ));
    }

    #[test]
    fn log_series_constants() {
        let lh = w_log_series(SeriesId::LogXiHOfW, 2, table()).unwrap();
        assert!(close(
            lh.series.coeff(0),
            &expect("-0.675835813236695767842275"),
            -22
        ));
        let lm = w_log_series(SeriesId::LogXiMinusOfW, 2, table()).unwrap();
        assert!(close(
            lm.series.coeff(0),
            &expect("-5.1490132232563522103123"),
            -19
        ));
    }

    #[test]
    fn exp_of_log_reproduces_w_series() {
        let order = 12;
        let base = w_series(SeriesId::XiHOfW, order, table()).unwrap();
        let logged = w_log_series(SeriesId::LogXiHOfW, order, table()).unwrap();
        let back = crate::apcore::series_exp(&logged.series);
        for n in 0..=order {
            assert!(
                close(back.coeff(n), base.series.coeff(n), -28),
                "coefficient {n}"
            );
        }
    }

    #[test]
    fn recentered_half_starts_at_d0() {
        let s = recenter_w_half(4, table()).unwrap();
        assert!(close(
            s.series.coeff(0),
            &expect("0.508731038726323958025671"),
            -22
        ));
    }

    #[test]
    fn recentered_half_radius_is_one_half() {
        // the essential singularity sits at w = 1, i.e. at distance 1/2
        // from the new center, so the coefficients grow like 2^n
        let s = recenter_w_half(64, table()).unwrap();
        let r = cauchy_radius_estimate(&s.series).unwrap().to_f64_approx();
        assert!((0.42..0.58).contains(&r), "radius estimate {r}");
    }

    #[test]
    fn growth_scan_radius_near_one() {
        let ws = [expect("0.4"), expect("-0.7")];
        let report = log_growth_scan(SeriesId::LogXiMOfW, &ws, &[8, 12], table()).unwrap();
        let r = report.radius_estimate.to_f64_approx();
        assert!((0.8..1.2).contains(&r), "radius estimate {r}");
        assert!(report.rows.iter().all(|row| row.converging));
        // order-8 vs order-12 partial sums settle at w = 0.4
        let row = &report.rows[0];
        let d = (&row.partials[0].1 - &row.partials[1].1).abs();
        assert!(d.to_f64_approx() < 1e-3);
    }

    #[test]
    fn log_xi_h_coefficients_all_positive() {
        let lh = w_log_series(SeriesId::LogXiHOfW, 12, table()).unwrap();
        for n in 1..=12 {
            assert!(lh.series.coeff(n).is_positive(), "coefficient {n}");
        }
    }

    #[test]
    fn odd_coefficients_vanish_when_shifted_back_to_center() {
        // re-center the D series by +1: xi((s+1) - 1/2) = xi(s + 1/2).
        // Order 30 keeps the binomial-shift tail far below the target.
        let d = recenter_xi(RecenterTarget::MinusHalf, 30, table()).unwrap();
        let shifted = d.series.recentered(&APReal::one(30));
        for n in (1..=9).step_by(2) {
            assert!(
                shifted.coeff(n).abs().sci_exponent() < -(30 - 2),
                "odd coefficient {n} = {}",
                shifted.coeff(n).to_decimal_string(6)
            );
        }
    }

    #[test]
    fn recentered_series_tracks_direct_evaluation() {
        // order-12 xi(s) series at s = 0.2 vs xi_direct(0.2), within the
        // geometric tail bound |c_13| 0.2^13 / (1 - 0.2)
        let f = recenter_xi(RecenterTarget::AtZero, 13, table()).unwrap();
        let s = expect("0.2").with_precision(30);
        let series_val = f.series.eval_partial(&s, 12);
        let direct = crate::specfun::xi_direct(
            &crate::apcore::APComplex::from_real(s.clone()),
            &SpecFunContext::new(30),
        );
        let tail = &f.series.coeff(13).abs().mul_i64(1) * &s.powi(13);
        let bound = tail.div_i64(4).mul_i64(5); // / (1 - 0.2)
        let diff = (&series_val - direct.re()).abs();
        assert!(
            diff.cmp_exact(&bound) == std::cmp::Ordering::Less,
            "diff {} vs bound {}",
            diff.to_decimal_string(4),
            bound.to_decimal_string(4)
        );
    }

    #[test]
    fn xi_h_partial_sums_increase_with_w() {
        let h = w_series(SeriesId::XiHOfW, 12, table()).unwrap();
        let pts = ["0", "0.25", "0.5", "0.75", "0.95"];
        let mut prev: Option<APReal> = None;
        for p in pts {
            let v = h.series.eval(&expect(p).with_precision(30));
            if let Some(prior) = prev {
                assert!(
                    v.cmp_exact(&prior) == std::cmp::Ordering::Greater,
                    "partial sum not increasing at w = {p}"
                );
            }
            prev = Some(v);
        }
    }

    #[test]
    fn shallow_table_reports_required_depth() {
        let small = xi_coeff_table(2, &SpecFunContext::new(30)).unwrap();
        match recenter_xi(RecenterTarget::AtZero, 2, &small) {
            Err(Error::Truncation {
                required_max_r,
                available,
            }) => {
                assert_eq!(available, 2);
                assert!(required_max_r > 2);
            }
            other => panic!("expected truncation error, got {other:?}"),
        }
    }

    #[test]
    fn csv_export_shape() {
        let f = recenter_xi(RecenterTarget::AtZero, 2, table()).unwrap();
        let csv = series_to_csv(&f);
        let mut lines = csv.lines();
        let header = lines.next().unwrap();
        assert!(header.contains("id=xi_of_s"));
        assert!(header.contains("variable=s"));
        assert!(header.contains("precision=30"));
        assert_eq!(lines.count(), 3);
    }
}
