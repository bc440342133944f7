//! Golden-test harness: replays every reference number through the owning
//! module and emits a machine-readable verification report.
//!
//! Flagged items (the two known transcription slips) report their deviation
//! but never fail a suite.

pub mod golden;

use serde::Serialize;

use crate::apcore::APReal;
use crate::error::{Error, Result};
use crate::expansions::{
    combine_plus_minus, recenter_xi, w_log_series, w_series, RecenterTarget, SeriesId,
};
use crate::keiper::sigma_from_series;
use crate::pustylnikov::{xi_coeff, xi_coeff_table, CoeffTable};
use crate::riemann::{approx_compare, dirichlet_rel_error, ApproxConfig};
use crate::specfun::{
    closed_form_coeff, zeta_half_identity_residual, ClosedFormId, SpecFunContext,
};
use crate::wplane::table1;
use golden::{GoldenSpec, Tol};

/// Which golden suite to replay.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    PustylnikovCoeffs,
    SeriesS,
    SeriesW,
    LogSeriesW,
    KeiperSigma,
    Table1,
    ClosedForms,
    RiemannErrors,
    All,
}

impl Suite {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(match text {
            "pustylnikov_coeffs" => Self::PustylnikovCoeffs,
            "series_s" => Self::SeriesS,
            "series_w" => Self::SeriesW,
            "log_series_w" => Self::LogSeriesW,
            "keiper_sigma" => Self::KeiperSigma,
            "table1" => Self::Table1,
            "closed_forms" => Self::ClosedForms,
            "riemann_errors" => Self::RiemannErrors,
            "all" => Self::All,
            other => return Err(Error::UnknownId(format!("unknown suite {other:?}"))),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::PustylnikovCoeffs => "pustylnikov_coeffs",
            Self::SeriesS => "series_s",
            Self::SeriesW => "series_w",
            Self::LogSeriesW => "log_series_w",
            Self::KeiperSigma => "keiper_sigma",
            Self::Table1 => "table1",
            Self::ClosedForms => "closed_forms",
            Self::RiemannErrors => "riemann_errors",
            Self::All => "all",
        }
    }
}

/// Verification parameters.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub precision: u32,
    pub table_depth: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            precision: 30,
            table_depth: 200,
        }
    }
}

/// Outcome of one golden item.
#[derive(Clone, Debug, Serialize)]
pub struct ItemResult {
    pub id: String,
    pub source: String,
    pub expected: String,
    pub computed: String,
    pub deviation: String,
    pub tolerance: String,
    pub pass: bool,
    pub flagged: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub flagged_failures: usize,
    pub unflagged_failures: usize,
}

/// Full report for one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub precision: u32,
    pub table_depth: usize,
    pub dataset_checksum: String,
    pub items: Vec<ItemResult>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn all_clear(&self) -> bool {
        self.summary.unflagged_failures == 0
    }
}

fn judge(spec: &GoldenSpec, computed: &APReal, precision: u32) -> ItemResult {
    let wp = precision + 10;
    let (deviation, pass) = match spec.tol {
        Tol::Abs(bound) => {
            let expected = APReal::parse(spec.expected, wp).unwrap();
            let b = APReal::parse(bound, wp).unwrap();
            let dev = (computed - &expected).abs();
            let pass = dev.cmp_exact(&b) != std::cmp::Ordering::Greater;
            (dev.to_decimal_string(3), pass)
        }
        Tol::Rel(bound) => {
            let expected = APReal::parse(spec.expected, wp).unwrap();
            let b = APReal::parse(bound, wp).unwrap();
            let dev = (&(computed - &expected) / &expected).abs();
            let pass = dev.cmp_exact(&b) != std::cmp::Ordering::Greater;
            (dev.to_decimal_string(3), pass)
        }
        Tol::FactorOf(f) => {
            let expected = APReal::parse(spec.expected, wp).unwrap();
            let ratio = &computed.abs() / &expected.abs();
            let hi = APReal::from_i64(f as i64, wp);
            let lo = hi.recip();
            let pass = ratio.cmp_exact(&lo) != std::cmp::Ordering::Less
                && ratio.cmp_exact(&hi) != std::cmp::Ordering::Greater;
            (ratio.to_decimal_string(3), pass)
        }
        Tol::Bool => {
            let truth = !computed.is_zero();
            let pass = (spec.expected == "true") == truth;
            ((if truth { "true" } else { "false" }).to_string(), pass)
        }
    };
    let computed_str = if spec.tol == Tol::Bool {
        deviation.clone()
    } else {
        computed.to_decimal_string(precision)
    };
    ItemResult {
        id: spec.id.to_string(),
        source: spec.source.to_string(),
        expected: spec.expected.to_string(),
        computed: computed_str,
        deviation,
        tolerance: spec.tol.render(),
        pass,
        flagged: spec.flagged,
        note: spec.note.to_string(),
    }
}

fn suite_pustylnikov(cfg: &VerifyConfig) -> Result<Vec<ItemResult>> {
    let ctx = SpecFunContext::new(cfg.precision);
    let specs = golden::pustylnikov_items();
    let mut out = Vec::with_capacity(specs.len());
    for (r, spec) in specs.iter().enumerate() {
        let v = xi_coeff(r, &ctx);
        out.push(judge(spec, &v, cfg.precision));
    }
    Ok(out)
}

fn suite_series_s(cfg: &VerifyConfig, table: &CoeffTable) -> Result<Vec<ItemResult>> {
    let specs = golden::series_s_items();
    let f = recenter_xi(RecenterTarget::AtZero, 10, table)?;
    let d = recenter_xi(RecenterTarget::MinusHalf, 10, table)?;
    let (ep, em) = combine_plus_minus(10, table)?;
    let mut out = Vec::with_capacity(specs.len());
    for (i, spec) in specs.iter().enumerate() {
        let (series, n) = match i / 11 {
            0 => (&f, i % 11),
            1 => (&d, i % 11),
            2 => (&ep, i % 11),
            _ => (&em, i % 11),
        };
        out.push(judge(spec, series.series.coeff(n), cfg.precision));
    }
    Ok(out)
}

fn suite_series_w(cfg: &VerifyConfig, table: &CoeffTable) -> Result<Vec<ItemResult>> {
    let specs = golden::series_w_items();
    let h = w_series(SeriesId::XiHOfW, 12, table)?;
    let m = w_series(SeriesId::XiMOfW, 12, table)?;
    let mut out = Vec::with_capacity(specs.len());
    for (i, spec) in specs.iter().enumerate() {
        let series = if i < 13 { &h } else { &m };
        out.push(judge(spec, series.series.coeff(i % 13), cfg.precision));
    }
    Ok(out)
}

fn suite_log_series_w(cfg: &VerifyConfig, table: &CoeffTable) -> Result<Vec<ItemResult>> {
    let specs = golden::log_series_w_items();
    let series = [
        w_log_series(SeriesId::LogXiHOfW, 12, table)?,
        w_log_series(SeriesId::LogXiMOfW, 12, table)?,
        w_log_series(SeriesId::LogXiPlusOfW, 12, table)?,
        w_log_series(SeriesId::LogXiMinusOfW, 12, table)?,
    ];
    let mut out = Vec::with_capacity(specs.len());
    for (i, spec) in specs.iter().enumerate() {
        out.push(judge(
            spec,
            series[i / 13].series.coeff(i % 13),
            cfg.precision,
        ));
    }
    Ok(out)
}

fn suite_keiper(cfg: &VerifyConfig, table: &CoeffTable) -> Result<Vec<ItemResult>> {
    let specs = golden::keiper_items();
    let xi0 = recenter_xi(RecenterTarget::AtZero, 12, table)?;
    let sigma = sigma_from_series(&xi0, 10)?;
    let mut out = Vec::with_capacity(specs.len());
    for (k, spec) in specs.iter().take(10).enumerate() {
        out.push(judge(spec, &sigma[k], cfg.precision));
    }
    // flagged printed bound vs computed 2 sigma_1
    let bound = sigma[0].mul_i64(2);
    out.push(judge(&specs[10], &bound, cfg.precision));
    Ok(out)
}

fn suite_table1(cfg: &VerifyConfig) -> Result<Vec<ItemResult>> {
    let ctx = SpecFunContext::new(cfg.precision);
    let rows = table1(&ctx);
    let specs = golden::table1_items();
    let mut out = Vec::with_capacity(specs.len());
    for (i, spec) in specs.iter().enumerate() {
        let row = &rows[i / 2];
        let v = if i % 2 == 0 {
            &row.xi_plus_half
        } else {
            &row.xi_minus_half
        };
        out.push(judge(spec, v, cfg.precision));
    }
    Ok(out)
}

fn suite_closed_forms(cfg: &VerifyConfig) -> Result<Vec<ItemResult>> {
    let ctx = SpecFunContext::new(cfg.precision);
    let specs = golden::closed_form_items();
    let ids = [
        ClosedFormId::C0,
        ClosedFormId::C1,
        ClosedFormId::C2,
        ClosedFormId::D0,
        ClosedFormId::D1,
        ClosedFormId::F0,
        ClosedFormId::F1,
        ClosedFormId::F2,
    ];
    let mut out = Vec::with_capacity(specs.len());
    for (i, id) in ids.iter().enumerate() {
        let v = closed_form_coeff(*id, &ctx)?;
        out.push(judge(&specs[i], &v, cfg.precision));
    }
    let residual = zeta_half_identity_residual(&ctx)?;
    out.push(judge(&specs[8], &residual, cfg.precision));
    Ok(out)
}

fn suite_riemann(cfg: &VerifyConfig) -> Result<Vec<ItemResult>> {
    let specs = golden::riemann_items();
    let acfg = ApproxConfig {
        prefactor_order: 2,
        dirichlet_terms: 4,
        precision: cfg.precision,
    };
    let mut out = Vec::with_capacity(specs.len());
    for (i, point) in ["0.8", "0.85", "0.9"].iter().enumerate() {
        let w = APReal::parse(point, cfg.precision).unwrap();
        let err = dirichlet_rel_error(&w, &acfg)?;
        out.push(judge(&specs[i], &err, cfg.precision));
    }
    let grid: Vec<APReal> = ["0.8", "0.85", "0.9", "0.95"]
        .iter()
        .map(|s| APReal::parse(s, cfg.precision).unwrap())
        .collect();
    let rows = approx_compare(&grid, &acfg)?;
    let monotone = rows
        .windows(2)
        .all(|p| p[1].abs_err.cmp_exact(&p[0].abs_err) == std::cmp::Ordering::Less);
    let flag = if monotone {
        APReal::one(cfg.precision)
    } else {
        APReal::zero(cfg.precision)
    };
    out.push(judge(&specs[3], &flag, cfg.precision));
    Ok(out)
}

fn needs_table(suite: Suite) -> bool {
    matches!(
        suite,
        Suite::SeriesS | Suite::SeriesW | Suite::LogSeriesW | Suite::KeiperSigma | Suite::All
    )
}

/// Run one suite (or all of them) against a prebuilt coefficient table.
pub fn run_suite_with_table(
    suite: Suite,
    cfg: &VerifyConfig,
    table: Option<&CoeffTable>,
) -> Result<VerificationReport> {
    let owned;
    let table = if needs_table(suite) {
        match table {
            Some(t) => t,
            None => {
                let ctx = SpecFunContext::new(cfg.precision);
                owned = xi_coeff_table(cfg.table_depth, &ctx)?;
                &owned
            }
        }
    } else {
        match table {
            Some(t) => t,
            None => {
                owned = CoeffTable {
                    max_r: 0,
                    precision: cfg.precision,
                    values: vec![APReal::one(cfg.precision)],
                    provenance: crate::pustylnikov::Provenance::File,
                };
                &owned
            }
        }
    };
    let items = match suite {
        Suite::PustylnikovCoeffs => suite_pustylnikov(cfg)?,
        Suite::SeriesS => suite_series_s(cfg, table)?,
        Suite::SeriesW => suite_series_w(cfg, table)?,
        Suite::LogSeriesW => suite_log_series_w(cfg, table)?,
        Suite::KeiperSigma => suite_keiper(cfg, table)?,
        Suite::Table1 => suite_table1(cfg)?,
        Suite::ClosedForms => suite_closed_forms(cfg)?,
        Suite::RiemannErrors => suite_riemann(cfg)?,
        Suite::All => {
            let mut items = suite_pustylnikov(cfg)?;
            items.extend(suite_series_s(cfg, table)?);
            items.extend(suite_series_w(cfg, table)?);
            items.extend(suite_log_series_w(cfg, table)?);
            items.extend(suite_keiper(cfg, table)?);
            items.extend(suite_table1(cfg)?);
            items.extend(suite_closed_forms(cfg)?);
            items.extend(suite_riemann(cfg)?);
            items
        }
    };
    let total = items.len();
    let passed = items.iter().filter(|i| i.pass).count();
    let failed = total - passed;
    let flagged_failures = items.iter().filter(|i| !i.pass && i.flagged).count();
    Ok(VerificationReport {
        suite: suite.name().to_string(),
        precision: cfg.precision,
        table_depth: cfg.table_depth,
        dataset_checksum: format!("{:016x}", golden::dataset_checksum()),
        items,
        summary: Summary {
            total,
            passed,
            failed,
            flagged_failures,
            unflagged_failures: failed - flagged_failures,
        },
    })
}

/// Run one suite, building the coefficient table when the suite needs it.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<VerificationReport> {
    run_suite_with_table(suite, cfg, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn small_cfg() -> VerifyConfig {
        VerifyConfig {
            precision: 30,
            table_depth: 40,
        }
    }

    fn shared_table() -> &'static CoeffTable {
        static TABLE: OnceLock<CoeffTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            xi_coeff_table(40, &SpecFunContext::new(30)).unwrap()
        })
    }

    #[test]
    fn suite_names_round_trip() {
        for s in [
            Suite::PustylnikovCoeffs,
            Suite::SeriesS,
            Suite::SeriesW,
            Suite::LogSeriesW,
            Suite::KeiperSigma,
            Suite::Table1,
            Suite::ClosedForms,
            Suite::RiemannErrors,
            Suite::All,
        ] {
            assert_eq!(Suite::parse(s.name()).unwrap(), s);
        }
        assert!(Suite::parse("bogus").is_err());
    }

    #[test]
    fn table1_suite_reports_exactly_one_flagged_discrepancy() {
        let report = run_suite(Suite::Table1, &small_cfg()).unwrap();
        assert_eq!(report.summary.total, 12);
        assert_eq!(report.summary.unflagged_failures, 0);
        assert_eq!(report.summary.flagged_failures, 1);
        let flagged: Vec<_> = report.items.iter().filter(|i| !i.pass).collect();
        assert_eq!(flagged.len(), 1);
        assert_eq!(flagged[0].id, "table1_xi_up_w_0");
        assert!(flagged[0].flagged);
    }

    #[test]
    fn series_w_suite_is_clean_at_depth_40() {
        let report =
            run_suite_with_table(Suite::SeriesW, &small_cfg(), Some(shared_table())).unwrap();
        assert!(report.all_clear(), "{}", report.to_json());
        assert_eq!(report.summary.total, 26);
    }

    #[test]
    fn closed_forms_suite_is_clean() {
        let report = run_suite(Suite::ClosedForms, &small_cfg()).unwrap();
        assert!(report.all_clear(), "{}", report.to_json());
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite(Suite::Table1, &small_cfg()).unwrap().to_json();
        let b = run_suite(Suite::Table1, &small_cfg()).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn checksum_is_pinned() {
        // freezes the golden dataset; update only on a deliberate edit
        assert_eq!(
            format!("{:016x}", golden::dataset_checksum()),
            golden_checksum_pin()
        );
    }

    fn golden_checksum_pin() -> String {
        "96bc7d736e8a5726".to_string()
    }
}
