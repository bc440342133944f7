//! Decomposition of log xi(s - 1/2) near w = 1: an asymptotic prefactor
//! expansion plus a truncated Dirichlet approximation of log zeta, with a
//! comparison table against the direct evaluator.
//!
//! With s = 1/(1-w) the zeta argument is S = s - 1/2 = (1+w)/(2(1-w)); the
//! prefactor is xi(S)/zeta(S) and its expansion in (w-1) is
//!
//!   log[2 e pi (1-w)]/(2(w-1)) + (log(2 pi^3) - 5 log(1-w))/4
//!     + (73/48)(w-1) + O((w-1)^2).

use crate::apcore::{pi, APComplex, APReal};
use crate::error::{Error, Result};
use crate::specfun::{xi_direct, zeta_fn, SpecFunContext};

/// Truncation choices for the approximation.
#[derive(Clone, Debug)]
pub struct ApproxConfig {
    /// Highest kept term of the prefactor expansion: 0, 1, or 2.
    pub prefactor_order: u32,
    /// Terms of the Dirichlet partial sum (>= 1).
    pub dirichlet_terms: u32,
    pub precision: u32,
}

impl Default for ApproxConfig {
    fn default() -> Self {
        ApproxConfig {
            prefactor_order: 2,
            dirichlet_terms: 4,
            precision: 30,
        }
    }
}

fn check_open_unit(w: &APReal) -> Result<()> {
    let one = APReal::one(w.precision());
    if !w.is_positive() || w.cmp_exact(&one) != std::cmp::Ordering::Less {
        return Err(Error::Domain(format!(
            "prefactor expansion needs 0 < w < 1, got {}",
            w.to_decimal_string(6)
        )));
    }
    Ok(())
}

/// Partial sum of the prefactor expansion up to `prefactor_order` terms.
pub fn prefactor_log(w: &APReal, cfg: &ApproxConfig) -> Result<APReal> {
    check_open_unit(w)?;
    let p = cfg.precision;
    let wp = p + 10;
    let ww = w.with_precision(wp);
    let one = APReal::one(wp);
    let one_minus_w = &one - &ww;
    let w_minus_1 = one_minus_w.neg();
    let pi_v = pi(wp);

    // term 0: log[2 e pi (1-w)] / (2(w-1))
    let ln_arg = (&pi_v.mul_i64(2) * &one_minus_w).ln()? ;
    let ln_2epi = &ln_arg + &one; // log(2 pi (1-w)) + log e
    let mut acc = &ln_2epi / &w_minus_1.mul_i64(2);
    if cfg.prefactor_order >= 1 {
        // (log(2 pi^3) - 5 log(1-w)) / 4
        let ln_2pi3 = pi_v.powi(3).mul_i64(2).ln()?;
        let t1 = (&ln_2pi3 - &one_minus_w.ln()?.mul_i64(5)).div_i64(4);
        acc = &acc + &t1;
    }
    if cfg.prefactor_order >= 2 {
        acc = &acc + &w_minus_1.mul_i64(73).div_i64(48);
    }
    Ok(acc.with_precision(p))
}

/// Individual prefactor partial sums S_0, S_1, S_2 (for correction-size checks).
pub fn prefactor_partials(w: &APReal, cfg: &ApproxConfig) -> Result<[APReal; 3]> {
    let mut c = cfg.clone();
    c.prefactor_order = 0;
    let s0 = prefactor_log(w, &c)?;
    c.prefactor_order = 1;
    let s1 = prefactor_log(w, &c)?;
    c.prefactor_order = 2;
    let s2 = prefactor_log(w, &c)?;
    Ok([s0, s1, s2])
}

/// The zeta argument S = (1+w)/(2(1-w)).
fn zeta_argument(w: &APReal, wp: u32) -> APReal {
    let one = APReal::one(wp);
    let ww = w.with_precision(wp);
    &(&one + &ww) / &(&one - &ww).mul_i64(2)
}

/// log of the `dirichlet_terms`-term partial sum of zeta(S).
pub fn dirichlet_log(w: &APReal, cfg: &ApproxConfig) -> Result<APReal> {
    let p = cfg.precision;
    if cfg.dirichlet_terms < 1 {
        return Err(Error::Domain("dirichlet_terms must be at least 1".into()));
    }
    let one = APReal::one(p);
    if w.cmp_exact(&one) != std::cmp::Ordering::Less {
        return Err(Error::Domain(format!(
            "dirichlet approximation needs w < 1, got {}",
            w.to_decimal_string(6)
        )));
    }
    let wp = p + 10;
    let s_arg = zeta_argument(w, wp);
    let mut sum = APReal::one(wp);
    for n in 2..=cfg.dirichlet_terms {
        // n^-S = exp(-S ln n)
        let t = (&s_arg.neg() * &APReal::from_i64(n as i64, wp).ln()?).exp();
        sum = &sum + &t;
    }
    Ok(sum.ln()?.with_precision(p))
}

/// Relative error of [`dirichlet_log`] against log zeta at the same argument.
pub fn dirichlet_rel_error(w: &APReal, cfg: &ApproxConfig) -> Result<APReal> {
    let p = cfg.precision;
    let wp = p + 10;
    let approx = dirichlet_log(w, cfg)?;
    let s_arg = zeta_argument(w, wp);
    let truth = zeta_fn(&APComplex::from_real(s_arg), wp)?
        .re()
        .ln()?;
    Ok((&(&truth - &approx) / &truth).abs().with_precision(p))
}

/// One row of the comparison table.
#[derive(Clone, Debug)]
pub struct CompareRow {
    pub w: APReal,
    pub approx: APReal,
    pub direct: APReal,
    pub abs_err: APReal,
    pub rel_err: APReal,
}

/// prefactor_log + dirichlet_log against log xi_direct(1/(1-w) - 1/2).
pub fn approx_compare(w_grid: &[APReal], cfg: &ApproxConfig) -> Result<Vec<CompareRow>> {
    let p = cfg.precision;
    let wp = p + 10;
    let ctx = SpecFunContext::new(wp);
    let mut rows = Vec::with_capacity(w_grid.len());
    for w in w_grid {
        let approx = &prefactor_log(w, cfg)? + &dirichlet_log(w, cfg)?;
        let s_arg = zeta_argument(w, wp);
        let direct = xi_direct(&APComplex::from_real(s_arg), &ctx).re().ln()?;
        let abs_err = (&approx.with_precision(wp) - &direct).abs();
        let rel_err = (&abs_err / &direct.abs()).with_precision(p);
        rows.push(CompareRow {
            w: w.clone(),
            approx: approx.with_precision(p),
            direct: direct.with_precision(p),
            abs_err: abs_err.with_precision(p),
            rel_err,
        });
    }
    Ok(rows)
}

/// CSV export of the comparison table.
pub fn compare_to_csv(rows: &[CompareRow], sig: u32) -> String {
    let mut out = String::from("w,approx,direct,abs_err,rel_err\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.w.to_decimal_string(sig),
            r.approx.to_decimal_string(sig),
            r.direct.to_decimal_string(sig),
            r.abs_err.to_decimal_string(sig),
            r.rel_err.to_decimal_string(sig)
        ));
    }
    out
}
