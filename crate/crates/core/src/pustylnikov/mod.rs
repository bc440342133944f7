//! Pustylnikov coefficients xi_r of xi(s + 1/2) = sum xi_r s^(2r).
//!
//! The integral route evaluates, after u = log x,
//!
//!   I(2r) = int_0^inf u^(2r-2) [16 2r (2r-1) - u^2] e^(u/4) omega(e^u) du,
//!   xi_r  = 2^-(2r+2) / (2r)! * I(2r),
//!
//! by composite Gauss-Legendre panels on [0, U] with U picked from the
//! double-exponential tail bound omega(e^u) < 2 e^(-pi e^u). The integrand
//! is degenerate at r = 0, where the coefficient is xi(1/2) itself, taken
//! from the direct evaluator. A Cauchy-circle oracle differentiates
//! xi_direct about s = 1/2 independently of the integral.

pub mod quadrature;

use std::io::Write;
use std::path::Path;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::apcore::{pi, APComplex, APReal};
use crate::error::{Error, Result};
use crate::specfun::bernoulli::factorial;
use crate::specfun::omega::omega;
use crate::specfun::{xi_direct, SpecFunContext};
use quadrature::{gauss_legendre, integrate_composite};

const LOG10_2: f64 = std::f64::consts::LOG10_2;

/// Where a table's values came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Integral,
    Oracle,
    File,
}

/// Indexed cache of Pustylnikov coefficients with precision metadata.
#[derive(Clone, Debug)]
pub struct CoeffTable {
    pub max_r: usize,
    pub precision: u32,
    pub values: Vec<APReal>,
    pub provenance: Provenance,
}

impl CoeffTable {
    pub fn value(&self, r: usize) -> &APReal {
        &self.values[r]
    }

    /// Positivity for every entry; super-geometric decay between
    /// consecutive entries from r = 1 on.
    pub fn validate(&self) -> Result<()> {
        self.validate_positivity()?;
        let tenth = APReal::parse("0.1", self.precision).unwrap();
        for r in 1..self.max_r {
            let ratio = &self.values[r + 1] / &self.values[r];
            if ratio.cmp_exact(&tenth) != std::cmp::Ordering::Less {
                return Err(Error::InvariantViolation(format!(
                    "xi_{}/xi_{} = {} is not below 1/10",
                    r + 1,
                    r,
                    ratio.to_decimal_string(6)
                )));
            }
        }
        Ok(())
    }

    pub fn validate_positivity(&self) -> Result<()> {
        for (r, v) in self.values.iter().enumerate() {
            if !v.is_positive() {
                return Err(Error::InvariantViolation(format!(
                    "xi_{r} = {} is not strictly positive",
                    v.to_decimal_string(6)
                )));
            }
        }
        Ok(())
    }
}

/// Working precision for the integral at index r: the 2^-(2r+2)/(2r)! scaling
/// and the bracket sign change cost about 2r log10(2) digits of headroom.
fn integral_precision(r: usize, precision: u32) -> u32 {
    precision + 10 + (2.0 * r as f64 * LOG10_2).ceil() as u32
}

/// Upper integration limit: beyond U the integrand sits under
/// 10^-(wp + 10) thanks to omega(e^u) < 2 e^(-pi e^u).
fn upper_limit(r: usize, wp: u32) -> f64 {
    let m = (wp as f64 + 12.0) * std::f64::consts::LN_10;
    let c_r = (16 * 2 * r.max(1) * (2 * r.max(1) - 1)) as f64;
    let mut u = 3.0f64;
    for _ in 0..40 {
        let rhs = m + u / 4.0 + (2 * r) as f64 * u.max(1.0).ln() + c_r.ln() + 7.0;
        u = (rhs / std::f64::consts::PI).ln();
    }
    (u * 100.0).ceil() / 100.0
}

/// Nodes per panel so the worst local decay rate resolves below 10^-(wp+10).
fn nodes_per_panel(wp: u32, h: f64) -> usize {
    let denom = (0.868 - 2.0 * (1.7 * h).log10()).max(0.8);
    let n = ((wp as f64 + 12.0) / denom).ceil() as usize;
    n.max(32).next_multiple_of(4)
}

struct Integrand {
    ctx: SpecFunContext,
    quarter: APReal,
}

impl Integrand {
    fn new(wp: u32) -> Self {
        Integrand {
            ctx: SpecFunContext::new(wp),
            quarter: APReal::one(wp).div_i64(4),
        }
    }

    /// e^(u/4) * omega(e^u); the factor shared by every r.
    fn kernel(&self, u: &APReal) -> APReal {
        let x = u.exp();
        let w = omega(&x, &self.ctx).expect("omega on x >= 1");
        &(&self.quarter * u).exp() * &w
    }

    fn full(&self, u: &APReal, r: usize) -> APReal {
        let c_r = APReal::from_i64((16 * 2 * r * (2 * r - 1)) as i64, self.ctx.precision);
        let bracket = &c_r - &(u * u);
        let poly = if r == 1 {
            bracket
        } else {
            &u.powi(2 * r as i64 - 2) * &bracket
        };
        &poly * &self.kernel(u)
    }
}

fn scale_factor(r: usize, wp: u32) -> APReal {
    // 2^-(2r+2) / (2r)!
    let two_pow = BigInt::from(BigUint::one() << (2 * r + 2));
    let fact = BigInt::from(factorial(2 * r));
    APReal::from_ratio(&BigInt::one(), &(two_pow * fact), wp)
}

/// xi_r by the theta-integral route (r >= 1) or the direct evaluator (r = 0).
pub fn xi_coeff(r: usize, ctx: &SpecFunContext) -> APReal {
    xi_coeff_with_panels(r, ctx, 1)
}

/// Same as [`xi_coeff`] with the panel count scaled up, for convergence checks.
pub fn xi_coeff_with_panels(r: usize, ctx: &SpecFunContext, panel_mult: usize) -> APReal {
    let prec = ctx.precision;
    if r == 0 {
        let half = APComplex::from_real(APReal::one(prec + 6).div_i64(2));
        let mut inner = ctx.clone();
        inner.precision = prec + 6;
        return xi_direct(&half, &inner).re().with_precision(prec);
    }
    let wp = integral_precision(r, prec);
    let panels = r.max(8) * panel_mult;
    let u_max = upper_limit(r, wp);
    let n_gl = nodes_per_panel(wp, u_max / panels as f64);
    let integrand = Integrand::new(wp);
    let a = APReal::zero(wp);
    let b = APReal::parse(&format!("{u_max}"), wp).unwrap();
    let mut f = |u: &APReal| integrand.full(u, r);
    let integral = integrate_composite(&mut f, &a, &b, panels, n_gl, wp);
    (&integral * &scale_factor(r, wp)).with_precision(prec)
}

/// Table of xi_0..xi_max_r sharing one kernel precomputation across r.
///
/// The grid is fixed by max_r, every kernel value is computed once at the
/// deepest working precision, and the per-r sums run in ascending node
/// order, so the result is independent of any evaluation schedule.
pub fn xi_coeff_table(max_r: usize, ctx: &SpecFunContext) -> Result<CoeffTable> {
    let prec = ctx.precision;
    let mut values = Vec::with_capacity(max_r + 1);
    values.push(xi_coeff(0, ctx));
    if max_r >= 1 {
        let wp = integral_precision(max_r, prec);
        let panels = max_r.max(8);
        let u_max = upper_limit(max_r, wp);
        let n_gl = nodes_per_panel(wp, u_max / panels as f64);
        let rule = gauss_legendre(n_gl, wp);
        let integrand = Integrand::new(wp);

        let b = APReal::parse(&format!("{u_max}"), wp).unwrap();
        let width = b.div_i64(panels as i64);
        let half = width.div_i64(2);
        // per-node: abscissa, u^2, and weight * halfwidth * kernel
        let mut us: Vec<APReal> = Vec::with_capacity(panels * n_gl);
        let mut u2s: Vec<APReal> = Vec::with_capacity(panels * n_gl);
        let mut ks: Vec<APReal> = Vec::with_capacity(panels * n_gl);
        for p in 0..panels {
            let left = width.mul_i64(p as i64);
            let mid = &left + &half;
            for (x, w) in rule.nodes.iter().zip(&rule.weights) {
                let u = &mid + &(&half * x);
                ks.push(&(w * &half) * &integrand.kernel(&u));
                u2s.push(&u * &u);
                us.push(u);
            }
        }
        let mut pow: Vec<APReal> = vec![APReal::one(wp); us.len()]; // u^(2r-2)
        for r in 1..=max_r {
            let c_r = APReal::from_i64((16 * 2 * r * (2 * r - 1)) as i64, wp);
            if r > 1 {
                for (p, u2) in pow.iter_mut().zip(&u2s) {
                    *p = &*p * u2;
                }
            }
            let mut acc = APReal::zero(wp);
            for i in 0..us.len() {
                let term = &(&pow[i] * &(&c_r - &u2s[i])) * &ks[i];
                acc = &acc + &term;
            }
            values.push((&acc * &scale_factor(r, wp)).with_precision(prec));
        }
    }
    let table = CoeffTable {
        max_r,
        precision: prec,
        values,
        provenance: Provenance::Integral,
    };
    table.validate_positivity()?;
    Ok(table)
}

/// Largest r the Cauchy-circle oracle resolves before differentiation noise
/// eats the requested digits.
pub const ORACLE_MAX_R: usize = 30;

/// Independent oracle: the 2r-th Taylor coefficient of xi_direct about
/// s = 1/2 from a trapezoidal Cauchy integral on a circle of radius 1/2.
pub fn xi_coeff_oracle(r: usize, ctx: &SpecFunContext) -> Result<APReal> {
    let coeffs = xi_taylor_oracle(2 * r, 4 * r + 16, ctx)?;
    Ok(coeffs[2 * r].clone())
}

/// Taylor coefficients c_0..c_max_m of xi about 1/2 from one circle fit
/// with `m_points` sample points (rounded up to a multiple of 4).
pub fn xi_taylor_oracle(max_m: usize, m_points: usize, ctx: &SpecFunContext) -> Result<Vec<APReal>> {
    let prec = ctx.precision;
    let r_equiv = max_m / 2;
    if r_equiv > ORACLE_MAX_R {
        let lost = (3.2 * (r_equiv - ORACLE_MAX_R) as f64).ceil() as u32;
        return Err(Error::AccuracyLoss {
            requested: prec,
            achieved: prec.saturating_sub(lost),
        });
    }
    let m = m_points.max(max_m + 8).next_multiple_of(4);
    let wp = prec + 14 + (3.2 * r_equiv as f64).ceil() as u32;
    let inner = SpecFunContext {
        precision: wp,
        omega_truncation: ctx.omega_truncation,
    };
    let half = APReal::one(wp).div_i64(2);
    let center = APComplex::from_real(half.clone());
    let two_pi = pi(wp).mul_i64(2);

    // sample xi on the circle; conjugate symmetry halves the work
    let mut samples: Vec<APComplex> = Vec::with_capacity(m / 2 + 1);
    for j in 0..=m / 2 {
        let theta = two_pi.mul_i64(j as i64).div_i64(m as i64);
        let z = APComplex::on_circle(&center, &half, &theta);
        samples.push(xi_direct(&z, &inner));
    }
    // angle table for the discrete Fourier sums
    let mut cos_tab = Vec::with_capacity(m);
    let mut sin_tab = Vec::with_capacity(m);
    for k in 0..m {
        let theta = two_pi.mul_i64(k as i64).div_i64(m as i64);
        let (s, c) = theta.sin_cos();
        cos_tab.push(c);
        sin_tab.push(s);
    }

    let mut out = Vec::with_capacity(max_m + 1);
    for target in 0..=max_m {
        // S = f_0 + (-1)^target f_(M/2) + 2 sum_j Re(f_j) cos + Im(f_j) sin
        let mut s = samples[0].re().clone();
        let mid = &samples[m / 2];
        s = if target % 2 == 0 {
            &s + mid.re()
        } else {
            &s - mid.re()
        };
        for j in 1..m / 2 {
            let k = (j * target) % m;
            let term = &(samples[j].re() * &cos_tab[k]) + &(samples[j].im() * &sin_tab[k]);
            s = &s + &term.mul_i64(2);
        }
        // c_m = S / (M h^m) with h = 1/2
        let scaled = s.div_i64(m as i64).mul_i64(1i64 << (target.min(62)));
        let scaled = if target > 62 {
            &scaled * &APReal::from_bigint(BigInt::from(BigUint::one() << (target - 62)), wp)
        } else {
            scaled
        };
        out.push(scaled.with_precision(prec));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// persistence
// ---------------------------------------------------------------------------

/// Write the table in the cache format:
/// line 1 `# xi-coeffs v1 precision=<P>`, then `r,<decimal>` ascending.
pub fn save_table(table: &CoeffTable, path: &Path) -> Result<()> {
    let mut out = String::new();
    out.push_str(&format!("# xi-coeffs v1 precision={}\n", table.precision));
    for (r, v) in table.values.iter().enumerate() {
        out.push_str(&format!("{r},{}\n", v.to_decimal_string(table.precision)));
    }
    let mut f = std::fs::File::create(path)?;
    f.write_all(out.as_bytes())?;
    Ok(())
}

/// Read a cache file back; validates the header, the ascending contiguous
/// index column, and the positivity invariant.
pub fn load_table(path: &Path) -> Result<CoeffTable> {
    let text = std::fs::read_to_string(path)?;
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "empty cache file".into(),
    })?;
    let precision = parse_header(header)?;
    let mut values = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let (r_str, v_str) = line.split_once(',').ok_or(Error::Parse {
            line: line_no,
            message: "expected `r,<decimal>`".into(),
        })?;
        let r: usize = r_str.trim().parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("bad index {r_str:?}"),
        })?;
        if r != values.len() {
            return Err(Error::Parse {
                line: line_no,
                message: format!("index {r} out of order (expected {})", values.len()),
            });
        }
        let v = APReal::parse(v_str.trim(), precision).map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        values.push(v);
    }
    if values.is_empty() {
        return Err(Error::Parse {
            line: 1,
            message: "cache holds no coefficients".into(),
        });
    }
    let table = CoeffTable {
        max_r: values.len() - 1,
        precision,
        values,
        provenance: Provenance::File,
    };
    table.validate_positivity()?;
    Ok(table)
}

fn parse_header(header: &str) -> Result<u32> {
    let expect_prefix = "# xi-coeffs v1 precision=";
    let rest = header.strip_prefix(expect_prefix).ok_or(Error::Parse {
        line: 1,
        message: format!("bad header {header:?}"),
    })?;
    rest.trim().parse().map_err(|_| Error::Parse {
        line: 1,
        message: format!("bad precision in header {header:?}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden(s: &str) -> APReal {
        APReal::parse(s, 40).unwrap()
    }

    #[test]
    fn xi_coeff_zero_is_xi_at_half() {
        let ctx = SpecFunContext::new(30);
        let v = xi_coeff(0, &ctx);
        let expect = golden("0.497120778188314109912774");
        assert!((&v - &expect).abs().sci_exponent() < -23);
    }

    #[test]
    fn xi_coeff_one_matches_published_digits() {
        let ctx = SpecFunContext::new(30);
        let v = xi_coeff(1, &ctx);
        let expect = golden("0.0114859721575727187676249");
        assert!(
            (&v - &expect).abs().sci_exponent() < -24,
            "xi_1 = {}",
            v.to_decimal_string(30)
        );
    }

    #[test]
    fn xi_coeff_two_matches_published_digits() {
        let ctx = SpecFunContext::new(30);
        let v = xi_coeff(2, &ctx);
        let expect = golden("0.000123452018070318006890346");
        assert!(
            (&v - &expect).abs().sci_exponent() < -24,
            "xi_2 = {}",
            v.to_decimal_string(30)
        );
    }

    #[test]
    fn halving_the_step_leaves_the_value_fixed() {
        let ctx = SpecFunContext::new(25);
        let base = xi_coeff_with_panels(3, &ctx, 1);
        let fine = xi_coeff_with_panels(3, &ctx, 2);
        let d = (&base - &fine).abs();
        assert!(d.is_zero() || d.sci_exponent() < -(25 + 2), "{}", d.to_decimal_string(5));
    }

    #[test]
    fn oracle_agrees_with_integral_for_small_r() {
        let ctx = SpecFunContext::new(25);
        for r in 1..=3 {
            let a = xi_coeff(r, &ctx);
            let b = xi_coeff_oracle(r, &ctx).unwrap();
            let d = (&a - &b).abs();
            assert!(d.sci_exponent() < -20, "r = {r}: {}", d.to_decimal_string(5));
        }
    }

    #[test]
    fn oracle_zero_is_direct_value() {
        let ctx = SpecFunContext::new(25);
        let a = xi_coeff_oracle(0, &ctx).unwrap();
        let expect = golden("0.497120778188314109912774");
        assert!((&a - &expect).abs().sci_exponent() < -20);
    }

    #[test]
    fn oracle_odd_coefficients_vanish() {
        let ctx = SpecFunContext::new(25);
        let coeffs = xi_taylor_oracle(6, 4 * 3 + 16, &ctx).unwrap();
        for m in [1usize, 3, 5] {
            assert!(
                coeffs[m].abs().sci_exponent() < -15,
                "odd coefficient {m} = {}",
                coeffs[m].to_decimal_string(5)
            );
        }
    }

    #[test]
    fn oracle_rejects_deep_orders() {
        let ctx = SpecFunContext::new(25);
        match xi_coeff_oracle(ORACLE_MAX_R + 1, &ctx) {
            Err(Error::AccuracyLoss { achieved, .. }) => assert!(achieved < 25),
            other => panic!("expected accuracy-loss error, got {other:?}"),
        }
    }

    #[test]
    fn small_table_is_positive_and_decaying() {
        let ctx = SpecFunContext::new(25);
        let t = xi_coeff_table(5, &ctx).unwrap();
        t.validate().unwrap();
        assert_eq!(t.max_r, 5);
        // the batch route reproduces all six published even-order values
        let expected = [
            "0.497120778188314109912774",
            "0.0114859721575727187676249",
            "0.000123452018070318006890346",
            "8.32355481385527072004759e-7",
            "3.99222655134413717472527e-9",
            "1.46160257601109608624121e-11",
        ];
        for (r, e) in expected.iter().enumerate() {
            let d = (&t.values[r] - &golden(e)).abs();
            assert!(d.sci_exponent() < -20, "table entry {r}");
        }
    }

    #[test]
    fn reconstruction_matches_direct_evaluation() {
        // sum_{r<=R} xi_r s^(2r) at s = 0.3 vs xi(0.8), within the tail bound
        let p = 30;
        let ctx = SpecFunContext::new(p);
        let t = xi_coeff_table(8, &ctx).unwrap();
        let s = APReal::parse("0.3", p).unwrap();
        let mut acc = APReal::zero(p);
        let mut s_pow = APReal::one(p);
        let s2 = &s * &s;
        for r in 0..=8 {
            acc = &acc + &(&t.values[r] * &s_pow);
            s_pow = &s_pow * &s2;
        }
        let direct = xi_direct(
            &APComplex::from_real(APReal::parse("0.8", p).unwrap()),
            &ctx,
        );
        let tail = {
            // xi_9 * 0.3^18 / (1 - 0.09), overestimated with xi_9 < xi_8/10
            let bound = &t.values[8].div_i64(10) * &s_pow;
            bound.div_i64(1).mul_i64(2)
        };
        let diff = (&acc - direct.re()).abs();
        assert!(diff.cmp_exact(&tail) == std::cmp::Ordering::Less);
    }

    #[test]
    fn depth_zero_table_is_the_direct_value() {
        let ctx = SpecFunContext::new(25);
        let t = xi_coeff_table(0, &ctx).unwrap();
        assert_eq!(t.max_r, 0);
        let expect = golden("0.497120778188314109912774");
        assert!((&t.values[0] - &expect).abs().sci_exponent() < -20);
    }

    #[test]
    fn table_is_stable_under_precision_doubling() {
        // entries at precision 30 and 60 agree to 28 digits for r <= 20
        let lo = xi_coeff_table(20, &SpecFunContext::new(30)).unwrap();
        let hi = xi_coeff_table(20, &SpecFunContext::new(60)).unwrap();
        for r in 0..=20 {
            let d = (&lo.values[r] - &hi.values[r]).abs();
            let scale = hi.values[r].sci_exponent();
            assert!(
                d.is_zero() || d.sci_exponent() <= scale - 28,
                "r = {r}: {} vs {}",
                lo.values[r].to_decimal_string(30),
                hi.values[r].to_decimal_string(30)
            );
        }
    }

    #[test]
    fn save_load_round_trip() {
        let ctx = SpecFunContext::new(25);
        let t = xi_coeff_table(3, &ctx).unwrap();
        let dir = std::env::temp_dir().join("xi_forge_test_cache");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("roundtrip.txt");
        save_table(&t, &path).unwrap();
        let back = load_table(&path).unwrap();
        assert_eq!(back.max_r, 3);
        assert_eq!(back.precision, 25);
        assert_eq!(back.provenance, Provenance::File);
        // decimal strings survive the trip byte-for-byte
        for r in 0..=3 {
            assert_eq!(
                back.values[r].to_decimal_string(25),
                t.values[r].to_decimal_string(25)
            );
        }
        let first = std::fs::read(&path).unwrap();
        save_table(&back, &path).unwrap();
        assert_eq!(first, std::fs::read(&path).unwrap());
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn corrupted_sign_is_an_invariant_violation() {
        let dir = std::env::temp_dir().join("xi_forge_test_cache");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("corrupt.txt");
        std::fs::write(
            &path,
            "# xi-coeffs v1 precision=20\n0,0.49712077818831410991\n1,-0.011485972157572718768\n",
        )
        .unwrap();
        match load_table(&path) {
            Err(Error::InvariantViolation(msg)) => assert!(msg.contains("xi_1")),
            other => panic!("expected invariant violation, got {other:?}"),
        }
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn malformed_lines_carry_line_numbers() {
        let dir = std::env::temp_dir().join("xi_forge_test_cache");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("malformed.txt");
        std::fs::write(
            &path,
            "# xi-coeffs v1 precision=20\n0,0.497\nnot-a-line\n",
        )
        .unwrap();
        match load_table(&path) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn omega_term_heuristic_is_small_on_the_domain() {
        assert!(crate::specfun::omega::omega_terms(1.0, 40) < 16);
    }
}
