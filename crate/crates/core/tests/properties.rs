//! Property tests for the scalar and series algebra.

use proptest::prelude::*;

use xi_forge_core::apcore::{series_exp, series_log, series_mul, GUARD_DIGITS};
use xi_forge_core::{APReal, PowerSeries, SeriesVar};

fn ap(v: i64, scale: i64, p: u32) -> APReal {
    // v * 10^-scale
    APReal::from_i64(v, p).shift10(-scale)
}

fn series_from(coeffs: &[i64], p: u32) -> PowerSeries<APReal> {
    PowerSeries::new(
        APReal::zero(p),
        SeriesVar::W,
        coeffs.iter().map(|&c| ap(c, 3, p)).collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn log_then_exp_round_trips(
        c0 in 1i64..5000,
        rest in proptest::collection::vec(-2000i64..2000, 1..8),
    ) {
        let p = 30u32;
        let mut coeffs = vec![c0];
        coeffs.extend(&rest);
        let a = series_from(&coeffs, p);
        let back = series_exp(&series_log(&a).unwrap());
        for n in 0..=a.order() {
            let d = (back.coeff(n) - a.coeff(n)).abs();
            let scale = a.coeff(n).abs().sci_exponent().max(0);
            prop_assert!(
                d.is_zero() || d.sci_exponent() < scale - (p as i64 - 2),
                "coefficient {n}: residual {}",
                d.to_decimal_string(4)
            );
        }
    }

    #[test]
    fn multiplication_commutes(
        a in proptest::collection::vec(-300i64..300, 2..7),
        b in proptest::collection::vec(-300i64..300, 2..7),
    ) {
        let p = 30u32;
        let n = a.len().min(b.len());
        let sa = series_from(&a[..n], p);
        let sb = series_from(&b[..n], p);
        let ab = series_mul(&sa, &sb).unwrap();
        let ba = series_mul(&sb, &sa).unwrap();
        for k in 0..=ab.order() {
            let d = (ab.coeff(k) - ba.coeff(k)).abs();
            prop_assert!(d.is_zero() || d.sci_exponent() < -(p as i64 - 2));
        }
    }

    #[test]
    fn multiplication_associates(
        a in proptest::collection::vec(-100i64..100, 3..6),
        b in proptest::collection::vec(-100i64..100, 3..6),
        c in proptest::collection::vec(-100i64..100, 3..6),
    ) {
        let p = 35u32;
        let n = a.len().min(b.len()).min(c.len());
        let sa = series_from(&a[..n], p);
        let sb = series_from(&b[..n], p);
        let sc = series_from(&c[..n], p);
        let left = series_mul(&series_mul(&sa, &sb).unwrap(), &sc).unwrap();
        let right = series_mul(&sa, &series_mul(&sb, &sc).unwrap()).unwrap();
        for k in 0..=left.order() {
            let d = (left.coeff(k) - right.coeff(k)).abs();
            // coefficients here are O(1); absolute tolerance carries the guard band
            prop_assert!(d.is_zero() || d.sci_exponent() < -(p as i64 - 3));
        }
    }

    #[test]
    fn doubling_precision_preserves_quoted_digits(
        num in 1i64..1_000_000,
        den in 1i64..1_000_000,
    ) {
        // a pipeline of division, sqrt, exp, ln quoted at P digits must not
        // move by more than 10^-P when recomputed at 2P digits
        let p = 25u32;
        let run = |prec: u32| {
            let a = APReal::from_i64(num, prec);
            let b = APReal::from_i64(den, prec);
            let q = &a / &b;
            let s = q.sqrt().unwrap();
            let e = s.exp().ln().unwrap();
            e.to_decimal_string(p)
        };
        let lo = run(p);
        let hi = run(2 * p);
        let lo_v = APReal::parse(&lo, 3 * p).unwrap();
        let hi_v = APReal::parse(&hi, 3 * p).unwrap();
        let d = (&lo_v - &hi_v).abs();
        let scale = lo_v.sci_exponent();
        prop_assert!(
            d.is_zero() || d.sci_exponent() <= scale - (p as i64) + 1,
            "P={p}: {lo} vs {hi}"
        );
    }

    #[test]
    fn guard_band_is_wide_enough_for_series_pipelines(
        coeffs in proptest::collection::vec(1i64..4000, 4..9),
    ) {
        // log coefficients at P and P+GUARD agree to the quoted P digits
        let p = 20u32;
        let a_lo = series_from(&coeffs, p);
        let a_hi = series_from(&coeffs, p + GUARD_DIGITS);
        let l_lo = series_log(&a_lo).unwrap();
        let l_hi = series_log(&a_hi).unwrap();
        for n in 1..=a_lo.order() {
            let d = (l_lo.coeff(n) - l_hi.coeff(n)).abs();
            // relative to the coefficient's own magnitude: the log recurrence
            // can grow like (a_1/a_0)^n, so only relative digits are promised
            let scale = l_hi.coeff(n).abs().sci_exponent().max(0);
            prop_assert!(d.is_zero() || d.sci_exponent() < scale - (p as i64 - 2));
        }
    }
}
