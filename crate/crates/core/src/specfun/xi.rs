//! The completed xi function and the closed-form series coefficients that
//! pin down its first derivatives at the symmetric points.

use crate::apcore::{pi, APComplex, APReal};
use crate::error::{Error, Result};
use crate::specfun::gamma::{euler_gamma, gamma, psi0, psi1};
use crate::specfun::zeta::{stieltjes, zeta, zeta_deriv};
use crate::specfun::SpecFunContext;

/// xi(s) = (1/2) s (s-1) Gamma(s/2) zeta(s) / pi^(s/2), entire and even
/// under s -> 1-s.
///
/// s = 0 and s = 1 return exactly 1/2; even negative integers reflect to
/// 1 - s so the gamma pole never meets the zeta zero numerically.
pub fn xi_direct(s: &APComplex, ctx: &SpecFunContext) -> APComplex {
    let prec = ctx.precision;
    let wp = prec + 16;
    let sw = s.with_precision(wp);
    let one = APComplex::one(wp);
    if sw.is_zero() || (&sw - &one).is_zero() {
        return APComplex::from_real(APReal::one(prec).div_i64(2));
    }
    if let Some(refl) = trivial_zero_reflection(&sw) {
        let mut inner = ctx.clone();
        inner.precision = prec;
        return xi_direct(&refl, &inner);
    }
    let half_s = sw.div_i64(2);
    let g = gamma(&half_s, wp).expect("gamma pole handled by reflection");
    let z = zeta(&sw, wp).expect("zeta pole handled by the s = 1 shortcut");
    let pi_pow = half_s.scale(&pi(wp).ln().unwrap()).neg().exp();
    let quad = (&sw * &(&sw - &one)).div_i64(2);
    let out = &(&(&quad * &g) * &z) * &pi_pow;
    out.with_precision(prec)
}

fn trivial_zero_reflection(s: &APComplex) -> Option<APComplex> {
    if !s.im().is_zero() || !s.re().is_negative() {
        return None;
    }
    let n = s.re().round_to_integer();
    let back = APReal::from_bigint(n.clone(), s.precision());
    if (&back - s.re()).is_zero() && &n % 2 == num_bigint::BigInt::from(0) {
        let one = APComplex::one(s.precision());
        Some(&one - s)
    } else {
        None
    }
}

/// Identifier for one of the closed-form series coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormId {
    C0,
    C1,
    C2,
    D0,
    D1,
    F0,
    F1,
    F2,
}

impl ClosedFormId {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "C0" => Self::C0,
            "C1" => Self::C1,
            "C2" => Self::C2,
            "D0" => Self::D0,
            "D1" => Self::D1,
            "F0" => Self::F0,
            "F1" => Self::F1,
            "F2" => Self::F2,
            other => return Err(Error::UnknownId(other.to_string())),
        })
    }
}

/// Evaluate the quoted closed form for a leading series coefficient.
///
/// C_n are coefficients of xi(s + 1/2) about s = 0, D_n of xi(s - 1/2),
/// F_n of xi(s) about s = 0.
pub fn closed_form_coeff(id: ClosedFormId, ctx: &SpecFunContext) -> Result<APReal> {
    let prec = ctx.precision;
    let wp = prec + 12;
    let real = |x: &APComplex| -> APReal { x.re().clone() };
    let quarter = APComplex::from_real(APReal::one(wp).div_i64(4));
    let neg_quarter = quarter.neg();
    let half = APComplex::from_real(APReal::one(wp).div_i64(2));
    let neg_half = half.neg();
    let ln_pi = pi(wp).ln()?;
    let v = match id {
        ClosedFormId::C0 => {
            // -zeta(1/2) Gamma(1/4) / (8 pi^(1/4))
            let z = real(&zeta(&half, wp)?);
            let g = real(&gamma(&quarter, wp)?);
            let pi4 = pi(wp).ln()?.div_i64(4).exp();
            (&(&z * &g) / &pi4.mul_i64(8)).neg()
        }
        ClosedFormId::C1 => {
            let z = real(&zeta(&half, wp)?);
            let zd = real(&zeta_deriv(&half, 1, wp)?);
            let g = real(&gamma(&quarter, wp)?);
            let p0 = real(&psi0(&quarter, wp)?);
            let pi4 = pi(wp).ln()?.div_i64(4).exp();
            let inner = &(&zd.mul_i64(-2) + &(&z * &ln_pi)) - &(&z * &p0);
            &(&g * &inner) / &pi4.mul_i64(16)
        }
        ClosedFormId::C2 => {
            let z = real(&zeta(&half, wp)?);
            let zdd = real(&zeta_deriv(&half, 2, wp)?);
            let g = real(&gamma(&quarter, wp)?);
            let p0 = real(&psi0(&quarter, wp)?);
            let p1 = real(&psi1(&quarter, wp)?);
            let pi4 = pi(wp).ln()?.div_i64(4).exp();
            let mut inner = APReal::from_i64(32, wp);
            inner = &inner + &(&ln_pi * &ln_pi);
            inner = &inner + &(&p0 * &p0);
            inner = &inner - &p1;
            inner = &inner - &(&ln_pi * &p0).mul_i64(2);
            let bracket = &(&z * &inner) - &zdd.mul_i64(4);
            &(&g * &bracket) / &pi4.mul_i64(64)
        }
        ClosedFormId::D0 => {
            // (3/8) pi^(1/4) Gamma(-1/4) zeta(-1/2)
            let z = real(&zeta(&neg_half, wp)?);
            let g = real(&gamma(&neg_quarter, wp)?);
            let pi4 = pi(wp).ln()?.div_i64(4).exp();
            (&(&pi4 * &g) * &z).mul_i64(3).div_i64(8)
        }
        ClosedFormId::D1 => {
            let z = real(&zeta(&neg_half, wp)?);
            let zd = real(&zeta_deriv(&neg_half, 1, wp)?);
            let g = real(&gamma(&neg_quarter, wp)?);
            let p0 = real(&psi0(&neg_quarter, wp)?);
            let pi4 = pi(wp).ln()?.div_i64(4).exp();
            let mut bracket = z.mul_i64(-16);
            bracket = &bracket - &(&ln_pi * &z).mul_i64(3);
            bracket = &bracket + &(&p0 * &z).mul_i64(3);
            bracket = &bracket + &zd.mul_i64(6);
            (&(&pi4 * &g) * &bracket).div_i64(16)
        }
        ClosedFormId::F0 => APReal::one(wp).div_i64(2),
        ClosedFormId::F1 => {
            // (1/4)(-2 - gamma + log(4 pi))
            let g = euler_gamma(wp);
            let l4pi = pi(wp).mul_i64(4).ln()?;
            (&(&l4pi - &g) - &APReal::from_i64(2, wp)).div_i64(4)
        }
        ClosedFormId::F2 => {
            // (1/32)(8 g - 6 g^2 + pi^2 + 2 log(4 pi)(-4 - 2 g + log(4 pi)) - 16 g_1)
            let g = euler_gamma(wp);
            let g1 = stieltjes(1, wp);
            let l4pi = pi(wp).mul_i64(4).ln()?;
            let mut acc = g.mul_i64(8);
            acc = &acc - &(&g * &g).mul_i64(6);
            acc = &acc + &(&pi(wp) * &pi(wp));
            let inner = &(&l4pi - &g.mul_i64(2)) - &APReal::from_i64(4, wp);
            acc = &acc + &(&l4pi * &inner).mul_i64(2);
            acc = &acc - &g1.mul_i64(16);
            acc.div_i64(32)
        }
    };
    Ok(v.with_precision(prec))
}

/// Residual of the identity zeta'(1/2) = (1/2) zeta(1/2) [log pi - psi0(1/4)],
/// which eliminates odd zeta derivatives from the closed forms.
pub fn zeta_half_identity_residual(ctx: &SpecFunContext) -> Result<APReal> {
    let wp = ctx.precision + 10;
    let half = APComplex::from_real(APReal::one(wp).div_i64(2));
    let quarter = APComplex::from_real(APReal::one(wp).div_i64(4));
    let zd = zeta_deriv(&half, 1, wp)?.re().clone();
    let z = zeta(&half, wp)?.re().clone();
    let p0 = psi0(&quarter, wp)?.re().clone();
    let rhs = (&z * &(&pi(wp).ln()? - &p0)).div_i64(2);
    Ok((&zd - &rhs).with_precision(ctx.precision))
}
