//! Special-function evaluations: the theta sum omega(x), a precision-
//! contracted Gamma/psi/zeta/Stieltjes surface, the direct xi evaluator,
//! and the closed-form coefficient expressions.

pub mod bernoulli;
pub mod gamma;
pub mod omega;
pub mod xi;
pub mod zeta;

use crate::apcore::APComplex;
use crate::error::{Error, Result};

pub use gamma::{euler_gamma, gamma as gamma_fn, lgamma, psi0, psi1};
pub use omega::omega;
pub use xi::{closed_form_coeff, xi_direct, zeta_half_identity_residual, ClosedFormId};
pub use zeta::{stieltjes, zeta as zeta_fn, zeta_deriv, zeta_series};

/// Evaluation context: working precision in decimal digits plus the cap on
/// theta terms (the actual count is chosen adaptively from the tail bound).
#[derive(Clone, Debug)]
pub struct SpecFunContext {
    pub precision: u32,
    pub omega_truncation: u32,
}

impl SpecFunContext {
    pub fn new(precision: u32) -> Self {
        SpecFunContext {
            precision,
            omega_truncation: 100_000,
        }
    }
}

impl Default for SpecFunContext {
    fn default() -> Self {
        Self::new(30)
    }
}

/// Classical special-function selector for [`classical`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalFn {
    Gamma,
    LogGamma,
    Psi0,
    Psi1,
    Zeta,
    ZetaDerivK,
    StieltjesK,
}

/// Uniform precision-contracted entry point over the classical functions.
///
/// `k` selects the derivative order for `ZetaDerivK` and the constant index
/// for `StieltjesK`; other functions ignore it.
pub fn classical(
    f: ClassicalFn,
    arg: &APComplex,
    k: usize,
    ctx: &SpecFunContext,
) -> Result<APComplex> {
    let p = ctx.precision;
    match f {
        ClassicalFn::Gamma => gamma::gamma(arg, p),
        ClassicalFn::LogGamma => gamma::lgamma(arg, p),
        ClassicalFn::Psi0 => gamma::psi0(arg, p),
        ClassicalFn::Psi1 => gamma::psi1(arg, p),
        ClassicalFn::Zeta => zeta::zeta(arg, p),
        ClassicalFn::ZetaDerivK => zeta::zeta_deriv(arg, k, p),
        ClassicalFn::StieltjesK => {
            if !arg.is_zero() && !arg.is_real() {
                return Err(Error::Domain(
                    "stieltjes constants take no complex argument".into(),
                ));
            }
            Ok(APComplex::from_real(zeta::stieltjes(k, p)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apcore::{pi, APReal};

    #[test]
    fn classical_dispatch_gamma_and_zeta() {
        let ctx = SpecFunContext::new(30);
        let five = APComplex::from_i64(5, 0, 30);
        let g = classical(ClassicalFn::Gamma, &five, 0, &ctx).unwrap();
        assert_eq!(g.re().to_decimal_string(4), "24.00");

        let two = APComplex::from_i64(2, 0, 30);
        let z = classical(ClassicalFn::Zeta, &two, 0, &ctx).unwrap();
        let basel = (&pi(30) * &pi(30)).div_i64(6);
        assert!((z.re() - &basel).abs().sci_exponent() < -27);
    }

    #[test]
    fn classical_pole_arguments_error() {
        let ctx = SpecFunContext::new(20);
        let zero = APComplex::zero(20);
        assert!(classical(ClassicalFn::Gamma, &zero, 0, &ctx).is_err());
        let one = APComplex::one(20);
        assert!(classical(ClassicalFn::Zeta, &one, 0, &ctx).is_err());
    }

    #[test]
    fn classical_stieltjes_index() {
        let ctx = SpecFunContext::new(30);
        let zero = APComplex::zero(30);
        let g1 = classical(ClassicalFn::StieltjesK, &zero, 1, &ctx).unwrap();
        // gamma_1 is about -0.0728158
        let rough = APReal::parse("-0.0728158", 30).unwrap();
        assert!((g1.re() - &rough).abs().sci_exponent() < -6);
    }
}
