//! Arbitrary-precision scalar contract and truncated power-series algebra.

pub mod complex;
pub mod real;
pub mod series;

pub use complex::APComplex;
pub use real::{ln10, ln2, pi, APReal, GUARD_DIGITS};
pub use series::{
    binom, binom_int, mobius_pow_coeff, series_exp, series_log, series_mul, PowerSeries, Scalar,
    SeriesVar,
};
