//! High-precision reconstruction of the numerical objects attached to the
//! completed Riemann xi function: theta-integral Taylor coefficients of
//! xi(s + 1/2), re-centered and Mobius-transformed power series with their
//! logarithms, Keiper zero-power sums with the Li-criterion diagnostics, the
//! real-axis inequality chains, a prefactor/zeta approximation of log xi,
//! and a golden verification harness that replays the reference tables.
//!
//! Everything computes over a decimal arbitrary-precision scalar with an
//! explicit working precision; quoted results are correctly rounded decimal
//! strings, never binary floats.

// indexed loops throughout mirror the summation formulas they implement
#![allow(clippy::needless_range_loop)]

pub mod apcore;
pub mod error;
pub mod expansions;
pub mod keiper;
pub mod pustylnikov;
pub mod riemann;
pub mod specfun;
pub mod verify;
pub mod wplane;

pub use apcore::{APComplex, APReal, PowerSeries, Scalar, SeriesVar};
pub use error::{Error, Result};
pub use expansions::{NamedSeries, SeriesId};
pub use pustylnikov::CoeffTable;
pub use specfun::SpecFunContext;
pub use verify::{Suite, VerificationReport, VerifyConfig};
