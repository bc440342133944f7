//! Truncated power series over the arbitrary-precision scalars.
//!
//! A series is dense: `coeffs` holds exactly `order + 1` entries for the
//! expansion `sum c_n (z - center)^n`. Binary operations require matching
//! center and variable and truncate to the shorter order.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::apcore::complex::APComplex;
use crate::apcore::real::APReal;
use crate::error::{Error, Result};

/// Expansion variable tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesVar {
    S,
    W,
    Wh,
    Wm,
    OneMinusSInv,
}

impl std::fmt::Display for SeriesVar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SeriesVar::S => "s",
            SeriesVar::W => "w",
            SeriesVar::Wh => "w_h",
            SeriesVar::Wm => "w_m",
            SeriesVar::OneMinusSInv => "one_minus_s_inv",
        };
        write!(f, "{s}")
    }
}

/// Scalar contract every series coefficient type satisfies.
pub trait Scalar: Clone + std::fmt::Debug {
    fn zero(precision: u32) -> Self;
    fn one(precision: u32) -> Self;
    fn precision(&self) -> u32;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul_int(&self, k: i64) -> Self;
    fn div_int(&self, k: i64) -> Self;
    /// Logarithm of the constant term; errors when outside the domain.
    fn ln(&self) -> Result<Self>;
    fn exp(&self) -> Self;
}

impl Scalar for APReal {
    fn zero(precision: u32) -> Self {
        APReal::zero(precision)
    }
    fn one(precision: u32) -> Self {
        APReal::one(precision)
    }
    fn precision(&self) -> u32 {
        self.precision()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        APReal::neg(self)
    }
    fn mul_int(&self, k: i64) -> Self {
        self.mul_i64(k)
    }
    fn div_int(&self, k: i64) -> Self {
        self.div_i64(k)
    }
    fn ln(&self) -> Result<Self> {
        APReal::ln(self)
    }
    fn exp(&self) -> Self {
        APReal::exp(self)
    }
}

impl Scalar for APComplex {
    fn zero(precision: u32) -> Self {
        APComplex::zero(precision)
    }
    fn one(precision: u32) -> Self {
        APComplex::one(precision)
    }
    fn precision(&self) -> u32 {
        self.precision()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        APComplex::neg(self)
    }
    fn mul_int(&self, k: i64) -> Self {
        self.mul_i64(k)
    }
    fn div_int(&self, k: i64) -> Self {
        self.div_i64(k)
    }
    fn ln(&self) -> Result<Self> {
        APComplex::ln(self)
    }
    fn exp(&self) -> Self {
        APComplex::exp(self)
    }
}

/// Truncated Taylor series.
#[derive(Clone, Debug)]
pub struct PowerSeries<T: Scalar> {
    pub center: T,
    pub variable: SeriesVar,
    coeffs: Vec<T>,
}

impl<T: Scalar> PowerSeries<T> {
    pub fn new(center: T, variable: SeriesVar, coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        PowerSeries {
            center,
            variable,
            coeffs,
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &T {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn precision(&self) -> u32 {
        self.coeffs[0].precision()
    }

    pub fn truncated(&self, order: usize) -> Self {
        let end = (order + 1).min(self.coeffs.len());
        PowerSeries {
            center: self.center.clone(),
            variable: self.variable,
            coeffs: self.coeffs[..end].to_vec(),
        }
    }

    fn check_compatible(&self, other: &Self, op: &str) -> Result<()> {
        if self.variable != other.variable {
            return Err(Error::SeriesMismatch(format!(
                "{op}: variable {} vs {}",
                self.variable, other.variable
            )));
        }
        let d = self.center.sub(&other.center);
        if !d.is_zero() {
            return Err(Error::SeriesMismatch(format!("{op}: centers differ")));
        }
        Ok(())
    }

    /// Horner evaluation at a point `z` (in the same variable).
    pub fn eval(&self, z: &T) -> T {
        let x = z.sub(&self.center);
        let mut acc = self.coeffs.last().unwrap().clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(&x).add(c);
        }
        acc
    }

    /// Partial sum truncated at the given order, evaluated at `z`.
    pub fn eval_partial(&self, z: &T, order: usize) -> T {
        self.truncated(order).eval(z)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other, "series_add")?;
        let n = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeffs[i].add(&other.coeffs[i]))
            .collect();
        Ok(PowerSeries::new(self.center.clone(), self.variable, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other, "series_sub")?;
        let n = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeffs[i].sub(&other.coeffs[i]))
            .collect();
        Ok(PowerSeries::new(self.center.clone(), self.variable, coeffs))
    }

    pub fn scale(&self, k: &T) -> Self {
        PowerSeries::new(
            self.center.clone(),
            self.variable,
            self.coeffs.iter().map(|c| c.mul(k)).collect(),
        )
    }

    /// Re-center by delta: coefficients of the same function about
    /// `center + delta`, exact binomial shift truncated at this order.
    pub fn recentered(&self, delta: &T) -> Self {
        let n = self.coeffs.len();
        let prec = self.precision();
        let mut out = vec![T::zero(prec); n];
        for (m, cm) in self.coeffs.iter().enumerate() {
            // c'_k += binom(m, k) c_m delta^(m-k)
            let mut pow = T::one(prec);
            for k in (0..=m).rev() {
                let b = binom(m as u64, k as u64);
                let term = cm.mul(&pow).mul_int(bigint_to_i64_saturating(&b));
                let term = if fits_i64(&b) {
                    term
                } else {
                    // exact big binomial path
                    cm.mul(&pow).mul(&big_to_scalar::<T>(&b, prec))
                };
                out[k] = out[k].add(&term);
                if k > 0 {
                    pow = pow.mul(delta);
                }
            }
        }
        PowerSeries::new(self.center.add(delta), self.variable, out)
    }
}

fn fits_i64(b: &BigUint) -> bool {
    b.bits() <= 62
}

fn bigint_to_i64_saturating(b: &BigUint) -> i64 {
    use num_traits::ToPrimitive;
    b.to_i64().unwrap_or(1)
}

fn big_to_scalar<T: Scalar>(b: &BigUint, prec: u32) -> T {
    // build from decimal digits; only used when the binomial exceeds i64
    let mut acc = T::zero(prec);
    let ten = 10i64;
    for ch in b.to_string().bytes() {
        acc = acc.mul_int(ten).add(&T::one(prec).mul_int((ch - b'0') as i64));
    }
    acc
}

/// Cauchy product truncated to the shorter order.
pub fn series_mul<T: Scalar>(a: &PowerSeries<T>, b: &PowerSeries<T>) -> Result<PowerSeries<T>> {
    a.check_compatible(b, "series_mul")?;
    let order = a.order().min(b.order());
    let prec = a.precision().max(b.precision());
    let mut coeffs = vec![T::zero(prec); order + 1];
    for i in 0..=order {
        if a.coeff(i).is_zero() {
            continue;
        }
        for j in 0..=(order - i) {
            if b.coeff(j).is_zero() {
                continue;
            }
            let t = a.coeff(i).mul(b.coeff(j));
            coeffs[i + j] = coeffs[i + j].add(&t);
        }
    }
    Ok(PowerSeries::new(a.center.clone(), a.variable, coeffs))
}

/// Logarithm of a series with admissible constant term.
///
/// b_0 = log a_0, then b_n = a_n/a_0 - (1/(n a_0)) sum_{k=1}^{n-1} k b_k a_{n-k}.
pub fn series_log<T: Scalar>(a: &PowerSeries<T>) -> Result<PowerSeries<T>> {
    let a0 = a.coeff(0);
    if a0.is_zero() {
        return Err(Error::Domain(
            "series_log: zero constant term (logarithm undefined at center)".into(),
        ));
    }
    let order = a.order();
    let prec = a.precision();
    let mut b: Vec<T> = Vec::with_capacity(order + 1);
    b.push(a0.ln()?);
    for n in 1..=order {
        let mut conv = T::zero(prec);
        for k in 1..n {
            if b[k].is_zero() || a.coeff(n - k).is_zero() {
                continue;
            }
            conv = conv.add(&b[k].mul_int(k as i64).mul(a.coeff(n - k)));
        }
        let bn = a.coeff(n).div(a0).sub(&conv.div(a0).div_int(n as i64));
        b.push(bn);
    }
    Ok(PowerSeries::new(a.center.clone(), a.variable, b))
}

/// Formal exponential, the inverse recurrence of [`series_log`].
///
/// e_0 = exp a_0, then n e_n = sum_{k=1}^{n} k a_k e_{n-k}.
pub fn series_exp<T: Scalar>(a: &PowerSeries<T>) -> PowerSeries<T> {
    let order = a.order();
    let prec = a.precision();
    let mut e: Vec<T> = Vec::with_capacity(order + 1);
    e.push(a.coeff(0).exp());
    for n in 1..=order {
        let mut conv = T::zero(prec);
        for k in 1..=n {
            if a.coeff(k).is_zero() || e[n - k].is_zero() {
                continue;
            }
            conv = conv.add(&a.coeff(k).mul_int(k as i64).mul(&e[n - k]));
        }
        e.push(conv.div_int(n as i64));
    }
    PowerSeries::new(a.center.clone(), a.variable, e)
}

/// Exact binomial coefficient; returns 0 when k > n.
pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Coefficient of w^n in (1-w)^(-2r).
///
/// For r >= 1 this is binom(n + 2r - 1, n); the r = 0 function is the
/// constant 1.
pub fn mobius_pow_coeff(r: u64, n: u64) -> BigUint {
    if r == 0 {
        return if n == 0 { BigUint::one() } else { BigUint::zero() };
    }
    binom(n + 2 * r - 1, n)
}

/// Exact binomial as a signed BigInt, for accumulation code.
pub fn binom_int(n: u64, k: u64) -> BigInt {
    BigInt::from(binom(n, k))
}
