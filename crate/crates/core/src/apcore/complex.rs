//! Arbitrary-precision complex scalar.
//!
//! Both components share one working precision; constructors renormalize the
//! lower-precision side up so the invariant `precision(re) == precision(im)`
//! always holds.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::apcore::real::{pi, APReal};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct APComplex {
    re: APReal,
    im: APReal,
}

impl APComplex {
    pub fn new(re: APReal, im: APReal) -> Self {
        let p = re.precision().max(im.precision());
        APComplex {
            re: re.with_precision(p),
            im: im.with_precision(p),
        }
    }

    pub fn from_real(re: APReal) -> Self {
        let p = re.precision();
        APComplex {
            re,
            im: APReal::zero(p),
        }
    }

    pub fn zero(precision: u32) -> Self {
        Self::from_real(APReal::zero(precision))
    }

    pub fn one(precision: u32) -> Self {
        Self::from_real(APReal::one(precision))
    }

    pub fn from_i64(re: i64, im: i64, precision: u32) -> Self {
        APComplex {
            re: APReal::from_i64(re, precision),
            im: APReal::from_i64(im, precision),
        }
    }

    pub fn re(&self) -> &APReal {
        &self.re
    }

    pub fn im(&self) -> &APReal {
        &self.im
    }

    pub fn precision(&self) -> u32 {
        self.re.precision()
    }

    pub fn with_precision(&self, precision: u32) -> Self {
        APComplex {
            re: self.re.with_precision(precision),
            im: self.im.with_precision(precision),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        APComplex {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn norm_sqr(&self) -> APReal {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> APReal {
        self.norm_sqr().sqrt().expect("norm_sqr is non-negative")
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        APComplex {
            re: self.re.mul_i64(k),
            im: self.im.mul_i64(k),
        }
    }

    pub fn div_i64(&self, k: i64) -> Self {
        APComplex {
            re: self.re.div_i64(k),
            im: self.im.div_i64(k),
        }
    }

    pub fn scale(&self, k: &APReal) -> Self {
        APComplex {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    /// e^self; skips the trigonometric work for real arguments.
    pub fn exp(&self) -> Self {
        let r = self.re.exp();
        if self.im.is_zero() {
            return Self::from_real(r);
        }
        let (s, c) = self.im.sin_cos();
        APComplex {
            re: &r * &c,
            im: &r * &s,
        }
    }

    /// Principal-branch logarithm: ln|z| + i arg(z), arg in (-pi, pi].
    pub fn ln(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("ln of zero".into()));
        }
        if self.im.is_zero() && self.re.is_positive() {
            return Ok(Self::from_real(self.re.ln()?));
        }
        let modulus = self.abs().ln()?;
        let arg = APReal::atan2(&self.im, &self.re);
        Ok(APComplex {
            re: modulus,
            im: arg,
        })
    }

    /// z^n by binary exponentiation.
    pub fn powi(&self, n: i64) -> Self {
        let p = self.precision();
        if n == 0 {
            return Self::one(p);
        }
        let mut base = if n < 0 { self.recip() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one(p);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        APComplex {
            re: &self.re / &n,
            im: &self.im.neg() / &n,
        }
    }

    /// Upper bound on the decimal magnitude of the distance to `other`.
    pub fn dist_exp10(&self, other: &Self) -> i64 {
        let d = self - other;
        d.re.abs().sci_exponent().max(d.im.abs().sci_exponent())
    }

    /// Principal argument in (-pi, pi].
    pub fn arg(&self) -> APReal {
        APReal::atan2(&self.im, &self.re)
    }

    /// Point on the circle center + radius*e^{i theta}.
    pub fn on_circle(center: &APComplex, radius: &APReal, theta: &APReal) -> Self {
        let (s, c) = theta.sin_cos();
        APComplex {
            re: &center.re + &(radius * &c),
            im: &center.im + &(radius * &s),
        }
    }

    pub fn to_display_string(&self, sig: u32) -> String {
        if self.im.is_zero() {
            return self.re.to_decimal_string(sig);
        }
        format!(
            "{}{}{}i",
            self.re.to_decimal_string(sig),
            if self.im.is_negative() { "" } else { "+" },
            self.im.to_decimal_string(sig)
        )
    }

    #[allow(dead_code)]
    pub(crate) fn pi_const(precision: u32) -> APReal {
        pi(precision)
    }
}

impl Add for &APComplex {
    type Output = APComplex;
    fn add(self, rhs: &APComplex) -> APComplex {
        APComplex {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &APComplex {
    type Output = APComplex;
    fn sub(self, rhs: &APComplex) -> APComplex {
        APComplex {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &APComplex {
    type Output = APComplex;
    fn mul(self, rhs: &APComplex) -> APComplex {
        // (a+bi)(c+di) = (ac - bd) + (ad + bc)i
        let ac = &self.re * &rhs.re;
        let bd = &self.im * &rhs.im;
        let ad = &self.re * &rhs.im;
        let bc = &self.im * &rhs.re;
        APComplex {
            re: &ac - &bd,
            im: &ad + &bc,
        }
    }
}

impl Div for &APComplex {
    type Output = APComplex;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &APComplex) -> APComplex {
        self * &rhs.recip()
    }
}

impl Neg for &APComplex {
    type Output = APComplex;
    fn neg(self) -> APComplex {
        APComplex {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }
}

impl APComplex {
    pub fn neg(&self) -> Self {
        -self
    }
}

impl PartialEq for APComplex {
    fn eq(&self, other: &Self) -> bool {
        self.re == other.re && self.im == other.im
    }
}

impl std::fmt::Display for APComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_display_string(self.precision()))
    }
}
