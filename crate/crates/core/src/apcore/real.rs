//! Arbitrary-precision real scalar with explicit decimal working precision.
//!
//! An [`APReal`] is `mantissa * 10^exp10` where the mantissa is held at
//! `precision + GUARD_DIGITS` significant decimal digits. Every operation
//! renormalizes with round-half-even, so quoted results at `precision`
//! digits are correct to the stated precision while intermediate rounding
//! stays buried in the guard band. Comparisons between values of different
//! precision happen at the lower of the two, matching the scalar contract
//! used throughout the crate.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Guard digits carried beyond the requested precision.
///
/// Ten digits absorb the cancellation seen in the series recurrences at
/// orders up to ~100; the precision-doubling property test exercises this.
pub const GUARD_DIGITS: u32 = 10;

const LOG10_2: f64 = std::f64::consts::LOG10_2;

/// Arbitrary-precision real number.
#[derive(Clone, Debug)]
pub struct APReal {
    mantissa: BigInt,
    exp10: i64,
    precision: u32,
}

fn pow10_cache() -> &'static Mutex<Vec<BigUint>> {
    static CACHE: OnceLock<Mutex<Vec<BigUint>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![BigUint::from(1u32)]))
}

/// 10^k as a BigUint, memoized.
pub(crate) fn pow10(k: u32) -> BigUint {
    let mut cache = pow10_cache().lock().unwrap();
    while cache.len() <= k as usize {
        let next = cache.last().unwrap() * 10u32;
        cache.push(next);
    }
    cache[k as usize].clone()
}

/// Number of decimal digits of a nonzero BigUint.
pub(crate) fn digits10(n: &BigUint) -> u32 {
    if n.is_zero() {
        return 0;
    }
    let bits = n.bits();
    let mut d = ((bits as f64) * LOG10_2) as u32; // candidate - 1 or exact - 1
    // value >= 10^d ?
    while *n >= pow10(d) {
        d += 1;
    }
    d // n < 10^d and n >= 10^(d-1)
}

fn digits10_int(n: &BigInt) -> u32 {
    digits10(n.magnitude())
}

impl APReal {
    fn stored_digits(precision: u32) -> u32 {
        precision.max(1) + GUARD_DIGITS
    }

    /// Build from `mantissa * 10^exp10`, normalizing to the stored digit count.
    pub fn from_scaled(mantissa: BigInt, exp10: i64, precision: u32) -> Self {
        Self::normalize(mantissa, exp10, precision)
    }

    fn normalize(mantissa: BigInt, exp10: i64, precision: u32) -> Self {
        let precision = precision.max(1);
        if mantissa.is_zero() {
            return APReal {
                mantissa,
                exp10: 0,
                precision,
            };
        }
        let target = Self::stored_digits(precision);
        let d = digits10_int(&mantissa);
        if d == target {
            return APReal {
                mantissa,
                exp10,
                precision,
            };
        }
        if d < target {
            let shift = target - d;
            return APReal {
                mantissa: mantissa * BigInt::from(pow10(shift)),
                exp10: exp10 - shift as i64,
                precision,
            };
        }
        let shift = d - target;
        let (m, e) = round_half_even(mantissa, shift);
        APReal {
            mantissa: m,
            exp10: exp10 + shift as i64 + e,
            precision,
        }
    }

    pub fn zero(precision: u32) -> Self {
        APReal {
            mantissa: BigInt::zero(),
            exp10: 0,
            precision: precision.max(1),
        }
    }

    pub fn one(precision: u32) -> Self {
        Self::from_i64(1, precision)
    }

    pub fn from_i64(v: i64, precision: u32) -> Self {
        Self::normalize(BigInt::from(v), 0, precision)
    }

    pub fn from_u32(v: u32, precision: u32) -> Self {
        Self::normalize(BigInt::from(v), 0, precision)
    }

    pub fn from_bigint(v: BigInt, precision: u32) -> Self {
        Self::normalize(v, 0, precision)
    }

    /// Exact ratio n/d rounded to the working precision.
    pub fn from_ratio(num: &BigInt, den: &BigInt, precision: u32) -> Self {
        assert!(!den.is_zero(), "from_ratio: zero denominator");
        let a = Self::from_bigint(num.clone(), precision);
        let b = Self::from_bigint(den.clone(), precision);
        &a / &b
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    /// Decimal exponent e with |self| in [10^e, 10^(e+1)). Zero input yields i64::MIN.
    pub fn sci_exponent(&self) -> i64 {
        if self.is_zero() {
            return i64::MIN;
        }
        self.exp10 + digits10_int(&self.mantissa) as i64 - 1
    }

    /// Same value renormalized to a new working precision.
    pub fn with_precision(&self, precision: u32) -> Self {
        Self::normalize(self.mantissa.clone(), self.exp10, precision)
    }

    pub fn abs(&self) -> Self {
        APReal {
            mantissa: self.mantissa.abs(),
            exp10: self.exp10,
            precision: self.precision,
        }
    }

    /// Lossy f64 view, for heuristic bounds only (never for quoted digits).
    pub fn to_f64_approx(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let d = digits10_int(&self.mantissa);
        let keep = 17u32.min(d);
        let (top, _) = round_half_even(self.mantissa.clone(), d - keep);
        let top = top.to_f64().unwrap_or(0.0);
        let e = self.exp10 + (d - keep) as i64;
        top * 10f64.powi(e.clamp(-400, 400) as i32)
    }

    /// Compare at the lower of the two precisions (the scalar contract).
    pub fn cmp_quoted(&self, other: &Self) -> Ordering {
        let p = self.precision.min(other.precision);
        let a = self.quote_parts(p);
        let b = other.quote_parts(p);
        cmp_scaled(&a, &b)
    }

    /// Exact comparison of the stored values, ignoring precision tags.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        cmp_scaled(
            &(self.mantissa.clone(), self.exp10),
            &(other.mantissa.clone(), other.exp10),
        )
    }

    fn quote_parts(&self, sig: u32) -> (BigInt, i64) {
        if self.is_zero() {
            return (BigInt::zero(), 0);
        }
        let d = digits10_int(&self.mantissa);
        if d <= sig {
            return (self.mantissa.clone(), self.exp10);
        }
        let shift = d - sig;
        let (m, e) = round_half_even(self.mantissa.clone(), shift);
        (m, self.exp10 + shift as i64 + e)
    }

    /// Correctly rounded decimal string with exactly `sig` significant digits.
    ///
    /// Plain positional notation inside a +-35 decade window, `d.dd...e+-k`
    /// outside it. Never locale-dependent.
    pub fn to_decimal_string(&self, sig: u32) -> String {
        let sig = sig.max(1);
        if self.is_zero() {
            let mut s = String::from("0.");
            for _ in 1..sig {
                s.push('0');
            }
            if sig == 1 {
                return "0".to_string();
            }
            return s;
        }
        let (m, exp) = self.quote_parts(sig);
        let neg = m.is_negative();
        let mut digits = m.magnitude().to_string();
        while (digits.len() as u32) < sig {
            digits.push('0'); // defensive; quote_parts yields exactly sig digits
        }
        let sci = exp + digits.len() as i64 - 1;
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        if (-35..=35).contains(&sci) {
            if sci >= 0 {
                let point = (sci + 1) as usize;
                if point >= digits.len() {
                    out.push_str(&digits);
                    for _ in 0..(point - digits.len()) {
                        out.push('0');
                    }
                } else {
                    out.push_str(&digits[..point]);
                    out.push('.');
                    out.push_str(&digits[point..]);
                }
            } else {
                out.push_str("0.");
                for _ in 0..(-sci - 1) {
                    out.push('0');
                }
                out.push_str(&digits);
            }
        } else {
            out.push_str(&digits[..1]);
            if digits.len() > 1 {
                out.push('.');
                out.push_str(&digits[1..]);
            }
            out.push('e');
            out.push_str(&sci.to_string());
        }
        out
    }

    /// Parse a decimal string (plain or e-notation) exactly, then round to
    /// `precision` working digits.
    pub fn parse(text: &str, precision: u32) -> Result<Self> {
        let s = text.trim();
        if s.is_empty() {
            return Err(Error::Domain("empty decimal string".into()));
        }
        let (s, sign) = match s.as_bytes()[0] {
            b'-' => (&s[1..], -1),
            b'+' => (&s[1..], 1),
            _ => (s, 1),
        };
        let (mant_str, exp_str) = match s.find(['e', 'E']) {
            Some(i) => (&s[..i], Some(&s[i + 1..])),
            None => (s, None),
        };
        let mut digits = String::with_capacity(mant_str.len());
        let mut frac_len: i64 = 0;
        let mut seen_point = false;
        let mut seen_digit = false;
        for c in mant_str.chars() {
            match c {
                '0'..='9' => {
                    digits.push(c);
                    seen_digit = true;
                    if seen_point {
                        frac_len += 1;
                    }
                }
                '.' if !seen_point => seen_point = true,
                _ => {
                    return Err(Error::Domain(format!("invalid decimal string: {text:?}")));
                }
            }
        }
        if !seen_digit {
            return Err(Error::Domain(format!("invalid decimal string: {text:?}")));
        }
        let exp: i64 = match exp_str {
            Some(e) => e
                .parse()
                .map_err(|_| Error::Domain(format!("invalid exponent in: {text:?}")))?,
            None => 0,
        };
        let mantissa: BigUint = digits
            .parse()
            .map_err(|_| Error::Domain(format!("invalid decimal string: {text:?}")))?;
        let m = BigInt::from_biguint(if sign < 0 { Sign::Minus } else { Sign::Plus }, mantissa);
        Ok(Self::normalize(m, exp - frac_len, precision))
    }

    /// Fast multiply by a machine integer.
    pub fn mul_i64(&self, k: i64) -> Self {
        Self::normalize(
            &self.mantissa * BigInt::from(k),
            self.exp10,
            self.precision,
        )
    }

    /// Fast divide by a machine integer.
    pub fn div_i64(&self, k: i64) -> Self {
        assert!(k != 0, "div_i64 by zero");
        if self.is_zero() {
            return self.clone();
        }
        // scale so the truncating integer division keeps two spare digits
        let scaled = &self.mantissa * BigInt::from(pow10(22));
        Self::normalize(scaled / BigInt::from(k), self.exp10 - 22, self.precision)
    }

    /// Multiply by 10^k exactly.
    pub fn shift10(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        APReal {
            mantissa: self.mantissa.clone(),
            exp10: self.exp10 + k,
            precision: self.precision,
        }
    }

    pub fn recip(&self) -> Self {
        &Self::one(self.precision) / self
    }

    /// Integer power by binary exponentiation.
    pub fn powi(&self, n: i64) -> Self {
        if n == 0 {
            return Self::one(self.precision);
        }
        let mut base = if n < 0 { self.recip() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one(self.precision);
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

    /// Square root (floor-corrected Newton on the scaled integer mantissa).
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(Error::Domain("sqrt of negative value".into()));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let target = 2 * (Self::stored_digits(self.precision) + 2);
        let d = digits10_int(&self.mantissa);
        let mut shift = target.saturating_sub(d) as i64;
        if (self.exp10 - shift) % 2 != 0 {
            shift += 1;
        }
        let scaled = self.mantissa.magnitude() * pow10(shift as u32);
        let root = scaled.sqrt();
        Ok(Self::normalize(
            BigInt::from(root),
            (self.exp10 - shift) / 2,
            self.precision,
        ))
    }

    /// e^self.
    pub fn exp(&self) -> Self {
        let prec = self.precision;
        if self.is_zero() {
            return Self::one(prec);
        }
        // halve until the argument is below 2^-12, then Taylor, then square back
        let mag = self.to_f64_approx().abs();
        let k = if mag > 0.0 {
            (mag.log2().ceil() as i64 + 12).max(0) as u32
        } else {
            0
        };
        let boost = ((k as f64) * LOG10_2).ceil() as u32 + 8;
        let pw = prec + boost;
        let mut y = self.with_precision(pw);
        for _ in 0..k {
            y = y.div_i64(2);
        }
        let abs_floor = -((pw + GUARD_DIGITS) as i64 + 2);
        let mut term = Self::one(pw);
        let mut sum = Self::one(pw);
        let mut i = 1i64;
        loop {
            term = (&term * &y).div_i64(i);
            if term.sci_exponent() < abs_floor {
                break;
            }
            sum = &sum + &term;
            i += 1;
        }
        for _ in 0..k {
            sum = &sum * &sum;
        }
        sum.with_precision(prec)
    }

    /// Natural logarithm; requires a strictly positive argument.
    pub fn ln(&self) -> Result<Self> {
        if !self.is_positive() {
            return Err(Error::Domain("ln of non-positive value".into()));
        }
        let prec = self.precision;
        let pw = prec + 12;
        let e_sci = self.sci_exponent();
        let m = self.shift10(-e_sci).with_precision(pw); // in [1, 10)
        // scale by 2^j into [0.75, 1.5)
        let j = (m.to_f64_approx().log2()).round() as i64;
        let mut m = m;
        for _ in 0..j.unsigned_abs() {
            m = if j > 0 { m.div_i64(2) } else { m.mul_i64(2) };
        }
        let one = Self::one(pw);
        let t = &(&m - &one) / &(&m + &one);
        let mut ln_m = atanh_series(&t).mul_i64(2);
        if j != 0 {
            ln_m = &ln_m + &ln2(pw).mul_i64(j);
        }
        if e_sci != 0 {
            ln_m = &ln_m + &ln10(pw).mul_i64(e_sci);
        }
        Ok(ln_m.with_precision(prec))
    }

    /// Simultaneous sine and cosine.
    pub fn sin_cos(&self) -> (Self, Self) {
        let prec = self.precision;
        let mag_exp = self.sci_exponent().max(0) as u32;
        let pw = prec + 12 + 2 * mag_exp;
        let x = self.with_precision(pw);
        let half_pi = pi(pw).div_i64(2);
        // x = q*(pi/2) + r with r in [-pi/4, pi/4]
        let q_real = &x / &half_pi;
        let q = q_real.round_to_integer();
        let r = &x - &half_pi.mul_i64(q_to_i64(&q));
        let quadrant = ((q_to_i64(&q) % 4) + 4) % 4;
        let (s, c) = sin_cos_taylor(&r);
        let (sin, cos) = match quadrant {
            0 => (s, c),
            1 => (c, s.neg()),
            2 => (s.neg(), c.neg()),
            _ => (c.neg(), s),
        };
        (sin.with_precision(prec), cos.with_precision(prec))
    }

    /// Nearest integer as a BigInt-backed value (ties to even).
    pub fn round_to_integer(&self) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        if self.exp10 >= 0 {
            return &self.mantissa * BigInt::from(pow10(self.exp10 as u32));
        }
        let shift = (-self.exp10) as u32;
        let d = digits10_int(&self.mantissa);
        if shift >= d + 2 {
            return BigInt::zero();
        }
        let (m, _) = round_half_even(self.mantissa.clone(), shift);
        m
    }

    /// Arc tangent.
    pub fn atan(&self) -> Self {
        let prec = self.precision;
        let pw = prec + 12;
        let x = self.with_precision(pw);
        if x.is_zero() {
            return Self::zero(prec);
        }
        let one = Self::one(pw);
        let (x, flip) = if x.abs().cmp_exact(&one) == Ordering::Greater {
            (x.recip(), true)
        } else {
            (x, false)
        };
        // halving: atan(t) = 2 atan(t / (1 + sqrt(1 + t^2)))
        let mut t = x.clone();
        let mut doublings = 0u32;
        let tenth = Self::parse("0.1", pw).unwrap();
        while t.abs().cmp_exact(&tenth) == Ordering::Greater {
            let denom = &one + &(&one + &(&t * &t)).sqrt().expect("1+t^2 > 0");
            t = &t / &denom;
            doublings += 1;
        }
        let mut r = atan_series(&t);
        for _ in 0..doublings {
            r = r.mul_i64(2);
        }
        if flip {
            let half_pi = pi(pw).div_i64(2);
            r = if x.is_positive() {
                &half_pi - &r
            } else {
                &half_pi.neg() - &r
            };
        }
        r.with_precision(prec)
    }

    /// Principal-branch atan2(y, x) in (-pi, pi].
    pub fn atan2(y: &Self, x: &Self) -> Self {
        let prec = y.precision.max(x.precision);
        if x.is_zero() {
            if y.is_zero() {
                return Self::zero(prec);
            }
            let half_pi = pi(prec).div_i64(2);
            return if y.is_positive() { half_pi } else { half_pi.neg() };
        }
        let base = (&y.with_precision(prec + 8) / &x.with_precision(prec + 8)).atan();
        if x.is_positive() {
            base.with_precision(prec)
        } else if y.is_negative() {
            (&base - &pi(prec + 8)).with_precision(prec)
        } else {
            (&base + &pi(prec + 8)).with_precision(prec)
        }
    }
}

fn q_to_i64(q: &BigInt) -> i64 {
    q.to_i64().expect("angle reduction quotient fits i64")
}

/// Round `m` right by `shift` digits, half-to-even. Returns (mantissa, extra exp)
/// where extra is 1 when the rounding carried into a new digit.
fn round_half_even(m: BigInt, shift: u32) -> (BigInt, i64) {
    if shift == 0 {
        return (m, 0);
    }
    let p = BigInt::from(pow10(shift));
    let neg = m.is_negative();
    let mag = m.abs();
    let q = &mag / &p;
    let r = &mag - &q * &p;
    let twice: BigInt = &r * 2;
    let round_up = match twice.cmp(&p) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => &q % 2 != BigInt::zero(),
    };
    let mut q = if round_up { q + 1 } else { q };
    let mut extra = 0i64;
    if round_up {
        // 999..9 + 1 can gain a digit; renormalize by one place
        let d_before = digits10_int(&(&q - 1));
        let d_after = digits10_int(&q);
        if d_after > d_before && d_after > 1 {
            let (q2, e2) = round_half_even(q, 1);
            q = q2;
            extra = 1 + e2;
        }
    }
    (if neg { -q } else { q }, extra)
}

fn cmp_scaled(a: &(BigInt, i64), b: &(BigInt, i64)) -> Ordering {
    let (ma, ea) = a;
    let (mb, eb) = b;
    if ma.is_zero() || mb.is_zero() || ma.sign() != mb.sign() {
        return ma.sign().cmp(&mb.sign());
    }
    let e = *ea.min(eb);
    let sa = ma * BigInt::from(pow10((*ea - e) as u32));
    let sb = mb * BigInt::from(pow10((*eb - e) as u32));
    sa.cmp(&sb)
}

/// atanh for |t| < 0.3 via the odd power series.
fn atanh_series(t: &APReal) -> APReal {
    let pw = t.precision();
    let floor = -((pw + GUARD_DIGITS) as i64 + 2);
    let t2 = t * t;
    let mut power = t.clone();
    let mut sum = t.clone();
    let mut k = 1i64;
    loop {
        power = &power * &t2;
        let term = power.div_i64(2 * k + 1);
        if term.sci_exponent() < floor {
            break;
        }
        sum = &sum + &term;
        k += 1;
    }
    sum
}

fn atan_series(t: &APReal) -> APReal {
    let pw = t.precision();
    let floor = -((pw + GUARD_DIGITS) as i64 + 2);
    let t2 = t * t;
    let mut power = t.clone();
    let mut sum = t.clone();
    let mut k = 1i64;
    loop {
        power = &power * &t2;
        let term = power.div_i64(2 * k + 1);
        if term.sci_exponent() < floor {
            break;
        }
        sum = if k % 2 == 1 { &sum - &term } else { &sum + &term };
        k += 1;
    }
    sum
}

/// sin and cos by Taylor series, |x| <= pi/4.
fn sin_cos_taylor(x: &APReal) -> (APReal, APReal) {
    let pw = x.precision();
    let floor = -((pw + GUARD_DIGITS) as i64 + 2);
    let x2 = x * x;
    let mut sin = x.clone();
    let mut cos = APReal::one(pw);
    let mut term_s = x.clone();
    let mut term_c = APReal::one(pw);
    let mut n = 1i64;
    loop {
        term_c = (&term_c * &x2).div_i64((2 * n - 1) * (2 * n));
        term_s = (&term_s * &x2).div_i64((2 * n) * (2 * n + 1));
        let live_c = term_c.sci_exponent() >= floor;
        let live_s = term_s.sci_exponent() >= floor;
        if !live_c && !live_s {
            break;
        }
        if n % 2 == 1 {
            cos = &cos - &term_c;
            sin = &sin - &term_s;
        } else {
            cos = &cos + &term_c;
            sin = &sin + &term_s;
        }
        n += 1;
    }
    (sin, cos)
}

// ---------------------------------------------------------------------------
// cached constants
// ---------------------------------------------------------------------------

fn const_cache() -> &'static Mutex<HashMap<(u8, u32), APReal>> {
    static CACHE: OnceLock<Mutex<HashMap<(u8, u32), APReal>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached_const(tag: u8, precision: u32, compute: impl FnOnce() -> APReal) -> APReal {
    if let Some(v) = const_cache().lock().unwrap().get(&(tag, precision)) {
        return v.clone();
    }
    let v = compute();
    const_cache()
        .lock()
        .unwrap()
        .insert((tag, precision), v.clone());
    v
}

/// Integer-scaled arctan(1/m): floor(10^scale_digits * atan(1/m)) up to rounding.
fn atan_inv_scaled(m: u64, scale_digits: u32) -> BigInt {
    let scale = BigInt::from(pow10(scale_digits));
    let m2 = BigInt::from(m) * BigInt::from(m);
    let mut x = scale / BigInt::from(m);
    let mut k = 0i64;
    let mut sum = BigInt::zero();
    while !x.is_zero() {
        let term = &x / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        x = &x / &m2;
        k += 1;
    }
    sum
}

/// Integer-scaled atanh(1/m).
fn atanh_inv_scaled(m: u64, scale_digits: u32) -> BigInt {
    let scale = BigInt::from(pow10(scale_digits));
    let m2 = BigInt::from(m) * BigInt::from(m);
    let mut x = scale / BigInt::from(m);
    let mut k = 0i64;
    let mut sum = BigInt::zero();
    while !x.is_zero() {
        sum += &x / BigInt::from(2 * k + 1);
        x = &x / &m2;
        k += 1;
    }
    sum
}

/// pi at the given precision (Machin's formula).
pub fn pi(precision: u32) -> APReal {
    cached_const(0, precision, || {
        let sd = APReal::stored_digits(precision) + 8;
        let v = atan_inv_scaled(5, sd) * 16 - atan_inv_scaled(239, sd) * 4;
        APReal::from_scaled(v, -(sd as i64), precision)
    })
}

/// ln 2 at the given precision.
pub fn ln2(precision: u32) -> APReal {
    cached_const(1, precision, || {
        let sd = APReal::stored_digits(precision) + 8;
        let v = atanh_inv_scaled(3, sd) * 2;
        APReal::from_scaled(v, -(sd as i64), precision)
    })
}

/// ln 10 at the given precision: 3 ln 2 + 2 atanh(1/9).
pub fn ln10(precision: u32) -> APReal {
    cached_const(2, precision, || {
        let sd = APReal::stored_digits(precision) + 8;
        let v = atanh_inv_scaled(3, sd) * 6 + atanh_inv_scaled(9, sd) * 2;
        APReal::from_scaled(v, -(sd as i64), precision)
    })
}

// ---------------------------------------------------------------------------
// operator impls (reference-based, result precision = max of operands)
// ---------------------------------------------------------------------------

impl Add for &APReal {
    type Output = APReal;
    fn add(self, rhs: &APReal) -> APReal {
        let prec = self.precision.max(rhs.precision);
        if self.is_zero() {
            return rhs.with_precision(prec);
        }
        if rhs.is_zero() {
            return self.with_precision(prec);
        }
        let target = APReal::stored_digits(prec) as i64;
        let top_a = self.sci_exponent();
        let top_b = rhs.sci_exponent();
        if top_a - top_b > target + 4 {
            return self.with_precision(prec);
        }
        if top_b - top_a > target + 4 {
            return rhs.with_precision(prec);
        }
        let common = self.exp10.min(rhs.exp10);
        let ma = &self.mantissa * BigInt::from(pow10((self.exp10 - common) as u32));
        let mb = &rhs.mantissa * BigInt::from(pow10((rhs.exp10 - common) as u32));
        APReal::normalize(ma + mb, common, prec)
    }
}

impl Sub for &APReal {
    type Output = APReal;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: &APReal) -> APReal {
        self + &rhs.neg()
    }
}

impl Mul for &APReal {
    type Output = APReal;
    fn mul(self, rhs: &APReal) -> APReal {
        let prec = self.precision.max(rhs.precision);
        APReal::normalize(
            &self.mantissa * &rhs.mantissa,
            self.exp10 + rhs.exp10,
            prec,
        )
    }
}

impl Div for &APReal {
    type Output = APReal;
    fn div(self, rhs: &APReal) -> APReal {
        assert!(!rhs.is_zero(), "APReal division by zero");
        let prec = self.precision.max(rhs.precision);
        if self.is_zero() {
            return APReal::zero(prec);
        }
        let da = digits10_int(&self.mantissa) as i64;
        let db = digits10_int(&rhs.mantissa) as i64;
        let k = APReal::stored_digits(prec) as i64 + (db - da) + 2;
        let (num, den, exp) = if k >= 0 {
            (
                &self.mantissa * BigInt::from(pow10(k as u32)),
                rhs.mantissa.clone(),
                self.exp10 - rhs.exp10 - k,
            )
        } else {
            (
                self.mantissa.clone(),
                &rhs.mantissa * BigInt::from(pow10((-k) as u32)),
                self.exp10 - rhs.exp10 - k,
            )
        };
        APReal::normalize(num / den, exp, prec)
    }
}

impl Neg for &APReal {
    type Output = APReal;
    fn neg(self) -> APReal {
        APReal {
            mantissa: -self.mantissa.clone(),
            exp10: self.exp10,
            precision: self.precision,
        }
    }
}

impl APReal {
    pub fn neg(&self) -> Self {
        -self
    }
}

impl PartialEq for APReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_quoted(other) == Ordering::Equal
    }
}

impl PartialOrd for APReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_quoted(other))
    }
}

impl std::fmt::Display for APReal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_decimal_string(self.precision))
    }
}
