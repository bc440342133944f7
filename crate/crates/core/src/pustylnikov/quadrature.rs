//! Composite Gauss-Legendre quadrature at arbitrary precision.
//!
//! Nodes and weights come from Newton iteration on the Legendre recurrence,
//! seeded by the Chebyshev angle approximation and polished at working
//! precision. Rules are cached per (node count, precision).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::apcore::APReal;

/// One Gauss-Legendre rule on [-1, 1].
#[derive(Debug)]
pub struct GlRule {
    pub nodes: Vec<APReal>,
    pub weights: Vec<APReal>,
}

#[allow(clippy::type_complexity)]
fn rule_cache() -> &'static Mutex<HashMap<(usize, u32), Arc<GlRule>>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u32), Arc<GlRule>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Legendre P_n and P_{n-1} at x.
fn legendre_pair(n: usize, x: &APReal) -> (APReal, APReal) {
    let prec = x.precision();
    let mut p_prev = APReal::one(prec);
    let mut p = x.clone();
    for k in 2..=n {
        // k P_k = (2k-1) x P_{k-1} - (k-1) P_{k-2}
        let next = (&(x * &p).mul_i64(2 * k as i64 - 1) - &p_prev.mul_i64(k as i64 - 1))
            .div_i64(k as i64);
        p_prev = p;
        p = next;
    }
    (p, p_prev)
}

/// Gauss-Legendre nodes and weights for `n` points at `precision` digits.
pub fn gauss_legendre(n: usize, precision: u32) -> Arc<GlRule> {
    assert!(n >= 2);
    if let Some(r) = rule_cache().lock().unwrap().get(&(n, precision)) {
        return r.clone();
    }
    let wp = precision + 8;
    let one = APReal::one(wp);
    let tol = -(wp as i64 + 2);
    let mut nodes = vec![APReal::zero(precision); n];
    let mut weights = vec![APReal::zero(precision); n];
    for i in 0..n.div_ceil(2) {
        // Chebyshev-angle seed, accurate to ~1e-3
        let seed = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut x = APReal::parse(&format!("{seed:.15e}"), wp).unwrap();
        let mut dpn = APReal::one(wp);
        for _ in 0..64 {
            let (pn, pn1) = legendre_pair(n, &x);
            // P'_n = n (x P_n - P_{n-1}) / (x^2 - 1)
            let x2m1 = &(&x * &x) - &one;
            dpn = (&(&(&x * &pn) - &pn1).mul_i64(n as i64)) / &x2m1;
            let dx = &pn / &dpn;
            x = &x - &dx;
            if dx.is_zero() || dx.abs().sci_exponent() < tol {
                break;
            }
        }
        let x2m1 = &(&x * &x) - &one;
        let w = &APReal::from_i64(-2, wp) / &(&x2m1 * &(&dpn * &dpn));
        nodes[i] = x.neg().with_precision(precision); // ascending order
        nodes[n - 1 - i] = x.with_precision(precision);
        weights[i] = w.with_precision(precision);
        weights[n - 1 - i] = weights[i].clone();
    }
    let rule = Arc::new(GlRule { nodes, weights });
    rule_cache()
        .lock()
        .unwrap()
        .insert((n, precision), rule.clone());
    rule
}

/// Integrate `f` over [a, b] split into `panels` equal panels with an
/// n-point rule per panel. Summation order is fixed by panel and node
/// index, so results are bit-identical across runs.
pub fn integrate_composite<F>(
    f: &mut F,
    a: &APReal,
    b: &APReal,
    panels: usize,
    n: usize,
    precision: u32,
) -> APReal
where
    F: FnMut(&APReal) -> APReal,
{
    let rule = gauss_legendre(n, precision);
    let width = &(b - a).div_i64(panels as i64);
    let half = width.div_i64(2);
    let mut total = APReal::zero(precision);
    for p in 0..panels {
        let left = a + &width.mul_i64(p as i64);
        let mid = &left + &half;
        let mut acc = APReal::zero(precision);
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            let u = &mid + &(&half * x);
            acc = &acc + &(w * &f(&u));
        }
        total = &total + &(&acc * &half);
    }
    total
}
