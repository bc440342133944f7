//! The three Mobius transforms between the s plane and the w planes, the
//! key-point table, and the real-axis inequality scans.
//!
//! w   = 1 - 1/s        maps re(s) = 1/2 onto |w| = 1,
//! w_h = 1 - 1/(s+1/2)  maps re(s) = 0   onto |w_h| = 1,
//! w_m = 1 - 1/(s-1/2)  maps re(s) = 1   onto |w_m| = 1.

use crate::apcore::{APComplex, APReal};
use crate::error::{Error, Result};
use crate::specfun::{xi_direct, SpecFunContext};

/// Which transform.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapId {
    WMap,
    WhMap,
    WmMap,
}

impl MapId {
    pub fn name(self) -> &'static str {
        match self {
            MapId::WMap => "w_map",
            MapId::WhMap => "wh_map",
            MapId::WmMap => "wm_map",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// A Mobius map as an integer coefficient matrix z -> (a z + b)/(c z + d),
/// carrying its inverse.
#[derive(Clone, Debug)]
pub struct MobiusMap {
    pub id: MapId,
    forward: [i64; 4],
    inverse: [i64; 4],
}

/// The transform for the requested plane.
pub fn mobius(id: MapId) -> MobiusMap {
    let (forward, inverse) = match id {
        // w = (s - 1)/s, s = 1/(1 - w)
        MapId::WMap => ([1, -1, 1, 0], [0, 1, -1, 1]),
        // w_h = (2s - 1)/(2s + 1), s = (w_h + 1)/(2 - 2 w_h)
        MapId::WhMap => ([2, -1, 2, 1], [1, 1, -2, 2]),
        // w_m = (2s - 3)/(2s - 1), s = (3 - w_m)/(2 - 2 w_m)
        MapId::WmMap => ([2, -3, 2, -1], [-1, 3, -2, 2]),
    };
    MobiusMap {
        id,
        forward,
        inverse,
    }
}

impl MobiusMap {
    /// Apply in the requested direction; a pole input is an error naming
    /// the map.
    pub fn apply(&self, direction: Direction, z: &APComplex) -> Result<APComplex> {
        let m = match direction {
            Direction::Forward => &self.forward,
            Direction::Inverse => &self.inverse,
        };
        let p = z.precision();
        let num = &z.mul_i64(m[0]) + &APComplex::from_i64(m[1], 0, p);
        let den = &z.mul_i64(m[2]) + &APComplex::from_i64(m[3], 0, p);
        if den.is_zero() {
            return Err(Error::Pole {
                map: self.id.name().into(),
                point: z.to_display_string(8),
            });
        }
        Ok(&num / &den)
    }
}

/// Shorthand used across the crate: apply one of the named maps.
pub fn apply(id: MapId, direction: Direction, z: &APComplex) -> Result<APComplex> {
    mobius(id).apply(direction, z)
}

/// w_h = (1 + w)/(3 - w) and w_m = (3w - 1)/(w + 1) for the same point.
pub fn chain_relation(w: &APComplex) -> Result<(APComplex, APComplex)> {
    let p = w.precision();
    let three = APComplex::from_i64(3, 0, p);
    let one = APComplex::one(p);
    let den_h = &three - w;
    let den_m = w + &one;
    if den_h.is_zero() || den_m.is_zero() {
        return Err(Error::Pole {
            map: "chain_relation".into(),
            point: w.to_display_string(8),
        });
    }
    let wh = &(w + &one) / &den_h;
    let wm = &(&w.mul_i64(3) - &one) / &den_m;
    Ok((wh, wm))
}

/// One row of the key-point table.
#[derive(Clone, Debug)]
pub struct Table1Row {
    pub w: APReal,
    pub s: APReal,
    pub xi_plus_half: APReal,
    pub xi_minus_half: APReal,
}

/// Recompute the six key-point rows (w, s, xi(s+1/2), xi(s-1/2)).
pub fn table1(ctx: &SpecFunContext) -> Vec<Table1Row> {
    let p = ctx.precision;
    let ws = ["-1", "-0.333333333333333333333333333333", "0", "0.5", "0.9", "0.95"];
    let mut rows = Vec::with_capacity(ws.len());
    for w_str in ws {
        let w = APReal::parse(w_str, p).unwrap();
        let s = apply(
            MapId::WMap,
            Direction::Inverse,
            &APComplex::from_real(w.clone()),
        )
        .expect("table points avoid the pole at w = 1");
        let half = APReal::one(p).div_i64(2);
        let up = xi_direct(&APComplex::from_real(s.re() + &half), ctx);
        let down = xi_direct(&APComplex::from_real(s.re() - &half), ctx);
        rows.push(Table1Row {
            w,
            s: s.re().clone(),
            xi_plus_half: up.re().clone(),
            xi_minus_half: down.re().clone(),
        });
    }
    rows
}

/// One scanned point of the inequality report.
#[derive(Clone, Debug)]
pub struct ScanRow {
    pub w: APReal,
    pub s: APReal,
    /// xi(s + 1/2)
    pub xi_h: APReal,
    pub xi_plus: APReal,
    pub xi_minus: APReal,
    /// xi(s - 1/2)
    pub xi_m: APReal,
    pub chain1_ok: bool,
    pub chain2_ok: bool,
}

/// Inequality report over a grid of real w < 1.
#[derive(Clone, Debug)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    pub violations: usize,
}

/// Evaluate xi(s +- 1/2) and xi_+-(s) at s = 1/(1-w) for every grid point
/// and check both inequality chains:
///   xi(s+1/2) > xi_+(s) > xi_-(s) > 0   and   xi_+(s) > xi(s-1/2) > 0.
///
/// A failed comparison is a reported finding, not an error.
pub fn inequality_scan(w_grid: &[APReal], ctx: &SpecFunContext) -> Result<ScanReport> {
    let p = ctx.precision;
    let one = APReal::one(p);
    let half = one.div_i64(2);
    let mut rows = Vec::with_capacity(w_grid.len());
    let mut violations = 0usize;
    for w in w_grid {
        if w.cmp_exact(&one) != std::cmp::Ordering::Less {
            return Err(Error::Domain(format!(
                "scan point {} is not below 1",
                w.to_decimal_string(6)
            )));
        }
        let s = &one / &(&one - w);
        let xi_h = xi_direct(&APComplex::from_real(&s + &half), ctx)
            .re()
            .clone();
        let xi_m = xi_direct(&APComplex::from_real(&s - &half), ctx)
            .re()
            .clone();
        let xi_plus = (&xi_h + &xi_m).div_i64(2);
        let xi_minus = (&xi_h - &xi_m).div_i64(2);
        let gt = |a: &APReal, b: &APReal| a.cmp_exact(b) == std::cmp::Ordering::Greater;
        let zero = APReal::zero(p);
        let chain1_ok = gt(&xi_h, &xi_plus) && gt(&xi_plus, &xi_minus) && gt(&xi_minus, &zero);
        let chain2_ok = gt(&xi_plus, &xi_m) && gt(&xi_m, &zero);
        if !chain1_ok || !chain2_ok {
            violations += 1;
        }
        rows.push(ScanRow {
            w: w.clone(),
            s,
            xi_h,
            xi_plus,
            xi_minus,
            xi_m,
            chain1_ok,
            chain2_ok,
        });
    }
    Ok(ScanReport { rows, violations })
}

/// Chebyshev-spaced grid on [lo, hi]: points cluster at both ends, which is
/// where the inequality margins tighten.
pub fn chebyshev_grid(count: usize, lo: &APReal, hi: &APReal) -> Vec<APReal> {
    let p = lo.precision().max(hi.precision());
    let mid = (lo + hi).div_i64(2);
    let halfspan = (hi - lo).div_i64(2);
    let pi_v = crate::apcore::pi(p);
    let mut out = Vec::with_capacity(count);
    for k in 1..=count {
        let angle = pi_v
            .mul_i64(2 * k as i64 - 1)
            .div_i64(2 * count as i64);
        let (_, c) = angle.sin_cos();
        out.push(&mid + &(&halfspan * &c));
    }
    out.sort_by(|a, b| a.cmp_exact(b));
    out
}

/// CSV export of a scan report.
pub fn scan_to_csv(report: &ScanReport, sig: u32) -> String {
    let mut out = String::from("w,s,xi_h,xi_plus,xi_minus,xi_m,chain1_ok,chain2_ok\n");
    for r in &report.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.w.to_decimal_string(sig),
            r.s.to_decimal_string(sig),
            r.xi_h.to_decimal_string(sig),
            r.xi_plus.to_decimal_string(sig),
            r.xi_minus.to_decimal_string(sig),
            r.xi_m.to_decimal_string(sig),
            r.chain1_ok,
            r.chain2_ok
        ));
    }
    out
}

/// CSV export of the key-point table.
pub fn table1_to_csv(rows: &[Table1Row], sig: u32) -> String {
    let mut out = String::from("w,s,xi_plus_half,xi_minus_half\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.w.to_decimal_string(sig),
            r.s.to_decimal_string(sig),
            r.xi_plus_half.to_decimal_string(sig),
            r.xi_minus_half.to_decimal_string(sig)
        ));
    }
    out
}
