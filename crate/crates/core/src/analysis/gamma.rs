//! Real factorial powers through gamma-function ratios.
//!
//! `rising(z, a) = Gamma(z+a)/Gamma(z)` and `falling(z, a) = rising(z-a+1, a)`.
//! When both gamma arguments are positive the ratio is computed as a
//! difference of Stirling series after shifting both arguments past 20, which
//! avoids the cancellation of subtracting two large log-gammas.

use std::f64::consts::PI;

use super::factorial::{falling_f64, rising_f64, FactorialKind};
use crate::error::{Error, Result};

/// `B_{2k} / (2k (2k-1))` for `k = 1..=8`.
const STIRLING_COEFFS: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

const SHIFT_TARGET: f64 = 20.0;
const POLE_TOLERANCE: f64 = 1e-9;

/// `sum_k c_k x^(1-2k)`.
fn stirling_tail(x: f64) -> f64 {
    let inv2 = 1.0 / (x * x);
    STIRLING_COEFFS.iter().rev().fold(0.0, |acc, c| acc * inv2 + c) / x
}

fn near_pole(x: f64) -> bool {
    x <= 0.0 && (x - x.round()).abs() < POLE_TOLERANCE
}

/// `sin(pi x)` with exact zeros at integers.
fn sinpi(x: f64) -> f64 {
    let r = x.rem_euclid(2.0);
    if r == 0.0 || r == 1.0 {
        return 0.0;
    }
    let (s, sign) = if r < 1.0 { (r, 1.0) } else { (r - 1.0, -1.0) };
    let s = if s > 0.5 { 1.0 - s } else { s };
    sign * (PI * s).sin()
}

/// `(ln |Gamma(x)|, sign Gamma(x))`.
pub fn ln_gamma_signed(x: f64) -> Result<(f64, f64)> {
    if !x.is_finite() {
        return Err(Error::domain("gamma argument must be finite"));
    }
    if near_pole(x) {
        return Err(Error::pole(format!("gamma pole near {x}")));
    }
    if x < 0.5 {
        let s = sinpi(x);
        let (l, sg) = ln_gamma_signed(1.0 - x)?;
        return Ok((PI.ln() - s.abs().ln() - l, sg * s.signum()));
    }
    let mut shift_log = 0.0;
    let mut w = x;
    while w < SHIFT_TARGET {
        shift_log += w.ln();
        w += 1.0;
    }
    let l = (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + stirling_tail(w);
    Ok((l - shift_log, 1.0))
}

/// `Gamma(z + a) / Gamma(z)` for real `z`, `a`.
pub fn gamma_ratio(z: f64, a: f64) -> Result<f64> {
    if !(z.is_finite() && a.is_finite()) {
        return Err(Error::domain("gamma ratio arguments must be finite"));
    }
    if a.fract() == 0.0 && a.abs() < 1e6 {
        return rising_f64(z, a as i64);
    }
    if near_pole(z) || near_pole(z + a) {
        return Err(Error::pole(format!("gamma ratio argument near a pole (z = {z}, a = {a})")));
    }
    let out = if z > 0.0 && z + a > 0.0 {
        positive_ratio(z, a)
    } else {
        let (l1, s1) = ln_gamma_signed(z + a)?;
        let (l0, s0) = ln_gamma_signed(z)?;
        s1 * s0 * (l1 - l0).exp()
    };
    if out.is_finite() {
        Ok(out)
    } else {
        Err(Error::domain("gamma ratio overflows f64"))
    }
}

fn positive_ratio(z: f64, a: f64) -> f64 {
    let mut w = z;
    let mut factor = 1.0;
    // Gamma(z+a)/Gamma(z) = [Gamma(w+a)/Gamma(w)] * prod (z+i)/(z+a+i)
    while w.min(w + a) < SHIFT_TARGET {
        factor *= w / (w + a);
        w += 1.0;
    }
    let diff = (w - 0.5) * (a / w).ln_1p() + a * (w + a).ln() - a + stirling_tail(w + a) - stirling_tail(w);
    factor * diff.exp()
}

/// Real factorial power: rising `Gamma(z+a)/Gamma(z)`, falling
/// `Gamma(z+1)/Gamma(z-a+1)`. Integer `a` uses the exact product.
pub fn factorial_power_real(z: f64, a: f64, kind: FactorialKind) -> Result<f64> {
    match kind {
        FactorialKind::Rising => gamma_ratio(z, a),
        FactorialKind::Falling => {
            if a.fract() == 0.0 && a.abs() < 1e6 {
                falling_f64(z, a as i64)
            } else {
                gamma_ratio(z - a + 1.0, a)
            }
        }
    }
}
