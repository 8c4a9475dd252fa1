//! Conversions between the power, falling-factorial and rising-factorial
//! bases of `Q[z]`.
//!
//! A coefficient list `c` in a factorial basis means `sum_k c[k] z^(k falling)`
//! (or rising). Conversions use the Stirling tables:
//! `z^n = sum_k {n brace k} z^(k falling)`,
//! `z^(n falling) = sum_k (-1)^(n-k) [n brack k] z^k`,
//! `z^(n rising) = sum_k [n brack k] z^k`,
//! `z^n = sum_k (-1)^(n-k) {n brace k} z^(k rising)`.

use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::ExactRational;
use crate::numbers::{stirling_cycle, stirling_subset};
use crate::poly::UniPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Power,
    Falling,
    Rising,
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "power" => Ok(Basis::Power),
            "falling" => Ok(Basis::Falling),
            "rising" => Ok(Basis::Rising),
            other => Err(Error::InvalidInput(format!("unknown basis `{other}`"))),
        }
    }
}

fn signed(v: num_bigint::BigInt, negate: bool) -> ExactRational {
    let r = BigRational::from_integer(v);
    if negate {
        -r
    } else {
        r
    }
}

fn trim(mut c: Vec<ExactRational>) -> Vec<ExactRational> {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    c
}

/// Coefficients of `p` on `z^(k falling)`, `k = 0..=deg p`.
pub fn power_to_falling(p: &UniPoly) -> Vec<ExactRational> {
    from_power(p, false)
}

/// Coefficients of `p` on `z^(k rising)`.
pub fn power_to_rising(p: &UniPoly) -> Vec<ExactRational> {
    from_power(p, true)
}

fn from_power(p: &UniPoly, alternate: bool) -> Vec<ExactRational> {
    let len = p.coeffs().len();
    let mut out = vec![BigRational::zero(); len];
    for (n, c) in p.coeffs().iter().enumerate() {
        for (k, slot) in out.iter_mut().enumerate().take(n + 1) {
            let s = stirling_subset(n as i64, k as i64);
            *slot += c * signed(s, alternate && (n - k) % 2 == 1);
        }
    }
    trim(out)
}

/// `sum_k c[k] z^(k falling)` expanded in powers of `z`.
pub fn falling_to_power(c: &[ExactRational]) -> UniPoly {
    to_power(c, true)
}

/// `sum_k c[k] z^(k rising)` expanded in powers of `z`.
pub fn rising_to_power(c: &[ExactRational]) -> UniPoly {
    to_power(c, false)
}

fn to_power(c: &[ExactRational], alternate: bool) -> UniPoly {
    let mut out = vec![BigRational::zero(); c.len()];
    for (n, cn) in c.iter().enumerate() {
        if cn.is_zero() {
            continue;
        }
        for (k, slot) in out.iter_mut().enumerate().take(n + 1) {
            let s = stirling_cycle(n as i64, k as i64);
            *slot += cn * signed(s, alternate && (n - k) % 2 == 1);
        }
    }
    UniPoly::from_coeffs(out)
}

/// Re-expresses a coefficient list from one basis in another.
pub fn convert(c: &[ExactRational], from: Basis, to: Basis) -> Vec<ExactRational> {
    let p = match from {
        Basis::Power => UniPoly::from_coeffs(c.to_vec()),
        Basis::Falling => falling_to_power(c),
        Basis::Rising => rising_to_power(c),
    };
    match to {
        Basis::Power => p.coeffs().to_vec(),
        Basis::Falling => power_to_falling(&p),
        Basis::Rising => power_to_rising(&p),
    }
}
