//! Exact integers and rationals plus the few helpers the rest of the crate
//! needs on top of `num`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;
/// Exact fraction of two [`ExactInt`]s, always kept in lowest terms.
pub type ExactRational = BigRational;

pub fn int(n: i64) -> ExactInt {
    BigInt::from(n)
}

pub fn rat(num: i64, den: i64) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `7`, `-3/4`, `0.125` or `2.5e-3` into an exact rational.
pub fn parse_rational(text: &str) -> Result<ExactRational> {
    let s = text.trim();
    let bad = || Error::InvalidInput(format!("not a rational number: `{text}`"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = parse_rational(n)?;
        let d = parse_rational(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(n / d);
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all: String = format!("{whole}{frac}");
    let numer: BigInt = all.parse().map_err(|_| bad())?;
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    if negative {
        value = -value;
    }
    Ok(value)
}

/// `base^exp` with the convention `0^0 = 1`; a zero base with a negative
/// exponent is a division by zero.
pub fn pow_i64(base: &ExactRational, exp: i64) -> Result<ExactRational> {
    if exp == 0 {
        return Ok(BigRational::one());
    }
    if base.is_zero() {
        return if exp > 0 { Ok(BigRational::zero()) } else { Err(Error::DivisionByZero) };
    }
    let e = exp.unsigned_abs() as usize;
    let p = num_traits::pow(base.clone(), e);
    Ok(if exp > 0 { p } else { p.recip() })
}

pub fn is_integer(r: &ExactRational) -> bool {
    r.denom().is_one()
}

/// The value as an `i64` when it is an integer that fits.
pub fn to_i64(r: &ExactRational) -> Option<i64> {
    if is_integer(r) {
        r.numer().to_i64()
    } else {
        None
    }
}

pub fn to_f64(r: &ExactRational) -> f64 {
    if let Some(x) = r.to_f64() {
        if x.is_finite() {
            return x;
        }
    }
    let sign = if r.is_negative() { -1.0 } else { 1.0 };
    sign * ln_abs(r).exp()
}

fn ln_abs_int(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.abs().to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top = (x.abs() >> shift).to_f64().unwrap_or(f64::INFINITY);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural log of `|r|`, usable far outside the `f64` range.
/// Returns `-inf` for zero.
pub fn ln_abs(r: &ExactRational) -> f64 {
    if r.is_zero() {
        return f64::NEG_INFINITY;
    }
    ln_abs_int(r.numer()) - ln_abs_int(r.denom())
}

/// Rounds to the nearest multiple of `2^-bits` (ties away from zero).
pub fn round_to_bits(r: &ExactRational, bits: u32) -> ExactRational {
    let scale = BigInt::one() << bits;
    let q = (r * BigRational::from_integer(scale.clone())).round().to_integer();
    BigRational::new(q, scale)
}

/// Smallest integer `>= r`.
pub fn ceil_int(r: &ExactRational) -> ExactInt {
    r.ceil().to_integer()
}

/// Largest integer `<= r`.
pub fn floor_int(r: &ExactRational) -> ExactInt {
    r.floor().to_integer()
}
