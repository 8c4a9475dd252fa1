//! Asymptotic expansions of real factorial powers in falling powers of `z`,
//! and Kramp's expansion of the generalized factorial `a^(n|r)`.
//!
//! `z^(alpha rising) ~ sum_k g_k(alpha) z^(alpha-k)` and
//! `z^(alpha falling) ~ sum_k (-1)^k g_k(alpha) z^(alpha-k)`, where
//! `g_k(alpha) = [alpha brack alpha-k]`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::factorial::{kramp_general_factorial, FactorialKind};
use crate::error::{Error, Result};
use crate::exact::{ceil_int, pow_i64, rat, rat_int, round_to_bits, to_f64, to_i64, ExactRational};
use crate::poly::UniPoly;
use crate::series::bernoulli_numbers;
use crate::stirling_poly::cycle_poly_values_at;

/// A truncated asymptotic sum and the size of its first omitted term.
///
/// The bound is a heuristic: the expansion is asymptotic, not convergent,
/// and only the order `O(z^(alpha-m-1))` is guaranteed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymOutcome {
    pub value: f64,
    pub modeled_error_bound: f64,
}

fn sign_for(kind: FactorialKind, k: usize) -> f64 {
    if kind == FactorialKind::Falling && k % 2 == 1 {
        -1.0
    } else {
        1.0
    }
}

/// `sum_{k=0}^m (+-1)^k g_k(alpha) z^(alpha-k)` for `z > 0`.
pub fn asym_factorial_power(z: f64, alpha: f64, m: usize, kind: FactorialKind) -> Result<AsymOutcome> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::domain("asymptotic expansion needs finite z > 0"));
    }
    let a = BigRational::from_float(alpha).ok_or_else(|| Error::domain("alpha must be finite"))?;
    let g = cycle_poly_values_at(&a, m + 1);
    let ln_z = z.ln();
    let term = |k: usize| sign_for(kind, k) * to_f64(&g[k]) * ((alpha - k as f64) * ln_z).exp();
    let value = (0..=m).map(term).sum();
    Ok(AsymOutcome { value, modeled_error_bound: term(m + 1).abs() })
}

const WORK_BITS: u32 = 448;
const SHIFT_TARGET: i64 = 100;
const BERNOULLI_TERMS: usize = 30;

fn bernoulli_weights() -> &'static [ExactRational] {
    static W: OnceLock<Vec<ExactRational>> = OnceLock::new();
    W.get_or_init(|| {
        let b = bernoulli_numbers(2 * BERNOULLI_TERMS);
        (1..=BERNOULLI_TERMS).map(|k| &b[2 * k] / rat_int((2 * k * (2 * k - 1)) as i64)).collect()
    })
}

fn negligible(t: &ExactRational) -> bool {
    static EPS: OnceLock<ExactRational> = OnceLock::new();
    let eps = EPS.get_or_init(|| BigRational::new(BigInt::one(), BigInt::one() << (WORK_BITS + 8)));
    t.abs() < *eps
}

/// `ln(1 + x)` for `|x| <= 1/2`, to about `2^-WORK_BITS`.
fn ln1p_exact(x: &ExactRational) -> ExactRational {
    let mut sum = BigRational::zero();
    let mut pw = x.clone();
    for j in 1.. {
        let t = &pw / rat_int(j);
        if negligible(&t) {
            break;
        }
        if j % 2 == 1 {
            sum += t;
        } else {
            sum -= t;
        }
        pw = round_to_bits(&(pw * x), WORK_BITS + 32);
    }
    round_to_bits(&sum, WORK_BITS)
}

/// `exp(x)` for `|x| <= 1`.
fn exp_exact(x: &ExactRational) -> ExactRational {
    let mut sum = BigRational::one();
    let mut t = BigRational::one();
    for j in 1.. {
        t = round_to_bits(&(t * x / rat_int(j)), WORK_BITS + 32);
        if negligible(&t) {
            break;
        }
        sum += &t;
    }
    round_to_bits(&sum, WORK_BITS)
}

/// Relative truncation error `P/R - 1` of the `m`-term expansion against the
/// true factorial power, for rational `alpha` and `z > 0`.
///
/// Everything except the final `f64` step is done in rational arithmetic
/// (rounded to `2^-448`), so errors far below `f64` epsilon are resolved.
/// With `alpha = p/q` the `q`-th root is taken last: `Y = (P/R)^q` is
/// rational, and `P/R - 1 = expm1(ln1p(Y - 1)/q)`.
pub fn asym_error(alpha: &ExactRational, z: &ExactRational, m: usize, kind: FactorialKind) -> Result<f64> {
    if !z.is_positive() {
        return Err(Error::domain("asymptotic error needs z > 0"));
    }
    // the gamma ratio being approximated is Gamma(zg + alpha)/Gamma(zg)
    let zg = match kind {
        FactorialKind::Rising => z.clone(),
        FactorialKind::Falling => z - alpha + rat_int(1),
    };
    if !zg.is_positive() || !(&zg + alpha).is_positive() {
        return Err(Error::domain("asymptotic error needs positive gamma arguments"));
    }
    let g = cycle_poly_values_at(alpha, m);
    let zinv = z.recip();
    let mut s = BigRational::zero();
    let mut zp = BigRational::one();
    for (k, gk) in g.iter().enumerate() {
        let t = gk * &zp;
        if kind == FactorialKind::Falling && k % 2 == 1 {
            s -= t;
        } else {
            s += t;
        }
        zp *= &zinv;
    }

    let low = if alpha.is_negative() { &zg + alpha } else { zg.clone() };
    let shift = to_i64(&BigRational::from_integer(ceil_int(&(rat_int(SHIFT_TARGET) - low)))).unwrap_or(0).max(0);
    let mut pi = BigRational::one();
    for i in 0..shift {
        let i = rat_int(i);
        pi *= (&zg + alpha + &i) / (&zg + &i);
    }
    let w = &zg + rat_int(shift);
    let wa = &w + alpha;

    // E = ln(Gamma(w+alpha)/Gamma(w)) - alpha ln(w+alpha)
    let mut e = (&w - rat(1, 2)) * ln1p_exact(&(alpha / &w)) - alpha;
    let (wa_inv2, w_inv2) = ((&wa * &wa).recip(), (&w * &w).recip());
    let (mut pa, mut pw) = (wa.recip(), w.recip());
    for c in bernoulli_weights() {
        e += c * (&pa - &pw);
        pa = round_to_bits(&(pa * &wa_inv2), WORK_BITS + 32);
        pw = round_to_bits(&(pw * &w_inv2), WORK_BITS + 32);
    }
    let e = round_to_bits(&e, WORK_BITS);

    let q_val = round_to_bits(&(s * pi * exp_exact(&-e)), WORK_BITS);
    let p = to_i64(&BigRational::from_integer(alpha.numer().clone()))
        .ok_or_else(|| Error::domain("alpha numerator too large"))?;
    let q = to_i64(&BigRational::from_integer(alpha.denom().clone()))
        .ok_or_else(|| Error::domain("alpha denominator too large"))?;
    let y = pow_i64(&q_val, q)? * pow_i64(&(z / &wa), p)?;
    let y1 = to_f64(&(y - rat_int(1)));
    Ok((y1.ln_1p() / q as f64).exp_m1())
}

/// Kramp's expansion `a^(n|r) = sum_m g_m(n) a^(n-m) r^m`.
///
/// For `n >= 0` the sum is finite and the identity is checked exactly as a
/// polynomial in `t = r/a`: `prod_{i<n} (1 + i t) = sum_m g_m(n) t^m`. For
/// `n < 0` the series converges when `|n r| < |a|`; the partial sum through
/// `t^m` is compared with the exact product at sample points with
/// `|n r / a| = 1/4`, to relative tolerance `1e-9`.
pub fn kramp_expansion_check(n: i64, m: usize) -> Result<bool> {
    let nr = rat_int(n);
    if n >= 0 {
        let product = (0..n).fold(UniPoly::one(), |acc, i| &acc * &UniPoly::affine(rat_int(i), rat_int(1)));
        let g = cycle_poly_values_at(&nr, m.max(n as usize));
        return Ok(product == UniPoly::from_coeffs(g));
    }
    let scale = rat(1, 4 * n.abs());
    let samples = [(rat_int(4), rat_int(1)), (rat_int(-3), rat_int(1)), (rat(5, 2), rat_int(-1))];
    for (a, dir) in samples {
        let r = &a * &scale * dir;
        let exact = kramp_general_factorial(&a, &r, n)?;
        let partial = kramp_expansion_partial(&a, &r, n, m)?;
        if (&partial - &exact).abs() > exact.abs() * rat(1, 1_000_000_000) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `sum_{j=0}^m g_j(n) a^(n-j) r^j`, exactly.
pub fn kramp_expansion_partial(a: &ExactRational, r: &ExactRational, n: i64, m: usize) -> Result<ExactRational> {
    if a.is_zero() {
        return Err(Error::pole("a = 0"));
    }
    let g = cycle_poly_values_at(&rat_int(n), m);
    let mut sum = BigRational::zero();
    let mut pw = pow_i64(a, n)?;
    let ratio = r / a;
    for gj in &g {
        sum += gj * &pw;
        pw *= &ratio;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::gamma::factorial_power_real;

    #[test]
    fn integer_alpha_terminates() {
        for z in [0.5, 2.0, 7.25] {
            let r = asym_factorial_power(z, 3.0, 3, FactorialKind::Rising).unwrap();
            assert!((r.value - z * (z + 1.0) * (z + 2.0)).abs() < 1e-12 * r.value.abs());
            assert_eq!(r.modeled_error_bound, 0.0);
            let f = asym_factorial_power(z, 3.0, 3, FactorialKind::Falling).unwrap();
            assert!((f.value - z * (z - 1.0) * (z - 2.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn half_power_against_gamma_ratio() {
        let r = asym_factorial_power(100.0, 0.5, 5, FactorialKind::Rising).unwrap();
        let want = 9.9875078612625182106;
        assert!(((r.value - want) / want).abs() < 1e-14);
        let g = factorial_power_real(100.0, 0.5, FactorialKind::Rising).unwrap();
        assert!(((r.value - g) / g).abs() < 1e-7);
    }

    #[test]
    fn exact_error_measurement() {
        let half = rat(1, 2);
        // Relative error at m = 5, z = 100, from a 60-digit evaluation.
        let e = asym_error(&half, &rat_int(100), 5, FactorialKind::Rising).unwrap();
        assert!((e.abs() / 2.19e-16 - 1.0).abs() < 0.01, "{e}");
        let e10 = asym_error(&half, &rat_int(10), 5, FactorialKind::Rising).unwrap();
        let ratio = e10 / e;
        assert!((ratio / 1.484e6 - 1.0).abs() < 0.01, "{ratio}");
        // falling vs the f64 gamma ratio where the error is visible in f64
        let ef = asym_error(&half, &rat_int(10), 1, FactorialKind::Falling).unwrap();
        let approx = asym_factorial_power(10.0, 0.5, 1, FactorialKind::Falling).unwrap().value;
        let truth = factorial_power_real(10.0, 0.5, FactorialKind::Falling).unwrap();
        assert!(((approx / truth - 1.0) / ef - 1.0).abs() < 1e-6);
    }

    #[test]
    fn kramp_expansion() {
        for n in 0..8 {
            assert!(kramp_expansion_check(n, 4).unwrap(), "n={n}");
        }
        let p = kramp_expansion_partial(&rat_int(4), &rat_int(1), -1, 30).unwrap();
        assert!((p - rat(1, 3)).abs() < rat(1, 1_000_000_000_000));
        for n in -4..0 {
            assert!(kramp_expansion_check(n, 40).unwrap(), "n={n}");
        }
        assert!(!kramp_expansion_check(-2, 2).unwrap());
    }
}
