//! Convergent series built from factorial powers: the reciprocal expansion
//! of `1/z`, Nicole's finite identity, `z^n` for negative `n`, the
//! real-exponent generalization of `z^n = sum {n brace k} z^(k falling)`,
//! and the generating series `((1/u) ln(1/(1-u)))^(-alpha)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::factorial::{falling, FactorialKind};
use super::gamma::factorial_power_real;
use crate::error::{Error, Result};
use crate::exact::{ln_abs, rat_int, ExactRational};
use crate::numbers::stirling_cycle;
use crate::poly::UniPoly;
use crate::series::TruncatedSeries;
use crate::stirling_poly::subset_lower_poly;

/// Checks
/// `1/z = sum_{k=1}^n z_1...z_{k-1} / ((z+z_1)...(z+z_k)) + z_1...z_n / (z (z+z_1)...(z+z_n))`
/// exactly.
pub fn nicole_check(z: &ExactRational, zs: &[ExactRational]) -> Result<bool> {
    if z.is_zero() {
        return Err(Error::pole("z = 0"));
    }
    let mut numer = BigRational::one();
    let mut denom = BigRational::one();
    let mut rhs = BigRational::zero();
    for (k, zk) in zs.iter().enumerate() {
        let f = z + zk;
        if f.is_zero() {
            return Err(Error::pole(format!("z + z_{} = 0", k + 1)));
        }
        denom *= f;
        rhs += &numer / &denom;
        numer *= zk;
    }
    rhs += numer / (denom * z);
    Ok(rhs == z.recip())
}

/// `(sum_{k=1}^n (k-1)!/((z+1)...(z+k)),  n!/(z (z+1)...(z+n)))`; the two
/// parts always add to `1/z`.
pub fn reciprocal_series(z: &ExactRational, n: usize) -> Result<(ExactRational, ExactRational)> {
    if n == 0 {
        return Err(Error::domain("reciprocal series needs n >= 1"));
    }
    if z.is_zero() {
        return Err(Error::pole("z = 0"));
    }
    let mut partial = BigRational::zero();
    let mut fact = BigRational::one(); // (k-1)!
    let mut denom = BigRational::one();
    for k in 1..=n {
        let f = z + rat_int(k as i64);
        if f.is_zero() {
            return Err(Error::pole(format!("z + {k} = 0")));
        }
        denom *= f;
        partial += &fact / &denom;
        fact *= rat_int(k as i64);
    }
    let remainder = fact / (denom * z);
    Ok((partial, remainder))
}

/// The first `terms` nonzero terms of
/// `z^n = sum_{k <= n} {n brace k} z^(k falling)` for `n < 0`, `z > 0`.
pub fn negative_power_series(z: f64, n: i64, terms: usize) -> Result<f64> {
    if n >= 0 {
        return Err(Error::domain("negative power series needs n < 0"));
    }
    if !(z > 0.0) {
        return Err(Error::domain("negative power series needs z > 0"));
    }
    // z^(k falling) = 1/((z+1)...(z+|k|)) for k < 0
    let mut ln_fall: f64 = (1..=-n).map(|i| (z + i as f64).ln()).sum();
    let mut sum = 0.0;
    for j in 0..terms as i64 {
        let k = n - j;
        if j > 0 {
            ln_fall += (z - k as f64).ln();
        }
        // {n brace k} = [-k brack -n] > 0 here
        let c = BigRational::from_integer(stirling_cycle(-k, -n));
        sum += (ln_abs(&c) - ln_fall).exp();
    }
    Ok(sum)
}

/// Result of summing a convergent series with early stopping.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesOutcome {
    pub value: f64,
    pub terms_used: usize,
    /// Three consecutive terms fell below `tolerance * |value|`.
    pub converged: bool,
    pub last_term: f64,
}

pub const DEFAULT_TOLERANCE: f64 = 1e-17;

/// Coefficients of `s(u)^beta` where `s(u) = sum_k u^k/(k+1)`, in `f64`.
/// `k f_k = sum_{j=1}^k ((beta+1) j - k) s_j f_{k-j}`.
pub fn log_power_coeffs_f64(beta: f64, order: usize) -> Vec<f64> {
    let s: Vec<f64> = (0..=order).map(|k| 1.0 / (k as f64 + 1.0)).collect();
    let mut f = vec![0.0; order + 1];
    f[0] = 1.0;
    for k in 1..=order {
        let acc: f64 = (1..=k).map(|j| ((beta + 1.0) * j as f64 - k as f64) * s[j] * f[k - j]).sum();
        f[k] = acc / k as f64;
    }
    f
}

/// `sum_k {alpha brace alpha-k} z^((alpha-k) falling)`, up to `budget + 1`
/// terms, converging to `z^alpha` for `z > 0`.
///
/// Term `k` is `h_k * u_k` where `h_k` are the coefficients of
/// `((1/u) ln(1/(1-u)))^(-alpha)` and
/// `u_k = prod_{j<=k} (j-alpha) * z^((alpha-k) falling)`, which keeps every
/// factor in floating-point range.
pub fn generalized_power_series(z: f64, alpha: f64, budget: usize) -> Result<SeriesOutcome> {
    generalized_power_series_tol(z, alpha, budget, DEFAULT_TOLERANCE)
}

pub fn generalized_power_series_tol(z: f64, alpha: f64, budget: usize, tolerance: f64) -> Result<SeriesOutcome> {
    if !(z > 0.0) || !z.is_finite() || !alpha.is_finite() {
        return Err(Error::domain("generalized power series needs finite z > 0"));
    }
    let h = log_power_coeffs_f64(-alpha, budget);
    let mut u = factorial_power_real(z, alpha, FactorialKind::Falling)?;
    let mut sum = 0.0;
    let mut small_run = 0;
    let mut last = 0.0;
    for (k, hk) in h.iter().enumerate() {
        if k > 0 {
            let kf = k as f64;
            let d = z + kf - alpha;
            if d == 0.0 {
                return Err(Error::pole(format!("z + {k} - alpha = 0")));
            }
            u *= (kf - alpha) / d;
        }
        last = hk * u;
        sum += last;
        if last.abs() <= tolerance * sum.abs() {
            small_run += 1;
            if small_run == 3 {
                return Ok(SeriesOutcome { value: sum, terms_used: k + 1, converged: true, last_term: last });
            }
        } else {
            small_run = 0;
        }
    }
    Ok(SeriesOutcome { value: sum, terms_used: budget + 1, converged: false, last_term: last })
}

/// Exact terms `{n brace n-k} z^((n-k) falling)`, `k = 0..=n`, for integer
/// exponent `n >= 0`.
pub fn generalized_terms_exact(z: &ExactRational, n: u32) -> Result<Vec<ExactRational>> {
    let n64 = i64::from(n);
    (0..=n as usize)
        .map(|k| {
            let c = subset_lower_poly(k).eval_int(n64);
            Ok(c * falling(z, n64 - k as i64)?)
        })
        .collect()
}

fn log_series_base(order: usize) -> Result<TruncatedSeries<BigRational>> {
    TruncatedSeries::from_fn(order, |k| BigRational::new(BigInt::one(), BigInt::from(k + 1))).log()
}

fn order_check(order: usize, cap: usize) -> Result<()> {
    if order > cap {
        return Err(Error::CapExceeded { what: "series order", requested: order as u128, cap: cap as u128 });
    }
    Ok(())
}

/// `((1/u) ln(1/(1-u)))^(-alpha)` to order `order` with coefficients in
/// `Q[alpha]`, via exact series log and exp.
pub fn log_power_series(order: usize, cap: usize) -> Result<TruncatedSeries<UniPoly>> {
    order_check(order, cap)?;
    let log = log_series_base(order)?;
    let lifted = TruncatedSeries::from_fn(order, |k| UniPoly::constant(log.coeff(k).clone()));
    lifted.scale_by(&UniPoly::affine(rat_int(-1), rat_int(0))).exp()
}

/// The same series at a fixed rational `alpha`.
pub fn log_power_series_at(alpha: &ExactRational, order: usize, cap: usize) -> Result<TruncatedSeries<BigRational>> {
    order_check(order, cap)?;
    log_series_base(order)?.scale_by(&-alpha).exp()
}

/// `prod_{j=1}^k (j - alpha)` as a polynomial in `alpha`.
pub fn shifted_product_poly(k: usize) -> UniPoly {
    (1..=k as i64).fold(UniPoly::one(), |acc, j| &acc * &UniPoly::affine(rat_int(-1), rat_int(j)))
}

/// Whether `h_k * prod_{j<=k} (j-alpha) = {alpha brace alpha-k}` for every
/// `k <= order`.
pub fn log_power_identity_holds(order: usize, cap: usize) -> Result<bool> {
    let h = log_power_series(order, cap)?;
    Ok((0..=order).all(|k| &h.coeff(k).clone() * &shifted_product_poly(k) == subset_lower_poly(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, to_f64};
    use crate::numbers::stirling_subset;
    use num_traits::Signed;

    #[test]
    fn nicole() {
        assert!(nicole_check(&rat_int(1), &[rat_int(1)]).unwrap());
        assert!(nicole_check(&rat(3, 2), &[rat_int(1), rat_int(2), rat_int(3)]).unwrap());
        assert!(nicole_check(&rat_int(2), &vec![rat_int(1); 4]).unwrap());
        assert!(nicole_check(&rat_int(-1), &[rat_int(1)]).is_err());
    }

    #[test]
    fn reciprocal() {
        assert_eq!(reciprocal_series(&rat_int(1), 1).unwrap(), (rat(1, 2), rat(1, 2)));
        let (p, r) = reciprocal_series(&rat_int(2), 3).unwrap();
        // 1/3 + 1/12 + 2/60 and 6/120
        assert_eq!(p, rat(9, 20));
        assert_eq!(r, rat(1, 20));
        let (p, r) = reciprocal_series(&rat(1, 2), 10).unwrap();
        assert_eq!(p + &r, rat_int(2));
        assert!(r.is_positive());
        assert!((to_f64(&r) - 0.540_520_367_145_754_1).abs() < 1e-12);
    }

    #[test]
    fn negative_powers() {
        assert_eq!(negative_power_series(1.0, -1, 1).unwrap(), 0.5);
        // 60-digit evaluation of the 40-term partial sum minus 1/9.
        let s = negative_power_series(3.0, -2, 40).unwrap();
        assert!((s - 1.0 / 9.0 + 1.166_88e-4).abs() < 1e-8, "{}", s - 1.0 / 9.0);
        let s = negative_power_series(2.0, -1, 60).unwrap();
        assert!((s - 0.5).abs() < 0.02);
        assert!(negative_power_series(1.0, 1, 3).is_err());
    }

    #[test]
    fn generalized_half_power() {
        let out = generalized_power_series(10.0, 0.5, 200).unwrap();
        assert!(((out.value - 10f64.sqrt()) / 10f64.sqrt()).abs() < 1e-13);
        let out = generalized_power_series(2.0, -1.0, 40).unwrap();
        assert!((out.value - 0.5).abs() < 1e-3);
    }

    #[test]
    fn generalized_integer_power_terminates() {
        let out = generalized_power_series(3.5, 4.0, 200).unwrap();
        assert!(out.converged);
        assert!(out.terms_used <= 8);
        assert!((out.value - 3.5f64.powi(4)).abs() < 1e-10);
    }

    #[test]
    fn generalized_exact_terms_match_stirling_expansion() {
        let z = rat(7, 3);
        for n in 0..7u32 {
            let terms = generalized_terms_exact(&z, n).unwrap();
            for (k, t) in terms.iter().enumerate() {
                let j = i64::from(n) - k as i64;
                let expect = BigRational::from_integer(stirling_subset(i64::from(n), j)) * falling(&z, j).unwrap();
                assert_eq!(*t, expect);
            }
            let total: BigRational = terms.iter().sum();
            assert_eq!(total, crate::exact::pow_i64(&z, i64::from(n)).unwrap());
        }
    }

    #[test]
    fn log_power_series_low_order() {
        let h = log_power_series(4, 16).unwrap();
        assert_eq!(*h.coeff(0), UniPoly::one());
        assert_eq!(*h.coeff(1), UniPoly::affine(rat(-1, 2), rat_int(0)));
        assert!(log_power_identity_holds(8, 16).unwrap());
        assert!(log_power_series(17, 16).is_err());
    }

    #[test]
    fn f64_coefficients_match_exact_ones() {
        let alpha = rat(1, 2);
        let exact = log_power_series_at(&alpha, 16, 16).unwrap();
        let approx = log_power_coeffs_f64(-0.5, 16);
        for k in 0..=16 {
            let e = to_f64(exact.coeff(k));
            assert!((approx[k] - e).abs() <= 1e-13 * e.abs().max(1e-300), "k={k}");
        }
    }
}
