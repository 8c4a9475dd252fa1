//! Factorial powers with integer exponents, exact and in `f64`.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat_int, ExactRational};

/// Which way the factors step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorialKind {
    Rising,
    Falling,
}

impl std::str::FromStr for FactorialKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rising" => Ok(FactorialKind::Rising),
            "falling" => Ok(FactorialKind::Falling),
            other => Err(Error::InvalidInput(format!("unknown factorial kind `{other}`"))),
        }
    }
}

/// `a (a+r) ... (a+(n-1)r)` for `n >= 0` and `1/((a-r)(a-2r)...(a-|n|r))`
/// for `n < 0`.
pub fn kramp_general_factorial(a: &ExactRational, r: &ExactRational, n: i64) -> Result<ExactRational> {
    let mut acc = BigRational::one();
    if n >= 0 {
        for i in 0..n {
            acc *= a + r * rat_int(i);
        }
        return Ok(acc);
    }
    for i in 1..=-n {
        let f = a - r * rat_int(i);
        if f.is_zero() {
            return Err(Error::pole(format!("factor a - {i}r vanishes")));
        }
        acc *= f;
    }
    Ok(acc.recip())
}

/// `z (z-1) ... (z-n+1)`; for `n < 0`, `1/((z+1)(z+2)...(z+|n|))`.
pub fn falling(z: &ExactRational, n: i64) -> Result<ExactRational> {
    kramp_general_factorial(z, &rat_int(-1), n)
}

/// `z (z+1) ... (z+n-1)`; for `n < 0`, `1/((z-1)(z-2)...(z-|n|))`.
pub fn rising(z: &ExactRational, n: i64) -> Result<ExactRational> {
    kramp_general_factorial(z, &rat_int(1), n)
}

fn general_f64(a: f64, r: f64, n: i64) -> Result<f64> {
    let mut acc = 1.0;
    if n >= 0 {
        for i in 0..n {
            acc *= a + r * i as f64;
        }
    } else {
        for i in 1..=-n {
            let f = a - r * i as f64;
            if f == 0.0 {
                return Err(Error::pole(format!("factor {a} - {i}*{r} vanishes")));
            }
            acc /= f;
        }
    }
    if acc.is_finite() {
        Ok(acc)
    } else {
        Err(Error::domain("factorial power overflows f64"))
    }
}

pub fn falling_f64(z: f64, n: i64) -> Result<f64> {
    general_f64(z, -1.0, n)
}

pub fn rising_f64(z: f64, n: i64) -> Result<f64> {
    general_f64(z, 1.0, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn spot_values() {
        assert_eq!(falling(&rat_int(5), 3).unwrap(), rat_int(60));
        assert_eq!(falling(&rat_int(1), -2).unwrap(), rat(1, 6));
        assert_eq!(falling(&rat(7, 3), 0).unwrap(), rat_int(1));
        assert_eq!(rising(&rat_int(2), 3).unwrap(), rat_int(24));
        assert_eq!(rising(&rat_int(1), 6).unwrap(), rat_int(720));
        assert_eq!(kramp_general_factorial(&rat_int(2), &rat_int(3), 3).unwrap(), rat_int(80));
        assert_eq!(kramp_general_factorial(&rat_int(5), &rat_int(1), -2).unwrap(), rat(1, 12));
        assert_eq!(kramp_general_factorial(&rat_int(1), &rat_int(1), 4).unwrap(), rat_int(24));
    }

    #[test]
    fn poles() {
        assert!(matches!(falling(&rat_int(-2), -3), Err(Error::Pole(_))));
        assert!(matches!(rising(&rat_int(2), -2), Err(Error::Pole(_))));
        assert!(falling_f64(-1.0, -1).is_err());
    }

    #[test]
    fn rising_is_shifted_falling() {
        for n in 0..6 {
            let z = rat(-5, 4);
            assert_eq!(rising(&z, n).unwrap(), falling(&(&z + rat_int(n - 1)), n).unwrap());
        }
    }

    #[test]
    fn f64_matches_exact() {
        assert_eq!(falling_f64(5.0, 3).unwrap(), 60.0);
        assert!((rising_f64(0.5, -2).unwrap() - 1.0 / (-0.5 * -1.5)).abs() < 1e-15);
    }
}
