use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::predicate::is_prime;
use crate::error::{Error, Result};
use crate::exact::{rat_int, ExactRational};

fn gt(x: i64, k: i64) -> i64 {
    i64::from(x > k)
}

fn libri_table(k: i64, x: i64) -> Vec<BigInt> {
    let mut p: Vec<BigInt> = vec![BigInt::from(1)];
    for j in 1..=k {
        let mut acc = BigInt::zero();
        for (i, pi) in p.iter().enumerate() {
            acc -= pi * gt(x, j - i as i64);
        }
        p.push(acc);
    }
    p
}

/// `P_0 = 1`, `P_k = -[x>k] P_0 - [x>k-1] P_1 - ... - [x>1] P_{k-1}`.
///
/// Equals `[x | k] - [x | k-1]` for `k > 0`.
pub fn libri_p(k: i64, x: i64) -> Result<BigInt> {
    if k < 0 || x < 1 {
        return Err(Error::domain(format!("libri_p needs k >= 0 and x >= 1 (got k={k}, x={x})")));
    }
    Ok(libri_table(k, x).pop().expect("table has k+1 entries"))
}

/// `(1 - m[x>m]P_0 - (m-1)[x>m-1]P_1 - ... - 1[x>1]P_{m-1}) / x`, which
/// equals `[x | m]`.
pub fn libri_divisor(m: i64, x: i64) -> Result<ExactRational> {
    if m < 1 || x < 1 {
        return Err(Error::domain(format!("libri_divisor needs m, x >= 1 (got m={m}, x={x})")));
    }
    let p = libri_table(m - 1, x);
    let mut numer = BigInt::from(1);
    for (k, pk) in p.iter().enumerate() {
        let a = m - k as i64;
        numer -= pk * (a * gt(x, a));
    }
    Ok(BigRational::new(numer, BigInt::from(x)))
}

/// `(1^k + 2^k + ... + (p-1)^k) mod p` for prime `p`.
pub fn power_sum_mod(p: i64, k: i64) -> Result<i64> {
    if !is_prime(&BigInt::from(p)) {
        return Err(Error::NotPrime(p));
    }
    if k < 1 {
        return Err(Error::domain("power_sum_mod needs k >= 1"));
    }
    let modulus = BigInt::from(p);
    let e = BigInt::from(k);
    let total = (1..p).fold(BigInt::zero(), |acc, m| (acc + BigInt::from(m).modpow(&e, &modulus)) % &modulus);
    Ok(total.to_i64().expect("residue below p"))
}

/// `[x | m]` as an exact rational, for comparisons.
pub fn divides_bracket(x: i64, m: i64) -> ExactRational {
    rat_int(i64::from(if x == 0 { m == 0 } else { m % x == 0 }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_values() {
        for x in 1..6 {
            assert_eq!(libri_p(0, x).unwrap(), BigInt::from(1));
        }
        assert_eq!(libri_p(3, 3).unwrap(), BigInt::from(1));
        assert_eq!(libri_p(4, 3).unwrap(), BigInt::from(-1));
        let run: Vec<i64> = (0..8).map(|k| libri_p(k, 3).unwrap().to_i64().unwrap()).collect();
        assert_eq!(run, vec![1, -1, 0, 1, -1, 0, 1, -1]);
        assert!(libri_p(-1, 3).is_err());
        assert!(libri_p(2, 0).is_err());
    }

    #[test]
    fn closed_form() {
        for x in 1..=12 {
            for k in 1..=40 {
                let want = divides_bracket(x, k) - divides_bracket(x, k - 1);
                assert_eq!(BigRational::from_integer(libri_p(k, x).unwrap()), want, "k={k} x={x}");
            }
        }
    }

    #[test]
    fn divisor_quotient() {
        assert_eq!(libri_divisor(6, 3).unwrap(), rat_int(1));
        assert_eq!(libri_divisor(7, 3).unwrap(), rat_int(0));
        for m in 1..30 {
            assert_eq!(libri_divisor(m, 1).unwrap(), rat_int(1));
        }
        assert!(libri_divisor(0, 2).is_err());
    }

    #[test]
    fn hardy_wright() {
        assert_eq!(power_sum_mod(5, 4).unwrap(), 4);
        assert_eq!(power_sum_mod(5, 3).unwrap(), 0);
        assert_eq!(power_sum_mod(2, 1).unwrap(), 1);
        assert!(matches!(power_sum_mod(9, 2), Err(Error::NotPrime(9))));
    }
}
