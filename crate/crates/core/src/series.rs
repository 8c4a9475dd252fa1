//! Formal power series truncated at a fixed order.
//!
//! Coefficients live in a commutative Q-algebra ([`Coeff`]): plain rationals
//! or polynomials in a parameter. `log`, `exp` and `pow` only ever divide by
//! integers, so they work for both.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::ExactRational;
use crate::poly::UniPoly;

pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, r: &ExactRational) -> Self;
    /// The constant value when the coefficient is a scalar.
    fn as_scalar(&self) -> Option<ExactRational>;
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &ExactRational) -> Self {
        self * r
    }
    fn as_scalar(&self) -> Option<ExactRational> {
        Some(self.clone())
    }
}

impl Coeff for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &ExactRational) -> Self {
        UniPoly::scale(self, r)
    }
    fn as_scalar(&self) -> Option<ExactRational> {
        match self.degree() {
            None => Some(<BigRational as Zero>::zero()),
            Some(0) => Some(self.coeff(0)),
            Some(_) => None,
        }
    }
}

/// `c_0 + c_1 u + ... + c_K u^K + O(u^(K+1))`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

fn inv_int(n: usize) -> ExactRational {
    BigRational::new(BigInt::one(), BigInt::from(n))
}

impl<C: Coeff> TruncatedSeries<C> {
    /// Pads or cuts `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        TruncatedSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    fn common_order(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(self.common_order(other), |k| self.coeffs[k].add(&other.coeffs[k]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(self.common_order(other), |k| self.coeffs[k].sub(&other.coeffs[k]))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.common_order(other);
        Self::from_fn(order, |n| {
            (0..=n).fold(C::zero(), |acc, k| {
                if self.coeffs[k].is_zero() {
                    acc
                } else {
                    acc.add(&self.coeffs[k].mul(&other.coeffs[n - k]))
                }
            })
        })
    }

    /// Every coefficient multiplied by `c`.
    pub fn scale_by(&self, c: &C) -> Self {
        Self::from_fn(self.order(), |k| self.coeffs[k].mul(c))
    }

    /// `log(self)`; requires constant term exactly 1.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != C::one() {
            return Err(Error::domain("series log needs constant term 1"));
        }
        let s = &self.coeffs;
        let mut l: Vec<C> = vec![C::zero(); s.len()];
        // n l_n = n s_n - sum_{k=1}^{n-1} k l_k s_{n-k}
        for n in 1..s.len() {
            let mut acc = s[n].scale(&BigRational::from_integer(BigInt::from(n)));
            for k in 1..n {
                if l[k].is_zero() || s[n - k].is_zero() {
                    continue;
                }
                let term = l[k].mul(&s[n - k]).scale(&BigRational::from_integer(BigInt::from(k)));
                acc = acc.sub(&term);
            }
            l[n] = acc.scale(&inv_int(n));
        }
        Ok(TruncatedSeries { coeffs: l })
    }

    /// `exp(self)`; requires constant term 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::domain("series exp needs constant term 0"));
        }
        let l = &self.coeffs;
        let mut e: Vec<C> = vec![C::zero(); l.len()];
        e[0] = C::one();
        // n e_n = sum_{k=1}^{n} k l_k e_{n-k}
        for n in 1..l.len() {
            let mut acc = C::zero();
            for k in 1..=n {
                if l[k].is_zero() || e[n - k].is_zero() {
                    continue;
                }
                let term = l[k].mul(&e[n - k]).scale(&BigRational::from_integer(BigInt::from(k)));
                acc = acc.add(&term);
            }
            e[n] = acc.scale(&inv_int(n));
        }
        Ok(TruncatedSeries { coeffs: e })
    }

    /// `self^beta = exp(beta log self)` for a series with constant term 1.
    pub fn pow(&self, beta: &C) -> Result<Self> {
        self.log()?.scale_by(beta).exp()
    }
}

impl TruncatedSeries<BigRational> {
    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if Zero::is_zero(a0) {
            return Err(Error::DivisionByZero);
        }
        let inv0 = a0.recip();
        let mut c: Vec<BigRational> = vec![<BigRational as Zero>::zero(); self.coeffs.len()];
        c[0] = inv0.clone();
        for n in 1..self.coeffs.len() {
            let mut acc = <BigRational as Zero>::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &c[n - k];
            }
            c[n] = -acc * &inv0;
        }
        Ok(TruncatedSeries { coeffs: c })
    }
}

/// Bernoulli numbers `B_0..=B_n` (with `B_1 = -1/2`), read off the exact
/// inverse of `(e^u - 1)/u`.
pub fn bernoulli_numbers(n: usize) -> Vec<ExactRational> {
    let mut fact = BigInt::one();
    let mut facts = Vec::with_capacity(n + 2);
    for k in 0..=n + 1 {
        if k > 0 {
            fact *= k;
        }
        facts.push(fact.clone());
    }
    let base = TruncatedSeries::from_fn(n, |k| BigRational::new(BigInt::one(), facts[k + 1].clone()));
    let inv = base.inverse().expect("constant term is 1");
    inv.coeffs.iter().enumerate().map(|(k, c)| c * BigRational::from_integer(facts[k].clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    fn exp_series(order: usize) -> TruncatedSeries<BigRational> {
        let mut f = BigInt::one();
        TruncatedSeries::from_fn(order, |k| {
            if k > 0 {
                f *= k;
            }
            BigRational::new(BigInt::one(), f.clone())
        })
    }

    #[test]
    fn exp_of_log_is_identity() {
        let s = TruncatedSeries::new(vec![rat_int(1), rat(1, 2), rat(-3, 7), rat_int(2)], 6);
        let back = s.log().unwrap().exp().unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn exp_of_u_matches_taylor() {
        let u = TruncatedSeries::new(vec![rat_int(0), rat_int(1)], 8);
        assert_eq!(u.exp().unwrap(), exp_series(8));
    }

    #[test]
    fn inverse_times_self_is_one() {
        let s = TruncatedSeries::new(vec![rat_int(2), rat_int(1), rat(1, 3)], 5);
        let prod = s.mul(&s.inverse().unwrap());
        assert_eq!(prod, TruncatedSeries::constant(rat_int(1), 5));
    }

    #[test]
    fn square_root_via_pow() {
        // (1 + u)^(1/2) squared is 1 + u
        let s = TruncatedSeries::new(vec![rat_int(1), rat_int(1)], 7);
        let r = s.pow(&rat(1, 2)).unwrap();
        assert_eq!(r.mul(&r), s);
        assert_eq!(*r.coeff(2), rat(-1, 8));
    }

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_numbers(12);
        assert_eq!(b[0], rat_int(1));
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[3], rat_int(0));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[12], rat(-691, 2730));
    }

    #[test]
    fn domain_errors() {
        let s = TruncatedSeries::new(vec![rat_int(2)], 3);
        assert!(s.log().is_err());
        assert!(s.exp().is_err());
        assert!(TruncatedSeries::new(vec![rat_int(0)], 2).inverse().is_err());
    }
}
