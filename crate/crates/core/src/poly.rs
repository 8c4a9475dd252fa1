//! Univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat_int, to_f64, ExactRational};

/// A polynomial `c_0 + c_1 x + ... + c_d x^d`.
///
/// Coefficients are stored in ascending degree and the leading coefficient is
/// never zero; the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<ExactRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    /// `x + c`.
    pub fn shifted_x(c: ExactRational) -> Self {
        Self::from_coeffs(vec![c, BigRational::one()])
    }

    /// `a x + b`.
    pub fn affine(a: ExactRational, b: ExactRational) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    pub fn from_coeffs(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> ExactRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> ExactRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> ExactRational {
        self.eval(&rat_int(x))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// `self(inner(x))`, by Horner's rule.
    pub fn compose(&self, inner: &UniPoly) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// `self(a x + b)`.
    pub fn compose_affine(&self, a: &ExactRational, b: &ExactRational) -> Self {
        self.compose(&Self::affine(a.clone(), b.clone()))
    }

    /// The falling factorial `x (x-1) ... (x-j+1)`.
    pub fn falling(j: usize) -> Self {
        (0..j).fold(Self::one(), |acc, i| &acc * &Self::shifted_x(rat_int(-(i as i64))))
    }

    /// The rising factorial `x (x+1) ... (x+j-1)`.
    pub fn rising(j: usize) -> Self {
        (0..j).fold(Self::one(), |acc, i| &acc * &Self::shifted_x(rat_int(i as i64)))
    }

    /// `binomial(x - shift, j)` as a degree-`j` polynomial in `x`.
    pub fn binomial(shift: &ExactRational, j: usize) -> Self {
        let fact: BigInt = (1..=j).map(BigInt::from).product();
        Self::falling(j).compose(&Self::shifted_x(-shift.clone())).scale(&BigRational::new(BigInt::one(), fact))
    }

    /// The unique polynomial of degree `< points.len()` through the given
    /// nodes (Newton divided differences). Nodes must be distinct.
    pub fn interpolate(points: &[(ExactRational, ExactRational)]) -> Result<Self> {
        let n = points.len();
        for i in 0..n {
            for j in 0..i {
                if points[i].0 == points[j].0 {
                    return Err(Error::domain("interpolation nodes must be distinct"));
                }
            }
        }
        let xs: Vec<&ExactRational> = points.iter().map(|p| &p.0).collect();
        let mut dd: Vec<ExactRational> = points.iter().map(|p| p.1.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (xs[i] - xs[i - level]);
            }
        }
        let mut out = Self::zero();
        for i in (0..n).rev() {
            out = &(&out * &Self::shifted_x(-xs[i].clone())) + &Self::constant(dd[i].clone());
        }
        Ok(out)
    }

    /// Coefficients as exact rational strings, ascending degree.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    /// Human-readable form in the variable `var`, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("n"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self.display_in("x"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn trims_trailing_zeros() {
        let p = UniPoly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(UniPoly::from_ints(&[0, 0]).degree(), None);
    }

    #[test]
    fn arithmetic_and_eval() {
        let p = UniPoly::from_ints(&[1, 1]); // 1 + x
        let q = &p * &p;
        assert_eq!(q, UniPoly::from_ints(&[1, 2, 1]));
        assert_eq!(q.eval_int(3), rat_int(16));
        assert!((&q - &q).is_zero());
        assert_eq!(p.pow(3).eval(&rat(1, 2)), rat(27, 8));
    }

    #[test]
    fn composition() {
        let p = UniPoly::from_ints(&[0, 0, 1]); // x^2
        let r = p.compose_affine(&rat_int(-1), &rat_int(1)); // (1 - x)^2
        assert_eq!(r, UniPoly::from_ints(&[1, -2, 1]));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = UniPoly::from_coeffs(vec![rat(1, 3), rat_int(-2), rat(5, 7), rat_int(1)]);
        let pts: Vec<_> = (-1..3).map(|x| (rat_int(x), p.eval_int(x))).collect();
        assert_eq!(UniPoly::interpolate(&pts).unwrap(), p);
        assert!(UniPoly::interpolate(&[(rat_int(1), rat_int(1)), (rat_int(1), rat_int(2))]).is_err());
    }

    #[test]
    fn binomial_polynomial() {
        // binomial(x - 1, 2) = (x-1)(x-2)/2
        let b = UniPoly::binomial(&rat_int(1), 2);
        assert_eq!(b.eval_int(5), rat_int(6));
        assert_eq!(b.eval_int(1), rat_int(0));
        assert_eq!(b.eval_int(-1), rat_int(3));
    }

    #[test]
    fn display() {
        let p = UniPoly::from_coeffs(vec![rat_int(0), rat(-1, 2), rat(1, 2)]);
        assert_eq!(p.to_string(), "1/2*n^2 - 1/2*n");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(UniPoly::from_ints(&[-1, 0, 1]).display_in("a"), "a^2 - 1");
    }
}
