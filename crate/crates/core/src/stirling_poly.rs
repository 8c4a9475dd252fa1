//! Stirling numbers as polynomials in the upper index.
//!
//! Two independent routes produce the same polynomials: exact interpolation
//! of the integer tables ([`cycle_poly`], [`subset_poly`]) and Kramp's sums
//! over integer partitions ([`kramp_c`], [`kramp_gamma`]). The tests compare
//! them; neither is defined in terms of the other.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat_int, ExactRational};
use crate::numbers::{factorial, stirling_cycle, stirling_subset};
use crate::poly::UniPoly;

type PolyCache = RwLock<HashMap<usize, UniPoly>>;

fn cached(cache: &'static OnceLock<PolyCache>, k: usize, build: impl FnOnce() -> UniPoly) -> UniPoly {
    let cache = cache.get_or_init(Default::default);
    if let Some(p) = cache.read().expect("poly cache poisoned").get(&k) {
        return p.clone();
    }
    let p = build();
    cache.write().expect("poly cache poisoned").insert(k, p.clone());
    p
}

/// Interpolates `value(n)` on `n = 0..=2k` and checks the result on the next
/// `2k` integers.
fn interpolate_degree_2k(k: usize, value: impl Fn(i64) -> BigInt) -> UniPoly {
    let top = 2 * k as i64;
    let nodes: Vec<_> = (0..=top).map(|n| (rat_int(n), BigRational::from_integer(value(n)))).collect();
    let p = UniPoly::interpolate(&nodes).expect("integer nodes are distinct");
    for n in top + 1..=2 * top {
        assert_eq!(
            p.eval_int(n),
            BigRational::from_integer(value(n)),
            "degree-{top} interpolant failed validation at n = {n}"
        );
    }
    p
}

/// `g_k(n) = [n brack n-k]` as a polynomial of degree `2k` in `n`.
pub fn cycle_poly(k: usize) -> UniPoly {
    static CACHE: OnceLock<PolyCache> = OnceLock::new();
    cached(&CACHE, k, || interpolate_degree_2k(k, |n| stirling_cycle(n, n - k as i64)))
}

/// `f_k(n) = {n+k brace n}` as a polynomial of degree `2k` in `n`.
pub fn subset_poly(k: usize) -> UniPoly {
    static CACHE: OnceLock<PolyCache> = OnceLock::new();
    cached(&CACHE, k, || interpolate_degree_2k(k, |n| stirling_subset(n + k as i64, n)))
}

/// `{a brace a-k}` as a polynomial in `a`, i.e. `f_k(a - k)`.
///
/// This is the coefficient family of the generalized power identity and of
/// the logarithmic generating series.
pub fn subset_lower_poly(k: usize) -> UniPoly {
    subset_poly(k).compose(&UniPoly::shifted_x(rat_int(-(k as i64))))
}

/// A partition of `k` in multiplicity form: `mult[i]` is the number of parts
/// equal to `i + 1`, so `sum (i+1) mult[i] = k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionVector {
    mult: Vec<u32>,
}

impl PartitionVector {
    pub fn from_multiplicities(mut mult: Vec<u32>) -> Self {
        while mult.last() == Some(&0) {
            mult.pop();
        }
        PartitionVector { mult }
    }

    /// `(j_1, j_2, ...)` with trailing zeros removed.
    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    /// `j_1 + 2 j_2 + 3 j_3 + ...`
    pub fn weight(&self) -> usize {
        self.mult.iter().enumerate().map(|(i, &j)| (i + 1) * j as usize).sum()
    }

    /// Number of parts, `j_1 + j_2 + ...`.
    pub fn length(&self) -> usize {
        self.mult.iter().map(|&j| j as usize).sum()
    }

    /// Parts in descending order.
    pub fn parts(&self) -> Vec<usize> {
        let mut parts = Vec::with_capacity(self.length());
        for (i, &j) in self.mult.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(i + 1, j as usize));
        }
        parts
    }
}

/// All partitions of `k`, largest first part first (`[k]`, then `[k-1, 1]`,
/// ... down to `[1, ..., 1]`).
pub fn enumerate_partitions(k: usize, cap: usize) -> Result<Vec<PartitionVector>> {
    if k > cap {
        return Err(Error::CapExceeded { what: "partition enumeration k", requested: k as u128, cap: cap as u128 });
    }
    let mut out = Vec::new();
    let mut parts = Vec::new();
    descend(k, k, &mut parts, &mut out);
    Ok(out)
}

fn descend(rest: usize, max_part: usize, parts: &mut Vec<usize>, out: &mut Vec<PartitionVector>) {
    if rest == 0 {
        let mut mult = vec![0u32; parts.first().copied().unwrap_or(0)];
        for &p in parts.iter() {
            mult[p - 1] += 1;
        }
        out.push(PartitionVector::from_multiplicities(mult));
        return;
    }
    for p in (1..=max_part.min(rest)).rev() {
        parts.push(p);
        descend(rest - p, p, parts, out);
        parts.pop();
    }
}

const KRAMP_PARTITION_CAP: usize = 60;

/// Kramp's partition sum for `C_k(n)`, the sum of all products of
/// `k`-combinations of `{1..n}`:
/// `sum binomial(n+1, k+l) (k+l)! / prod_i (j_i! (i+1)^j_i)`.
pub fn kramp_c(k: usize) -> Result<UniPoly> {
    kramp_sum(k, 1, |part_size| BigInt::from(part_size + 1))
}

/// Kramp's partition sum for `Gamma_k(n)`, the same sum over combinations
/// with repetition:
/// `sum binomial(n+k, k+l) (k+l)! / prod_i (j_i! ((i+1)!)^j_i)`.
pub fn kramp_gamma(k: usize) -> Result<UniPoly> {
    kramp_sum(k, k as i64, |part_size| factorial(part_size as i64 + 1).expect("nonnegative"))
}

fn kramp_sum(k: usize, upper_shift: i64, weight: impl Fn(usize) -> BigInt) -> Result<UniPoly> {
    let mut total = UniPoly::zero();
    for p in enumerate_partitions(k, KRAMP_PARTITION_CAP)? {
        let l = p.length();
        let mut denom = BigInt::one();
        for (i, &j) in p.multiplicities().iter().enumerate() {
            denom *= factorial(j as i64)?;
            denom *= num_traits::pow(weight(i + 1), j as usize);
        }
        let coeff = BigRational::new(factorial((k + l) as i64)?, denom);
        // binomial(n + shift, k + l) as a polynomial in n
        let b = UniPoly::binomial(&rat_int(-upper_shift), k + l);
        total = &total + &b.scale(&coeff);
    }
    Ok(total)
}

/// Checks `m g_m(n) = sum_{k<m} binomial(n-k, m+1-k) g_k(n)` as an exact
/// polynomial identity.
pub fn kramp_recurrence_check(m: usize) -> Result<bool> {
    if m == 0 {
        return Err(Error::domain("kramp recurrence needs m >= 1"));
    }
    let lhs = cycle_poly(m).scale(&rat_int(m as i64));
    let rhs = (0..m).fold(UniPoly::zero(), |acc, k| {
        let b = UniPoly::binomial(&rat_int(k as i64), m + 1 - k);
        &acc + &(&b * &cycle_poly(k))
    });
    Ok(lhs == rhs)
}

/// Checks `C_k(n-1) = Gamma_k(-n)` with both sides built from Kramp's sums.
pub fn duality_poly_check(k: usize) -> Result<bool> {
    let c = kramp_c(k)?.compose_affine(&rat_int(1), &rat_int(-1));
    let g = kramp_gamma(k)?.compose_affine(&rat_int(-1), &rat_int(0));
    Ok(c == g)
}

/// `g_0(x), ..., g_kmax(x)` at one rational point, via Kramp's recurrence
/// run with `x` fixed. Needs no interpolation, so it reaches large `k`.
pub fn cycle_poly_values_at(x: &ExactRational, k_max: usize) -> Vec<ExactRational> {
    let mut g = vec![BigRational::one()];
    for m in 1..=k_max {
        let mut acc = BigRational::zero();
        for (k, gk) in g.iter().enumerate() {
            if gk.is_zero() {
                continue;
            }
            acc += binomial_at(&(x - rat_int(k as i64)), m + 1 - k) * gk;
        }
        g.push(acc / rat_int(m as i64));
    }
    g
}

/// `binomial(y, j)` for rational `y`.
fn binomial_at(y: &ExactRational, j: usize) -> ExactRational {
    let mut acc = BigRational::one();
    for i in 0..j {
        acc *= y - rat_int(i as i64);
        acc /= rat_int(i as i64 + 1);
    }
    acc
}

/// `k` in `0..=k_max` with `|g_k(1/2)| > k!/7^k`, compared exactly.
pub fn half_integer_growth(k_max: usize, cap: usize) -> Result<Vec<usize>> {
    if k_max > cap {
        return Err(Error::CapExceeded {
            what: "half-integer growth k_max",
            requested: k_max as u128,
            cap: cap as u128,
        });
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let values = cycle_poly_values_at(&half, k_max);
    let mut witnesses = Vec::new();
    let mut bound = BigRational::one(); // k!/7^k
    for (k, v) in values.iter().enumerate() {
        if k > 0 {
            bound = bound * rat_int(k as i64) / rat_int(7);
        }
        if v.abs() > bound {
            witnesses.push(k);
        }
    }
    Ok(witnesses)
}
