//! Binomial coefficients and Stirling numbers for all integer arguments.
//!
//! The nonnegative quadrant of each Stirling kind is filled by forward
//! dynamic programming on its recurrence; the negative quadrant is reached
//! through the duality `{n brace k} = [-k brack -n]`, so no recurrence is ever
//! run backwards. Mixed-sign arguments are zero except at `(0, 0)`.

use std::fmt;
use std::ops::RangeInclusive;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::ExactInt;

pub fn factorial(n: i64) -> Result<ExactInt> {
    if n < 0 {
        return Err(Error::NegativeArgument(n));
    }
    Ok((2..=n).map(BigInt::from).product())
}

/// `binomial(n, k)` for all integers.
///
/// Zero for `k < 0`; for negative `n` the upper index is negated via
/// `binomial(n, k) = (-1)^k binomial(k - n - 1, k)`.
pub fn binomial(n: i64, k: i64) -> ExactInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let b = binomial_nonneg(k - n - 1, k);
        return if k % 2 == 0 { b } else { -b };
    }
    if k > n {
        return BigInt::zero();
    }
    binomial_nonneg(n, k.min(n - k))
}

fn binomial_nonneg(n: i64, k: i64) -> ExactInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    Cycle,
    Subset,
    Binomial,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::Cycle => "cycle",
            TableKind::Subset => "subset",
            TableKind::Binomial => "binomial",
        }
    }

    pub fn value(self, n: i64, k: i64) -> ExactInt {
        match self {
            TableKind::Cycle => stirling_cycle(n, k),
            TableKind::Subset => stirling_subset(n, k),
            TableKind::Binomial => binomial(n, k),
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cycle" => Ok(TableKind::Cycle),
            "subset" => Ok(TableKind::Subset),
            "binomial" => Ok(TableKind::Binomial),
            other => Err(Error::InvalidInput(format!("unknown table kind `{other}`"))),
        }
    }
}

/// Rows `0..=max_n` of a nonnegative-quadrant triangle, row `n` holding
/// `k = 0..=n`. Grown on demand and shared between threads; growth only
/// appends rows so readers never observe a changed value.
struct Triangle {
    rows: RwLock<Vec<Vec<BigInt>>>,
    multiplier: fn(usize, usize) -> usize,
}

impl Triangle {
    fn new(multiplier: fn(usize, usize) -> usize) -> Self {
        Triangle { rows: RwLock::new(vec![vec![BigInt::one()]]), multiplier }
    }

    fn get(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        {
            let rows = self.rows.read().expect("stirling cache poisoned");
            if let Some(row) = rows.get(n) {
                return row[k].clone();
            }
        }
        let mut rows = self.rows.write().expect("stirling cache poisoned");
        while rows.len() <= n {
            // row m+1 from row m: T(m+1, k) = mult(m, k) T(m, k) + T(m, k-1)
            let m = rows.len() - 1;
            let prev = &rows[m];
            let mut next = Vec::with_capacity(m + 2);
            for k in 0..=m + 1 {
                let mut v = BigInt::zero();
                if k <= m {
                    let c = (self.multiplier)(m, k);
                    if c != 0 {
                        v += &prev[k] * c;
                    }
                }
                if k >= 1 {
                    v += &prev[k - 1];
                }
                next.push(v);
            }
            rows.push(next);
        }
        rows[n][k].clone()
    }
}

fn cycle_triangle() -> &'static Triangle {
    static T: OnceLock<Triangle> = OnceLock::new();
    T.get_or_init(|| Triangle::new(|n, _k| n))
}

fn subset_triangle() -> &'static Triangle {
    static T: OnceLock<Triangle> = OnceLock::new();
    T.get_or_init(|| Triangle::new(|_n, k| k))
}

/// Stirling cycle number `[n brack k]` for all integers.
///
/// For `n, k >= 0` this counts permutations of `n` objects with `k` cycles.
pub fn stirling_cycle(n: i64, k: i64) -> ExactInt {
    if n >= 0 && k >= 0 {
        cycle_triangle().get(n as usize, k as usize)
    } else if n < 0 && k < 0 {
        subset_triangle().get((-k) as usize, (-n) as usize)
    } else {
        BigInt::zero()
    }
}

/// Stirling subset number `{n brace k}`, defined as `[-k brack -n]`.
///
/// For `n, k >= 0` this counts partitions of `n` objects into `k` blocks.
pub fn stirling_subset(n: i64, k: i64) -> ExactInt {
    stirling_cycle(-k, -n)
}

/// A rectangular window of one of the doubly infinite tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableWindow {
    pub kind: TableKind,
    pub n_range: RangeInclusive<i64>,
    pub k_range: RangeInclusive<i64>,
    /// `entries[i][j]` is the value at `n = n_min + i`, `k = k_min + j`.
    pub entries: Vec<Vec<ExactInt>>,
}

impl TableWindow {
    pub fn entry(&self, n: i64, k: i64) -> Option<&ExactInt> {
        if !self.n_range.contains(&n) || !self.k_range.contains(&k) {
            return None;
        }
        let i = (n - self.n_range.start()) as usize;
        let j = (k - self.k_range.start()) as usize;
        Some(&self.entries[i][j])
    }

    /// Tab-separated rendering: a header row `n\k` followed by the k values,
    /// then one row per n, both ascending.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("n\\k");
        for k in self.k_range.clone() {
            out.push('\t');
            out.push_str(&k.to_string());
        }
        out.push('\n');
        for (i, n) in self.n_range.clone().enumerate() {
            out.push_str(&n.to_string());
            for v in &self.entries[i] {
                out.push('\t');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }

    /// JSON object with every entry as an exact decimal string.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> =
            self.entries.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect();
        serde_json::json!({
            "kind": self.kind.name(),
            "n_range": [self.n_range.start(), self.n_range.end()],
            "k_range": [self.k_range.start(), self.k_range.end()],
            "entries": rows,
        })
    }
}

pub fn table_window(
    kind: TableKind,
    n_range: RangeInclusive<i64>,
    k_range: RangeInclusive<i64>,
    cap: usize,
) -> Result<TableWindow> {
    if n_range.is_empty() || k_range.is_empty() {
        return Err(Error::InvalidInput("table ranges must be nonempty".into()));
    }
    let rows = (*n_range.end() as i128 - *n_range.start() as i128 + 1) as u128;
    let cols = (*k_range.end() as i128 - *k_range.start() as i128 + 1) as u128;
    let total = rows.saturating_mul(cols);
    if total > cap as u128 {
        return Err(Error::CapExceeded { what: "table window entries", requested: total, cap: cap as u128 });
    }
    let entries = n_range.clone().map(|n| k_range.clone().map(|k| kind.value(n, k)).collect()).collect();
    Ok(TableWindow { kind, n_range, k_range, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0).unwrap(), b(1));
        assert_eq!(factorial(1).unwrap(), b(1));
        let oracle: i64 = (1..=5).product();
        assert_eq!(factorial(5).unwrap(), b(oracle));
        assert_eq!(factorial(-1), Err(Error::NegativeArgument(-1)));
    }

    #[test]
    fn binomial_values() {
        for n in -5..6 {
            assert_eq!(binomial(n, 0), b(1));
        }
        // 2-subsets of {0,1,2,3}
        let count = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).count() as i64;
        assert_eq!(binomial(4, 2), b(count));
        assert_eq!(binomial(-2, 3), b(-4));
        assert_eq!(binomial(3, 5), b(0));
        assert_eq!(binomial(3, -1), b(0));
    }

    #[test]
    fn binomial_negative_upper_matches_pascal_run_on_full_plane() {
        // C(n, k) = C(n+1, k) - C(n, k-1), running n downward from n = 0.
        let ks = 0..8i64;
        let mut row: Vec<BigInt> = ks.clone().map(|k| binomial(0, k)).collect();
        for n in (-6..0).rev() {
            let mut next: Vec<BigInt> = Vec::new();
            for k in ks.clone() {
                let left = if k == 0 { b(0) } else { next[(k - 1) as usize].clone() };
                next.push(&row[k as usize] - left);
            }
            for k in ks.clone() {
                assert_eq!(next[k as usize], binomial(n, k), "n={n} k={k}");
            }
            row = next;
        }
    }

    #[test]
    fn stirling_spot_values() {
        assert_eq!(stirling_cycle(4, 2), b(11));
        assert_eq!(stirling_cycle(0, 0), b(1));
        assert_eq!(stirling_cycle(-2, -4), b(7));
        assert_eq!(stirling_cycle(6, 1), b(120));
        assert_eq!(stirling_subset(4, 2), b(7));
        assert_eq!(stirling_subset(0, 0), b(1));
        assert_eq!(stirling_subset(6, 3), b(90));
    }

    #[test]
    fn boundary_conditions() {
        for k in -6..7 {
            let expect = b(i64::from(k == 0));
            assert_eq!(stirling_cycle(0, k), expect);
            assert_eq!(stirling_subset(0, k), expect);
            assert_eq!(stirling_cycle(k, 0), expect);
            assert_eq!(stirling_subset(k, 0), expect);
        }
    }

    #[test]
    fn mixed_signs_vanish() {
        for n in 1..6 {
            for k in -5..0 {
                assert!(stirling_cycle(n, k).is_zero());
                assert!(stirling_cycle(k, n).is_zero());
                assert!(stirling_subset(n, k).is_zero());
            }
        }
    }

    #[test]
    fn window_and_cap() {
        let w = table_window(TableKind::Cycle, 0..=0, 0..=0, 10).unwrap();
        assert_eq!(w.entries, vec![vec![b(1)]]);
        let err = table_window(TableKind::Cycle, 0..=999, 0..=999, 1000).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { requested: 1_000_000, .. }));
        #[allow(clippy::reversed_empty_ranges)]
        let empty = table_window(TableKind::Cycle, 1..=0, 0..=0, 10);
        assert!(empty.is_err());
    }

    #[test]
    fn subset_window_is_reflection_of_cycle_window() {
        let c = table_window(TableKind::Cycle, -4..=4, -4..=4, 100).unwrap();
        let s = table_window(TableKind::Subset, -4..=4, -4..=4, 100).unwrap();
        for n in -4..=4 {
            for k in -4..=4 {
                assert_eq!(s.entry(n, k), c.entry(-k, -n));
            }
        }
    }

    #[test]
    fn tsv_layout() {
        let w = table_window(TableKind::Binomial, 0..=1, -1..=1, 10).unwrap();
        assert_eq!(w.to_tsv(), "n\\k\t-1\t0\t1\n0\t0\t1\t0\n1\t0\t1\t1\n");
        let j = w.to_json();
        assert_eq!(j["entries"][1][2], "1");
        assert_eq!(j["kind"], "binomial");
    }
}
