use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{rat_int, ExactInt};
use crate::poly::UniPoly;

pub const POSET_MAX_ELEMENTS: usize = 8;
/// `n^p` may not exceed `8^8`.
pub const OMEGA_BUDGET: u128 = 16_777_216;
pub const ORDER_POLY_MAX_ELEMENTS: usize = 7;

/// A finite poset on `0..p`, stored as its cover relations plus the strict
/// order they generate.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    p: usize,
    covers: Vec<(usize, usize)>,
    less: Vec<Vec<bool>>,
}

impl Poset {
    /// The order generated by `relations` (each `(a, b)` meaning `a < b`).
    /// Fails on out-of-range elements or a cycle. The stored covers are the
    /// transitive reduction.
    pub fn new(p: usize, relations: &[(usize, usize)]) -> Result<Self> {
        let mut less = vec![vec![false; p]; p];
        for &(a, b) in relations {
            if a >= p || b >= p {
                return Err(Error::InvalidInput(format!("relation {a} < {b} names an element outside 0..{p}")));
            }
            less[a][b] = true;
        }
        for m in 0..p {
            for a in 0..p {
                if less[a][m] {
                    for b in 0..p {
                        if less[m][b] {
                            less[a][b] = true;
                        }
                    }
                }
            }
        }
        if (0..p).any(|a| less[a][a]) {
            return Err(Error::InvalidInput("relations contain a cycle".into()));
        }
        let mut covers = Vec::new();
        for a in 0..p {
            for b in 0..p {
                if less[a][b] && !(0..p).any(|c| less[a][c] && less[c][b]) {
                    covers.push((a, b));
                }
            }
        }
        Ok(Poset { p, covers, less })
    }

    /// Reads an element count followed by lines `a < b` (0-based). Blank
    /// lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let head = lines.next().ok_or_else(|| Error::InvalidInput("empty poset description".into()))?;
        let p: usize =
            head.parse().map_err(|_| Error::InvalidInput(format!("expected an element count, got `{head}`")))?;
        let mut relations = Vec::new();
        for line in lines {
            let (a, b) =
                line.split_once('<').ok_or_else(|| Error::InvalidInput(format!("expected `a < b`, got `{line}`")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad element `{}` in `{line}`", s.trim())))
            };
            relations.push((parse(a)?, parse(b)?));
        }
        Self::new(p, &relations)
    }

    pub fn antichain(p: usize) -> Self {
        Self::new(p, &[]).expect("no relations")
    }

    pub fn chain(p: usize) -> Self {
        let rel: Vec<_> = (1..p).map(|i| (i - 1, i)).collect();
        Self::new(p, &rel).expect("a chain is acyclic")
    }

    pub fn len(&self) -> usize {
        self.p
    }

    pub fn is_empty(&self) -> bool {
        self.p == 0
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// `a < b` in the generated order.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.less[a][b]
    }

    fn topological_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.p).collect();
        // the number of predecessors strictly increases along any relation
        order.sort_by_key(|&b| (0..self.p).filter(|&a| self.less[a][b]).count());
        order
    }

    fn count_maps(&self, n: i64, strict: bool) -> Result<ExactInt> {
        if n < 0 {
            return Err(Error::NegativeArgument(n));
        }
        if self.p > POSET_MAX_ELEMENTS {
            return Err(Error::CapExceeded {
                what: "poset elements",
                requested: self.p as u128,
                cap: POSET_MAX_ELEMENTS as u128,
            });
        }
        let work = (n as u128).checked_pow(self.p as u32).unwrap_or(u128::MAX);
        if work > OMEGA_BUDGET {
            return Err(Error::CapExceeded {
                what: "order-preserving map enumeration n^p",
                requested: work,
                cap: OMEGA_BUDGET,
            });
        }
        let order = self.topological_order();
        // checks[i]: covers whose later endpoint (in `order`) is order[i]
        let position: Vec<usize> = {
            let mut pos = vec![0; self.p];
            for (i, &e) in order.iter().enumerate() {
                pos[e] = i;
            }
            pos
        };
        let mut checks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.p];
        for &(a, b) in &self.covers {
            checks[position[a].max(position[b])].push((a, b));
        }
        let mut value = vec![0i64; self.p];
        let mut count = 0u64;
        fn go(
            i: usize,
            order: &[usize],
            checks: &[Vec<(usize, usize)>],
            value: &mut [i64],
            n: i64,
            strict: bool,
            count: &mut u64,
        ) {
            if i == order.len() {
                *count += 1;
                return;
            }
            for v in 1..=n {
                value[order[i]] = v;
                let ok =
                    checks[i].iter().all(|&(a, b)| if strict { value[a] < value[b] } else { value[a] <= value[b] });
                if ok {
                    go(i + 1, order, checks, value, n, strict, count);
                }
            }
        }
        go(0, &order, &checks, &mut value, n, strict, &mut count);
        Ok(BigInt::from(count))
    }

    /// Number of maps `f: P -> {1..n}` with `f(a) <= f(b)` whenever `a < b`.
    pub fn omega(&self, n: i64) -> Result<ExactInt> {
        self.count_maps(n, false)
    }

    /// As [`Poset::omega`] with `f(a) < f(b)`.
    pub fn omega_bar(&self, n: i64) -> Result<ExactInt> {
        self.count_maps(n, true)
    }

    /// The degree `<= p` polynomial through `(n, omega(n))` for `n = 0..p`,
    /// confirmed at `n = p+1..p+3`. `p <= 7`.
    pub fn order_poly(&self, strict: bool) -> Result<UniPoly> {
        if self.p > ORDER_POLY_MAX_ELEMENTS {
            return Err(Error::CapExceeded {
                what: "order polynomial elements",
                requested: self.p as u128,
                cap: ORDER_POLY_MAX_ELEMENTS as u128,
            });
        }
        let count = |n: i64| self.count_maps(n, strict).map(num_rational::BigRational::from_integer);
        let mut points = Vec::with_capacity(self.p + 1);
        for n in 0..=self.p as i64 {
            points.push((rat_int(n), count(n)?));
        }
        let poly = UniPoly::interpolate(&points)?;
        for n in self.p as i64 + 1..=self.p as i64 + 3 {
            if poly.eval_int(n) != count(n)? {
                return Err(Error::domain(format!("order polynomial fails validation at n = {n}")));
            }
        }
        Ok(poly)
    }

    /// `Omega(P, -n) = (-1)^p Omega_bar(P, n)` as polynomials.
    pub fn reciprocity_holds(&self) -> Result<bool> {
        let weak = self.order_poly(false)?.compose(&-UniPoly::x());
        let strict = self.order_poly(true)?;
        let signed = if self.p.is_multiple_of(2) { strict } else { -strict };
        Ok(weak == signed)
    }
}

impl fmt::Display for Poset {
    /// The text form accepted by [`Poset::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.p)?;
        for (a, b) in &self.covers {
            writeln!(f, "{a} < {b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset({}, {:?})", self.p, self.covers)
    }
}

/// The fence on `2k` points: `x_i` is element `i`, `y_i` is element `k+i`
/// (0-based), with `x_0 < x_1 < ... < x_{k-1}` and `y_i < x_i`.
pub fn fence_poset(k: usize) -> Result<Poset> {
    if k == 0 {
        return Err(Error::domain("fence_poset needs k >= 1"));
    }
    let mut rel: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    rel.extend((0..k).map(|i| (k + i, i)));
    Poset::new(2 * k, &rel)
}

/// The sums characterizing the fence counts, enumerated over the chain
/// alone: `sum_{1<=x_1<=...<=x_k<=n} x_1...x_k` and, when `strict`,
/// `sum_{1<=x_1<...<x_k<=n} (x_1-1)...(x_k-1)`.
pub fn fence_chain_sum(k: usize, n: i64, strict: bool) -> ExactInt {
    fn go(left: usize, start: i64, n: i64, strict: bool, acc: &BigInt, total: &mut BigInt) {
        if left == 0 {
            *total += acc;
            return;
        }
        for x in start..=n {
            let weight = if strict { x - 1 } else { x };
            go(left - 1, if strict { x + 1 } else { x }, n, strict, &(acc * weight), total);
        }
    }
    let mut total = BigInt::zero();
    go(k, 1, n, strict, &BigInt::from(1), &mut total);
    total
}

/// A poset on `p` elements from seed `seed`: each pair is related with
/// probability `density` along a random linear order, then reduced to covers.
pub fn random_poset(p: usize, density: f64, seed: u64) -> Result<Poset> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::domain("density must lie in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels: Vec<usize> = (0..p).collect();
    labels.shuffle(&mut rng);
    let mut rel = Vec::new();
    for i in 0..p {
        for j in i + 1..p {
            if rng.random_bool(density) {
                rel.push((labels[i], labels[j]));
            }
        }
    }
    Poset::new(p, &rel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{binomial, stirling_cycle, stirling_subset};

    #[test]
    fn closure_and_reduction() {
        let p = Poset::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert!(p.less(0, 2));
        assert!(Poset::new(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Poset::new(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let p = Poset::parse("# fence\n4\n0 < 1\n2 < 0\n3 < 1\n").unwrap();
        assert_eq!(p, fence_poset(2).unwrap());
        assert_eq!(Poset::parse(&p.to_string()).unwrap(), p);
        assert!(Poset::parse("3\n0 - 1").is_err());
        assert!(Poset::parse("").is_err());
    }

    #[test]
    fn antichain_and_chain() {
        for p in 0..4 {
            for n in 0..5 {
                assert_eq!(Poset::antichain(p).omega(n).unwrap(), BigInt::from(n.pow(p as u32)));
                assert_eq!(Poset::antichain(p).omega_bar(n).unwrap(), BigInt::from(n.pow(p as u32)));
                assert_eq!(Poset::chain(p).omega(n).unwrap(), binomial(n + p as i64 - 1, p as i64));
                assert_eq!(Poset::chain(p).omega_bar(n).unwrap(), binomial(n, p as i64));
            }
        }
        assert_eq!(fence_poset(3).unwrap().omega(0).unwrap(), BigInt::zero());
        assert!(Poset::antichain(8).omega(9).is_err());
    }

    #[test]
    fn fence_counts() {
        let f1 = fence_poset(1).unwrap();
        assert_eq!((f1.len(), f1.covers().len()), (2, 1));
        let f2 = fence_poset(2).unwrap();
        assert_eq!(f2.omega(3).unwrap(), BigInt::from(25));
        assert_eq!(f2.omega_bar(4).unwrap(), BigInt::from(11));
        for k in 1..=3usize {
            let f = fence_poset(k).unwrap();
            for n in 0..=6i64 {
                assert_eq!(f.omega(n).unwrap(), stirling_subset(n + k as i64, n));
                assert_eq!(f.omega(n).unwrap(), fence_chain_sum(k, n, false));
                assert_eq!(f.omega_bar(n).unwrap(), stirling_cycle(n, n - k as i64));
                assert_eq!(f.omega_bar(n).unwrap(), fence_chain_sum(k, n, true));
            }
        }
    }

    #[test]
    fn order_polynomials() {
        assert_eq!(Poset::antichain(3).order_poly(false).unwrap(), UniPoly::from_ints(&[0, 0, 0, 1]));
        let half = num_rational::BigRational::new(1.into(), 2.into());
        let want = UniPoly::from_coeffs(vec![rat_int(0), -half.clone(), half]);
        assert_eq!(Poset::chain(2).order_poly(true).unwrap(), want);
        for k in 1..=3 {
            assert!(fence_poset(k).unwrap().reciprocity_holds().unwrap());
        }
        for seed in 0..5 {
            let p = random_poset(5, 0.4, seed).unwrap();
            assert!(p.reciprocity_holds().unwrap(), "{p:?}");
        }
        assert!(Poset::antichain(8).order_poly(false).is_err());
    }

    #[test]
    fn random_posets_are_seeded() {
        assert_eq!(random_poset(6, 0.5, 42).unwrap(), random_poset(6, 0.5, 42).unwrap());
        assert_eq!(random_poset(4, 0.0, 1).unwrap(), Poset::antichain(4));
        assert_eq!(random_poset(4, 1.0, 1).unwrap().covers().len(), 3);
    }
}
