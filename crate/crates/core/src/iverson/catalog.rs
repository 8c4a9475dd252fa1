//! Checkable bracket identities. Each entry evaluates every side exactly,
//! with at least one side going through the bracket summation engine.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::predicate::{is_prime, CmpOp, Predicate, Term};
use super::sum::{prod_brackets, sum_brackets, SumSpec};
use crate::error::{Error, Result};
use crate::exact::{parse_rational, pow_i64, rat_int, ExactRational};
use crate::numbers::binomial;

/// `(id, statement)` for every identity [`verify_identity`] knows.
pub const IDENTITIES: &[(&str, &str)] = &[
    ("1.2", "(1+z)^n = sum_k binomial(n,k) z^k"),
    (
        "1.3",
        "sum_k binomial(n,k) z^k = sum_k binomial(n,k+1) z^(k+1) = sum_k binomial(n,floor(n/2)-k) z^(floor(n/2)-k)",
    ),
    ("1.5", "sum_{k=2}^{n-1} k(k-1)(n-k) = sum_k k(k-1)(n-k) [0<=k<=n]"),
    ("1.7", "sum_k k(k-1)(n-k) [0<=k<=n] = sum_k k(k-1)(n-k) [k>=0][k<=n]"),
    ("1.8", "k [k>=0] = k [k>=1]"),
    ("1.9", "sum_{A} f + sum_{B} f = sum_{A union B} f + sum_{A intersect B} f"),
    ("1.10", "[k in A] + [k in B] = [k in A union B] + [k in A intersect B]"),
    ("1.11", "sum_{j=1}^n sum_{k=1}^j f(j,k) = sum_{k=1}^n sum_{j=k}^n f(j,k)"),
    ("1.12", "[k even] = sum_m [k=2m] and [k odd] = sum_m [k=2m+1]"),
    ("1.13", "sum_k f(k) = sum_m f(2m) + sum_m f(2m+1)"),
    ("1.14", "sum_{k>=1} binomial(n, floor(lg k)) = 3^n"),
    ("1.15", "prod_p p^([p prime][p divides n]) = largest squarefree divisor of n"),
    ("1.18", "(x+y)^n = sum_{k=0}^n binomial(n,k) x^k y^(n-k), with 0^0 = 1"),
    ("1.19", "sum_p [p prime][p<=x]/p = sum of reciprocals of primes <= x"),
];

/// Named inputs: integers `n`, `k`, `lo`, `hi`, `x`; rationals `z`, `x`, `y`;
/// integer lists `A`, `B` and coefficient lists `f` (`f(k) = sum f_i k^i`)
/// and `g` (`g(j,k) = sum g_{3a+b} j^a k^b`, `a, b < 3`).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct IdentityParams {
    values: BTreeMap<String, String>,
}

impl IdentityParams {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parses `key=value` items; lists are comma-separated.
    pub fn parse<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let mut p = Self::new();
        for item in items {
            let item = item.as_ref();
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidInput(format!("parameter `{item}` is not key=value")))?;
            p.values.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(p)
    }

    pub fn set(mut self, key: &str, value: impl ToString) -> Self {
        self.values.insert(key.to_string(), value.to_string());
        self
    }

    pub fn set_list(self, key: &str, values: &[i64]) -> Self {
        let text = values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        self.set(key, text)
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    fn int(&self, key: &str, default: i64) -> Result<i64> {
        match self.raw(key) {
            None => Ok(default),
            Some(v) => {
                v.parse().map_err(|_| Error::InvalidInput(format!("parameter {key} must be an integer, got `{v}`")))
            }
        }
    }

    fn rational(&self, key: &str, default: ExactRational) -> Result<ExactRational> {
        self.raw(key).map_or(Ok(default), parse_rational)
    }

    fn list(&self, key: &str, default: &[i64]) -> Result<Vec<i64>> {
        match self.raw(key) {
            None => Ok(default.to_vec()),
            Some("") => Ok(Vec::new()),
            Some(v) => v
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| Error::InvalidInput(format!("parameter {key} has a non-integer item `{s}`")))
                })
                .collect(),
        }
    }
}

/// Outcome of one identity check. `lhs` is the first side, `rhs` the last;
/// `holds` requires every side to agree.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub id: String,
    pub holds: bool,
    pub lhs: ExactRational,
    pub rhs: ExactRational,
}

fn report(id: &str, sides: Vec<ExactRational>) -> IdentityReport {
    let holds = sides.windows(2).all(|w| w[0] == w[1]);
    IdentityReport { id: id.to_string(), holds, lhs: sides[0].clone(), rhs: sides[sides.len() - 1].clone() }
}

fn k_var() -> Term {
    Term::var("k")
}

fn int_of(env: &BTreeMap<String, ExactRational>, v: &str) -> i64 {
    crate::exact::to_i64(&env[v]).expect("bound variables are small integers")
}

fn poly_at(coeffs: &[i64], k: &ExactRational) -> ExactRational {
    coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * k + rat_int(*c))
}

fn bivariate_at(coeffs: &[i64], j: i64, k: i64) -> ExactRational {
    let mut total = BigRational::zero();
    for (idx, c) in coeffs.iter().enumerate() {
        let (a, b) = (idx / 3, idx % 3);
        total += rat_int(*c) * rat_int(j).pow(a as i32) * rat_int(k).pow(b as i32);
    }
    total
}

fn bin(n: i64, k: i64) -> ExactRational {
    BigRational::from_integer(binomial(n, k))
}

/// `binomial(n, j) z^j` with the binomial as a strong zero: when it
/// vanishes the power is never formed (so `z = 0, j < 0` is fine).
fn strong_binomial_term(n: i64, j: i64, z: &ExactRational) -> Result<ExactRational> {
    let b = bin(n, j);
    if b.is_zero() {
        return Ok(b);
    }
    Ok(b * pow_i64(z, j)?)
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::domain(msg.to_string()))
    }
}

/// Evaluates every side of identity `id` at `params`.
pub fn verify_identity(id: &str, params: &IdentityParams) -> Result<IdentityReport> {
    match id {
        "1.2" => {
            let n = params.int("n", 4)?;
            require((0..=60).contains(&n), "1.2 needs 0 <= n <= 60")?;
            let z = params.rational("z", rat_int(2))?;
            let spec =
                SumSpec::new(Predicate::<Term>::True, |e| strong_binomial_term(n, int_of(e, "k"), &z)).over("k", 0, n);
            let lhs = pow_i64(&(rat_int(1) + &z), n)?;
            Ok(report(id, vec![lhs, sum_brackets(&spec)?]))
        }
        "1.3" => {
            let n = params.int("n", 4)?;
            require((0..=60).contains(&n), "1.3 needs 0 <= n <= 60")?;
            let z = params.rational("z", rat_int(2))?;
            let h = n.div_euclid(2);
            let s1 =
                SumSpec::new(Predicate::<Term>::True, |e| strong_binomial_term(n, int_of(e, "k"), &z)).over("k", 0, n);
            let s2 = SumSpec::new(Predicate::<Term>::True, |e| strong_binomial_term(n, int_of(e, "k") + 1, &z)).over(
                "k",
                -1,
                n - 1,
            );
            let s3 = SumSpec::new(Predicate::<Term>::True, |e| strong_binomial_term(n, h - int_of(e, "k"), &z)).over(
                "k",
                h - n,
                h,
            );
            Ok(report(id, vec![sum_brackets(&s1)?, sum_brackets(&s2)?, sum_brackets(&s3)?]))
        }
        "1.5" | "1.7" => {
            let n = params.int("n", 5)?;
            require((0..=500).contains(&n), "needs 0 <= n <= 500")?;
            let f = move |k: i64| rat_int(k * (k - 1) * (n - k));
            let chain: Predicate =
                Predicate::Cmp(vec![Term::int(0), k_var(), Term::int(n)], vec![CmpOp::Le, CmpOp::Le]);
            let engine_chain = sum_brackets(&SumSpec::new(chain, |e| Ok(f(int_of(e, "k")))).over_derived("k")?)?;
            if id == "1.5" {
                let limited: ExactRational = (2..n).map(f).sum();
                let closed = rat_int(2) * bin(n + 1, 4);
                Ok(report(id, vec![limited, engine_chain, closed]))
            } else {
                let split: Predicate = Predicate::And(vec![
                    Predicate::cmp(k_var(), CmpOp::Ge, Term::int(0)),
                    Predicate::cmp(k_var(), CmpOp::Le, Term::int(n)),
                ]);
                let engine_split = sum_brackets(&SumSpec::new(split, |e| Ok(f(int_of(e, "k")))).over_derived("k")?)?;
                Ok(report(id, vec![engine_chain, engine_split]))
            }
        }
        "1.8" => {
            let k = params.int("k", 0)?;
            let env = super::predicate::assign(&[("k", k)]);
            let ge0: Predicate = Predicate::cmp(k_var(), CmpOp::Ge, Term::int(0));
            let ge1: Predicate = Predicate::cmp(k_var(), CmpOp::Ge, Term::int(1));
            let lhs = super::guarded_term(&ge0, |_| Ok(rat_int(k)), &env)?;
            let rhs = super::guarded_term(&ge1, |_| Ok(rat_int(k)), &env)?;
            Ok(report(id, vec![lhs, rhs]))
        }
        "1.9" => {
            let a = set_of(&params.list("A", &[1, 2, 3])?);
            let b = set_of(&params.list("B", &[2, 3, 5])?);
            let f = params.list("f", &[0, 0, 1])?;
            let union: BTreeSet<BigInt> = a.union(&b).cloned().collect();
            let inter: BTreeSet<BigInt> = a.intersection(&b).cloned().collect();
            let over = |s: &BTreeSet<BigInt>| -> Result<ExactRational> {
                let guard: Predicate = Predicate::In(k_var(), s.clone());
                sum_brackets(&SumSpec::new(guard, |e| Ok(poly_at(&f, &e["k"]))).over_derived("k")?)
            };
            Ok(report(id, vec![over(&a)? + over(&b)?, over(&union)? + over(&inter)?]))
        }
        "1.10" => {
            let a = set_of(&params.list("A", &[1, 2, 3])?);
            let b = set_of(&params.list("B", &[2, 3, 5])?);
            let k = params.int("k", 2)?;
            let env = super::predicate::assign(&[("k", k)]);
            let br = |s: BTreeSet<BigInt>| super::bracket(&Predicate::<Term>::In(k_var(), s), &env);
            let union = a.union(&b).cloned().collect();
            let inter = a.intersection(&b).cloned().collect();
            Ok(report(id, vec![br(a.clone())? + br(b.clone())?, br(union)? + br(inter)?]))
        }
        "1.11" => {
            let n = params.int("n", 4)?;
            require((0..=200).contains(&n), "1.11 needs 0 <= n <= 200")?;
            let g = params.list("g", &[0, 0, 0, 0, 1, 0, 0, 0, 0])?;
            let mut rows = BigRational::zero();
            for j in 1..=n {
                for k in 1..=j {
                    rows += bivariate_at(&g, j, k);
                }
            }
            let mut cols = BigRational::zero();
            for k in 1..=n {
                for j in k..=n {
                    cols += bivariate_at(&g, j, k);
                }
            }
            let guard: Predicate = Predicate::Cmp(
                vec![Term::int(1), k_var(), Term::var("j"), Term::int(n)],
                vec![CmpOp::Le, CmpOp::Le, CmpOp::Le],
            );
            let spec = SumSpec::new(guard, |e| Ok(bivariate_at(&g, int_of(e, "j"), int_of(e, "k"))))
                .over_derived("j")?
                .over_derived("k")?;
            Ok(report(id, vec![rows, cols, sum_brackets(&spec)?]))
        }
        "1.12" => {
            let k = params.int("k", 6)?;
            let env = super::predicate::assign(&[("k", k)]);
            let reach = k.abs() + 1;
            let delta = |offset: i64| -> Result<ExactRational> {
                let guard: Predicate = Predicate::cmp(
                    k_var(),
                    CmpOp::Eq,
                    Term::add(Term::mul(Term::int(2), Term::var("m")), Term::int(offset)),
                );
                sum_brackets(&SumSpec::new(guard, |_| Ok(rat_int(1))).over("m", -reach, reach).with_env(env.clone()))
            };
            let even = super::bracket(&Predicate::<Term>::Even(k_var()), &env)?;
            let odd = super::bracket(&Predicate::<Term>::Odd(k_var()), &env)?;
            // both halves at once: [k even] + 2[k odd] against the delta sums
            let lhs = &even + rat_int(2) * &odd;
            let rhs = delta(0)? + rat_int(2) * delta(1)?;
            Ok(report(id, vec![lhs, rhs]))
        }
        "1.13" => {
            let lo = params.int("lo", -3)?;
            let hi = params.int("hi", 7)?;
            require(hi - lo <= 10_000, "1.13 needs hi - lo <= 10000")?;
            let f = params.list("f", &[1, -2, 0, 1])?;
            let window: Predicate =
                Predicate::Cmp(vec![Term::int(lo), k_var(), Term::int(hi)], vec![CmpOp::Le, CmpOp::Le]);
            let all = sum_brackets(&SumSpec::new(window.clone(), |e| Ok(poly_at(&f, &e["k"]))).over_derived("k")?)?;
            let half =
                |offset: i64| -> Result<ExactRational> {
                    let guard: Predicate = Predicate::Cmp(
                        vec![
                            Term::int(lo),
                            Term::add(Term::mul(Term::int(2), Term::var("m")), Term::int(offset)),
                            Term::int(hi),
                        ],
                        vec![CmpOp::Le, CmpOp::Le],
                    );
                    let spec = SumSpec::new(guard, |e| Ok(poly_at(&f, &(rat_int(2) * &e["m"] + rat_int(offset)))))
                        .over("m", lo.div_euclid(2) - 1, hi.div_euclid(2) + 1);
                    sum_brackets(&spec)
                };
            Ok(report(id, vec![all, half(0)? + half(1)?]))
        }
        "1.14" => {
            let n = params.int("n", 3)?;
            require((0..=16).contains(&n), "1.14 needs 0 <= n <= 16")?;
            let guard: Predicate = Predicate::cmp(k_var(), CmpOp::Ge, Term::int(1));
            let spec = SumSpec::new(guard, |e| {
                let k = int_of(e, "k");
                Ok(bin(n, 63 - i64::from(k.leading_zeros())))
            })
            .over("k", 1, (1i64 << (n + 1)) - 1);
            Ok(report(id, vec![sum_brackets(&spec)?, pow_i64(&rat_int(3), n)?]))
        }
        "1.15" => {
            let n = params.int("n", 12)?;
            require((1..=100_000).contains(&n), "1.15 needs 1 <= n <= 100000")?;
            let guard: Predicate = Predicate::And(vec![
                Predicate::Prime(Term::var("p")),
                Predicate::Divides(Term::var("p"), Term::int(n)),
            ]);
            let spec = SumSpec::new(guard, |e| Ok(e["p"].clone())).over("p", 1, n);
            Ok(report(id, vec![prod_brackets(&spec)?, rat_int(radical_by_factoring(n))]))
        }
        "1.18" => {
            let n = params.int("n", 5)?;
            require((0..=200).contains(&n), "1.18 needs 0 <= n <= 200")?;
            let x = params.rational("x", rat_int(0))?;
            let y = params.rational("y", rat_int(1))?;
            let lhs = pow_i64(&(&x + &y), n)?;
            let mut rhs = BigRational::zero();
            for k in 0..=n {
                rhs += bin(n, k) * pow_i64(&x, k)? * pow_i64(&y, n - k)?;
            }
            Ok(report(id, vec![lhs, rhs]))
        }
        "1.19" => {
            let x = params.int("x", 10)?;
            require((0..=100_000).contains(&x), "1.19 needs 0 <= x <= 100000")?;
            let p = Term::var("p");
            let guard: Predicate =
                Predicate::And(vec![Predicate::Prime(p.clone()), Predicate::cmp(p, CmpOp::Le, Term::int(x))]);
            // p = 0 is inside the support: the strong zero keeps 1/0 unevaluated
            let spec = SumSpec::new(guard, |e| {
                let p = &e["p"];
                if p.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(p.recip())
            })
            .over("p", 0, x);
            let direct: ExactRational = sieve(x).into_iter().map(|p| BigRational::new(BigInt::one(), p.into())).sum();
            Ok(report(id, vec![sum_brackets(&spec)?, direct]))
        }
        other => Err(Error::UnknownIdentity(other.to_string())),
    }
}

fn set_of(v: &[i64]) -> BTreeSet<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn radical_by_factoring(mut n: i64) -> i64 {
    let mut out = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out *= d;
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out *= n;
    }
    out
}

/// Primes `<= x` by the sieve of Eratosthenes.
fn sieve(x: i64) -> Vec<i64> {
    if x < 2 {
        return Vec::new();
    }
    let n = x as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as i64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    debug_assert!(out.iter().all(|&p| is_prime(&p.into())));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn check(id: &str, p: IdentityParams) -> IdentityReport {
        let r = verify_identity(id, &p).unwrap();
        assert!(r.holds, "{id} failed: {r:?}");
        r
    }

    #[test]
    fn catalog_defaults_hold() {
        for (id, _) in IDENTITIES {
            check(id, IdentityParams::new());
        }
    }

    #[test]
    fn spot_values() {
        let r = check("1.9", IdentityParams::new());
        assert_eq!(r.lhs, rat_int(52));
        let r = check("1.18", IdentityParams::new().set("x", 0).set("y", 1).set("n", 5));
        assert_eq!(r.lhs, rat_int(1));
        let r = check("1.14", IdentityParams::new().set("n", 3));
        assert_eq!(r.lhs, rat_int(27));
        let r = check("1.19", IdentityParams::new().set("x", 10));
        assert_eq!(r.lhs, rat(247, 210));
        let r = check("1.15", IdentityParams::new().set("n", 12));
        assert_eq!(r.lhs, rat_int(6));
        let r = check("1.11", IdentityParams::new().set("n", 4));
        // sum_{1<=k<=j<=4} jk = 65
        assert_eq!(r.lhs, rat_int(65));
    }

    #[test]
    fn small_n_edge_cases() {
        for n in 0..4 {
            check("1.5", IdentityParams::new().set("n", n));
            check("1.3", IdentityParams::new().set("n", n).set("z", 0));
        }
        check("1.2", IdentityParams::new().set("n", 0).set("z", "-1"));
        check("1.18", IdentityParams::new().set("n", 0).set("x", 0).set("y", 0));
    }

    #[test]
    fn parsing_and_errors() {
        let p = IdentityParams::parse(&["A=1,4", "B=", "f=0,1"]).unwrap();
        let r = check("1.9", p);
        assert_eq!(r.lhs, rat_int(5));
        assert!(matches!(verify_identity("9.9", &IdentityParams::new()), Err(Error::UnknownIdentity(_))));
        assert!(IdentityParams::parse(&["n"]).is_err());
        assert!(verify_identity("1.2", &IdentityParams::new().set("n", "x")).is_err());
    }
}
