//! Seeded verification suites behind `exactcomb verify`.
//!
//! Every check draws its random instances from its own ChaCha8 stream,
//! seeded from the suite seed and the check name, so a report depends only
//! on `(suite, seed, max_n)`. Checks run on scoped threads; results are
//! collected in declaration order.

use std::fmt;
use std::str::FromStr;
use std::thread;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{
    asym_error, convert, falling, generalized_power_series, generalized_terms_exact, kramp_expansion_check,
    log_power_identity_holds, nicole_check, reciprocal_series, Basis, FactorialKind,
};
use crate::error::{Error, Result};
use crate::exact::{rat, rat_int, ExactRational};
use crate::iverson::{
    divides_bracket, is_prime, libri_divisor, libri_p, power_sum_mod, verify_identity, IdentityParams, IDENTITIES,
};
use crate::numbers::{binomial, factorial, stirling_cycle, stirling_subset};
use crate::oracles::{
    bell, complete_hom, count_perms_by_cycles, count_set_partitions, elem_sym, fence_chain_sum, fence_poset,
    random_poset, RECIPROCITY_SEED,
};
use crate::poly::UniPoly;
use crate::stirling_poly::{
    cycle_poly, cycle_poly_values_at, duality_poly_check, kramp_c, kramp_gamma, kramp_recurrence_check, subset_poly,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Iverson,
    Stirling,
    Analysis,
    Oracles,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "iverson" => Suite::Iverson,
            "stirling" => Suite::Stirling,
            "analysis" => Suite::Analysis,
            "oracles" => Suite::Oracles,
            "all" => Suite::All,
            _ => return Err(Error::InvalidInput(format!("unknown suite `{s}`"))),
        })
    }
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Iverson => "iverson",
            Suite::Stirling => "stirling",
            Suite::Analysis => "analysis",
            Suite::Oracles => "oracles",
            Suite::All => "all",
        }
    }
}

/// Instances drawn per catalog identity.
pub const IVERSON_INSTANCES: usize = 200;

/// The `|n|, |k| <= 4` window of the cycle table, rows `n = -4..4`,
/// columns `k = -4..4`.
pub const LOGAN_WINDOW: [[i64; 9]; 9] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [6, 1, 0, 0, 0, 0, 0, 0, 0],
    [7, 3, 1, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 2, 3, 1, 0],
    [0, 0, 0, 0, 0, 6, 11, 6, 1],
];

const MAX_REPORTED_FAILURES: usize = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: String,
    pub instances: usize,
    pub failures: Vec<String>,
    pub failure_count: usize,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "ok  " } else { "FAIL" };
            writeln!(f, "{status} {}/{} ({} instances)", c.suite, c.name, c.instances)?;
            for msg in &c.failures {
                writeln!(f, "       {msg}")?;
            }
            if c.failure_count > c.failures.len() {
                writeln!(f, "       ... {} more", c.failure_count - c.failures.len())?;
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        writeln!(f, "seed {}: {} checks, {} failed", self.seed, self.checks.len(), failed)
    }
}

/// Collects outcomes of one check.
struct Tally {
    instances: usize,
    failures: Vec<String>,
    failure_count: usize,
}

impl Tally {
    fn new() -> Self {
        Tally { instances: 0, failures: Vec::new(), failure_count: 0 }
    }

    fn record(&mut self, ok: Result<bool>, describe: impl FnOnce() -> String) {
        self.instances += 1;
        let msg = match ok {
            Ok(true) => return,
            Ok(false) => describe(),
            Err(e) => format!("{}: {e}", describe()),
        };
        self.failure_count += 1;
        if self.failures.len() < MAX_REPORTED_FAILURES {
            self.failures.push(msg);
        }
    }
}

type CheckFn = Box<dyn Fn(&mut ChaCha8Rng, i64, &mut Tally) + Send + Sync>;

struct Check {
    suite: &'static str,
    name: String,
    /// Default bound for the check's size parameter; `--max-n` replaces it.
    default_n: i64,
    run: CheckFn,
}

fn check(
    suite: &'static str,
    name: &str,
    default_n: i64,
    run: impl Fn(&mut ChaCha8Rng, i64, &mut Tally) + Send + Sync + 'static,
) -> Check {
    Check { suite, name: name.to_string(), default_n, run: Box::new(run) }
}

fn stream_seed(seed: u64, name: &str) -> u64 {
    // FNV-1a over the name, mixed with the suite seed
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed.rotate_left(17)
}

/// Runs `suite`. `max_n` replaces each check's default size bound; every
/// check still clamps it to its own hard limit.
pub fn run_suite(suite: Suite, seed: u64, max_n: Option<i64>) -> Report {
    let all = checks();
    let checks: Vec<&Check> = all.iter().filter(|c| suite == Suite::All || c.suite == suite.name()).collect();
    let results = thread::scope(|s| {
        let handles: Vec<_> = checks
            .iter()
            .map(|c| {
                s.spawn(move || {
                    let mut rng = ChaCha8Rng::seed_from_u64(stream_seed(seed, &c.name));
                    let mut tally = Tally::new();
                    (c.run)(&mut rng, max_n.unwrap_or(c.default_n).max(0), &mut tally);
                    CheckResult {
                        suite: c.suite,
                        name: c.name.clone(),
                        instances: tally.instances,
                        failures: tally.failures,
                        failure_count: tally.failure_count,
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("checks do not panic")).collect()
    });
    Report { seed, checks: results }
}

fn rand_rational(rng: &mut ChaCha8Rng, num: i64, den: i64) -> ExactRational {
    rat(rng.random_range(-num..=num), rng.random_range(1..=den))
}

fn rand_positive(rng: &mut ChaCha8Rng) -> ExactRational {
    rat(rng.random_range(1..=40), rng.random_range(1..=9))
}

fn rand_list(rng: &mut ChaCha8Rng, len: std::ops::RangeInclusive<usize>, lo: i64, hi: i64) -> Vec<i64> {
    let n = rng.random_range(len);
    (0..n).map(|_| rng.random_range(lo..=hi)).collect()
}

// ---------------------------------------------------------------- iverson

fn iverson_params(id: &str, rng: &mut ChaCha8Rng, max_n: i64) -> IdentityParams {
    let p = IdentityParams::new();
    let n_up = |cap: i64| max_n.min(cap);
    let zeroish = |rng: &mut ChaCha8Rng| {
        if rng.random_bool(0.25) {
            rat_int(0)
        } else {
            rand_rational(rng, 6, 4)
        }
    };
    match id {
        "1.2" | "1.3" => {
            let n = rng.random_range(0..=n_up(60));
            p.set("n", n).set("z", zeroish(rng))
        }
        "1.5" | "1.7" => p.set("n", rng.random_range(0..=(3 * max_n).min(500))),
        "1.8" => p.set("k", rng.random_range(-20..=20)),
        "1.9" | "1.10" => {
            let a = rand_list(rng, 0..=6, -5, 10);
            let b = rand_list(rng, 0..=6, -5, 10);
            let f = rand_list(rng, 1..=4, -3, 3);
            p.set_list("A", &a).set_list("B", &b).set_list("f", &f).set("k", rng.random_range(-6..=11))
        }
        "1.11" => {
            let g = rand_list(rng, 9..=9, -3, 3);
            p.set("n", rng.random_range(0..=n_up(200) / 2)).set_list("g", &g)
        }
        "1.12" => p.set("k", rng.random_range(-60..=60)),
        "1.13" => {
            let lo = rng.random_range(-10..=10);
            let f = rand_list(rng, 1..=4, -3, 3);
            p.set("lo", lo).set("hi", lo + rng.random_range(-2..=20)).set_list("f", &f)
        }
        "1.14" => p.set("n", rng.random_range(0..=n_up(10))),
        "1.15" => p.set("n", rng.random_range(1..=(25 * max_n).clamp(1, 600))),
        "1.18" => p.set("n", rng.random_range(0..=n_up(200))).set("x", zeroish(rng)).set("y", zeroish(rng)),
        "1.19" => p.set("x", rng.random_range(0..=(12 * max_n).min(300))),
        _ => p,
    }
}

fn check_identity(id: &'static str) -> impl Fn(&mut ChaCha8Rng, i64, &mut Tally) {
    move |rng, max_n, t| {
        for _ in 0..IVERSON_INSTANCES {
            let params = iverson_params(id, rng, max_n);
            t.record(verify_identity(id, &params).map(|r| r.holds), || format!("at {params:?}"));
        }
    }
}

fn check_strong_zero(_: &mut ChaCha8Rng, max_n: i64, t: &mut Tally) {
    use crate::iverson::{assign, guarded_term, CmpOp, Predicate, Term, TermEval};
    for k in -max_n..=max_n {
        let guard: Predicate = Predicate::cmp(Term::var("k"), CmpOp::Ne, Term::int(0));
        let r = guarded_term(&guard, |e| Term::div(Term::int(1), Term::var("k")).eval(e), &assign(&[("k", k)]));
        let want = if k == 0 { rat_int(0) } else { rat(1, k) };
        t.record(r.map(|v| v == want), || format!("[k != 0]/k at k = {k}"));
    }
}

fn check_libri(_: &mut ChaCha8Rng, _: i64, t: &mut Tally) {
    for x in 1..=20 {
        for m in 1..=40 {
            t.record(libri_divisor(m, x).map(|v| v == divides_bracket(x, m)), || format!("divisor m={m} x={x}"));
        }
    }
    for x in 1..=12 {
        for k in 1..=40 {
            let want = divides_bracket(x, k) - divides_bracket(x, k - 1);
            t.record(libri_p(k, x).map(|v| BigRational::from_integer(v) == want), || format!("P_{k}({x})"));
        }
    }
}

fn check_hardy_wright(_: &mut ChaCha8Rng, _: i64, t: &mut Tally) {
    for p in (2..=50).filter(|&p| is_prime(&BigInt::from(p))) {
        for k in 1..=20 {
            let want = if k % (p - 1) == 0 { p - 1 } else { 0 };
            t.record(power_sum_mod(p, k).map(|v| v == want), || format!("p={p} k={k}"));
        }
    }
}

// ---------------------------------------------------------------- stirling

fn check_logan(_: &mut ChaCha8Rng, _: i64, t: &mut Tally) {
    for (i, row) in LOGAN_WINDOW.iter().enumerate() {
        for (j, &want) in row.iter().enumerate() {
            let (n, k) = (i as i64 - 4, j as i64 - 4);
            t.record(Ok(stirling_cycle(n, k) == BigInt::from(want)), || format!("cycle({n},{k})"));
        }
    }
}

fn check_duality(_: &mut ChaCha8Rng, max_n: i64, t: &mut Tally) {
    let r = max_n.min(40);
    for n in -r..=r {
        for k in -r..=r {
            t.record(Ok(stirling_subset(n, k) == stirling_cycle(-k, -n)), || format!("subset({n},{k})"));
        }
    }
}

fn check_recurrences(rng: &mut ChaCha8Rng, max_n: i64, t: &mut Tally) {
    let r = max_n.clamp(1, 60);
    for _ in 0..300 {
        let (n, k) = (rng.random_range(-r..=r), rng.random_range(-r..=r));
        let cyc = stirling_cycle(n + 1, k) == BigInt::from(n) * stirling_cycle(n, k) + stirling_cycle(n, k - 1);
        let sub = stirling_subset(n + 1, k) == BigInt::from(k) * stirling_subset(n, k) + stirling_subset(n, k - 1);
        t.record(Ok(cyc && sub), || format!("recurrences at ({n},{k})"));
    }
}

fn check_row_sums(_: &mut ChaCha8Rng, max_n: i64, t: &mut Tally) {
    for n in 0..=max_n.min(9) {
        let cyc: BigInt = (0..=n).map(|k| stirling_cycle(n, k)).sum();
        let sub: BigInt = (0..=n).map(|k| stirling_subset(n, k)).sum();
        let ok = factorial(n).map(|f| f == cyc).and_then(|a| bell(n).map(|b| a && b == sub));
        t.record(ok, || format!("row {n}"));
    }
}

fn check_stirling_polys(rng: &mut ChaCha8Rng, max_n: i64, t: &mut Tally) {
    for k in 0..=6usize {
        let g = cycle_poly(k);
        let f = subset_poly(k);
        t.record(Ok(f == g.compose(&-UniPoly::x())), || format!("subset_poly_{k} = cycle_poly_{k}(-x)"));
        for _ in 0..20 {
            let n = rng.random_range(-max_n.clamp(1, 30)..=max_n.clamp(1, 30));
            let ok = g.eval_int(n) == BigRational::from_integer(stirling_cycle(n, n - k as i64))
                && f.eval_int(n) == BigRational::from_integer(stirling_subset(n + k as i64, n));
            t.record(Ok(ok), || format!("polynomial values k={k} n={n}"));
        }
    }
}

fn check_kramp(_: &mut ChaCha8Rng, max_n: i64, t: &mut Tally) {
    for k in 0..=6usize {
        let (c, g) = match (kramp_c(k), kramp_gamma(k)) {
            (Ok(c), Ok(g)) => (c, g),
            (Err(e), _) | (_, Err(e)) => {
                t.record(Err(e), || format!("kramp k={k}"));
                continue;
            }
        };
        for n in 0..=max_n.min(8) {
            let ki = k as i64;
            let ok = elem_sym(n, ki).and_then(|e| {
                let h = if ki <= 6 { complete_hom(n, ki)? } else { stirling_subset(n + ki, n) };
                Ok(c.eval_int(n) == BigRational::from_integer(e) && g.eval_int(n) == BigRational::from_integer(h))
            });
            t.record(ok, || format!("C_{k}({n}), Gamma_{k}({n})"));
        }
        t.record(duality_poly_check(k), || format!("C_{k}(n-1) = Gamma_{k}(-n)"));
        if k >= 1 {
            t.record(kramp_recurrence_check(k), || format!("recurrence m={k}"));
        }
    }
}

// ---------------------------------------------------------------- analysis

fn check_basis(rng: &mut ChaCha8Rng, _: i64, t: &mut Tally) {
    for _ in 0..40 {
        let deg = rng.random_range(0..=10);
        let c: Vec<ExactRational> = (0..=deg).map(|_| rand_rational(rng, 9, 3)).collect();
        let mut ok = true;
        for (a, b) in [(Basis::Power, Basis::Falling), (Basis::Power, Basis::Rising), (Basis::Falling, Basis::Rising)] {
            let there = convert(&c, a, b);
            let back = convert(&there, b, a);
            ok &= UniPoly::from_coeffs(back) == UniPoly::from_coeffs(c.clone());
        }
        t.record(Ok(ok), || format!("round trip {c:?}"));
    }
}

fn check_reciprocal(rng: &mut ChaCha8Rng, max_n: i64, t: &mut Tally) {
    for _ in 0..50 {
        let z = rand_positive(rng);
        let n = rng.random_range(1..=max_n.clamp(1, 20)) as usize;
        let ok = reciprocal_series(&z, n).and_then(|(partial, rem)| {
            let zs = vec![rat_int(1); n];
            Ok(partial + rem == z.recip() && nicole_check(&z, &zs)?)
        });
        t.record(ok, || format!("z={z} n={n}"));
        let zs: Vec<ExactRational> = (0..n).map(|_| rand_positive(rng)).collect();
        t.record(nicole_check(&z, &zs), || format!("Nicole z={z} zs={zs:?}"));
    }
}

fn check_falling_law(rng: &mut ChaCha8Rng, _: i64, t: &mut Tally) {
    let mut done = 0;
    while done < 60 {
        let z = rand_rational(rng, 30, 7);
        let (m, n) = (rng.random_range(-5..=5), rng.random_range(-5..=5));
        // pole-free samples only
        let (Ok(lhs), Ok(a), Ok(b)) = (falling(&z, m + n), falling(&z, m), falling(&(&z - rat_int(m)), n)) else {
            continue;
        };
        done += 1;
        t.record(Ok(lhs == a * b), || format!("z={z} m={m} n={n}"));
    }
}

fn check_generating_series(_: &mut ChaCha8Rng, _: i64, t: &mut Tally) {
    t.record(log_power_identity_holds(8, 16), || "h_k identity for k <= 8".into());
}

fn check_generalized(rng: &mut ChaCha8Rng, _: i64, t: &mut Tally) {
    for a in 0..=6u32 {
        let z = rand_positive(rng);
        let ok = generalized_terms_exact(&z, a).map(|terms| {
            let total: ExactRational = terms.iter().sum();
            let mut direct = rat_int(0);
            for k in 0..=a as i64 {
                direct += BigRational::from_integer(stirling_subset(a as i64, k)) * falling(&z, k).expect("k >= 0");
            }
            let power = (0..a).fold(BigRational::one(), |acc, _| acc * &z);
            total == direct && total == power
        });
        t.record(ok, || format!("integer alpha={a} z={z}"));
    }
    let ok = generalized_power_series(10.0, 0.5, 200).map(|s| ((s.value - 10f64.sqrt()) / 10f64.sqrt()).abs() <= 1e-6);
    t.record(ok, || "alpha=1/2 z=10 budget 200".into());
}

fn check_asymptotic(_: &mut ChaCha8Rng, _: i64, t: &mut Tally) {
    for alpha in [rat(1, 2), rat(-1, 2), rat(1, 3)] {
        for m in 1..=5usize {
            let ratio = asym_error(&alpha, &rat_int(10), m, FactorialKind::Rising)
                .and_then(|e10| Ok(e10 / asym_error(&alpha, &rat_int(100), m, FactorialKind::Rising)?));
            // the order is set by the first omitted coefficient that is nonzero
            let g = cycle_poly_values_at(&alpha, m + 8);
            let order = (m + 1..g.len()).find(|&j| !g[j].is_zero()).unwrap_or(m + 1);
            let target = 10f64.powi(order as i32);
            t.record(ratio.map(|r| r.abs() >= target / 3.0 && r.abs() <= target * 3.0), || {
                format!("error ratio alpha={alpha} m={m}")
            });
        }
    }
}

fn check_kramp_expansion(_: &mut ChaCha8Rng, _: i64, t: &mut Tally) {
    for n in -4..=8 {
        t.record(kramp_expansion_check(n, 25), || format!("n={n}"));
    }
}

// ---------------------------------------------------------------- oracles

fn check_perm_oracle(_: &mut ChaCha8Rng, max_n: i64, t: &mut Tally) {
    for n in 0..=max_n.min(8) {
        for k in 0..=n {
            t.record(count_perms_by_cycles(n, k).map(|c| c == stirling_cycle(n, k)), || format!("({n},{k})"));
        }
    }
}

fn check_partition_oracle(_: &mut ChaCha8Rng, max_n: i64, t: &mut Tally) {
    for n in 0..=max_n.min(10) {
        for k in 0..=n {
            t.record(count_set_partitions(n, k).map(|c| c == stirling_subset(n, k)), || format!("({n},{k})"));
        }
    }
}

fn check_symmetric_oracle(_: &mut ChaCha8Rng, max_n: i64, t: &mut Tally) {
    for n in 0..=max_n.min(8) {
        for k in 0..=5 {
            let ok = elem_sym(n, k).and_then(|e| {
                Ok(e == stirling_cycle(n + 1, n + 1 - k) && complete_hom(n, k)? == stirling_subset(n + k, n))
            });
            t.record(ok, || format!("({n},{k})"));
        }
    }
}

fn check_fence(_: &mut ChaCha8Rng, max_n: i64, t: &mut Tally) {
    for k in 1..=3usize {
        let fence = match fence_poset(k) {
            Ok(f) => f,
            Err(e) => {
                t.record(Err(e), || format!("fence {k}"));
                continue;
            }
        };
        for n in 0..=max_n.min(6) {
            let ki = k as i64;
            let ok = fence.omega(n).and_then(|w| {
                let s = fence.omega_bar(n)?;
                Ok(w == stirling_subset(n + ki, n)
                    && w == fence_chain_sum(k, n, false)
                    && s == stirling_cycle(n, n - ki)
                    && s == fence_chain_sum(k, n, true))
            });
            t.record(ok, || format!("fence k={k} n={n}"));
        }
        t.record(fence.reciprocity_holds(), || format!("reciprocity fence k={k}"));
    }
}

fn check_random_reciprocity(rng: &mut ChaCha8Rng, _: i64, t: &mut Tally) {
    for i in 0..20u64 {
        let p = [3usize, 4, 5, 6].choose(rng).copied().unwrap_or(4);
        let density = rng.random_range(0.2..0.7);
        let seed = RECIPROCITY_SEED.wrapping_add(i);
        let ok = random_poset(p, density, seed).and_then(|poset| poset.reciprocity_holds());
        t.record(ok, || format!("random poset p={p} seed={seed}"));
    }
}

fn check_chain_antichain(_: &mut ChaCha8Rng, _: i64, t: &mut Tally) {
    use crate::oracles::Poset;
    for p in 0..=4usize {
        for n in 0..=5i64 {
            let pi = p as i64;
            let ok = Poset::antichain(p).omega(n).and_then(|a| {
                Ok(a == BigInt::from(n).pow(p as u32)
                    && Poset::chain(p).omega(n)? == binomial(n + pi - 1, pi)
                    && Poset::chain(p).omega_bar(n)? == binomial(n, pi))
            });
            t.record(ok, || format!("p={p} n={n}"));
        }
    }
}

fn checks() -> Vec<Check> {
    let mut v = Vec::new();
    for (id, _) in IDENTITIES {
        v.push(check("iverson", &format!("identity-{id}"), 24, check_identity(id)));
    }
    v.push(check("iverson", "strong-zero", 20, check_strong_zero));
    v.push(check("iverson", "libri", 0, check_libri));
    v.push(check("iverson", "hardy-wright", 0, check_hardy_wright));
    v.push(check("stirling", "logan-window", 0, check_logan));
    v.push(check("stirling", "duality", 12, check_duality));
    v.push(check("stirling", "recurrences", 30, check_recurrences));
    v.push(check("stirling", "row-sums", 9, check_row_sums));
    v.push(check("stirling", "stirling-polynomials", 20, check_stirling_polys));
    v.push(check("stirling", "kramp", 8, check_kramp));
    v.push(check("analysis", "basis-round-trip", 10, check_basis));
    v.push(check("analysis", "reciprocal-and-nicole", 20, check_reciprocal));
    v.push(check("analysis", "falling-addition", 5, check_falling_law));
    v.push(check("analysis", "log-power-series", 8, check_generating_series));
    v.push(check("analysis", "generalized-series", 6, check_generalized));
    v.push(check("analysis", "asymptotic-order", 5, check_asymptotic));
    v.push(check("analysis", "kramp-expansion", 8, check_kramp_expansion));
    v.push(check("oracles", "permutations", 8, check_perm_oracle));
    v.push(check("oracles", "set-partitions", 10, check_partition_oracle));
    v.push(check("oracles", "symmetric-sums", 8, check_symmetric_oracle));
    v.push(check("oracles", "fence-posets", 6, check_fence));
    v.push(check("oracles", "random-reciprocity", 6, check_random_reciprocity));
    v.push(check("oracles", "chains-and-antichains", 5, check_chain_antichain));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_and_are_deterministic() {
        for suite in [Suite::Stirling, Suite::Oracles] {
            let a = run_suite(suite, 7, None);
            assert!(a.passed(), "{a}");
            assert_eq!(a, run_suite(suite, 7, None));
        }
    }

    #[test]
    fn small_iverson_run() {
        let r = run_suite(Suite::Iverson, 1, Some(6));
        assert!(r.passed(), "{r}");
        let catalog: Vec<_> = r.checks.iter().filter(|c| c.name.starts_with("identity-")).collect();
        assert_eq!(catalog.len(), IDENTITIES.len());
        assert!(catalog.iter().all(|c| c.instances == IVERSON_INSTANCES));
    }

    #[test]
    fn suite_names() {
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("nope".parse::<Suite>().is_err());
    }
}
