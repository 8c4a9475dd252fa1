use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::predicate::{Assignment, CmpOp, Predicate, TermEval};
use crate::error::{Error, Result};
use crate::exact::{ceil_int, floor_int, rat_int, ExactRational};

/// A lazily evaluated summand or factor.
pub type TermFn<'a> = Box<dyn Fn(&Assignment) -> Result<ExactRational> + 'a>;

/// `sum_{vars} [guard] * term` (or the product with `[guard]` as exponent)
/// over a box of integer points outside which the guarded term is declared
/// to vanish.
pub struct SumSpec<'a, T = super::Term> {
    pub vars: Vec<(String, i64, i64)>,
    pub guard: Predicate<T>,
    pub term: TermFn<'a>,
    /// Bindings of free variables.
    pub env: Assignment,
    /// How many integers beyond each end of each support are probed.
    pub probe_width: i64,
    pub max_points: u128,
}

impl<'a, T: TermEval> SumSpec<'a, T> {
    pub fn new(guard: Predicate<T>, term: impl Fn(&Assignment) -> Result<ExactRational> + 'a) -> Self {
        SumSpec {
            vars: Vec::new(),
            guard,
            term: Box::new(term),
            env: Assignment::new(),
            probe_width: 2,
            max_points: 1_000_000,
        }
    }

    /// Adds a bound variable ranging over `lo..=hi` (empty when `lo > hi`).
    pub fn over(mut self, var: &str, lo: i64, hi: i64) -> Self {
        self.vars.push((var.to_string(), lo, hi));
        self
    }

    /// Adds a bound variable whose support is read off the guard.
    pub fn over_derived(self, var: &str) -> Result<Self> {
        let (lo, hi) =
            derive_support(&self.guard, var, &self.env).ok_or_else(|| Error::SupportUnderivable(var.to_string()))?;
        Ok(self.over(var, lo, hi))
    }

    pub fn with_env(mut self, env: Assignment) -> Self {
        self.env = env;
        self
    }

    fn is_empty(&self) -> bool {
        self.vars.iter().any(|(_, lo, hi)| lo > hi)
    }

    fn point_count(&self) -> u128 {
        self.vars.iter().map(|(_, lo, hi)| if lo > hi { 0 } else { (hi - lo) as u128 + 1 }).product()
    }

    fn guarded(&self, env: &Assignment) -> Result<Option<ExactRational>> {
        if self.guard.holds(env)? {
            Ok(Some((self.term)(env)?))
        } else {
            Ok(None)
        }
    }
}

/// Visits every point of `ranges` in lexicographic order.
fn each_point(
    vars: &[(String, i64, i64)],
    env: &mut Assignment,
    visit: &mut dyn FnMut(&Assignment) -> Result<()>,
) -> Result<()> {
    let Some(((name, lo, hi), rest)) = vars.split_first() else {
        return visit(env);
    };
    for v in *lo..=*hi {
        env.insert(name.clone(), rat_int(v));
        each_point(rest, env, visit)?;
    }
    env.remove(name);
    Ok(())
}

fn check_budget<T: TermEval>(spec: &SumSpec<'_, T>) -> Result<()> {
    let n = spec.point_count();
    if n > spec.max_points {
        return Err(Error::CapExceeded { what: "summation points", requested: n, cap: spec.max_points });
    }
    Ok(())
}

/// Evaluates `neutral_ok` on guarded values just outside each support edge.
fn probe_boundaries<T: TermEval>(
    spec: &SumSpec<'_, T>,
    neutral_ok: impl Fn(&Option<ExactRational>) -> bool,
) -> Result<()> {
    for (i, (name, lo, hi)) in spec.vars.iter().enumerate() {
        let outside = (1..=spec.probe_width).flat_map(|d| [lo - d, hi + d]);
        for v in outside {
            let mut vars = spec.vars.clone();
            vars[i] = (name.clone(), v, v);
            let mut env = spec.env.clone();
            let mut visit = |e: &Assignment| -> Result<()> {
                let ok = match spec.guarded(e) {
                    Ok(val) => neutral_ok(&val),
                    Err(_) => false,
                };
                if ok {
                    Ok(())
                } else {
                    let at = vars_text(&spec.vars, e);
                    Err(Error::SupportViolation { var: name.clone(), at })
                }
            };
            each_point(&vars, &mut env, &mut visit)?;
        }
    }
    Ok(())
}

fn vars_text(vars: &[(String, i64, i64)], env: &Assignment) -> String {
    vars.iter()
        .map(|(n, _, _)| format!("{n}={}", env.get(n).map(ToString::to_string).unwrap_or_default()))
        .collect::<Vec<_>>()
        .join(", ")
}

/// `sum [guard] term` over the declared support; the guard is evaluated first
/// at every point, so a false guard never evaluates the term.
pub fn sum_brackets<T: TermEval>(spec: &SumSpec<'_, T>) -> Result<ExactRational> {
    if spec.is_empty() {
        return Ok(BigRational::zero());
    }
    check_budget(spec)?;
    probe_boundaries(spec, |v| v.as_ref().is_none_or(Zero::is_zero))?;
    let mut total = BigRational::zero();
    let mut env = spec.env.clone();
    each_point(&spec.vars, &mut env, &mut |e| {
        if let Some(v) = spec.guarded(e)? {
            total += v;
        }
        Ok(())
    })?;
    Ok(total)
}

/// `prod term^[guard]` over the declared support.
pub fn prod_brackets<T: TermEval>(spec: &SumSpec<'_, T>) -> Result<ExactRational> {
    if spec.is_empty() {
        return Ok(BigRational::one());
    }
    check_budget(spec)?;
    probe_boundaries(spec, |v| v.as_ref().is_none_or(One::is_one))?;
    let mut total = BigRational::one();
    let mut env = spec.env.clone();
    each_point(&spec.vars, &mut env, &mut |e| {
        if let Some(v) = spec.guarded(e)? {
            total *= v;
        }
        Ok(())
    })?;
    Ok(total)
}

#[derive(Default)]
struct Bounds {
    lo: Option<BigInt>,
    hi: Option<BigInt>,
}

impl Bounds {
    fn lower(&mut self, c: &ExactRational, strict: bool) {
        let b = if strict { floor_int(c) + 1 } else { ceil_int(c) };
        self.lo = Some(self.lo.take().map_or(b.clone(), |old| old.max(b)));
    }

    fn upper(&mut self, c: &ExactRational, strict: bool) {
        let b = if strict { ceil_int(c) - 1 } else { floor_int(c) };
        self.hi = Some(self.hi.take().map_or(b.clone(), |old| old.min(b)));
    }
}

/// Reads finite bounds for `var` off a conjunction of comparisons.
///
/// Recognised conjuncts: comparison chains containing `var` as a bare term
/// (bounds transfer along `<`/`<=` runs, or `>`/`>=` runs, to any term not
/// mentioning `var` that evaluates under `env`), `lo <= var <= hi` ranges,
/// membership in an explicit set, `var = c`, and negated single
/// comparisons such as `not (var > c)`. Returns `None` unless both
/// ends are bounded.
pub fn derive_support<T: TermEval>(guard: &Predicate<T>, var: &str, env: &Assignment) -> Option<(i64, i64)> {
    let mut b = Bounds::default();
    collect(guard, var, env, &mut b);
    let lo = b.lo?.to_i64()?;
    let hi = b.hi?.to_i64()?;
    Some((lo, hi))
}

fn constant<T: TermEval>(t: &T, var: &str, env: &Assignment) -> Option<ExactRational> {
    if t.mentions(var) {
        return None;
    }
    t.eval(env).ok()
}

fn collect<T: TermEval>(p: &Predicate<T>, var: &str, env: &Assignment, b: &mut Bounds) {
    match p {
        Predicate::And(ps) => ps.iter().for_each(|q| collect(q, var, env, b)),
        Predicate::InRange(t, lo, hi) if t.as_var() == Some(var) => {
            if let Some(c) = constant(lo, var, env) {
                b.lower(&c, false);
            }
            if let Some(c) = constant(hi, var, env) {
                b.upper(&c, false);
            }
        }
        Predicate::In(t, set) if t.as_var() == Some(var) => {
            if let (Some(min), Some(max)) = (set.first(), set.last()) {
                b.lower(&BigRational::from_integer(min.clone()), false);
                b.upper(&BigRational::from_integer(max.clone()), false);
            } else {
                b.lower(&rat_int(1), false);
                b.upper(&rat_int(0), false);
            }
        }
        Predicate::Cmp(terms, ops) => chain_bounds(terms, ops, var, env, b),
        Predicate::Not(inner) => {
            if let Predicate::Cmp(terms, ops) = &**inner {
                if let [op] = ops.as_slice() {
                    chain_bounds(terms, &[op.negated()], var, env, b);
                }
            }
        }
        _ => {}
    }
}

fn chain_bounds<T: TermEval>(terms: &[T], ops: &[CmpOp], var: &str, env: &Assignment, b: &mut Bounds) {
    let Some(pos) = terms.iter().position(|t| t.as_var() == Some(var)) else {
        return;
    };
    // `op` below always relates terms[j] (left) to its neighbour towards var;
    // an unbroken `<`/`<=` run makes terms[j] a lower bound, `>`/`>=` an upper one
    for (leftward, range) in [(true, (0..pos).rev().collect::<Vec<_>>()), (false, (pos + 1..terms.len()).collect())] {
        let mut strict = false;
        let mut increasing: Option<bool> = None;
        for j in range {
            let op = if leftward { ops[j] } else { ops[j - 1].flipped() };
            let (inc, s) = match op {
                CmpOp::Lt => (true, true),
                CmpOp::Le => (true, false),
                CmpOp::Gt => (false, true),
                CmpOp::Ge => (false, false),
                CmpOp::Eq => (increasing.unwrap_or(true), false),
                CmpOp::Ne => break,
            };
            if op != CmpOp::Eq {
                if increasing.is_some_and(|i| i != inc) {
                    break;
                }
                increasing = Some(inc);
            }
            strict |= s;
            if let Some(c) = constant(&terms[j], var, env) {
                match (op, increasing) {
                    (CmpOp::Eq, None) => {
                        b.lower(&c, false);
                        b.upper(&c, false);
                    }
                    (_, Some(true)) => b.lower(&c, strict),
                    (_, Some(false)) => b.upper(&c, strict),
                    _ => {}
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::iverson::predicate::{assign, is_prime, Term};
    use crate::numbers::binomial;

    fn k() -> Term {
        Term::var("k")
    }

    #[test]
    fn lg_binomial_sum_is_power_of_three() {
        // sum_{k>=1} binomial(3, floor(lg k)) over [1, 2^4)
        let guard: Predicate = Predicate::cmp(k(), CmpOp::Ge, Term::int(1));
        let spec = SumSpec::new(guard, |e| {
            let k = e["k"].to_integer().to_u64().unwrap();
            Ok(BigRational::from_integer(binomial(3, 63 - k.leading_zeros() as i64)))
        })
        .over("k", 1, 15);
        assert_eq!(sum_brackets(&spec).unwrap(), rat_int(27));
    }

    #[test]
    fn empty_support_sums_to_zero() {
        let spec = SumSpec::new(Predicate::<Term>::True, |_| Ok(rat_int(1))).over("k", 1, 0);
        assert_eq!(sum_brackets(&spec).unwrap(), rat_int(0));
        assert_eq!(prod_brackets(&spec).unwrap(), rat_int(1));
    }

    #[test]
    fn prime_reciprocals_with_strong_zero_at_zero() {
        let guard: Predicate = Predicate::And(vec![
            Predicate::Prime(Term::var("p")),
            Predicate::cmp(Term::var("p"), CmpOp::Le, Term::int(10)),
        ]);
        let spec = SumSpec::new(guard, |e| {
            let p = &e["p"];
            if p.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(p.recip())
        })
        .over("p", 0, 10);
        assert_eq!(sum_brackets(&spec).unwrap(), rat(247, 210));
    }

    fn radical(n: i64) -> ExactRational {
        let guard: Predicate =
            Predicate::And(vec![Predicate::Prime(Term::var("p")), Predicate::Divides(Term::var("p"), Term::int(n))]);
        let spec = SumSpec::new(guard, |e| Ok(e["p"].clone())).over("p", 1, n);
        prod_brackets(&spec).unwrap()
    }

    #[test]
    fn squarefree_part() {
        assert_eq!(radical(12), rat_int(6));
        assert_eq!(radical(1), rat_int(1));
        assert_eq!(radical(30), rat_int(30));
        for n in 1..60 {
            let oracle: i64 = (2..=n).filter(|&p| is_prime(&p.into()) && n % p == 0).product();
            assert_eq!(radical(n), rat_int(oracle), "n={n}");
        }
    }

    #[test]
    fn boundary_probe_catches_undeclared_support() {
        let guard: Predicate = Predicate::cmp(k(), CmpOp::Ge, Term::int(0));
        let spec = SumSpec::new(guard, |e| Ok(e["k"].clone())).over("k", 0, 5);
        assert!(matches!(sum_brackets(&spec), Err(Error::SupportViolation { .. })));
    }

    #[test]
    fn derived_supports() {
        let env = assign(&[("n", 6)]);
        let chain: Predicate = Predicate::Cmp(vec![Term::int(0), k(), Term::var("n")], vec![CmpOp::Le, CmpOp::Lt]);
        assert_eq!(derive_support(&chain, "k", &env), Some((0, 5)));
        let pair: Predicate = Predicate::And(vec![
            Predicate::cmp(Term::int(1), CmpOp::Le, k()),
            Predicate::cmp(k(), CmpOp::Le, Term::int(0)),
        ]);
        assert_eq!(derive_support(&pair, "k", &env), Some((1, 0)));
        let flipped: Predicate = Predicate::Cmp(vec![Term::var("n"), k(), Term::int(-2)], vec![CmpOp::Ge, CmpOp::Gt]);
        assert_eq!(derive_support(&flipped, "k", &env), Some((-1, 6)));
        let rational: Predicate =
            Predicate::Cmp(vec![Term::Const(rat(1, 2)), k(), Term::Const(rat(7, 2))], vec![CmpOp::Lt, CmpOp::Lt]);
        assert_eq!(derive_support(&rational, "k", &env), Some((1, 3)));
        let half: Predicate = Predicate::cmp(k(), CmpOp::Ge, Term::int(0));
        assert_eq!(derive_support(&half, "k", &env), None);
        // bounds through another bound variable are not constants
        let nested: Predicate = Predicate::Cmp(
            vec![Term::int(1), k(), Term::var("j"), Term::var("n")],
            vec![CmpOp::Le, CmpOp::Le, CmpOp::Le],
        );
        assert_eq!(derive_support(&nested, "k", &env), Some((1, 6)));
        assert_eq!(derive_support(&nested, "j", &env), Some((1, 6)));
    }

    #[test]
    fn underivable_support_is_an_error() {
        let guard: Predicate = Predicate::Even(k());
        let r = SumSpec::new(guard, |_| Ok(rat_int(1))).over_derived("k");
        assert!(matches!(r, Err(Error::SupportUnderivable(_))));
    }
}
