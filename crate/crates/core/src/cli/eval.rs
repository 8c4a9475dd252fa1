//! Evaluation of parsed expressions.
//!
//! Values stay exact unless a real-only operation appears (a non-integer
//! factorial-power exponent, a non-integer power, `factorial` of a
//! non-integer); real values then propagate.

use std::cell::Cell;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::syntax::{BigOp, BinOp, Expr, Func};
use crate::analysis::{factorial_power_real, falling, rising, FactorialKind};
use crate::error::{Error, Result};
use crate::exact::{floor_int, is_integer, pow_i64, to_f64, to_i64, ExactRational};
use crate::iverson::{prod_brackets, sum_brackets, Assignment, Predicate, SumSpec, TermEval};
use crate::limits::Limits;
use crate::numbers::{factorial, stirling_cycle, stirling_subset};

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(ExactRational),
    Real(f64),
}

impl Value {
    pub fn as_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => to_f64(r),
            Value::Real(x) => *x,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{r}"),
            Value::Real(x) => f.write_str(&format_real(*x)),
        }
    }
}

/// `x` with 17 significant digits, trailing zeros dropped (C's `%.17g`).
pub fn format_real(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if (-5..17).contains(&exp) {
        let decimals = (16 - exp).max(0) as usize;
        let fixed = format!("{x:.decimals$}");
        if fixed.contains('.') {
            fixed.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            fixed
        }
    } else {
        let m = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{m}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

thread_local! {
    static LIMITS: Cell<Limits> = Cell::new(Limits::default());
}

/// Size guard for calls whose work grows with their integer arguments.
const MAX_FACTORIAL: i64 = 100_000;
const MAX_POWER: i64 = 100_000;

fn current_limits() -> Limits {
    LIMITS.with(Cell::get)
}

/// Evaluates `e` with the default caps.
pub fn eval_expr(e: &Expr, bindings: &Assignment) -> Result<Value> {
    eval_expr_with(e, bindings, &Limits::default())
}

/// Evaluates `e` with explicit caps.
pub fn eval_expr_with(e: &Expr, bindings: &Assignment, limits: &Limits) -> Result<Value> {
    let previous = LIMITS.with(|l| l.replace(*limits));
    let out = eval(e, bindings);
    LIMITS.with(|l| l.set(previous));
    out
}

impl TermEval for Expr {
    fn eval(&self, env: &Assignment) -> Result<ExactRational> {
        exact(eval(self, env)?, "comparison operand")
    }

    fn as_var(&self) -> Option<&str> {
        match self {
            Expr::Var(v) => Some(v),
            _ => None,
        }
    }

    fn mentions(&self, var: &str) -> bool {
        match self {
            Expr::Num(_) => false,
            Expr::Var(v) => v == var,
            Expr::Neg(a) => a.mentions(var),
            Expr::Bin(_, a, b) => a.mentions(var) || b.mentions(var),
            Expr::Call(_, args) => args.iter().any(|a| a.mentions(var)),
            Expr::Bracket(p) => pred_mentions(p, var),
            Expr::Big { var: bound, range, guard, body, .. } => {
                range.as_ref().is_some_and(|(lo, hi)| lo.mentions(var) || hi.mentions(var))
                    || (bound != var && (guard.mentions(var) || body.mentions(var)))
            }
        }
    }
}

fn pred_mentions(p: &Predicate<Expr>, var: &str) -> bool {
    match p {
        Predicate::True | Predicate::False => false,
        Predicate::Cmp(ts, _) => ts.iter().any(|t| t.mentions(var)),
        Predicate::Divides(a, b) => a.mentions(var) || b.mentions(var),
        Predicate::Prime(t) | Predicate::Even(t) | Predicate::Odd(t) | Predicate::In(t, _) => t.mentions(var),
        Predicate::InRange(t, lo, hi) => t.mentions(var) || lo.mentions(var) || hi.mentions(var),
        Predicate::And(ps) | Predicate::Or(ps) => ps.iter().any(|q| pred_mentions(q, var)),
        Predicate::Not(q) => pred_mentions(q, var),
    }
}

fn exact(v: Value, what: &str) -> Result<ExactRational> {
    match v {
        Value::Exact(r) => Ok(r),
        Value::Real(_) => Err(Error::domain(format!("{what} must be exact, got a real value"))),
    }
}

fn integer_arg(v: Value, what: &str) -> Result<i64> {
    let r = exact(v, what)?;
    if !is_integer(&r) {
        return Err(Error::domain(format!("{what} must be an integer, got {r}")));
    }
    to_i64(&r).ok_or_else(|| Error::domain(format!("{what} is out of range")))
}

/// `[P]` or `1 - [P]` (recursively) as a predicate.
pub fn as_bracket(e: &Expr) -> Option<Predicate<Expr>> {
    match e {
        Expr::Bracket(p) => Some((**p).clone()),
        Expr::Bin(BinOp::Sub, one, inner) if matches!(&**one, Expr::Num(n) if n.is_one()) => {
            as_bracket(inner).map(Predicate::complement)
        }
        _ => None,
    }
}

/// A guard written as a product of brackets, or `1`.
pub fn guard_predicate(e: &Expr) -> Result<Predicate<Expr>> {
    if matches!(e, Expr::Num(n) if n.is_one()) {
        return Ok(Predicate::True);
    }
    if let Some(p) = as_bracket(e) {
        return Ok(p);
    }
    if let Expr::Bin(BinOp::Mul, a, b) = e {
        let mut parts = Vec::new();
        for side in [a, b] {
            match guard_predicate(side)? {
                Predicate::And(ps) => parts.extend(ps),
                Predicate::True => {}
                p => parts.push(p),
            }
        }
        return Ok(match parts.len() {
            0 => Predicate::True,
            1 => parts.pop().expect("one part"),
            _ => Predicate::And(parts),
        });
    }
    Err(Error::InvalidInput(format!("a sum guard must be a product of brackets, got `{e}`")))
}

/// Flattens a product/quotient chain into `(factor, in_denominator)`.
fn factors<'a>(e: &'a Expr, inverted: bool, out: &mut Vec<(&'a Expr, bool)>) {
    match e {
        Expr::Bin(BinOp::Mul, a, b) => {
            factors(a, inverted, out);
            factors(b, inverted, out);
        }
        Expr::Bin(BinOp::Div, a, b) => {
            factors(a, inverted, out);
            factors(b, !inverted, out);
        }
        _ => out.push((e, inverted)),
    }
}

fn arith(op: BinOp, a: Value, b: Value) -> Result<Value> {
    Ok(match (a, b) {
        (Value::Exact(x), Value::Exact(y)) => Value::Exact(match op {
            BinOp::Add => x + y,
            BinOp::Sub => x - y,
            BinOp::Mul => x * y,
            BinOp::Div => {
                if y.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                x / y
            }
            BinOp::Pow => return power(Value::Exact(x), Value::Exact(y)),
        }),
        (a, b) => {
            let (x, y) = (a.as_f64(), b.as_f64());
            let r = match op {
                BinOp::Add => x + y,
                BinOp::Sub => x - y,
                BinOp::Mul => x * y,
                BinOp::Div => {
                    if y == 0.0 {
                        return Err(Error::DivisionByZero);
                    }
                    x / y
                }
                BinOp::Pow => return power(a, b),
            };
            Value::Real(r)
        }
    })
}

fn finite(x: f64, what: &str) -> Result<Value> {
    if x.is_finite() {
        Ok(Value::Real(x))
    } else {
        Err(Error::domain(format!("{what} is not a finite real")))
    }
}

fn power(base: Value, exp: Value) -> Result<Value> {
    if let (Value::Exact(b), Value::Exact(e)) = (&base, &exp) {
        if is_integer(e) {
            let n = to_i64(e).filter(|n| n.abs() <= MAX_POWER).ok_or(Error::CapExceeded {
                what: "integer exponent",
                requested: e.abs().to_integer().to_u128().unwrap_or(u128::MAX),
                cap: MAX_POWER as u128,
            })?;
            return Ok(Value::Exact(pow_i64(b, n)?));
        }
    }
    let (b, e) = (base.as_f64(), exp.as_f64());
    if b < 0.0 {
        return Err(Error::domain("negative base with a non-integer exponent"));
    }
    finite(b.powf(e), "power")
}

fn factorial_power(kind: FactorialKind, z: Value, n: Value) -> Result<Value> {
    if let (Value::Exact(zr), Value::Exact(nr)) = (&z, &n) {
        if is_integer(nr) {
            let n = to_i64(nr).filter(|n| n.abs() <= MAX_FACTORIAL).ok_or(Error::CapExceeded {
                what: "factorial-power exponent",
                requested: nr.abs().to_integer().to_u128().unwrap_or(u128::MAX),
                cap: MAX_FACTORIAL as u128,
            })?;
            let v = match kind {
                FactorialKind::Falling => falling(zr, n)?,
                FactorialKind::Rising => rising(zr, n)?,
            };
            return Ok(Value::Exact(v));
        }
    }
    finite(factorial_power_real(z.as_f64(), n.as_f64(), kind)?, "factorial power")
}

fn stirling_args(a: Value, b: Value, f: Func) -> Result<(i64, i64)> {
    let n = integer_arg(a, f.name())?;
    let k = integer_arg(b, f.name())?;
    let limits = current_limits();
    let work = (n.unsigned_abs() as u128 + 1) * (k.unsigned_abs() as u128 + 1);
    if work > limits.table_entries as u128 {
        return Err(Error::CapExceeded {
            what: "Stirling number table size",
            requested: work,
            cap: limits.table_entries as u128,
        });
    }
    Ok((n, k))
}

fn call(f: Func, args: Vec<Value>) -> Result<Value> {
    let mut it = args.into_iter();
    let mut next = || it.next().expect("arity checked by the parser");
    match f {
        Func::Cycle | Func::Subset => {
            let (n, k) = stirling_args(next(), next(), f)?;
            let v = if f == Func::Cycle { stirling_cycle(n, k) } else { stirling_subset(n, k) };
            Ok(Value::Exact(BigRational::from_integer(v)))
        }
        Func::Binomial => {
            let top = next();
            let k = integer_arg(next(), "binomial lower index")?;
            if k < 0 {
                return Ok(Value::Exact(BigRational::zero()));
            }
            if k > MAX_FACTORIAL {
                return Err(Error::CapExceeded {
                    what: "binomial lower index",
                    requested: k as u128,
                    cap: MAX_FACTORIAL as u128,
                });
            }
            let kf = BigRational::from_integer(factorial(k)?);
            match factorial_power(FactorialKind::Falling, top, Value::Exact(BigRational::from_integer(k.into())))? {
                Value::Exact(v) => Ok(Value::Exact(v / kf)),
                Value::Real(x) => finite(x / to_f64(&kf), "binomial"),
            }
        }
        Func::Falling => factorial_power(FactorialKind::Falling, next(), next()),
        Func::Rising => factorial_power(FactorialKind::Rising, next(), next()),
        Func::Factorial => {
            let v = next();
            if let Value::Exact(r) = &v {
                if is_integer(r) {
                    let n = integer_arg(v.clone(), "factorial")?;
                    if n > MAX_FACTORIAL {
                        return Err(Error::CapExceeded {
                            what: "factorial argument",
                            requested: n as u128,
                            cap: MAX_FACTORIAL as u128,
                        });
                    }
                    return Ok(Value::Exact(BigRational::from_integer(factorial(n)?)));
                }
            }
            // x! = Gamma(x + 1) = 1^(x rising)
            finite(factorial_power_real(1.0, v.as_f64(), FactorialKind::Rising)?, "factorial")
        }
        Func::Floor | Func::Ceil => match next() {
            Value::Exact(r) => Ok(Value::Exact(BigRational::from_integer(if f == Func::Floor {
                floor_int(&r)
            } else {
                crate::exact::ceil_int(&r)
            }))),
            Value::Real(x) => {
                let y = if f == Func::Floor { x.floor() } else { x.ceil() };
                let r = BigRational::from_float(y).ok_or_else(|| Error::domain("floor/ceil of a non-finite value"))?;
                Ok(Value::Exact(r))
            }
        },
        Func::Ilg => {
            let r = exact(next(), "ilg argument")?;
            if r < BigRational::one() {
                return Err(Error::domain(format!("ilg needs an argument >= 1, got {r}")));
            }
            let bits = floor_int(&r).bits() as i64 - 1;
            Ok(Value::Exact(BigRational::from_integer(BigInt::from(bits))))
        }
        Func::Mod => {
            let a = exact(next(), "mod operand")?;
            let b = exact(next(), "mod modulus")?;
            if b.is_zero() {
                return Err(Error::DivisionByZero);
            }
            let q = BigRational::from_integer(floor_int(&(&a / &b)));
            Ok(Value::Exact(&a - &b * q))
        }
    }
}

fn eval_product(e: &Expr, env: &Assignment) -> Result<Value> {
    let mut fs = Vec::new();
    factors(e, false, &mut fs);
    // brackets first: a zero bracket in the numerator is a strong zero
    for (f, inverted) in &fs {
        if let Some(p) = as_bracket(f) {
            if !p.holds(env)? {
                if *inverted {
                    return Err(Error::DivisionByZero);
                }
                return Ok(Value::Exact(BigRational::zero()));
            }
        }
    }
    let mut acc = Value::Exact(BigRational::one());
    for (f, inverted) in fs {
        if as_bracket(f).is_some() {
            continue;
        }
        let v = eval(f, env)?;
        acc = arith(if inverted { BinOp::Div } else { BinOp::Mul }, acc, v)?;
    }
    Ok(acc)
}

fn eval(e: &Expr, env: &Assignment) -> Result<Value> {
    match e {
        Expr::Num(n) => Ok(Value::Exact(n.clone())),
        Expr::Var(v) => env.get(v).cloned().map(Value::Exact).ok_or_else(|| Error::UnboundVariable(v.clone())),
        Expr::Neg(a) => Ok(match eval(a, env)? {
            Value::Exact(r) => Value::Exact(-r),
            Value::Real(x) => Value::Real(-x),
        }),
        Expr::Bin(BinOp::Mul | BinOp::Div, ..) => eval_product(e, env),
        Expr::Bin(op, a, b) => {
            if let Some(p) = as_bracket(e) {
                return Ok(Value::Exact(if p.holds(env)? { BigRational::one() } else { BigRational::zero() }));
            }
            let x = eval(a, env)?;
            let y = eval(b, env)?;
            arith(*op, x, y)
        }
        Expr::Call(f, args) => {
            let vals = args.iter().map(|a| eval(a, env)).collect::<Result<Vec<_>>>()?;
            call(*f, vals)
        }
        Expr::Bracket(p) => Ok(Value::Exact(if p.holds(env)? { BigRational::one() } else { BigRational::zero() })),
        Expr::Big { op, var, range, guard, body } => {
            let guard = guard_predicate(guard)?;
            let mut outer = env.clone();
            outer.remove(var);
            let term = |point: &Assignment| exact(eval(body, point)?, "summand");
            let spec = SumSpec::new(guard, term).with_env(outer.clone());
            let spec = match range {
                Some((lo, hi)) => {
                    let lo = integer_arg(eval(lo, &outer)?, "range start")?;
                    let hi = integer_arg(eval(hi, &outer)?, "range end")?;
                    spec.over(var, lo, hi)
                }
                None => spec.over_derived(var)?,
            };
            let v = match op {
                BigOp::Sum => sum_brackets(&spec)?,
                BigOp::Prod => prod_brackets(&spec)?,
            };
            Ok(Value::Exact(v))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::syntax::parse;
    use super::*;
    use crate::exact::{rat, rat_int};
    use crate::iverson::assign;

    fn ev(src: &str, bind: &[(&str, i64)]) -> Result<Value> {
        eval_expr(&parse(src).unwrap(), &assign(bind))
    }

    fn exact_of(src: &str, bind: &[(&str, i64)]) -> ExactRational {
        match ev(src, bind).unwrap() {
            Value::Exact(r) => r,
            v => panic!("{src}: expected exact, got {v:?}"),
        }
    }

    #[test]
    fn spot_values() {
        assert_eq!(exact_of("subset(4,2)", &[]), rat_int(7));
        assert_eq!(exact_of("cycle(-2,-4)", &[]), rat_int(7));
        assert_eq!(exact_of("sum(k, [1<=k]*[k<=0], 1/k)", &[]), rat_int(0));
        assert_eq!(exact_of("sum(k, [0<=k]*[k<=n], k*(k-1)*(n-k))", &[("n", 5)]), rat_int(30));
        assert_eq!(exact_of("binomial(-1, 3)", &[]), rat_int(-1));
        assert_eq!(exact_of("binomial(1/2, 2)", &[]), rat(-1, 8));
        assert_eq!(exact_of("falling(1, -2)", &[]), rat(1, 6));
        assert_eq!(exact_of("0^0", &[]), rat_int(1));
        assert_eq!(exact_of("mod(-7, 3) + ilg(8) + floor(-1/2) + ceil(1/2)", &[]), rat_int(2 + 3 - 1 + 1));
        assert_eq!(exact_of("2^-2", &[]), rat(1, 4));
    }

    #[test]
    fn strong_zero() {
        assert_eq!(exact_of("[k != 0] * (1/k)", &[("k", 0)]), rat_int(0));
        assert_eq!(exact_of("(1/k) * [k > 0]", &[("k", 0)]), rat_int(0));
        assert_eq!(exact_of("(1 - [k = 0]) / k", &[("k", 0)]), rat_int(0));
        assert!(matches!(ev("1 / [k = 1]", &[("k", 0)]), Err(Error::DivisionByZero)));
        assert!(matches!(ev("(1/k) + [k > 0]", &[("k", 0)]), Err(Error::DivisionByZero)));
        assert_eq!(exact_of("sum(p, [p prime]*[p <= 10]*[p >= 0], 1/p)", &[]), rat(247, 210));
    }

    #[test]
    fn complement_guard() {
        // 1-[k>n] is [k<=n], which bounds k from above
        assert_eq!(exact_of("sum(k, [k>=0]*(1-[k>n]), k)", &[("n", 4)]), rat_int(10));
    }

    #[test]
    fn sums_and_products() {
        assert_eq!(exact_of("sum(k, [1 <= k < 2^(n+1)], binomial(n, ilg(k)))", &[("n", 3)]), rat_int(27));
        assert_eq!(exact_of("prod(p = 1..n, [p prime]*[p divides n], p)", &[("n", 12)]), rat_int(6));
        assert_eq!(exact_of("sum(j, [1<=j<=n], sum(k, [1<=k<=j], j*k))", &[("n", 4)]), rat_int(65));
        assert_eq!(exact_of("sum(k, [k in {1, 2, 5}], k)", &[]), rat_int(8));
        assert!(matches!(ev("sum(k, [k even], k)", &[]), Err(Error::SupportUnderivable(_))));
        assert!(matches!(ev("sum(k = 0..3, 1, 1)", &[]), Err(Error::SupportViolation { .. })));
        assert!(matches!(ev("sum(k, k, 1)", &[]), Err(Error::InvalidInput(_))));
        assert!(matches!(ev("n + 1", &[]), Err(Error::UnboundVariable(_))));
        assert!(matches!(ev("sum(k = 0..10^7, 1, 0)", &[]), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn deepest_accepted_trees_evaluate_on_a_test_thread_stack() {
        use super::super::syntax::{print, MAX_DEPTH};
        let sources = [
            vec!["1"; MAX_DEPTH].join(" + "),
            vec!["2"; MAX_DEPTH].join(" / "),
            format!("{}1{}", "(".repeat(MAX_DEPTH / 2 - 1), ")".repeat(MAX_DEPTH / 2 - 1)),
            format!("{}1", "-".repeat(MAX_DEPTH - 1)),
            format!("[{}1 < 2]", "not ".repeat(MAX_DEPTH - 3)),
            format!("{}1{}", "binomial(".repeat(MAX_DEPTH / 2 - 1), ", 1)".repeat(MAX_DEPTH / 2 - 1)),
        ];
        for src in &sources {
            let e = parse(src).unwrap_or_else(|err| panic!("{err}"));
            assert!(eval_expr(&e, &Assignment::new()).is_ok());
            assert!(!print(&e).is_empty());
        }
    }

    #[test]
    fn real_values() {
        let Value::Real(x) = ev("rising(10, 0.5)", &[]).unwrap() else { panic!() };
        assert!((x - 3.1230114333906127848).abs() < 1e-13);
        let Value::Real(x) = ev("factorial(0.5) * 2", &[]).unwrap() else { panic!() };
        assert!((x - std::f64::consts::PI.sqrt()).abs() < 1e-13);
        assert!(ev("falling(-2, 0.5)", &[]).is_err());
        assert!(matches!(ev("cycle(0.5, 1)", &[]), Err(Error::Domain(_))));
    }

    #[test]
    fn real_formatting() {
        assert_eq!(format_real(0.1), "0.10000000000000001");
        assert_eq!(format_real(1.0), "1");
        for x in [3.1230114333906128, 1.0 / 3.0, -7.25e-300, 6.02e23] {
            assert_eq!(format_real(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(format_real(-2.5e-10), "-2.5000000000000002e-10");
        assert_eq!(format_real(1e20), "1e+20");
        assert_eq!(format_real(123456.0), "123456");
    }
}
