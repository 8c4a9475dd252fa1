use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{is_integer, rat_int, ExactRational};

/// Values of free variables.
pub type Assignment = BTreeMap<String, ExactRational>;

/// Something that evaluates to an exact rational under an assignment.
pub trait TermEval {
    fn eval(&self, env: &Assignment) -> Result<ExactRational>;
    /// The variable name if the term is a bare variable.
    fn as_var(&self) -> Option<&str>;
    fn mentions(&self, var: &str) -> bool;
}

/// Small arithmetic terms over rationals.
#[derive(Debug, Clone, PartialEq)]
pub enum Term {
    Const(ExactRational),
    Var(String),
    Add(Box<Term>, Box<Term>),
    Sub(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
    Div(Box<Term>, Box<Term>),
    Neg(Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn int(n: i64) -> Term {
        Term::Const(rat_int(n))
    }

    pub fn add(a: Term, b: Term) -> Term {
        Term::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Term, b: Term) -> Term {
        Term::Sub(Box::new(a), Box::new(b))
    }

    pub fn mul(a: Term, b: Term) -> Term {
        Term::Mul(Box::new(a), Box::new(b))
    }

    pub fn div(a: Term, b: Term) -> Term {
        Term::Div(Box::new(a), Box::new(b))
    }
}

impl TermEval for Term {
    fn eval(&self, env: &Assignment) -> Result<ExactRational> {
        Ok(match self {
            Term::Const(c) => c.clone(),
            Term::Var(v) => env.get(v).cloned().ok_or_else(|| Error::UnboundVariable(v.clone()))?,
            Term::Add(a, b) => a.eval(env)? + b.eval(env)?,
            Term::Sub(a, b) => a.eval(env)? - b.eval(env)?,
            Term::Mul(a, b) => a.eval(env)? * b.eval(env)?,
            Term::Div(a, b) => {
                let d = b.eval(env)?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                a.eval(env)? / d
            }
            Term::Neg(a) => -a.eval(env)?,
        })
    }

    fn as_var(&self) -> Option<&str> {
        match self {
            Term::Var(v) => Some(v),
            _ => None,
        }
    }

    fn mentions(&self, var: &str) -> bool {
        match self {
            Term::Const(_) => false,
            Term::Var(v) => v == var,
            Term::Add(a, b) | Term::Sub(a, b) | Term::Mul(a, b) | Term::Div(a, b) => a.mentions(var) || b.mentions(var),
            Term::Neg(a) => a.mentions(var),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Const(c) => write!(f, "{c}"),
            Term::Var(v) => f.write_str(v),
            Term::Add(a, b) => write!(f, "({a} + {b})"),
            Term::Sub(a, b) => write!(f, "({a} - {b})"),
            Term::Mul(a, b) => write!(f, "({a} * {b})"),
            Term::Div(a, b) => write!(f, "({a} / {b})"),
            Term::Neg(a) => write!(f, "-{a}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpOp {
    Lt,
    Le,
    Eq,
    Ne,
    Ge,
    Gt,
}

impl CmpOp {
    pub fn holds(self, a: &ExactRational, b: &ExactRational) -> bool {
        match self {
            CmpOp::Lt => a < b,
            CmpOp::Le => a <= b,
            CmpOp::Eq => a == b,
            CmpOp::Ne => a != b,
            CmpOp::Ge => a >= b,
            CmpOp::Gt => a > b,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            CmpOp::Lt => "<",
            CmpOp::Le => "<=",
            CmpOp::Eq => "=",
            CmpOp::Ne => "!=",
            CmpOp::Ge => ">=",
            CmpOp::Gt => ">",
        }
    }

    /// The operator whose truth value is always the opposite.
    pub fn negated(self) -> CmpOp {
        match self {
            CmpOp::Lt => CmpOp::Ge,
            CmpOp::Le => CmpOp::Gt,
            CmpOp::Eq => CmpOp::Ne,
            CmpOp::Ne => CmpOp::Eq,
            CmpOp::Ge => CmpOp::Lt,
            CmpOp::Gt => CmpOp::Le,
        }
    }

    /// The operator with its operands swapped.
    pub fn flipped(self) -> CmpOp {
        match self {
            CmpOp::Lt => CmpOp::Gt,
            CmpOp::Le => CmpOp::Ge,
            CmpOp::Ge => CmpOp::Le,
            CmpOp::Gt => CmpOp::Lt,
            other => other,
        }
    }
}

/// A decidable statement about integer (or rational) variables.
///
/// Arithmetic predicates (`Divides`, `Prime`, `Even`, `Odd`) are false on
/// non-integers.
#[derive(Debug, Clone, PartialEq)]
pub enum Predicate<T = Term> {
    True,
    False,
    /// `t0 op0 t1 op1 t2 ...`, true when every adjacent comparison holds.
    Cmp(Vec<T>, Vec<CmpOp>),
    /// `d` divides `m`; `0` divides only `0`.
    Divides(T, T),
    Prime(T),
    Even(T),
    Odd(T),
    In(T, BTreeSet<BigInt>),
    /// `lo <= t <= hi`.
    InRange(T, T, T),
    And(Vec<Predicate<T>>),
    Or(Vec<Predicate<T>>),
    Not(Box<Predicate<T>>),
}

impl<T> Predicate<T> {
    pub fn cmp(a: T, op: CmpOp, b: T) -> Self {
        Predicate::Cmp(vec![a, b], vec![op])
    }

    /// `1 - [P]` rewritten as `[not P]`; double negations cancel.
    pub fn complement(self) -> Self {
        match self {
            Predicate::Not(p) => *p,
            Predicate::True => Predicate::False,
            Predicate::False => Predicate::True,
            p => Predicate::Not(Box::new(p)),
        }
    }
}

fn as_integer(r: &ExactRational) -> Option<BigInt> {
    is_integer(r).then(|| r.to_integer())
}

/// Trial division.
pub fn is_prime(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    if let Some(n) = n.to_u64() {
        if n < 4 {
            return true;
        }
        if n % 2 == 0 {
            return false;
        }
        let mut d = 3u64;
        while d.saturating_mul(d) <= n {
            if n % d == 0 {
                return false;
            }
            d += 2;
        }
        return true;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return false;
        }
        d += 1;
    }
    true
}

impl<T: TermEval> Predicate<T> {
    pub fn holds(&self, env: &Assignment) -> Result<bool> {
        Ok(match self {
            Predicate::True => true,
            Predicate::False => false,
            Predicate::Cmp(terms, ops) => {
                let vals = terms.iter().map(|t| t.eval(env)).collect::<Result<Vec<_>>>()?;
                ops.iter().enumerate().all(|(i, op)| op.holds(&vals[i], &vals[i + 1]))
            }
            Predicate::Divides(d, m) => {
                let (d, m) = (d.eval(env)?, m.eval(env)?);
                match (as_integer(&d), as_integer(&m)) {
                    (Some(d), Some(m)) if d.is_zero() => m.is_zero(),
                    (Some(d), Some(m)) => m.is_multiple_of(&d),
                    _ => false,
                }
            }
            Predicate::Prime(t) => as_integer(&t.eval(env)?).is_some_and(|n| is_prime(&n)),
            Predicate::Even(t) => as_integer(&t.eval(env)?).is_some_and(|n| n.is_even()),
            Predicate::Odd(t) => as_integer(&t.eval(env)?).is_some_and(|n| n.is_odd()),
            Predicate::In(t, set) => as_integer(&t.eval(env)?).is_some_and(|n| set.contains(&n)),
            Predicate::InRange(t, lo, hi) => {
                let v = t.eval(env)?;
                lo.eval(env)? <= v && v <= hi.eval(env)?
            }
            Predicate::And(ps) => {
                for p in ps {
                    if !p.holds(env)? {
                        return Ok(false);
                    }
                }
                true
            }
            Predicate::Or(ps) => {
                for p in ps {
                    if p.holds(env)? {
                        return Ok(true);
                    }
                }
                false
            }
            Predicate::Not(p) => !p.holds(env)?,
        })
    }
}

/// `[P]` as an exact 0 or 1.
pub fn bracket<T: TermEval>(p: &Predicate<T>, env: &Assignment) -> Result<ExactRational> {
    Ok(if p.holds(env)? { BigRational::one() } else { BigRational::zero() })
}

/// `[P] * term` with a strong zero: when `P` is false the term is never
/// evaluated, so its errors cannot surface.
pub fn guarded_term<T, F>(p: &Predicate<T>, term: F, env: &Assignment) -> Result<ExactRational>
where
    T: TermEval,
    F: FnOnce(&Assignment) -> Result<ExactRational>,
{
    if p.holds(env)? {
        term(env)
    } else {
        Ok(BigRational::zero())
    }
}

impl<T: fmt::Display> fmt::Display for Predicate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::True => f.write_str("true"),
            Predicate::False => f.write_str("false"),
            Predicate::Cmp(ts, ops) => {
                write!(f, "{}", ts[0])?;
                for (op, t) in ops.iter().zip(&ts[1..]) {
                    write!(f, " {} {t}", op.symbol())?;
                }
                Ok(())
            }
            Predicate::Divides(d, m) => write!(f, "{d} divides {m}"),
            Predicate::Prime(t) => write!(f, "{t} prime"),
            Predicate::Even(t) => write!(f, "{t} even"),
            Predicate::Odd(t) => write!(f, "{t} odd"),
            Predicate::In(t, s) => {
                let items: Vec<String> = s.iter().map(ToString::to_string).collect();
                write!(f, "{t} in {{{}}}", items.join(", "))
            }
            Predicate::InRange(t, lo, hi) => write!(f, "{lo} <= {t} <= {hi}"),
            Predicate::And(ps) => join(f, ps, " and "),
            Predicate::Or(ps) => join(f, ps, " or "),
            Predicate::Not(p) => write!(f, "not ({p})"),
        }
    }
}

fn join<T: fmt::Display>(f: &mut fmt::Formatter<'_>, ps: &[Predicate<T>], sep: &str) -> fmt::Result {
    for (i, p) in ps.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "({p})")?;
    }
    Ok(())
}

/// Assignment from `(name, integer)` pairs.
pub fn assign(pairs: &[(&str, i64)]) -> Assignment {
    pairs.iter().map(|(k, v)| (k.to_string(), rat_int(*v))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cell::Cell;

    #[test]
    fn spot_brackets() {
        let e = assign(&[("x", -2), ("p", 7)]);
        let eq: Predicate = Predicate::cmp(Term::int(3), CmpOp::Eq, Term::int(3));
        assert_eq!(bracket(&eq, &e).unwrap(), rat_int(1));
        let pos: Predicate = Predicate::cmp(Term::var("x"), CmpOp::Gt, Term::int(0));
        assert_eq!(bracket(&pos, &e).unwrap(), rat_int(0));
        let prime: Predicate = Predicate::Prime(Term::var("p"));
        assert_eq!(bracket(&prime, &e).unwrap(), rat_int(1));
        let unbound: Predicate = Predicate::Even(Term::var("q"));
        assert!(matches!(bracket(&unbound, &e), Err(Error::UnboundVariable(_))));
    }

    #[test]
    fn strong_zero_skips_term() {
        let calls = Cell::new(0);
        let e = assign(&[("k", 3)]);
        let never: Predicate = Predicate::False;
        let v = guarded_term(
            &never,
            |_| {
                calls.set(calls.get() + 1);
                Err(Error::DivisionByZero)
            },
            &e,
        );
        assert_eq!(v.unwrap(), rat_int(0));
        assert_eq!(calls.get(), 0);
        let nonneg: Predicate = Predicate::cmp(Term::var("k"), CmpOp::Ge, Term::int(0));
        let sq = guarded_term(&nonneg, |env| Ok(&env["k"] * &env["k"]), &e).unwrap();
        assert_eq!(sq, rat_int(9));
        assert_eq!(guarded_term(&Predicate::<Term>::True, |_| Ok(rat_int(5)), &e).unwrap(), rat_int(5));
    }

    #[test]
    fn chains_and_connectives() {
        let p: Predicate = Predicate::Cmp(
            vec![Term::int(1), Term::var("k"), Term::var("j"), Term::int(5)],
            vec![CmpOp::Le, CmpOp::Le, CmpOp::Le],
        );
        assert!(p.holds(&assign(&[("k", 2), ("j", 4)])).unwrap());
        assert!(!p.holds(&assign(&[("k", 3), ("j", 2)])).unwrap());
        let not_p = p.clone().complement();
        assert_eq!(not_p.clone().complement(), p);
        assert!(not_p.holds(&assign(&[("k", 3), ("j", 2)])).unwrap());
    }

    #[test]
    fn divisibility() {
        let d: Predicate = Predicate::Divides(Term::var("x"), Term::var("m"));
        assert!(d.holds(&assign(&[("x", 3), ("m", 6)])).unwrap());
        assert!(!d.holds(&assign(&[("x", 3), ("m", 7)])).unwrap());
        assert!(d.holds(&assign(&[("x", -3), ("m", 6)])).unwrap());
        assert!(d.holds(&assign(&[("x", 0), ("m", 0)])).unwrap());
        assert!(!d.holds(&assign(&[("x", 0), ("m", 2)])).unwrap());
        assert!(d.holds(&assign(&[("x", 5), ("m", 0)])).unwrap());
    }

    #[test]
    fn primes() {
        let small: Vec<i64> = (0..30).filter(|&n| is_prime(&BigInt::from(n))).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(!is_prime(&BigInt::from(-7)));
    }
}
