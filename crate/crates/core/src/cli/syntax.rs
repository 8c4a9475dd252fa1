//! Lexer, parser and canonical printer for the expression language.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' unary)?
//! primary := number | ident | ident '(' args ')' | '(' expr ')' | '[' pred ']'
//!          | ('sum' | 'prod') '(' ident ('=' expr '..' expr)? ',' expr ',' expr ')'
//! pred    := conj ('or' conj)*
//! conj    := neg ('and' neg)*
//! neg     := 'not' neg | atom
//! atom    := 'true' | 'false' | '(' pred ')'
//!          | expr (cmp expr)+ | expr 'divides' expr | expr ('prime' | 'even' | 'odd')
//!          | expr 'in' '{' integer (',' integer)* '}'
//! ```
//!
//! Printing yields a canonical form with `parse(print(e)) == e`. Trees deeper
//! than [`MAX_DEPTH`] are rejected at parse time.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::iverson::{CmpOp, Predicate};

pub const MAX_SOURCE_BYTES: usize = 64 * 1024;

/// Bound on the depth of a parsed tree, counting both nesting and the length
/// of operator chains, so that printing and evaluation recurse a bounded
/// number of times.
pub const MAX_DEPTH: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Pow => "^",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Binomial,
    Cycle,
    Subset,
    Falling,
    Rising,
    Factorial,
    Floor,
    Ceil,
    Ilg,
    Mod,
}

impl Func {
    pub const ALL: [Func; 10] = [
        Func::Binomial,
        Func::Cycle,
        Func::Subset,
        Func::Falling,
        Func::Rising,
        Func::Factorial,
        Func::Floor,
        Func::Ceil,
        Func::Ilg,
        Func::Mod,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Binomial => "binomial",
            Func::Cycle => "cycle",
            Func::Subset => "subset",
            Func::Falling => "falling",
            Func::Rising => "rising",
            Func::Factorial => "factorial",
            Func::Floor => "floor",
            Func::Ceil => "ceil",
            Func::Ilg => "ilg",
            Func::Mod => "mod",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Factorial | Func::Floor | Func::Ceil | Func::Ilg => 1,
            _ => 2,
        }
    }

    fn from_name(s: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BigOp {
    Sum,
    Prod,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    /// A nonnegative literal; decimals are stored exactly.
    Num(BigRational),
    Var(String),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
    Bracket(Box<Predicate<Expr>>),
    Big {
        op: BigOp,
        var: String,
        range: Option<(Box<Expr>, Box<Expr>)>,
        guard: Box<Expr>,
        body: Box<Expr>,
    },
}

impl Expr {
    pub fn int(n: i64) -> Expr {
        if n < 0 {
            Expr::Neg(Box::new(Expr::Num(BigRational::from_integer((-n).into()))))
        } else {
            Expr::Num(BigRational::from_integer(n.into()))
        }
    }

    pub fn var(name: &str) -> Expr {
        Expr::Var(name.to_string())
    }

    pub fn bin(op: BinOp, a: Expr, b: Expr) -> Expr {
        Expr::Bin(op, Box::new(a), Box::new(b))
    }
}

const RESERVED: &[&str] =
    &["sum", "prod", "and", "or", "not", "true", "false", "divides", "prime", "even", "odd", "in"];

// ---------------------------------------------------------------- lexer

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Sym(&'static str),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Sym(s) => format!("`{s}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

/// A syntax error at a 1-based line and column (in characters).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
    /// Token descriptions that would have been accepted here.
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)?;
        if !self.expected.is_empty() {
            write!(f, "; expected one of: {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

const SYMBOLS: &[&str] =
    &["..", "<=", ">=", "==", "!=", "(", ")", "[", "]", "{", "}", ",", "+", "-", "*", "/", "^", "<", ">", "="];

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    let err = |line, col, message: String| ParseError { line, col, message, expected: Vec::new() };
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start_col = col;
        if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            let int_part: String = chars[i..j].iter().collect();
            let mut value = BigRational::from_integer(int_part.parse::<BigInt>().expect("digits"));
            if j + 1 < chars.len() && chars[j] == '.' && chars[j + 1].is_ascii_digit() {
                let mut m = j + 1;
                while m < chars.len() && chars[m].is_ascii_digit() {
                    m += 1;
                }
                let frac: String = chars[j + 1..m].iter().collect();
                let scale = BigInt::from(10u32).pow(frac.len() as u32);
                value += BigRational::new(frac.parse::<BigInt>().expect("digits"), scale);
                j = m;
            }
            out.push(Spanned { tok: Tok::Num(value), line, col: start_col });
            col += j - i;
            i = j;
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut j = i;
            while j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_') {
                j += 1;
            }
            out.push(Spanned { tok: Tok::Ident(chars[i..j].iter().collect()), line, col: start_col });
            col += j - i;
            i = j;
            continue;
        }
        let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
        match SYMBOLS.iter().find(|s| rest.starts_with(**s)) {
            Some(s) => {
                out.push(Spanned { tok: Tok::Sym(s), line, col: start_col });
                i += s.len();
                col += s.len();
            }
            None => return Err(err(line, col, format!("unexpected character `{c}`"))),
        }
    }
    out.push(Spanned { tok: Tok::Eof, line, col });
    Ok(out)
}

// ---------------------------------------------------------------- parser

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    /// Furthest position at which a token was rejected, with what was wanted.
    far: usize,
    expected: BTreeSet<String>,
    depth: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn note(&mut self, what: &str) {
        if self.pos > self.far {
            self.far = self.pos;
            self.expected.clear();
        }
        if self.pos == self.far {
            self.expected.insert(what.to_string());
        }
    }

    fn eat_sym(&mut self, s: &str) -> bool {
        if matches!(self.peek(), Tok::Sym(t) if *t == s) {
            self.pos += 1;
            true
        } else {
            self.note(&format!("`{s}`"));
            false
        }
    }

    fn eat_kw(&mut self, kw: &str) -> bool {
        if matches!(self.peek(), Tok::Ident(t) if t == kw) {
            self.pos += 1;
            true
        } else {
            self.note(&format!("`{kw}`"));
            false
        }
    }

    fn error(&self) -> ParseError {
        let at = &self.toks[self.far.min(self.toks.len() - 1)];
        ParseError {
            line: at.line,
            col: at.col,
            message: format!("unexpected {}", at.tok.describe()),
            expected: self.expected.iter().cloned().collect(),
        }
    }

    fn descend(&mut self) -> PResult<()> {
        self.depth += 1;
        if self.depth <= MAX_DEPTH {
            return Ok(());
        }
        let at = &self.toks[self.pos];
        Err(ParseError {
            line: at.line,
            col: at.col,
            message: format!("expression nested deeper than {MAX_DEPTH} levels"),
            expected: Vec::new(),
        })
    }

    fn expect_sym(&mut self, s: &str) -> PResult<()> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            Err(self.error())
        }
    }

    fn ident(&mut self) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(s) if !RESERVED.contains(&s.as_str()) => {
                self.pos += 1;
                Ok(s)
            }
            _ => {
                self.note("identifier");
                Err(self.error())
            }
        }
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        let depth = self.depth;
        loop {
            let op = if self.eat_sym("+") {
                BinOp::Add
            } else if self.eat_sym("-") {
                BinOp::Sub
            } else {
                self.depth = depth;
                return Ok(lhs);
            };
            self.descend()?;
            lhs = Expr::bin(op, lhs, self.term()?);
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.unary()?;
        let depth = self.depth;
        loop {
            let op = if self.eat_sym("*") {
                BinOp::Mul
            } else if self.eat_sym("/") {
                BinOp::Div
            } else {
                self.depth = depth;
                return Ok(lhs);
            };
            self.descend()?;
            lhs = Expr::bin(op, lhs, self.unary()?);
        }
    }

    fn unary(&mut self) -> PResult<Expr> {
        self.descend()?;
        let e = self.unary_inner();
        self.depth -= 1;
        e
    }

    fn unary_inner(&mut self) -> PResult<Expr> {
        if self.eat_sym("-") {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.primary()?;
        if self.eat_sym("^") {
            return Ok(Expr::bin(BinOp::Pow, base, self.unary()?));
        }
        Ok(base)
    }

    fn primary(&mut self) -> PResult<Expr> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Tok::Sym("(") => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect_sym(")")?;
                Ok(e)
            }
            Tok::Sym("[") => {
                self.pos += 1;
                let p = self.pred()?;
                self.expect_sym("]")?;
                Ok(Expr::Bracket(Box::new(p)))
            }
            Tok::Ident(name) if name == "sum" || name == "prod" => {
                self.pos += 1;
                let op = if name == "sum" { BigOp::Sum } else { BigOp::Prod };
                self.expect_sym("(")?;
                let var = self.ident()?;
                let range = if self.eat_sym("=") {
                    let lo = self.expr()?;
                    self.expect_sym("..")?;
                    let hi = self.expr()?;
                    Some((Box::new(lo), Box::new(hi)))
                } else {
                    None
                };
                self.expect_sym(",")?;
                let guard = self.expr()?;
                self.expect_sym(",")?;
                let body = self.expr()?;
                self.expect_sym(")")?;
                Ok(Expr::Big { op, var, range, guard: Box::new(guard), body: Box::new(body) })
            }
            Tok::Ident(name) if !RESERVED.contains(&name.as_str()) => {
                self.pos += 1;
                if !self.eat_sym("(") {
                    return Ok(Expr::Var(name));
                }
                let func = Func::from_name(&name).ok_or_else(|| {
                    let at = &self.toks[self.pos - 2];
                    ParseError {
                        line: at.line,
                        col: at.col,
                        message: format!("unknown function `{name}`"),
                        expected: Func::ALL.iter().map(|f| format!("`{}`", f.name())).collect(),
                    }
                })?;
                let mut args = vec![self.expr()?];
                while self.eat_sym(",") {
                    args.push(self.expr()?);
                }
                self.expect_sym(")")?;
                if args.len() != func.arity() {
                    let at = &self.toks[self.pos - 1];
                    return Err(ParseError {
                        line: at.line,
                        col: at.col,
                        message: format!("`{}` takes {} argument(s), got {}", func.name(), func.arity(), args.len()),
                        expected: Vec::new(),
                    });
                }
                Ok(Expr::Call(func, args))
            }
            _ => {
                for what in ["number", "identifier", "`(`", "`[`", "`-`", "`sum`", "`prod`"] {
                    self.note(what);
                }
                Err(self.error())
            }
        }
    }

    fn pred(&mut self) -> PResult<Predicate<Expr>> {
        let mut parts = vec![self.conj()?];
        while self.eat_kw("or") {
            parts.push(self.conj()?);
        }
        Ok(if parts.len() == 1 { parts.pop().expect("one part") } else { Predicate::Or(parts) })
    }

    fn conj(&mut self) -> PResult<Predicate<Expr>> {
        let mut parts = vec![self.neg()?];
        while self.eat_kw("and") {
            parts.push(self.neg()?);
        }
        Ok(if parts.len() == 1 { parts.pop().expect("one part") } else { Predicate::And(parts) })
    }

    fn neg(&mut self) -> PResult<Predicate<Expr>> {
        self.descend()?;
        let p = if self.eat_kw("not") { self.neg().map(|p| Predicate::Not(Box::new(p))) } else { self.atom() };
        self.depth -= 1;
        p
    }

    fn at_expr_continuation(&self) -> bool {
        match self.peek() {
            Tok::Sym(s) => ["<", "<=", "=", "==", "!=", ">=", ">", "+", "-", "*", "/", "^"].contains(s),
            Tok::Ident(s) => ["divides", "prime", "even", "odd", "in"].contains(&s.as_str()),
            _ => false,
        }
    }

    fn atom(&mut self) -> PResult<Predicate<Expr>> {
        if self.eat_kw("true") {
            return Ok(Predicate::True);
        }
        if self.eat_kw("false") {
            return Ok(Predicate::False);
        }
        if matches!(self.peek(), Tok::Sym("(")) {
            // `(` opens either a nested predicate or an arithmetic operand
            let (pos, depth) = (self.pos, self.depth);
            self.pos += 1;
            if let Ok(p) = self.pred() {
                if self.eat_sym(")") && !self.at_expr_continuation() {
                    return Ok(p);
                }
            }
            (self.pos, self.depth) = (pos, depth);
        }
        let lhs = self.expr()?;
        if self.eat_kw("divides") {
            return Ok(Predicate::Divides(lhs, self.expr()?));
        }
        if self.eat_kw("prime") {
            return Ok(Predicate::Prime(lhs));
        }
        if self.eat_kw("even") {
            return Ok(Predicate::Even(lhs));
        }
        if self.eat_kw("odd") {
            return Ok(Predicate::Odd(lhs));
        }
        if self.eat_kw("in") {
            self.expect_sym("{")?;
            let mut set = BTreeSet::new();
            if !self.eat_sym("}") {
                loop {
                    let neg = self.eat_sym("-");
                    match self.peek().clone() {
                        Tok::Num(n) if n.is_integer() => {
                            self.pos += 1;
                            let v = n.to_integer();
                            set.insert(if neg { -v } else { v });
                        }
                        _ => {
                            self.note("integer");
                            return Err(self.error());
                        }
                    }
                    if self.eat_sym("}") {
                        break;
                    }
                    self.expect_sym(",")?;
                }
            }
            return Ok(Predicate::In(lhs, set));
        }
        let mut terms = vec![lhs];
        let mut ops = Vec::new();
        while let Some(op) = self.cmp_op() {
            ops.push(op);
            terms.push(self.expr()?);
        }
        if ops.is_empty() {
            for what in ["`divides`", "`prime`", "`even`", "`odd`", "`in`"] {
                self.note(what);
            }
            return Err(self.error());
        }
        Ok(Predicate::Cmp(terms, ops))
    }

    fn cmp_op(&mut self) -> Option<CmpOp> {
        for (s, op) in [
            ("<=", CmpOp::Le),
            (">=", CmpOp::Ge),
            ("==", CmpOp::Eq),
            ("!=", CmpOp::Ne),
            ("<", CmpOp::Lt),
            (">", CmpOp::Gt),
            ("=", CmpOp::Eq),
        ] {
            if self.eat_sym(s) {
                return Some(op);
            }
        }
        None
    }
}

/// Parses one expression. Input longer than 64 KiB is rejected.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    if text.len() > MAX_SOURCE_BYTES {
        return Err(ParseError {
            line: 1,
            col: 1,
            message: format!("input of {} bytes exceeds the {MAX_SOURCE_BYTES}-byte limit", text.len()),
            expected: Vec::new(),
        });
    }
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, far: 0, expected: BTreeSet::new(), depth: 0 };
    let e = p.expr()?;
    if !matches!(p.peek(), Tok::Eof) {
        p.note("end of input");
        return Err(p.error());
    }
    Ok(e)
}

// ---------------------------------------------------------------- printer

const PREC_ADD: u8 = 1;
const PREC_MUL: u8 = 2;
const PREC_UNARY: u8 = 3;
const PREC_ATOM: u8 = 4;

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Bin(BinOp::Add | BinOp::Sub, ..) => PREC_ADD,
        Expr::Bin(BinOp::Mul | BinOp::Div, ..) => PREC_MUL,
        Expr::Neg(_) | Expr::Bin(BinOp::Pow, ..) => PREC_UNARY,
        _ => PREC_ATOM,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if prec(e) < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Exact decimal text of a nonnegative rational whose denominator has only
/// the factors 2 and 5, else `None`.
fn decimal_text(r: &BigRational) -> Option<String> {
    let mut d = r.denom().clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let mut digits = 0u32;
    let mut scale = BigInt::one();
    while !d.is_one() {
        if d.is_multiple_of(&two) {
            d /= &two;
        } else if d.is_multiple_of(&five) {
            d /= &five;
        } else {
            return None;
        }
        digits += 1;
        scale *= 10;
    }
    if digits == 0 {
        return Some(r.numer().to_string());
    }
    // at most `digits` decimals are needed; 10^digits is a multiple of d
    let scaled = (r * BigRational::from_integer(scale.clone())).to_integer();
    let (whole, frac) = scaled.div_rem(&scale);
    let frac = format!("{:0>width$}", frac.to_string(), width = digits as usize);
    Some(format!("{whole}.{}", frac.trim_end_matches('0')))
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(n) => match decimal_text(n) {
                Some(s) if !n.is_negative() => f.write_str(&s),
                _ => write!(f, "({}/{})", n.numer(), n.denom()),
            },
            Expr::Var(v) => f.write_str(v),
            Expr::Neg(a) => {
                f.write_str("-")?;
                write_at(f, a, PREC_UNARY)
            }
            Expr::Bin(BinOp::Pow, a, b) => {
                write_at(f, a, PREC_ATOM)?;
                f.write_str("^")?;
                write_at(f, b, PREC_UNARY)
            }
            Expr::Bin(op, a, b) => {
                let p = prec(self);
                write_at(f, a, p)?;
                write!(f, " {} ", op.symbol())?;
                write_at(f, b, p + 1)
            }
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            Expr::Bracket(p) => {
                f.write_str("[")?;
                write_pred(f, p)?;
                f.write_str("]")
            }
            Expr::Big { op, var, range, guard, body } => {
                f.write_str(if *op == BigOp::Sum { "sum(" } else { "prod(" })?;
                f.write_str(var)?;
                if let Some((lo, hi)) = range {
                    write!(f, " = {lo}..{hi}")?;
                }
                write!(f, ", {guard}, {body})")
            }
        }
    }
}

fn write_pred(f: &mut fmt::Formatter<'_>, p: &Predicate<Expr>) -> fmt::Result {
    let nested = |f: &mut fmt::Formatter<'_>, q: &Predicate<Expr>| -> fmt::Result {
        f.write_str("(")?;
        write_pred(f, q)?;
        f.write_str(")")
    };
    match p {
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
        Predicate::And(ps) | Predicate::Or(ps) => {
            let sep = if matches!(p, Predicate::And(_)) { " and " } else { " or " };
            for (i, q) in ps.iter().enumerate() {
                if i > 0 {
                    f.write_str(sep)?;
                }
                match q {
                    Predicate::And(_) | Predicate::Or(_) => nested(f, q)?,
                    _ => write_pred(f, q)?,
                }
            }
            Ok(())
        }
        Predicate::Not(q) => {
            f.write_str("not ")?;
            match **q {
                Predicate::True | Predicate::False => write_pred(f, q),
                _ => nested(f, q),
            }
        }
    }
}

/// The canonical text of `e`.
pub fn print(e: &Expr) -> String {
    e.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip(src: &str) -> String {
        let e = parse(src).unwrap_or_else(|err| panic!("{src}: {err}"));
        let text = print(&e);
        assert_eq!(parse(&text).unwrap(), e, "{src} -> {text}");
        text
    }

    #[test]
    fn structure() {
        assert!(matches!(parse("cycle(4,2)").unwrap(), Expr::Call(Func::Cycle, _)));
        let e = parse("sum(k, [0<=k]*[k<=n], k*(k-1)*(n-k))").unwrap();
        let Expr::Big { op: BigOp::Sum, guard, range: None, .. } = e else { panic!() };
        assert!(matches!(*guard, Expr::Bin(BinOp::Mul, ..)));
        assert_eq!(parse("0.25").unwrap(), Expr::Num(BigRational::new(1.into(), 4.into())));
        assert_eq!(parse("1..").unwrap_err().col, 2);
    }

    #[test]
    fn diagnostics() {
        let e = parse("sum(k,").unwrap_err();
        assert_eq!((e.line, e.col), (1, 7));
        assert!(e.expected.contains(&"`[`".to_string()), "{e}");
        let e = parse("1 +\n  * 2").unwrap_err();
        assert_eq!((e.line, e.col), (2, 3));
        let e = parse("foo(1)").unwrap_err();
        assert!(e.message.contains("unknown function"));
        assert!(parse("cycle(1)").is_err());
        assert!(parse("[k]").is_err());
        assert!(parse("2 $ 3").is_err());
        assert!(parse("sum(and, 1, 1)").is_err());
    }

    #[test]
    fn depth_is_bounded() {
        let nested = |d: usize| format!("{}1{}", "(".repeat(d), ")".repeat(d));
        assert!(parse(&nested(MAX_DEPTH / 2 - 1)).is_ok());
        assert!(parse(&nested(5000)).unwrap_err().message.contains("nested deeper"));
        let chain = |n: usize| vec!["1"; n].join(" + ");
        assert!(parse(&chain(MAX_DEPTH)).is_ok());
        assert!(parse(&chain(20_000)).is_err());
        assert!(parse(&format!("{}1", "-".repeat(20_000))).is_err());
        assert!(parse(&format!("[{}1 < 2]", "not ".repeat(20_000))).is_err());
        let preds = format!("[{}1 < 2{}]", "(".repeat(40), ")".repeat(40));
        assert!(parse(&preds).is_ok());
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(round_trip("1-(2-3)"), "1 - (2 - 3)");
        assert_eq!(round_trip("(1-2)-3"), "1 - 2 - 3");
        assert_eq!(round_trip("-x^2"), "-x^2");
        assert_eq!(round_trip("(-x)^2"), "(-x)^2");
        assert_eq!(round_trip("2^3^2"), "2^3^2");
        assert_eq!(round_trip("(2^3)^2"), "(2^3)^2");
        assert_eq!(round_trip("a/(b*c)"), "a / (b * c)");
        assert_eq!(round_trip("0.50"), "0.5");
        assert_eq!(round_trip("[(k<3) and not (k prime or k even)]"), "[k < 3 and not (k prime or k even)]");
        assert_eq!(round_trip("[(k+1)*2 <= 5 < n]"), "[(k + 1) * 2 <= 5 < n]");
        assert_eq!(round_trip("[((a<b) and (b<c)) and c<d]"), "[(a < b and b < c) and c < d]");
        assert_eq!(round_trip("[k in {3,-1}]"), "[k in {-1, 3}]");
        assert_eq!(
            round_trip("prod(p = 1..n, [p prime]*[p divides n], p)"),
            "prod(p = 1..n, [p prime] * [p divides n], p)"
        );
        assert_eq!(round_trip("[not true]"), "[not true]");
        round_trip("sum(j, [1<=j<=n], sum(k, [1<=k<=j], j*k))");
    }
}
