//! The expression language used by `exactcomb eval`: parsing, canonical
//! printing and evaluation with strong-zero brackets.
//!
//! Run with `cargo run --example expression_language`.

use exactcomb::cli::{eval_expr, parse, print};
use exactcomb::exact::rat_int;
use exactcomb::iverson::Assignment;

fn main() {
    let mut env = Assignment::new();
    env.insert("n".into(), rat_int(6));
    let programs = [
        "subset(4,2)",
        "cycle(-2,-4)",
        "sum(k, [0<=k]*[k<=n], k*(k-1)*(n-k))",
        "sum(k, [1<=k]*[k<=0], 1/k)",
        "sum(p, [p prime]*[0 <= p <= 30], 1/p)",
        "prod(p = 1..60, [p prime]*[p divides 60], p)",
        "sum(k, [k >= 0]*(1 - [k > n]), binomial(n, k))",
        "rising(10, 0.5)",
        "factorial(1/2)^2",
        "sum(k,",
        "sum(k, [k even], k)",
    ];
    for src in programs {
        match parse(src) {
            Err(e) => println!("{src}\n    parse error: {e}"),
            Ok(e) => match eval_expr(&e, &env) {
                Ok(v) => println!("{src}\n    canonical: {}\n    value: {v}", print(&e)),
                Err(err) => println!("{src}\n    error: {err}"),
            },
        }
    }
}
