//! Bracket sums with strong zeros and derived supports.
//!
//! Run with `cargo run --example iverson_sums`.

use exactcomb::exact::rat_int;
use exactcomb::iverson::{
    assign, derive_support, guarded_term, sum_brackets, verify_identity, CmpOp, IdentityParams, Predicate, SumSpec,
    Term, IDENTITIES,
};

fn main() -> exactcomb::Result<()> {
    // [k != 0] / k at k = 0: the bracket is false, so 1/k is never formed
    let nonzero: Predicate = Predicate::cmp(Term::var("k"), CmpOp::Ne, Term::int(0));
    let v = guarded_term(
        &nonzero,
        |e| exactcomb::iverson::TermEval::eval(&Term::div(Term::int(1), Term::var("k")), e),
        &assign(&[("k", 0)]),
    )?;
    println!("[k != 0]/k at k = 0 -> {v}");

    // sum_k k(k-1)(n-k) [0 <= k <= n] with the range read off the guard
    let n = 10;
    let guard: Predicate = Predicate::Cmp(vec![Term::int(0), Term::var("k"), Term::int(n)], vec![CmpOp::Le, CmpOp::Le]);
    println!("support of k in {guard}: {:?}", derive_support(&guard, "k", &Default::default()));
    let spec = SumSpec::new(guard, |e| {
        let k = &e["k"];
        Ok(k * (k - rat_int(1)) * (rat_int(n) - k))
    })
    .over_derived("k")?;
    println!("sum_k k(k-1)({n}-k) = {}", sum_brackets(&spec)?);

    println!("\ncatalog, default parameters:");
    for (id, statement) in IDENTITIES {
        let r = verify_identity(id, &IdentityParams::new())?;
        println!("  identity {id}: {statement}\n        lhs = {}, rhs = {}, holds = {}", r.lhs, r.rhs, r.holds);
    }

    let custom = IdentityParams::parse(&["A=1,2,3,4", "B=3,4,5", "f=1,0,1"])?;
    let r = verify_identity("1.9", &custom)?;
    println!("\nidentity 1.9 with A={{1,2,3,4}}, B={{3,4,5}}, f(k)=1+k^2: {} = {}", r.lhs, r.rhs);
    Ok(())
}
