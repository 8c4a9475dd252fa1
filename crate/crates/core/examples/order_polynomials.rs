//! Order-preserving maps of finite posets, the fence posets whose counts are
//! Stirling numbers, and reciprocity of order polynomials.
//!
//! Run with `cargo run --example order_polynomials`.

use exactcomb::numbers::{stirling_cycle, stirling_subset};
use exactcomb::oracles::{fence_poset, random_poset, Poset, RECIPROCITY_SEED};

fn main() -> exactcomb::Result<()> {
    let fence = fence_poset(2)?;
    print!("fence P_2 (x_i = i, y_i = 2 + i):\n{fence}");
    for n in 0..=5 {
        println!(
            "  n={n}: Omega {} = {{n+2 brace n}} {}, Omega-bar {} = [n brack n-2] {}",
            fence.omega(n)?,
            stirling_subset(n + 2, n),
            fence.omega_bar(n)?,
            stirling_cycle(n, n - 2)
        );
    }
    println!("Omega(P_2, n) = {}", fence.order_poly(false)?.display_in("n"));
    println!("Omega-bar(P_2, n) = {}", fence.order_poly(true)?.display_in("n"));

    let diamond = Poset::parse("4\n0 < 1\n0 < 2\n1 < 3\n2 < 3\n")?;
    println!("\ndiamond: Omega = {}", diamond.order_poly(false)?.display_in("n"));
    println!("reciprocity holds: {}", diamond.reciprocity_holds()?);

    println!("\nseeded random posets:");
    for i in 0..5 {
        let p = random_poset(6, 0.4, RECIPROCITY_SEED + i)?;
        println!("  covers {:?}: reciprocity {}", p.covers(), p.reciprocity_holds()?);
    }
    Ok(())
}
