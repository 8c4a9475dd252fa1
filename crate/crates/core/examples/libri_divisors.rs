//! Divisibility without the remainder operation, through a recursively
//! defined sequence of bracket sums, and the power-sum congruence.
//!
//! Run with `cargo run --example libri_divisors`.

use exactcomb::iverson::{libri_divisor, libri_p, power_sum_mod};

fn main() -> exactcomb::Result<()> {
    let x = 3;
    let ps: Vec<String> = (0..=9).map(|k| libri_p(k, x).map(|p| p.to_string())).collect::<Result<_, _>>()?;
    println!("P_k({x}) for k = 0..9: {}", ps.join(" "));

    println!("\n[x divides m] from the quotient, x = 1..6 (rows), m = 1..12 (columns):");
    for x in 1..=6 {
        let row: Vec<String> =
            (1..=12).map(|m| libri_divisor(m, x).map(|v| v.to_string())).collect::<Result<_, _>>()?;
        println!("  x={x}: {}", row.join(" "));
    }

    println!("\n(1^k + ... + (p-1)^k) mod p:");
    for p in [5, 7, 11] {
        let row: Vec<String> =
            (1..=12).map(|k| power_sum_mod(p, k).map(|v| v.to_string())).collect::<Result<_, _>>()?;
        println!("  p={p:2}: {}", row.join(" "));
    }
    Ok(())
}
