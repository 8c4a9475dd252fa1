//! Stirling numbers as polynomials in the upper index, Kramp's partition
//! sums and the polynomial duality.
//!
//! Run with `cargo run --example stirling_polynomials`.

use exactcomb::numbers::stirling_cycle;
use exactcomb::stirling_poly::{
    cycle_poly, duality_poly_check, enumerate_partitions, kramp_c, kramp_gamma, kramp_recurrence_check, subset_poly,
};

fn main() -> exactcomb::Result<()> {
    for k in 0..=3 {
        println!("[n brack n-{k}] = {}", cycle_poly(k).display_in("n"));
        println!("{{n+{k} brace n}} = {}", subset_poly(k).display_in("n"));
    }

    let g2 = cycle_poly(2);
    println!("\nthe polynomial agrees with the table off the positive quadrant too:");
    for n in [-3, -1, 0, 2, 5] {
        println!("  n={n:2}: poly {} table {}", g2.eval_int(n), stirling_cycle(n, n - 2));
    }

    println!("\npartitions of 4: {:?}", enumerate_partitions(4, 60)?.iter().map(|p| p.parts()).collect::<Vec<_>>());
    println!("C_3(n) = {}", kramp_c(3)?.display_in("n"));
    println!("Gamma_3(n) = {}  (Gamma_3(3) = {})", kramp_gamma(3)?.display_in("n"), kramp_gamma(3)?.eval_int(3));
    for k in 1..=6 {
        println!("k={k}: recurrence {}, C_k(n-1) = Gamma_k(-n) {}", kramp_recurrence_check(k)?, duality_poly_check(k)?);
    }
    Ok(())
}
