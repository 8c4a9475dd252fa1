//! Asymptotic expansions of real factorial powers and their measured
//! truncation error.
//!
//! Run with `cargo run --example gamma_ratio_asymptotics`.

use exactcomb::analysis::{asym_error, asym_factorial_power, factorial_power_real, FactorialKind};
use exactcomb::exact::{rat, rat_int};

fn main() -> exactcomb::Result<()> {
    let z = 100.0;
    let truth = factorial_power_real(z, 0.5, FactorialKind::Rising)?;
    println!("Gamma(100.5)/Gamma(100) = {truth:.17}");
    for m in 0..=5 {
        let r = asym_factorial_power(z, 0.5, m, FactorialKind::Rising)?;
        println!("  m={m}: {:.17}  first omitted term {:.3e}", r.value, r.modeled_error_bound);
    }

    println!("\nrelative error measured exactly, alpha = 1/2:");
    println!("   m    z=10         z=100        ratio");
    for m in 1..=5 {
        let e10 = asym_error(&rat(1, 2), &rat_int(10), m, FactorialKind::Rising)?;
        let e100 = asym_error(&rat(1, 2), &rat_int(100), m, FactorialKind::Rising)?;
        println!("   {m}  {e10:11.4e}  {e100:11.4e}  {:9.4e}", e10 / e100);
    }

    let e = asym_error(&rat(1, 3), &rat_int(50), 2, FactorialKind::Falling)?;
    println!("\nfalling, alpha = 1/3, z = 50, m = 2: relative error {e:.4e}");
    Ok(())
}
