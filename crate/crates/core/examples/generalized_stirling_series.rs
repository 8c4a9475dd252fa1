//! Convergent series: the reciprocal series with its exact remainder,
//! Nicole's identity, the generalized Stirling series for z^alpha and the
//! generating series of its coefficients.
//!
//! Run with `cargo run --example generalized_stirling_series`.

use exactcomb::analysis::{
    generalized_power_series, log_power_identity_holds, log_power_series, negative_power_series, nicole_check,
    reciprocal_series,
};
use exactcomb::exact::{rat, rat_int};

fn main() -> exactcomb::Result<()> {
    let z = rat(3, 2);
    let (partial, rem) = reciprocal_series(&z, 6)?;
    println!("1/z at z=3/2, six terms: {partial} + {rem} = {}", &partial + &rem);
    println!("Nicole, z=3/2, z_i=(1,2,3): {}", nicole_check(&z, &[rat_int(1), rat_int(2), rat_int(3)])?);

    println!("\nz^-2 at z=3 from 10, 40, 160 terms:");
    for terms in [10, 40, 160] {
        let v = negative_power_series(3.0, -2, terms)?;
        println!("  {terms:3}: {v:.12} (error {:.3e})", v - 1.0 / 9.0);
    }

    for (z, alpha) in [(10.0, 0.5), (2.0, -1.0), (5.0, 1.0 / 3.0)] {
        let s = generalized_power_series(z, alpha, 200)?;
        println!(
            "\nz={z}, alpha={alpha:.4}: {:.15} vs {:.15} after {} terms (converged: {})",
            s.value,
            z.powf(alpha),
            s.terms_used,
            s.converged
        );
    }

    let h = log_power_series(4, 16)?;
    println!("\ncoefficients of ((1/u) ln(1/(1-u)))^(-a):");
    for (k, c) in h.coeffs().iter().enumerate() {
        println!("  h_{k} = {}", c.display_in("a"));
    }
    println!("h_k (1-a)...(k-a) = {{a brace a-k}} for k <= 8: {}", log_power_identity_holds(8, 16)?);
    Ok(())
}
