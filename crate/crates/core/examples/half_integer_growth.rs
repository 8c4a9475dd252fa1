//! How fast the Stirling polynomials grow at n = 1/2: the indices k at
//! which |[1/2 brack 1/2-k]| exceeds k!/7^k.
//!
//! Run with `cargo run --example half_integer_growth`.

use exactcomb::exact::{rat, to_f64};
use exactcomb::numbers::factorial;
use exactcomb::stirling_poly::{cycle_poly_values_at, half_integer_growth};
use num_rational::BigRational;

fn main() -> exactcomb::Result<()> {
    let g = cycle_poly_values_at(&rat(1, 2), 50);
    println!("  k   g_k(1/2)          ratio |g_k(1/2)| 7^k / k!");
    for k in (0..=50).step_by(5) {
        let bound = BigRational::from_integer(factorial(k as i64)?) / BigRational::from_integer(7.into()).pow(k as i32);
        println!("{k:3}   {:<16.6e}  {:.4}", to_f64(&g[k]), to_f64(&(g[k].clone() / bound)).abs());
    }
    let witnesses = half_integer_growth(60, 120)?;
    println!("\nwitnesses with k <= 60: {witnesses:?}");
    println!("witnesses with k <= 30: {:?}", witnesses.iter().filter(|&&k| k <= 30).collect::<Vec<_>>());
    Ok(())
}
