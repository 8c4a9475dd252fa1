//! Factorial powers with integer and real exponents, and conversions
//! between the power, falling and rising bases.
//!
//! Run with `cargo run --example factorial_powers`.

use exactcomb::analysis::{
    convert, factorial_power_real, falling, kramp_general_factorial, rising, Basis, FactorialKind,
};
use exactcomb::exact::{rat, rat_int};

fn main() -> exactcomb::Result<()> {
    println!("5 falling 3 = {}", falling(&rat_int(5), 3)?);
    println!("1 falling -2 = {}", falling(&rat_int(1), -2)?);
    println!("2 rising 3 = {}", rising(&rat_int(2), 3)?);
    println!("(1/2) falling 4 = {}", falling(&rat(1, 2), 4)?);
    println!("a=2, r=3, n=3: {}", kramp_general_factorial(&rat_int(2), &rat_int(3), 3)?);
    println!("a=5, r=1, n=-2: {}", kramp_general_factorial(&rat_int(5), &rat_int(1), -2)?);

    for (z, a) in [(10.0, 0.5), (3.7, -2.2), (-1.7, 0.4)] {
        let r = factorial_power_real(z, a, FactorialKind::Rising)?;
        let f = factorial_power_real(z, a, FactorialKind::Falling)?;
        println!("z={z}, a={a}: rising {r:.15}, falling {f:.15}");
    }
    match factorial_power_real(-2.0, 0.5, FactorialKind::Rising) {
        Err(e) => println!("z=-2, a=1/2: {e}"),
        Ok(v) => println!("z=-2, a=1/2: {v}"),
    }

    let cube = [rat_int(0), rat_int(0), rat_int(0), rat_int(1)];
    let show = |c: &[exactcomb::ExactRational]| c.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    println!("\nz^3 in falling powers: ({})", show(&convert(&cube, Basis::Power, Basis::Falling)));
    println!("z^3 in rising powers: ({})", show(&convert(&cube, Basis::Power, Basis::Rising)));
    let rising4 = [rat_int(0), rat_int(0), rat_int(0), rat_int(0), rat_int(1)];
    println!("z^(4 rising) in powers: ({})", show(&convert(&rising4, Basis::Rising, Basis::Power)));
    Ok(())
}
