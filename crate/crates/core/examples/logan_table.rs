//! The cycle table on the whole integer plane, and the duality that turns
//! it into the subset table.
//!
//! Run with `cargo run --example logan_table`.

use exactcomb::numbers::{stirling_cycle, stirling_subset, table_window, TableKind};

fn main() -> exactcomb::Result<()> {
    let window = table_window(TableKind::Cycle, -4..=4, -4..=4, 1_000)?;
    println!("cycle numbers [n brack k] for |n|, |k| <= 4:");
    print!("{}", window.to_tsv());

    println!("\nduality {{n brace k}} = [-k brack -n]:");
    for (n, k) in [(4, 2), (5, 3), (-3, -5), (7, 1)] {
        let subset = stirling_subset(n, k);
        let dual = stirling_cycle(-k, -n);
        println!("  {{{n} brace {k}}} = {subset}, [{} brack {}] = {dual}", -k, -n);
        assert_eq!(subset, dual);
    }

    let subset = table_window(TableKind::Subset, 0..=6, 0..=6, 1_000)?;
    println!("\nsubset numbers as JSON (exact values are strings):");
    println!("{}", serde_json::to_string_pretty(&subset.to_json()).expect("serializable"));
    Ok(())
}
