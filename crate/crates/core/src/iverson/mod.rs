//! Bracket notation: `[P]` is 1 when `P` holds and 0 otherwise, and a
//! bracket multiplying a term is a strong zero, so the term is never
//! evaluated when the bracket is 0.
//!
//! Sums and products range over all integers; the engine iterates a finite
//! support, either given or derived from the guard, and probes just outside
//! it to confirm the summand vanishes there.

mod catalog;
mod libri;
mod predicate;
mod sum;

pub use catalog::{verify_identity, IdentityParams, IdentityReport, IDENTITIES};
pub use libri::{divides_bracket, libri_divisor, libri_p, power_sum_mod};
pub use predicate::*;
pub use sum::*;
