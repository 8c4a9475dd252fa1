//! Exact combinatorics around Iverson brackets and Stirling numbers.
//!
//! The crate is organised by capability:
//!
//! - [`numbers`]: binomial coefficients and Stirling cycle/subset numbers on
//!   the whole integer plane, tied together by the duality
//!   `{n brace k} = [-k brack -n]`.
//! - [`iverson`]: bracket evaluation with strong-zero semantics, a finite
//!   support summation engine and a catalog of checkable bracket identities.
//! - [`stirling_poly`]: Stirling numbers as polynomials in the upper index,
//!   Kramp's partition sums and the polynomial duality.
//! - [`analysis`]: factorial powers, basis conversions, convergent and
//!   asymptotic series.
//! - [`oracles`]: deliberately naive enumerations used as ground truth.
//! - [`cli`]: the expression language and the `exactcomb` command line.
//!
//! Every runnable walkthrough lives in `examples/`; `cargo run --example
//! logan_table` is a good place to start.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod exact;
pub mod iverson;
pub mod limits;
pub mod numbers;
pub mod oracles;
pub mod poly;
pub mod series;
pub mod stirling_poly;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{ExactInt, ExactRational};
pub use limits::Limits;
pub use poly::UniPoly;
