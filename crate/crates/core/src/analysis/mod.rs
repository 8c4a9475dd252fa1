//! Factorial powers and the series they generate.
//!
//! Exact rational arithmetic is used wherever a statement is an identity;
//! `f64` appears only for convergence and asymptotic behaviour.

mod asymptotic;
mod basis;
mod convergent;
mod factorial;
mod gamma;

pub use crate::series::TruncatedSeries;
pub use asymptotic::{asym_error, asym_factorial_power, kramp_expansion_check, kramp_expansion_partial, AsymOutcome};
pub use basis::{convert, falling_to_power, power_to_falling, power_to_rising, rising_to_power, Basis};
pub use convergent::{
    generalized_power_series, generalized_power_series_tol, generalized_terms_exact, log_power_coeffs_f64,
    log_power_identity_holds, log_power_series, log_power_series_at, negative_power_series, nicole_check,
    reciprocal_series, shifted_product_poly, SeriesOutcome, DEFAULT_TOLERANCE,
};
pub use factorial::{falling, falling_f64, kramp_general_factorial, rising, rising_f64, FactorialKind};
pub use gamma::{factorial_power_real, gamma_ratio, ln_gamma_signed};

/// Real values are plain `f64`; operations return errors instead of NaN.
pub type RealValue = f64;
