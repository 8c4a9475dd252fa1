//! Resource caps shared by the library and the command line.
//!
//! Every cap can be overridden from the environment with an
//! `EXACTCOMB_`-prefixed variable; see [`Limits::from_env`].

use std::env;

/// Upper bounds applied before any potentially large computation starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of entries in a rendered table window.
    pub table_entries: usize,
    /// Largest `k` whose integer partitions may be enumerated.
    pub partitions_k: usize,
    /// Largest truncation order for series with polynomial coefficients.
    pub poly_series_order: usize,
    /// Largest truncation order for series with rational coefficients.
    pub series_order: usize,
    /// Largest term budget for the convergent real series.
    pub term_budget: usize,
    /// Largest `k_max` accepted by the half-integer growth search.
    pub growth_k: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            table_entries: 1_000_000,
            partitions_k: 60,
            poly_series_order: 16,
            series_order: 2_000,
            term_budget: 2_000,
            growth_k: 120,
        }
    }
}

impl Limits {
    /// Defaults overridden by `EXACTCOMB_TABLE_CAP`, `EXACTCOMB_PARTITION_CAP`,
    /// `EXACTCOMB_POLY_SERIES_CAP`, `EXACTCOMB_SERIES_CAP`,
    /// `EXACTCOMB_TERM_BUDGET` and `EXACTCOMB_GROWTH_CAP`. Unparsable values
    /// are ignored.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        let read = |name: &str, slot: &mut usize| {
            if let Some(v) = env::var(name).ok().and_then(|s| s.trim().parse().ok()) {
                *slot = v;
            }
        };
        read("EXACTCOMB_TABLE_CAP", &mut limits.table_entries);
        read("EXACTCOMB_PARTITION_CAP", &mut limits.partitions_k);
        read("EXACTCOMB_POLY_SERIES_CAP", &mut limits.poly_series_order);
        read("EXACTCOMB_SERIES_CAP", &mut limits.series_order);
        read("EXACTCOMB_TERM_BUDGET", &mut limits.term_budget);
        read("EXACTCOMB_GROWTH_CAP", &mut limits.growth_k);
        limits
    }
}
