//! Shared fixtures for the benchmarks.

use fock_core::{Bipartition, ChargedBipartition, FockParam};

/// Every Fock vertex of size at most `n_max` at the given parameter.
pub fn vertices(e: i64, s: i64, n_max: usize) -> Vec<ChargedBipartition> {
    let param = FockParam::new(e, s).expect("e >= 2");
    Bipartition::all_up_to(n_max)
        .into_iter()
        .map(|bp| ChargedBipartition::new(bp, param))
        .collect()
}
