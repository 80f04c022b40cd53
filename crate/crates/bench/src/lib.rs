//! Workloads shared by the criterion benches.

use aseries_core::{representations_consecutive, representations_diff2, Result};

/// Highly composite inputs, where the representation lists are longest.
pub const COMPOSITE_INPUTS: [u64; 6] = [720, 5_040, 55_440, 720_720, 1_441_440, 32_640];

/// Generates both families of representations for every `n` in `[lo, hi]`
/// and returns how many series were produced.
pub fn sweep_generators(lo: u64, hi: u64) -> Result<usize> {
    let mut total = 0;
    for n in lo..=hi {
        total += representations_diff2(n)?.len();
        total += representations_consecutive(n)?.len();
    }
    Ok(total)
}
