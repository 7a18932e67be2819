//! Ground-truth oracles: greedy role-disjoint copies, the prefix recursion,
//! exhaustive minimum-modification search, and the reductions that turn a
//! weighted distance into a uniform one.

mod brute;
mod greedy;
mod recursion;
mod reduction;

pub use brute::{bruteforce_distance, bruteforce_min_set, BRUTE_FORCE_MAX_N};
pub use greedy::{copy_count, greedy_copies, CopySet};
pub use recursion::{r_table, r_value, RTable};
pub use reduction::{
    build_splitting, exact_weighted_distance, natural_beta, quantize, reduce_to_wc, split_distance,
    uniform_distance, QuantizedDistribution, Splitting, MAX_SPLIT_LEN,
};
