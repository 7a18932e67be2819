//! Distance of a text to subsequence-freeness.
//!
//! For a word `w` of length `k`, a text `T` of length `n` and weights `p`
//! over its positions, `Δ(T, w, p)` is the least total weight of positions
//! to modify so that `w` no longer occurs in `T` as a subsequence.
//!
//! - [`exact`]: greedy role-disjoint copies, the prefix-count recursion,
//!   brute force, and exact weighted distance through splitting.
//! - [`uniform`]: the sample-based estimator for uniform `p`.
//! - [`dfree`]: the sample-based estimator for unknown `p`.
//! - [`harness`]: instance families, repeated-trial experiments, reports.
//! - [`cli`]: the `subfree` command line.
//!
//! Positions and roles are 1-based throughout.
//!
//! ```
//! use subfree::{Alphabet, Text, Word, exact::uniform_distance};
//!
//! let mut a = Alphabet::new();
//! let w = Word::new(a.intern_chars("ab")).unwrap();
//! let t = Text::new(a.intern_chars("aabb")).unwrap();
//! assert_eq!(uniform_distance(&t, &w).unwrap(), subfree::Rational::new(1, 2));
//! ```

pub mod alphabet;
pub mod cli;
pub mod counting;
pub mod dfree;
pub mod distribution;
pub mod error;
pub mod exact;
pub mod harness;
pub mod numeric;
pub mod sample;
pub mod uniform;

pub use alphabet::{parse_word_and_text, Alphabet, Symbol, Text, Word};
pub use distribution::{parse_distribution, Distribution, ExactDistribution, Rational};
pub use error::{Error, Result};
pub use sample::{SampleSet, SamplingOracle, UniformOracle, WeightedOracle};
