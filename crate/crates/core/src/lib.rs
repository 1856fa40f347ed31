//! Permutation statistics on the symmetric group `S_n` and the alternating
//! group `A_{n+1}`.
//!
//! Elements of `S_n` factor uniquely into staircase words in the Coxeter
//! generators `s_i`, and elements of `A_{n+1}` into staircase words in the
//! generators `a_i = s_1 s_{i+1}`. Counting the letters `s_1` (resp.
//! `a_1^{±1}`) gives the delent number; collapsing `a_1^{±1}` to `s_1` gives
//! a covering map `A_{n+1} -> S_n`. On top of that the crate offers
//! descent-based statistics, exact generating functions, B-shuffles and a
//! registry of identities checked by exhaustive enumeration.
//!
//! ```
//! use delent::{s_canonical, Permutation};
//!
//! let w: Permutation = "[2,5,4,1,3]".parse().unwrap();
//! assert_eq!(s_canonical(&w).to_string(), "s1 | 1 | s3 s2 | s4 s3 s2");
//! ```

pub mod canonical;
pub mod covering;
pub mod enumerate;
pub mod error;
pub mod genfun;
pub mod identities;
pub mod perm;
pub mod polynomial;
pub mod shuffles;
pub mod statistics;

pub use canonical::{
    a_canonical, parse_a_word, parse_s_word, s_canonical, ACanonicalWord, AFactor, ALetter,
    SCanonicalWord, SFactor, TailLetter,
};
pub use covering::{f_map, fiber, verify_f_pair, FPairReport, FPairSpec, Statistic};
pub use enumerate::{alternating_group, symmetric_group};
pub use error::{Error, Result};
pub use genfun::{generating_function, GenFunSpec};
pub use identities::{list_identities, verify, verify_all, IdentityInfo, IdentityReport, Params};
pub use perm::{compose, Permutation};
pub use polynomial::{q_binomial, q_factorial, q_integer, q_multinomial, MultiPoly};
pub use shuffles::{decompose, enumerate_b_shuffles, g_map, is_b_shuffle, shuffle_sum, ShuffleSet};
pub use statistics::{stat_profile_a, stat_profile_s, Group, StatProfile};
