//! Exact combinatorics of binary-encoded balanced brackets.
//!
//! Balanced brackets are coded with `0 = (` and `1 = )`; dropping the
//! leading zeros leaves a compact natural number, a *Dyck number* (OEIS
//! A036991, binary form A350346). This crate validates and decodes those
//! numbers, enumerates them level by level with closed-form count checks,
//! maps them onto symmetric terms through an explicit bijection and its
//! inverse, and navigates the two tree structures the terms carry: the
//! unary bijection forest rooted at asymmetric terms and the ternary
//! triplet forest with children `(4d-1, 4d+1, 4d+3)`.
//!
//! All arithmetic is exact over arbitrary-precision integers; there is no
//! floating point anywhere. With the default `parallel` feature, level
//! scans and forest checks fan out across threads via rayon while keeping
//! output order deterministic; without it, every operation runs on the
//! purely sequential fallback.
//!
//! ```
//! use dyck::{bij, chain, Dyck};
//!
//! let d = Dyck::try_from(13u64)?;
//! assert_eq!(d.brackets().as_str(), "(())()");
//! assert_eq!(bij(&d)?.to_string(), "21");
//! assert_eq!(chain(&d, 3)?.terms.last().unwrap().to_string(), "1365");
//! # Ok::<(), dyck::Error>(())
//! ```

pub mod bijection;
mod error;
pub mod levels;
pub mod number;
pub mod ternary;

pub use bijection::{
    bij, chain, classify, forest_partition, inv_bij, root_of, BChain, ChainAssignment,
    ForestReport, RootTrace, TermClass,
};
pub use error::Error;
pub use levels::{
    binomial, catalan, central_binomial, gf_coefficients, level_count, level_max, level_min,
    level_terms, mersenne, mersenne_tail, odd_central_binomial, suffix_count, suffix_count_next,
    suffixes, terms_through_level, EnumStrategy, GfCoefficients, LevelStats, LevelView,
    MersenneTail, SuffixSet, SuffixWord,
};
pub use number::{binary_weight, validate, BracketWord, Check, Dyck, PaddedWord};
pub use ternary::{
    children, forest_check, is_ternary_root, mersenne_triplet_coprime, parent, TernaryLevelStats,
    TernaryReport,
};
