use num_bigint::BigUint;
use thiserror::Error;

use crate::bijection::TermClass;

/// Errors raised by the library. All arithmetic is exact, so every error
/// reports a precondition violation rather than a numeric failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a Dyck number (a binary suffix has more 0s than 1s)")]
    NotDyck(BigUint),

    #[error("word has a suffix with more 0s than 1s, starting at position {pos}")]
    UnbalancedWord { pos: usize },

    #[error("word has {ones} ones and {zeros} zeros; a padded word needs equal counts")]
    UnequalBitCounts { ones: usize, zeros: usize },

    #[error("invalid character {ch:?} at position {pos}")]
    InvalidChar { pos: usize, ch: char },

    #[error("bracket word unbalanced: depth drops below zero at position {pos}")]
    UnbalancedBrackets { pos: usize },

    #[error("bracket word unbalanced: {open} unmatched open brackets remain")]
    UnclosedBrackets { open: usize },

    #[error("operation is undefined on 0")]
    UndefinedOnZero,

    #[error("{0} is asymmetric; the inverse bijection is defined on symmetric terms only")]
    NotSymmetric(BigUint),

    #[error("{value} is not a bijection-tree root (classified {class:?})")]
    NotATreeRoot { value: BigUint, class: TermClass },

    #[error("{0} is a Mersenne number; iterating the inverse bijection climbs the Mersenne ladder forever")]
    MersenneLadder(BigUint),

    #[error("{0} is self-bijective; the inverse bijection fixes it")]
    SelfBijectiveFixedPoint(BigUint),

    #[error("root search from {start} exceeded the {cap}-step cap; this indicates a defect")]
    IterationCapExceeded { start: BigUint, cap: u64 },

    #[error("level must be at least 1")]
    InvalidLevel,

    #[error("level {n} is too large to enumerate (maximum {max})")]
    LevelTooLarge { n: u32, max: u32 },

    #[error("suffix length {len} is too large to enumerate (maximum {max})")]
    SuffixLenTooLarge { len: u32, max: u32 },

    #[error("suffix set of length {len} is too large to materialize (maximum {max}); use the iterator")]
    TooLargeToMaterialize { len: u32, max: u32 },

    #[error("level {n} is below the threshold {min} for this tail structure")]
    TailBelowThreshold { n: u32, min: u32 },

    #[error("forest bound {bound} exceeds the configured maximum {max}")]
    BoundTooLarge { bound: u32, max: u32 },
}
