//! Local generators for the sequences the library computes, keyed by their
//! OEIS ids. Used by `export-bfile` and as the local side of `oeis compare`.

use dyck::levels;
use dyck_oeis::SeqId;
use num_bigint::BigUint;
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalSeq {
    /// Catalan numbers.
    A000108,
    /// Mersenne numbers `2^n - 1`, the level maxima.
    A000225,
    /// Central binomial coefficients `C(2n, n)`.
    A000984,
    /// `C(n, floor(n/2))`: level sizes and suffix counts.
    A001405,
    /// `C(2n+1, n+1)`: odd-length suffix counts.
    A001700,
    /// Dyck numbers in ascending order.
    A036991,
    /// `3 * 2^n - 1`: the self-bijective terms (from 5 on).
    A052940,
    /// Dyck numbers written in binary.
    A350346,
}

pub const ALL: [LocalSeq; 8] = [
    LocalSeq::A000108,
    LocalSeq::A000225,
    LocalSeq::A000984,
    LocalSeq::A001405,
    LocalSeq::A001700,
    LocalSeq::A036991,
    LocalSeq::A052940,
    LocalSeq::A350346,
];

impl LocalSeq {
    pub fn from_id(id: &SeqId) -> Option<Self> {
        let seq = match id.as_str() {
            "A000108" => LocalSeq::A000108,
            "A000225" => LocalSeq::A000225,
            "A000984" => LocalSeq::A000984,
            "A001405" => LocalSeq::A001405,
            "A001700" => LocalSeq::A001700,
            "A036991" => LocalSeq::A036991,
            "A052940" => LocalSeq::A052940,
            "A350346" => LocalSeq::A350346,
            _ => return None,
        };
        Some(seq)
    }

    pub fn id(&self) -> &'static str {
        match self {
            LocalSeq::A000108 => "A000108",
            LocalSeq::A000225 => "A000225",
            LocalSeq::A000984 => "A000984",
            LocalSeq::A001405 => "A001405",
            LocalSeq::A001700 => "A001700",
            LocalSeq::A036991 => "A036991",
            LocalSeq::A052940 => "A052940",
            LocalSeq::A350346 => "A350346",
        }
    }

    /// Conventional start index used when exporting b-file text.
    pub fn default_start(&self) -> i64 {
        match self {
            LocalSeq::A036991 | LocalSeq::A350346 => 1,
            _ => 0,
        }
    }

    /// First `count` terms, starting from the sequence's first term.
    pub fn generate(&self, count: usize) -> Vec<BigUint> {
        match self {
            LocalSeq::A000108 => (0..count as u64).map(levels::catalan).collect(),
            LocalSeq::A000225 => (0..count as u32).map(levels::mersenne).collect(),
            LocalSeq::A000984 => (0..count as u64).map(levels::central_binomial).collect(),
            LocalSeq::A001405 => (0..count as u32).map(levels::suffix_count).collect(),
            LocalSeq::A001700 => (0..count as u64).map(levels::odd_central_binomial).collect(),
            LocalSeq::A036991 => dyck_terms().take(count).collect(),
            LocalSeq::A052940 => (0..count as u32)
                .map(|n| (BigUint::from(3u32) << n) - 1u32)
                .collect(),
            LocalSeq::A350346 => dyck_terms()
                .take(count)
                .map(|v| {
                    // The decimal digits of the term are the binary digits
                    // of the Dyck number.
                    format!("{v:b}").parse().expect("binary digits read as decimal")
                })
                .collect(),
        }
    }
}

/// Ascending Dyck numbers, 0 included.
fn dyck_terms() -> impl Iterator<Item = BigUint> {
    std::iter::once(BigUint::zero()).chain(
        levels::terms_through_level(levels::MAX_ENUM_LEVEL)
            .expect("maximum level is enumerable")
            .map(dyck::Dyck::into_value),
    )
}

/// One-line inventory for help and error messages.
pub fn known_ids() -> String {
    ALL.iter().map(|s| s.id()).collect::<Vec<_>>().join(", ")
}
