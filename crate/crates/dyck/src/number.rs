//! The `Dyck` number type and its codecs.
//!
//! A Dyck number is a natural number whose binary expansion, read as a
//! suffix of a balanced-bracket word under 0 = `(` and 1 = `)`, never has
//! more 0s than 1s in any suffix. Dropping the leading `(` codes (leading
//! zeros) makes the encoding compact; they are restored by padding the
//! expansion to twice its binary weight. 0 is admitted and encodes the
//! empty word.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Error;

/// Outcome of checking a natural number against the suffix balance rule.
///
/// `deficit` is the count of leading zeros to restore (ones minus zeros over
/// the compact expansion) and is only present when the number is Dyck.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub is_dyck: bool,
    pub deficit: Option<u64>,
}

/// Runs the suffix balance scan over bits in LSB-first order.
///
/// Returns the final balance (#1s - #0s) or `None` as soon as any suffix
/// goes negative.
fn scan_balance(bits_lsb: impl Iterator<Item = bool>) -> Option<u64> {
    let mut balance: i64 = 0;
    for bit in bits_lsb {
        balance += if bit { 1 } else { -1 };
        if balance < 0 {
            return None;
        }
    }
    Some(balance as u64)
}

/// Checks whether `n` is a Dyck number.
///
/// Total function: every natural number gets an answer. The scan walks the
/// binary expansion from the least significant bit, tracking the balance of
/// the suffix read so far, and rejects the moment it goes negative.
pub fn validate(n: &BigUint) -> Check {
    if n.is_zero() {
        return Check { is_dyck: true, deficit: Some(0) };
    }
    // A positive Dyck number is odd: the one-bit suffix must balance.
    if !n.bit(0) {
        return Check { is_dyck: false, deficit: None };
    }
    match scan_balance((0..n.bits()).map(|i| n.bit(i))) {
        Some(d) => Check { is_dyck: true, deficit: Some(d) },
        None => Check { is_dyck: false, deficit: None },
    }
}

/// Same scan on a machine word; used by the level enumerators.
pub(crate) fn validate_u64(n: u64) -> Option<u64> {
    if n == 0 {
        return Some(0);
    }
    if n & 1 == 0 {
        return None;
    }
    let len = 64 - n.leading_zeros() as u64;
    scan_balance((0..len).map(|i| (n >> i) & 1 == 1))
}

/// Number of 1-bits in the binary expansion of an arbitrary natural.
///
/// For a Dyck number this is the semilength of the encoded path.
pub fn binary_weight(n: &BigUint) -> u64 {
    n.count_ones()
}

/// A validated Dyck number. The universal currency of the crate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dyck(BigUint);

impl Dyck {
    /// Validates `value` and wraps it.
    pub fn new(value: BigUint) -> Result<Self, Error> {
        if validate(&value).is_dyck {
            Ok(Dyck(value))
        } else {
            Err(Error::NotDyck(value))
        }
    }

    /// The empty Dyck word.
    pub fn zero() -> Self {
        Dyck(BigUint::zero())
    }

    /// Wraps a value already known to satisfy the suffix balance rule.
    pub(crate) fn new_unchecked(value: BigUint) -> Self {
        debug_assert!(validate(&value).is_dyck, "invariant violated: {value}");
        Dyck(value)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_value(self) -> BigUint {
        self.0
    }

    /// Length of the compact binary expansion; 0 for the empty word.
    pub fn bit_length(&self) -> u64 {
        self.0.bits()
    }

    /// Binary weight: the semilength of the encoded path.
    pub fn weight(&self) -> u64 {
        self.0.count_ones()
    }

    /// Count of leading zeros removed by compaction, `2*weight - bit_length`.
    pub fn deficit(&self) -> u64 {
        2 * self.weight() - self.bit_length()
    }

    /// True iff the padded word reads the same after reversing and
    /// complementing, i.e. the encoded path is mirror symmetric.
    ///
    /// Mirror positions of the padded word carry complementary bits, and the
    /// padded word of width `2w` is just the value's low `2w` bits.
    pub fn is_symmetric(&self) -> bool {
        let width = 2 * self.weight();
        (0..width / 2).all(|i| self.0.bit(i) != self.0.bit(width - 1 - i))
    }

    /// True iff the value is a Mersenne number `2^k - 1` (0 counts, as `2^0 - 1`).
    pub fn is_mersenne(&self) -> bool {
        (&self.0 + 1u32).count_ones() == 1
    }

    /// True iff the value has the form `3 * 2^k - 1` with `k >= 1`.
    ///
    /// These are exactly the fixed points of the symmetry bijection. The
    /// `k = 0` value 2 is even and not a Dyck number, so the smallest member
    /// is 5.
    pub fn is_self_bijective(&self) -> bool {
        let succ = &self.0 + 1u32;
        let (q, r) = num_integer::div_rem(succ, BigUint::from(3u32));
        r.is_zero() && q.count_ones() == 1 && self.0 >= BigUint::from(5u32)
    }

    /// Restores the deleted leading zeros: the word of length `2 * weight`.
    pub fn padded(&self) -> PaddedWord {
        let width = 2 * self.weight();
        let bits = (0..width).rev().map(|i| self.0.bit(i)).collect();
        PaddedWord { bits }
    }

    /// Renders the number as balanced brackets.
    pub fn brackets(&self) -> BracketWord {
        self.padded().to_brackets()
    }

    /// Compact binary rendering, `"0"` for zero.
    pub fn to_binary_string(&self) -> String {
        format!("{:b}", self.0)
    }
}

impl fmt::Display for Dyck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<BigUint> for Dyck {
    type Error = Error;
    fn try_from(value: BigUint) -> Result<Self, Error> {
        Dyck::new(value)
    }
}

impl TryFrom<u64> for Dyck {
    type Error = Error;
    fn try_from(value: u64) -> Result<Self, Error> {
        Dyck::new(BigUint::from(value))
    }
}

pub(crate) fn dyck_from_u64_unchecked(value: u64) -> Dyck {
    Dyck::new_unchecked(BigUint::from(value))
}

/// A bit word of even length `2w` with the leading zeros restored: exactly
/// `w` zeros and `w` ones, every suffix balanced. The canonical form for
/// symmetry tests and bracket decoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaddedWord {
    bits: Vec<bool>, // most significant first
}

impl PaddedWord {
    /// Validates a bit sequence (most significant bit first).
    pub fn new(bits: Vec<bool>) -> Result<Self, Error> {
        let ones = bits.iter().filter(|&&b| b).count();
        let zeros = bits.len() - ones;
        if ones != zeros {
            return Err(Error::UnequalBitCounts { ones, zeros });
        }
        let mut balance: i64 = 0;
        for (i, &bit) in bits.iter().enumerate().rev() {
            balance += if bit { 1 } else { -1 };
            if balance < 0 {
                return Err(Error::UnbalancedWord { pos: i });
            }
        }
        Ok(PaddedWord { bits })
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    /// Semilength `w`: half the word length.
    pub fn semilength(&self) -> usize {
        self.bits.len() / 2
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Drops the leading zeros and reads the rest as binary.
    ///
    /// Always yields a valid Dyck number; padding it again recovers the word
    /// exactly.
    pub fn unpad(&self) -> Dyck {
        let mut value = BigUint::zero();
        for &bit in &self.bits {
            value <<= 1u32;
            if bit {
                value |= BigUint::one();
            }
        }
        Dyck::new_unchecked(value)
    }

    pub fn to_brackets(&self) -> BracketWord {
        let chars = self.bits.iter().map(|&b| if b { ')' } else { '(' }).collect();
        BracketWord { chars }
    }
}

impl FromStr for PaddedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut bits = Vec::with_capacity(s.len());
        for (pos, ch) in s.chars().enumerate() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                ch => return Err(Error::InvalidChar { pos, ch }),
            }
        }
        PaddedWord::new(bits)
    }
}

impl fmt::Display for PaddedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &bit in &self.bits {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A balanced word over `(` and `)`, in bijection with [`PaddedWord`] via
/// `0 = (` and `1 = )`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketWord {
    chars: String,
}

impl BracketWord {
    pub fn as_str(&self) -> &str {
        &self.chars
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn to_padded(&self) -> PaddedWord {
        let bits = self.chars.chars().map(|c| c == ')').collect();
        // Balance was established at construction.
        PaddedWord { bits }
    }

    /// Decodes to the compact number.
    pub fn to_dyck(&self) -> Dyck {
        self.to_padded().unpad()
    }
}

impl FromStr for BracketWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut depth: i64 = 0;
        for (pos, ch) in s.chars().enumerate() {
            match ch {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth < 0 {
                        return Err(Error::UnbalancedBrackets { pos });
                    }
                }
                ch => return Err(Error::InvalidChar { pos, ch }),
            }
        }
        if depth != 0 {
            return Err(Error::UnclosedBrackets { open: depth as usize });
        }
        Ok(BracketWord { chars: s.to_string() })
    }
}

impl fmt::Display for BracketWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.chars)
    }
}
