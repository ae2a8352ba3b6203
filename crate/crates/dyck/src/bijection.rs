//! The bijection between Dyck numbers and symmetric Dyck numbers, and the
//! unary forest it generates.
//!
//! Writing a positive Dyck number as `1·s` (leading bit plus suffix), the
//! map completes `s` to the mirror-symmetric word `revcomp(s)·s`, where
//! `revcomp` reverses the suffix and complements every bit. The image
//! always encodes a symmetric path; the inverse simply keeps the low
//! `weight` bits and puts the leading 1 back: `(d mod 2^w) + 2^w`.
//!
//! Iterating the map from an asymmetric term produces an infinite chain of
//! symmetric terms, and every symmetric term that is neither a Mersenne
//! number nor self-bijective descends through the inverse to exactly one
//! asymmetric root. Those chains partition the terms into disjoint unary
//! trees.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Error;
use crate::levels::{terms_through_level, MAX_ENUM_LEVEL};
use crate::number::Dyck;

/// Where a positive Dyck number sits relative to the bijection forest.
///
/// The four classes are mutually exclusive and cover every positive term:
/// Mersenne numbers ladder downward under the map, self-bijective terms
/// (`3 * 2^k - 1`) are its fixed points, asymmetric terms are tree roots,
/// and the remaining symmetric terms are interior chain nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermClass {
    Mersenne,
    SelfBijective,
    TreeRoot,
    Interior,
}

impl fmt::Display for TermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            TermClass::Mersenne => "mersenne",
            TermClass::SelfBijective => "self-bijective",
            TermClass::TreeRoot => "tree-root",
            TermClass::Interior => "interior",
        };
        f.write_str(name)
    }
}

/// Reverses the low `width` bits of `x` (which must fit in that width).
fn reverse_bits(x: &BigUint, width: u64) -> BigUint {
    debug_assert!(x.bits() <= width);
    let mut out = BigUint::zero();
    for (digit_idx, digit) in x.iter_u64_digits().enumerate() {
        let mut digit = digit;
        while digit != 0 {
            let bit = digit.trailing_zeros() as u64;
            out.set_bit(width - 1 - (digit_idx as u64 * 64 + bit), true);
            digit &= digit - 1;
        }
    }
    out
}

/// Maps a positive Dyck number to the symmetric Dyck number whose padded
/// word is `revcomp(s)·s`, with `s` the suffix after the leading bit.
///
/// Implemented with integer bit arithmetic: mask off the leading bit,
/// reverse the suffix within its width, complement it against an all-ones
/// mask, and shift it above the original suffix. A term of binary length
/// `n` maps to a term encoding a symmetric path of semilength `n - 1`.
pub fn bij(d: &Dyck) -> Result<Dyck, Error> {
    if d.is_zero() {
        return Err(Error::UndefinedOnZero);
    }
    let m = d.bit_length() - 1;
    let mask = (BigUint::one() << m) - 1u32;
    let suffix = d.value() & &mask;
    // All-ones minus a value within the mask is its bitwise complement.
    let prefix = mask - reverse_bits(&suffix, m);
    let image = Dyck::new_unchecked((prefix << m) | suffix);
    debug_assert!(image.is_symmetric());
    Ok(image)
}

/// Reference implementation of [`bij`] on the word form, kept independent
/// of the bit-arithmetic path for differential testing.
#[cfg(test)]
pub(crate) fn bij_on_words(d: &Dyck) -> Dyck {
    use crate::number::PaddedWord;
    let compact = d.to_binary_string();
    let suffix = &compact[1..];
    let prefix: String = suffix
        .chars()
        .rev()
        .map(|c| if c == '1' { '0' } else { '1' })
        .collect();
    let word: PaddedWord = format!("{prefix}{suffix}").parse().expect("image is balanced");
    word.unpad()
}

/// Inverse of [`bij`]: keeps the low `weight` bits and restores the leading
/// 1, i.e. `(d mod 2^w) + 2^w` with `w` the binary weight of `d`.
///
/// Defined on symmetric terms only; 0 maps to 1.
pub fn inv_bij(d: &Dyck) -> Result<Dyck, Error> {
    if !d.is_symmetric() {
        return Err(Error::NotSymmetric(d.value().clone()));
    }
    let w = d.weight();
    let mask = (BigUint::one() << w) - 1u32;
    Ok(Dyck::new_unchecked((d.value() & mask) | (BigUint::one() << w)))
}

/// Classifies a positive Dyck number into its forest role.
pub fn classify(d: &Dyck) -> Result<TermClass, Error> {
    if d.is_zero() {
        return Err(Error::UndefinedOnZero);
    }
    if d.is_mersenne() {
        Ok(TermClass::Mersenne)
    } else if d.is_self_bijective() {
        Ok(TermClass::SelfBijective)
    } else if d.is_symmetric() {
        Ok(TermClass::Interior)
    } else {
        Ok(TermClass::TreeRoot)
    }
}

/// A chain of the unary bijection tree rooted at an asymmetric term:
/// `terms[0]` is the image of the root and each later entry is the image of
/// its predecessor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BChain {
    pub root: Dyck,
    pub terms: Vec<Dyck>,
}

/// The first `k` iterated images of the asymmetric root.
///
/// Term sizes roughly double per step, so the length is always
/// caller-bounded.
pub fn chain(root: &Dyck, k: usize) -> Result<BChain, Error> {
    let class = classify(root)?;
    if class != TermClass::TreeRoot {
        return Err(Error::NotATreeRoot { value: root.value().clone(), class });
    }
    let mut terms = Vec::with_capacity(k);
    let mut current = root.clone();
    for _ in 0..k {
        current = bij(&current).expect("chain members are positive");
        terms.push(current.clone());
    }
    Ok(BChain { root: root.clone(), terms })
}

/// Descent from a term back to the root of its bijection tree.
///
/// `path` lists the visited terms starting with the input and ending with
/// the root; a root input yields a single-element path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootTrace {
    pub root: Dyck,
    pub path: Vec<Dyck>,
}

impl RootTrace {
    /// Number of inverse steps taken.
    pub fn steps(&self) -> usize {
        self.path.len() - 1
    }
}

/// Iterates the inverse map until an asymmetric term is reached.
///
/// Mersenne and self-bijective inputs are refused with distinct signals:
/// the former climb the Mersenne ladder forever, the latter are fixed
/// points. Each accepted step shortens the binary length, so the walk
/// terminates; a cap of twice the input's bit length converts any latent
/// defect into a loud error instead of a loop.
pub fn root_of(d: &Dyck) -> Result<RootTrace, Error> {
    match classify(d)? {
        TermClass::Mersenne => Err(Error::MersenneLadder(d.value().clone())),
        TermClass::SelfBijective => Err(Error::SelfBijectiveFixedPoint(d.value().clone())),
        TermClass::TreeRoot => Ok(RootTrace { root: d.clone(), path: vec![d.clone()] }),
        TermClass::Interior => {
            let cap = 2 * d.bit_length();
            let mut path = vec![d.clone()];
            let mut current = d.clone();
            for _ in 0..cap {
                current = inv_bij(&current).expect("interior chain stays symmetric");
                path.push(current.clone());
                if !current.is_symmetric() {
                    return Ok(RootTrace { root: current, path });
                }
            }
            Err(Error::IterationCapExceeded { start: d.value().clone(), cap })
        }
    }
}

/// One term-to-root assignment found by [`forest_partition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainAssignment {
    pub term: Dyck,
    pub root: Dyck,
    /// Inverse steps from the term down to its root.
    pub steps: usize,
}

/// Verification record for the forest partition up to a level bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestReport {
    pub level_bound: u32,
    /// Every interior term within the bound, with its root, sorted by term.
    pub assignments: Vec<ChainAssignment>,
    /// Interior terms whose descent failed (must be empty).
    pub unassigned: Vec<Dyck>,
    /// Interior terms whose one-step round trip through the inverse breaks
    /// (must be empty); rules out two chains sharing a term.
    pub round_trip_failures: Vec<Dyck>,
    /// First-step images of distinct roots that collide (must be empty).
    pub duplicate_images: Vec<Dyck>,
    /// Distinct roots reached.
    pub root_count: usize,
    /// Terms sitting one inverse step above their root.
    pub direct_image_count: usize,
}

impl ForestReport {
    pub fn interior_count(&self) -> usize {
        self.assignments.len() + self.unassigned.len()
    }

    pub fn is_partition(&self) -> bool {
        self.unassigned.is_empty()
            && self.round_trip_failures.is_empty()
            && self.duplicate_images.is_empty()
    }
}

/// Checks that the bijection partitions the terms with binary length up to
/// `level_bound` into disjoint unary trees.
///
/// Every interior term must descend to an asymmetric root, no two chains
/// may share a term, and the first-step images of distinct roots must be
/// distinct.
pub fn forest_partition(level_bound: u32) -> Result<ForestReport, Error> {
    if level_bound == 0 {
        return Err(Error::InvalidLevel);
    }
    if level_bound > MAX_FOREST_BOUND {
        return Err(Error::BoundTooLarge { bound: level_bound, max: MAX_FOREST_BOUND });
    }

    let mut interiors = Vec::new();
    let mut roots_in_range = Vec::new();
    for term in terms_through_level(level_bound).expect("bound within enumerable range") {
        match classify(&term).expect("level terms are positive") {
            TermClass::Interior => interiors.push(term),
            TermClass::TreeRoot => roots_in_range.push(term),
            _ => {}
        }
    }

    let trace = |term: &Dyck| {
        let descent = root_of(term);
        let round_trip = inv_bij(term)
            .and_then(|pred| bij(&pred))
            .map(|back| back == *term)
            .unwrap_or(false);
        (term.clone(), descent, round_trip)
    };

    #[cfg(feature = "parallel")]
    let traced: Vec<_> = interiors.par_iter().map(trace).collect();
    #[cfg(not(feature = "parallel"))]
    let traced: Vec<_> = interiors.iter().map(trace).collect();

    let mut assignments = Vec::new();
    let mut unassigned = Vec::new();
    let mut round_trip_failures = Vec::new();
    let mut roots = std::collections::BTreeSet::new();
    let mut direct_image_count = 0;
    for (term, descent, round_trip) in traced {
        if !round_trip {
            round_trip_failures.push(term.clone());
        }
        match descent {
            Ok(tr) => {
                let steps = tr.steps();
                if steps == 1 {
                    direct_image_count += 1;
                }
                roots.insert(tr.root.clone());
                assignments.push(ChainAssignment { term, root: tr.root, steps });
            }
            Err(_) => unassigned.push(term),
        }
    }
    assignments.sort_by(|a, b| a.term.cmp(&b.term));

    // Injectivity of the forward map on root images within the bound.
    let mut images: BTreeMap<Dyck, Dyck> = BTreeMap::new();
    let mut duplicate_images = Vec::new();
    for root in &roots_in_range {
        let image = bij(root).expect("roots are positive");
        if image.bit_length() > u64::from(level_bound) {
            continue;
        }
        if images.insert(image.clone(), root.clone()).is_some() {
            duplicate_images.push(image);
        }
    }

    Ok(ForestReport {
        level_bound,
        assignments,
        unassigned,
        round_trip_failures,
        duplicate_images,
        root_count: roots.len(),
        direct_image_count,
    })
}

/// Largest level bound accepted by [`forest_partition`].
pub const MAX_FOREST_BOUND: u32 = 20;

const _: () = assert!(MAX_FOREST_BOUND <= MAX_ENUM_LEVEL);
