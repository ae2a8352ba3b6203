//! Level and suffix enumeration with closed-form count verification.
//!
//! A level groups all Dyck numbers of one binary length `n`; it holds
//! exactly `C(n-1, floor((n-1)/2))` terms, ranging from the successor of the
//! previous Mersenne number up to `2^n - 1`. Two interchangeable enumeration
//! strategies are provided and cross-checked: a filter scan over the odd
//! integers of the level, and a depth-first walk over admissible binary
//! suffixes with a leading 1 prepended.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Error;
use crate::number::{dyck_from_u64_unchecked, validate_u64, Dyck};
use crate::ternary;

/// Largest level the term enumerators accept. Counts grow like central
/// binomial coefficients, so levels anywhere near this bound are far beyond
/// exhaustive iteration anyway; the bound just keeps the scan state in a
/// machine word.
pub const MAX_ENUM_LEVEL: u32 = 63;

/// Largest admissible-suffix length the enumerators accept.
pub const MAX_SUFFIX_LEN: u32 = MAX_ENUM_LEVEL - 1;

/// Longest suffix set that [`SuffixSet::to_vec`] will materialize.
pub const MAX_MATERIALIZED_SUFFIX_LEN: u32 = 28;

/// Levels up to this size enumerate by odd-integer scan by default; larger
/// levels switch to the suffix walk, whose work is proportional to the
/// number of terms rather than the width of the level.
pub const SCAN_DEFAULT_MAX: u32 = 24;

/// Smallest level for which the parallel scan pays for itself.
#[cfg(feature = "parallel")]
const PAR_MIN_LEVEL: u32 = 14;

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut out = BigUint::one();
    for i in 1..=k {
        // Each step holds C(n - k + i, i), so the division is exact.
        out = out * (n - k + i) / i;
    }
    out
}

/// Exact Catalan number `(2k)! / (k! (k+1)!)`.
pub fn catalan(k: u64) -> BigUint {
    binomial(2 * k, k) / (k + 1)
}

/// Mersenne number `2^n - 1`, the maximum of level `n`.
pub fn mersenne(n: u32) -> BigUint {
    (BigUint::one() << n) - 1u32
}

/// Central binomial coefficient `C(2k, k)`.
pub fn central_binomial(k: u64) -> BigUint {
    binomial(2 * k, k)
}

/// Coefficient `C(2k+1, k)` counting odd-length admissible suffixes.
pub fn odd_central_binomial(k: u64) -> BigUint {
    binomial(2 * k + 1, k)
}

/// Coefficients of the suffix-counting series.
///
/// `central` and `odd_central` count the even- and odd-length suffix sets
/// separately; `interleaved` nests the two by parity and must agree with
/// [`suffix_count`] at every index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfCoefficients {
    pub central: BigUint,
    pub odd_central: BigUint,
    pub interleaved: BigUint,
}

pub fn gf_coefficients(k: u64) -> GfCoefficients {
    let interleaved = if k.is_multiple_of(2) {
        central_binomial(k / 2)
    } else {
        odd_central_binomial((k - 1) / 2)
    };
    GfCoefficients {
        central: central_binomial(k),
        odd_central: odd_central_binomial(k),
        interleaved,
    }
}

/// Number of Dyck numbers of binary length `n`: `C(n-1, floor((n-1)/2))`.
pub fn level_count(n: u32) -> Result<BigUint, Error> {
    if n == 0 {
        return Err(Error::InvalidLevel);
    }
    let m = u64::from(n) - 1;
    Ok(binomial(m, m / 2))
}

/// Number of admissible binary suffixes of length `l`: `C(l, floor(l/2))`.
pub fn suffix_count(l: u32) -> BigUint {
    binomial(u64::from(l), u64::from(l) / 2)
}

/// `#S_{l+1}` computed from `#S_l` by the parity recurrence: doubling for
/// odd `l`, doubling minus `Cat(l/2)` for even `l` (each Dyck word among the
/// length-`l` suffixes refuses a leading zero).
pub fn suffix_count_next(l: u32) -> BigUint {
    let doubled = suffix_count(l) * 2u32;
    if l.is_multiple_of(2) {
        doubled - catalan(u64::from(l) / 2)
    } else {
        doubled
    }
}

/// Smallest Dyck number of binary length `n`.
///
/// For `n > 1` this is the successor of the previous level's Mersenne
/// maximum: `M_{n-1} + M_{ceil((n-1)/2)} + 1`.
pub fn level_min(n: u32) -> Result<Dyck, Error> {
    if n == 0 {
        return Err(Error::InvalidLevel);
    }
    if n == 1 {
        return Ok(Dyck::new_unchecked(BigUint::one()));
    }
    Ok(Dyck::new_unchecked(mersenne(n - 1) + mersenne(n / 2) + 1u32))
}

/// Largest Dyck number of binary length `n`, the Mersenne number `2^n - 1`.
/// `n = 0` yields 0 by convention.
pub fn level_max(n: u32) -> Dyck {
    Dyck::new_unchecked(mersenne(n))
}

/// The fixed offsets below `M_n` where every level `n >= 6` ends with three
/// Mersenne triplets, plus the four nearby odd values that never validate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MersenneTail {
    /// `(M_n - 4, M_n - 2, M_n)`, present from level 4 on.
    pub triplet: [Dyck; 3],
    /// The last nine terms of the level, present from level 6 on.
    pub nine: Option<[Dyck; 9]>,
    /// `M_n - 22, M_n - 14, M_n - 6, M_n + 2`: adjacent odd values that are
    /// not Dyck numbers. Present alongside `nine`.
    pub excluded: Option<[BigUint; 4]>,
}

pub fn mersenne_tail(n: u32) -> Result<MersenneTail, Error> {
    if n < 4 {
        return Err(Error::TailBelowThreshold { n, min: 4 });
    }
    let m = mersenne(n);
    let member = |offset: u32| {
        Dyck::new(&m - offset).expect("tail member below a Mersenne number is Dyck")
    };
    let triplet = [member(4), member(2), member(0)];
    let (nine, excluded) = if n >= 6 {
        let nine = [
            member(20),
            member(18),
            member(16),
            member(12),
            member(10),
            member(8),
            member(4),
            member(2),
            member(0),
        ];
        let excluded = [&m - 22u32, &m - 14u32, &m - 6u32, &m + 2u32];
        (Some(nine), Some(excluded))
    } else {
        (None, None)
    };
    Ok(MersenneTail { triplet, nine, excluded })
}

/// A length-`width` bit string all of whose suffixes have at least as many
/// 1s as 0s. Leading zeros are significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SuffixWord {
    width: u32,
    value: u64,
}

impl SuffixWord {
    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// `#1s - #0s` over the whole word.
    pub fn balance(&self) -> i64 {
        2 * i64::from(self.value.count_ones()) - i64::from(self.width)
    }

    /// Zero-balance suffixes are exactly the Dyck words of this length.
    pub fn is_dyck_word(&self) -> bool {
        self.balance() == 0
    }
}

impl fmt::Display for SuffixWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in (0..self.width).rev() {
            f.write_str(if (self.value >> i) & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Depth-first enumeration of all admissible suffixes of a fixed width, in
/// ascending numeric order and with memory bounded by the width.
///
/// Words grow most-significant-bit first. A frame tracks `need`, the
/// smallest final balance the unwritten tail must reach so that every
/// suffix crossing the written prefix stays balanced; a branch is pruned
/// exactly when `need` exceeds the remaining width, so no dead subtree is
/// ever entered.
pub struct SuffixIter {
    width: u32,
    stack: Vec<Frame>,
}

#[derive(Clone, Copy)]
struct Frame {
    value: u64,
    depth: u32,
    need: u32,
}

impl SuffixIter {
    fn new(width: u32) -> Self {
        SuffixIter { width, stack: vec![Frame { value: 0, depth: 0, need: 0 }] }
    }
}

impl Iterator for SuffixIter {
    type Item = SuffixWord;

    fn next(&mut self) -> Option<SuffixWord> {
        while let Some(frame) = self.stack.pop() {
            if frame.depth == self.width {
                return Some(SuffixWord { width: self.width, value: frame.value });
            }
            let remaining = self.width - frame.depth;
            // Push the 1-branch first so the 0-branch (smaller value) pops first.
            self.stack.push(Frame {
                value: (frame.value << 1) | 1,
                depth: frame.depth + 1,
                need: frame.need.saturating_sub(1),
            });
            if frame.need < remaining - 1 {
                self.stack.push(Frame {
                    value: frame.value << 1,
                    depth: frame.depth + 1,
                    need: frame.need + 1,
                });
            }
        }
        None
    }
}

/// The set of admissible binary suffixes of a fixed length.
#[derive(Debug, Clone, Copy)]
pub struct SuffixSet {
    len: u32,
}

/// All length-`l` bit strings whose every suffix has at least as many 1s as
/// 0s, built by left extension: a 0 may be prepended except onto a word of
/// zero balance.
pub fn suffixes(l: u32) -> Result<SuffixSet, Error> {
    if l > MAX_SUFFIX_LEN {
        return Err(Error::SuffixLenTooLarge { len: l, max: MAX_SUFFIX_LEN });
    }
    Ok(SuffixSet { len: l })
}

impl SuffixSet {
    /// Length of the member words.
    pub fn word_len(&self) -> u32 {
        self.len
    }

    /// Closed-form cardinality `C(l, floor(l/2))`.
    pub fn count(&self) -> BigUint {
        suffix_count(self.len)
    }

    /// Ascending stream of the member words.
    pub fn iter(&self) -> SuffixIter {
        SuffixIter::new(self.len)
    }

    /// Materializes the whole set. Guarded: beyond length
    /// [`MAX_MATERIALIZED_SUFFIX_LEN`] the set no longer fits comfortably in
    /// memory and callers must stream instead.
    pub fn to_vec(&self) -> Result<Vec<SuffixWord>, Error> {
        if self.len > MAX_MATERIALIZED_SUFFIX_LEN {
            return Err(Error::TooLargeToMaterialize {
                len: self.len,
                max: MAX_MATERIALIZED_SUFFIX_LEN,
            });
        }
        Ok(self.iter().collect())
    }
}

/// Enumeration strategy for a level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumStrategy {
    /// Filter scan over the odd integers of the level.
    Scan,
    /// Depth-first suffix walk with a leading 1 prepended.
    SuffixDfs,
}

/// All Dyck numbers of binary length `n`, as a lazily enumerable view.
#[derive(Debug, Clone, Copy)]
pub struct LevelView {
    n: u32,
}

/// Entry point mirroring the level operation: `level_terms(n)` is the view
/// of all Dyck numbers of binary length `n` in ascending order.
pub fn level_terms(n: u32) -> Result<LevelView, Error> {
    LevelView::new(n)
}

fn scan_range(n: u32) -> (u64, u64) {
    if n == 1 {
        (1, 1)
    } else {
        ((1 << (n - 1)) + 1, 1 << (n - 2))
    }
}

impl LevelView {
    pub fn new(n: u32) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidLevel);
        }
        if n > MAX_ENUM_LEVEL {
            return Err(Error::LevelTooLarge { n, max: MAX_ENUM_LEVEL });
        }
        Ok(LevelView { n })
    }

    pub fn level(&self) -> u32 {
        self.n
    }

    pub fn count(&self) -> BigUint {
        level_count(self.n).expect("level is positive")
    }

    pub fn min(&self) -> Dyck {
        level_min(self.n).expect("level is positive")
    }

    pub fn max(&self) -> Dyck {
        level_max(self.n)
    }

    /// Ascending stream of the level's terms. Scans odd integers up to
    /// [`SCAN_DEFAULT_MAX`]; beyond that the suffix walk takes over.
    pub fn iter(&self) -> LevelIter {
        let strategy = if self.n <= SCAN_DEFAULT_MAX {
            EnumStrategy::Scan
        } else {
            EnumStrategy::SuffixDfs
        };
        self.iter_with(strategy)
    }

    pub fn iter_with(&self, strategy: EnumStrategy) -> LevelIter {
        let kind = match strategy {
            EnumStrategy::Scan => {
                let (first, count) = scan_range(self.n);
                IterKind::Scan { next: first, remaining: count }
            }
            EnumStrategy::SuffixDfs => IterKind::Dfs {
                top: 1 << (self.n - 1),
                suffixes: SuffixIter::new(self.n - 1),
            },
        };
        LevelIter { kind }
    }

    /// Materializes the level in ascending order, scanning in parallel when
    /// the `parallel` feature is enabled and the level is large enough.
    pub fn to_vec(&self) -> Vec<Dyck> {
        #[cfg(feature = "parallel")]
        if self.n >= PAR_MIN_LEVEL {
            return self.to_vec_par();
        }
        self.to_vec_seq()
    }

    pub fn to_vec_seq(&self) -> Vec<Dyck> {
        self.iter().collect()
    }

    #[cfg(feature = "parallel")]
    pub fn to_vec_par(&self) -> Vec<Dyck> {
        let (first, count) = scan_range(self.n);
        (0..count)
            .into_par_iter()
            .filter_map(|i| {
                let candidate = first + 2 * i;
                validate_u64(candidate).map(|_| dyck_from_u64_unchecked(candidate))
            })
            .collect()
    }

    /// Full scan of the level tallying symmetry classes and ternary roots.
    pub fn stats(&self) -> LevelStats {
        #[cfg(feature = "parallel")]
        if self.n >= PAR_MIN_LEVEL {
            return self.stats_par();
        }
        self.stats_seq()
    }

    pub fn stats_seq(&self) -> LevelStats {
        let mut stats = LevelStats::empty(self.n);
        for term in self.iter() {
            stats.absorb(&term);
        }
        stats
    }

    #[cfg(feature = "parallel")]
    pub fn stats_par(&self) -> LevelStats {
        let (first, count) = scan_range(self.n);
        (0..count)
            .into_par_iter()
            .filter_map(|i| {
                let candidate = first + 2 * i;
                validate_u64(candidate).map(|_| candidate)
            })
            .fold(
                || LevelStats::empty(self.n),
                |mut acc, term| {
                    acc.absorb(&dyck_from_u64_unchecked(term));
                    acc
                },
            )
            .reduce(|| LevelStats::empty(self.n), LevelStats::merge)
    }
}

/// Ascending iterator over one level.
pub struct LevelIter {
    kind: IterKind,
}

enum IterKind {
    Scan { next: u64, remaining: u64 },
    Dfs { top: u64, suffixes: SuffixIter },
}

impl Iterator for LevelIter {
    type Item = Dyck;

    fn next(&mut self) -> Option<Dyck> {
        match &mut self.kind {
            IterKind::Scan { next, remaining } => {
                while *remaining > 0 {
                    let candidate = *next;
                    *next += 2;
                    *remaining -= 1;
                    if validate_u64(candidate).is_some() {
                        return Some(dyck_from_u64_unchecked(candidate));
                    }
                }
                None
            }
            IterKind::Dfs { top, suffixes } => {
                suffixes.next().map(|word| dyck_from_u64_unchecked(*top | word.value()))
            }
        }
    }
}

/// Ascending stream of every Dyck number of binary length 1 through
/// `max_level` inclusive. Does not include 0.
pub fn terms_through_level(max_level: u32) -> Result<impl Iterator<Item = Dyck>, Error> {
    if max_level > MAX_ENUM_LEVEL {
        return Err(Error::LevelTooLarge { n: max_level, max: MAX_ENUM_LEVEL });
    }
    Ok((1..=max_level).flat_map(|n| {
        LevelView::new(n).expect("level within enumerable range").iter()
    }))
}

/// Per-level tallies from a full scan.
///
/// `symmetric` counts all symmetric terms; `interior_symmetric` additionally
/// excludes the level's Mersenne maximum and its self-bijective member, the
/// two terms that sit outside the bijection forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelStats {
    pub level: u32,
    pub count: u64,
    pub symmetric: u64,
    pub asymmetric: u64,
    pub interior_symmetric: u64,
    pub ternary_roots: u64,
}

impl LevelStats {
    fn empty(level: u32) -> Self {
        LevelStats {
            level,
            count: 0,
            symmetric: 0,
            asymmetric: 0,
            interior_symmetric: 0,
            ternary_roots: 0,
        }
    }

    fn absorb(&mut self, d: &Dyck) {
        self.count += 1;
        if d.is_symmetric() {
            self.symmetric += 1;
            if !d.is_mersenne() && !d.is_self_bijective() {
                self.interior_symmetric += 1;
            }
        } else {
            self.asymmetric += 1;
        }
        if ternary::is_ternary_root(d) {
            self.ternary_roots += 1;
        }
    }

    #[cfg(feature = "parallel")]
    fn merge(mut self, other: Self) -> Self {
        self.count += other.count;
        self.symmetric += other.symmetric;
        self.asymmetric += other.asymmetric;
        self.interior_symmetric += other.interior_symmetric;
        self.ternary_roots += other.ternary_roots;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn terms_u64(n: u32) -> Vec<u64> {
        LevelView::new(n)
            .unwrap()
            .iter()
            .map(|d| u64::try_from(d.value()).unwrap())
            .collect()
    }

    #[test]
    fn initial_levels_match_listing() {
        assert_eq!(terms_u64(1), vec![1]);
        assert_eq!(terms_u64(2), vec![3]);
        assert_eq!(terms_u64(3), vec![5, 7]);
        assert_eq!(terms_u64(4), vec![11, 13, 15]);
        assert_eq!(terms_u64(5), vec![19, 21, 23, 27, 29, 31]);
        assert_eq!(terms_u64(6), vec![39, 43, 45, 47, 51, 53, 55, 59, 61, 63]);
    }

    #[test]
    fn strategies_agree() {
        for n in 1..=16 {
            let view = LevelView::new(n).unwrap();
            let scan: Vec<Dyck> = view.iter_with(EnumStrategy::Scan).collect();
            let dfs: Vec<Dyck> = view.iter_with(EnumStrategy::SuffixDfs).collect();
            assert_eq!(scan, dfs, "level {n}");
            assert_eq!(BigUint::from(scan.len()), view.count(), "level {n}");
        }
    }

    #[test]
    fn counts_match_listing() {
        let expected = [1u64, 1, 2, 3, 6, 10, 20];
        for (n, want) in (1..).zip(expected) {
            assert_eq!(level_count(n).unwrap(), BigUint::from(want));
        }
        assert_eq!(level_count(8).unwrap(), BigUint::from(35u32));
        assert_eq!(level_count(18).unwrap(), BigUint::from(24310u32));
        assert!(level_count(0).is_err());
    }

    #[test]
    fn minima_follow_successor_formula() {
        let expected = [1u64, 3, 5, 11, 19, 39, 71];
        for (n, want) in (1..).zip(expected) {
            assert_eq!(level_min(n).unwrap(), Dyck::try_from(want).unwrap(), "level {n}");
        }
        for n in 1..=18 {
            let first = LevelView::new(n).unwrap().iter().next().unwrap();
            assert_eq!(level_min(n).unwrap(), first, "level {n}");
        }
    }

    #[test]
    fn maxima_are_mersenne() {
        let expected = [1u64, 3, 7, 15, 31, 63];
        for (n, want) in (1..).zip(expected) {
            assert_eq!(level_max(n), Dyck::try_from(want).unwrap());
        }
        assert_eq!(level_max(15), Dyck::try_from(32767u64).unwrap());
        assert_eq!(level_max(0), Dyck::zero());
    }

    #[test]
    fn suffix_sets_of_small_lengths() {
        let words = |l: u32| -> Vec<String> {
            suffixes(l).unwrap().iter().map(|w| w.to_string()).collect()
        };
        assert_eq!(words(0), vec![""]);
        assert_eq!(words(1), vec!["1"]);
        assert_eq!(words(2), vec!["01", "11"]);
        assert_eq!(words(3), vec!["011", "101", "111"]);
        assert_eq!(words(4), vec!["0011", "0101", "0111", "1011", "1101", "1111"]);
    }

    #[test]
    fn suffix_counts_and_recurrence() {
        for l in 0..=20 {
            let enumerated = suffixes(l).unwrap().iter().count();
            assert_eq!(BigUint::from(enumerated), suffix_count(l), "length {l}");
            assert_eq!(suffix_count_next(l), suffix_count(l + 1), "length {l}");
        }
    }

    #[test]
    fn zero_balance_suffixes_are_catalan_many() {
        for l in (0..=16).step_by(2) {
            let dyck_words = suffixes(l).unwrap().iter().filter(SuffixWord::is_dyck_word).count();
            assert_eq!(BigUint::from(dyck_words), catalan(u64::from(l) / 2), "length {l}");
        }
    }

    #[test]
    fn catalan_values() {
        let expected = [1u64, 1, 2, 5, 14, 42, 132];
        for (k, want) in expected.iter().enumerate() {
            assert_eq!(catalan(k as u64), BigUint::from(*want));
        }
    }

    #[test]
    fn series_coefficients() {
        let central: Vec<BigUint> = (0..6).map(central_binomial).collect();
        let odd: Vec<BigUint> = (0..5).map(odd_central_binomial).collect();
        assert_eq!(central, [1u64, 2, 6, 20, 70, 252].map(BigUint::from));
        assert_eq!(odd, [1u64, 3, 10, 35, 126].map(BigUint::from));
        for k in 0..=30 {
            let gf = gf_coefficients(u64::from(k));
            assert_eq!(gf.interleaved, suffix_count(k), "k = {k}");
        }
    }

    #[test]
    fn level_count_equals_suffix_count_of_previous_length() {
        for n in 1..=18u32 {
            assert_eq!(level_count(n).unwrap(), suffix_count(n - 1));
        }
    }

    #[test]
    fn mersenne_tail_structure() {
        let tail4 = mersenne_tail(4).unwrap();
        assert_eq!(
            tail4.triplet.clone().map(|d| u64::try_from(d.value()).unwrap()),
            [11, 13, 15]
        );
        assert!(tail4.nine.is_none());

        let tail6 = mersenne_tail(6).unwrap();
        assert_eq!(
            tail6.nine.clone().unwrap().map(|d| u64::try_from(d.value()).unwrap()),
            [43, 45, 47, 51, 53, 55, 59, 61, 63]
        );
        assert_eq!(
            tail6.excluded.clone().unwrap().map(|v| u64::try_from(&v).unwrap()),
            [41, 49, 57, 65]
        );
        for v in tail6.excluded.unwrap() {
            assert!(!crate::number::validate(&v).is_dyck);
        }
        assert!(matches!(mersenne_tail(3), Err(Error::TailBelowThreshold { n: 3, min: 4 })));
    }

    #[test]
    fn stats_for_small_levels() {
        let s7 = LevelView::new(7).unwrap().stats_seq();
        assert_eq!(s7.count, 20);
        assert_eq!(s7.asymmetric, 14);
        assert_eq!(s7.symmetric, 6);
        assert_eq!(s7.interior_symmetric, 4);

        let s9 = LevelView::new(9).unwrap().stats_seq();
        assert_eq!(s9.count, 70);
        assert_eq!(s9.interior_symmetric, 9);
        assert_eq!(s9.symmetric + s9.asymmetric, s9.count);
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_agrees_with_sequential() {
        for n in [1u32, 2, 5, 10, 14, 15] {
            let view = LevelView::new(n).unwrap();
            assert_eq!(view.to_vec_par(), view.to_vec_seq(), "level {n}");
            assert_eq!(view.stats_par(), view.stats_seq(), "level {n}");
        }
    }

    #[test]
    fn enumeration_bounds_are_enforced() {
        assert!(LevelView::new(0).is_err());
        assert!(LevelView::new(MAX_ENUM_LEVEL).is_ok());
        assert!(matches!(
            LevelView::new(MAX_ENUM_LEVEL + 1),
            Err(Error::LevelTooLarge { .. })
        ));
        assert!(suffixes(MAX_SUFFIX_LEN + 1).is_err());
        assert!(matches!(
            suffixes(MAX_MATERIALIZED_SUFFIX_LEN + 1).unwrap().to_vec(),
            Err(Error::TooLargeToMaterialize { .. })
        ));
    }

    #[test]
    fn merged_stream_is_ascending() {
        let all: Vec<Dyck> = terms_through_level(10).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let expected: usize = (1..=10).map(|n| {
            usize::try_from(&level_count(n).unwrap()).unwrap()
        }).sum();
        assert_eq!(all.len(), expected);
    }
}
