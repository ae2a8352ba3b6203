//! Property-based checks of the codec, symmetry, and bijection invariants.

use dyck::{
    bij, binomial, catalan, central_binomial, children, inv_bij, parent, suffixes, validate,
    BracketWord, Dyck, PaddedWord,
};
use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;

/// Builds a Dyck number from raw coin flips: bits are laid down from the
/// least significant end and a 1 is forced whenever the suffix balance
/// would otherwise go negative, then a leading 1 caps the word. Every Dyck
/// number of length `flips.len() + 1` is reachable.
fn dyck_from_flips(flips: &[bool]) -> Dyck {
    let mut value = BigUint::zero();
    let mut balance = 0i64;
    for (i, &flip) in flips.iter().enumerate() {
        let bit = if balance == 0 { true } else { flip };
        if bit {
            value.set_bit(i as u64, true);
            balance += 1;
        } else {
            balance -= 1;
        }
    }
    value.set_bit(flips.len() as u64, true);
    Dyck::new(value).expect("construction preserves suffix balance")
}

fn arb_dyck() -> impl Strategy<Value = Dyck> {
    prop::collection::vec(any::<bool>(), 0..200).prop_map(|flips| dyck_from_flips(&flips))
}

/// Symmetric terms are sparse among random Dyck numbers, so they are built
/// directly: the word-level mirror completion of a random term is always
/// symmetric, and every symmetric term arises this way.
fn arb_symmetric() -> impl Strategy<Value = Dyck> {
    arb_dyck().prop_map(|d| if d.is_zero() { d } else { bij_oracle(&d) })
}

/// Symmetry oracle on the bracket form: mirror the word, swap the bracket
/// directions, and compare.
fn is_symmetric_oracle(d: &Dyck) -> bool {
    let word = d.brackets();
    let mirrored: String = word
        .as_str()
        .chars()
        .rev()
        .map(|c| if c == '(' { ')' } else { '(' })
        .collect();
    mirrored == word.as_str()
}

/// Bijection oracle on the word form: drop the leading bit, reverse and
/// complement the suffix, concatenate, reread as a padded word.
fn bij_oracle(d: &Dyck) -> Dyck {
    let compact = d.to_binary_string();
    let suffix = &compact[1..];
    let prefix: String = suffix
        .chars()
        .rev()
        .map(|c| if c == '1' { '0' } else { '1' })
        .collect();
    format!("{prefix}{suffix}")
        .parse::<PaddedWord>()
        .expect("mirror completion is balanced")
        .unpad()
}

proptest! {
    #[test]
    fn generated_values_validate(flips in prop::collection::vec(any::<bool>(), 0..200)) {
        let d = dyck_from_flips(&flips);
        let check = validate(d.value());
        prop_assert!(check.is_dyck);
        prop_assert_eq!(check.deficit, Some(d.deficit()));
    }

    #[test]
    fn padding_round_trips(d in arb_dyck()) {
        let padded = d.padded();
        prop_assert_eq!(padded.len() as u64, 2 * d.weight());
        prop_assert_eq!(padded.unpad(), d.clone());
        let reparsed: PaddedWord = padded.to_string().parse().unwrap();
        prop_assert_eq!(reparsed, padded);
    }

    #[test]
    fn bracket_codec_round_trips(d in arb_dyck()) {
        let word = d.brackets();
        prop_assert_eq!(word.to_dyck(), d.clone());
        let reparsed: BracketWord = word.as_str().parse().unwrap();
        prop_assert_eq!(reparsed.to_dyck(), d);
    }

    #[test]
    fn symmetry_matches_bracket_oracle(d in arb_dyck()) {
        prop_assert_eq!(d.is_symmetric(), is_symmetric_oracle(&d));
    }

    #[test]
    fn bij_matches_word_oracle(d in arb_dyck()) {
        prop_assume!(!d.is_zero());
        prop_assert_eq!(bij(&d).unwrap(), bij_oracle(&d));
    }

    #[test]
    fn bij_image_is_symmetric_and_invertible(d in arb_dyck()) {
        prop_assume!(!d.is_zero());
        let image = bij(&d).unwrap();
        prop_assert!(image.is_symmetric());
        prop_assert_eq!(image.weight(), d.bit_length() - 1);
        prop_assert_eq!(inv_bij(&image).unwrap(), d);
    }

    #[test]
    fn inv_bij_round_trips_on_symmetric_terms(d in arb_symmetric()) {
        prop_assert!(d.is_symmetric());
        let pre = inv_bij(&d).unwrap();
        prop_assert_eq!(bij(&pre).unwrap(), d);
    }

    #[test]
    fn triplet_edges_are_mutual(d in arb_dyck()) {
        prop_assume!(!d.is_zero());
        for child in children(&d).unwrap() {
            prop_assert_eq!(parent(&child), Some(d.clone()));
        }
    }

    #[test]
    fn binomial_symmetry_and_catalan_ratio(k in 0u64..60) {
        prop_assert_eq!(binomial(2 * k, k), central_binomial(k));
        prop_assert_eq!(catalan(k) * (k + 1), central_binomial(k));
        for j in 0..=k {
            prop_assert_eq!(binomial(k, j), binomial(k, k - j));
        }
    }
}

/// Every balanced word is the padding of its own unpadding: brute-forced
/// over all balanced words up to length 24 via the zero-balance members of
/// the suffix sets.
#[test]
fn all_short_padded_words_round_trip() {
    for len in (0..=24u32).step_by(2) {
        for word in suffixes(len).unwrap().iter().filter(|w| w.is_dyck_word()) {
            let padded: PaddedWord = word.to_string().parse().unwrap();
            let d = padded.unpad();
            assert!(validate(d.value()).is_dyck);
            assert_eq!(d.deficit(), u64::from(len) - d.bit_length(), "{word}");
            assert_eq!(d.padded(), padded, "{word}");
        }
    }
}
