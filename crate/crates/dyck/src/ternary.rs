//! The ternary triplet forest.
//!
//! Every Dyck number `d >= 1` generates the triplet `(4d-1, 4d+1, 4d+3)`,
//! and all three members share the single parent candidate `2*floor(d/8)+1`.
//! A node is a tree root exactly when that candidate either fails validation
//! or does not list the node among its children. Roots and edges are decided
//! purely locally; no global forest needs to be built.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Error;
use crate::levels::{mersenne, LevelView, MAX_ENUM_LEVEL};
use crate::number::{validate, Dyck};

/// Largest bound [`forest_check`] accepts.
pub const MAX_FOREST_BOUND: u32 = 20;

/// The triplet `(4d-1, 4d+1, 4d+3)` generated by `d`.
///
/// All three members are themselves Dyck numbers; a node of level `k > 1`
/// generates its triplet at level `k + 2`, while node 1 generates (3, 5, 7)
/// across levels 2 and 3.
pub fn children(d: &Dyck) -> Result<[Dyck; 3], Error> {
    if d.is_zero() {
        return Err(Error::UndefinedOnZero);
    }
    let quad = d.value() << 2u32;
    let child = |v: BigUint| Dyck::new(v).expect("triplet members of a Dyck number are Dyck");
    Ok([child(&quad - 1u32), child(&quad + 1u32), child(&quad + 3u32)])
}

/// The parent of `d` in the triplet forest, when one exists.
///
/// The candidate `2*floor(d/8)+1` is accepted only if it validates and `d`
/// actually appears in its triplet; otherwise `d` is a root. The membership
/// check always runs rather than shortcutting on residues.
pub fn parent(d: &Dyck) -> Option<Dyck> {
    if d.is_zero() {
        return None;
    }
    let candidate: BigUint = (d.value() >> 3u32) << 1u32 | BigUint::one();
    if !validate(&candidate).is_dyck {
        return None;
    }
    let p = Dyck::new_unchecked(candidate);
    let in_triplet = children(&p)
        .expect("candidate parent is positive")
        .iter()
        .any(|c| c == d);
    in_triplet.then_some(p)
}

/// True iff `d` has no parent in the forest (`d = 1` included). 0 is not a
/// forest node and reports false.
pub fn is_ternary_root(d: &Dyck) -> bool {
    !d.is_zero() && parent(d).is_none()
}

/// Per-level findings of a forest scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryLevelStats {
    pub level: u32,
    pub terms: u64,
    pub roots: Vec<Dyck>,
}

/// Outcome of [`forest_check`]. A healthy forest has no collisions, no
/// inconsistencies, and no coprimality failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryReport {
    pub level_bound: u32,
    pub levels: Vec<TernaryLevelStats>,
    /// Values that would belong to the triplets of two distinct parents.
    pub triplet_collisions: Vec<BigUint>,
    /// Nodes whose parent edge fails the mutual membership checks.
    pub inconsistencies: Vec<BigUint>,
    /// Levels `>= 4` within the bound whose Mersenne triplet is not
    /// pairwise coprime.
    pub coprime_failures: Vec<u32>,
}

impl TernaryReport {
    pub fn is_consistent(&self) -> bool {
        self.triplet_collisions.is_empty()
            && self.inconsistencies.is_empty()
            && self.coprime_failures.is_empty()
    }

    pub fn total_roots(&self) -> u64 {
        self.levels.iter().map(|l| l.roots.len() as u64).sum()
    }
}

fn check_level(n: u32) -> TernaryLevelStats {
    let mut stats = TernaryLevelStats { level: n, terms: 0, roots: Vec::new() };
    for term in LevelView::new(n).expect("bound is within enumerable range").iter() {
        stats.terms += 1;
        if is_ternary_root(&term) {
            stats.roots.push(term);
        }
    }
    stats
}

/// Verifies the forest structure over all levels up to `bound`.
///
/// Checks that every node is either a root or carries exactly one parent
/// edge consistent with `children`, that no value lies in two triplets, and
/// that the Mersenne triplets at the tail of each level are pairwise
/// coprime.
pub fn forest_check(bound: u32) -> Result<TernaryReport, Error> {
    if bound == 0 {
        return Err(Error::InvalidLevel);
    }
    if bound > MAX_FOREST_BOUND {
        return Err(Error::BoundTooLarge { bound, max: MAX_FOREST_BOUND });
    }

    #[cfg(feature = "parallel")]
    let levels: Vec<TernaryLevelStats> =
        (1..=bound).into_par_iter().map(check_level).collect();
    #[cfg(not(feature = "parallel"))]
    let levels: Vec<TernaryLevelStats> = (1..=bound).map(check_level).collect();

    // Triplets of nodes up to level bound-2 land within the bound; walking
    // them detects any value claimed by two parents and any parent edge that
    // disagrees with the child's own parent computation.
    let mut seen: std::collections::BTreeMap<BigUint, BigUint> = std::collections::BTreeMap::new();
    let mut triplet_collisions = Vec::new();
    let mut inconsistencies = Vec::new();
    if bound >= 2 {
        for n in 1..=(bound - 2).max(1) {
            for node in LevelView::new(n).expect("within range").iter() {
                for child in children(&node).expect("level terms are positive") {
                    if child.bit_length() > u64::from(bound) {
                        continue;
                    }
                    if parent(&child).as_ref() != Some(&node) {
                        inconsistencies.push(child.value().clone());
                    }
                    if let Some(prev) =
                        seen.insert(child.value().clone(), node.value().clone())
                    {
                        if prev != *node.value() {
                            triplet_collisions.push(child.value().clone());
                        }
                    }
                }
            }
        }
    }

    let mut coprime_failures = Vec::new();
    for n in 4..=bound {
        if !mersenne_triplet_coprime(n) {
            coprime_failures.push(n);
        }
    }

    Ok(TernaryReport { level_bound: bound, levels, triplet_collisions, inconsistencies, coprime_failures })
}

/// True iff the three members of `(M_n - 4, M_n - 2, M_n)` are pairwise
/// coprime.
pub fn mersenne_triplet_coprime(n: u32) -> bool {
    let m = mersenne(n);
    let triplet = [&m - 4u32, &m - 2u32, m.clone()];
    triplet
        .iter()
        .enumerate()
        .all(|(i, a)| triplet[i + 1..].iter().all(|b| a.gcd(b).is_one()))
}

const _: () = assert!(MAX_FOREST_BOUND <= MAX_ENUM_LEVEL);
