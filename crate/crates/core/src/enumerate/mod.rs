//! Exhaustive generation of finite topologies and the theorem harness.
//!
//! Spaces on `n` labeled points are produced by extending every preorder on
//! `n - 1` points with one new point. The new point `k` is given a down-set
//! `D = {y | y ⪯ k}` and an up-set `U = {y | k ⪯ y}`; the result is a
//! preorder exactly when `D` is down-closed, `U` is up-closed and `d ⪯ u`
//! already holds for all `d ∈ D`, `u ∈ U`. Restriction to the first `n - 1`
//! points inverts the extension, so each preorder appears exactly once.

mod harness;
mod predicate;

use crate::error::{Error, Result};
use crate::finspace::{FiniteSpace, SubsetMask};

pub use harness::{
    find_counterexample, find_counterexample_bounded, verify_theorems, verify_theorems_with,
    CounterexampleHit, EnumerationReport, Invariant, VerifyOptions, Violation,
};
pub use predicate::Predicate;

/// Default largest `n` accepted without an explicit override.
pub const DEFAULT_BOUND: usize = 5;

/// Largest `n` accepted at all (9 535 241 labeled spaces).
pub const HARD_LIMIT: usize = 7;

/// Largest `n` on which the brute-force cross-checks run.
pub const BRUTE_FORCE_LIMIT: usize = 4;

pub fn check_bound(n: usize, bound: usize) -> Result<()> {
    let bound = bound.min(HARD_LIMIT);
    if n > bound {
        Err(Error::BoundExceeded { n, bound })
    } else {
        Ok(())
    }
}

/// Every finite topology on `n` labeled points, `n <= DEFAULT_BOUND`.
pub fn all_spaces(n: usize) -> Result<impl Iterator<Item = FiniteSpace>> {
    all_spaces_bounded(n, DEFAULT_BOUND)
}

pub fn all_spaces_bounded(n: usize, bound: usize) -> Result<impl Iterator<Item = FiniteSpace>> {
    check_bound(n, bound)?;
    let base = if n == 0 {
        Vec::new()
    } else {
        spaces_of_size(n - 1)
    };
    let head = (n == 0).then(FiniteSpace::empty);
    Ok(head
        .into_iter()
        .chain(base.into_iter().flat_map(|s| one_point_extensions(&s))))
}

/// All spaces on exactly `n` points, materialized.
pub fn spaces_of_size(n: usize) -> Vec<FiniteSpace> {
    let mut level = vec![FiniteSpace::empty()];
    for _ in 0..n {
        level = level.iter().flat_map(one_point_extensions).collect();
    }
    level
}

/// The spaces on `space.len() + 1` points restricting to `space`.
pub fn one_point_extensions(space: &FiniteSpace) -> Vec<FiniteSpace> {
    let k = space.len();
    let full = space.points();
    let downs: Vec<SubsetMask> = full.submasks().filter(|&d| space.is_closed(d)).collect();
    let ups: Vec<SubsetMask> = full.submasks().filter(|&u| space.is_open(u)).collect();
    let old = space.up_sets();
    let mut out = Vec::new();
    for &d in &downs {
        for &u in &ups {
            let compatible = d
                .iter()
                .all(|x| u.is_subset(SubsetMask::from_bits(old[x])));
            if !compatible {
                continue;
            }
            let mut up: Vec<u32> = old.to_vec();
            for x in d.iter() {
                up[x] |= 1 << k;
            }
            up.push(u.bits() | (1 << k));
            out.push(FiniteSpace::from_up_sets_unchecked(up));
        }
    }
    out
}

/// Minimum relabeling of `space` under the derived order on spaces.
pub fn canonical_form(space: &FiniteSpace) -> FiniteSpace {
    let n = space.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = space.clone();
    permutations(&mut perm, 0, &mut |p| {
        let candidate = space.relabel(p);
        if candidate < best {
            best = candidate;
        }
    });
    best
}

pub fn are_isomorphic(a: &FiniteSpace, b: &FiniteSpace) -> bool {
    a.len() == b.len() && canonical_form(a) == canonical_form(b)
}

/// One canonical representative per isomorphism class on `n` points.
pub fn isomorphism_classes(n: usize, bound: usize) -> Result<Vec<FiniteSpace>> {
    check_bound(n, bound)?;
    let mut reps: Vec<FiniteSpace> = spaces_of_size(n).iter().map(canonical_form).collect();
    reps.sort();
    reps.dedup();
    Ok(reps)
}

fn permutations(perm: &mut Vec<usize>, start: usize, visit: &mut impl FnMut(&[usize])) {
    if start == perm.len() {
        visit(perm);
        return;
    }
    for i in start..perm.len() {
        perm.swap(start, i);
        permutations(perm, start + 1, visit);
        perm.swap(start, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Independent oracle: all relations on `n` points, filtered to the
    /// reflexive and transitive ones.
    fn brute_preorder_count(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
            .collect();
        (0u64..1 << pairs.len())
            .filter(|&bits| {
                let rel = |x: usize, y: usize| {
                    x == y || {
                        let i = pairs.iter().position(|&p| p == (x, y)).unwrap();
                        bits & (1 << i) != 0
                    }
                };
                (0..n).all(|x| {
                    (0..n).all(|y| !rel(x, y) || (0..n).all(|z| !rel(y, z) || rel(x, z)))
                })
            })
            .count()
    }

    #[test]
    fn labeled_counts_match_filtered_relations() {
        for n in 0..=4 {
            let oracle = brute_preorder_count(n);
            assert_eq!(all_spaces(n).unwrap().count(), oracle, "n = {n}");
        }
        assert_eq!(brute_preorder_count(3), 29);
        assert_eq!(brute_preorder_count(4), 355);
    }

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| all_spaces(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 4, 29, 355, 6942]);
    }

    #[test]
    fn no_duplicates_and_all_valid() {
        let spaces: Vec<FiniteSpace> = all_spaces(4).unwrap().collect();
        let distinct: HashSet<&FiniteSpace> = spaces.iter().collect();
        assert_eq!(distinct.len(), spaces.len());
        for s in &spaces {
            assert!(FiniteSpace::from_matrix(&s.matrix()).is_ok());
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            all_spaces(6).err(),
            Some(Error::BoundExceeded { n: 6, bound: 5 })
        ));
        assert!(all_spaces_bounded(6, 6).is_ok());
        assert!(all_spaces_bounded(8, 100).is_err());
    }

    #[test]
    fn isomorphism_class_counts() {
        let counts: Vec<usize> = (0..=4)
            .map(|n| isomorphism_classes(n, DEFAULT_BOUND).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 3, 9, 33]);
    }

    #[test]
    fn every_labeled_space_is_isomorphic_to_some_class_rep() {
        let reps = isomorphism_classes(3, DEFAULT_BOUND).unwrap();
        for s in all_spaces(3).unwrap() {
            assert_eq!(reps.iter().filter(|r| are_isomorphic(r, &s)).count(), 1);
        }
    }
}
