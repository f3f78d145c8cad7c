//! Definition-level brute force over subsets. Exponential in the number of
//! points; meant for cross-checking the fast characterizations on small
//! spaces.

use super::{sort_lexicographic, FiniteSpace, SubsetMask};

/// Subsets of `s` that are closed in the subspace topology on `s`.
pub fn relatively_closed_subsets(space: &FiniteSpace, s: SubsetMask) -> Vec<SubsetMask> {
    s.submasks()
        .filter(|&a| space.down_closure(a).intersection(s) == a)
        .collect()
}

/// `s` is nonempty and not the union of two relatively closed proper subsets.
pub fn is_irreducible_subset(space: &FiniteSpace, s: SubsetMask) -> bool {
    if s.is_empty() || !s.is_subset(space.points()) {
        return false;
    }
    let proper: Vec<SubsetMask> = relatively_closed_subsets(space, s)
        .into_iter()
        .filter(|&a| a != s)
        .collect();
    !proper
        .iter()
        .any(|&a| proper.iter().any(|&b| a.union(b) == s))
}

/// The `⊆`-maximal irreducible subsets, found among all subsets.
pub fn irreducible_components(space: &FiniteSpace) -> Vec<SubsetMask> {
    let irreducible: Vec<SubsetMask> = space
        .points()
        .submasks()
        .filter(|&s| is_irreducible_subset(space, s))
        .collect();
    let mut maximal: Vec<SubsetMask> = irreducible
        .iter()
        .copied()
        .filter(|&s| !irreducible.iter().any(|&t| t != s && s.is_subset(t)))
        .collect();
    sort_lexicographic(&mut maximal);
    maximal
}

/// `s` admits no splitting into two nonempty relatively open pieces.
pub fn is_connected_subset(space: &FiniteSpace, s: SubsetMask) -> bool {
    s.submasks().all(|a| {
        let b = s.difference(a);
        let a_open = space.up_closure(a).intersection(s) == a;
        let b_open = space.up_closure(b).intersection(s) == b;
        a.is_empty() || b.is_empty() || !(a_open && b_open)
    })
}

/// No partition of the space into two nonempty open sets.
pub fn is_connected(space: &FiniteSpace) -> bool {
    is_connected_subset(space, space.points())
}

/// The `⊆`-maximal connected nonempty subsets.
pub fn connected_components(space: &FiniteSpace) -> Vec<SubsetMask> {
    let connected: Vec<SubsetMask> = space
        .points()
        .submasks()
        .filter(|&s| !s.is_empty() && is_connected_subset(space, s))
        .collect();
    let mut maximal: Vec<SubsetMask> = connected
        .iter()
        .copied()
        .filter(|&s| !connected.iter().any(|&t| t != s && s.is_subset(t)))
        .collect();
    sort_lexicographic(&mut maximal);
    maximal
}

/// Some subset `N` with `x` in its interior is irreducible.
pub fn has_irreducible_neighbourhood(space: &FiniteSpace, x: usize) -> bool {
    space
        .points()
        .submasks()
        .any(|nb| space.interior(nb).contains(x) && is_irreducible_subset(space, nb))
}

pub fn is_locally_irreducible(space: &FiniteSpace) -> bool {
    (0..space.len()).all(|x| has_irreducible_neighbourhood(space, x))
}

/// Longest strict chain among irreducible closed subsets, minus one.
pub fn dimension(space: &FiniteSpace) -> Option<usize> {
    let mut irr_closed: Vec<SubsetMask> = space
        .points()
        .submasks()
        .filter(|&s| space.is_closed(s) && is_irreducible_subset(space, s))
        .collect();
    if irr_closed.is_empty() {
        return None;
    }
    irr_closed.sort_by_key(|s| s.len());
    let mut longest = vec![0usize; irr_closed.len()];
    for i in 0..irr_closed.len() {
        for j in 0..i {
            if irr_closed[j] != irr_closed[i] && irr_closed[j].is_subset(irr_closed[i]) {
                longest[i] = longest[i].max(longest[j] + 1);
            }
        }
    }
    longest.into_iter().max()
}
