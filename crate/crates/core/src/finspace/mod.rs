//! Finite topological spaces, encoded by their specialization preorder.
//!
//! A finite topology on `{0, .., n-1}` is the same thing as a preorder `⪯`
//! on those points. We fix the direction `x ⪯ y` iff `x ∈ cl{y}`, so closed
//! sets are the `⪯`-down-closed sets and open sets are the `⪯`-up-closed
//! sets. Non-T0 spaces (proper preorders) are allowed throughout.
//!
//! Most predicates come in two flavours: a fast characterization on
//! [`FiniteSpace`] itself, and a definition-level brute force in [`brute`].
//! The two are cross-checked by the enumeration harness.

pub mod brute;
mod mask;
mod profile;

use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use mask::SubsetMask;
pub(crate) use mask::sort_lexicographic;
pub use profile::{ComponentFamily, Condition, PropertyProfile, Witness};

/// Hard limit on the number of points, set by [`SubsetMask`]'s width.
pub const MAX_POINTS: usize = 32;

/// A finite topological space on points `0..n`.
///
/// `up[x]` holds `{y | x ⪯ y}`, the minimal open neighbourhood of `x`;
/// `down[x]` holds `{y | y ⪯ x}`, the closure of `{x}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteSpace {
    n: usize,
    up: Vec<u32>,
    down: Vec<u32>,
}

impl FiniteSpace {
    pub fn empty() -> Self {
        FiniteSpace {
            n: 0,
            up: Vec::new(),
            down: Vec::new(),
        }
    }

    pub fn discrete(n: usize) -> Result<Self> {
        Self::from_pairs(n, &[])
    }

    pub fn indiscrete(n: usize) -> Result<Self> {
        Self::from_fn(n, |_, _| true)
    }

    /// Builds the space from a relation, which must already be a preorder.
    pub fn from_fn(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        check_size(n)?;
        let mut up = vec![0u32; n];
        for (x, row) in up.iter_mut().enumerate() {
            for y in 0..n {
                if leq(x, y) {
                    *row |= 1 << y;
                }
            }
        }
        Self::from_up_sets(up)
    }

    /// Builds the space from a boolean matrix `leq[x][y]` meaning `x ⪯ y`.
    pub fn from_matrix(leq: &[Vec<bool>]) -> Result<Self> {
        let n = leq.len();
        if let Some((x, row)) = leq.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::NotAPreorder(format!(
                "row {x} has length {}, expected {n}",
                row.len()
            )));
        }
        Self::from_fn(n, |x, y| leq[x][y])
    }

    /// Reflexive-transitive closure of the given `(x, y)` pairs, read as `x ⪯ y`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        check_size(n)?;
        let mut up: Vec<u32> = (0..n).map(|x| 1 << x).collect();
        for &(x, y) in pairs {
            for p in [x, y] {
                if p >= n {
                    return Err(Error::PointOutOfRange { point: p, n });
                }
            }
            up[x] |= 1 << y;
        }
        // Warshall
        for k in 0..n {
            for x in 0..n {
                if up[x] & (1 << k) != 0 {
                    up[x] |= up[k];
                }
            }
        }
        Ok(Self::from_up_sets_unchecked(up))
    }

    /// Builds the space from minimal open neighbourhoods, validating that
    /// they describe a preorder.
    pub fn from_up_sets(up: Vec<u32>) -> Result<Self> {
        let n = up.len();
        check_size(n)?;
        let full = SubsetMask::full(n).bits();
        for (x, &row) in up.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::SubsetOutOfRange { n });
            }
            if row & (1 << x) == 0 {
                return Err(Error::NotAPreorder(format!("{x} ⪯ {x} is missing")));
            }
            for y in SubsetMask::from_bits(row).iter() {
                if up[y] & !row != 0 {
                    let z = SubsetMask::from_bits(up[y] & !row).first().unwrap_or(0);
                    return Err(Error::NotAPreorder(format!(
                        "{x} ⪯ {y} and {y} ⪯ {z} but not {x} ⪯ {z}"
                    )));
                }
            }
        }
        Ok(Self::from_up_sets_unchecked(up))
    }

    pub(crate) fn from_up_sets_unchecked(up: Vec<u32>) -> Self {
        let n = up.len();
        let mut down = vec![0u32; n];
        for (x, &row) in up.iter().enumerate() {
            for y in SubsetMask::from_bits(row).iter() {
                down[y] |= 1 << x;
            }
        }
        FiniteSpace { n, up, down }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn points(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    /// `x ⪯ y`, i.e. `x` lies in the closure of `{y}`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x] & (1 << y) != 0
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.leq(x, y)).collect())
            .collect()
    }

    pub(crate) fn up_sets(&self) -> &[u32] {
        &self.up
    }

    pub fn check_point(&self, x: usize) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::PointOutOfRange { point: x, n: self.n })
        }
    }

    pub fn check_subset(&self, s: SubsetMask) -> Result<()> {
        if s.is_subset(self.points()) {
            Ok(())
        } else {
            Err(Error::SubsetOutOfRange { n: self.n })
        }
    }

    pub(crate) fn down_closure(&self, s: SubsetMask) -> SubsetMask {
        s.iter()
            .fold(SubsetMask::EMPTY, |acc, y| acc.union(SubsetMask::from_bits(self.down[y])))
    }

    pub(crate) fn up_closure(&self, s: SubsetMask) -> SubsetMask {
        s.iter()
            .fold(SubsetMask::EMPTY, |acc, y| acc.union(SubsetMask::from_bits(self.up[y])))
    }

    /// Smallest closed superset of `s`: `{x | ∃y ∈ s, x ⪯ y}`.
    pub fn closure(&self, s: SubsetMask) -> Result<SubsetMask> {
        self.check_subset(s)?;
        Ok(self.down_closure(s))
    }

    /// Largest open subset of `s`.
    pub fn interior(&self, s: SubsetMask) -> SubsetMask {
        s.iter()
            .filter(|&x| SubsetMask::from_bits(self.up[x]).is_subset(s))
            .collect()
    }

    pub fn is_closed(&self, s: SubsetMask) -> bool {
        self.down_closure(s) == s
    }

    pub fn is_open(&self, s: SubsetMask) -> bool {
        self.up_closure(s) == s
    }

    /// Intersection of all open sets containing `x`; its `⪯`-up-set.
    pub fn minimal_open_neighbourhood(&self, x: usize) -> Result<SubsetMask> {
        self.check_point(x)?;
        Ok(SubsetMask::from_bits(self.up[x]))
    }

    /// A subset is irreducible iff its T0 quotient has a greatest element,
    /// i.e. some `g ∈ s` has every point of `s` in its closure.
    ///
    /// Points outside the space make the answer `false`.
    pub fn is_irreducible_subset(&self, s: SubsetMask) -> bool {
        if s.is_empty() || !s.is_subset(self.points()) {
            return false;
        }
        s.iter()
            .any(|g| s.is_subset(SubsetMask::from_bits(self.down[g])))
    }

    /// Points with no strictly larger point.
    pub fn maximal_points(&self) -> SubsetMask {
        (0..self.n)
            .filter(|&x| self.up[x] & !self.down[x] == 0)
            .collect()
    }

    /// Closures of the `⪯`-maximal points, de-duplicated and sorted.
    pub fn irreducible_components(&self) -> Vec<SubsetMask> {
        let mut comps: Vec<SubsetMask> = self
            .maximal_points()
            .iter()
            .map(|x| SubsetMask::from_bits(self.down[x]))
            .collect();
        sort_lexicographic(&mut comps);
        comps.dedup();
        comps
    }

    /// Components of the comparability graph of `⪯`.
    pub fn connected_components(&self) -> Vec<SubsetMask> {
        let mut remaining = self.points();
        let mut comps = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = SubsetMask::singleton(start);
            loop {
                let grown = comp
                    .iter()
                    .fold(comp, |acc, x| acc.union(SubsetMask::from_bits(self.up[x] | self.down[x])));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            remaining = remaining.difference(comp);
            comps.push(comp);
        }
        comps
    }

    /// True iff there is no partition into two nonempty open sets.
    /// The empty space is connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Every point has an irreducible neighbourhood. It suffices to test the
    /// minimal open neighbourhood: any neighbourhood contains it, and nonempty
    /// open subsets of irreducible sets are irreducible.
    pub fn is_locally_irreducible(&self) -> bool {
        self.first_point_without_irreducible_neighbourhood().is_none()
    }

    pub(crate) fn first_point_without_irreducible_neighbourhood(&self) -> Option<usize> {
        (0..self.n).find(|&x| !self.has_irreducible_neighbourhood(x))
    }

    pub fn has_irreducible_neighbourhood(&self, x: usize) -> bool {
        x < self.n && self.is_irreducible_subset(SubsetMask::from_bits(self.up[x]))
    }

    /// `x` lies in exactly one irreducible component.
    pub fn pointwise_irreducible_at(&self, x: usize) -> Result<bool> {
        self.check_point(x)?;
        Ok(self
            .irreducible_components()
            .iter()
            .filter(|c| c.contains(x))
            .count()
            == 1)
    }

    /// Krull dimension: length of the longest strict chain of irreducible
    /// closed subsets, which is the height of the T0 quotient poset.
    /// `None` for the empty space.
    pub fn dimension(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        // Points sorted by closure size so strictly smaller closures come first.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&x| self.down[x].count_ones());
        let mut height = vec![0usize; self.n];
        for &x in &order {
            let strictly_below = self.down[x] & !self.up[x];
            height[x] = SubsetMask::from_bits(strictly_below)
                .iter()
                .map(|y| height[y] + 1)
                .max()
                .unwrap_or(0);
        }
        height.into_iter().max()
    }

    pub fn is_t0(&self) -> bool {
        (0..self.n).all(|x| self.up[x] & self.down[x] == 1 << x)
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.n).all(|x| self.up[x] == 1 << x)
    }

    pub fn is_totally_disconnected(&self) -> bool {
        self.connected_components().iter().all(|c| c.len() == 1)
    }

    /// Class index of each point under topological indistinguishability.
    /// Classes are numbered in order of their smallest member.
    pub fn kolmogorov_classes(&self) -> Vec<usize> {
        let mut class = vec![usize::MAX; self.n];
        let mut next = 0;
        for x in 0..self.n {
            if class[x] != usize::MAX {
                continue;
            }
            for y in SubsetMask::from_bits(self.up[x] & self.down[x]).iter() {
                class[y] = next;
            }
            next += 1;
        }
        class
    }

    /// Quotient by `x ⪯ y ∧ y ⪯ x`; always T0.
    pub fn kolmogorov_quotient(&self) -> FiniteSpace {
        let class = self.kolmogorov_classes();
        let k = class.iter().copied().max().map_or(0, |m| m + 1);
        let mut reps = vec![0usize; k];
        for x in (0..self.n).rev() {
            reps[class[x]] = x;
        }
        let up = reps
            .iter()
            .map(|&r| {
                SubsetMask::from_bits(self.up[r])
                    .iter()
                    .fold(0u32, |acc, y| acc | (1 << class[y]))
            })
            .collect();
        FiniteSpace::from_up_sets_unchecked(up)
    }

    /// The space with point `x` renamed to `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteSpace {
        debug_assert_eq!(perm.len(), self.n);
        let mut up = vec![0u32; self.n];
        for x in 0..self.n {
            up[perm[x]] = SubsetMask::from_bits(self.up[x])
                .iter()
                .fold(0u32, |acc, y| acc | (1 << perm[y]));
        }
        FiniteSpace::from_up_sets_unchecked(up)
    }

    /// The subspace on `s`, with points renumbered in increasing order.
    pub fn subspace(&self, s: SubsetMask) -> Result<FiniteSpace> {
        self.check_subset(s)?;
        let pts = s.to_vec();
        FiniteSpace::from_fn(pts.len(), |i, j| self.leq(pts[i], pts[j]))
    }

    /// Graphviz rendering of the Hasse diagram of the T0 quotient. Each node
    /// is a class of indistinguishable points; edges run from a point to the
    /// points covering it, so generic points sit at the top.
    pub fn to_dot(&self) -> String {
        let class = self.kolmogorov_classes();
        let q = self.kolmogorov_quotient();
        let mut out = String::from("digraph specialization {\n  rankdir=BT;\n");
        for c in 0..q.n {
            let members: SubsetMask = (0..self.n).filter(|&x| class[x] == c).collect();
            let _ = writeln!(out, "  c{c} [label=\"{members}\"];");
        }
        for x in 0..q.n {
            for y in SubsetMask::from_bits(q.up[x]).iter().filter(|&y| y != x) {
                let covered = SubsetMask::from_bits(q.up[x])
                    .iter()
                    .all(|z| z == x || z == y || !q.leq(z, y));
                if covered {
                    let _ = writeln!(out, "  c{x} -> c{y};");
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn profile(&self) -> PropertyProfile {
        PropertyProfile::compute(self)
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_POINTS {
        Err(Error::TooManyPoints { n, max: MAX_POINTS })
    } else {
        Ok(())
    }
}

impl std::fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteSpace(n={}, [", self.n)?;
        let mut first = true;
        for x in 0..self.n {
            for y in (0..self.n).filter(|&y| y != x && self.leq(x, y)) {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "{x}⪯{y}")?;
            }
        }
        write!(f, "])")
    }
}

#[derive(Serialize, Deserialize)]
struct SpaceRepr {
    n: usize,
    leq: Vec<Vec<bool>>,
}

impl Serialize for FiniteSpace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SpaceRepr {
            n: self.n,
            leq: self.matrix(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FiniteSpace {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SpaceRepr::deserialize(deserializer)?;
        if repr.leq.len() != repr.n {
            return Err(serde::de::Error::custom(format!(
                "n = {} but leq has {} rows",
                repr.n,
                repr.leq.len()
            )));
        }
        FiniteSpace::from_matrix(&repr.leq).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sierpinski() -> FiniteSpace {
        FiniteSpace::from_pairs(2, &[(0, 1)]).unwrap()
    }

    /// a = 0, b = 1 open points; c = 2 the closed point below both.
    fn three_point() -> FiniteSpace {
        FiniteSpace::from_pairs(3, &[(2, 0), (2, 1)]).unwrap()
    }

    fn m(points: &[usize]) -> SubsetMask {
        SubsetMask::from_points(points.iter().copied())
    }

    /// Closed sets by brute force: subsets whose complement is up-closed.
    fn closed_sets(space: &FiniteSpace) -> Vec<SubsetMask> {
        space
            .points()
            .submasks()
            .filter(|&c| {
                let open = space.points().difference(c);
                open.iter()
                    .all(|x| (0..space.len()).all(|y| !space.leq(x, y) || open.contains(y)))
            })
            .collect()
    }

    #[test]
    fn closure_examples() {
        let s = sierpinski();
        assert_eq!(s.closure(m(&[1])).unwrap(), m(&[0, 1]));
        assert_eq!(s.closure(SubsetMask::EMPTY).unwrap(), SubsetMask::EMPTY);
        assert_eq!(
            FiniteSpace::empty().closure(SubsetMask::EMPTY).unwrap(),
            SubsetMask::EMPTY
        );
        let t = three_point();
        let a = m(&[0]);
        let oracle = closed_sets(&t)
            .into_iter()
            .filter(|c| a.is_subset(*c))
            .min_by_key(|c| c.len())
            .unwrap();
        assert_eq!(oracle, m(&[0, 2]));
        assert_eq!(t.closure(a).unwrap(), oracle);
        assert!(matches!(
            t.closure(m(&[3])),
            Err(Error::SubsetOutOfRange { n: 3 })
        ));
    }

    #[test]
    fn closure_agrees_with_closed_set_intersection() {
        let t = three_point();
        let closed = closed_sets(&t);
        for s in t.points().submasks() {
            let oracle = closed
                .iter()
                .filter(|c| s.is_subset(**c))
                .fold(t.points(), |acc, c| acc.intersection(*c));
            assert_eq!(t.closure(s).unwrap(), oracle, "s = {s}");
        }
    }

    #[test]
    fn irreducibility_examples() {
        let s = sierpinski();
        assert!(s.is_irreducible_subset(s.points()));
        let t = three_point();
        assert!(!t.is_irreducible_subset(t.points()));
        assert!(t.is_irreducible_subset(m(&[0, 2])));
        assert!(!t.is_irreducible_subset(SubsetMask::EMPTY));
        assert!(!t.is_irreducible_subset(m(&[5])));
    }

    #[test]
    fn component_examples() {
        let t = three_point();
        assert_eq!(t.irreducible_components(), vec![m(&[0, 2]), m(&[1, 2])]);
        assert_eq!(t.connected_components(), vec![m(&[0, 1, 2])]);
        assert!(FiniteSpace::empty().irreducible_components().is_empty());
        assert!(FiniteSpace::empty().connected_components().is_empty());
        let d = FiniteSpace::discrete(2).unwrap();
        assert_eq!(d.irreducible_components(), vec![m(&[0]), m(&[1])]);
        assert_eq!(d.connected_components(), vec![m(&[0]), m(&[1])]);
        assert_eq!(sierpinski().connected_components(), vec![m(&[0, 1])]);
    }

    #[test]
    fn indistinguishable_generic_points_give_one_component() {
        let s = FiniteSpace::from_pairs(3, &[(0, 1), (1, 2), (2, 1)]).unwrap();
        assert_eq!(s.irreducible_components(), vec![m(&[0, 1, 2])]);
    }

    #[test]
    fn connectedness_examples() {
        assert!(FiniteSpace::empty().is_connected());
        assert!(!FiniteSpace::discrete(2).unwrap().is_connected());
        assert!(three_point().is_connected());
        assert!(brute::is_connected(&three_point()));
    }

    #[test]
    fn minimal_open_neighbourhoods() {
        assert_eq!(sierpinski().minimal_open_neighbourhood(0).unwrap(), m(&[0, 1]));
        let d = FiniteSpace::discrete(3).unwrap();
        for x in 0..3 {
            assert_eq!(d.minimal_open_neighbourhood(x).unwrap(), m(&[x]));
        }
        let t = three_point();
        assert_eq!(t.minimal_open_neighbourhood(2).unwrap(), m(&[0, 1, 2]));
        // only open set containing c is the whole space
        let opens: Vec<_> = t
            .points()
            .submasks()
            .filter(|&u| t.is_open(u) && u.contains(2))
            .collect();
        assert_eq!(opens, vec![t.points()]);
        assert!(t.minimal_open_neighbourhood(3).is_err());
    }

    #[test]
    fn local_irreducibility_examples() {
        let t = three_point();
        assert!(!t.is_locally_irreducible());
        assert_eq!(t.first_point_without_irreducible_neighbourhood(), Some(2));
        assert!(FiniteSpace::empty().is_locally_irreducible());
        assert!(sierpinski().is_locally_irreducible());
    }

    #[test]
    fn pointwise_examples() {
        let t = three_point();
        assert!(!t.pointwise_irreducible_at(2).unwrap());
        assert!(t.pointwise_irreducible_at(0).unwrap());
        assert!(t.pointwise_irreducible_at(1).unwrap());
        let s = sierpinski();
        assert!((0..2).all(|x| s.pointwise_irreducible_at(x).unwrap()));
        assert!(t.pointwise_irreducible_at(7).is_err());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(FiniteSpace::discrete(3).unwrap().dimension(), Some(0));
        assert_eq!(sierpinski().dimension(), Some(1));
        assert_eq!(three_point().dimension(), Some(1));
        assert_eq!(FiniteSpace::empty().dimension(), None);
        assert_eq!(FiniteSpace::indiscrete(3).unwrap().dimension(), Some(0));
        let chain = FiniteSpace::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(chain.dimension(), Some(3));
        assert_eq!(brute::dimension(&chain), Some(3));
        assert_eq!(brute::dimension(&three_point()), Some(1));
    }

    #[test]
    fn kolmogorov_examples() {
        let ind = FiniteSpace::indiscrete(2).unwrap();
        assert_eq!(ind.kolmogorov_quotient(), FiniteSpace::discrete(1).unwrap());
        let t = three_point();
        assert_eq!(t.kolmogorov_quotient(), t);
        // two indistinguishable generic points 1, 2 over closed point 0, plus
        // a second closed point 3 below them
        let s = FiniteSpace::from_pairs(4, &[(0, 1), (1, 2), (2, 1), (3, 1)]).unwrap();
        let q = s.kolmogorov_quotient();
        assert_eq!(q.len(), 3);
        assert!(q.is_t0());
        // class 0 = {0}, class 1 = {1,2}, class 2 = {3}
        assert_eq!(s.kolmogorov_classes(), vec![0, 1, 1, 2]);
        assert_eq!(q, FiniteSpace::from_pairs(3, &[(0, 1), (2, 1)]).unwrap());
    }

    #[test]
    fn rejects_non_preorders() {
        let not_refl = vec![vec![false, false], vec![false, true]];
        assert!(matches!(
            FiniteSpace::from_matrix(&not_refl),
            Err(Error::NotAPreorder(_))
        ));
        let not_trans = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert!(FiniteSpace::from_matrix(&not_trans).is_err());
        assert!(FiniteSpace::from_pairs(2, &[(0, 2)]).is_err());
        assert!(FiniteSpace::discrete(33).is_err());
    }

    #[test]
    fn json_shape() {
        let s = sierpinski();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"n":2,"leq":[[true,true],[false,true]]}"#);
        let back: FiniteSpace = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<FiniteSpace>(r#"{"n":3,"leq":[[true]]}"#).is_err());
    }

    #[test]
    fn dot_has_one_edge_per_cover() {
        let dot = three_point().to_dot();
        assert!(dot.contains("c2 -> c0;"));
        assert!(dot.contains("c2 -> c1;"));
        assert_eq!(dot.matches("->").count(), 2);
        let chain = FiniteSpace::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(chain.to_dot().matches("->").count(), 2);
    }
}
