//! Named example spaces with their expected profiles written out by hand.
//! [`GalleryEntry::validate`] recomputes the profile and compares.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finspace::{ComponentFamily, Condition, FiniteSpace, PropertyProfile, SubsetMask, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GalleryEntry {
    pub name: String,
    pub space: FiniteSpace,
    pub expected: PropertyProfile,
    pub provenance: String,
}

impl GalleryEntry {
    pub fn validate(&self) -> bool {
        self.space.profile() == self.expected
    }
}

pub const CATALOG: [&str; 7] = [
    "empty",
    "point",
    "sierpinski",
    "discrete2",
    "indiscrete2",
    "threePoint140C",
    "xySkeleton",
];

pub fn entries() -> Vec<GalleryEntry> {
    CATALOG
        .iter()
        .map(|name| gallery(name).expect("catalog names are valid"))
        .collect()
}

pub fn gallery(name: &str) -> Result<GalleryEntry> {
    let m = |pts: &[usize]| SubsetMask::from_points(pts.iter().copied());
    let entry = match name {
        "empty" => GalleryEntry {
            name: name.into(),
            space: FiniteSpace::empty(),
            expected: clean(false, true, false, true, true, None, vec![]),
            provenance: "1.36 A: the empty space is connected and locally irreducible, not irreducible"
                .into(),
        },
        "point" => GalleryEntry {
            name: name.into(),
            space: FiniteSpace::discrete(1)?,
            expected: clean(true, true, true, true, true, Some(0), vec![true]),
            provenance: "Spec of a field".into(),
        },
        "sierpinski" => GalleryEntry {
            name: name.into(),
            space: FiniteSpace::from_pairs(2, &[(0, 1)])?,
            expected: clean(true, true, true, false, false, Some(1), vec![true, true]),
            provenance: "Spec of a discrete valuation ring: closed point 0, generic point 1".into(),
        },
        "discrete2" => GalleryEntry {
            name: name.into(),
            space: FiniteSpace::discrete(2)?,
            expected: clean(false, false, true, true, true, Some(0), vec![true, true]),
            provenance: "1.36 A/B: two points, discrete; Spec of a product of two fields".into(),
        },
        "indiscrete2" => GalleryEntry {
            name: name.into(),
            space: FiniteSpace::indiscrete(2)?,
            expected: clean(true, true, true, false, false, Some(0), vec![true, true]),
            provenance: "non-T0 example: two indistinguishable points".into(),
        },
        "threePoint140C" => GalleryEntry {
            name: name.into(),
            // a = 0, b = 1 open; c = 2 closed
            space: FiniteSpace::from_pairs(3, &[(2, 0), (2, 1)])?,
            expected: two_branches(
                2,
                m(&[0, 2]),
                m(&[1, 2]),
                vec![true, true, false],
            ),
            provenance: "1.40 C: three points, one closed and the others open; not locally irreducible"
                .into(),
        },
        "xySkeleton" => GalleryEntry {
            name: name.into(),
            // origin = 0, the two axes' generic points = 1, 2
            space: FiniteSpace::from_pairs(3, &[(0, 1), (0, 2)])?,
            expected: two_branches(
                0,
                m(&[0, 1]),
                m(&[0, 2]),
                vec![false, true, true],
            ),
            provenance: "1.36 B / 2.75 A: Spec K[X,Y]/<XY> reduced to its generic points and the origin"
                .into(),
        },
        _ => {
            return Err(Error::UnknownGalleryEntry {
                name: name.into(),
                catalog: CATALOG.join(", "),
            })
        }
    };
    Ok(entry)
}

/// Profile of a space where all six conditions hold.
fn clean(
    irreducible: bool,
    connected: bool,
    nonempty: bool,
    discrete: bool,
    totally_disconnected: bool,
    dimension: Option<usize>,
    pointwise_irreducible: Vec<bool>,
) -> PropertyProfile {
    PropertyProfile {
        p1: true,
        p2: true,
        p3: true,
        p4: true,
        p5: true,
        p6: true,
        irreducible,
        connected,
        nonempty,
        discrete,
        totally_disconnected,
        dimension,
        pointwise_irreducible,
        witnesses: BTreeMap::new(),
    }
}

/// Two irreducible components meeting in one closed point.
fn two_branches(
    closed: usize,
    first: SubsetMask,
    second: SubsetMask,
    pointwise_irreducible: Vec<bool>,
) -> PropertyProfile {
    let whole = first.union(second);
    let witnesses = BTreeMap::from([
        (Condition::P1, Witness::NoIrreducibleNeighbourhood { point: closed }),
        (Condition::P2, Witness::ComponentNotOpen { component: first }),
        (Condition::P3, Witness::ComponentsMeet { first, second }),
        (
            Condition::P4,
            Witness::ComponentFamiliesDiffer {
                component: first,
                family: ComponentFamily::Irreducible,
            },
        ),
        (Condition::P5, Witness::ReducibleConnectedComponent { component: whole }),
        (Condition::P6, Witness::ComponentsMeet { first, second }),
    ]);
    PropertyProfile {
        p1: false,
        p2: false,
        p3: false,
        p4: false,
        p5: false,
        p6: false,
        irreducible: false,
        connected: true,
        nonempty: true,
        discrete: false,
        totally_disconnected: false,
        dimension: Some(1),
        pointwise_irreducible,
        witnesses,
    }
}
