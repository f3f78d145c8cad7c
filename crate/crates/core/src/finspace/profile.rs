use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{FiniteSpace, SubsetMask};

/// The six conditions on a space: (1) locally irreducible, (2) irreducible
/// components open, (3) the space is the sum of its irreducible components,
/// (4) irreducible and connected components coincide, (5) connected
/// components irreducible, (6) irreducible components pairwise disjoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentFamily {
    Irreducible,
    Connected,
}

/// Evidence that a condition fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    NoIrreducibleNeighbourhood {
        point: usize,
    },
    ComponentNotOpen {
        component: SubsetMask,
    },
    ComponentsMeet {
        first: SubsetMask,
        second: SubsetMask,
    },
    /// `component` belongs to `family` but not to the other family.
    ComponentFamiliesDiffer {
        component: SubsetMask,
        family: ComponentFamily,
    },
    ReducibleConnectedComponent {
        component: SubsetMask,
    },
}

/// Every flag below is evaluated from its own definition, so implications
/// between them are real checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PropertyProfile {
    pub p1: bool,
    pub p2: bool,
    pub p3: bool,
    pub p4: bool,
    pub p5: bool,
    pub p6: bool,
    pub irreducible: bool,
    pub connected: bool,
    pub nonempty: bool,
    pub discrete: bool,
    pub totally_disconnected: bool,
    /// `None` for the empty space.
    pub dimension: Option<usize>,
    pub pointwise_irreducible: Vec<bool>,
    pub witnesses: BTreeMap<Condition, Witness>,
}

impl PropertyProfile {
    pub fn compute(space: &FiniteSpace) -> Self {
        let irr = space.irreducible_components();
        let conn = space.connected_components();
        let mut witnesses = BTreeMap::new();

        let p1 = match space.first_point_without_irreducible_neighbourhood() {
            Some(point) => {
                witnesses.insert(Condition::P1, Witness::NoIrreducibleNeighbourhood { point });
                false
            }
            None => true,
        };

        let non_open = irr.iter().copied().find(|&c| !space.is_open(c));
        let p2 = match non_open {
            Some(component) => {
                witnesses.insert(Condition::P2, Witness::ComponentNotOpen { component });
                false
            }
            None => true,
        };

        let meeting = first_meeting_pair(&irr);
        let covers = irr
            .iter()
            .fold(SubsetMask::EMPTY, |acc, &c| acc.union(c))
            == space.points();
        let p3 = meeting.is_none() && covers && non_open.is_none();
        if let Some((first, second)) = meeting {
            witnesses.insert(Condition::P3, Witness::ComponentsMeet { first, second });
        } else if let Some(component) = non_open {
            witnesses.insert(Condition::P3, Witness::ComponentNotOpen { component });
        }

        let irr_only = irr.iter().copied().find(|c| !conn.contains(c));
        let conn_only = conn.iter().copied().find(|c| !irr.contains(c));
        let p4 = irr_only.is_none() && conn_only.is_none();
        if let Some(component) = irr_only {
            witnesses.insert(
                Condition::P4,
                Witness::ComponentFamiliesDiffer {
                    component,
                    family: ComponentFamily::Irreducible,
                },
            );
        } else if let Some(component) = conn_only {
            witnesses.insert(
                Condition::P4,
                Witness::ComponentFamiliesDiffer {
                    component,
                    family: ComponentFamily::Connected,
                },
            );
        }

        let p5 = match conn.iter().copied().find(|&c| !space.is_irreducible_subset(c)) {
            Some(component) => {
                witnesses.insert(Condition::P5, Witness::ReducibleConnectedComponent { component });
                false
            }
            None => true,
        };

        let p6 = match meeting {
            Some((first, second)) => {
                witnesses.insert(Condition::P6, Witness::ComponentsMeet { first, second });
                false
            }
            None => true,
        };

        let pointwise_irreducible = (0..space.len())
            .map(|x| irr.iter().filter(|c| c.contains(x)).count() == 1)
            .collect();

        PropertyProfile {
            p1,
            p2,
            p3,
            p4,
            p5,
            p6,
            irreducible: space.is_irreducible_subset(space.points()),
            connected: space.is_connected(),
            nonempty: !space.is_empty(),
            discrete: space.is_discrete(),
            totally_disconnected: space.is_totally_disconnected(),
            dimension: space.dimension(),
            pointwise_irreducible,
            witnesses,
        }
    }

    pub fn condition(&self, c: Condition) -> bool {
        match c {
            Condition::P1 => self.p1,
            Condition::P2 => self.p2,
            Condition::P3 => self.p3,
            Condition::P4 => self.p4,
            Condition::P5 => self.p5,
            Condition::P6 => self.p6,
        }
    }

    /// Every point lies in exactly one irreducible component.
    pub fn pointwise_irreducible_everywhere(&self) -> bool {
        self.pointwise_irreducible.iter().all(|&b| b)
    }
}

fn first_meeting_pair(comps: &[SubsetMask]) -> Option<(SubsetMask, SubsetMask)> {
    comps.iter().enumerate().find_map(|(i, &a)| {
        comps[i + 1..]
            .iter()
            .find(|&&b| !a.is_disjoint(b))
            .map(|&b| (a, b))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(points: &[usize]) -> SubsetMask {
        SubsetMask::from_points(points.iter().copied())
    }

    #[test]
    fn three_point_space_fails_every_condition() {
        let t = FiniteSpace::from_pairs(3, &[(2, 0), (2, 1)]).unwrap();
        let p = t.profile();
        for c in [
            Condition::P1,
            Condition::P2,
            Condition::P3,
            Condition::P4,
            Condition::P5,
            Condition::P6,
        ] {
            assert!(!p.condition(c), "{c:?} should fail");
            assert!(p.witnesses.contains_key(&c));
        }
        assert_eq!(
            p.witnesses[&Condition::P6],
            Witness::ComponentsMeet {
                first: m(&[0, 2]),
                second: m(&[1, 2])
            }
        );
        assert_eq!(
            p.witnesses[&Condition::P1],
            Witness::NoIrreducibleNeighbourhood { point: 2 }
        );
        assert_eq!(p.pointwise_irreducible, vec![true, true, false]);
        assert!(p.connected && !p.irreducible && p.nonempty);
        assert_eq!(p.dimension, Some(1));
    }

    #[test]
    fn sierpinski_satisfies_all() {
        let s = FiniteSpace::from_pairs(2, &[(0, 1)]).unwrap();
        let p = s.profile();
        assert!(p.p1 && p.p2 && p.p3 && p.p4 && p.p5 && p.p6);
        assert!(p.irreducible && p.witnesses.is_empty());
    }

    #[test]
    fn discrete_pair_is_disconnected_but_satisfies_all() {
        let p = FiniteSpace::discrete(2).unwrap().profile();
        assert!(p.p1 && p.p2 && p.p3 && p.p4 && p.p5 && p.p6);
        assert!(!p.connected && !p.irreducible && p.discrete && p.totally_disconnected);
        assert_eq!(p.dimension, Some(0));
    }

    #[test]
    fn empty_space_conventions() {
        let p = FiniteSpace::empty().profile();
        assert!(p.connected && !p.irreducible && !p.nonempty && p.p1);
        assert!(p.p2 && p.p3 && p.p4 && p.p5 && p.p6);
        assert_eq!(p.dimension, None);
        assert!(p.pointwise_irreducible.is_empty());
    }

    #[test]
    fn profile_json_round_trip() {
        let t = FiniteSpace::from_pairs(3, &[(2, 0), (2, 1)]).unwrap();
        let p = t.profile();
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.contains("\"totallyDisconnected\":false"));
        assert!(json.contains("\"kind\":\"components_meet\""));
        let back: PropertyProfile = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
