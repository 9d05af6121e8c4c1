//! S-rings over finite groups, represented by their partition into basic sets.

mod algebraic;
mod constants;
mod io;
mod products;
mod subgroups;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Group;

pub use algebraic::{is_algebraic_isomorphism, power_map, AlgebraicMap};
pub use constants::StructureConstants;
pub use io::{format_partition, parse_partition};
pub use products::{is_s_wreath, is_tensor, tensor_product, WreathVerdict};
pub use subgroups::{a_subgroups, quotient_sring};

/// Which S-ring axiom a partition breaks, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum AxiomViolation {
    /// The class containing the identity has other elements.
    IdentityNotClass { class: Vec<u32> },
    /// `X^-1` is not a class: `x` and `y` lie in `X` but their inverses lie in
    /// different classes, or `X^-1` is a proper part of a class (then `x == y`).
    InverseNotClass { class: Vec<u32>, x: u32, y: u32 },
    /// `z1` and `z2` lie in one class but factor through `X x Y` a different number of times.
    NotCoherent {
        x_class: Vec<u32>,
        y_class: Vec<u32>,
        z1: u32,
        z2: u32,
        count1: u32,
        count2: u32,
    },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::IdentityNotClass { class } => {
                write!(f, "identity is not a singleton class: {class:?}")
            }
            AxiomViolation::InverseNotClass { class, x, y } => {
                write!(f, "inverse of class {class:?} is not a class (witness {x}, {y})")
            }
            AxiomViolation::NotCoherent {
                x_class,
                y_class,
                z1,
                z2,
                count1,
                count2,
            } => write!(
                f,
                "product of {x_class:?} and {y_class:?} hits {z1} {count1} times but {z2} {count2} times"
            ),
        }
    }
}

#[derive(Clone)]
pub struct SRing {
    group: Arc<Group>,
    class_of: Vec<u32>,
    classes: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    constants: StructureConstants,
}

impl fmt::Debug for SRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SRing(over {}, rank {}, {:?})",
            self.group.label(),
            self.rank(),
            self.classes
        )
    }
}

impl PartialEq for SRing {
    fn eq(&self, other: &Self) -> bool {
        self.group.table() == other.group.table() && self.classes == other.classes
    }
}

impl Eq for SRing {}

impl SRing {
    /// Verifies the S-ring axioms for `partition` and computes the structure constants.
    ///
    /// Classes are normalized: each sorted, ordered by smallest element, so the
    /// identity class has id 0.
    pub fn from_partition(group: Arc<Group>, partition: Vec<Vec<u32>>) -> Result<SRing> {
        let n = group.order();
        let classes = normalize(partition);
        let mut class_of = vec![u32::MAX; n];
        for (i, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::NotAPartition("empty class".into()));
            }
            for &x in class {
                match class_of.get_mut(x as usize) {
                    None => return Err(Error::NotAPartition(format!("element {x} out of range"))),
                    Some(c) if *c != u32::MAX => {
                        return Err(Error::NotAPartition(format!("element {x} appears twice")))
                    }
                    Some(c) => *c = i as u32,
                }
            }
        }
        if let Some(x) = class_of.iter().position(|&c| c == u32::MAX) {
            return Err(Error::NotAPartition(format!("element {x} is not covered")));
        }
        if classes[0].len() != 1 {
            return Err(AxiomViolation::IdentityNotClass {
                class: classes[0].clone(),
            }
            .into());
        }
        let mut inverse = vec![0u32; classes.len()];
        for (i, class) in classes.iter().enumerate() {
            let target = class_of[group.inv(class[0]) as usize];
            if let Some(&y) = class
                .iter()
                .find(|&&y| class_of[group.inv(y) as usize] != target)
            {
                return Err(AxiomViolation::InverseNotClass {
                    class: class.clone(),
                    x: class[0],
                    y,
                }
                .into());
            }
            if classes[target as usize].len() != class.len() {
                return Err(AxiomViolation::InverseNotClass {
                    class: class.clone(),
                    x: class[0],
                    y: class[0],
                }
                .into());
            }
            inverse[i] = target;
        }
        let constants = StructureConstants::compute(&group, &classes, &class_of)?;
        Ok(SRing {
            group,
            class_of,
            classes,
            inverse,
            constants,
        })
    }

    /// `{e}, G^#`.
    pub fn trivial(group: Arc<Group>) -> SRing {
        let rest: Vec<u32> = (1..group.order() as u32).collect();
        let partition = if rest.is_empty() {
            vec![vec![0]]
        } else {
            vec![vec![0], rest]
        };
        SRing::from_partition(group, partition).expect("the trivial partition is an S-ring")
    }

    /// The full group ring: all singletons.
    pub fn full(group: Arc<Group>) -> SRing {
        let partition = group.elements().map(|x| vec![x]).collect();
        SRing::from_partition(group, partition).expect("singletons form an S-ring")
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<u32>] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &[u32] {
        &self.classes[id]
    }

    #[inline]
    pub fn class_of(&self, x: u32) -> u32 {
        self.class_of[x as usize]
    }

    pub fn class_ids(&self) -> &[u32] {
        &self.class_of
    }

    /// Id of the class `X^-1`.
    pub fn inverse_class(&self, id: usize) -> usize {
        self.inverse[id] as usize
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    /// Whether `set` is a union of basic sets.
    pub fn is_a_set(&self, set: &[u32]) -> bool {
        let mut inside = vec![false; self.group.order()];
        for &x in set {
            inside[x as usize] = true;
        }
        self.classes.iter().all(|c| {
            c.iter().all(|&x| inside[x as usize]) || c.iter().all(|&x| !inside[x as usize])
        })
    }

    /// Class id of the class equal to `set`, if any.
    pub fn find_class(&self, set: &[u32]) -> Option<usize> {
        let first = *set.first()?;
        let id = self.class_of(first) as usize;
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        (self.classes[id] == sorted).then_some(id)
    }

    /// Whether every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &SRing) -> bool {
        self.classes
            .iter()
            .all(|c| c.iter().all(|&x| other.class_of(x) == other.class_of(c[0])))
    }
}

/// Sorts each class and orders classes by smallest element.
pub(crate) fn normalize(partition: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let mut classes: Vec<Vec<u32>> = partition
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    classes.sort();
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(g: Group) -> Arc<Group> {
        Arc::new(g)
    }

    #[test]
    fn trivial_and_full_are_valid() {
        for g in [
            Group::quaternion8(),
            Group::dihedral(8).unwrap(),
            Group::cyclic(7).unwrap(),
        ] {
            let g = arc(g);
            assert_eq!(SRing::trivial(g.clone()).rank(), 2);
            assert_eq!(SRing::full(g.clone()).rank(), g.order());
        }
        assert_eq!(SRing::trivial(arc(Group::cyclic(1).unwrap())).rank(), 1);
    }

    #[test]
    fn inverse_axiom_violation() {
        let z4 = arc(Group::cyclic(4).unwrap());
        let err = SRing::from_partition(z4, vec![vec![0], vec![1], vec![2, 3]]).unwrap_err();
        assert!(
            matches!(err, Error::Axiom(AxiomViolation::InverseNotClass { .. })),
            "{err}"
        );
    }

    #[test]
    fn identity_axiom_violation() {
        let z4 = arc(Group::cyclic(4).unwrap());
        let err = SRing::from_partition(z4, vec![vec![0, 2], vec![1, 3]]).unwrap_err();
        assert!(matches!(
            err,
            Error::Axiom(AxiomViolation::IdentityNotClass { .. })
        ));
    }

    #[test]
    fn coherence_violation() {
        // in Z6, {1,5} + {1,5} hits 2 and 4 once each but never 3
        let z6 = arc(Group::cyclic(6).unwrap());
        let err = SRing::from_partition(z6, vec![vec![0], vec![1, 5], vec![2, 3, 4]]).unwrap_err();
        assert!(
            matches!(err, Error::Axiom(AxiomViolation::NotCoherent { .. })),
            "{err}"
        );
    }

    #[test]
    fn non_partitions() {
        let z4 = arc(Group::cyclic(4).unwrap());
        assert!(matches!(
            SRing::from_partition(z4.clone(), vec![vec![0], vec![1, 3]]),
            Err(Error::NotAPartition(_))
        ));
        assert!(matches!(
            SRing::from_partition(z4.clone(), vec![vec![0], vec![1, 3], vec![2, 3]]),
            Err(Error::NotAPartition(_))
        ));
        assert!(matches!(
            SRing::from_partition(z4, vec![vec![0], vec![1, 3], vec![2, 9]]),
            Err(Error::NotAPartition(_))
        ));
    }

    #[test]
    fn classes_are_normalized() {
        let z4 = arc(Group::cyclic(4).unwrap());
        let a = SRing::from_partition(z4, vec![vec![3, 1], vec![2], vec![0]]).unwrap();
        assert_eq!(a.classes(), &[vec![0], vec![1, 3], vec![2]]);
        assert_eq!(a.class_of(3), 1);
        assert_eq!(a.inverse_class(1), 1);
    }
}
