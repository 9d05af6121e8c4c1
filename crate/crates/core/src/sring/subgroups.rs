use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use super::SRing;
use crate::error::{Error, Result};
use crate::group::{Section, Subgroup};

/// All subgroups of the underlying group that are unions of basic sets, sorted by
/// order and then elements.
///
/// Works on class sets: the subgroup generated by an A-set is an A-subgroup, and
/// its classes are found by closing under `c^Z_{XY} > 0`. Every A-subgroup is
/// reached by adding one class at a time to a smaller one.
pub fn a_subgroups(a: &SRing) -> Vec<Subgroup> {
    let rank = a.rank();
    let c = a.constants();
    let close = |start: &BTreeSet<usize>| -> BTreeSet<usize> {
        let mut set = start.clone();
        let mut queue: VecDeque<usize> = set.iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            let members: Vec<usize> = set.iter().copied().collect();
            for y in members {
                for z in 0..rank {
                    if !set.contains(&z) && (c.get(x, y, z) > 0 || c.get(y, x, z) > 0) {
                        set.insert(z);
                        queue.push_back(z);
                    }
                }
            }
        }
        set
    };
    let mut found: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let root: BTreeSet<usize> = [0].into();
    found.insert(root.clone());
    let mut queue = VecDeque::from([root]);
    while let Some(s) = queue.pop_front() {
        for x in (0..rank).filter(|x| !s.contains(x)) {
            let mut t = s.clone();
            t.insert(x);
            let closed = close(&t);
            if found.insert(closed.clone()) {
                queue.push_back(closed);
            }
        }
    }
    let mut subs: Vec<Subgroup> = found
        .into_iter()
        .map(|classes| {
            let mut elems: Vec<u32> = classes
                .iter()
                .flat_map(|&i| a.class(i).iter().copied())
                .collect();
            elems.sort_unstable();
            Subgroup::from_sorted(elems)
        })
        .collect();
    subs.sort_by(|x, y| (x.order(), x.elements()).cmp(&(y.order(), y.elements())));
    subs
}

/// The S-ring `A_S` over the quotient of the section: images of the basic sets
/// inside the top subgroup.
pub fn quotient_sring(a: &SRing, section: &Section) -> Result<SRing> {
    for sub in [&section.top, &section.bottom] {
        if !a.is_a_set(sub.elements()) {
            return Err(Error::NotASubring { order: sub.order() });
        }
    }
    let mut images: BTreeSet<Vec<u32>> = BTreeSet::new();
    for class in a.classes() {
        if !section.top.contains(class[0]) {
            continue;
        }
        let img: BTreeSet<u32> = class
            .iter()
            .map(|&x| section.project(x).expect("inside top"))
            .collect();
        images.insert(img.into_iter().collect());
    }
    SRing::from_partition(
        Arc::new(section.quotient.clone()),
        images.into_iter().collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;

    #[test]
    fn trivial_and_full_rings() {
        let g = Arc::new(Group::dihedral(8).unwrap());
        let t = a_subgroups(&SRing::trivial(g.clone()));
        assert_eq!(t.iter().map(|s| s.order()).collect::<Vec<_>>(), vec![1, 8]);
        let full = a_subgroups(&SRing::full(g.clone()));
        assert_eq!(full, g.subgroups());
    }

    #[test]
    fn quotient_by_trivial_restricts() {
        let g = Arc::new(Group::quaternion8());
        let a = SRing::full(g.clone());
        let s = g.quotient(&g.trivial_subgroup()).unwrap();
        let q = quotient_sring(&a, &s).unwrap();
        assert_eq!(q.classes(), a.classes());
    }

    #[test]
    fn quotient_of_full_ring_is_full() {
        let g = Arc::new(
            Group::direct_product(&Group::dihedral(8).unwrap(), &Group::cyclic(3).unwrap())
                .unwrap(),
        );
        let a = SRing::full(g.clone());
        for n in g.subgroups().into_iter().filter(|n| g.is_normal(n)) {
            let s = g.quotient(&n).unwrap();
            let q = quotient_sring(&a, &s).unwrap();
            assert_eq!(q.rank(), s.quotient.order());
        }
    }

    #[test]
    fn non_a_subgroup_rejected() {
        let g = Arc::new(Group::cyclic(4).unwrap());
        let a = SRing::trivial(g.clone());
        let n = g.subgroup_generated(&[2]);
        let s = g.quotient(&n).unwrap();
        assert!(matches!(
            quotient_sring(&a, &s),
            Err(Error::NotASubring { order: 2 })
        ));
    }
}
