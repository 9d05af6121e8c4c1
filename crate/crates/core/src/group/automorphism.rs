use std::collections::VecDeque;

use super::Group;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::{PermGroup, Permutation};

/// `Aut(G)` as a permutation group on the elements of `G`.
///
/// Candidate images of a fixed generating set are tried in index order; each partial
/// assignment is extended homomorphically over the subgroup generated so far and
/// pruned as soon as it is inconsistent or non-injective.
pub fn automorphism_group(g: &Group, limits: &Limits) -> Result<PermGroup> {
    let n = g.order();
    if n > limits.max_group_aut_order {
        return Err(Error::CapExceeded {
            what: "group order for automorphism search",
            limit: limits.max_group_aut_order as u64,
            actual: n as u64,
        });
    }
    let gens = g.generating_set();
    let mut found = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    search(
        g,
        &gens,
        &mut images,
        &mut found,
        limits.max_listed_elements,
    )?;
    // keep only generators that enlarge the group
    let mut group = PermGroup::trivial(n);
    let mut kept = Vec::new();
    for p in found {
        if !group.contains(&p) {
            kept.push(p);
            group = PermGroup::new(n, kept.clone())?;
        }
    }
    Ok(group)
}

fn search(
    g: &Group,
    gens: &[u32],
    images: &mut Vec<u32>,
    found: &mut Vec<Permutation>,
    cap: u64,
) -> Result<()> {
    let depth = images.len();
    if depth == gens.len() {
        if let Some(map) = extend_homomorphism(g, gens, images) {
            if map.iter().all(|x| x.is_some()) {
                if found.len() as u64 >= cap {
                    return Err(Error::CapExceeded {
                        what: "number of group automorphisms",
                        limit: cap,
                        actual: cap + 1,
                    });
                }
                found.push(Permutation::from_images_unchecked(
                    map.into_iter().map(|x| x.unwrap()).collect(),
                ));
            }
        }
        return Ok(());
    }
    let ord = g.element_order(gens[depth]);
    for cand in g.elements().filter(|&y| g.element_order(y) == ord) {
        images.push(cand);
        if extend_homomorphism(g, &gens[..=depth], images).is_some() {
            search(g, gens, images, found, cap)?;
        }
        images.pop();
    }
    Ok(())
}

/// Extends `gens[i] -> images[i]` over `<gens>`; `None` if ill-defined or not injective.
fn extend_homomorphism(g: &Group, gens: &[u32], images: &[u32]) -> Option<Vec<Option<u32>>> {
    let n = g.order();
    let mut map = vec![None; n];
    let mut used = vec![false; n];
    map[0] = Some(0);
    used[0] = true;
    let mut queue = VecDeque::from([0u32]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x as usize].unwrap();
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = g.mul(fx, t);
            match map[y as usize] {
                Some(v) if v != fy => return None,
                Some(_) => {}
                None => {
                    if std::mem::replace(&mut used[fy as usize], true) {
                        return None;
                    }
                    map[y as usize] = Some(fy);
                    queue.push_back(y);
                }
            }
        }
    }
    Some(map)
}

/// Whether `p` is an automorphism of `g`.
pub(crate) fn is_group_automorphism(g: &Group, p: &Permutation) -> bool {
    p.degree() == g.order()
        && p.image(0) == 0
        && g.elements().all(|x| {
            g.elements()
                .all(|y| p.image(g.mul(x, y)) == g.mul(p.image(x), p.image(y)))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: every bijection fixing the identity, checked against the table.
    fn brute_force_count(g: &Group) -> usize {
        use itertools::Itertools;
        let n = g.order() as u32;
        (1..n)
            .permutations(n as usize - 1)
            .filter(|rest| {
                let mut img = vec![0u32];
                img.extend(rest);
                is_group_automorphism(g, &Permutation::from_images_unchecked(img))
            })
            .count()
    }

    #[test]
    fn known_orders() {
        let l = Limits::default();
        let c13 = Group::cyclic(13).unwrap();
        assert_eq!(automorphism_group(&c13, &l).unwrap().order_u64(), Some(12));
        let q8 = Group::quaternion8();
        let aut = automorphism_group(&q8, &l).unwrap();
        assert_eq!(aut.order_u64(), Some(24));
        assert_eq!(brute_force_count(&q8), 24);
        assert_eq!(
            automorphism_group(&Group::cyclic(2).unwrap(), &l)
                .unwrap()
                .order_u64(),
            Some(1)
        );
        let d8 = Group::dihedral(8).unwrap();
        assert_eq!(
            automorphism_group(&d8, &l).unwrap().order_u64(),
            Some(brute_force_count(&d8) as u64)
        );
    }

    #[test]
    fn every_element_is_an_automorphism() {
        let q8 = Group::quaternion8();
        let aut = automorphism_group(&q8, &Limits::default()).unwrap();
        let elems = aut.elements(1000).unwrap();
        assert_eq!(elems.len(), 24);
        for p in &elems {
            assert!(is_group_automorphism(&q8, p));
            assert!(aut.contains(&p.inverse()));
            for q in &elems {
                assert!(aut.contains(&p.then(q)));
            }
        }
        // Aut(Q8) is S4: it has elements of order 3 and 4 but none of order 6
        let orders: std::collections::BTreeSet<u64> = elems.iter().map(|p| p.order()).collect();
        assert_eq!(orders.into_iter().collect::<Vec<_>>(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn cap_enforced() {
        let g = Group::cyclic(65).unwrap();
        assert!(matches!(
            automorphism_group(&g, &Limits::default()),
            Err(Error::CapExceeded { .. })
        ));
    }
}
