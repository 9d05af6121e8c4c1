use std::sync::Arc;

use serde::Serialize;

use super::SRing;
use crate::error::{Error, Result};
use crate::group::{Group, Section, Subgroup};

/// `A1 (x) A2` over the direct product of the two groups.
pub fn tensor_product(a1: &SRing, a2: &SRing) -> Result<SRing> {
    let group = Group::direct_product(a1.group(), a2.group())?;
    let n2 = a2.group().order();
    let mut classes = Vec::with_capacity(a1.rank() * a2.rank());
    for x1 in a1.classes() {
        for x2 in a2.classes() {
            classes.push(
                x1.iter()
                    .flat_map(|&u| x2.iter().map(move |&v| Group::pair_index(u, v, n2)))
                    .collect(),
            );
        }
    }
    SRing::from_partition(Arc::new(group), classes)
}

/// Whether `a` is the tensor product of its restrictions to `left` and `right`.
///
/// The two subgroups must decompose the group as an internal direct product;
/// otherwise the call is rejected.
pub fn is_tensor(a: &SRing, left: &Subgroup, right: &Subgroup) -> Result<bool> {
    let g = a.group();
    let n = g.order();
    if left.order() * right.order() != n {
        return Err(Error::InvalidArgument(
            "subgroup orders do not multiply to the group order".into(),
        ));
    }
    let mut split = vec![None; n];
    for &x in left.elements() {
        for &y in right.elements() {
            if !g.commute(x, y) {
                return Err(Error::InvalidArgument(format!(
                    "{x} and {y} do not commute"
                )));
            }
            let z = g.mul(x, y) as usize;
            if split[z].is_some() {
                return Err(Error::InvalidArgument(
                    "subgroups intersect nontrivially".into(),
                ));
            }
            split[z] = Some((x, y));
        }
    }
    if !a.is_a_set(left.elements()) || !a.is_a_set(right.elements()) {
        return Ok(false);
    }
    for class in a.classes() {
        let mut lefts: Vec<u32> = class
            .iter()
            .map(|&z| split[z as usize].unwrap().0)
            .collect();
        let mut rights: Vec<u32> = class
            .iter()
            .map(|&z| split[z as usize].unwrap().1)
            .collect();
        lefts.sort_unstable();
        lefts.dedup();
        rights.sort_unstable();
        rights.dedup();
        if lefts.len() * rights.len() != class.len() {
            return Ok(false);
        }
        if a.find_class(&lefts).is_none() || a.find_class(&rights).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WreathVerdict {
    /// Every basic set outside the top is a union of cosets of the bottom.
    pub holds: bool,
    /// The bottom is nontrivial and the top is proper.
    pub nontrivial: bool,
}

/// Checks the S-wreath condition for the section `top / bottom`.
pub fn is_s_wreath(a: &SRing, section: &Section) -> Result<WreathVerdict> {
    let g = a.group();
    for sub in [&section.top, &section.bottom] {
        if !a.is_a_set(sub.elements()) {
            return Err(Error::NotASubring { order: sub.order() });
        }
    }
    if let Some((n, x)) = g.normality_witness(&section.bottom) {
        return Err(Error::NotNormal { n, g: x });
    }
    let holds = a
        .classes()
        .iter()
        .filter(|class| !section.top.contains(class[0]))
        .all(|class| {
            let id = a.class_of(class[0]);
            class.iter().all(|&x| {
                section
                    .bottom
                    .elements()
                    .iter()
                    .all(|&b| a.class_of(g.mul(b, x)) == id)
            })
        });
    Ok(WreathVerdict {
        holds,
        nontrivial: !section.bottom.is_trivial() && section.top.order() < g.order(),
    })
}
