//! Automorphism groups of S-rings and the schurity test.
//!
//! `Aut(A)` is the color-preserving group of the Cayley color matrix. It always
//! contains the right regular representation, so `Aut(A) = G_r Aut(A)_e` and only
//! the stabilizer of the identity has to be searched for. `A` is schurian exactly
//! when the orbits of that stabilizer are the basic sets.

mod color;
mod refine;
mod search;

use std::sync::Arc;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::limits::Limits;
use crate::perm::chain::StabChain;
use crate::perm::{right_translation, PermGroup, Permutation};
use crate::sring::SRing;

pub use color::ColorMatrix;

/// `Aut(A)` together with its identity stabilizer.
#[derive(Clone, Debug)]
pub struct SRingAutomorphisms {
    pub full: PermGroup,
    pub stabilizer: PermGroup,
    /// Search tree nodes visited, for diagnostics.
    pub nodes: u64,
}

pub fn automorphisms(a: &SRing, limits: &Limits) -> Result<SRingAutomorphisms> {
    automorphisms_seeded(a, &[], limits)
}

/// Like [`automorphisms`], with automorphisms fixing the identity that are known in
/// advance. Each seed is checked.
pub fn automorphisms_seeded(
    a: &SRing,
    seeds: &[Permutation],
    limits: &Limits,
) -> Result<SRingAutomorphisms> {
    let g = a.group();
    let n = g.order();
    if n > limits.max_sring_order {
        return Err(Error::CapExceeded {
            what: "S-ring order for the automorphism search",
            limit: limits.max_sring_order as u64,
            actual: n as u64,
        });
    }
    let cm = ColorMatrix::of(a);
    for s in seeds {
        if s.degree() != n || s.image(0) != 0 || !cm.is_automorphism(s) {
            return Err(Error::BadPermutation(format!(
                "seed {s} is not an automorphism fixing the identity"
            )));
        }
    }
    let bsgs = search::StabilizerSearch::new(&cm, limits).run(seeds)?;
    let stab_chain = StabChain::from_bsgs(n, &bsgs.base, &bsgs.gens);
    let stabilizer = PermGroup::with_chain(n, bsgs.gens.clone(), stab_chain);

    let mut full_gens: Vec<Permutation> = g
        .generating_set()
        .into_iter()
        .map(|h| right_translation(g, h))
        .collect();
    full_gens.extend(bsgs.gens.iter().cloned());
    let mut full_base = vec![0];
    full_base.extend(&bsgs.base);
    let full_chain = StabChain::from_bsgs(n, &full_base, &full_gens);
    let full = PermGroup::with_chain(n, full_gens, full_chain);
    Ok(SRingAutomorphisms {
        full,
        stabilizer,
        nodes: bsgs.nodes,
    })
}

fn decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

/// A basic set that `Aut(A)_e` splits into several orbits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitWitness {
    pub class: Vec<u32>,
    pub orbits: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SchurityReport {
    pub schurian: bool,
    pub rank: usize,
    #[serde(serialize_with = "decimal")]
    pub aut_order: BigUint,
    #[serde(serialize_with = "decimal")]
    pub stabilizer_order: BigUint,
    /// Orbits of `Aut(A)_e`, sorted by smallest element.
    pub stabilizer_orbits: Vec<Vec<u32>>,
    /// The first basic set (by class id) that splits, when there is one.
    pub split: Option<SplitWitness>,
}

pub fn is_schurian(a: &SRing, limits: &Limits) -> Result<SchurityReport> {
    Ok(schurity_report(a, &automorphisms(a, limits)?))
}

/// The verdict from an already computed automorphism group.
pub fn schurity_report(a: &SRing, aut: &SRingAutomorphisms) -> SchurityReport {
    let orbits = aut.stabilizer.orbits();
    let mut orbit_of = vec![0usize; a.group().order()];
    for (i, o) in orbits.iter().enumerate() {
        for &x in o {
            orbit_of[x as usize] = i;
        }
    }
    let split = a.classes().iter().find_map(|class| {
        let first = orbit_of[class[0] as usize];
        if class.iter().all(|&x| orbit_of[x as usize] == first) {
            return None;
        }
        let mut ids: Vec<usize> = class.iter().map(|&x| orbit_of[x as usize]).collect();
        ids.sort_unstable();
        ids.dedup();
        Some(SplitWitness {
            class: class.clone(),
            orbits: ids.into_iter().map(|i| orbits[i].clone()).collect(),
        })
    });
    SchurityReport {
        schurian: split.is_none(),
        rank: a.rank(),
        aut_order: aut.full.order(),
        stabilizer_order: aut.stabilizer.order(),
        stabilizer_orbits: orbits,
        split,
    }
}

/// `V(K, G)`: the S-ring of orbits of `K_e`, for a permutation group `K` on the
/// elements of `G` that contains `G_r`.
pub fn transitivity_module(k: &PermGroup, g: Arc<Group>) -> Result<SRing> {
    if k.degree() != g.order() {
        return Err(Error::InvalidArgument(format!(
            "group of degree {} acting on a group of order {}",
            k.degree(),
            g.order()
        )));
    }
    if let Some(h) = g
        .generating_set()
        .into_iter()
        .find(|&h| !k.contains(&right_translation(&g, h)))
    {
        return Err(Error::InvalidArgument(format!(
            "the permutation group does not contain the right translation by {h}"
        )));
    }
    let orbits = k.point_stabilizer(0).orbits();
    SRing::from_partition(g, orbits)
}

/// `Cyc(K, G)`: the S-ring of orbits of a group of automorphisms of `G`.
pub fn cyclotomic(k: &PermGroup, g: Arc<Group>) -> Result<SRing> {
    if k.degree() != g.order() {
        return Err(Error::InvalidArgument(format!(
            "group of degree {} acting on a group of order {}",
            k.degree(),
            g.order()
        )));
    }
    if let Some(s) = k
        .generators()
        .iter()
        .find(|s| !crate::group::automorphism::is_group_automorphism(&g, s))
    {
        return Err(Error::BadPermutation(format!(
            "{s} is not an automorphism of the group"
        )));
    }
    SRing::from_partition(g, k.orbits())
}

/// The permutation of the right cosets `N x` induced by an automorphism of `A`,
/// for an `A`-subgroup `N`. Cosets are numbered by their smallest element.
pub fn induced_action(a: &SRing, alpha: &Permutation, n: &Subgroup) -> Result<Permutation> {
    let g = a.group();
    if !a.is_a_set(n.elements()) {
        return Err(Error::NotASubring { order: n.order() });
    }
    if alpha.degree() != g.order() {
        return Err(Error::BadPermutation(format!(
            "degree {} on a group of order {}",
            alpha.degree(),
            g.order()
        )));
    }
    let cosets = g.right_cosets(n, &g.whole());
    let mut coset_of = vec![0u32; g.order()];
    for (i, c) in cosets.iter().enumerate() {
        for &x in c {
            coset_of[x as usize] = i as u32;
        }
    }
    let mut images = Vec::with_capacity(cosets.len());
    for c in &cosets {
        let target = coset_of[alpha.image(c[0]) as usize];
        if c.iter()
            .any(|&x| coset_of[alpha.image(x) as usize] != target)
        {
            return Err(Error::BadPermutation(format!(
                "{alpha} does not permute the cosets of the subgroup of order {}",
                n.order()
            )));
        }
        images.push(target);
    }
    Permutation::from_images(images)
}

/// Whether `(X y)^alpha = X y^alpha` for the basic set `class` and the element `y`.
pub fn translate_property(a: &SRing, alpha: &Permutation, class: usize, y: u32) -> bool {
    let g = a.group();
    let ya = alpha.image(y);
    let mut lhs: Vec<u32> = a
        .class(class)
        .iter()
        .map(|&x| alpha.image(g.mul(x, y)))
        .collect();
    let mut rhs: Vec<u32> = a.class(class).iter().map(|&x| g.mul(x, ya)).collect();
    lhs.sort_unstable();
    rhs.sort_unstable();
    lhs == rhs
}
