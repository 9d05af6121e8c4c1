//! Coherent closure of seed partitions, exhaustive S-ring enumeration over small
//! groups and the schurity census built on it.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::limits::Limits;
use crate::schurity::is_schurian;
use crate::sring::{normalize, SRing};

/// Class of `z`, class of `z^-1`, and the counts of `(class(x), class(x^-1 z))`.
type Signature = (u32, u32, Vec<(u32, u32, u32)>);

/// The coarsest S-ring whose basic sets refine `seed`.
///
/// Classes are split by the multiset of class pairs `(X, Y)` through which an
/// element factors, and by the class of its inverse, until nothing changes. Every
/// S-ring finer than the seed is finer than each intermediate partition, so the
/// fixed point is the coarsest one.
pub fn wl_closure(g: Arc<Group>, seed: &[Vec<u32>]) -> Result<SRing> {
    let n = g.order();
    let mut class_of = vec![u32::MAX; n];
    for (i, c) in seed.iter().enumerate() {
        for &x in c {
            if x as usize >= n || class_of[x as usize] != u32::MAX {
                return Err(Error::NotAPartition(format!(
                    "element {x} is out of range or repeated"
                )));
            }
            class_of[x as usize] = i as u32 + 1;
        }
    }
    if class_of.contains(&u32::MAX) {
        return Err(Error::NotAPartition(
            "the seed does not cover the group".into(),
        ));
    }
    if n > 0 {
        class_of[0] = 0;
    }
    let mut rank = relabel(&mut class_of);
    loop {
        let mut keys: Vec<Signature> = Vec::with_capacity(n);
        for z in g.elements() {
            let mut counts: HashMap<(u32, u32), u32> = HashMap::new();
            for x in g.elements() {
                let y = g.mul(g.inv(x), z);
                *counts
                    .entry((class_of[x as usize], class_of[y as usize]))
                    .or_insert(0) += 1;
            }
            let mut sig: Vec<(u32, u32, u32)> =
                counts.into_iter().map(|((a, b), c)| (a, b, c)).collect();
            sig.sort_unstable();
            keys.push((class_of[z as usize], class_of[g.inv(z) as usize], sig));
        }
        let mut ids: HashMap<&Signature, u32> = HashMap::new();
        let mut next: Vec<u32> = Vec::with_capacity(n);
        for k in &keys {
            let fresh = ids.len() as u32;
            next.push(*ids.entry(k).or_insert(fresh));
        }
        let new_rank = relabel(&mut next);
        class_of = next;
        if new_rank == rank {
            break;
        }
        rank = new_rank;
    }
    let mut classes = vec![Vec::new(); rank];
    for (x, &c) in class_of.iter().enumerate() {
        classes[c as usize].push(x as u32);
    }
    SRing::from_partition(g, classes)
}

/// Renumbers class ids by first occurrence; returns the number of classes.
fn relabel(class_of: &mut [u32]) -> usize {
    let mut map: HashMap<u32, u32> = HashMap::new();
    for c in class_of.iter_mut() {
        let fresh = map.len() as u32;
        *c = *map.entry(*c).or_insert(fresh);
    }
    map.len()
}

/// Every S-ring over `g`, sorted by rank and then by the normalized classes.
///
/// Candidates are built from the inverse pairs `{x, x^-1}`: a set partition of the
/// pairs gives the symmetric unions, and each union without involutions may also
/// be cut into `X` and `X^-1`. Every candidate goes through the full axiom check.
pub fn enumerate_srings(g: Arc<Group>, limits: &Limits) -> Result<Vec<SRing>> {
    let n = g.order();
    if n > limits.max_enumeration_order {
        return Err(Error::CapExceeded {
            what: "group order for S-ring enumeration",
            limit: limits.max_enumeration_order as u64,
            actual: n as u64,
        });
    }
    let mut atoms: Vec<Vec<u32>> = Vec::new();
    for x in g.elements().skip(1) {
        let xi = g.inv(x);
        if xi >= x {
            atoms.push(if xi == x { vec![x] } else { vec![x, xi] });
        }
    }
    let mut blockings = Vec::new();
    set_partitions(atoms.len(), &mut Vec::new(), &mut blockings);
    let mut rings: Vec<SRing> = blockings
        .par_iter()
        .flat_map_iter(|blocks| candidates(&atoms, blocks))
        .filter_map(|p| SRing::from_partition(g.clone(), p).ok())
        .collect();
    rings.sort_by(|a, b| {
        a.rank()
            .cmp(&b.rank())
            .then_with(|| a.classes().cmp(b.classes()))
    });
    rings.dedup_by(|a, b| a.classes() == b.classes());
    Ok(rings)
}

/// All set partitions of `0..k` as restricted growth strings.
fn set_partitions(k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == k {
        out.push(prefix.clone());
        return;
    }
    let blocks = prefix.iter().max().map_or(0, |&m| m + 1);
    for b in 0..=blocks {
        prefix.push(b);
        set_partitions(k, prefix, out);
        prefix.pop();
    }
}

/// The candidate partitions of `G` for one grouping of the inverse pairs.
fn candidates(atoms: &[Vec<u32>], blocks: &[usize]) -> Vec<Vec<Vec<u32>>> {
    let nblocks = blocks.iter().max().map_or(0, |&m| m + 1);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); nblocks];
    for (a, &b) in blocks.iter().enumerate() {
        members[b].push(a);
    }
    // per block: the ways to turn it into classes
    let options: Vec<Vec<Vec<Vec<u32>>>> = members
        .iter()
        .map(|m| {
            let whole: Vec<u32> = m.iter().flat_map(|&a| atoms[a].iter().copied()).collect();
            let mut ways = vec![vec![whole]];
            if m.iter().all(|&a| atoms[a].len() == 2) {
                // the first pair contributes its first element to X, the others either
                for mask in 0..1u32 << (m.len() - 1) {
                    let mut x = Vec::new();
                    let mut xi = Vec::new();
                    for (i, &a) in m.iter().enumerate() {
                        let flip = i > 0 && mask >> (i - 1) & 1 == 1;
                        let (p, q) = if flip {
                            (atoms[a][1], atoms[a][0])
                        } else {
                            (atoms[a][0], atoms[a][1])
                        };
                        x.push(p);
                        xi.push(q);
                    }
                    ways.push(vec![x, xi]);
                }
            }
            ways
        })
        .collect();
    let mut out = Vec::new();
    let mut current = vec![vec![0u32]];
    expand(&options, 0, &mut current, &mut out);
    out
}

fn expand(
    options: &[Vec<Vec<Vec<u32>>>],
    i: usize,
    current: &mut Vec<Vec<u32>>,
    out: &mut Vec<Vec<Vec<u32>>>,
) {
    if i == options.len() {
        out.push(current.clone());
        return;
    }
    for way in &options[i] {
        let len = current.len();
        current.extend(way.iter().cloned());
        expand(options, i + 1, current, out);
        current.truncate(len);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub group: String,
    pub order: usize,
    pub total: usize,
    pub schurian: usize,
    pub nonschurian: usize,
    /// rank -> number of S-rings of that rank
    pub rank_histogram: BTreeMap<usize, usize>,
    /// Partitions of the nonschurian S-rings found, normalized.
    pub nonschurian_rings: Vec<Vec<Vec<u32>>>,
}

impl CensusReport {
    /// No nonschurian S-ring was found.
    pub fn is_schur(&self) -> bool {
        self.nonschurian == 0
    }
}

pub fn schurity_census(g: Arc<Group>, limits: &Limits) -> Result<CensusReport> {
    let rings = enumerate_srings(g.clone(), limits)?;
    let verdicts: Vec<bool> = rings
        .par_iter()
        .map(|a| is_schurian(a, limits).map(|r| r.schurian))
        .collect::<Result<_>>()?;
    let mut rank_histogram = BTreeMap::new();
    for a in &rings {
        *rank_histogram.entry(a.rank()).or_insert(0) += 1;
    }
    let nonschurian_rings: Vec<Vec<Vec<u32>>> = rings
        .iter()
        .zip(&verdicts)
        .filter(|(_, &s)| !s)
        .map(|(a, _)| normalize(a.classes().to_vec()))
        .collect();
    Ok(CensusReport {
        group: g.label().to_string(),
        order: g.order(),
        total: rings.len(),
        schurian: verdicts.iter().filter(|&&s| s).count(),
        nonschurian: nonschurian_rings.len(),
        rank_histogram,
        nonschurian_rings,
    })
}
