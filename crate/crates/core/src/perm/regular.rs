//! Search for regular subgroups of a permutation group isomorphic to a given group.

use std::collections::VecDeque;

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};
use crate::group::Group;

/// An injective homomorphism from an abstract group onto a regular subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularEmbedding {
    /// `images[h]` is the permutation assigned to element `h`.
    pub images: Vec<Permutation>,
}

impl RegularEmbedding {
    pub fn subgroup(&self) -> PermGroup {
        let degree = self.images[0].degree();
        PermGroup::new_unchecked(degree, self.images.clone())
    }

    /// Re-checks homomorphism, injectivity and regularity from scratch.
    pub fn verify(&self, h: &Group) -> bool {
        let n = h.order();
        if self.images.len() != n || self.images.iter().any(|p| p.degree() != n) {
            return false;
        }
        let hom = h.elements().all(|x| {
            h.elements().all(|y| {
                self.images[h.mul(x, y) as usize]
                    == self.images[x as usize].then(&self.images[y as usize])
            })
        });
        // regular: the images of point 0 run over all points
        let mut hit = vec![false; n];
        for p in &self.images {
            hit[p.image(0) as usize] = true;
        }
        hom && hit.iter().all(|&b| b)
    }
}

/// Finds a regular subgroup of `k` isomorphic to `h`, if one exists.
///
/// The search is exhaustive over images of a generating set of `h` among the
/// fixed-point-free elements of `k` of matching order, so `Ok(None)` is a definitive
/// answer. Fails with [`Error::CapExceeded`] when `k` has more than `cap` elements.
pub fn find_regular_subgroup(
    k: &PermGroup,
    h: &Group,
    cap: u64,
) -> Result<Option<RegularEmbedding>> {
    let n = h.order();
    if k.degree() != n {
        return Err(Error::InvalidArgument(format!(
            "degree {} differs from the group order {n}",
            k.degree()
        )));
    }
    let elements = k.elements(cap)?;
    let gens = h.generating_set();
    let candidates: Vec<Vec<Permutation>> = gens
        .iter()
        .map(|&g| {
            let ord = h.element_order(g) as u64;
            elements
                .iter()
                .filter(|p| p.is_fixed_point_free() && p.order() == ord)
                .cloned()
                .collect()
        })
        .collect();
    if gens.is_empty() {
        return Ok(Some(RegularEmbedding {
            images: vec![Permutation::identity(n)],
        }));
    }
    let mut chosen: Vec<Permutation> = Vec::with_capacity(gens.len());
    Ok(extend(h, &gens, &candidates, &mut chosen))
}

fn extend(
    h: &Group,
    gens: &[u32],
    candidates: &[Vec<Permutation>],
    chosen: &mut Vec<Permutation>,
) -> Option<RegularEmbedding> {
    let depth = chosen.len();
    if depth == gens.len() {
        return partial_embedding(h, &gens[..depth], chosen).map(|images| RegularEmbedding {
            images: images
                .into_iter()
                .map(|p| p.expect("generators reach every element"))
                .collect(),
        });
    }
    for cand in &candidates[depth] {
        chosen.push(cand.clone());
        if partial_embedding(h, &gens[..=depth], chosen).is_some() {
            if let Some(found) = extend(h, gens, candidates, chosen) {
                return Some(found);
            }
        }
        chosen.pop();
    }
    None
}

/// Extends the generator assignment to the subgroup they generate. Fails when the
/// extension is not well defined or some non-identity image has a fixed point.
fn partial_embedding(
    h: &Group,
    gens: &[u32],
    images: &[Permutation],
) -> Option<Vec<Option<Permutation>>> {
    let n = h.order();
    let mut map: Vec<Option<Permutation>> = vec![None; n];
    map[0] = Some(Permutation::identity(n));
    let mut queue = VecDeque::from([0u32]);
    while let Some(x) = queue.pop_front() {
        for (g, img) in gens.iter().zip(images) {
            let y = h.mul(x, *g);
            let py = map[x as usize].as_ref().unwrap().then(img);
            match &map[y as usize] {
                Some(existing) => {
                    if *existing != py {
                        return None;
                    }
                }
                None => {
                    if y != 0 && !py.is_fixed_point_free() {
                        return None;
                    }
                    if y == 0 && !py.is_identity() {
                        return None;
                    }
                    map[y as usize] = Some(py);
                    queue.push_back(y);
                }
            }
        }
    }
    Some(map)
}
