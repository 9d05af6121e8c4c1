//! Permutations and permutation groups given by generators.
//!
//! Permutations act on the right: `p.then(q)` applies `p` first.

pub(crate) mod chain;
mod regular;

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::Rng;

use crate::error::{Error, Result};
use crate::group::Group;

pub(crate) use chain::StabChain;
pub use regular::{find_regular_subgroup, RegularEmbedding};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Checks that `images` is a bijection of `0..len`.
    pub fn from_images(images: Vec<u32>) -> Result<Permutation> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            match seen.get_mut(x as usize) {
                Some(s) if !*s => *s = true,
                _ => {
                    return Err(Error::BadPermutation(format!(
                        "{images:?} is not a bijection"
                    )))
                }
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Permutation {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn image(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    pub fn pow(&self, k: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..k {
            acc = acc.then(self);
        }
        acc
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut x = self.images[start];
            while x as usize != start {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.images[x as usize];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, |a, b| a / gcd(a, b) * b)
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u32 != y)
    }

    pub fn first_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(x, &y)| *x as u32 != y)
            .map(|(x, _)| x as u32)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

/// One-line image array, space separated.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// A permutation group with a lazily built stabilizer chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<PermGroup> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::BadPermutation(format!(
                "generator of degree {} in a group of degree {degree}",
                g.degree()
            )));
        }
        Ok(PermGroup::new_unchecked(degree, generators))
    }

    fn new_unchecked(degree: usize, generators: Vec<Permutation>) -> PermGroup {
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_identity())
            .collect();
        PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        }
    }

    /// A group whose stabilizer chain is already known.
    pub(crate) fn with_chain(
        degree: usize,
        generators: Vec<Permutation>,
        chain: StabChain,
    ) -> PermGroup {
        let g = PermGroup::new_unchecked(degree, generators);
        g.chain.set(chain).expect("fresh cell");
        g
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new_unchecked(degree, Vec::new())
    }

    pub fn symmetric(degree: usize) -> PermGroup {
        let mut gens = Vec::new();
        if degree >= 2 {
            let mut swap: Vec<u32> = (0..degree as u32).collect();
            swap.swap(0, 1);
            gens.push(Permutation::from_images_unchecked(swap));
            let cycle: Vec<u32> = (0..degree as u32)
                .map(|x| (x + 1) % degree as u32)
                .collect();
            gens.push(Permutation::from_images_unchecked(cycle));
        }
        PermGroup::new_unchecked(degree, gens)
    }

    /// `G_r`: the permutation for `g` maps `x -> x g`.
    pub fn right_regular(g: &Group) -> PermGroup {
        let gens = g
            .generating_set()
            .into_iter()
            .map(|h| right_translation(g, h))
            .collect();
        PermGroup::new_unchecked(g.order(), gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub(crate) fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::schreier_sims(self.degree, &self.generators, &[]))
    }

    /// The base of the stabilizer chain.
    pub fn base(&self) -> Vec<u32> {
        self.chain().base()
    }

    pub fn order(&self) -> BigUint {
        self.chain()
            .orbit_lengths()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l))
    }

    /// The order when it fits in a `u64`.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.chain().contains(p)
    }

    /// Orbits sorted by smallest point, each sorted.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        orbits_of(self.degree, &self.generators)
    }

    pub fn orbit(&self, x: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        seen[x as usize] = true;
        let mut orbit = vec![x];
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            for g in &self.generators {
                let z = g.image(y);
                if !std::mem::replace(&mut seen[z as usize], true) {
                    orbit.push(z);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    /// Transitive with order equal to the degree.
    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order() == BigUint::from(self.degree)
    }

    pub fn point_stabilizer(&self, x: u32) -> PermGroup {
        let chain = StabChain::schreier_sims(self.degree, &self.generators, &[x]);
        let (gens, rest) = chain.drop_first_level();
        PermGroup::with_chain(self.degree, gens, rest)
    }

    /// Every element, in a deterministic order. Fails when the order exceeds `cap`.
    pub fn elements(&self, cap: u64) -> Result<Vec<Permutation>> {
        let order = self.order();
        match order.to_u64() {
            Some(n) if n <= cap => Ok(self.chain().elements(self.degree)),
            _ => Err(Error::CapExceeded {
                what: "permutation group order for listing",
                limit: cap,
                actual: order.to_u64().unwrap_or(u64::MAX),
            }),
        }
    }

    /// A uniformly distributed element.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        self.chain().random_element(self.degree, rng)
    }

    /// Whether `other` is a subgroup of `self`.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }
}

pub fn right_translation(g: &Group, h: u32) -> Permutation {
    Permutation::from_images_unchecked(g.elements().map(|x| g.mul(x, h)).collect())
}

/// Orbits of the group generated by `gens`, sorted by smallest point.
pub fn orbits_of(degree: usize, gens: &[Permutation]) -> Vec<Vec<u32>> {
    let mut parent: Vec<u32> = (0..degree as u32).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    for g in gens {
        for x in 0..degree as u32 {
            let (a, b) = (find(&mut parent, x), find(&mut parent, g.image(x)));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi as usize] = lo;
            }
        }
    }
    let mut orbits: Vec<Vec<u32>> = Vec::new();
    let mut slot = vec![usize::MAX; degree];
    for x in 0..degree as u32 {
        let r = find(&mut parent, x) as usize;
        if slot[r] == usize::MAX {
            slot[r] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[slot[r]].push(x);
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[u32]) -> Permutation {
        Permutation::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn permutation_basics() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
        let p = perm(&[1, 2, 0, 3]);
        assert_eq!(p.order(), 3);
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(p.pow(3), Permutation::identity(4));
        assert_eq!(p.to_string(), "1 2 0 3");
        assert!(!p.is_fixed_point_free());
        assert_eq!(p.first_moved_point(), Some(0));
        // right action: p then q
        let q = perm(&[0, 1, 3, 2]);
        assert_eq!(p.then(&q).image(1), 3);
    }

    #[test]
    fn regular_representation() {
        let c3 = Group::cyclic(3).unwrap();
        let k = PermGroup::right_regular(&c3);
        let elems = k.elements(100).unwrap();
        assert_eq!(elems.len(), 3);
        for e in elems.iter().filter(|e| !e.is_identity()) {
            assert_eq!(e.cycles().len(), 1);
        }
        for g in [Group::quaternion8(), Group::dihedral(8).unwrap()] {
            let k = PermGroup::right_regular(&g);
            assert!(k.is_regular());
            assert_eq!(k.orbits().len(), 1);
            assert_eq!(k.point_stabilizer(0).order_u64(), Some(1));
        }
        let d8 = PermGroup::right_regular(&Group::dihedral(8).unwrap());
        let e = d8.elements(100).unwrap();
        assert!(e.iter().any(|x| e.iter().any(|y| x.then(y) != y.then(x))));
    }

    #[test]
    fn symmetric_group_stabilizer() {
        let s4 = PermGroup::symmetric(4);
        assert_eq!(s4.order_u64(), Some(24));
        assert_eq!(s4.point_stabilizer(0).order_u64(), Some(6));
        assert!(!PermGroup::symmetric(3).is_regular());
    }

    #[test]
    fn klein_four_is_regular() {
        let k = PermGroup::new(4, vec![perm(&[1, 0, 3, 2]), perm(&[2, 3, 0, 1])]).unwrap();
        assert!(k.is_regular());
    }

    #[test]
    fn large_symmetric_order() {
        let s = PermGroup::symmetric(30);
        let expect = (1..=30u32).fold(BigUint::one(), |a, k| a * BigUint::from(k));
        assert_eq!(s.order(), expect);
        assert!(s.contains(&perm(&(0..30).rev().collect::<Vec<_>>())));
    }
}
