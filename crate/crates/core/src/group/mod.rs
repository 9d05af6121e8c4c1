//! Finite groups given by explicit multiplication tables.
//!
//! Elements are the dense indices `0..order`; index 0 is always the identity.

pub(crate) mod automorphism;
mod constructors;
mod spec;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub use automorphism::automorphism_group;
pub use spec::{dump_table, parse_group_spec};

/// Largest order for which [`Group::from_table`] checks associativity exhaustively.
const ASSOCIATIVITY_CHECK_MAX: usize = 256;

#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    label: String,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({}, order {})", self.label, self.order)
    }
}

impl Group {
    /// Builds a group from a row-major multiplication table, validating the
    /// identity, inverse and closure invariants (and associativity up to order 256).
    pub fn from_table(label: impl Into<String>, order: usize, mul: Vec<u32>) -> Result<Group> {
        if order == 0 {
            return Err(Error::InvalidArgument(
                "group order must be positive".into(),
            ));
        }
        if mul.len() != order * order {
            return Err(Error::InvalidArgument(format!(
                "table has {} entries, expected {}",
                mul.len(),
                order * order
            )));
        }
        if let Some(&bad) = mul.iter().find(|&&v| v as usize >= order) {
            return Err(Error::InvalidArgument(format!(
                "table entry {bad} out of range"
            )));
        }
        for x in 0..order {
            if mul[x] as usize != x || mul[x * order] as usize != x {
                return Err(Error::InvalidArgument(format!(
                    "element 0 is not a two-sided identity (fails at {x})"
                )));
            }
        }
        let mut inv = vec![u32::MAX; order];
        for x in 0..order {
            let row = &mul[x * order..(x + 1) * order];
            let mut seen = vec![false; order];
            for &v in row {
                if std::mem::replace(&mut seen[v as usize], true) {
                    return Err(Error::InvalidArgument(format!(
                        "row {x} is not a permutation"
                    )));
                }
            }
            match row.iter().position(|&v| v == 0) {
                Some(y) if mul[y * order + x] == 0 => inv[x] = y as u32,
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "element {x} has no two-sided inverse"
                    )))
                }
            }
        }
        let g = Group {
            order,
            mul,
            inv,
            label: label.into(),
        };
        if order <= ASSOCIATIVITY_CHECK_MAX {
            if let Some((x, y, z)) = g.associativity_failure() {
                return Err(Error::InvalidArgument(format!(
                    "multiplication is not associative at ({x}, {y}, {z})"
                )));
            }
        }
        Ok(g)
    }

    /// Builds from a table known to be valid; only debug builds check it.
    pub(crate) fn from_table_unchecked(label: String, order: usize, mul: Vec<u32>) -> Group {
        let mut inv = vec![0u32; order];
        for x in 0..order {
            let y = mul[x * order..(x + 1) * order]
                .iter()
                .position(|&v| v == 0)
                .expect("every row contains the identity");
            inv[x] = y as u32;
        }
        let g = Group {
            order,
            mul,
            inv,
            label,
        };
        debug_assert!(order > 64 || g.associativity_failure().is_none());
        g
    }

    fn associativity_failure(&self) -> Option<(u32, u32, u32)> {
        let n = self.order as u32;
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> u32 {
        0
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.mul[x as usize * self.order + y as usize]
    }

    #[inline]
    pub fn inv(&self, x: u32) -> u32 {
        self.inv[x as usize]
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order as u32
    }

    /// `x^k` for any integer `k`.
    pub fn pow(&self, x: u32, k: i64) -> u32 {
        let base = if k < 0 { self.inv(x) } else { x };
        let mut e = k.unsigned_abs();
        let (mut acc, mut sq) = (0u32, base);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: u32) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Number of elements of each order.
    pub fn order_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for x in self.elements() {
            *census.entry(self.element_order(x)).or_insert(0) += 1;
        }
        census
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|x| self.element_order(x))
            .fold(1, |a, b| a / gcd(a, b) * b)
    }

    pub fn commute(&self, x: u32, y: u32) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|x| (x + 1..self.order as u32).all(|y| self.commute(x, y)))
    }

    pub fn center(&self) -> Subgroup {
        Subgroup::from_sorted(
            self.elements()
                .filter(|&x| self.elements().all(|y| self.commute(x, y)))
                .collect(),
        )
    }

    /// `g^-1 x g`.
    pub fn conjugate(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// Smallest subgroup containing `elems`.
    pub fn subgroup_generated(&self, elems: &[u32]) -> Subgroup {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut list = vec![0u32];
        let mut queue: VecDeque<u32> = VecDeque::from([0]);
        // in a finite group closure under right multiplication by generators suffices
        while let Some(x) = queue.pop_front() {
            for &g in elems {
                let y = self.mul(x, g);
                if !member[y as usize] {
                    member[y as usize] = true;
                    list.push(y);
                    queue.push_back(y);
                }
            }
        }
        list.sort_unstable();
        Subgroup::from_sorted(list)
    }

    /// Checks that a sorted element set is a subgroup.
    pub fn subgroup(&self, elems: &[u32]) -> Result<Subgroup> {
        let set: BTreeSet<u32> = elems.iter().copied().collect();
        if set.iter().any(|&x| x as usize >= self.order) {
            return Err(Error::InvalidArgument("element index out of range".into()));
        }
        if !set.contains(&0) {
            return Err(Error::InvalidArgument(
                "subgroup must contain the identity".into(),
            ));
        }
        for &x in &set {
            if !set.contains(&self.inv(x)) {
                return Err(Error::InvalidArgument(format!(
                    "not closed under inverse at {x}"
                )));
            }
            for &y in &set {
                if !set.contains(&self.mul(x, y)) {
                    return Err(Error::InvalidArgument(format!("not closed at {x}*{y}")));
                }
            }
        }
        Ok(Subgroup::from_sorted(set.into_iter().collect()))
    }

    /// Returns a conjugation witness `(n, g)` with `g^-1 n g` outside `sub`, if any.
    pub fn normality_witness(&self, sub: &Subgroup) -> Option<(u32, u32)> {
        for &n in sub.elements() {
            for g in self.elements() {
                if !sub.contains(self.conjugate(n, g)) {
                    return Some((n, g));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, sub: &Subgroup) -> bool {
        self.normality_witness(sub).is_none()
    }

    /// Right cosets `Hx` of `sub` contained in `within`, ordered by smallest element.
    pub fn right_cosets(&self, sub: &Subgroup, within: &Subgroup) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.order];
        let mut cosets = Vec::new();
        for &x in within.elements() {
            if seen[x as usize] {
                continue;
            }
            let mut coset: Vec<u32> = sub.elements().iter().map(|&h| self.mul(h, x)).collect();
            coset.sort_unstable();
            for &y in &coset {
                seen[y as usize] = true;
            }
            cosets.push(coset);
        }
        cosets
    }

    /// The quotient `self / normal`.
    pub fn quotient(&self, normal: &Subgroup) -> Result<Section> {
        self.section(&self.whole(), normal)
    }

    /// The section `top / bottom`, with `bottom` normal in `top`.
    pub fn section(&self, top: &Subgroup, bottom: &Subgroup) -> Result<Section> {
        if !bottom.elements().iter().all(|&x| top.contains(x)) {
            return Err(Error::InvalidArgument(
                "bottom of a section must lie in its top".into(),
            ));
        }
        for &n in bottom.elements() {
            for &g in top.elements() {
                if !bottom.contains(self.conjugate(n, g)) {
                    return Err(Error::NotNormal { n, g });
                }
            }
        }
        let cosets = self.right_cosets(bottom, top);
        let mut projection = vec![None; self.order];
        for (q, coset) in cosets.iter().enumerate() {
            for &x in coset {
                projection[x as usize] = Some(q as u32);
            }
        }
        let k = cosets.len();
        let mut mul = Vec::with_capacity(k * k);
        for a in &cosets {
            for b in &cosets {
                mul.push(projection[self.mul(a[0], b[0]) as usize].expect("top is closed"));
            }
        }
        let label = if top.order() == self.order {
            format!("{}/{}", self.label, bottom.order())
        } else {
            format!("({}<{}>)/{}", self.label, top.order(), bottom.order())
        };
        Ok(Section {
            top: top.clone(),
            bottom: bottom.clone(),
            quotient: Group::from_table_unchecked(label, k, mul),
            projection,
            cosets,
        })
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted(self.elements().collect())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted(vec![0])
    }

    /// Generating set chosen greedily: repeatedly add the element that enlarges the
    /// generated subgroup the most, ties broken by smallest index.
    pub fn generating_set(&self) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut current = self.trivial_subgroup();
        while current.order() < self.order {
            let mut best: Option<(usize, u32)> = None;
            for x in self.elements().filter(|&x| !current.contains(x)) {
                let mut trial = gens.clone();
                trial.push(x);
                let size = self.subgroup_generated(&trial).order();
                if best.is_none_or(|(s, _)| size > s) {
                    best = Some((size, x));
                }
            }
            let (_, x) = best.expect("a proper subgroup misses some element");
            gens.push(x);
            current = self.subgroup_generated(&gens);
        }
        gens
    }

    /// All subgroups, sorted by order and then elements.
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let mut found: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        let trivial = self.trivial_subgroup();
        found.insert(trivial.elements().to_vec());
        queue.push_back(trivial);
        // every subgroup is a join of cyclic subgroups
        while let Some(h) = queue.pop_front() {
            for x in self.elements().filter(|&x| !h.contains(x)) {
                let mut gens = h.elements().to_vec();
                gens.push(x);
                let k = self.subgroup_generated(&gens);
                if found.insert(k.elements().to_vec()) {
                    queue.push_back(k);
                }
            }
        }
        let mut subs: Vec<Subgroup> = found.into_iter().map(Subgroup::from_sorted).collect();
        subs.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
        subs
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A subgroup, stored as its sorted element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<u32>,
}

impl Subgroup {
    pub(crate) fn from_sorted(elements: Vec<u32>) -> Subgroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup { elements }
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

/// A section `top / bottom` together with its quotient group and the canonical projection.
#[derive(Clone, Debug)]
pub struct Section {
    pub top: Subgroup,
    pub bottom: Subgroup,
    pub quotient: Group,
    projection: Vec<Option<u32>>,
    cosets: Vec<Vec<u32>>,
}

impl Section {
    /// Image of `x` in the quotient; `None` when `x` lies outside `top`.
    pub fn project(&self, x: u32) -> Option<u32> {
        self.projection[x as usize]
    }

    /// The coset of `bottom` represented by quotient element `q`.
    pub fn coset(&self, q: u32) -> &[u32] {
        &self.cosets[q as usize]
    }
}
