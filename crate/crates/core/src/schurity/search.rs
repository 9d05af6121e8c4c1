//! Point stabilizer of a color matrix by individualization and refinement.
//!
//! The first path individualizes the first point of the first nonsingleton cell
//! at each level, which fixes a base `b_1, ..., b_k` of the stabilizer of the
//! identity. Levels are then processed from the deepest up: for every point `c`
//! in the cell of `b_i`, not yet known to be in the orbit of `b_i` under the
//! automorphisms fixing `b_1, ..., b_{i-1}`, a depth-first search looks for one
//! automorphism mapping the path onto a path through `c`. Each success adds a
//! strong generator; each failure rules out the whole current orbit of `c`.

use std::time::Instant;

use super::color::ColorMatrix;
use super::refine::{Partition, Trace};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::Permutation;

struct Level {
    before: Partition,
    cell: u32,
    point: u32,
    trace: Vec<u64>,
}

/// Union-find over points, remembering which orbits are known to miss the base point.
struct Orbits {
    parent: Vec<u32>,
    failed: Vec<bool>,
}

impl Orbits {
    fn new(n: usize) -> Orbits {
        Orbits {
            parent: (0..n as u32).collect(),
            failed: vec![false; n],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
            self.failed[lo as usize] |= self.failed[hi as usize];
        }
    }

    fn absorb(&mut self, p: &Permutation) {
        for (x, &y) in p.images().iter().enumerate() {
            self.union(x as u32, y);
        }
    }
}

pub(crate) struct StabilizerSearch<'a> {
    cm: &'a ColorMatrix,
    started: Instant,
    limits: &'a Limits,
    pub(crate) nodes: u64,
}

/// Base and strong generators of the stabilizer of point 0.
pub(crate) struct Bsgs {
    pub(crate) base: Vec<u32>,
    pub(crate) gens: Vec<Permutation>,
    pub(crate) nodes: u64,
}

impl<'a> StabilizerSearch<'a> {
    pub(crate) fn new(cm: &'a ColorMatrix, limits: &'a Limits) -> Self {
        StabilizerSearch {
            cm,
            started: Instant::now(),
            limits,
            nodes: 0,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(64) && self.started.elapsed() > self.limits.time_budget {
            return Err(Error::TimeBudgetExceeded {
                what: "S-ring automorphism search",
                secs: self.limits.time_budget.as_secs(),
            });
        }
        Ok(())
    }

    /// `seeds` are automorphisms fixing 0 that are known in advance; they only
    /// speed things up.
    pub(crate) fn run(mut self, seeds: &[Permutation]) -> Result<Bsgs> {
        let n = self.cm.degree();
        let mut root = Partition::unit(n);
        if n == 0 {
            return Ok(Bsgs {
                base: Vec::new(),
                gens: Vec::new(),
                nodes: 0,
            });
        }
        let mut root_trace = Vec::new();
        root.individualize_and_refine(0, self.cm, Trace::Record(&mut root_trace));

        let mut levels = Vec::new();
        let mut cur = root;
        while let Some(cell) = cur.first_nonsingleton() {
            let before = cur.clone();
            let point = cur.cell(cell)[0];
            let mut trace = Vec::new();
            cur.individualize_and_refine(point, self.cm, Trace::Record(&mut trace));
            levels.push(Level {
                before,
                cell,
                point,
                trace,
            });
        }
        let leaf = cur.elements().to_vec();
        let base: Vec<u32> = levels.iter().map(|l| l.point).collect();

        let mut gens: Vec<Permutation> =
            seeds.iter().filter(|s| !s.is_identity()).cloned().collect();
        for i in (0..levels.len()).rev() {
            let fixes_prefix = |g: &Permutation| base[..i].iter().all(|&b| g.image(b) == b);
            let mut orbits = Orbits::new(n);
            for g in gens.iter().filter(|g| fixes_prefix(g)) {
                orbits.absorb(g);
            }
            let candidates = levels[i].before.cell(levels[i].cell).to_vec();
            let bi = levels[i].point;
            for c in candidates {
                let (rc, rb) = (orbits.find(c), orbits.find(bi));
                if rc == rb || orbits.failed[rc as usize] {
                    continue;
                }
                match self.map_path(&levels, &leaf, i, c)? {
                    Some(g) => {
                        orbits.absorb(&g);
                        gens.push(g);
                    }
                    None => orbits.failed[rc as usize] = true,
                }
            }
        }
        Ok(Bsgs {
            base,
            gens,
            nodes: self.nodes,
        })
    }

    /// An automorphism fixing the first `i` base points and mapping `b_i` to `c`.
    fn map_path(
        &mut self,
        levels: &[Level],
        leaf: &[u32],
        i: usize,
        c: u32,
    ) -> Result<Option<Permutation>> {
        let mut p = levels[i].before.clone();
        if !p.individualize_and_refine(
            c,
            self.cm,
            Trace::Compare {
                reference: &levels[i].trace,
                at: 0,
            },
        ) {
            return Ok(None);
        }
        self.descend(levels, leaf, i + 1, p)
    }

    fn descend(
        &mut self,
        levels: &[Level],
        leaf: &[u32],
        j: usize,
        p: Partition,
    ) -> Result<Option<Permutation>> {
        self.tick()?;
        if j == levels.len() {
            let mut images = vec![0u32; p.len()];
            for (&x, &y) in leaf.iter().zip(p.elements()) {
                images[x as usize] = y;
            }
            let g = Permutation::from_images_unchecked(images);
            return Ok(self.cm.is_automorphism(&g).then_some(g));
        }
        let choices = p.cell(levels[j].cell).to_vec();
        for d in choices {
            let mut q = p.clone();
            if q.individualize_and_refine(
                d,
                self.cm,
                Trace::Compare {
                    reference: &levels[j].trace,
                    at: 0,
                },
            ) {
                if let Some(g) = self.descend(levels, leaf, j + 1, q)? {
                    return Ok(Some(g));
                }
            }
        }
        Ok(None)
    }
}
