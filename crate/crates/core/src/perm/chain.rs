//! Stabilizer chains (base and strong generating set) via deterministic
//! Schreier-Sims.

use std::collections::HashSet;

use rand::Rng;

use super::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base_point: u32,
    /// Strong generators fixing every earlier base point.
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    /// `reps[x]` maps the base point to `x`.
    reps: Vec<Option<Permutation>>,
    reps_inv: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base_point: u32, degree: usize) -> Level {
        let mut reps = vec![None; degree];
        reps[base_point as usize] = Some(Permutation::identity(degree));
        Level {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point],
            reps_inv: reps.clone(),
            reps,
        }
    }

    /// Grows the orbit under the current generators, keeping existing representatives.
    fn close_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            for g in &self.gens {
                let y = g.image(x);
                if self.reps[y as usize].is_none() {
                    let rep = self.reps[x as usize].as_ref().unwrap().then(g);
                    self.reps_inv[y as usize] = Some(rep.inverse());
                    self.reps[y as usize] = Some(rep);
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }
}

#[derive(Clone, Debug, Default)]
pub(crate) struct StabChain {
    levels: Vec<Level>,
}

impl StabChain {
    /// Builds a chain whose base starts with `base_prefix`.
    pub(crate) fn schreier_sims(
        degree: usize,
        gens: &[Permutation],
        base_prefix: &[u32],
    ) -> StabChain {
        let mut chain = StabChain {
            levels: base_prefix.iter().map(|&b| Level::new(b, degree)).collect(),
        };
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            if chain
                .levels
                .iter()
                .all(|l| g.image(l.base_point) == l.base_point)
            {
                let b = g.first_moved_point().expect("non-identity");
                chain.levels.push(Level::new(b, degree));
            }
        }
        for g in &gens {
            for level in chain.levels.iter_mut() {
                level.gens.push(g.clone());
                if g.image(level.base_point) != level.base_point {
                    break;
                }
            }
        }
        for level in chain.levels.iter_mut() {
            level.close_orbit();
        }

        let mut verified: Vec<HashSet<(u32, usize)>> = vec![HashSet::new(); chain.levels.len()];
        let mut i = chain.levels.len();
        'outer: while i > 0 {
            let li = i - 1;
            let mut k = 0;
            while k < chain.levels[li].orbit.len() {
                let beta = chain.levels[li].orbit[k];
                for s in 0..chain.levels[li].gens.len() {
                    if verified[li].contains(&(beta, s)) {
                        continue;
                    }
                    let level = &chain.levels[li];
                    let gen = &level.gens[s];
                    let gamma = gen.image(beta);
                    let h = level.reps[beta as usize]
                        .as_ref()
                        .unwrap()
                        .then(gen)
                        .then(level.reps_inv[gamma as usize].as_ref().unwrap());
                    let (j, residue) = chain.sift(h, li + 1);
                    if j == chain.levels.len() && residue.is_identity() {
                        verified[li].insert((beta, s));
                        continue;
                    }
                    if j == chain.levels.len() {
                        let b = residue.first_moved_point().expect("non-identity");
                        chain.levels.push(Level::new(b, degree));
                        verified.push(HashSet::new());
                    }
                    for l in li + 1..=j {
                        chain.levels[l].gens.push(residue.clone());
                        chain.levels[l].close_orbit();
                    }
                    i = j + 1;
                    continue 'outer;
                }
                k += 1;
            }
            i -= 1;
        }
        chain
    }

    /// A chain from a known base and strong generating set: the generators fixing
    /// the first `i` base points must generate the `i`-th stabilizer.
    pub(crate) fn from_bsgs(degree: usize, base: &[u32], strong_gens: &[Permutation]) -> StabChain {
        let mut levels = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let mut level = Level::new(b, degree);
            level.gens = strong_gens
                .iter()
                .filter(|g| base[..i].iter().all(|&p| g.image(p) == p))
                .cloned()
                .collect();
            level.close_orbit();
            levels.push(level);
        }
        StabChain { levels }
    }

    /// Strips `g` through the levels starting at `from`. Returns the level where
    /// stripping stopped (the number of levels when it went all the way through)
    /// and the residue.
    fn sift(&self, mut g: Permutation, from: usize) -> (usize, Permutation) {
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let x = g.image(level.base_point);
            match &level.reps_inv[x as usize] {
                None => return (j, g),
                Some(u_inv) => g = g.then(u_inv),
            }
        }
        (self.levels.len(), g)
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        let (j, residue) = self.sift(g.clone(), 0);
        j == self.levels.len() && residue.is_identity()
    }

    pub(crate) fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub(crate) fn orbit_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.levels.iter().map(|l| l.orbit.len())
    }

    /// Strong generators of the first stabilizer and its chain.
    pub(crate) fn drop_first_level(mut self) -> (Vec<Permutation>, StabChain) {
        if self.levels.is_empty() {
            return (Vec::new(), self);
        }
        self.levels.remove(0);
        let gens = self
            .levels
            .first()
            .map(|l| l.gens.clone())
            .unwrap_or_default();
        (gens, self)
    }

    pub(crate) fn elements(&self, degree: usize) -> Vec<Permutation> {
        // g = u_k then ... then u_1, deepest level first
        let mut acc = vec![Permutation::identity(degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(acc.len() * level.orbit.len());
            for g in &acc {
                for &x in &level.orbit {
                    next.push(g.then(level.reps[x as usize].as_ref().unwrap()));
                }
            }
            acc = next;
        }
        acc
    }

    pub(crate) fn random_element<R: Rng + ?Sized>(
        &self,
        degree: usize,
        rng: &mut R,
    ) -> Permutation {
        let mut g = Permutation::identity(degree);
        for level in self.levels.iter().rev() {
            let x = level.orbit[rng.gen_range(0..level.orbit.len())];
            g = g.then(level.reps[x as usize].as_ref().unwrap());
        }
        g
    }
}
