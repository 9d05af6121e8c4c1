use std::sync::Arc;

use serde::Serialize;

use crate::arith::{is_prime, pow_mod, primitive_root};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::sring::SRing;

/// The orbits of the index-`l` subgroup `M` of `Aut(Z_p)` on `Z_p^#`.
///
/// `C_1` is the set of `l`-th power residues and `C_{i+1} = g C_i` for the smallest
/// primitive root `g`, so multiplication by `g` cycles `C_1 -> C_2 -> ... -> C_l -> C_1`.
/// Orbit indices are 1-based throughout, as in the cyclotomic identities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycOrbitSystem {
    pub p: u64,
    pub l: usize,
    pub m: usize,
    pub g: u64,
    orbits: Vec<Vec<u32>>,
    index: Vec<usize>,
}

pub fn cyc_orbit_system(p: u64, l: usize) -> Result<CycOrbitSystem> {
    if !is_prime(p) || p == 2 {
        return Err(Error::InvalidArgument(format!("{p} is not an odd prime")));
    }
    if l == 0 || !(p - 1).is_multiple_of(l as u64) {
        return Err(Error::InvalidArgument(format!(
            "{l} does not divide p - 1 = {}",
            p - 1
        )));
    }
    let m = (p as usize - 1) / l;
    let g = primitive_root(p);
    let mut orbits = vec![Vec::with_capacity(m); l];
    let mut index = vec![0; p as usize];
    for e in 0..p - 1 {
        let x = pow_mod(g, e, p);
        let i = (e % l as u64) as usize;
        orbits[i].push(x as u32);
        index[x as usize] = i + 1;
    }
    for o in &mut orbits {
        o.sort_unstable();
    }
    Ok(CycOrbitSystem {
        p,
        l,
        m,
        g,
        orbits,
        index,
    })
}

impl CycOrbitSystem {
    /// `C_i`, for `1 <= i <= l`.
    pub fn orbit(&self, i: usize) -> &[u32] {
        &self.orbits[i - 1]
    }

    pub fn orbits(&self) -> &[Vec<u32>] {
        &self.orbits
    }

    /// The `i` with `x` in `C_i`; 0 for the residue 0.
    pub fn index_of(&self, x: u32) -> usize {
        self.index[x as usize]
    }

    /// The action of `f` on orbit indices: `i -> i mod l + 1`.
    pub fn shift(&self, i: usize) -> usize {
        i % self.l + 1
    }

    /// The index of `C_i^-1 = -C_i`.
    pub fn inverse_index(&self, i: usize) -> usize {
        self.index_of((self.p as u32 - self.orbit(i)[0]) % self.p as u32)
    }

    /// The multipliers forming `M`.
    pub fn m_group(&self) -> Vec<u64> {
        self.powers_of(self.l)
    }

    /// The multipliers forming `W_0`, the overgroup of `M` with `|W_0 : M| = 2`.
    pub fn w0(&self) -> Vec<u64> {
        self.powers_of(self.l / 2)
    }

    fn powers_of(&self, step: usize) -> Vec<u64> {
        let order = (self.p as usize - 1) / step;
        let mut v: Vec<u64> = (0..order)
            .map(|k| pow_mod(self.g, (k * step) as u64, self.p))
            .collect();
        v.sort_unstable();
        v
    }

    /// `cyc(M, Z_p)`, whose nontrivial basic sets are the `C_i`.
    pub fn sring(&self) -> SRing {
        let zp = Arc::new(Group::cyclic(self.p as usize).expect("p > 0"));
        let mut classes = vec![vec![0]];
        classes.extend(self.orbits.iter().cloned());
        SRing::from_partition(zp, classes).expect("orbits of a group of automorphisms")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p13_l4() {
        let c = cyc_orbit_system(13, 4).unwrap();
        assert_eq!((c.m, c.g), (3, 2));
        // fourth powers mod 13: 1, 16 = 3, 81 = 3 * 27 = 9
        assert_eq!(c.orbit(1), &[1, 3, 9]);
        assert_eq!(c.orbit(2), &[2, 5, 6]);
        assert_eq!(c.orbit(3), &[4, 10, 12]);
        assert_eq!(c.orbit(4), &[7, 8, 11]);
        assert_eq!(c.inverse_index(1), 3);
        assert_eq!(c.inverse_index(2), 4);
    }

    #[test]
    fn p5_l4_singletons() {
        let c = cyc_orbit_system(5, 4).unwrap();
        assert_eq!(c.orbits(), &[vec![1], vec![2], vec![4], vec![3]]);
    }

    #[test]
    fn p13_l6_symmetric() {
        let c = cyc_orbit_system(13, 6).unwrap();
        assert_eq!(c.m, 2);
        for i in 1..=6 {
            assert_eq!(c.inverse_index(i), i);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(cyc_orbit_system(7, 4).is_err());
        assert!(cyc_orbit_system(15, 2).is_err());
        assert!(cyc_orbit_system(2, 1).is_err());
    }

    #[test]
    fn invariants_below_200() {
        for p in (3..200).filter(|&p| is_prime(p)) {
            for l in [4usize, 6] {
                let Ok(c) = cyc_orbit_system(p, l) else {
                    assert!(!(p - 1).is_multiple_of(l as u64));
                    continue;
                };
                let mut all: Vec<u32> = c.orbits().concat();
                all.sort_unstable();
                assert_eq!(all, (1..p as u32).collect::<Vec<_>>());
                for i in 1..=l {
                    assert_eq!(c.orbit(i).len(), c.m);
                    let mut moved: Vec<u32> = c
                        .orbit(i)
                        .iter()
                        .map(|&x| (x as u64 * c.g % p) as u32)
                        .collect();
                    moved.sort_unstable();
                    assert_eq!(moved, c.orbit(c.shift(i)));
                    let expected = if c.m % 2 == 0 {
                        i
                    } else {
                        (i - 1 + l / 2) % l + 1
                    };
                    assert_eq!(c.inverse_index(i), expected);
                }
                let m = c.m_group();
                assert_eq!(m.len(), c.m);
                assert_eq!(c.w0().len(), 2 * c.m);
                assert!(m.iter().all(|x| c.w0().contains(x)));
                assert!(m.iter().all(|&x| c.index_of(x as u32) == 1));
            }
        }
    }
}
