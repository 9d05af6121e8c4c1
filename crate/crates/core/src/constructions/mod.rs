//! The explicit S-ring families over `D8 x Z_p` and `Q8 x Z_p`.
//!
//! Products are built as `H x Z_p` with `(h, k)` at index `h * p + k`, `h` indexed as
//! `a^i b^j -> i + 4 j` and `k` standing for `c^k`.

mod cyc;
mod d8;
mod q8;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::sring::SRing;

pub use cyc::{cyc_orbit_system, CycOrbitSystem};
pub use d8::{d8_zp_partition, d8_zp_quotient, d8_zp_sring, sigma_involution, D8Quotient};
pub use q8::{k_groups, q8_zp_l4, q8_zp_l4_partition, q8_zp_l6, q8_zp_l6_partition, Q8Frame};

/// Elements of `H` (D8 or Q8) by name.
pub mod h {
    pub const E: u32 = 0;
    pub const A: u32 = 1;
    pub const A2: u32 = 2;
    pub const A3: u32 = 3;
    pub const B: u32 = 4;
    pub const AB: u32 = 5;
    pub const A2B: u32 = 6;
    pub const A3B: u32 = 7;
}

/// A partition whose classes carry the names used in the constructions.
#[derive(Clone, Debug)]
pub struct NamedPartition {
    pub group: Arc<Group>,
    pub sets: Vec<(String, Vec<u32>)>,
}

impl NamedPartition {
    pub fn get(&self, name: &str) -> Option<&[u32]> {
        self.sets
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s.as_slice())
    }

    pub fn classes(&self) -> Vec<Vec<u32>> {
        self.sets.iter().map(|(_, s)| s.clone()).collect()
    }

    pub fn sring(&self) -> Result<SRing> {
        SRing::from_partition(self.group.clone(), self.classes())
    }

    /// The partition with the classes `first` and `second` merged.
    pub fn fused(&self, first: &str, second: &str) -> Vec<Vec<u32>> {
        let mut merged = Vec::new();
        let mut out = Vec::new();
        for (n, s) in &self.sets {
            if n == first || n == second {
                merged.extend(s);
            } else {
                out.push(s.clone());
            }
        }
        merged.sort_unstable();
        out.push(merged);
        out
    }
}

/// Builds `H x Z_p` and a helper placing `h C'` for `C'` a set of residues.
struct ProductFrame {
    group: Arc<Group>,
    p: u32,
}

impl ProductFrame {
    fn new(h: Group, p: u64) -> Result<ProductFrame> {
        let zp = Group::cyclic(p as usize)?;
        Ok(ProductFrame {
            group: Arc::new(Group::direct_product(&h, &zp)?),
            p: p as u32,
        })
    }

    fn at(&self, h: u32, k: u32) -> u32 {
        h * self.p + k % self.p
    }

    /// `{h c^k : h in hs, k in ks}`, sorted.
    fn set(&self, hs: &[u32], ks: &[u32]) -> Vec<u32> {
        let mut v: Vec<u32> = hs
            .iter()
            .flat_map(|&h| ks.iter().map(move |&k| (h, k)))
            .map(|(h, k)| self.at(h, k))
            .collect();
        v.sort_unstable();
        v
    }

    fn nonzero(&self) -> Vec<u32> {
        (1..self.p).collect()
    }
}

fn require_prime(p: u64, min: u64) -> Result<()> {
    if p < min || !crate::arith::is_prime(p) {
        return Err(Error::InvalidArgument(format!(
            "expected a prime p >= {min}, got {p}"
        )));
    }
    Ok(())
}
