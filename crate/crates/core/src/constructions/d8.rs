use super::h::*;
use super::{require_prime, NamedPartition, ProductFrame};
use crate::error::Result;
use crate::group::{Group, Section, Subgroup};
use crate::perm::Permutation;
use crate::sring::{quotient_sring, SRing};

/// The basic sets `Z_i`, `X_i`, `Y_i`, `T_jk` over `D8 x Z_p`, `p >= 5`.
///
/// Names are `Z0..Z4`, `X1..X4`, `Y1..Y4` and `T{j},{k}`.
pub fn d8_zp_partition(p: u64) -> Result<NamedPartition> {
    require_prime(p, 5)?;
    let f = ProductFrame::new(Group::dihedral(8)?, p)?;
    let pm = p as u32;
    let mut sets = Vec::new();
    let mut add = |name: String, hs: &[u32], k: u32| sets.push((name, f.set(hs, &[k])));
    add("Z0".into(), &[E], 0);
    add("Z1".into(), &[A2], 0);
    add("Z2".into(), &[AB], 0);
    add("Z3".into(), &[A3B], 0);
    add("Z4".into(), &[A, A3, B, A2B], 0);
    add("X1".into(), &[E, A2], 1);
    add("X2".into(), &[AB, A3B], 1);
    add("X3".into(), &[A, B], 1);
    add("X4".into(), &[A3, A2B], 1);
    add("Y1".into(), &[E, A2], pm - 1);
    add("Y2".into(), &[AB, A3B], pm - 1);
    add("Y3".into(), &[A3, B], pm - 1);
    add("Y4".into(), &[A, A2B], pm - 1);
    for k in 2..=pm - 2 {
        add(format!("T1,{k}"), &[E, A2], k);
        add(format!("T2,{k}"), &[AB, A3B], k);
        add(format!("T3,{k}"), &[A, A3, B, A2B], k);
    }
    Ok(NamedPartition {
        group: f.group,
        sets,
    })
}

pub fn d8_zp_sring(p: u64) -> Result<SRing> {
    d8_zp_partition(p)?.sring()
}

/// `A_{G/A_1}` for `A_1 = <a^2>`, with the images of `H` and `C` in the quotient.
#[derive(Clone, Debug)]
pub struct D8Quotient {
    pub section: Section,
    pub sring: SRing,
    pub h_image: Subgroup,
    pub c_image: Subgroup,
}

pub fn d8_zp_quotient(p: u64) -> Result<D8Quotient> {
    let a = d8_zp_sring(p)?;
    let g = a.group();
    let a1 = g.subgroup(&[0, A2 * p as u32])?;
    let section = g.quotient(&a1)?;
    let sring = quotient_sring(&a, &section)?;
    let project = |xs: Vec<u32>| -> Result<Subgroup> {
        let mut img: Vec<u32> = xs
            .into_iter()
            .map(|x| section.project(x).expect("whole group"))
            .collect();
        img.sort_unstable();
        img.dedup();
        section.quotient.subgroup(&img)
    };
    let h_image = project((0..8).map(|h| h * p as u32).collect())?;
    let c_image = project((0..p as u32).collect())?;
    Ok(D8Quotient {
        section,
        sring,
        h_image,
        c_image,
    })
}

/// The involution of `G/A_1` swapping `A_1 a c^k` with `A_1 b c^k` and fixing
/// `A_1 c^k` and `A_1 ab c^k`, in the coset numbering of [`d8_zp_quotient`].
pub fn sigma_involution(p: u64) -> Result<Permutation> {
    let q = d8_zp_quotient(p)?;
    let pm = p as u32;
    // on H: a <-> b, a^3 <-> a^2 b, the rest fixed; it respects the cosets of <a^2>
    let swap = |h: u32| match h {
        A => B,
        B => A,
        A3 => A2B,
        A2B => A3,
        other => other,
    };
    let images = (0..q.section.quotient.order() as u32)
        .map(|c| {
            let x = q.section.coset(c)[0];
            let (h, k) = (x / pm, x % pm);
            q.section.project(swap(h) * pm + k).expect("whole group")
        })
        .collect();
    Permutation::from_images(images)
}
