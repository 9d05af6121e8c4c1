use super::h::*;
use super::{cyc_orbit_system, require_prime, CycOrbitSystem, NamedPartition, ProductFrame};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::{PermGroup, Permutation};
use crate::sring::SRing;

/// The automorphisms `σ1: (a, b) -> (b, a^3)`, `σ2: (a, b) -> (a^3, b)` and
/// `σ3: (a, b) -> (a^2 b, a^3 b)` of Q8 and the groups they generate:
/// `U = <σ1, σ2>`, `V = <σ1^2, σ2, σ3>` and `U0 = V0 = <σ1^2, σ2>`.
#[derive(Clone, Debug)]
pub struct Q8Frame {
    pub sigma1: Permutation,
    pub sigma2: Permutation,
    pub sigma3: Permutation,
    pub u: PermGroup,
    pub v: PermGroup,
    pub u0: PermGroup,
}

impl Q8Frame {
    pub fn new() -> Q8Frame {
        let q8 = Group::quaternion8();
        let hom = |ia: u32, ib: u32| {
            let images = (0..8u32)
                .map(|x| q8.mul(q8.pow(ia, (x % 4) as i64), q8.pow(ib, (x / 4) as i64)))
                .collect();
            Permutation::from_images(images).expect("images generate Q8")
        };
        let sigma1 = hom(B, A3);
        let sigma2 = hom(A3, B);
        let sigma3 = hom(A2B, A3B);
        let s1sq = sigma1.then(&sigma1);
        let group = |gens: Vec<Permutation>| PermGroup::new(8, gens).expect("degree 8");
        Q8Frame {
            u: group(vec![sigma1.clone(), sigma2.clone()]),
            v: group(vec![s1sq.clone(), sigma2.clone(), sigma3.clone()]),
            u0: group(vec![s1sq, sigma2.clone()]),
            sigma1,
            sigma2,
            sigma3,
        }
    }
}

impl Default for Q8Frame {
    fn default() -> Self {
        Q8Frame::new()
    }
}

fn congruent(p: u64, l: u64) -> Result<CycOrbitSystem> {
    require_prime(p, 3)?;
    if p % l != 1 {
        return Err(Error::InvalidArgument(format!("p = {p} is not 1 mod {l}")));
    }
    cyc_orbit_system(p, l as usize)
}

/// The classes `X0..X9` over `Q8 x Z_p`, `p = 1 mod 4`.
pub fn q8_zp_l4_partition(p: u64) -> Result<NamedPartition> {
    let cs = congruent(p, 4)?;
    let f = ProductFrame::new(Group::quaternion8(), p)?;
    let c = |i: usize| cs.orbit(i).to_vec();
    let union = |parts: Vec<Vec<u32>>| {
        let mut v = parts.concat();
        v.sort_unstable();
        v
    };
    let cat = |a: &[u32], b: &[u32]| [a, b].concat();
    let sets = vec![
        ("X0", f.set(&[E], &[0])),
        ("X1", f.set(&[A2], &[0])),
        ("X2", f.set(&[AB, A3B], &[0])),
        ("X3", f.set(&[A, A3, B, A2B], &[0])),
        ("X4", f.set(&[E], &f.nonzero())),
        ("X5", f.set(&[A2], &f.nonzero())),
        (
            "X6",
            union(vec![
                f.set(&[A, A3], &cat(&c(2), &c(4))),
                f.set(&[B, A2B], &cat(&c(1), &c(3))),
            ]),
        ),
        (
            "X7",
            union(vec![
                f.set(&[A], &c(1)),
                f.set(&[A3], &c(3)),
                f.set(&[B], &c(2)),
                f.set(&[A2B], &c(4)),
            ]),
        ),
        (
            "X8",
            union(vec![
                f.set(&[A], &c(3)),
                f.set(&[A3], &c(1)),
                f.set(&[B], &c(4)),
                f.set(&[A2B], &c(2)),
            ]),
        ),
        ("X9", f.set(&[AB, A3B], &f.nonzero())),
    ];
    Ok(NamedPartition {
        group: f.group,
        sets: sets.into_iter().map(|(n, s)| (n.to_string(), s)).collect(),
    })
}

pub fn q8_zp_l4(p: u64) -> Result<SRing> {
    q8_zp_l4_partition(p)?.sring()
}

/// The classes `Y0..Y8` over `Q8 x Z_p`, `p = 1 mod 6`.
pub fn q8_zp_l6_partition(p: u64) -> Result<NamedPartition> {
    let cs = congruent(p, 6)?;
    let f = ProductFrame::new(Group::quaternion8(), p)?;
    let c = |i: usize| cs.orbit(i).to_vec();
    let union = |parts: Vec<Vec<u32>>| {
        let mut v = parts.concat();
        v.sort_unstable();
        v
    };
    let cat = |a: usize, b: usize| [c(a), c(b)].concat();
    let sets = vec![
        ("Y0", f.set(&[E], &[0])),
        ("Y1", f.set(&[A2], &[0])),
        ("Y2", f.set(&[A, A3, B, A2B, AB, A3B], &[0])),
        ("Y3", f.set(&[E], &f.nonzero())),
        ("Y4", f.set(&[A2], &f.nonzero())),
        (
            "Y5",
            union(vec![
                f.set(&[A, A3], &cat(1, 4)),
                f.set(&[B, A2B], &cat(2, 5)),
                f.set(&[AB, A3B], &cat(3, 6)),
            ]),
        ),
        (
            "Y6",
            union(vec![
                f.set(&[A, A3], &cat(2, 5)),
                f.set(&[B, A2B], &cat(3, 6)),
                f.set(&[AB, A3B], &cat(1, 4)),
            ]),
        ),
        (
            "Y7",
            union(vec![
                f.set(&[A], &c(3)),
                f.set(&[A2B], &c(4)),
                f.set(&[AB], &c(5)),
                f.set(&[A3], &c(6)),
                f.set(&[B], &c(1)),
                f.set(&[A3B], &c(2)),
            ]),
        ),
        (
            "Y8",
            union(vec![
                f.set(&[A], &c(6)),
                f.set(&[A2B], &c(1)),
                f.set(&[AB], &c(2)),
                f.set(&[A3], &c(3)),
                f.set(&[B], &c(4)),
                f.set(&[A3B], &c(5)),
            ]),
        ),
    ];
    Ok(NamedPartition {
        group: f.group,
        sets: sets.into_iter().map(|(n, s)| (n.to_string(), s)).collect(),
    })
}

pub fn q8_zp_l6(p: u64) -> Result<SRing> {
    q8_zp_l6_partition(p)?.sring()
}

/// `(σ, τ)` acting on `Q8 x Z_p` as `(h, k) -> (h^σ, τ k)`.
fn pair(sigma: &Permutation, tau: u64, p: u64) -> Permutation {
    let images = (0..8 * p)
        .map(|x| {
            let (h, k) = ((x / p) as u32, x % p);
            sigma.image(h) * p as u32 + (k * tau % p) as u32
        })
        .collect();
    Permutation::from_images(images).expect("product of bijections")
}

/// `K1` (`l = 4`) or `K2` (`l = 6`) as a group of automorphisms of `Q8 x Z_p`.
///
/// `K1` pairs `U` with `W = Aut(Z_p)` along `U/U0 ≅ W/W0 ≅ Z2`; `K2` pairs `V` with `W`
/// along the isomorphism `V/V0 -> W/W0 ≅ Z3` sending `V0 σ3` to `W0 g`.
pub fn k_groups(p: u64, l: usize) -> Result<PermGroup> {
    let cs = match l {
        4 | 6 => congruent(p, l as u64)?,
        _ => return Err(Error::InvalidArgument(format!("l must be 4 or 6, got {l}"))),
    };
    let frame = Q8Frame::new();
    let id = Permutation::identity(8);
    let g = cs.g;
    let s1sq = frame.sigma1.then(&frame.sigma1);
    let w0_gen = crate::arith::pow_mod(g, (l / 2) as u64, p);
    let top = if l == 4 { &frame.sigma1 } else { &frame.sigma3 };
    let gens = vec![
        pair(top, g, p),
        pair(&s1sq, 1, p),
        pair(&frame.sigma2, 1, p),
        pair(&id, w0_gen, p),
    ];
    PermGroup::new(8 * p as usize, gens)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::group::automorphism::is_group_automorphism;
    use crate::schurity::cyclotomic;
    use crate::sring::normalize;

    fn census(g: &PermGroup) -> BTreeMap<u64, usize> {
        let mut m = BTreeMap::new();
        for x in g.elements(1000).unwrap() {
            *m.entry(x.order()).or_insert(0) += 1;
        }
        m
    }

    #[test]
    fn frame_groups() {
        let f = Q8Frame::new();
        let q8 = Group::quaternion8();
        for s in [&f.sigma1, &f.sigma2, &f.sigma3] {
            assert!(is_group_automorphism(&q8, s));
        }
        // D8: five involutions and two elements of order 4
        assert_eq!(census(&f.u), BTreeMap::from([(1, 1), (2, 5), (4, 2)]));
        // A4: three involutions and eight 3-cycles
        assert_eq!(census(&f.v), BTreeMap::from([(1, 1), (2, 3), (3, 8)]));
        assert_eq!(census(&f.u0), BTreeMap::from([(1, 1), (2, 3)]));
        for big in [&f.u, &f.v] {
            for x in big.generators() {
                for y in f.u0.generators() {
                    assert!(f.u0.contains(&x.inverse().then(y).then(x)));
                }
            }
        }
    }

    #[test]
    fn l4_sizes_and_shape() {
        for p in [5u64, 13, 17] {
            let part = q8_zp_l4_partition(p).unwrap();
            let n = p as usize;
            let sizes: Vec<usize> = part.sets.iter().map(|(_, s)| s.len()).collect();
            assert_eq!(
                sizes,
                vec![
                    1,
                    1,
                    2,
                    4,
                    n - 1,
                    n - 1,
                    2 * (n - 1),
                    n - 1,
                    n - 1,
                    2 * (n - 1)
                ]
            );
            assert_eq!(part.sring().unwrap().rank(), 10);
        }
        assert!(q8_zp_l4(7).is_err());
    }

    #[test]
    fn l6_sizes_and_shape() {
        for p in [7u64, 13, 19] {
            let part = q8_zp_l6_partition(p).unwrap();
            assert_eq!(part.get("Y2").unwrap().len(), 6);
            assert_eq!(part.sring().unwrap().rank(), 9);
        }
        assert!(q8_zp_l6(5).is_err());
    }

    #[test]
    fn x8_is_x7_times_a2() {
        for (p, l) in [(5u64, 4usize), (13, 4), (7, 6), (13, 6), (19, 6)] {
            let part = if l == 4 {
                q8_zp_l4_partition(p)
            } else {
                q8_zp_l6_partition(p)
            }
            .unwrap();
            let g = part.group.clone();
            let (s7, s8) = if l == 4 { ("X7", "X8") } else { ("Y7", "Y8") };
            let a2 = A2 * p as u32;
            let mut shifted: Vec<u32> = part
                .get(s7)
                .unwrap()
                .iter()
                .map(|&x| g.mul(x, a2))
                .collect();
            shifted.sort_unstable();
            assert_eq!(shifted, part.get(s8).unwrap());
            let mut inv7: Vec<u32> = part.get(s7).unwrap().iter().map(|&x| g.inv(x)).collect();
            inv7.sort_unstable();
            let m = (p as usize - 1) / l;
            let expected = if m.is_multiple_of(2) { s8 } else { s7 };
            assert_eq!(inv7, part.get(expected).unwrap());
        }
    }

    #[test]
    fn k_orbits_fuse_the_last_pair() {
        for (p, l) in [(5u64, 4usize), (13, 4), (7, 6), (13, 6)] {
            let part = if l == 4 {
                q8_zp_l4_partition(p)
            } else {
                q8_zp_l6_partition(p)
            }
            .unwrap();
            let k = k_groups(p, l).unwrap();
            let c = cyclotomic(&k, part.group.clone()).unwrap();
            let fused = if l == 4 {
                part.fused("X7", "X8")
            } else {
                part.fused("Y7", "Y8")
            };
            assert_eq!(c.classes(), normalize(fused).as_slice(), "p = {p}, l = {l}");
        }
    }

    #[test]
    fn k_group_orders() {
        // |K1| = |U0| |W0| * 2 = 4 * 2m * 2, |K2| = 4 * 2m * 3
        for (p, l) in [(13u64, 4usize), (13, 6)] {
            let m = (p - 1) / l as u64;
            let k = k_groups(p, l).unwrap();
            let expected = if l == 4 { 16 * m } else { 24 * m };
            assert_eq!(k.order_u64(), Some(expected));
        }
    }
}
