use super::SRing;
use crate::error::{Error, Result};
use crate::group::gcd;

/// A bijection between the basic sets of two S-rings.
#[derive(Debug, Clone)]
pub struct AlgebraicMap<'a> {
    pub source: &'a SRing,
    pub target: &'a SRing,
    /// `class_map[i]` is the target class id of source class `i`.
    pub class_map: Vec<usize>,
}

/// The map `X -> X^(m) = { x^m : x in X }` on an S-ring over an abelian group.
pub fn power_map(a: &SRing, m: i64) -> Result<AlgebraicMap<'_>> {
    let g = a.group();
    if !g.is_abelian() {
        return Err(Error::InvalidArgument(
            "power maps need an abelian group".into(),
        ));
    }
    let n = g.order() as i64;
    if gcd(m.rem_euclid(n) as usize, n as usize) != 1 {
        return Err(Error::InvalidArgument(format!("{m} is not coprime to {n}")));
    }
    let class_map = a
        .classes()
        .iter()
        .map(|class| {
            let image: Vec<u32> = class.iter().map(|&x| g.pow(x, m)).collect();
            a.find_class(&image).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "the {m}-th power of class {class:?} is not a class"
                ))
            })
        })
        .collect::<Result<Vec<usize>>>()?;
    Ok(AlgebraicMap {
        source: a,
        target: a,
        class_map,
    })
}

/// Whether `c^{Z^f}_{X^f Y^f} = c^Z_{XY}` for every triple. Non-bijective maps are rejected.
pub fn is_algebraic_isomorphism(map: &AlgebraicMap<'_>) -> Result<bool> {
    let r = map.source.rank();
    if map.class_map.len() != r || map.target.rank() != r {
        return Err(Error::InvalidArgument(
            "class map has the wrong length".into(),
        ));
    }
    let mut hit = vec![false; r];
    for &t in &map.class_map {
        if t >= r || std::mem::replace(&mut hit[t], true) {
            return Err(Error::InvalidArgument(
                "class map is not a bijection".into(),
            ));
        }
    }
    let (cs, ct) = (map.source.constants(), map.target.constants());
    let f = &map.class_map;
    Ok((0..r).all(|x| (0..r).all(|y| (0..r).all(|z| ct.get(f[x], f[y], f[z]) == cs.get(x, y, z)))))
}
