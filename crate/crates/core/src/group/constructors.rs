use super::Group;
use crate::error::{Error, Result};
use crate::limits::Limits;

impl Group {
    /// The cyclic group `Z_n`, element `i` standing for `i mod n`.
    pub fn cyclic(n: usize) -> Result<Group> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "cyclic group order must be positive".into(),
            ));
        }
        let mul = (0..n)
            .flat_map(|i| (0..n).map(move |j| ((i + j) % n) as u32))
            .collect();
        Ok(Group::from_table_unchecked(format!("C{n}"), n, mul))
    }

    /// The dihedral group of order `n` (`n` even, `n >= 4`).
    ///
    /// Element `i + (n/2) j` is `a^i b^j` with `a` the rotation (index 1) and `b`
    /// the reflection (index `n/2`), so `b a b = a^-1`.
    pub fn dihedral(n: usize) -> Result<Group> {
        if n < 4 || !n.is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!(
                "dihedral group order must be even and at least 4, got {n}"
            )));
        }
        let half = n / 2;
        let mul = rotation_reflection_table(half, |_, _| 0);
        Ok(Group::from_table_unchecked(format!("D{n}"), n, mul))
    }

    /// The quaternion group `<a, b | a^4 = e, a^2 = b^2, a^b = a^-1>`.
    ///
    /// Element `i + 4 j` is `a^i b^j`: a = 1, a^2 = 2, a^3 = 3, b = 4, ab = 5,
    /// a^2 b = 6, a^3 b = 7.
    pub fn quaternion8() -> Group {
        // b^2 = a^2 contributes a rotation of 2 when both factors carry b
        let mul = rotation_reflection_table(4, |j, l| if j == 1 && l == 1 { 2 } else { 0 });
        Group::from_table_unchecked("Q8".into(), 8, mul)
    }

    /// The central product `D8 o Z4`, built as `(D8 x Z4) / <(a^2, z^2)>`.
    pub fn g16() -> Group {
        let d8 = Group::dihedral(8).expect("valid order");
        let z4 = Group::cyclic(4).expect("valid order");
        let product = Group::direct_product(&d8, &z4).expect("order 32 is under the cap");
        // (a^2, z^2) sits at index 2 * 4 + 2
        let amalgam = product.subgroup_generated(&[10]);
        let mut g = product
            .quotient(&amalgam)
            .expect("the amalgamated subgroup is central")
            .quotient;
        g.set_label("G16");
        g
    }

    /// `g1 x g2` with `(i, j) -> i * |g2| + j`, under the default product cap.
    pub fn direct_product(g1: &Group, g2: &Group) -> Result<Group> {
        Group::direct_product_capped(g1, g2, &Limits::default())
    }

    pub fn direct_product_capped(g1: &Group, g2: &Group, limits: &Limits) -> Result<Group> {
        let (n1, n2) = (g1.order(), g2.order());
        let n = n1 * n2;
        if n > limits.max_product_order {
            return Err(Error::CapExceeded {
                what: "direct product order",
                limit: limits.max_product_order as u64,
                actual: n as u64,
            });
        }
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            let (x1, x2) = ((x / n2) as u32, (x % n2) as u32);
            for y in 0..n {
                let (y1, y2) = ((y / n2) as u32, (y % n2) as u32);
                mul.push(g1.mul(x1, y1) * n2 as u32 + g2.mul(x2, y2));
            }
        }
        let label = format!("{}x{}", g1.label(), g2.label());
        Ok(Group::from_table_unchecked(label, n, mul))
    }

    /// Index of `(x1, x2)` in a direct product whose second factor has order `n2`.
    pub fn pair_index(x1: u32, x2: u32, n2: usize) -> u32 {
        x1 * n2 as u32 + x2
    }

    /// One representative of every abelian group of order `n`, as products of cyclic
    /// groups of prime power order, largest factors first.
    pub fn abelian_groups(n: usize) -> Result<Vec<Group>> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "group order must be positive".into(),
            ));
        }
        let mut per_prime: Vec<Vec<Vec<usize>>> = Vec::new();
        let mut rest = n;
        let mut p = 2;
        while rest > 1 {
            let mut k = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                k += 1;
            }
            if k > 0 {
                let choices = integer_partitions(k)
                    .into_iter()
                    .map(|parts| parts.into_iter().map(|e| p.pow(e as u32)).collect())
                    .collect();
                per_prime.push(choices);
            }
            p += 1;
        }
        let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
        for choices in &per_prime {
            combos = combos
                .iter()
                .flat_map(|c| {
                    choices
                        .iter()
                        .map(move |ch: &Vec<usize>| [c.clone(), ch.clone()].concat())
                })
                .collect();
        }
        combos
            .into_iter()
            .map(|factors| {
                let mut g = Group::cyclic(1)?;
                for (i, &f) in factors.iter().enumerate() {
                    let c = Group::cyclic(f)?;
                    g = if i == 0 {
                        c
                    } else {
                        Group::direct_product(&g, &c)?
                    };
                }
                Ok(g)
            })
            .collect()
    }
}

/// Partitions of `k` into positive parts, parts in decreasing order.
fn integer_partitions(k: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=k.min(max)).rev() {
            prefix.push(part);
            go(k - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// Table of a group of elements `a^i b^j` (`0 <= i < half`, `j` in {0,1}) with
/// `b a b^-1 = a^-1` and `b^j b^l = a^{extra(j, l)} b^{(j + l) mod 2}`.
fn rotation_reflection_table(half: usize, extra: impl Fn(usize, usize) -> usize) -> Vec<u32> {
    let n = 2 * half;
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (i, j) = (x % half, x / half);
        for y in 0..n {
            let (k, l) = (y % half, y / half);
            // a^i b^j a^k b^l = a^{i + (-1)^j k} b^j b^l
            let twisted = if j == 0 { k } else { (half - k) % half };
            let rot = (i + twisted + extra(j, l)) % half;
            mul.push((rot + half * ((j + l) % 2)) as u32);
        }
    }
    mul
}
