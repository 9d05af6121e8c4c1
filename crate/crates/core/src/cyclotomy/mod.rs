//! Cyclotomic numbers of order 4 and 6 as structure constants of `cyc(M, Z_p)`,
//! and the classical identities they satisfy.

use serde::Serialize;

use crate::arith::exact_sqrt;
use crate::constructions::{cyc_orbit_system, CycOrbitSystem};
use crate::error::{Error, Result};

/// `c_ij^k` for the nontrivial orbits `C_1..C_l` of `M` on `Z_p^#`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycTensor {
    pub l: usize,
    data: Vec<u32>,
}

impl CycTensor {
    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        let l = self.l;
        self.data[((i - 1) * l + (j - 1)) * l + (k - 1)]
    }

    fn c1(&self, i: usize, j: usize) -> i64 {
        self.get(i, j, 1) as i64
    }
}

/// The tensor computed directly in `Z_p`: for `z` the smallest element of `C_k`,
/// count `x` in `C_i` with `z - x` in `C_j`.
pub fn cyc_constants(p: u64, l: usize) -> Result<(CycOrbitSystem, CycTensor)> {
    let cs = cyc_orbit_system(p, l)?;
    let mut data = vec![0u32; l * l * l];
    for k in 1..=l {
        let z = cs.orbit(k)[0] as u64;
        for i in 1..=l {
            for &x in cs.orbit(i) {
                let y = ((z + p - x as u64) % p) as u32;
                let j = cs.index_of(y);
                if j > 0 {
                    data[((i - 1) * l + (j - 1)) * l + (k - 1)] += 1;
                }
            }
        }
    }
    Ok((cs, CycTensor { l, data }))
}

/// `c_{i^f j^f}^{k^f} = c_ij^k` for the shift `f: i -> i mod l + 1`.
pub fn shift_symmetric(cs: &CycOrbitSystem, t: &CycTensor) -> bool {
    let l = t.l;
    triples(l).all(|(i, j, k)| t.get(cs.shift(i), cs.shift(j), cs.shift(k)) == t.get(i, j, k))
}

/// `|Z| c^{Z^-1}_{XY} = |X| c^{X^-1}_{YZ} = |Y| c^{Y^-1}_{ZX}`; all orbits have size `m`.
pub fn triangle_holds(cs: &CycOrbitSystem, t: &CycTensor) -> bool {
    let inv = |i| cs.inverse_index(i);
    triples(t.l).all(|(x, y, z)| {
        let a = t.get(x, y, inv(z));
        a == t.get(y, z, inv(x)) && a == t.get(z, x, inv(y))
    })
}

fn triples(l: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=l).flat_map(move |i| (1..=l).flat_map(move |j| (1..=l).map(move |k| (i, j, k))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclotomicReport {
    pub p: u64,
    pub l: usize,
    pub m: usize,
    pub g: u64,
    pub tensor: CycTensor,
    /// `s` with the sign given by its defining formula.
    pub s: i64,
    pub t: Option<i64>,
    pub u: Option<i64>,
    /// `|r|` from the quadratic form (`m` even).
    pub r_abs: Option<u64>,
    /// The right-hand side of the `m` identity (`m` odd).
    pub m_sum: Option<i64>,
    /// Which of the two linear alternatives held (order 6 only): 1 or 2.
    pub alternative: Option<u8>,
}

impl CyclotomicReport {
    pub fn m_even(&self) -> bool {
        self.m.is_multiple_of(2)
    }
}

fn failed(p: u64, detail: String) -> Error {
    Error::IdentityFailed { p, detail }
}

fn check_common(cs: &CycOrbitSystem, t: &CycTensor) -> Result<()> {
    if !shift_symmetric(cs, t) {
        return Err(failed(cs.p, "shift symmetry of the constants".into()));
    }
    if !triangle_holds(cs, t) {
        return Err(failed(cs.p, "triangle identity of the constants".into()));
    }
    Ok(())
}

fn square_part(value: i64) -> Option<u64> {
    (value >= 0).then(|| exact_sqrt(value as u64)).flatten()
}

/// The order 4 quantities without judging them: `s = c_12^1 - c_14^1`, `|r|` when
/// `p - 4 s^2` is a square, and `c_32^1 + c_34^1 + 2 c_41^1` when `m` is odd.
pub fn report_l4(p: u64) -> Result<CyclotomicReport> {
    if p % 4 != 1 {
        return Err(Error::InvalidArgument(format!("p = {p} is not 1 mod 4")));
    }
    let (cs, t) = cyc_constants(p, 4)?;
    check_common(&cs, &t)?;
    let s = t.c1(1, 2) - t.c1(1, 4);
    let even = cs.m % 2 == 0;
    Ok(CyclotomicReport {
        p,
        l: 4,
        m: cs.m,
        g: cs.g,
        s,
        t: None,
        u: None,
        r_abs: if even {
            square_part(p as i64 - 4 * s * s)
        } else {
            None
        },
        m_sum: (!even).then(|| t.c1(3, 2) + t.c1(3, 4) + 2 * t.c1(4, 1)),
        alternative: None,
        tensor: t,
    })
}

/// Order 4: `p = r^2 + 4 s^2` when `m` is even, `m = c_32^1 + c_34^1 + 2 c_41^1`
/// when `m` is odd. A failure is a hard error.
pub fn verify_l4(p: u64) -> Result<CyclotomicReport> {
    let r = report_l4(p)?;
    if r.m_even() && r.r_abs.is_none() {
        return Err(failed(
            p,
            format!("p - 4 s^2 = {} is not a square", p as i64 - 4 * r.s * r.s),
        ));
    }
    if let Some(sum) = r.m_sum.filter(|&sum| sum != r.m as i64) {
        return Err(failed(p, format!("c32 + c34 + 2 c41 = {sum}, m = {}", r.m)));
    }
    Ok(r)
}

/// The order 6 quantities without judging them.
///
/// For `m` even: `s`, `t`, `u` from the `C_1`, `C_2` rows, `|r|` when `4p - 27 s^2`
/// is a square, and whether `3s = t = 2u` (1) or `3s = -t - 2u` (2). For `m` odd:
/// the sum `c_43^1 + c_45^1 + c_51^1 + c_52^1 + 2 c_56^1`, `s`, `t`, `u` from the
/// `C_4`, `C_5` rows, and whether `3s = -t = 2u` (1) or `3s = t - 2u` (2).
pub fn report_l6(p: u64) -> Result<CyclotomicReport> {
    if p % 6 != 1 {
        return Err(Error::InvalidArgument(format!("p = {p} is not 1 mod 6")));
    }
    let (cs, t) = cyc_constants(p, 6)?;
    check_common(&cs, &t)?;
    let c = |i, j| t.c1(i, j);
    let even = cs.m % 2 == 0;
    let (s, tt, u, alternative, m_sum);
    if even {
        s = c(1, 2) + 2 * c(2, 4) + c(1, 5) - c(1, 3) - 2 * c(2, 5) - c(1, 6);
        tt = c(1, 2) + 2 * c(2, 4) - 3 * c(1, 5) + 3 * c(1, 3) - c(1, 6) - 2 * c(2, 5);
        u = c(1, 2) - c(1, 6) - c(2, 4) + c(2, 5);
        alternative = if 3 * s == tt && tt == 2 * u {
            Some(1)
        } else if 3 * s == -tt - 2 * u {
            Some(2)
        } else {
            None
        };
        m_sum = None;
    } else {
        s = c(4, 2) + 2 * c(5, 1) + c(4, 5) - c(4, 3) - 2 * c(5, 2) - c(4, 6);
        tt = c(4, 5) + 2 * c(5, 1) - 3 * c(4, 2) + 3 * c(4, 6) - c(4, 3) - 2 * c(5, 2);
        u = c(5, 1) - c(5, 2) - c(4, 3) + c(4, 5);
        alternative = if 3 * s == -tt && -tt == 2 * u {
            Some(1)
        } else if 3 * s == tt - 2 * u {
            Some(2)
        } else {
            None
        };
        m_sum = Some(c(4, 3) + c(4, 5) + c(5, 1) + c(5, 2) + 2 * c(5, 6));
    }
    Ok(CyclotomicReport {
        p,
        l: 6,
        m: cs.m,
        g: cs.g,
        s,
        t: Some(tt),
        u: Some(u),
        r_abs: if even {
            square_part(4 * p as i64 - 27 * s * s)
        } else {
            None
        },
        m_sum,
        alternative,
        tensor: t,
    })
}

/// Order 6: every identity of [`report_l6`] must hold. A failure is a hard error.
pub fn verify_l6(p: u64) -> Result<CyclotomicReport> {
    let r = report_l6(p)?;
    if r.m_even() && r.r_abs.is_none() {
        return Err(failed(
            p,
            format!(
                "4p - 27 s^2 = {} is not a square",
                4 * p as i64 - 27 * r.s * r.s
            ),
        ));
    }
    if let Some(sum) = r.m_sum.filter(|&sum| sum != r.m as i64) {
        return Err(failed(
            p,
            format!("c43 + c45 + c51 + c52 + 2 c56 = {sum}, m = {}", r.m),
        ));
    }
    if r.alternative.is_none() {
        return Err(failed(
            p,
            format!(
                "neither linear alternative holds for m = {}: s = {}, t = {}, u = {}",
                r.m,
                r.s,
                r.t.unwrap_or_default(),
                r.u.unwrap_or_default()
            ),
        ));
    }
    Ok(r)
}

/// Whether the directly computed tensor agrees with the structure constants of
/// `cyc(M, Z_p)` computed by the generic S-ring machinery.
pub fn agrees_with_sring(cs: &CycOrbitSystem, t: &CycTensor) -> bool {
    let a = cs.sring();
    let id = |i: usize| a.find_class(cs.orbit(i)).expect("orbits are basic sets");
    triples(t.l).all(|(i, j, k)| a.constants().get(id(i), id(j), id(k)) == t.get(i, j, k))
}
