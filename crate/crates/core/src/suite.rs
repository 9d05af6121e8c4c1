//! The checkable claims about the constructed families, as named pass/fail checks.
//!
//! Each check returns an outcome instead of panicking, so the command line tool can
//! report all of them.

use std::sync::Arc;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::constructions::{
    d8_zp_quotient, d8_zp_sring, k_groups, q8_zp_l4, q8_zp_l4_partition, q8_zp_l6,
    q8_zp_l6_partition, sigma_involution, NamedPartition,
};
use crate::cyclotomy::{verify_l4, verify_l6};
use crate::enumeration::{enumerate_srings, schurity_census, wl_closure};
use crate::error::Result;
use crate::group::Group;
use crate::limits::Limits;
use crate::perm::{find_regular_subgroup, PermGroup};
use crate::schurity::{
    automorphisms, cyclotomic, schurity_report, transitivity_module, translate_property,
};
use crate::sring::{is_algebraic_isomorphism, is_tensor, normalize, power_map, SRing};

/// S-ring counts over the order 8 groups, from an exhaustive check of all set
/// partitions.
pub const GOLDEN_COUNTS: [(&str, usize); 3] = [("D8", 34), ("Q8", 26), ("C8", 10)];

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub secs: f64,
}

pub const CHECK_NAMES: [&str; 8] = [
    "d8zp nonschurian family",
    "d8zp quotient tensor and sigma",
    "q8zp nonschurian families",
    "K1/K2 orbit fusion",
    "cyclotomic identities",
    "Schur census of order 8",
    "property suites",
    "regular subgroup search",
];

/// Runs check `id` (1 to 8).
pub fn run_check(id: u8, limits: &Limits) -> CheckOutcome {
    let started = Instant::now();
    let result = match id {
        1 => d8_family(limits),
        2 => d8_quotient(),
        3 => q8_families(limits),
        4 => fusion(limits),
        5 => cyclotomy_sweep(),
        6 => census(limits),
        7 => properties(limits),
        8 => regular_subgroups(),
        _ => Ok(Err(format!("no check {id}"))),
    };
    let (passed, detail) = match result {
        Ok(Ok(detail)) => (true, detail),
        Ok(Err(detail)) => (false, detail),
        Err(e) => (false, format!("error: {e}")),
    };
    CheckOutcome {
        id,
        name: CHECK_NAMES
            .get(id.wrapping_sub(1) as usize)
            .copied()
            .unwrap_or("unknown"),
        passed,
        detail,
        secs: started.elapsed().as_secs_f64(),
    }
}

pub fn run_all(limits: &Limits) -> Vec<CheckOutcome> {
    (1..=8).map(|id| run_check(id, limits)).collect()
}

/// Inner result: `Ok(Ok(detail))` passed, `Ok(Err(detail))` failed.
type Verdict = Result<std::result::Result<String, String>>;

fn all_pass(lines: Vec<(bool, String)>) -> std::result::Result<String, String> {
    let ok = lines.iter().all(|(b, _)| *b);
    let text = lines
        .into_iter()
        .map(|(_, s)| s)
        .collect::<Vec<_>>()
        .join("; ");
    if ok {
        Ok(text)
    } else {
        Err(text)
    }
}

pub const D8_PRIMES: [u64; 4] = [5, 7, 11, 13];
pub const L4_PRIMES: [u64; 2] = [5, 13];
pub const L6_PRIMES: [u64; 2] = [7, 13];

fn d8_family(limits: &Limits) -> Verdict {
    let mut lines = Vec::new();
    for p in D8_PRIMES {
        let a = d8_zp_sring(p)?;
        let r = schurity_report(&a, &automorphisms(&a, limits)?);
        lines.push((
            !r.schurian && a.rank() == 13 + 3 * (p as usize - 3),
            format!(
                "p={p} rank={} schurian={} |Aut|={}",
                a.rank(),
                r.schurian,
                r.aut_order
            ),
        ));
    }
    Ok(all_pass(lines))
}

fn d8_quotient() -> Verdict {
    let limits = Limits::default();
    let mut lines = Vec::new();
    for p in [5u64, 7] {
        let q = d8_zp_quotient(p)?;
        let tensor = is_tensor(&q.sring, &q.h_image, &q.c_image)?;
        let aut = automorphisms(&q.sring, &limits)?;
        let sigma = sigma_involution(p)?;
        let generated = PermGroup::new(sigma.degree(), vec![sigma.clone()])?;
        let ok = tensor
            && aut.stabilizer.order() == 2u32.into()
            && aut.stabilizer.contains(&sigma)
            && generated.order() == 2u32.into();
        lines.push((
            ok,
            format!(
                "p={p} tensor={tensor} |stabilizer|={} sigma_in_stabilizer={}",
                aut.stabilizer.order(),
                aut.stabilizer.contains(&sigma)
            ),
        ));
    }
    Ok(all_pass(lines))
}

fn q8_rings() -> Result<Vec<(String, SRing)>> {
    let mut out = Vec::new();
    for p in L4_PRIMES {
        out.push((format!("q8zp-l4 p={p}"), q8_zp_l4(p)?));
    }
    for p in L6_PRIMES {
        out.push((format!("q8zp-l6 p={p}"), q8_zp_l6(p)?));
    }
    Ok(out)
}

fn q8_families(limits: &Limits) -> Verdict {
    let mut lines = Vec::new();
    for (label, a) in q8_rings()? {
        let r = schurity_report(&a, &automorphisms(&a, limits)?);
        lines.push((
            !r.schurian,
            format!("{label} rank={} schurian={}", a.rank(), r.schurian),
        ));
    }
    Ok(all_pass(lines))
}

/// Label, partition, the group K, and the partition with the last pair fused.
type FusedCase = (String, NamedPartition, PermGroup, Vec<Vec<u32>>);

fn fused_cases() -> Result<Vec<FusedCase>> {
    let mut out = Vec::new();
    for p in L4_PRIMES {
        let part = q8_zp_l4_partition(p)?;
        let fused = normalize(part.fused("X7", "X8"));
        out.push((format!("K1 p={p}"), part, k_groups(p, 4)?, fused));
    }
    for p in L6_PRIMES {
        let part = q8_zp_l6_partition(p)?;
        let fused = normalize(part.fused("Y7", "Y8"));
        out.push((format!("K2 p={p}"), part, k_groups(p, 6)?, fused));
    }
    Ok(out)
}

fn fusion(limits: &Limits) -> Verdict {
    let mut lines = Vec::new();
    for (label, part, k, fused) in fused_cases()? {
        let orbits_match = normalize(k.orbits()) == fused;
        let c = cyclotomic(&k, part.group.clone())?;
        let r = schurity_report(&c, &automorphisms(&c, limits)?);
        lines.push((
            orbits_match && r.schurian,
            format!(
                "{label} orbits_match={orbits_match} schurian={}",
                r.schurian
            ),
        ));
    }
    Ok(all_pass(lines))
}

fn cyclotomy_sweep() -> Verdict {
    let mut failures = Vec::new();
    let mut checked = 0;
    for p in (5..200u64).filter(|&p| crate::arith::is_prime(p)) {
        if p % 4 == 1 {
            checked += 1;
            if let Err(e) = verify_l4(p) {
                failures.push(format!("l=4 {e}"));
            }
        }
        if p % 6 == 1 {
            checked += 1;
            if let Err(e) = verify_l6(p) {
                failures.push(format!("l=6 {e}"));
            }
        }
    }
    Ok(if failures.is_empty() {
        Ok(format!("{checked} prime/order cases"))
    } else {
        Err(format!(
            "{} of {checked} failed: {}",
            failures.len(),
            failures.join(" | ")
        ))
    })
}

fn order8() -> Vec<Group> {
    vec![
        Group::dihedral(8).expect("order 8"),
        Group::quaternion8(),
        Group::cyclic(8).expect("order 8"),
    ]
}

fn census(limits: &Limits) -> Verdict {
    let mut lines = Vec::new();
    for (g, (label, golden)) in order8().into_iter().zip(GOLDEN_COUNTS) {
        let r = schurity_census(Arc::new(g), limits)?;
        lines.push((
            r.nonschurian == 0 && r.total == golden,
            format!(
                "{label} total={} (golden {golden}) nonschurian={}",
                r.total, r.nonschurian
            ),
        ));
    }
    Ok(all_pass(lines))
}

/// Every S-ring constructed or enumerated by checks 1 to 6.
pub fn corpus(limits: &Limits) -> Result<Vec<(String, SRing)>> {
    let mut out = Vec::new();
    for p in D8_PRIMES {
        out.push((format!("d8zp p={p}"), d8_zp_sring(p)?));
    }
    for p in [5u64, 7] {
        out.push((format!("d8zp quotient p={p}"), d8_zp_quotient(p)?.sring));
    }
    out.extend(q8_rings()?);
    for (label, part, k, _) in fused_cases()? {
        out.push((format!("cyc({label})"), cyclotomic(&k, part.group.clone())?));
    }
    for p in [5u64, 13, 17] {
        out.push((
            format!("cyc(M, Z{p}) l=4"),
            crate::constructions::cyc_orbit_system(p, 4)?.sring(),
        ));
    }
    for g in order8() {
        let label = g.label().to_string();
        for (i, a) in enumerate_srings(Arc::new(g), limits)?
            .into_iter()
            .enumerate()
        {
            out.push((format!("{label} #{i}"), a));
        }
    }
    Ok(out)
}

/// S-rings over an abelian group: all of them up to the enumeration cap, otherwise
/// a deterministic sample of closures.
pub fn abelian_sample(g: Arc<Group>, limits: &Limits, rng: &mut impl Rng) -> Result<Vec<SRing>> {
    if g.order() <= limits.max_enumeration_order {
        return enumerate_srings(g, limits);
    }
    let n = g.order() as u32;
    let mut rings = vec![SRing::trivial(g.clone()), SRing::full(g.clone())];
    for x in 1..n {
        let pair = {
            let mut v = vec![x, g.inv(x)];
            v.sort_unstable();
            v.dedup();
            v
        };
        let rest: Vec<u32> = (1..n).filter(|y| !pair.contains(y)).collect();
        let mut seed = vec![vec![0], pair];
        if !rest.is_empty() {
            seed.push(rest);
        }
        rings.push(wl_closure(g.clone(), &seed)?);
    }
    for _ in 0..8 {
        let blocks = rng.gen_range(2..5);
        let mut seed = vec![vec![0]; 1];
        seed.extend(std::iter::repeat_with(Vec::new).take(blocks));
        for x in 1..n {
            seed[rng.gen_range(1..=blocks)].push(x);
        }
        seed.retain(|c| !c.is_empty());
        rings.push(wl_closure(g.clone(), &seed)?);
    }
    rings.sort_by(|a, b| a.classes().cmp(b.classes()));
    rings.dedup_by(|a, b| a.classes() == b.classes());
    Ok(rings)
}

fn properties(limits: &Limits) -> Verdict {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut problems = Vec::new();
    let rings = corpus(limits)?;
    for (label, a) in &rings {
        let sizes: Vec<usize> = a.classes().iter().map(Vec::len).collect();
        if let Some(t) = a
            .constants()
            .triangle_failure(&sizes, |x| a.inverse_class(x))
        {
            problems.push(format!("{label}: triangle identity fails at {t:?}"));
        }
        let aut = automorphisms(a, limits)?;
        for _ in 0..100 {
            let alpha = aut.full.random_element(&mut rng);
            let x = rng.gen_range(0..a.rank());
            let y = rng.gen_range(0..a.group().order() as u32);
            if !translate_property(a, &alpha, x, y) {
                problems.push(format!(
                    "{label}: (Xy)^alpha != X y^alpha for X #{x}, y = {y}"
                ));
                break;
            }
        }
        let report = schurity_report(a, &aut);
        let refines = report
            .stabilizer_orbits
            .iter()
            .all(|o| o.iter().all(|&z| a.class_of(z) == a.class_of(o[0])));
        if !refines {
            problems.push(format!(
                "{label}: stabilizer orbits do not refine the basic sets"
            ));
        }
        match transitivity_module(&aut.full, a.group().clone()) {
            Ok(v) => {
                let vr = schurity_report(&v, &automorphisms(&v, limits)?);
                if !vr.schurian {
                    problems.push(format!("{label}: V(Aut(A), G) is not schurian"));
                }
                if report.schurian != (v == *a) {
                    problems.push(format!(
                        "{label}: V(Aut(A), G) = A disagrees with the verdict"
                    ));
                }
            }
            Err(e) => problems.push(format!("{label}: V(Aut(A), G) rejected: {e}")),
        }
    }
    let mut power_cases = 0usize;
    for n in 1..=24 {
        for g in Group::abelian_groups(n)? {
            let g = Arc::new(g);
            for a in abelian_sample(g.clone(), limits, &mut rng)? {
                for m in (1..n.max(2) as i64).filter(|&m| crate::group::gcd(m as usize, n) == 1) {
                    power_cases += 1;
                    let ok = power_map(&a, m)
                        .and_then(|f| is_algebraic_isomorphism(&f))
                        .unwrap_or(false);
                    if !ok {
                        problems.push(format!(
                            "{} m={m}: power map is not an algebraic automorphism",
                            g.label()
                        ));
                    }
                }
            }
        }
    }
    let summary = format!("{} rings, {power_cases} power-map cases", rings.len());
    Ok(if problems.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}; {}", problems.join(" | ")))
    })
}

fn regular_subgroups() -> Verdict {
    let q8 = Group::quaternion8();
    let cap = 1 << 16;
    // Sym(8), as the automorphism group of the trivial S-ring
    let trivial = SRing::trivial(Arc::new(Group::dihedral(8).expect("order 8")));
    let sym = automorphisms(&trivial, &Limits::default())?.full;
    let found = find_regular_subgroup(&sym, &q8, cap)?;
    let found_ok = found.as_ref().is_some_and(|e| e.verify(&q8));
    let z8 = Group::cyclic(8).expect("order 8");
    let none = find_regular_subgroup(&PermGroup::right_regular(&z8), &q8, cap)?.is_none();
    Ok(all_pass(vec![
        (
            found_ok && sym.order() == 40320u32.into(),
            format!("Q8 in Sym(8) found={found_ok}"),
        ),
        (none, format!("Q8 in (Z8)_r none={none}")),
    ]))
}
