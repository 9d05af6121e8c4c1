use std::io::Read;
use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};
use srl_core::arith::is_prime;
use srl_core::constructions::{
    d8_zp_partition, d8_zp_quotient, q8_zp_l4_partition, q8_zp_l6_partition,
};
use srl_core::cyclotomy::{report_l4, report_l6, verify_l4, verify_l6, CyclotomicReport};
use srl_core::enumeration::schurity_census;
use srl_core::group::{dump_table, parse_group_spec};
use srl_core::schurity::{automorphisms, schurity_report};
use srl_core::sring::{format_partition, parse_partition};
use srl_core::suite::run_check;
use srl_core::{Error, Limits, Permutation, SRing};

use crate::report::Report;
use crate::{CliError, Expect, Family, RingArgs};

type Outcome = Result<Report, CliError>;

pub fn group(spec: &str, limits: &Limits) -> Outcome {
    let g = parse_group_spec(spec, limits)?;
    let mut r = Report::new();
    r.body = dump_table(&g);
    r.extra.insert("label".into(), json!(g.label()));
    r.extra.insert("order".into(), json!(g.order()));
    r.extra.insert(
        "table".into(),
        json!(g.table().chunks(g.order()).collect::<Vec<_>>()),
    );
    Ok(r)
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::D8Zp => "d8zp",
        Family::D8ZpQuotient => "d8zp-quotient",
        Family::Q8ZpL4 => "q8zp-l4",
        Family::Q8ZpL6 => "q8zp-l6",
    }
}

/// The ring plus class names where the family has them.
fn build_family(f: Family, p: u64) -> Result<(SRing, Vec<String>), Error> {
    let named = match f {
        Family::D8Zp => d8_zp_partition(p)?,
        Family::Q8ZpL4 => q8_zp_l4_partition(p)?,
        Family::Q8ZpL6 => q8_zp_l6_partition(p)?,
        Family::D8ZpQuotient => return Ok((d8_zp_quotient(p)?.sring, Vec::new())),
    };
    let names = named.sets.iter().map(|(n, _)| n.clone()).collect();
    Ok((named.sring()?, names))
}

pub fn construct(f: Family, p: u64, output: Option<&Path>) -> Outcome {
    let (a, names) = build_family(f, p)?;
    let text = format!(
        "# {} p={p} group={} rank={}\n{}",
        family_name(f),
        a.group().label(),
        a.rank(),
        format_partition(a.classes())
    );
    let mut r = Report::new();
    r.extra.insert("family".into(), json!(family_name(f)));
    r.extra.insert("p".into(), json!(p));
    r.extra.insert("group".into(), json!(a.group().label()));
    r.extra.insert("rank".into(), json!(a.rank()));
    r.extra.insert("classes".into(), json!(a.classes()));
    if !names.is_empty() {
        r.extra.insert("names".into(), json!(names));
    }
    match output {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            r.record()
                .kv("family", family_name(f))
                .kv("p", p)
                .kv("rank", a.rank())
                .kv("written", path.display().to_string());
        }
        None => r.body = text,
    }
    Ok(r)
}

fn read_partition(path: Option<&Path>) -> Result<Vec<Vec<u32>>, CliError> {
    let text = match path {
        None => read_stdin()?,
        Some(p) if p.as_os_str() == "-" => read_stdin()?,
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))?,
    };
    Ok(parse_partition(&text)?)
}

fn read_stdin() -> Result<String, CliError> {
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
    Ok(s)
}

pub fn verify(spec: &str, partition: Option<&Path>, limits: &Limits) -> Outcome {
    let g = Arc::new(parse_group_spec(spec, limits)?);
    let classes = read_partition(partition)?;
    let mut r = Report::new();
    match SRing::from_partition(g.clone(), classes) {
        Ok(a) => {
            r.record()
                .kv("valid", true)
                .kv("group", g.label())
                .kv("rank", a.rank());
        }
        Err(e @ (Error::Axiom(_) | Error::NotAPartition(_))) => {
            r.record()
                .kv("valid", false)
                .kv("group", g.label())
                .kv("reason", e.to_string());
            r.fail_if(true);
        }
        Err(e) => return Err(e.into()),
    }
    Ok(r)
}

fn load_ring(args: &RingArgs, limits: &Limits) -> Result<SRing, CliError> {
    if let Some(f) = args.family {
        let p = args.p.expect("clap requires --p with --family");
        let (a, _) = build_family(f, p)?;
        if let Some(spec) = &args.group {
            let g = parse_group_spec(spec, limits)?;
            if g.label() != a.group().label() {
                return Err(CliError::Usage(format!(
                    "{} p={p} lives over {}, not {}",
                    family_name(f),
                    a.group().label(),
                    g.label()
                )));
            }
        }
        return Ok(a);
    }
    let spec = args.group.as_deref().ok_or_else(|| {
        CliError::Usage("give --family and --p, or --group with a partition".into())
    })?;
    let g = Arc::new(parse_group_spec(spec, limits)?);
    Ok(SRing::from_partition(
        g,
        read_partition(args.partition.as_deref())?,
    )?)
}

pub fn constants(args: &RingArgs, limits: &Limits) -> Outcome {
    let a = load_ring(args, limits)?;
    let c = a.constants();
    let rank = a.rank();
    let mut r = Report::new();
    r.record().kv("group", a.group().label()).kv("rank", rank);
    for x in 0..rank {
        for y in 0..rank {
            for z in 0..rank {
                let v = c.get(x, y, z);
                if v != 0 {
                    r.record().kv("x", x).kv("y", y).kv("z", z).kv("c", v);
                }
            }
        }
    }
    r.extra.insert("classes".into(), json!(a.classes()));
    Ok(r)
}

fn cycles(p: &Permutation) -> String {
    let cs: Vec<Vec<u32>> = p.cycles().into_iter().filter(|c| c.len() > 1).collect();
    if cs.is_empty() {
        return "()".into();
    }
    cs.iter()
        .map(|c| {
            format!(
                "({})",
                c.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
            )
        })
        .collect()
}

pub fn autgroup(args: &RingArgs, limits: &Limits) -> Outcome {
    let a = load_ring(args, limits)?;
    let aut = automorphisms(&a, limits)?;
    let mut r = Report::new();
    r.record()
        .kv("group", a.group().label())
        .kv("degree", a.group().order())
        .kv("aut_order", aut.full.order().to_string())
        .kv("stabilizer_order", aut.stabilizer.order().to_string())
        .kv("stabilizer_base", json!(aut.stabilizer.base()));
    for g in aut.stabilizer.generators() {
        r.record().kv("stabilizer_generator", cycles(g));
    }
    Ok(r)
}

pub fn schurity(args: &RingArgs, expect: Option<Expect>, limits: &Limits) -> Outcome {
    let a = load_ring(args, limits)?;
    let report = schurity_report(&a, &automorphisms(&a, limits)?);
    let mut r = Report::new();
    let rec = r
        .record()
        .kv("group", a.group().label())
        .kv("schurian", report.schurian)
        .kv("rank", report.rank)
        .kv("aut_order", report.aut_order.to_string())
        .kv("stabilizer_order", report.stabilizer_order.to_string())
        .kv("stabilizer_orbits", report.stabilizer_orbits.len());
    if let Some(w) = &report.split {
        rec.kv("split_class", json!(w.class))
            .kv("split_orbits", json!(w.orbits));
    }
    r.extra
        .insert("stabilizer_orbits".into(), json!(report.stabilizer_orbits));
    let wanted = expect.map(|e| e == Expect::Schurian);
    r.fail_if(wanted.is_some_and(|w| w != report.schurian));
    Ok(r)
}

pub fn census(spec: &str, expect_schur: bool, limits: &Limits) -> Outcome {
    let g = Arc::new(parse_group_spec(spec, limits)?);
    let c = schurity_census(g, limits)?;
    let mut r = Report::new();
    r.record()
        .kv("group", c.group.clone())
        .kv("order", c.order)
        .kv("total", c.total)
        .kv("schurian", c.schurian)
        .kv("nonschurian", c.nonschurian);
    for (rank, count) in &c.rank_histogram {
        r.record().kv("rank", *rank).kv("count", *count);
    }
    for classes in &c.nonschurian_rings {
        r.record().kv("nonschurian_ring", json!(classes));
    }
    r.fail_if(expect_schur && !c.is_schur());
    Ok(r)
}

fn cyclotomic_fields(rep: &CyclotomicReport) -> Vec<(&'static str, Value)> {
    vec![
        ("m", json!(rep.m)),
        ("g", json!(rep.g)),
        ("s", json!(rep.s)),
        ("t", json!(rep.t)),
        ("u", json!(rep.u)),
        ("r_abs", json!(rep.r_abs)),
        ("m_sum", json!(rep.m_sum)),
        ("alternative", json!(rep.alternative)),
    ]
}

pub fn cyclotomy(l: usize, pmax: u64) -> Outcome {
    let mut r = Report::new();
    let mut failures = 0;
    for p in (5..=pmax).filter(|&p| p % l as u64 == 1 && is_prime(p)) {
        let (rep, verdict) = if l == 4 {
            (report_l4(p)?, verify_l4(p))
        } else {
            (report_l6(p)?, verify_l6(p))
        };
        let mut rec = r.record().kv("p", p).kv("l", l);
        for (k, v) in cyclotomic_fields(&rep) {
            rec = rec.kv(k, v);
        }
        match verdict {
            Ok(_) => {
                rec.kv("ok", true);
            }
            Err(Error::IdentityFailed { detail, .. }) => {
                failures += 1;
                rec.kv("ok", false).kv("failure", detail);
            }
            Err(e) => return Err(e.into()),
        }
    }
    r.fail_if(failures > 0);
    Ok(r)
}

pub fn paper_suite(only: Option<u8>, timings: bool, limits: &Limits) -> Outcome {
    let ids: Vec<u8> = only.map_or_else(|| (1..=8).collect(), |id| vec![id]);
    let mut r = Report::new();
    let mut failed = 0;
    for id in ids {
        let o = run_check(id, limits);
        failed += usize::from(!o.passed);
        let mut rec = r
            .record()
            .kv("check", o.id)
            .kv("name", o.name)
            .kv("passed", o.passed);
        if timings {
            rec = rec.kv("secs", (o.secs * 1000.0).round() / 1000.0);
        }
        rec.kv("detail", o.detail);
    }
    r.extra.insert("failed".into(), json!(failed));
    r.fail_if(failed > 0);
    Ok(r)
}
