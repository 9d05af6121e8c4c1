//! Group specification strings (`C13`, `D8`, `Q8`, `G16`, `Q8xC13`, ...) and the
//! plain-text table dump.

use std::fmt::Write as _;

use super::Group;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Parses an `x`-joined product of `C<n>`, `D<n>`, `Q8` and `G16` factors,
/// associating to the left.
pub fn parse_group_spec(spec: &str, limits: &Limits) -> Result<Group> {
    let bad = |reason: String| Error::BadGroupSpec {
        spec: spec.to_string(),
        reason,
    };
    let mut acc: Option<Group> = None;
    for factor in spec.trim().split('x') {
        let g = match factor {
            "Q8" => Group::quaternion8(),
            "G16" => Group::g16(),
            f if f.len() > 1 && (f.starts_with('C') || f.starts_with('D')) => {
                let n: usize = f[1..]
                    .parse()
                    .map_err(|_| bad(format!("bad order in factor {f:?}")))?;
                if f.starts_with('C') {
                    Group::cyclic(n).map_err(|e| bad(e.to_string()))?
                } else {
                    Group::dihedral(n).map_err(|e| bad(e.to_string()))?
                }
            }
            f => return Err(bad(format!("unknown factor {f:?}"))),
        };
        acc = Some(match acc {
            None => g,
            Some(prev) => Group::direct_product_capped(&prev, &g, limits)?,
        });
    }
    acc.ok_or_else(|| bad("empty spec".into()))
}

/// First line the order, then one row of the multiplication table per line.
pub fn dump_table(g: &Group) -> String {
    let n = g.order();
    let mut out = String::with_capacity(n * n * 3);
    writeln!(out, "{n}").unwrap();
    for row in g.table().chunks(n) {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_products() {
        let l = Limits::default();
        let g = parse_group_spec("Q8xC13", &l).unwrap();
        assert_eq!(g.order(), 104);
        assert_eq!(parse_group_spec("D8xC5", &l).unwrap().order(), 40);
        assert_eq!(parse_group_spec("G16", &l).unwrap().order(), 16);
        assert_eq!(parse_group_spec("C2xC2xC3", &l).unwrap().order(), 12);
        for bad in ["", "Q9", "D7", "Cx", "C0", "Q8x", "Z4"] {
            assert!(parse_group_spec(bad, &l).is_err(), "{bad}");
        }
    }

    #[test]
    fn dump_roundtrips_through_from_table() {
        let g = Group::quaternion8();
        let text = dump_table(&g);
        let mut lines = text.lines();
        let n: usize = lines.next().unwrap().parse().unwrap();
        let mul: Vec<u32> = lines
            .flat_map(|l| l.split_whitespace().map(|t| t.parse::<u32>().unwrap()))
            .collect();
        assert_eq!(Group::from_table("Q8", n, mul).unwrap(), g);
    }
}
