//! Fixed inputs for the benchmarks in `benches/`.

use std::sync::Arc;

use srl_core::constructions::{d8_zp_sring, q8_zp_l4, q8_zp_l6};
use srl_core::{Group, SRing};

/// The constructed nonschurian rings, labelled.
pub fn constructions() -> Vec<(String, SRing)> {
    let mut out = Vec::new();
    for p in [5, 7, 13] {
        out.push((
            format!("d8zp/{p}"),
            d8_zp_sring(p).expect("admissible prime"),
        ));
    }
    out.push(("q8zp-l4/5".into(), q8_zp_l4(5).expect("admissible prime")));
    out.push(("q8zp-l4/13".into(), q8_zp_l4(13).expect("admissible prime")));
    out.push(("q8zp-l6/7".into(), q8_zp_l6(7).expect("admissible prime")));
    out.push(("q8zp-l6/13".into(), q8_zp_l6(13).expect("admissible prime")));
    out
}

pub fn order_eight() -> Vec<Arc<Group>> {
    vec![
        Arc::new(Group::dihedral(8).expect("order 8")),
        Arc::new(Group::quaternion8()),
        Arc::new(Group::cyclic(8).expect("order 8")),
    ]
}
