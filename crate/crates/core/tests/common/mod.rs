//! Slow, obviously correct reference computations.
#![allow(dead_code)]

use srl_core::{Group, SRing};

/// Every color-preserving permutation fixing 0, by plain backtracking over point
/// images with pairwise color checks and no refinement. Returns how many there are and
/// the orbits they induce.
pub fn naive_stabilizer(a: &SRing) -> (usize, Vec<Vec<u32>>) {
    let g = a.group();
    let n = g.order();
    let color = |u: u32, v: u32| a.class_of(g.mul(v, g.inv(u)));
    let mut img = vec![u32::MAX; n];
    let mut used = vec![false; n];
    img[0] = 0;
    used[0] = true;
    let mut parent: Vec<u32> = (0..n as u32).collect();
    let mut count = 0;
    fn find(p: &mut [u32], mut x: u32) -> u32 {
        while p[x as usize] != x {
            x = p[x as usize];
        }
        x
    }
    fn go(
        v: usize,
        n: usize,
        img: &mut Vec<u32>,
        used: &mut Vec<bool>,
        color: &dyn Fn(u32, u32) -> u32,
        count: &mut usize,
        parent: &mut Vec<u32>,
    ) {
        if v == n {
            *count += 1;
            for (x, &y) in img.iter().enumerate() {
                let (rx, ry) = (find(parent, x as u32), find(parent, y));
                if rx != ry {
                    parent[rx.max(ry) as usize] = rx.min(ry);
                }
            }
            return;
        }
        for w in 0..n as u32 {
            if used[w as usize] {
                continue;
            }
            let ok = (0..v).all(|u| {
                color(u as u32, v as u32) == color(img[u], w)
                    && color(v as u32, u as u32) == color(w, img[u])
            });
            if ok {
                img[v] = w;
                used[w as usize] = true;
                go(v + 1, n, img, used, color, count, parent);
                used[w as usize] = false;
            }
        }
    }
    go(1, n, &mut img, &mut used, &color, &mut count, &mut parent);
    let mut orbits: Vec<Vec<u32>> = Vec::new();
    let mut root_index = std::collections::BTreeMap::new();
    for x in 0..n as u32 {
        let r = find(&mut parent, x);
        let i = *root_index.entry(r).or_insert_with(|| {
            orbits.push(Vec::new());
            orbits.len() - 1
        });
        orbits[i].push(x);
    }
    (count, orbits)
}

/// Whether `classes` is an S-ring partition, checked straight from the definition.
pub fn is_sring_naive(g: &Group, classes: &[Vec<u32>]) -> bool {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    for (i, c) in classes.iter().enumerate() {
        for &x in c {
            class_of[x as usize] = i;
        }
    }
    if classes.iter().any(|c| c.contains(&0) && c.len() != 1) {
        return false;
    }
    for c in classes {
        let mut inv: Vec<u32> = c.iter().map(|&x| g.inv(x)).collect();
        inv.sort_unstable();
        let target = &classes[class_of[inv[0] as usize]];
        let mut t = target.clone();
        t.sort_unstable();
        if t != inv {
            return false;
        }
    }
    for x in classes {
        for y in classes {
            let mut hits = vec![0u32; n];
            for &a in x {
                for &b in y {
                    hits[g.mul(a, b) as usize] += 1;
                }
            }
            for z in classes {
                if z.iter().any(|&e| hits[e as usize] != hits[z[0] as usize]) {
                    return false;
                }
            }
        }
    }
    true
}

/// All S-rings over `g` by filtering every set partition of `G^#`, normalized and sorted.
pub fn all_srings_naive(g: &Group) -> Vec<Vec<Vec<u32>>> {
    fn partitions(items: &[u32]) -> Vec<Vec<Vec<u32>>> {
        let Some((&first, rest)) = items.split_first() else {
            return vec![Vec::new()];
        };
        let mut out = Vec::new();
        for p in partitions(rest) {
            for i in 0..p.len() {
                let mut q = p.clone();
                q[i].insert(0, first);
                out.push(q);
            }
            let mut q = p.clone();
            q.insert(0, vec![first]);
            out.push(q);
        }
        out
    }
    let rest: Vec<u32> = (1..g.order() as u32).collect();
    let mut found: Vec<Vec<Vec<u32>>> = partitions(&rest)
        .into_iter()
        .map(|mut p| {
            p.push(vec![0]);
            for c in &mut p {
                c.sort_unstable();
            }
            p.sort();
            p
        })
        .filter(|p| is_sring_naive(g, p))
        .collect();
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    found
}

/// The cyclotomic number `(i, j)_l`: the number of `v` in `C_{i+1}` with `1 + v` in
/// `C_{j+1}`, where `C_{k+1} = g^k <g^l>` for the primitive root `g`.
pub fn cyclotomic_number(p: u64, l: u64, g: u64, i: u64, j: u64) -> u64 {
    let mut class = vec![u64::MAX; p as usize];
    let mut x = 1;
    for e in 0..p - 1 {
        class[x as usize] = e % l;
        x = x * g % p;
    }
    (1..p)
        .filter(|&v| {
            class[v as usize] == i && (v + 1) % p != 0 && class[((v + 1) % p) as usize] == j
        })
        .count() as u64
}
