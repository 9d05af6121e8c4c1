//! Ordered partitions of the points and equitable refinement against a color matrix.
//!
//! Refinement is a deterministic function of the colors and of the ordered
//! partition, so two partitions related by an automorphism refine identically and
//! produce identical traces. Cells are named by their start position.

use std::collections::VecDeque;

use super::color::ColorMatrix;

#[derive(Clone, Debug)]
pub(crate) struct Partition {
    elems: Vec<u32>,
    pos: Vec<u32>,
    /// element -> start of its cell
    cell_of: Vec<u32>,
    /// start -> end (exclusive); only meaningful at cell starts
    cell_end: Vec<u32>,
    cells: usize,
}

const INDIVIDUALIZE: u64 = u64::MAX;

/// Per-color weights for the multiset hash of a color count vector.
fn color_weight(c: u32) -> u64 {
    let mut z = (c as u64).wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Where a refinement run records its trace, or the reference it must reproduce.
pub(crate) enum Trace<'a> {
    Record(&'a mut Vec<u64>),
    Compare { reference: &'a [u64], at: usize },
}

impl Trace<'_> {
    /// Appends or compares one entry. Returns false on the first mismatch.
    #[inline]
    fn push(&mut self, v: u64) -> bool {
        match self {
            Trace::Record(t) => {
                t.push(v);
                true
            }
            Trace::Compare { reference, at } => {
                let ok = reference.get(*at) == Some(&v);
                *at += 1;
                ok
            }
        }
    }

    fn finished(&self) -> bool {
        match self {
            Trace::Record(_) => true,
            Trace::Compare { reference, at } => *at == reference.len(),
        }
    }
}

impl Partition {
    pub(crate) fn unit(n: usize) -> Partition {
        let mut cell_end = vec![0; n.max(1)];
        cell_end[0] = n as u32;
        Partition {
            elems: (0..n as u32).collect(),
            pos: (0..n as u32).collect(),
            cell_of: vec![0; n],
            cell_end,
            cells: usize::from(n > 0),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.elems.len()
    }

    pub(crate) fn is_discrete(&self) -> bool {
        self.cells == self.elems.len()
    }

    pub(crate) fn elements(&self) -> &[u32] {
        &self.elems
    }

    pub(crate) fn cell(&self, start: u32) -> &[u32] {
        &self.elems[start as usize..self.cell_end[start as usize] as usize]
    }

    pub(crate) fn first_nonsingleton(&self) -> Option<u32> {
        let mut s = 0usize;
        while s < self.elems.len() {
            let e = self.cell_end[s] as usize;
            if e - s > 1 {
                return Some(s as u32);
            }
            s = e;
        }
        None
    }

    /// Splits `{v}` off the front of its cell, then refines. Returns false when the
    /// trace disagrees with a reference.
    pub(crate) fn individualize_and_refine(
        &mut self,
        v: u32,
        cm: &ColorMatrix,
        mut trace: Trace<'_>,
    ) -> bool {
        let s = self.cell_of[v as usize];
        let e = self.cell_end[s as usize];
        if !(trace.push(INDIVIDUALIZE) && trace.push(s as u64) && trace.push(e as u64)) {
            return false;
        }
        if e - s > 1 {
            let p = self.pos[v as usize];
            self.swap_positions(s, p);
            self.cell_end[s as usize] = s + 1;
            self.cell_end[s as usize + 1] = e;
            for q in s + 1..e {
                self.cell_of[self.elems[q as usize] as usize] = s + 1;
            }
            self.cells += 1;
        }
        self.refine(cm, VecDeque::from([s]), &mut trace) && trace.finished()
    }

    fn swap_positions(&mut self, a: u32, b: u32) {
        self.elems.swap(a as usize, b as usize);
        self.pos[self.elems[a as usize] as usize] = a;
        self.pos[self.elems[b as usize] as usize] = b;
    }

    /// Refines to the coarsest equitable partition below the current one, using
    /// the cells in `queue` as initial splitters.
    pub(crate) fn refine(
        &mut self,
        cm: &ColorMatrix,
        mut queue: VecDeque<u32>,
        trace: &mut Trace<'_>,
    ) -> bool {
        let n = self.elems.len();
        let weights: Vec<u64> = (0..cm.num_colors() as u32).map(color_weight).collect();
        let mut in_queue = vec![false; n];
        for &s in &queue {
            in_queue[s as usize] = true;
        }
        let mut key = vec![0u64; n];
        let mut scratch: Vec<(u64, u32)> = Vec::new();
        while let Some(sp) = queue.pop_front() {
            if self.is_discrete() {
                break;
            }
            in_queue[sp as usize] = false;
            let splitter: Vec<u32> = self.cell(sp).to_vec();
            // keys only matter inside nonsingleton cells
            let mut s = 0usize;
            while s < n {
                let e = self.cell_end[s] as usize;
                if e - s > 1 {
                    for &v in &self.elems[s..e] {
                        let row = cm.row(v);
                        key[v as usize] = splitter.iter().fold(0u64, |acc, &w| {
                            acc.wrapping_add(weights[row[w as usize] as usize])
                        });
                    }
                }
                s = e;
            }
            let mut s = 0usize;
            while s < n {
                let e = self.cell_end[s] as usize;
                if e - s > 1 {
                    scratch.clear();
                    scratch.extend(self.elems[s..e].iter().map(|&v| (key[v as usize], v)));
                    scratch.sort_unstable();
                    if scratch[0].0 != scratch[scratch.len() - 1].0
                        && !self.split(s, &scratch, &mut queue, &mut in_queue, trace)
                    {
                        return false;
                    }
                }
                s = e;
            }
        }
        true
    }

    /// Splits the cell `[s, e)` by the sorted keys in `sorted`.
    fn split(
        &mut self,
        s: usize,
        sorted: &[(u64, u32)],
        queue: &mut VecDeque<u32>,
        in_queue: &mut [bool],
        trace: &mut Trace<'_>,
    ) -> bool {
        for (i, &(_, v)) in sorted.iter().enumerate() {
            self.elems[s + i] = v;
            self.pos[v as usize] = (s + i) as u32;
        }
        let mut fragments: Vec<(usize, usize)> = Vec::new();
        let mut start = s;
        for i in 1..=sorted.len() {
            if i == sorted.len() || sorted[i].0 != sorted[i - 1].0 {
                fragments.push((start, s + i));
                start = s + i;
            }
        }
        if !(trace.push(s as u64) && trace.push(fragments.len() as u64)) {
            return false;
        }
        for &(a, b) in &fragments {
            if !(trace.push((b - a) as u64) && trace.push(sorted[a - s].0)) {
                return false;
            }
            self.cell_end[a] = b as u32;
            for q in a..b {
                self.cell_of[self.elems[q] as usize] = a as u32;
            }
        }
        self.cells += fragments.len() - 1;
        // all fragments are needed if the old cell was still pending; otherwise
        // the largest one (first on ties) can be skipped
        let skip = if in_queue[s] {
            s
        } else {
            let mut best = fragments[0];
            for &f in &fragments[1..] {
                if f.1 - f.0 > best.1 - best.0 {
                    best = f;
                }
            }
            best.0
        };
        for &(a, _) in &fragments {
            if a != skip && !in_queue[a] {
                in_queue[a] = true;
                queue.push_back(a as u32);
            }
        }
        true
    }
}
