use crate::perm::Permutation;
use crate::sring::SRing;

/// The colored complete digraph of an S-ring: the arc `(u, v)` gets the class of `v u^-1`,
/// so each color class is the relation `r(X) = {(g, xg)}`.
#[derive(Clone, Debug)]
pub struct ColorMatrix {
    n: usize,
    ncolors: usize,
    colors: Vec<u32>,
}

impl ColorMatrix {
    pub fn of(a: &SRing) -> ColorMatrix {
        let g = a.group();
        let n = g.order();
        let mut colors = Vec::with_capacity(n * n);
        for u in g.elements() {
            let u_inv = g.inv(u);
            for v in g.elements() {
                colors.push(a.class_of(g.mul(v, u_inv)));
            }
        }
        ColorMatrix {
            n,
            ncolors: a.rank(),
            colors,
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn num_colors(&self) -> usize {
        self.ncolors
    }

    #[inline]
    pub fn color(&self, u: u32, v: u32) -> u32 {
        self.colors[u as usize * self.n + v as usize]
    }

    #[inline]
    pub(crate) fn row(&self, u: u32) -> &[u32] {
        &self.colors[u as usize * self.n..(u as usize + 1) * self.n]
    }

    /// Whether `p` preserves every color.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        if p.degree() != self.n {
            return false;
        }
        let img = p.images();
        (0..self.n as u32).all(|u| {
            let src = self.row(u);
            let dst = self.row(img[u as usize]);
            src.iter()
                .enumerate()
                .all(|(v, &c)| dst[img[v] as usize] == c)
        })
    }
}
