use crate::error::Result;
use crate::group::Group;

use super::AxiomViolation;

/// `c[X][Y][Z]`: the number of ways a fixed element of `Z` factors as `x y` with
/// `x` in `X` and `y` in `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    rank: usize,
    data: Vec<u32>,
}

impl StructureConstants {
    /// Walks every pair `(x, y)` once per class pair, checking that the count of each
    /// product is constant on its class. The first counterexample is returned as a
    /// coherence violation.
    pub(crate) fn compute(
        group: &Group,
        classes: &[Vec<u32>],
        class_of: &[u32],
    ) -> Result<StructureConstants> {
        let n = group.order();
        let rank = classes.len();
        let mut data = vec![0u32; rank * rank * rank];
        let mut count = vec![0u32; n];
        let mut touched_per_class = vec![0usize; rank];
        let mut touched = Vec::with_capacity(n);
        for (xi, xc) in classes.iter().enumerate() {
            for (yi, yc) in classes.iter().enumerate() {
                for &x in xc {
                    for &y in yc {
                        let z = group.mul(x, y) as usize;
                        if count[z] == 0 {
                            touched.push(z as u32);
                            touched_per_class[class_of[z] as usize] += 1;
                        }
                        count[z] += 1;
                    }
                }
                let mut violation = None;
                for &z in &touched {
                    let zi = class_of[z as usize] as usize;
                    let zc = &classes[zi];
                    let rep = zc[0];
                    if touched_per_class[zi] != zc.len() {
                        let missing = *zc.iter().find(|&&w| count[w as usize] == 0).unwrap();
                        violation = Some((z, missing));
                        break;
                    }
                    if count[z as usize] != count[rep as usize] {
                        violation = Some((z, rep));
                        break;
                    }
                    data[(xi * rank + yi) * rank + zi] = count[rep as usize];
                }
                if let Some((z1, z2)) = violation {
                    return Err(AxiomViolation::NotCoherent {
                        x_class: xc.clone(),
                        y_class: yc.clone(),
                        z1,
                        z2,
                        count1: count[z1 as usize],
                        count2: count[z2 as usize],
                    }
                    .into());
                }
                for &z in &touched {
                    count[z as usize] = 0;
                    touched_per_class[class_of[z as usize] as usize] = 0;
                }
                touched.clear();
            }
        }
        debug_assert!(spot_check(group, classes, class_of, rank, &data));
        Ok(StructureConstants { rank, data })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `c^Z_{XY}`.
    #[inline]
    pub fn get(&self, x: usize, y: usize, z: usize) -> u32 {
        self.data[(x * self.rank + y) * self.rank + z]
    }

    /// First triple breaking `|Z| c^{Z'}_{XY} = |X| c^{X'}_{YZ} = |Y| c^{Y'}_{ZX}`,
    /// where `'` is the inverse class.
    pub fn triangle_failure(
        &self,
        sizes: &[usize],
        inverse: impl Fn(usize) -> usize,
    ) -> Option<(usize, usize, usize)> {
        let r = self.rank;
        for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    let a = sizes[z] as u64 * self.get(x, y, inverse(z)) as u64;
                    let b = sizes[x] as u64 * self.get(y, z, inverse(x)) as u64;
                    let c = sizes[y] as u64 * self.get(z, x, inverse(y)) as u64;
                    if a != b || b != c {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// First pair breaking `sum_Z c^Z_{XY} |Z| = |X| |Y|`.
    pub fn row_sum_failure(&self, sizes: &[usize]) -> Option<(usize, usize)> {
        let r = self.rank;
        (0..r)
            .flat_map(|x| (0..r).map(move |y| (x, y)))
            .find(|&(x, y)| {
                let total: u64 = (0..r)
                    .map(|z| self.get(x, y, z) as u64 * sizes[z] as u64)
                    .sum();
                total != (sizes[x] * sizes[y]) as u64
            })
    }
}

/// Recounts every constant at the last element of each class (the table used the first).
fn spot_check(
    group: &Group,
    classes: &[Vec<u32>],
    class_of: &[u32],
    rank: usize,
    data: &[u32],
) -> bool {
    if group.order() > 64 {
        return true;
    }
    for (zi, zc) in classes.iter().enumerate() {
        let z = *zc.last().unwrap();
        let mut counts = vec![0u32; rank * rank];
        for x in group.elements() {
            let y = group.mul(group.inv(x), z);
            counts[class_of[x as usize] as usize * rank + class_of[y as usize] as usize] += 1;
        }
        for xi in 0..rank {
            for yi in 0..rank {
                if counts[xi * rank + yi] != data[(xi * rank + yi) * rank + zi] {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use crate::group::Group;
    use crate::sring::SRing;

    #[test]
    fn singleton_constants() {
        let q8 = Arc::new(Group::quaternion8());
        let a = SRing::full(q8.clone());
        let c = a.constants();
        for g in q8.elements() {
            for h in q8.elements() {
                for z in q8.elements() {
                    let expect = u32::from(q8.mul(g, h) == z);
                    assert_eq!(c.get(g as usize, h as usize, z as usize), expect);
                }
            }
        }
    }

    #[test]
    fn trivial_ring_identities() {
        let g = Arc::new(Group::dihedral(12).unwrap());
        let a = SRing::trivial(g);
        let sizes: Vec<usize> = a.classes().iter().map(|c| c.len()).collect();
        assert_eq!(
            a.constants()
                .triangle_failure(&sizes, |i| a.inverse_class(i)),
            None
        );
        assert_eq!(a.constants().row_sum_failure(&sizes), None);
        // G# G# = (n-1) e + (n-2) G#
        assert_eq!(a.constants().get(1, 1, 0), 11);
        assert_eq!(a.constants().get(1, 1, 1), 10);
    }
}
