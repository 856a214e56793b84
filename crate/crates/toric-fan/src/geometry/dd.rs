//! Incremental double description over exact integer arithmetic.
//!
//! Maintains a generator description (lineality basis + extreme rays) of the
//! solution cone {x : n.x >= 0} while inequalities are added one at a time.
//! Rays are kept primitive; adjacency of rays is decided by the standard
//! combinatorial zero-set criterion.

use num::bigint::BigInt;
use num::{Signed, Zero};

use super::LatticeVector;

/// Generator description of {x in R^ambient : n.x >= 0 for all n in
/// `constraints`}: a basis of the lineality space and the extreme rays of
/// the pointed part.
pub fn double_description(
    ambient: usize,
    constraints: &[LatticeVector],
) -> (Vec<LatticeVector>, Vec<LatticeVector>) {
    let mut lineality: Vec<LatticeVector> =
        (0..ambient).map(|i| LatticeVector::unit(ambient, i)).collect();
    let mut rays: Vec<LatticeVector> = Vec::new();
    let mut processed: Vec<LatticeVector> = Vec::new();

    for a in constraints {
        debug_assert_eq!(a.dim(), ambient);
        if a.is_zero() {
            continue;
        }
        let split = lineality.iter().position(|v| !a.dot(v).is_zero());
        if let Some(zi) = split {
            // The constraint cuts the lineality space: peel one direction off
            // and project everything else into the hyperplane a.x = 0.
            let mut z = lineality.remove(zi);
            if a.dot(&z).is_negative() {
                z = z.neg();
            }
            let za = a.dot(&z);
            for v in lineality.iter_mut() {
                let va = a.dot(v);
                if !va.is_zero() {
                    *v = v.scaled(&za).sub(&z.scaled(&va)).primitive();
                }
            }
            for r in rays.iter_mut() {
                let ra = a.dot(r);
                if !ra.is_zero() {
                    *r = r.scaled(&za).sub(&z.scaled(&ra)).primitive();
                }
            }
            rays.push(z);
        } else {
            let values: Vec<BigInt> = rays.iter().map(|r| a.dot(r)).collect();
            if values.iter().any(|v| v.is_negative()) {
                let zero_sets: Vec<ZeroSet> =
                    rays.iter().map(|r| ZeroSet::of(r, &processed)).collect();
                let plus: Vec<usize> =
                    (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
                let minus: Vec<usize> =
                    (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
                let mut next: Vec<LatticeVector> = (0..rays.len())
                    .filter(|i| !values[*i].is_negative())
                    .map(|i| rays[i].clone())
                    .collect();
                for &p in &plus {
                    for &n in &minus {
                        if adjacent(p, n, &zero_sets) {
                            let w = rays[n]
                                .scaled(&values[p])
                                .sub(&rays[p].scaled(&values[n]))
                                .primitive();
                            next.push(w);
                        }
                    }
                }
                rays = next;
            }
        }
        processed.push(a.clone());
    }
    (lineality, rays)
}

struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn of(ray: &LatticeVector, constraints: &[LatticeVector]) -> ZeroSet {
        let mut bits = vec![0u64; constraints.len().div_ceil(64)];
        for (i, c) in constraints.iter().enumerate() {
            if c.dot(ray).is_zero() {
                bits[i / 64] |= 1 << (i % 64);
            }
        }
        ZeroSet(bits)
    }

    fn meet(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn contains(&self, other: &ZeroSet) -> bool {
        other.0.iter().zip(&self.0).all(|(o, s)| o & !s == 0)
    }
}

/// Rays p and n are adjacent iff no third ray's zero set contains the meet
/// of theirs.
fn adjacent(p: usize, n: usize, zero_sets: &[ZeroSet]) -> bool {
    let common = zero_sets[p].meet(&zero_sets[n]);
    zero_sets
        .iter()
        .enumerate()
        .all(|(i, z)| i == p || i == n || !z.contains(&common))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec2(x: i64, y: i64) -> LatticeVector {
        LatticeVector::from_i64(&[x, y])
    }

    #[test]
    fn quadrant_from_inequalities() {
        let (lin, rays) = double_description(2, &[vec2(1, 0), vec2(0, 1)]);
        assert!(lin.is_empty());
        let mut rays: Vec<_> = rays.into_iter().collect();
        rays.sort();
        assert_eq!(rays, vec![vec2(0, 1), vec2(1, 0)]);
    }

    #[test]
    fn halfplane_keeps_lineality() {
        let (lin, rays) = double_description(2, &[vec2(0, 1)]);
        assert_eq!(lin.len(), 1);
        assert_eq!(rays.len(), 1);
        assert!(vec2(0, 1).dot(&rays[0]) > BigInt::from(0));
    }

    #[test]
    fn contradictory_constraints_leave_origin() {
        let (lin, rays) = double_description(1, &[vec2align(1), vec2align(-1)]);
        assert!(lin.is_empty());
        assert!(rays.is_empty());
    }

    fn vec2align(x: i64) -> LatticeVector {
        LatticeVector::from_i64(&[x])
    }

    #[test]
    fn skew_cone_extreme_rays() {
        // dual of cone((0,1),(2,1)): {y : y2 >= 0, 2 y1 + y2 >= 0}
        let (lin, mut rays) = double_description(2, &[vec2(0, 1), vec2(2, 1)]);
        assert!(lin.is_empty());
        rays.sort();
        assert_eq!(rays, vec![vec2(-1, 2), vec2(1, 0)]);
    }
}
