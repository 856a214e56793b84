//! Shared fan fixtures, corpus generators and independent oracles for the
//! integration and acceptance suites.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num::bigint::BigInt;
use toric_fan::fan::Fan;
use toric_fan::field::Field;
use toric_fan::geometry::{Cone, LatticeVector};
use toric_fan::linalg::IntMatrix;

pub fn lv(coords: &[i64]) -> LatticeVector {
    LatticeVector::from_i64(coords)
}

pub fn fan_from(ambient: usize, maximal: &[&[&[i64]]]) -> Fan {
    let cones: Vec<Cone> = maximal
        .iter()
        .map(|rays| {
            let gens: Vec<LatticeVector> = rays.iter().map(|r| lv(r)).collect();
            Cone::from_generators(ambient, &gens).unwrap()
        })
        .collect();
    Fan::build(ambient, cones).unwrap()
}

/// The shellable-but-not-clean wedge: cn((0,1),(2,1)) and cn((0,1),(-2,1)).
pub fn wedge_fan() -> Fan {
    fan_from(2, &[&[&[0, 1], &[2, 1]], &[&[0, 1], &[-2, 1]]])
}

pub fn single_ray_fan() -> Fan {
    fan_from(1, &[&[&[1]]])
}

pub fn half_plane_fan() -> Fan {
    fan_from(2, &[&[&[1, 0], &[0, 1]], &[&[0, 1], &[-1, 0]]])
}

/// Boundary fan of the cone over the square with vertices (±1, ±1, 1).
pub fn square_rim_fan() -> Fan {
    fan_from(
        3,
        &[
            &[&[1, 1, 1], &[-1, 1, 1]],
            &[&[-1, 1, 1], &[-1, -1, 1]],
            &[&[-1, -1, 1], &[1, -1, 1]],
            &[&[1, -1, 1], &[1, 1, 1]],
        ],
    )
}

pub fn path_fan() -> Fan {
    fan_from(3, &[&[&[1, 0, 0], &[0, 1, 0]], &[&[0, 1, 0], &[0, 0, 1]]])
}

pub fn single_quadrant_fan() -> Fan {
    fan_from(2, &[&[&[1, 0], &[0, 1]]])
}

pub fn pinched_plane_fan() -> Fan {
    fan_from(2, &[&[&[1, 0], &[0, 1]], &[&[-1, 0], &[0, -1]]])
}

/// The complete fan of all eight octants.
pub fn octant_fan() -> Fan {
    let mut cones = Vec::new();
    for sx in [1i64, -1] {
        for sy in [1i64, -1] {
            for sz in [1i64, -1] {
                cones.push(
                    Cone::from_generators(
                        3,
                        &[lv(&[sx, 0, 0]), lv(&[0, sy, 0]), lv(&[0, 0, sz])],
                    )
                    .unwrap(),
                );
            }
        }
    }
    Fan::build(3, cones).unwrap()
}

/// The 6-vertex triangulation of the real projective plane.
pub fn projective_plane_facets() -> Vec<Vec<u32>> {
    vec![
        vec![0, 1, 4],
        vec![0, 1, 5],
        vec![0, 2, 3],
        vec![0, 2, 5],
        vec![0, 3, 4],
        vec![1, 2, 3],
        vec![1, 2, 4],
        vec![1, 3, 5],
        vec![2, 4, 5],
        vec![3, 4, 5],
    ]
}

/// A simplicial complex embedded as the fan of coordinate cones.
pub fn coordinate_fan(vertices: usize, facets: &[Vec<u32>]) -> Fan {
    let cones: Vec<Cone> = facets
        .iter()
        .map(|f| {
            let gens: Vec<LatticeVector> = f
                .iter()
                .map(|&v| LatticeVector::unit(vertices, v as usize))
                .collect();
            Cone::from_generators(vertices, &gens).unwrap()
        })
        .collect();
    Fan::build(vertices, cones).unwrap()
}

pub fn projective_plane_fan() -> Fan {
    coordinate_fan(6, &projective_plane_facets())
}

/// All named fans that are Cohen-Macaulay over Q: the corpus for the
/// duality-slice and cross-check suites.
pub fn cm_corpus() -> Vec<(&'static str, Fan)> {
    vec![
        ("single-ray", single_ray_fan()),
        ("wedge", wedge_fan()),
        ("half-plane", half_plane_fan()),
        ("square-rim", square_rim_fan()),
        ("path", path_fan()),
        ("quadrant", single_quadrant_fan()),
        ("octants", octant_fan()),
        ("projective-plane", projective_plane_fan()),
    ]
}

/// Every named fan, Cohen-Macaulay or not.
pub fn full_corpus() -> Vec<(&'static str, Fan)> {
    let mut fans = cm_corpus();
    fans.push(("pinched-plane", pinched_plane_fan()));
    fans.push(("two-rays", fan_from(1, &[&[&[1]], &[&[-1]]])));
    fans
}

// ---------------------------------------------------------------------
// Corpus generators for the implication suite
// ---------------------------------------------------------------------

/// All valid fans assembled from at most `max_cones` candidate cones over
/// the palette, using at most `max_rays` distinct rays.
fn fans_over_palette(
    ambient: usize,
    palette: &[LatticeVector],
    max_arity: usize,
    max_cones: usize,
    max_rays: usize,
) -> Vec<Fan> {
    let mut pool: Vec<Vec<usize>> = Vec::new();
    let n = palette.len();
    for arity in 1..=max_arity {
        let mut choose = vec![0usize; arity];
        gen_combinations(n, arity, 0, &mut choose, 0, &mut |c| {
            let gens: Vec<LatticeVector> = c.iter().map(|&i| palette[i].clone()).collect();
            if Cone::from_generators(ambient, &gens).is_ok() {
                pool.push(c.to_vec());
            }
        });
    }
    let mut fans = Vec::new();
    let mut seen: BTreeSet<Vec<Vec<BigInt>>> = BTreeSet::new();
    for family_size in 1..=max_cones {
        let mut choose = vec![0usize; family_size];
        gen_combinations(pool.len(), family_size, 0, &mut choose, 0, &mut |family| {
            let rays: BTreeSet<usize> = family.iter().flat_map(|&c| pool[c].clone()).collect();
            if rays.len() > max_rays {
                return;
            }
            let cones: Vec<Cone> = family
                .iter()
                .map(|&c| {
                    let gens: Vec<LatticeVector> =
                        pool[c].iter().map(|&i| palette[i].clone()).collect();
                    Cone::from_generators(ambient, &gens).unwrap()
                })
                .collect();
            if let Ok(fan) = Fan::build(ambient, cones) {
                let key: Vec<Vec<BigInt>> = fan
                    .facet_ids()
                    .iter()
                    .flat_map(|&f| {
                        fan.cone(f)
                            .generators()
                            .iter()
                            .map(|g| g.coords().to_vec())
                    })
                    .collect();
                if seen.insert(key) {
                    fans.push(fan);
                }
            }
        });
    }
    fans
}

fn gen_combinations(
    n: usize,
    k: usize,
    from: usize,
    buffer: &mut [usize],
    depth: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    if depth == k {
        visit(buffer);
        return;
    }
    for i in from..n {
        buffer[depth] = i;
        gen_combinations(n, k, i + 1, buffer, depth + 1, visit);
    }
}

/// All valid fans on at most 4 rays from a fixed palette in the plane.
pub fn generated_r2_fans() -> Vec<Fan> {
    let palette: Vec<LatticeVector> = [
        [1, 0],
        [0, 1],
        [-1, 0],
        [0, -1],
        [2, 1],
        [-2, 1],
    ]
    .iter()
    .map(|c| lv(c))
    .collect();
    fans_over_palette(2, &palette, 2, 3, 4)
}

/// All valid fans on at most 4 rays from a fixed palette in 3-space.
pub fn generated_r3_fans() -> Vec<Fan> {
    let palette: Vec<LatticeVector> = [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [-1, 0, 0],
        [0, -1, 0],
    ]
    .iter()
    .map(|c| lv(c))
    .collect();
    fans_over_palette(3, &palette, 3, 3, 4)
}

/// All simplicial complexes on up to 5 vertices with at most three facets
/// of dimension <= 2, embedded as coordinate fans; returns the facet
/// families alongside the fans.
pub fn generated_simplicial_fans() -> Vec<(Vec<Vec<u32>>, Fan)> {
    let subsets = nonempty_subsets(5, 3);
    let mut out = Vec::new();
    for size in 1..=3usize {
        let mut choose = vec![0usize; size];
        gen_combinations(subsets.len(), size, 0, &mut choose, 0, &mut |family| {
            let facets: Vec<Vec<u32>> = family.iter().map(|&i| subsets[i].clone()).collect();
            if !is_antichain(&facets) {
                return;
            }
            let fan = coordinate_fan(5, &facets);
            out.push((facets, fan));
        });
    }
    out
}

/// All simplicial complexes on up to `vertices` vertices given by antichain
/// facet families of size <= max_facets (any facet arity).
pub fn all_complexes(vertices: u32, max_facets: usize) -> Vec<Vec<Vec<u32>>> {
    let subsets = nonempty_subsets(vertices, vertices as usize);
    let mut out = Vec::new();
    for size in 1..=max_facets {
        let mut choose = vec![0usize; size];
        gen_combinations(subsets.len(), size, 0, &mut choose, 0, &mut |family| {
            let facets: Vec<Vec<u32>> = family.iter().map(|&i| subsets[i].clone()).collect();
            if is_antichain(&facets) {
                out.push(facets);
            }
        });
    }
    out
}

fn nonempty_subsets(vertices: u32, max_size: usize) -> Vec<Vec<u32>> {
    let mut subsets = Vec::new();
    for mask in 1u32..(1 << vertices) {
        let s: Vec<u32> = (0..vertices).filter(|&v| mask & (1 << v) != 0).collect();
        if s.len() <= max_size {
            subsets.push(s);
        }
    }
    subsets
}

fn is_antichain(facets: &[Vec<u32>]) -> bool {
    for (i, a) in facets.iter().enumerate() {
        for (j, b) in facets.iter().enumerate() {
            if i != j && a.iter().all(|v| b.contains(v)) {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------
// Independent oracles
// ---------------------------------------------------------------------

/// Downward closure of a facet family.
fn closure(facets: &[Vec<u32>]) -> Vec<BTreeSet<u32>> {
    let mut all: BTreeSet<BTreeSet<u32>> = BTreeSet::new();
    all.insert(BTreeSet::new());
    let mut stack: Vec<BTreeSet<u32>> =
        facets.iter().map(|f| f.iter().copied().collect()).collect();
    while let Some(face) = stack.pop() {
        if all.insert(face.clone()) {
            for &v in &face {
                let mut sub = face.clone();
                sub.remove(&v);
                stack.push(sub);
            }
        }
    }
    all.into_iter().collect()
}

/// Reduced homology dimensions of a simplicial complex, computed from
/// scratch with its own boundary matrices (independent of the library's
/// order-complex path). Index 0 of the result is degree -1.
pub fn brute_force_reduced_homology(facets: &[Vec<u32>], field: Field) -> Vec<usize> {
    let faces = closure(facets);
    let dim = faces.iter().map(|f| f.len()).max().unwrap_or(0) as i64 - 1;
    let mut by_dim: Vec<Vec<Vec<u32>>> = vec![Vec::new(); (dim + 2).max(1) as usize];
    for f in &faces {
        let k = f.len(); // k = dim + 1, slot 0 holds the empty face
        by_dim[k].push(f.iter().copied().collect());
    }
    for slot in &mut by_dim {
        slot.sort();
    }
    // boundary matrix from (k)-slot to (k-1)-slot, supporting the reduced
    // complex with the empty face in slot 0
    let boundary = |k: usize| -> IntMatrix {
        let rows = by_dim[k - 1].len();
        let cols = by_dim[k].len();
        let mut m = IntMatrix::zero(rows, cols);
        for (c, face) in by_dim[k].iter().enumerate() {
            for (j, _) in face.iter().enumerate() {
                let mut sub = face.clone();
                sub.remove(j);
                let r = by_dim[k - 1].binary_search(&sub).unwrap();
                m.set(r, c, BigInt::from(if j % 2 == 0 { 1 } else { -1 }));
            }
        }
        m
    };
    let mut ranks = vec![0usize; by_dim.len() + 1];
    for k in 1..by_dim.len() {
        if !by_dim[k].is_empty() {
            ranks[k] = field.rank(&boundary(k));
        }
    }
    (0..by_dim.len())
        .map(|k| by_dim[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}

/// Reisner's criterion checked directly on the complex: every link has
/// vanishing reduced homology below the complement dimension.
pub fn reisner_cm_oracle(facets: &[Vec<u32>], field: Field) -> bool {
    let dim = facets.iter().map(|f| f.len()).max().unwrap_or(0) as i64 - 1;
    for face in closure(facets) {
        let link: Vec<Vec<u32>> = facets
            .iter()
            .filter(|f| face.iter().all(|v| f.contains(v)))
            .map(|f| {
                f.iter()
                    .copied()
                    .filter(|v| !face.contains(v))
                    .collect::<Vec<u32>>()
            })
            .collect();
        if link.is_empty() {
            // the face is not in the complex at all; closure() only yields
            // faces, so this means an empty link: homology of {empty}
            let expected_dim = dim - face.len() as i64;
            if expected_dim >= 0 {
                return false; // reduced H_{-1} of the empty complex
            }
            continue;
        }
        let h = brute_force_reduced_homology(&link, field);
        let expected_dim = dim - face.len() as i64;
        for (slot, &d) in h.iter().enumerate() {
            let degree = slot as i64 - 1;
            if degree < expected_dim && d != 0 {
                return false;
            }
        }
    }
    true
}

/// Non-pure simplicial shellability: an ordering of the facets where each
/// closed facet meets the union of the earlier ones in a pure complex of
/// dimension one less than the facet.
pub fn simplicial_shellable_oracle(facets: &[Vec<u32>]) -> bool {
    let n = facets.len();
    if n <= 1 {
        return true;
    }
    let closures: Vec<BTreeSet<BTreeSet<u32>>> = facets
        .iter()
        .map(|f| closure(std::slice::from_ref(f)).into_iter().collect())
        .collect();
    let mut order = Vec::new();
    shell_dfs(&closures, facets, &mut order)
}

fn shell_dfs(
    closures: &[BTreeSet<BTreeSet<u32>>],
    facets: &[Vec<u32>],
    order: &mut Vec<usize>,
) -> bool {
    if order.len() == facets.len() {
        return true;
    }
    for cand in 0..facets.len() {
        if order.contains(&cand) {
            continue;
        }
        if !order.is_empty() {
            let mut meet: BTreeSet<BTreeSet<u32>> = BTreeSet::new();
            for &prev in order.iter() {
                meet.extend(closures[prev].intersection(&closures[cand]).cloned());
            }
            let maximal: Vec<&BTreeSet<u32>> = meet
                .iter()
                .filter(|f| !meet.iter().any(|g| g.len() > f.len() && f.is_subset(g)))
                .collect();
            let want = facets[cand].len() as i64 - 1;
            if maximal.iter().any(|f| f.len() as i64 != want) {
                continue;
            }
        }
        order.push(cand);
        if shell_dfs(closures, facets, order) {
            return true;
        }
        order.pop();
    }
    false
}

/// Classical Cech description of the top local cohomology of K[x]: one
/// dimension in every strictly negative degree.
pub fn univariate_cech_oracle(degree: i64) -> usize {
    usize::from(degree < 0)
}
