//! Reduced simplicial cohomology over exact fields, and the star cochain
//! complexes of a fan computed through order complexes.
//!
//! The cochain complex attached to the star of a cone C has the cones of
//! dimension i+1 in degree i. Its cohomology equals the reduced cohomology
//! of the order complex of str(C) - {C}, shifted by dim C, which is how it
//! is computed here; no incidence function is ever constructed.

use std::collections::BTreeSet;

use num::bigint::BigInt;
use serde::Serialize;

use crate::fan::{ConeId, Fan, Star};
use crate::field::Field;
use crate::linalg::IntMatrix;

/// An abstract simplicial complex on numbered vertices; the empty face is
/// always present.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    vertex_count: usize,
    /// faces_by_dim[k] = sorted k-dimensional faces (k+1 sorted vertices).
    faces_by_dim: Vec<Vec<Vec<u32>>>,
}

impl SimplicialComplex {
    /// The complex whose only face is the empty face.
    pub fn empty() -> Self {
        SimplicialComplex {
            vertex_count: 0,
            faces_by_dim: Vec::new(),
        }
    }

    /// Downward closure of the given faces.
    pub fn from_maximal(vertex_count: usize, maximal: &[Vec<u32>]) -> Self {
        let mut by_dim: Vec<BTreeSet<Vec<u32>>> = Vec::new();
        visit_subsets(maximal, &mut by_dim);
        SimplicialComplex {
            vertex_count,
            faces_by_dim: by_dim
                .into_iter()
                .map(|s| s.into_iter().collect())
                .collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Dimension of the complex; -1 when only the empty face is present.
    pub fn dim(&self) -> i64 {
        self.faces_by_dim.len() as i64 - 1
    }

    pub fn faces_of_dim(&self, k: usize) -> &[Vec<u32>] {
        &self.faces_by_dim[k]
    }

    pub fn face_count(&self, k: i64) -> usize {
        if k == -1 {
            1
        } else {
            self.faces_by_dim
                .get(k as usize)
                .map_or(0, Vec::len)
        }
    }

    /// Boundary matrix from k-faces to (k-1)-faces with the usual
    /// alternating signs; k = 0 maps every vertex to the empty face.
    fn boundary_matrix(&self, k: usize) -> IntMatrix {
        let cols = self.face_count(k as i64);
        if k == 0 {
            let mut m = IntMatrix::zero(1, cols);
            for c in 0..cols {
                m.set(0, c, BigInt::from(1));
            }
            return m;
        }
        let rows_faces = &self.faces_by_dim[k - 1];
        let mut m = IntMatrix::zero(rows_faces.len(), cols);
        for (c, face) in self.faces_by_dim[k].iter().enumerate() {
            for (j, _) in face.iter().enumerate() {
                let mut sub = face.clone();
                sub.remove(j);
                let r = rows_faces
                    .binary_search(&sub)
                    .expect("complex is downward closed");
                let sign = if j % 2 == 0 { 1 } else { -1 };
                m.set(r, c, BigInt::from(sign));
            }
        }
        m
    }

    /// Dimensions of the reduced cohomology groups over the field, indexed
    /// from degree -1.
    pub fn reduced_cohomology(&self, field: Field) -> DegreeVector {
        let top = self.dim();
        let mut ranks = vec![0usize; (top + 2) as usize + 1];
        for k in 0..=top.max(-1) {
            if k >= 0 {
                ranks[(k + 1) as usize] = field.rank(&self.boundary_matrix(k as usize));
            }
        }
        // ranks[j] = rank of the boundary map from (j-1)-faces; index 0 is
        // the zero map out of the empty face.
        let mut dims = Vec::new();
        for k in -1..=top {
            let n = self.face_count(k);
            let below = ranks[(k + 1) as usize];
            let above = ranks.get((k + 2) as usize).copied().unwrap_or(0);
            dims.push(n - below - above);
        }
        DegreeVector::new(-1, dims)
    }

    /// Euler characteristic of the reduced complex: sum of (-1)^k over
    /// nonempty faces minus 1... kept in the reduced convention, i.e.
    /// including the empty face with sign (-1)^(-1).
    pub fn reduced_euler_characteristic(&self) -> i64 {
        let mut chi: i64 = -1;
        for (k, faces) in self.faces_by_dim.iter().enumerate() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            chi += sign * faces.len() as i64;
        }
        chi
    }
}

fn visit_subsets(maximal: &[Vec<u32>], by_dim: &mut Vec<BTreeSet<Vec<u32>>>) {
    let mut stack: Vec<Vec<u32>> = maximal
        .iter()
        .map(|f| {
            let mut v = f.clone();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();
    while let Some(face) = stack.pop() {
        if face.is_empty() {
            continue;
        }
        let k = face.len() - 1;
        if by_dim.len() <= k {
            by_dim.resize_with(k + 1, BTreeSet::new);
        }
        if by_dim[k].insert(face.clone()) {
            for j in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(j);
                stack.push(sub);
            }
        }
    }
}

/// A vector of cohomology dimensions indexed by an integer degree range;
/// entries outside the range are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeVector {
    pub min_degree: i64,
    pub dims: Vec<usize>,
}

impl DegreeVector {
    pub fn new(min_degree: i64, dims: Vec<usize>) -> Self {
        DegreeVector { min_degree, dims }
    }

    pub fn zero() -> Self {
        DegreeVector {
            min_degree: 0,
            dims: Vec::new(),
        }
    }

    pub fn dim_at(&self, degree: i64) -> usize {
        if degree < self.min_degree {
            return 0;
        }
        self.dims
            .get((degree - self.min_degree) as usize)
            .copied()
            .unwrap_or(0)
    }

    pub fn shifted(&self, by: i64) -> DegreeVector {
        DegreeVector {
            min_degree: self.min_degree + by,
            dims: self.dims.clone(),
        }
    }

    /// Degrees with nonzero entries.
    pub fn support(&self) -> Vec<i64> {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(i, _)| self.min_degree + i as i64)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Alternating sum of the dimensions.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let degree = self.min_degree + i as i64;
                let sign = if degree.rem_euclid(2) == 0 { 1 } else { -1 };
                sign * d as i64
            })
            .sum()
    }

    /// First degree strictly below `bound` with a nonzero entry.
    pub fn first_nonzero_below(&self, bound: i64) -> Option<i64> {
        self.support().into_iter().find(|&d| d < bound)
    }
}

/// The order complex of a star: vertices are the member cones other than
/// the unique minimal one, faces are the chains of the face relation.
pub fn order_complex(star: &Star<'_>) -> SimplicialComplex {
    assert!(!star.is_empty(), "order complex of an empty star");
    let fan = star.fan();
    let base = star
        .minimal_member()
        .expect("a star has a unique minimal member");
    let vertices: Vec<ConeId> = star
        .members()
        .iter()
        .copied()
        .filter(|&c| c != base)
        .collect();
    let n = vertices.len();
    if n == 0 {
        return SimplicialComplex::empty();
    }
    let comparable: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    fan.is_face(vertices[i], vertices[j]) || fan.is_face(vertices[j], vertices[i])
                })
                .collect()
        })
        .collect();
    // chains = cliques of the comparability graph; vertices are pre-sorted
    // by id, which refines the face order dimension-first
    let mut by_dim: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut chain: Vec<u32> = Vec::new();
    collect_chains(&comparable, 0, &mut chain, &mut by_dim);
    SimplicialComplex {
        vertex_count: n,
        faces_by_dim: by_dim,
    }
}

fn collect_chains(
    comparable: &[Vec<bool>],
    from: usize,
    chain: &mut Vec<u32>,
    by_dim: &mut Vec<Vec<Vec<u32>>>,
) {
    for v in from..comparable.len() {
        if chain.iter().all(|&u| comparable[u as usize][v]) {
            chain.push(v as u32);
            let k = chain.len() - 1;
            if by_dim.len() <= k {
                by_dim.resize_with(k + 1, Vec::new);
            }
            by_dim[k].push(chain.clone());
            collect_chains(comparable, v + 1, chain, by_dim);
            chain.pop();
        }
    }
}

/// Dimensions of the cohomology of the star cochain complex of cone `id`,
/// indexed from dim C - 1 to dim fan - 1: the reduced cohomology of the
/// order complex shifted by dim C. For the singleton star this is a single
/// one-dimensional entry in degree dim C - 1.
pub fn star_cohomology(fan: &Fan, id: ConeId, field: Field) -> DegreeVector {
    let star = fan.star(id);
    let complex = order_complex(&star);
    let reduced = complex.reduced_cohomology(field);
    reduced.shifted(fan.cone(id).dim() as i64)
}

/// Local homology of the fan's support at a relative interior point of the
/// cone (for nonzero cones), or the reduced homology of the support itself
/// (for the zero cone). Both equal the star cochain cohomology.
pub fn local_homology_profile(fan: &Fan, id: ConeId, field: Field) -> DegreeVector {
    star_cohomology(fan, id, field)
}

/// Star cochain cohomology of every cone of the fan over one field.
#[derive(Clone, Debug, Serialize)]
pub struct CohomologyProfile {
    pub field: Field,
    pub per_cone: Vec<DegreeVector>,
}

impl CohomologyProfile {
    pub fn compute(fan: &Fan, field: Field) -> CohomologyProfile {
        CohomologyProfile {
            field,
            per_cone: fan.ids().map(|id| star_cohomology(fan, id, field)).collect(),
        }
    }

    pub fn cone(&self, id: ConeId) -> &DegreeVector {
        &self.per_cone[id.0]
    }

    /// dim of the top cohomology, the t-invariant deciding canonical-ideal
    /// embeddings.
    pub fn top_dim(&self, fan: &Fan, id: ConeId) -> usize {
        self.per_cone[id.0].dim_at(fan.dim() as i64 - 1)
    }
}
