//! Validated fans: face closure, the face poset, stars, subfans, f-vector
//! statistics and the join construction.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{Cone, LatticeVector};

/// Index of a cone within its fan. Ids are assigned deterministically:
/// cones are sorted by dimension, then by generator lists.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ConeId(pub usize);

impl fmt::Display for ConeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Debug for ConeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A validated rational pointed fan: a face-closed set of pointed cones in
/// which any two members intersect in a common face.
#[derive(Clone, Debug)]
pub struct Fan {
    ambient_dim: usize,
    cones: Vec<Cone>,
    index: BTreeMap<Cone, ConeId>,
    /// faces_of[i] = ids of all faces of cone i, including i itself.
    faces_of: Vec<BTreeSet<ConeId>>,
    facets: Vec<ConeId>,
    dim: usize,
    pure: bool,
}

impl Fan {
    /// Builds the fan generated by `maximal` cones: computes the face
    /// closure and verifies that all pairwise intersections are common
    /// faces. An input cone that is a face of another input cone is
    /// absorbed. The empty input yields the fan {0}.
    pub fn build(ambient_dim: usize, maximal: Vec<Cone>) -> Result<Fan> {
        for c in &maximal {
            if c.ambient_dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: c.ambient_dim(),
                });
            }
        }
        let mut candidates: Vec<Cone> = maximal
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if candidates.is_empty() {
            candidates.push(Cone::zero(ambient_dim));
        }

        let candidate_faces: Vec<Vec<Cone>> = candidates.iter().map(Cone::faces).collect();
        let absorbed: Vec<bool> = candidates
            .iter()
            .enumerate()
            .map(|(i, c)| {
                candidates.iter().enumerate().any(|(j, other)| {
                    i != j && c.dim() < other.dim() && candidate_faces[j].contains(c)
                })
            })
            .collect();
        let kept: Vec<Cone> = candidates
            .iter()
            .zip(&absorbed)
            .filter(|(_, &a)| !a)
            .map(|(c, _)| c.clone())
            .collect();
        let kept_faces: Vec<Vec<Cone>> = candidates
            .iter()
            .zip(candidate_faces)
            .zip(&absorbed)
            .filter(|((_, _), &a)| !a)
            .map(|((_, f), _)| f)
            .collect();

        for i in 0..kept.len() {
            for j in i + 1..kept.len() {
                let meet = kept[i].intersection(&kept[j])?;
                if !kept_faces[i].contains(&meet) || !kept_faces[j].contains(&meet) {
                    return Err(Error::NotAFan {
                        left: kept[i].generators().to_vec(),
                        right: kept[j].generators().to_vec(),
                    });
                }
            }
        }

        let mut all: BTreeSet<Cone> = BTreeSet::new();
        for faces in &kept_faces {
            all.extend(faces.iter().cloned());
        }
        let cones: Vec<Cone> = all.into_iter().collect();
        let index: BTreeMap<Cone, ConeId> = cones
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), ConeId(i)))
            .collect();

        let faces_of: Vec<BTreeSet<ConeId>> = cones
            .iter()
            .map(|c| {
                c.faces()
                    .into_iter()
                    .map(|f| *index.get(&f).expect("face closure is complete"))
                    .collect()
            })
            .collect();

        let facets: Vec<ConeId> = (0..cones.len())
            .map(ConeId)
            .filter(|&i| {
                !(0..cones.len())
                    .map(ConeId)
                    .any(|j| j != i && faces_of[j.0].contains(&i))
            })
            .collect();
        let dim = cones.iter().map(Cone::dim).max().unwrap_or(0);
        let pure = facets
            .iter()
            .all(|&f| cones[f.0].dim() == dim);

        Ok(Fan {
            ambient_dim,
            cones,
            index,
            faces_of,
            facets,
            dim,
            pure,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the fan (max cone dimension).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_pure(&self) -> bool {
        self.pure
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a fan always contains the zero cone
    }

    pub fn ids(&self) -> impl Iterator<Item = ConeId> {
        (0..self.cones.len()).map(ConeId)
    }

    pub fn cone(&self, id: ConeId) -> &Cone {
        &self.cones[id.0]
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn zero_id(&self) -> ConeId {
        debug_assert!(self.cones[0].is_zero_cone());
        ConeId(0)
    }

    /// Inclusion-maximal cones.
    pub fn facet_ids(&self) -> &[ConeId] {
        &self.facets
    }

    pub fn id_of(&self, cone: &Cone) -> Option<ConeId> {
        self.index.get(cone).copied()
    }

    /// Ids of all faces of `id`, including `id` itself.
    pub fn face_ids(&self, id: ConeId) -> &BTreeSet<ConeId> {
        &self.faces_of[id.0]
    }

    pub fn is_face(&self, a: ConeId, b: ConeId) -> bool {
        self.faces_of[b.0].contains(&a)
    }

    /// The star of a cone: all cones having it as a face.
    pub fn star(&self, base: ConeId) -> Star<'_> {
        let members = self
            .ids()
            .filter(|&d| self.faces_of[d.0].contains(&base))
            .collect();
        Star {
            fan: self,
            base: StarBase::Cone(base),
            members,
        }
    }

    /// The star of a lattice point: all cones containing it. Empty when the
    /// point lies outside the support.
    pub fn star_of_point(&self, a: &LatticeVector) -> Star<'_> {
        let members = self
            .ids()
            .filter(|&d| self.cones[d.0].contains(a))
            .collect();
        Star {
            fan: self,
            base: StarBase::Point(a.clone()),
            members,
        }
    }

    /// fan(C): the subfan of all faces of `id`.
    pub fn fan_of_cone(&self, id: ConeId) -> Subfan<'_> {
        Subfan {
            fan: self,
            ids: self.faces_of[id.0].clone(),
        }
    }

    /// fan(boundary C): all proper faces of `id`.
    pub fn boundary_fan_of_cone(&self, id: ConeId) -> Subfan<'_> {
        let mut ids = self.faces_of[id.0].clone();
        ids.remove(&id);
        Subfan { fan: self, ids }
    }

    /// The complement of a star, which is always a subfan.
    pub fn sigma_minus_star(&self, base: ConeId) -> Subfan<'_> {
        let star = self.star(base);
        let ids = self
            .ids()
            .filter(|id| !star.members.contains(id))
            .collect();
        Subfan { fan: self, ids }
    }

    /// The whole fan as a subfan of itself.
    pub fn full_subfan(&self) -> Subfan<'_> {
        Subfan {
            fan: self,
            ids: self.ids().collect(),
        }
    }

    pub fn subfan(&self, ids: BTreeSet<ConeId>) -> Subfan<'_> {
        let sub = Subfan { fan: self, ids };
        debug_assert!(sub.is_face_closed());
        sub
    }

    /// Face closure of the cones in `ids`.
    pub fn closure(&self, ids: impl IntoIterator<Item = ConeId>) -> Subfan<'_> {
        let mut closed = BTreeSet::new();
        for id in ids {
            closed.extend(self.faces_of[id.0].iter().copied());
        }
        Subfan {
            fan: self,
            ids: closed,
        }
    }

    /// For a pure fan of dimension k >= 1: the face closure of all
    /// (k-1)-dimensional cones lying in exactly one facet. Combinatorial
    /// boundary only; it matches the topological boundary when the support
    /// is a manifold with boundary.
    pub fn boundary_subfan(&self) -> Result<Subfan<'_>> {
        if !self.pure {
            return Err(Error::NotPure);
        }
        if self.dim == 0 {
            return Ok(Subfan {
                fan: self,
                ids: BTreeSet::new(),
            });
        }
        let rim: Vec<ConeId> = self
            .ids()
            .filter(|&c| self.cones[c.0].dim() + 1 == self.dim)
            .filter(|&c| {
                self.facets
                    .iter()
                    .filter(|&&f| self.faces_of[f.0].contains(&c))
                    .count()
                    == 1
            })
            .collect();
        Ok(self.closure(rim))
    }

    /// Number of i-dimensional cones in the star of `base`.
    pub fn star_f_vector(&self, base: ConeId) -> Vec<usize> {
        let mut f = vec![0usize; self.dim + 1];
        for d in self.star(base).members {
            f[self.cones[d.0].dim()] += 1;
        }
        f
    }

    /// rho(C) = sum over i of (-1)^(i+1) * f_i(star(C)); the Euler
    /// characteristic of the star cochain complex.
    pub fn rho(&self, base: ConeId) -> i64 {
        self.star_f_vector(base)
            .iter()
            .enumerate()
            .map(|(i, &fi)| sign_pow(i as i64 + 1) * fi as i64)
            .sum()
    }

    /// A fan is Euler when it is pure and rho(C) = (-1)^(dim - 1) for every
    /// cone C.
    pub fn euler_report(&self) -> EulerReport {
        let target = sign_pow(self.dim as i64 - 1);
        let rho: Vec<i64> = self.ids().map(|id| self.rho(id)).collect();
        let offenders: Vec<ConeId> = self
            .ids()
            .filter(|id| rho[id.0] != target)
            .collect();
        EulerReport {
            is_euler: self.pure && offenders.is_empty(),
            pure: self.pure,
            dim: self.dim,
            target,
            rho,
            offenders,
        }
    }

    pub fn is_euler(&self) -> bool {
        self.euler_report().is_euler
    }

    /// Membership of a point in the support |fan|.
    pub fn supports(&self, a: &LatticeVector) -> bool {
        self.facets.iter().any(|&f| self.cones[f.0].contains(a))
    }

    pub fn supports_i64(&self, point: &[i64]) -> bool {
        self.facets.iter().any(|&f| self.cones[f.0].contains_i64(point))
    }

    /// The unique cone whose relative interior contains the point, if the
    /// point lies in the support.
    pub fn relint_cone_of_i64(&self, point: &[i64]) -> Option<ConeId> {
        let facet = self
            .facets
            .iter()
            .copied()
            .find(|&f| self.cones[f.0].contains_i64(point))?;
        self.faces_of[facet.0]
            .iter()
            .copied()
            .find(|&c| self.cones[c.0].relint_contains_i64(point))
    }

    pub fn relint_cone_of(&self, a: &LatticeVector) -> Option<ConeId> {
        let facet = self
            .facets
            .iter()
            .copied()
            .find(|&f| self.cones[f.0].contains(a))?;
        self.faces_of[facet.0]
            .iter()
            .copied()
            .find(|&c| self.cones[c.0].relint_contains(a))
    }

    /// The same fan embedded in R^(d + extra) on the first d coordinates.
    pub fn embedded(&self, extra: usize) -> Fan {
        let facets = self
            .facets
            .iter()
            .map(|&f| self.cones[f.0].extended(extra))
            .collect();
        Fan::build(self.ambient_dim + extra, facets).expect("embedding preserves fan validity")
    }
}

fn sign_pow(exp: i64) -> i64 {
    if exp.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Per-cone rho values against the Euler target (-1)^(dim - 1).
#[derive(Clone, Debug, Serialize)]
pub struct EulerReport {
    pub is_euler: bool,
    pub pure: bool,
    pub dim: usize,
    pub target: i64,
    pub rho: Vec<i64>,
    pub offenders: Vec<ConeId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarBase {
    Cone(ConeId),
    Point(LatticeVector),
}

/// The star of a cone or lattice point: an upward-closed set of cone ids.
#[derive(Clone)]
pub struct Star<'a> {
    fan: &'a Fan,
    base: StarBase,
    members: BTreeSet<ConeId>,
}

impl<'a> Star<'a> {
    pub fn fan(&self) -> &'a Fan {
        self.fan
    }

    pub fn base(&self) -> &StarBase {
        &self.base
    }

    pub fn members(&self) -> &BTreeSet<ConeId> {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, id: ConeId) -> bool {
        self.members.contains(&id)
    }

    /// The unique minimal member: the base cone itself, or for a point star
    /// the cone holding the point in its relative interior.
    pub fn minimal_member(&self) -> Option<ConeId> {
        let minimal: Vec<ConeId> = self
            .members
            .iter()
            .copied()
            .filter(|&c| {
                !self
                    .members
                    .iter()
                    .any(|&d| d != c && self.fan.faces_of[c.0].contains(&d))
            })
            .collect();
        match minimal.as_slice() {
            [only] => Some(*only),
            _ => None,
        }
    }
}

/// A subfan: a face-closed set of cone ids of a parent fan. Stands for the
/// radical monomial ideal of lattice points outside its support.
#[derive(Clone)]
pub struct Subfan<'a> {
    fan: &'a Fan,
    ids: BTreeSet<ConeId>,
}

impl<'a> Subfan<'a> {
    pub fn fan(&self) -> &'a Fan {
        self.fan
    }

    pub fn ids(&self) -> &BTreeSet<ConeId> {
        &self.ids
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn contains(&self, id: ConeId) -> bool {
        self.ids.contains(&id)
    }

    pub fn is_face_closed(&self) -> bool {
        self.ids
            .iter()
            .all(|&c| self.fan.faces_of[c.0].iter().all(|f| self.ids.contains(f)))
    }

    /// Max cone dimension; None for the empty subfan.
    pub fn dim(&self) -> Option<usize> {
        self.ids.iter().map(|&c| self.fan.cones[c.0].dim()).max()
    }

    /// Ids maximal within the subfan.
    pub fn maximal_ids(&self) -> Vec<ConeId> {
        self.ids
            .iter()
            .copied()
            .filter(|&c| {
                !self
                    .ids
                    .iter()
                    .any(|&d| d != c && self.fan.faces_of[d.0].contains(&c))
            })
            .collect()
    }

    pub fn union(&self, other: &Subfan<'a>) -> Subfan<'a> {
        debug_assert!(std::ptr::eq(self.fan, other.fan));
        Subfan {
            fan: self.fan,
            ids: self.ids.union(&other.ids).copied().collect(),
        }
    }

    pub fn intersection(&self, other: &Subfan<'a>) -> Subfan<'a> {
        debug_assert!(std::ptr::eq(self.fan, other.fan));
        Subfan {
            fan: self.fan,
            ids: self.ids.intersection(&other.ids).copied().collect(),
        }
    }

    /// Membership of a point in the support of the subfan.
    pub fn supports(&self, a: &LatticeVector) -> bool {
        self.maximal_ids()
            .iter()
            .any(|&c| self.fan.cones[c.0].contains(a))
    }

    /// Materializes the subfan as a standalone fan.
    pub fn to_fan(&self) -> Result<Fan> {
        if self.ids.is_empty() {
            return Err(Error::EmptyFan);
        }
        let maximal = self
            .maximal_ids()
            .into_iter()
            .map(|c| self.fan.cones[c.0].clone())
            .collect();
        Fan::build(self.fan.ambient_dim, maximal)
    }

    /// Translates ids of a fan materialized from this subfan back into
    /// parent ids.
    pub fn parent_id(&self, materialized: &Fan, id: ConeId) -> ConeId {
        self.fan
            .id_of(materialized.cone(id))
            .expect("subfan cones are parent cones")
    }
}

/// The fan with cones base + {w * C : C in sub}, where w * C is the join of
/// the point w with C. Requires `w` to have a nonzero last coordinate and
/// the base fan to lie in the hyperplane where that coordinate vanishes.
pub fn join_fan(w: &LatticeVector, sub: &Subfan<'_>, base: &Fan) -> Result<Fan> {
    if w.dim() != base.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: base.ambient_dim(),
            found: w.dim(),
        });
    }
    let last = w.coords().last().expect("nonzero ambient dimension");
    if num::Zero::is_zero(last) {
        return Err(Error::BadJoinPoint { point: w.clone() });
    }
    let mut facets: Vec<Cone> = base
        .facet_ids()
        .iter()
        .map(|&f| base.cone(f).clone())
        .collect();
    for id in sub.maximal_ids() {
        facets.push(base.cone(id).join_point(w)?);
    }
    Fan::build(base.ambient_dim(), facets)
}
