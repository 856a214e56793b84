//! Ring-theoretic analysis of a fan's toric face ring: Cohen-Macaulayness,
//! graded Hilbert functions of local cohomology and of the canonical
//! module, Gorensteinness, and canonical-module embeddings as graded
//! ideals.
//!
//! Conditions quantifying over all of Z^d (the Gorenstein support-shift
//! condition) are verified pointwise on a window [-R, R]^d and reported
//! with that qualifier; the window refutes soundly and confirms up to its
//! radius.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fan::{join_fan, ConeId, Fan};
use crate::field::Field;
use crate::geometry::{LatticeBox, LatticeVector};
use crate::homology::CohomologyProfile;

/// Outcome of the Cohen-Macaulay test: vanishing of all star cochain
/// cohomology strictly below degree dim - 1.
#[derive(Clone, Debug, Serialize)]
pub struct CmVerdict {
    pub cohen_macaulay: bool,
    pub witness: Option<CmFailure>,
}

/// First cone and degree with nonzero low cohomology, in id order.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CmFailure {
    pub cone: ConeId,
    pub degree: i64,
}

pub fn is_cohen_macaulay(fan: &Fan, field: Field) -> CmVerdict {
    cm_verdict(fan, &CohomologyProfile::compute(fan, field))
}

pub fn cm_verdict(fan: &Fan, profile: &CohomologyProfile) -> CmVerdict {
    let bound = fan.dim() as i64 - 1;
    for id in fan.ids() {
        if let Some(degree) = profile.cone(id).first_nonzero_below(bound) {
            return CmVerdict {
                cohen_macaulay: false,
                witness: Some(CmFailure { cone: id, degree }),
            };
        }
    }
    CmVerdict {
        cohen_macaulay: true,
        witness: None,
    }
}

fn require_cm(fan: &Fan, profile: &CohomologyProfile) -> Result<()> {
    match cm_verdict(fan, profile).witness {
        None => Ok(()),
        Some(w) => Err(Error::NotCohenMacaulay {
            cone: w.cone.0,
            degree: w.degree,
        }),
    }
}

/// A graded Hilbert function restricted to a lattice window; absent points
/// have dimension zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSlice {
    pub window: LatticeBox,
    pub values: BTreeMap<LatticeVector, usize>,
}

impl HilbertSlice {
    pub fn value(&self, a: &LatticeVector) -> usize {
        self.values.get(a).copied().unwrap_or(0)
    }
}

impl Serialize for HilbertSlice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            point: &'a LatticeVector,
            dim: usize,
        }
        #[derive(Serialize)]
        struct Slice<'a> {
            box_radius: u32,
            #[serde(rename = "values")]
            entries: Vec<Entry<'a>>,
        }
        let entries = self
            .values
            .iter()
            .map(|(point, &dim)| Entry { point, dim })
            .collect();
        Slice {
            box_radius: self.window.radius(),
            entries,
        }
        .serialize(s)
    }
}

/// Z^d-graded Hilbert function of the canonical module on the window:
/// the degree-a component has dimension t(C_a) where C_a is the cone with
/// a in its relative interior and t is the top star cohomology dimension.
pub fn omega_hilbert(fan: &Fan, field: Field, window: &LatticeBox) -> Result<HilbertSlice> {
    let profile = CohomologyProfile::compute(fan, field);
    omega_hilbert_with(fan, &profile, window)
}

pub fn omega_hilbert_with(
    fan: &Fan,
    profile: &CohomologyProfile,
    window: &LatticeBox,
) -> Result<HilbertSlice> {
    require_cm(fan, profile)?;
    let top: Vec<usize> = fan.ids().map(|id| profile.top_dim(fan, id)).collect();
    let mut values = BTreeMap::new();
    for p in window.points(fan.ambient_dim()) {
        if let Some(c) = fan.relint_cone_of_i64(&p) {
            if top[c.0] > 0 {
                values.insert(LatticeVector::from_i64(&p), top[c.0]);
            }
        }
    }
    Ok(HilbertSlice {
        window: *window,
        values,
    })
}

/// Z^d-graded Hilbert function of the i-th local cohomology module on the
/// window: degree a picks up the (i-1)-st star cochain cohomology of the
/// cone whose relative interior contains -a.
pub fn local_cohomology_hilbert(
    fan: &Fan,
    field: Field,
    degree: i64,
    window: &LatticeBox,
) -> Result<HilbertSlice> {
    let profile = CohomologyProfile::compute(fan, field);
    local_cohomology_hilbert_with(fan, &profile, degree, window)
}

pub fn local_cohomology_hilbert_with(
    fan: &Fan,
    profile: &CohomologyProfile,
    degree: i64,
    window: &LatticeBox,
) -> Result<HilbertSlice> {
    if degree < 0 || degree > fan.dim() as i64 {
        return Err(Error::DegreeOutOfRange {
            degree,
            max: fan.dim() as i64,
        });
    }
    let mut values = BTreeMap::new();
    for p in window.points(fan.ambient_dim()) {
        let negated: Vec<i64> = p.iter().map(|&c| -c).collect();
        if let Some(c) = fan.relint_cone_of_i64(&negated) {
            let dim = profile.cone(c).dim_at(degree - 1);
            if dim > 0 {
                values.insert(LatticeVector::from_i64(&p), dim);
            }
        }
    }
    Ok(HilbertSlice {
        window: *window,
        values,
    })
}

/// Successful Gorenstein verification: the degree shift sigma together with
/// the per-cone rho table (exact) and the support-shift condition status
/// (window-qualified).
#[derive(Clone, Debug, Serialize)]
pub struct GorensteinWitness {
    pub sigma: LatticeVector,
    pub condition_i: ConditionStatus,
    pub rho_table: Vec<SigmaRho>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status")]
pub enum ConditionStatus {
    VerifiedOnBox { radius: u32 },
    FailedAt { point: LatticeVector },
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaRho {
    pub cone: ConeId,
    pub rho: i64,
    pub expected: i64,
    pub in_star: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "verdict")]
pub enum GorensteinOutcome {
    Gorenstein(GorensteinWitness),
    NotGorenstein { reason: NotGorensteinReason },
}

impl GorensteinOutcome {
    pub fn is_gorenstein(&self) -> bool {
        matches!(self, GorensteinOutcome::Gorenstein(_))
    }

    pub fn witness(&self) -> Option<&GorensteinWitness> {
        match self {
            GorensteinOutcome::Gorenstein(w) => Some(w),
            GorensteinOutcome::NotGorenstein { .. } => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind")]
pub enum NotGorensteinReason {
    NotCohenMacaulay {
        witness: CmFailure,
    },
    /// Every candidate sigma in the window failed; the rejections explain
    /// why. Soundly refuted on the window, qualified by its radius.
    NoSigmaInBox {
        radius: u32,
        rejected: Vec<RejectedSigma>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct RejectedSigma {
    pub sigma: LatticeVector,
    pub reason: SigmaFailure,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind")]
pub enum SigmaFailure {
    RhoMismatch {
        cone: ConeId,
        rho: i64,
        expected: i64,
    },
    SupportShiftFailedAt {
        point: LatticeVector,
    },
}

/// Gorenstein test: Cohen-Macaulay plus a lattice point sigma in the
/// intersection of all facets such that (ii) rho is the Euler target
/// exactly on the star of sigma and zero outside, and (i) the relative
/// interiors in the star of sigma cover exactly sigma + (support lattice
/// points). Candidates are enumerated in lexicographic order and the first
/// verified one is reported.
pub fn gorenstein_check(fan: &Fan, field: Field, window: &LatticeBox) -> GorensteinOutcome {
    let profile = CohomologyProfile::compute(fan, field);
    gorenstein_check_with(fan, &profile, window)
}

pub fn gorenstein_check_with(
    fan: &Fan,
    profile: &CohomologyProfile,
    window: &LatticeBox,
) -> GorensteinOutcome {
    let cm = cm_verdict(fan, profile);
    if let Some(witness) = cm.witness {
        return GorensteinOutcome::NotGorenstein {
            reason: NotGorensteinReason::NotCohenMacaulay { witness },
        };
    }

    let mut core = fan.cone(*fan.facet_ids().first().expect("fan is non-empty")).clone();
    for &f in fan.facet_ids().iter().skip(1) {
        core = core
            .intersection(fan.cone(f))
            .expect("cones of one fan share an ambient dimension");
    }

    let target = euler_target(fan);
    let rho: Vec<i64> = fan.ids().map(|id| fan.rho(id)).collect();
    let mut rejected = Vec::new();

    'candidates: for sigma in core.lattice_points(window, false) {
        let star = fan.star_of_point(&sigma);
        let mut rho_table = Vec::with_capacity(fan.len());
        for id in fan.ids() {
            let in_star = star.contains(id);
            let expected = if in_star { target } else { 0 };
            if rho[id.0] != expected {
                rejected.push(RejectedSigma {
                    sigma,
                    reason: SigmaFailure::RhoMismatch {
                        cone: id,
                        rho: rho[id.0],
                        expected,
                    },
                });
                continue 'candidates;
            }
            rho_table.push(SigmaRho {
                cone: id,
                rho: rho[id.0],
                expected,
                in_star,
            });
        }
        for p in window.points(fan.ambient_dim()) {
            let lhs = fan
                .relint_cone_of_i64(&p)
                .is_some_and(|c| star.contains(c));
            let rhs = fan.supports(&LatticeVector::from_i64(&p).sub(&sigma));
            if lhs != rhs {
                rejected.push(RejectedSigma {
                    sigma,
                    reason: SigmaFailure::SupportShiftFailedAt {
                        point: LatticeVector::from_i64(&p),
                    },
                });
                continue 'candidates;
            }
        }
        return GorensteinOutcome::Gorenstein(GorensteinWitness {
            sigma,
            condition_i: ConditionStatus::VerifiedOnBox {
                radius: window.radius(),
            },
            rho_table,
        });
    }

    GorensteinOutcome::NotGorenstein {
        reason: NotGorensteinReason::NoSigmaInBox {
            radius: window.radius(),
            rejected,
        },
    }
}

fn euler_target(fan: &Fan) -> i64 {
    if (fan.dim() as i64 - 1).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// How the canonical module sits inside the ring.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "verdict")]
pub enum CanonicalIdeal {
    /// The fan is Euler: omega is isomorphic to the ring itself.
    EulerSelf,
    /// omega embeds as the radical ideal of the lattice points outside the
    /// subfan with these cone ids; the subfan is Euler, Cohen-Macaulay and
    /// of dimension dim - 1.
    IdealSubfan { cone_ids: Vec<ConeId> },
    /// No graded embedding exists; the first violated clause.
    NoGradedEmbedding { obstruction: EmbeddingObstruction },
}

impl CanonicalIdeal {
    pub fn subfan_ids(&self) -> Option<BTreeSet<ConeId>> {
        match self {
            CanonicalIdeal::IdealSubfan { cone_ids } => {
                Some(cone_ids.iter().copied().collect())
            }
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind")]
pub enum EmbeddingObstruction {
    /// Some graded component of omega has dimension above one.
    TopDimensionTooLarge { cone: ConeId, dim: usize },
    /// The vanishing locus of the top cohomology is not closed under faces.
    NotFaceClosed { cone: ConeId, face: ConeId },
    /// The vanishing locus has the wrong dimension.
    WrongDimension { expected: i64, found: Option<i64> },
    /// The vanishing subfan is not an Euler fan.
    CandidateNotEuler,
    /// The vanishing subfan is not Cohen-Macaulay.
    CandidateNotCohenMacaulay { witness: CmFailure },
}

/// Decides whether the canonical module is a graded ideal: either the fan
/// is Euler (omega = ring), or the cones with vanishing top cohomology form
/// an Euler, Cohen-Macaulay subfan of dimension dim - 1 and omega is its
/// radical ideal.
pub fn canonical_ideal_subfan(fan: &Fan, field: Field) -> Result<CanonicalIdeal> {
    let profile = CohomologyProfile::compute(fan, field);
    canonical_ideal_subfan_with(fan, &profile)
}

pub fn canonical_ideal_subfan_with(fan: &Fan, profile: &CohomologyProfile) -> Result<CanonicalIdeal> {
    require_cm(fan, profile)?;
    let top: Vec<usize> = fan.ids().map(|id| profile.top_dim(fan, id)).collect();

    if let Some(id) = fan.ids().find(|id| top[id.0] > 1) {
        return Ok(CanonicalIdeal::NoGradedEmbedding {
            obstruction: EmbeddingObstruction::TopDimensionTooLarge {
                cone: id,
                dim: top[id.0],
            },
        });
    }
    if fan.ids().all(|id| top[id.0] == 1) {
        return Ok(CanonicalIdeal::EulerSelf);
    }

    let ids: BTreeSet<ConeId> = fan.ids().filter(|id| top[id.0] == 0).collect();
    for &c in &ids {
        for &f in fan.face_ids(c) {
            if !ids.contains(&f) {
                return Ok(CanonicalIdeal::NoGradedEmbedding {
                    obstruction: EmbeddingObstruction::NotFaceClosed { cone: c, face: f },
                });
            }
        }
    }
    let sub = fan.subfan(ids.clone());
    let expected = fan.dim() as i64 - 1;
    if sub.dim().map(|d| d as i64) != Some(expected) {
        return Ok(CanonicalIdeal::NoGradedEmbedding {
            obstruction: EmbeddingObstruction::WrongDimension {
                expected,
                found: sub.dim().map(|d| d as i64),
            },
        });
    }
    let boundary_fan = sub.to_fan()?;
    if !boundary_fan.is_euler() {
        return Ok(CanonicalIdeal::NoGradedEmbedding {
            obstruction: EmbeddingObstruction::CandidateNotEuler,
        });
    }
    let cm = is_cohen_macaulay(&boundary_fan, profile.field);
    if let Some(witness) = cm.witness {
        // report the witness in parent ids
        let parent = sub.parent_id(&boundary_fan, witness.cone);
        return Ok(CanonicalIdeal::NoGradedEmbedding {
            obstruction: EmbeddingObstruction::CandidateNotCohenMacaulay {
                witness: CmFailure {
                    cone: parent,
                    degree: witness.degree,
                },
            },
        });
    }
    Ok(CanonicalIdeal::IdealSubfan {
        cone_ids: ids.into_iter().collect(),
    })
}

/// Report of the boundary-duality theorem on a fan whose support looks like
/// a manifold with boundary: the boundary subfan being Euler and
/// Cohen-Macaulay must coincide with omega embedding as its radical ideal.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "verdict")]
pub enum DualityReport {
    /// The combinatorial boundary is empty (closed support) - the theorem
    /// does not apply.
    NotApplicable,
    Checked(BoundaryDuality),
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundaryDuality {
    pub boundary_ids: Vec<ConeId>,
    /// Local-homology heuristic: every nonzero cone concentrated in the top
    /// degree with dimension at most one, vanishing exactly on the boundary.
    pub manifold_like: bool,
    pub manifold_violations: Vec<ConeId>,
    pub boundary_euler: bool,
    pub boundary_cohen_macaulay: bool,
    pub canonical_is_boundary_ideal: bool,
    /// The two sides of the duality theorem observed to agree.
    pub agreement: bool,
}

pub fn manifold_boundary_duality_check(fan: &Fan, field: Field) -> Result<DualityReport> {
    let profile = CohomologyProfile::compute(fan, field);
    if !fan.is_pure() {
        return Err(Error::NotPure);
    }
    require_cm(fan, &profile)?;
    let boundary = fan.boundary_subfan()?;
    if boundary.is_empty() {
        return Ok(DualityReport::NotApplicable);
    }
    let top_degree = fan.dim() as i64 - 1;
    let mut violations = Vec::new();
    for id in fan.ids() {
        if id == fan.zero_id() {
            continue;
        }
        let h = profile.cone(id);
        let t = h.dim_at(top_degree);
        let concentrated = h.support().iter().all(|&d| d == top_degree);
        let boundary_vanishing = (t == 0) == boundary.contains(id);
        if !(concentrated && t <= 1 && boundary_vanishing) {
            violations.push(id);
        }
    }

    let boundary_fan = boundary.to_fan()?;
    let boundary_euler = boundary_fan.is_euler();
    let boundary_cm = is_cohen_macaulay(&boundary_fan, field).cohen_macaulay;

    let canonical = canonical_ideal_subfan_with(fan, &profile)?;
    let canonical_is_boundary_ideal =
        canonical.subfan_ids().as_ref() == Some(boundary.ids());

    Ok(DualityReport::Checked(BoundaryDuality {
        boundary_ids: boundary.ids().iter().copied().collect(),
        manifold_like: violations.is_empty(),
        manifold_violations: violations,
        boundary_euler,
        boundary_cohen_macaulay: boundary_cm,
        canonical_is_boundary_ideal,
        agreement: (boundary_euler && boundary_cm) == canonical_is_boundary_ideal,
    }))
}

/// Consistency oracle for a canonical-ideal subfan: joining the subfan with
/// a point of the next dimension and gluing onto the fan must produce an
/// Euler, Cohen-Macaulay fan. A `false` signals an internal inconsistency,
/// not a property of the input.
#[derive(Clone, Debug, Serialize)]
pub struct JoinValidation {
    pub euler: bool,
    pub cohen_macaulay: bool,
    pub passed: bool,
}

pub fn cross_validate_via_join(
    fan: &Fan,
    subfan_ids: &BTreeSet<ConeId>,
    field: Field,
) -> Result<JoinValidation> {
    let embedded = fan.embedded(1);
    let ids: BTreeSet<ConeId> = subfan_ids
        .iter()
        .map(|&id| {
            embedded
                .id_of(&fan.cone(id).extended(1))
                .expect("embedded fan contains the embedded cones")
        })
        .collect();
    let sub = embedded.subfan(ids);
    let apex = LatticeVector::unit(embedded.ambient_dim(), embedded.ambient_dim() - 1);
    let joined = join_fan(&apex, &sub, &embedded)?;
    let euler = joined.is_euler();
    let cohen_macaulay = is_cohen_macaulay(&joined, field).cohen_macaulay;
    Ok(JoinValidation {
        euler,
        cohen_macaulay,
        passed: euler && cohen_macaulay,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::tests::{fan, half_plane_fan, lv, single_ray_fan, skew_wedge_fan, square_rim_fan};
    use crate::fan::Fan;
    use crate::geometry::Cone;

    fn q() -> Field {
        Field::Rationals
    }

    fn window(r: u32) -> LatticeBox {
        LatticeBox::new(r).unwrap()
    }

    #[test]
    fn cm_examples() {
        let zero = Fan::build(1, vec![Cone::zero(1)]).unwrap();
        assert!(is_cohen_macaulay(&zero, q()).cohen_macaulay);

        assert!(is_cohen_macaulay(&skew_wedge_fan(), q()).cohen_macaulay);

        // two coordinate rays: dimension 1, nothing below degree 0
        let rays = fan(2, &[&[&[1, 0]], &[&[0, 1]]]);
        assert!(is_cohen_macaulay(&rays, q()).cohen_macaulay);

        // two quadrants meeting only at the origin: disconnected link
        let pinched = fan(2, &[&[&[1, 0], &[0, 1]], &[&[-1, 0], &[0, -1]]]);
        let verdict = is_cohen_macaulay(&pinched, q());
        assert!(!verdict.cohen_macaulay);
        let w = verdict.witness.unwrap();
        assert_eq!(w.cone, pinched.zero_id());
        assert_eq!(w.degree, 0);
    }

    #[test]
    fn omega_of_the_polynomial_ring() {
        let f = single_ray_fan();
        let slice = omega_hilbert(&f, q(), &window(3)).unwrap();
        let expected: BTreeMap<LatticeVector, usize> = [1, 2, 3]
            .into_iter()
            .map(|a| (lv(&[a]), 1))
            .collect();
        assert_eq!(slice.values, expected);
    }

    #[test]
    fn omega_of_the_square_rim_is_the_support_indicator() {
        let f = square_rim_fan();
        let slice = omega_hilbert(&f, q(), &window(2)).unwrap();
        for p in window(2).points(3) {
            let expected = usize::from(f.supports_i64(&p));
            assert_eq!(slice.value(&lv(&p)), expected, "at {:?}", p);
            // independent support description: z = max(|x|, |y|)
            let z_is_max = p[2] == p[0].abs().max(p[1].abs());
            assert_eq!(expected == 1, z_is_max);
        }
    }

    #[test]
    fn omega_of_the_half_plane_vanishes_on_the_boundary() {
        let f = half_plane_fan();
        let slice = omega_hilbert(&f, q(), &window(2)).unwrap();
        for p in window(2).points(2) {
            let expected = usize::from(p[1] >= 1);
            assert_eq!(slice.value(&lv(&p)), expected, "at {:?}", p);
        }
    }

    #[test]
    fn local_cohomology_of_the_polynomial_ring() {
        let f = single_ray_fan();
        let slice = local_cohomology_hilbert(&f, q(), 1, &window(5)).unwrap();
        for a in -5i64..=5 {
            let expected = usize::from(a < 0);
            assert_eq!(slice.value(&lv(&[a])), expected, "at {a}");
        }
        // below the top degree everything vanishes on a CM fan
        let zero = local_cohomology_hilbert(&f, q(), 0, &window(5)).unwrap();
        assert!(zero.values.is_empty());
    }

    #[test]
    fn local_cohomology_of_the_point_fan() {
        let f = Fan::build(1, vec![Cone::zero(1)]).unwrap();
        let slice = local_cohomology_hilbert(&f, q(), 0, &window(3)).unwrap();
        assert_eq!(slice.values.len(), 1);
        assert_eq!(slice.value(&lv(&[0])), 1);
    }

    #[test]
    fn local_cohomology_degree_bounds() {
        let f = single_ray_fan();
        assert!(local_cohomology_hilbert(&f, q(), 2, &window(2)).is_err());
        assert!(local_cohomology_hilbert(&f, q(), -1, &window(2)).is_err());
    }

    #[test]
    fn below_top_local_cohomology_vanishes_on_cm_fans() {
        for f in [skew_wedge_fan(), half_plane_fan(), square_rim_fan()] {
            for i in 0..fan_dim(&f) {
                let slice = local_cohomology_hilbert(&f, q(), i, &window(3)).unwrap();
                assert!(slice.values.is_empty(), "degree {i}");
            }
        }
    }

    fn fan_dim(f: &Fan) -> i64 {
        f.dim() as i64
    }

    #[test]
    fn gorenstein_of_the_square_rim() {
        let outcome = gorenstein_check(&square_rim_fan(), q(), &window(2));
        let w = outcome.witness().expect("the square rim is Gorenstein");
        assert_eq!(w.sigma, lv(&[0, 0, 0]));
        assert!(w.rho_table.iter().all(|r| r.rho == -1 && r.in_star));
    }

    #[test]
    fn gorenstein_of_the_polynomial_ring() {
        let outcome = gorenstein_check(&single_ray_fan(), q(), &window(4));
        let w = outcome.witness().expect("K[x] is Gorenstein");
        assert_eq!(w.sigma, lv(&[1]));
        assert!(matches!(
            w.condition_i,
            ConditionStatus::VerifiedOnBox { radius: 4 }
        ));
    }

    #[test]
    fn the_skew_wedge_is_not_gorenstein() {
        let outcome = gorenstein_check(&skew_wedge_fan(), q(), &window(4));
        match outcome {
            GorensteinOutcome::NotGorenstein {
                reason: NotGorensteinReason::NoSigmaInBox { radius, rejected },
            } => {
                assert_eq!(radius, 4);
                // sigma = 0 fails the rho condition, interior candidates
                // fail the support shift
                assert!(rejected
                    .iter()
                    .any(|r| matches!(r.reason, SigmaFailure::RhoMismatch { .. })));
                assert!(rejected
                    .iter()
                    .any(|r| matches!(r.reason, SigmaFailure::SupportShiftFailedAt { .. })));
            }
            other => panic!("expected NoSigmaInBox, got {other:?}"),
        }
    }

    #[test]
    fn gorenstein_box_verification_is_monotone() {
        for radius in [3, 5] {
            let w = gorenstein_check(&single_ray_fan(), q(), &window(radius));
            assert_eq!(w.witness().unwrap().sigma, lv(&[1]));
        }
        for radius in [2, 4] {
            let w = gorenstein_check(&square_rim_fan(), q(), &window(radius));
            assert_eq!(w.witness().unwrap().sigma, lv(&[0, 0, 0]));
        }
    }

    #[test]
    fn canonical_ideal_examples() {
        // K[x]: omega = (x) = ideal of the zero subfan
        let f = single_ray_fan();
        let c = canonical_ideal_subfan(&f, q()).unwrap();
        assert_eq!(c.subfan_ids().unwrap().len(), 1);
        assert!(c.subfan_ids().unwrap().contains(&f.zero_id()));

        // Euler fan: omega = ring
        let rim = square_rim_fan();
        assert!(matches!(
            canonical_ideal_subfan(&rim, q()).unwrap(),
            CanonicalIdeal::EulerSelf
        ));

        // half plane: omega = radical ideal of the boundary
        let hp = half_plane_fan();
        let c = canonical_ideal_subfan(&hp, q()).unwrap();
        let boundary = hp.boundary_subfan().unwrap();
        assert_eq!(c.subfan_ids().unwrap(), *boundary.ids());
    }

    #[test]
    fn canonical_ideal_requires_cm() {
        let pinched = fan(2, &[&[&[1, 0], &[0, 1]], &[&[-1, 0], &[0, -1]]]);
        assert!(canonical_ideal_subfan(&pinched, q()).is_err());
    }

    #[test]
    fn duality_check_examples() {
        let hp = half_plane_fan();
        match manifold_boundary_duality_check(&hp, q()).unwrap() {
            DualityReport::Checked(report) => {
                assert!(report.manifold_like);
                assert!(report.boundary_euler);
                assert!(report.boundary_cohen_macaulay);
                assert!(report.canonical_is_boundary_ideal);
                assert!(report.agreement);
            }
            DualityReport::NotApplicable => panic!("half plane has a boundary"),
        }

        let single = fan(2, &[&[&[1, 0], &[0, 1]]]);
        match manifold_boundary_duality_check(&single, q()).unwrap() {
            DualityReport::Checked(report) => {
                assert!(report.manifold_like && report.agreement);
                assert_eq!(report.boundary_ids.len(), 3);
            }
            DualityReport::NotApplicable => panic!("an interval has endpoints"),
        }

        assert!(matches!(
            manifold_boundary_duality_check(&square_rim_fan(), q()).unwrap(),
            DualityReport::NotApplicable
        ));
    }

    #[test]
    fn join_validation_examples() {
        let f = single_ray_fan();
        let sigma = canonical_ideal_subfan(&f, q()).unwrap().subfan_ids().unwrap();
        let v = cross_validate_via_join(&f, &sigma, q()).unwrap();
        assert!(v.passed);

        let hp = half_plane_fan();
        let sigma = canonical_ideal_subfan(&hp, q()).unwrap().subfan_ids().unwrap();
        let v = cross_validate_via_join(&hp, &sigma, q()).unwrap();
        assert!(v.passed);
    }

    #[test]
    fn duality_slice_on_corpus_fans() {
        for f in [
            single_ray_fan(),
            skew_wedge_fan(),
            half_plane_fan(),
            square_rim_fan(),
        ] {
            let omega = omega_hilbert(&f, q(), &window(3)).unwrap();
            let top = local_cohomology_hilbert(&f, q(), f.dim() as i64, &window(3)).unwrap();
            for p in window(3).points(f.ambient_dim()) {
                let a = lv(&p);
                let neg = lv(&p.iter().map(|&c| -c).collect::<Vec<_>>());
                assert_eq!(omega.value(&a), top.value(&neg));
            }
        }
    }

    #[test]
    fn ideal_support_matches_omega() {
        // whenever omega = q_{subfan}, its Hilbert slice is the indicator
        // of support minus subfan support
        for f in [single_ray_fan(), skew_wedge_fan(), half_plane_fan()] {
            let c = canonical_ideal_subfan(&f, q()).unwrap();
            let ids = c.subfan_ids().expect("non-Euler corpus fan");
            let sub = f.subfan(ids);
            let omega = omega_hilbert(&f, q(), &window(3)).unwrap();
            for p in window(3).points(f.ambient_dim()) {
                let a = lv(&p);
                let expected = usize::from(f.supports(&a) && !sub.supports(&a));
                assert_eq!(omega.value(&a), expected, "at {a}");
            }
        }
    }

    #[test]
    fn euler_cm_fans_satisfy_the_expected_chain() {
        // Euler + CM forces Gorenstein with the star of sigma covering
        // everything, and omega the full support indicator
        let rim = square_rim_fan();
        let outcome = gorenstein_check(&rim, q(), &window(2));
        let w = outcome.witness().unwrap();
        let star = rim.star_of_point(&w.sigma);
        assert_eq!(star.members().len(), rim.len());
        let omega = omega_hilbert(&rim, q(), &window(2)).unwrap();
        for p in window(2).points(3) {
            assert_eq!(omega.value(&lv(&p)) == 1, rim.supports_i64(&p));
        }
    }

    #[test]
    fn reisner_agreement_on_simplicial_fans() {
        // coordinate-embedded simplicial complexes against a brute-force
        // link-homology Reisner oracle
        let complexes: Vec<Vec<Vec<u32>>> = vec![
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],          // hollow triangle
            vec![vec![0, 1, 2]],                               // solid triangle
            vec![vec![0, 1], vec![2, 3]],                      // two disjoint edges
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]], // square circle
            crate::homology::tests::projective_plane_facets(),
        ];
        for facets in complexes {
            let n = 1 + facets.iter().flatten().copied().max().unwrap() as usize;
            let f = coordinate_fan(n, &facets);
            for field in [q(), Field::Prime(2)] {
                let ours = is_cohen_macaulay(&f, field).cohen_macaulay;
                let oracle = reisner_oracle(n, &facets, field);
                assert_eq!(ours, oracle, "facets {facets:?} over {field}");
            }
        }
    }

    pub(crate) fn coordinate_fan(vertices: usize, facets: &[Vec<u32>]) -> Fan {
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

    /// Reisner's criterion checked directly on the simplicial complex:
    /// every link (including the link of the empty face) has vanishing
    /// reduced homology below its dimension.
    fn reisner_oracle(vertices: usize, facets: &[Vec<u32>], field: Field) -> bool {
        use crate::homology::SimplicialComplex;
        let complex = SimplicialComplex::from_maximal(vertices, facets);
        let dim = complex.dim();
        let mut all_faces: Vec<Vec<u32>> = vec![Vec::new()];
        for k in 0..=dim.max(-1) {
            if k >= 0 {
                all_faces.extend(complex.faces_of_dim(k as usize).iter().cloned());
            }
        }
        for face in &all_faces {
            let link: Vec<Vec<u32>> = link_of(facets, face);
            let link_complex = SimplicialComplex::from_maximal(vertices, &link);
            let h = link_complex.reduced_cohomology(field);
            let link_dim = dim - face.len() as i64;
            for degree in -1..link_dim {
                if h.dim_at(degree) != 0 {
                    return false;
                }
            }
        }
        true
    }

    fn link_of(facets: &[Vec<u32>], face: &[u32]) -> Vec<Vec<u32>> {
        facets
            .iter()
            .filter(|f| face.iter().all(|v| f.contains(v)))
            .map(|f| f.iter().copied().filter(|v| !face.contains(v)).collect())
            .collect()
    }
}
