//! Shellability, semishellability and cleanness of fans.
//!
//! A shelling orders the facets so that each facet meets the union of the
//! earlier ones in a nonempty prefix of some shelling of its own boundary
//! fan; the definition recurses into boundary fans, and so does the search.
//! Semishellings only ask each intersection to realize a ball or sphere of
//! the right dimension. Cleanness strengthens shellability by lattice
//! witnesses gamma_j whose stars describe the new cones of each step.
//!
//! All searches are exhaustive backtracking with a node budget; verdicts
//! are three-valued (yes / no / unknown) so a truncated search is never
//! reported as a refutation.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::Result;
use crate::fan::{ConeId, Fan};
use crate::field::Field;
use crate::geometry::{LatticeBox, LatticeVector};
use crate::ring::{
    canonical_ideal_subfan, gorenstein_check, is_cohen_macaulay, omega_hilbert, CanonicalIdeal,
    GorensteinOutcome,
};

/// Node budget for the backtracking searches.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, Serialize)]
pub struct ShellingStep {
    /// Shelling D_1..D_t of the boundary fan of the j-th facet.
    pub boundary_order: Vec<ConeId>,
    /// Prefix length r_j: the first r_j boundary facets close up to the
    /// intersection with the earlier facets.
    pub prefix_len: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShellingCertificate {
    pub facet_order: Vec<ConeId>,
    /// Per-step data for positions j = 2..s.
    pub steps: Vec<ShellingStep>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "verdict")]
pub enum ShellingVerdict {
    Shellable(ShellingCertificate),
    NotShellable,
    /// The node budget ran out before the search was exhaustive.
    Unknown,
}

impl ShellingVerdict {
    pub fn certificate(&self) -> Option<&ShellingCertificate> {
        match self {
            ShellingVerdict::Shellable(c) => Some(c),
            _ => None,
        }
    }
}

enum Search<T> {
    Found(T),
    Exhausted,
    Aborted,
}

#[derive(Clone)]
enum Memo {
    Found(ShellingCertificate),
    Exhausted,
}

struct ShellSearcher<'a> {
    fan: &'a Fan,
    budget: u64,
    memo: HashMap<(Vec<usize>, Option<Vec<usize>>), Memo>,
}

impl<'a> ShellSearcher<'a> {
    fn new(fan: &'a Fan, budget: u64) -> Self {
        ShellSearcher {
            fan,
            budget,
            memo: HashMap::new(),
        }
    }

    fn spend(&mut self) -> bool {
        if self.budget == 0 {
            return false;
        }
        self.budget -= 1;
        true
    }

    fn region_facets(&self, region: &BTreeSet<ConeId>) -> Vec<ConeId> {
        region
            .iter()
            .copied()
            .filter(|&c| {
                !region
                    .iter()
                    .any(|&d| d != c && self.fan.face_ids(d).contains(&c))
            })
            .collect()
    }

    fn region_dim(&self, region: &BTreeSet<ConeId>) -> usize {
        region
            .iter()
            .map(|&c| self.fan.cone(c).dim())
            .max()
            .unwrap_or(0)
    }

    /// Validates facet `next` at position j >= 2 after `covered`: the
    /// intersection with the covered subfan must be a pure union of
    /// boundary facets of `next` realizable as a shelling prefix. Returns
    /// the step data, None when the step is impossible, or Aborted.
    fn validate_step(
        &mut self,
        covered: &BTreeSet<ConeId>,
        next: ConeId,
    ) -> Search<Option<ShellingStep>> {
        let pi: BTreeSet<ConeId> = covered
            .intersection(self.fan.face_ids(next))
            .copied()
            .collect();
        debug_assert!(!pi.is_empty(), "fans share at least the zero cone");
        let boundary_dim = self.fan.cone(next).dim().wrapping_sub(1);
        let prefix = self.region_facets(&pi);
        if prefix
            .iter()
            .any(|&d| self.fan.cone(d).dim() != boundary_dim)
        {
            return Search::Found(None);
        }
        let mut boundary = self.fan.face_ids(next).clone();
        boundary.remove(&next);
        let prefix_set: BTreeSet<ConeId> = prefix.iter().copied().collect();
        match self.search_one(&boundary, Some(&prefix_set)) {
            Search::Found(cert) => Search::Found(Some(ShellingStep {
                prefix_len: prefix_set.len(),
                boundary_order: cert.facet_order,
            })),
            Search::Exhausted => Search::Found(None),
            Search::Aborted => Search::Aborted,
        }
    }

    /// First shelling of the face-closed region, optionally constrained to
    /// start with exactly the facets in `prefix` (in some order).
    fn search_one(
        &mut self,
        region: &BTreeSet<ConeId>,
        prefix: Option<&BTreeSet<ConeId>>,
    ) -> Search<ShellingCertificate> {
        let key = (
            region.iter().map(|c| c.0).collect::<Vec<_>>(),
            prefix.map(|p| p.iter().map(|c| c.0).collect::<Vec<_>>()),
        );
        if let Some(hit) = self.memo.get(&key) {
            return match hit {
                Memo::Found(c) => Search::Found(c.clone()),
                Memo::Exhausted => Search::Exhausted,
            };
        }
        let result = self.search_uncached(region, prefix);
        match &result {
            Search::Found(c) => {
                self.memo.insert(key, Memo::Found(c.clone()));
            }
            Search::Exhausted => {
                self.memo.insert(key, Memo::Exhausted);
            }
            Search::Aborted => {}
        }
        result
    }

    fn search_uncached(
        &mut self,
        region: &BTreeSet<ConeId>,
        prefix: Option<&BTreeSet<ConeId>>,
    ) -> Search<ShellingCertificate> {
        let facets = self.region_facets(region);
        if self.region_dim(region) == 0 {
            let ok = prefix.is_none_or(|p| p.iter().all(|c| facets.contains(c)));
            return if ok {
                Search::Found(ShellingCertificate {
                    facet_order: facets,
                    steps: Vec::new(),
                })
            } else {
                Search::Exhausted
            };
        }
        let mut order = Vec::new();
        let mut steps = Vec::new();
        let mut covered = BTreeSet::new();
        self.place(&facets, prefix, &mut order, &mut steps, &mut covered, &mut |cert| {
            ControlFlow::Break(cert.clone())
        })
    }

    /// Depth-first placement shared by the single search and the full
    /// enumeration; `visit` sees every completed certificate.
    #[allow(clippy::too_many_arguments)]
    fn place(
        &mut self,
        facets: &[ConeId],
        prefix: Option<&BTreeSet<ConeId>>,
        order: &mut Vec<ConeId>,
        steps: &mut Vec<ShellingStep>,
        covered: &mut BTreeSet<ConeId>,
        visit: &mut dyn FnMut(&ShellingCertificate) -> ControlFlow<ShellingCertificate>,
    ) -> Search<ShellingCertificate> {
        if order.len() == facets.len() {
            let cert = ShellingCertificate {
                facet_order: order.clone(),
                steps: steps.clone(),
            };
            return match visit(&cert) {
                ControlFlow::Break(c) => Search::Found(c),
                ControlFlow::Continue(()) => Search::Exhausted,
            };
        }
        let mut aborted = false;
        let position = order.len() + 1;
        for &cand in facets {
            if order.contains(&cand) {
                continue;
            }
            if let Some(p) = prefix {
                let constrained = position <= p.len();
                if constrained != p.contains(&cand) {
                    continue;
                }
            }
            if !self.spend() {
                return Search::Aborted;
            }
            let step = if position == 1 {
                // the boundary fan of the first facet must itself shell
                let mut boundary = self.fan.face_ids(cand).clone();
                boundary.remove(&cand);
                match self.search_one(&boundary, None) {
                    Search::Found(_) => None,
                    Search::Exhausted => continue,
                    Search::Aborted => {
                        aborted = true;
                        continue;
                    }
                }
            } else {
                match self.validate_step(covered, cand) {
                    Search::Found(Some(step)) => Some(step),
                    Search::Found(None) => continue,
                    Search::Exhausted => unreachable!("validate_step wraps results in Found"),
                    Search::Aborted => {
                        aborted = true;
                        continue;
                    }
                }
            };
            order.push(cand);
            let added: Vec<ConeId> = self
                .fan
                .face_ids(cand)
                .iter()
                .copied()
                .filter(|f| covered.insert(*f))
                .collect();
            if let Some(s) = step {
                steps.push(s);
            }
            let result = self.place(facets, prefix, order, steps, covered, visit);
            if position > 1 {
                steps.pop();
            }
            for f in added {
                covered.remove(&f);
            }
            order.pop();
            match result {
                Search::Found(c) => return Search::Found(c),
                Search::Exhausted => {}
                Search::Aborted => aborted = true,
            }
        }
        if aborted {
            Search::Aborted
        } else {
            Search::Exhausted
        }
    }

    /// Enumerates every shelling of the whole fan in deterministic order.
    fn for_each_shelling(
        &mut self,
        visit: &mut dyn FnMut(&ShellingCertificate) -> ControlFlow<ShellingCertificate>,
    ) -> Search<ShellingCertificate> {
        let region: BTreeSet<ConeId> = self.fan.ids().collect();
        let facets = self.region_facets(&region);
        if self.region_dim(&region) == 0 {
            let cert = ShellingCertificate {
                facet_order: facets,
                steps: Vec::new(),
            };
            return match visit(&cert) {
                ControlFlow::Break(c) => Search::Found(c),
                ControlFlow::Continue(()) => Search::Exhausted,
            };
        }
        let mut order = Vec::new();
        let mut steps = Vec::new();
        let mut covered = BTreeSet::new();
        self.place(&facets, None, &mut order, &mut steps, &mut covered, visit)
    }
}

/// Backtracking search for a shelling; exact three-valued outcome.
pub fn shellability_search(fan: &Fan, budget: u64) -> ShellingVerdict {
    let mut searcher = ShellSearcher::new(fan, budget);
    match searcher.for_each_shelling(&mut |cert| ControlFlow::Break(cert.clone())) {
        Search::Found(cert) => ShellingVerdict::Shellable(cert),
        Search::Exhausted => ShellingVerdict::NotShellable,
        Search::Aborted => ShellingVerdict::Unknown,
    }
}

/// Homeomorphism types recognized for step intersections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ShapeKind {
    Ball,
    Sphere,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Confidence {
    /// Combinatorial classification, exact in realization dimension <= 1.
    Exact,
    /// Homology and pseudomanifold conditions only; necessary conditions,
    /// so rejections stay exact.
    HomologyOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RecognizedShape {
    pub kind: ShapeKind,
    pub dim: i64,
    pub confidence: Confidence,
}

#[derive(Clone, Debug, Serialize)]
pub struct SemishellingStep {
    pub intersection_ids: Vec<ConeId>,
    pub shape: RecognizedShape,
}

#[derive(Clone, Debug, Serialize)]
pub struct SemishellingCertificate {
    pub facet_order: Vec<ConeId>,
    pub steps: Vec<SemishellingStep>,
    pub confidence: Confidence,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "verdict")]
pub enum SemishellingVerdict {
    Semishellable(SemishellingCertificate),
    NotSemishellable,
    Unknown,
}

impl SemishellingVerdict {
    pub fn certificate(&self) -> Option<&SemishellingCertificate> {
        match self {
            SemishellingVerdict::Semishellable(c) => Some(c),
            _ => None,
        }
    }
}

/// Decides whether the support of the subfan is a ball or sphere of the
/// given dimension. Exact for target dimension <= 1; homology-based above.
/// `None` is an exact rejection: the conditions violated are necessary.
fn recognize_ball_sphere(fan: &Fan, ids: &BTreeSet<ConeId>, target_dim: i64) -> Option<RecognizedShape> {
    if target_dim < 0 {
        // the empty space is the (-1)-sphere; it arises exactly when the
        // intersection is the zero cone alone
        let only_zero = ids.len() == 1 && ids.contains(&fan.zero_id());
        return only_zero.then_some(RecognizedShape {
            kind: ShapeKind::Sphere,
            dim: -1,
            confidence: Confidence::Exact,
        });
    }
    let sub = fan.subfan(ids.clone());
    let cone_dim = (target_dim + 1) as usize;
    let maximal = sub.maximal_ids();
    if maximal.iter().any(|&c| fan.cone(c).dim() != cone_dim) {
        return None;
    }
    if target_dim == 0 {
        let rays = maximal.len();
        return match rays {
            1 => Some(RecognizedShape {
                kind: ShapeKind::Ball,
                dim: 0,
                confidence: Confidence::Exact,
            }),
            2 => Some(RecognizedShape {
                kind: ShapeKind::Sphere,
                dim: 0,
                confidence: Confidence::Exact,
            }),
            _ => None,
        };
    }
    if target_dim == 1 {
        return recognize_graph(fan, ids, &maximal);
    }

    // higher dimensions: pseudomanifold plus local and global homology
    let subfan = fan.subfan(ids.clone());
    let standalone = subfan.to_fan().ok()?;
    let rim_counts: Vec<usize> = standalone
        .ids()
        .filter(|&c| standalone.cone(c).dim() + 1 == cone_dim)
        .map(|c| {
            standalone
                .facet_ids()
                .iter()
                .filter(|&&f| standalone.face_ids(f).contains(&c))
                .count()
        })
        .collect();
    if rim_counts.iter().any(|&n| n > 2) {
        return None;
    }
    let boundary = standalone.boundary_subfan().ok()?;
    let field = Field::Rationals;
    let global = crate::homology::star_cohomology(&standalone, standalone.zero_id(), field);
    let mut interior_ok = true;
    for id in standalone.ids() {
        if id == standalone.zero_id() {
            continue;
        }
        let h = crate::homology::star_cohomology(&standalone, id, field);
        let t = h.dim_at(target_dim);
        let concentrated = h.support().iter().all(|&d| d == target_dim);
        let matches_boundary = (t == 0) == boundary.contains(id);
        if !(concentrated && t <= 1 && matches_boundary) {
            interior_ok = false;
            break;
        }
    }
    if !interior_ok {
        return None;
    }
    if boundary.is_empty() {
        let sphere_global = global.support() == vec![target_dim] && global.dim_at(target_dim) == 1;
        sphere_global.then_some(RecognizedShape {
            kind: ShapeKind::Sphere,
            dim: target_dim,
            confidence: Confidence::HomologyOnly,
        })
    } else {
        global.is_zero().then_some(RecognizedShape {
            kind: ShapeKind::Ball,
            dim: target_dim,
            confidence: Confidence::HomologyOnly,
        })
    }
}

/// Exact path/cycle classification of a one-dimensional cell structure:
/// vertices are the rays, edges the two-dimensional cones.
fn recognize_graph(
    fan: &Fan,
    ids: &BTreeSet<ConeId>,
    maximal: &[ConeId],
) -> Option<RecognizedShape> {
    let rays: Vec<ConeId> = ids
        .iter()
        .copied()
        .filter(|&c| fan.cone(c).dim() == 1)
        .collect();
    let edges: Vec<(usize, usize)> = maximal
        .iter()
        .map(|&e| {
            let ends: Vec<usize> = rays
                .iter()
                .enumerate()
                .filter(|(_, &r)| fan.is_face(r, e))
                .map(|(i, _)| i)
                .collect();
            debug_assert_eq!(ends.len(), 2, "a 2-cone has two extreme rays");
            (ends[0], ends[1])
        })
        .collect();
    let mut degree = vec![0usize; rays.len()];
    for &(a, b) in &edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    if degree.iter().any(|&d| d == 0 || d > 2) {
        return None;
    }
    // connectivity
    let mut seen = vec![false; rays.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in &edges {
            let next = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !seen[next] {
                seen[next] = true;
                stack.push(next);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return None;
    }
    let endpoints = degree.iter().filter(|&&d| d == 1).count();
    if endpoints == 2 && edges.len() + 1 == rays.len() {
        Some(RecognizedShape {
            kind: ShapeKind::Ball,
            dim: 1,
            confidence: Confidence::Exact,
        })
    } else if endpoints == 0 && edges.len() == rays.len() {
        Some(RecognizedShape {
            kind: ShapeKind::Sphere,
            dim: 1,
            confidence: Confidence::Exact,
        })
    } else {
        None
    }
}

fn semishelling_step(
    fan: &Fan,
    covered: &BTreeSet<ConeId>,
    next: ConeId,
) -> Option<SemishellingStep> {
    let pi: BTreeSet<ConeId> = covered
        .intersection(fan.face_ids(next))
        .copied()
        .collect();
    let target = fan.cone(next).dim() as i64 - 2;
    recognize_ball_sphere(fan, &pi, target).map(|shape| SemishellingStep {
        intersection_ids: pi.into_iter().collect(),
        shape,
    })
}

/// Checks a given facet order, or searches over all orders when none is
/// given. Rejections are exact; positive certificates carry the weakest
/// confidence among their steps.
pub fn semishellability_check(
    fan: &Fan,
    order: Option<&[ConeId]>,
    budget: u64,
) -> SemishellingVerdict {
    let facets: BTreeSet<ConeId> = fan.facet_ids().iter().copied().collect();
    if fan.dim() == 0 {
        return SemishellingVerdict::Semishellable(SemishellingCertificate {
            facet_order: facets.into_iter().collect(),
            steps: Vec::new(),
            confidence: Confidence::Exact,
        });
    }
    if let Some(order) = order {
        let given: BTreeSet<ConeId> = order.iter().copied().collect();
        if given != facets || order.len() != facets.len() {
            return SemishellingVerdict::NotSemishellable;
        }
        let mut covered: BTreeSet<ConeId> = BTreeSet::new();
        let mut steps = Vec::new();
        for (i, &c) in order.iter().enumerate() {
            if i > 0 {
                match semishelling_step(fan, &covered, c) {
                    Some(step) => steps.push(step),
                    None => return SemishellingVerdict::NotSemishellable,
                }
            }
            covered.extend(fan.face_ids(c).iter().copied());
        }
        let confidence = steps
            .iter()
            .map(|s| s.shape.confidence)
            .max()
            .unwrap_or(Confidence::Exact);
        return SemishellingVerdict::Semishellable(SemishellingCertificate {
            facet_order: order.to_vec(),
            steps,
            confidence,
        });
    }

    let facet_list: Vec<ConeId> = facets.iter().copied().collect();
    let mut order = Vec::new();
    let mut steps = Vec::new();
    let mut covered = BTreeSet::new();
    let mut budget = budget;
    match semishell_dfs(fan, &facet_list, &mut order, &mut steps, &mut covered, &mut budget) {
        Search::Found(cert) => SemishellingVerdict::Semishellable(cert),
        Search::Exhausted => SemishellingVerdict::NotSemishellable,
        Search::Aborted => SemishellingVerdict::Unknown,
    }
}

fn semishell_dfs(
    fan: &Fan,
    facets: &[ConeId],
    order: &mut Vec<ConeId>,
    steps: &mut Vec<SemishellingStep>,
    covered: &mut BTreeSet<ConeId>,
    budget: &mut u64,
) -> Search<SemishellingCertificate> {
    if order.len() == facets.len() {
        let confidence = steps
            .iter()
            .map(|s| s.shape.confidence)
            .max()
            .unwrap_or(Confidence::Exact);
        return Search::Found(SemishellingCertificate {
            facet_order: order.clone(),
            steps: steps.clone(),
            confidence,
        });
    }
    let mut aborted = false;
    for &cand in facets {
        if order.contains(&cand) {
            continue;
        }
        if *budget == 0 {
            return Search::Aborted;
        }
        *budget -= 1;
        let step = if order.is_empty() {
            None
        } else {
            match semishelling_step(fan, covered, cand) {
                Some(s) => Some(s),
                None => continue,
            }
        };
        order.push(cand);
        let added: Vec<ConeId> = fan
            .face_ids(cand)
            .iter()
            .copied()
            .filter(|f| covered.insert(*f))
            .collect();
        if let Some(s) = step {
            steps.push(s);
        }
        let result = semishell_dfs(fan, facets, order, steps, covered, budget);
        if order.len() > 1 {
            steps.pop();
        }
        for f in added {
            covered.remove(&f);
        }
        order.pop();
        match result {
            Search::Found(c) => return Search::Found(c),
            Search::Exhausted => {}
            Search::Aborted => aborted = true,
        }
    }
    if aborted {
        Search::Aborted
    } else {
        Search::Exhausted
    }
}

/// Pure semishellable fans have Cohen-Macaulay rings over every field; a
/// `false` under an exact-confidence certificate signals a bug.
pub fn semishellable_implies_cm_check(
    fan: &Fan,
    certificate: &SemishellingCertificate,
    field: Field,
) -> bool {
    debug_assert!(fan.is_pure());
    debug_assert_eq!(certificate.facet_order.len(), fan.facet_ids().len());
    is_cohen_macaulay(fan, field).cohen_macaulay
}

#[derive(Clone, Debug, Serialize)]
pub struct StepIdealEntry {
    /// Step position j in 2..=s.
    pub position: usize,
    pub intersection_ids: Vec<ConeId>,
    pub cohen_macaulay: bool,
    pub canonical: Option<CanonicalIdeal>,
    /// For an ideal verdict: the omega Hilbert slice equals the indicator
    /// of (support minus subfan support) on the window.
    pub omega_support_consistent: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StepIdealReport {
    pub steps: Vec<StepIdealEntry>,
}

/// For each semishelling step, analyzes the intersection subfan as a
/// standalone fan: its ring must be Cohen-Macaulay with canonical module
/// either the ring itself or a graded ideal.
pub fn step_ideal_report(
    fan: &Fan,
    certificate: &SemishellingCertificate,
    field: Field,
    window: &LatticeBox,
) -> Result<StepIdealReport> {
    let mut steps = Vec::new();
    for (offset, step) in certificate.steps.iter().enumerate() {
        let ids: BTreeSet<ConeId> = step.intersection_ids.iter().copied().collect();
        let sub = fan.subfan(ids.clone());
        let standalone = sub.to_fan()?;
        let cm = is_cohen_macaulay(&standalone, field).cohen_macaulay;
        let canonical = if cm {
            Some(canonical_ideal_subfan(&standalone, field)?)
        } else {
            None
        };
        let omega_support_consistent = match &canonical {
            Some(CanonicalIdeal::IdealSubfan { cone_ids }) => {
                let inner: BTreeSet<ConeId> = cone_ids.iter().copied().collect();
                let inner_sub = standalone.subfan(inner);
                let omega = omega_hilbert(&standalone, field, window)?;
                let mut consistent = true;
                for p in window.points(standalone.ambient_dim()) {
                    let a = LatticeVector::from_i64(&p);
                    let expected =
                        usize::from(standalone.supports(&a) && !inner_sub.supports(&a));
                    if omega.value(&a) != expected {
                        consistent = false;
                        break;
                    }
                }
                Some(consistent)
            }
            _ => None,
        };
        steps.push(StepIdealEntry {
            position: offset + 2,
            intersection_ids: step.intersection_ids.clone(),
            cohen_macaulay: cm,
            canonical,
            omega_support_consistent,
        });
    }
    Ok(StepIdealReport { steps })
}

#[derive(Clone, Debug, Serialize)]
pub struct CleanWitness {
    pub shelling: ShellingCertificate,
    /// gamma_j for j = 2..s, matching the facet order of the shelling.
    pub gammas: Vec<LatticeVector>,
    pub box_radius: u32,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "verdict")]
pub enum CleannessVerdict {
    Clean(CleanWitness),
    /// No shelling admits lattice witnesses within the window.
    NotClean { box_radius: u32 },
    Unknown,
}

impl CleannessVerdict {
    pub fn witness(&self) -> Option<&CleanWitness> {
        match self {
            CleannessVerdict::Clean(w) => Some(w),
            _ => None,
        }
    }
}

/// Cleanness test: searches the shellings of the fan for one where every
/// step j >= 2 admits gamma_j in C_j whose star within fan(C_j) is exactly
/// the set of new cones (checked exactly, through the face containing
/// gamma_j in its relative interior) and whose shifted lattice points cover
/// the star's relative interiors (checked on the window).
pub fn cleanness_check(fan: &Fan, window: &LatticeBox, budget: u64) -> CleannessVerdict {
    let mut gamma_cache: BTreeMap<(ConeId, Vec<ConeId>), Option<LatticeVector>> = BTreeMap::new();
    let mut witness: Option<CleanWitness> = None;
    let mut searcher = ShellSearcher::new(fan, budget);
    let outcome = searcher.for_each_shelling(&mut |cert| {
        let mut covered: BTreeSet<ConeId> = BTreeSet::new();
        let mut gammas = Vec::new();
        for (i, &facet) in cert.facet_order.iter().enumerate() {
            if i > 0 {
                let pi: Vec<ConeId> = covered
                    .intersection(fan.face_ids(facet))
                    .copied()
                    .collect();
                let key = (facet, pi);
                let gamma = gamma_cache
                    .entry(key)
                    .or_insert_with_key(|(facet, pi)| find_gamma(fan, *facet, pi, window))
                    .clone();
                match gamma {
                    Some(g) => gammas.push(g),
                    None => return ControlFlow::Continue(()),
                }
            }
            covered.extend(fan.face_ids(facet).iter().copied());
        }
        witness = Some(CleanWitness {
            shelling: cert.clone(),
            gammas,
            box_radius: window.radius(),
        });
        ControlFlow::Break(cert.clone())
    });
    match (witness, outcome) {
        (Some(w), _) => CleannessVerdict::Clean(w),
        (None, Search::Exhausted) => CleannessVerdict::NotClean {
            box_radius: window.radius(),
        },
        (None, _) => CleannessVerdict::Unknown,
    }
}

/// Search for gamma within one step: over the faces F of the facet whose
/// star in fan(facet) is exactly the complement of the earlier cones, then
/// over relative interior lattice points of F in graded-lex order.
fn find_gamma(
    fan: &Fan,
    facet: ConeId,
    pi: &[ConeId],
    window: &LatticeBox,
) -> Option<LatticeVector> {
    let cone_faces = fan.face_ids(facet);
    let pi_set: BTreeSet<ConeId> = pi.iter().copied().collect();
    let target: BTreeSet<ConeId> = cone_faces
        .iter()
        .copied()
        .filter(|c| !pi_set.contains(c))
        .collect();
    for &candidate_face in cone_faces {
        // condition (a) depends only on the face whose relative interior
        // holds gamma: its star within fan(facet) must be the new cones
        let star_within: BTreeSet<ConeId> = cone_faces
            .iter()
            .copied()
            .filter(|&d| fan.is_face(candidate_face, d))
            .collect();
        if star_within != target {
            continue;
        }
        let mut points = fan
            .cone(candidate_face)
            .lattice_points(window, true);
        points.sort_by(|a, b| {
            a.l1_norm()
                .cmp(&b.l1_norm())
                .then_with(|| a.cmp(b))
        });
        let facet_cone = fan.cone(facet);
        'gamma: for gamma in points {
            // condition (b): relative interiors over the star of gamma
            // cover exactly gamma + (facet lattice points), on the window
            for p in window.points(fan.ambient_dim()) {
                let a = LatticeVector::from_i64(&p);
                let lhs = facet_cone.contains_i64(&p)
                    && fan
                        .relint_cone_of_i64(&p)
                        .is_some_and(|d| fan.is_face(candidate_face, d));
                let rhs = facet_cone.contains(&a.sub(&gamma));
                if lhs != rhs {
                    continue 'gamma;
                }
            }
            return Some(gamma);
        }
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct OmegaStepReport {
    /// Step position j in 2..=s.
    pub position: usize,
    pub omega_ids: Vec<ConeId>,
    pub gorenstein: Option<GorensteinOutcome>,
    /// Whether the boundary of Omega_j equals Omega_j intersected with the
    /// earlier-facet union, as the supporting theory predicts.
    pub lambda_matches_boundary: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CleanConsequenceReport {
    pub steps: Vec<OmegaStepReport>,
}

/// For a clean witness: each step's leftover boundary fan Omega_j (the
/// boundary facets after the prefix) is empty or Gorenstein, and its
/// combinatorial boundary is Omega_j intersected with the step
/// intersection.
pub fn clean_consequence_check(
    fan: &Fan,
    witness: &CleanWitness,
    field: Field,
    window: &LatticeBox,
) -> Result<CleanConsequenceReport> {
    let order = &witness.shelling.facet_order;
    let mut covered: BTreeSet<ConeId> = fan.face_ids(order[0]).clone();
    let mut steps = Vec::new();
    for (offset, step) in witness.shelling.steps.iter().enumerate() {
        let facet = order[offset + 1];
        let omega_ids: BTreeSet<ConeId> = step.boundary_order[step.prefix_len..]
            .iter()
            .flat_map(|&d| fan.face_ids(d).iter().copied())
            .collect();
        if omega_ids.is_empty() {
            steps.push(OmegaStepReport {
                position: offset + 2,
                omega_ids: Vec::new(),
                gorenstein: None,
                lambda_matches_boundary: None,
            });
        } else {
            let omega = fan.subfan(omega_ids.clone());
            let standalone = omega.to_fan()?;
            let outcome = gorenstein_check(&standalone, field, window);

            let pi: BTreeSet<ConeId> = covered
                .intersection(fan.face_ids(facet))
                .copied()
                .collect();
            let lambda: BTreeSet<ConeId> =
                omega_ids.intersection(&pi).copied().collect();
            let boundary = standalone.boundary_subfan()?;
            let boundary_parent: BTreeSet<ConeId> = boundary
                .ids()
                .iter()
                .map(|&id| omega.parent_id(&standalone, id))
                .collect();
            steps.push(OmegaStepReport {
                position: offset + 2,
                omega_ids: omega_ids.into_iter().collect(),
                gorenstein: Some(outcome),
                lambda_matches_boundary: Some(lambda == boundary_parent),
            });
        }
        covered.extend(fan.face_ids(facet).iter().copied());
    }
    Ok(CleanConsequenceReport { steps })
}
