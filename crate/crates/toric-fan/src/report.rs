//! Machine-readable analysis reports and their human-readable rendering.
//!
//! Reports are deterministic: identical input and flags produce identical
//! JSON. Anything verified only on a lattice window carries a caveat
//! naming the radius.

use std::fmt::Write as _;

use serde::Serialize;

use crate::fan::{ConeId, EulerReport, Fan};
use crate::field::Field;
use crate::geometry::LatticeVector;
use crate::homology::DegreeVector;
use crate::ring::{
    CanonicalIdeal, CmVerdict, DualityReport, GorensteinOutcome, HilbertSlice, JoinValidation,
    NotGorensteinReason,
};
use crate::shelling::{
    CleanConsequenceReport, CleannessVerdict, Confidence, SemishellingVerdict, ShellingVerdict,
    StepIdealReport,
};

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub tool: String,
    pub command: String,
    pub fan: FanSummary,
    pub box_radius: u32,
    pub budget: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub per_field: Vec<FieldReport>,
    pub caveats: Vec<String>,
    pub unknown_present: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FanSummary {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub ambient_dim: usize,
    pub dim: usize,
    pub pure: bool,
    pub cone_count: usize,
    pub facet_count: usize,
    /// Number of cones of each dimension, from 0 to dim.
    pub f_vector: Vec<usize>,
    pub cones: Vec<ConeSummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConeSummary {
    pub id: ConeId,
    pub dim: usize,
    pub rays: Vec<LatticeVector>,
}

impl FanSummary {
    pub fn of(fan: &Fan, name: Option<String>) -> FanSummary {
        let mut f_vector = vec![0usize; fan.dim() + 1];
        for id in fan.ids() {
            f_vector[fan.cone(id).dim()] += 1;
        }
        FanSummary {
            name,
            ambient_dim: fan.ambient_dim(),
            dim: fan.dim(),
            pure: fan.is_pure(),
            cone_count: fan.len(),
            facet_count: fan.facet_ids().len(),
            f_vector,
            cones: fan
                .ids()
                .map(|id| ConeSummary {
                    id,
                    dim: fan.cone(id).dim(),
                    rays: fan.cone(id).generators().to_vec(),
                })
                .collect(),
        }
    }
}

/// Field-independent structure checks.
#[derive(Clone, Debug, Default, Serialize)]
pub struct StructureReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler: Option<EulerReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shelling: Option<ShellingVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semishelling: Option<SemishellingVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cleanness: Option<CleannessVerdict>,
}

/// Checks depending on the coefficient field.
#[derive(Clone, Debug, Serialize)]
pub struct FieldReport {
    pub field: Field,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cohen_macaulay: Option<CmVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<Vec<ConeCohomology>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<HilbertSlice>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub local_cohomology: Option<LocalCohomologyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gorenstein: Option<GorensteinOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canonical_ideal: Option<CanonicalIdeal>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub join_check: Option<JoinValidation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_duality: Option<DualityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub step_ideals: Option<StepIdealReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clean_consequences: Option<CleanConsequenceReport>,
}

impl FieldReport {
    pub fn new(field: Field) -> FieldReport {
        FieldReport {
            field,
            cohen_macaulay: None,
            cohomology: None,
            omega: None,
            local_cohomology: None,
            gorenstein: None,
            canonical_ideal: None,
            join_check: None,
            boundary_duality: None,
            step_ideals: None,
            clean_consequences: None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.cohen_macaulay.is_none()
            && self.cohomology.is_none()
            && self.omega.is_none()
            && self.local_cohomology.is_none()
            && self.gorenstein.is_none()
            && self.canonical_ideal.is_none()
            && self.join_check.is_none()
            && self.boundary_duality.is_none()
            && self.step_ideals.is_none()
            && self.clean_consequences.is_none()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConeCohomology {
    pub cone: ConeId,
    pub dims: DegreeVector,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalCohomologyReport {
    pub degree: i64,
    pub slice: HilbertSlice,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let name = self.fan.name.as_deref().unwrap_or("fan");
        let _ = writeln!(
            out,
            "{name}: {} cones in R^{}, dim {}, {} facet(s), {}",
            self.fan.cone_count,
            self.fan.ambient_dim,
            self.fan.dim,
            self.fan.facet_count,
            if self.fan.pure { "pure" } else { "not pure" },
        );
        let _ = writeln!(out, "f-vector by dim: {:?}", self.fan.f_vector);

        if let Some(structure) = &self.structure {
            if let Some(euler) = &structure.euler {
                if euler.is_euler {
                    let _ = writeln!(out, "euler: yes (all rho = {})", euler.target);
                } else {
                    let _ = writeln!(
                        out,
                        "euler: no ({} cone(s) with rho != {}{})",
                        euler.offenders.len(),
                        euler.target,
                        if euler.pure { "" } else { "; fan is not pure" },
                    );
                }
            }
            if let Some(verdict) = &structure.shelling {
                match verdict {
                    ShellingVerdict::Shellable(cert) => {
                        let order: Vec<String> =
                            cert.facet_order.iter().map(|c| c.to_string()).collect();
                        let _ = writeln!(out, "shellable: yes, order {}", order.join(" "));
                        for (i, step) in cert.steps.iter().enumerate() {
                            let bd: Vec<String> =
                                step.boundary_order.iter().map(|c| c.to_string()).collect();
                            let _ = writeln!(
                                out,
                                "  step {}: boundary shelling {} with prefix {}",
                                i + 2,
                                bd.join(" "),
                                step.prefix_len
                            );
                        }
                    }
                    ShellingVerdict::NotShellable => {
                        let _ = writeln!(out, "shellable: no (search exhausted)");
                    }
                    ShellingVerdict::Unknown => {
                        let _ = writeln!(out, "shellable: unknown (budget exhausted)");
                    }
                }
            }
            if let Some(verdict) = &structure.semishelling {
                match verdict {
                    SemishellingVerdict::Semishellable(cert) => {
                        let _ = writeln!(
                            out,
                            "semishellable: yes ({})",
                            match cert.confidence {
                                Confidence::Exact => "exact",
                                Confidence::HomologyOnly => "homology-level recognition",
                            }
                        );
                        for (i, step) in cert.steps.iter().enumerate() {
                            let _ = writeln!(
                                out,
                                "  step {}: {:?} of dim {} ({:?})",
                                i + 2,
                                step.shape.kind,
                                step.shape.dim,
                                step.shape.confidence
                            );
                        }
                    }
                    SemishellingVerdict::NotSemishellable => {
                        let _ = writeln!(out, "semishellable: no");
                    }
                    SemishellingVerdict::Unknown => {
                        let _ = writeln!(out, "semishellable: unknown (budget exhausted)");
                    }
                }
            }
            if let Some(verdict) = &structure.cleanness {
                match verdict {
                    CleannessVerdict::Clean(w) => {
                        let gammas: Vec<String> =
                            w.gammas.iter().map(|g| g.to_string()).collect();
                        let _ = writeln!(out, "clean: yes, gamma = [{}]", gammas.join(", "));
                    }
                    CleannessVerdict::NotClean { box_radius } => {
                        let _ = writeln!(
                            out,
                            "clean: no (all shellings and witnesses up to box {box_radius} exhausted)"
                        );
                    }
                    CleannessVerdict::Unknown => {
                        let _ = writeln!(out, "clean: unknown (budget exhausted)");
                    }
                }
            }
        }

        for field in &self.per_field {
            let _ = writeln!(out, "over {}:", field.field);
            if let Some(cm) = &field.cohen_macaulay {
                match &cm.witness {
                    None => {
                        let _ = writeln!(out, "  cohen-macaulay: yes");
                    }
                    Some(w) => {
                        let _ = writeln!(
                            out,
                            "  cohen-macaulay: no (cone {} has cohomology in degree {})",
                            w.cone, w.degree
                        );
                    }
                }
            }
            if let Some(cohomology) = &field.cohomology {
                for entry in cohomology {
                    let support = entry.dims.support();
                    if support.is_empty() {
                        let _ = writeln!(out, "  cone {}: acyclic", entry.cone);
                    } else {
                        let parts: Vec<String> = support
                            .iter()
                            .map(|&d| format!("H^{d} = {}", entry.dims.dim_at(d)))
                            .collect();
                        let _ = writeln!(out, "  cone {}: {}", entry.cone, parts.join(", "));
                    }
                }
            }
            if let Some(slice) = &field.omega {
                let _ = writeln!(
                    out,
                    "  omega hilbert slice (box {}): {} nonzero degree(s)",
                    slice.window.radius(),
                    slice.values.len()
                );
                for (point, dim) in &slice.values {
                    let _ = writeln!(out, "    {point} -> {dim}");
                }
            }
            if let Some(lc) = &field.local_cohomology {
                let _ = writeln!(
                    out,
                    "  local cohomology H^{} (box {}): {} nonzero degree(s)",
                    lc.degree,
                    lc.slice.window.radius(),
                    lc.slice.values.len()
                );
                for (point, dim) in &lc.slice.values {
                    let _ = writeln!(out, "    {point} -> {dim}");
                }
            }
            if let Some(outcome) = &field.gorenstein {
                match outcome {
                    GorensteinOutcome::Gorenstein(w) => {
                        let _ = writeln!(out, "  gorenstein: yes, sigma = {}", w.sigma);
                    }
                    GorensteinOutcome::NotGorenstein { reason } => match reason {
                        NotGorensteinReason::NotCohenMacaulay { .. } => {
                            let _ = writeln!(out, "  gorenstein: no (not cohen-macaulay)");
                        }
                        NotGorensteinReason::NoSigmaInBox { radius, rejected } => {
                            let _ = writeln!(
                                out,
                                "  gorenstein: no ({} candidate(s) rejected in box {radius})",
                                rejected.len()
                            );
                        }
                    },
                }
            }
            if let Some(canonical) = &field.canonical_ideal {
                match canonical {
                    CanonicalIdeal::EulerSelf => {
                        let _ = writeln!(out, "  canonical module: the ring itself (euler fan)");
                    }
                    CanonicalIdeal::IdealSubfan { cone_ids } => {
                        let ids: Vec<String> =
                            cone_ids.iter().map(|c| c.to_string()).collect();
                        let _ = writeln!(
                            out,
                            "  canonical module: radical ideal of subfan {{{}}}",
                            ids.join(", ")
                        );
                    }
                    CanonicalIdeal::NoGradedEmbedding { obstruction } => {
                        let _ = writeln!(
                            out,
                            "  canonical module: no graded ideal embedding ({obstruction:?})"
                        );
                    }
                }
            }
            if let Some(join) = &field.join_check {
                let _ = writeln!(
                    out,
                    "  join cross-check: {}",
                    if join.passed { "passed" } else { "FAILED" }
                );
            }
            if let Some(duality) = &field.boundary_duality {
                match duality {
                    DualityReport::NotApplicable => {
                        let _ = writeln!(out, "  boundary duality: not applicable (no boundary)");
                    }
                    DualityReport::Checked(d) => {
                        let _ = writeln!(
                            out,
                            "  boundary duality: manifold-like {}, boundary euler {}, boundary CM {}, canonical = boundary ideal {}, agreement {}",
                            d.manifold_like,
                            d.boundary_euler,
                            d.boundary_cohen_macaulay,
                            d.canonical_is_boundary_ideal,
                            d.agreement
                        );
                    }
                }
            }
            if let Some(steps) = &field.step_ideals {
                for step in &steps.steps {
                    let canonical = match &step.canonical {
                        None => "skipped (not CM)".to_string(),
                        Some(CanonicalIdeal::EulerSelf) => "omega = ring".to_string(),
                        Some(CanonicalIdeal::IdealSubfan { .. }) => "omega = ideal".to_string(),
                        Some(CanonicalIdeal::NoGradedEmbedding { .. }) => {
                            "NO EMBEDDING".to_string()
                        }
                    };
                    let _ = writeln!(
                        out,
                        "  step {} intersection: CM {}, {}",
                        step.position, step.cohen_macaulay, canonical
                    );
                }
            }
            if let Some(report) = &field.clean_consequences {
                for step in &report.steps {
                    if step.omega_ids.is_empty() {
                        let _ = writeln!(out, "  step {} leftover: empty", step.position);
                    } else {
                        let gorenstein = step
                            .gorenstein
                            .as_ref()
                            .map(GorensteinOutcome::is_gorenstein)
                            .unwrap_or(false);
                        let _ = writeln!(
                            out,
                            "  step {} leftover: gorenstein {}, boundary identity {}",
                            step.position,
                            gorenstein,
                            step.lambda_matches_boundary.unwrap_or(false)
                        );
                    }
                }
            }
        }

        for caveat in &self.caveats {
            let _ = writeln!(out, "note: {caveat}");
        }
        if self.unknown_present {
            let _ = writeln!(out, "note: some verdicts are unknown due to budget limits");
        }
        out
    }
}
