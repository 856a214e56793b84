//! Command dispatch shared by the `toric-fan` binary and tests.

use serde::Serialize;

use crate::document::FanDocument;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::LatticeBox;
use crate::homology::CohomologyProfile;
use crate::report::{
    ConeCohomology, FanSummary, FieldReport, LocalCohomologyReport, ReportDocument,
    StructureReport,
};
use crate::ring::{
    canonical_ideal_subfan_with, cm_verdict, cross_validate_via_join, gorenstein_check_with,
    local_cohomology_hilbert_with, manifold_boundary_duality_check, omega_hilbert_with,
    CanonicalIdeal,
};
use crate::shelling::{
    clean_consequence_check, cleanness_check, semishellability_check, shellability_search,
    step_ideal_report, CleannessVerdict, SemishellingVerdict, ShellingVerdict,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Validate,
    Analyze,
    Cohomology,
    Omega,
    LocalCohomology,
    Gorenstein,
    CanonicalIdeal,
    BoundaryDuality,
    Shelling,
    Semishelling,
    Clean,
    All,
}

impl CommandKind {
    pub fn name(&self) -> &'static str {
        match self {
            CommandKind::Validate => "validate",
            CommandKind::Analyze => "analyze",
            CommandKind::Cohomology => "cohomology",
            CommandKind::Omega => "omega",
            CommandKind::LocalCohomology => "localcoh",
            CommandKind::Gorenstein => "gorenstein",
            CommandKind::CanonicalIdeal => "canonical-ideal",
            CommandKind::BoundaryDuality => "boundary-duality",
            CommandKind::Shelling => "shelling",
            CommandKind::Semishelling => "semishelling",
            CommandKind::Clean => "clean",
            CommandKind::All => "all",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Request {
    pub command: CommandKind,
    pub fields: Vec<Field>,
    pub box_radius: u32,
    pub budget: u64,
    /// Local cohomology degree; defaults to the fan dimension.
    pub degree: Option<i64>,
}

/// Structured error object emitted on failure.
#[derive(Debug, Serialize)]
pub struct ErrorObject {
    pub error: String,
    pub kind: &'static str,
}

pub fn error_object(e: &Error) -> ErrorObject {
    let kind = match e {
        Error::DimensionMismatch { .. } => "dimension-mismatch",
        Error::NotPointed { .. } => "not-pointed",
        Error::NotAFan { .. } => "not-a-fan",
        Error::NotPure => "not-pure",
        Error::NotCohenMacaulay { .. } => "not-cohen-macaulay",
        Error::EmptyFan => "empty-fan",
        Error::NotPrime(_) => "not-prime",
        Error::DegreeOutOfRange { .. } => "degree-out-of-range",
        Error::BadJoinPoint { .. } => "bad-join-point",
        Error::Parse(_) => "parse-error",
    };
    ErrorObject {
        error: e.to_string(),
        kind,
    }
}

pub fn run(document: &FanDocument, request: &Request) -> Result<ReportDocument> {
    let fan = document.to_fan()?;
    let window = LatticeBox::new(request.box_radius)?;
    let mut report = ReportDocument {
        tool: format!("toric-fan {}", env!("CARGO_PKG_VERSION")),
        command: request.command.name().to_string(),
        fan: FanSummary::of(&fan, document.name.clone()),
        box_radius: request.box_radius,
        budget: request.budget,
        structure: None,
        per_field: Vec::new(),
        caveats: Vec::new(),
        unknown_present: false,
    };

    let wants = |kinds: &[CommandKind]| kinds.contains(&request.command);
    let analyze_like = wants(&[CommandKind::Analyze, CommandKind::All]);

    let mut structure = StructureReport::default();
    if analyze_like {
        structure.euler = Some(fan.euler_report());
    }
    if wants(&[CommandKind::Shelling, CommandKind::Clean, CommandKind::All]) {
        let verdict = shellability_search(&fan, request.budget);
        if matches!(verdict, ShellingVerdict::Unknown) {
            report.unknown_present = true;
        }
        structure.shelling = Some(verdict);
    }
    if wants(&[CommandKind::Semishelling, CommandKind::All]) {
        let verdict = semishellability_check(&fan, None, request.budget);
        if matches!(verdict, SemishellingVerdict::Unknown) {
            report.unknown_present = true;
        }
        if let Some(cert) = verdict.certificate() {
            if cert
                .steps
                .iter()
                .any(|s| s.shape.confidence == crate::shelling::Confidence::HomologyOnly)
            {
                report.caveats.push(
                    "some semishelling steps are recognized by homology only".to_string(),
                );
            }
        }
        structure.semishelling = Some(verdict);
    }
    if wants(&[CommandKind::Clean, CommandKind::All]) {
        let verdict = cleanness_check(&fan, &window, request.budget);
        match &verdict {
            CleannessVerdict::Unknown => report.unknown_present = true,
            CleannessVerdict::NotClean { box_radius } => report.caveats.push(format!(
                "cleanness refuted for witnesses within box [-{0}, {0}]^d only",
                box_radius
            )),
            CleannessVerdict::Clean(w) => report.caveats.push(format!(
                "clean witness condition (ii)(b) verified on box [-{0}, {0}]^d",
                w.box_radius
            )),
        }
        structure.cleanness = Some(verdict);
    }
    let has_structure = structure.euler.is_some()
        || structure.shelling.is_some()
        || structure.semishelling.is_some()
        || structure.cleanness.is_some();

    for &field in &request.fields {
        let mut fr = FieldReport::new(field);
        let profile = CohomologyProfile::compute(&fan, field);
        let cm = cm_verdict(&fan, &profile);

        if wants(&[CommandKind::Cohomology]) {
            fr.cohomology = Some(
                fan.ids()
                    .map(|id| ConeCohomology {
                        cone: id,
                        dims: profile.cone(id).clone(),
                    })
                    .collect(),
            );
            fr.cohen_macaulay = Some(cm.clone());
        }
        if analyze_like {
            fr.cohen_macaulay = Some(cm.clone());
        }
        if wants(&[CommandKind::Omega]) {
            fr.omega = Some(omega_hilbert_with(&fan, &profile, &window)?);
        }
        if wants(&[CommandKind::LocalCohomology]) {
            let degree = request.degree.unwrap_or(fan.dim() as i64);
            fr.local_cohomology = Some(LocalCohomologyReport {
                degree,
                slice: local_cohomology_hilbert_with(&fan, &profile, degree, &window)?,
            });
        }
        if wants(&[CommandKind::Gorenstein]) || analyze_like {
            let outcome = gorenstein_check_with(&fan, &profile, &window);
            if outcome.is_gorenstein() {
                report.caveats.push(format!(
                    "gorenstein support condition verified on box [-{0}, {0}]^d",
                    request.box_radius
                ));
            }
            fr.gorenstein = Some(outcome);
        }
        if wants(&[CommandKind::CanonicalIdeal]) {
            let canonical = canonical_ideal_subfan_with(&fan, &profile)?;
            if let CanonicalIdeal::IdealSubfan { cone_ids } = &canonical {
                let ids = cone_ids.iter().copied().collect();
                fr.join_check = Some(cross_validate_via_join(&fan, &ids, field)?);
            }
            fr.canonical_ideal = Some(canonical);
        } else if analyze_like && cm.cohen_macaulay {
            let canonical = canonical_ideal_subfan_with(&fan, &profile)?;
            if let CanonicalIdeal::IdealSubfan { cone_ids } = &canonical {
                let ids = cone_ids.iter().copied().collect();
                fr.join_check = Some(cross_validate_via_join(&fan, &ids, field)?);
            }
            fr.canonical_ideal = Some(canonical);
        }
        if wants(&[CommandKind::BoundaryDuality]) {
            fr.boundary_duality = Some(manifold_boundary_duality_check(&fan, field)?);
        }
        if wants(&[CommandKind::Semishelling, CommandKind::All]) {
            if let Some(StructureReport {
                semishelling: Some(SemishellingVerdict::Semishellable(cert)),
                ..
            }) = Some(&structure)
            {
                fr.step_ideals = Some(step_ideal_report(&fan, cert, field, &window)?);
            }
        }
        if wants(&[CommandKind::Clean, CommandKind::All]) {
            if let Some(CleannessVerdict::Clean(witness)) = &structure.cleanness {
                fr.clean_consequences =
                    Some(clean_consequence_check(&fan, witness, field, &window)?);
            }
        }
        if !fr.is_empty() {
            report.per_field.push(fr);
        }
    }
    if request.command == CommandKind::Validate {
        report.per_field.clear();
    }
    if has_structure {
        report.structure = Some(structure);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paper_document() -> FanDocument {
        FanDocument::parse(
            r#"{"name":"wedge","ambient_dim":2,
                "rays":[[0,1],[2,1],[-2,1]],
                "maximal_cones":[[0,1],[0,2]]}"#,
        )
        .unwrap()
    }

    fn request(command: CommandKind) -> Request {
        Request {
            command,
            fields: vec![Field::Rationals],
            box_radius: 4,
            budget: crate::shelling::DEFAULT_BUDGET,
            degree: None,
        }
    }

    #[test]
    fn validate_produces_a_summary() {
        let report = run(&paper_document(), &request(CommandKind::Validate)).unwrap();
        assert_eq!(report.fan.cone_count, 6);
        assert!(report.per_field.is_empty());
    }

    #[test]
    fn clean_command_reports_shelling_too() {
        let report = run(&paper_document(), &request(CommandKind::Clean)).unwrap();
        let structure = report.structure.unwrap();
        assert!(matches!(
            structure.shelling,
            Some(ShellingVerdict::Shellable(_))
        ));
        assert!(matches!(
            structure.cleanness,
            Some(CleannessVerdict::NotClean { .. })
        ));
    }

    #[test]
    fn reports_are_deterministic() {
        for kind in [CommandKind::Analyze, CommandKind::All, CommandKind::Omega] {
            let a = run(&paper_document(), &request(kind)).unwrap().to_json();
            let b = run(&paper_document(), &request(kind)).unwrap().to_json();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn omega_on_a_non_cm_fan_is_a_module_error() {
        let doc = FanDocument::parse(
            r#"{"ambient_dim":2,"rays":[[1,0],[0,1],[-1,0],[0,-1]],
                "maximal_cones":[[0,1],[2,3]]}"#,
        )
        .unwrap();
        let err = run(&doc, &request(CommandKind::Omega)).unwrap_err();
        assert!(matches!(err, Error::NotCohenMacaulay { .. }));
        assert_eq!(error_object(&err).kind, "not-cohen-macaulay");
    }

    #[test]
    fn analyze_handles_non_cm_fans_gracefully() {
        let doc = FanDocument::parse(
            r#"{"ambient_dim":2,"rays":[[1,0],[0,1],[-1,0],[0,-1]],
                "maximal_cones":[[0,1],[2,3]]}"#,
        )
        .unwrap();
        let report = run(&doc, &request(CommandKind::Analyze)).unwrap();
        let fr = &report.per_field[0];
        assert!(!fr.cohen_macaulay.as_ref().unwrap().cohen_macaulay);
        assert!(fr.canonical_ideal.is_none());
        assert!(!fr.gorenstein.as_ref().unwrap().is_gorenstein());
    }

    #[test]
    fn multiple_fields_run_side_by_side() {
        let mut req = request(CommandKind::Analyze);
        req.fields = vec![Field::Rationals, Field::Prime(2)];
        let report = run(&paper_document(), &req).unwrap();
        assert_eq!(report.per_field.len(), 2);
    }
}
