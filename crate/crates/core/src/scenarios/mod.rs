//! Declarative scenarios and the reports they produce.
//!
//! A scenario is a JSON document with a `kind` tag. Every number a report uses
//! is either computed by the engines, derived by stated arithmetic, or an
//! external constant carrying a provenance string; reports refuse constants
//! without one.

mod audit;
mod koszul;
mod report;

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bott::ParabolicSpace;
use crate::error::{Error, Result};
use crate::root_system::{RootSystem, Weight};
use crate::schur::{parse_bundle, BundleSum};

pub use audit::{run_adjunction, run_automorphism_audit, run_vmrt_audit};
pub use koszul::{chase_twist, run_local_rigidity};
pub use report::{ChaseRecord, Check, Decomposition, Quantity, Relation, RigidityReport, Source, TermRecord};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scenario {
    pub name: String,
    #[serde(default)]
    pub description: String,
    /// Structural facts taken from the literature; reported as non-claims.
    #[serde(default)]
    pub assumptions: Vec<String>,
    #[serde(default)]
    pub external_constants: Vec<ExternalConstant>,
    /// Literal claims checked against report quantities by key.
    #[serde(default)]
    pub claims: Vec<Claim>,
    #[serde(flatten)]
    pub body: ScenarioBody,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ScenarioBody {
    LocalRigidity(KoszulScenario),
    VmrtAudit(VmrtScenario),
    AutomorphismAudit(AutomorphismScenario),
    Adjunction(AdjunctionScenario),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExternalConstant {
    pub name: String,
    pub value: i64,
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub quantity: String,
    pub relation: Relation,
    pub value: i64,
    #[serde(default)]
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
}

impl GroupSpec {
    pub fn root_system(&self) -> Result<RootSystem> {
        RootSystem::parse(&self.kind, self.rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceSpec {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    pub crossed: BTreeSet<usize>,
}

impl SpaceSpec {
    pub fn space(&self) -> Result<ParabolicSpace> {
        ParabolicSpace::new(RootSystem::parse(&self.kind, self.rank)?, self.crossed.iter().copied())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistSpec {
    pub name: String,
    pub bundle: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioHint {
    pub twist: String,
    pub term: usize,
    pub degree: usize,
    pub rank: i64,
}

/// `Λ^power(of)`, or `of` itself when `power` is absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionSpec {
    pub of: String,
    #[serde(default)]
    pub power: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulScenario {
    pub ambient: SpaceSpec,
    pub section_bundle: String,
    #[serde(default)]
    pub twists: Vec<TwistSpec>,
    #[serde(default)]
    pub rank_hints: Vec<ScenarioHint>,
    #[serde(default)]
    pub decompositions: Vec<DecompositionSpec>,
    /// External constant holding `h^0(S, T_S)`; enables the restriction sequence.
    #[serde(default)]
    pub tangent_sections_constant: Option<String>,
    /// Group whose Lie algebra dimension should match that constant.
    #[serde(default)]
    pub automorphism_group: Option<GroupSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedSpace {
    pub label: String,
    pub space: SpaceSpec,
}

/// A homogeneous space together with the G-module of its minimal embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddedSpace {
    pub label: String,
    pub space: SpaceSpec,
    pub module: Vec<i64>,
}

impl EmbeddedSpace {
    pub fn module_weight(&self) -> Weight {
        Weight::new(self.module.clone())
    }
}

/// `G/H` with `G^θ ⊂ H ⊂ N_G(G^θ)`; only the identity components enter dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricSpace {
    pub group: String,
    pub fixed: String,
    pub g: GroupSpec,
    pub h: GroupSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VmrtCase {
    pub key: String,
    pub symmetric_space: SymmetricSpace,
    pub hyperplane_section_of: NamedSpace,
    pub ambient_vmrt: EmbeddedSpace,
    pub vmrt: EmbeddedSpace,
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VmrtScenario {
    #[serde(default)]
    pub homogeneous_spaces: Vec<NamedSpace>,
    pub cases: Vec<VmrtCase>,
}

/// `aut(Ĉ) ≅ reductive ⊕ C^center`, with the total dimension as an external constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeAutomorphisms {
    pub constant: String,
    pub reductive: GroupSpec,
    pub center: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismCase {
    pub key: String,
    pub symmetric_space: SymmetricSpace,
    pub aut_cone: ConeAutomorphisms,
    pub prolongation_constant: String,
    pub h1_constant: String,
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismScenario {
    pub cases: Vec<AutomorphismCase>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionScenario {
    pub ambient: SpaceSpec,
    pub section_bundle: String,
    pub picard_generator_constant: String,
}

/// File name and contents of every shipped scenario.
pub const SHIPPED: [(&str, &str); 4] = [
    ("cayley.json", include_str!("../../scenarios/cayley.json")),
    ("vmrt_audit.json", include_str!("../../scenarios/vmrt_audit.json")),
    (
        "theorem1_audit.json",
        include_str!("../../scenarios/theorem1_audit.json"),
    ),
    ("adjunction.json", include_str!("../../scenarios/adjunction.json")),
];

/// Report names accepted by [`run_named`], with the scenario file each one runs.
pub const REPORTS: [(&str, &str); 4] = [
    ("cayley", "cayley.json"),
    ("vmrt", "vmrt_audit.json"),
    ("theorem1", "theorem1_audit.json"),
    ("adjunction", "adjunction.json"),
];

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Scenario(format!("invalid scenario: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Scenario(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// A shipped scenario by file name (`cayley.json`) or stem (`cayley`).
    pub fn shipped(name: &str) -> Result<Self> {
        SHIPPED
            .iter()
            .find(|(file, _)| *file == name || file.strip_suffix(".json") == Some(name))
            .map(|(_, text)| Self::from_json(text))
            .unwrap_or_else(|| Err(Error::Scenario(format!("no shipped scenario named {name:?}"))))
    }

    pub fn run(&self) -> Result<RigidityReport> {
        let mut report = match &self.body {
            ScenarioBody::LocalRigidity(body) => run_local_rigidity(self, body),
            ScenarioBody::VmrtAudit(body) => run_vmrt_audit(self, body),
            ScenarioBody::AutomorphismAudit(body) => run_automorphism_audit(self, body),
            ScenarioBody::Adjunction(body) => run_adjunction(self, body),
        }?;
        report.non_claims.splice(0..0, self.assumptions.iter().cloned());
        Ok(report)
    }
}

pub fn run_named(report: &str) -> Result<RigidityReport> {
    let file = REPORTS
        .iter()
        .find(|(name, _)| *name == report)
        .map(|(_, file)| *file)
        .ok_or_else(|| {
            let names: Vec<&str> = REPORTS.iter().map(|(n, _)| *n).collect();
            Error::Scenario(format!(
                "unknown report {report:?}; expected one of {}",
                names.join(", ")
            ))
        })?;
    Scenario::shipped(file)?.run()
}

pub fn run_cayley() -> Result<RigidityReport> {
    run_named("cayley")
}

pub fn run_vmrt() -> Result<RigidityReport> {
    run_named("vmrt")
}

pub fn run_theorem1_audit() -> Result<RigidityReport> {
    run_named("theorem1")
}

pub fn run_adjunction_audit() -> Result<RigidityReport> {
    run_named("adjunction")
}

pub(crate) fn grassmannian_bundle(space: &ParabolicSpace, text: &str) -> Result<BundleSum> {
    let (k, n) = space
        .as_grassmannian()
        .ok_or_else(|| Error::Scenario(format!("{} is not a Grassmannian; bundles need Gr(k, n)", space.name())))?;
    parse_bundle(text, k, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_scenarios_parse() {
        for (file, _) in SHIPPED {
            let s = Scenario::shipped(file).unwrap();
            assert!(!s.name.is_empty());
            assert!(
                s.external_constants.iter().all(|c| !c.provenance.trim().is_empty()),
                "{file}"
            );
        }
        assert!(Scenario::shipped("nope").is_err());
        assert!(run_named("nope").is_err());
    }

    #[test]
    fn missing_provenance_fails_closed() {
        let mut s = Scenario::shipped("cayley").unwrap();
        s.external_constants[0].provenance.clear();
        assert!(matches!(s.run(), Err(Error::Scenario(_))));
    }

    #[test]
    fn round_trip() {
        let s = Scenario::shipped("vmrt_audit").unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(Scenario::from_json(&text).unwrap(), s);
    }
}
