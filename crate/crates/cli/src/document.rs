use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use gpcoh::scenarios::ChaseRecord;
use gpcoh::{BwbResult, Partition, RigidityReport, Weight};

/// Bumped on any breaking change to the JSON layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    /// Arguments after the program name.
    pub command: Vec<String>,
    pub passed: bool,
    pub failures: Vec<Failure>,
    pub result: Payload,
    pub provenance: Vec<Provenance>,
}

impl ReportDocument {
    pub fn new(command: Vec<String>, result: Payload) -> Self {
        let failures = match &result {
            Payload::Report(r) => r
                .failures()
                .into_iter()
                .map(|c| Failure {
                    key: c.key.clone(),
                    statement: format!("{}: {}", c.description, c.statement()),
                })
                .collect(),
            Payload::Koszul(k) if k.chase.restriction.is_none() => k
                .chase
                .blocking_positions
                .iter()
                .map(|p| Failure {
                    key: "indeterminate".to_string(),
                    statement: format!("rank of {p} is not determined"),
                })
                .collect(),
            _ => Vec::new(),
        };
        let provenance = provenance_of(&result);
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            command,
            passed: failures.is_empty(),
            failures,
            result,
            provenance,
        }
    }
}

fn provenance_of(result: &Payload) -> Vec<Provenance> {
    let defaults = |chase: &ChaseRecord| -> Vec<Provenance> {
        chase
            .hints_used
            .iter()
            .map(|h| Provenance {
                item: format!("{} chase, {}", chase.twist, h.position),
                kind: ProvenanceKind::RankAssumption,
                note: format!("rank {} ({:?})", h.rank, h.origin),
            })
            .collect()
    };
    match result {
        Payload::Report(r) => r
            .external_inputs
            .iter()
            .map(|c| Provenance {
                item: format!("{} = {}", c.name, c.value),
                kind: ProvenanceKind::External,
                note: c.provenance.clone(),
            })
            .chain(r.chases.iter().flat_map(defaults))
            .collect(),
        Payload::Koszul(k) => defaults(&k.chase),
        _ => Vec::new(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub key: String,
    pub statement: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProvenanceKind {
    External,
    RankAssumption,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub item: String,
    pub kind: ProvenanceKind,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Roots(RootsPayload),
    Bwb(BwbPayload),
    Lr(LrPayload),
    Koszul(KoszulPayload),
    Report(RigidityReport),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsPayload {
    pub root_system: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub symmetrizer: Vec<i64>,
    /// Simple-root coordinates, by height.
    pub positive_roots: Vec<Vec<i64>>,
    pub positive_root_count: usize,
    pub highest_root: Vec<i64>,
    pub rho: Weight,
    pub lie_algebra_dimension: usize,
    #[serde(with = "gpcoh::bigint_serde")]
    pub weyl_group_order: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BwbPayload {
    pub space: String,
    pub weight: Weight,
    pub e_label: String,
    #[serde(with = "gpcoh::bigint_serde")]
    pub bundle_rank: BigInt,
    pub cohomology: BwbResult,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrTerm {
    pub partition: Partition,
    pub coefficient: u64,
    /// Dimension of the GL(rows) module.
    #[serde(with = "gpcoh::bigint_serde")]
    pub dimension: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrPayload {
    pub mu: Partition,
    pub nu: Partition,
    pub rows: usize,
    pub terms: Vec<LrTerm>,
    #[serde(with = "gpcoh::bigint_serde")]
    pub dimension_mu: BigInt,
    #[serde(with = "gpcoh::bigint_serde")]
    pub dimension_nu: BigInt,
    /// `Σ c^λ dim V_λ`, equal to `dim V_μ · dim V_ν` when nothing is truncated.
    #[serde(with = "gpcoh::bigint_serde")]
    pub dimension_sum: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulPayload {
    pub scenario: String,
    pub section_bundle: String,
    pub chase: ChaseRecord,
}
