use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bott::DimensionTable;
use crate::error::{Error, Result};
use crate::koszul::{HintRecord, MapPosition};

use super::{Claim, ExternalConstant};

/// Where a number in a report came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Source {
    Computed { by: String },
    External { constant: String, provenance: String },
    Arithmetic { expression: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quantity {
    pub key: String,
    pub label: String,
    #[serde(with = "crate::bigint_serde")]
    pub value: BigInt,
    pub source: Source,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Eq,
    Gt,
    Ge,
    Lt,
    Le,
}

impl Relation {
    pub fn holds(self, lhs: &BigInt, rhs: &BigInt) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Gt => lhs > rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Le => lhs <= rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Eq => "=",
            Relation::Gt => ">",
            Relation::Ge => "≥",
            Relation::Lt => "<",
            Relation::Le => "≤",
        })
    }
}

/// An integer identity or inequality; `lhs_expr`/`rhs_expr` spell out the arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub key: String,
    pub description: String,
    pub lhs_expr: String,
    #[serde(with = "crate::bigint_serde")]
    pub lhs: BigInt,
    pub relation: Relation,
    pub rhs_expr: String,
    #[serde(with = "crate::bigint_serde")]
    pub rhs: BigInt,
    pub passed: bool,
}

impl Check {
    /// `35 + 1 = 14 + 22 (36 = 36)`, dropping the parenthetical when redundant.
    pub fn statement(&self) -> String {
        let bare = format!("{} {} {}", self.lhs_expr, self.relation, self.rhs_expr);
        let values = format!("{} {} {}", self.lhs, self.relation, self.rhs);
        if bare == values {
            bare
        } else {
            format!("{bare} ({values})")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub bundle: String,
    pub canonical: String,
    pub e_labels: String,
    pub cohomology: DimensionTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub index: usize,
    pub bundle: String,
    pub e_labels: String,
    pub cohomology: DimensionTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChaseRecord {
    pub twist: String,
    pub bundle: String,
    /// Highest exterior degree first, as the complex is written.
    pub terms: Vec<TermRecord>,
    pub hints_used: Vec<HintRecord>,
    pub restriction: Option<DimensionTable>,
    pub blocking_positions: Vec<MapPosition>,
}

impl ChaseRecord {
    pub fn acyclic_terms(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .terms
            .iter()
            .filter(|t| t.cohomology.is_zero())
            .map(|t| t.index)
            .collect();
        out.sort_unstable();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityReport {
    pub name: String,
    pub subject: String,
    pub quantities: Vec<Quantity>,
    pub decompositions: Vec<Decomposition>,
    pub chases: Vec<ChaseRecord>,
    pub checks: Vec<Check>,
    pub external_inputs: Vec<ExternalConstant>,
    pub non_claims: Vec<String>,
    pub conclusion: String,
}

impl RigidityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn quantity(&self, key: &str) -> Option<&BigInt> {
        self.quantities.iter().find(|q| q.key == key).map(|q| &q.value)
    }

    pub fn check(&self, key: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.key == key)
    }

    pub fn chase(&self, twist: &str) -> Option<&ChaseRecord> {
        self.chases.iter().find(|c| c.twist == twist)
    }
}

/// Accumulates a report; external constants are only reachable through
/// [`ReportBuilder::external`], which refuses constants without provenance.
pub(crate) struct ReportBuilder {
    report: RigidityReport,
    constants: BTreeMap<String, ExternalConstant>,
}

impl ReportBuilder {
    pub fn new(name: &str, subject: &str, constants: &[ExternalConstant]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for c in constants {
            if c.provenance.trim().is_empty() {
                return Err(Error::Scenario(format!(
                    "external constant {:?} has no provenance",
                    c.name
                )));
            }
            if map.insert(c.name.clone(), c.clone()).is_some() {
                return Err(Error::Scenario(format!(
                    "external constant {:?} declared twice",
                    c.name
                )));
            }
        }
        Ok(ReportBuilder {
            report: RigidityReport {
                name: name.to_string(),
                subject: subject.to_string(),
                quantities: Vec::new(),
                decompositions: Vec::new(),
                chases: Vec::new(),
                checks: Vec::new(),
                external_inputs: Vec::new(),
                non_claims: Vec::new(),
                conclusion: String::new(),
            },
            constants: map,
        })
    }

    pub fn external(&mut self, name: &str, key: &str, label: &str) -> Result<BigInt> {
        let c = self
            .constants
            .get(name)
            .ok_or_else(|| Error::Scenario(format!("missing external constant {name:?}")))?
            .clone();
        let value = BigInt::from(c.value);
        self.report.quantities.push(Quantity {
            key: key.to_string(),
            label: label.to_string(),
            value: value.clone(),
            source: Source::External {
                constant: c.name.clone(),
                provenance: c.provenance.clone(),
            },
        });
        if !self.report.external_inputs.contains(&c) {
            self.report.external_inputs.push(c);
        }
        Ok(value)
    }

    pub fn computed(&mut self, key: &str, label: &str, value: impl Into<BigInt>, by: &str) -> BigInt {
        self.push(key, label, value.into(), Source::Computed { by: by.to_string() })
    }

    pub fn arithmetic(&mut self, key: &str, label: &str, value: impl Into<BigInt>, expression: String) -> BigInt {
        self.push(key, label, value.into(), Source::Arithmetic { expression })
    }

    /// A key already present with the same value is not repeated.
    fn push(&mut self, key: &str, label: &str, value: BigInt, source: Source) -> BigInt {
        if let Some(existing) = self.report.quantity(key) {
            assert_eq!(existing, &value, "quantity {key} recomputed with a different value");
            return value;
        }
        self.report.quantities.push(Quantity {
            key: key.to_string(),
            label: label.to_string(),
            value: value.clone(),
            source,
        });
        value
    }

    #[allow(clippy::too_many_arguments)]
    pub fn check(
        &mut self,
        key: &str,
        description: &str,
        lhs_expr: impl Into<String>,
        lhs: impl Into<BigInt>,
        relation: Relation,
        rhs_expr: impl Into<String>,
        rhs: impl Into<BigInt>,
    ) -> bool {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let passed = relation.holds(&lhs, &rhs);
        self.report.checks.push(Check {
            key: key.to_string(),
            description: description.to_string(),
            lhs_expr: lhs_expr.into(),
            lhs,
            relation,
            rhs_expr: rhs_expr.into(),
            rhs,
            passed,
        });
        passed
    }

    /// Checks a computed quantity against a literal claim.
    pub fn claim(
        &mut self,
        key: &str,
        description: &str,
        value: &BigInt,
        relation: Relation,
        expected: impl Into<BigInt>,
    ) -> bool {
        let expected = expected.into();
        self.check(
            key,
            description,
            value.to_string(),
            value.clone(),
            relation,
            expected.to_string(),
            expected,
        )
    }

    pub fn value(&self, key: &str) -> Option<&BigInt> {
        self.report.quantity(key)
    }

    pub fn claims(&mut self, claims: &[Claim]) -> Result<()> {
        for c in claims {
            let value = self
                .value(&c.quantity)
                .cloned()
                .ok_or_else(|| Error::Scenario(format!("claim refers to unknown quantity {:?}", c.quantity)))?;
            let description = if c.description.is_empty() {
                &c.quantity
            } else {
                &c.description
            };
            self.claim(
                &format!("claim:{}", c.quantity),
                description,
                &value,
                c.relation,
                c.value,
            );
        }
        Ok(())
    }

    pub fn decomposition(&mut self, d: Decomposition) {
        self.report.decompositions.push(d);
    }

    pub fn chase(&mut self, c: ChaseRecord) {
        self.report.chases.push(c);
    }

    pub fn non_claim(&mut self, text: &str) {
        self.report.non_claims.push(text.to_string());
    }

    pub fn finish(mut self, success: &str, failure: &str) -> RigidityReport {
        self.report.conclusion = if self.report.passed() { success } else { failure }.to_string();
        self.report
    }
}
