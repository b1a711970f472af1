//! Borel–Weil–Bott for irreducible equivariant bundles `E_ω` on `G/P`.
//!
//! Convention: `H^{ℓ(w)}(G/P, E_ω) = V(w(ω+ρ)-ρ)^*`. Reported weights are the
//! highest weights of the cohomology as a G-representation, i.e. after the
//! dual has been taken; the weight before dualising is kept alongside.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{CartanType, Dominantization, RootSystem, Weight};

/// `G/P` for the parabolic whose Levi lives on the uncrossed nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicSpace {
    rs: RootSystem,
    crossed: BTreeSet<usize>,
}

impl ParabolicSpace {
    pub fn new(rs: RootSystem, crossed: impl IntoIterator<Item = usize>) -> Result<Self> {
        let crossed: BTreeSet<usize> = crossed.into_iter().collect();
        rs.homogeneous_dimension(&crossed)?;
        Ok(ParabolicSpace { rs, crossed })
    }

    /// `Gr(k, n) = A_{n-1}/P_k`.
    pub fn grassmannian(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidGrassmannian { k, n });
        }
        Self::new(RootSystem::new(CartanType::A, n - 1)?, [k])
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn crossed(&self) -> &BTreeSet<usize> {
        &self.crossed
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn name(&self) -> String {
        let nodes: Vec<String> = self.crossed.iter().map(|n| n.to_string()).collect();
        format!("{}/P{}", self.rs.name(), nodes.join(","))
    }

    /// `(k, n)` when this is a Grassmannian `A_{n-1}/P_k`.
    pub fn as_grassmannian(&self) -> Option<(usize, usize)> {
        match (self.rs.kind(), self.crossed.len()) {
            (CartanType::A, 1) => Some((*self.crossed.first()?, self.rs.rank() + 1)),
            _ => None,
        }
    }

    pub fn dimension(&self) -> usize {
        self.rs
            .homogeneous_dimension(&self.crossed)
            .expect("crossed set validated at construction")
    }

    pub fn check_parabolic_dominant(&self, w: &Weight) -> Result<()> {
        self.rs.check_rank(w)?;
        let bad = (1..=self.rank())
            .filter(|n| !self.crossed.contains(n))
            .find(|&n| w.coeffs()[n - 1] < 0);
        match bad {
            Some(node) => Err(Error::NotParabolicDominant {
                node,
                value: w.coeffs()[node - 1],
            }),
            None => Ok(()),
        }
    }

    /// Rank of `E_ω`.
    pub fn bundle_rank(&self, w: &Weight) -> Result<BigInt> {
        self.rs.levi_dimension(&self.crossed, w)
    }

    /// Weight of the canonical bundle: minus the sum of the roots off the Levi.
    pub fn canonical_weight(&self) -> Weight {
        -&self
            .rs
            .nilradical_weight(&self.crossed)
            .expect("crossed set validated at construction")
    }

    /// Highest weight of `E_ω^*`: `-w0_L(ω)`, found by pushing ω to the
    /// Levi-antidominant chamber with Levi reflections.
    pub fn dual_bundle_weight(&self, w: &Weight) -> Result<Weight> {
        self.check_parabolic_dominant(w)?;
        let mut x = w.clone();
        loop {
            let next = (0..self.rank()).find(|&i| !self.crossed.contains(&(i + 1)) && x.coeffs()[i] > 0);
            match next {
                Some(i) => x = self.rs.reflect(&x, i),
                None => return Ok(-&x),
            }
        }
    }
}

impl fmt::Display for ParabolicSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum BwbResult {
    AllVanish,
    Cohomology {
        degree: usize,
        /// Highest weight of the cohomology group as a G-representation.
        weight: Weight,
        /// `w(ω+ρ)-ρ`, whose dual is `weight`.
        pre_dual_weight: Weight,
        #[serde(with = "crate::bigint_serde")]
        dimension: BigInt,
    },
}

impl BwbResult {
    pub fn is_vanishing(&self) -> bool {
        matches!(self, BwbResult::AllVanish)
    }

    pub fn dimension_in(&self, degree: usize) -> BigInt {
        match self {
            BwbResult::Cohomology {
                degree: d, dimension, ..
            } if *d == degree => dimension.clone(),
            _ => BigInt::zero(),
        }
    }
}

pub fn bwb(space: &ParabolicSpace, omega: &Weight) -> Result<BwbResult> {
    space.check_parabolic_dominant(omega)?;
    let rs = space.root_system();
    let shifted = omega + &rs.rho();
    match rs.dominantize(&shifted)? {
        Dominantization::Singular => Ok(BwbResult::AllVanish),
        Dominantization::Regular { length, dominant } => {
            let pre_dual_weight = &dominant - &rs.rho();
            let weight = rs.dual_weight(&pre_dual_weight)?;
            let dimension = rs.weyl_dimension(&weight)?;
            Ok(BwbResult::Cohomology {
                degree: length,
                weight,
                pre_dual_weight,
                dimension,
            })
        }
    }
}

/// Dimensions of cohomology groups by degree; absent degrees are zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimensionTable(#[serde(with = "crate::bigint_serde::map")] BTreeMap<usize, BigInt>);

impl DimensionTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, BigInt)>) -> Self {
        let mut t = Self::new();
        for (d, v) in pairs {
            t.add(d, &v);
        }
        t
    }

    pub fn get(&self, degree: usize) -> BigInt {
        self.0.get(&degree).cloned().unwrap_or_default()
    }

    pub fn add(&mut self, degree: usize, value: &BigInt) {
        let entry = self.0.entry(degree).or_default();
        *entry += value;
        if entry.is_zero() {
            self.0.remove(&degree);
        }
    }

    pub fn set(&mut self, degree: usize, value: BigInt) {
        if value.is_zero() {
            self.0.remove(&degree);
        } else {
            self.0.insert(degree, value);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.0.iter().map(|(d, v)| (*d, v))
    }

    pub fn euler_characteristic(&self) -> BigInt {
        self.0
            .iter()
            .map(|(d, v)| if d % 2 == 0 { v.clone() } else { -v })
            .sum()
    }

    pub fn has_negative(&self) -> bool {
        self.0.values().any(|v| v.is_negative())
    }
}

impl fmt::Display for DimensionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("{}");
        }
        let parts: Vec<String> = self.0.iter().map(|(d, v)| format!("H^{d}: {v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Cohomology of a direct sum of irreducible bundles, as G-representations.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyTable {
    entries: BTreeMap<usize, BTreeMap<Weight, u64>>,
    total_dims: DimensionTable,
}

impl CohomologyTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `multiplicity` copies of the irreducible `V(weight)` of dimension
    /// `dimension` in the given degree.
    pub fn insert(&mut self, degree: usize, weight: Weight, multiplicity: u64, dimension: &BigInt) {
        if multiplicity == 0 {
            return;
        }
        *self.entries.entry(degree).or_default().entry(weight).or_default() += multiplicity;
        self.total_dims.add(degree, &(dimension * multiplicity));
    }

    pub fn entries(&self) -> &BTreeMap<usize, BTreeMap<Weight, u64>> {
        &self.entries
    }

    pub fn dims(&self) -> &DimensionTable {
        &self.total_dims
    }

    pub fn total_dim(&self, degree: usize) -> BigInt {
        self.total_dims.get(degree)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn euler_characteristic(&self) -> BigInt {
        self.total_dims.euler_characteristic()
    }

    /// Recomputes every total from the entries with the Weyl dimension formula.
    pub fn verify(&self, rs: &RootSystem) -> Result<bool> {
        for (degree, reps) in &self.entries {
            let mut total = BigInt::zero();
            for (w, m) in reps {
                total += rs.weyl_dimension(w)? * *m;
            }
            if total != self.total_dims.get(*degree) {
                return Ok(false);
            }
        }
        Ok(self.total_dims.iter().all(|(d, _)| self.entries.contains_key(&d)))
    }
}

pub fn euler_characteristic(table: &CohomologyTable) -> BigInt {
    table.euler_characteristic()
}

pub fn bundle_cohomology(space: &ParabolicSpace, summands: &[(Weight, u64)]) -> Result<CohomologyTable> {
    let mut table = CohomologyTable::new();
    for (omega, multiplicity) in summands {
        if let BwbResult::Cohomology {
            degree,
            weight,
            dimension,
            ..
        } = bwb(space, omega)?
        {
            table.insert(degree, weight, *multiplicity, &dimension);
        }
    }
    Ok(table)
}
