//! Cohomology of homogeneous bundles on rational homogeneous spaces.
//!
//! Root systems and Weyl group actions ([`root_system`]), Borel–Weil–Bott
//! ([`bott`]), Schur functor calculus on Grassmannians ([`schur`]), Koszul
//! complexes of zero loci ([`koszul`]) and the scenario reports built on them
//! ([`scenarios`]).

pub mod bigint_serde;
pub mod bott;
pub mod error;
pub mod koszul;
pub mod root_system;
pub mod scenarios;
pub mod schur;

pub use bott::{bundle_cohomology, bwb, BwbResult, CohomologyTable, DimensionTable, ParabolicSpace};
pub use error::{Error, Result};
pub use koszul::{
    build_koszul, chase, chase_with, restriction_sequence, ChasePage, ChasePolicy, ChaseResult, HintOrigin, HintRecord,
    KoszulComplex, MapPosition, RankHint,
};
pub use root_system::{CartanType, Dominantization, ReflectionOrder, RootSystem, Weight};
pub use scenarios::{
    run_adjunction_audit, run_cayley, run_named, run_theorem1_audit, run_vmrt, RigidityReport, Scenario,
};
pub use schur::{exterior_power, lr_coefficients, parse_bundle, tensor, BundleLabel, BundleSum, Partition};
