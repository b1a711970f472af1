use num_bigint::BigInt;
use num_traits::One;

use crate::bott::ParabolicSpace;
use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::schur::{exterior_power_sum, BundleLabel};

use super::report::{Relation, ReportBuilder, RigidityReport};
use super::{
    grassmannian_bundle, AdjunctionScenario, AutomorphismScenario, GroupSpec, Scenario, SymmetricSpace, VmrtScenario,
};

fn homogeneous(b: &mut ReportBuilder, label: &str, space: &ParabolicSpace) -> BigInt {
    b.computed(
        &format!("dim({})", space.name()),
        &format!("dim {label} = dim {}", space.name()),
        space.dimension(),
        "root_system",
    )
}

fn lie_algebra(b: &mut ReportBuilder, group: &GroupSpec) -> Result<(RootSystem, BigInt)> {
    let rs = group.root_system()?;
    let dim = b.computed(
        &format!("dim_lie({})", rs.name()),
        &format!("dim of the Lie algebra of type {}", rs.name()),
        rs.lie_algebra_dimension(),
        "root_system",
    );
    Ok((rs, dim))
}

/// `dim G/H = dim g - dim h`.
fn symmetric(b: &mut ReportBuilder, key: &str, s: &SymmetricSpace) -> Result<(BigInt, BigInt)> {
    let (_, g) = lie_algebra(b, &s.g)?;
    let (_, h) = lie_algebra(b, &s.h)?;
    let dim = b.arithmetic(
        &format!("dim({key})"),
        &format!("dim {}/{}", s.group, s.fixed),
        &g - &h,
        format!("{g} - {h}"),
    );
    Ok((g, dim))
}

fn module_dimension(b: &mut ReportBuilder, rs: &RootSystem, weight: &crate::root_system::Weight) -> Result<BigInt> {
    let dim = rs.weyl_dimension(weight)?;
    Ok(b.computed(
        &format!("dim_module({};{})", rs.name(), weight.omega_string()),
        &format!("dim V_{}({})", rs.name(), weight.omega_string()),
        dim,
        "weyl_dimension",
    ))
}

fn require_provenance(what: &str, provenance: &str) -> Result<()> {
    if provenance.trim().is_empty() {
        return Err(Error::Scenario(format!("{what} has no provenance")));
    }
    Ok(())
}

/// Dimension ledger for the VMRTs of hyperplane sections of Hermitian symmetric spaces.
pub fn run_vmrt_audit(scenario: &Scenario, body: &VmrtScenario) -> Result<RigidityReport> {
    let mut b = ReportBuilder::new(&scenario.name, &scenario.description, &scenario.external_constants)?;
    for named in &body.homogeneous_spaces {
        homogeneous(&mut b, &named.label, &named.space.space()?);
    }
    for case in &body.cases {
        require_provenance(&format!("case {:?}", case.key), &case.provenance)?;
        let key = &case.key;
        let (_, dim_s) = symmetric(&mut b, key, &case.symmetric_space)?;

        let big = case.hyperplane_section_of.space.space()?;
        let dim_big = homogeneous(&mut b, &case.hyperplane_section_of.label, &big);
        b.check(
            &format!("{key}.hyperplane_section"),
            &format!("S is a hyperplane section of {}", case.hyperplane_section_of.label),
            format!("{dim_big} - 1"),
            &dim_big - 1,
            Relation::Eq,
            format!("dim {key}"),
            dim_s.clone(),
        );

        let amb = case.ambient_vmrt.space.space()?;
        let dim_amb = homogeneous(&mut b, &case.ambient_vmrt.label, &amb);
        let amb_module = module_dimension(&mut b, amb.root_system(), &case.ambient_vmrt.module_weight())?;
        b.check(
            &format!("{key}.ambient_vmrt_in_tangent"),
            &format!(
                "{} spans P(T) of {}",
                case.ambient_vmrt.label, case.hyperplane_section_of.label
            ),
            format!("dim V = {amb_module}"),
            amb_module.clone(),
            Relation::Eq,
            format!("dim {}", big.name()),
            dim_big.clone(),
        );

        let vmrt = case.vmrt.space.space()?;
        let dim_vmrt = homogeneous(&mut b, &case.vmrt.label, &vmrt);
        b.check(
            &format!("{key}.vmrt_hyperplane_section"),
            &format!(
                "{} is a hyperplane section of {}",
                case.vmrt.label, case.ambient_vmrt.label
            ),
            format!("{dim_amb} - 1"),
            &dim_amb - 1,
            Relation::Eq,
            format!("dim {}", vmrt.name()),
            dim_vmrt.clone(),
        );

        let vmrt_module = module_dimension(&mut b, vmrt.root_system(), &case.vmrt.module_weight())?;
        let projective = b.arithmetic(
            &format!("{key}.vmrt_projective_dim"),
            &format!("N with {} ⊂ P^N", case.vmrt.label),
            &vmrt_module - 1,
            format!("{vmrt_module} - 1"),
        );
        b.check(
            &format!("{key}.vmrt_linear_span"),
            &format!("P^N is a hyperplane in P(V_{})", amb.root_system().name()),
            format!("{amb_module} - 2"),
            &amb_module - 2,
            Relation::Eq,
            format!("{vmrt_module} - 1"),
            projective.clone(),
        );
        b.check(
            &format!("{key}.vmrt_in_tangent"),
            "the VMRT spans P(T_s S)",
            format!("{projective} + 1"),
            &projective + 1,
            Relation::Eq,
            format!("dim {key}"),
            dim_s.clone(),
        );

        // Integer dimensions: dim C > dim S / 2 - 1 iff dim C > ⌊(dim S - 2) / 2⌋.
        let bound = (&dim_s - 2) / 2;
        let bound_expr = if (&dim_s % 2u32) == BigInt::from(0) {
            format!("{dim_s}/2 - 1")
        } else {
            format!("⌊{dim_s}/2 - 1⌋")
        };
        b.check(
            &format!("{key}.vmrt_inequality"),
            &format!("dim {} > dim {key} / 2 - 1", case.vmrt.label),
            dim_vmrt.to_string(),
            dim_vmrt,
            Relation::Gt,
            bound_expr,
            bound,
        );
    }
    b.claims(&scenario.claims)?;
    Ok(b.finish(
        "All VMRT dimension relations hold.",
        "Some VMRT dimension relations fail.",
    ))
}

/// `dim aut(S) + 1 = dim S + dim aut(Ĉ)` and the resulting bound on `h^1` of
/// a degeneration's central fibre.
pub fn run_automorphism_audit(scenario: &Scenario, body: &AutomorphismScenario) -> Result<RigidityReport> {
    let mut b = ReportBuilder::new(&scenario.name, &scenario.description, &scenario.external_constants)?;
    for case in &body.cases {
        require_provenance(&format!("case {:?}", case.key), &case.provenance)?;
        let key = &case.key;
        let (dim_g, dim_s) = symmetric(&mut b, key, &case.symmetric_space)?;
        let aut_s = b.arithmetic(
            &format!("{key}.dim_aut_S"),
            &format!("dim aut(S) = dim Lie({})", case.symmetric_space.group),
            dim_g.clone(),
            format!("{dim_g}"),
        );

        let cone = &case.aut_cone;
        let aut_cone = b.external(&cone.constant, &format!("{key}.dim_aut_cone"), "dim aut(Ĉ_s)")?;
        let (red_rs, reductive) = lie_algebra(&mut b, &cone.reductive)?;
        b.check(
            &format!("{key}.aut_cone_split"),
            &format!("aut(Ĉ_s) ≅ Lie({}) ⊕ C^{}", red_rs.name(), cone.center),
            aut_cone.to_string(),
            aut_cone.clone(),
            Relation::Eq,
            format!("{reductive} + {}", cone.center),
            &reductive + cone.center,
        );
        let prolongation = b.external(
            &case.prolongation_constant,
            &format!("{key}.dim_prolongation"),
            "dim aut(Ĉ_s)^(1)",
        )?;
        b.check(
            &format!("{key}.prolongation_vanishes"),
            "first prolongation of aut(Ĉ_s) vanishes",
            prolongation.to_string(),
            prolongation,
            Relation::Eq,
            "0",
            0,
        );
        let lhs = &aut_s + 1;
        let rhs = &dim_s + &aut_cone;
        b.check(
            &format!("{key}.aut_equality"),
            "dim aut(S) + 1 = dim S + dim aut(Ĉ_s)",
            format!("{aut_s} + 1"),
            lhs,
            Relation::Eq,
            format!("{dim_s} + {aut_cone}"),
            rhs.clone(),
        );

        // h^0(X_0) ≤ dim aut(C, x) ≤ dim X_0 + dim aut(Ĉ_x) = dim S + dim aut(Ĉ_s).
        let h0_max = b.arithmetic(
            &format!("{key}.h0_X0_max"),
            "upper bound for h^0(X_0, T_X0)",
            rhs.clone(),
            format!("{dim_s} + {aut_cone}"),
        );
        let h0_s = b.arithmetic(
            &format!("{key}.h0_S"),
            "h^0(S, T_S) = dim aut(S)",
            aut_s.clone(),
            format!("{aut_s}"),
        );
        let h1_s = b.external(&case.h1_constant, &format!("{key}.h1_S"), "h^1(S, T_S)")?;
        // χ(T) is constant in the family and h^i = 0 for i ≥ 2 on Fano manifolds.
        b.arithmetic(
            &format!("{key}.h1_bound"),
            "upper bound for h^1(X_0, T_X0) = h^0(X_0) - h^0(S) + h^1(S)",
            &h0_max - &h0_s + &h1_s,
            format!("{h0_max} - {h0_s} + {h1_s}"),
        );
    }
    b.non_claim(
        "Global rigidity (degenerations over the unit disc) is not computed; only its integer ledger is checked.",
    );
    b.non_claim(
        "Dimensions of aut(Ĉ_s) and the vanishing of its prolongations come from the classification of \
         prolongations of cone structures and are external inputs.",
    );
    b.claims(&scenario.claims)?;
    Ok(b.finish(
        "The automorphism ledger balances and h^1 of a central fibre is at most 1.",
        "The automorphism ledger does not balance.",
    ))
}

/// `K_S = K_X ⊗ det E` for the zero locus `S` of a section of `E`.
pub fn run_adjunction(scenario: &Scenario, body: &AdjunctionScenario) -> Result<RigidityReport> {
    let space = body.ambient.space()?;
    let (k, n) = space
        .as_grassmannian()
        .ok_or_else(|| Error::Scenario(format!("{} is not a Grassmannian", space.name())))?;
    let section = grassmannian_bundle(&space, &body.section_bundle)?;
    let mut b = ReportBuilder::new(&scenario.name, &scenario.description, &scenario.external_constants)?;

    let dim_x = homogeneous(&mut b, &format!("Gr({k},{n})"), &space);
    let canonical = BundleLabel::from_weight(&space, &space.canonical_weight())?;
    if !canonical.is_line_bundle() {
        return Err(Error::Scenario(format!("K_X = {canonical} is not a line bundle")));
    }
    let k_x = b.computed("twist_K_X", "K_X = O(t)", canonical.twist(), "root_system");
    let index_x = b.arithmetic("index_X", "index of X", -&k_x, format!("-({k_x})"));
    b.check(
        "grassmannian_index",
        "the index of Gr(k, n) is n",
        index_x.to_string(),
        index_x.clone(),
        Relation::Eq,
        "n",
        n,
    );

    let rank = usize::try_from(section.rank()?)
        .map_err(|_| Error::Scenario("section bundle rank does not fit".to_string()))?;
    let rank_e = b.computed("rank_E", &format!("rank {section}"), rank, "schur_calculus");
    let det = exterior_power_sum(&section, rank)?;
    let det_label = det
        .single()
        .filter(|l| l.is_line_bundle())
        .ok_or_else(|| Error::Scenario(format!("det E = {det} is not a line bundle")))?;
    let det_twist = b.computed("twist_det_E", "det E = O(t)", det_label.twist(), "schur_calculus");

    let k_s = b.arithmetic(
        "twist_K_S",
        "K_S = O(t)",
        &k_x + &det_twist,
        format!("{k_x} + {det_twist}"),
    );
    let dim_s = b.arithmetic("dim_S", "dim S", &dim_x - &rank_e, format!("{dim_x} - {rank_e}"));
    let generator = b.external(
        &body.picard_generator_constant,
        "pic_generator",
        "O_S(t) generating Pic(S)",
    )?;
    if generator <= BigInt::from(0) {
        return Err(Error::Scenario(
            "the Picard generator twist must be positive".to_string(),
        ));
    }
    let fano = b.check(
        "fano",
        "-K_S is ample",
        format!("-({k_s})"),
        -&k_s,
        Relation::Gt,
        "0",
        0,
    );
    let index = -&k_s / &generator;
    let divisible = (&k_s % &generator) == BigInt::from(0);
    b.check(
        "index_integral",
        "K_S is a multiple of the Picard generator",
        format!("{k_s} mod {generator}"),
        if divisible { BigInt::from(0) } else { BigInt::one() },
        Relation::Eq,
        "0",
        0,
    );
    b.arithmetic(
        "index_S",
        "index of S",
        index.clone(),
        format!("-({k_s}) / {generator}"),
    );
    b.claims(&scenario.claims)?;
    let summary = format!("S is a Fano {} of index {index}.", n_fold(&dim_s));
    Ok(if fano {
        b.finish(&summary, "The adjunction ledger fails.")
    } else {
        b.finish("S is not Fano.", "The adjunction ledger fails.")
    })
}

fn n_fold(dim: &BigInt) -> String {
    const WORDS: [&str; 12] = [
        "curve",
        "surface",
        "threefold",
        "fourfold",
        "fivefold",
        "sixfold",
        "sevenfold",
        "eightfold",
        "ninefold",
        "tenfold",
        "elevenfold",
        "twelvefold",
    ];
    usize::try_from(dim)
        .ok()
        .and_then(|d| d.checked_sub(1))
        .and_then(|i| WORDS.get(i))
        .map_or_else(|| format!("{dim}-fold"), |w| w.to_string())
}
