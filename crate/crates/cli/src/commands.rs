use std::path::Path;

use anyhow::{bail, Context, Result};
use num_bigint::BigInt;

use gpcoh::scenarios::{chase_twist, run_named, ScenarioBody};
use gpcoh::schur::e_label_of;
use gpcoh::{bwb, lr_coefficients, CartanType, ParabolicSpace, Partition, RootSystem, Scenario, Weight};

use crate::document::{BwbPayload, KoszulPayload, LrPayload, LrTerm, Payload, RootsPayload};

pub fn roots(kind: &str, rank: usize) -> Result<Payload> {
    let rs = RootSystem::parse(kind, rank)?;
    // |W| = Π_{α>0} (ht α + 1) / ht α.
    let (mut num, mut den) = (BigInt::from(1), BigInt::from(1));
    for root in rs.positive_roots() {
        let height: i64 = root.iter().sum();
        num *= height + 1;
        den *= height;
    }
    Ok(Payload::Roots(RootsPayload {
        root_system: rs.name(),
        rank,
        cartan: rs.cartan().to_vec(),
        symmetrizer: rs.symmetrizer().to_vec(),
        positive_roots: rs.positive_roots().to_vec(),
        positive_root_count: rs.num_positive_roots(),
        highest_root: rs.highest_root().to_vec(),
        rho: rs.rho(),
        lie_algebra_dimension: rs.lie_algebra_dimension(),
        weyl_group_order: num / den,
    }))
}

pub fn bwb_cmd(kind: &str, rank: usize, crossed: &[usize], weight: &str) -> Result<Payload> {
    let space = ParabolicSpace::new(RootSystem::parse(kind, rank)?, crossed.iter().copied())?;
    let weight = Weight::parse_coeffs(weight)?;
    let bundle_rank = space.bundle_rank(&weight)?;
    let cohomology = bwb(&space, &weight)?;
    Ok(Payload::Bwb(BwbPayload {
        space: space.name(),
        e_label: e_label_of(&weight),
        weight,
        bundle_rank,
        cohomology,
    }))
}

/// Dimension of the polynomial GL(rows) module with highest weight λ.
fn gl_dimension(lambda: &Partition, rows: usize) -> Result<BigInt> {
    if lambda.len() > rows {
        return Ok(BigInt::from(0));
    }
    if rows == 1 {
        return Ok(BigInt::from(1));
    }
    let rs = RootSystem::new(CartanType::A, rows - 1)?;
    let coeffs = (0..rows - 1)
        .map(|i| i64::from(lambda.part(i)) - i64::from(lambda.part(i + 1)))
        .collect();
    Ok(rs.weyl_dimension(&Weight::new(coeffs))?)
}

pub fn lr(mu: &str, nu: &str, rows: usize) -> Result<Payload> {
    if rows == 0 {
        bail!("--rows must be positive");
    }
    let mu: Partition = mu.parse()?;
    let nu: Partition = nu.parse()?;
    let terms = lr_coefficients(&mu, &nu, rows)
        .into_iter()
        .map(|(partition, coefficient)| {
            Ok(LrTerm {
                dimension: gl_dimension(&partition, rows)?,
                partition,
                coefficient,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let dimension_sum = terms.iter().map(|t| &t.dimension * t.coefficient).sum();
    Ok(Payload::Lr(LrPayload {
        dimension_mu: gl_dimension(&mu, rows)?,
        dimension_nu: gl_dimension(&nu, rows)?,
        mu,
        nu,
        rows,
        terms,
        dimension_sum,
    }))
}

/// Loads `path` if it exists, otherwise a shipped scenario of that name.
pub fn load_scenario(path: &str) -> Result<Scenario> {
    if Path::new(path).exists() {
        return Scenario::load(Path::new(path)).with_context(|| format!("loading {path}"));
    }
    Scenario::shipped(path).with_context(|| format!("{path} is neither a file nor a shipped scenario"))
}

pub fn koszul(scenario: &str, twist: &str) -> Result<Payload> {
    let scenario = load_scenario(scenario)?;
    let ScenarioBody::LocalRigidity(body) = &scenario.body else {
        bail!("scenario {:?} does not describe a Koszul complex", scenario.name);
    };
    let section_bundle = body.section_bundle.clone();
    let chase = chase_twist(&scenario, twist)?;
    Ok(Payload::Koszul(KoszulPayload {
        scenario: scenario.name,
        section_bundle,
        chase,
    }))
}

/// Runs a shipped report by name, or any scenario file.
pub fn report(name: &str) -> Result<Payload> {
    if Path::new(name).exists() {
        let scenario = Scenario::load(Path::new(name)).with_context(|| format!("loading {name}"))?;
        return Ok(Payload::Report(scenario.run()?));
    }
    Ok(Payload::Report(run_named(name)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_group_orders() {
        for (kind, rank, order) in [
            ("A", 1, 2u64),
            ("A", 6, 5040),
            ("B", 3, 48),
            ("G", 2, 12),
            ("F", 4, 1152),
            ("E", 6, 51840),
        ] {
            let Payload::Roots(r) = roots(kind, rank).unwrap() else {
                unreachable!()
            };
            assert_eq!(r.weyl_group_order, order.into(), "{kind}{rank}");
        }
    }

    #[test]
    fn gl_dimensions() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(gl_dimension(&p("2,1"), 3).unwrap(), 8.into());
        assert_eq!(gl_dimension(&p("1,1,1"), 4).unwrap(), 4.into());
        assert_eq!(gl_dimension(&p("3"), 1).unwrap(), 1.into());
        assert_eq!(gl_dimension(&p("1,1"), 1).unwrap(), 0.into());
    }
}
