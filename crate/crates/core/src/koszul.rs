//! Koszul complexes of zero loci and the cohomology chase through them.
//!
//! For a section of `E` on `G/P` with zero locus `S` of the expected
//! codimension, `0 → Λ^r E^* ⊗ F → … → E^* ⊗ F → F → F|_S → 0` is exact.
//! Writing `Z_j` for the image of `C_j = Λ^j E^* ⊗ F`, the complex splits into
//! `0 → Z_{j+1} → C_j → Z_j → 0` with `Z_r = C_r` and `Z_0 = F|_S`. Each long
//! exact sequence is resolved from the ranks of `H^q(Z_{j+1}) → H^q(C_j)`:
//!
//! ```text
//! h^q(Z_j) = (h^q(C_j) - rank_q) + (h^{q+1}(Z_{j+1}) - rank_{q+1})
//! ```
//!
//! The differentials come from a non-invariant section, so they are not
//! G-equivariant and the chase works on dimensions only.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bott::{bundle_cohomology, CohomologyTable, DimensionTable, ParabolicSpace};
use crate::error::{Error, Result};
use crate::schur::{exterior_power_sum, tensor, BundleSum};

#[derive(Debug, Clone)]
pub struct KoszulComplex {
    ambient: ParabolicSpace,
    section_bundle: BundleSum,
    twist: BundleSum,
    /// `terms[j] = Λ^j E^* ⊗ F`.
    terms: Vec<BundleSum>,
}

impl KoszulComplex {
    pub fn ambient(&self) -> &ParabolicSpace {
        &self.ambient
    }

    pub fn section_bundle(&self) -> &BundleSum {
        &self.section_bundle
    }

    pub fn twist(&self) -> &BundleSum {
        &self.twist
    }

    /// Terms indexed by exterior degree `j`, so `terms()[0] = F`.
    pub fn terms(&self) -> &[BundleSum] {
        &self.terms
    }

    pub fn rank(&self) -> usize {
        self.terms.len() - 1
    }

    /// Dimension of the zero locus.
    pub fn locus_dimension(&self) -> usize {
        self.ambient.dimension() - self.rank()
    }
}

pub fn build_koszul(ambient: &ParabolicSpace, section: &BundleSum, twist: &BundleSum) -> Result<KoszulComplex> {
    let (k, n) = section.ambient();
    if ambient.as_grassmannian() != Some((k, n)) {
        return Err(Error::SpaceMismatch { k, n });
    }
    if twist.ambient() != (k, n) {
        let (tk, tn) = twist.ambient();
        return Err(Error::AmbientMismatch(k, n, tk, tn));
    }
    let rank = usize::try_from(section.rank()?).unwrap_or(usize::MAX);
    let dim = ambient.dimension();
    if rank > dim {
        return Err(Error::CodimensionTooLarge { rank, dim });
    }
    let dual = section.dual();
    let terms = (0..=rank)
        .map(|j| tensor(&exterior_power_sum(&dual, j)?, twist))
        .collect::<Result<Vec<_>>>()?;
    Ok(KoszulComplex {
        ambient: ambient.clone(),
        section_bundle: section.clone(),
        twist: twist.clone(),
        terms,
    })
}

/// The map `H^q(Z_term) → H^q(C_{term-1})`, i.e. `H^q(C_term) → H^q(C_{term-1})`
/// in the split complex. `term` ranges over `1..=rank`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MapPosition {
    pub term: usize,
    pub degree: usize,
}

impl fmt::Display for MapPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.degree;
        write!(f, "H^{q}(C_{})→H^{q}(C_{})", self.term, self.term - 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankHint {
    pub position: MapPosition,
    #[serde(with = "crate::bigint_serde")]
    pub rank: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HintOrigin {
    Provided,
    /// Generic-section assumption: the largest rank source and target allow.
    DefaultMaximal,
    /// The only rank compatible with exactness (strict policy only).
    Forced,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HintRecord {
    pub position: MapPosition,
    #[serde(with = "crate::bigint_serde")]
    pub rank: BigInt,
    pub origin: HintOrigin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChasePolicy {
    /// Unforced ranks without a hint default to maximal.
    #[default]
    GenericSection,
    /// Unforced ranks without a hint block the chase unless exactness pins them.
    Strict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChasePage {
    /// Per-term Borel–Weil–Bott tables, indexed by `j`.
    pub terms: Vec<CohomologyTable>,
    pub rank_hints_used: Vec<HintRecord>,
}

impl ChasePage {
    /// `(j, q) ↦ h^q(C_j)` for the nonzero entries.
    pub fn grid(&self) -> BTreeMap<(usize, usize), BigInt> {
        self.terms
            .iter()
            .enumerate()
            .flat_map(|(j, t)| t.dims().iter().map(move |(q, v)| ((j, q), v.clone())))
            .collect()
    }

    pub fn acyclic_terms(&self) -> Vec<usize> {
        (0..self.terms.len()).filter(|&j| self.terms[j].is_zero()).collect()
    }

    /// `Σ_j (-1)^j χ(C_j)`.
    pub fn alternating_euler(&self) -> BigInt {
        self.terms
            .iter()
            .enumerate()
            .map(|(j, t)| {
                let chi = t.euler_characteristic();
                if j % 2 == 0 {
                    chi
                } else {
                    -chi
                }
            })
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ChaseResult {
    Determined {
        table: DimensionTable,
        page: ChasePage,
    },
    Indeterminate {
        page: ChasePage,
        blocking_positions: Vec<MapPosition>,
    },
}

impl ChaseResult {
    pub fn page(&self) -> &ChasePage {
        match self {
            ChaseResult::Determined { page, .. } | ChaseResult::Indeterminate { page, .. } => page,
        }
    }

    pub fn table(&self) -> Option<&DimensionTable> {
        match self {
            ChaseResult::Determined { table, .. } => Some(table),
            ChaseResult::Indeterminate { .. } => None,
        }
    }
}

pub fn chase(complex: &KoszulComplex, hints: &[RankHint]) -> Result<ChaseResult> {
    chase_with(complex, hints, ChasePolicy::GenericSection)
}

pub fn chase_with(complex: &KoszulComplex, hints: &[RankHint], policy: ChasePolicy) -> Result<ChaseResult> {
    let space = &complex.ambient;
    let r = complex.rank();
    let hint_map = validate_hints(hints, r, space.dimension())?;

    let terms = complex
        .terms
        .iter()
        .map(|t| bundle_cohomology(space, &t.weights(space)?))
        .collect::<Result<Vec<_>>>()?;
    let mut page = ChasePage {
        terms,
        rank_hints_used: Vec::new(),
    };

    let locus_dim = complex.locus_dimension();
    let mut image = page.terms[r].dims().clone();
    let mut consumed = BTreeSet::new();
    for j in (0..r).rev() {
        let source = image;
        let target = page.terms[j].dims().clone();
        let top = source.max_degree().into_iter().chain(target.max_degree()).max();
        let Some(top) = top else {
            image = DimensionTable::new();
            continue;
        };
        consumed.extend((0..=top).map(|q| MapPosition { term: j + 1, degree: q }));

        let mut ranks = vec![BigInt::zero(); top + 2];
        let mut blocking = Vec::new();
        #[allow(clippy::needless_range_loop)]
        for q in 0..=top {
            let position = MapPosition { term: j + 1, degree: q };
            let (s, t) = (source.get(q), target.get(q));
            let max = s.clone().min(t.clone());
            let hint = hint_map.get(&position);
            if max.is_zero() {
                if let Some(h) = hint.filter(|h| !h.is_zero()) {
                    return Err(Error::InconsistentRanks {
                        position: position.to_string(),
                        reason: format!("hint {h} but source or target vanishes"),
                    });
                }
                continue;
            }
            let (rank, origin) = match (hint, policy) {
                (Some(h), _) => {
                    if h > &max {
                        return Err(Error::InconsistentRanks {
                            position: position.to_string(),
                            reason: format!("hint {h} exceeds min(source, target) = {max}"),
                        });
                    }
                    (h.clone(), HintOrigin::Provided)
                }
                (None, ChasePolicy::GenericSection) => (max, HintOrigin::DefaultMaximal),
                (None, ChasePolicy::Strict) => match forced_rank(q, j, locus_dim, &s, &t) {
                    Some(v) => (v, HintOrigin::Forced),
                    None => {
                        blocking.push(position);
                        continue;
                    }
                },
            };
            page.rank_hints_used.push(HintRecord {
                position,
                rank: rank.clone(),
                origin,
            });
            ranks[q] = rank;
        }
        if !blocking.is_empty() {
            return Ok(ChaseResult::Indeterminate {
                page,
                blocking_positions: blocking,
            });
        }

        if source.get(0) != ranks[0] {
            return Err(Error::InconsistentRanks {
                position: MapPosition { term: j + 1, degree: 0 }.to_string(),
                reason: "H^0 of a subsheaf must inject".to_string(),
            });
        }
        let mut next = DimensionTable::new();
        for q in 0..=top {
            let v = (target.get(q) - &ranks[q]) + (source.get(q + 1) - &ranks[q + 1]);
            debug_assert!(!v.is_negative());
            next.set(q, v);
        }
        image = next;
    }

    if let Some((p, h)) = hint_map.iter().find(|(p, h)| !consumed.contains(*p) && !h.is_zero()) {
        return Err(Error::InconsistentRanks {
            position: p.to_string(),
            reason: format!("hint {h} but source or target vanishes"),
        });
    }

    if let Some(q) = image.iter().map(|(q, _)| q).find(|&q| q > locus_dim) {
        return Err(Error::InconsistentRanks {
            position: format!("H^{q}(F|_S)"),
            reason: format!("zero locus has dimension {locus_dim}"),
        });
    }
    assert_eq!(
        image.euler_characteristic(),
        page.alternating_euler(),
        "Euler characteristic must be additive along the Koszul resolution"
    );
    Ok(ChaseResult::Determined { table: image, page })
}

fn validate_hints(hints: &[RankHint], rank: usize, dim: usize) -> Result<BTreeMap<MapPosition, BigInt>> {
    let mut map = BTreeMap::new();
    for h in hints {
        let p = h.position;
        let reason = if p.term == 0 || p.term > rank {
            Some(format!("term must lie in 1..={rank}"))
        } else if p.degree > dim {
            Some(format!("degree exceeds dim G/P = {dim}"))
        } else if h.rank.is_negative() {
            Some("rank is negative".to_string())
        } else if map.contains_key(&p) {
            Some("duplicate hint".to_string())
        } else {
            None
        };
        if let Some(reason) = reason {
            return Err(Error::MalformedHint {
                position: format!("term {} degree {}", p.term, p.degree),
                reason,
            });
        }
        map.insert(p, h.rank.clone());
    }
    Ok(map)
}

/// A rank pinned by exactness alone: `H^0` of a subsheaf injects, and the
/// restricted sheaf has no cohomology above the dimension of the locus.
/// Only the local constraints of one short exact sequence are used; a
/// violated constraint surfaces later as `InconsistentRanks`.
fn forced_rank(q: usize, j: usize, locus_dim: usize, source: &BigInt, target: &BigInt) -> Option<BigInt> {
    let max = source.clone().min(target.clone());
    if q == 0 {
        return Some(max);
    }
    if j == 0 && q > locus_dim {
        return Some(max);
    }
    None
}

/// Four-term sequence `0 → H^0(T_S) → H^0(T_X|_S) → H^0(N) → H^1(T_S) → H^1(T_X|_S) = 0`.
/// Returns `(h^0(T_S), h^1(T_S))`.
pub fn restriction_sequence(
    h0_sub: &BigInt,
    ambient: &DimensionTable,
    normal: &DimensionTable,
) -> Result<(BigInt, BigInt)> {
    if h0_sub.is_negative() {
        return Err(Error::InconsistentSequence(format!(
            "h0 of the subvariety is negative ({h0_sub})"
        )));
    }
    if !ambient.get(1).is_zero() {
        return Err(Error::InconsistentSequence(format!(
            "H^1 of the restricted ambient tangent bundle is {} (must vanish)",
            ambient.get(1)
        )));
    }
    if h0_sub > &ambient.get(0) {
        return Err(Error::InconsistentSequence(format!(
            "h0 = {h0_sub} cannot inject into H^0 of dimension {}",
            ambient.get(0)
        )));
    }
    let h1 = normal.get(0) - ambient.get(0) + h0_sub;
    if h1.is_negative() {
        return Err(Error::InconsistentSequence(format!("computed h1 = {h1} is negative")));
    }
    Ok((h0_sub.clone(), h1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::{parse_bundle, BundleLabel};

    fn gr() -> ParabolicSpace {
        ParabolicSpace::grassmannian(4, 7).unwrap()
    }

    fn b(s: &str) -> BundleSum {
        parse_bundle(s, 4, 7).unwrap()
    }

    fn dims(pairs: &[(usize, i64)]) -> DimensionTable {
        DimensionTable::from_pairs(pairs.iter().map(|&(d, v)| (d, BigInt::from(v))))
    }

    fn cayley(twist: &str) -> KoszulComplex {
        build_koszul(&gr(), &b("L3 U*"), &b(twist)).unwrap()
    }

    #[test]
    fn cayley_terms_match_the_displayed_complex() {
        let k = cayley("O");
        let expected = ["O", "L3 U", "L2 U (-1)", "U(-2)", "O(-3)"];
        assert_eq!(k.rank(), 4);
        for (j, e) in expected.iter().enumerate() {
            assert_eq!(k.terms()[j], b(e), "term {j}");
        }
        assert_eq!(k.locus_dimension(), 8);
        let twisted = cayley("L3 U*");
        assert_eq!(twisted.terms()[1], b("L3 U x L3 U*"));
        assert_eq!(twisted.terms()[0], b("L3 U*"));
    }

    #[test]
    fn hypersurface_complex() {
        let p1 = ParabolicSpace::grassmannian(1, 2).unwrap();
        let e: BundleSum = BundleLabel::line(1, 2, 1).unwrap().into();
        let f = BundleSum::trivial(1, 2).unwrap();
        let k = build_koszul(&p1, &e, &f).unwrap();
        assert_eq!(k.terms(), &[f.clone(), BundleLabel::line(1, 2, -1).unwrap().into()]);
        let r = chase(&k, &[]).unwrap();
        assert_eq!(r.table(), Some(&dims(&[(0, 1)])));
        assert!(r.page().rank_hints_used.is_empty());
    }

    #[test]
    fn codimension_violation() {
        let p1 = ParabolicSpace::grassmannian(1, 2).unwrap();
        let e = parse_bundle("O(1) + O(2)", 1, 2).unwrap();
        let f = BundleSum::trivial(1, 2).unwrap();
        assert!(matches!(
            build_koszul(&p1, &e, &f),
            Err(Error::CodimensionTooLarge { rank: 2, dim: 1 })
        ));
    }

    #[test]
    fn normal_bundle_chase() {
        let r = chase(&cayley("L3 U*"), &[]).unwrap();
        assert_eq!(r.table(), Some(&dims(&[(0, 34)])));
        let used = &r.page().rank_hints_used;
        assert_eq!(used.len(), 1);
        assert_eq!(used[0].position, MapPosition { term: 1, degree: 0 });
        assert_eq!(used[0].rank, 1.into());
        assert_eq!(used[0].origin, HintOrigin::DefaultMaximal);
        assert_eq!(used[0].position.to_string(), "H^0(C_1)→H^0(C_0)");
        assert_eq!(r.page().acyclic_terms(), vec![2, 3, 4]);
    }

    #[test]
    fn tangent_bundle_chase() {
        let r = chase(&cayley("T"), &[]).unwrap();
        assert_eq!(r.table(), Some(&dims(&[(0, 48)])));
        assert!(r.page().rank_hints_used.is_empty());
        assert_eq!(r.page().acyclic_terms(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn structure_sheaf_chase() {
        let r = chase(&cayley("O"), &[]).unwrap();
        assert_eq!(r.table(), Some(&dims(&[(0, 1)])));
    }

    #[test]
    fn explicit_maximal_hints_change_nothing() {
        let k = cayley("L3 U*");
        let default = chase(&k, &[]).unwrap();
        let hints: Vec<RankHint> = default
            .page()
            .rank_hints_used
            .iter()
            .map(|h| RankHint {
                position: h.position,
                rank: h.rank.clone(),
            })
            .collect();
        let explicit = chase(&k, &hints).unwrap();
        assert_eq!(explicit.table(), default.table());
        assert_eq!(explicit.page().rank_hints_used[0].origin, HintOrigin::Provided);
    }

    #[test]
    fn bad_hints() {
        let k = cayley("L3 U*");
        let at = |term, degree, rank: i64| RankHint {
            position: MapPosition { term, degree },
            rank: rank.into(),
        };
        assert!(matches!(chase(&k, &[at(0, 0, 1)]), Err(Error::MalformedHint { .. })));
        assert!(matches!(chase(&k, &[at(5, 0, 1)]), Err(Error::MalformedHint { .. })));
        assert!(matches!(chase(&k, &[at(1, 0, -1)]), Err(Error::MalformedHint { .. })));
        assert!(matches!(
            chase(&k, &[at(1, 0, 1), at(1, 0, 1)]),
            Err(Error::MalformedHint { .. })
        ));
        assert!(matches!(
            chase(&k, &[at(1, 0, 2)]),
            Err(Error::InconsistentRanks { .. })
        ));
        // Rank zero would leave a class in H^{-1}(F|_S).
        assert!(matches!(
            chase(&k, &[at(1, 0, 0)]),
            Err(Error::InconsistentRanks { .. })
        ));
        assert!(matches!(
            chase(&k, &[at(3, 2, 1)]),
            Err(Error::InconsistentRanks { .. })
        ));
    }

    #[test]
    fn strict_policy_uses_exactness_then_blocks() {
        // The normal-bundle map is pinned by injectivity of H^0.
        let r = chase_with(&cayley("L3 U*"), &[], ChasePolicy::Strict).unwrap();
        assert_eq!(r.table(), Some(&dims(&[(0, 34)])));
        assert_eq!(r.page().rank_hints_used[0].origin, HintOrigin::Forced);

        // A point on P^1 twisted by O(-3): H^1(O(-4)) = C^3 → H^1(O(-3)) = C^2
        // must be onto because the point has no H^1.
        let p1 = ParabolicSpace::grassmannian(1, 2).unwrap();
        let k = build_koszul(
            &p1,
            &parse_bundle("O(1)", 1, 2).unwrap(),
            &parse_bundle("O(-3)", 1, 2).unwrap(),
        )
        .unwrap();
        let r = chase_with(&k, &[], ChasePolicy::Strict).unwrap();
        assert_eq!(r.table(), Some(&dims(&[(0, 1)])));
    }

    #[test]
    fn strict_policy_reports_blocking_positions() {
        // Two points of P^2 cut by O(1) ⊕ O(2), twisted by O(-1):
        // H^2(O(-4)) = C^3 → H^2(O(-2) ⊕ O(-3)) = C is not pinned locally.
        let p2 = ParabolicSpace::grassmannian(1, 3).unwrap();
        let e = parse_bundle("O(1) + O(2)", 1, 3).unwrap();
        let f = parse_bundle("O(-1)", 1, 3).unwrap();
        let k = build_koszul(&p2, &e, &f).unwrap();
        assert_eq!(chase(&k, &[]).unwrap().table(), Some(&dims(&[(0, 2)])));
        match chase_with(&k, &[], ChasePolicy::Strict).unwrap() {
            ChaseResult::Indeterminate { blocking_positions, .. } => {
                assert_eq!(blocking_positions, vec![MapPosition { term: 2, degree: 2 }]);
            }
            ChaseResult::Determined { .. } => panic!("expected a blocked chase"),
        }
        let hinted = chase_with(
            &k,
            &[RankHint {
                position: MapPosition { term: 2, degree: 2 },
                rank: 1.into(),
            }],
            ChasePolicy::Strict,
        )
        .unwrap();
        assert_eq!(hinted.table(), Some(&dims(&[(0, 2)])));
    }

    #[test]
    fn restriction_sequence_examples() {
        let (h0, h1) = restriction_sequence(&14.into(), &dims(&[(0, 48)]), &dims(&[(0, 34)])).unwrap();
        assert_eq!((h0, h1), (14.into(), 0.into()));
        assert!(matches!(
            restriction_sequence(&3.into(), &dims(&[]), &dims(&[])),
            Err(Error::InconsistentSequence(_))
        ));
        let (h0, h1) = restriction_sequence(&0.into(), &dims(&[(0, 5)]), &dims(&[(0, 5)])).unwrap();
        assert_eq!((h0, h1), (0.into(), 0.into()));
        assert!(restriction_sequence(&14.into(), &dims(&[(0, 48), (1, 1)]), &dims(&[(0, 34)])).is_err());
        assert!(restriction_sequence(&1.into(), &dims(&[(0, 48)]), &dims(&[(0, 34)])).is_err());
    }
}
