//! Irreducible equivariant bundles on `Gr(k, n)` as `S_λ U ⊗ S_ν Q ⊗ O(t)`.
//!
//! `U` is the tautological subbundle of rank `k`, `Q` the quotient of rank
//! `n - k`, and `O(1) = det U^* = det Q`. Dual generators never appear in a
//! label: `S_μ(U^*)` is rewritten to `S_{μ^c}(U) ⊗ O(μ_1)` and `S_μ(Q^*)` to
//! `S_{μ^c}(Q) ⊗ O(-μ_1)`, so every tensor product is a straight LR product.
//!
//! Weights: with ε-coordinates `a_1..a_n` on `GL(n)` and `c_i = a_i - a_{i+1}`,
//! a label maps to `a = (t - λ_k, .., t - λ_1 | -ν_{n-k}, .., -ν_1)`. This sends
//! `O(1) ↦ ω_k`, `Λ^j U^* ↦ ω_j` and `U^* ⊗ Q ↦ ω_1 + ω_{n-1}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::lr::lr_coefficients;
use super::partition::Partition;
use crate::bott::ParabolicSpace;
use crate::error::{Error, Result};
use crate::root_system::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BundleLabel {
    k: usize,
    n: usize,
    u_part: Partition,
    q_part: Partition,
    twist: i64,
}

fn check_ambient(k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::InvalidGrassmannian { k, n });
    }
    Ok(())
}

impl BundleLabel {
    pub fn new(k: usize, n: usize, u_part: Partition, q_part: Partition, twist: i64) -> Result<Self> {
        check_ambient(k, n)?;
        if u_part.len() > k {
            return Err(Error::PartitionTooLong {
                parts: u_part.parts().to_vec(),
                len: u_part.len(),
                max: k,
            });
        }
        if q_part.len() > n - k {
            return Err(Error::PartitionTooLong {
                parts: q_part.parts().to_vec(),
                len: q_part.len(),
                max: n - k,
            });
        }
        Ok(BundleLabel {
            k,
            n,
            u_part,
            q_part,
            twist,
        })
    }

    pub fn line(k: usize, n: usize, twist: i64) -> Result<Self> {
        Self::new(k, n, Partition::empty(), Partition::empty(), twist)
    }

    pub fn trivial(k: usize, n: usize) -> Result<Self> {
        Self::line(k, n, 0)
    }

    /// `S_λ U`, or `S_λ U^*` rewritten through the dual identity.
    pub fn schur_u(k: usize, n: usize, lambda: Partition, dual: bool) -> Result<Self> {
        if dual {
            check_ambient(k, n)?;
            if lambda.len() > k {
                return Self::new(k, n, lambda, Partition::empty(), 0);
            }
            let shift = lambda.first() as i64;
            Self::new(k, n, lambda.box_complement(k), Partition::empty(), shift)
        } else {
            Self::new(k, n, lambda, Partition::empty(), 0)
        }
    }

    /// `S_λ Q`, or `S_λ Q^*` rewritten through the dual identity.
    pub fn schur_q(k: usize, n: usize, lambda: Partition, dual: bool) -> Result<Self> {
        if dual {
            check_ambient(k, n)?;
            if lambda.len() > n - k {
                return Self::new(k, n, Partition::empty(), lambda, 0);
            }
            let shift = lambda.first() as i64;
            Self::new(k, n, Partition::empty(), lambda.box_complement(n - k), -shift)
        } else {
            Self::new(k, n, Partition::empty(), lambda, 0)
        }
    }

    /// `U^* ⊗ Q`.
    pub fn tangent(k: usize, n: usize) -> Result<Self> {
        let u_dual = Self::schur_u(k, n, Partition::column(1), true)?;
        let q = Self::schur_q(k, n, Partition::column(1), false)?;
        Ok(Self::new(k, n, u_dual.u_part, q.q_part, u_dual.twist)?.canonicalize())
    }

    pub fn ambient(&self) -> (usize, usize) {
        (self.k, self.n)
    }

    pub fn u_part(&self) -> &Partition {
        &self.u_part
    }

    pub fn q_part(&self) -> &Partition {
        &self.q_part
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn is_line_bundle(&self) -> bool {
        self.u_part.is_empty() && self.q_part.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        self.u_part.len() < self.k && self.q_part.len() < self.n - self.k
    }

    /// Moves full columns into the twist: `det U = O(-1)`, `det Q = O(1)`.
    pub fn canonicalize(&self) -> Self {
        let (u, cu) = self.u_part.strip_full_columns(self.k);
        let (q, cq) = self.q_part.strip_full_columns(self.n - self.k);
        BundleLabel {
            k: self.k,
            n: self.n,
            u_part: u,
            q_part: q,
            twist: self.twist - cu as i64 + cq as i64,
        }
    }

    pub fn twisted(&self, by: i64) -> Self {
        BundleLabel {
            twist: self.twist + by,
            ..self.clone()
        }
    }

    pub fn dual(&self) -> Self {
        let c = self.canonicalize();
        BundleLabel {
            k: c.k,
            n: c.n,
            u_part: c.u_part.box_complement(c.k),
            q_part: c.q_part.box_complement(c.n - c.k),
            twist: -c.twist + c.u_part.first() as i64 - c.q_part.first() as i64,
        }
        .canonicalize()
    }

    pub fn space(&self) -> Result<ParabolicSpace> {
        ParabolicSpace::grassmannian(self.k, self.n)
    }

    fn epsilon_coordinates(&self) -> Vec<i64> {
        let (k, n) = (self.k, self.n);
        let mut a = Vec::with_capacity(n);
        for i in 0..k {
            a.push(self.twist - self.u_part.part(k - 1 - i) as i64);
        }
        for j in 0..n - k {
            a.push(-(self.q_part.part(n - k - 1 - j) as i64));
        }
        a
    }

    pub fn to_weight(&self, space: &ParabolicSpace) -> Result<Weight> {
        if space.as_grassmannian() != Some((self.k, self.n)) {
            return Err(Error::SpaceMismatch { k: self.k, n: self.n });
        }
        if !self.is_canonical() {
            return Err(Error::NotCanonical(self.to_string()));
        }
        let a = self.epsilon_coordinates();
        Ok(Weight::new(a.windows(2).map(|w| w[0] - w[1]).collect()))
    }

    /// Inverse of [`to_weight`](Self::to_weight) on P-dominant weights.
    pub fn from_weight(space: &ParabolicSpace, w: &Weight) -> Result<Self> {
        let (k, n) = space
            .as_grassmannian()
            .ok_or_else(|| Error::Parse(format!("{} is not a Grassmannian", space.name())))?;
        space.check_parabolic_dominant(w)?;
        let c = w.coeffs();
        let mut a = vec![0i64; n];
        for i in (0..k).rev() {
            a[i] = a[i + 1] + c[i];
        }
        for j in k..n - 1 {
            a[j + 1] = a[j] - c[j];
        }
        let twist = a[0];
        let u = (0..k).map(|i| (twist - a[k - 1 - i]) as u32).collect();
        let q = (0..n - k).map(|j| (-a[n - 1 - j]) as u32).collect();
        Self::new(k, n, Partition::new(u)?, Partition::new(q)?, twist)
    }

    /// Rank, via the Levi dimension of the label's weight.
    pub fn rank(&self) -> Result<BigInt> {
        let space = self.space()?;
        space.bundle_rank(&self.canonicalize().to_weight(&space)?)
    }

    /// `E_{...}` form used in displayed decompositions; the trivial bundle is `O`.
    pub fn e_label(&self) -> Result<String> {
        let space = self.space()?;
        Ok(e_label_of(&self.canonicalize().to_weight(&space)?))
    }
}

pub fn e_label_of(w: &Weight) -> String {
    if w.is_zero() {
        "O".to_string()
    } else {
        format!("E_{{{}}}", w.omega_string())
    }
}

fn schur_factor(p: &Partition, generator: &str) -> Option<String> {
    if p.is_empty() {
        None
    } else if p.parts() == [1] {
        Some(generator.to_string())
    } else if p.is_column() {
        Some(format!("L{} {generator}", p.len()))
    } else if p.len() == 1 {
        Some(format!("S{} {generator}", p.first()))
    } else {
        let parts: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
        Some(format!("S[{}] {generator}", parts.join(",")))
    }
}

/// Round-trips through the label grammar, e.g. `L2 U x Q (-1)`.
impl fmt::Display for BundleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = [schur_factor(&self.u_part, "U"), schur_factor(&self.q_part, "Q")]
            .into_iter()
            .flatten()
            .collect();
        match (factors.is_empty(), self.twist) {
            (true, 0) => f.write_str("O"),
            (true, t) => write!(f, "O({t})"),
            (false, 0) => f.write_str(&factors.join(" x ")),
            (false, t) => write!(f, "{} ({t})", factors.join(" x ")),
        }
    }
}

/// A direct sum of canonical labels with positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleSum {
    k: usize,
    n: usize,
    summands: BTreeMap<BundleLabel, u64>,
}

impl BundleSum {
    pub fn zero(k: usize, n: usize) -> Result<Self> {
        check_ambient(k, n)?;
        Ok(BundleSum {
            k,
            n,
            summands: BTreeMap::new(),
        })
    }

    pub fn trivial(k: usize, n: usize) -> Result<Self> {
        Ok(BundleLabel::trivial(k, n)?.into())
    }

    pub fn from_labels(k: usize, n: usize, labels: impl IntoIterator<Item = (BundleLabel, u64)>) -> Result<Self> {
        let mut sum = Self::zero(k, n)?;
        for (label, m) in labels {
            sum.add(label, m)?;
        }
        Ok(sum)
    }

    pub fn add(&mut self, label: BundleLabel, multiplicity: u64) -> Result<()> {
        if label.ambient() != (self.k, self.n) {
            return Err(Error::AmbientMismatch(self.k, self.n, label.k, label.n));
        }
        if multiplicity > 0 {
            *self.summands.entry(label.canonicalize()).or_default() += multiplicity;
        }
        Ok(())
    }

    pub fn merge(&mut self, other: &BundleSum) -> Result<()> {
        for (label, m) in &other.summands {
            self.add(label.clone(), *m)?;
        }
        Ok(())
    }

    pub fn ambient(&self) -> (usize, usize) {
        (self.k, self.n)
    }

    pub fn summands(&self) -> impl Iterator<Item = (&BundleLabel, u64)> {
        self.summands.iter().map(|(l, m)| (l, *m))
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn single(&self) -> Option<&BundleLabel> {
        match (self.summands.len(), self.summands.iter().next()) {
            (1, Some((l, 1))) => Some(l),
            _ => None,
        }
    }

    pub fn rank(&self) -> Result<BigInt> {
        let mut total = BigInt::from(0);
        for (label, m) in &self.summands {
            total += label.rank()? * *m;
        }
        Ok(total)
    }

    pub fn dual(&self) -> BundleSum {
        BundleSum {
            k: self.k,
            n: self.n,
            summands: self.summands.iter().map(|(l, m)| (l.dual(), *m)).collect(),
        }
    }

    pub fn twisted(&self, by: i64) -> BundleSum {
        BundleSum {
            k: self.k,
            n: self.n,
            summands: self.summands.iter().map(|(l, m)| (l.twisted(by), *m)).collect(),
        }
    }

    /// Weights of the summands, in descending lexicographic order.
    pub fn weights(&self, space: &ParabolicSpace) -> Result<Vec<(Weight, u64)>> {
        let mut out = self
            .summands
            .iter()
            .map(|(l, m)| Ok((l.to_weight(space)?, *m)))
            .collect::<Result<Vec<_>>>()?;
        out.sort_by(|a, b| b.0.cmp(&a.0));
        Ok(out)
    }

    /// `E_{ω2-2ω4} ⊕ E_{2ω3-3ω4}`-style rendering; multiplicities prefix as `2 E_{..}`.
    pub fn e_labels(&self) -> Result<String> {
        let space = ParabolicSpace::grassmannian(self.k, self.n)?;
        let weights = self.weights(&space)?;
        if weights.is_empty() {
            return Ok("0".to_string());
        }
        Ok(weights
            .iter()
            .map(|(w, m)| match m {
                1 => e_label_of(w),
                m => format!("{m} {}", e_label_of(w)),
            })
            .collect::<Vec<_>>()
            .join(" ⊕ "))
    }
}

impl From<BundleLabel> for BundleSum {
    fn from(label: BundleLabel) -> Self {
        let (k, n) = label.ambient();
        let mut sum = BundleSum::zero(k, n).expect("label ambient already validated");
        sum.add(label, 1).expect("same ambient");
        sum
    }
}

impl fmt::Display for BundleSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|(l, m)| match m {
                1 => l.to_string(),
                m => format!("{m} {l}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

pub fn canonicalize(label: &BundleLabel) -> BundleLabel {
    label.canonicalize()
}

pub fn label_to_weight(label: &BundleLabel, space: &ParabolicSpace) -> Result<Weight> {
    label.to_weight(space)
}

fn tensor_labels(a: &BundleLabel, b: &BundleLabel) -> BTreeMap<BundleLabel, u64> {
    let (k, n) = (a.k, a.n);
    let u = lr_coefficients(&a.u_part, &b.u_part, k);
    let q = lr_coefficients(&a.q_part, &b.q_part, n - k);
    let mut out = BTreeMap::new();
    for (lu, cu) in &u {
        for (lq, cq) in &q {
            let label = BundleLabel {
                k,
                n,
                u_part: lu.clone(),
                q_part: lq.clone(),
                twist: a.twist + b.twist,
            }
            .canonicalize();
            *out.entry(label).or_default() += cu * cq;
        }
    }
    out
}

pub fn tensor(a: &BundleSum, b: &BundleSum) -> Result<BundleSum> {
    if a.ambient() != b.ambient() {
        return Err(Error::AmbientMismatch(a.k, a.n, b.k, b.n));
    }
    let mut out = BundleSum::zero(a.k, a.n)?;
    for (la, ma) in &a.summands {
        for (lb, mb) in &b.summands {
            for (label, c) in tensor_labels(la, lb) {
                out.add(label, c * ma * mb)?;
            }
        }
    }
    Ok(out)
}

/// `Λ^j` of a single column bundle `Λ^a W ⊗ O(t)` with `W ∈ {U, Q}`.
///
/// Closed forms: `Λ^j(W) = (1^j)`, and for `a = r - 1` (`Λ^{r-1}W = W^* ⊗ det W`)
/// `Λ^j(Λ^{r-1} W) = Λ^{r-j} W ⊗ (det W)^{j-1}`. Other `a` is a genuine plethysm.
pub fn exterior_power(label: &BundleLabel, j: usize) -> Result<BundleSum> {
    let c = label.canonicalize();
    let (k, n) = (c.k, c.n);
    let rank = usize::try_from(c.rank()?).unwrap_or(usize::MAX);
    if j > rank {
        return Err(Error::DegreeOutOfRange { degree: j, rank });
    }
    if j == 0 {
        return BundleSum::trivial(k, n);
    }
    let line_twist = c.twist * j as i64;
    if c.is_line_bundle() {
        return Ok(c.into());
    }
    // (side rank, det W as a power of O(1), is U side)
    let (side_rank, det_twist, column, on_u) = match (c.u_part.is_empty(), c.q_part.is_empty()) {
        (false, true) if c.u_part.is_column() => (k, -1i64, c.u_part.len(), true),
        (true, false) if c.q_part.is_column() => (n - k, 1i64, c.q_part.len(), false),
        _ => return Err(Error::UnsupportedPlethysm { label: c.to_string() }),
    };
    let (height, det_power) = if column == 1 {
        (j, 0i64)
    } else if column == side_rank - 1 {
        (side_rank - j, j as i64 - 1)
    } else {
        return Err(Error::UnsupportedPlethysm { label: c.to_string() });
    };
    let part = Partition::column(height);
    let (u, q) = if on_u {
        (part, Partition::empty())
    } else {
        (Partition::empty(), part)
    };
    let out = BundleLabel::new(k, n, u, q, line_twist + det_twist * det_power)?;
    Ok(out.canonicalize().into())
}

/// `Λ^j` of a direct sum: `Λ^j(A ⊕ B) = ⊕_{i} Λ^i A ⊗ Λ^{j-i} B`.
pub fn exterior_power_sum(sum: &BundleSum, j: usize) -> Result<BundleSum> {
    let (k, n) = sum.ambient();
    // acc[d] = Λ^d of the summands processed so far, for d <= j.
    let mut acc: Vec<BundleSum> = vec![BundleSum::trivial(k, n)?];
    for (label, m) in sum.summands() {
        let rank = usize::try_from(label.rank()?).unwrap_or(usize::MAX);
        for _ in 0..m {
            let powers = (0..=rank.min(j))
                .map(|i| exterior_power(label, i))
                .collect::<Result<Vec<_>>>()?;
            let top = (acc.len() - 1 + rank).min(j);
            let mut next = Vec::with_capacity(top + 1);
            for d in 0..=top {
                let mut term = BundleSum::zero(k, n)?;
                for (i, power) in powers.iter().enumerate().take(d + 1) {
                    if let Some(prev) = acc.get(d - i) {
                        term.merge(&tensor(prev, power)?)?;
                    }
                }
                next.push(term);
            }
            acc = next;
        }
    }
    match acc.into_iter().nth(j) {
        Some(s) => Ok(s),
        None => {
            let rank = usize::try_from(sum.rank()?).unwrap_or(usize::MAX);
            Err(Error::DegreeOutOfRange { degree: j, rank })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr() -> ParabolicSpace {
        ParabolicSpace::grassmannian(4, 7).unwrap()
    }

    fn col(h: usize) -> Partition {
        Partition::column(h)
    }

    fn u(h: usize) -> BundleLabel {
        BundleLabel::schur_u(4, 7, col(h), false).unwrap()
    }

    fn u_dual(h: usize) -> BundleLabel {
        BundleLabel::schur_u(4, 7, col(h), true).unwrap()
    }

    fn line(t: i64) -> BundleLabel {
        BundleLabel::line(4, 7, t).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(u(4).canonicalize(), line(-1));
        // Λ³U is already canonical and equals U*(-1).
        assert_eq!(u(3).canonicalize(), u_dual(1).twisted(-1).canonicalize());
        assert_eq!(line(0).canonicalize(), line(0));
        let q_full = BundleLabel::schur_q(4, 7, col(3), false).unwrap();
        assert_eq!(q_full.canonicalize(), line(1));
    }

    #[test]
    fn label_to_weight_examples() {
        let g = gr();
        assert_eq!(u_dual(3).twisted(-3).to_weight(&g).unwrap(), w(&[0, 0, 1, -3, 0, 0]));
        assert_eq!(line(1).to_weight(&g).unwrap(), w(&[0, 0, 0, 1, 0, 0]));
        assert_eq!(
            BundleLabel::tangent(4, 7).unwrap().to_weight(&g).unwrap(),
            w(&[1, 0, 0, 0, 0, 1])
        );
        for j in 1..4 {
            assert_eq!(u_dual(j).to_weight(&g).unwrap(), Weight::fundamental(6, j));
        }
        assert!(matches!(u(4).to_weight(&g), Err(Error::NotCanonical(_))));
        let other = ParabolicSpace::grassmannian(3, 7).unwrap();
        assert!(matches!(line(1).to_weight(&other), Err(Error::SpaceMismatch { .. })));
    }

    #[test]
    fn weight_round_trip() {
        let g = gr();
        for c in [
            [0, 0, 1, -3, 0, 0],
            [1, 0, 0, 0, 0, 1],
            [2, 1, 0, -5, 3, 1],
            [0, 0, 0, 0, 0, 0],
        ] {
            let label = BundleLabel::from_weight(&g, &w(&c)).unwrap();
            assert!(label.is_canonical());
            assert_eq!(label.to_weight(&g).unwrap(), w(&c));
        }
    }

    #[test]
    fn ranks() {
        assert_eq!(u_dual(3).rank().unwrap(), 4.into());
        assert_eq!(BundleLabel::tangent(4, 7).unwrap().rank().unwrap(), 12.into());
        assert_eq!(u(2).rank().unwrap(), 6.into());
    }

    #[test]
    fn tensor_examples() {
        let s = |l: BundleLabel| BundleSum::from(l);
        let t = tensor(&s(u(3)), &s(u_dual(3))).unwrap();
        assert_eq!(t.e_labels().unwrap(), "E_{ω1+ω3-ω4} ⊕ O");
        let t = tensor(&s(u(1).twisted(-2)), &s(u_dual(3))).unwrap();
        assert_eq!(t.e_labels().unwrap(), "E_{ω2-2ω4} ⊕ E_{2ω3-3ω4}");
        let t = tensor(&s(u(2).twisted(-1)), &s(u_dual(3))).unwrap();
        assert_eq!(t.e_labels().unwrap(), "E_{ω1-ω4} ⊕ E_{ω2+ω3-2ω4}");
        let other = BundleSum::trivial(3, 7).unwrap();
        assert!(matches!(tensor(&s(u(1)), &other), Err(Error::AmbientMismatch(..))));
    }

    #[test]
    fn exterior_power_examples() {
        let e = u(3);
        assert_eq!(exterior_power(&e, 2).unwrap(), u(2).twisted(-1).into());
        assert_eq!(exterior_power(&e, 3).unwrap(), u(1).twisted(-2).into());
        assert_eq!(exterior_power(&e, 4).unwrap(), line(-3).into());
        assert_eq!(exterior_power(&e, 1).unwrap(), e.clone().into());
        assert_eq!(exterior_power(&e, 0).unwrap(), line(0).into());
        assert!(matches!(exterior_power(&e, 5), Err(Error::DegreeOutOfRange { .. })));
        assert!(matches!(
            exterior_power(&u(2), 2),
            Err(Error::UnsupportedPlethysm { .. })
        ));
        let q_dual = BundleLabel::schur_q(4, 7, col(1), true).unwrap();
        // Λ²Q* = Q(-1).
        assert_eq!(
            exterior_power(&q_dual, 2).unwrap(),
            BundleLabel::schur_q(4, 7, col(1), false).unwrap().twisted(-1).into()
        );
    }

    #[test]
    fn exterior_power_of_sums() {
        // Λ²(O(1) ⊕ O(2)) = O(3); Λ¹ = the sum itself.
        let sum = BundleSum::from_labels(4, 7, [(line(1), 1), (line(2), 1)]).unwrap();
        assert_eq!(exterior_power_sum(&sum, 2).unwrap(), line(3).into());
        assert_eq!(exterior_power_sum(&sum, 1).unwrap(), sum);
        // Λ²(U ⊕ U) = 2 Λ²U ⊕ U⊗U = 3 Λ²U ⊕ S²U.
        let twice = BundleSum::from_labels(4, 7, [(u(1), 2)]).unwrap();
        let l2 = exterior_power_sum(&twice, 2).unwrap();
        assert_eq!(l2.rank().unwrap(), 28.into());
        assert_eq!(l2.summands().find(|(l, _)| **l == u(2)).map(|(_, m)| m), Some(3));
        assert!(exterior_power_sum(&sum, 3).is_err());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(u(3).dual(), u_dual(3).canonicalize());
        assert_eq!(u_dual(1).dual(), u(1));
        assert_eq!(line(5).dual(), line(-5));
        let t = BundleLabel::tangent(4, 7).unwrap();
        assert_eq!(t.dual().dual(), t);
        let g = gr();
        assert_eq!(
            t.dual().to_weight(&g).unwrap(),
            g.dual_bundle_weight(&t.to_weight(&g).unwrap()).unwrap()
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(u(2).twisted(-1).to_string(), "L2 U (-1)");
        assert_eq!(line(-3).to_string(), "O(-3)");
        assert_eq!(BundleLabel::tangent(4, 7).unwrap().to_string(), "L3 U x Q (1)");
        let s = BundleLabel::new(4, 7, "2,1".parse().unwrap(), Partition::row(2), 0).unwrap();
        assert_eq!(s.to_string(), "S[2,1] U x S2 Q");
    }
}
