//! Simple root systems and weight arithmetic.
//!
//! Nodes follow Bourbaki numbering and are 1-based in every public API that
//! takes node indices; weight coefficient vectors are 0-based internally.
//!
//! ```text
//! A_n   1 - 2 - ... - n
//! B_n   1 - 2 - ... - (n-1) => n        (n short)
//! C_n   1 - 2 - ... - (n-1) <= n        (n long)
//! D_n   1 - 2 - ... - (n-2) - (n-1)
//!                        \
//!                         n
//! E_n   1 - 3 - 4 - 5 - ... - n
//!               |
//!               2
//! F_4   1 - 2 => 3 - 4                  (3, 4 short)
//! G_2   1 <= 2                          (1 short)
//! ```
//!
//! The Cartan matrix is stored as `cartan[i][j] = <alpha_i^vee, alpha_j>`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        }
    }

    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            CartanType::A => rank >= 1,
            CartanType::B => rank >= 2,
            CartanType::C => rank >= 3,
            CartanType::D => rank >= 4,
            CartanType::E => (6..=8).contains(&rank),
            CartanType::F => rank == 4,
            CartanType::G => rank == 2,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "E" => Ok(CartanType::E),
            "F" => Ok(CartanType::F),
            "G" => Ok(CartanType::G),
            other => Err(Error::InvalidRootSystem {
                kind: other.to_string(),
                rank: 0,
            }),
        }
    }
}

/// A weight in fundamental-weight coordinates: `coeffs[i]` is the pairing
/// with the simple coroot of node `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Weight(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight of a 1-based node.
    pub fn fundamental(rank: usize, node: usize) -> Self {
        let mut c = vec![0; rank];
        c[node - 1] = 1;
        Weight(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 1)
    }

    /// Parses comma separated coefficients, e.g. `"0,0,1,-3,0,0"`.
    pub fn parse_coeffs(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight coefficient {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }

    /// Label such as `ω1+ω3-3ω4`; the zero weight prints as `0`.
    pub fn omega_string(&self) -> String {
        let mut out = String::new();
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&format!("ω{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.omega_string())
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// Outcome of moving a weight into the dominant chamber by simple reflections.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Dominantization {
    /// The weight lies on a wall: it is orthogonal to some root.
    Singular,
    Regular {
        length: usize,
        dominant: Weight,
    },
}

/// Which negative coefficient to reflect at when several are available.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReflectionOrder {
    #[default]
    LeastIndexFirst,
    GreatestIndexFirst,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    kind: CartanType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    // Coroot of each positive root in simple-coroot coordinates, same order.
    coroots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(kind: CartanType, rank: usize) -> Result<Self> {
        if !kind.is_valid_rank(rank) {
            return Err(Error::InvalidRootSystem {
                kind: kind.to_string(),
                rank,
            });
        }
        let cartan = cartan_matrix(kind, rank);
        let symmetrizer = symmetrizer(&cartan);
        let positive_roots = reflection_closure(&cartan);
        let coroots = positive_roots
            .iter()
            .map(|root| coroot_of(root, &cartan, &symmetrizer))
            .collect();
        Ok(RootSystem {
            kind,
            rank,
            cartan,
            symmetrizer,
            positive_roots,
            coroots,
        })
    }

    pub fn parse(kind: &str, rank: usize) -> Result<Self> {
        let kind: CartanType = kind.parse().map_err(|_| Error::InvalidRootSystem {
            kind: kind.to_string(),
            rank,
        })?;
        Self::new(kind, rank)
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Half squared lengths of the simple roots, normalised so short roots have 1.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Positive roots in simple-root coordinates, ordered by height and then
    /// lexicographically descending within a height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn lie_algebra_dimension(&self) -> usize {
        2 * self.positive_roots.len() + self.rank
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots.last().expect("root system has roots")
    }

    /// Converts a vector in simple-root coordinates to fundamental-weight coordinates.
    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        Weight(
            (0..self.rank)
                .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * root[j]).sum())
                .collect(),
        )
    }

    pub fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: w.rank(),
            });
        }
        Ok(())
    }

    /// Pairing of a weight with the coroot of the `index`-th positive root.
    pub fn coroot_pairing(&self, w: &Weight, index: usize) -> i64 {
        self.coroots[index].iter().zip(w.coeffs()).map(|(a, b)| a * b).sum()
    }

    /// Applies the simple reflection at 0-based node `i`.
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let ci = w.0[i];
        Weight(
            w.0.iter()
                .enumerate()
                .map(|(j, &cj)| cj - ci * self.cartan[j][i])
                .collect(),
        )
    }

    pub fn dominantize(&self, w: &Weight) -> Result<Dominantization> {
        self.dominantize_with(w, ReflectionOrder::LeastIndexFirst)
    }

    pub fn dominantize_with(&self, w: &Weight, order: ReflectionOrder) -> Result<Dominantization> {
        self.check_rank(w)?;
        let mut current = w.clone();
        let mut length = 0;
        loop {
            if current.0.contains(&0) {
                return Ok(Dominantization::Singular);
            }
            let negative = match order {
                ReflectionOrder::LeastIndexFirst => current.0.iter().position(|&c| c < 0),
                ReflectionOrder::GreatestIndexFirst => current.0.iter().rposition(|&c| c < 0),
            };
            match negative {
                Some(i) => {
                    current = self.reflect(&current, i);
                    length += 1;
                }
                None => {
                    return Ok(Dominantization::Regular {
                        length,
                        dominant: current,
                    })
                }
            }
        }
    }

    pub fn weyl_dimension(&self, dominant: &Weight) -> Result<BigInt> {
        self.check_rank(dominant)?;
        if let Some(i) = dominant.0.iter().position(|&c| c < 0) {
            return Err(Error::NotDominant {
                node: i + 1,
                value: dominant.0[i],
            });
        }
        Ok(self.dimension_over(dominant, |_| true))
    }

    /// `-w0(dominant)`, realised as the diagram involution.
    pub fn dual_weight(&self, dominant: &Weight) -> Result<Weight> {
        self.check_rank(dominant)?;
        let mut c = dominant.0.clone();
        match self.kind {
            CartanType::A => c.reverse(),
            CartanType::D if self.rank % 2 == 1 => c.swap(self.rank - 2, self.rank - 1),
            CartanType::E if self.rank == 6 => {
                c.swap(0, 5);
                c.swap(2, 4);
            }
            _ => {}
        }
        Ok(Weight(c))
    }

    fn check_crossed(&self, crossed: &BTreeSet<usize>) -> Result<()> {
        if crossed.is_empty() || crossed.iter().any(|&n| n == 0 || n > self.rank) {
            return Err(Error::InvalidCrossedNodes {
                nodes: crossed.iter().copied().collect(),
                rank: self.rank,
            });
        }
        Ok(())
    }

    fn in_levi(root: &[i64], crossed: &BTreeSet<usize>) -> bool {
        crossed.iter().all(|&n| root[n - 1] == 0)
    }

    /// Dimension of G/P for the parabolic with the given crossed (1-based) nodes.
    pub fn homogeneous_dimension(&self, crossed: &BTreeSet<usize>) -> Result<usize> {
        self.check_crossed(crossed)?;
        Ok(self
            .positive_roots
            .iter()
            .filter(|r| !Self::in_levi(r, crossed))
            .count())
    }

    /// Dimension of the irreducible Levi representation with highest weight `w`.
    pub fn levi_dimension(&self, crossed: &BTreeSet<usize>, w: &Weight) -> Result<BigInt> {
        self.check_crossed(crossed)?;
        self.check_rank(w)?;
        if let Some(i) = (0..self.rank).find(|i| !crossed.contains(&(i + 1)) && w.0[*i] < 0) {
            return Err(Error::NotParabolicDominant {
                node: i + 1,
                value: w.0[i],
            });
        }
        Ok(self.dimension_over(w, |root| Self::in_levi(root, crossed)))
    }

    /// Sum of the positive roots outside the Levi subsystem, in
    /// fundamental-weight coordinates. This is the weight of det T_{G/P}.
    pub fn nilradical_weight(&self, crossed: &BTreeSet<usize>) -> Result<Weight> {
        self.check_crossed(crossed)?;
        let mut total = vec![0; self.rank];
        for root in self.positive_roots.iter().filter(|r| !Self::in_levi(r, crossed)) {
            for (t, r) in total.iter_mut().zip(root) {
                *t += r;
            }
        }
        Ok(self.root_to_weight(&total))
    }

    fn dimension_over(&self, w: &Weight, keep: impl Fn(&[i64]) -> bool) -> BigInt {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (index, root) in self.positive_roots.iter().enumerate() {
            if !keep(root) {
                continue;
            }
            let rho_pair: i64 = self.coroots[index].iter().sum();
            let shifted = self.coroot_pairing(w, index) + rho_pair;
            num *= shifted;
            den *= rho_pair;
        }
        debug_assert!((&num % &den).is_zero());
        num / den
    }
}

fn cartan_matrix(kind: CartanType, rank: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    match kind {
        CartanType::A | CartanType::B | CartanType::C => {
            for i in 1..rank {
                link(i, i + 1);
            }
        }
        CartanType::D => {
            for i in 1..rank - 1 {
                link(i, i + 1);
            }
            link(rank - 2, rank);
        }
        CartanType::E => {
            link(1, 3);
            link(2, 4);
            for i in 3..rank {
                link(i, i + 1);
            }
        }
        CartanType::F => {
            link(1, 2);
            link(2, 3);
            link(3, 4);
        }
        CartanType::G => link(1, 2),
    }
    match kind {
        // a_ij = <alpha_i^vee, alpha_j>; the short root's coroot is long.
        CartanType::B => a[rank - 1][rank - 2] = -2,
        CartanType::C => a[rank - 2][rank - 1] = -2,
        CartanType::F => a[2][1] = -2,
        CartanType::G => a[0][1] = -3,
        _ => {}
    }
    a
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Solves `d_i a_ij = d_j a_ji` over the (connected) Dynkin diagram.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    // Rational entries as (numerator, denominator).
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    d[0] = Some((1, 1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let (pi, qi) = d[i].expect("visited");
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                let (p, q) = (pi * cartan[i][j], qi * cartan[j][i]);
                let g = gcd(p, q) * q.signum();
                d[j] = Some((p / g, q / g));
                queue.push_back(j);
            }
        }
    }
    let d: Vec<(i64, i64)> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let lcm = d.iter().fold(1, |acc, &(_, q)| acc / gcd(acc, q) * q);
    let scaled: Vec<i64> = d.iter().map(|&(p, q)| p * (lcm / q)).collect();
    let g = scaled.iter().fold(0, |acc, &x| gcd(acc, x));
    scaled.into_iter().map(|x| x / g).collect()
}

fn reflection_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let simple: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut seen: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut queue: VecDeque<Vec<i64>> = simple.into_iter().collect();
    while let Some(root) = queue.pop_front() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| cartan[i][j] * root[j]).sum();
            if pairing == 0 {
                continue;
            }
            let mut image = root.clone();
            image[i] -= pairing;
            if image.iter().all(|&c| c >= 0) && seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by(|a, b| {
        let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    roots
}

fn coroot_of(root: &[i64], cartan: &[Vec<i64>], d: &[i64]) -> Vec<i64> {
    let n = root.len();
    // (alpha, alpha) = sum n_i n_j d_i a_ij, and d_alpha = (alpha, alpha) / 2.
    let norm: i64 = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| root[i] * root[j] * d[i] * cartan[i][j])
        .sum();
    let d_alpha = norm / 2;
    root.iter()
        .zip(d)
        .map(|(&m, &di)| {
            debug_assert_eq!((m * di) % d_alpha, 0);
            m * di / d_alpha
        })
        .collect()
}
