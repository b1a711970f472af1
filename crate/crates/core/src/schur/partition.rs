use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing positive parts; trailing zeros are dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts.iter().map(|&p| p as i64).collect()));
        }
        Ok(Self::from_sorted(parts))
    }

    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The single column `(1^height)`.
    pub fn column(height: usize) -> Self {
        Partition(vec![1; height])
    }

    /// The single row `(width)`.
    pub fn row(width: u32) -> Self {
        Self::from_sorted(vec![width])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_column(&self) -> bool {
        self.0.iter().all(|&p| p == 1)
    }

    /// Complement inside the `rows x first()` box, read backwards:
    /// `S_λ(W^*) = S_{λ^c}(W) ⊗ (det W)^{-λ_1}` for `W` of rank `rows`.
    pub fn box_complement(&self, rows: usize) -> Self {
        let width = self.first();
        Self::from_sorted((0..rows).map(|i| width - self.part(rows - 1 - i)).collect())
    }

    /// Removes `min(part(rows-1))` full columns of height `rows`, returning how many.
    pub(crate) fn strip_full_columns(&self, rows: usize) -> (Self, u32) {
        if self.len() < rows || rows == 0 {
            return (self.clone(), 0);
        }
        let c = self.part(rows - 1);
        (Self::from_sorted(self.0.iter().map(|p| p - c).collect()), c)
    }

    pub fn all_of_size(size: u32) -> Vec<Partition> {
        fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(current.clone()));
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                current.push(p);
                rec(remaining - p, p, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        if v.iter().any(|&p| p < 0 || p > u32::MAX as i64) {
            return Err(Error::NotAPartition(v));
        }
        Partition::new(v.into_iter().map(|p| p as u32).collect())
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma list such as `2,1,1`; an empty string or `0` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(s);
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
