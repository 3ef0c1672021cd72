//! Integer partitions, dominance order and admissibility.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Weakly decreasing sequence of non-negative integers. Trailing zeros are
/// kept: they record the number of variables the partition is used with.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of entries, including trailing zeros.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    pub fn trimmed(&self) -> Partition {
        Partition {
            parts: self.parts[..self.length()].to_vec(),
        }
    }

    /// Pads with zeros (or trims zeros) to exactly `n` entries.
    pub fn padded(&self, n: usize) -> Result<Partition, PartitionError> {
        if self.length() > n {
            return Err(PartitionError::InvalidInput(format!(
                "{self} has more than {n} nonzero parts"
            )));
        }
        let mut parts = self.parts[..self.length()].to_vec();
        parts.resize(n, 0);
        Ok(Partition { parts })
    }

    /// Multiplicity of each nonzero part.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in self.parts.iter().filter(|&&p| p > 0) {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `z_lambda = prod_i i^(m_i) m_i!`.
    pub fn z_lambda(&self) -> BigInt {
        let mut z = BigInt::one();
        for (part, mult) in self.multiplicities() {
            for k in 1..=mult {
                z *= BigInt::from(part) * BigInt::from(k);
            }
        }
        z
    }
}

impl Ord for Partition {
    /// Size first, then lexicographic on the parts.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prefix-sum comparison after padding both sides with zeros.
pub fn dominance_leq(a: &Partition, b: &Partition) -> bool {
    let n = a.len().max(b.len());
    let (mut sa, mut sb) = (0usize, 0usize);
    for i in 0..n {
        sa += a.parts.get(i).copied().unwrap_or(0);
        sb += b.parts.get(i).copied().unwrap_or(0);
        if sa > sb {
            return false;
        }
    }
    true
}

/// Strict dominance between partitions of equal size.
pub fn dominance_lt(a: &Partition, b: &Partition) -> bool {
    a.size() == b.size() && a.trimmed() != b.trimmed() && dominance_leq(a, b)
}

/// `(l(n-1), l(n-1), l(n-2), l(n-2), ..., l, l, 0, 0)` with `2n` entries.
pub fn staircase(n: usize, ell: usize) -> Result<Partition, PartitionError> {
    if n == 0 || ell == 0 {
        return Err(PartitionError::InvalidInput("n and l must be positive".into()));
    }
    let parts = (0..n).rev().flat_map(|k| [ell * k, ell * k]).collect();
    Ok(Partition { parts })
}

/// The staircase for `l = 1`: `(n-1, n-1, ..., 1, 1, 0, 0)`.
pub fn staircase_schur(n: usize) -> Result<Partition, PartitionError> {
    staircase(n, 1)
}

/// `parts[i] - parts[i+k] >= r` wherever both entries exist.
pub fn is_admissible(p: &Partition, r: usize, k: usize) -> bool {
    p.parts
        .iter()
        .zip(p.parts.iter().skip(k))
        .all(|(a, b)| a >= b && a - b >= r)
}

/// Partitions of `d` with at most `max_parts` nonzero parts (no padding), in
/// increasing lexicographic order. Lexicographic order extends dominance, so
/// every partition appears after all partitions it dominates.
pub fn partitions_of(d: usize, max_parts: usize) -> Vec<Partition> {
    fn rec(rem: usize, max_part: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, max_parts, &mut Vec::new(), &mut out);
    out.reverse();
    out
}
