//! Integer partitions and compositions.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("partition parts must be positive: {0:?}")]
    ZeroPart(Vec<usize>),
    #[error("cannot parse partition {0:?}")]
    Parse(String),
}

/// Weakly decreasing list of positive parts. Ordered lexicographically on
/// parts, so `(3) > (2,1) > (1,1,1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart(parts));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros; the partition obtained by forgetting the order
    /// of a composition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The one-row partition `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// `n(μ) = Σ (i-1) μ_i`.
    pub fn n_statistic(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Dominance order `self ≥ other` (equal weights assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            cur.push(p);
            rec(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n` (ordered positive parts), lexicographic.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=remaining {
            cur.push(p);
            rec(remaining - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    /// Comma-separated parts, e.g. `2,1`; the empty partition prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `2,1`, `(2,1)` or, when every part is a single digit, `21`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if body.is_empty() {
            return Ok(Partition::default());
        }
        let parts: Result<Vec<usize>, _> = if body.contains(',') {
            body.split(',').map(|p| p.trim().parse::<usize>()).collect()
        } else if body.chars().all(|c| c.is_ascii_digit()) {
            Ok(body.chars().map(|c| c as usize - '0' as usize).collect())
        } else {
            return Err(PartitionError::Parse(s.to_string()));
        };
        Partition::new(parts.map_err(|_| PartitionError::Parse(s.to_string()))?)
    }
}
