//! Integer partitions.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Trailing zero parts are dropped; anything else out of order is rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The rectangle `(a^b)`.
    pub fn rectangle(a: u32, b: usize) -> Self {
        if a == 0 {
            return Self::empty();
        }
        Self { parts: vec![a; b] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// `λ_k` with 1-based `k`; zero past the length.
    pub fn part(&self, k: usize) -> u32 {
        self.parts.get(k.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `m` (never truncated).
    pub fn padded(&self, m: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        if v.len() < m {
            v.resize(m, 0);
        }
        v
    }

    /// `κ(λ) = Σ_k (k - 1) λ_k`.
    pub fn kappa(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(k, &p)| k as u64 * u64::from(p))
            .sum()
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Dominance `λ ⊵ μ` for a composition `μ` of the same size, comparing
    /// partial sums of `λ` with those of `μ` sorted decreasingly.
    pub fn dominates(&self, mu: &[u32]) -> bool {
        let mut sorted = mu.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let n = self.len().max(sorted.len());
        let lam = self.padded(n);
        sorted.resize(n, 0);
        let (mut sl, mut sm) = (0u64, 0u64);
        for k in 0..n {
            sl += u64::from(lam[k]);
            sm += u64::from(sorted[k]);
            if sl < sm {
                return false;
            }
        }
        sl == sm
    }

    /// All partitions of `n` with at most `max_len` parts, in reverse lexicographic order.
    pub fn all_of_size(n: u32, max_len: usize) -> Vec<Partition> {
        fn rec(rest: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if cur.len() == max_len {
                return;
            }
            for p in (1..=max_part.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, max_len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, max_len, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Comma-separated parts, e.g. `4,4,4`. The empty string and `0` give `∅`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
