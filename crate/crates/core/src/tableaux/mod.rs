//! The type A crystal `SST_m(λ)` of semistandard tableaux.
//!
//! Tableaux are stored row-major with entries in `1..=m`. Enumeration order
//! is lexicographic on the row-reading word (rows top to bottom).

mod bender_knuth;
mod crystal;
mod mcore;
mod orbits;

pub use mcore::{m_core, MCore};
pub use orbits::{orbit_census, Action, ActionPermutation, OrbitCensus};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qpoly::IntPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Default cap on the number of tableaux an enumeration may produce.
pub const DEFAULT_MAX_ENUM: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
    shape: Partition,
    bound: usize,
}

impl Tableau {
    /// Validates shape, entry range, and semistandardness.
    pub fn new(rows: Vec<Vec<u32>>, bound: usize) -> Result<Self> {
        let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())
            .map_err(|_| Error::InvalidTableau("row lengths are not weakly decreasing".into()))?;
        let t = Tableau { rows, shape, bound };
        if let Some(msg) = t.violation() {
            return Err(Error::InvalidTableau(msg));
        }
        Ok(t)
    }

    fn from_rows_unchecked(rows: Vec<Vec<u32>>, shape: &Partition, bound: usize) -> Self {
        Tableau {
            rows,
            shape: shape.clone(),
            bound,
        }
    }

    fn violation(&self) -> Option<String> {
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v as usize > self.bound {
                    return Some(format!("entry {v} outside 1..={}", self.bound));
                }
                if c > 0 && row[c - 1] > v {
                    return Some(format!("row {} decreases", r + 1));
                }
                if r > 0 && self.rows[r - 1][c] >= v {
                    return Some(format!("column {} is not strictly increasing", c + 1));
                }
            }
        }
        None
    }

    pub fn is_semistandard(&self) -> bool {
        self.violation().is_none()
    }

    /// Parses the text form `1,1,2/2,3`.
    pub fn parse(s: &str, bound: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Tableau::new(Vec::new(), bound);
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(s.to_string())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows, bound)
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// The largest admissible entry `m`.
    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn get(&self, r: usize, c: usize) -> Option<u32> {
        self.rows.get(r).and_then(|row| row.get(c)).copied()
    }

    /// `cont(T) = (c_1, ..., c_m)`, where `c_i` is the number of entries equal to `i`.
    pub fn content(&self) -> Vec<u32> {
        let mut c = vec![0u32; self.bound];
        for &v in self.rows.iter().flatten() {
            c[v as usize - 1] += 1;
        }
        c
    }

    /// Row-reading word, rows top to bottom.
    pub fn row_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// `Σ_i (i - 1) c_i`, the exponent of `T` in `s_λ(1, q, ..., q^{m-1})`.
    pub fn principal_degree(&self) -> u64 {
        self.rows.iter().flatten().map(|&v| u64::from(v - 1)).sum()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// `|SST_m(λ)| = Π_{i<j≤m} (λ_i - λ_j + j - i)/(j - i)`; zero when `ℓ(λ) > m`.
pub fn ssyt_count(lambda: &Partition, m: usize) -> BigInt {
    if lambda.len() > m {
        return BigInt::from(0);
    }
    let parts = lambda.padded(m);
    let mut prod = BigRational::one();
    for i in 0..m {
        for j in i + 1..m {
            let num = i64::from(parts[i]) - i64::from(parts[j]) + (j - i) as i64;
            prod *= BigRational::new(num.into(), ((j - i) as i64).into());
        }
    }
    prod.to_integer()
}

/// Depth-first filling of `shape` in row-major order. Cells take values from
/// `max(left, above + 1)` to `m`, so fillings come out in lexicographic order.
/// With `content`, only fillings of that exact content are produced.
fn fill<F: FnMut(&[Vec<u32>])>(shape: &Partition, m: usize, content: Option<&[u32]>, visit: &mut F) {
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l as usize]).collect();
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &l)| (0..l as usize).map(move |c| (r, c)))
        .collect();
    let mut remaining: Vec<u32> = content.map(<[u32]>::to_vec).unwrap_or_default();

    fn rec<F: FnMut(&[Vec<u32>])>(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<u32>>,
        m: usize,
        remaining: &mut Vec<u32>,
        constrained: bool,
        visit: &mut F,
    ) {
        if k == cells.len() {
            visit(rows);
            return;
        }
        let (r, c) = cells[k];
        let left = if c > 0 { rows[r][c - 1] } else { 1 };
        let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        // Column strictness needs room for the cells below this one.
        let below = rows[r + 1..].iter().take_while(|row| row.len() > c).count();
        let lo = left.max(above);
        let hi = (m as u32).saturating_sub(below as u32);
        for v in lo..=hi {
            if constrained {
                if remaining[v as usize - 1] == 0 {
                    continue;
                }
                remaining[v as usize - 1] -= 1;
            }
            rows[r][c] = v;
            rec(k + 1, cells, rows, m, remaining, constrained, visit);
            if constrained {
                remaining[v as usize - 1] += 1;
            }
        }
        rows[r][c] = 0;
    }

    if shape.len() > m {
        return;
    }
    rec(0, &cells, &mut rows, m, &mut remaining, content.is_some(), visit);
}

/// All of `SST_m(λ)` in canonical order, refusing to exceed `cap` elements.
pub fn enumerate_ssyt_capped(lambda: &Partition, m: usize, cap: u64) -> Result<Vec<Tableau>> {
    let count = ssyt_count(lambda, m);
    if count > BigInt::from(cap) {
        return Err(Error::ResourceLimit {
            count: count.to_string(),
            cap,
        });
    }
    let mut out = Vec::with_capacity(count.to_usize().unwrap_or(0));
    fill(lambda, m, None, &mut |rows| {
        out.push(Tableau::from_rows_unchecked(rows.to_vec(), lambda, m))
    });
    Ok(out)
}

pub fn enumerate_ssyt(lambda: &Partition, m: usize) -> Result<Vec<Tableau>> {
    enumerate_ssyt_capped(lambda, m, DEFAULT_MAX_ENUM)
}

/// Tableaux of shape `λ` with the given content (entries bounded by `content.len()`).
pub fn tableaux_with_content(lambda: &Partition, content: &[u32]) -> Vec<Tableau> {
    let mut out = Vec::new();
    if lambda.size() != content.iter().map(|&c| u64::from(c)).sum::<u64>() {
        return out;
    }
    let m = content.len();
    fill(lambda, m, Some(content), &mut |rows| {
        out.push(Tableau::from_rows_unchecked(rows.to_vec(), lambda, m))
    });
    out
}

/// Kostka number `K_{λμ}` for a composition `μ`.
pub fn kostka(lambda: &Partition, mu: &[u32]) -> Result<u64> {
    let mu_size: u64 = mu.iter().map(|&c| u64::from(c)).sum();
    if lambda.size() != mu_size {
        return Err(Error::SizeMismatch {
            lambda: lambda.size(),
            mu: mu_size,
        });
    }
    let mut count = 0u64;
    fill(lambda, mu.len(), Some(mu), &mut |_| count += 1);
    Ok(count)
}

/// `Σ_{T ∈ SST_m(λ)} q^{(ρ, Λ - wt T)}`, summed over an explicit enumeration.
pub fn specialization_by_enumeration(lambda: &Partition, m: usize) -> Result<IntPoly> {
    if lambda.len() > m {
        return Err(Error::ShapeTooLong {
            len: lambda.len(),
            bound: m,
        });
    }
    let kappa = lambda.kappa();
    let mut counts: Vec<BigInt> = Vec::new();
    for t in enumerate_ssyt(lambda, m)? {
        let deg = (t.principal_degree() - kappa) as usize;
        if counts.len() <= deg {
            counts.resize(deg + 1, BigInt::from(0));
        }
        counts[deg] += 1;
    }
    Ok(IntPoly::from_coeffs(counts))
}

/// `T_λ⁰`: the multiset `{1^k, ..., m^k}` (`k = |λ|/m`) written in
/// increasing order into the rows of `λ`, top to bottom.
pub fn superstandard(lambda: &Partition, m: usize) -> Result<Tableau> {
    if lambda.len() > m {
        return Err(Error::ShapeTooLong {
            len: lambda.len(),
            bound: m,
        });
    }
    let size = lambda.size();
    if m == 0 || size % m as u64 != 0 {
        return Err(Error::NotDivisible { m, size });
    }
    let k = size / m as u64;
    let mut entries = (0..size).map(|idx| (idx / k) as u32 + 1);
    let rows: Vec<Vec<u32>> = lambda
        .parts()
        .iter()
        .map(|&len| entries.by_ref().take(len as usize).collect())
        .collect();
    let t = Tableau::from_rows_unchecked(rows, lambda, m);
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard(lambda.to_string()));
    }
    Ok(t)
}

/// Tableaux of uniform content `(|λ|/m, ..., |λ|/m)`; empty when `m ∤ |λ|`.
pub fn fixed_points(lambda: &Partition, m: usize) -> Vec<Tableau> {
    if m == 0 || lambda.len() > m || lambda.size() % m as u64 != 0 {
        return Vec::new();
    }
    let k = (lambda.size() / m as u64) as u32;
    tableaux_with_content(lambda, &vec![k; m])
}
