//! Cyclic actions on `SST_m(λ)` and their orbit structure.

use super::{enumerate_ssyt_capped, Tableau, DEFAULT_MAX_ENUM};
use crate::error::{Error, Result};
use crate::partition::Partition;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Action {
    /// `c = s_1 ⋯ s_{m-1}` from the Weyl group action.
    C,
    /// Promotion `pr = σ_1 ⋯ σ_{m-1}`.
    Pr,
}

impl Action {
    pub fn apply(self, t: &Tableau) -> Result<Tableau> {
        match self {
            Action::C => t.c_action(),
            Action::Pr => Ok(t.promotion()),
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Action::C => "c",
            Action::Pr => "pr",
        })
    }
}

impl FromStr for Action {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "c" => Ok(Action::C),
            "pr" | "promotion" => Ok(Action::Pr),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

/// Orbit sizes of a cyclic action.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCensus {
    /// orbit size → number of orbits of that size
    pub by_size: BTreeMap<u64, u64>,
    /// `Σ size · count`, the size of the acted-on set
    pub total: u64,
    /// Order of the acting cyclic group.
    pub order: u64,
}

impl OrbitCensus {
    /// `#{x : g^j x = x}`: orbits whose size divides `j` contribute all their points.
    pub fn fixed_count(&self, j: u64) -> u64 {
        self.by_size
            .iter()
            .filter(|(&size, _)| j % size == 0)
            .map(|(&size, &count)| size * count)
            .sum()
    }

    pub fn orbits_of_size(&self, d: u64) -> u64 {
        self.by_size.get(&d).copied().unwrap_or(0)
    }
}

/// `SST_m(λ)` together with the permutation induced by an action.
#[derive(Clone, Debug)]
pub struct ActionPermutation {
    pub tableaux: Vec<Tableau>,
    /// `image[k]` is the index of the image of `tableaux[k]`.
    pub image: Vec<usize>,
    pub action: Action,
    pub m: usize,
}

impl ActionPermutation {
    pub fn new(lambda: &Partition, m: usize, action: Action, cap: u64) -> Result<Self> {
        let tableaux = enumerate_ssyt_capped(lambda, m, cap)?;
        let index: HashMap<&Tableau, usize> =
            tableaux.iter().enumerate().map(|(k, t)| (t, k)).collect();
        let image = tableaux
            .iter()
            .map(|t| {
                let y = action.apply(t)?;
                index.get(&y).copied().ok_or_else(|| {
                    Error::InvalidTableau(format!("{action}({t}) = {y} left SST_{m}({lambda})"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            tableaux,
            image,
            action,
            m,
        })
    }

    /// Cycles, each starting from its smallest index.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.image.len()];
        let mut out = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k);
                k = self.image[k];
            }
            out.push(cycle);
        }
        out
    }

    /// Order of the permutation: the lcm of cycle lengths.
    pub fn permutation_order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Census with the group order taken as `m` for `c` and the permutation
    /// order for promotion.
    pub fn census(&self) -> OrbitCensus {
        let order = match self.action {
            Action::C => self.m.max(1) as u64,
            Action::Pr => self.permutation_order(),
        };
        self.census_with_order(order)
    }

    pub fn census_with_order(&self, order: u64) -> OrbitCensus {
        let mut by_size = BTreeMap::new();
        for c in self.cycles() {
            *by_size.entry(c.len() as u64).or_insert(0) += 1;
        }
        OrbitCensus {
            by_size,
            total: self.image.len() as u64,
            order,
        }
    }

    /// Indices fixed by the `j`-th power of the action.
    pub fn fixed_by_power(&self, j: u64) -> Vec<usize> {
        (0..self.image.len())
            .filter(|&start| {
                let mut k = start;
                for _ in 0..j {
                    k = self.image[k];
                }
                k == start
            })
            .collect()
    }
}

/// Decomposes `SST_m(λ)` into orbits of `action`.
pub fn orbit_census(lambda: &Partition, m: usize, action: Action) -> Result<OrbitCensus> {
    Ok(ActionPermutation::new(lambda, m, action, DEFAULT_MAX_ENUM)?.census())
}
