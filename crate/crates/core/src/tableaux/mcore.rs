//! m-cores via beta-numbers on an m-runner abacus.

use crate::error::{Error, Result};
use crate::partition::Partition;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MCore {
    pub core: Partition,
    /// `λ ∼_m 0`.
    pub is_empty: bool,
    /// `ε(w_λ)` when the core is empty.
    pub sign: Option<i8>,
}

/// The `m`-core of `λ` (with `ℓ(λ) ≤ m`) and, when it is empty, the sign of
/// the permutation `w_λ` with `λ + δ_m ≡ w_λ δ_m (mod m)`.
pub fn m_core(lambda: &Partition, m: usize) -> Result<MCore> {
    if lambda.len() > m {
        return Err(Error::ShapeTooLong {
            len: lambda.len(),
            bound: m,
        });
    }
    if m == 0 {
        return Ok(MCore {
            core: Partition::empty(),
            is_empty: true,
            sign: Some(1),
        });
    }
    let mm = m as u64;
    // β_k = λ_k + m - k, k = 1..m
    let beta: Vec<u64> = lambda
        .padded(m)
        .iter()
        .enumerate()
        .map(|(k, &p)| u64::from(p) + mm - 1 - k as u64)
        .collect();

    // Slide every bead to the lowest free position on its runner.
    let mut runners = vec![0u64; m];
    for &b in &beta {
        runners[(b % mm) as usize] += 1;
    }
    let mut slid: Vec<u64> = runners
        .iter()
        .enumerate()
        .flat_map(|(r, &count)| (0..count).map(move |j| r as u64 + j * mm))
        .collect();
    slid.sort_unstable_by(|a, b| b.cmp(a));
    let core = Partition::new(
        slid.iter()
            .enumerate()
            .map(|(k, &b)| (b - (mm - 1 - k as u64)) as u32)
            .collect(),
    )
    .expect("bead positions are distinct, so parts are weakly decreasing");

    let residues: Vec<u64> = beta.iter().map(|b| b % mm).collect();
    let is_empty = runners.iter().all(|&c| c == 1);
    let sign = is_empty.then(|| {
        // δ_m is strictly decreasing, so the sign counts ascents among residues.
        let ascents = (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
            .filter(|&(i, j)| residues[i] < residues[j])
            .count();
        if ascents % 2 == 0 {
            1
        } else {
            -1
        }
    });
    debug_assert_eq!(is_empty, core.is_empty());
    Ok(MCore {
        core,
        is_empty,
        sign,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_cores() {
        let c = m_core(&lam("2,2"), 2).unwrap();
        assert_eq!(c, MCore { core: Partition::empty(), is_empty: true, sign: Some(1) });
        let c = m_core(&lam("3,1"), 2).unwrap();
        assert_eq!(c, MCore { core: Partition::empty(), is_empty: true, sign: Some(-1) });
        let c = m_core(&lam("1"), 2).unwrap();
        assert_eq!(c, MCore { core: lam("1"), is_empty: false, sign: None });
        assert!(matches!(m_core(&lam("1,1,1"), 2), Err(Error::ShapeTooLong { .. })));
    }

    #[test]
    fn core_sizes_and_two_cores() {
        for n in 0..=10 {
            for p in Partition::all_of_size(n, 3) {
                let core = m_core(&p, 3).unwrap().core;
                // 3-cores have size ≡ |λ| mod 3
                assert_eq!(core.size() % 3, p.size() % 3);
                assert!(core.size() <= p.size());
            }
            for p in Partition::all_of_size(n, 2) {
                let core = m_core(&p, 2).unwrap().core;
                let k = core.len() as u32;
                let staircase: Vec<u32> = (1..=k).rev().collect();
                assert_eq!(core.parts(), staircase.as_slice(), "{p}");
            }
        }
    }

    /// Removes rim hooks of size m by brute force on beta-sets: moving any bead
    /// from b to b - m when b - m is free.
    fn core_by_hook_removal(lambda: &Partition, m: usize) -> Partition {
        let n = lambda.len().max(1) + m;
        let mut beads: Vec<i64> = lambda
            .padded(n)
            .iter()
            .enumerate()
            .map(|(k, &p)| i64::from(p) + (n - 1 - k) as i64)
            .collect();
        loop {
            let moved = (0..beads.len()).find(|&i| {
                let target = beads[i] - m as i64;
                target >= 0 && !beads.contains(&target)
            });
            match moved {
                Some(i) => beads[i] -= m as i64,
                None => break,
            }
        }
        beads.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(
            beads
                .iter()
                .enumerate()
                .map(|(k, &b)| (b - (n - 1 - k) as i64) as u32)
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn abacus_matches_hook_removal() {
        for m in 1..=5 {
            for n in 0..=9 {
                for p in Partition::all_of_size(n, m) {
                    assert_eq!(m_core(&p, m).unwrap().core, core_by_hook_removal(&p, m), "{p} m={m}");
                }
            }
        }
    }
}
