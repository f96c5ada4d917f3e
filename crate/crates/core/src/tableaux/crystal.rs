//! Kashiwara operators on `SST_m(λ)` and the Weyl group action built from them.
//!
//! Signature rule: read rows left to right, from the bottom row up. Each `i`
//! is a `+`, each `i+1` a `-`; adjacent `-+` pairs cancel repeatedly, leaving
//! `+^φ -^ε`. `f_i` turns the rightmost surviving `+` into `i+1`, `e_i` turns
//! the leftmost surviving `-` into `i`.

use super::Tableau;
use crate::error::{Error, Result};

type Cell = (usize, usize);

impl Tableau {
    fn check_index(&self, i: usize) {
        assert!(
            i >= 1 && i < self.bound,
            "crystal index {i} outside 1..{}",
            self.bound
        );
    }

    /// Unpaired `+` cells and unpaired `-` cells, each in reading order.
    fn signature(&self, i: usize) -> (Vec<Cell>, Vec<Cell>) {
        let (lo, hi) = (i as u32, i as u32 + 1);
        let mut plus = Vec::new();
        let mut minus: Vec<Cell> = Vec::new();
        for r in (0..self.rows.len()).rev() {
            for (c, &v) in self.rows[r].iter().enumerate() {
                if v == hi {
                    minus.push((r, c));
                } else if v == lo {
                    // an unpaired `-` to the left cancels with this `+`
                    if minus.pop().is_none() {
                        plus.push((r, c));
                    }
                }
            }
        }
        (plus, minus)
    }

    /// `φ_i(T)`: how many times `f_i` applies.
    pub fn phi(&self, i: usize) -> usize {
        self.check_index(i);
        self.signature(i).0.len()
    }

    /// `ε_i(T)`: how many times `e_i` applies.
    pub fn epsilon(&self, i: usize) -> usize {
        self.check_index(i);
        self.signature(i).1.len()
    }

    /// `⟨h_i, wt T⟩ = c_i - c_{i+1}`.
    pub fn weight_pairing(&self, i: usize) -> i64 {
        let content = self.content();
        i64::from(content[i - 1]) - i64::from(content[i])
    }

    fn with_entry(&self, (r, c): Cell, v: u32) -> Tableau {
        let mut t = self.clone();
        t.rows[r][c] = v;
        t
    }

    /// `f̃_i(T)`, or `None` for the crystal's zero element.
    pub fn f(&self, i: usize) -> Option<Tableau> {
        self.check_index(i);
        let (plus, _) = self.signature(i);
        plus.last().map(|&cell| self.with_entry(cell, i as u32 + 1))
    }

    /// `ẽ_i(T)`, or `None` for the crystal's zero element.
    pub fn e(&self, i: usize) -> Option<Tableau> {
        self.check_index(i);
        let (_, minus) = self.signature(i);
        minus.first().map(|&cell| self.with_entry(cell, i as u32))
    }

    /// The simple reflection `s_i`: `f̃_i^k` if `k = ⟨h_i, wt T⟩ ≥ 0`, else `ẽ_i^{-k}`.
    pub fn weyl_s(&self, i: usize) -> Result<Tableau> {
        self.check_index(i);
        let k = self.weight_pairing(i);
        let mut t = self.clone();
        for _ in 0..k.unsigned_abs() {
            let next = if k > 0 { t.f(i) } else { t.e(i) };
            t = next.ok_or(Error::InternalNull(i))?;
        }
        Ok(t)
    }

    /// `c = s_1 s_2 ⋯ s_{m-1}`, with `s_{m-1}` applied first.
    pub fn c_action(&self) -> Result<Tableau> {
        (1..self.bound).rev().try_fold(self.clone(), |t, i| t.weyl_s(i))
    }
}
