//! Bender-Knuth involutions and promotion.

use super::Tableau;

impl Tableau {
    /// `σ_i`: in each row the free `i`s and free `(i+1)`s form a run
    /// `i^a (i+1)^b`, which becomes `i^b (i+1)^a`.
    ///
    /// An `i` is free when the cell below it is not `i+1`; an `i+1` is free
    /// when the cell above it is not `i`.
    pub fn bender_knuth(&self, i: usize) -> Tableau {
        assert!(i >= 1 && i < self.bound, "index {i} outside 1..{}", self.bound);
        let (lo, hi) = (i as u32, i as u32 + 1);
        let mut out = self.clone();
        for r in 0..self.rows.len() {
            let row = &self.rows[r];
            let mut start = None;
            let (mut a, mut b) = (0usize, 0usize);
            for (c, &v) in row.iter().enumerate() {
                let free = if v == lo {
                    self.get(r + 1, c) != Some(hi)
                } else if v == hi {
                    r == 0 || self.get(r - 1, c) != Some(lo)
                } else {
                    false
                };
                if free {
                    start.get_or_insert(c);
                    if v == lo {
                        a += 1;
                    } else {
                        b += 1;
                    }
                }
            }
            if let Some(s) = start {
                let run = &mut out.rows[r][s..s + a + b];
                run[..b].fill(lo);
                run[b..].fill(hi);
            }
        }
        out
    }

    /// `pr = σ_1 σ_2 ⋯ σ_{m-1}`, with `σ_{m-1}` applied first.
    pub fn promotion(&self) -> Tableau {
        (1..self.bound)
            .rev()
            .fold(self.clone(), |t, i| t.bender_knuth(i))
    }
}
