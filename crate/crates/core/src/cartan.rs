//! Finite-type Cartan data.
//!
//! Nodes follow the Bourbaki numbering. A datum stores the Cartan matrix
//! `a_ij = ⟨h_i, α_j⟩`, the symmetrisers `d_i` (normalised so the shortest
//! simple root has `d_i = 1`) and the positive roots in simple-root
//! coordinates. The invariant form is `(α_i, α_j) = d_i a_ij`.
//!
//! `ρ` is never stored as a vector; the pairings `(β, ρ) = Σ c_i d_i` and
//! `⟨β∨, ρ⟩ = 2(β, ρ)/(β, β)` are computed directly from root coordinates.

use crate::error::{Error, Result};
use crate::partition::Partition;
use serde::{Deserialize, Serialize};
use std::cmp::Reverse;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];
}

/// A family letter together with a rank, e.g. `B2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            // D3 would silently be A3 under another numbering.
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    /// Every valid type of rank at most `max_rank`.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for rank in 1..=max_rank {
                if let Ok(t) = CartanType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::B | Family::C, _) => n * n,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, 8) => 120,
            (Family::F, _) => 24,
            (Family::G, _) => 6,
            _ => unreachable!("rank validated on construction"),
        }
    }

    /// Symmetrisers and the symmetrised form `(α_i, α_j)`.
    fn symmetrised_form(&self) -> (Vec<i64>, Vec<Vec<i64>>) {
        let n = self.rank;
        let mut d = vec![1i64; n];
        let mut edges: Vec<(usize, usize, i64)> = Vec::new();
        match self.family {
            Family::A => {
                edges.extend((0..n - 1).map(|i| (i, i + 1, -1)));
            }
            Family::B => {
                d = vec![2; n];
                d[n - 1] = 1;
                edges.extend((0..n - 1).map(|i| (i, i + 1, -2)));
            }
            Family::C => {
                d[n - 1] = 2;
                edges.extend((0..n - 2).map(|i| (i, i + 1, -1)));
                edges.push((n - 2, n - 1, -2));
            }
            Family::D => {
                edges.extend((0..n - 2).map(|i| (i, i + 1, -1)));
                edges.push((n - 3, n - 1, -1));
            }
            Family::E => {
                // 1 - 3 - 4 - 5 - ... with 2 attached to 4
                edges.push((0, 2, -1));
                edges.push((1, 3, -1));
                edges.extend((2..n - 1).map(|i| (i, i + 1, -1)));
            }
            Family::F => {
                d = vec![2, 2, 1, 1];
                edges.extend([(0, 1, -2), (1, 2, -2), (2, 3, -1)]);
            }
            Family::G => {
                d = vec![1, 3];
                edges.push((0, 1, -3));
            }
        }
        let mut form = vec![vec![0i64; n]; n];
        for i in 0..n {
            form[i][i] = 2 * d[i];
        }
        for (i, j, v) in edges {
            form[i][j] = v;
            form[j][i] = v;
        }
        (d, form)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let rank = rest.parse::<usize>().map_err(|_| bad())?;
        CartanType::new(family, rank)
    }
}

/// A root `Σ c_i α_i` in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Self { coords }
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if c != 1 {
                write!(f, "{c}")?;
            }
            write!(f, "a{}", i + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A weight in fundamental-weight coordinates `⟨h_i, Λ⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub fund_coords: Vec<i64>,
}

impl Weight {
    pub fn new(fund_coords: Vec<i64>) -> Self {
        Self { fund_coords }
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            fund_coords: vec![0; rank],
        }
    }

    pub fn is_dominant(&self) -> bool {
        self.fund_coords.iter().all(|&c| c >= 0)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight::new(self.fund_coords.iter().map(|c| c * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.fund_coords.iter().map(i64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(s.to_string())))
            .collect::<Result<Vec<_>>>()
            .map(Weight::new)
    }
}

/// Which bilinear pairing a q-dimension formula uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairingKind {
    /// `(β, Λ)`
    Form,
    /// `⟨β∨, Λ⟩ = 2(β, Λ)/(β, β)`
    Coroot,
}

#[derive(Clone, Debug)]
pub struct CartanDatum {
    cartan_type: CartanType,
    cartan_matrix: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    form: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    rho_pairings: Vec<i64>,
    rho_copairings: Vec<i64>,
}

impl CartanDatum {
    pub fn new(cartan_type: CartanType) -> Self {
        let (symmetrizers, form) = cartan_type.symmetrised_form();
        let n = cartan_type.rank;
        let cartan_matrix: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| form[i][j] / symmetrizers[i]).collect())
            .collect();
        let mut datum = CartanDatum {
            cartan_type,
            cartan_matrix,
            symmetrizers,
            form,
            positive_roots: Vec::new(),
            rho_pairings: Vec::new(),
            rho_copairings: Vec::new(),
        };
        datum.positive_roots = datum.enumerate_positive_roots();
        datum.rho_pairings = datum
            .positive_roots
            .iter()
            .map(|b| datum.rho_form(b))
            .collect();
        datum.rho_copairings = datum
            .positive_roots
            .iter()
            .zip(&datum.rho_pairings)
            .map(|(b, &r)| 2 * r / datum.norm(b))
            .collect();
        datum
    }

    /// Parses and builds in one step, e.g. `CartanDatum::from_name("G2")`.
    pub fn from_name(name: &str) -> Result<Self> {
        name.parse::<CartanType>().map(Self::new)
    }

    /// The `A_{m-1}` datum of `gl_m`.
    pub fn gl(m: usize) -> Result<Self> {
        CartanType::new(Family::A, m.saturating_sub(1)).map(Self::new)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn is_simply_laced(&self) -> bool {
        self.symmetrizers.iter().all(|&d| d == 1)
    }

    /// Positive roots ordered by height, ties broken with `α_1` first.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// `(β, ρ)` for each positive root, aligned with [`Self::positive_roots`].
    pub fn rho_pairings(&self) -> &[i64] {
        &self.rho_pairings
    }

    /// `⟨β∨, ρ⟩` for each positive root, aligned with [`Self::positive_roots`].
    pub fn rho_copairings(&self) -> &[i64] {
        &self.rho_copairings
    }

    /// `⟨α_i∨, β⟩ = Σ_j a_ij c_j`.
    fn coroot_on(&self, i: usize, beta: &Root) -> i64 {
        self.cartan_matrix[i]
            .iter()
            .zip(&beta.coords)
            .map(|(a, c)| a * c)
            .sum()
    }

    /// `s_i(β) = β - ⟨α_i∨, β⟩ α_i`.
    pub fn simple_reflection(&self, i: usize, beta: &Root) -> Root {
        let k = self.coroot_on(i, beta);
        let mut coords = beta.coords.clone();
        coords[i] -= k;
        Root::new(coords)
    }

    /// Orbit of the simple roots under the simple reflections, restricted to
    /// positive vectors. The whole (finite) root system is traversed so that
    /// paths through negative roots are not lost.
    fn enumerate_positive_roots(&self) -> Vec<Root> {
        let n = self.rank();
        let mut seen: HashSet<Root> = HashSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 0..n {
            let r = Root::simple(n, i);
            seen.insert(r.clone());
            queue.push_back(r);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let image = self.simple_reflection(i, &beta);
                if seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        let mut roots: Vec<Root> = seen.into_iter().filter(Root::is_positive).collect();
        roots.sort_by_key(|r| (r.height(), Reverse(r.coords.clone())));
        roots
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: len,
            })
        }
    }

    /// `(β, β) = Σ c_i c_j (α_i, α_j)`.
    pub fn norm(&self, beta: &Root) -> i64 {
        let c = &beta.coords;
        (0..c.len())
            .map(|i| (0..c.len()).map(|j| c[i] * c[j] * self.form[i][j]).sum::<i64>())
            .sum()
    }

    fn rho_form(&self, beta: &Root) -> i64 {
        beta.coords
            .iter()
            .zip(&self.symmetrizers)
            .map(|(c, d)| c * d)
            .sum()
    }

    /// `(β, Λ) = Σ_i c_i d_i ⟨h_i, Λ⟩`.
    pub fn pairing(&self, beta: &Root, weight: &Weight) -> Result<i64> {
        self.check_len(beta.coords.len())?;
        self.check_len(weight.fund_coords.len())?;
        Ok(beta
            .coords
            .iter()
            .zip(&self.symmetrizers)
            .zip(&weight.fund_coords)
            .map(|((c, d), w)| c * d * w)
            .sum())
    }

    /// `⟨β∨, Λ⟩ = 2(β, Λ)/(β, β)`.
    pub fn copairing(&self, beta: &Root, weight: &Weight) -> Result<i64> {
        let form = self.pairing(beta, weight)?;
        let norm = self.norm(beta);
        if norm <= 0 || (2 * form) % norm != 0 {
            return Err(Error::NotARoot(beta.coords.clone()));
        }
        Ok(2 * form / norm)
    }

    pub fn pair(&self, kind: PairingKind, beta: &Root, weight: &Weight) -> Result<i64> {
        match kind {
            PairingKind::Form => self.pairing(beta, weight),
            PairingKind::Coroot => self.copairing(beta, weight),
        }
    }

    /// `(β, ρ)` or `⟨β∨, ρ⟩` for every positive root.
    pub fn rho_values(&self, kind: PairingKind) -> &[i64] {
        match kind {
            PairingKind::Form => &self.rho_pairings,
            PairingKind::Coroot => &self.rho_copairings,
        }
    }

    /// The unique positive root of maximal height.
    pub fn highest_root(&self) -> &Root {
        self.positive_roots
            .last()
            .expect("a finite root system has positive roots")
    }
}

/// The `A_{m-1}` weight `Σ λ_k ε_k` in fundamental coordinates `λ_i - λ_{i+1}`.
pub fn gl_weight(lambda: &Partition, m: usize) -> Result<Weight> {
    if lambda.len() > m {
        return Err(Error::ShapeTooLong {
            len: lambda.len(),
            bound: m,
        });
    }
    let padded = lambda.padded(m);
    Ok(Weight::new(
        padded
            .windows(2)
            .map(|w| i64::from(w[0]) - i64::from(w[1]))
            .collect(),
    ))
}
