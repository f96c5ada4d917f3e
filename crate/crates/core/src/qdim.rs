//! q-dimensions of highest weight crystals and their residues modulo `q^n - 1`.
//!
//! For dominant `Λ`,
//!
//! ```text
//! qdim B(Λ)  = Π_{β ∈ Δ⁺} (1 - q^{(β, Λ+ρ)}) / (1 - q^{(β, ρ)})
//! qdim∨ B(Λ) = Π_{β ∈ Δ⁺} (1 - q^{⟨β∨, Λ+ρ⟩}) / (1 - q^{⟨β∨, ρ⟩})
//! ```
//!
//! Both are handled by one code path selected with [`PairingKind`].

use crate::cartan::{CartanDatum, PairingKind, Root, Weight};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qpoly::{cyclotomic, divisors, mobius, orbit_basis_decompose, IntPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// The exponents of `Π (1 - q^{num}) / Π (1 - q^{den})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QdimFactorization {
    pub numerator_exponents: Vec<u64>,
    pub denominator_exponents: Vec<u64>,
}

impl QdimFactorization {
    /// Net exponent of each `Φ_d`, using `1 - q^k = -Π_{d|k} Φ_d`.
    /// The signs cancel because both sides have `|Δ⁺|` factors.
    pub fn cyclotomic_exponents(&self) -> BTreeMap<u64, i64> {
        let mut exps: BTreeMap<u64, i64> = BTreeMap::new();
        for &k in &self.numerator_exponents {
            for d in divisors(k) {
                *exps.entry(d).or_default() += 1;
            }
        }
        for &k in &self.denominator_exponents {
            for d in divisors(k) {
                *exps.entry(d).or_default() -= 1;
            }
        }
        exps.retain(|_, e| *e != 0);
        exps
    }

    /// Fails with the first cyclotomic factor left in the denominator.
    pub fn check_polynomial(&self) -> Result<()> {
        match self.cyclotomic_exponents().into_iter().find(|&(_, e)| e < 0) {
            Some((d, _)) => Err(Error::InternalNegativeExponent(d)),
            None => Ok(()),
        }
    }

    /// Expands by dividing binomials out of the numerator product.
    pub fn expand(&self) -> Result<IntPoly> {
        self.check_polynomial()?;
        let mut num = self.numerator_exponents.clone();
        let mut den = Vec::new();
        // Drop factors appearing on both sides before expanding.
        for &k in &self.denominator_exponents {
            match num.iter().position(|&x| x == k) {
                Some(pos) => {
                    num.swap_remove(pos);
                }
                None => den.push(k),
            }
        }
        let mut poly = IntPoly::one();
        for k in num {
            poly.mul_one_minus_q_pow(k as usize);
        }
        for k in den {
            poly.div_one_minus_q_pow(k as usize)?;
        }
        Ok(poly)
    }

    /// Expands as `Π Φ_d^{e_d}`; slower, kept as an independent route.
    pub fn expand_cyclotomic(&self) -> Result<IntPoly> {
        self.check_polynomial()?;
        Ok(self
            .cyclotomic_exponents()
            .into_iter()
            .fold(IntPoly::one(), |acc, (d, e)| &acc * &cyclotomic(d).pow(e as u32)))
    }
}

fn check_weight(datum: &CartanDatum, weight: &Weight) -> Result<()> {
    if weight.fund_coords.len() != datum.rank() {
        return Err(Error::DimensionMismatch {
            expected: datum.rank(),
            got: weight.fund_coords.len(),
        });
    }
    if !weight.is_dominant() {
        return Err(Error::NotDominant(weight.fund_coords.clone()));
    }
    Ok(())
}

/// `(β, Λ)` (or `⟨β∨, Λ⟩`) for every positive root, aligned with the datum's root list.
fn weight_values(datum: &CartanDatum, weight: &Weight, kind: PairingKind) -> Result<Vec<i64>> {
    datum
        .positive_roots()
        .iter()
        .map(|b| datum.pair(kind, b, weight))
        .collect()
}

pub fn factorization(
    datum: &CartanDatum,
    weight: &Weight,
    kind: PairingKind,
) -> Result<QdimFactorization> {
    check_weight(datum, weight)?;
    let rho = datum.rho_values(kind);
    let lam = weight_values(datum, weight, kind)?;
    Ok(QdimFactorization {
        numerator_exponents: lam.iter().zip(rho).map(|(l, r)| (l + r) as u64).collect(),
        denominator_exponents: rho.iter().map(|&r| r as u64).collect(),
    })
}

/// `qdim B(Λ)`.
pub fn qdim(datum: &CartanDatum, weight: &Weight) -> Result<IntPoly> {
    factorization(datum, weight, PairingKind::Form)?.expand()
}

/// `qdim∨ B(Λ)`.
pub fn qdim_dual(datum: &CartanDatum, weight: &Weight) -> Result<IntPoly> {
    factorization(datum, weight, PairingKind::Coroot)?.expand()
}

pub fn qdim_with(datum: &CartanDatum, weight: &Weight, kind: PairingKind) -> Result<IntPoly> {
    factorization(datum, weight, kind)?.expand()
}

/// Weyl's dimension formula `Π (β, Λ+ρ)/(β, ρ)`.
pub fn weyl_dim(datum: &CartanDatum, weight: &Weight) -> Result<BigInt> {
    check_weight(datum, weight)?;
    let lam = weight_values(datum, weight, PairingKind::Form)?;
    let (num, den) = lam.iter().zip(datum.rho_pairings()).fold(
        (BigInt::one(), BigInt::one()),
        |(n, d), (&l, &r)| (n * BigInt::from(l + r), d * BigInt::from(r)),
    );
    let (quot, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::NonInteger(format!("{num}/{den}")));
    }
    Ok(quot)
}

/// Whether `n | (β, Λ)` (or `n | ⟨β∨, Λ⟩`) for every positive root.
pub fn divisibility_condition(
    datum: &CartanDatum,
    weight: &Weight,
    n: u64,
    kind: PairingKind,
) -> Result<bool> {
    check_weight(datum, weight)?;
    Ok(weight_values(datum, weight, kind)?
        .iter()
        .all(|&v| v % n as i64 == 0))
}

/// `Δ⁺_d`: positive roots whose `ρ`-pairing is divisible by `d`.
pub fn positive_roots_divisible(datum: &CartanDatum, d: u64, kind: PairingKind) -> Vec<Root> {
    datum
        .positive_roots()
        .iter()
        .zip(datum.rho_values(kind))
        .filter(|(_, &r)| r % d as i64 == 0)
        .map(|(b, _)| b.clone())
        .collect()
}

/// `Π_{β ∈ Δ⁺_d} ((β, Λ)/(β, ρ) + 1)`, the constant value of `qdim mod Φ_d`
/// under the divisibility condition. The empty product is 1.
pub fn cyclotomic_residue(
    datum: &CartanDatum,
    weight: &Weight,
    d: u64,
    kind: PairingKind,
) -> Result<BigInt> {
    check_weight(datum, weight)?;
    let lam = weight_values(datum, weight, kind)?;
    let rho = datum.rho_values(kind);
    let prod = lam
        .iter()
        .zip(rho)
        .filter(|(_, &r)| r % d as i64 == 0)
        .fold(BigRational::one(), |acc, (&l, &r)| {
            acc * BigRational::new(BigInt::from(l + r), BigInt::from(r))
        });
    if prod.is_integer() {
        Ok(prod.to_integer())
    } else {
        Err(Error::NonIntegerB(d))
    }
}

/// Residue of `qdim` modulo `q^n - 1` in the orbit basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceResult {
    pub n: u64,
    #[serde(serialize_with = "crate::serde_big::ser_map")]
    #[serde(deserialize_with = "crate::serde_big::de_map")]
    pub b: BTreeMap<u64, BigInt>,
    #[serde(serialize_with = "crate::serde_big::ser_map")]
    #[serde(deserialize_with = "crate::serde_big::de_map")]
    pub a: BTreeMap<u64, BigInt>,
    pub residue: IntPoly,
}

impl CongruenceResult {
    /// `Σ_{d|n} a_d (q^n - 1)/(q^{n/d} - 1)`.
    pub fn orbit_sum(&self) -> IntPoly {
        self.a.iter().fold(IntPoly::zero(), |acc, (&d, a)| {
            &acc + &(&IntPoly::constant(a.clone()) * &IntPoly::orbit_basis(self.n, d))
        })
    }

    /// `Σ_{d|n} d a_d`.
    pub fn weighted_orbit_total(&self) -> BigInt {
        self.a.iter().map(|(&d, a)| a * BigInt::from(d)).sum()
    }
}

/// `a_d = (1/d) Σ_{e|d} μ(d/e) b_e` for every `d | n`.
pub fn mobius_invert(b: &BTreeMap<u64, BigInt>, n: u64) -> Result<BTreeMap<u64, BigInt>> {
    divisors(n)
        .into_iter()
        .map(|d| {
            let sum: BigInt = divisors(d)
                .into_iter()
                .map(|e| BigInt::from(mobius(d / e)) * &b[&e])
                .sum();
            let (a, rem) = sum.div_rem(&BigInt::from(d));
            if rem.is_zero() {
                Ok((d, a))
            } else {
                Err(Error::CongruenceMismatch(format!("a_{d} = {sum}/{d} is not an integer")))
            }
        })
        .collect()
}

/// Computes `b_d`, `a_d` and the residue of `qdim` (or `qdim∨`) modulo
/// `q^n - 1`, checking that the residue equals `Σ a_d (q^n-1)/(q^{n/d}-1)`
/// with every `a_d ≥ 0`.
pub fn congruence(
    datum: &CartanDatum,
    weight: &Weight,
    n: u64,
    kind: PairingKind,
) -> Result<CongruenceResult> {
    if n == 0 {
        return Err(Error::ConditionViolated(0));
    }
    if !divisibility_condition(datum, weight, n, kind)? {
        return Err(Error::ConditionViolated(n));
    }
    let b: BTreeMap<u64, BigInt> = divisors(n)
        .into_iter()
        .map(|d| {
            cyclotomic_residue(datum, weight, n / d, kind)
                .map(|v| (d, v))
                .map_err(|_| Error::NonIntegerB(d))
        })
        .collect::<Result<_>>()?;
    let a = mobius_invert(&b, n)?;
    let residue = qdim_with(datum, weight, kind)?.rem_q_pow_minus_one(n as usize);

    if let Some((d, v)) = a.iter().find(|(_, v)| v.is_negative()) {
        return Err(Error::CongruenceMismatch(format!("a_{d} = {v} < 0")));
    }
    let decomposition = orbit_basis_decompose(&residue, n).ok_or_else(|| {
        Error::CongruenceMismatch(format!("residue {residue} is outside the orbit basis span"))
    })?;
    if decomposition.coeffs != a {
        return Err(Error::CongruenceMismatch(format!(
            "residue decomposes as {:?}, Möbius inversion gives {:?}",
            decomposition.coeffs, a
        )));
    }
    Ok(CongruenceResult { n, b, a, residue })
}

/// `q^{-κ(λ)} s_λ(1, q, ..., q^{m-1}) = Π_{i<j} (1 - q^{(λ_i - i) - (λ_j - j)}) / (1 - q^{j - i})`.
pub fn principal_specialization(lambda: &Partition, m: usize) -> Result<IntPoly> {
    if lambda.len() > m {
        return Err(Error::ShapeTooLong {
            len: lambda.len(),
            bound: m,
        });
    }
    let shifted: Vec<i64> = lambda
        .padded(m)
        .iter()
        .enumerate()
        .map(|(i, &p)| i64::from(p) - i as i64)
        .collect();
    let mut num = Vec::new();
    let mut den = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            num.push((shifted[i] - shifted[j]) as u64);
            den.push((j - i) as u64);
        }
    }
    QdimFactorization {
        numerator_exponents: num,
        denominator_exponents: den,
    }
    .expand()
}

/// `s_λ(1, q, ..., q^{m-1})` itself, i.e. the principal specialisation times `q^{κ(λ)}`.
pub fn schur_specialization(lambda: &Partition, m: usize) -> Result<IntPoly> {
    Ok(principal_specialization(lambda, m)?.shift(lambda.kappa() as usize))
}
