//! Dense univariate polynomials in `q` with big integer coefficients.
//!
//! Besides ring arithmetic this module provides the pieces needed to reason
//! modulo `q^n - 1`: cyclotomic polynomials, remainders by monic divisors,
//! exact evaluation at roots of unity, and the orbit basis
//! `(q^n - 1)/(q^{n/d} - 1)`, `d | n`.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

/// A polynomial `Σ coeffs[k] q^k`.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c q^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// `q^n - 1`.
    pub fn q_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] += BigInt::one();
        Self::from_coeffs(coeffs)
    }

    /// `1 + q^s + q^{2s} + ... + q^{(d-1)s}` with `s = n/d`, i.e. `(q^n - 1)/(q^{n/d} - 1)`.
    pub fn orbit_basis(n: u64, d: u64) -> Self {
        assert!(d > 0 && n % d == 0, "orbit basis needs d | n");
        let step = (n / d) as usize;
        let mut coeffs = vec![BigInt::zero(); step * (d as usize - 1) + 1];
        for k in 0..d as usize {
            coeffs[k * step] = BigInt::one();
        }
        Self::from_coeffs(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// The constant term if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `f(1)`, the sum of coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiplies in place by `1 - q^k`.
    pub fn mul_one_minus_q_pow(&mut self, k: usize) {
        if self.is_zero() {
            return;
        }
        if k == 0 {
            self.coeffs.clear();
            return;
        }
        let old_len = self.coeffs.len();
        self.coeffs.resize(old_len + k, BigInt::zero());
        for i in (k..old_len + k).rev() {
            let sub = self.coeffs[i - k].clone();
            self.coeffs[i] -= sub;
        }
        self.trim();
    }

    /// Divides in place by `1 - q^k`, failing when the division is not exact.
    pub fn div_one_minus_q_pow(&mut self, k: usize) -> Result<()> {
        if k == 0 {
            return Err(Error::InexactDivision);
        }
        if self.is_zero() {
            return Ok(());
        }
        // h_i = f_i + h_{i-k}; the quotient has degree deg f - k.
        let len = self.coeffs.len();
        if len <= k {
            return Err(Error::InexactDivision);
        }
        for i in k..len {
            let prev = self.coeffs[i - k].clone();
            self.coeffs[i] += prev;
        }
        // The top k entries are now the remainder relation; exactness means
        // they vanish once the quotient is read off from the low part.
        if self.coeffs[len - k..].iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        self.coeffs.truncate(len - k);
        self.trim();
        Ok(())
    }

    /// Exact quotient `f / g`.
    pub fn divexact(&self, g: &IntPoly) -> Result<IntPoly> {
        let lead = g.leading().ok_or(Error::InexactDivision)?.clone();
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return Err(Error::InexactDivision);
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dg;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + dg];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, gj) in g.coeffs.iter().enumerate() {
                if !gj.is_zero() {
                    rem[k + j] -= &c * gj;
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// Quotient and remainder by a monic divisor of positive degree.
    pub fn div_rem_monic(&self, g: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        if !g.is_monic() || g.coeffs.len() < 2 {
            return Err(Error::NotMonic);
        }
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dg;
        let mut quot = vec![BigInt::zero(); qlen];
        let support: Vec<(usize, &BigInt)> = g.coeffs[..dg]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for k in (0..qlen).rev() {
            let c = std::mem::take(&mut rem[k + dg]);
            if c.is_zero() {
                continue;
            }
            for &(j, gj) in &support {
                rem[k + j] -= &c * gj;
            }
            quot[k] = c;
        }
        rem.truncate(dg);
        Ok((IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem)))
    }

    /// Remainder of `self` modulo a monic `g`.
    pub fn rem_mod(&self, g: &IntPoly) -> Result<IntPoly> {
        self.div_rem_monic(g).map(|(_, r)| r)
    }

    /// Remainder modulo `q^n - 1`, computed by folding exponents.
    pub fn rem_q_pow_minus_one(&self, n: usize) -> IntPoly {
        assert!(n > 0, "modulus q^0 - 1 is zero");
        let mut out = vec![BigInt::zero(); n.min(self.coeffs.len())];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k % n] += c;
        }
        IntPoly::from_coeffs(out)
    }

    /// `q^k · self`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Text form `c0 + c1*q + c2*q^2 + ...`; unit coefficients are omitted.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}*q^{k}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 && !compact[..i].ends_with('^') {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);

        let mut coeffs: BTreeMap<usize, BigInt> = BTreeMap::new();
        for term in terms {
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-1, &term[1..]),
                Some(b'+') => (1, &term[1..]),
                _ => (1, term),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coef, exp) = match body.find('q') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let head = &body[..pos];
                    let coef = match head {
                        "" => BigInt::one(),
                        h => h
                            .strip_suffix('*')
                            .ok_or_else(bad)?
                            .parse::<BigInt>()
                            .map_err(|_| bad())?,
                    };
                    let tail = &body[pos + 1..];
                    let exp = match tail {
                        "" => 1,
                        t => t
                            .strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse::<usize>()
                            .map_err(|_| bad())?,
                    };
                    (coef, exp)
                }
            };
            *coeffs.entry(exp).or_default() += coef * sign;
        }
        let deg = coeffs.keys().next_back().copied().unwrap_or(0);
        let mut dense = vec![BigInt::zero(); deg + 1];
        for (k, c) in coeffs {
            dense[k] = c;
        }
        Ok(IntPoly::from_coeffs(dense))
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        raw.iter()
            .map(|c| c.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(IntPoly::from_coeffs)
    }
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Classical Möbius function by trial factorisation.
pub fn mobius(k: u64) -> i32 {
    assert!(k >= 1, "mobius is defined on positive integers");
    let mut n = k;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| n % p != 0)
}

fn cyclotomic_cache() -> &'static RwLock<HashMap<u64, IntPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, IntPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `d`-th cyclotomic polynomial `Φ_d(q)`, memoised per process.
pub fn cyclotomic(d: u64) -> IntPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(p) = cyclotomic_cache().read().unwrap().get(&d) {
        return p.clone();
    }
    let mut p = IntPoly::q_pow_minus_one(d as usize);
    for e in divisors(d) {
        if e < d {
            p = p
                .divexact(&cyclotomic(e))
                .expect("q^d - 1 is the product of Φ_e over e | d");
        }
    }
    cyclotomic_cache().write().unwrap().insert(d, p.clone());
    p
}

/// Value of a polynomial at a root of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluation {
    Integer(BigInt),
    /// The value is not a rational number.
    NonRational,
}

impl Evaluation {
    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            Evaluation::Integer(v) => Some(v),
            Evaluation::NonRational => None,
        }
    }

    /// Whether the value lies in ℕ = {0, 1, 2, ...}.
    pub fn is_natural(&self) -> bool {
        self.as_integer().is_some_and(|v| !v.is_negative())
    }
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evaluation::Integer(v) => write!(f, "{v}"),
            Evaluation::NonRational => write!(f, "non-rational"),
        }
    }
}

/// Exact value of `f(ω_n^j)` where `ω_n` is a primitive `n`-th root of unity.
///
/// `ω_n^j` is a primitive `d`-th root with `d = n / gcd(n, j)`; its value is
/// rational exactly when `f mod Φ_d` is constant.
pub fn eval_root_of_unity(f: &IntPoly, n: u64, j: i64) -> Evaluation {
    assert!(n >= 1, "root of unity order must be positive");
    let j = j.rem_euclid(n as i64) as u64;
    let d = n / n.gcd(&j);
    if d == 1 {
        return Evaluation::Integer(f.eval_one());
    }
    let r = f
        .rem_mod(&cyclotomic(d))
        .expect("cyclotomic polynomials are monic");
    match r.as_constant() {
        Some(v) => Evaluation::Integer(v),
        None => Evaluation::NonRational,
    }
}

/// Coordinates of a residue in the orbit basis `(q^n - 1)/(q^{n/d} - 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDecomposition {
    pub n: u64,
    #[serde(serialize_with = "crate::serde_big::ser_map")]
    #[serde(deserialize_with = "crate::serde_big::de_map")]
    pub coeffs: BTreeMap<u64, BigInt>,
}

impl OrbitDecomposition {
    pub fn reconstruct(&self) -> IntPoly {
        self.coeffs
            .iter()
            .fold(IntPoly::zero(), |acc, (&d, a)| {
                &acc + &(&IntPoly::constant(a.clone()) * &IntPoly::orbit_basis(self.n, d))
            })
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|a| !a.is_negative())
    }
}

/// Writes `r` as `Σ_{d|n} a_d (q^n - 1)/(q^{n/d} - 1)` if possible.
///
/// Basis elements have pairwise distinct degrees `n - n/d`, so the
/// coefficients are peeled from the top degree downwards. Negative `a_d` are
/// allowed; `None` means `r` is outside the span.
pub fn orbit_basis_decompose(r: &IntPoly, n: u64) -> Option<OrbitDecomposition> {
    assert!(n >= 1, "modulus order must be positive");
    if r.degree().is_some_and(|deg| deg as u64 >= n) {
        return None;
    }
    let mut rest = r.clone();
    let mut coeffs = BTreeMap::new();
    for d in divisors(n).into_iter().rev() {
        let top = (n - n / d) as usize;
        let a = rest.coeff(top);
        if !a.is_zero() {
            rest = &rest - &(&IntPoly::constant(a.clone()) * &IntPoly::orbit_basis(n, d));
        }
        coeffs.insert(d, a);
    }
    rest.is_zero().then_some(OrbitDecomposition { n, coeffs })
}
