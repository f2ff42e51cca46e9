//! The Grothendieck–Witt Tambara functor of a finite field of odd
//! characteristic.
//!
//! Over `F = F_{q^m}` a virtual form is determined by its dimension and the
//! square class of its determinant, so `GW(F) ≅ ℤ ⊕ ℤ/2` with
//! `(n, ε)·(n', ε') = (n n', n ε' + n' ε)`. Here `⟨1⟩ = (1, 0)` and the
//! class of a non-square generator is `(1, 1)`.
//!
//! `degree` is the extension degree of the field over the base `F_q`.
//! Structure maps only depend on the relative degree, and `q` enters only
//! through labels and [`tau_finite_field`].

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::json::JsonInt;
use crate::numtheory::{binom_over_ell, factorize, is_odd_prime_power, is_perfect_square, is_sum_of_two_squares};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GwClass {
    q: u64,
    degree: u64,
    dim: BigInt,
    det: bool,
}

impl GwClass {
    pub fn new(q: u64, degree: u64, dim: impl Into<BigInt>, det: bool) -> Result<Self> {
        if !is_odd_prime_power(q) {
            return Err(Error::InvalidFieldOrder(q));
        }
        if degree == 0 {
            return Err(Error::NotPositive(0));
        }
        Ok(GwClass { q, degree, dim: dim.into(), det })
    }

    pub fn zero(q: u64, degree: u64) -> Result<Self> {
        Self::new(q, degree, 0, false)
    }

    /// `⟨1⟩`
    pub fn one(q: u64, degree: u64) -> Result<Self> {
        Self::new(q, degree, 1, false)
    }

    /// The unary form on a non-square generator.
    pub fn nonsquare(q: u64, degree: u64) -> Result<Self> {
        Self::new(q, degree, 1, true)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn dim(&self) -> &BigInt {
        &self.dim
    }

    /// `true` when the determinant is the non-square class.
    pub fn det(&self) -> bool {
        self.det
    }

    pub fn is_zero(&self) -> bool {
        self.dim.is_zero() && !self.det
    }

    fn with(&self, dim: BigInt, det: bool) -> Self {
        GwClass { q: self.q, degree: self.degree, dim, det }
    }

    fn at_degree(&self, degree: u64, dim: BigInt, det: bool) -> Self {
        GwClass { q: self.q, degree, dim, det }
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.q != other.q || self.degree != other.degree {
            return Err(Error::FieldMismatch {
                q1: self.q,
                m1: self.degree,
                q2: other.q,
                m2: other.degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(&self.dim + &other.dim, self.det ^ other.det))
    }

    pub fn neg(&self) -> Self {
        self.with(-&self.dim, self.det)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let det = (self.dim.is_odd() && other.det) ^ (other.dim.is_odd() && self.det);
        Ok(self.with(&self.dim * &other.dim, det))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.with(&self.dim * c, self.det && c.is_odd())
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return self.with(BigInt::one(), false);
        }
        // (n, ε)^e = (n^e, e n^{e-1} ε)
        let det = self.det && e % 2 == 1 && (e == 1 || self.dim.is_odd());
        self.with(Pow::pow(&self.dim, e), det)
    }

    /// Extension of scalars to the degree-`m` extension: the determinant
    /// survives iff `m` is odd.
    pub fn restrict(&self, m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::NotPositive(0));
        }
        let degree = self.degree.checked_mul(m).ok_or(Error::Overflow("field degree"))?;
        Ok(self.at_degree(degree, self.dim.clone(), self.det && m % 2 == 1))
    }

    /// Scharlau transfer down to the subfield of index `m`.
    ///
    /// `tr⟨1⟩ = (m, [m even])` and `tr⟨β⟩ = (m, [m odd])`, extended additively.
    pub fn transfer(&self, m: u64) -> Result<Self> {
        let degree = self.down(m)?;
        let dim = &self.dim * BigInt::from(m);
        let det = if m.is_multiple_of(2) { self.dim.is_odd() ^ self.det } else { self.det };
        Ok(self.at_degree(degree, dim, det))
    }

    /// Rost norm down to the subfield of index `m`, by the closed formulas
    /// `N(n⟨1⟩) = (n^m, e)`, `N((n-1)⟨1⟩ ⊕ ⟨β⟩) = (n^m, e')` with
    ///
    /// | m        | e             | e'             |
    /// |----------|---------------|----------------|
    /// | odd > 1  | 0             | n              |
    /// | 2        | (n² − n)/2    | (n² − 3n)/2    |
    /// | even > 2 | (n³ − n²)/2   | (n³ − 3n²)/2   |
    ///
    /// taken mod 2, applied to every integer `n`. For `m = 1` the norm is
    /// the identity; the odd row would lose `α` for even `n`.
    pub fn norm_closed(&self, m: u64) -> Result<Self> {
        let degree = self.down(m)?;
        if m == 1 {
            return Ok(self.clone());
        }
        let n = &self.dim;
        let exp = u32::try_from(m).map_err(|_| Error::Overflow("norm exponent"))?;
        let dim = Pow::pow(n, exp);
        let half = |num: BigInt| -> bool { (num / 2u32).is_odd() };
        let det = match (m % 2 == 1, m == 2, self.det) {
            (true, _, false) => false,
            (true, _, true) => n.is_odd(),
            (false, true, false) => half(n * n - n),
            (false, true, true) => half(n * n - n * 3u32),
            (false, false, false) => half(n * n * n - n * n),
            (false, false, true) => half(n * n * n - n * n * 3u32),
        };
        Ok(self.at_degree(degree, dim, det))
    }

    /// The same norm computed independently from Tambara reciprocity along
    /// the prime factorization of `m`. Each prime step `ℓ` starts from the
    /// unary norms `N⟨1⟩ = ⟨1⟩` and `N⟨β⟩ = ⟨α⟩` and uses
    /// `N(a + b) = N(a) + N(b) + tr(Σ_{i=1}^{ℓ-1} C(ℓ,i)/ℓ · a^i b^{ℓ-i})`.
    pub fn norm_oracle(&self, m: u64) -> Result<Self> {
        self.down(m)?;
        let mut x = self.clone();
        for ell in factorize(m)?.prime_chain() {
            let mut memo = HashMap::new();
            x = reciprocity_norm(&x, ell, &mut memo)?;
        }
        Ok(x)
    }

    fn down(&self, m: u64) -> Result<u64> {
        if m == 0 || !self.degree.is_multiple_of(m) {
            return Err(Error::NotDivisor { divisor: m, of: self.degree });
        }
        Ok(self.degree / m)
    }
}

/// Cross term `Σ_{i=1}^{ℓ-1} C(ℓ,i)/ℓ · a^i b^{ℓ-i}` of the reciprocity formula.
pub fn reciprocity_cross_term(a: &GwClass, b: &GwClass, ell: u64) -> Result<GwClass> {
    let mut acc = a.with(BigInt::zero(), false);
    for i in 1..ell {
        let coeff = binom_over_ell(ell, i)?;
        let term = a.pow(i as u32).mul(&b.pow((ell - i) as u32))?.scale(&coeff);
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// Prime-index norm by binary splitting `(n, ε) = (⌊n/2⌋, 0) + (⌈n/2⌉, ε)`.
/// Negative dimensions go through `N(−x) = −N(x) − tr(g(x, −x))`, which is
/// the reciprocity formula applied to `N(x + (−x)) = N(0) = 0`.
fn reciprocity_norm(
    x: &GwClass,
    ell: u64,
    memo: &mut HashMap<(BigInt, bool), GwClass>,
) -> Result<GwClass> {
    if let Some(hit) = memo.get(&(x.dim.clone(), x.det)) {
        return Ok(hit.clone());
    }
    let degree = x.down(ell)?;
    let base = |dim: i64, det: bool| x.at_degree(degree, BigInt::from(dim), det);
    let result = if x.dim.is_negative() {
        let pos = x.neg();
        let n_pos = reciprocity_norm(&pos, ell, memo)?;
        let cross = reciprocity_cross_term(&pos, x, ell)?.transfer(ell)?;
        n_pos.neg().sub(&cross)?
    } else if x.dim.is_zero() {
        if x.det {
            // (0, 1) = (1, 1) + (-1, 0)
            let a = x.with(BigInt::one(), true);
            let b = x.with(BigInt::from(-1), false);
            combine(&a, &b, ell, memo)?
        } else {
            base(0, false)
        }
    } else if x.dim.is_one() {
        base(1, x.det)
    } else {
        let half: BigInt = &x.dim / 2u32;
        let a = x.with(half.clone(), false);
        let b = x.with(&x.dim - half, x.det);
        combine(&a, &b, ell, memo)?
    };
    memo.insert((x.dim.clone(), x.det), result.clone());
    Ok(result)
}

fn combine(
    a: &GwClass,
    b: &GwClass,
    ell: u64,
    memo: &mut HashMap<(BigInt, bool), GwClass>,
) -> Result<GwClass> {
    let na = reciprocity_norm(a, ell, memo)?;
    let nb = reciprocity_norm(b, ell, memo)?;
    let cross = reciprocity_cross_term(a, b, ell)?.transfer(ell)?;
    na.add(&nb)?.add(&cross)
}

impl fmt::Display for GwClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}) in GW(F_{}^{})",
            self.dim,
            if self.det { "α" } else { "1" },
            self.q,
            self.degree
        )
    }
}

#[derive(Serialize, Deserialize)]
struct GwJson {
    q: u64,
    m: u64,
    dim: JsonInt,
    det: u8,
}

impl Serialize for GwClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GwJson { q: self.q, m: self.degree, dim: JsonInt(self.dim.clone()), det: self.det as u8 }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GwClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = GwJson::deserialize(d)?;
        if raw.det > 1 {
            return Err(serde::de::Error::custom("det must be 0 or 1"));
        }
        GwClass::new(raw.q, raw.m, raw.dim.0, raw.det == 1).map_err(serde::de::Error::custom)
    }
}

/// Zero, or the least power of two `2^k` such that an element is a sum of
/// `2^k` squares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TauValue(u64);

impl TauValue {
    pub fn new(value: u64) -> Result<Self> {
        if value == 0 || value.is_power_of_two() {
            Ok(TauValue(value))
        } else {
            Err(Error::InvalidValue(format!("tau must be 0 or a power of 2, got {value}")))
        }
    }

    pub fn value(&self) -> u64 {
        self.0
    }
}

impl fmt::Display for TauValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Every element of a finite field is a sum of two squares.
pub fn tau_finite_field(q: u64, is_square: bool) -> Result<TauValue> {
    if !is_odd_prime_power(q) {
        return Err(Error::InvalidFieldOrder(q));
    }
    Ok(TauValue(if is_square { 1 } else { 2 }))
}

/// Nonzero rational `numerator / denominator`, reduced on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidValue("zero denominator".into()));
        }
        let g = num.gcd(&den);
        let sign = if den < 0 { -1 } else { 1 };
        let g = if g == 0 { 1 } else { g };
        Ok(Rational { num: sign * num / g, den: sign * den / g })
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }
}

impl std::str::FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidValue(format!("not a rational: {s:?}"));
        match s.split_once('/') {
            Some((a, b)) => Rational::new(
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            ),
            None => Rational::new(s.trim().parse().map_err(|_| bad())?, 1),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// `τ_ℚ(a/b)`: 0 for negatives, 1 for squares, 2 when `ab` is a sum of two
/// integer squares, 4 otherwise (four-square theorem).
pub fn tau_rational(r: Rational) -> Result<TauValue> {
    if r.num == 0 {
        return Err(Error::InvalidValue("tau is undefined at 0".into()));
    }
    if r.num < 0 {
        return Ok(TauValue(0));
    }
    let (a, b) = (r.num as u64, r.den as u64);
    if is_perfect_square(a) && is_perfect_square(b) {
        return Ok(TauValue(1));
    }
    let ab = a.checked_mul(b).ok_or(Error::Overflow("a·b"))?;
    Ok(TauValue(if is_sum_of_two_squares(ab)? { 2 } else { 4 }))
}

/// `π(τ)`: 0, 2 for `τ ∈ {1, 2}`, and `τ/2` from 4 on.
pub fn pi(tau: TauValue) -> u64 {
    match tau.0 {
        0 => 0,
        1 | 2 => 2,
        t => t / 2,
    }
}
