//! The Burnside Tambara functor of a cyclic group `C_N`.
//!
//! Level `M` (for `M | N`) is the Burnside ring `A(C_M)`. It is free on the
//! transitive sets `t_k = C_M / C_{M/k}` of cardinality `k`, one for each
//! divisor `k` of `M`, with `t_k · t_j = gcd(k, j) · t_{lcm(k, j)}`.
//! Conjugations are trivial and are not represented.
//!
//! The same element type models truncations of the pro-cyclic groups `ℤ_p`
//! and `Ẑ`: a truncation is the finite quotient `C_T`, and every formula is
//! shared.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::json::JsonInt;
use crate::numtheory::{divisors, factorize, is_prime};

/// The level `C_N / C_M`, i.e. the ring `A(C_M)` inside the functor on `C_N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Level {
    modulus: u64,
    order: u64,
}

impl Level {
    pub fn new(modulus: u64, order: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::NotPositive(0));
        }
        if order == 0 || !modulus.is_multiple_of(order) {
            return Err(Error::NotDivisor { divisor: order, of: modulus });
        }
        Ok(Level { modulus, order })
    }

    /// Ambient group order `N`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Subgroup order `M`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Basis labels of this level, ascending. This is the coordinate order
    /// of every vector representation.
    pub fn basis(&self) -> Vec<u64> {
        divisors(self.order).expect("order is positive")
    }

    pub fn rank(&self) -> usize {
        self.basis().len()
    }

    /// Same subgroup order, viewed inside a different ambient modulus.
    pub fn with_modulus(&self, modulus: u64) -> Result<Self> {
        Level::new(modulus, self.order)
    }

    fn sibling(&self, order: u64) -> Result<Self> {
        Level::new(self.modulus, order)
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{}/C_{}", self.modulus, self.order)
    }
}

/// `Σ a_k · t_k` at a fixed level. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BurnsideElement {
    level: Level,
    coeffs: BTreeMap<u64, BigInt>,
}

impl BurnsideElement {
    pub fn zero(level: Level) -> Self {
        BurnsideElement { level, coeffs: BTreeMap::new() }
    }

    pub fn one(level: Level) -> Self {
        Self::basis_element(level, 1).expect("1 divides every order")
    }

    /// The transitive set `t_k` of cardinality `k`.
    pub fn basis_element(level: Level, k: u64) -> Result<Self> {
        Self::from_coeffs(level, [(k, 1)])
    }

    pub fn from_coeffs<I, C>(level: Level, coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero(level);
        for (k, c) in coeffs {
            if k == 0 || !level.order.is_multiple_of(k) {
                return Err(Error::NotDivisor { divisor: k, of: level.order });
            }
            out.add_term(k, c.into());
        }
        Ok(out)
    }

    /// Coordinates in the basis order of [`Level::basis`].
    pub fn from_vector(level: Level, v: &[BigInt]) -> Result<Self> {
        let basis = level.basis();
        if basis.len() != v.len() {
            return Err(Error::LengthMismatch { expected: basis.len(), got: v.len() });
        }
        Self::from_coeffs(level, basis.into_iter().zip(v.iter().cloned()))
    }

    pub fn to_vector(&self) -> Vec<BigInt> {
        self.level.basis().into_iter().map(|k| self.coeff(k)).collect()
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn coeff(&self, k: u64) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    /// Nonzero `(k, a_k)` pairs, ascending in `k`.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Reinterpret at the same subgroup order inside another modulus.
    pub fn rehome(&self, modulus: u64) -> Result<Self> {
        Ok(BurnsideElement { level: self.level.with_modulus(modulus)?, coeffs: self.coeffs.clone() })
    }

    fn add_term(&mut self, k: u64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    fn same_level(&self, other: &Self) -> Result<()> {
        if self.level != other.level {
            return Err(Error::LevelMismatch {
                left: self.level.to_string(),
                right: other.level.to_string(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_level(other)?;
        let mut out = self.clone();
        for (&k, c) in &other.coeffs {
            out.add_term(k, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_level(other)?;
        let mut out = Self::zero(self.level);
        for (&k, a) in &self.coeffs {
            for (&j, b) in &other.coeffs {
                let g = k.gcd(&j);
                out.add_term(k.lcm(&j), a * b * BigInt::from(g));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.level);
        for (&k, a) in &self.coeffs {
            out.add_term(k, a * c);
        }
        out
    }

    /// `x^e` for `e >= 0`.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.level);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Cardinality homomorphism `Σ k · a_k`.
    pub fn card(&self) -> BigInt {
        self.coeffs.iter().map(|(&k, a)| a * BigInt::from(k)).sum()
    }

    /// Restriction to the subgroup of order `target`: with `k = M / target`,
    /// `t_i ↦ gcd(i, k) · t_{i / gcd(i, k)}`.
    pub fn restrict(&self, target: u64) -> Result<Self> {
        let from = self.level.order;
        if target == 0 || !from.is_multiple_of(target) {
            return Err(Error::NotDivisor { divisor: target, of: from });
        }
        let k = from / target;
        let mut out = Self::zero(self.level.sibling(target)?);
        for (&i, b) in &self.coeffs {
            let d = i.gcd(&k);
            out.add_term(i / d, b * BigInt::from(d));
        }
        Ok(out)
    }

    /// Transfer (induction) to the overgroup of order `target`: `t_i ↦ t_{i·k}`.
    pub fn transfer(&self, target: u64) -> Result<Self> {
        let to = self.upward(target)?;
        let k = target / self.level.order;
        let mut out = Self::zero(to);
        for (&i, a) in &self.coeffs {
            out.add_term(i * k, a.clone());
        }
        Ok(out)
    }

    /// Multiplicative norm (coinduction `Map_{C_K}(C_M, -)`) to the overgroup
    /// of order `target`, computed as a composite of prime-index steps.
    pub fn norm(&self, target: u64) -> Result<Self> {
        self.upward(target)?;
        let k = target / self.level.order;
        let mut x = self.clone();
        for p in factorize(k)?.prime_chain() {
            x = x.norm_step(x.level.order * p);
        }
        Ok(x)
    }

    /// Norm in a single step of arbitrary index, used to cross-check the
    /// prime-chain composite in [`norm`](Self::norm).
    pub fn norm_direct(&self, target: u64) -> Result<Self> {
        self.upward(target)?;
        Ok(self.norm_step(target))
    }

    fn upward(&self, target: u64) -> Result<Level> {
        let from = self.level.order;
        if target == 0 || !target.is_multiple_of(from) {
            return Err(Error::NotDivisor { divisor: from, of: target });
        }
        self.level.sibling(target)
    }

    /// `N(X) = Σ_{i | M} C(i)/i · t_i` where, with `k = M/K`,
    /// `Σ_{j | i} C(j) = (Σ_{j | i/gcd(i,k)} j·a_j)^{gcd(i,k)}`.
    ///
    /// The right-hand side is the number of points of `N(X)` fixed by the
    /// subgroup of order `M/i`, so `C(i)` counts points in free orbits of
    /// size `i` and must be divisible by `i`.
    fn norm_step(&self, target: u64) -> Self {
        let level = self.level.sibling(target).expect("validated by caller");
        let k = target / self.level.order;
        let basis = level.basis();
        let mut counts: BTreeMap<u64, BigInt> = BTreeMap::new();
        let mut out = Self::zero(level);
        for &i in &basis {
            let g = i.gcd(&k);
            let r = i / g;
            let inner: BigInt = self
                .coeffs
                .iter()
                .filter(|(&j, _)| r % j == 0)
                .map(|(&j, a)| a * BigInt::from(j))
                .sum();
            let mut c = Pow::pow(inner, g as u32);
            for (&j, cj) in &counts {
                if i % j == 0 {
                    c -= cj;
                }
            }
            let (q, rem) = c.div_rem(&BigInt::from(i));
            assert!(
                rem.is_zero(),
                "norm integrality failure: C({i}) = {c} not divisible by {i} ({} -> order {target})",
                self
            );
            out.add_term(i, q);
            counts.insert(i, c);
        }
        out
    }
}

impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (n, (&k, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 1 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "t_{k}")?;
            } else {
                write!(f, "{mag}t_{k}")?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        /// Panics when the operands live at different levels; use the
        /// `checked_*` method to get an error instead.
        impl $tr<&BurnsideElement> for &BurnsideElement {
            type Output = BurnsideElement;
            fn $method(self, rhs: &BurnsideElement) -> BurnsideElement {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $tr for BurnsideElement {
            type Output = BurnsideElement;
            fn $method(self, rhs: BurnsideElement) -> BurnsideElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &BurnsideElement {
    type Output = BurnsideElement;
    fn neg(self) -> BurnsideElement {
        BurnsideElement {
            level: self.level,
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for BurnsideElement {
    type Output = BurnsideElement;
    fn neg(self) -> BurnsideElement {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    #[serde(rename = "N")]
    modulus: u64,
    #[serde(rename = "M")]
    order: u64,
    coeffs: BTreeMap<u64, JsonInt>,
}

impl Serialize for BurnsideElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ElementJson {
            modulus: self.level.modulus,
            order: self.level.order,
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, JsonInt(c.clone()))).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BurnsideElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = ElementJson::deserialize(d)?;
        let level = Level::new(raw.modulus, raw.order).map_err(serde::de::Error::custom)?;
        BurnsideElement::from_coeffs(level, raw.coeffs.into_iter().map(|(k, c)| (k, c.0)))
            .map_err(serde::de::Error::custom)
    }
}

/// Which pro-cyclic group a truncated level belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProCyclicKind {
    Zp(u64),
    Zhat,
}

/// A level of `ℤ_p` or `Ẑ` cut down to the finite quotient `C_truncation`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProCyclicLevel {
    kind: ProCyclicKind,
    index: u64,
    truncation: u64,
}

impl ProCyclicLevel {
    pub fn new(kind: ProCyclicKind, index: u64, truncation: u64) -> Result<Self> {
        match kind {
            ProCyclicKind::Zp(p) => {
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                for v in [index, truncation] {
                    if !is_power_of(v, p) {
                        return Err(Error::InvalidValue(format!("{v} is not a power of {p}")));
                    }
                }
                if index > truncation {
                    return Err(Error::NotDivisor { divisor: index, of: truncation });
                }
            }
            ProCyclicKind::Zhat => {
                if index == 0 || truncation == 0 || !truncation.is_multiple_of(index) {
                    return Err(Error::NotDivisor { divisor: index, of: truncation });
                }
            }
        }
        Ok(ProCyclicLevel { kind, index, truncation })
    }

    pub fn kind(&self) -> ProCyclicKind {
        self.kind
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn truncation(&self) -> u64 {
        self.truncation
    }

    /// The finite level carrying the same divisor indexing.
    pub fn to_level(&self) -> Level {
        Level::new(self.truncation, self.index).expect("validated on construction")
    }
}

fn is_power_of(mut v: u64, p: u64) -> bool {
    if v == 0 {
        return false;
    }
    while v.is_multiple_of(p) {
        v /= p;
    }
    v == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(n: u64, m: u64, coeffs: &[(u64, i64)]) -> BurnsideElement {
        BurnsideElement::from_coeffs(Level::new(n, m).unwrap(), coeffs.iter().copied()).unwrap()
    }

    #[test]
    fn multiplication_table() {
        assert_eq!(el(2, 2, &[(2, 1)]) * el(2, 2, &[(2, 1)]), el(2, 2, &[(2, 2)]));
        let x = el(4, 4, &[(4, 3), (2, -1)]);
        assert_eq!(BurnsideElement::one(x.level()) * x.clone(), x);
        assert_eq!(el(12, 12, &[(4, 1)]) * el(12, 12, &[(6, 1)]), el(12, 12, &[(12, 2)]));
    }

    #[test]
    fn level_mismatch_is_an_error() {
        let a = el(4, 4, &[(2, 1)]);
        let b = el(4, 2, &[(2, 1)]);
        assert!(matches!(a.checked_mul(&b), Err(Error::LevelMismatch { .. })));
        assert!(a.checked_add(&b).is_err());
    }

    #[test]
    fn restriction_examples() {
        assert_eq!(el(4, 4, &[(4, 1)]).restrict(2).unwrap(), el(4, 2, &[(2, 2)]));
        let x = el(12, 12, &[(12, 5), (6, -2), (1, 7)]);
        assert_eq!(x.restrict(12).unwrap(), x);
        assert_eq!(el(12, 12, &[(6, 1)]).restrict(4).unwrap(), el(12, 4, &[(2, 3)]));
        assert!(x.restrict(5).is_err());
    }

    #[test]
    fn transfer_examples() {
        assert_eq!(el(3, 1, &[(1, 1)]).transfer(3).unwrap(), el(3, 3, &[(3, 1)]));
        assert_eq!(el(4, 2, &[(2, 1)]).transfer(4).unwrap(), el(4, 4, &[(4, 1)]));
        assert_eq!(
            el(6, 3, &[(3, 2), (1, -1)]).transfer(6).unwrap(),
            el(6, 6, &[(6, 2), (2, -1)])
        );
        assert!(el(6, 3, &[(3, 1)]).transfer(12).is_err());
        assert!(el(6, 2, &[(2, 1)]).transfer(3).is_err());
    }

    #[test]
    fn norm_examples() {
        assert_eq!(el(2, 1, &[(1, 2)]).norm(2).unwrap(), el(2, 2, &[(2, 1), (1, 2)]));
        assert_eq!(
            el(9, 3, &[(3, 1), (1, -3)]).norm(9).unwrap(),
            el(9, 9, &[(9, 3), (3, -8), (1, -3)])
        );
        assert_eq!(
            el(8, 4, &[(4, 1), (2, -1), (1, -2)]).norm(8).unwrap(),
            el(8, 8, &[(8, -2), (4, 3), (2, 3), (1, -2)])
        );
        let z = BurnsideElement::zero(Level::new(12, 2).unwrap());
        assert!(z.norm(12).unwrap().is_zero());
        let one = BurnsideElement::one(Level::new(12, 2).unwrap());
        assert_eq!(one.norm(12).unwrap(), BurnsideElement::one(Level::new(12, 12).unwrap()));
    }

    #[test]
    fn norm_of_identity_step_is_identity() {
        let x = el(12, 6, &[(6, -3), (3, 2), (1, 4)]);
        assert_eq!(x.norm(6).unwrap(), x);
        assert_eq!(x.norm_direct(6).unwrap(), x);
    }

    #[test]
    fn cardinality() {
        assert_eq!(el(5, 5, &[(5, 1), (1, -5)]).card(), BigInt::zero());
        assert_eq!(el(5, 5, &[(1, 1)]).card(), BigInt::one());
        assert_eq!(el(12, 12, &[(4, 3), (6, -1)]).card(), BigInt::from(6));
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let x = el(6, 6, &[(2, 3), (2, -3), (3, 0)]);
        assert!(x.is_zero());
        assert!(BurnsideElement::from_coeffs(Level::new(6, 6).unwrap(), [(4u64, 1)]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(el(9, 9, &[(9, 3), (3, -8), (1, -3)]).to_string(), "3t_9 - 8t_3 - 3");
        assert_eq!(el(4, 4, &[(4, -1), (2, 1)]).to_string(), "-t_4 + t_2");
        assert_eq!(BurnsideElement::zero(Level::new(1, 1).unwrap()).to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let x = el(12, 6, &[(6, 2), (2, -1)]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"N":12,"M":6,"coeffs":{"2":-1,"6":2}}"#);
        let back: BurnsideElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<BurnsideElement>(r#"{"N":12,"M":5,"coeffs":{}}"#).is_err());
        assert!(serde_json::from_str::<BurnsideElement>(r#"{"N":12,"M":6,"coeffs":{"4":1}}"#).is_err());
    }

    #[test]
    fn pro_cyclic_levels() {
        let l = ProCyclicLevel::new(ProCyclicKind::Zp(2), 4, 32).unwrap();
        assert_eq!(l.to_level(), Level::new(32, 4).unwrap());
        assert!(ProCyclicLevel::new(ProCyclicKind::Zp(2), 6, 32).is_err());
        assert!(ProCyclicLevel::new(ProCyclicKind::Zp(3), 27, 9).is_err());
        assert!(ProCyclicLevel::new(ProCyclicKind::Zp(4), 4, 16).is_err());
        assert!(ProCyclicLevel::new(ProCyclicKind::Zhat, 6, 24).is_ok());
        assert!(ProCyclicLevel::new(ProCyclicKind::Zhat, 5, 24).is_err());
    }
}
