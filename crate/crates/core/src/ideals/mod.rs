//! Tambara ideals of the Burnside functor of `C_N`.
//!
//! An ideal is stored level by level: for each `M | N` a sublattice of
//! `A(C_M) ≅ ℤ^{τ(M)}` in the coordinates of [`Level::basis`]. A family of
//! lattices is a Tambara ideal when every level is closed under
//! multiplication by `A(C_M)`, restriction carries level `M` into level `K`,
//! and transfer and norm carry level `K` into level `M`, for all `K | M`.

mod catalog;
mod saturate;
mod verify;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::burnside::{BurnsideElement, Level};
use crate::error::{Error, Result};
use crate::lattice::IntLattice;
use crate::numtheory::divisors;

pub use catalog::{case3_minimal_index, generator_catalog, CatalogEntry, Theorem, TheoremParams, TwoPart};
pub use saturate::{saturate, saturate_with_stats, SaturationStats};
pub use verify::{
    trace_ideal_finite_field, verify_theorem, Check, LevelReport, Relation, VerificationReport,
};

/// Generators of a Tambara ideal, each tagged with its level `M`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeneratorSet {
    items: Vec<BurnsideElement>,
}

impl GeneratorSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_elements(items: impl IntoIterator<Item = BurnsideElement>) -> Self {
        GeneratorSet { items: items.into_iter().collect() }
    }

    pub fn push(&mut self, x: BurnsideElement) {
        self.items.push(x);
    }

    /// `(level M, element)` pairs in insertion order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, &BurnsideElement)> {
        self.items.iter().map(|x| (x.level().order(), x))
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn elements(&self) -> &[BurnsideElement] {
        &self.items
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (m, x)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "level {m}: {x}")?;
        }
        write!(f, "}}")
    }
}

/// Serialized as a JSON array of elements.
impl Serialize for GeneratorSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.items.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GeneratorSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Vec::<BurnsideElement>::deserialize(d).map(|items| GeneratorSet { items })
    }
}

/// A family of level lattices, one for every divisor of the modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TambaraIdeal {
    modulus: u64,
    levels: BTreeMap<u64, IntLattice>,
}

impl TambaraIdeal {
    pub fn zero(modulus: u64) -> Result<Self> {
        let levels = divisors(modulus)?
            .into_iter()
            .map(|m| (m, IntLattice::zero(rank(modulus, m))))
            .collect();
        Ok(TambaraIdeal { modulus, levels })
    }

    /// Assemble from explicit level lattices; every divisor must be present
    /// with the right ambient rank. No closure is checked here.
    pub fn from_levels(modulus: u64, levels: BTreeMap<u64, IntLattice>) -> Result<Self> {
        let expected = divisors(modulus)?;
        if levels.keys().copied().collect::<Vec<_>>() != expected {
            return Err(Error::InvalidValue(format!(
                "ideal levels {:?} are not the divisors of {modulus}",
                levels.keys().collect::<Vec<_>>()
            )));
        }
        for (&m, l) in &levels {
            let want = rank(modulus, m);
            if l.dim() != want {
                return Err(Error::LengthMismatch { expected: want, got: l.dim() });
            }
        }
        Ok(TambaraIdeal { modulus, levels })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn level(&self, order: u64) -> Result<&IntLattice> {
        self.levels.get(&order).ok_or(Error::NotDivisor { divisor: order, of: self.modulus })
    }

    pub fn levels(&self) -> impl Iterator<Item = (u64, &IntLattice)> {
        self.levels.iter().map(|(&m, l)| (m, l))
    }

    pub(crate) fn levels_mut(&mut self) -> &mut BTreeMap<u64, IntLattice> {
        &mut self.levels
    }

    /// Level basis vectors as Burnside elements.
    pub fn basis_elements(&self, order: u64) -> Result<Vec<BurnsideElement>> {
        let level = Level::new(self.modulus, order)?;
        self.level(order)?
            .basis()
            .iter()
            .map(|v| BurnsideElement::from_vector(level, v))
            .collect()
    }

    pub fn member(&self, order: u64, x: &BurnsideElement) -> Result<bool> {
        let level = Level::new(self.modulus, order)?;
        if x.level() != level {
            return Err(Error::LevelMismatch { left: level.to_string(), right: x.level().to_string() });
        }
        self.level(order)?.contains(&x.to_vector())
    }

    pub fn is_zero(&self) -> bool {
        self.levels.values().all(IntLattice::is_zero)
    }

    fn same_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(())
    }

    /// Level-wise equality of canonical bases.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.same_modulus(other)?;
        Ok(self.levels == other.levels)
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.same_modulus(other)?;
        for (m, l) in &self.levels {
            if !l.is_subset(&other.levels[m])? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `self` sits inside `other` after the embedding that sends
    /// level `M` to level `factor·M` of `other` and `t_k` to `t_k`. This is
    /// how a truncation at `C_T` includes into the truncation at
    /// `C_{factor·T}` of the same pro-cyclic group. Returns the first
    /// offending `(M, vector)` when it does not.
    pub fn embedding_witness(
        &self,
        other: &Self,
        factor: u64,
    ) -> Result<Option<(u64, Vec<BigInt>)>> {
        if factor == 0 || other.modulus != self.modulus * factor {
            return Err(Error::ModulusMismatch(self.modulus * factor, other.modulus));
        }
        for (&m, lattice) in &self.levels {
            let target = other.level(m * factor)?;
            let from = Level::new(self.modulus, m)?;
            let to = Level::new(other.modulus, m * factor)?;
            for v in lattice.basis() {
                let x = BurnsideElement::from_vector(from, v)?;
                let lifted = BurnsideElement::from_coeffs(to, x.terms().map(|(k, c)| (k, c.clone())))?;
                if !target.contains(&lifted.to_vector())? {
                    return Ok(Some((m, v.clone())));
                }
            }
        }
        Ok(None)
    }

    /// The first violated ideal condition, checked on basis vectors over
    /// every pair `K | M` of levels.
    pub fn closure_violation(&self) -> Result<Option<String>> {
        for (&m, lattice) in &self.levels {
            let level = Level::new(self.modulus, m)?;
            let elems = self.basis_elements(m)?;
            for x in &elems {
                for j in level.basis() {
                    let y = x * &BurnsideElement::basis_element(level, j)?;
                    if !lattice.contains(&y.to_vector())? {
                        return Ok(Some(format!("t_{j}·({x}) escapes level {m}")));
                    }
                }
                for k in divisors(m)? {
                    let r = x.restrict(k)?;
                    if !self.levels[&k].contains(&r.to_vector())? {
                        return Ok(Some(format!("restriction of {x} from {m} to {k} escapes")));
                    }
                }
                for up in divisors(self.modulus)?.into_iter().filter(|u| u % m == 0) {
                    let target = &self.levels[&up];
                    let t = x.transfer(up)?;
                    if !target.contains(&t.to_vector())? {
                        return Ok(Some(format!("transfer of {x} from {m} to {up} escapes")));
                    }
                    let n = x.norm(up)?;
                    if !target.contains(&n.to_vector())? {
                        return Ok(Some(format!("norm of {x} from {m} to {up} escapes")));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_closed(&self) -> Result<bool> {
        Ok(self.closure_violation()?.is_none())
    }
}

fn rank(modulus: u64, order: u64) -> usize {
    Level::new(modulus, order).expect("divisor of modulus").rank()
}

impl fmt::Display for TambaraIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let level_width = self.levels.keys().map(|m| m.to_string().len()).max().unwrap_or(1);
        for (i, (&m, l)) in self.levels.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let elems = self.basis_elements(m).map_err(|_| fmt::Error)?;
            // sign-normalised so the top term is positive; spans are unchanged
            let shown: Vec<String> = elems
                .iter()
                .map(|x| match x.terms().last() {
                    Some((_, c)) if c.sign() == num_bigint::Sign::Minus => (-x).to_string(),
                    _ => x.to_string(),
                })
                .collect();
            if l.is_zero() {
                write!(f, "C_{}/C_{m:<level_width$}  (0)", self.modulus)?;
            } else {
                write!(f, "C_{}/C_{m:<level_width$}  ({})", self.modulus, shown.join(", "))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    #[serde(rename = "N")]
    modulus: u64,
    levels: BTreeMap<u64, IntLattice>,
}

impl Serialize for TambaraIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        IdealJson { modulus: self.modulus, levels: self.levels.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TambaraIdeal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = IdealJson::deserialize(d)?;
        TambaraIdeal::from_levels(raw.modulus, raw.levels).map_err(serde::de::Error::custom)
    }
}
