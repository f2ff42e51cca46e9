//! The Dress map from the Burnside functor of `Gal(F_{q^N}/F_q) ≅ C_N` to the
//! Grothendieck–Witt functor, and its kernel.
//!
//! Level `M` of `C_N` is the fixed field of the subgroup of order `M`,
//! which is `F_{q^{N/M}}`. The Dress map sends a finite `C_M`-set to its
//! trace form, so `t_i ↦ tr_i⟨1⟩` and
//! `Σ a_i t_i ↦ (Σ i a_i, Σ_{i even} a_i mod 2)`.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::burnside::{BurnsideElement, Level, ProCyclicKind, ProCyclicLevel};
use crate::error::{Error, Result};
use crate::gw::GwClass;
use crate::lattice::IntLattice;
use crate::numtheory::{factorial, is_odd_prime_power, is_prime};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionShape {
    /// `F_{q^N} / F_q`.
    Finite(u64),
    /// The `ℤ_p`-extension of `F_q`, truncated at `C_{p^depth}`.
    Zp { p: u64, depth: u32 },
    /// The algebraic closure of `F_q`, truncated at `C_{n!}`.
    Zhat { n: u64 },
}

/// A Galois extension of `F_q` with cyclic (or truncated pro-cyclic) group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtensionSpec {
    q: u64,
    shape: ExtensionShape,
    modulus: u64,
}

impl ExtensionSpec {
    pub fn new(q: u64, shape: ExtensionShape) -> Result<Self> {
        if !is_odd_prime_power(q) {
            return Err(Error::InvalidFieldOrder(q));
        }
        let modulus = match shape {
            ExtensionShape::Finite(n) => {
                if n == 0 {
                    return Err(Error::NotPositive(0));
                }
                n
            }
            ExtensionShape::Zp { p, depth } => {
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                p.checked_pow(depth).ok_or(Error::Overflow("p^depth"))?
            }
            ExtensionShape::Zhat { n } => {
                if n == 0 {
                    return Err(Error::NotPositive(0));
                }
                factorial(n)?
            }
        };
        Ok(ExtensionSpec { q, shape, modulus })
    }

    pub fn finite(q: u64, n: u64) -> Result<Self> {
        Self::new(q, ExtensionShape::Finite(n))
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn shape(&self) -> ExtensionShape {
        self.shape
    }

    /// Order of the (truncated) Galois group.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Degree over `F_q` of the field attached to level `order`.
    pub fn field_degree(&self, order: u64) -> Result<u64> {
        self.level(order).map(|l| self.modulus / l.order())
    }

    pub fn level(&self, order: u64) -> Result<Level> {
        Level::new(self.modulus, order)
    }

    /// The pro-cyclic level of index `order`, for the pro-cyclic shapes.
    pub fn pro_cyclic_level(&self, order: u64) -> Result<Option<ProCyclicLevel>> {
        let kind = match self.shape {
            ExtensionShape::Finite(_) => return Ok(None),
            ExtensionShape::Zp { p, .. } => ProCyclicKind::Zp(p),
            ExtensionShape::Zhat { .. } => ProCyclicKind::Zhat,
        };
        ProCyclicLevel::new(kind, order, self.modulus).map(Some)
    }
}

/// Dress map at the level of `x`.
///
/// Computed from the closed formula and cross-checked against
/// `Σ a_i · tr_i⟨1⟩` assembled from [`GwClass::transfer`].
pub fn dress(spec: &ExtensionSpec, x: &BurnsideElement) -> Result<GwClass> {
    let level = x.level();
    if level.modulus() != spec.modulus {
        return Err(Error::ModulusMismatch(level.modulus(), spec.modulus));
    }
    let degree = spec.field_degree(level.order())?;
    let dim = x.card();
    let det = x
        .terms()
        .filter(|&(i, _)| i % 2 == 0)
        .fold(false, |acc, (_, a)| acc ^ a.is_odd());
    let closed = GwClass::new(spec.q, degree, dim, det)?;

    let mut via_transfer = GwClass::zero(spec.q, degree)?;
    for (i, a) in x.terms() {
        let unit = GwClass::one(spec.q, degree * i)?;
        via_transfer = via_transfer.add(&unit.transfer(i)?.scale(a))?;
    }
    assert_eq!(closed, via_transfer, "Dress map routes disagree on {x}");
    Ok(closed)
}

/// Kernel of the Dress map at level `order`, as a lattice in the basis
/// order of [`Level::basis`].
pub fn dress_kernel_level(spec: &ExtensionSpec, order: u64) -> Result<IntLattice> {
    let basis = spec.level(order)?.basis();
    let card: Vec<BigInt> = basis.iter().map(|&k| BigInt::from(k)).collect();
    let even: Vec<usize> = (0..basis.len()).filter(|&i| basis[i] % 2 == 0).collect();
    IntLattice::kernel_with_parity(&card, &even)
}
