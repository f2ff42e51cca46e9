//! Tambara ideals of the Burnside Tambara functor over finite cyclic groups,
//! and the kernels of Dress maps into Grothendieck–Witt rings of finite
//! fields.
//!
//! Layers, bottom up:
//!
//! * [`numtheory`]: factorization, divisors, binomials.
//! * [`burnside`]: the Burnside rings `A(C_M)` with restriction, transfer
//!   and norm between levels of a fixed `C_N`.
//! * [`lattice`]: integer lattices in Hermite normal form.
//! * [`gw`]: `GW(F_q)` as `ℤ ⊕ ℤ/2` with its Tambara structure.
//! * [`dress`]: the Dress map `A → GW` and its kernel.
//! * [`ideals`]: saturation of generator sets, the generator catalog and
//!   verification of predicted kernels.

pub mod burnside;
pub mod dress;
pub mod error;
pub mod gw;
pub mod ideals;
mod json;
pub mod lattice;
pub mod numtheory;

pub use burnside::{BurnsideElement, Level, ProCyclicKind, ProCyclicLevel};
pub use dress::{ExtensionShape, ExtensionSpec};
pub use error::{Error, Result};
pub use gw::{GwClass, Rational, TauValue};
pub use ideals::{GeneratorSet, TambaraIdeal, Theorem, TheoremParams};
pub use lattice::IntLattice;
