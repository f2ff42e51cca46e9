//! Generator sets of known trace ideals, keyed by theorem id.

use std::fmt;
use std::str::FromStr;

use crate::burnside::{BurnsideElement, Level};
use crate::dress::{dress, ExtensionSpec};
use crate::error::{Error, Result};
use crate::gw::{tau_rational, Rational, TauValue};
use crate::numtheory::{factorial, factorize, is_prime};

use super::GeneratorSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// Odd `N`: `Σ (t_p − p)` over the primes of `N`.
    OddCyclic,
    /// Odd `N` again, checked against the kernel of the cardinality map.
    OddKerCard,
    /// `C_2` with discriminant of level `τ`.
    C2,
    /// `C_4` extensions that embed into a `C_8` extension.
    C4Embeddable,
    /// `C_4` extensions that do not.
    C4NonEmbeddable,
    /// `C_{2^n}`, the top `C_4` piece embeds into `C_8`.
    TwoPowers1,
    /// `C_{2^n}`, the discriminant of the `C_2` piece has level 0.
    TwoPowers2,
    /// Any `C_N`: odd part plus a 2-part generator.
    GeneralCn,
    /// `F_{q^N} / F_q`.
    FiniteFields,
    /// `ℤ_p`-extension truncated at `C_{p^depth}`.
    ZpTruncated,
    /// `Ẑ`-extension truncated at `C_{n!}`.
    ZhatTruncated,
    /// Intersection of all trace ideals for `C_N`.
    Absolute,
    /// `ℚ(√r) / ℚ`.
    RationalQuadratic,
}

impl Theorem {
    pub const ALL: [Theorem; 13] = [
        Theorem::OddCyclic,
        Theorem::OddKerCard,
        Theorem::C2,
        Theorem::C4Embeddable,
        Theorem::C4NonEmbeddable,
        Theorem::TwoPowers1,
        Theorem::TwoPowers2,
        Theorem::GeneralCn,
        Theorem::FiniteFields,
        Theorem::ZpTruncated,
        Theorem::ZhatTruncated,
        Theorem::Absolute,
        Theorem::RationalQuadratic,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Theorem::OddCyclic => "odd-cyclic",
            Theorem::OddKerCard => "odd-ker-card",
            Theorem::C2 => "c2",
            Theorem::C4Embeddable => "c4-embeddable",
            Theorem::C4NonEmbeddable => "c4-non-embeddable",
            Theorem::TwoPowers1 => "twopowers-1",
            Theorem::TwoPowers2 => "twopowers-2",
            Theorem::GeneralCn => "general-cn",
            Theorem::FiniteFields => "finite-fields",
            Theorem::ZpTruncated => "zp-truncated",
            Theorem::ZhatTruncated => "zhat-truncated",
            Theorem::Absolute => "absolute",
            Theorem::RationalQuadratic => "rational-quadratic",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// The 2-primary generator of a general cyclic extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoPart {
    C2 { tau: TauValue },
    C4Embeddable,
    C4NonEmbeddable { pi: u64, tau_e: TauValue },
    Case1,
    Case2,
}

/// Parameters consumed by [`generator_catalog`]; each theorem reads only
/// the ones it needs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TheoremParams {
    /// Group order `N`.
    pub n: Option<u64>,
    /// Field order, used by verification only.
    pub q: Option<u64>,
    /// Prime of a `ℤ_p` truncation.
    pub p: Option<u64>,
    /// Truncation depth: `C_{p^depth}` for `ℤ_p`, `C_{depth!}` for `Ẑ`.
    pub depth: Option<u32>,
    pub tau: Option<TauValue>,
    pub pi: Option<u64>,
    pub tau_e: Option<TauValue>,
    pub r: Option<Rational>,
    pub two_part: Option<TwoPart>,
}

impl TheoremParams {
    pub fn with_n(n: u64) -> Self {
        TheoremParams { n: Some(n), ..Default::default() }
    }

    pub(crate) fn need<T: Copy>(&self, theorem: Theorem, value: Option<T>, name: &'static str) -> Result<T> {
        value.ok_or(Error::MissingParam { theorem: theorem.id().to_string(), param: name })
    }
}

/// A catalog entry: generators living in the functor of `C_modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub theorem: Theorem,
    pub modulus: u64,
    pub generators: GeneratorSet,
}

pub fn generator_catalog(theorem: Theorem, params: &TheoremParams) -> Result<CatalogEntry> {
    let (modulus, gens) = match theorem {
        Theorem::OddCyclic | Theorem::OddKerCard => {
            let n = params.need(theorem, params.n, "N")?;
            if n % 2 == 0 {
                return Err(Error::InvalidValue(format!("{theorem} needs odd N, got {n}")));
            }
            let mut gens = GeneratorSet::new();
            if n > 1 {
                let rad = odd_radical(n)?;
                gens.push(odd_sum(Level::new(n, rad)?)?);
            }
            (n, gens)
        }
        Theorem::C2 => {
            let tau = params.need(theorem, params.tau, "tau")?;
            (2, c2_generators(tau)?)
        }
        Theorem::RationalQuadratic => {
            let r = params.need(theorem, params.r, "r")?;
            (2, c2_generators(tau_rational(r)?)?)
        }
        Theorem::C4Embeddable => (4, GeneratorSet::from_elements([c4_element(Level::new(4, 4)?)?])),
        Theorem::C4NonEmbeddable => {
            let pi = valid_pi(params.need(theorem, params.pi, "pi")?)?;
            let tau_e = params.need(theorem, params.tau_e, "tau_e")?;
            (4, c4_non_embeddable(4, pi, tau_e)?)
        }
        Theorem::TwoPowers1 | Theorem::TwoPowers2 => {
            let n = params.need(theorem, params.n, "N")?;
            let floor = if theorem == Theorem::TwoPowers1 { 4 } else { 8 };
            if !n.is_power_of_two() || n < floor {
                return Err(Error::InvalidValue(format!("{theorem} needs N a power of 2, at least {floor}")));
            }
            (n, GeneratorSet::from_elements([c4_element(Level::new(n, floor)?)?]))
        }
        Theorem::GeneralCn => {
            let n = params.need(theorem, params.n, "N")?;
            (n, general_cn(n, params.two_part)?)
        }
        Theorem::FiniteFields => {
            let n = params.need(theorem, params.n, "N")?;
            (n, finite_field_generators(n)?)
        }
        Theorem::ZpTruncated => {
            let p = params.need(theorem, params.p, "p")?;
            let depth = params.need(theorem, params.depth, "depth")?;
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if depth == 0 {
                return Err(Error::NotPositive(0));
            }
            let modulus = p.checked_pow(depth).ok_or(Error::Overflow("p^depth"))?;
            (modulus, pro_cyclic_generators(modulus)?)
        }
        Theorem::ZhatTruncated => {
            let depth = params.need(theorem, params.depth, "depth")?;
            if depth == 0 {
                return Err(Error::NotPositive(0));
            }
            let modulus = factorial(u64::from(depth))?;
            (modulus, pro_cyclic_generators(modulus)?)
        }
        Theorem::Absolute => {
            let n = params.need(theorem, params.n, "N")?;
            (n, absolute_generators(n)?)
        }
    };
    Ok(CatalogEntry { theorem, modulus, generators: gens })
}

fn el(level: Level, coeffs: &[(u64, i64)]) -> Result<BurnsideElement> {
    BurnsideElement::from_coeffs(level, coeffs.iter().copied())
}

/// `t_4 − t_2 − 2`.
fn c4_element(level: Level) -> Result<BurnsideElement> {
    el(level, &[(4, 1), (2, -1), (1, -2)])
}

/// `t_2 − 2` scaled by `c`.
fn c2_element(level: Level, c: u64) -> Result<BurnsideElement> {
    let c = i64::try_from(c).map_err(|_| Error::Overflow("coefficient"))?;
    el(level, &[(2, c), (1, -2 * c)])
}

fn c2_generators(tau: TauValue) -> Result<GeneratorSet> {
    Ok(GeneratorSet::from_elements([c2_element(Level::new(2, 2)?, tau.value())?]))
}

fn c4_non_embeddable(modulus: u64, pi: u64, tau_e: TauValue) -> Result<GeneratorSet> {
    let top = Level::new(modulus, 4)?;
    let pi = i64::try_from(pi).map_err(|_| Error::Overflow("coefficient"))?;
    Ok(GeneratorSet::from_elements([
        el(top, &[(2, 2), (1, -4)])?,
        el(top, &[(4, pi), (1, -4 * pi)])?,
        c2_element(Level::new(modulus, 2)?, tau_e.value())?,
    ]))
}

fn valid_pi(pi: u64) -> Result<u64> {
    if pi == 0 || (pi >= 2 && pi.is_power_of_two()) {
        Ok(pi)
    } else {
        Err(Error::InvalidValue(format!("pi must be 0 or a power of 2 at least 2, got {pi}")))
    }
}

/// Product of the odd primes dividing `n`.
fn odd_radical(n: u64) -> Result<u64> {
    Ok(factorize(n)?.primes().filter(|&p| p != 2).product())
}

/// `Σ_{p odd, p | M} (t_p − p)` at `level`.
fn odd_sum(level: Level) -> Result<BurnsideElement> {
    let mut x = BurnsideElement::zero(level);
    for p in factorize(level.order())?.primes().filter(|&p| p != 2) {
        let p_i = i64::try_from(p).map_err(|_| Error::Overflow("prime"))?;
        x = &x + &el(level, &[(p, 1), (1, -p_i)])?;
    }
    Ok(x)
}

fn general_cn(n: u64, two_part: Option<TwoPart>) -> Result<GeneratorSet> {
    let mu = factorize(n)?.exponent(2);
    let rad = odd_radical(n)?;
    let mut gens = GeneratorSet::new();
    if rad > 1 {
        gens.push(odd_sum(Level::new(n, rad)?)?);
    }
    let default = match mu {
        0 => None,
        1 => Some(TwoPart::C2 { tau: TauValue::new(2)? }),
        _ => Some(TwoPart::Case1),
    };
    let part = two_part.or(default);
    let mismatch = |what: &str| Err(Error::InvalidValue(format!("{what} does not fit 2-adic valuation {mu} of N = {n}")));
    match part {
        None if mu == 0 => {}
        None => unreachable!("default covers even N"),
        Some(_) if mu == 0 => return mismatch("a 2-part generator"),
        Some(TwoPart::C2 { tau }) => {
            if mu != 1 {
                return mismatch("a C_2 generator");
            }
            gens.push(c2_element(Level::new(n, 2)?, tau.value())?);
        }
        Some(TwoPart::C4Embeddable) | Some(TwoPart::Case1) => {
            if mu < 2 || (mu != 2 && part == Some(TwoPart::C4Embeddable)) {
                return mismatch("this generator");
            }
            gens.push(c4_element(Level::new(n, 4)?)?);
        }
        Some(TwoPart::C4NonEmbeddable { pi, tau_e }) => {
            if mu != 2 {
                return mismatch("a C_4 generator");
            }
            for x in c4_non_embeddable(n, valid_pi(pi)?, tau_e)?.elements() {
                gens.push(x.clone());
            }
        }
        Some(TwoPart::Case2) => {
            if mu < 3 {
                return mismatch("a C_8 generator");
            }
            gens.push(c4_element(Level::new(n, 8)?)?);
        }
    }
    Ok(gens)
}

/// Single generator `X_2 + Σ (t_p − p)` at level `N̂ = 2^{μ̂} · rad(odd part)`.
fn finite_field_generators(n: u64) -> Result<GeneratorSet> {
    let mu = factorize(n)?.exponent(2);
    let hat = 2u64.pow(mu.min(2)) * odd_radical(n)?;
    let level = Level::new(n, hat)?;
    let x2 = match mu {
        0 => BurnsideElement::zero(level),
        1 => c2_element(level, 2)?,
        _ => c4_element(level)?,
    };
    Ok(GeneratorSet::from_elements([&x2 + &odd_sum(level)?]))
}

/// Single generator `Σ_{p odd}(t_p − p) + Y` at level `2^λ · rad(odd part)`,
/// `λ = min(3, μ)`.
fn absolute_generators(n: u64) -> Result<GeneratorSet> {
    let mu = factorize(n)?.exponent(2);
    let hat = 2u64.pow(mu.min(3)) * odd_radical(n)?;
    let level = Level::new(n, hat)?;
    let y = match mu {
        0 => BurnsideElement::zero(level),
        1 => c2_element(level, 2)?,
        _ => c4_element(level)?,
    };
    Ok(GeneratorSet::from_elements([&y + &odd_sum(level)?]))
}

/// The finite stage `C_T` of a pro-cyclic trace ideal. For an odd prime
/// `p | T`: `t_p − p` at every level `p^j | T`. For `p = 2`: `t_4 − t_2 − 2`
/// at every level `2^j | T` with `j ≥ 2`, and at level 2 the image
/// `2t_2 − 4` of the generator one step above the truncation.
fn pro_cyclic_generators(modulus: u64) -> Result<GeneratorSet> {
    let mut gens = GeneratorSet::new();
    for &(p, e) in factorize(modulus)?.pairs() {
        for j in 1..=e {
            let level = Level::new(modulus, p.pow(j))?;
            if p == 2 {
                gens.push(if j == 1 { c2_element(level, 2)? } else { c4_element(level)? });
            } else {
                gens.push(odd_sum(level)?);
            }
        }
    }
    Ok(gens)
}

/// Over `F_{q^{2^n}} / F_q`: the least `m` with `3 ≤ m ≤ n` such that the
/// transfer of `t_4 − t_2 − 2` to level `2^m` lies in the Dress kernel.
pub fn case3_minimal_index(q: u64, n: u32) -> Result<Option<u32>> {
    let modulus = 2u64.checked_pow(n).ok_or(Error::Overflow("2^n"))?;
    let spec = ExtensionSpec::finite(q, modulus)?;
    if n < 3 {
        return Ok(None);
    }
    let x = c4_element(Level::new(modulus, 4)?)?;
    for m in 3..=n {
        if dress(&spec, &x.transfer(1 << m)?)?.is_zero() {
            return Ok(Some(m));
        }
    }
    Ok(None)
}
