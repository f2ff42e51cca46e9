//! Comparing saturated catalog generators with independently computed
//! trace ideals.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::catalog::{generator_catalog, Theorem, TheoremParams, TwoPart};
use super::saturate::saturate;
use super::{GeneratorSet, TambaraIdeal};
use crate::burnside::{BurnsideElement, Level};
use crate::dress::{dress_kernel_level, ExtensionShape, ExtensionSpec};
use crate::error::{Error, Result};
use crate::json::{deserialize_opt_vec, serialize_opt_vec};
use crate::lattice::IntLattice;
use crate::numtheory::{divisors, factorize, is_perfect_square};

/// Field orders sampled when a theorem does not pin one down.
const SAMPLE_Q: [u64; 6] = [3, 5, 7, 9, 11, 13];

/// The kernel of the Dress map of `spec`, level by level. Panics if the
/// result is not closed, since a kernel of a Tambara morphism always is.
pub fn trace_ideal_finite_field(spec: &ExtensionSpec) -> Result<TambaraIdeal> {
    let n = spec.modulus();
    let levels = divisors(n)?
        .into_iter()
        .map(|m| dress_kernel_level(spec, m).map(|l| (m, l)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let ideal = TambaraIdeal::from_levels(n, levels)?;
    if let Some(why) = ideal.closure_violation()? {
        panic!("Dress kernel is not an ideal: {why}");
    }
    Ok(ideal)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// The saturated ideal must equal the expected one.
    Equal,
    /// The saturated ideal must sit inside the expected one.
    Contained,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelReport {
    pub expected: IntLattice,
    pub computed: IntLattice,
    pub equal: bool,
    pub contained: bool,
    /// A basis vector of one side missing from the other, when they differ.
    #[serde(serialize_with = "serialize_opt_vec", deserialize_with = "deserialize_opt_vec")]
    pub witness: Option<Vec<BigInt>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    #[serde(rename = "N")]
    pub modulus: u64,
    pub q: Option<u64>,
    pub relation: Relation,
    pub generators: GeneratorSet,
    pub levels: BTreeMap<u64, LevelReport>,
    pub checks: Vec<Check>,
    pub verdict: bool,
}

impl VerificationReport {
    fn build(
        theorem: Theorem,
        q: Option<u64>,
        relation: Relation,
        generators: GeneratorSet,
        expected: &TambaraIdeal,
        computed: &TambaraIdeal,
        checks: Vec<Check>,
    ) -> Result<Self> {
        let mut levels = BTreeMap::new();
        for (m, want) in expected.levels() {
            let got = computed.level(m)?;
            let witness = match got.witness_outside(want)? {
                Some(w) => Some(w),
                None => want.witness_outside(got)?,
            };
            levels.insert(
                m,
                LevelReport {
                    expected: want.clone(),
                    computed: got.clone(),
                    equal: want == got,
                    contained: got.is_subset(want)?,
                    witness,
                },
            );
        }
        let levels_ok = levels.values().all(|l| match relation {
            Relation::Equal => l.equal,
            Relation::Contained => l.contained,
        });
        let verdict = levels_ok && checks.iter().all(|c| c.passed);
        Ok(VerificationReport {
            theorem: theorem.id().to_string(),
            modulus: expected.modulus(),
            q,
            relation,
            generators,
            levels,
            checks,
            verdict,
        })
    }
}

/// Saturate the catalog generators of `theorem` and compare with the
/// trace ideal computed from the Dress map (or from the quadratic
/// trichotomy, for `ℚ`). A mismatch is reported, not raised.
pub fn verify_theorem(theorem: Theorem, params: &TheoremParams) -> Result<VerificationReport> {
    let entry = generator_catalog(theorem, params)?;
    let n = entry.modulus;
    let computed = saturate(n, &entry.generators)?;
    let finite = |q| ExtensionSpec::finite(q, n).and_then(|s| trace_ideal_finite_field(&s));
    let gens = entry.generators.clone();

    match theorem {
        Theorem::FiniteFields | Theorem::OddCyclic | Theorem::TwoPowers1 | Theorem::C4Embeddable => {
            let q = params.need(theorem, params.q, "q")?;
            VerificationReport::build(theorem, Some(q), Relation::Equal, gens, &finite(q)?, &computed, vec![])
        }
        Theorem::C2 => {
            let q = params.need(theorem, params.q, "q")?;
            if params.tau.is_some_and(|t| t.value() != 2) {
                return Err(not_finite(theorem, "a quadratic extension of a finite field has tau = 2"));
            }
            VerificationReport::build(theorem, Some(q), Relation::Equal, gens, &finite(q)?, &computed, vec![])
        }
        Theorem::GeneralCn => {
            let q = params.need(theorem, params.q, "q")?;
            match params.two_part {
                None | Some(TwoPart::Case1) | Some(TwoPart::C4Embeddable) => {}
                Some(TwoPart::C2 { tau }) if tau.value() == 2 => {}
                Some(_) => return Err(not_finite(theorem, "this 2-part does not occur over a finite field")),
            }
            VerificationReport::build(theorem, Some(q), Relation::Equal, gens, &finite(q)?, &computed, vec![])
        }
        Theorem::OddKerCard => {
            let q = params.need(theorem, params.q, "q")?;
            let card_kernel = card_kernel_ideal(n)?;
            let dress_kernel = finite(q)?;
            let checks = vec![Check::new(
                "dress-kernel-is-card-kernel",
                dress_kernel == card_kernel,
                format!("Dress kernel over F_{q} against the kernel of card"),
            )];
            VerificationReport::build(theorem, Some(q), Relation::Equal, gens, &card_kernel, &computed, checks)
        }
        Theorem::ZpTruncated | Theorem::ZhatTruncated => {
            let q = params.need(theorem, params.q, "q")?;
            pro_cyclic_report(theorem, params, q, gens, &computed)
        }
        Theorem::Absolute => {
            let samples: Vec<u64> = params.q.map_or(SAMPLE_Q.to_vec(), |q| vec![q]);
            let mut checks = Vec::new();
            for &q in &samples {
                let ti = finite(q)?;
                checks.push(Check::new(
                    format!("inside-trace-ideal-q{q}"),
                    computed.is_subset(&ti)?,
                    format!("absolute ideal inside the trace ideal of F_{q}^{n}/F_{q}"),
                ));
            }
            let expected = finite(samples[0])?;
            VerificationReport::build(theorem, params.q, Relation::Contained, gens, &expected, &computed, checks)
        }
        Theorem::RationalQuadratic => {
            let r = params.need(theorem, params.r, "r")?;
            let c = quadratic_trichotomy(r.numerator(), r.denominator())?;
            let mut levels = BTreeMap::new();
            levels.insert(1, IntLattice::zero(1));
            levels.insert(2, IntLattice::from_i64_rows(2, &[&[-2 * c, c]])?);
            let expected = TambaraIdeal::from_levels(2, levels)?;
            VerificationReport::build(theorem, None, Relation::Equal, gens, &expected, &computed, vec![])
        }
        Theorem::TwoPowers2 | Theorem::C4NonEmbeddable => {
            Err(not_finite(theorem, "finite fields always fall under the embeddable case"))
        }
    }
}

fn not_finite(theorem: Theorem, why: &str) -> Error {
    Error::InvalidValue(format!("{theorem} cannot be verified over a finite field: {why}"))
}

/// Levels `ker(card)` with no parity condition.
fn card_kernel_ideal(n: u64) -> Result<TambaraIdeal> {
    let mut levels = BTreeMap::new();
    for m in divisors(n)? {
        let card: Vec<BigInt> = divisors(m)?.into_iter().map(BigInt::from).collect();
        levels.insert(m, IntLattice::kernel_with_parity(&card, &[])?);
    }
    TambaraIdeal::from_levels(n, levels)
}

/// Multiple of `t_2 − 2` generating the level-2 trace ideal of `ℚ(√(a/b))`:
/// 0 for `a/b < 0`, 1 for squares, 2 when `ab` is a sum of two squares,
/// else 4. The two-squares test is a direct search.
fn quadratic_trichotomy(a: i64, b: i64) -> Result<i64> {
    if a < 0 {
        return Ok(0);
    }
    if a == 0 {
        return Err(Error::InvalidValue("r = 0".into()));
    }
    let (a, b) = (a as u64, b as u64);
    if is_perfect_square(a) && is_perfect_square(b) {
        return Ok(1);
    }
    let ab = a.checked_mul(b).ok_or(Error::Overflow("a·b"))?;
    let two_squares = (0u64..)
        .take_while(|x| x * x <= ab)
        .any(|x| is_perfect_square(ab - x * x));
    Ok(if two_squares { 2 } else { 4 })
}

fn pro_cyclic_report(
    theorem: Theorem,
    params: &TheoremParams,
    q: u64,
    gens: GeneratorSet,
    computed: &TambaraIdeal,
) -> Result<VerificationReport> {
    let depth = params.need(theorem, params.depth, "depth")?;
    let (shape, previous, factor) = match theorem {
        Theorem::ZpTruncated => {
            let p = params.need(theorem, params.p, "p")?;
            let prev = (depth > 1).then(|| ExtensionShape::Zp { p, depth: depth - 1 });
            (ExtensionShape::Zp { p, depth }, prev, p)
        }
        _ => {
            let n = u64::from(depth);
            let prev = (depth > 1).then(|| ExtensionShape::Zhat { n: n - 1 });
            (ExtensionShape::Zhat { n }, prev, n)
        }
    };
    let spec = ExtensionSpec::new(q, shape)?;
    let modulus = spec.modulus();
    let expected = trace_ideal_finite_field(&spec)?;
    let mut checks = Vec::new();

    for m in divisors(modulus)? {
        let level = Level::new(modulus, m)?;
        let mut wanted = Vec::new();
        if m % 4 == 0 {
            wanted.push(BurnsideElement::from_coeffs(level, [(4u64, 1i64), (2, -1), (1, -2)])?);
        }
        for p in factorize(m)?.primes().filter(|&p| p != 2) {
            wanted.push(BurnsideElement::from_coeffs(level, [(p, 1i64), (1, -(p as i64))])?);
        }
        for x in wanted {
            checks.push(Check::new(
                format!("member-{m}"),
                computed.member(m, &x)?,
                format!("{x} at level {m}"),
            ));
        }
    }

    if let Some(prev_shape) = previous {
        let prev_params = match prev_shape {
            ExtensionShape::Zp { p, depth } => TheoremParams { p: Some(p), depth: Some(depth), ..Default::default() },
            ExtensionShape::Zhat { n } => TheoremParams { depth: Some(n as u32), ..Default::default() },
            ExtensionShape::Finite(_) => unreachable!("pro-cyclic shape"),
        };
        let lower_entry = generator_catalog(theorem, &prev_params)?;
        let lower = saturate(lower_entry.modulus, &lower_entry.generators)?;
        let witness = lower.embedding_witness(computed, factor)?;
        checks.push(Check::new(
            "ascending-chain",
            witness.is_none(),
            match witness {
                None => format!("stage C_{} embeds into stage C_{modulus}", lower.modulus()),
                Some((m, v)) => format!("level {m} vector {v:?} of C_{} is lost", lower.modulus()),
            },
        ));
    }

    let principal = generator_catalog(Theorem::FiniteFields, &TheoremParams::with_n(modulus))?;
    let principal_ideal = saturate(modulus, &principal.generators)?;
    checks.push(Check::new(
        "strongly-principal",
        principal_ideal == *computed,
        format!("single generator {}", principal.generators),
    ));

    VerificationReport::build(theorem, Some(q), Relation::Equal, gens, &expected, computed, checks)
}
