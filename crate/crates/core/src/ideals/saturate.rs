//! Fixpoint computation of the Tambara ideal generated by a set of elements.

use num_bigint::BigInt;

use super::{GeneratorSet, TambaraIdeal};
use crate::burnside::{BurnsideElement, Level};
use crate::error::{Error, Result};
use crate::numtheory::{divisors, prime_divisors};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SaturationStats {
    /// Sweeps run, counting the final one that changed nothing.
    pub passes: usize,
}

/// The smallest Tambara ideal of `A_{C_N}` containing `gens`.
///
/// Each sweep closes every level under multiplication by its basis, then
/// pushes restrictions down and transfers and norms up along prime-index
/// steps. Longer steps factor through prime ones, and norm-closure of a
/// spanning set suffices because every reciprocity cross term is a
/// transfer of a product that already contains an ideal element. The
/// result is checked against the full closure conditions before returning.
pub fn saturate(modulus: u64, gens: &GeneratorSet) -> Result<TambaraIdeal> {
    saturate_with_stats(modulus, gens).map(|(ideal, _)| ideal)
}

pub fn saturate_with_stats(
    modulus: u64,
    gens: &GeneratorSet,
) -> Result<(TambaraIdeal, SaturationStats)> {
    let mut ideal = TambaraIdeal::zero(modulus)?;
    for (m, x) in gens.iter() {
        if !modulus.is_multiple_of(m) {
            return Err(Error::NotDivisor { divisor: m, of: modulus });
        }
        let x = x.rehome(modulus)?;
        ideal.levels_mut().get_mut(&m).expect("divisor").extend([x.to_vector()])?;
    }

    let orders = divisors(modulus)?;
    let mut stats = SaturationStats::default();
    loop {
        stats.passes += 1;
        let mut grew = false;

        for &m in &orders {
            let level = Level::new(modulus, m)?;
            let products = multiples(&ideal.basis_elements(m)?, level)?;
            grew |= ideal.levels_mut().get_mut(&m).expect("divisor").extend(products)?;
        }

        for &m in orders.iter().rev() {
            for p in prime_divisors(m)? {
                let pushed: Vec<Vec<BigInt>> = ideal
                    .basis_elements(m)?
                    .iter()
                    .map(|x| x.restrict(m / p).map(|y| y.to_vector()))
                    .collect::<Result<_>>()?;
                grew |= ideal.levels_mut().get_mut(&(m / p)).expect("divisor").extend(pushed)?;
            }
        }

        for &m in &orders {
            for p in prime_divisors(modulus / m)? {
                let mut pushed = Vec::new();
                for x in ideal.basis_elements(m)? {
                    pushed.push(x.transfer(m * p)?.to_vector());
                    pushed.push(x.norm(m * p)?.to_vector());
                }
                grew |= ideal.levels_mut().get_mut(&(m * p)).expect("divisor").extend(pushed)?;
            }
        }

        if !grew {
            break;
        }
    }

    if let Some(why) = ideal.closure_violation()? {
        panic!("saturation produced a non-ideal: {why}");
    }
    Ok((ideal, stats))
}

fn multiples(elems: &[BurnsideElement], level: Level) -> Result<Vec<Vec<BigInt>>> {
    let mut out = Vec::new();
    for j in level.basis().into_iter().skip(1) {
        let t = BurnsideElement::basis_element(level, j)?;
        for x in elems {
            out.push((x * &t).to_vector());
        }
    }
    Ok(out)
}
