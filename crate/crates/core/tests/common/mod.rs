//! Independent reference computations shared by the integration tests.
//!
//! Nothing here calls the library's norm recursion, saturation loop or
//! Hermite reduction; results are compared against them.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use tambara::numtheory::divisors;
use tambara::{BurnsideElement, IntLattice, Level, TambaraIdeal};

pub fn el(n: u64, m: u64, coeffs: &[(u64, i64)]) -> BurnsideElement {
    BurnsideElement::from_coeffs(Level::new(n, m).unwrap(), coeffs.iter().copied()).unwrap()
}

pub fn big(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Table of marks: `φ_d(X) = |X^{C_d}|` for each `d | M`, ascending in `d`.
/// `t_i = C_M / C_{M/i}` is fixed by `C_d` exactly when `d | M/i`.
pub fn marks(x: &BurnsideElement) -> BTreeMap<u64, BigInt> {
    let m = x.level().order();
    divisors(m)
        .unwrap()
        .into_iter()
        .map(|d| {
            let mark = x
                .terms()
                .filter(|&(i, _)| (m / i).is_multiple_of(d))
                .map(|(i, a)| a * BigInt::from(i))
                .sum();
            (d, mark)
        })
        .collect()
}

/// Inverts [`marks`] by peeling off the largest `d` first: `φ_d` only sees
/// `t_i` with `i | M/d`, and `t_{M/d}` contributes `M/d` to it.
pub fn from_marks(level: Level, marks: &BTreeMap<u64, BigInt>) -> BurnsideElement {
    let m = level.order();
    let mut coeffs: BTreeMap<u64, BigInt> = BTreeMap::new();
    for (&d, mark) in marks.iter().rev() {
        let i = m / d;
        let known: BigInt = coeffs
            .iter()
            .filter(|&(&j, _)| (m / j).is_multiple_of(d))
            .map(|(&j, a)| a * BigInt::from(j))
            .sum();
        let rest = mark - known;
        assert!((&rest % BigInt::from(i)).is_zero(), "marks not integral");
        coeffs.insert(i, rest / BigInt::from(i));
    }
    BurnsideElement::from_coeffs(level, coeffs).unwrap()
}

pub fn mul_via_marks(a: &BurnsideElement, b: &BurnsideElement) -> BurnsideElement {
    let (ma, mb) = (marks(a), marks(b));
    let prod = ma.iter().map(|(&d, x)| (d, x * &mb[&d])).collect();
    from_marks(a.level(), &prod)
}

/// `φ_d(N_K^M X) = φ_{gcd(K,d)}(X)^{M / lcm(K,d)}`: the double cosets
/// `C_K \ C_M / C_d` number `M / lcm(K,d)`, each seeing `C_K ∩ C_d`.
pub fn norm_via_marks(x: &BurnsideElement, target: u64) -> BurnsideElement {
    let k = x.level().order();
    let mx = marks(x);
    let level = Level::new(x.level().modulus(), target).unwrap();
    let out = divisors(target)
        .unwrap()
        .into_iter()
        .map(|d| {
            let e = (target / lcm(k, d)) as u32;
            (d, Pow::pow(&mx[&gcd(k, d)], e))
        })
        .collect();
    from_marks(level, &out)
}

/// `φ_d(tr_K^M X) = [d | K] · (M/K) · φ_d(X)`.
pub fn transfer_via_marks(x: &BurnsideElement, target: u64) -> BurnsideElement {
    let k = x.level().order();
    let mx = marks(x);
    let level = Level::new(x.level().modulus(), target).unwrap();
    let out = divisors(target)
        .unwrap()
        .into_iter()
        .map(|d| {
            let v = if k.is_multiple_of(d) { &mx[&d] * BigInt::from(target / k) } else { BigInt::zero() };
            (d, v)
        })
        .collect();
    from_marks(level, &out)
}

/// `φ_d(res X) = φ_d(X)` for `d | K`.
pub fn restrict_via_marks(x: &BurnsideElement, target: u64) -> BurnsideElement {
    let mx = marks(x);
    let level = Level::new(x.level().modulus(), target).unwrap();
    let out = divisors(target).unwrap().into_iter().map(|d| (d, mx[&d].clone())).collect();
    from_marks(level, &out)
}

/// The ideal generated by `gens`, from the explicit level description
/// `I(M) = span{ tr_L^M (t_j · N_H^L (res_H^K a)) : H | K, H | L | M, j | L }`
/// with single-step norms and no fixpoint iteration.
pub fn generated_ideal(modulus: u64, gens: &[BurnsideElement]) -> TambaraIdeal {
    let orders = divisors(modulus).unwrap();
    let mut levels: BTreeMap<u64, IntLattice> = orders
        .iter()
        .map(|&m| (m, IntLattice::zero(Level::new(modulus, m).unwrap().rank())))
        .collect();
    for a in gens {
        let a = a.rehome(modulus).unwrap();
        let k = a.level().order();
        for h in divisors(k).unwrap() {
            let r = a.restrict(h).unwrap();
            for &l in orders.iter().filter(|&&l| l % h == 0) {
                let n = r.norm_direct(l).unwrap();
                let level_l = Level::new(modulus, l).unwrap();
                for j in level_l.basis() {
                    let b = &n * &BurnsideElement::basis_element(level_l, j).unwrap();
                    for &m in orders.iter().filter(|&&m| m % l == 0) {
                        let v = b.transfer(m).unwrap().to_vector();
                        levels.get_mut(&m).unwrap().extend([v]).unwrap();
                    }
                }
            }
        }
    }
    TambaraIdeal::from_levels(modulus, levels).unwrap()
}

/// Every point of the lattice spanned by `gens` inside `[-bound, bound]^d`,
/// by breadth-first search over `± g` steps confined to that box.
///
/// By the Steinitz lemma any lattice point `w` has a walk from 0 whose
/// partial sums stay within `d · max ‖g‖∞` of the segment `[0, w]`, so for
/// `‖w‖∞ ≤ bound − d · max ‖g‖∞` the search is exhaustive.
pub fn lattice_points(gens: &[Vec<i64>], dim: usize, bound: i64) -> HashSet<Vec<i64>> {
    let mut seen = HashSet::new();
    let origin = vec![0i64; dim];
    seen.insert(origin.clone());
    let mut queue = VecDeque::from([origin]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            for sign in [1, -1] {
                let q: Vec<i64> = p.iter().zip(g).map(|(a, b)| a + sign * b).collect();
                if q.iter().all(|x| x.abs() <= bound) && seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
    }
    seen
}

/// All integer vectors in `[-r, r]^dim`.
pub fn box_points(dim: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (-r..=r).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Sum of two integer squares, by direct search.
pub fn two_squares_search(n: u64) -> bool {
    let mut x = 0u64;
    while x * x <= n {
        let rest = n - x * x;
        let y = (rest as f64).sqrt() as u64;
        if (y.saturating_sub(1)..=y + 1).any(|y| y * y == rest) {
            return true;
        }
        x += 1;
    }
    false
}
