//! Sublattices of `ℤ^d` in canonical row Hermite normal form.
//!
//! A basis is stored as rows whose leading (leftmost nonzero) columns
//! strictly increase, every leading entry is positive, and every entry
//! above a leading entry lies in `[0, pivot)`. Two lattices are equal iff
//! their stored bases are identical.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::json::JsonInt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntLattice {
    dim: usize,
    basis: Vec<Vec<BigInt>>,
}

impl IntLattice {
    pub fn zero(dim: usize) -> Self {
        IntLattice { dim, basis: Vec::new() }
    }

    /// All of `ℤ^d`.
    pub fn full(dim: usize) -> Self {
        let basis = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        IntLattice { dim, basis }
    }

    /// HNF of the span of `vectors`.
    pub fn from_vectors<I>(dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<BigInt>>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            if v.len() != dim {
                return Err(Error::LengthMismatch { expected: dim, got: v.len() });
            }
            if v.iter().any(|x| !x.is_zero()) {
                rows.push(v);
            }
        }
        Ok(IntLattice { dim, basis: hermite_normal_form(rows, dim) })
    }

    pub fn from_i64_rows(dim: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::from_vectors(dim, rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Exact membership by eliminating against the pivots in order.
    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::LengthMismatch { expected: self.dim, got: v.len() });
        }
        let mut rest = v.to_vec();
        let mut col = 0;
        for row in &self.basis {
            let pivot_col = leading_column(row).expect("basis rows are nonzero");
            if rest[col..pivot_col].iter().any(|x| !x.is_zero()) {
                return Ok(false);
            }
            let (q, r) = rest[pivot_col].div_rem(&row[pivot_col]);
            if !r.is_zero() {
                return Ok(false);
            }
            if !q.is_zero() {
                axpy(&mut rest, &-q, row);
            }
            col = pivot_col + 1;
        }
        Ok(rest.iter().all(|x| x.is_zero()))
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::RankMismatch(self.dim, other.dim));
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        Self::from_vectors(self.dim, self.basis.iter().chain(&other.basis).cloned())
    }

    /// Adds the given vectors, returning whether the lattice grew.
    pub fn extend<I>(&mut self, vectors: I) -> Result<bool>
    where
        I: IntoIterator<Item = Vec<BigInt>>,
    {
        let mut fresh = Vec::new();
        for v in vectors {
            if !self.contains(&v)? {
                fresh.push(v);
            }
        }
        if fresh.is_empty() {
            return Ok(false);
        }
        *self = Self::from_vectors(self.dim, self.basis.drain(..).chain(fresh))?;
        Ok(true)
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::RankMismatch(self.dim, other.dim));
        }
        for row in &self.basis {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First basis row of `self` missing from `other`, if any.
    pub fn witness_outside(&self, other: &Self) -> Result<Option<Vec<BigInt>>> {
        if self.dim != other.dim {
            return Err(Error::RankMismatch(self.dim, other.dim));
        }
        for row in &self.basis {
            if !other.contains(row)? {
                return Ok(Some(row.clone()));
            }
        }
        Ok(None)
    }

    /// `{x : Σ c_j x_j = 0 and Σ_{j ∈ S} x_j ≡ 0 (mod 2)}`.
    ///
    /// An integral kernel basis of the linear form is found by unimodular
    /// column operations; the parity condition is then pulled back by
    /// doubling one odd basis vector and shifting the others by it.
    pub fn kernel_with_parity(c: &[BigInt], parity_set: &[usize]) -> Result<Self> {
        let dim = c.len();
        if let Some(&bad) = parity_set.iter().find(|&&j| j >= dim) {
            return Err(Error::LengthMismatch { expected: dim, got: bad + 1 });
        }
        let kernel = integer_kernel(c);
        let parity = |v: &[BigInt]| {
            parity_set.iter().fold(BigInt::zero(), |acc, &j| acc + &v[j]).is_odd()
        };
        let odd_index = kernel.iter().position(|v| parity(v));
        let vectors: Vec<Vec<BigInt>> = match odd_index {
            None => kernel,
            Some(i0) => {
                let anchor = kernel[i0].clone();
                kernel
                    .iter()
                    .enumerate()
                    .map(|(i, v)| {
                        if i == i0 {
                            v.iter().map(|x| x * 2).collect()
                        } else if parity(v) {
                            v.iter().zip(&anchor).map(|(x, a)| x + a).collect()
                        } else {
                            v.clone()
                        }
                    })
                    .collect()
            }
        };
        Self::from_vectors(dim, vectors)
    }
}

impl fmt::Display for IntLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, row) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "}} ⊆ ℤ^{}", self.dim)
    }
}

fn leading_column(row: &[BigInt]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

/// `target += factor * row`
fn axpy(target: &mut [BigInt], factor: &BigInt, row: &[BigInt]) {
    for (t, r) in target.iter_mut().zip(row) {
        *t += factor * r;
    }
}

fn hermite_normal_form(mut rows: Vec<Vec<BigInt>>, dim: usize) -> Vec<Vec<BigInt>> {
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut top = 0;
    for col in 0..dim {
        if top == rows.len() {
            break;
        }
        // Euclid on column `col` among rows top.., leaving one nonzero entry.
        loop {
            let mut best: Option<usize> = None;
            for r in top..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                if best.is_none_or(|b| rows[r][col].abs() < rows[b][col].abs()) {
                    best = Some(r);
                }
            }
            let Some(b) = best else { break };
            rows.swap(top, b);
            let mut done = true;
            for r in top + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = rows[r][col].div_floor(&rows[top][col]);
                let pivot_row = rows[top].clone();
                axpy(&mut rows[r], &-q, &pivot_row);
                if !rows[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if top < rows.len() && !rows[top][col].is_zero() {
            if rows[top][col].is_negative() {
                for x in rows[top].iter_mut() {
                    *x = -&*x;
                }
            }
            pivots.push((top, col));
            top += 1;
        }
    }
    rows.truncate(top);
    for &(r, col) in &pivots {
        let pivot_row = rows[r].clone();
        for row in &mut rows[..r] {
            let q = row[col].div_floor(&pivot_row[col]);
            if !q.is_zero() {
                axpy(row, &-q, &pivot_row);
            }
        }
    }
    rows
}

/// Basis of `{x ∈ ℤ^d : c·x = 0}` from a unimodular `U` with `c·U = (g, 0, …, 0)`.
fn integer_kernel(c: &[BigInt]) -> Vec<Vec<BigInt>> {
    let dim = c.len();
    let mut form = c.to_vec();
    // columns of U, stored as vectors
    let mut cols: Vec<Vec<BigInt>> = IntLattice::full(dim).basis;
    if form.iter().all(|x| x.is_zero()) {
        return cols;
    }
    loop {
        let nonzero: Vec<usize> = (0..dim).filter(|&i| !form[i].is_zero()).collect();
        let &small = nonzero
            .iter()
            .min_by(|&&a, &&b| form[a].abs().cmp(&form[b].abs()))
            .expect("form is nonzero");
        if nonzero.len() == 1 {
            cols.remove(small);
            return cols;
        }
        for &i in &nonzero {
            if i == small {
                continue;
            }
            let pivot = form[small].clone();
            let q = form[i].div_floor(&pivot);
            form[i] -= &q * &pivot;
            let base = cols[small].clone();
            axpy(&mut cols[i], &-q, &base);
        }
    }
}

#[derive(Serialize, Deserialize)]
struct LatticeJson {
    d: usize,
    basis: Vec<Vec<JsonInt>>,
}

impl Serialize for IntLattice {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LatticeJson {
            d: self.dim,
            basis: self
                .basis
                .iter()
                .map(|r| r.iter().cloned().map(JsonInt).collect())
                .collect(),
        }
        .serialize(s)
    }
}

/// Input rows are re-normalized, so any spanning set is accepted.
impl<'de> Deserialize<'de> for IntLattice {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = LatticeJson::deserialize(d)?;
        IntLattice::from_vectors(raw.d, raw.basis.into_iter().map(|r| r.into_iter().map(|x| x.0).collect()))
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rows(l: &IntLattice) -> Vec<Vec<i64>> {
        l.basis()
            .iter()
            .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect()
    }

    #[test]
    fn from_vectors_examples() {
        let l = IntLattice::from_i64_rows(2, &[&[2, 0], &[0, 2], &[1, 1]]).unwrap();
        assert_eq!(rows(&l), vec![vec![1, 1], vec![0, 2]]);
        assert!(IntLattice::from_vectors(3, vec![]).unwrap().is_zero());
        let l = IntLattice::from_i64_rows(2, &[&[0, 3], &[0, 5]]).unwrap();
        assert_eq!(rows(&l), vec![vec![0, 1]]);
        assert!(IntLattice::from_vectors(2, vec![v(&[1, 2, 3])]).is_err());
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let l = IntLattice::from_i64_rows(3, &[&[-3, 1, 0], &[-9, 0, 1]]).unwrap();
        assert_eq!(rows(&l), vec![vec![3, 2, -1], vec![0, 3, -1]]);
    }

    #[test]
    fn contains_examples() {
        let zero = IntLattice::zero(2);
        assert!(zero.contains(&v(&[0, 0])).unwrap());
        assert!(!zero.contains(&v(&[0, 1])).unwrap());
        let l = IntLattice::from_i64_rows(2, &[&[1, 1], &[0, 2]]).unwrap();
        assert!(l.contains(&v(&[3, 5])).unwrap());
        assert!(!l.contains(&v(&[1, 0])).unwrap());
        assert!(l.contains(&v(&[1])).is_err());
    }

    #[test]
    fn join_examples() {
        let l = IntLattice::from_i64_rows(2, &[&[1, 1], &[0, 2]]).unwrap();
        assert_eq!(l.join(&IntLattice::zero(2)).unwrap(), l);
        let a = IntLattice::from_i64_rows(2, &[&[2, 0]]).unwrap();
        let b = IntLattice::from_i64_rows(2, &[&[0, 2]]).unwrap();
        assert_eq!(rows(&a.join(&b).unwrap()), vec![vec![2, 0], vec![0, 2]]);
        let c = IntLattice::from_i64_rows(2, &[&[1, 1]]).unwrap();
        assert_eq!(a.join(&c).unwrap(), l);
        assert!(a.join(&IntLattice::zero(3)).is_err());
    }

    #[test]
    fn kernel_examples() {
        assert!(IntLattice::kernel_with_parity(&v(&[1]), &[]).unwrap().is_zero());
        let k = IntLattice::kernel_with_parity(&v(&[1, 2]), &[1]).unwrap();
        assert_eq!(k, IntLattice::from_i64_rows(2, &[&[-4, 2]]).unwrap());
        let k = IntLattice::kernel_with_parity(&v(&[1, 3, 9]), &[]).unwrap();
        assert_eq!(k, IntLattice::from_i64_rows(3, &[&[-3, 1, 0], &[-9, 0, 1]]).unwrap());
        let k = IntLattice::kernel_with_parity(&v(&[1, 2, 3, 6]), &[1, 3]).unwrap();
        let expected =
            IntLattice::from_i64_rows(4, &[&[-3, 0, 1, 0], &[-8, 1, 0, 1], &[-4, 2, 0, 0]]).unwrap();
        assert_eq!(k, expected);
    }

    #[test]
    fn kernel_of_zero_form_is_parity_only() {
        let k = IntLattice::kernel_with_parity(&v(&[0, 0]), &[0]).unwrap();
        assert_eq!(rows(&k), vec![vec![2, 0], vec![0, 1]]);
    }

    #[test]
    fn extend_reports_growth() {
        let mut l = IntLattice::from_i64_rows(2, &[&[2, 0]]).unwrap();
        assert!(!l.extend(vec![v(&[4, 0])]).unwrap());
        assert!(l.extend(vec![v(&[1, 1])]).unwrap());
        assert_eq!(rows(&l), vec![vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn json_round_trip() {
        let l = IntLattice::from_i64_rows(2, &[&[-4, 2]]).unwrap();
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, r#"{"d":2,"basis":[[4,-2]]}"#);
        assert_eq!(serde_json::from_str::<IntLattice>(&s).unwrap(), l);
    }
}
