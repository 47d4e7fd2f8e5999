//! Ordinary characters of `S_n`.
//!
//! Values are computed with the Murnaghan-Nakayama rule on beta-numbers: a rim
//! hook of length `r` corresponds to sliding one bead from position `b` to the
//! free position `b - r`, and its leg length is the number of beads strictly
//! between the two positions. Class parts are stripped largest first and the
//! recursion is memoised on the remaining shape, which (for a fixed class)
//! determines the remaining class suffix.

mod cache;

use std::collections::{HashMap, HashSet};

use num::{BigInt, BigUint, Integer, One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, factorial, Partition};

pub use cache::{load_table, save_table, table_path, CacheError, TABLE_FORMAT};

/// Memoised evaluator of `chi^lambda(mu)` for one fixed class `mu`.
pub struct MnEngine {
    class_parts: Vec<usize>,
    n: usize,
    memo: HashMap<Vec<usize>, BigInt>,
}

impl MnEngine {
    pub fn new(mu: &Partition) -> Self {
        MnEngine {
            class_parts: mu.parts().to_vec(),
            n: mu.n(),
            memo: HashMap::new(),
        }
    }

    pub fn value(&mut self, lambda: &Partition) -> Result<BigInt> {
        if lambda.n() != self.n {
            return Err(Error::SizeMismatch {
                left: lambda.n(),
                right: self.n,
            });
        }
        Ok(self.eval(lambda.parts(), 0))
    }

    fn eval(&mut self, shape: &[usize], idx: usize) -> BigInt {
        if shape.is_empty() {
            return BigInt::one();
        }
        if self.class_parts[idx] == 1 {
            // only fixed points left: the value is the degree
            let shape = Partition::new(shape.to_vec()).expect("shapes stay valid");
            return BigInt::from(shape.dimension());
        }
        if let Some(v) = self.memo.get(shape) {
            return v.clone();
        }
        let r = self.class_parts[idx];
        let k = shape.len();
        let beads: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + k - 1 - i).collect();
        let occupied: HashSet<usize> = beads.iter().copied().collect();
        let mut total = BigInt::zero();
        for (pos, &b) in beads.iter().enumerate() {
            if b < r || occupied.contains(&(b - r)) {
                continue;
            }
            let leg = beads.iter().filter(|&&c| c > b - r && c < b).count();
            let mut moved = beads.clone();
            moved[pos] = b - r;
            let rest = Partition::from_beta_numbers(&moved);
            let sub = self.eval(rest.parts(), idx + 1);
            if leg % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        self.memo.insert(shape.to_vec(), total.clone());
        total
    }
}

/// `chi^lambda(mu)` by the Murnaghan-Nakayama rule.
pub fn mn_value(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    MnEngine::new(mu).value(lambda)
}

/// `chi^lambda` at a transposition, via `omega_lambda(s_2) = sum of contents`.
pub fn transposition_value(lambda: &Partition) -> BigInt {
    let n = lambda.n() as i64;
    if n < 2 {
        return BigInt::from(lambda.dimension());
    }
    let num: BigInt = BigInt::from(lambda.dimension()) * BigInt::from(lambda.content_sum()) * 2;
    let den = BigInt::from(n * (n - 1));
    debug_assert!(num.is_multiple_of(&den));
    num / den
}

/// `omega_lambda(s_mu) = chi^lambda(mu) K_mu / chi^lambda(1)`, checked to be an integer.
pub fn central_character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    let chi = mn_value(lambda, mu)?;
    central_from_value(&chi, lambda, mu)
}

pub(crate) fn central_from_value(chi: &BigInt, lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    let num = chi * BigInt::from(mu.class_size());
    let den = BigInt::from(lambda.dimension());
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Inconsistent(format!(
            "omega_{lambda:?}(s_{mu:?}) = {num}/{den} is not an integer"
        )));
    }
    Ok(q)
}

/// The full table `chi^lambda(mu)`, rows and columns both in descending
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    labels: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub(crate) fn from_parts(n: usize, labels: Vec<Partition>, values: Vec<Vec<BigInt>>) -> Self {
        let index = labels.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        CharacterTable {
            n,
            labels,
            index,
            values,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row labels (characters); also the column labels (classes).
    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Entry at (character row, class column).
    pub fn at(&self, row: usize, col: usize) -> &BigInt {
        &self.values[row][col]
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<&BigInt> {
        Some(&self.values[self.index_of(lambda)?][self.index_of(mu)?])
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.values[i]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.values
    }

    pub fn class_sizes(&self) -> Vec<BigUint> {
        self.labels.iter().map(Partition::class_size).collect()
    }

    /// `sum_mu K_mu chi^a(mu) chi^b(mu)`; equals `n!` when `a == b` and 0 otherwise.
    pub fn row_inner(&self, a: usize, b: usize, sizes: &[BigUint]) -> BigInt {
        self.values[a]
            .iter()
            .zip(&self.values[b])
            .zip(sizes)
            .map(|((x, y), k)| x * y * BigInt::from(k.clone()))
            .sum()
    }

    /// First failing pair of rows, if any.
    pub fn check_row_orthogonality(&self) -> std::result::Result<(), (usize, usize)> {
        let sizes = self.class_sizes();
        let order = BigInt::from(factorial(self.n));
        for a in 0..self.len() {
            for b in a..self.len() {
                let expect = if a == b { order.clone() } else { BigInt::zero() };
                if self.row_inner(a, b, &sizes) != expect {
                    return Err((a, b));
                }
            }
        }
        Ok(())
    }

    /// `sum_lambda chi^lambda(mu) chi^lambda(nu) = [mu = nu] |C(mu)|`; first failing pair of columns.
    pub fn check_column_orthogonality(&self) -> std::result::Result<(), (usize, usize)> {
        for a in 0..self.len() {
            for b in a..self.len() {
                let s: BigInt = self.values.iter().map(|row| &row[a] * &row[b]).sum();
                let expect = if a == b {
                    BigInt::from(self.labels[a].centralizer_order())
                } else {
                    BigInt::zero()
                };
                if s != expect {
                    return Err((a, b));
                }
            }
        }
        Ok(())
    }

    /// Largest absolute entry, for reporting.
    pub fn max_abs(&self) -> BigInt {
        self.values
            .iter()
            .flatten()
            .map(|v| v.abs())
            .max()
            .unwrap_or_default()
    }

    /// Entries as `i64`, when they all fit.
    pub fn to_i64(&self) -> Option<Vec<Vec<i64>>> {
        self.values
            .iter()
            .map(|r| r.iter().map(|v| v.to_i64()).collect())
            .collect()
    }
}

/// Builds the complete table, one Murnaghan-Nakayama engine per class.
///
/// Columns are evaluated in parallel; the result does not depend on the schedule.
pub fn character_table(n: usize) -> CharacterTable {
    let labels = enumerate_partitions(n);
    let columns: Vec<Vec<BigInt>> = labels
        .par_iter()
        .map(|mu| {
            let mut engine = MnEngine::new(mu);
            labels
                .iter()
                .map(|lambda| engine.value(lambda).expect("same n"))
                .collect()
        })
        .collect();
    let values = (0..labels.len())
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    CharacterTable::from_parts(n, labels, values)
}
