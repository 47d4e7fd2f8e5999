//! Vanishing and agreement oracles over sets of classes, and the searches for
//! smallest sets of classes with the vanishing or distinguishing property.

use itertools::Itertools;
use num::{BigInt, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::chartable::{CharacterTable, MnEngine};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, for_each_partition, EllPrimeConvention, Partition};

/// Classes of `S_n` that are `ell'` under `convention`, in canonical order.
pub fn regular_classes(n: usize, ell: usize, convention: EllPrimeConvention) -> Result<Vec<Partition>> {
    if ell < 2 {
        return Err(Error::Domain(format!("ell must be at least 2, got {ell}")));
    }
    Ok(enumerate_partitions(n)
        .into_iter()
        .filter(|mu| mu.class_is_ell_prime(ell, convention))
        .collect())
}

/// Classes `(2j, 1^(n-2j))` of the even-length cycles.
pub fn even_cycle_classes(n: usize) -> Vec<Partition> {
    (1..=n / 2)
        .map(|j| Partition::cycle_type(&[2 * j], n).expect("cycle fits"))
        .collect()
}

/// Odd classes that are `ell'` under `convention`.
pub fn odd_regular_classes(n: usize, ell: usize, convention: EllPrimeConvention) -> Result<Vec<Partition>> {
    Ok(regular_classes(n, ell, convention)?
        .into_iter()
        .filter(Partition::is_odd_class)
        .collect())
}

fn columns(table: &CharacterTable, classes: &[Partition]) -> Result<Vec<usize>> {
    classes
        .iter()
        .map(|mu| {
            if mu.n() != table.n() {
                return Err(Error::SizeMismatch {
                    left: mu.n(),
                    right: table.n(),
                });
            }
            table
                .index_of(mu)
                .ok_or_else(|| Error::InvalidPartition(format!("{mu:?} is not a class of S_{}", table.n())))
        })
        .collect()
}

/// Non-self-conjugate `lambda` whose character vanishes on every listed class.
pub fn vanishing_counterexamples(table: &CharacterTable, classes: &[Partition]) -> Result<Vec<Partition>> {
    let cols = columns(table, classes)?;
    Ok(table
        .labels()
        .iter()
        .enumerate()
        .filter(|(i, lambda)| !lambda.is_self_conjugate() && cols.iter().all(|&c| table.at(*i, c).is_zero()))
        .map(|(_, lambda)| lambda.clone())
        .collect())
}

/// Pairs `lambda != mu` (in canonical order) whose characters agree on every listed class.
pub fn agreement_kernel(table: &CharacterTable, classes: &[Partition]) -> Result<Vec<(Partition, Partition)>> {
    let cols = columns(table, classes)?;
    let labels = table.labels();
    let mut out = Vec::new();
    for a in 0..labels.len() {
        for b in a + 1..labels.len() {
            if cols.iter().all(|&c| table.at(a, c) == table.at(b, c)) {
                out.push((labels[a].clone(), labels[b].clone()));
            }
        }
    }
    Ok(out)
}

/// Whether `chi^lambda` and `chi^mu` agree on every even class of `S_n`.
pub fn restriction_agreement(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch {
            left: lambda.n(),
            right: mu.n(),
        });
    }
    for nu in enumerate_partitions(lambda.n()).iter().filter(|nu| !nu.is_odd_class()) {
        let mut engine = MnEngine::new(nu);
        if engine.value(lambda)? != engine.value(mu)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchPredicate {
    /// Every non-self-conjugate character is non-zero somewhere on the set.
    Vanishing,
    /// The characters are pairwise distinct on the set.
    Distinguishing,
}

/// Result of a smallest-set search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub n: usize,
    pub predicate: SearchPredicate,
    /// The exact minimum when `exhaustive`, otherwise an upper bound.
    pub size: usize,
    pub witness: Vec<Partition>,
    /// True when every smaller set was ruled out.
    pub exhaustive: bool,
}

/// Candidate classes with their table columns.
struct Candidates {
    classes: Vec<Partition>,
    cols: Vec<usize>,
}

impl Candidates {
    /// `classes` sorted ascending lexicographically, so that `(2, 1^(n-2))`
    /// precedes every other non-identity class.
    fn new(table: &CharacterTable, mut classes: Vec<Partition>) -> Self {
        classes.sort();
        let cols = classes.iter().map(|c| table.index_of(c).expect("class")).collect();
        Candidates { classes, cols }
    }

    fn search<P>(&self, max_size: usize, pred: P) -> Option<Vec<Partition>>
    where
        P: Fn(&[usize]) -> bool + Sync,
    {
        for k in 1..=max_size.min(self.cols.len()) {
            let subsets: Vec<Vec<usize>> = (0..self.cols.len()).combinations(k).collect();
            let hit = subsets.par_iter().find_first(|s| {
                let cols: Vec<usize> = s.iter().map(|&i| self.cols[i]).collect();
                pred(&cols)
            });
            if let Some(s) = hit {
                return Some(s.iter().map(|&i| self.classes[i].clone()).collect());
            }
        }
        None
    }
}

fn check_search_args(n: usize, max_size: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain(format!("searches need n >= 2, got {n}")));
    }
    if max_size < 1 {
        return Err(Error::Domain("max_size must be at least 1".into()));
    }
    Ok(())
}

/// Smallest set of odd classes on which only self-conjugate characters vanish.
///
/// Self-conjugate characters vanish on all odd classes, so over odd classes the
/// property characterises self-conjugacy. When no set of at most `max_size`
/// classes works, the even-length cycle classes are returned as a bound.
pub fn min_vanishing_set(table: &CharacterTable, max_size: usize) -> Result<SearchOutcome> {
    let n = table.n();
    check_search_args(n, max_size)?;
    let odd: Vec<Partition> = table.labels().iter().filter(|c| c.is_odd_class()).cloned().collect();
    let cand = Candidates::new(table, odd);
    let rows: Vec<usize> = (0..table.len())
        .filter(|&i| !table.labels()[i].is_self_conjugate())
        .collect();
    let pred = |cols: &[usize]| rows.iter().all(|&i| cols.iter().any(|&c| !table.at(i, c).is_zero()));
    if let Some(witness) = cand.search(max_size, pred) {
        return Ok(SearchOutcome {
            n,
            predicate: SearchPredicate::Vanishing,
            size: witness.len(),
            witness,
            exhaustive: true,
        });
    }
    let witness = even_cycle_classes(n);
    if !vanishing_counterexamples(table, &witness)?.is_empty() {
        return Err(Error::Inconsistent(format!(
            "a non-self-conjugate character of S_{n} vanishes on all even-length cycles"
        )));
    }
    Ok(SearchOutcome {
        n,
        predicate: SearchPredicate::Vanishing,
        size: witness.len(),
        witness,
        exhaustive: false,
    })
}

/// Smallest set of classes on which the irreducible characters are pairwise distinct.
///
/// When no set of at most `max_size` classes works, the `n` cycle classes
/// `(1), ..., (n)` are returned as a bound.
pub fn min_distinguishing_set(table: &CharacterTable, max_size: usize) -> Result<SearchOutcome> {
    let n = table.n();
    check_search_args(n, max_size)?;
    let cand = Candidates::new(table, table.labels().to_vec());
    let m = table.len();
    let pred = |cols: &[usize]| {
        let mut keys: Vec<Vec<&BigInt>> = (0..m).map(|i| cols.iter().map(|&c| table.at(i, c)).collect()).collect();
        keys.sort();
        keys.windows(2).all(|w| w[0] != w[1])
    };
    if let Some(witness) = cand.search(max_size, pred) {
        return Ok(SearchOutcome {
            n,
            predicate: SearchPredicate::Distinguishing,
            size: witness.len(),
            witness,
            exhaustive: true,
        });
    }
    let witness: Vec<Partition> = (1..=n)
        .map(|i| Partition::cycle_type(&[i], n).expect("cycle fits"))
        .collect();
    if !agreement_kernel(table, &witness)?.is_empty() {
        return Err(Error::Inconsistent(format!(
            "two characters of S_{n} agree on all cycle classes"
        )));
    }
    Ok(SearchOutcome {
        n,
        predicate: SearchPredicate::Distinguishing,
        size: witness.len(),
        witness,
        exhaustive: false,
    })
}

/// Non-self-conjugate `lambda` of `n` with `chi^lambda` zero on the transposition
/// class and, when `n >= 4`, on the class of 4-cycles.
///
/// The transposition value is zero exactly when the content sum is zero, so the
/// Murnaghan-Nakayama engine is only consulted for those shapes.
pub fn transposition_pair_counterexamples(n: usize) -> Vec<Partition> {
    if n < 2 {
        return Vec::new();
    }
    let mut engine = (n >= 4).then(|| MnEngine::new(&Partition::cycle_type(&[4], n).expect("cycle fits")));
    let mut out = Vec::new();
    for_each_partition(n, |parts| {
        let content: i64 = parts
            .iter()
            .enumerate()
            .map(|(i, &p)| (p as i64) * (p as i64 - 1) / 2 - (i as i64) * p as i64)
            .sum();
        if content != 0 {
            return;
        }
        let lambda = Partition::new(parts.to_vec()).expect("valid parts");
        if lambda.is_self_conjugate() {
            return;
        }
        let vanishes = match engine.as_mut() {
            Some(e) => e.value(&lambda).expect("same n") == BigInt::zero(),
            None => true,
        };
        if vanishes {
            out.push(lambda);
        }
    });
    out
}
