//! Consistency checks for a supplied decomposition matrix `D_p(n)` against
//! the ordinary character table.

use std::collections::BTreeMap;

use num::{BigInt, Zero};
use serde::{Deserialize, Serialize};

use crate::chartable::{character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};

pub const FIXTURE_FORMAT: &str = "symchar-fixture-v1";

/// The decomposition matrix of `S_5` in characteristic 3.
const D3_5: &str = r#"{
  "format": "symchar-fixture-v1",
  "name": "d3_5",
  "n": 5,
  "p": 3,
  "row_labels": ["5", "4,1", "3,2", "3,1,1", "2,2,1", "2,1,1,1", "1^5"],
  "col_labels": ["5", "4,1", "3,2", "3,1,1", "2,2,1"],
  "entries": [
    [1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0],
    [0, 1, 1, 0, 0],
    [0, 0, 0, 1, 0],
    [1, 0, 0, 0, 1],
    [0, 0, 0, 0, 1],
    [0, 0, 1, 0, 0]
  ]
}"#;

const TRIVIAL: &str = r#"{
  "format": "symchar-fixture-v1",
  "name": "trivial",
  "n": 1,
  "p": 2,
  "row_labels": ["1"],
  "col_labels": ["1"],
  "entries": [[1]]
}"#;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionFixture {
    pub format: String,
    #[serde(default)]
    pub name: String,
    pub n: usize,
    pub p: usize,
    pub row_labels: Vec<Partition>,
    pub col_labels: Vec<Partition>,
    pub entries: Vec<Vec<u32>>,
}

impl DecompositionFixture {
    pub fn from_json(text: &str) -> Result<Self> {
        let f: DecompositionFixture =
            serde_json::from_str(text).map_err(|e| Error::Domain(format!("malformed fixture: {e}")))?;
        if f.format != FIXTURE_FORMAT {
            return Err(Error::Domain(format!(
                "fixture format {:?}, expected {FIXTURE_FORMAT:?}",
                f.format
            )));
        }
        Ok(f)
    }

    /// Fixtures shipped with the library, by name.
    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "d3_5" => Self::from_json(D3_5),
            "trivial" => Self::from_json(TRIVIAL),
            other => Err(Error::Domain(format!("unknown fixture {other:?}"))),
        }
    }

    pub fn builtin_names() -> &'static [&'static str] {
        &["d3_5", "trivial"]
    }

    pub fn entry(&self, lambda: &Partition, nu: &Partition) -> Option<u32> {
        let i = self.row_labels.iter().position(|l| l == lambda)?;
        let j = self.col_labels.iter().position(|l| l == nu)?;
        Some(self.entries[i][j])
    }
}

/// One failed check, located by row `lambda` and column or class `mu`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "check", rename_all = "kebab-case")]
pub enum FixtureFailure {
    /// Labels or matrix shape do not match the partitions of `n`.
    Shape { detail: String },
    /// The `p`-regular square block is not lower unitriangular.
    Wedge { lambda: Partition, nu: Partition, entry: u32 },
    /// Non-zero entry between different `p`-blocks (different `p`-cores).
    Block { lambda: Partition, nu: Partition },
    /// Non-zero entry with `nu` not dominating `lambda`.
    Dominance { lambda: Partition, nu: Partition },
    /// `chi^lambda(mu)` differs from `sum_nu D_(lambda nu) phi_nu(mu)` at a `p`-regular class.
    Character {
        lambda: Partition,
        mu: Partition,
        expected: String,
        got: String,
    },
    /// The projective character of column `nu` is non-zero on the `p`-singular class `mu`.
    Projective { nu: Partition, mu: Partition, value: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureReport {
    pub n: usize,
    pub p: usize,
    pub consistent: bool,
    /// For odd `p`: no two rows are equal. For `p = 2`: rows are equal exactly for conjugate pairs.
    pub rows_distinct: bool,
    pub equal_rows: Vec<(Partition, Partition)>,
    pub failures: Vec<FixtureFailure>,
    /// `phi_nu` on the `p`-regular classes, by column then class.
    pub brauer_values: BTreeMap<String, BTreeMap<String, String>>,
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Runs every check on `f` and reports all failures found.
pub fn verify_decomposition_fixture(f: &DecompositionFixture) -> Result<FixtureReport> {
    if !is_prime(f.p) {
        return Err(Error::Domain(format!("p = {} is not prime", f.p)));
    }
    let table = character_table(f.n);
    Ok(verify_with_table(f, &table))
}

pub fn verify_with_table(f: &DecompositionFixture, table: &CharacterTable) -> FixtureReport {
    let mut report = FixtureReport {
        n: f.n,
        p: f.p,
        consistent: false,
        rows_distinct: false,
        equal_rows: Vec::new(),
        failures: Vec::new(),
        brauer_values: BTreeMap::new(),
    };
    if let Some(detail) = shape_problem(f) {
        report.failures.push(FixtureFailure::Shape { detail });
        return report;
    }
    let p = f.p;
    // rows and columns re-indexed into canonical order
    let all = enumerate_partitions(f.n);
    let regular: Vec<Partition> = all.iter().filter(|l| l.is_regular(p)).cloned().collect();
    let col_of: Vec<usize> = regular
        .iter()
        .map(|nu| f.col_labels.iter().position(|c| c == nu).expect("checked"))
        .collect();
    let d = |lambda: &Partition, j: usize| -> u32 {
        let i = f.row_labels.iter().position(|r| r == lambda).expect("checked");
        f.entries[i][col_of[j]]
    };
    let regular_classes: Vec<Partition> = all.iter().filter(|mu| mu.element_order() % p as u64 != 0).cloned().collect();
    let singular_classes: Vec<Partition> = all.iter().filter(|mu| mu.element_order() % p as u64 == 0).cloned().collect();
    let chi = |lambda: &Partition, mu: &Partition| table.get(lambda, mu).expect("in table").clone();

    // wedge shape on the regular rows
    for (i, lambda) in regular.iter().enumerate() {
        for (j, nu) in regular.iter().enumerate() {
            let e = d(lambda, j);
            let want = u32::from(i == j);
            if (j >= i) && e != want {
                report.failures.push(FixtureFailure::Wedge {
                    lambda: lambda.clone(),
                    nu: nu.clone(),
                    entry: e,
                });
            }
        }
    }

    for lambda in &all {
        let core = lambda.core(p);
        for (j, nu) in regular.iter().enumerate() {
            if d(lambda, j) == 0 {
                continue;
            }
            if nu.core(p) != core {
                report.failures.push(FixtureFailure::Block {
                    lambda: lambda.clone(),
                    nu: nu.clone(),
                });
            }
            if !nu.dominates(lambda) {
                report.failures.push(FixtureFailure::Dominance {
                    lambda: lambda.clone(),
                    nu: nu.clone(),
                });
            }
        }
    }

    {
        // phi_i = chi^(lambda_i) - sum_(j < i) D_ij phi_j on regular classes;
        // the diagonal is taken to be 1 here, so a bad diagonal entry also
        // shows up in the row check below
        let mut phi: Vec<Vec<BigInt>> = Vec::with_capacity(regular.len());
        for (i, lambda) in regular.iter().enumerate() {
            let row: Vec<BigInt> = regular_classes
                .iter()
                .enumerate()
                .map(|(k, mu)| {
                    let mut v = chi(lambda, mu);
                    for (j, pj) in phi.iter().enumerate().take(i) {
                        v -= BigInt::from(d(lambda, j)) * &pj[k];
                    }
                    v
                })
                .collect();
            phi.push(row);
        }
        for (j, nu) in regular.iter().enumerate() {
            report.brauer_values.insert(
                nu.to_string(),
                regular_classes
                    .iter()
                    .zip(&phi[j])
                    .map(|(mu, v)| (mu.to_string(), v.to_string()))
                    .collect(),
            );
        }
        for lambda in &all {
            for (k, mu) in regular_classes.iter().enumerate() {
                let got: BigInt = (0..regular.len()).map(|j| BigInt::from(d(lambda, j)) * &phi[j][k]).sum();
                let expected = chi(lambda, mu);
                if got != expected {
                    report.failures.push(FixtureFailure::Character {
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                        expected: expected.to_string(),
                        got: got.to_string(),
                    });
                }
            }
        }
    }

    for (j, nu) in regular.iter().enumerate() {
        for mu in &singular_classes {
            let value: BigInt = all.iter().map(|lambda| BigInt::from(d(lambda, j)) * chi(lambda, mu)).sum();
            if !value.is_zero() {
                report.failures.push(FixtureFailure::Projective {
                    nu: nu.clone(),
                    mu: mu.clone(),
                    value: value.to_string(),
                });
            }
        }
    }

    for a in 0..all.len() {
        for b in a + 1..all.len() {
            if (0..regular.len()).all(|j| d(&all[a], j) == d(&all[b], j)) {
                report.equal_rows.push((all[a].clone(), all[b].clone()));
            }
        }
    }
    report.rows_distinct = if p == 2 {
        let mut want: Vec<(Partition, Partition)> = all
            .iter()
            .filter(|l| **l > l.conjugate())
            .map(|l| (l.clone(), l.conjugate()))
            .collect();
        want.sort();
        let mut got = report.equal_rows.clone();
        got.sort();
        got == want
    } else {
        report.equal_rows.is_empty()
    };
    report.consistent = report.failures.is_empty();
    report
}

fn shape_problem(f: &DecompositionFixture) -> Option<String> {
    let mut rows = f.row_labels.clone();
    rows.sort();
    let mut all = enumerate_partitions(f.n);
    all.sort();
    if rows != all {
        return Some(format!("row labels are not the partitions of {}", f.n));
    }
    let mut cols = f.col_labels.clone();
    cols.sort();
    let mut regular: Vec<Partition> = all.into_iter().filter(|l| l.is_regular(f.p)).collect();
    regular.sort();
    if cols != regular {
        return Some(format!("column labels are not the {}-regular partitions of {}", f.p, f.n));
    }
    if f.entries.len() != f.row_labels.len() || f.entries.iter().any(|r| r.len() != f.col_labels.len()) {
        return Some(format!(
            "entries are not a {} x {} matrix",
            f.row_labels.len(),
            f.col_labels.len()
        ));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_d3_5_is_consistent() {
        let f = DecompositionFixture::builtin("d3_5").unwrap();
        let r = verify_decomposition_fixture(&f).unwrap();
        assert_eq!(r.failures, vec![]);
        assert!(r.consistent && r.rows_distinct);
        // phi_(5) is the trivial Brauer character
        assert!(r.brauer_values["5"].values().all(|v| v == "1"));
    }

    #[test]
    fn trivial_fixture() {
        let r = verify_decomposition_fixture(&DecompositionFixture::builtin("trivial").unwrap()).unwrap();
        assert!(r.consistent && r.rows_distinct);
    }

    #[test]
    fn altered_diagonal_breaks_character_check() {
        let mut f = DecompositionFixture::builtin("d3_5").unwrap();
        f.entries[2][2] = 2;
        let r = verify_decomposition_fixture(&f).unwrap();
        assert!(!r.consistent);
        assert!(r.failures.iter().any(|x| matches!(x, FixtureFailure::Wedge { .. })));
        let located = r.failures.iter().find_map(|x| match x {
            FixtureFailure::Character { lambda, mu, .. } => Some((lambda.clone(), mu.clone())),
            _ => None,
        });
        let (lambda, mu) = located.expect("row check fails");
        assert_eq!(lambda, "3,2".parse().unwrap());
        assert!(mu.element_order() % 3 != 0);
    }

    #[test]
    fn every_single_entry_change_is_caught() {
        let base = DecompositionFixture::builtin("d3_5").unwrap();
        let table = character_table(5);
        for i in 0..base.entries.len() {
            for j in 0..base.entries[i].len() {
                for v in 0..=3 {
                    if v == base.entries[i][j] {
                        continue;
                    }
                    let mut f = base.clone();
                    f.entries[i][j] = v;
                    assert!(!verify_with_table(&f, &table).consistent, "entry ({i}, {j}) = {v}");
                }
            }
        }
    }

    #[test]
    fn shape_errors() {
        let mut f = DecompositionFixture::builtin("d3_5").unwrap();
        f.col_labels.pop();
        let r = verify_decomposition_fixture(&f).unwrap();
        assert!(matches!(r.failures[0], FixtureFailure::Shape { .. }));
        let mut g = DecompositionFixture::builtin("d3_5").unwrap();
        g.p = 4;
        assert!(verify_decomposition_fixture(&g).is_err());
        assert!(DecompositionFixture::from_json("{\"format\": \"other\"}").is_err());
        assert!(DecompositionFixture::builtin("nope").is_err());
    }
}
