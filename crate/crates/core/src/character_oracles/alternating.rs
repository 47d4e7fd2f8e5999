//! Characters of `A_n` obtained by restricting those of `S_n`.

use std::fmt;

use num::{BigInt, BigRational, BigUint, Zero};

use super::quadratic::{QuadraticSum, QuadraticValue};
use crate::chartable::{character_table, CharacterTable};
use crate::class_algebra::{class_basis, label_size, Algebra, ClassLabel, SplitSign};
use crate::error::{Error, Result};
use crate::partitions::{factorial, Partition};

/// Values of the two `A_n` constituents of `chi^lambda` on the `+` class of
/// cycle type given by the diagonal hooks of `lambda`.
///
/// With `q_1, ..., q_r` the diagonal hook lengths and `e = (-1)^((n - r)/2)`,
/// these are `e/2 + sqrt(e q_1 ... q_r)/2` and `e/2 - sqrt(e q_1 ... q_r)/2`.
pub fn split_values(lambda: &Partition) -> Result<(QuadraticValue, QuadraticValue)> {
    if !lambda.is_self_conjugate() {
        return Err(Error::Domain(format!("{lambda:?} is not self-conjugate")));
    }
    let q = lambda.diagonal_hooks();
    let r = q.len();
    let n = lambda.n();
    let eps: i64 = if ((n - r) / 2).is_multiple_of(2) { 1 } else { -1 };
    let prod: i64 = q.iter().map(|&x| x as i64).product();
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let u = BigRational::from_integer(BigInt::from(eps)) * &half;
    let plus = QuadraticValue::new(u.clone(), half.clone(), eps * prod);
    let minus = QuadraticValue::new(u, -half, eps * prod);
    Ok((plus, minus))
}

/// Label of an irreducible character of `A_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnCharLabel {
    /// Restriction of `chi^lambda = chi^lambda'`, labelled by the larger of the pair.
    Restricted(Partition),
    /// One of the two constituents of `chi^lambda` for self-conjugate `lambda`.
    Constituent(Partition, SplitSign),
}

impl fmt::Display for AnCharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnCharLabel::Restricted(p) => write!(f, "({p})"),
            AnCharLabel::Constituent(p, s) => write!(f, "({p}){}", s.symbol()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct AnCharacterTable {
    n: usize,
    classes: Vec<ClassLabel>,
    sizes: Vec<BigUint>,
    labels: Vec<AnCharLabel>,
    values: Vec<Vec<QuadraticValue>>,
}

impl AnCharacterTable {
    /// Assembles the table from the character table of `S_n`.
    ///
    /// Constituent `+` of a self-conjugate `chi^lambda` takes the `+sqrt` split
    /// value on the `+` class of the diagonal-hook type and the `-sqrt` value on
    /// the `-` class; constituent `-` is the other way round. On every other
    /// class both are `chi^lambda / 2`.
    pub fn build(n: usize) -> Result<Self> {
        Self::from_sn_table(&character_table(n))
    }

    pub fn from_sn_table(table: &CharacterTable) -> Result<Self> {
        let n = table.n();
        let classes = class_basis(n, Algebra::An);
        let sizes: Vec<BigUint> = classes.iter().map(label_size).collect();
        let col = |t: &Partition| table.index_of(t).expect("class of S_n");
        let class_cols: Vec<usize> = classes.iter().map(|c| col(&c.cycle_type)).collect();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let mut labels = Vec::new();
        let mut values = Vec::new();
        for (i, lambda) in table.labels().iter().enumerate() {
            let row = table.row(i);
            let restricted = || -> Vec<QuadraticValue> {
                class_cols
                    .iter()
                    .map(|&c| QuadraticValue::rational(BigRational::from_integer(row[c].clone())))
                    .collect()
            };
            let conj = lambda.conjugate();
            if conj != *lambda {
                if *lambda > conj {
                    labels.push(AnCharLabel::Restricted(lambda.clone()));
                    values.push(restricted());
                }
                continue;
            }
            if n <= 1 {
                labels.push(AnCharLabel::Restricted(lambda.clone()));
                values.push(restricted());
                continue;
            }
            let q = Partition::new(lambda.diagonal_hooks())?;
            let (a, b) = split_values(lambda)?;
            for sign in [SplitSign::Plus, SplitSign::Minus] {
                let vals = classes
                    .iter()
                    .zip(&class_cols)
                    .map(|(class, &c)| match class.split {
                        Some(s) if class.cycle_type == q => {
                            if s == sign {
                                a.clone()
                            } else {
                                b.clone()
                            }
                        }
                        _ => QuadraticValue::rational(BigRational::from_integer(row[c].clone()) * &half),
                    })
                    .collect();
                labels.push(AnCharLabel::Constituent(lambda.clone(), sign));
                values.push(vals);
            }
        }
        Ok(AnCharacterTable {
            n,
            classes,
            sizes,
            labels,
            values,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[ClassLabel] {
        &self.classes
    }

    pub fn class_sizes(&self) -> &[BigUint] {
        &self.sizes
    }

    pub fn labels(&self) -> &[AnCharLabel] {
        &self.labels
    }

    pub fn row(&self, i: usize) -> &[QuadraticValue] {
        &self.values[i]
    }

    /// `sum_C |C| chi_a(C) conj(chi_b(C))`, if it is rational.
    pub fn inner_times_order(&self, a: usize, b: usize) -> Option<BigRational> {
        let mut sum = QuadraticSum::default();
        for ((x, y), size) in self.values[a].iter().zip(&self.values[b]).zip(&self.sizes) {
            let prod = x.checked_mul(&y.complex_conj())?;
            sum.add(&prod.scale(&BigRational::from_integer(BigInt::from(size.clone()))));
        }
        sum.as_rational()
    }

    /// Exact first orthogonality, plus squareness of the table.
    pub fn check_orthogonality(&self) -> std::result::Result<(), (usize, usize)> {
        if self.labels.len() != self.classes.len() {
            return Err((self.labels.len(), self.classes.len()));
        }
        let order = if self.n <= 1 {
            BigUint::from(1u32)
        } else {
            factorial(self.n) / 2u32
        };
        let order = BigRational::from_integer(BigInt::from(order));
        for a in 0..self.labels.len() {
            for b in a..self.labels.len() {
                let want = if a == b { order.clone() } else { BigRational::zero() };
                if self.inner_times_order(a, b) != Some(want) {
                    return Err((a, b));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class_algebra::perm::{canonical_rep, compose_into};

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn split_value_instances() {
        let (a, b) = split_values(&"2,1".parse().unwrap()).unwrap();
        assert_eq!(a, QuadraticValue::new(q(-1, 2), q(1, 2), -3));
        assert_eq!(b, QuadraticValue::new(q(-1, 2), q(-1, 2), -3));
        let (a, _) = split_values(&"2,2".parse().unwrap()).unwrap();
        assert_eq!(a, QuadraticValue::new(q(-1, 2), q(1, 2), -3));
        let (a, b) = split_values(&"3,2,1".parse().unwrap()).unwrap();
        assert_eq!(a, QuadraticValue::new(q(1, 2), q(1, 2), 5));
        assert_eq!(b, QuadraticValue::new(q(1, 2), q(-1, 2), 5));
        assert!(split_values(&"3".parse().unwrap()).is_err());
    }

    #[test]
    fn a3_against_cyclic_group() {
        // A_3 is cyclic of order 3: its non-trivial characters send the
        // canonical 3-cycle g to a primitive cube root w and g^2 to w^2.
        let t = AnCharacterTable::build(3).unwrap();
        let g = canonical_rep(&"3".parse().unwrap());
        let mut g2 = vec![0; 3];
        compose_into(&g, &g, &mut g2);
        // g^2 = g^-1 is conjugate to g in S_3 by an odd permutation, so it lies in the - class
        assert!(!crate::class_algebra::perm::conjugator_is_even(&g2, &"3".parse().unwrap()));
        let plus = t.classes().iter().position(|c| c.split == Some(SplitSign::Plus)).unwrap();
        let minus = t.classes().iter().position(|c| c.split == Some(SplitSign::Minus)).unwrap();
        for i in 0..t.labels().len() {
            let w = &t.row(i)[plus];
            let w2 = w.checked_mul(w).unwrap();
            assert_eq!(&t.row(i)[minus], &w2);
            assert_eq!(w.checked_mul(&w2).unwrap(), QuadraticValue::from_int(1));
        }
        t.check_orthogonality().unwrap();
    }

    #[test]
    fn orthogonality_small() {
        for n in 1..=8 {
            let t = AnCharacterTable::build(n).unwrap();
            assert_eq!(t.check_orthogonality(), Ok(()), "n = {n}");
        }
    }

    #[test]
    fn a5_has_golden_ratio_values() {
        let t = AnCharacterTable::build(5).unwrap();
        assert_eq!(t.labels().len(), 5);
        let labels: Vec<String> = t.labels().iter().map(|l| l.to_string()).collect();
        assert_eq!(labels, ["(5)", "(4,1)", "(3,2)", "(3,1,1)+", "(3,1,1)-"]);
        let five = t.classes().iter().position(|c| c.to_string() == "(5)+").unwrap();
        assert_eq!(t.row(3)[five], QuadraticValue::new(q(1, 2), q(1, 2), 5));
    }
}
