//! Dimension of the unital subalgebra generated by a set of central elements.

use num::{BigRational, One, Zero};

use super::{Algebra, CentralElement, ClassAlgebra};
use crate::error::Result;

/// Row-echelon basis over `Q`, pivoting on the first non-zero column.
///
/// Rows are kept in insertion order; each has a 1 at its pivot, and every row
/// is zero at the pivots of the rows inserted before it.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &[BigRational]) -> Vec<BigRational> {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    /// Adds `v` to the span; returns its reduced form if it was independent.
    pub fn insert(&mut self, v: &[BigRational]) -> Option<Vec<BigRational>> {
        let mut r = self.reduce(v);
        let pivot = r.iter().position(|x| !x.is_zero())?;
        let inv = BigRational::one() / &r[pivot];
        for x in r.iter_mut() {
            *x *= &inv;
        }
        self.rows.push((pivot, r.clone()));
        Some(r)
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }
}

impl ClassAlgebra {
    /// Dimension of the unital subalgebra generated by `gens`.
    ///
    /// The span starts at `1` and the generators; each round multiplies the
    /// vectors added in the previous round by every generator and keeps the
    /// independent residues. Since every word in the generators is a shorter
    /// word times one generator, this reaches the span of all words.
    pub fn closure_dimension(&self, gens: &[CentralElement]) -> Result<usize> {
        let gens: Vec<Vec<BigRational>> = gens.iter().map(|g| self.to_dense(g)).collect::<Result<_>>()?;
        let mut span = Echelon::new();
        let mut frontier = Vec::new();
        let one = self.to_dense(&CentralElement::identity(self.n(), self.algebra()))?;
        for v in std::iter::once(&one).chain(gens.iter()) {
            if let Some(r) = span.insert(v) {
                frontier.push(r);
            }
        }
        while !frontier.is_empty() && span.rank() < self.dim() {
            let mut next = Vec::new();
            for f in &frontier {
                for g in &gens {
                    if let Some(r) = span.insert(&self.multiply_dense(f, g)) {
                        next.push(r);
                    }
                }
            }
            frontier = next;
        }
        Ok(span.rank())
    }
}

/// Dimension of the unital subalgebra of `Z(QS_n)` or `Z(QA_n)` generated by `gens`.
pub fn closure_dimension(gens: &[CentralElement], n: usize, algebra: Algebra) -> Result<usize> {
    ClassAlgebra::new(n, algebra)?.closure_dimension(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_partitions, Partition};
    use num::BigInt;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn echelon_rank() {
        let mut e = Echelon::new();
        assert!(e.insert(&[q(0), q(2), q(4)]).is_some());
        assert!(e.insert(&[q(0), q(1), q(2)]).is_none());
        assert!(e.insert(&[q(1), q(1), q(0)]).is_some());
        assert!(e.contains(&[q(2), q(4), q(4)]));
        assert!(!e.contains(&[q(0), q(0), q(1)]));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn identity_alone_spans_one_dimension() {
        let gens = vec![CentralElement::class_sum(&Partition::column(5))];
        assert_eq!(closure_dimension(&gens, 5, Algebra::Sn).unwrap(), 1);
    }

    #[test]
    fn all_cycle_sums_generate() {
        // the cycle sums s_1..s_n generate Z(QS_n)
        for n in 1..=7 {
            let gens: Vec<_> = (1..=n)
                .map(|i| CentralElement::class_sum(&Partition::cycle_type(&[i], n).unwrap()))
                .collect();
            let dim = closure_dimension(&gens, n, Algebra::Sn).unwrap();
            assert_eq!(dim, enumerate_partitions(n).len());
        }
    }

    #[test]
    fn subalgebra_of_transposition_sum() {
        // Z(QS_n) is split semisimple, so the subalgebra generated by s_2 has
        // dimension equal to the number of distinct values of omega(s_2),
        // i.e. of distinct content sums.
        for n in 2..=7 {
            let gens = vec![CentralElement::class_sum(&Partition::cycle_type(&[2], n).unwrap())];
            let dim = closure_dimension(&gens, n, Algebra::Sn).unwrap();
            let mut sums: Vec<i64> = enumerate_partitions(n).iter().map(|l| l.content_sum()).collect();
            sums.sort_unstable();
            sums.dedup();
            assert_eq!(dim, sums.len(), "n = {n}");
        }
    }
}
