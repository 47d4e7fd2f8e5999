//! Generating sets of class sums, and the closed form for the top-support
//! coefficients of a product of two cycle sums.

use std::str::FromStr;

use num::BigInt;

use super::{Algebra, CentralElement, ClassLabel, SplitSign};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratingSet {
    /// Cycle sums `s_i` with `ell` not dividing `i`, plus `s_(ell j - 1, 2)` for `1 < ell j < n`.
    Xl,
    /// Cycle sums `s_i` with `i` odd or `ell` not dividing `i`, plus `s_(2 ell j - 1, 2)` for `1 < 2 ell j < n`.
    Yl,
    /// Classes of the even cycles `(2j)` with `ell` not dividing `j`, plus `(2k ell - 1, 2)` for `1 < 2k ell < n`.
    Zl,
    /// In `Z(QA_n)`: all-odd-parts class sums, plus `s^+` for the split classes.
    XAn,
}

impl GeneratingSet {
    pub fn algebra(self) -> Algebra {
        match self {
            GeneratingSet::XAn => Algebra::An,
            _ => Algebra::Sn,
        }
    }
}

impl FromStr for GeneratingSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "xl" | "x-ell" => Ok(GeneratingSet::Xl),
            "yl" | "y-ell" => Ok(GeneratingSet::Yl),
            "zl" | "z-ell" => Ok(GeneratingSet::Zl),
            "xan" | "x-an" | "x" => Ok(GeneratingSet::XAn),
            other => Err(Error::Domain(format!("unknown generating set {other:?}"))),
        }
    }
}

fn cycle(len: usize, n: usize) -> Partition {
    Partition::cycle_type(&[len], n).expect("cycle fits")
}

/// Cycle types of the set `Z_ell(n)`.
pub fn z_ell_types(ell: usize, n: usize) -> Result<Vec<Partition>> {
    if ell < 1 {
        return Err(Error::Domain("Z_ell needs ell >= 1".into()));
    }
    let mut out: Vec<Partition> = (1..=n / 2)
        .filter(|j| j % ell != 0)
        .map(|j| cycle(2 * j, n))
        .collect();
    let mut k = 1;
    while 2 * k * ell < n {
        if 2 * k * ell > 1 {
            out.push(Partition::cycle_type(&[2 * k * ell - 1, 2], n)?);
        }
        k += 1;
    }
    Ok(out)
}

/// The named generating set for the given `ell` and `n`.
pub fn generating_set(kind: GeneratingSet, ell: usize, n: usize) -> Result<Vec<CentralElement>> {
    match kind {
        GeneratingSet::Xl => {
            if ell <= 2 {
                return Err(Error::Domain(format!("X_ell needs ell > 2, got {ell}")));
            }
            let mut types: Vec<Partition> = (1..=n).filter(|i| i % ell != 0).map(|i| cycle(i, n)).collect();
            let mut j = 1;
            while ell * j < n {
                types.push(Partition::cycle_type(&[ell * j - 1, 2], n)?);
                j += 1;
            }
            Ok(types.iter().map(CentralElement::class_sum).collect())
        }
        GeneratingSet::Yl => {
            if ell <= 1 || ell.is_multiple_of(2) {
                return Err(Error::Domain(format!("Y_ell needs odd ell > 1, got {ell}")));
            }
            let mut types: Vec<Partition> = (1..=n)
                .filter(|i| i % 2 == 1 || i % ell != 0)
                .map(|i| cycle(i, n))
                .collect();
            let mut j = 1;
            while 2 * ell * j < n {
                types.push(Partition::cycle_type(&[2 * ell * j - 1, 2], n)?);
                j += 1;
            }
            Ok(types.iter().map(CentralElement::class_sum).collect())
        }
        GeneratingSet::Zl => Ok(z_ell_types(ell, n)?.iter().map(CentralElement::class_sum).collect()),
        GeneratingSet::XAn => {
            let mut out = Vec::new();
            for t in enumerate_partitions(n).into_iter().filter(Partition::all_parts_odd) {
                out.push(CentralElement::whole_class_in_an(&t)?);
                if n > 1 && t.has_odd_distinct_parts() {
                    out.push(CentralElement::from_label(
                        n,
                        Algebra::An,
                        ClassLabel::split(t, SplitSign::Plus)?,
                    )?);
                }
            }
            Ok(out)
        }
    }
}

/// Coefficient of `s_(a,b)` in `s_k s_l`: `ab min(k-1, l-1, a, b)`.
pub fn lemma_coefficient(k: usize, l: usize, a: usize, b: usize, n: usize) -> Result<BigInt> {
    if k < 3 || l < 3 {
        return Err(Error::Domain(format!("need k, l >= 3, got k = {k}, l = {l}")));
    }
    if k + l > n + 2 {
        return Err(Error::Domain(format!("need k + l <= n + 2, got {k} + {l} > {n} + 2")));
    }
    if a < 2 || b < 2 || a + b != k + l - 2 {
        return Err(Error::Domain(format!(
            "need a, b >= 2 with a + b = k + l - 2, got a = {a}, b = {b}"
        )));
    }
    let m = (k - 1).min(l - 1).min(a).min(b);
    Ok(BigInt::from(a * b * m))
}

/// The only labels other than the `(a, b)` ones that may appear in `s_k s_l`
/// with support at least `k + l - 2`.
pub fn lemma_tail_labels(k: usize, l: usize, n: usize) -> Result<Vec<Partition>> {
    if k < 3 || l < 3 || k + l > n + 2 {
        return Err(Error::Domain(format!(
            "need k, l >= 3 and k + l <= n + 2, got k = {k}, l = {l}, n = {n}"
        )));
    }
    let mut out = Vec::new();
    if k + l - 1 <= n {
        out.push(cycle(k + l - 1, n));
    }
    if k + l <= n {
        out.push(Partition::cycle_type(&[k, l], n)?);
    }
    Ok(out)
}
