//! Centres of the rational group algebras of `S_n` and `A_n`, in the basis of
//! conjugacy-class sums.
//!
//! Structure constants are obtained by direct enumeration: for class sums
//! `x` and `y`, fix one element `g` of class `x`, run over every `h` in class
//! `y`, and classify `g h`. If `N_rho` of the products land in class `rho`,
//! then `c^rho = |x| N_rho / |rho|`, and the division is exact.

mod closure;
mod generators;
pub mod perm;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul};
use std::sync::OnceLock;

use num::{BigInt, BigRational, BigUint, Integer, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};

pub use closure::{closure_dimension, Echelon};
pub use generators::{
    generating_set, lemma_coefficient, lemma_tail_labels, z_ell_types, GeneratingSet,
};

use perm::{canonical_rep, compose_into, conjugate_by, conjugator_is_even, for_each_in_class, TypeKeyer};

/// Largest `n` for which `S_n` products are enumerated.
pub const SN_MAX_N: usize = 10;
/// Largest `n` for which `A_n` products and closures are enumerated.
pub const AN_MAX_N: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algebra {
    Sn,
    An,
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algebra::Sn => "Sn",
            Algebra::An => "An",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitSign {
    Plus,
    Minus,
}

impl SplitSign {
    pub fn symbol(self) -> char {
        match self {
            SplitSign::Plus => '+',
            SplitSign::Minus => '-',
        }
    }
}

/// A basis element of `Z(QS_n)` or `Z(QA_n)`.
///
/// The `+` half of a split class is the `A_n`-class of the canonical
/// representative (consecutive points, longest cycle first).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassLabel {
    pub cycle_type: Partition,
    pub split: Option<SplitSign>,
}

impl ClassLabel {
    pub fn whole(cycle_type: Partition) -> Self {
        ClassLabel {
            cycle_type,
            split: None,
        }
    }

    pub fn split(cycle_type: Partition, sign: SplitSign) -> Result<Self> {
        if !cycle_type.has_odd_distinct_parts() {
            return Err(Error::Domain(format!(
                "class {cycle_type:?} does not split in A_n (parts are not odd and distinct)"
            )));
        }
        Ok(ClassLabel {
            cycle_type,
            split: Some(sign),
        })
    }

    fn validate(&self, n: usize, algebra: Algebra) -> Result<()> {
        if self.cycle_type.n() != n {
            return Err(Error::SizeMismatch {
                left: self.cycle_type.n(),
                right: n,
            });
        }
        match (algebra, self.split) {
            (Algebra::Sn, Some(_)) => Err(Error::Domain("split labels only exist in A_n".into())),
            (Algebra::Sn, None) => Ok(()),
            (Algebra::An, _) if self.cycle_type.is_odd_class() => Err(Error::Domain(format!(
                "{:?} is an odd class, not in A_n",
                self.cycle_type
            ))),
            (Algebra::An, None) if self.cycle_type.has_odd_distinct_parts() && n > 1 => {
                Err(Error::Domain(format!(
                    "class {:?} splits in A_n; give a sign",
                    self.cycle_type
                )))
            }
            (Algebra::An, Some(_)) if !self.cycle_type.has_odd_distinct_parts() || n <= 1 => {
                Err(Error::Domain(format!(
                    "class {:?} does not split in A_n",
                    self.cycle_type
                )))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_type.short_label())?;
        if let Some(s) = self.split {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

/// The class-sum basis of `Z(QS_n)` or `Z(QA_n)`, in canonical order.
pub fn class_basis(n: usize, algebra: Algebra) -> Vec<ClassLabel> {
    let mut out = Vec::new();
    for t in enumerate_partitions(n) {
        match algebra {
            Algebra::Sn => out.push(ClassLabel::whole(t)),
            Algebra::An => {
                if t.is_odd_class() {
                    continue;
                }
                if n > 1 && t.has_odd_distinct_parts() {
                    out.push(ClassLabel {
                        cycle_type: t.clone(),
                        split: Some(SplitSign::Plus),
                    });
                    out.push(ClassLabel {
                        cycle_type: t,
                        split: Some(SplitSign::Minus),
                    });
                } else {
                    out.push(ClassLabel::whole(t));
                }
            }
        }
    }
    out
}

/// Number of elements in the class.
pub fn label_size(label: &ClassLabel) -> BigUint {
    let k = label.cycle_type.class_size();
    match label.split {
        None => k,
        Some(_) => {
            debug_assert!(k.is_even());
            k / 2u32
        }
    }
}

/// An element of `Z(QS_n)` or `Z(QA_n)` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralElement {
    n: usize,
    algebra: Algebra,
    coeffs: BTreeMap<ClassLabel, BigRational>,
}

impl CentralElement {
    pub fn zero(n: usize, algebra: Algebra) -> Self {
        CentralElement {
            n,
            algebra,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize, algebra: Algebra) -> Self {
        Self::from_label(n, algebra, ClassLabel::whole(Partition::column(n))).expect("identity is valid")
    }

    pub fn from_label(n: usize, algebra: Algebra, label: ClassLabel) -> Result<Self> {
        label.validate(n, algebra)?;
        let mut e = Self::zero(n, algebra);
        e.coeffs.insert(label, BigRational::one());
        Ok(e)
    }

    /// `s_mu` in `Z(QS_n)`.
    pub fn class_sum(cycle_type: &Partition) -> Self {
        let n = cycle_type.n();
        Self::from_label(n, Algebra::Sn, ClassLabel::whole(cycle_type.clone())).expect("any type is an S_n class")
    }

    /// The full `S_n`-class sum of an even cycle type, seen inside `Z(QA_n)`:
    /// `s^+ + s^-` when the class splits.
    pub fn whole_class_in_an(cycle_type: &Partition) -> Result<Self> {
        let n = cycle_type.n();
        if n > 1 && cycle_type.has_odd_distinct_parts() {
            let plus = Self::from_label(n, Algebra::An, ClassLabel::split(cycle_type.clone(), SplitSign::Plus)?)?;
            let minus = Self::from_label(n, Algebra::An, ClassLabel::split(cycle_type.clone(), SplitSign::Minus)?)?;
            Ok(&plus + &minus)
        } else {
            Self::from_label(n, Algebra::An, ClassLabel::whole(cycle_type.clone()))
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn coeff(&self, label: &ClassLabel) -> BigRational {
        self.coeffs.get(label).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of the whole class `s_mu` (only meaningful in `Z(QS_n)`).
    pub fn coeff_of_type(&self, cycle_type: &Partition) -> BigRational {
        self.coeff(&ClassLabel::whole(cycle_type.clone()))
    }

    /// Non-zero terms.
    pub fn terms(&self) -> impl Iterator<Item = (&ClassLabel, &BigRational)> {
        self.coeffs.iter()
    }

    /// Non-zero terms in canonical basis order (descending lexicographic, `+` before `-`).
    pub fn sorted_terms(&self) -> Vec<(&ClassLabel, &BigRational)> {
        let mut v: Vec<_> = self.coeffs.iter().collect();
        v.sort_by(|a, b| b.0.cycle_type.cmp(&a.0.cycle_type).then(a.0.split.cmp(&b.0.split)));
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.n, self.algebra);
        if c.is_zero() {
            return out;
        }
        for (l, v) in &self.coeffs {
            out.coeffs.insert(l.clone(), v * c);
        }
        out
    }

    /// `sum_rho c^rho |rho|`: the number of group elements counted with multiplicity.
    pub fn weighted_size(&self) -> BigRational {
        self.coeffs
            .iter()
            .map(|(l, c)| c * BigRational::from_integer(BigInt::from(label_size(l))))
            .sum()
    }

    fn add_term(&mut self, label: ClassLabel, c: BigRational) {
        let entry = self.coeffs.entry(label.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&label);
        }
    }
}

impl Add for &CentralElement {
    type Output = CentralElement;

    fn add(self, rhs: &CentralElement) -> CentralElement {
        assert_eq!((self.n, self.algebra), (rhs.n, rhs.algebra), "adding across algebras");
        let mut out = self.clone();
        for (l, c) in &rhs.coeffs {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

type SparseRow = Vec<(usize, BigInt)>;

/// Multiplication table of `Z(QS_n)` or `Z(QA_n)`, filled lazily.
///
/// Each basis product is computed at most once and may be requested from
/// several threads.
pub struct ClassAlgebra {
    n: usize,
    algebra: Algebra,
    basis: Vec<ClassLabel>,
    sizes: Vec<BigUint>,
    index: HashMap<ClassLabel, usize>,
    keyer: TypeKeyer,
    /// S_n cycle-type key -> basis index (the `+` index for split types).
    key_to_index: HashMap<u64, usize>,
    products: Vec<OnceLock<SparseRow>>,
}

impl ClassAlgebra {
    pub fn new(n: usize, algebra: Algebra) -> Result<Self> {
        let max = match algebra {
            Algebra::Sn => SN_MAX_N,
            Algebra::An => AN_MAX_N,
        };
        if n > max {
            return Err(Error::Budget(format!(
                "class algebra of {algebra} for n = {n} exceeds the enumeration budget n <= {max}"
            )));
        }
        let basis = class_basis(n, algebra);
        let sizes = basis.iter().map(label_size).collect();
        let index: HashMap<ClassLabel, usize> =
            basis.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        let keyer = TypeKeyer::new(n);
        let mut key_to_index = HashMap::new();
        for (i, l) in basis.iter().enumerate() {
            key_to_index.entry(keyer.key_of_type(&l.cycle_type)).or_insert(i);
        }
        let d = basis.len();
        Ok(ClassAlgebra {
            n,
            algebra,
            basis,
            sizes,
            index,
            keyer,
            key_to_index,
            products: (0..d * d).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn basis(&self) -> &[ClassLabel] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn size(&self, i: usize) -> &BigUint {
        &self.sizes[i]
    }

    pub fn index_of(&self, label: &ClassLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    fn representative(&self, label: &ClassLabel) -> Vec<usize> {
        let rep = canonical_rep(&label.cycle_type);
        match label.split {
            Some(SplitSign::Minus) => {
                let mut t: Vec<usize> = (0..self.n).collect();
                t.swap(0, 1);
                conjugate_by(&rep, &t)
            }
            _ => rep,
        }
    }

    fn classify(&self, perm: &[usize], seen: &mut [bool]) -> usize {
        let key = self.keyer.key_of_perm(perm, seen);
        let i = self.key_to_index[&key];
        match self.basis[i].split {
            Some(_) if !conjugator_is_even(perm, &self.basis[i].cycle_type) => i + 1,
            _ => i,
        }
    }

    /// Structure constants `c^rho` of `basis[a] * basis[b]` as sparse `(rho, c)` pairs.
    pub fn product_indices(&self, a: usize, b: usize) -> &[(usize, BigInt)] {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        self.products[a * self.dim() + b].get_or_init(|| self.compute_product(a, b))
    }

    fn compute_product(&self, a: usize, b: usize) -> SparseRow {
        let g = self.representative(&self.basis[a]);
        let target = &self.basis[b];
        let mut counts = vec![0u64; self.dim()];
        let mut gh = vec![0; self.n];
        let mut seen = vec![false; self.n];
        for_each_in_class(&target.cycle_type, |h| {
            if let Some(sign) = target.split {
                let plus = conjugator_is_even(h, &target.cycle_type);
                if plus != (sign == SplitSign::Plus) {
                    return;
                }
            }
            compose_into(&g, h, &mut gh);
            counts[self.classify(&gh, &mut seen)] += 1;
        });
        let size_a = BigInt::from(self.sizes[a].clone());
        counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(rho, &c)| {
                let num = &size_a * BigInt::from(c);
                let den = BigInt::from(self.sizes[rho].clone());
                let (q, r) = num.div_rem(&den);
                assert!(r.is_zero(), "structure constant {num}/{den} is not integral");
                (rho, q)
            })
            .collect()
    }

    pub fn basis_element(&self, i: usize) -> CentralElement {
        let mut e = CentralElement::zero(self.n, self.algebra);
        e.coeffs.insert(self.basis[i].clone(), BigRational::one());
        e
    }

    /// Product of two basis elements as a central element.
    pub fn product(&self, x: &ClassLabel, y: &ClassLabel) -> Result<CentralElement> {
        x.validate(self.n, self.algebra)?;
        y.validate(self.n, self.algebra)?;
        let a = self.index_of(x).expect("validated label is in the basis");
        let b = self.index_of(y).expect("validated label is in the basis");
        Ok(self.from_dense(&self.dense_product_of_basis(a, b)))
    }

    fn dense_product_of_basis(&self, a: usize, b: usize) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim()];
        for (rho, c) in self.product_indices(a, b) {
            out[*rho] = BigRational::from_integer(c.clone());
        }
        out
    }

    pub fn to_dense(&self, x: &CentralElement) -> Result<Vec<BigRational>> {
        if (x.n, x.algebra) != (self.n, self.algebra) {
            return Err(Error::Domain(format!(
                "element of {} (n = {}) used in {} (n = {})",
                x.algebra, x.n, self.algebra, self.n
            )));
        }
        let mut v = vec![BigRational::zero(); self.dim()];
        for (l, c) in &x.coeffs {
            let i = self
                .index_of(l)
                .ok_or_else(|| Error::Domain(format!("label {l} is not a basis element")))?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn from_dense(&self, v: &[BigRational]) -> CentralElement {
        let mut e = CentralElement::zero(self.n, self.algebra);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                e.coeffs.insert(self.basis[i].clone(), c.clone());
            }
        }
        e
    }

    /// Bilinear product of dense coefficient vectors.
    pub fn multiply_dense(&self, x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim()];
        for (a, xa) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let w = xa * yb;
                for (rho, c) in self.product_indices(a, b) {
                    out[*rho] += &w * BigRational::from_integer(c.clone());
                }
            }
        }
        out
    }

    pub fn multiply(&self, x: &CentralElement, y: &CentralElement) -> Result<CentralElement> {
        let xd = self.to_dense(x)?;
        let yd = self.to_dense(y)?;
        Ok(self.from_dense(&self.multiply_dense(&xd, &yd)))
    }

    /// Computes every basis product, in parallel.
    pub fn fill(&self) {
        use rayon::prelude::*;
        let d = self.dim();
        let pairs: Vec<(usize, usize)> = (0..d).flat_map(|a| (a..d).map(move |b| (a, b))).collect();
        pairs.par_iter().for_each(|&(a, b)| {
            self.product_indices(a, b);
        });
    }

    /// Structure constant as an `i64`, for display.
    pub fn constant(&self, a: usize, b: usize, rho: usize) -> BigInt {
        self.product_indices(a, b)
            .iter()
            .find(|(r, _)| *r == rho)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }
}

impl Mul for &CentralElement {
    type Output = Result<CentralElement>;

    /// Multiplies by enumeration; builds a throwaway [`ClassAlgebra`].
    fn mul(self, rhs: &CentralElement) -> Result<CentralElement> {
        let alg = ClassAlgebra::new(self.n, self.algebra)?;
        alg.multiply(self, rhs)
    }
}

/// `s_mu * s_nu` in `Z(QS_n)`.
pub fn product_sn(mu: &Partition, nu: &Partition, n: usize) -> Result<CentralElement> {
    let alg = ClassAlgebra::new(n, Algebra::Sn)?;
    alg.product(&ClassLabel::whole(mu.padded(n)), &ClassLabel::whole(nu.padded(n)))
}

/// Product of two class sums of `Z(QA_n)`.
pub fn product_an(x: &ClassLabel, y: &ClassLabel, n: usize) -> Result<CentralElement> {
    let alg = ClassAlgebra::new(n, Algebra::An)?;
    alg.product(x, y)
}

/// Integer coefficient, panicking on a non-integer (structure constants are integers).
pub fn as_integer(c: &BigRational) -> BigInt {
    assert!(c.is_integer(), "expected an integer, got {c}");
    c.to_integer()
}

/// Coefficient as `i64`, if it is an integer that fits.
pub fn as_i64(c: &BigRational) -> Option<i64> {
    if c.is_integer() {
        c.to_integer().to_i64()
    } else {
        None
    }
}

/// Whether every coefficient is non-negative.
pub fn is_nonnegative(x: &CentralElement) -> bool {
    x.terms().all(|(_, c)| !c.is_negative())
}
