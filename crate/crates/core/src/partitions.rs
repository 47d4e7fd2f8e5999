//! Integer partitions and the combinatorics attached to their Young diagrams.
//!
//! A [`Partition`] plays two roles: it labels an irreducible character of
//! `S_n`, and (read as a cycle type) a conjugacy class. Class labels are always
//! stored padded with 1-parts so that they sum to `n`; [`Partition::short_label`]
//! renders the usual notation with fixed points suppressed.

use std::fmt;
use std::str::FromStr;

use num::{BigUint, Integer, One};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The derived ordering is lexicographic on the parts, so "descending
/// lexicographic order" (the canonical order for tables) is the reverse of
/// `Ord`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`, also the identity class label.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The hook `(n - r, 1^r)`.
    pub fn hook(n: usize, r: usize) -> Result<Self> {
        if r >= n {
            return Err(Error::Domain(format!("hook leg {r} must be smaller than {n}")));
        }
        let mut parts = vec![n - r];
        parts.extend(std::iter::repeat_n(1, r));
        Ok(Partition { parts })
    }

    /// A class label given by its non-trivial cycle lengths, padded to `n`.
    pub fn cycle_type(cycles: &[usize], n: usize) -> Result<Self> {
        let moved: usize = cycles.iter().sum();
        if moved > n {
            return Err(Error::InvalidPartition(format!(
                "cycles {cycles:?} do not fit in S_{n}"
            )));
        }
        let p = Partition::from_multiset(cycles.to_vec());
        Ok(p.padded(n))
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The number being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Appends 1-parts until the partition sums to `n`.
    pub fn padded(&self, n: usize) -> Self {
        let mut parts = self.parts.clone();
        let size = self.n();
        if size < n {
            parts.extend(std::iter::repeat_n(1, n - size));
        }
        Partition { parts }
    }

    /// Parts larger than 1, i.e. the class label with fixed points suppressed.
    pub fn non_trivial_parts(&self) -> &[usize] {
        let k = self.parts.iter().take_while(|&&p| p > 1).count();
        &self.parts[..k]
    }

    /// Label in the suppressed-1 convention: `(3,2)` for `(3,2,1^4)`, `1` for the identity.
    pub fn short_label(&self) -> String {
        let nt = self.non_trivial_parts();
        if nt.is_empty() {
            return "1".to_string();
        }
        let inner: Vec<String> = nt.iter().map(|p| p.to_string()).collect();
        format!("({})", inner.join(","))
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// No part value occurs `ell` or more times.
    pub fn is_regular(&self, ell: usize) -> bool {
        assert!(ell >= 2, "regularity needs ell >= 2");
        self.multiplicities().iter().all(|&(_, m)| m < ell)
    }

    pub fn hook_grid(&self) -> HookGrid {
        let conj = self.conjugate();
        let rows = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &row_len)| {
                (0..row_len)
                    .map(|j| (row_len - j - 1) + (conj.parts[j] - i - 1) + 1)
                    .collect()
            })
            .collect();
        HookGrid { rows }
    }

    /// Hook lengths `q_1 > q_2 > ... > q_r` of the main diagonal nodes.
    pub fn diagonal_hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        (0..self.durfee_size())
            .map(|i| (self.parts[i] - i - 1) + (conj.parts[i] - i - 1) + 1)
            .collect()
    }

    /// Number of nodes on the main diagonal.
    pub fn durfee_size(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// Sum of the contents `j - i` over all nodes.
    pub fn content_sum(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let p = p as i64;
                let i = i as i64;
                p * (p - 1) / 2 - i * p
            })
            .sum()
    }

    /// `n! / prod(hooks)`, the degree of the irreducible character.
    pub fn dimension(&self) -> BigUint {
        let grid = self.hook_grid();
        let mut denom = BigUint::one();
        for h in grid.iter().map(|(_, h)| h) {
            denom *= h;
        }
        factorial(self.n()) / denom
    }

    /// Number of permutations with this cycle type.
    pub fn class_size(&self) -> BigUint {
        factorial(self.n()) / self.centralizer_order()
    }

    /// `prod_i i^{a_i} a_i!`, the order of the centraliser of an element of this type.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        for (part, mult) in self.multiplicities() {
            z *= num::pow(BigUint::from(part), mult);
            z *= factorial(mult);
        }
        z
    }

    /// Number of points moved by an element of this cycle type.
    pub fn support(&self) -> usize {
        self.non_trivial_parts().iter().sum()
    }

    pub fn is_odd_class(&self) -> bool {
        self.parts.iter().map(|&p| p - 1).sum::<usize>() % 2 == 1
    }

    /// Sign of any permutation of this cycle type.
    pub fn sign(&self) -> i32 {
        if self.is_odd_class() {
            -1
        } else {
            1
        }
    }

    /// Order of an element of this cycle type (lcm of the parts).
    pub fn element_order(&self) -> u64 {
        self.parts.iter().fold(1u64, |acc, &p| acc.lcm(&(p as u64)))
    }

    pub fn class_is_ell_prime(&self, ell: usize, convention: EllPrimeConvention) -> bool {
        assert!(ell >= 2, "ell' classes need ell >= 2");
        match convention {
            EllPrimeConvention::OrderNotDivisible => !self.element_order().is_multiple_of(ell as u64),
            EllPrimeConvention::NoPartDivisible => self.parts.iter().all(|&p| p % ell != 0),
        }
    }

    /// All parts odd and pairwise distinct: the `S_n`-classes that split in `A_n`.
    pub fn has_odd_distinct_parts(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 1) && self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn all_parts_odd(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 1)
    }

    /// Dominance order: every partial sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// First-column hook lengths, as a strictly decreasing bead set of length `len()`.
    pub fn beta_numbers(&self) -> Vec<usize> {
        let k = self.len();
        self.parts.iter().enumerate().map(|(i, &p)| p + k - 1 - i).collect()
    }

    /// Inverse of [`Partition::beta_numbers`]; `beads` must be distinct, in any order.
    pub fn from_beta_numbers(beads: &[usize]) -> Self {
        let mut b = beads.to_vec();
        b.sort_unstable_by(|x, y| y.cmp(x));
        let k = b.len();
        let parts = b
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (k - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        Partition { parts }
    }

    /// The `p`-core: what remains after stripping rim `p`-hooks until none is left.
    pub fn core(&self, p: usize) -> Partition {
        assert!(p >= 1);
        let mut beads = self.beta_numbers();
        loop {
            let occupied: std::collections::HashSet<usize> = beads.iter().copied().collect();
            let movable = beads
                .iter()
                .position(|&b| b >= p && !occupied.contains(&(b - p)));
            match movable {
                Some(i) => beads[i] -= p,
                None => break,
            }
        }
        Partition::from_beta_numbers(&beads)
    }
}

/// Which classes count as `ell'`-classes when `ell` is not prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum EllPrimeConvention {
    /// Element order not divisible by `ell`.
    #[default]
    OrderNotDivisible,
    /// No cycle length divisible by `ell`.
    NoPartDivisible,
}

impl FromStr for EllPrimeConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "order-coprime" | "order" => Ok(EllPrimeConvention::OrderNotDivisible),
            "no-part-divisible" | "parts" => Ok(EllPrimeConvention::NoPartDivisible),
            other => Err(Error::Domain(format!("unknown ell' convention {other:?}"))),
        }
    }
}

/// Hook lengths of every node of a Young diagram, indexed `(row, column)` from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookGrid {
    rows: Vec<Vec<usize>>,
}

impl HookGrid {
    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &h)| ((i, j), h)))
    }

    /// All hook lengths, sorted ascending.
    pub fn sorted_hooks(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.iter().map(|(_, h)| h).collect();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for Partition {
    /// Canonical text form: `3,2,1^4`. Runs of three or more use caret shorthand.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (part, mult) in self.multiplicities() {
            let chunk = if mult >= 3 {
                vec![format!("{part}^{mult}")]
            } else {
                vec![part.to_string(); mult]
            };
            for c in chunk {
                if !first {
                    f.write_str(",")?;
                }
                f.write_str(&c)?;
                first = false;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (base, reps) = match token.split_once('^') {
                Some((b, r)) => (b.trim(), r.trim()),
                None => (token, "1"),
            };
            let base: usize = base
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("bad part {token:?} in {s:?}")))?;
            let reps: usize = reps
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("bad repeat {token:?} in {s:?}")))?;
            parts.extend(std::iter::repeat_n(base, reps));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in descending lexicographic order, from `(n)` to `(1^n)`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(n, |p| out.push(Partition { parts: p.to_vec() }));
    out
}

/// Visits the parts of every partition of `n`, in the order of [`enumerate_partitions`],
/// without allocating a `Partition` per visit.
pub fn for_each_partition<F: FnMut(&[usize])>(n: usize, mut f: F) {
    fn go<F: FnMut(&[usize])>(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, f: &mut F) {
        if remaining == 0 {
            f(prefix);
            return;
        }
        for first in (1..=remaining.min(max_part)).rev() {
            prefix.push(first);
            go(remaining - first, first, prefix, f);
            prefix.pop();
        }
    }
    go(n, n, &mut Vec::new(), &mut f);
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn enumerates_in_descending_lex_order() {
        let got: Vec<String> = enumerate_partitions(4).iter().map(|q| q.to_string()).collect();
        assert_eq!(got, ["4", "3,1", "2,2", "2,1,1", "1^4"]);
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(1), vec![p("1")]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("3,2").conjugate(), p("2,2,1"));
        assert_eq!(p("5").conjugate(), p("1^5"));
        assert_eq!(p("2,1").conjugate(), p("2,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn regularity() {
        assert!(p("2,2,1").is_regular(3));
        assert!(!p("1,1,1").is_regular(3));
        assert!(!p("2,2").is_regular(2));
    }

    #[test]
    fn hook_grids() {
        let g = p("3,2").hook_grid();
        assert_eq!(g.rows(), &[vec![4, 3, 1], vec![2, 1]]);
        assert_eq!(p("1").hook_grid().rows(), &[vec![1]]);
        assert_eq!(p("2,2").hook_grid().rows(), &[vec![3, 2], vec![2, 1]]);
        assert_eq!(g.get(2, 0), None);
    }

    #[test]
    fn diagonal_hooks() {
        assert_eq!(p("2,1").diagonal_hooks(), vec![3]);
        assert_eq!(p("3,2").diagonal_hooks(), vec![4, 1]);
        assert_eq!(p("1").diagonal_hooks(), vec![1]);
        assert!(Partition::empty().diagonal_hooks().is_empty());
    }

    #[test]
    fn class_sizes() {
        assert_eq!(p("2,1,1,1").class_size(), BigUint::from(10u32));
        assert_eq!(p("2,2,1").class_size(), BigUint::from(15u32));
        assert_eq!(p("1^7").class_size(), BigUint::one());
    }

    #[test]
    fn support_and_parity() {
        assert_eq!(p("2,2,1^5").support(), 4);
        assert!(p("2,1,1,1").is_odd_class());
        assert!(!p("3,1,1").is_odd_class());
        assert_eq!(p("3,1,1").short_label(), "(3)");
        assert_eq!(p("1^4").short_label(), "1");
    }

    #[test]
    fn dimensions() {
        assert_eq!(p("3,2").dimension(), BigUint::from(5u32));
        assert_eq!(p("6").dimension(), BigUint::one());
        assert_eq!(p("1^5").dimension(), BigUint::one());
    }

    #[test]
    fn orders_and_ell_prime() {
        use EllPrimeConvention::*;
        assert_eq!(p("6,2,1").element_order(), 6);
        assert!(!p("3,2").class_is_ell_prime(3, OrderNotDivisible));
        assert!(p("2,2,1").class_is_ell_prime(3, OrderNotDivisible));
        assert!(p("2,2,1").class_is_ell_prime(3, NoPartDivisible));
        // the two conventions part ways for composite ell
        assert!(!p("3,2").class_is_ell_prime(6, OrderNotDivisible));
        assert!(p("3,2").class_is_ell_prime(6, NoPartDivisible));
    }

    #[test]
    fn text_form() {
        assert_eq!(p("3,2,1^4").parts(), &[3, 2, 1, 1, 1, 1]);
        assert_eq!(p("3,2,1,1,1,1").to_string(), "3,2,1^4");
        assert_eq!(p("2,2,1").to_string(), "2,2,1");
        assert_eq!(p("(2,1^3)"), p("2,1,1,1"));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn cores_and_beta_numbers() {
        assert_eq!(p("3,2").beta_numbers(), vec![4, 2]);
        assert_eq!(Partition::from_beta_numbers(&[2, 4]), p("3,2"));
        assert_eq!(p("5").core(3), p("2"));
        assert_eq!(p("3,2").core(3), p("1,1"));
        assert_eq!(p("3,1,1").core(3), p("3,1,1"));
        assert_eq!(p("2,2,1").core(3), p("2"));
    }

    #[test]
    fn content_sums() {
        // contents of (3,2): 0,1,2,-1,0
        assert_eq!(p("3,2").content_sum(), 2);
        assert_eq!(p("2,1").content_sum(), 0);
    }

    #[test]
    fn dominance() {
        assert!(p("4,1").dominates(&p("3,2")));
        assert!(p("3,2").dominates(&p("3,1,1")));
        // incomparable pair
        assert!(!p("3,3").dominates(&p("4,1,1")));
        assert!(!p("4,1,1").dominates(&p("3,3")));
    }
}
