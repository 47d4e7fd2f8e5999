//! Numbers `u + v sqrt(d)` with rational `u`, `v` and squarefree integer `d`.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticValue {
    u: BigRational,
    v: BigRational,
    d: i64,
}

/// Splits `m` as `s^2 * d` with `d` squarefree (sign kept on `d`).
pub fn squarefree_decomposition(m: i64) -> (i64, i64) {
    if m == 0 {
        return (0, 0);
    }
    let sign = m.signum();
    let mut rest = m.abs();
    let mut s = 1;
    let mut f = 2;
    while f * f <= rest {
        while rest % (f * f) == 0 {
            rest /= f * f;
            s *= f;
        }
        f += 1;
    }
    (s, sign * rest)
}

impl QuadraticValue {
    /// `u + v sqrt(radicand)`, normalised so that `d` is squarefree and
    /// rational values carry `d = 0`.
    pub fn new(u: BigRational, v: BigRational, radicand: i64) -> Self {
        let (s, d) = squarefree_decomposition(radicand);
        let v = v * BigRational::from_integer(BigInt::from(s));
        if v.is_zero() || d == 0 {
            return Self::rational(u);
        }
        if d == 1 {
            return Self::rational(u + v);
        }
        QuadraticValue { u, v, d }
    }

    pub fn rational(u: BigRational) -> Self {
        QuadraticValue {
            u,
            v: BigRational::zero(),
            d: 0,
        }
    }

    pub fn from_int(x: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(x)))
    }

    pub fn u(&self) -> &BigRational {
        &self.u
    }

    pub fn v(&self) -> &BigRational {
        &self.v
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    /// Galois conjugate `u - v sqrt(d)`.
    pub fn conj(&self) -> Self {
        QuadraticValue {
            u: self.u.clone(),
            v: -self.v.clone(),
            d: self.d,
        }
    }

    /// Complex conjugate: the Galois conjugate when `d < 0`, the value itself otherwise.
    pub fn complex_conj(&self) -> Self {
        if self.d < 0 {
            self.conj()
        } else {
            self.clone()
        }
    }

    /// Sum, when both values live in the same quadratic field.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let d = self.common_field(other)?;
        Some(Self::new(&self.u + &other.u, &self.v + &other.v, d))
    }

    /// Product, when both values live in the same quadratic field.
    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        let d = self.common_field(other)?;
        let dd = BigRational::from_integer(BigInt::from(d));
        let u = &self.u * &other.u + &self.v * &other.v * dd;
        let v = &self.u * &other.v + &self.v * &other.u;
        Some(Self::new(u, v, d))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(&self.u * c, &self.v * c, self.d)
    }

    fn common_field(&self, other: &Self) -> Option<i64> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Some(d),
            (a, b) if a == b => Some(a),
            _ => None,
        }
    }
}

impl fmt::Display for QuadraticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.u);
        }
        let sign = if self.v.is_negative() { '-' } else { '+' };
        let mag = self.v.abs();
        if mag.is_one() {
            write!(f, "{} {} sqrt({})", self.u, sign, self.d)
        } else {
            write!(f, "{} {} {}*sqrt({})", self.u, sign, mag, self.d)
        }
    }
}

/// A sum of quadratic values from possibly different fields, kept as
/// coefficients of `sqrt(d)` per squarefree `d` (`d = 0` is the rational part).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QuadraticSum {
    parts: BTreeMap<i64, BigRational>,
}

impl QuadraticSum {
    pub fn add(&mut self, x: &QuadraticValue) {
        *self.parts.entry(0).or_insert_with(BigRational::zero) += &x.u;
        if !x.is_rational() {
            *self.parts.entry(x.d).or_insert_with(BigRational::zero) += &x.v;
        }
    }

    /// The value, if the irrational parts all cancel.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.parts.iter().any(|(&d, c)| d != 0 && !c.is_zero()) {
            return None;
        }
        Some(self.parts.get(&0).cloned().unwrap_or_else(BigRational::zero))
    }
}
