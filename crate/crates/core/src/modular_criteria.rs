//! Irreducibility of Specht modules in odd characteristic, and when they
//! decompose on restriction to `A_n`.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, Integer, One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn check_odd_prime(p: u64) -> Result<()> {
    if p == 2 {
        return Err(Error::UnsupportedCharacteristic(2));
    }
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not a prime")));
    }
    Ok(())
}

/// A field of odd characteristic `p`: either `GF(p^k)` or algebraically closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FieldSpec {
    p: u64,
    /// `None` for an algebraically closed field.
    k: Option<u32>,
}

impl FieldSpec {
    pub fn finite(p: u64, k: u32) -> Result<Self> {
        check_odd_prime(p)?;
        if k < 1 {
            return Err(Error::Domain("extension degree must be at least 1".into()));
        }
        Ok(FieldSpec { p, k: Some(k) })
    }

    pub fn algebraically_closed(p: u64) -> Result<Self> {
        check_odd_prime(p)?;
        Ok(FieldSpec { p, k: None })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> Option<u32> {
        self.k
    }

    pub fn is_algebraically_closed(&self) -> bool {
        self.k.is_none()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            Some(1) => write!(f, "GF({})", self.p),
            Some(k) => write!(f, "GF({}^{})", self.p, k),
            None => write!(f, "closure of GF({})", self.p),
        }
    }
}

/// Largest power of `p` dividing `m`.
pub fn p_part(m: u64, p: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::Domain("p-part of 0 is undefined".into()));
    }
    if p < 2 {
        return Err(Error::Domain(format!("{p} is not a prime")));
    }
    let mut m = m;
    let mut out = 1;
    while m.is_multiple_of(p) {
        m /= p;
        out *= p;
    }
    Ok(out)
}

/// Whether `S^lambda` is reducible in characteristic `p`: some node `a` has
/// `p | h_a` and there are nodes `b` in its row and `c` in its column whose
/// hook lengths have `p`-parts different from that of `h_a`.
pub fn fayers_reducible(lambda: &Partition, p: u64) -> Result<bool> {
    check_odd_prime(p)?;
    let grid = lambda.hook_grid();
    let rows = grid.rows();
    let pp = |h: usize| p_part(h as u64, p).expect("hooks are positive");
    let conj = lambda.conjugate();
    for row in rows {
        for (j, &h) in row.iter().enumerate() {
            if !(h as u64).is_multiple_of(p) {
                continue;
            }
            let ha = pp(h);
            let in_row = row.iter().any(|&hb| pp(hb) != ha);
            let in_col = (0..conj.part(j)).any(|r| pp(rows[r][j]) != ha);
            if in_row && in_col {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// For self-conjugate `lambda`: whether `p` divides some diagonal hook length.
pub fn diagonal_hook_trigger(lambda: &Partition, p: u64) -> Result<bool> {
    if !lambda.is_self_conjugate() {
        return Err(Error::Domain(format!("{lambda:?} is not self-conjugate")));
    }
    Ok(lambda.diagonal_hooks().iter().any(|&q| (q as u64).is_multiple_of(p)))
}

/// Whether `a` has a square root in `field`.
pub fn is_square_in_field(a: &BigInt, field: &FieldSpec) -> bool {
    let Some(k) = field.k else {
        return true;
    };
    let p = BigInt::from(field.p);
    let r = a.mod_floor(&p);
    if r.is_zero() || k % 2 == 0 {
        return true;
    }
    r.modpow(&((&p - 1) / 2), &p).is_one()
}

/// `(-1)^((n - r)/2) q_1 ... q_r` for self-conjugate `lambda` with diagonal hooks `q`.
pub fn diagonal_discriminant(lambda: &Partition) -> Result<BigInt> {
    if !lambda.is_self_conjugate() {
        return Err(Error::Domain(format!("{lambda:?} is not self-conjugate")));
    }
    let q = lambda.diagonal_hooks();
    let prod: BigInt = q.iter().map(|&x| BigInt::from(x)).product();
    let half = (lambda.n() - q.len()) / 2;
    Ok(if half.is_multiple_of(2) { prod } else { -prod })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    /// `lambda` is self-conjugate.
    SelfConjugate,
    /// `S^lambda` is simple.
    Simple,
    /// The diagonal discriminant is a square in the field.
    SquareRoot,
}

impl Condition {
    pub fn code(self) -> &'static str {
        match self {
            Condition::SelfConjugate => "i",
            Condition::SquareRoot => "ii",
            Condition::Simple => "iii",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub condition: Condition,
    pub code: &'static str,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictionVerdict {
    pub decomposable: bool,
    /// Conditions in evaluation order, stopping at the first that fails.
    pub reasons: Vec<ConditionResult>,
}

/// Whether `S^lambda` over `field` decomposes on restriction to `A_n`.
///
/// Conditions are evaluated as self-conjugacy, then simplicity, then (for
/// finite fields) the square root condition. A diagonal hook divisible by `p`
/// already makes `S^lambda` reducible, so the square root test never sees a
/// discriminant divisible by `p`.
pub fn restriction_decomposable(lambda: &Partition, field: &FieldSpec) -> Result<RestrictionVerdict> {
    if lambda.n() < 2 {
        return Err(Error::Domain("restriction to A_n needs n >= 2".into()));
    }
    let p = field.p;
    let mut reasons = Vec::new();
    let mut push = |condition: Condition, holds: bool, detail: String| {
        reasons.push(ConditionResult {
            condition,
            code: condition.code(),
            holds,
            detail,
        });
        holds
    };
    let sc = lambda.is_self_conjugate();
    let detail = if sc {
        format!("({lambda}) is self-conjugate")
    } else {
        format!("({lambda}) has conjugate ({})", lambda.conjugate())
    };
    if !push(Condition::SelfConjugate, sc, detail) {
        return Ok(RestrictionVerdict {
            decomposable: false,
            reasons,
        });
    }
    let simple = !fayers_reducible(lambda, p)?;
    let detail = if simple {
        format!("S^({lambda}) is simple in characteristic {p}")
    } else {
        format!("S^({lambda}) is reducible in characteristic {p}")
    };
    if !push(Condition::Simple, simple, detail) {
        return Ok(RestrictionVerdict {
            decomposable: false,
            reasons,
        });
    }
    let disc = diagonal_discriminant(lambda)?;
    let square = is_square_in_field(&disc, field);
    let detail = format!(
        "{disc} {} a square in {field}",
        if square { "is" } else { "is not" }
    );
    let decomposable = push(Condition::SquareRoot, square, detail);
    Ok(RestrictionVerdict { decomposable, reasons })
}

/// Closed form of [`restriction_decomposable`] for the hook `(n - r, 1^r)`:
/// true iff `n = 2r + 1`, `p` does not divide `n`, and
/// `(-1)^((n-1)/2) n` is a square in `field`.
pub fn hook_case(n: usize, r: usize, field: &FieldSpec) -> Result<bool> {
    if !(1 < r && r + 1 < n) {
        return Err(Error::Domain(format!("need 1 < r < n - 1, got n = {n}, r = {r}")));
    }
    if n != 2 * r + 1 || (n as u64).is_multiple_of(field.p) {
        return Ok(false);
    }
    let mut a = BigInt::from(n);
    if ((n - 1) / 2) % 2 == 1 {
        a = -a;
    }
    Ok(is_square_in_field(&a, field))
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// `"p"`, `"p^k"`, or `"closed:p"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("cannot parse field {s:?}"));
        if let Some(p) = s.strip_prefix("closed:") {
            return FieldSpec::algebraically_closed(p.trim().parse().map_err(|_| bad())?);
        }
        let (p, k) = match s.split_once('^') {
            Some((p, k)) => (p, k),
            None => (s, "1"),
        };
        FieldSpec::finite(p.trim().parse().map_err(|_| bad())?, k.trim().parse().map_err(|_| bad())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn p_parts() {
        assert_eq!(p_part(12, 3).unwrap(), 3);
        assert_eq!(p_part(5, 3).unwrap(), 1);
        assert_eq!(p_part(18, 3).unwrap(), 9);
        assert!(p_part(0, 3).is_err());
    }

    #[test]
    fn fayers_examples() {
        assert!(fayers_reducible(&p("3,2"), 3).unwrap());
        for q in [3, 5, 7] {
            assert!(!fayers_reducible(&p("5"), q).unwrap());
        }
        assert!(fayers_reducible(&p("2,1"), 3).unwrap());
        assert_eq!(fayers_reducible(&p("2,1"), 2), Err(Error::UnsupportedCharacteristic(2)));
        assert!(fayers_reducible(&p("2,1"), 9).is_err());
    }

    #[test]
    fn diagonal_trigger_examples() {
        assert!(diagonal_hook_trigger(&p("2,1"), 3).unwrap());
        assert!(!diagonal_hook_trigger(&p("2,1"), 5).unwrap());
        assert!(diagonal_hook_trigger(&p("3,2,1"), 5).unwrap());
        assert!(diagonal_hook_trigger(&p("3,2"), 5).is_err());
    }

    #[test]
    fn squares() {
        let f = |p, k| FieldSpec::finite(p, k).unwrap();
        assert!(!is_square_in_field(&BigInt::from(2), &f(5, 1)));
        assert!(is_square_in_field(&BigInt::from(2), &f(5, 2)));
        assert!(is_square_in_field(&BigInt::from(4), &f(7, 1)));
        assert!(is_square_in_field(&BigInt::from(-3), &f(7, 1)));
        assert!(is_square_in_field(&BigInt::from(0), &f(7, 1)));
        assert!(is_square_in_field(&BigInt::from(3), &FieldSpec::algebraically_closed(7).unwrap()));
    }

    #[test]
    fn restriction_examples() {
        let closed = FieldSpec::algebraically_closed(5).unwrap();
        assert!(restriction_decomposable(&p("2,1"), &closed).unwrap().decomposable);
        let v = restriction_decomposable(&p("2,1"), &FieldSpec::finite(5, 1).unwrap()).unwrap();
        assert!(!v.decomposable);
        assert_eq!(v.reasons.last().unwrap().code, "ii");
        assert!(restriction_decomposable(&p("2,1"), &FieldSpec::finite(5, 2).unwrap()).unwrap().decomposable);
        let v = restriction_decomposable(&p("3,2"), &closed).unwrap();
        assert!(!v.decomposable);
        assert_eq!(v.reasons.len(), 1);
        assert_eq!(v.reasons[0].code, "i");
        let v = restriction_decomposable(&p("2,1"), &FieldSpec::algebraically_closed(3).unwrap()).unwrap();
        assert_eq!(v.reasons.last().unwrap().code, "iii");
        assert!(FieldSpec::finite(2, 1).is_err());
    }

    #[test]
    fn hook_case_examples() {
        assert!(!hook_case(5, 2, &FieldSpec::finite(3, 1).unwrap()).unwrap());
        assert!(hook_case(5, 2, &FieldSpec::finite(3, 2).unwrap()).unwrap());
        assert!(!hook_case(6, 2, &FieldSpec::finite(3, 1).unwrap()).unwrap());
        assert!(hook_case(5, 1, &FieldSpec::finite(3, 1).unwrap()).is_err());
        assert!(hook_case(5, 4, &FieldSpec::finite(3, 1).unwrap()).is_err());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("5^2".parse::<FieldSpec>().unwrap(), FieldSpec::finite(5, 2).unwrap());
        assert_eq!("7".parse::<FieldSpec>().unwrap(), FieldSpec::finite(7, 1).unwrap());
        assert!("closed:3".parse::<FieldSpec>().unwrap().is_algebraically_closed());
        assert!("2".parse::<FieldSpec>().is_err());
    }
}
