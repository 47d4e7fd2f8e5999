//! Exact counts of partitions and of `ell`-regular partitions, and the
//! asymptotic rate at which the regular ones thin out.

use num::{BigInt, One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Generalised pentagonal numbers `k(3k - 1)/2` for `k = 1, -1, 2, -2, ...`
/// up to `max`, with the sign `(-1)^k`.
fn pentagonal_terms(max: usize) -> Vec<(usize, bool)> {
    let mut out = Vec::new();
    for k in 1i64.. {
        let a = (k * (3 * k - 1) / 2) as usize;
        if a > max {
            break;
        }
        let positive = k % 2 == 0;
        out.push((a, positive));
        let b = (k * (3 * k + 1) / 2) as usize;
        if b <= max {
            out.push((b, positive));
        }
    }
    out
}

/// `p(0), ..., p(max_n)` by Euler's pentagonal recurrence.
pub fn partition_counts(max_n: usize) -> Vec<BigInt> {
    let terms = pentagonal_terms(max_n);
    let mut p = vec![BigInt::one()];
    for n in 1..=max_n {
        let mut acc = BigInt::zero();
        for &(g, positive) in terms.iter().take_while(|(g, _)| *g <= n) {
            // p(n) = sum_k (-1)^(k+1) p(n - g_k)
            if positive {
                acc -= &p[n - g];
            } else {
                acc += &p[n - g];
            }
        }
        p.push(acc);
    }
    p
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSeries {
    pub ell: usize,
    /// `r_ell(0..=max_n)`.
    pub values: Vec<BigInt>,
    /// `p(0..=max_n)`.
    pub p_values: Vec<BigInt>,
}

impl CountSeries {
    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    /// `log g_ell(n)` where `g_ell(n) = r_ell(n) / p(n)`.
    pub fn log_proportion(&self, n: usize) -> f64 {
        ln_big(&self.values[n]) - ln_big(&self.p_values[n])
    }
}

/// `r_ell(0..=max_n)`: the generating function is `prod (1 - x^(ell k)) / (1 - x^k)`,
/// so `r_ell(n) = sum_j (-1)^j p(n - ell g_j)` over generalised pentagonal `g_j`.
pub fn regular_counts(ell: usize, max_n: usize) -> Result<CountSeries> {
    if ell < 2 {
        return Err(Error::Domain(format!("ell must be at least 2, got {ell}")));
    }
    let p = partition_counts(max_n);
    let mut terms = vec![(0usize, true)];
    terms.extend(pentagonal_terms(max_n / ell));
    let values = (0..=max_n)
        .map(|n| {
            let mut acc = BigInt::zero();
            for &(g, positive) in &terms {
                let shift = ell * g;
                if shift > n {
                    break;
                }
                if positive {
                    acc += &p[n - shift];
                } else {
                    acc -= &p[n - shift];
                }
            }
            acc
        })
        .collect();
    Ok(CountSeries {
        ell,
        values,
        p_values: p,
    })
}

/// Natural logarithm of a positive integer of any size.
pub fn ln_big(x: &BigInt) -> f64 {
    assert!(x.is_positive(), "logarithm of a non-positive integer");
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let top: BigInt = x >> shift;
    top.to_f64().expect("64 bits").ln() + shift as f64 * std::f64::consts::LN_2
}

/// `-c (1 - sqrt((ell - 1)/ell))` with `c = 2 sqrt(pi^2 / 6)`: the limit of
/// `log g_ell(n) / sqrt(n)`.
pub fn hagis_limit(ell: usize) -> Result<f64> {
    if ell < 2 {
        return Err(Error::Domain(format!("ell must be at least 2, got {ell}")));
    }
    let c = 2.0 * (std::f64::consts::PI.powi(2) / 6.0).sqrt();
    let l = ell as f64;
    Ok(-c * (1.0 - ((l - 1.0) / l).sqrt()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub n: usize,
    pub log_g: f64,
    /// `log g_ell(n) / sqrt(n)`.
    pub normalized: f64,
    /// `normalized - hagis_limit(ell)`.
    pub gap: f64,
}

pub fn convergence_report(ell: usize, checkpoints: &[usize]) -> Result<Vec<ConvergenceRow>> {
    if checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("checkpoints must be strictly increasing".into()));
    }
    let limit = hagis_limit(ell)?;
    let max_n = checkpoints.last().copied().unwrap_or(0);
    let series = regular_counts(ell, max_n)?;
    Ok(checkpoints
        .iter()
        .map(|&n| {
            let log_g = series.log_proportion(n);
            let normalized = if n == 0 { 0.0 } else { log_g / (n as f64).sqrt() };
            ConvergenceRow {
                n,
                log_g,
                normalized,
                gap: normalized - limit,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn partition_count_values() {
        assert_eq!(partition_counts(5), ints(&[1, 1, 2, 3, 5, 7]));
        assert_eq!(partition_counts(0), ints(&[1]));
        let p = partition_counts(20);
        for n in 0..=20 {
            assert_eq!(p[n], BigInt::from(enumerate_partitions(n).len()));
        }
    }

    #[test]
    fn regular_count_values() {
        assert_eq!(regular_counts(2, 5).unwrap().values[5], BigInt::from(3));
        assert_eq!(regular_counts(3, 3).unwrap().values[3], BigInt::from(2));
        for ell in 2..6 {
            assert_eq!(regular_counts(ell, 1).unwrap().values[1], BigInt::one());
        }
        assert!(regular_counts(1, 5).is_err());
    }

    #[test]
    fn limits() {
        assert!((hagis_limit(2).unwrap() + 0.75130).abs() < 1e-4);
        // c = 2 sqrt(pi^2/6) = pi sqrt(2/3), and sqrt(2/3) is also the root term at ell = 3
        let r = (2.0f64 / 3.0).sqrt();
        assert!((hagis_limit(3).unwrap() + std::f64::consts::PI * r * (1.0 - r)).abs() < 1e-12);
        let far = hagis_limit(1_000_000).unwrap();
        assert!(far < 0.0 && far > -1e-5);
    }

    #[test]
    fn big_logarithm() {
        let x = BigInt::from(10).pow(400);
        assert!((ln_big(&x) - 400.0 * 10f64.ln()).abs() < 1e-9);
        assert_eq!(ln_big(&BigInt::one()), 0.0);
    }

    #[test]
    fn small_n_report() {
        let rows = convergence_report(5, &[1, 2, 4]).unwrap();
        assert!(rows.iter().all(|r| r.log_g == 0.0));
        assert!(convergence_report(2, &[10, 5]).is_err());
    }
}
