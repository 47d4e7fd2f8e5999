use num::{BigInt, ToPrimitive};
use proptest::prelude::*;
use symchar::character_oracles::{
    min_distinguishing_set, min_vanishing_set, restriction_agreement, split_values, AnCharacterTable,
};
use symchar::chartable::{central_character, character_table, mn_value, transposition_value};
use symchar::partitions::enumerate_partitions;
use symchar::Partition;

fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
        if prefix.len() == used.len() {
            let mut inv = 0;
            for i in 0..prefix.len() {
                for j in i + 1..prefix.len() {
                    if prefix[i] > prefix[j] {
                        inv += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Coefficient of x^alpha in the power-sum product p_mu.
fn power_sum_coefficient(parts: &[usize], alpha: &mut [i64]) -> i64 {
    let Some((&first, rest)) = parts.split_first() else {
        return alpha.iter().all(|&a| a == 0) as i64;
    };
    let mut total = 0;
    for i in 0..alpha.len() {
        if alpha[i] >= first as i64 {
            alpha[i] -= first as i64;
            total += power_sum_coefficient(rest, alpha);
            alpha[i] += first as i64;
        }
    }
    total
}

/// Frobenius formula: chi^lambda(mu) is the coefficient of x^(lambda + delta) in a_delta * p_mu.
fn frobenius(lambda: &Partition, mu: &Partition) -> i64 {
    let k = lambda.len();
    let target: Vec<i64> = (0..k).map(|i| (lambda.part(i) + k - 1 - i) as i64).collect();
    let mut total = 0;
    for (sigma, sign) in permutations(k) {
        let mut alpha: Vec<i64> = (0..k).map(|i| target[i] - (k - 1 - sigma[i]) as i64).collect();
        if alpha.iter().all(|&a| a >= 0) {
            total += sign * power_sum_coefficient(mu.parts(), &mut alpha);
        }
    }
    total
}

#[test]
fn tables_match_frobenius_formula() {
    for n in 1..=8 {
        let t = character_table(n);
        for (i, lambda) in t.labels().iter().enumerate() {
            for (j, mu) in t.labels().iter().enumerate() {
                assert_eq!(t.at(i, j).to_i64().unwrap(), frobenius(lambda, mu), "{lambda} at {mu}");
            }
        }
    }
}

#[test]
fn known_values() {
    let v = |l: &str, m: &str| mn_value(&l.parse().unwrap(), &m.parse().unwrap()).unwrap();
    assert_eq!(v("3,2", "2,1^3"), 1.into());
    assert_eq!(v("2,2", "2,2"), 2.into());
    assert_eq!(v("3,1,1", "5"), 1.into());
    assert_eq!(v("3,1,1", "2,2,1"), (-2).into());
    assert_eq!(v("4,4", "8"), 0.into());
}

fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
    let all = enumerate_partitions(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn sized_pair() -> impl Strategy<Value = (Partition, Partition)> {
    (2usize..=13).prop_flat_map(|n| (partition_of(n), partition_of(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn sign_twist((lambda, mu) in sized_pair()) {
        let a = mn_value(&lambda, &mu).unwrap();
        let b = mn_value(&lambda.conjugate(), &mu).unwrap();
        prop_assert_eq!(b, a * BigInt::from(mu.sign()));
    }

    #[test]
    fn values_at_identity_and_transposition((lambda, _mu) in sized_pair()) {
        let n = lambda.n();
        let id = Partition::column(n);
        prop_assert_eq!(mn_value(&lambda, &id).unwrap(), BigInt::from(lambda.dimension()));
        let tr = Partition::cycle_type(&[2], n).unwrap();
        prop_assert_eq!(mn_value(&lambda, &tr).unwrap(), transposition_value(&lambda));
        // omega at a transposition is the content sum
        prop_assert_eq!(central_character(&lambda, &tr).unwrap(), BigInt::from(lambda.content_sum()));
    }

    #[test]
    fn central_characters_are_integers((lambda, mu) in sized_pair()) {
        let omega = central_character(&lambda, &mu).unwrap();
        let chi = mn_value(&lambda, &mu).unwrap();
        let lhs = omega * BigInt::from(lambda.dimension());
        prop_assert_eq!(lhs, chi * BigInt::from(mu.class_size()));
    }
}

#[test]
fn restriction_agreement_only_for_conjugates() {
    for n in 2..=9 {
        let ps = enumerate_partitions(n);
        for a in &ps {
            for b in &ps {
                let expected = b == a || *b == a.conjugate();
                assert_eq!(restriction_agreement(a, b).unwrap(), expected, "{a} vs {b}");
            }
        }
    }
}

#[test]
fn split_values_are_roots_of_the_class_polynomial() {
    // roots of x^2 - eps*x + (1 - eps*prod)/4
    for n in 3..=12 {
        for lambda in enumerate_partitions(n).into_iter().filter(|p| p.is_self_conjugate()) {
            let (plus, minus) = split_values(&lambda).unwrap();
            let q = lambda.diagonal_hooks();
            let r = q.len();
            let eps: i64 = if ((n - r) / 2) % 2 == 0 { 1 } else { -1 };
            let prod: i64 = q.iter().map(|&x| x as i64).product();
            let sum = plus.checked_add(&minus).unwrap();
            assert!(sum.is_rational());
            assert_eq!(sum.u().to_integer(), eps.into());
            let product = plus.checked_mul(&minus).unwrap();
            assert!(product.is_rational());
            assert_eq!(product.u() * num::BigRational::from_integer(4.into()), num::BigRational::from_integer((1 - eps * prod).into()));
        }
    }
}

#[test]
fn an_tables_are_orthogonal() {
    for n in 2..=8 {
        let t = AnCharacterTable::build(n).unwrap();
        assert_eq!(t.labels().len(), t.classes().len());
        t.check_orthogonality().unwrap();
    }
}

/// Smallest number of columns separating all rows, by brute force.
fn min_separating(rows: &[Vec<BigInt>]) -> usize {
    let cols = rows[0].len();
    (1..=cols)
        .find(|&k| {
            (0u32..1 << cols).filter(|m| m.count_ones() as usize == k).any(|mask| {
                let key = |r: &Vec<BigInt>| {
                    (0..cols).filter(|c| mask >> c & 1 == 1).map(|c| r[c].clone()).collect::<Vec<_>>()
                };
                let mut keys: Vec<_> = rows.iter().map(key).collect();
                keys.sort();
                keys.windows(2).all(|w| w[0] != w[1])
            })
        })
        .unwrap()
}

#[test]
fn distinguishing_search_matches_brute_force() {
    for n in 2..=7 {
        let t = character_table(n);
        let out = min_distinguishing_set(&t, 4).unwrap();
        assert!(out.exhaustive);
        assert_eq!(out.size, min_separating(t.rows()), "n = {n}");
        let cols: Vec<usize> = out.witness.iter().map(|w| t.index_of(w).unwrap()).collect();
        let mut keys: Vec<Vec<BigInt>> = t.rows().iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
        keys.sort();
        assert!(keys.windows(2).all(|w| w[0] != w[1]));
    }
}

#[test]
fn vanishing_witness_is_a_transposition() {
    for n in 2..=10 {
        let t = character_table(n);
        let out = min_vanishing_set(&t, 2).unwrap();
        assert_eq!(out.size, 1);
        assert_eq!(out.witness, vec![Partition::cycle_type(&[2], n).unwrap()]);
        for (i, lambda) in t.labels().iter().enumerate() {
            let j = t.index_of(&out.witness[0]).unwrap();
            if t.at(i, j) == &BigInt::from(0) {
                assert!(lambda.is_self_conjugate(), "{lambda}");
            }
        }
    }
}
