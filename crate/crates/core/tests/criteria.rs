use num::{BigInt, ToPrimitive};
use proptest::prelude::*;
use symchar::character_oracles::DecompositionFixture;
use symchar::modular_criteria::{fayers_reducible, restriction_decomposable, FieldSpec};
use symchar::partitions::enumerate_partitions;
use symchar::regularity::{ln_big, partition_counts, regular_counts};
use symchar::Partition;

/// Partitions of each n <= max_n with no part divisible by ell.
fn no_part_divisible(ell: usize, max_n: usize) -> Vec<u128> {
    let mut c = vec![0u128; max_n + 1];
    c[0] = 1;
    for part in (1..=max_n).filter(|k| k % ell != 0) {
        for n in part..=max_n {
            c[n] += c[n - part];
        }
    }
    c
}

#[test]
fn regular_counts_match_glaisher_and_enumeration() {
    for ell in [2, 3, 4, 5, 7] {
        let s = regular_counts(ell, 120).unwrap();
        let glaisher = no_part_divisible(ell, 120);
        for n in 0..=120 {
            assert_eq!(s.values[n].to_u128().unwrap(), glaisher[n], "ell = {ell}, n = {n}");
        }
        for n in 1..=18 {
            let direct = enumerate_partitions(n)
                .iter()
                .filter(|p| p.multiplicities().iter().all(|&(_, m)| m < ell))
                .count();
            assert_eq!(s.values[n], BigInt::from(direct));
        }
    }
}

#[test]
fn partition_counts_known() {
    let p = partition_counts(200);
    assert_eq!(p[100], "190569292".parse::<BigInt>().unwrap());
    assert_eq!(p[200], "3972999029388".parse::<BigInt>().unwrap());
}

proptest! {
    #[test]
    fn proportion_is_a_probability(ell in 2usize..8, n in 1usize..400) {
        let s = regular_counts(ell, n).unwrap();
        let g = s.log_proportion(n);
        prop_assert!(g <= 1e-12);
        prop_assert!(g.is_finite());
    }

    #[test]
    fn ln_big_matches_float(x in 1u64..u64::MAX, shift in 0usize..400) {
        let big = BigInt::from(x) << shift;
        let expected = (x as f64).ln() + shift as f64 * std::f64::consts::LN_2;
        prop_assert!((ln_big(&big) - expected).abs() < 1e-9 * expected.abs().max(1.0));
    }
}

fn odd_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13])
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..7, 1..6).prop_map(Partition::from_multiset)
}

proptest! {
    #[test]
    fn fayers_coprime_hooks_are_irreducible(p in partition(), q in odd_prime()) {
        if p.hook_grid().iter().all(|(_, h)| !(h as u64).is_multiple_of(q)) {
            prop_assert!(!fayers_reducible(&p, q).unwrap());
        }
    }

    #[test]
    fn fayers_is_conjugation_invariant(p in partition(), q in odd_prime()) {
        prop_assert_eq!(fayers_reducible(&p, q).unwrap(), fayers_reducible(&p.conjugate(), q).unwrap());
    }
}

#[test]
fn natural_module_reducible_iff_p_divides_n() {
    for n in 3..=40 {
        for q in [3u64, 5, 7, 11] {
            let lambda = Partition::hook(n, 1).unwrap();
            assert_eq!(fayers_reducible(&lambda, q).unwrap(), (n as u64).is_multiple_of(q), "n = {n}, p = {q}");
        }
    }
}

#[test]
fn fayers_agrees_with_decomposition_fixture() {
    let f = DecompositionFixture::builtin("d3_5").unwrap();
    for (i, lambda) in f.row_labels.iter().enumerate() {
        let factors: u32 = f.entries[i].iter().sum();
        assert_eq!(fayers_reducible(lambda, f.p as u64).unwrap(), factors > 1, "{lambda}");
    }
}

fn is_square_mod(a: i64, p: i64) -> bool {
    let a = a.rem_euclid(p);
    (0..p).any(|x| x * x % p == a)
}

#[test]
fn restriction_in_large_characteristic_follows_split_radicand() {
    for n in 2..=12 {
        for lambda in enumerate_partitions(n) {
            for q in [13u64, 17, 19, 23] {
                let prime_field = FieldSpec::finite(q, 1).unwrap();
                let quadratic = FieldSpec::finite(q, 2).unwrap();
                let got = restriction_decomposable(&lambda, &prime_field).unwrap().decomposable;
                let got2 = restriction_decomposable(&lambda, &quadratic).unwrap().decomposable;
                if !lambda.is_self_conjugate() {
                    assert!(!got && !got2);
                    continue;
                }
                let hooks = lambda.diagonal_hooks();
                let r = hooks.len();
                let eps: i64 = if ((n - r) / 2) % 2 == 0 { 1 } else { -1 };
                let radicand = eps * hooks.iter().map(|&h| h as i64).product::<i64>();
                assert_eq!(got, is_square_mod(radicand, q as i64), "{lambda} over GF({q})");
                assert!(got2, "{lambda} over GF({q}^2)");
            }
        }
    }
}

#[test]
fn restriction_rejects_bad_input() {
    let lambda: Partition = "2,1".parse().unwrap();
    assert!(FieldSpec::finite(4, 1).is_err());
    assert!(fayers_reducible(&lambda, 2).is_err());
    assert!(fayers_reducible(&lambda, 9).is_err());
    let one = Partition::row(1);
    assert!(restriction_decomposable(&one, &FieldSpec::finite(5, 1).unwrap()).is_err());
}
