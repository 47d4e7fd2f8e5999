use std::collections::HashMap;

use num::{BigUint, One};
use proptest::prelude::*;
use symchar::partitions::{enumerate_partitions, factorial};
use symchar::regularity::partition_counts;
use symchar::Partition;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..8, 1..7).prop_map(Partition::from_multiset)
}

/// Number of standard Young tableaux, by removing the largest entry from a corner.
fn syt_count(parts: &[usize], memo: &mut HashMap<Vec<usize>, BigUint>) -> BigUint {
    if parts.iter().sum::<usize>() <= 1 {
        return BigUint::one();
    }
    if let Some(v) = memo.get(parts) {
        return v.clone();
    }
    let mut total = BigUint::default();
    for i in 0..parts.len() {
        let is_corner = i + 1 == parts.len() || parts[i + 1] < parts[i];
        if is_corner {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            while smaller.last() == Some(&0) {
                smaller.pop();
            }
            total += syt_count(&smaller, memo);
        }
    }
    memo.insert(parts.to_vec(), total.clone());
    total
}

fn hooks_naive(p: &Partition) -> Vec<usize> {
    let conj = p.conjugate();
    let mut out = Vec::new();
    for (i, &row) in p.parts().iter().enumerate() {
        for j in 0..row {
            out.push(row - j - 1 + conj.part(j) - i - 1 + 1);
        }
    }
    out.sort_unstable();
    out
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().n(), p.n());
        prop_assert_eq!(p.conjugate().len(), p.part(0));
    }

    #[test]
    fn hooks_match_naive_and_conjugate(p in partition()) {
        let mut grid: Vec<usize> = p.hook_grid().iter().map(|(_, h)| h).collect();
        grid.sort_unstable();
        prop_assert_eq!(&grid, &hooks_naive(&p));
        prop_assert_eq!(grid, hooks_naive(&p.conjugate()));
    }

    #[test]
    fn dimension_counts_standard_tableaux(p in partition()) {
        let mut memo = HashMap::new();
        prop_assert_eq!(p.dimension(), syt_count(p.parts(), &mut memo));
    }

    #[test]
    fn content_sum_flips_under_conjugation(p in partition()) {
        prop_assert_eq!(p.content_sum(), -p.conjugate().content_sum());
        if p.is_self_conjugate() {
            prop_assert_eq!(p.content_sum(), 0);
        }
    }

    #[test]
    fn display_round_trips(p in partition()) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn dominance_is_reversed_by_conjugation(a in partition(), b in partition()) {
        if a.n() == b.n() {
            prop_assert_eq!(a.dominates(&b), b.conjugate().dominates(&a.conjugate()));
        }
    }

    #[test]
    fn cores_have_no_p_hooks(p in partition(), q in 2usize..6) {
        let core = p.core(q);
        prop_assert_eq!((p.n() - core.n()) % q, 0);
        prop_assert!(core.hook_grid().iter().all(|(_, h)| h % q != 0));
    }
}

#[test]
fn enumeration_matches_counts_and_sums() {
    let counts = partition_counts(14);
    for n in 1..=10 {
        let ps = enumerate_partitions(n);
        assert_eq!(counts[n], ps.len().into());
        for w in ps.windows(2) {
            assert_ne!(w[0], w[1]);
        }
        let dims: BigUint = ps.iter().map(|p| p.dimension().pow(2)).sum();
        assert_eq!(dims, factorial(n));
        let sizes: BigUint = ps.iter().map(|p| p.class_size()).sum();
        assert_eq!(sizes, factorial(n));
    }
}

#[test]
fn self_conjugate_count_equals_odd_distinct_count() {
    for n in 1..=16 {
        let ps = enumerate_partitions(n);
        let sc = ps.iter().filter(|p| p.is_self_conjugate()).count();
        let odd_distinct = ps.iter().filter(|p| p.has_odd_distinct_parts()).count();
        assert_eq!(sc, odd_distinct, "n = {n}");
    }
}
