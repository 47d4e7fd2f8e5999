use std::collections::{BTreeSet, HashMap};

use num::{BigInt, BigRational, One, Zero};
use proptest::prelude::*;
use symchar::chartable::character_table;
use symchar::class_algebra::{class_basis, Algebra, ClassAlgebra, ClassLabel, SplitSign};
use symchar::partitions::enumerate_partitions;
use symchar::Partition;

type Perm = Vec<usize>;

fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = vec![vec![]];
    for k in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for pos in 0..=k {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

fn cycle_type(p: &[usize]) -> Partition {
    let mut seen = vec![false; p.len()];
    let mut lens = Vec::new();
    for s in 0..p.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len > 0 {
            lens.push(len);
        }
    }
    Partition::from_multiset(lens)
}

fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&x| a[x]).collect()
}

fn inverse(a: &[usize]) -> Perm {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

fn even(p: &[usize]) -> bool {
    (p.len() - cycle_type(p).len()).is_multiple_of(2)
}

fn rep(t: &Partition) -> Perm {
    let mut perm = Vec::new();
    for &len in t.parts() {
        let start = perm.len();
        for i in 0..len {
            perm.push(start + (i + 1) % len);
        }
    }
    perm
}

/// The conjugacy classes of S_n or A_n, as sets of permutations.
fn classes(n: usize, algebra: Algebra) -> HashMap<ClassLabel, BTreeSet<Perm>> {
    let perms = all_perms(n);
    let mut out: HashMap<ClassLabel, BTreeSet<Perm>> = HashMap::new();
    for p in &perms {
        if algebra == Algebra::An && !even(p) {
            continue;
        }
        let t = cycle_type(p);
        let split = algebra == Algebra::An && n > 1 && t.has_odd_distinct_parts();
        out.entry(ClassLabel { cycle_type: t, split: split.then_some(SplitSign::Plus) })
            .or_default()
            .insert(p.clone());
    }
    if algebra == Algebra::An {
        let split: Vec<ClassLabel> = out.keys().filter(|l| l.split.is_some()).cloned().collect();
        for label in split {
            let whole = out.remove(&label).unwrap();
            let r = rep(&label.cycle_type);
            let plus: BTreeSet<Perm> = perms
                .iter()
                .filter(|g| even(g))
                .map(|g| compose(&compose(g, &r), &inverse(g)))
                .collect();
            let minus: BTreeSet<Perm> = whole.difference(&plus).cloned().collect();
            assert_eq!(plus.len(), minus.len());
            out.insert(label.clone(), plus);
            out.insert(ClassLabel { split: Some(SplitSign::Minus), ..label }, minus);
        }
    }
    out
}

/// a_{xy}^z = #{(g, h) in X x Y : g h = z} for a fixed z in Z.
fn brute_constant(x: &BTreeSet<Perm>, y: &BTreeSet<Perm>, z: &BTreeSet<Perm>) -> BigRational {
    let target = z.iter().next().unwrap();
    let count = x.iter().filter(|g| y.contains(&compose(&inverse(g), target))).count();
    BigRational::from_integer(count.into())
}

fn check_against_brute_force(n: usize, algebra: Algebra) {
    let cls = classes(n, algebra);
    let alg = ClassAlgebra::new(n, algebra).unwrap();
    let basis = class_basis(n, algebra);
    assert_eq!(basis.len(), cls.len());
    for a in &basis {
        assert_eq!(num::BigUint::from(cls[a].len()), symchar::class_algebra::label_size(a), "{a:?}");
    }
    for a in &basis {
        for b in &basis {
            let prod = alg.product(a, b).unwrap();
            for c in &basis {
                let expected = brute_constant(&cls[a], &cls[b], &cls[c]);
                assert_eq!(prod.coeff(c), expected, "{algebra} n={n}: {a:?} * {b:?} at {c:?}");
            }
        }
    }
}

#[test]
fn symmetric_structure_constants_match_brute_force() {
    for n in 1..=6 {
        check_against_brute_force(n, Algebra::Sn);
    }
}

#[test]
fn alternating_structure_constants_match_brute_force() {
    for n in 2..=6 {
        check_against_brute_force(n, Algebra::An);
    }
}

fn class_index(n: usize) -> impl Strategy<Value = (usize, usize, usize)> {
    let k = enumerate_partitions(n).len();
    (0..k, 0..k, 0..k)
}

fn triple() -> impl Strategy<Value = (usize, (usize, usize, usize))> {
    (2usize..=8).prop_flat_map(|n| (Just(n), class_index(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// a_{mu nu}^rho = |C_mu||C_nu|/n! * sum_chi chi(mu) chi(nu) conj(chi(rho)) / chi(1)
    #[test]
    fn constants_match_character_formula((n, (i, j, k)) in triple()) {
        let t = character_table(n);
        let labels = t.labels();
        let (mu, nu, rho) = (&labels[i], &labels[j], &labels[k]);
        let id = t.index_of(&Partition::column(n)).unwrap();
        let mut sum = BigRational::zero();
        for r in 0..t.len() {
            let num = t.at(r, i) * t.at(r, j) * t.at(r, k);
            sum += BigRational::new(num, t.at(r, id).clone());
        }
        let sizes = BigInt::from(mu.class_size()) * BigInt::from(nu.class_size());
        let order: BigInt = BigInt::from(symchar::partitions::factorial(n));
        let expected = sum * BigRational::new(sizes, order);
        let alg = ClassAlgebra::new(n, Algebra::Sn).unwrap();
        let prod = alg
            .product(&ClassLabel::whole(mu.clone()), &ClassLabel::whole(nu.clone()))
            .unwrap();
        prop_assert_eq!(prod.coeff_of_type(rho), expected);
    }

    #[test]
    fn products_commute_and_respect_parity((n, (i, j, _)) in triple()) {
        let labels = enumerate_partitions(n);
        let alg = ClassAlgebra::new(n, Algebra::Sn).unwrap();
        let a = ClassLabel::whole(labels[i].clone());
        let b = ClassLabel::whole(labels[j].clone());
        let ab = alg.product(&a, &b).unwrap();
        let ba = alg.product(&b, &a).unwrap();
        prop_assert_eq!(ab.sorted_terms(), ba.sorted_terms());
        let parity = labels[i].sign() * labels[j].sign();
        let mut total = BigInt::zero();
        for (c, coeff) in ab.terms() {
            prop_assert_eq!(c.cycle_type.sign(), parity);
            prop_assert!(c.cycle_type.support() <= labels[i].support() + labels[j].support());
            total += (coeff * BigRational::from_integer(symchar::class_algebra::label_size(c).into())).to_integer();
        }
        // counting identity: |C_a||C_b| = sum_c a_{ab}^c |C_c|
        let expected = BigInt::from(labels[i].class_size()) * BigInt::from(labels[j].class_size());
        prop_assert_eq!(total, expected);
    }
}

#[test]
fn identity_is_neutral() {
    for n in 1..=7 {
        let alg = ClassAlgebra::new(n, Algebra::Sn).unwrap();
        let one = ClassLabel::whole(Partition::column(n));
        for b in class_basis(n, Algebra::Sn) {
            let p = alg.product(&one, &b).unwrap();
            assert_eq!(p.terms().count(), 1);
            assert!(p.coeff(&b).is_one());
        }
    }
}
