//! Permutations as image arrays on `0..n`, and enumeration of conjugacy classes.

use crate::partitions::Partition;

/// Canonical element of the given cycle type: cycles filled with consecutive
/// points in increasing order, longest cycle first.
pub fn canonical_rep(cycle_type: &Partition) -> Vec<usize> {
    let n = cycle_type.n();
    let mut perm = vec![0; n];
    let mut start = 0;
    for &len in cycle_type.parts() {
        for i in 0..len {
            perm[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    perm
}

/// `(a * b)(x) = a(b(x))`, written into `out`.
#[inline]
pub fn compose_into(a: &[usize], b: &[usize], out: &mut [usize]) {
    for (o, &bx) in out.iter_mut().zip(b) {
        *o = a[bx];
    }
}

pub fn conjugate_by(x: &[usize], sigma: &[usize]) -> Vec<usize> {
    // sigma x sigma^-1 sends sigma(i) to sigma(x(i))
    let mut out = vec![0; x.len()];
    for i in 0..x.len() {
        out[sigma[i]] = sigma[x[i]];
    }
    out
}

pub fn is_even(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        cycles += 1;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
        }
    }
    (perm.len() - cycles).is_multiple_of(2)
}

/// Encodes cycle types of permutations of `0..n` as integers: the
/// multiplicity of cycle length `L` is digit `L - 1` in base `n + 1`.
#[derive(Debug, Clone)]
pub struct TypeKeyer {
    powers: Vec<u64>,
}

impl TypeKeyer {
    /// Supports `n <= 15`, where every key fits in a `u64`.
    pub fn new(n: usize) -> Self {
        assert!(n <= 15, "cycle-type keys overflow beyond n = 15");
        let base = n as u64 + 1;
        let mut powers = Vec::with_capacity(n.max(1));
        let mut p = 1u64;
        for _ in 0..n.max(1) {
            powers.push(p);
            p = p.saturating_mul(base);
        }
        TypeKeyer { powers }
    }

    pub fn key_of_type(&self, cycle_type: &Partition) -> u64 {
        cycle_type.parts().iter().map(|&l| self.powers[l - 1]).sum()
    }

    /// Key of the cycle type of `perm`; `seen` is scratch space of length `n`.
    #[inline]
    pub fn key_of_perm(&self, perm: &[usize], seen: &mut [bool]) -> u64 {
        seen.iter_mut().for_each(|s| *s = false);
        let mut key = 0;
        for s in 0..perm.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
                len += 1;
            }
            key += self.powers[len - 1];
        }
        key
    }
}

/// For `x` whose cycle lengths are pairwise distinct, the parity of a
/// conjugator taking [`canonical_rep`] of the same type to `x`.
///
/// Returns `true` when that conjugator is even, i.e. `x` lies in the `A_n`
/// class of the canonical representative.
pub fn conjugator_is_even(x: &[usize], cycle_type: &Partition) -> bool {
    let n = x.len();
    // first point of the x-cycle of each length
    let mut start_of_len = vec![usize::MAX; n + 1];
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut y = s;
        while !seen[y] {
            seen[y] = true;
            y = x[y];
            len += 1;
        }
        start_of_len[len] = s;
    }
    let mut sigma = vec![0; n];
    let mut block = 0;
    for &len in cycle_type.parts() {
        let mut c = start_of_len[len];
        for i in 0..len {
            sigma[block + i] = c;
            c = x[c];
        }
        block += len;
    }
    is_even(&sigma)
}

/// Calls `f` once for every permutation of the given cycle type.
///
/// Each permutation is produced in the normal form where cycles are opened at
/// their smallest point, taken in increasing order of that point, so no element
/// is visited twice.
pub fn for_each_in_class<F: FnMut(&[usize])>(cycle_type: &Partition, mut f: F) {
    let n = cycle_type.n();
    let mut counts = vec![0usize; n + 1];
    for &l in cycle_type.parts() {
        counts[l] += 1;
    }
    let mut state = ClassWalk {
        perm: vec![0; n],
        used: vec![false; n],
        counts,
    };
    state.next_cycle(&mut f);
}

struct ClassWalk {
    perm: Vec<usize>,
    used: Vec<bool>,
    counts: Vec<usize>,
}

impl ClassWalk {
    fn next_cycle<F: FnMut(&[usize])>(&mut self, f: &mut F) {
        let Some(start) = self.used.iter().position(|&u| !u) else {
            f(&self.perm);
            return;
        };
        self.used[start] = true;
        for len in 1..self.counts.len() {
            if self.counts[len] == 0 {
                continue;
            }
            self.counts[len] -= 1;
            self.extend_cycle(start, start, len - 1, f);
            self.counts[len] += 1;
        }
        self.used[start] = false;
    }

    fn extend_cycle<F: FnMut(&[usize])>(&mut self, start: usize, cur: usize, left: usize, f: &mut F) {
        if left == 0 {
            self.perm[cur] = start;
            self.next_cycle(f);
            return;
        }
        for x in start + 1..self.perm.len() {
            if self.used[x] {
                continue;
            }
            self.used[x] = true;
            self.perm[cur] = x;
            self.extend_cycle(start, x, left - 1, f);
            self.used[x] = false;
        }
    }
}
