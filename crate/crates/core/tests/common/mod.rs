#![allow(dead_code)]

use permcode::Permutation;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn perm(v: &[usize]) -> Permutation {
    Permutation::new(v.to_vec()).unwrap()
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::new(v).unwrap()
}

/// Uniform data digits `a_j ∈ 1..=j+1` for `j = 1..=n-2`.
pub fn random_digits<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    (1..n.saturating_sub(1))
        .map(|j| rng.gen_range(1..=j + 1))
        .collect()
}

/// Every vector of `V_n` in mixed-radix order, `a_1` varying fastest.
pub fn all_rep_vectors(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![1]];
    for j in 1..n {
        let mut next = Vec::with_capacity(out.len() * (j + 1));
        for top in 1..=j + 1 {
            for v in &out {
                let mut w = v.clone();
                w.push(top);
                next.push(w);
            }
        }
        out = next;
    }
    out
}
