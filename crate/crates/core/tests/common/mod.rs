//! Independent reference computations shared by the integration tests.
//! Nothing here calls into the estimators it is used to check.
#![allow(dead_code)]

use rand::Rng;

/// All sequences of length `n` over `0..x`, in lexicographic order.
pub fn all_sequences(x: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..x).map(move |s| {
                    let mut p = prefix.clone();
                    p.push(s);
                    p
                })
            })
            .collect();
    }
    out
}

/// Add-1/2 joint probability over an alphabet of size `m`, as a plain
/// product of the per-step factors.
pub fn kt_joint(seq: &[usize], m: usize) -> f64 {
    let mut counts = std::collections::BTreeMap::new();
    let mut p = 1.0;
    for (i, &s) in seq.iter().enumerate() {
        let c = counts.entry(s).or_insert(0u64);
        p *= (*c as f64 + 0.5) / (i as f64 + m as f64 / 2.0);
        *c += 1;
    }
    p
}

pub fn binomial_exact(n: usize, k: usize) -> u128 {
    let mut r: u128 = 1;
    for j in 0..k {
        r = r * (n - j) as u128 / (j + 1) as u128;
    }
    r
}

/// Mixture over every non-empty subset `S` of `0..x` with weight
/// `1 / (x C(x, |S|))` of the add-1/2 estimator restricted to `S`. Subsets
/// missing an observed symbol contribute nothing.
pub fn ssa_bruteforce_log2(seq: &[usize], x: usize) -> f64 {
    assert!(x <= 16);
    let observed: u32 = seq.iter().fold(0, |acc, &s| acc | (1 << s));
    let mut total = 0.0;
    for subset in 1u32..(1 << x) {
        if subset & observed != observed {
            continue;
        }
        let m = subset.count_ones() as usize;
        let w = 1.0 / (x as f64 * binomial_exact(x, m) as f64);
        total += w * kt_joint(seq, m);
    }
    total.log2()
}

/// Maximum-likelihood i.i.d. log probability of `seq`.
pub fn ml_log2(seq: &[usize]) -> f64 {
    let mut counts = std::collections::BTreeMap::new();
    for &s in seq {
        *counts.entry(s).or_insert(0u64) += 1;
    }
    let n = seq.len() as f64;
    counts
        .values()
        .map(|&c| c as f64 * (c as f64 / n).log2())
        .sum()
}

/// A random sequence: a random distribution over a random number of
/// symbols drawn from `0..x`, then i.i.d. draws from it.
pub fn random_sparse_sequence<R: Rng>(rng: &mut R, x: usize, n: usize) -> Vec<usize> {
    let k = rng.random_range(1..=x);
    let mut support: Vec<usize> = (0..x).collect();
    for i in 0..k {
        let j = rng.random_range(i..x);
        support.swap(i, j);
    }
    support.truncate(k);
    let weights: Vec<f64> = (0..k).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    (0..n)
        .map(|_| {
            let mut u = rng.random::<f64>() * total;
            for (i, w) in weights.iter().enumerate() {
                if u < *w {
                    return support[i];
                }
                u -= w;
            }
            support[k - 1]
        })
        .collect()
}
