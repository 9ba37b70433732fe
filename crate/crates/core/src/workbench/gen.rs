//! Seeded instance generators.

use crate::error::{Error, Result};
use crate::hypergraph::{degree_sum, enumerate_triples, sign_partition, Hypergraph, WeightVector};
use crate::reduction::{DegSeqInstance, ThreePartitionInstance, ZeroWeightInstance};
use crate::workbench::rng::SeededRng;

/// Samples `m` distinct triples of `[n]` uniformly and returns their degree
/// sum together with the planted witness.
pub fn gen_planted_degseq(n: usize, m: usize, seed: u64) -> Result<(DegSeqInstance, Hypergraph)> {
    let mut all = enumerate_triples(n);
    if m > all.len() {
        return Err(Error::InvalidArgument(format!(
            "m = {m} exceeds C({n}, 3) = {}",
            all.len()
        )));
    }
    let mut rng = SeededRng::new(seed);
    // Partial Fisher–Yates from the front.
    for i in 0..m {
        let j = i + rng.below((all.len() - i) as u64) as usize;
        all.swap(i, j);
    }
    all.truncate(m);
    let h = Hypergraph::from_unsorted(n, all)?;
    let d = degree_sum(&h)?;
    Ok((DegSeqInstance::triples(d), h))
}

/// Weights drawn uniformly from `[−max_weight, max_weight]`; every triple of
/// `S₀` then joins the planted `G` with probability 1/2, and `c = ΣG`.
/// `wᵀc = Σ_{x∈G} w·x = 0` holds by construction.
pub fn gen_planted_zero(
    n: usize,
    max_weight: i64,
    seed: u64,
) -> Result<(ZeroWeightInstance, Hypergraph)> {
    if max_weight < 0 {
        return Err(Error::InvalidArgument(format!(
            "max_weight = {max_weight} is negative"
        )));
    }
    let mut rng = SeededRng::new(seed);
    let w: Vec<i64> = (0..n).map(|_| rng.between(-max_weight, max_weight)).collect();
    let w = WeightVector::new(w);
    let sp = sign_partition(&w)?;
    let picked = sp
        .zero()
        .edges()
        .iter()
        .filter(|_| rng.below(2) == 1)
        .copied()
        .collect();
    let g = Hypergraph::new(n, picked)?;
    let c = degree_sum(&g)?;
    Ok((ZeroWeightInstance::new(w, c)?, g))
}

/// A 3-partition instance with values in `[0, max_value]`.
///
/// Planted: a common target `b` is drawn from `[0, 3·max_value]`, each of the
/// `n/3` groups draws two values compatible with `b` and completes the third,
/// then all positions are shuffled. Unplanted: values are drawn uniformly and
/// the last entry is moved by the smallest `|δ|` (negative first on ties) that
/// makes `Σa` divisible by `n/3`; if no such move stays in range the whole
/// vector is redrawn.
pub fn gen_partition(
    n: usize,
    max_value: i64,
    seed: u64,
    planted: bool,
) -> Result<ThreePartitionInstance> {
    if n == 0 || !n.is_multiple_of(3) {
        return Err(Error::InvalidArgument(format!(
            "n = {n} must be a positive multiple of 3"
        )));
    }
    if max_value < 0 {
        return Err(Error::InvalidArgument(format!(
            "max_value = {max_value} is negative"
        )));
    }
    let top = max_value
        .checked_mul(3)
        .ok_or(Error::Overflow("3·max_value"))?;
    let mut rng = SeededRng::new(seed);
    let groups = n / 3;

    if planted {
        let b = rng.between(0, top);
        let mut a = Vec::with_capacity(n);
        for _ in 0..groups {
            let x = rng.between((b - 2 * max_value).max(0), b.min(max_value));
            let y = rng.between((b - x - max_value).max(0), (b - x).min(max_value));
            a.extend([x, y, b - x - y]);
        }
        rng.shuffle(&mut a);
        return ThreePartitionInstance::new(a, b);
    }

    let q = groups as i64;
    loop {
        let mut a: Vec<i64> = (0..n).map(|_| rng.between(0, max_value)).collect();
        let last = a[n - 1];
        let rest: i64 = a[..n - 1].iter().sum();
        let fix = (0..=max_value)
            .flat_map(|k| [last - k, last + k])
            .find(|&v| (0..=max_value).contains(&v) && (rest + v) % q == 0);
        if let Some(v) = fix {
            a[n - 1] = v;
            let b = (rest + v) / q;
            return ThreePartitionInstance::new(a, b);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::check_certificate;
    use crate::solver::bruteforce_partition;

    #[test]
    fn planted_degseq_examples() {
        let (inst, h) = gen_planted_degseq(3, 1, 99).unwrap();
        assert_eq!(inst.d().as_slice(), &[1, 1, 1]);
        assert_eq!(h, Hypergraph::complete(3));

        let (inst, h) = gen_planted_degseq(5, 0, 4).unwrap();
        assert_eq!(inst.d().as_slice(), &[0; 5]);
        assert!(h.is_empty());

        let (inst, h) = gen_planted_degseq(6, 3, 7).unwrap();
        assert_eq!(inst.d().total().unwrap(), 9);
        assert!(check_certificate(h.edges(), inst.d()).is_ok());

        assert!(gen_planted_degseq(4, 5, 0).is_err());
    }

    #[test]
    fn planted_degseq_reproducible() {
        assert_eq!(
            gen_planted_degseq(8, 20, 11).unwrap(),
            gen_planted_degseq(8, 20, 11).unwrap()
        );
    }

    #[test]
    fn planted_partition_small() {
        for seed in 0..20 {
            let inst = gen_partition(3, 10, seed, true).unwrap();
            assert_eq!(inst.a().iter().sum::<i64>(), inst.b());
            assert!(inst.a().iter().all(|&v| (0..=10).contains(&v)));
        }
    }

    #[test]
    fn planted_partition_is_yes() {
        for n in [3, 6, 9] {
            for seed in 0..30 {
                let inst = gen_partition(n, 8, seed, true).unwrap();
                assert!(bruteforce_partition(&inst).unwrap(), "n={n} seed={seed}");
            }
        }
    }

    #[test]
    fn unplanted_partition_respects_promise_and_range() {
        for seed in 0..50 {
            let inst = gen_partition(6, 8, seed, false).unwrap();
            assert_eq!(3 * inst.a().iter().sum::<i64>(), 6 * inst.b());
            assert!(inst.a().iter().all(|&v| (0..=8).contains(&v)));
        }
        assert_eq!(
            gen_partition(6, 8, 5, false).unwrap(),
            gen_partition(6, 8, 5, false).unwrap()
        );
        // max_value = 0 leaves no freedom.
        let z = gen_partition(9, 0, 1, false).unwrap();
        assert_eq!(z.a(), &[0; 9]);
        assert_eq!(z.b(), 0);
    }

    #[test]
    fn planted_zero_is_yes() {
        for seed in 0..20 {
            let (inst, g) = gen_planted_zero(6, 3, seed).unwrap();
            let sp = sign_partition(inst.w()).unwrap();
            assert!(g.is_subset_of(sp.zero()));
            assert_eq!(&degree_sum(&g).unwrap(), inst.c());
        }
        assert!(gen_planted_zero(4, -1, 0).is_err());
    }

    #[test]
    fn invalid_sizes() {
        assert!(gen_partition(4, 5, 0, true).is_err());
        assert!(gen_partition(0, 5, 0, false).is_err());
        assert!(gen_partition(3, -1, 0, false).is_err());
    }
}
