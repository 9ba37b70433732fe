//! Reductions 3-partition → zero-weight triple cover → 3-hypergraph degree
//! sequence, with certificate maps in both directions.
//!
//! The first step sets `w = 3a − b·1`, `c = 1`, so that `w·x = 3(a·x − b)`
//! for every triple `x` and the feasible triple sets coincide. The second
//! step sets `d = c + Σ S₊` where `S₊` holds the triples of positive weight.
//! Any realization `H` of `d` must contain all of `S₊` and none of `S₋`, and
//! `H ∩ S₀` then realizes `c`.

use crate::error::{Error, Result};
use crate::hypergraph::{
    degree_sum, same_n, sign_partition, weighted_value, DegreeSequence, Hypergraph,
    SignPartition, Triple, WeightVector,
};

/// Values `a ≥ 0` and target `b ≥ 0` with `3·Σa = n·b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreePartitionInstance {
    a: Vec<i64>,
    b: i64,
}

impl ThreePartitionInstance {
    pub fn new(a: Vec<i64>, b: i64) -> Result<Self> {
        if let Some((index, &value)) = a.iter().enumerate().find(|(_, &v)| v < 0) {
            return Err(Error::NegativeEntry {
                field: "a",
                index,
                value,
            });
        }
        if b < 0 {
            return Err(Error::NegativeEntry {
                field: "b",
                index: 0,
                value: b,
            });
        }
        let total = a
            .iter()
            .try_fold(0i64, |acc, &v| acc.checked_add(v))
            .ok_or(Error::Overflow("sum of a"))?;
        let lhs = total.checked_mul(3).ok_or(Error::Overflow("3·Σa"))?;
        let n = i64::try_from(a.len()).map_err(|_| Error::Overflow("n"))?;
        let rhs = n.checked_mul(b).ok_or(Error::Overflow("n·b"))?;
        if lhs != rhs {
            return Err(Error::PromiseViolated(format!(
                "3·Σa = {lhs} but n·b = {rhs}"
            )));
        }
        Ok(ThreePartitionInstance { a, b })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// `a_i + a_j + a_k`.
    pub fn value(&self, x: &Triple) -> Result<i64> {
        weighted_value(&WeightVector::new(self.a.clone()), x)
    }
}

/// Weights `w` and a nonnegative target `c` with `wᵀc = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroWeightInstance {
    w: WeightVector,
    c: DegreeSequence,
}

impl ZeroWeightInstance {
    pub fn new(w: WeightVector, c: DegreeSequence) -> Result<Self> {
        same_n(w.len(), c.len())?;
        let wc = w.dot(&c)?;
        if wc != 0 {
            return Err(Error::PromiseViolated(format!("w·c = {wc} ≠ 0")));
        }
        Ok(ZeroWeightInstance { w, c })
    }

    pub fn n(&self) -> usize {
        self.w.len()
    }

    pub fn w(&self) -> &WeightVector {
        &self.w
    }

    pub fn c(&self) -> &DegreeSequence {
        &self.c
    }
}

/// A degree-sequence question for `k`-uniform hypergraphs (`k ∈ {2, 3}`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegSeqInstance {
    k: u32,
    d: DegreeSequence,
}

impl DegSeqInstance {
    pub fn new(k: u32, d: DegreeSequence) -> Result<Self> {
        if !(2..=3).contains(&k) {
            return Err(Error::InvalidArgument(format!(
                "uniformity k = {k} is not supported (only 2 and 3)"
            )));
        }
        Ok(DegSeqInstance { k, d })
    }

    pub fn triples(d: DegreeSequence) -> Self {
        DegSeqInstance { k: 3, d }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn d(&self) -> &DegreeSequence {
        &self.d
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }
}

/// `w = 3a − b·1`, `c = 1`.
pub fn reduce_partition_to_zero(inst: &ThreePartitionInstance) -> Result<ZeroWeightInstance> {
    let w = inst
        .a
        .iter()
        .map(|&a| {
            a.checked_mul(3)
                .and_then(|t| t.checked_sub(inst.b))
                .ok_or(Error::Overflow("3a − b"))
        })
        .collect::<Result<Vec<_>>>()?;
    ZeroWeightInstance::new(WeightVector::new(w), DegreeSequence::ones(inst.n()))
}

/// Carries a 3-partition witness `F` over to the zero-weight instance
/// unchanged. Fails if some triple of `F` does not have value `b`.
pub fn map_partition_certificate(
    f: &Hypergraph,
    inst: &ThreePartitionInstance,
) -> Result<Hypergraph> {
    same_n(inst.n(), f.n())?;
    let reduced = reduce_partition_to_zero(inst)?;
    for x in f.edges() {
        if inst.value(x)? != inst.b {
            return Err(Error::OutsideSet {
                triple: *x,
                set: "{x : a·x = b}",
            });
        }
        if weighted_value(reduced.w(), x)? != 0 {
            return Err(Error::OutsideSet {
                triple: *x,
                set: "S₀",
            });
        }
    }
    Ok(f.clone())
}

/// Output of [`reduce_zero_to_degseq`]: the reduced sequence and the sign
/// partition it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegSeqReduction {
    pub target: DegSeqInstance,
    pub partition: SignPartition,
}

/// `d = c + Σ S₊`.
pub fn reduce_zero_to_degseq(inst: &ZeroWeightInstance) -> Result<DegSeqReduction> {
    let partition = sign_partition(&inst.w)?;
    let d = inst.c.checked_add(&degree_sum(partition.plus())?)?;
    Ok(DegSeqReduction {
        target: DegSeqInstance::triples(d),
        partition,
    })
}

/// `H = G ∪ S₊`. Requires `G ⊆ S₀`.
pub fn lift_certificate(g: &Hypergraph, sp: &SignPartition) -> Result<Hypergraph> {
    same_n(sp.n(), g.n())?;
    if let Some(x) = g.edges().iter().find(|x| !sp.zero().contains(x)) {
        return Err(Error::OutsideSet {
            triple: *x,
            set: "S₀",
        });
    }
    g.union(sp.plus())
}

/// `G = H ∩ S₀`, after confirming `S₊ ⊆ H` and `H ∩ S₋ = ∅`.
pub fn project_certificate(h: &Hypergraph, sp: &SignPartition) -> Result<Hypergraph> {
    same_n(sp.n(), h.n())?;
    let negative_hits = h.edges().iter().filter(|x| sp.minus().contains(x)).count();
    let positive_missing = sp.plus().edges().iter().filter(|x| !h.contains(x)).count();
    if negative_hits > 0 || positive_missing > 0 {
        return Err(Error::ForcingViolated {
            negative_hits,
            positive_missing,
        });
    }
    h.intersection(sp.zero())
}

/// Both reductions composed, with every intermediate kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionReduction {
    pub zero: ZeroWeightInstance,
    pub target: DegSeqInstance,
    pub partition: SignPartition,
}

pub fn reduce_partition_to_degseq(inst: &ThreePartitionInstance) -> Result<PartitionReduction> {
    let zero = reduce_partition_to_zero(inst)?;
    let DegSeqReduction { target, partition } = reduce_zero_to_degseq(&zero)?;
    Ok(PartitionReduction {
        zero,
        target,
        partition,
    })
}
