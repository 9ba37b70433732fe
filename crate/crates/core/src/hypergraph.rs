//! Ground-set combinatorics for 3-uniform hypergraphs.
//!
//! Edges are stored as sorted index triples rather than 0/1 incidence
//! vectors. Every aggregate value carries its ground-set size `n` and
//! operations on mismatched sizes are rejected. All integer arithmetic is
//! checked; overflow surfaces as [`Error::Overflow`].

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A 3-element subset `{i, j, k}` of the ground set with `i < j < k`.
///
/// Ordering is lexicographic on `(i, j, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    i: usize,
    j: usize,
    k: usize,
}

impl Triple {
    pub fn new(i: usize, j: usize, k: usize) -> Result<Self> {
        if i < j && j < k {
            Ok(Triple { i, j, k })
        } else {
            Err(Error::UnsortedTriple(i, j, k))
        }
    }

    /// Builds a triple from three distinct indices in any order.
    pub fn from_unordered(mut idx: [usize; 3]) -> Result<Self> {
        idx.sort_unstable();
        Triple::new(idx[0], idx[1], idx[2])
    }

    pub fn indices(&self) -> [usize; 3] {
        [self.i, self.j, self.k]
    }

    pub fn max_index(&self) -> usize {
        self.k
    }

    pub fn contains(&self, v: usize) -> bool {
        self.i == v || self.j == v || self.k == v
    }

    /// Whether all three indices lie in `[0, n)`.
    pub fn fits(&self, n: usize) -> bool {
        self.k < n
    }

    /// The 0/1 incidence vector of length `n`.
    pub fn incidence(&self, n: usize) -> Vec<u8> {
        let mut x = vec![0; n];
        for v in self.indices() {
            x[v] = 1;
        }
        x
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.i, self.j, self.k)
    }
}

/// `C(n, 3)`, or `None` on overflow.
pub fn triple_count(n: usize) -> Option<u64> {
    binomial(n as u64, 3)
}

/// Checked binomial coefficient.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * u128::from(n - t) / u128::from(t + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(acc as u64)
}

/// All `C(n, 3)` triples of `[n]` in lexicographic order.
pub fn enumerate_triples(n: usize) -> Vec<Triple> {
    let cap = triple_count(n).map_or(0, |c| c as usize);
    let mut out = Vec::with_capacity(cap);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push(Triple { i, j, k });
            }
        }
    }
    out
}

/// A duplicate-free set of triples on `[n]`, kept in strictly increasing
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Triple>,
}

impl Hypergraph {
    /// Validates that `edges` is strictly increasing and fits in `[n]`.
    pub fn new(n: usize, edges: Vec<Triple>) -> Result<Self> {
        for (pos, t) in edges.iter().enumerate() {
            if !t.fits(n) {
                return Err(Error::TripleOutOfRange { triple: *t, n });
            }
            if pos > 0 && edges[pos - 1] >= *t {
                return Err(Error::UnorderedEdges(pos));
            }
        }
        Ok(Hypergraph { n, edges })
    }

    /// Sorts `edges` first; duplicates are still an error.
    pub fn from_unsorted(n: usize, mut edges: Vec<Triple>) -> Result<Self> {
        edges.sort_unstable();
        Hypergraph::new(n, edges)
    }

    pub fn empty(n: usize) -> Self {
        Hypergraph {
            n,
            edges: Vec::new(),
        }
    }

    /// The complete 3-hypergraph on `[n]`.
    pub fn complete(n: usize) -> Self {
        Hypergraph {
            n,
            edges: enumerate_triples(n),
        }
    }

    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<Triple>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|t| t.fits(n)));
        Hypergraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Triple] {
        &self.edges
    }

    pub fn into_edges(self) -> Vec<Triple> {
        self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.edges.binary_search(t).is_ok()
    }

    /// Sorted union of two hypergraphs on the same ground set.
    pub fn union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        same_n(self.n, other.n)?;
        let (a, b) = (&self.edges, &other.edges);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut x, mut y) = (0, 0);
        while x < a.len() && y < b.len() {
            match a[x].cmp(&b[y]) {
                Ordering::Less => {
                    out.push(a[x]);
                    x += 1;
                }
                Ordering::Greater => {
                    out.push(b[y]);
                    y += 1;
                }
                Ordering::Equal => {
                    out.push(a[x]);
                    x += 1;
                    y += 1;
                }
            }
        }
        out.extend_from_slice(&a[x..]);
        out.extend_from_slice(&b[y..]);
        Ok(Hypergraph::from_sorted_unchecked(self.n, out))
    }

    /// Sorted intersection of two hypergraphs on the same ground set.
    pub fn intersection(&self, other: &Hypergraph) -> Result<Hypergraph> {
        same_n(self.n, other.n)?;
        let edges = self
            .edges
            .iter()
            .filter(|t| other.contains(t))
            .copied()
            .collect();
        Ok(Hypergraph::from_sorted_unchecked(self.n, edges))
    }

    pub fn is_subset_of(&self, other: &Hypergraph) -> bool {
        self.n == other.n && self.edges.iter().all(|t| other.contains(t))
    }
}

pub(crate) fn same_n(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::GroundSetMismatch { expected, found })
    }
}

/// A nonnegative integer vector indexed by the ground set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence(Vec<i64>);

impl DegreeSequence {
    pub fn new(d: Vec<i64>) -> Result<Self> {
        if let Some((index, &value)) = d.iter().enumerate().find(|(_, &v)| v < 0) {
            return Err(Error::NegativeEntry {
                field: "d",
                index,
                value,
            });
        }
        Ok(DegreeSequence(d))
    }

    pub fn zeros(n: usize) -> Self {
        DegreeSequence(vec![0; n])
    }

    pub fn ones(n: usize) -> Self {
        DegreeSequence(vec![1; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    pub fn total(&self) -> Result<i64> {
        self.0
            .iter()
            .try_fold(0i64, |acc, &v| acc.checked_add(v))
            .ok_or(Error::Overflow("degree total"))
    }

    pub fn checked_add(&self, other: &DegreeSequence) -> Result<DegreeSequence> {
        same_n(self.len(), other.len())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("degree sum")))
            .collect::<Result<Vec<_>>>()
            .map(DegreeSequence)
    }
}

/// A signed integer weight per ground-set element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(w: Vec<i64>) -> Self {
        WeightVector(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    /// `wᵀc` with checked arithmetic.
    pub fn dot(&self, c: &DegreeSequence) -> Result<i64> {
        same_n(self.len(), c.len())?;
        self.0.iter().zip(c.as_slice()).try_fold(0i64, |acc, (w, c)| {
            w.checked_mul(*c)
                .and_then(|p| acc.checked_add(p))
                .ok_or(Error::Overflow("weight dot product"))
        })
    }
}

/// Per-vertex incidence counts of `h`.
pub fn degree_sum(h: &Hypergraph) -> Result<DegreeSequence> {
    degree_sum_of(h.n(), h.edges())
}

pub(crate) fn degree_sum_of(n: usize, edges: &[Triple]) -> Result<DegreeSequence> {
    let mut d = vec![0i64; n];
    for t in edges {
        for v in t.indices() {
            let slot = d
                .get_mut(v)
                .ok_or(Error::TripleOutOfRange { triple: *t, n })?;
            *slot = slot.checked_add(1).ok_or(Error::Overflow("degree"))?;
        }
    }
    Ok(DegreeSequence(d))
}

/// `w_i + w_j + w_k`.
pub fn weighted_value(w: &WeightVector, x: &Triple) -> Result<i64> {
    if !x.fits(w.len()) {
        return Err(Error::TripleOutOfRange {
            triple: *x,
            n: w.len(),
        });
    }
    let [i, j, k] = x.indices();
    let w = w.as_slice();
    w[i].checked_add(w[j])
        .and_then(|s| s.checked_add(w[k]))
        .ok_or(Error::Overflow("weighted value"))
}

/// Sign of an exact integer, with `sign(0) = Zero`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of(v: i64) -> Sign {
        match v.cmp(&0) {
            Ordering::Less => Sign::Minus,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Plus,
        }
    }
}

/// All triples of `[n]` split by the sign of their weighted value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignPartition {
    minus: Hypergraph,
    zero: Hypergraph,
    plus: Hypergraph,
}

impl SignPartition {
    pub fn minus(&self) -> &Hypergraph {
        &self.minus
    }

    pub fn zero(&self) -> &Hypergraph {
        &self.zero
    }

    pub fn plus(&self) -> &Hypergraph {
        &self.plus
    }

    pub fn n(&self) -> usize {
        self.zero.n()
    }

    pub fn part(&self, sign: Sign) -> &Hypergraph {
        match sign {
            Sign::Minus => &self.minus,
            Sign::Zero => &self.zero,
            Sign::Plus => &self.plus,
        }
    }

    pub fn sign_of(&self, t: &Triple) -> Option<Sign> {
        [Sign::Minus, Sign::Zero, Sign::Plus]
            .into_iter()
            .find(|&s| self.part(s).contains(t))
    }

    /// `(|S₋|, |S₀|, |S₊|)`.
    pub fn sizes(&self) -> (usize, usize, usize) {
        (self.minus.len(), self.zero.len(), self.plus.len())
    }
}

pub fn sign_partition(w: &WeightVector) -> Result<SignPartition> {
    let n = w.len();
    let (mut minus, mut zero, mut plus) = (Vec::new(), Vec::new(), Vec::new());
    for t in enumerate_triples(n) {
        match Sign::of(weighted_value(w, &t)?) {
            Sign::Minus => minus.push(t),
            Sign::Zero => zero.push(t),
            Sign::Plus => plus.push(t),
        }
    }
    Ok(SignPartition {
        minus: Hypergraph::from_sorted_unchecked(n, minus),
        zero: Hypergraph::from_sorted_unchecked(n, zero),
        plus: Hypergraph::from_sorted_unchecked(n, plus),
    })
}

/// Why a claimed certificate fails to realize a degree sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateDefect {
    OutOfRange { position: usize },
    Duplicate { position: usize },
    OutOfOrder { position: usize },
    DegreeMismatch { vertex: usize, expected: i64, actual: i64 },
    Overflow,
}

impl CertificateDefect {
    /// Short machine-readable tag.
    pub fn code(&self) -> &'static str {
        match self {
            CertificateDefect::OutOfRange { .. } => "out_of_range",
            CertificateDefect::Duplicate { .. } => "duplicate_edge",
            CertificateDefect::OutOfOrder { .. } => "unsorted_edges",
            CertificateDefect::DegreeMismatch { .. } => "degree_mismatch",
            CertificateDefect::Overflow => "overflow",
        }
    }
}

impl fmt::Display for CertificateDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateDefect::OutOfRange { position } => {
                write!(f, "edge {position} leaves the ground set")
            }
            CertificateDefect::Duplicate { position } => {
                write!(f, "edge {position} repeats the previous edge")
            }
            CertificateDefect::OutOfOrder { position } => {
                write!(f, "edge {position} breaks lexicographic order")
            }
            CertificateDefect::DegreeMismatch {
                vertex,
                expected,
                actual,
            } => write!(f, "vertex {vertex} has degree {actual}, expected {expected}"),
            CertificateDefect::Overflow => write!(f, "degree count overflowed"),
        }
    }
}

/// Checks that `edges` is a valid hypergraph on `[d.len()]` whose degree
/// sum is exactly `d`. Linear in `|edges| + n`.
pub fn check_certificate(edges: &[Triple], d: &DegreeSequence) -> std::result::Result<(), CertificateDefect> {
    let n = d.len();
    for (position, t) in edges.iter().enumerate() {
        if !t.fits(n) {
            return Err(CertificateDefect::OutOfRange { position });
        }
        if position > 0 {
            match edges[position - 1].cmp(t) {
                Ordering::Less => {}
                Ordering::Equal => {
                    return Err(CertificateDefect::Duplicate { position })
                }
                Ordering::Greater => return Err(CertificateDefect::OutOfOrder { position }),
            }
        }
    }
    let actual = degree_sum_of(n, edges).map_err(|_| CertificateDefect::Overflow)?;
    for (vertex, (&a, &e)) in actual.as_slice().iter().zip(d.as_slice()).enumerate() {
        if a != e {
            return Err(CertificateDefect::DegreeMismatch {
                vertex,
                expected: e,
                actual: a,
            });
        }
    }
    Ok(())
}

pub fn verify_certificate(edges: &[Triple], d: &DegreeSequence) -> bool {
    check_certificate(edges, d).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: usize, j: usize, k: usize) -> Triple {
        Triple::new(i, j, k).unwrap()
    }

    fn ds(v: &[i64]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_triples(3), vec![t(0, 1, 2)]);
        assert!(enumerate_triples(2).is_empty());
        assert!(enumerate_triples(0).is_empty());
        let five = enumerate_triples(5);
        assert_eq!(five.len(), 10);
        assert_eq!(five[0], t(0, 1, 2));
        assert_eq!(five[9], t(2, 3, 4));
    }

    #[test]
    fn enumerate_matches_binomial() {
        for n in 0..=12 {
            let all = enumerate_triples(n);
            assert_eq!(all.len() as u64, triple_count(n).unwrap());
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn triple_rejects_bad_order() {
        assert!(Triple::new(0, 0, 1).is_err());
        assert!(Triple::new(2, 1, 3).is_err());
        assert_eq!(Triple::from_unordered([4, 0, 2]).unwrap(), t(0, 2, 4));
        assert_eq!(t(1, 2, 4).incidence(5), vec![0, 1, 1, 0, 1]);
    }

    #[test]
    fn degree_sum_examples() {
        let h = Hypergraph::new(3, vec![t(0, 1, 2)]).unwrap();
        assert_eq!(degree_sum(&h).unwrap(), ds(&[1, 1, 1]));
        assert_eq!(degree_sum(&Hypergraph::empty(4)).unwrap(), ds(&[0; 4]));
        let h = Hypergraph::new(6, vec![t(0, 1, 2), t(0, 1, 3), t(2, 4, 5)]).unwrap();
        assert_eq!(degree_sum(&h).unwrap(), ds(&[2, 2, 2, 1, 1, 1]));
    }

    #[test]
    fn hypergraph_validation() {
        assert!(matches!(
            Hypergraph::new(3, vec![t(0, 1, 3)]),
            Err(Error::TripleOutOfRange { .. })
        ));
        assert_eq!(
            Hypergraph::new(4, vec![t(0, 1, 3), t(0, 1, 2)]),
            Err(Error::UnorderedEdges(1))
        );
        assert_eq!(
            Hypergraph::from_unsorted(4, vec![t(0, 1, 2), t(0, 1, 2)]),
            Err(Error::UnorderedEdges(1))
        );
        let h = Hypergraph::from_unsorted(4, vec![t(1, 2, 3), t(0, 1, 2)]).unwrap();
        assert_eq!(h.edges(), &[t(0, 1, 2), t(1, 2, 3)]);
    }

    #[test]
    fn union_and_intersection() {
        let a = Hypergraph::new(5, vec![t(0, 1, 2), t(1, 2, 3)]).unwrap();
        let b = Hypergraph::new(5, vec![t(0, 1, 2), t(2, 3, 4)]).unwrap();
        assert_eq!(
            a.union(&b).unwrap().edges(),
            &[t(0, 1, 2), t(1, 2, 3), t(2, 3, 4)]
        );
        assert_eq!(a.intersection(&b).unwrap().edges(), &[t(0, 1, 2)]);
        assert!(matches!(
            a.union(&Hypergraph::empty(4)),
            Err(Error::GroundSetMismatch { .. })
        ));
    }

    #[test]
    fn weighted_value_examples() {
        let w = WeightVector::new(vec![-1, -1, -1, 3]);
        assert_eq!(weighted_value(&w, &t(0, 1, 2)).unwrap(), -3);
        assert_eq!(weighted_value(&w, &t(1, 2, 3)).unwrap(), 1);
        let z = WeightVector::new(vec![0, 0, 0]);
        assert_eq!(weighted_value(&z, &t(0, 1, 2)).unwrap(), 0);
        assert!(weighted_value(&z, &t(0, 1, 3)).is_err());
    }

    #[test]
    fn weighted_value_overflow() {
        let w = WeightVector::new(vec![i64::MAX, 1, 0]);
        assert_eq!(
            weighted_value(&w, &t(0, 1, 2)),
            Err(Error::Overflow("weighted value"))
        );
        let w = WeightVector::new(vec![i64::MIN, -1, 0]);
        assert!(weighted_value(&w, &t(0, 1, 2)).is_err());
        assert!(sign_partition(&WeightVector::new(vec![i64::MAX, i64::MAX, 0])).is_err());
    }

    #[test]
    fn dot_and_totals_overflow() {
        let w = WeightVector::new(vec![i64::MAX, i64::MAX]);
        assert!(w.dot(&ds(&[1, 1])).is_err());
        assert!(w.dot(&ds(&[1])).is_err());
        assert!(ds(&[i64::MAX, 1]).total().is_err());
        assert!(ds(&[i64::MAX]).checked_add(&ds(&[1])).is_err());
    }

    #[test]
    fn sign_partition_examples() {
        let sp = sign_partition(&WeightVector::new(vec![-1, -1, -1, 3])).unwrap();
        assert_eq!(sp.minus().edges(), &[t(0, 1, 2)]);
        assert!(sp.zero().is_empty());
        assert_eq!(sp.plus().edges(), &[t(0, 1, 3), t(0, 2, 3), t(1, 2, 3)]);

        let sp = sign_partition(&WeightVector::new(vec![0; 4])).unwrap();
        assert_eq!(sp.sizes(), (0, 4, 0));
    }

    #[test]
    fn sign_partition_zero_part_by_exhaustion() {
        let w = [1i64, 1, 1, -3, 0];
        let sp = sign_partition(&WeightVector::new(w.to_vec())).unwrap();
        // Independent evaluation via incidence vectors.
        let mut expected = Vec::new();
        for t in enumerate_triples(5) {
            let x = t.incidence(5);
            let wx: i64 = w.iter().zip(&x).map(|(a, &b)| a * i64::from(b)).sum();
            if wx == 0 {
                expected.push(t);
            }
        }
        assert_eq!(sp.zero().edges(), expected.as_slice());
        // Values are 3, 2, -1 or -2: nothing vanishes.
        assert!(sp.zero().is_empty());
        let (a, b, c) = sp.sizes();
        assert_eq!(a + b + c, 10);
    }

    #[test]
    fn certificate_examples() {
        assert!(verify_certificate(&[t(0, 1, 2)], &ds(&[1, 1, 1])));
        assert_eq!(
            check_certificate(&[t(0, 1, 2)], &ds(&[1, 1, 0])),
            Err(CertificateDefect::DegreeMismatch {
                vertex: 2,
                expected: 0,
                actual: 1
            })
        );
        let dup = check_certificate(&[t(0, 1, 2), t(0, 1, 2)], &ds(&[2, 2, 2])).unwrap_err();
        assert_eq!(dup.code(), "duplicate_edge");
        let oob = check_certificate(&[t(0, 1, 3)], &ds(&[1, 1, 1])).unwrap_err();
        assert_eq!(oob.code(), "out_of_range");
        let order = check_certificate(&[t(0, 1, 3), t(0, 1, 2)], &ds(&[2, 2, 1, 1])).unwrap_err();
        assert_eq!(order.code(), "unsorted_edges");
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 3), Some(10));
        assert_eq!(binomial(2, 3), Some(0));
        assert_eq!(binomial(8, 2), Some(28));
        assert_eq!(binomial(200, 100), None);
    }
}
