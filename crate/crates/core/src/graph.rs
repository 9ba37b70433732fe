//! The k = 2 case: graphical degree sequences.
//!
//! [`eg_check`] evaluates the Erdős–Gallai inequalities in their two-index
//! `(j, l)` form. [`hh_realize`] (Havel–Hakimi) and [`graph_bruteforce`]
//! are independent oracles for it.

use crate::error::{Error, Result};
use crate::hypergraph::{CertificateDefect, DegreeSequence};

/// Largest ground set accepted by [`graph_bruteforce`].
pub const GRAPH_BRUTEFORCE_MAX_N: usize = 7;

/// A simple graph on `[n]` with edges `(i, j)`, `i < j`, strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (pos, &(i, j)) in edges.iter().enumerate() {
            if i >= j || j >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({i}, {j}) is not a valid pair on [{n}]"
                )));
            }
            if pos > 0 && edges[pos - 1] >= (i, j) {
                return Err(Error::UnorderedEdges(pos));
            }
        }
        Ok(Graph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<i64> {
        let mut d = vec![0i64; self.n];
        for &(i, j) in &self.edges {
            d[i] += 1;
            d[j] += 1;
        }
        d
    }
}

/// Erdős–Gallai test: the total is even and, with `d` sorted descending,
/// `Σ_{i≤j} d_i − Σ_{i>l} d_i ≤ j(l−1)` for every `1 ≤ j ≤ l ≤ n`.
pub fn eg_check(d: &DegreeSequence) -> bool {
    let mut sorted: Vec<i128> = d.as_slice().iter().map(|&v| i128::from(v)).collect();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let n = sorted.len();

    // prefix[t] = d_1 + ... + d_t (1-based).
    let mut prefix = vec![0i128; n + 1];
    for (t, v) in sorted.iter().enumerate() {
        prefix[t + 1] = prefix[t] + v;
    }
    if prefix[n] % 2 != 0 {
        return false;
    }
    for j in 1..=n {
        for l in j..=n {
            let head = prefix[j];
            let tail = prefix[n] - prefix[l];
            let bound = (j as i128) * (l as i128 - 1);
            if head - tail > bound {
                return false;
            }
        }
    }
    true
}

/// Havel–Hakimi construction. Repeatedly takes the vertex of largest
/// residual degree (lowest index on ties) and joins it to the next largest
/// residuals (again lowest index first). Returns `None` when `d` is not
/// graphical.
pub fn hh_realize(d: &DegreeSequence) -> Option<Graph> {
    let n = d.len();
    let mut residual: Vec<i64> = d.as_slice().to_vec();
    let mut edges = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    if n == 0 {
        return Some(Graph { n, edges });
    }

    loop {
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        let pivot = order[0];
        let need = residual[pivot];
        if need == 0 {
            break;
        }
        let partners = &order[1..];
        if need > partners.len() as i64 {
            return None;
        }
        residual[pivot] = 0;
        for &u in &partners[..need as usize] {
            if residual[u] == 0 {
                return None;
            }
            residual[u] -= 1;
            edges.push((pivot.min(u), pivot.max(u)));
        }
    }
    edges.sort_unstable();
    Some(Graph { n, edges })
}

/// Checks that `edges` is a simple graph on `[d.len()]` in canonical order
/// whose degree vector is exactly `d`.
pub fn check_graph_certificate(
    edges: &[(usize, usize)],
    d: &DegreeSequence,
) -> std::result::Result<(), CertificateDefect> {
    let n = d.len();
    let mut deg = vec![0i64; n];
    for (position, &(i, j)) in edges.iter().enumerate() {
        if i >= j || j >= n {
            return Err(CertificateDefect::OutOfRange { position });
        }
        if position > 0 {
            match edges[position - 1].cmp(&(i, j)) {
                std::cmp::Ordering::Less => {}
                std::cmp::Ordering::Equal => return Err(CertificateDefect::Duplicate { position }),
                std::cmp::Ordering::Greater => {
                    return Err(CertificateDefect::OutOfOrder { position })
                }
            }
        }
        deg[i] += 1;
        deg[j] += 1;
    }
    for (vertex, (&actual, &expected)) in deg.iter().zip(d.as_slice()).enumerate() {
        if actual != expected {
            return Err(CertificateDefect::DegreeMismatch {
                vertex,
                expected,
                actual,
            });
        }
    }
    Ok(())
}

/// Exhaustive search over all `2^C(n,2)` simple graphs on `[n]`, `n ≤ 7`.
pub fn graph_bruteforce(d: &DegreeSequence) -> Result<bool> {
    let n = d.len();
    if n > GRAPH_BRUTEFORCE_MAX_N {
        return Err(Error::TooLarge {
            what: "graph brute force",
            detail: format!("n = {n} exceeds {GRAPH_BRUTEFORCE_MAX_N}"),
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let target = d.as_slice();
    let mut deg = vec![0i64; n];
    let mut mismatched = target.iter().filter(|&&t| t != 0).count();
    if mismatched == 0 {
        return Ok(true);
    }

    // Gray-code walk: step s flips the pair at the index of s's lowest set bit.
    let mut present = vec![false; pairs.len()];
    for step in 1u64..(1u64 << pairs.len()) {
        let slot = step.trailing_zeros() as usize;
        let delta = if present[slot] { -1 } else { 1 };
        present[slot] = !present[slot];
        let (i, j) = pairs[slot];
        for v in [i, j] {
            let before = deg[v] == target[v];
            deg[v] += delta;
            let after = deg[v] == target[v];
            match (before, after) {
                (true, false) => mismatched += 1,
                (false, true) => mismatched -= 1,
                _ => {}
            }
        }
        if mismatched == 0 {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(v: &[i64]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn eg_examples() {
        assert!(eg_check(&ds(&[2, 2, 2])));
        assert!(!eg_check(&ds(&[2, 0])));
        assert!(!eg_check(&ds(&[3, 3, 1, 1])));
        assert!(!eg_check(&ds(&[1, 1, 1])));
        assert!(eg_check(&ds(&[])));
        assert!(eg_check(&ds(&[0])));
    }

    #[test]
    fn eg_huge_entries_do_not_overflow() {
        assert!(!eg_check(&ds(&[i64::MAX, i64::MAX])));
        assert!(!eg_check(&ds(&[i64::MAX, 1])));
    }

    #[test]
    fn hh_examples() {
        assert_eq!(hh_realize(&ds(&[1, 1])).unwrap().edges(), &[(0, 1)]);
        assert!(hh_realize(&ds(&[2, 0])).is_none());
        assert!(hh_realize(&ds(&[1, 1, 1])).is_none());
        let g = hh_realize(&ds(&[3, 3, 2, 2, 2])).unwrap();
        assert_eq!(g.degrees(), vec![3, 3, 2, 2, 2]);
        assert!(Graph::new(g.n(), g.edges().to_vec()).is_ok());
        assert!(hh_realize(&ds(&[i64::MAX, 1])).is_none());
        assert_eq!(hh_realize(&ds(&[])).unwrap().edges(), &[]);
    }

    #[test]
    fn hh_is_deterministic() {
        let d = ds(&[2, 2, 2, 2]);
        let g = hh_realize(&d).unwrap();
        // Pivot 0 takes 1 and 2; pivot 3 then takes 1 and 2.
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(hh_realize(&d), Some(g));
    }

    #[test]
    fn bruteforce_examples() {
        assert!(!graph_bruteforce(&ds(&[1, 1, 1])).unwrap());
        assert!(graph_bruteforce(&ds(&[2, 2, 2])).unwrap());
        assert!(!graph_bruteforce(&ds(&[3, 3, 1, 1])).unwrap());
        assert!(graph_bruteforce(&ds(&[0, 0])).unwrap());
        assert!(matches!(
            graph_bruteforce(&ds(&[0; 8])),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn graph_certificates() {
        let d = ds(&[1, 1, 0]);
        assert!(check_graph_certificate(&[(0, 1)], &d).is_ok());
        assert_eq!(
            check_graph_certificate(&[(0, 1), (0, 1)], &ds(&[2, 2])).unwrap_err().code(),
            "duplicate_edge"
        );
        assert_eq!(check_graph_certificate(&[(0, 3)], &d).unwrap_err().code(), "out_of_range");
        assert_eq!(
            check_graph_certificate(&[(0, 2)], &d).unwrap_err().code(),
            "degree_mismatch"
        );
    }

    #[test]
    fn graph_validation() {
        assert!(Graph::new(3, vec![(0, 1), (0, 1)]).is_err());
        assert!(Graph::new(3, vec![(1, 0)]).is_err());
        assert!(Graph::new(3, vec![(0, 3)]).is_err());
    }
}
