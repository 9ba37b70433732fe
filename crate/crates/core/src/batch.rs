//! Data-parallel batch evaluation.
//!
//! Every library call is a pure function, so batches of instances (and
//! oracle sweeps over exhaustive grids) split freely across threads. With the
//! `parallel` feature (on by default) [`Execution::Parallel`] runs on the
//! rayon global pool; without it, it falls back to the sequential path.
//! Results always come back in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Result;
use crate::graph::{eg_check, graph_bruteforce, hh_realize};
use crate::hypergraph::DegreeSequence;
use crate::solver::{bruteforce_degseq, decide_degseq, Budget, DecisionOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether `Parallel` actually runs on multiple threads in this build.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

/// `items.iter().map(f)`, possibly in parallel.
pub fn map<T, U, F>(exec: Execution, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

/// `(0..count).filter_map(f)`, possibly in parallel.
pub fn filter_map_range<U, F>(exec: Execution, count: u64, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(u64) -> Option<U> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..count).into_par_iter().filter_map(f).collect(),
        _ => (0..count).filter_map(f).collect(),
    }
}

pub fn decide_all(
    exec: Execution,
    sequences: &[DegreeSequence],
    budget: Budget,
) -> Vec<Result<DecisionOutcome>> {
    map(exec, sequences, |d| decide_degseq(d, budget))
}

pub fn bruteforce_all(exec: Execution, sequences: &[DegreeSequence]) -> Vec<Result<bool>> {
    map(exec, sequences, bruteforce_degseq)
}

/// The `index`-th vector of `{0..base−1}^len` in lexicographic order.
pub fn grid_point(index: u64, base: u64, len: usize) -> Vec<i64> {
    let mut out = vec![0i64; len];
    let mut rest = index;
    for slot in out.iter_mut().rev() {
        *slot = (rest % base) as i64;
        rest /= base;
    }
    out
}

/// Outcome of an exhaustive k = 2 sweep over `{0..n−1}^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSweep {
    pub n: usize,
    pub checked: u64,
    pub graphical: u64,
    /// Sequences on which the compared deciders disagreed.
    pub disagreements: Vec<Vec<i64>>,
}

/// Compares `eg_check` with `hh_realize` (and, when `with_bruteforce`, with
/// `graph_bruteforce`) on every `d ∈ {0..n−1}^n`. A Havel–Hakimi result only
/// counts as agreeing if its degree vector equals `d`.
pub fn graph_sweep(exec: Execution, n: usize, with_bruteforce: bool) -> Result<GraphSweep> {
    let base = n.max(1) as u64;
    let count = base.pow(n as u32);
    let rows = filter_map_range(exec, count, |index| {
        let raw = grid_point(index, base, n);
        let d = DegreeSequence::new(raw.clone()).expect("grid entries are nonnegative");
        let eg = eg_check(&d);
        let hh = match hh_realize(&d) {
            Some(g) => {
                if g.degrees() != raw {
                    return Some(Err(raw));
                }
                true
            }
            None => false,
        };
        let agree = eg == hh
            && (!with_bruteforce
                || graph_bruteforce(&d).expect("n is within the brute-force limit") == eg);
        Some(if agree { Ok(eg) } else { Err(raw) })
    });
    let mut sweep = GraphSweep {
        n,
        checked: 0,
        graphical: 0,
        disagreements: Vec::new(),
    };
    for row in rows {
        sweep.checked += 1;
        match row {
            Ok(true) => sweep.graphical += 1,
            Ok(false) => {}
            Err(d) => sweep.disagreements.push(d),
        }
    }
    Ok(sweep)
}
