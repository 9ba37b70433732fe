//! Exact deciders for the three triple problems.
//!
//! All three deciders share one engine: a depth-first include/exclude search
//! over a candidate list of triples in lexicographic order, looking for a
//! subset whose degree sum equals a target vector. Only the candidate list
//! and target differ:
//!
//! | problem          | candidates          | target |
//! |------------------|---------------------|--------|
//! | degree sequence  | all triples         | `d`    |
//! | zero weight      | `S₀`                | `c`    |
//! | 3-partition      | `{x : a·x = b}`     | `1`    |
//!
//! The brute-force oracles at the bottom of this module share no code with
//! the engine.

use std::collections::HashSet;
use std::fmt;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::hypergraph::{
    binomial, check_certificate, enumerate_triples, sign_partition, triple_count,
    weighted_value, DegreeSequence, Hypergraph, Triple,
};
use crate::reduction::{ThreePartitionInstance, ZeroWeightInstance};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Oracles enumerate at most `2^20` subsets.
pub const BRUTEFORCE_MAX_TRIPLES: usize = 20;
pub const BRUTEFORCE_DEGSEQ_MAX_N: usize = 6;
pub const BRUTEFORCE_PARTITION_MAX_N: usize = 12;

/// Refuse to materialize candidate lists beyond this many triples.
const MAX_CANDIDATES: u64 = 50_000_000;

/// Node-expansion limit for one search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl Answer {
    pub fn as_str(&self) -> &'static str {
        match self {
            Answer::Yes => "YES",
            Answer::No => "NO",
            Answer::Unknown => "UNKNOWN",
        }
    }
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchStats {
    pub nodes: u64,
    pub millis: u64,
    /// `nodes / budget`, capped at 1.
    pub budget_used: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecisionOutcome {
    pub answer: Answer,
    pub certificate: Option<Hypergraph>,
    pub stats: SearchStats,
}

impl DecisionOutcome {
    fn finish(search: Search, n: usize, budget: Budget, started: Instant) -> Self {
        let (answer, certificate) = match search.result {
            SearchResult::Found(mut edges) => {
                edges.sort_unstable();
                (
                    Answer::Yes,
                    Some(Hypergraph::from_sorted_unchecked(n, edges)),
                )
            }
            SearchResult::Exhausted => (Answer::No, None),
            SearchResult::OutOfBudget => (Answer::Unknown, None),
        };
        let budget_used = if budget.0 == 0 {
            1.0
        } else {
            (search.nodes as f64 / budget.0 as f64).min(1.0)
        };
        DecisionOutcome {
            answer,
            certificate,
            stats: SearchStats {
                nodes: search.nodes,
                millis: started.elapsed().as_millis() as u64,
                budget_used,
            },
        }
    }

    fn rejected(started: Instant) -> Self {
        DecisionOutcome {
            answer: Answer::No,
            certificate: None,
            stats: SearchStats {
                nodes: 0,
                millis: started.elapsed().as_millis() as u64,
                budget_used: 0.0,
            },
        }
    }
}

/// A necessary condition on `d = ΣH` that failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrefilterReason {
    SumNotDivisibleByThree { sum: i128 },
    DegreeExceedsPairs { vertex: usize, degree: i64, max: u64 },
    TooManyEdges { edges: i128, max: u64 },
    DegreeExceedsEdgeCount { vertex: usize, degree: i64, edges: i128 },
}

impl fmt::Display for PrefilterReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrefilterReason::SumNotDivisibleByThree { sum } => {
                write!(f, "degree total {sum} is not divisible by 3")
            }
            PrefilterReason::DegreeExceedsPairs { vertex, degree, max } => write!(
                f,
                "vertex {vertex} has degree {degree} but lies in only {max} triples"
            ),
            PrefilterReason::TooManyEdges { edges, max } => {
                write!(f, "{edges} edges needed but only {max} triples exist")
            }
            PrefilterReason::DegreeExceedsEdgeCount {
                vertex,
                degree,
                edges,
            } => write!(
                f,
                "vertex {vertex} has degree {degree} but there are only {edges} edges"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Prefilter {
    Pass,
    No(PrefilterReason),
}

/// Cheap necessary conditions for `d` to be a 3-hypergraph degree sequence.
/// `Pass` does not imply realizability.
pub fn prefilter_degseq(d: &DegreeSequence) -> Prefilter {
    let n = d.len();
    let sum: i128 = d.as_slice().iter().map(|&v| i128::from(v)).sum();
    if sum % 3 != 0 {
        return Prefilter::No(PrefilterReason::SumNotDivisibleByThree { sum });
    }
    let pair_max = binomial(n.saturating_sub(1) as u64, 2).unwrap_or(u64::MAX);
    for (vertex, &degree) in d.as_slice().iter().enumerate() {
        if degree as u64 > pair_max {
            return Prefilter::No(PrefilterReason::DegreeExceedsPairs {
                vertex,
                degree,
                max: pair_max,
            });
        }
    }
    let edges = sum / 3;
    let triple_max = triple_count(n).unwrap_or(u64::MAX);
    if edges > i128::from(triple_max) {
        return Prefilter::No(PrefilterReason::TooManyEdges {
            edges,
            max: triple_max,
        });
    }
    for (vertex, &degree) in d.as_slice().iter().enumerate() {
        if i128::from(degree) > edges {
            return Prefilter::No(PrefilterReason::DegreeExceedsEdgeCount {
                vertex,
                degree,
                edges,
            });
        }
    }
    Prefilter::Pass
}

/// Decides whether `d` is the degree sequence of a 3-hypergraph.
pub fn decide_degseq(d: &DegreeSequence, budget: Budget) -> Result<DecisionOutcome> {
    let started = Instant::now();
    d.total()?;
    if let Prefilter::No(_) = prefilter_degseq(d) {
        return Ok(DecisionOutcome::rejected(started));
    }
    let n = d.len();
    let support: Vec<usize> = (0..n).filter(|&v| d.as_slice()[v] > 0).collect();
    guard_candidates(support.len())?;
    let on_support = enumerate_triples(support.len())
        .into_iter()
        .map(|t| {
            let [i, j, k] = t.indices();
            Triple::new(support[i], support[j], support[k]).expect("support is increasing")
        })
        .collect();
    let candidates = search_order(d.as_slice(), on_support);
    let search = Search::run(n, &candidates, d.as_slice(), budget);
    let outcome = DecisionOutcome::finish(search, n, budget, started);
    debug_assert!(outcome
        .certificate
        .as_ref()
        .is_none_or(|h| check_certificate(h.edges(), d).is_ok()));
    Ok(outcome)
}

/// Decides whether some `G ⊆ S₀` has degree sum `c`.
pub fn decide_zero(inst: &ZeroWeightInstance, budget: Budget) -> Result<DecisionOutcome> {
    let started = Instant::now();
    let n = inst.n();
    guard_candidates(n)?;
    let c = inst.c().as_slice();
    let partition = sign_partition(inst.w())?;
    let candidates = search_order(c, partition.zero().edges().to_vec());
    let search = Search::run(n, &candidates, c, budget);
    Ok(DecisionOutcome::finish(search, n, budget, started))
}

/// Decides whether `[n]` splits into triples of `a`-value `b`.
pub fn decide_partition(inst: &ThreePartitionInstance, budget: Budget) -> Result<DecisionOutcome> {
    let started = Instant::now();
    let n = inst.n();
    if !n.is_multiple_of(3) {
        return Ok(DecisionOutcome::rejected(started));
    }
    guard_candidates(n)?;
    let mut candidates = Vec::new();
    for t in enumerate_triples(n) {
        if inst.value(&t)? == inst.b() {
            candidates.push(t);
        }
    }
    let target = vec![1i64; n];
    let candidates = search_order(&target, candidates);
    let search = Search::run(n, &candidates, &target, budget);
    Ok(DecisionOutcome::finish(search, n, budget, started))
}

/// Drops candidates touching a zero-target vertex and orders the rest
/// lexicographically after relabeling vertices by descending target
/// (ties by index), so include-first tries high-demand vertices together.
fn search_order(target: &[i64], candidates: Vec<Triple>) -> Vec<Triple> {
    let mut by_demand: Vec<usize> = (0..target.len()).collect();
    by_demand.sort_by(|&a, &b| target[b].cmp(&target[a]).then(a.cmp(&b)));
    let mut rank = vec![0usize; target.len()];
    for (r, &v) in by_demand.iter().enumerate() {
        rank[v] = r;
    }
    let mut keyed: Vec<([usize; 3], Triple)> = candidates
        .into_iter()
        .filter(|t| t.indices().iter().all(|&v| target[v] > 0))
        .map(|t| {
            let mut key = t.indices().map(|v| rank[v]);
            key.sort_unstable();
            (key, t)
        })
        .collect();
    keyed.sort_unstable_by_key(|(key, _)| *key);
    keyed.into_iter().map(|(_, t)| t).collect()
}

fn guard_candidates(n: usize) -> Result<()> {
    match triple_count(n) {
        Some(c) if c <= MAX_CANDIDATES => Ok(()),
        _ => Err(Error::TooLarge {
            what: "exact search",
            detail: format!("C({n}, 3) candidate triples exceeds {MAX_CANDIDATES}"),
        }),
    }
}

enum SearchResult {
    Found(Vec<Triple>),
    Exhausted,
    OutOfBudget,
}

struct Search {
    result: SearchResult,
    nodes: u64,
}

/// Failed states remembered per search; insertion stops once full.
const NOGOOD_CAPACITY: usize = 1 << 20;

/// Mutable state of one include/exclude search.
struct Engine<'a> {
    n: usize,
    candidates: &'a [Triple],
    residual: Vec<i64>,
    residual_sum: i64,
    /// Undecided candidates containing `v`.
    avail: Vec<i64>,
    /// Undecided candidates containing both `u` and `v` (row-major, symmetric).
    pair_avail: Vec<i64>,
    /// `decisions[p]` records whether `candidates[p]` was included.
    decisions: Vec<bool>,
    nogoods: HashSet<(usize, Vec<i64>)>,
}

impl<'a> Engine<'a> {
    fn new(n: usize, candidates: &'a [Triple], target: &[i64]) -> Self {
        let mut avail = vec![0i64; n];
        let mut pair_avail = vec![0i64; n * n];
        for t in candidates {
            let [i, j, k] = t.indices();
            for v in [i, j, k] {
                avail[v] += 1;
            }
            for (u, v) in [(i, j), (i, k), (j, k)] {
                pair_avail[u * n + v] += 1;
                pair_avail[v * n + u] += 1;
            }
        }
        Engine {
            n,
            candidates,
            residual: target.to_vec(),
            residual_sum: target.iter().sum(),
            avail,
            pair_avail,
            decisions: Vec::with_capacity(candidates.len()),
            nogoods: HashSet::new(),
        }
    }

    fn mark_decided(&mut self, t: &Triple, delta: i64) {
        let n = self.n;
        let [i, j, k] = t.indices();
        for v in [i, j, k] {
            self.avail[v] += delta;
        }
        for (u, v) in [(i, j), (i, k), (j, k)] {
            self.pair_avail[u * n + v] += delta;
            self.pair_avail[v * n + u] += delta;
        }
    }

    /// Necessary conditions on the residual degrees `r` for some subset of
    /// the undecided candidates to complete the search:
    /// `Σr` divisible by 3; the `Σr/3` edges still needed fit among the
    /// undecided candidates; every `r_v` is at most `Σr/3` and at most the
    /// number of undecided candidates through `v`; and the triples through
    /// `v` can supply `2·r_v` partner slots, counting each partner `u` at
    /// most `min(r_u, r_v, pairs(u, v))` times.
    fn feasible(&self) -> bool {
        if self.residual_sum % 3 != 0 {
            return false;
        }
        let edges_left = self.residual_sum / 3;
        let remaining = (self.candidates.len() - self.decisions.len()) as i64;
        if edges_left > remaining {
            return false;
        }
        let r = &self.residual;
        if !r
            .iter()
            .zip(&self.avail)
            .all(|(&rv, &a)| rv <= edges_left && rv <= a)
        {
            return false;
        }
        (0..self.n).filter(|&v| r[v] > 0).all(|v| {
            let row = &self.pair_avail[v * self.n..(v + 1) * self.n];
            let slots: i64 = (0..self.n)
                .filter(|&u| u != v)
                .map(|u| r[u].min(row[u]).min(r[v]))
                .sum();
            slots >= 2 * r[v]
        })
    }

    fn certificate(&self) -> Vec<Triple> {
        self.candidates
            .iter()
            .zip(&self.decisions)
            .filter(|(_, &inc)| inc)
            .map(|(t, _)| *t)
            .collect()
    }

    fn remember_failure(&mut self) {
        if self.nogoods.len() < NOGOOD_CAPACITY {
            self.nogoods
                .insert((self.decisions.len(), self.residual.clone()));
        }
    }

    fn known_failure(&self) -> bool {
        self.nogoods
            .contains(&(self.decisions.len(), self.residual.clone()))
    }

    /// Depth-first over `candidates` in order, include before exclude.
    /// Including a candidate that would drive some `r_v` negative is never
    /// attempted. A subtree depends only on the position and the residual
    /// vector, so failed `(position, residual)` pairs are cached and skipped.
    fn run(mut self, budget: Budget) -> Search {
        let mut nodes = 0u64;
        loop {
            nodes += 1;
            if nodes > budget.0 {
                return Search {
                    result: SearchResult::OutOfBudget,
                    nodes: budget.0,
                };
            }
            let pos = self.decisions.len();
            let descend = self.feasible() && !self.known_failure();
            if descend {
                if self.residual_sum == 0 {
                    return Search {
                        result: SearchResult::Found(self.certificate()),
                        nodes,
                    };
                }
                if pos < self.candidates.len() {
                    let t = self.candidates[pos];
                    self.mark_decided(&t, -1);
                    if t.indices().iter().all(|&v| self.residual[v] > 0) {
                        for v in t.indices() {
                            self.residual[v] -= 1;
                        }
                        self.residual_sum -= 3;
                        self.decisions.push(true);
                    } else {
                        self.decisions.push(false);
                    }
                    continue;
                }
            }

            // Backtrack to the deepest include that can be flipped to exclude.
            // Every exclude popped on the way closes a subtree with no solution.
            loop {
                let Some(included) = self.decisions.pop() else {
                    return Search {
                        result: SearchResult::Exhausted,
                        nodes,
                    };
                };
                let t = self.candidates[self.decisions.len()];
                if included {
                    for v in t.indices() {
                        self.residual[v] += 1;
                    }
                    self.residual_sum += 3;
                    self.decisions.push(false);
                    break;
                }
                self.mark_decided(&t, 1);
                self.remember_failure();
            }
        }
    }
}

impl Search {
    /// Runs the engine on the vertices with positive target only, which is
    /// where every candidate lives, then maps the certificate back.
    fn run(n: usize, candidates: &[Triple], target: &[i64], budget: Budget) -> Search {
        debug_assert_eq!(target.len(), n);
        let support: Vec<usize> = (0..n).filter(|&v| target[v] > 0).collect();
        let mut compact = vec![usize::MAX; n];
        for (c, &v) in support.iter().enumerate() {
            compact[v] = c;
        }
        let local: Vec<Triple> = candidates
            .iter()
            .map(|t| {
                let [i, j, k] = t.indices().map(|v| compact[v]);
                Triple::new(i, j, k).expect("compaction is monotone")
            })
            .collect();
        let local_target: Vec<i64> = support.iter().map(|&v| target[v]).collect();
        let mut search = Engine::new(support.len(), &local, &local_target).run(budget);
        if let SearchResult::Found(edges) = &mut search.result {
            for t in edges.iter_mut() {
                let [i, j, k] = t.indices().map(|c| support[c]);
                *t = Triple::new(i, j, k).expect("support is increasing");
            }
        }
        search
    }
}

/// Ground truth for the degree-sequence problem by enumerating all
/// `2^C(n,3)` hypergraphs, `n ≤ 6`.
pub fn bruteforce_degseq(d: &DegreeSequence) -> Result<bool> {
    let n = d.len();
    if n > BRUTEFORCE_DEGSEQ_MAX_N {
        return Err(Error::TooLarge {
            what: "degree-sequence brute force",
            detail: format!("n = {n} exceeds {BRUTEFORCE_DEGSEQ_MAX_N}"),
        });
    }
    Ok(subset_realizes(&enumerate_triples(n), d.as_slice()))
}

/// Ground truth for the zero-weight problem; requires `|S₀| ≤ 20`.
pub fn bruteforce_zero(inst: &ZeroWeightInstance) -> Result<bool> {
    let n = inst.n();
    let w = inst.w();
    let mut zero_set = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let t = Triple::new(i, j, k)?;
                if weighted_value(w, &t)? == 0 {
                    zero_set.push(t);
                    if zero_set.len() > BRUTEFORCE_MAX_TRIPLES {
                        return Err(Error::TooLarge {
                            what: "zero-weight brute force",
                            detail: format!("|S₀| exceeds {BRUTEFORCE_MAX_TRIPLES}"),
                        });
                    }
                }
            }
        }
    }
    Ok(subset_realizes(&zero_set, inst.c().as_slice()))
}

/// Gray-code walk over all subsets of `triples`, tracking how many
/// vertices currently miss their target degree.
fn subset_realizes(triples: &[Triple], target: &[i64]) -> bool {
    debug_assert!(triples.len() <= BRUTEFORCE_MAX_TRIPLES);
    let mut deg = vec![0i64; target.len()];
    let mut mismatched = target.iter().filter(|&&t| t != 0).count();
    if mismatched == 0 {
        return true;
    }
    let mut present = vec![false; triples.len()];
    for step in 1u64..(1u64 << triples.len()) {
        let slot = step.trailing_zeros() as usize;
        let delta = if present[slot] { -1 } else { 1 };
        present[slot] = !present[slot];
        for v in triples[slot].indices() {
            let was = deg[v] == target[v];
            deg[v] += delta;
            let is = deg[v] == target[v];
            if was && !is {
                mismatched += 1;
            } else if !was && is {
                mismatched -= 1;
            }
        }
        if mismatched == 0 {
            return true;
        }
    }
    false
}

/// Ground truth for 3-partition by trying every perfect split of `[n]`
/// into triples, `n ≤ 12`. Returns `false` when `3 ∤ n`.
pub fn bruteforce_partition(inst: &ThreePartitionInstance) -> Result<bool> {
    let n = inst.n();
    if n > BRUTEFORCE_PARTITION_MAX_N {
        return Err(Error::TooLarge {
            what: "3-partition brute force",
            detail: format!("n = {n} exceeds {BRUTEFORCE_PARTITION_MAX_N}"),
        });
    }
    if !n.is_multiple_of(3) {
        return Ok(false);
    }
    let a: Vec<i128> = inst.a().iter().map(|&v| i128::from(v)).collect();
    let mut used = vec![false; n];
    Ok(split_into_triples(&a, i128::from(inst.b()), &mut used))
}

fn split_into_triples(a: &[i128], b: i128, used: &mut [bool]) -> bool {
    let Some(first) = used.iter().position(|&u| !u) else {
        return true;
    };
    used[first] = true;
    for second in first + 1..a.len() {
        if used[second] {
            continue;
        }
        used[second] = true;
        for third in second + 1..a.len() {
            if used[third] || a[first] + a[second] + a[third] != b {
                continue;
            }
            used[third] = true;
            if split_into_triples(a, b, used) {
                return true;
            }
            used[third] = false;
        }
        used[second] = false;
    }
    used[first] = false;
    false
}
