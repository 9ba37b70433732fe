//! Certificate checks for each problem kind.

use std::fmt;

use crate::graph::check_graph_certificate;
use crate::hypergraph::{check_certificate, weighted_value, DegreeSequence, Triple};
use crate::workbench::io::{Certificate, Instance};

/// Why a certificate was refused, with a stable machine-readable `code`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub code: &'static str,
    pub message: String,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

fn reject(code: &'static str, message: String) -> Rejection {
    Rejection { code, message }
}

/// Checks `cert` against `inst`:
///
/// * degree sequence, k = 3: a hypergraph with degree sum `d`;
/// * degree sequence, k = 2: a simple graph with degree vector `d`;
/// * zero weight: a hypergraph inside `S₀` with degree sum `c`;
/// * 3-partition: a hypergraph whose triples all have value `b` and whose
///   degree sum is the all-ones vector.
pub fn verify_instance_certificate(inst: &Instance, cert: &Certificate) -> Result<(), Rejection> {
    match (inst, cert) {
        (Instance::DegSeq(i), Certificate::Hypergraph(edges)) if i.k() == 3 => {
            check_certificate(edges, i.d()).map_err(|d| reject(d.code(), d.to_string()))
        }
        (Instance::DegSeq(i), Certificate::Graph(edges)) if i.k() == 2 => {
            check_graph_certificate(edges, i.d()).map_err(|d| reject(d.code(), d.to_string()))
        }
        (Instance::ZeroWeight(i), Certificate::Hypergraph(edges)) => {
            check_certificate(edges, i.c()).map_err(|d| reject(d.code(), d.to_string()))?;
            require_each(edges, "outside_zero_set", |t| {
                weighted_value(i.w(), t).map(|v| v == 0).unwrap_or(false)
            })
        }
        (Instance::ThreePartition(i), Certificate::Hypergraph(edges)) => {
            check_certificate(edges, &DegreeSequence::ones(i.n()))
                .map_err(|d| reject(d.code(), d.to_string()))?;
            require_each(edges, "wrong_triple_value", |t| {
                i.value(t).map(|v| v == i.b()).unwrap_or(false)
            })
        }
        _ => Err(reject(
            "kind_mismatch",
            "certificate kind does not match the instance".into(),
        )),
    }
}

fn require_each(
    edges: &[Triple],
    code: &'static str,
    ok: impl Fn(&Triple) -> bool,
) -> Result<(), Rejection> {
    match edges.iter().position(|t| !ok(t)) {
        None => Ok(()),
        Some(position) => Err(reject(
            code,
            format!("edge {position} {} is not admissible", edges[position]),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::workbench::io::parse_instance;

    fn t(i: usize, j: usize, k: usize) -> Triple {
        Triple::new(i, j, k).unwrap()
    }

    #[test]
    fn per_problem_checks() {
        let p = parse_instance(r#"{"problem":"three_partition","a":[1,2,3,4,5,7],"b":11}"#).unwrap();
        let good = Certificate::Hypergraph(vec![t(0, 2, 5), t(1, 3, 4)]);
        assert!(verify_instance_certificate(&p, &good).is_ok());
        let wrong = Certificate::Hypergraph(vec![t(0, 1, 2), t(3, 4, 5)]);
        assert_eq!(
            verify_instance_certificate(&p, &wrong).unwrap_err().code,
            "wrong_triple_value"
        );
        let short = Certificate::Hypergraph(vec![t(0, 2, 5)]);
        assert_eq!(
            verify_instance_certificate(&p, &short).unwrap_err().code,
            "degree_mismatch"
        );

        let z = parse_instance(r#"{"problem":"zero_weight","w":[-1,-1,2,0],"c":[1,1,1,0]}"#).unwrap();
        assert!(verify_instance_certificate(&z, &Certificate::Hypergraph(vec![t(0, 1, 2)])).is_ok());
        let z2 = parse_instance(r#"{"problem":"zero_weight","w":[0,0,0,0],"c":[1,1,0,1]}"#).unwrap();
        assert!(verify_instance_certificate(&z2, &Certificate::Hypergraph(vec![t(0, 1, 3)])).is_ok());
        let z3 = parse_instance(r#"{"problem":"zero_weight","w":[1,0,0,-1],"c":[1,1,1,1]}"#).unwrap();
        assert_eq!(
            verify_instance_certificate(&z3, &Certificate::Hypergraph(vec![t(0, 1, 2)]))
                .unwrap_err()
                .code,
            "degree_mismatch"
        );

        let g = parse_instance(r#"{"problem":"degseq","k":2,"d":[1,1]}"#).unwrap();
        assert!(verify_instance_certificate(&g, &Certificate::Graph(vec![(0, 1)])).is_ok());
        assert_eq!(
            verify_instance_certificate(&g, &Certificate::Hypergraph(vec![])).unwrap_err().code,
            "kind_mismatch"
        );
    }

    #[test]
    fn zero_set_membership_is_checked() {
        // Weights of 012 and 013 are +1 and −1, so wᵀc = 0 with c their
        // degree sum, yet neither triple lies in S₀.
        let z = parse_instance(r#"{"problem":"zero_weight","w":[0,0,1,-1],"c":[2,2,1,1]}"#).unwrap();
        let cert = Certificate::Hypergraph(vec![t(0, 1, 2), t(0, 1, 3)]);
        let err = verify_instance_certificate(&z, &cert).unwrap_err();
        assert_eq!(err.code, "outside_zero_set");
        assert!(err.message.contains("edge 0"));
    }
}
