//! Realizability workbench for degree sequences of graphs and 3-uniform
//! hypergraphs, together with the polynomial reductions from 3-partition
//! to hypergraph degree-sequence realizability and their certificate maps.

pub mod batch;
pub mod error;
pub mod graph;
pub mod hypergraph;
pub mod reduction;
pub mod solver;
pub mod workbench;

pub use error::{Error, Result};
pub use hypergraph::{
    check_certificate, degree_sum, enumerate_triples, sign_partition, verify_certificate,
    weighted_value, CertificateDefect, DegreeSequence, Hypergraph, Sign, SignPartition, Triple,
    WeightVector,
};
