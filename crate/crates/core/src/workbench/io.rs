//! JSON wire formats.
//!
//! Canonical form is compact JSON (no insignificant whitespace) with keys
//! in the order shown below, followed by a single `\n`.
//!
//! ```text
//! {"problem":"degseq","k":3,"d":[1,1,1]}
//! {"problem":"zero_weight","w":[0,0,0],"c":[1,1,1]}
//! {"problem":"three_partition","a":[1,1,1],"b":3}
//! {"certificate":"hypergraph","edges":[[0,1,2]]}
//! {"certificate":"graph","edges":[[0,1]]}
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::{DegreeSequence, Hypergraph, Triple, WeightVector};
use crate::reduction::{DegSeqInstance, ThreePartitionInstance, ZeroWeightInstance};
use crate::solver::{Answer, DecisionOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "problem", deny_unknown_fields)]
enum InstanceDoc {
    #[serde(rename = "degseq")]
    DegSeq {
        #[serde(default = "three")]
        k: u32,
        d: Vec<i64>,
    },
    #[serde(rename = "zero_weight")]
    ZeroWeight { w: Vec<i64>, c: Vec<i64> },
    #[serde(rename = "three_partition")]
    ThreePartition { a: Vec<i64>, b: i64 },
}

fn three() -> u32 {
    3
}

/// A validated instance of one of the three problems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    DegSeq(DegSeqInstance),
    ZeroWeight(ZeroWeightInstance),
    ThreePartition(ThreePartitionInstance),
}

impl Instance {
    pub fn problem(&self) -> ProblemKind {
        match self {
            Instance::DegSeq(_) => ProblemKind::DegSeq,
            Instance::ZeroWeight(_) => ProblemKind::ZeroWeight,
            Instance::ThreePartition(_) => ProblemKind::ThreePartition,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Instance::DegSeq(i) => i.n(),
            Instance::ZeroWeight(i) => i.n(),
            Instance::ThreePartition(i) => i.n(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    DegSeq,
    ZeroWeight,
    ThreePartition,
}

impl ProblemKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ProblemKind::DegSeq => "degseq",
            ProblemKind::ZeroWeight => "zero_weight",
            ProblemKind::ThreePartition => "three_partition",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "degseq" => Some(ProblemKind::DegSeq),
            "zero_weight" => Some(ProblemKind::ZeroWeight),
            "three_partition" => Some(ProblemKind::ThreePartition),
            _ => None,
        }
    }
}

fn field_error(field: &str, err: Error) -> Error {
    Error::Format {
        field: field.to_string(),
        message: err.to_string(),
    }
}

fn syntax_error(err: serde_json::Error) -> Error {
    Error::Format {
        field: "document".into(),
        message: err.to_string(),
    }
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let doc: InstanceDoc = serde_json::from_str(text).map_err(syntax_error)?;
    match doc {
        InstanceDoc::DegSeq { k, d } => {
            let d = DegreeSequence::new(d).map_err(|e| field_error("d", e))?;
            let inst = DegSeqInstance::new(k, d).map_err(|e| field_error("k", e))?;
            Ok(Instance::DegSeq(inst))
        }
        InstanceDoc::ZeroWeight { w, c } => {
            let c = DegreeSequence::new(c).map_err(|e| match e {
                Error::NegativeEntry { index, value, .. } => Error::Format {
                    field: "c".into(),
                    message: format!("entry {index} is negative ({value})"),
                },
                other => field_error("c", other),
            })?;
            let inst = ZeroWeightInstance::new(WeightVector::new(w), c)
                .map_err(|e| field_error("w, c", e))?;
            Ok(Instance::ZeroWeight(inst))
        }
        InstanceDoc::ThreePartition { a, b } => {
            let field = match (a.iter().any(|&v| v < 0), b < 0) {
                (true, _) => "a",
                (false, true) => "b",
                _ => "a, b",
            };
            let inst = ThreePartitionInstance::new(a, b).map_err(|e| field_error(field, e))?;
            Ok(Instance::ThreePartition(inst))
        }
    }
}

fn to_doc(inst: &Instance) -> InstanceDoc {
    match inst {
        Instance::DegSeq(i) => InstanceDoc::DegSeq {
            k: i.k(),
            d: i.d().as_slice().to_vec(),
        },
        Instance::ZeroWeight(i) => InstanceDoc::ZeroWeight {
            w: i.w().as_slice().to_vec(),
            c: i.c().as_slice().to_vec(),
        },
        Instance::ThreePartition(i) => InstanceDoc::ThreePartition {
            a: i.a().to_vec(),
            b: i.b(),
        },
    }
}

/// The instance as a JSON value (for embedding in other documents).
pub fn instance_value(inst: &Instance) -> serde_json::Value {
    serde_json::to_value(to_doc(inst)).expect("instance documents always serialize")
}

/// Canonical text of an instance.
pub fn serialize_instance(inst: &Instance) -> String {
    let mut s = serde_json::to_string(&to_doc(inst)).expect("instance documents always serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "certificate", rename_all = "lowercase", deny_unknown_fields)]
enum CertificateDoc {
    Hypergraph { edges: Vec<[usize; 3]> },
    Graph { edges: Vec<[usize; 2]> },
}

/// A certificate as read from disk. Edge order is preserved so that
/// verification can report ordering and duplicate defects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Hypergraph(Vec<Triple>),
    Graph(Vec<(usize, usize)>),
}

pub fn parse_certificate(text: &str) -> Result<Certificate> {
    let doc: CertificateDoc = serde_json::from_str(text).map_err(syntax_error)?;
    match doc {
        CertificateDoc::Hypergraph { edges } => edges
            .iter()
            .enumerate()
            .map(|(pos, &[i, j, k])| {
                Triple::new(i, j, k).map_err(|e| field_error(&format!("edges[{pos}]"), e))
            })
            .collect::<Result<Vec<_>>>()
            .map(Certificate::Hypergraph),
        CertificateDoc::Graph { edges } => {
            if let Some(pos) = edges.iter().position(|&[i, j]| i >= j) {
                return Err(Error::Format {
                    field: format!("edges[{pos}]"),
                    message: "pair is not strictly increasing".into(),
                });
            }
            Ok(Certificate::Graph(
                edges.into_iter().map(|[i, j]| (i, j)).collect(),
            ))
        }
    }
}

fn certificate_doc(cert: &Certificate) -> CertificateDoc {
    match cert {
        Certificate::Hypergraph(edges) => CertificateDoc::Hypergraph {
            edges: edges.iter().map(Triple::indices).collect(),
        },
        Certificate::Graph(edges) => CertificateDoc::Graph {
            edges: edges.iter().map(|&(i, j)| [i, j]).collect(),
        },
    }
}

pub fn certificate_value(cert: &Certificate) -> serde_json::Value {
    serde_json::to_value(certificate_doc(cert)).expect("certificates always serialize")
}

pub fn serialize_certificate(cert: &Certificate) -> String {
    let mut s = serde_json::to_string(&certificate_doc(cert)).expect("certificates always serialize");
    s.push('\n');
    s
}

impl From<&Hypergraph> for Certificate {
    fn from(h: &Hypergraph) -> Self {
        Certificate::Hypergraph(h.edges().to_vec())
    }
}

impl From<&Graph> for Certificate {
    fn from(g: &Graph) -> Self {
        Certificate::Graph(g.edges().to_vec())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsDoc {
    pub nodes: u64,
    pub millis: u64,
}

/// `{"answer":…,"certificate":…|null,"stats":{"nodes":N,"millis":T}}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDoc {
    pub answer: String,
    pub certificate: Option<serde_json::Value>,
    pub stats: StatsDoc,
}

impl ResultDoc {
    pub fn new(answer: Answer, certificate: Option<&Certificate>, nodes: u64, millis: u64) -> Self {
        ResultDoc {
            answer: answer.as_str().to_string(),
            certificate: certificate.map(certificate_value),
            stats: StatsDoc { nodes, millis },
        }
    }

    pub fn from_outcome(outcome: &DecisionOutcome) -> Self {
        let cert = outcome.certificate.as_ref().map(Certificate::from);
        ResultDoc::new(
            outcome.answer,
            cert.as_ref(),
            outcome.stats.nodes,
            outcome.stats.millis,
        )
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("result documents always serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let i = parse_instance(r#"{"problem":"degseq","k":3,"d":[1,1,1]}"#).unwrap();
        match &i {
            Instance::DegSeq(d) => assert_eq!(d.d().as_slice(), &[1, 1, 1]),
            other => panic!("{other:?}"),
        }
        let i = parse_instance(r#"{"problem":"three_partition","a":[1,1,1],"b":3}"#).unwrap();
        assert_eq!(i.problem(), ProblemKind::ThreePartition);

        let err = parse_instance(r#"{"problem":"zero_weight","w":[1,-1],"c":[1,2]}"#).unwrap_err();
        match err {
            Error::Format { field, message } => {
                assert_eq!(field, "w, c");
                assert!(message.contains("-1"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn field_level_diagnostics() {
        let field = |text: &str| match parse_instance(text).unwrap_err() {
            Error::Format { field, .. } => field,
            other => panic!("{other:?}"),
        };
        assert_eq!(field(r#"{"problem":"degseq","k":3,"d":[1,-1]}"#), "d");
        assert_eq!(field(r#"{"problem":"degseq","k":5,"d":[1]}"#), "k");
        assert_eq!(field(r#"{"problem":"zero_weight","w":[0],"c":[-1]}"#), "c");
        assert_eq!(field(r#"{"problem":"three_partition","a":[1,-1,3],"b":1}"#), "a");
        assert_eq!(field(r#"{"problem":"three_partition","a":[1,1,1],"b":2}"#), "a, b");
        assert_eq!(field(r#"{"problem":"graph","d":[]}"#), "document");
        assert_eq!(field(r#"{"problem":"degseq","d":[1],"extra":1}"#), "document");
        assert_eq!(field("not json"), "document");
        assert_eq!(
            field(r#"{"problem":"degseq","d":[99999999999999999999]}"#),
            "document"
        );
    }

    #[test]
    fn k_defaults_to_three() {
        let i = parse_instance(r#"{"problem":"degseq","d":[1,1,1]}"#).unwrap();
        assert_eq!(
            serialize_instance(&i),
            "{\"problem\":\"degseq\",\"k\":3,\"d\":[1,1,1]}\n"
        );
    }

    #[test]
    fn canonical_text_is_byte_stable() {
        for text in [
            "{\"problem\":\"degseq\",\"k\":3,\"d\":[1,1,1]}\n",
            "{\"problem\":\"degseq\",\"k\":2,\"d\":[1,1]}\n",
            "{\"problem\":\"zero_weight\",\"w\":[-1,-1,-1,3],\"c\":[3,0,0,1]}\n",
            "{\"problem\":\"three_partition\",\"a\":[1,2,3,4,5,7],\"b\":11}\n",
        ] {
            assert_eq!(serialize_instance(&parse_instance(text).unwrap()), text);
        }
        for text in [
            "{\"certificate\":\"hypergraph\",\"edges\":[[0,1,2],[0,1,3]]}\n",
            "{\"certificate\":\"graph\",\"edges\":[[0,1]]}\n",
            "{\"certificate\":\"hypergraph\",\"edges\":[]}\n",
        ] {
            assert_eq!(serialize_certificate(&parse_certificate(text).unwrap()), text);
        }
    }

    #[test]
    fn certificate_parsing() {
        let c = parse_certificate(r#"{"certificate":"hypergraph","edges":[[0,1,2],[0,1,2]]}"#)
            .unwrap();
        // Duplicates survive parsing; verification reports them.
        assert!(matches!(c, Certificate::Hypergraph(ref e) if e.len() == 2));
        assert!(parse_certificate(r#"{"certificate":"hypergraph","edges":[[2,1,0]]}"#).is_err());
        assert!(parse_certificate(r#"{"certificate":"hypergraph","edges":[[0,1]]}"#).is_err());
        assert!(parse_certificate(r#"{"certificate":"graph","edges":[[1,1]]}"#).is_err());
    }

    #[test]
    fn result_document_shape() {
        let cert = Certificate::Hypergraph(vec![Triple::new(0, 1, 2).unwrap()]);
        let doc = ResultDoc::new(Answer::Yes, Some(&cert), 4, 0);
        assert_eq!(
            doc.to_json(),
            "{\"answer\":\"YES\",\"certificate\":{\"certificate\":\"hypergraph\",\"edges\":[[0,1,2]]},\"stats\":{\"nodes\":4,\"millis\":0}}\n"
        );
        let doc = ResultDoc::new(Answer::No, None, 0, 0);
        assert!(doc.to_json().contains("\"certificate\":null"));
    }
}
