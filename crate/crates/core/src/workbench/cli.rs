//! `hypdeg` command line.
//!
//! Every command prints one JSON document on stdout; diagnostics go to
//! stderr. Exit codes: 0 = YES (or success), 1 = NO, 2 = usage or
//! validation error, 3 = UNKNOWN (budget exhausted).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::batch::{self, Execution};
use crate::error::{Error, Result};
use crate::graph::{eg_check, graph_bruteforce, hh_realize};
use crate::hypergraph::Hypergraph;
use crate::reduction::{
    lift_certificate, map_partition_certificate, reduce_partition_to_degseq,
    reduce_partition_to_zero, reduce_zero_to_degseq, DegSeqInstance,
};
use crate::solver::{
    bruteforce_degseq, bruteforce_partition, bruteforce_zero, decide_degseq, decide_partition,
    decide_zero, Answer, Budget, DEFAULT_BUDGET,
};
use crate::workbench::gen::{gen_partition, gen_planted_degseq, gen_planted_zero};
use crate::workbench::io::{
    certificate_value, instance_value, parse_certificate, parse_instance, serialize_certificate,
    serialize_instance, Certificate, Instance, ResultDoc,
};
use crate::workbench::verify::verify_instance_certificate;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hypdeg",
    version,
    about = "Degree-sequence realizability for graphs and 3-hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide an instance exactly (pruned search; k = 2 uses Erdős–Gallai).
    Decide(DecideArgs),
    /// Apply a forward reduction between problems.
    Reduce(ReduceArgs),
    /// Check a certificate against an instance.
    Verify(VerifyArgs),
    /// Exhaustive brute-force answer for small instances.
    Oracle(OracleArgs),
    /// Generate a seeded instance.
    Gen(GenArgs),
    /// Erdős–Gallai test, optionally with a Havel–Hakimi realization.
    GraphCheck(GraphCheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Problem {
    #[value(name = "degseq")]
    DegSeq,
    #[value(name = "zero_weight")]
    ZeroWeight,
    #[value(name = "three_partition")]
    ThreePartition,
}

#[derive(Debug, Args)]
struct DecideArgs {
    /// Instance file.
    #[arg(long, required_unless_present = "input_dir", conflicts_with = "input_dir")]
    input: Option<PathBuf>,
    /// Decide every `*.json` file in a directory.
    #[arg(long)]
    input_dir: Option<PathBuf>,
    /// Worker threads for `--input-dir` (0 = all cores).
    #[arg(long, default_value_t = 0, requires = "input_dir")]
    jobs: usize,
    /// Node-expansion budget.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Override the uniformity of a degree-sequence instance (2 or 3).
    #[arg(long)]
    k: Option<u32>,
    /// Also write the certificate (if any) to this file.
    #[arg(long, conflicts_with = "input_dir")]
    certificate_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ReduceArgs {
    #[arg(long, value_enum)]
    from: Problem,
    #[arg(long, value_enum)]
    to: Problem,
    #[arg(long)]
    input: PathBuf,
    /// Write the bare reduced instance here.
    #[arg(long)]
    output: Option<PathBuf>,
    /// A certificate for the source instance to carry forward.
    #[arg(long)]
    certificate: Option<PathBuf>,
    /// Write the carried certificate here.
    #[arg(long, requires = "certificate")]
    certificate_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long)]
    certificate: PathBuf,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    k: Option<u32>,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum, default_value = "three_partition")]
    problem: Problem,
    #[arg(long)]
    n: usize,
    /// Edge count for degree-sequence instances.
    #[arg(long)]
    m: Option<usize>,
    /// Largest value (3-partition) or weight magnitude (zero weight).
    #[arg(long, default_value_t = 8)]
    max_value: i64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Plant a 3-partition witness (degree-sequence and zero-weight
    /// instances are always planted).
    #[arg(long)]
    planted: bool,
    /// Write the planted witness here.
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GraphCheckArgs {
    #[arg(long)]
    input: PathBuf,
    /// Include a Havel–Hakimi realization in the output.
    #[arg(long)]
    realize: bool,
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_YES
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Decide(a) => decide(a),
        Command::Reduce(a) => reduce(a),
        Command::Verify(a) => verify(a),
        Command::Oracle(a) => oracle(a),
        Command::Gen(a) => gen(a),
        Command::GraphCheck(a) => graph_check(a),
    };
    match result {
        Ok((document, code)) => {
            if out.write_all(document.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

type Outcome = Result<(String, i32)>;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Format {
        field: path.display().to_string(),
        message: e.to_string(),
    })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Format {
        field: path.display().to_string(),
        message: e.to_string(),
    })
}

fn line(value: Value) -> String {
    let mut s = value.to_string();
    s.push('\n');
    s
}

fn exit_for(answer: Answer) -> i32 {
    match answer {
        Answer::Yes => EXIT_YES,
        Answer::No => EXIT_NO,
        Answer::Unknown => EXIT_UNKNOWN,
    }
}

fn with_k(inst: Instance, k: Option<u32>) -> Result<Instance> {
    match (inst, k) {
        (inst, None) => Ok(inst),
        (Instance::DegSeq(d), Some(k)) => Ok(Instance::DegSeq(DegSeqInstance::new(k, d.d().clone())?)),
        (_, Some(_)) => Err(Error::InvalidArgument(
            "--k only applies to degree-sequence instances".into(),
        )),
    }
}

/// Decides one instance; returns the result document and its certificate.
pub fn decide_instance(inst: &Instance, budget: Budget) -> Result<(ResultDoc, Option<Certificate>)> {
    let outcome = match inst {
        Instance::DegSeq(i) if i.k() == 2 => {
            let started = Instant::now();
            let graph = if eg_check(i.d()) { hh_realize(i.d()) } else { None };
            let cert = graph.as_ref().map(Certificate::from);
            let answer = if cert.is_some() { Answer::Yes } else { Answer::No };
            let millis = started.elapsed().as_millis() as u64;
            return Ok((ResultDoc::new(answer, cert.as_ref(), 0, millis), cert));
        }
        Instance::DegSeq(i) => decide_degseq(i.d(), budget)?,
        Instance::ZeroWeight(i) => decide_zero(i, budget)?,
        Instance::ThreePartition(i) => decide_partition(i, budget)?,
    };
    let cert = outcome.certificate.as_ref().map(Certificate::from);
    Ok((ResultDoc::from_outcome(&outcome), cert))
}

fn decide(a: DecideArgs) -> Outcome {
    let budget = Budget(a.budget);
    if let Some(dir) = a.input_dir {
        return decide_dir(&dir, a.jobs, budget, a.k);
    }
    let path = a.input.expect("clap requires --input or --input-dir");
    let inst = with_k(parse_instance(&read(&path)?)?, a.k)?;
    let (doc, cert) = decide_instance(&inst, budget)?;
    if let (Some(path), Some(cert)) = (&a.certificate_out, &cert) {
        write(path, &serialize_certificate(cert))?;
    }
    let code = exit_for(match doc.answer.as_str() {
        "YES" => Answer::Yes,
        "NO" => Answer::No,
        _ => Answer::Unknown,
    });
    Ok((doc.to_json(), code))
}

fn decide_dir(dir: &Path, jobs: usize, budget: Budget, k: Option<u32>) -> Outcome {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Error::Format {
            field: dir.display().to_string(),
            message: e.to_string(),
        })?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();

    let work = |path: &PathBuf| -> Value {
        let name = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        let decided = read(path)
            .and_then(|text| parse_instance(&text))
            .and_then(|inst| with_k(inst, k))
            .and_then(|inst| decide_instance(&inst, budget));
        match decided {
            Ok((doc, _)) => {
                let mut v = serde_json::to_value(doc).expect("result documents serialize");
                v["file"] = json!(name);
                v
            }
            Err(e) => json!({ "file": name, "error": e.to_string() }),
        }
    };
    let results = run_jobs(jobs, || batch::map(Execution::Parallel, &files, work))?;
    let failed = results.iter().any(|r| r.get("error").is_some());
    let code = if failed { EXIT_USAGE } else { EXIT_YES };
    Ok((line(json!({ "results": results })), code))
}

#[cfg(feature = "parallel")]
fn run_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> Result<R> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("--jobs: {e}")))?;
    Ok(pool.install(f))
}

#[cfg(not(feature = "parallel"))]
fn run_jobs<R: Send>(_jobs: usize, f: impl FnOnce() -> R + Send) -> Result<R> {
    Ok(f())
}

fn source_hypergraph(path: &Path, n: usize) -> Result<Hypergraph> {
    match parse_certificate(&read(path)?)? {
        Certificate::Hypergraph(edges) => Hypergraph::new(n, edges),
        Certificate::Graph(_) => Err(Error::InvalidArgument(
            "a hypergraph certificate is required".into(),
        )),
    }
}

fn reduce(a: ReduceArgs) -> Outcome {
    let inst = parse_instance(&read(&a.input)?)?;
    let wrong_source = || {
        Error::InvalidArgument(format!(
            "--input holds a {} instance, not {}",
            inst.problem().as_str(),
            problem_name(a.from)
        ))
    };
    let n = inst.n();
    let source_cert = a
        .certificate
        .as_deref()
        .map(|p| source_hypergraph(p, n))
        .transpose()?;

    let mut doc = json!({
        "from": problem_name(a.from),
        "to": problem_name(a.to),
    });
    let (reduced, carried) = match (a.from, a.to, &inst) {
        (Problem::ThreePartition, Problem::ZeroWeight, Instance::ThreePartition(p)) => {
            let z = reduce_partition_to_zero(p)?;
            let carried = source_cert
                .map(|f| map_partition_certificate(&f, p))
                .transpose()?;
            doc["intermediate"] = json!({
                "w": z.w().as_slice(),
                "c": z.c().as_slice(),
            });
            (Instance::ZeroWeight(z), carried)
        }
        (Problem::ZeroWeight, Problem::DegSeq, Instance::ZeroWeight(z)) => {
            let r = reduce_zero_to_degseq(z)?;
            let carried = source_cert
                .map(|g| lift_certificate(&g, &r.partition))
                .transpose()?;
            doc["sign_partition"] = sizes_value(&r.partition);
            (Instance::DegSeq(r.target), carried)
        }
        (Problem::ThreePartition, Problem::DegSeq, Instance::ThreePartition(p)) => {
            let r = reduce_partition_to_degseq(p)?;
            let carried = source_cert
                .map(|f| {
                    let g = map_partition_certificate(&f, p)?;
                    lift_certificate(&g, &r.partition)
                })
                .transpose()?;
            doc["intermediate"] = json!({
                "w": r.zero.w().as_slice(),
                "c": r.zero.c().as_slice(),
            });
            doc["sign_partition"] = sizes_value(&r.partition);
            (Instance::DegSeq(r.target), carried)
        }
        (from, to, _) if from == to || !is_forward(from, to) => {
            return Err(Error::InvalidArgument(format!(
                "no forward reduction from {} to {}",
                problem_name(from),
                problem_name(to)
            )))
        }
        _ => return Err(wrong_source()),
    };
    doc["instance"] = instance_value(&reduced);
    if let Some(path) = &a.output {
        write(path, &serialize_instance(&reduced))?;
    }
    if let Some(h) = &carried {
        let cert = Certificate::from(h);
        doc["certificate"] = certificate_value(&cert);
        if let Some(path) = &a.certificate_out {
            write(path, &serialize_certificate(&cert))?;
        }
    }
    Ok((line(doc), EXIT_YES))
}

fn is_forward(from: Problem, to: Problem) -> bool {
    rank(from) < rank(to)
}

fn rank(p: Problem) -> u8 {
    match p {
        Problem::ThreePartition => 0,
        Problem::ZeroWeight => 1,
        Problem::DegSeq => 2,
    }
}

fn problem_name(p: Problem) -> &'static str {
    match p {
        Problem::DegSeq => "degseq",
        Problem::ZeroWeight => "zero_weight",
        Problem::ThreePartition => "three_partition",
    }
}

fn sizes_value(sp: &crate::hypergraph::SignPartition) -> Value {
    let (minus, zero, plus) = sp.sizes();
    json!({ "minus": minus, "zero": zero, "plus": plus })
}

fn verify(a: VerifyArgs) -> Outcome {
    let inst = parse_instance(&read(&a.instance)?)?;
    let cert = parse_certificate(&read(&a.certificate)?)?;
    Ok(match verify_instance_certificate(&inst, &cert) {
        Ok(()) => (line(json!({ "valid": true, "reason": null })), EXIT_YES),
        Err(r) => (
            line(json!({
                "valid": false,
                "reason": { "code": r.code, "message": r.message },
            })),
            EXIT_NO,
        ),
    })
}

fn oracle(a: OracleArgs) -> Outcome {
    let inst = with_k(parse_instance(&read(&a.input)?)?, a.k)?;
    let started = Instant::now();
    let yes = match &inst {
        Instance::DegSeq(i) if i.k() == 2 => graph_bruteforce(i.d())?,
        Instance::DegSeq(i) => bruteforce_degseq(i.d())?,
        Instance::ZeroWeight(i) => bruteforce_zero(i)?,
        Instance::ThreePartition(i) => bruteforce_partition(i)?,
    };
    let answer = if yes { Answer::Yes } else { Answer::No };
    let millis = started.elapsed().as_millis() as u64;
    Ok((ResultDoc::new(answer, None, 0, millis).to_json(), exit_for(answer)))
}

fn gen(a: GenArgs) -> Outcome {
    let (inst, witness) = match a.problem {
        Problem::DegSeq => {
            let m = a
                .m
                .ok_or_else(|| Error::InvalidArgument("--m is required for degseq".into()))?;
            let (d, h) = gen_planted_degseq(a.n, m, a.seed)?;
            (Instance::DegSeq(d), Some(h))
        }
        Problem::ZeroWeight => {
            let (z, g) = gen_planted_zero(a.n, a.max_value, a.seed)?;
            (Instance::ZeroWeight(z), Some(g))
        }
        Problem::ThreePartition => {
            let p = gen_partition(a.n, a.max_value, a.seed, a.planted)?;
            (Instance::ThreePartition(p), None)
        }
    };
    if let Some(path) = &a.witness_out {
        let h = witness.ok_or_else(|| {
            Error::InvalidArgument("three_partition generation does not emit a witness".into())
        })?;
        write(path, &serialize_certificate(&Certificate::from(&h)))?;
    }
    Ok((serialize_instance(&inst), EXIT_YES))
}

fn graph_check(a: GraphCheckArgs) -> Outcome {
    let d = match parse_instance(&read(&a.input)?)? {
        Instance::DegSeq(i) => i.d().clone(),
        other => {
            return Err(Error::InvalidArgument(format!(
                "graph-check needs a degseq instance, got {}",
                other.problem().as_str()
            )))
        }
    };
    let graphical = eg_check(&d);
    let realization = if a.realize {
        hh_realize(&d).map(|g| certificate_value(&Certificate::from(&g)))
    } else {
        None
    };
    let code = if graphical { EXIT_YES } else { EXIT_NO };
    Ok((
        line(json!({ "graphical": graphical, "realization": realization })),
        code,
    ))
}
