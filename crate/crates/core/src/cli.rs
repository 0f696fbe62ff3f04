//! The `hermix` command line.
//!
//! Every subcommand reads one graph file (or `-` for stdin) and prints JSON
//! on stdout, except `search-cospectral`, which takes `--n` and streams one
//! JSON object per hit. Exit codes: `0` success, `1` numerical or internal
//! failure, `2` bad input.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cospectral::{
    numeric_cospectral, search_cospectral_with, CospectralError, CospectralReport, SearchHit,
    SearchMode,
};
use crate::expansion::{char_poly_expansion, ExpansionError};
use crate::graph::{parse_graph, MixedGraph, ParseError};
use crate::monograph::{
    compute_store, extend_monograph, is_monograph, monograph_partition,
    radius_equality_analysis, transfer_eigenvectors, Attachment, Direction, Kind,
    MonographError,
};
use crate::phase::{PhaseError, UnitPhase};
use crate::round_sig;
use crate::spectra::{
    build_hermitian, char_poly, eigen_decomposition, CharPoly, EigenPair, SpectraError,
    Spectrum, COEFF_TOL,
};

#[derive(Debug, Parser)]
#[command(name = "hermix", version, about = "Hermitian adjacency spectra of mixed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Phase: i, gamma, omega, 1, root:k/n or angle:<radians>
    #[arg(long)]
    alpha: String,
    /// Comparison tolerance
    #[arg(long, default_value_t = COEFF_TOL)]
    tol: f64,
    /// Graph file, or `-` for stdin
    input: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Eigenvalues, characteristic polynomial and spectral radius
    Spectrum(Common),
    /// Characteristic polynomial coefficients
    Charpoly {
        #[command(flatten)]
        common: Common,
        /// Use the elementary-subgraph expansion instead of the trace recursion
        #[arg(long)]
        oracle: bool,
    },
    /// Monograph verdict with gauge or violating cycle
    Monograph {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        kind: u8,
    },
    /// Gauge classes of a monograph
    Partition {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        kind: u8,
    },
    /// Carry eigenpairs of the underlying graph over to H^α
    Transfer {
        #[command(flatten)]
        common: Common,
        /// JSON array of {lambda, vector}; defaults to a computed eigenbasis
        #[arg(long)]
        basis: Option<PathBuf>,
    },
    /// Attach new vertices to a digon-connected vertex set
    Extend {
        #[command(flatten)]
        common: Common,
        /// Comma-separated vertex set
        #[arg(long, value_delimiter = ',', required = true)]
        subgraph: Vec<usize>,
        /// File of `label: 0,1 out|in` lines
        #[arg(long)]
        attachments: Option<PathBuf>,
        /// Inline attachment in the same syntax, repeatable
        #[arg(long)]
        attach: Vec<String>,
    },
    /// Spectral radius against maximum degree
    Radius(Common),
    /// Compare the spectra under two phases
    Cospectral {
        /// Exactly two phases
        #[arg(long, num_args = 1, required = true)]
        alpha: Vec<String>,
        #[arg(long, default_value_t = COEFF_TOL)]
        tol: f64,
        input: PathBuf,
    },
    /// Search small graphs for cospectral pairs of phases
    SearchCospectral {
        #[arg(long)]
        n: usize,
        #[arg(long, num_args = 1, required = true)]
        alpha: Vec<String>,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ModeArg,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = COEFF_TOL)]
        tol: f64,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Numeric(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Numeric(_) => 1,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<PhaseError> for CliError {
    fn from(e: PhaseError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SpectraError> for CliError {
    fn from(e: SpectraError) -> Self {
        CliError::Numeric(e.to_string())
    }
}

impl From<ExpansionError> for CliError {
    fn from(e: ExpansionError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<MonographError> for CliError {
    fn from(e: MonographError) -> Self {
        if e.is_internal() {
            CliError::Numeric(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<CospectralError> for CliError {
    fn from(e: CospectralError) -> Self {
        match e {
            CospectralError::TooLarge { .. } => CliError::Input(e.to_string()),
            _ => CliError::Numeric(e.to_string()),
        }
    }
}

fn io_error(path: &std::path::Path, e: std::io::Error) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                2
            } else {
                let _ = write!(stdout, "{e}");
                0
            };
            return code;
        }
    };
    let mut input = Input { stdin, used: false };
    match execute(cli.command, &mut input, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "hermix: {e}");
            e.code()
        }
    }
}

struct Input<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl Input<'_> {
    fn read(&mut self, path: &std::path::Path) -> Result<String, CliError> {
        if path.as_os_str() == "-" {
            if self.used {
                return Err(CliError::Input("stdin can only be read once".into()));
            }
            self.used = true;
            let mut text = String::new();
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| io_error(path, e))?;
            Ok(text)
        } else {
            fs::read_to_string(path).map_err(|e| io_error(path, e))
        }
    }

    fn graph(&mut self, path: &std::path::Path) -> Result<MixedGraph, CliError> {
        Ok(parse_graph(&self.read(path)?)?)
    }
}

fn number(x: f64) -> Value {
    serde_json::Number::from_f64(round_sig(x))
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

fn numbers(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| number(x)).collect())
}

fn kind_of(k: u8) -> Kind {
    if k == 1 {
        Kind::First
    } else {
        Kind::Second
    }
}

fn edges_json(graph: &MixedGraph) -> Value {
    Value::Array(graph.edges().iter().map(|e| json!(e.to_string())).collect())
}

fn emit(stdout: &mut dyn Write, value: &Value) -> Result<(), CliError> {
    writeln!(stdout, "{value}").map_err(|e| CliError::Numeric(format!("write failed: {e}")))
}

fn spectrum_json(alpha: UnitPhase, spectrum: &Spectrum, poly: &CharPoly) -> Value {
    json!({
        "alpha": alpha.to_string(),
        "eigenvalues": numbers(spectrum.eigenvalues()),
        "char_poly": numbers(poly.coeffs()),
        "spectral_radius": number(spectrum.radius()),
    })
}

fn two_alphas(specs: &[String]) -> Result<(UnitPhase, UnitPhase), CliError> {
    match specs {
        [a, b] => Ok((a.parse()?, b.parse()?)),
        _ => Err(CliError::Input(format!(
            "expected exactly two --alpha values, got {}",
            specs.len()
        ))),
    }
}

fn report_json(report: &CospectralReport) -> Value {
    let f = report.structural_flags;
    json!({
        "alpha1": report.alpha1.to_string(),
        "alpha2": report.alpha2.to_string(),
        "cospectral": report.cospectral,
        "max_gap": number(report.max_gap),
        "spectral_gap": number(report.spectral_gap),
        "structural_flags": {
            "even_arc_condition": f.even_arc_condition,
            "oriented_bipartite": f.oriented_bipartite,
            "tree": f.tree,
            "monograph_both": f.monograph_both,
        },
    })
}

fn pair_json(pair: &EigenPair) -> Value {
    json!({
        "lambda": number(pair.lambda),
        "vector": pair.vector.iter().map(|z| json!([number(z.re), number(z.im)])).collect::<Vec<_>>(),
    })
}

/// An entry is either a real number or `[re, im]`.
#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Real(f64),
    Complex([f64; 2]),
}

#[derive(Deserialize)]
struct RawPair {
    lambda: f64,
    vector: Vec<Entry>,
}

fn parse_basis(text: &str) -> Result<Vec<EigenPair>, CliError> {
    let raw: Vec<RawPair> =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("basis: {e}")))?;
    Ok(raw
        .into_iter()
        .map(|p| EigenPair {
            lambda: p.lambda,
            vector: p
                .vector
                .into_iter()
                .map(|e| match e {
                    Entry::Real(x) => Complex64::new(x, 0.0),
                    Entry::Complex([re, im]) => Complex64::new(re, im),
                })
                .collect(),
        })
        .collect())
}

/// Parses one `label: 0,1 out` line.
fn parse_attachment(line: &str) -> Result<Attachment, CliError> {
    let bad = || CliError::Input(format!("bad attachment `{line}`; expected `label: 0,1 out|in`"));
    let body = line.split_once(':').map(|(_, b)| b).unwrap_or(line).trim();
    let (targets, direction) = body.rsplit_once(char::is_whitespace).ok_or_else(bad)?;
    let direction = match direction {
        "out" => Direction::AllOut,
        "in" => Direction::AllIn,
        _ => return Err(bad()),
    };
    let targets = targets
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Attachment { targets, direction })
}

fn parse_attachments(text: &str) -> Result<Vec<Attachment>, CliError> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(parse_attachment)
        .collect()
}

fn execute(command: Command, input: &mut Input, stdout: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Spectrum(c) => {
            let alpha: UnitPhase = c.alpha.parse()?;
            let graph = input.graph(&c.input)?;
            let h = build_hermitian(&graph, alpha);
            let (spectrum, _) = eigen_decomposition(&h)?;
            emit(stdout, &spectrum_json(alpha, &spectrum, &char_poly(&h)?))
        }
        Command::Charpoly { common: c, oracle } => {
            let alpha: UnitPhase = c.alpha.parse()?;
            let graph = input.graph(&c.input)?;
            let h = build_hermitian(&graph, alpha);
            let (spectrum, _) = eigen_decomposition(&h)?;
            let (poly, method) = if oracle {
                (char_poly_expansion(&graph, alpha)?, "expansion")
            } else {
                (char_poly(&h)?, "trace-recursion")
            };
            let mut out = spectrum_json(alpha, &spectrum, &poly);
            out["method"] = json!(method);
            emit(stdout, &out)
        }
        Command::Monograph { common: c, kind } => {
            let alpha: UnitPhase = c.alpha.parse()?;
            let graph = input.graph(&c.input)?;
            let kind = kind_of(kind);
            let cert = is_monograph(&graph, alpha, kind);
            let store = if graph.is_connected() {
                let s = compute_store(&graph, alpha, kind)?;
                json!({
                    "generators": s.generator_phases.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "size": s.size,
                })
            } else {
                Value::Null
            };
            let potential = cert.potential.as_ref().map(|p| {
                p.iter()
                    .enumerate()
                    .map(|(v, phase)| json!({"vertex": v, "phase": phase.to_string()}))
                    .collect::<Vec<_>>()
            });
            emit(
                stdout,
                &json!({
                    "alpha": alpha.to_string(),
                    "kind": if kind == Kind::First { 1 } else { 2 },
                    "verdict": cert.verdict,
                    "potential": potential,
                    "violation": cert.violation.map(|w| w.vertices),
                    "store": store,
                }),
            )
        }
        Command::Partition { common: c, kind } => {
            let alpha: UnitPhase = c.alpha.parse()?;
            let graph = input.graph(&c.input)?;
            let kind = kind_of(kind);
            let partition = monograph_partition(&graph, alpha, kind)?;
            let classes: Vec<Value> = partition
                .classes
                .iter()
                .map(|(p, vs)| json!({"phase": p.to_string(), "vertices": vs}))
                .collect();
            emit(
                stdout,
                &json!({
                    "alpha": alpha.to_string(),
                    "kind": if kind == Kind::First { 1 } else { 2 },
                    "classes": classes,
                }),
            )
        }
        Command::Transfer { common: c, basis } => {
            let alpha: UnitPhase = c.alpha.parse()?;
            let graph = input.graph(&c.input)?;
            let basis = match basis {
                Some(path) => parse_basis(&input.read(&path)?)?,
                None => eigen_decomposition(&build_hermitian(&graph, UnitPhase::one()))?.1,
            };
            let moved = transfer_eigenvectors(&graph, alpha, &basis)?;
            emit(stdout, &Value::Array(moved.iter().map(pair_json).collect()))
        }
        Command::Extend {
            common: c,
            subgraph,
            attachments,
            attach,
        } => {
            let alpha: UnitPhase = c.alpha.parse()?;
            let graph = input.graph(&c.input)?;
            let mut list = match attachments {
                Some(path) => parse_attachments(&input.read(&path)?)?,
                None => Vec::new(),
            };
            for line in &attach {
                list.push(parse_attachment(line)?);
            }
            let extended = extend_monograph(&graph, alpha, &subgraph, &list)?;
            emit(
                stdout,
                &json!({
                    "alpha": alpha.to_string(),
                    "n": extended.n(),
                    "edges": edges_json(&extended),
                    "is_monograph": is_monograph(&extended, alpha, Kind::First).verdict,
                }),
            )
        }
        Command::Radius(c) => {
            let alpha: UnitPhase = c.alpha.parse()?;
            let graph = input.graph(&c.input)?;
            let a = radius_equality_analysis(&graph, alpha, c.tol)?;
            emit(
                stdout,
                &json!({
                    "alpha": alpha.to_string(),
                    "rho": number(a.rho),
                    "delta": a.delta,
                    "equal": a.equal,
                    "regular": a.regular,
                    "mono1": a.mono1,
                    "mono2": a.mono2,
                    "negation_free": a.negation_free,
                    "within_bound": a.within_bound,
                    "theorem_consistent": a.theorem_consistent,
                }),
            )
        }
        Command::Cospectral { alpha, tol, input: path } => {
            let (a1, a2) = two_alphas(&alpha)?;
            let graph = input.graph(&path)?;
            emit(stdout, &report_json(&numeric_cospectral(&graph, a1, a2, tol)?))
        }
        Command::SearchCospectral {
            n,
            alpha,
            mode,
            count,
            seed,
            tol,
        } => {
            let (a1, a2) = two_alphas(&alpha)?;
            let mode = match mode {
                ModeArg::Exhaustive => SearchMode::Exhaustive,
                ModeArg::Random => SearchMode::Random {
                    count,
                    seed: seed.ok_or_else(|| CliError::Input("random mode requires --seed".into()))?,
                },
            };
            let mut write_error = None;
            search_cospectral_with(n, a1, a2, mode, tol, |hit: SearchHit| {
                if write_error.is_some() {
                    return;
                }
                let mut line = report_json(&hit.report);
                line["index"] = json!(hit.index);
                line["n"] = json!(hit.graph.n());
                line["edges"] = edges_json(&hit.graph);
                if let Err(e) = emit(stdout, &line) {
                    write_error = Some(e);
                }
            })?;
            write_error.map_or(Ok(()), Err)
        }
    }
}
