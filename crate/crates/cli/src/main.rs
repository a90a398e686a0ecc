//! `specgap`: generate graphs, compute spectra and gaps, build neighborhood
//! graphs, recognize extremal families and run verification campaigns.
//!
//! Graphs travel as graph6 lines on stdin/stdout by default, so commands
//! compose with pipes. Exit status: 0 success, 1 a verification failure,
//! 2 a usage or I/O error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use specgap_core::generators::{enumerate_regular, EnumerateOptions, FamilyArgs, FamilyRegistry, GenError};
use specgap_core::graphs::{
    graph_id, parse_edgelist, parse_graph6_lines, write_edgelist, write_graph6, Graph, GraphError, GraphFormat,
};
use specgap_core::neighborhood::{self, NeighborhoodError};
use specgap_core::recognize::recognize;
use specgap_core::spectra::{self, SpectraError, Spectrum};
use specgap_core::verify::{round12, run_campaign, CheckRegistry, Corpus, VerifyError};

#[derive(Parser, Debug)]
#[command(name = "specgap", version, about = "Spectral gaps of extremal graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct Io {
    /// Input file (default: stdin).
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
    /// Output file (default: stdout).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Graph format for input and graph output.
    #[arg(long, default_value = "g6")]
    format: GraphFormat,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum MatrixKind {
    Adj,
    Nlap,
    M,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Center {
    #[value(name = "0")]
    Zero,
    #[value(name = "1")]
    One,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named family, e.g. `gen pg --q 2` or `gen regular --n 4..10 --d 3`.
    /// Run `gen list` for the catalog.
    Gen {
        family: String,
        /// Family parameters as `--key value` pairs; `--out` and `--format`
        /// are recognized among them.
        #[arg(trailing_var_arg = true, allow_hyphen_values = true, value_name = "--KEY VALUE")]
        params: Vec<String>,
    },
    /// Eigenvalues (ascending) of the adjacency, normalized Laplacian or M matrix.
    Spectrum {
        #[arg(long, default_value = "adj")]
        matrix: MatrixKind,
        #[command(flatten)]
        io: Io,
    },
    /// Spectral gap from 0 (adjacency) or from 1 (normalized Laplacian).
    Gap {
        #[arg(long)]
        from: Center,
        #[command(flatten)]
        io: Io,
    },
    /// The neighborhood graph: vertices adjacent iff they share a neighbor.
    Phi {
        #[command(flatten)]
        io: Io,
    },
    /// Spectrum of the order-l neighborhood Laplacian.
    NlapPower {
        #[arg(long)]
        l: u32,
        /// Accepted for symmetry with other tools; output is always JSON.
        #[arg(long, hide = true)]
        json: bool,
        #[command(flatten)]
        io: Io,
    },
    /// Identify projective-plane, design, friendship and book graphs.
    Recognize {
        #[command(flatten)]
        io: Io,
    },
    /// Run theorem checks over a corpus and write a JSON-lines report.
    Verify {
        /// Corpus spec, e.g. `regular:n=4..14,d=3;pg:q=2..9;where:connected`.
        #[arg(long)]
        corpus: String,
        /// Comma-separated check ids, or `all`.
        #[arg(long, default_value = "all")]
        theorems: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// All d-regular graphs on n vertices, one per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 3)]
        min_girth: usize,
        /// Include disconnected graphs.
        #[arg(long)]
        disconnected: bool,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        #[arg(long, default_value = "g6")]
        format: GraphFormat,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Neighborhood(#[from] NeighborhoodError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("verification failed")]
    VerificationFailed,
}

fn read_input(path: &Option<PathBuf>) -> Result<Vec<u8>, CliError> {
    match path {
        Some(p) => fs::read(p).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut buf = Vec::new();
            io::stdin().read_to_end(&mut buf)?;
            Ok(buf)
        }
    }
}

fn read_graphs(io: &Io) -> Result<Vec<Graph>, CliError> {
    let bytes = read_input(&io.input)?;
    let graphs = match io.format {
        GraphFormat::Graph6 => parse_graph6_lines(&bytes)?,
        GraphFormat::EdgeList => {
            let text = String::from_utf8(bytes).map_err(|_| CliError::Usage("edge list is not UTF-8".into()))?;
            text.split("\n\n").filter(|chunk| !chunk.trim().is_empty()).map(parse_edgelist).collect::<Result<_, _>>()?
        }
    };
    if graphs.is_empty() {
        return Err(CliError::Usage("no graphs on input".into()));
    }
    Ok(graphs)
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(io::BufWriter::new(fs::File::create(p)?)),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}

fn write_graphs(out: &mut dyn Write, graphs: &[Graph], format: GraphFormat) -> Result<(), CliError> {
    for (i, g) in graphs.iter().enumerate() {
        match format {
            GraphFormat::Graph6 => {
                out.write_all(&write_graph6(g))?;
                out.write_all(b"\n")?;
            }
            GraphFormat::EdgeList => {
                if i > 0 {
                    out.write_all(b"\n")?;
                }
                out.write_all(write_edgelist(g).as_bytes())?;
            }
        }
    }
    Ok(())
}

fn write_json_lines(io: &Io, rows: impl IntoIterator<Item = Value>) -> Result<(), CliError> {
    let mut out = open_output(&io.out)?;
    for row in rows {
        writeln!(out, "{row}")?;
    }
    out.flush()?;
    Ok(())
}

fn eigenvalues_json(s: &Spectrum) -> Value {
    Value::Array(s.eigenvalues.iter().map(|&x| round12(x)).collect())
}

/// `--key value` / `--key=value` pairs into family arguments, with the
/// output options split off.
fn parse_gen_params(params: &[String]) -> Result<(FamilyArgs, Option<PathBuf>, GraphFormat), CliError> {
    let mut args = FamilyArgs::default();
    let mut out = None;
    let mut format = GraphFormat::Graph6;
    let mut it = params.iter();
    while let Some(token) = it.next() {
        let key =
            token.strip_prefix("--").ok_or_else(|| CliError::Usage(format!("expected --key, found `{token}`")))?;
        let (key, value) = match key.split_once('=') {
            Some((k, v)) => (k.to_string(), v.to_string()),
            None => {
                let v = it.next().ok_or_else(|| CliError::Usage(format!("--{key} needs a value")))?;
                (key.to_string(), v.clone())
            }
        };
        match key.as_str() {
            "out" => out = Some(PathBuf::from(value)),
            "format" => format = value.parse().map_err(CliError::Usage)?,
            _ => args.insert(key, FamilyArgs::parse_value(&value)?),
        }
    }
    Ok((args, out, format))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Gen { family, params } => {
            let registry = FamilyRegistry::with_defaults();
            if family == "list" {
                let mut out = open_output(&None)?;
                for f in registry.families() {
                    writeln!(out, "{:<18} {:<24} {}", f.name(), f.params().join(","), f.summary())?;
                }
                return Ok(out.flush()?);
            }
            if registry.get(&family).is_none() {
                let names: Vec<_> = registry.names().collect();
                return Err(CliError::Usage(format!("unknown family `{family}`; known: {}", names.join(", "))));
            }
            let (args, out_path, format) = parse_gen_params(&params)?;
            let graphs = registry.build(&family, &args)?;
            let mut out = open_output(&out_path)?;
            write_graphs(&mut out, &graphs, format)?;
            out.flush()?;
        }
        Command::Spectrum { matrix, io } => {
            let mut rows = Vec::new();
            for g in read_graphs(&io)? {
                let (name, s) = match matrix {
                    MatrixKind::Adj => ("adj", spectra::adjacency_spectrum(&g)?),
                    MatrixKind::Nlap => ("nlap", spectra::nlap_spectrum(&g)?),
                    MatrixKind::M => ("m", spectra::m_spectrum(&g)?),
                };
                rows.push(json!({
                    "graph_id": graph_id(&g),
                    "matrix": name,
                    "eigenvalues": eigenvalues_json(&s),
                    "solver_tolerance": round12(s.solver_tolerance),
                }));
            }
            write_json_lines(&io, rows)?;
        }
        Command::Gap { from, io } => {
            let mut rows = Vec::new();
            for g in read_graphs(&io)? {
                let gap = match from {
                    Center::Zero => spectra::gap_from_zero(&g)?,
                    Center::One => spectra::gap_from_one(&g)?,
                };
                rows.push(json!({
                    "graph_id": graph_id(&g),
                    "kind": gap.kind,
                    "gap": round12(gap.value),
                    "attaining_eigenvalue": round12(gap.attaining_eigenvalue),
                }));
            }
            write_json_lines(&io, rows)?;
        }
        Command::Phi { io } => {
            let graphs: Vec<Graph> = read_graphs(&io)?.iter().map(neighborhood::phi).collect();
            let mut out = open_output(&io.out)?;
            write_graphs(&mut out, &graphs, io.format)?;
            out.flush()?;
        }
        Command::NlapPower { l, io, .. } => {
            let mut rows = Vec::new();
            for g in read_graphs(&io)? {
                let (_, s) = neighborhood::neighborhood_laplacian(&g, l)?;
                rows.push(json!({ "graph_id": graph_id(&g), "l": l, "eigenvalues": eigenvalues_json(&s) }));
            }
            write_json_lines(&io, rows)?;
        }
        Command::Recognize { io } => {
            let rows: Vec<Value> = read_graphs(&io)?
                .iter()
                .map(|g| {
                    let r = recognize(g);
                    json!({ "graph_id": graph_id(g), "family": r.family, "parameters": r.parameters })
                })
                .collect();
            write_json_lines(&io, rows)?;
        }
        Command::Verify { corpus, theorems, jobs, out } => {
            let families = FamilyRegistry::with_defaults();
            let checks = CheckRegistry::with_defaults();
            let corpus = Corpus::parse(&corpus, &families)?;
            let selected = checks.select(&theorems)?;
            let report = run_campaign(&corpus, &selected, jobs)?;
            let mut w = open_output(&out)?;
            report.write_jsonl(&mut w)?;
            w.flush()?;
            for (id, c) in &report.aggregate.theorems {
                eprintln!("{id:<16} pass {:>5}  fail {:>5}  n/a {:>5}", c.pass, c.fail, c.not_applicable);
            }
            if report.has_failures() {
                return Err(CliError::VerificationFailed);
            }
        }
        Command::Enumerate { n, d, min_girth, disconnected, out, format } => {
            let graphs = enumerate_regular(n, d, EnumerateOptions { connected: !disconnected, min_girth })?;
            let mut w = open_output(&out)?;
            write_graphs(&mut w, &graphs, format)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::VerificationFailed) => {
            eprintln!("specgap: verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("specgap: {e}");
            ExitCode::from(2)
        }
    }
}
