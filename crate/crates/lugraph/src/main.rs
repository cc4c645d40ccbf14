//! Command-line front end: build states, run gate specs over graph files,
//! verify switchings against the dense oracle, export DOT and spectra.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use lugraph::circuit::{basis_state_graph, bell_demo, run, Circuit};
use lugraph::error::Error;
use lugraph::io::{parse_gate_spec, to_dot, GraphFile, IoError};
use lugraph::oracle::{verify_circuit, Verdict};
use lugraph::QGraph;

#[derive(Parser)]
#[command(
    name = "lugraph",
    about = "Quantum states as weighted graphs, gates as graph switching"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a basis-state graph or a Bell-chain output graph as JSON
    State {
        /// Number of qubits (with --bits)
        #[arg(long)]
        n: Option<u8>,
        /// Basis bit string, e.g. 10
        #[arg(long, conflicts_with = "bell")]
        bits: Option<String>,
        /// Run the H-then-CNOT chain on this two-bit basis state
        #[arg(long, conflicts_with_all = ["n", "bits"])]
        bell: Option<String>,
    },
    /// Apply a gate spec to a graph file and emit the result(s)
    Apply {
        /// Input graph JSON (stdin when omitted)
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Comma-separated gates, e.g. H@1,X@2,CNOT
        #[arg(long)]
        gates: String,
        /// Emit every intermediate graph, not just the final one
        #[arg(long)]
        trace: bool,
    },
    /// Check a gate spec against the dense conjugation oracle
    Verify {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        gates: String,
        /// Max-norm tolerance
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Render a graph file as undirected DOT
    ExportDot {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Print eigenvalues of the adjacency (a) or signless Laplacian (l)
    Spectrum {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, default_value = "l")]
        which: String,
    },
}

struct CliError {
    code: u8,
    msg: String,
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        Self {
            code: 2,
            msg: msg.into(),
        }
    }

    fn runtime(msg: impl Into<String>) -> Self {
        Self {
            code: 1,
            msg: msg.into(),
        }
    }
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        match e {
            // malformed input files and specs are usage errors
            IoError::Json(_) | IoError::GateSpec { .. } => CliError::usage(e.to_string()),
            IoError::Graph(g) => g.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::runtime(e.to_string())
    }
}

fn load_graph(path: &Option<PathBuf>) -> Result<QGraph, CliError> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| CliError::usage(format!("cannot read {}: {e}", p.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::usage(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    Ok(GraphFile::parse(&text)?.to_graph()?)
}

fn print_graph(g: &QGraph, label: Option<String>) {
    println!("{}", GraphFile::from_graph(g, label).to_json());
}

fn cmd_state(n: Option<u8>, bits: Option<String>, bell: Option<String>) -> Result<(), CliError> {
    match (bits, bell) {
        (Some(bits), None) => {
            let n = n.ok_or_else(|| CliError::usage("--bits requires --n"))?;
            let g = basis_state_graph(n, &bits).map_err(|e| CliError::usage(e.to_string()))?;
            print_graph(&g, Some(format!("|{bits}>")));
            Ok(())
        }
        (None, Some(which)) => {
            let stages = bell_demo(&which).map_err(|e| CliError::usage(e.to_string()))?;
            let last = stages.last().expect("chain is nonempty");
            print_graph(last, Some(format!("bell({which})")));
            Ok(())
        }
        _ => Err(CliError::usage("state needs either --n/--bits or --bell")),
    }
}

fn cmd_apply(input: &Option<PathBuf>, gates: &str, trace: bool) -> Result<(), CliError> {
    let g = load_graph(input)?;
    let ops = parse_gate_spec(gates)?;
    let circuit = Circuit::new(g.n_qubits(), ops)?;
    let stages = run(&g, &circuit)?;
    if trace {
        for (i, stage) in stages.iter().enumerate() {
            print_graph(stage, Some(format!("stage {i}")));
        }
    } else {
        print_graph(stages.last().expect("nonempty"), None);
    }
    Ok(())
}

fn cmd_verify(input: &Option<PathBuf>, gates: &str, tol: f64) -> Result<(), CliError> {
    let g = load_graph(input)?;
    let ops = parse_gate_spec(gates)?;
    match verify_circuit(&g, &ops, tol)? {
        Verdict::Pass => {
            println!("PASS max deviation <= {tol:.1e}");
            Ok(())
        }
        Verdict::Fail { max_abs_deviation } => {
            println!("FAIL max deviation {max_abs_deviation:.1e}");
            Err(CliError::runtime(format!(
                "oracle deviation {max_abs_deviation:.1e} exceeds tolerance {tol:.1e}"
            )))
        }
    }
}

fn cmd_spectrum(input: &Option<PathBuf>, which: &str) -> Result<(), CliError> {
    let g = load_graph(input)?;
    let spec = match which {
        "a" => g.adjacency_spectrum()?,
        "l" => g.laplacian_spectrum()?,
        other => {
            return Err(CliError::usage(format!(
                "--which must be a or l, got {other:?}"
            )))
        }
    };
    for v in spec {
        println!("{v:.12}");
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::State { n, bits, bell } => cmd_state(n, bits, bell),
        Command::Apply {
            input,
            gates,
            trace,
        } => cmd_apply(&input, &gates, trace),
        Command::Verify { input, gates, tol } => cmd_verify(&input, &gates, tol),
        Command::ExportDot { input } => {
            let g = load_graph(&input)?;
            print!("{}", to_dot(&g));
            Ok(())
        }
        Command::Spectrum { input, which } => cmd_spectrum(&input, &which),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}
