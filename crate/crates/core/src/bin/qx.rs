use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qindex::constructions::Strategy;
use qindex::report::{self, Command, Format, Input, RunConfig};
use qindex::spectral::{MatrixKind, DEFAULT_TOL};

#[derive(Parser)]
#[command(name = "qx", version, about = "Signless Laplacian spectral radius of K_{t,s+1}-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Output format
    #[arg(long, value_enum, default_value_t = OutFormat::Json, global = true)]
    format: OutFormat,

    /// Eigenvalue residual tolerance
    #[arg(long, default_value_t = DEFAULT_TOL, global = true)]
    tol: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Matrix {
    #[value(name = "Q")]
    Q,
    #[value(name = "A")]
    A,
}

#[derive(Clone, Copy, ValueEnum)]
enum Build {
    Circulant,
    RandomRegular,
}

#[derive(Subcommand)]
enum Cmd {
    /// q(G) and λ(G) for every graph in FILE (graph6 lines or an edge list, `-` for stdin)
    Qindex { file: String },
    /// Full spectrum of Q or A
    Spectrum {
        file: String,
        #[arg(long, value_enum, default_value_t = Matrix::Q)]
        matrix: Matrix,
    },
    /// Test each graph for a K_{t,s+1} subgraph
    FreeCheck {
        file: String,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        s: usize,
    },
    /// Evaluate every bound; values may be ranges such as 10..=20
    Bounds {
        #[arg(long, value_parser = parse_range)]
        n: Values,
        #[arg(long, value_parser = parse_range)]
        s: Values,
        #[arg(long, value_parser = parse_range)]
        t: Values,
    },
    /// Build K_{t-1} ∨ H with H s-regular and K_{t,s+1}-free
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Build::Circulant)]
        strategy: Build,
        /// Return the graph even when freeness could not be certified
        #[arg(long)]
        allow_uncertified: bool,
    },
    /// Exhaustive maximum of q over K_{t,s+1}-free graphs of order n
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        s: usize,
        /// Read candidate graphs as graph6 lines instead of generating them
        #[arg(long)]
        stream: Option<String>,
    },
    /// Check q(G) ≤ bound over K_{2,s+1}-free graphs of order m ≤ 8
    Prop4 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        s: usize,
    },
    /// Simulated annealing lower bound on the maximum of q
    Hunt {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Numeric checks behind the t = 2 bound
    Ledger {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone)]
struct Values(Vec<usize>);

fn parse_range(arg: &str) -> Result<Values, String> {
    let num = |s: &str| s.trim().parse::<usize>().map_err(|e| format!("{s:?}: {e}"));
    match arg.split_once("..=") {
        Some((lo, hi)) => {
            let (lo, hi) = (num(lo)?, num(hi)?);
            if lo > hi {
                return Err(format!("empty range {arg}"));
            }
            Ok(Values((lo..=hi).collect()))
        }
        None => Ok(Values(vec![num(arg)?])),
    }
}

fn config(cli: Cli) -> RunConfig {
    let command = match cli.command {
        Cmd::Qindex { file } => Command::Qindex { input: Input::parse(&file) },
        Cmd::Spectrum { file, matrix } => Command::Spectrum {
            input: Input::parse(&file),
            matrix: match matrix {
                Matrix::Q => MatrixKind::Signless,
                Matrix::A => MatrixKind::Adjacency,
            },
        },
        Cmd::FreeCheck { file, t, s } => Command::FreeCheck { input: Input::parse(&file), t, s },
        Cmd::Bounds { n, s, t } => Command::Bounds {
            n: n.0,
            s: s.0,
            t: t.0,
        },
        Cmd::Construct { n, s, t, seed, strategy, allow_uncertified } => Command::Construct {
            n,
            s,
            t,
            seed,
            strategy: match strategy {
                Build::Circulant => Strategy::Circulant,
                Build::RandomRegular => Strategy::RandomRegular,
            },
            allow_uncertified,
        },
        Cmd::Verify { n, t, s, stream } => Command::Verify { n, t, s, stream: stream.as_deref().map(Input::parse) },
        Cmd::Prop4 { m, s } => Command::Prop4 { m, s },
        Cmd::Hunt { n, t, s, budget, seed } => Command::Hunt { n, t, s, budget, seed },
        Cmd::Ledger { s, n } => Command::Ledger { s, n },
    };
    let format = match cli.format {
        OutFormat::Json => Format::Json,
        OutFormat::Csv => Format::Csv,
        OutFormat::Text => Format::Text,
    };
    RunConfig { command, tol: cli.tol, format }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(threads) = std::env::var("QX_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    let cfg = config(cli);
    match report::execute(&cfg) {
        Ok(outcome) => {
            print!("{}", report::render(&outcome, cfg.format));
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("qx: {e}");
            ExitCode::from(2)
        }
    }
}
