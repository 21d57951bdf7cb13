mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use lefschetz_core::lattice::DEFAULT_CAP;
use lefschetz_core::{Error, Execution};

use report::Report;

#[derive(Parser)]
#[command(
    name = "lefschetz",
    version,
    about = "Lefschetz properties of artinian monomial quotients"
)]
struct Cli {
    /// Print one JSON record instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel work; 1 forces sequential execution.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct IdealArg {
    /// Monomial generators, e.g. "x^6,x^3y,xy^5,y^5".
    #[arg(long)]
    ideal: String,
}

#[derive(Args, Clone)]
struct PairArgs {
    #[command(flatten)]
    ideal: IdealArg,
    #[arg(long)]
    d: u32,
    #[arg(long)]
    t: u32,
}

#[derive(Args, Clone)]
struct SequenceArgs {
    /// Comma-separated Hilbert function, e.g. 1,2,3,2,1.
    #[arg(long, conflicts_with = "wvector")]
    hvector: Option<String>,
    /// Comma-separated width function, e.g. 0,0,2,3.
    #[arg(long)]
    wvector: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function, width function and lexsegment data of an ideal or a sequence.
    Analyze {
        #[arg(long, conflicts_with_all = ["hvector", "wvector"], required_unless_present_any = ["hvector", "wvector"])]
        ideal: Option<String>,
        #[command(flatten)]
        seq: SequenceArgs,
    },
    /// The matrix of ×(x+y)^t from degree d to d+t with both determinant computations.
    Matrix(PairArgs),
    /// Determinant of a square pair with its prime factorization.
    Det(PairArgs),
    /// SLP verdict in one characteristic (0 for characteristic zero).
    Slp {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long, visible_alias = "char")]
        prime: u64,
    },
    /// Every characteristic in which the SLP fails.
    BadPrimes(IdealArg),
    /// Non-intersecting lattice path families against the determinant.
    Lgv {
        #[command(flatten)]
        pair: PairArgs,
        /// Print the lattice as a text grid.
        #[arg(long)]
        emit_lattice: bool,
        /// Cap on partial states during path enumeration.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Reduced lexicographic Gröbner basis of a polynomial ideal.
    Gb {
        /// Polynomials, e.g. "x^2 + y^2, x^3 + y^3".
        #[arg(long)]
        ideal: String,
        #[arg(long = "char", visible_alias = "prime", default_value_t = 0)]
        char: u64,
    },
    /// SLP of a homogeneous polynomial ideal over the algebraic closure of F_p.
    SlpPoly {
        #[arg(long)]
        ideal: String,
        #[arg(long = "char", visible_alias = "prime")]
        char: u64,
    },
    /// Weak Lefschetz property of a monomial ideal of k[x,y,z].
    Wlp3 {
        /// Monomial generators in x, y, z, e.g. "x^20,y^20,z^20,x^3*y^8*z^13".
        #[arg(long)]
        ideal: String,
        #[arg(long, visible_alias = "char", conflicts_with_all = ["bad_primes", "verify_primes"])]
        prime: Option<u64>,
        /// Every characteristic in which the WLP fails (the default).
        #[arg(long)]
        bad_primes: bool,
        /// Confirm by rank computations that each listed prime is bad.
        #[arg(long, conflicts_with = "bad_primes")]
        verify_primes: Option<String>,
    },
    /// Exhaustive and sampled verification suites.
    Sweep(commands::SweepArgs),
    /// SLP of (x^p, x^((p+1)/2) y^((p-1)/2) + y^p) in characteristic p.
    Conjecture {
        #[arg(long)]
        p: u64,
    },
    /// A non-lexsegment ideal with the given Hilbert or width function.
    Witness(SequenceArgs),
}

fn execution(jobs: Option<usize>, default: Execution) -> Execution {
    match jobs {
        Some(1) => Execution::Sequential,
        Some(_) => Execution::Parallel,
        None => default,
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ExplosionGuard { .. } | Error::ResourceLimit(_) => 3,
        Error::InvariantViolation(_) => 1,
        _ => 2,
    }
}

fn describe(e: &Error) -> String {
    match e {
        Error::Parse {
            input,
            position,
            message,
        } => {
            let token: String = input
                .get(*position..)
                .unwrap_or("")
                .chars()
                .take_while(|c| !c.is_whitespace() && *c != ',')
                .collect();
            let token = if token.is_empty() {
                "end of input".to_string()
            } else {
                format!("{token:?}")
            };
            format!(
                "{message} at {token}\n  {input}\n  {}^",
                " ".repeat(*position)
            )
        }
        other => other.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    #[cfg(feature = "parallel")]
    if let Some(n) = cli.jobs {
        if n == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let single = execution(cli.jobs, Execution::Sequential);
    let start = Instant::now();
    let (name, outcome) = match &cli.command {
        Command::Analyze { ideal, seq } => (
            "analyze",
            commands::analyze(
                ideal.as_deref(),
                seq.hvector.as_deref(),
                seq.wvector.as_deref(),
                single,
            ),
        ),
        Command::Matrix(a) => ("matrix", commands::matrix(&a.ideal.ideal, a.d, a.t)),
        Command::Det(a) => ("det", commands::det(&a.ideal.ideal, a.d, a.t)),
        Command::Slp { ideal, prime } => ("slp", commands::slp(&ideal.ideal, *prime, single)),
        Command::BadPrimes(i) => ("bad-primes", commands::bad_primes(&i.ideal, single)),
        Command::Lgv {
            pair,
            emit_lattice,
            cap,
        } => (
            "lgv",
            commands::lgv(&pair.ideal.ideal, pair.d, pair.t, *cap, *emit_lattice),
        ),
        Command::Gb { ideal, char } => ("gb", commands::gb(ideal, *char)),
        Command::SlpPoly { ideal, char } => ("slp-poly", commands::slp_poly(ideal, *char, single)),
        Command::Wlp3 {
            ideal,
            prime,
            verify_primes,
            ..
        } => (
            "wlp3",
            commands::wlp3(ideal, *prime, verify_primes.as_deref(), single),
        ),
        Command::Sweep(args) => (
            "sweep",
            commands::sweep(args, execution(cli.jobs, Execution::Parallel)),
        ),
        Command::Conjecture { p } => ("conjecture", commands::conjecture(*p, single)),
        Command::Witness(seq) => (
            "witness",
            commands::witness(seq.hvector.as_deref(), seq.wvector.as_deref()),
        ),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {}", describe(&e));
            return ExitCode::from(exit_code(&e));
        }
    };
    let timing_ms = start.elapsed().as_secs_f64() * 1000.0;
    if cli.json {
        let report = Report {
            command: name.to_string(),
            input: outcome.input,
            result: outcome.result,
            witnesses: outcome.witnesses,
            timing_ms,
            version: env!("CARGO_PKG_VERSION").to_string(),
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable report")
        );
    } else {
        print!("{}", outcome.text);
        if !outcome.text.ends_with('\n') {
            println!();
        }
    }
    match outcome.assertion {
        Some(false) => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    }
}
