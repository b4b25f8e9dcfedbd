use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use coblekit::report::{Check, VerificationReport};
use coblekit::suite::{self, SectionMode, SuiteOptions};
use coblekit::{LinearForm, Rational};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "coblekit", version, about = "Exact checks on the Igusa quartic and its Coble fourfold double covers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Also write the report as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Record wall-clock time per check (makes the JSON non-reproducible).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The (15_4, 10_6) configuration and its automorphisms.
    Config,
    /// The Igusa quartic: singular lines, double quadrics, rulings.
    Igusa,
    /// Count singular points of the quartic over F_p.
    Scan {
        #[arg(long)]
        prime: u64,
    },
    /// Hyperplane section x = {form = 0}: nodes, Coble equation, automorphisms.
    Section {
        /// A linear form such as `x6`, `x1+2x2` or `x1 - 1/2*x3`.
        #[arg(long, allow_hyphen_values = true)]
        form: String,
    },
    /// Hyperplane stabilizers in S6 and in S6 x C2.
    Stabilizers,
    /// Decomposition of the 4-dimensional representation per family.
    Signatures,
    /// Invariant rank of the degree-5 lattice.
    D5,
    /// Integer solutions of the Sarkisov link equations.
    Sarkisov {
        #[arg(long, default_value_t = 10_000)]
        bound: i64,
    },
    /// Subgroups of Aut(X) for which X is superrigid.
    Classify,
    /// Everything above with the default sample forms.
    All,
}

enum Outcome {
    Report(VerificationReport),
    Usage(String),
}

fn run(cli: &Cli) -> Outcome {
    let opts = SuiteOptions { timing: cli.timings };
    let checks: Vec<Check> = match &cli.command {
        Command::Config => suite::config_suite(opts),
        Command::Igusa => suite::igusa_suite(opts),
        Command::Scan { prime } => match suite::scan_suite(&[*prime], opts) {
            Ok(c) => c,
            Err(e) => return Outcome::Usage(e.to_string()),
        },
        Command::Section { form } => match LinearForm::<Rational>::parse(form, 6) {
            Ok(f) if f.is_zero() => return Outcome::Usage(format!("invalid form {form:?}: zero form")),
            Ok(f) => suite::section_suite(&f, SectionMode::Strict, opts),
            Err(e) => return Outcome::Usage(e.to_string()),
        },
        Command::Stabilizers => suite::stabilizers_suite(opts),
        Command::Signatures => suite::signatures_suite(opts),
        Command::D5 => suite::d5_suite(opts),
        Command::Sarkisov { bound } => match suite::sarkisov_suite(*bound, opts) {
            Ok(c) => c,
            Err(e) => return Outcome::Usage(e.to_string()),
        },
        Command::Classify => suite::classify_suite(opts),
        Command::All => suite::all_suites(opts),
    };
    Outcome::Report(suite::report(checks, opts))
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var("COBLEKIT_THREADS") {
        let n: usize = v.parse().with_context(|| format!("COBLEKIT_THREADS={v:?} is not a thread count"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_USAGE);
    }
    let report = match run(&cli) {
        Outcome::Report(r) => r,
        Outcome::Usage(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    print!("{}", report.render_table());
    if let Some(path) = &cli.json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("error: writing {}: {e}", path.display());
            return ExitCode::from(EXIT_USAGE);
        }
    }
    if report.failed() {
        ExitCode::from(EXIT_FAILED)
    } else {
        ExitCode::SUCCESS
    }
}
