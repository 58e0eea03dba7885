//! Command-line front end: `check`, `construct`, `cohomology`, `deform` and `selftest`.
//!
//! [`run`] never touches the process streams; it returns the exit code and both
//! output streams so the binary and the tests share one code path.
//! Exit codes: 0 success or predicate true, 1 predicate false or failed
//! precondition, 2 input error.

mod commands;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn report(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn from_error(e: &Error) -> Self {
        let code = if e.is_input_error() { 2 } else { 1 };
        Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

#[derive(Parser, Debug)]
#[command(name = "homnov", version, about = "Exact checks, constructions, cohomology and deformations of Hom-Novikov superalgebras")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    machine: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check an axiom system on an algebra document.
    Check {
        subject: Subject,
        file: PathBuf,
        #[command(flatten)]
        opts: MapOptions,
    },
    /// Build a new algebra and print its document.
    Construct {
        kind: Kind,
        file: PathBuf,
        #[command(flatten)]
        opts: MapOptions,
        /// Value of ξ for xi-family (defaults to the document's `xi`).
        #[arg(long, value_name = "p/q")]
        xi: Option<String>,
        /// Power of α used by form-twist.
        #[arg(long, alias = "order", value_name = "N", default_value_t = 1)]
        power: u32,
    },
    /// Dimensions of C², Z², B² and H².
    Cohomology {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ParityChoice::Both)]
        parity: ParityChoice,
    },
    /// Check, test or reduce a truncated deformation.
    Deform {
        action: Action,
        algebra: PathBuf,
        /// Deformation document; the null deformation is used when omitted.
        deformation: Option<PathBuf>,
        /// Truncation order (defaults to the document's order, or 4 for the null deformation).
        #[arg(long, value_name = "N")]
        order: Option<usize>,
    },
    /// Run randomized identity checks on generated algebras.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

#[derive(Args, Debug, Default)]
struct MapOptions {
    /// Name of the map in the document's `maps` (defaults to D, or P for rota-baxter).
    #[arg(long, value_name = "NAME")]
    map: Option<String>,
    /// Rota-Baxter weight λ (defaults to the document's `weight`).
    #[arg(long, value_name = "p/q", allow_hyphen_values = true)]
    weight: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Subject {
    HomNovikov,
    HomLie,
    HomAssoc,
    Supercomm,
    Derivation,
    RotaBaxter,
    Quadratic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    SubAdjacent,
    Untwist,
    AlphaInvBracket,
    YauSquare,
    DerivProduct,
    TwistedDerivProduct,
    XiFamily,
    RotaBaxter,
    FormTwist,
    HalfBracket,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ParityChoice {
    Even,
    Odd,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Action {
    Check,
    Infinitesimal,
    Trivialize,
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome::report(0, text)
            };
        }
    };
    match commands::dispatch(&cli) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::from_error(&e),
    }
}
