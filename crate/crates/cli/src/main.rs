//! `algknot`: invariants of algebraic knots from the command line.
//!
//! Exit codes: 0 on success, 2 on invalid input, 3 when an internal
//! consistency check fails.

mod commands;
mod output;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use algknot_core::KnotSpec;

#[derive(Debug, Parser)]
#[command(name = "algknot", version, about = "Invariants of algebraic knots")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Gcd chain, semigroup, cable stages, Milnor number and genera.
    Info(KnotArgs),
    /// Breakpoints of the Upsilon function on [0, 1].
    Upsilon {
        #[command(flatten)]
        knot: KnotArgs,
        /// Evaluate at this rational ("p/q"); repeatable.
        #[arg(long = "at", value_name = "RATIONAL")]
        at: Vec<String>,
        /// Emit N + 1 evenly spaced samples for plotting.
        #[arg(long, value_name = "N")]
        samples: Option<usize>,
        /// Report the function on [0, 2] using Υ(2 - t) = Υ(t).
        #[arg(long)]
        extend: bool,
    },
    /// Tristram-Levine signature function of a torus knot.
    Signature {
        #[command(flatten)]
        knot: KnotArgs,
        /// Evaluate at this x in [0, 1] ("p/q"); repeatable.
        #[arg(long = "at", value_name = "RATIONAL")]
        at: Vec<String>,
    },
    /// Cobordism genus bounds between K0 and K1, with g(K0) <= g(K1).
    Obstruct {
        /// Puiseux text ("8;10,31") or `torus P Q`.
        #[arg(long, num_args = 1..=3, required = true, value_name = "KNOT")]
        k0: Vec<String>,
        /// Puiseux text ("4;30,31") or `torus P Q`.
        #[arg(long, num_args = 1..=3, required = true, value_name = "KNOT")]
        k1: Vec<String>,
    },
    /// Enumerate (a, b, c) giving pairs (2a; b, c) and (a; 3b, c).
    SearchFamily {
        #[arg(long, default_value_t = 6)]
        max_a: u64,
        /// Defaults to the largest b allowed by b < c/3.
        #[arg(long)]
        max_b: Option<u64>,
        #[arg(long, default_value_t = 60)]
        max_c: u64,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct KnotArgs {
    /// Puiseux characteristic sequence "q0;q1,...,qn".
    #[arg(long, value_name = "TEXT")]
    puiseux: Option<String>,
    /// Torus knot T(P, Q).
    #[arg(long, num_args = 2, value_names = ["P", "Q"])]
    torus: Option<Vec<u64>>,
}

impl KnotArgs {
    fn knot(&self) -> Result<KnotSpec, CliError> {
        match (&self.puiseux, &self.torus) {
            (Some(text), _) => parse_knot(text),
            (None, Some(pq)) => KnotSpec::torus(pq[0], pq[1]).map_err(CliError::input),
            (None, None) => Err(CliError::Input("no knot given".into())),
        }
    }
}

fn parse_knot(text: &str) -> Result<KnotSpec, CliError> {
    text.parse::<KnotSpec>().map_err(CliError::input)
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Internal(String),
}

impl CliError {
    pub fn input(err: impl std::fmt::Display) -> Self {
        Self::Input(err.to_string())
    }

    pub fn internal(err: impl std::fmt::Display) -> Self {
        Self::Internal(err.to_string())
    }

    fn exit_code(&self) -> u8 {
        match self {
            Self::Input(_) => 2,
            Self::Internal(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Input(msg) => write!(f, "invalid input: {msg}"),
            Self::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    let doc = match cli.command {
        Command::Info(args) => commands::info(&args.knot()?)?,
        Command::Upsilon {
            knot,
            at,
            samples,
            extend,
        } => commands::upsilon(&knot.knot()?, &at, samples, extend)?,
        Command::Signature { knot, at } => commands::signature(&knot.knot()?, &at)?,
        Command::Obstruct { k0, k1 } => {
            commands::obstruct(&parse_knot(&k0.join(" "))?, &parse_knot(&k1.join(" "))?)?
        }
        Command::SearchFamily {
            max_a,
            max_b,
            max_c,
        } => commands::search_family(max_a, max_b, max_c)?,
    };
    doc.render(cli.format)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let default_hook = panic::take_hook();
    panic::set_hook(Box::new(move |info| {
        eprintln!("internal error: consistency check failed");
        default_hook(info);
    }));
    match panic::catch_unwind(AssertUnwindSafe(|| run(cli))) {
        Ok(Ok(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Err(err)) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code())
        }
        Err(_) => ExitCode::from(3),
    }
}
