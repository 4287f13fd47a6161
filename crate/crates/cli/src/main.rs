use clap::{Parser, Subcommand, ValueEnum};

use blowdown_cli::{pair_record, render_dot, render_trace, verify_range};
use blowdown_core::NegContinuedFraction;

/// Exact-integer toolkit for blow-up weight chains, negative continued
/// fractions, linear plumbings and torus-knot Kirby diagrams.
#[derive(Parser)]
#[command(name = "blowdown", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full trace for one coprime pair (p,q)
    Trace {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
    },
    /// Check every identity for all coprime (p,q) in a range
    Verify {
        #[arg(long)]
        p_max: i64,
        #[arg(long, default_value_t = 2)]
        p_min: i64,
        /// Number of worker threads
        #[arg(long, default_value_t = 1)]
        parallel: usize,
        /// Use the orientation-insensitive lens-space equivalence
        #[arg(long)]
        orientation_insensitive: bool,
    },
    /// Negative continued fraction expansion of P/Q
    Expand {
        /// Numerator P
        #[arg(long)]
        p: i64,
        /// Denominator Q
        #[arg(long)]
        q: i64,
    },
    /// Emit the record for one pair as json, dot or text
    Emit {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

// exit codes: 0 success / all pass, 1 verification failure, 2 usage error
fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Trace { p, q } => match render_trace(p, q) {
            Ok(out) => {
                print!("{out}");
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Command::Verify {
            p_max,
            p_min,
            parallel,
            orientation_insensitive,
        } => {
            if p_max < 2 || p_min > p_max {
                eprintln!("error: need 2 <= p_min <= p_max");
                return 2;
            }
            let report = verify_range(p_min, p_max, parallel, orientation_insensitive);
            print!("{}", report.render());
            if report.all_pass() {
                0
            } else {
                1
            }
        }
        Command::Expand { p, q } => match NegContinuedFraction::expand(p, q) {
            Ok(f) => {
                println!("{f}");
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Command::Emit { p, q, format } => {
            let out = match format {
                Format::Json => pair_record(p, q)
                    .map(|r| serde_json::to_string_pretty(&r).expect("record serializes") + "\n"),
                Format::Dot => render_dot(p, q),
                Format::Text => render_trace(p, q),
            };
            match out {
                Ok(out) => {
                    print!("{out}");
                    0
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    2
                }
            }
        }
    }
}

fn main() {
    std::process::exit(run(Cli::parse()));
}
