// SPDX-License-Identifier: Apache-2.0

//! The `qfi` command line. [`run`] takes the full argument list and returns
//! the exit code with captured stdout and stderr, so tests need no process.

mod report;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use qfi_core::{Envelope, Error};
use serde_json::Value;

/// Exit code for a completed computation, whatever its verdict.
pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "qfi", version, about = "Principality of split primes in quadratic fields")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// How the odd prime q factors in Q(√D).
    Split {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        q: BigInt,
    },
    /// Decide whether (q, n+√D) is principal and build a generator.
    Principal {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        q: BigInt,
        /// Also print the intermediate quantities w, z, r, s.
        #[arg(long)]
        emit_derivation: bool,
    },
    /// Search for f(x, y) = target, the form given as a,2b,c.
    Represents {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long, allow_negative_numbers = true)]
        target: BigInt,
        /// Try -target as well.
        #[arg(long)]
        all_signs: bool,
    },
    /// Class number one, decided with a certificate.
    H1 {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
    },
    /// Same as h1, printing and re-validating the full evidence.
    Certificate {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
    },
    /// Classify every squarefree D with min ≤ |D| ≤ max.
    Scan {
        #[arg(long)]
        min: u64,
        #[arg(long)]
        max: u64,
        #[arg(long, env = "QFI_JOBS", value_parser = clap::value_parser!(u16).range(1..))]
        jobs: Option<u16>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Self { code, stdout: String::new(), stderr }
    }
}

/// Runs the command line `args`, the first element being the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { Outcome::fail(EXIT_USAGE, text) } else { Outcome::ok(text) };
        }
    };
    match execute(cli.command) {
        Ok((envelope, text)) => Outcome::ok(match cli.format {
            Format::Json => envelope.to_json() + "\n",
            Format::Text => text,
        }),
        Err(e @ Error::Parse(_)) => Outcome::fail(EXIT_USAGE, format!("error: {e}\n")),
        Err(e) => Outcome::fail(EXIT_DOMAIN, format!("error: {e}\n")),
    }
}

fn execute(command: Command) -> qfi_core::Result<(Envelope, String)> {
    let (name, inputs, (result, text)): (&str, Value, (Value, String)) = match command {
        Command::Split { d, q } => {
            ("split", serde_json::json!({ "d": d, "q": q.to_string() }), report::split(d, &q)?)
        }
        Command::Principal { d, q, emit_derivation } => (
            "principal",
            serde_json::json!({ "d": d, "q": q.to_string(), "emit_derivation": emit_derivation }),
            report::principal(d, &q, emit_derivation)?,
        ),
        Command::Represents { form, target, all_signs } => (
            "represents",
            serde_json::json!({ "form": form, "target": target.to_string(), "all_signs": all_signs }),
            report::represents(&form, &target, all_signs)?,
        ),
        Command::H1 { d } => ("h1", serde_json::json!({ "d": d }), report::h1(d, false)?),
        Command::Certificate { d } => ("certificate", serde_json::json!({ "d": d }), report::h1(d, true)?),
        Command::Scan { min, max, jobs } => (
            "scan",
            serde_json::json!({ "min": min, "max": max }),
            report::scan(min, max, jobs.map(usize::from))?,
        ),
    };
    Ok((Envelope::new(name, inputs, result), text))
}
