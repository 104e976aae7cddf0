use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use freeorder::order::ordering_symbol;
use freeorder::{
    compare, enumerate_ball, orbit_zero, parse_word, sign_of, sort_ball, verify, verify_pingpong,
    weight, Rank, ReducedWord,
};

/// Left order on the free group F_k. Words use `a..z` for generators and
/// `A..Z` for inverses, or comma-separated signed indices such as `1,-2,3`.
#[derive(Parser)]
#[command(name = "freeorder", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the weight of a word.
    Weight {
        #[arg(short)]
        k: u32,
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Print as n/2 instead of a decimal.
        #[arg(long)]
        fraction: bool,
    },
    /// Print `+`, `0` or `-` for the sign of a word.
    Sign {
        #[arg(short)]
        k: u32,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Print `<`, `=` or `>` comparing U with V.
    Compare {
        #[arg(short)]
        k: u32,
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Print the exact image of 0 under the word.
    Orbit {
        #[arg(short)]
        k: u32,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Print the ball of radius R in ascending order, one word per line.
    Sort {
        #[arg(short)]
        k: u32,
        #[arg(short)]
        r: usize,
    },
    /// Check the weight against the action on every word of the ball.
    Verify {
        #[arg(short)]
        k: u32,
        #[arg(short)]
        r: usize,
    },
    /// Check the ping-pong inclusions of the generator maps.
    Pingpong {
        #[arg(short)]
        k: u32,
    },
}

enum Outcome {
    Ok,
    CheckFailed,
}

fn rank(k: u32) -> Result<Rank> {
    Ok(Rank::new(k)?)
}

fn word(text: &str, k: Rank) -> Result<ReducedWord> {
    parse_word(text, k).with_context(|| format!("cannot parse word {text:?}"))
}

fn run(command: Command, out: &mut impl Write) -> Result<Outcome> {
    match command {
        Command::Weight { k, word: w, fraction } => {
            let k = rank(k)?;
            let value = weight(&word(&w, k)?);
            if fraction {
                writeln!(out, "{}", value.as_fraction())?;
            } else {
                writeln!(out, "{value}")?;
            }
        }
        Command::Sign { k, word: w } => {
            let k = rank(k)?;
            writeln!(out, "{}", sign_of(&word(&w, k)?))?;
        }
        Command::Compare { k, u, v } => {
            let k = rank(k)?;
            let (u, v) = (word(&u, k)?, word(&v, k)?);
            writeln!(out, "{}", ordering_symbol(compare(&u, &v)))?;
        }
        Command::Orbit { k, word: w } => {
            let k = rank(k)?;
            writeln!(out, "{}", orbit_zero(&word(&w, k)?, k))?;
        }
        Command::Sort { k, r } => {
            let k = rank(k)?;
            for u in sort_ball(&enumerate_ball(k, r)) {
                writeln!(out, "{}", u.display(k))?;
            }
        }
        Command::Verify { k, r } => {
            let report = verify(rank(k)?, r);
            write!(out, "{report}")?;
            if !report.passed() {
                return Ok(Outcome::CheckFailed);
            }
        }
        Command::Pingpong { k } => {
            let report = verify_pingpong(rank(k)?);
            write!(out, "{report}")?;
            if !report.all_hold() {
                return Ok(Outcome::CheckFailed);
            }
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out);
    let flushed = out.flush();
    match result {
        Ok(Outcome::Ok) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(Outcome::Ok) => ExitCode::from(2),
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
