use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use parman_core::examples::{build_example, ExampleKind};
use parman_core::invariants::{analyze, Rigidity};
use parman_core::{AnalysisInput, Error};

#[derive(Parser)]
#[command(name = "parman", version, about = "Invariants of compact complex parallelizable manifolds G/Γ")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant report for an analysis input ("-" reads standard input).
    Analyze {
        path: String,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
        /// Word length bound for the non-commuting W check (overrides the file).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        depth: Option<u64>,
    },
    /// Print a ready-made analysis input as JSON.
    Example {
        kind: Kind,
        /// Non-square integer for the unit solvmanifold.
        #[arg(long, default_value_t = 2)]
        p: u64,
        /// Include the rotation by i in the unit solvmanifold lattice.
        #[arg(long)]
        with_i: bool,
        /// Complex dimension of the torus.
        #[arg(long, default_value_t = 1)]
        dim: usize,
        /// Abelianization rank of the SL_2 lattice.
        #[arg(long, default_value_t = 1)]
        rank: u64,
    },
    /// Validate an analysis input without computing invariants.
    Verify { path: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Pell,
    Iwasawa,
    Torus,
    #[value(name = "sl2-times-c")]
    Sl2TimesC,
}

fn read_input(path: &str) -> Result<AnalysisInput, Error> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::InvalidInput(format!("reading standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("reading {path}: {e}")))?
    };
    AnalysisInput::from_json(&text)
}

/// Writes to standard output, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Analyze { path, json, depth } => {
            let input = read_input(&path)?;
            let depth = depth.map_or(input.depth, |d| d as usize);
            let report = analyze(&input, depth)?;
            if json {
                emit(&format!("{}\n", report.to_json()));
            } else {
                emit(&report.to_text());
            }
            Ok(if report.rigid == Rigidity::Inconsistent { 2 } else { 0 })
        }
        Command::Example {
            kind,
            p,
            with_i,
            dim,
            rank,
        } => {
            let kind = match kind {
                Kind::Pell => ExampleKind::UnitSolvmanifold { p, with_i },
                Kind::Iwasawa => ExampleKind::Iwasawa,
                Kind::Torus => ExampleKind::Torus { n: dim },
                Kind::Sl2TimesC => ExampleKind::Sl2TimesC { rank },
            };
            emit(&format!("{}\n", build_example(kind)?.to_json()));
            Ok(0)
        }
        Command::Verify { path } => {
            let input = read_input(&path)?;
            input.algebra.validate()?;
            input.lattice.validate(&input.algebra)?;
            emit("ok\n");
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
