//! Command-line front end: argument definitions, document I/O and the
//! commands themselves. Every command returns an [`Outcome`] so it can be
//! exercised without spawning a process.

mod commands;
pub mod document;

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::{
    cmd_gen, cmd_map, cmd_roundtrip, cmd_suite, cmd_validate, run_sample, run_suite, Functor,
    GenKind, Outcome, SampleReport, EXIT_FAILED, EXIT_OK, EXIT_USAGE, SUITE_CHECKS,
};
pub use document::{parse, serialize, Document, ParseError};

#[derive(Debug, Parser)]
#[command(
    name = "perv-disc",
    version,
    about = "Exact checks for the C / A2 equivalence"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate an object or morphism document.
    Validate {
        /// Input file, or `-` for stdin.
        file: PathBuf,
    },
    /// Apply a functor and print the resulting document.
    Map {
        #[arg(long, value_enum)]
        functor: FunctorArg,
        file: PathBuf,
    },
    /// Certify T(S(x)) = x for C data, or the natural isomorphism for A2 data.
    Roundtrip { file: PathBuf },
    /// Print a random valid object.
    Gen {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        seed: u64,
        #[arg(long = "max-dim")]
        max_dim: Option<usize>,
    },
    /// Run the randomized certification suite.
    Suite {
        #[arg(long)]
        samples: u64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FunctorArg {
    S,
    T,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    C,
    A2,
}

fn read_input(path: &Path) -> Result<String, Outcome> {
    let result = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(path)
    };
    result.map_err(|e| Outcome {
        code: EXIT_USAGE,
        stdout: String::new(),
        stderr: format!("error: cannot read {}: {e}\n", path.display()),
    })
}

pub fn run(cli: Cli) -> Outcome {
    let with_file = |path: &Path, f: &dyn Fn(&str) -> Outcome| match read_input(path) {
        Ok(text) => f(&text),
        Err(out) => out,
    };
    match cli.command {
        Command::Validate { file } => with_file(&file, &cmd_validate),
        Command::Map { functor, file } => {
            let functor = match functor {
                FunctorArg::S => Functor::S,
                FunctorArg::T => Functor::T,
            };
            with_file(&file, &|text| cmd_map(text, functor))
        }
        Command::Roundtrip { file } => with_file(&file, &cmd_roundtrip),
        Command::Gen {
            kind,
            seed,
            max_dim,
        } => {
            let kind = match kind {
                KindArg::C => GenKind::C,
                KindArg::A2 => GenKind::A2,
            };
            cmd_gen(kind, seed, max_dim)
        }
        Command::Suite { samples, seed } => cmd_suite(samples, seed),
    }
}
