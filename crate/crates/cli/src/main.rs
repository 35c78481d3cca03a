//! `sylvester`: classify quadratic forms and print checkable evidence.

mod input;
mod report;
mod run;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser};
use rayon::prelude::*;

use input::Source;
use report::Report;
use run::{run, Command, Options, EXIT_INPUT};

#[derive(Parser, Debug)]
#[command(name = "sylvester", version, about = "Exact definiteness of quadratic forms")]
#[command(group(ArgGroup::new("input").args(["matrix", "form", "file", "batch"])))]
struct Cli {
    #[arg(value_enum)]
    command: Command,

    /// Symmetric matrix, rows split by `;` or newlines (`"2 1; 1 2"`).
    #[arg(long, allow_hyphen_values = true)]
    matrix: Option<String>,

    /// Quadratic form in x, y, z or x1..xn (`"2x^2 + 2xy + 2y^2"`).
    #[arg(long, allow_hyphen_values = true)]
    form: Option<String>,

    /// Read one matrix or form from a file (`-` for stdin).
    #[arg(long)]
    file: Option<PathBuf>,

    /// One matrix or form per line; blank lines and `#` comments skipped.
    #[arg(long)]
    batch: Option<PathBuf>,

    /// With `minors`: print every principal minor, not only the leading ones.
    #[arg(long)]
    all: bool,

    /// Machine-readable output.
    #[arg(long)]
    json: bool,

    /// Seed for the `oracle` sampling check.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Number of random vectors tried by the `oracle` sampling check.
    #[arg(long, default_value_t = 1000)]
    trials: usize,
}

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_INPUT as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        all: cli.all,
        seed: cli.seed,
        trials: cli.trials,
    };

    let (sources, batch) = if let Some(path) = &cli.batch {
        match input::read_path(path) {
            Ok(text) => (input::batch_items(&text), true),
            Err(e) => return input_error(format_args!("{}: {e}", path.display())),
        }
    } else if let Some(m) = cli.matrix {
        (vec![Source::Matrix(m)], false)
    } else if let Some(f) = cli.form {
        (vec![Source::Form(f)], false)
    } else {
        let text = match &cli.file {
            Some(path) => input::read_path(path)
                .map_err(|e| format!("{}: {e}", path.display())),
            None => input::read_stdin().map_err(|e| format!("stdin: {e}")),
        };
        match text {
            Ok(t) => (vec![Source::Auto(t)], false),
            Err(e) => return input_error(e),
        }
    };

    // Classification is pure, so batch items run in parallel; collect keeps
    // input order.
    let reports: Vec<Report> = sources
        .par_iter()
        .map(|s| run(cli.command, opts, s))
        .collect();

    let mut stdout = io::stdout().lock();
    if cli.json {
        let json = if batch {
            serde_json::to_string_pretty(&reports)
        } else {
            serde_json::to_string_pretty(&reports[0])
        };
        let _ = writeln!(stdout, "{}", json.expect("report serializes"));
    }
    for (k, r) in reports.iter().enumerate() {
        if let Some(e) = &r.error {
            if batch {
                eprintln!("error: item {} ({}): {e}", k + 1, r.input);
            } else {
                eprintln!("error: {e}");
            }
        }
        if !cli.json {
            if batch {
                let _ = writeln!(stdout, "# {}", r.input);
            }
            let _ = write!(stdout, "{}", r.to_text());
        }
    }

    let code = reports.iter().map(|r| r.exit_code).max().unwrap_or(0);
    ExitCode::from(code as u8)
}
