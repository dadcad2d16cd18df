mod cli;
mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Map, Value};

use cli::{Cli, Command, Format};
use commands::Outcome;

fn run(cli: &Cli) -> flatcert::Result<(&'static str, Outcome)> {
    let seed = cli.common.seed;
    let n = match &cli.command {
        Command::VerifyFlatness { n, .. }
        | Command::VerifyGroebner { n, .. }
        | Command::TorusCheck { n, .. }
        | Command::PrimaryCheck { n } => Some(*n),
        Command::Hilbert { n, .. } => *n,
        _ => None,
    };
    if n == Some(0) {
        return Err(flatcert::Error::InvalidInput("n must be at least 1".into()));
    }
    Ok(match &cli.command {
        Command::VerifyFlatness { n, t_max, points, corrupt } => {
            ("verify-flatness", commands::verify_flatness(*n, *t_max, points, corrupt.as_deref(), seed)?)
        }
        Command::VerifyGroebner { n, random_orders } => ("verify-groebner", commands::verify_groebner(*n, *random_orders, seed)?),
        Command::Hilbert { file, n, t_max, method } => ("hilbert", commands::hilbert(file, *n, *t_max, *method)?),
        Command::XiTrials { d0, d1, trials } => ("xi-trials", commands::xi(*d0, *d1, *trials, seed)?),
        Command::TorusCheck { n, points } => ("torus-check", commands::torus(*n, points, seed)?),
        Command::ConicEquations { z, conics, samples } => {
            ("conic-equations", commands::conic(z.as_deref(), *conics, *samples, seed)?)
        }
        Command::PrimaryCheck { n } => ("primary-check", commands::primary(*n)?),
    })
}

fn render(command: &str, outcome: &Outcome, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", outcome.text),
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("schema".into(), json!(1));
            obj.insert("command".into(), json!(command));
            if let Value::Object(fields) = &outcome.report {
                for (k, v) in fields {
                    obj.insert(k.clone(), v.clone());
                }
            }
            let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("plain data");
            s.push('\n');
            s
        }
    }
}

fn emit(cli: &Cli, body: &str) -> std::io::Result<()> {
    match &cli.common.output {
        Some(path) => std::fs::write(path, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(3),
            };
        }
    };
    if let Some(w) = cli.common.workers {
        if w == 0 {
            eprintln!("error: --workers must be positive");
            return ExitCode::from(3);
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    match run(&cli) {
        Ok((command, outcome)) => {
            let body = render(command, &outcome, cli.common.format);
            if let Err(e) = emit(&cli, &body) {
                eprintln!("error: cannot write report: {e}");
                return ExitCode::from(3);
            }
            ExitCode::from(outcome.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::error_status(&e) as u8)
        }
    }
}
