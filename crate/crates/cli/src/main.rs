use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};

use scalext_cli::{export_instance, resolve_instance, run_suite, Report, SUITES};
use scalext_core::catalog::{instance, INSTANCE_NAMES};
use scalext_core::check::CheckOptions;

#[derive(Parser)]
#[command(name = "scalext", version, about = "Exact checks for scalar-extension Hopf algebroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in instances and their perturbations.
    List,
    /// Run a verification suite.
    Verify {
        /// Catalog name or path to an instance file.
        #[arg(long)]
        instance: String,
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(long)]
        perturbation: Option<String>,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = 10)]
        witness_cap: usize,
        /// Include stage timings; the report is then no longer reproducible byte for byte.
        #[arg(long)]
        timings: bool,
    },
    /// Write a catalog instance as an instance file.
    Export {
        #[arg(long)]
        instance: String,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Exit 2: the input could not be turned into an instance.
struct Structural(anyhow::Error);

fn list(out: &mut impl Write) -> std::io::Result<()> {
    for name in INSTANCE_NAMES {
        let d = instance(name).expect("catalog name");
        writeln!(out, "{name:<12} {}", d.description)?;
        for p in &d.perturbations {
            writeln!(out, "  {:<20} [{}] {}", p.name, p.suite, p.description)?;
        }
    }
    Ok(())
}

fn verify(instance: &str, suite: &str, perturbation: Option<&str>, report: Option<&PathBuf>, cap: usize, timings: bool) -> Result<bool, Structural> {
    let base = resolve_instance(instance).map_err(|e| Structural(e.into()))?;
    let d = match perturbation {
        Some(p) => base.perturbed(p).map_err(|e| Structural(anyhow!(e).context(format!("applying perturbation {p}"))))?,
        None => base,
    };
    let run = run_suite(&d, suite, &CheckOptions::with_cap(cap));
    let r = Report::new(&d.name, suite, &run, cap, timings);
    let _ = std::io::stdout().lock().write_all(r.table().as_bytes());
    if let Some(path) = report {
        std::fs::write(path, r.to_json()).with_context(|| format!("writing {}", path.display())).map_err(Structural)?;
    }
    Ok(r.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            // a closed pipe (scalext list | head) is not an error
            let _ = list(&mut std::io::stdout().lock());
            ExitCode::SUCCESS
        }
        Command::Verify { instance, suite, perturbation, report, witness_cap, timings } => {
            match verify(&instance, &suite, perturbation.as_deref(), report.as_ref(), witness_cap, timings) {
                Ok(true) => ExitCode::SUCCESS,
                Ok(false) => ExitCode::from(1),
                Err(Structural(e)) => {
                    eprintln!("error: {e:#}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Export { instance: name, out } => {
            let Some(d) = instance(&name) else {
                eprintln!("error: no catalog instance named {name}");
                return ExitCode::from(2);
            };
            match std::fs::write(&out, export_instance(&d)) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: writing {}: {e}", out.display());
                    ExitCode::from(2)
                }
            }
        }
    }
}
