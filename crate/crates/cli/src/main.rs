mod labels;
mod markdown;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use adelink::plumbing::{DynkinLabel, Family, PlumbingGraph};
use adelink::Error;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use report::Immersion;

#[derive(Parser)]
#[command(name = "adelink", version, about = "Invariants of simple singularity links and their immersions")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    #[value(alias = "markdown")]
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    A,
    D,
    E,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::D => Family::D,
            FamilyArg::E => Family::E,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Homology and Smale-type invariants of A_{n-1}, D_{n+2} (n = 2..9), E_6, E_7, E_8
    Table {
        #[arg(long, value_enum, ignore_case = true)]
        family: Option<FamilyArg>,
        /// Family parameter; A n is A_{n-1}, D n is D_{n+2}
        #[arg(long)]
        n: Option<u32>,
    },
    /// Full report for one or more singularities, e.g. `link A 2 E8`
    Link {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = false)]
        labels: Vec<String>,
    },
    /// Invariants of a plumbing graph read from a JSON file
    Graph { path: PathBuf },
    /// Smale invariants of the sphere immersions attached to a singularity
    Smale {
        #[arg(required = true, num_args = 1..)]
        labels: Vec<String>,
        #[arg(long, value_enum)]
        immersion: Immersion,
    },
    /// Bockstein table of a plumbing graph read from a JSON file
    Bockstein { path: PathBuf },
}

enum Failure {
    Usage(String),
    Domain(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotRationalHomologySphere { .. } | Error::FreeRankUnsupported(_) => Failure::Domain(e.to_string()),
            Error::InvalidParameter(_) | Error::InvalidGraph(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn table_labels(family: Option<FamilyArg>, n: Option<u32>) -> Result<Vec<DynkinLabel>, Failure> {
    let families: Vec<Family> = match family {
        Some(f) => vec![f.into()],
        None => vec![Family::A, Family::D, Family::E],
    };
    let mut out = Vec::new();
    for f in families {
        match n {
            Some(n) => out.push(DynkinLabel::new(f, n)?),
            None => {
                let range = if f == Family::E { 6..=8 } else { 2..=9 };
                for k in range {
                    out.push(DynkinLabel::new(f, k)?);
                }
            }
        }
    }
    Ok(out)
}

fn read_graph(path: &Path) -> Result<PlumbingGraph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(PlumbingGraph::from_json(&text)?)
}

fn run(cli: Cli) -> Result<String, Failure> {
    let fmt = cli.format;
    match cli.command {
        Command::Table { family, n } => {
            let rows =
                table_labels(family, n)?.into_iter().map(report::table_report).collect::<adelink::Result<Vec<_>>>()?;
            Ok(match fmt {
                Format::Json => json(&rows),
                Format::Md => markdown::table(&rows),
            })
        }
        Command::Link { labels } => {
            let labels = labels::parse_labels(&labels).map_err(Failure::Usage)?;
            let reports = labels.into_iter().map(report::link_report).collect::<adelink::Result<Vec<_>>>()?;
            Ok(match fmt {
                Format::Json => json(&reports),
                Format::Md => reports.iter().map(markdown::link).collect::<Vec<_>>().join("\n"),
            })
        }
        Command::Graph { path } => {
            let section = report::plumbing_section(&read_graph(&path)?)?;
            Ok(match fmt {
                Format::Json => json(&section),
                Format::Md => markdown::plumbing(&section, "##"),
            })
        }
        Command::Smale { labels, immersion } => {
            let labels = labels::parse_labels(&labels).map_err(Failure::Usage)?;
            let reports =
                labels.into_iter().map(|l| report::smale_report(l, immersion)).collect::<adelink::Result<Vec<_>>>()?;
            Ok(match fmt {
                Format::Json => json(&reports),
                Format::Md => markdown::smale(&reports),
            })
        }
        Command::Bockstein { path } => {
            let section = report::plumbing_section(&read_graph(&path)?)?;
            Ok(match fmt {
                Format::Json => json(&section.bockstein),
                Format::Md => markdown::bockstein(&section, "##"),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
