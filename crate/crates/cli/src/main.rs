mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kostka_core::{
    build_l, enumerate_ssyt, kostka, removal_map_analysis, sweep_identity, vershik_bijection,
    Composition, Error, Partition,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "kostka-kit",
    version,
    about = "Kostka numbers, row insertion and Vershik's relation"
)]
struct Cli {
    /// Output format.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "KOSTKA_KIT_FORMAT",
        default_value = "ascii"
    )]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Count (and optionally list) semistandard tableaux of a shape and content.
    Kostka {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        #[arg(long, value_parser = parse_composition)]
        weight: Composition,
        /// Print every tableau, not just the count.
        #[arg(long)]
        list: bool,
    },
    /// The insertion bijection and the identity it proves.
    #[command(subcommand)]
    Vershik(Vershik),
}

#[derive(Subcommand)]
enum Vershik {
    /// Print the bijection between (T, x) pairs and the μ-tableaux.
    Table {
        #[arg(long, value_parser = parse_partition)]
        rho: Partition,
        #[arg(long, value_parser = parse_composition)]
        lambda: Composition,
    },
    /// Check the identity for every λ ⊢ n, ρ ⊢ n-1 with n up to max-n.
    Sweep {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        /// Worker threads; output order does not depend on it.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: Option<u64>,
    },
    /// Decide whether removing one box pairs μ-tableaux with ρ-tableaux.
    Removal {
        #[arg(long, value_parser = parse_partition)]
        rho: Partition,
        #[arg(long, value_parser = parse_composition)]
        lambda: Composition,
    },
}

fn parse_parts(s: &str) -> Result<Vec<usize>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|e| format!("`{}`: {e}", p.trim()))
        })
        .collect()
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::new(parse_parts(s)?).map_err(|e| e.to_string())
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    parse_parts(s).map(Composition::new)
}

/// What a command produced: text or JSON for stdout, and whether every
/// check it ran passed.
struct Report {
    text: String,
    passed: bool,
}

fn json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string(value)?)
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    let emit = |ascii: String, value: anyhow::Result<String>| match cli.format {
        Format::Ascii => Ok(ascii),
        Format::Json => value,
    };

    match &cli.command {
        Command::Kostka {
            shape,
            weight,
            list,
        } => {
            if shape.weight() != weight.weight() {
                return Err(Error::WeightMismatch {
                    expected: shape.weight(),
                    actual: weight.weight(),
                }
                .into());
            }
            let count = kostka(shape, weight)?;
            let tableaux = if *list {
                Some(enumerate_ssyt(shape, weight))
            } else {
                None
            };
            let ascii = render::kostka(count, tableaux.as_deref());
            let value = json(&serde_json::json!({
                "shape": shape,
                "weight": weight,
                "kostka": count,
                "tableaux": tableaux,
            }));
            Ok(Report {
                text: emit(ascii, value)?,
                passed: true,
            })
        }
        Command::Vershik(Vershik::Table { rho, lambda }) => {
            let table = vershik_bijection(rho, lambda)?;
            let l = build_l(rho, lambda)?;
            Ok(Report {
                text: emit(render::table(&table, &l), json(&table))?,
                passed: true,
            })
        }
        Command::Vershik(Vershik::Sweep { max_n, jobs }) => {
            let records = sweep_identity(*max_n as usize, jobs.map(|j| j as usize))?;
            let passed = records.iter().all(|r| r.ok);
            Ok(Report {
                text: emit(render::sweep(&records), json(&records))?,
                passed,
            })
        }
        Command::Vershik(Vershik::Removal { rho, lambda }) => {
            let report = removal_map_analysis(rho, lambda)?;
            Ok(Report {
                text: emit(render::removal(&report), json(&report))?,
                passed: report.is_bijective,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let mut out = io::stdout().lock();
            let _ = writeln!(out, "{}", report.text.trim_end());
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            // Bad input is a usage error; anything else means a check failed.
            match err.downcast_ref::<Error>() {
                Some(Error::BijectionBroken(_) | Error::CountOverflow | Error::ThreadPool(_))
                | None => ExitCode::from(1),
                Some(_) => ExitCode::from(2),
            }
        }
    }
}
