//! `bbcells` command-line front end.
//!
//! Every subcommand prints a table by default and a JSON document with
//! `--json`. Exit status is 0 on success, 1 for domain errors and 2 for usage
//! errors.

mod commands;
mod error;
mod output;

use std::io::{Read, Write};
use std::process::ExitCode;

use bbcells::graded::GradedPresentation;
use bbcells::hilb::WeightVector2;
use bbcells::io::{read_monoid, read_presentation, read_quotient};
use bbcells::truncation::MonomialQuotient;
use bbcells::{AffineMonoid, IntVector};
use clap::{Args, CommandFactory, Parser, Subcommand};
use num_bigint::BigInt;

use commands::{algebra, hilb, monoid};
use error::CliError;
use output::Output;

#[derive(Parser)]
#[command(name = "bbcells", version, about = "Białynicki-Birula decompositions for torus actions on affine schemes")]
struct Cli {
    /// Print a JSON document instead of a table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Affine monoids in Z^n.
    #[command(subcommand)]
    Monoid(MonoidCommand),
    /// Graded presentations and monomial quotients.
    #[command(subcommand)]
    Algebra(AlgebraCommand),
    /// Torus-fixed points and cells of the Hilbert scheme of points in the plane.
    #[command(subcommand)]
    Hilb(HilbCommand),
}

#[derive(Subcommand)]
enum MonoidCommand {
    /// Facets, units, zero criterion and Kempf vector.
    Analyze(MonoidInput),
    /// Projection killing the units, with the image monoid.
    Reduce(MonoidInput),
}

#[derive(Args)]
struct MonoidInput {
    /// Monoid document ("-" for stdin).
    #[arg(short, long, value_name = "FILE")]
    input: String,
}

#[derive(Args)]
struct WithMonoid {
    /// Presentation or quotient document ("-" for stdin).
    #[arg(short, long, value_name = "FILE")]
    input: String,
    /// Monoid document.
    #[arg(short, long, value_name = "FILE")]
    monoid: String,
}

#[derive(Subcommand)]
enum AlgebraCommand {
    /// Presentation of the limit scheme: outsider variables set to zero.
    Bbplus(WithMonoid),
    /// Presentation of the fixed locus.
    Fixed {
        #[arg(short, long, value_name = "FILE")]
        input: String,
    },
    /// Whether the limit scheme is open near the origin.
    Check(WithMonoid),
    /// Graded dimensions of A/J^(n+1) for a monomial quotient.
    Truncate {
        #[command(flatten)]
        files: WithMonoid,
        #[arg(short = 'n', value_name = "LEVEL")]
        level: usize,
    },
    /// dim (A_n)_λ for n = 0..=N against dim A_λ.
    Stabilize {
        #[command(flatten)]
        files: WithMonoid,
        /// The weight λ, comma separated.
        #[arg(short = 'w', value_name = "WEIGHT", allow_hyphen_values = true, value_parser = parse_vector)]
        weight: IntVector,
        /// Largest level to compute (default: n_λ + 2).
        #[arg(short = 'n', value_name = "N")]
        n_max: Option<usize>,
    },
    /// Compare dim (A_{n_λ})_λ with dim A_λ for every weight up to a Kempf degree.
    Algebraize {
        #[command(flatten)]
        files: WithMonoid,
        #[arg(long, value_name = "DEGREE", default_value_t = 8)]
        bound: usize,
    },
}

#[derive(Args)]
struct Colength {
    /// Number of points.
    #[arg(short = 'd', value_name = "D", allow_negative_numbers = true)]
    d: i64,
}

#[derive(Args)]
struct OneWeight {
    #[command(flatten)]
    colength: Colength,
    /// Weight vector w1,w2 (default: 1,d+1).
    #[arg(short = 'w', value_name = "W1,W2", allow_hyphen_values = true, value_parser = parse_pair)]
    weight: Option<(i64, i64)>,
}

#[derive(Subcommand)]
enum HilbCommand {
    /// Monomial ideals of colength d.
    FixedPoints(Colength),
    /// Bigraded tangent characters at the monomial ideals.
    Tangent(Colength),
    /// Cell dimension at every monomial ideal.
    Cells(OneWeight),
    /// Intersection dimensions of the cells for two weights.
    Intersect {
        #[command(flatten)]
        colength: Colength,
        /// Give exactly twice.
        #[arg(short = 'w', value_name = "W1,W2", allow_hyphen_values = true, value_parser = parse_pair, required = true)]
        weights: Vec<(i64, i64)>,
    },
    /// Histogram of cell dimensions.
    Poincare(OneWeight),
}

fn parse_vector(s: &str) -> Result<IntVector, String> {
    s.split(',')
        .map(|t| t.trim().parse::<BigInt>().map_err(|_| format!("invalid integer {t:?}")))
        .collect::<Result<Vec<_>, _>>()
        .map(IntVector::new)
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [a, b] = parts.as_slice() else {
        return Err(format!("expected two comma-separated integers, got {s:?}"));
    };
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("invalid integer {t:?}"));
    Ok((parse(a)?, parse(b)?))
}

fn read_file(path: &str) -> Result<String, CliError> {
    let mut text = String::new();
    let result = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| CliError::new("io_error", e.to_string()).in_file(path))?;
    Ok(text)
}

fn load<T>(path: &str, read: fn(&str) -> Result<T, bbcells::io::IoError>) -> Result<T, CliError> {
    let text = read_file(path)?;
    read(&text).map_err(|e| CliError::from(e).in_file(path))
}

fn load_monoid(path: &str) -> Result<AffineMonoid, CliError> {
    load(path, read_monoid)
}

fn load_presentation(path: &str) -> Result<GradedPresentation, CliError> {
    load(path, read_presentation)
}

fn load_quotient(path: &str) -> Result<MonomialQuotient, CliError> {
    load(path, read_quotient)
}

fn weight(pair: (i64, i64)) -> Result<WeightVector2, CliError> {
    Ok(WeightVector2::new(pair.0, pair.1)?)
}

fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Monoid(MonoidCommand::Analyze(a)) => monoid::analyze(&load_monoid(&a.input)?),
        Command::Monoid(MonoidCommand::Reduce(a)) => monoid::reduce(&load_monoid(&a.input)?),
        Command::Algebra(cmd) => match cmd {
            AlgebraCommand::Bbplus(f) => algebra::bbplus(&load_presentation(&f.input)?, &load_monoid(&f.monoid)?),
            AlgebraCommand::Fixed { input } => algebra::fixed(&load_presentation(&input)?),
            AlgebraCommand::Check(f) => algebra::check(&load_presentation(&f.input)?, &load_monoid(&f.monoid)?),
            AlgebraCommand::Truncate { files, level } => {
                algebra::truncate_cmd(&load_quotient(&files.input)?, &load_monoid(&files.monoid)?, level)
            }
            AlgebraCommand::Stabilize { files, weight, n_max } => {
                algebra::stabilize(&load_quotient(&files.input)?, &load_monoid(&files.monoid)?, &weight, n_max)
            }
            AlgebraCommand::Algebraize { files, bound } => {
                algebra::algebraize(&load_quotient(&files.input)?, &load_monoid(&files.monoid)?, bound)
            }
        },
        Command::Hilb(cmd) => match cmd {
            HilbCommand::FixedPoints(c) => hilb::fixed_points(hilb::colength(c.d)?),
            HilbCommand::Tangent(c) => hilb::tangent(hilb::colength(c.d)?),
            HilbCommand::Cells(a) => {
                let d = hilb::colength(a.colength.d)?;
                let w = a.weight.map_or(Ok(WeightVector2::default_generic(d)), weight)?;
                hilb::cells(d, w)
            }
            HilbCommand::Intersect { colength, weights } => {
                let d = hilb::colength(colength.d)?;
                hilb::intersect(d, weight(weights[0])?, weight(weights[1])?)
            }
            HilbCommand::Poincare(a) => {
                let d = hilb::colength(a.colength.d)?;
                let w = a.weight.map_or(Ok(WeightVector2::default_generic(d)), weight)?;
                hilb::poincare(d, w)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Hilb(HilbCommand::Intersect { weights, .. }) = &cli.command {
        if weights.len() != 2 {
            Cli::command()
                .error(clap::error::ErrorKind::WrongNumberOfValues, "-w must be given exactly twice")
                .exit();
        }
    }
    let json = cli.json;
    let mut stdout = std::io::stdout().lock();
    match run(cli.command) {
        Ok(out) => {
            let body = if json { out.json } else { out.text };
            let _ = stdout.write_all(body.as_bytes());
            ExitCode::SUCCESS
        }
        Err(err) => {
            if json {
                #[derive(serde::Serialize)]
                struct Envelope<'a> {
                    error: &'a CliError,
                }
                let mut body = serde_json::to_string_pretty(&Envelope { error: &err }).expect("errors serialize");
                body.push('\n');
                let _ = stdout.write_all(body.as_bytes());
            } else {
                eprintln!("{err}");
            }
            ExitCode::from(1)
        }
    }
}
