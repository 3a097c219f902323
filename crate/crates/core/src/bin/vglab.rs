use std::fs;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use vglab::algebra::ProjPoint;
use vglab::bundle::catalog::CaseId;
use vglab::bundle::{cohomology_table, h0_basis, parse_spec, restrict_to_line, BundleSpec};
use vglab::plucker::{plucker_interpolated, plucker_symbolic_det};
use vglab::verify::{obstructions, run_case, stratify, Report, RunOptions};
use vglab::Error;

#[derive(Parser)]
#[command(
    name = "vglab",
    version,
    about = "Rank-2 bundles on projective space and their degree-3 Pluecker maps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Named cases
    List,
    /// Full verification of a named case, or `all`
    Verify {
        case: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
    /// Chern data of a bundle spec
    Chern { spec: String },
    /// Cohomology table of a bundle spec
    Cohom {
        spec: String,
        #[arg(long, default_value = "-5..5", allow_hyphen_values = true)]
        twists: String,
    },
    /// Splitting type on the line through two points
    Restrict {
        spec: String,
        #[arg(long)]
        line: String,
    },
    /// Pluecker coordinates of the induced map
    Plucker { spec: String },
    /// The arithmetic obstruction oracles
    Obstructions {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Sample the strata of M(3,6)
    Stratify {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::UnknownCase(_) => Failure::Usage(e.to_string()),
            other => Failure::Compute(other.to_string()),
        }
    }
}

fn parse_twists(s: &str) -> Result<RangeInclusive<i64>, Failure> {
    let bad = || Failure::Usage(format!("twists must look like a..b, got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b
        .trim_start_matches('=')
        .trim()
        .parse()
        .map_err(|_| bad())?;
    Ok(a..=b)
}

fn render(reports: &[Report], format: Format) -> String {
    match format {
        Format::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
        Format::Json if reports.len() == 1 => reports[0].to_json() + "\n",
        Format::Json => serde_json::to_string_pretty(reports).expect("reports serialize") + "\n",
    }
}

fn emit(text: &str, out: Option<&str>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Compute(format!("{path}: {e}"))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::List => {
            for id in CaseId::all() {
                println!("{id:<12} {}", id.case.description());
            }
            Ok(true)
        }
        Command::Verify {
            case,
            seed,
            samples,
            format,
            out,
        } => {
            let ids = if case == "all" {
                CaseId::all()
            } else {
                vec![case.parse::<CaseId>()?]
            };
            let opts = RunOptions::with_samples(seed, samples);
            let reports: Vec<Report> = ids.into_iter().map(|id| run_case(id, &opts)).collect();
            emit(&render(&reports, format), out.as_deref())?;
            Ok(reports.iter().all(|r| r.passed))
        }
        Command::Chern { spec } => {
            let spec = parse_spec(&spec)?;
            println!("{}", spec.chern()?);
            Ok(true)
        }
        Command::Cohom { spec, twists } => {
            let range = parse_twists(&twists)?;
            let pres = parse_spec(&spec)?.expand()?;
            print!("{}", cohomology_table(&pres, range)?);
            Ok(true)
        }
        Command::Restrict { spec, line } => {
            let (p, q) = line
                .split_once(';')
                .ok_or_else(|| Failure::Usage("--line needs two points \"P;Q\"".into()))?;
            let (p, q): (ProjPoint, ProjPoint) = (p.parse()?, q.parse()?);
            let pres = parse_spec(&spec)?.expand()?;
            println!("{}", restrict_to_line(&pres, &p, &q)?);
            Ok(true)
        }
        Command::Plucker { spec } => {
            let spec: BundleSpec = parse_spec(&spec)?;
            let pres = spec.expand()?;
            let sections = h0_basis(&pres)?;
            let map = match plucker_symbolic_det(&pres, &sections) {
                Err(Error::ShapeMismatch(_)) => {
                    let c1 = pres.chern_data().c1;
                    plucker_interpolated(&pres, &sections, c1.max(0) as u32)?
                }
                other => other?,
            };
            print!("{map}");
            Ok(true)
        }
        Command::Obstructions { format } => {
            let r = obstructions();
            emit(&render(std::slice::from_ref(&r), format), None)?;
            Ok(r.passed)
        }
        Command::Stratify {
            samples,
            seed,
            format,
        } => {
            if samples == 0 {
                return Err(Failure::Usage("--samples must be at least 1".into()));
            }
            let s = stratify(samples, seed);
            let r = s.report();
            match format {
                Format::Text => emit(&render(std::slice::from_ref(&r), format), None)?,
                Format::Json => emit(
                    &(serde_json::to_string_pretty(&s).expect("report serializes") + "\n"),
                    None,
                )?,
            }
            Ok(r.passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("vglab: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(m)) => {
            eprintln!("vglab: {m}");
            ExitCode::from(1)
        }
    }
}
