use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};

use spherical_pi::io::{self, catalog, ReportFormat};
use spherical_pi::lattice::dual_saturation;
use spherical_pi::oracle::{enumerate_torsion, structure_match};
use spherical_pi::spherical::{self, has_failures, SphericalDatum};

const EXIT_VALIDATION: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "spherical-pi",
    version,
    about = "Prime-to-p component and fundamental groups of spherical homogeneous spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute pi0(H) and pi1(G/H) away from p
    Compute {
        file: PathBuf,
        /// Override the characteristic exponent in the document
        #[arg(long = "p")]
        p: Option<u64>,
        /// Treat a failed coroot-span check as an error
        #[arg(long)]
        strict: bool,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: ReportFormat,
    },
    /// Run the consistency checks only
    Validate {
        file: PathBuf,
        #[arg(long)]
        strict: bool,
    },
    /// Built-in worked examples
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Cross-check the color saturation by brute-force enumeration
    Oracle {
        file: PathBuf,
        /// Modulus N: enumerate the N-torsion of the saturation quotient
        #[arg(long)]
        torsion: u64,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List entry names
    List,
    /// Run one entry in every catalogued characteristic
    Run {
        name: String,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: ReportFormat,
    },
    /// Run every entry
    RunAll,
}

fn parse_format(s: &str) -> Result<ReportFormat, String> {
    s.parse()
}

/// An error carrying the exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

fn input_error(error: anyhow::Error) -> Failure {
    Failure {
        code: EXIT_INPUT,
        error,
    }
}

fn load(path: &Path) -> Result<SphericalDatum, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(input_error)?;
    io::parse(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(input_error)
}

fn compute(path: &Path, p: Option<u64>, strict: bool, format: ReportFormat) -> Result<u8, Failure> {
    let mut sd = load(path)?;
    if let Some(p) = p {
        sd = sd
            .with_char_exponent(p)
            .context("--p")
            .map_err(input_error)?;
    }
    let checks = spherical::validate(&sd, strict);
    let mut report = spherical::full_report(&sd)
        .context("computing report")
        .map_err(input_error)?;
    report.validation = checks;
    print!("{}", io::serialize_report(&report, format));
    if has_failures(&report.validation) {
        eprintln!("validation failed (strict)");
        return Ok(EXIT_VALIDATION);
    }
    Ok(0)
}

fn validate(path: &Path, strict: bool) -> Result<u8, Failure> {
    let sd = load(path)?;
    let checks = spherical::validate(&sd, strict);
    for c in &checks {
        println!("[{}] {}: {}", c.status, c.check, c.message);
    }
    Ok(if has_failures(&checks) { EXIT_VALIDATION } else { 0 })
}

fn run_entry(entry: &catalog::CatalogEntry, format: ReportFormat) -> bool {
    let mut all = true;
    for run in entry.run() {
        let ok = run.matches();
        all &= ok;
        println!("== {} (p = {}) ==", entry.name, run.expected.p);
        print!("{}", io::serialize_report(&run.report, format));
        println!(
            "expected: pi0 = {}, pi1 = {} ... {}",
            run.expected.pi0,
            run.expected.pi1,
            if ok { "ok" } else { "MISMATCH" }
        );
    }
    all
}

fn catalog_cmd(action: CatalogAction) -> Result<u8, Failure> {
    match action {
        CatalogAction::List => {
            for e in catalog::catalog() {
                println!("{:<24} {}", e.name, e.description);
            }
            Ok(0)
        }
        CatalogAction::Run { name, format } => {
            let entry = catalog::find(&name)
                .ok_or_else(|| input_error(anyhow!("no catalog entry named `{name}`")))?;
            Ok(if run_entry(&entry, format) { 0 } else { EXIT_VALIDATION })
        }
        CatalogAction::RunAll => {
            let mut all = true;
            for entry in catalog::catalog() {
                let runs = entry.run();
                for run in &runs {
                    let ok = run.matches();
                    all &= ok;
                    println!(
                        "{:<24} p={} pi0={} pi1={} {}",
                        entry.name,
                        run.expected.p,
                        run.report.pi0,
                        run.report.pi1,
                        if ok { "ok" } else { "MISMATCH" }
                    );
                }
            }
            Ok(if all { 0 } else { EXIT_VALIDATION })
        }
    }
}

fn oracle(path: &Path, n: u64) -> Result<u8, Failure> {
    let sd = load(path)?;
    let (_, predicted) = dual_saturation(sd.weight_rank(), sd.colors())
        .context("saturating")
        .map_err(input_error)?;
    let sample = enumerate_torsion(sd.colors(), n)
        .context("enumerating torsion")
        .map_err(input_error)?;
    let m = structure_match(&sample, &predicted, n);
    println!("predicted Xi°(X)/Xi(X) = {predicted}");
    println!("enumerated {} element(s) of {n}-torsion", sample.len());
    for (order, count) in &m.observed {
        println!("  order {order}: {count}");
    }
    for d in &m.diagnostics {
        println!("  {d}");
    }
    println!("{}", if m.matched { "match" } else { "MISMATCH" });
    Ok(if m.matched { 0 } else { EXIT_VALIDATION })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute {
            file,
            p,
            strict,
            format,
        } => compute(&file, p, strict, format),
        Command::Validate { file, strict } => validate(&file, strict),
        Command::Catalog { action } => catalog_cmd(action),
        Command::Oracle { file, torsion } => oracle(&file, torsion),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}
