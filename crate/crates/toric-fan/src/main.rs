use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use toric_fan::cli::{error_object, run, CommandKind, Request};
use toric_fan::document::FanDocument;
use toric_fan::error::Error;
use toric_fan::field::Field;
use toric_fan::shelling::DEFAULT_BUDGET;

/// Exact-arithmetic analysis of rational pointed fans and their toric face
/// rings.
#[derive(Parser)]
#[command(name = "toric-fan", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a fan document.
    Validate(Common),
    /// Cohen-Macaulay, Euler, Gorenstein and canonical-ideal checks.
    Analyze(Common),
    /// Star cochain cohomology of every cone.
    Cohomology(Common),
    /// Graded Hilbert slice of the canonical module.
    Omega(Common),
    /// Graded Hilbert slice of a local cohomology module.
    Localcoh(LocalCoh),
    /// Gorenstein test with an explicit degree shift witness.
    Gorenstein(Common),
    /// Canonical module as a graded ideal, with the join cross-check.
    CanonicalIdeal(Common),
    /// Boundary-duality report for manifold-like supports.
    BoundaryDuality(Common),
    /// Backtracking shelling search.
    Shelling(Common),
    /// Semishelling search with ball/sphere recognition.
    Semishelling(Common),
    /// Cleanness test with lattice witnesses.
    Clean(Common),
    /// Everything: analyze plus shelling, semishelling and cleanness.
    All(Common),
}

#[derive(Args)]
struct Common {
    /// Fan document (JSON).
    file: PathBuf,
    /// Coefficient field: `q` or `fp:<prime>`; repeat to compare fields.
    #[arg(long = "field", value_name = "FIELD", default_values_t = [String::from("q")])]
    fields: Vec<String>,
    /// Radius R of the verification window [-R, R]^d.
    #[arg(long = "box", value_name = "R", default_value_t = 4)]
    box_radius: u32,
    /// Node budget for backtracking searches.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Exit 0 even when budget-limited verdicts are unknown.
    #[arg(long)]
    allow_unknown: bool,
}

#[derive(Args)]
struct LocalCoh {
    #[command(flatten)]
    common: Common,
    /// Cohomological degree i (default: the fan dimension).
    #[arg(long)]
    degree: Option<i64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (kind, common, degree) = match &cli.command {
        Command::Validate(c) => (CommandKind::Validate, c, None),
        Command::Analyze(c) => (CommandKind::Analyze, c, None),
        Command::Cohomology(c) => (CommandKind::Cohomology, c, None),
        Command::Omega(c) => (CommandKind::Omega, c, None),
        Command::Localcoh(lc) => (CommandKind::LocalCohomology, &lc.common, lc.degree),
        Command::Gorenstein(c) => (CommandKind::Gorenstein, c, None),
        Command::CanonicalIdeal(c) => (CommandKind::CanonicalIdeal, c, None),
        Command::BoundaryDuality(c) => (CommandKind::BoundaryDuality, c, None),
        Command::Shelling(c) => (CommandKind::Shelling, c, None),
        Command::Semishelling(c) => (CommandKind::Semishelling, c, None),
        Command::Clean(c) => (CommandKind::Clean, c, None),
        Command::All(c) => (CommandKind::All, c, None),
    };

    match execute(kind, common, degree) {
        Ok(code) => code,
        Err(e) => {
            let obj = error_object(&e);
            eprintln!("{}", serde_json::to_string_pretty(&obj).expect("error objects serialize"));
            ExitCode::from(1)
        }
    }
}

fn execute(kind: CommandKind, common: &Common, degree: Option<i64>) -> Result<ExitCode, Error> {
    let fields = common
        .fields
        .iter()
        .map(|s| Field::parse(s))
        .collect::<Result<Vec<_>, _>>()?;
    let text = std::fs::read_to_string(&common.file)
        .map_err(|e| Error::Parse(format!("{}: {e}", common.file.display())))?;
    let document = FanDocument::parse(&text)?;
    let request = Request {
        command: kind,
        fields,
        box_radius: common.box_radius,
        budget: common.budget,
        degree,
    };
    let started = Instant::now();
    let report = run(&document, &request)?;
    match common.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => {
            print!("{}", report.to_text());
            println!("elapsed: {:?}", started.elapsed());
        }
    }
    if report.unknown_present && !common.allow_unknown {
        Ok(ExitCode::from(2))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}
