use std::process::ExitCode;
use std::time::Instant;

use assoform::commands::{self, InvariantName};
use assoform::Suite;
use assoform_core::duality::Family;
use clap::{Parser, Subcommand, ValueEnum};

/// Associated forms of homogeneous polynomials, with exact verification suites.
#[derive(Parser)]
#[command(name = "assoform", version)]
struct Cli {
    /// Include wall-clock time in the JSON report (breaks byte-identical output).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Quartic,
    Cubic,
}

#[derive(Subcommand)]
enum Command {
    /// Associated form of a nondegenerate form in z-variables.
    Assoc {
        poly: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
    },
    /// Run a seeded randomized verification suite.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
    /// Recover a tuple from a dual form through its annihilator.
    InverseSystem {
        form: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: usize,
    },
    /// Evaluate a classical invariant or contravariant.
    Invariant { name: InvariantName, poly: String },
    /// Hilbert function of the quotient by n forms in n variables.
    Hilbert {
        #[arg(required = true)]
        forms: Vec<String>,
    },
    /// J-invariants, Möbius images and involution status along q_t or c_t.
    DualityScan {
        family: FamilyArg,
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        t: Vec<String>,
    },
    /// Apply the associated-form map repeatedly.
    Iterate {
        poly: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 3)]
        steps: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Assoc { poly, n, d } => commands::assoc(poly, *n, *d),
        Command::Verify { suite, seed, count } => {
            eprintln!("running {} suite: seed {seed}, {count} cases", suite.name());
            commands::verify(*suite, *seed, *count)
        }
        Command::InverseSystem { form, n, d } => commands::inverse_system(form, *n, *d),
        Command::Invariant { name, poly } => commands::invariant(*name, poly),
        Command::Hilbert { forms } => commands::hilbert(forms),
        Command::DualityScan { family, t } => {
            let family = match family {
                FamilyArg::Quartic => Family::BinaryQuartic,
                FamilyArg::Cubic => Family::TernaryCubic,
            };
            commands::duality_scan(family, t)
        }
        Command::Iterate { poly, n, steps } => commands::iterate(poly, *n, *steps),
    };
    let elapsed = start.elapsed().as_millis();
    if cli.timing {
        report.timing_ms = Some(elapsed);
    }
    if let Some(rejected) = report.results.get("rejected").and_then(|v| v.as_u64()) {
        if rejected > 0 {
            eprintln!("rejected {rejected} degenerate draws");
        }
    }
    eprintln!(
        "{}: {} in {elapsed} ms",
        report.command,
        report.to_json()["status"]
    );
    println!("{}", report.render());
    ExitCode::from(report.exit_code())
}
