//! Command-line driver: run certificates and render the report.
//!
//! Exit code 0 when every requested certificate passes, 1 when any fails,
//! and 2 on usage errors.

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;
use tetracert::certificates::{self, Constants, Seed};
use tetracert::report::Report;

#[derive(Parser)]
#[command(name = "verify", version, about = "Re-derive the certificate suite in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Rational-point seed (primes-v1 or primes-v2).
    #[arg(long, global = true, default_value = "primes-v1", value_parser = parse_seed)]
    seed: Seed,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run every certificate.
    All,
    /// Stabilizer of a point in general position.
    Stabilizer,
    /// Normalizer containment and the quotient onto the symmetric group.
    Normalizer,
    /// Ineffectivity kernel of order four.
    Kernel,
    /// Character decompositions of the graded pieces.
    Decompositions,
    /// Two-step generic freeness on the fifteen-dimensional module.
    Freeness,
    /// Generic freeness on both normalizer modules.
    Vprime,
    /// The eighteen projectivities of the pencil.
    Hesse,
    /// Dimension bookkeeping identities.
    Audit,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_seed(s: &str) -> Result<Seed, String> {
    Seed::parse(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let constants = Constants::standard();
    let seed = cli.seed;

    let single = |cert| Report::new(seed.name(), vec![cert]);
    let report = match cli.command {
        Command::All => certificates::run_all(&constants, &seed),
        Command::Stabilizer => single(certificates::verify_stabilizer_general_position(&constants)),
        Command::Normalizer => single(certificates::verify_normalizer_containment(&constants)),
        Command::Kernel => single(certificates::verify_ineffectivity_kernel(&constants)),
        Command::Decompositions => single(certificates::verify_s4_decompositions(&constants)),
        Command::Freeness => {
            single(certificates::verify_generic_freeness_two_step(&constants, &seed))
        }
        Command::Vprime => single(certificates::verify_vprime_generically_free(&constants, &seed)),
        Command::Hesse => single(certificates::verify_hesse_almost_free(&constants)),
        Command::Audit => single(certificates::verify_dimension_audit(&constants)),
    };

    let rendered = match cli.format {
        Format::Text => report.render_text(),
        Format::Json => report.to_json(),
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &rendered) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{rendered}");
    }

    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
