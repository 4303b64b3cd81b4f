mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use frobwork::skeletal::CompatMode;

use commands::ModeSelection;

/// Exact checks for symmetric Frobenius algebras, Morita contexts, SO(2)
/// fixed points and Calabi-Yau categories.
#[derive(Parser)]
#[command(name = "frobwork", version)]
struct Cli {
    /// Print the report as JSON
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check algebra axioms, the symmetric Frobenius form and semisimplicity
    CheckFrobenius { path: PathBuf },
    /// Wedderburn decomposition into block dimensions and form scalars
    Decompose {
        path: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the zig-zag identities and compatibility of a Morita context
    CheckMorita {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::All)]
        mode: Mode,
    },
    /// Homotopy fixed points of the trivial SO(2)-action
    #[command(subcommand)]
    FixedPoint(FixedPoint),
    /// Calabi-Yau category of an algebra, or CY functor of a context
    Rep {
        path: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run every shipped fixture and compare with the expected status
    SelfTest {
        /// Fixture directory; defaults to $FW_FIXTURES, then ./fixtures
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum FixedPoint {
    /// Unpack (c, λ) into (c, Θ, λ̃, Π, M)
    Expand { path: PathBuf },
    /// Evaluate the coherence equations on (c, λ) or on unpacked data
    Verify { path: PathBuf },
    /// Whether a context lifts to a morphism of fixed points
    Morphism {
        source: PathBuf,
        target: PathBuf,
        context: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    #[value(name = "1")]
    Diagram,
    #[value(name = "2")]
    Central,
    #[value(name = "3")]
    Scalars,
    All,
}

impl From<Mode> for ModeSelection {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Diagram => ModeSelection::One(CompatMode::Diagram),
            Mode::Central => ModeSelection::One(CompatMode::CentralElements),
            Mode::Scalars => ModeSelection::One(CompatMode::Scalars),
            Mode::All => ModeSelection::All,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match cli.command {
        Command::CheckFrobenius { path } => commands::check_frobenius(&path),
        Command::Decompose { path, seed } => commands::decompose(&path, seed),
        Command::CheckMorita { path, mode } => commands::check_morita(&path, mode.into()),
        Command::FixedPoint(FixedPoint::Expand { path }) => commands::fixed_point_expand(&path),
        Command::FixedPoint(FixedPoint::Verify { path }) => commands::fixed_point_verify(&path),
        Command::FixedPoint(FixedPoint::Morphism {
            source,
            target,
            context,
        }) => commands::fixed_point_morphism(&source, &target, &context),
        Command::Rep { path, seed } => commands::rep(&path, seed),
        Command::SelfTest { fixtures } => {
            let dir = fixtures
                .or_else(|| std::env::var_os("FW_FIXTURES").map(PathBuf::from))
                .unwrap_or_else(|| PathBuf::from("fixtures"));
            commands::self_test(&dir)
        }
    };
    if cli.json {
        println!("{}", report.to_json());
    } else {
        print!("{report}");
    }
    report.status.exit_code()
}
