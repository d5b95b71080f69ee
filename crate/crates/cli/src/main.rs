use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use facering::exec::Strategy;
use facering_cli::commands::{self, parse_suites, Options, Suite};
use facering_cli::document::{load_subcomplex, parse_int_list, Input};
use facering_cli::field::{FieldChoice, FIELD_ENV};
use facering_cli::report::RunReport;
use facering_cli::{CliError, Result};

/// Certificates for Lefschetz, duality and anisotropy properties of face rings.
///
/// Exit status: 0 when no check failed, 1 when a check failed, 2 for invalid
/// input or an unsupported request, 3 when a computation could not finish.
#[derive(Parser)]
#[command(name = "facering", version)]
struct Cli {
    /// Write the full report as JSON to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Master seed for coordinates and random elements.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Coefficient field such as `2^61-1`, `2^63` or `101`; a field in the
    /// document takes precedence.
    #[arg(long, global = true, env = FIELD_ENV)]
    field: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// f-, h- and g-vectors, pseudomanifold and Cohen-Macaulay status, algebra dimensions.
    Analyze { file: PathBuf },
    /// Run certification suites on a document.
    Certify {
        file: PathBuf,
        /// Comma-separated: duality, lefschetz, top-heavy, biased, hall-laman, anisotropy, identities.
        #[arg(long)]
        suite: String,
        #[arg(long)]
        k: Option<usize>,
        /// Subcomplex for biased and hall-laman, as facet label lists.
        #[arg(long)]
        gamma: Option<PathBuf>,
    },
    /// Report-only probes.
    Experiment {
        #[command(subcommand)]
        which: Experiment,
    },
    /// The bundled complexes.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum Experiment {
    /// Duality and Lefschetz with vertices on the moment curve.
    MomentCurve {
        file: PathBuf,
        /// One parameter per vertex, e.g. `1,2,3,4`.
        #[arg(long)]
        params: String,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    List,
    Run { suite: String },
}

fn run(cli: Cli) -> Result<Option<RunReport>> {
    let field = match &cli.field {
        Some(f) => FieldChoice::parse(f)?,
        None => FieldChoice::Mersenne61,
    };
    let mut opts = Options::new(cli.seed, field);
    let report = match cli.command {
        Command::Analyze { file } => commands::analyze(&Input::load(&file)?, &opts)?,
        Command::Certify { file, suite, k, gamma } => {
            let input = Input::load(&file)?;
            let suites = parse_suites(&suite)?;
            opts.k = k;
            opts.gamma = gamma.map(|g| load_subcomplex(&g, &input.complex)).transpose()?;
            commands::certify(&input, &suites, &opts)?
        }
        Command::Experiment { which: Experiment::MomentCurve { file, params } } => {
            let params = parse_int_list(&params).map_err(CliError::Usage)?;
            commands::experiment_moment_curve(&Input::load(&file)?, &params, &opts)?
        }
        Command::Corpus { action: CorpusAction::List } => {
            print!("{}", commands::corpus_list());
            return Ok(None);
        }
        Command::Corpus { action: CorpusAction::Run { suite } } => {
            let suite: Suite = suite.parse()?;
            commands::corpus_run(suite, &opts, Strategy::default())?
        }
    };
    if let Some(path) = &cli.json {
        let text = serde_json::to_string_pretty(&report).expect("reports serialize");
        std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    }
    Ok(Some(report))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(report)) => {
            print!("{}", report.render_table());
            ExitCode::from(u8::from(report.failed()))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
