//! `verify run` executes checks and emits a report; `verify list` enumerates check ids.

use clap::{Args, Parser, Subcommand};
use simpforge_verify::{list_checks, run_suite, Config, Format, Suite, VerifyError};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "verify", about = "Run the simpforge certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute the checks of the selected suites.
    Run(RunArgs),
    /// List check ids with their topic anchors.
    List {
        #[arg(long = "suite")]
        suites: Vec<String>,
    },
}

#[derive(Args)]
struct RunArgs {
    /// simplex, salg, models, homotopy, homology, hopf or all; repeatable.
    #[arg(long = "suite")]
    suites: Vec<String>,
    #[arg(long)]
    p_max: Option<usize>,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    mk_max: Option<u32>,
    #[arg(long)]
    w_max: Option<u32>,
    /// exhaustive or sample:COUNT:SEED.
    #[arg(long)]
    d_policy: Option<String>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Run under a deliberate formula mutation.
    #[arg(long)]
    mutation: Option<String>,
    /// Only checks whose id starts with this prefix.
    #[arg(long)]
    only: Option<String>,
    /// Restrict the hopf suite to the pure-characteristic comparison.
    #[arg(long)]
    pure_char: bool,
    /// Configuration file; defaults to the file named by SIMPFORGE_CONFIG.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl RunArgs {
    fn as_config(&self) -> Config {
        Config {
            suites: self.suites.clone(),
            p_max: self.p_max,
            n_max: self.n_max,
            mk_max: self.mk_max,
            w_max: self.w_max,
            d_policy: self.d_policy.clone(),
            format: self.format.map(|f| match f {
                FormatArg::Text => Format::Text,
                FormatArg::Json => Format::Json,
            }),
            out: self.out.clone(),
            mutation: self.mutation.clone(),
            only: self.only.clone(),
            pure_char: self.pure_char.then_some(true),
        }
    }
}

fn run(args: RunArgs) -> Result<bool, VerifyError> {
    let config = Config::load(args.config.as_deref())?.overridden_by(args.as_config());
    let opts = config.run_options()?;
    let report = run_suite(&opts)?;
    report.emit(config.format.unwrap_or(Format::Text), config.out.as_deref())?;
    Ok(report.summary.fail == 0)
}

fn list(suites: Vec<String>) -> Result<(), VerifyError> {
    let config = Config { suites, ..Config::default() };
    let suites: Vec<Suite> = config.suites()?;
    for (id, anchor) in list_checks(&suites) {
        println!("{id}\t{anchor}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => run(args),
        Command::List { suites } => list(suites).map(|()| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("verify: {e}");
            ExitCode::from(2)
        }
    }
}
