//! Inspect the built-in models: list them, dump their low levels, or certify one.

use clap::{Parser, Subcommand};
use simpforge_models::ModelId;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "models", about = "Inspect the built-in simplicial models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every model id of the catalogue.
    List,
    /// Print the generators and faces of a model through a level.
    Dump {
        id: String,
        #[arg(long, default_value_t = 2)]
        p_max: usize,
        /// Print the presentation as JSON instead.
        #[arg(long)]
        json: bool,
    },
    /// Certify the simplicial identities and aliases of a model.
    Check {
        id: String,
        #[arg(long, default_value_t = 4)]
        p_max: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let parse = |s: &str| s.parse::<ModelId>().and_then(|id| id.build());
    match cli.command {
        Command::List => {
            for id in ModelId::catalogue() {
                println!("{id}");
            }
            ExitCode::SUCCESS
        }
        Command::Dump { id, p_max, json } => match parse(&id).and_then(|p| if json { Ok(p.to_json()) } else { p.dump(p_max) }) {
            Ok(text) => {
                println!("{text}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("models: {e}");
                ExitCode::from(2)
            }
        },
        Command::Check { id, p_max } => match parse(&id) {
            Ok(p) => match p.check_presentation(p_max) {
                Ok(()) => {
                    println!("PASS {id} through level {p_max}");
                    ExitCode::SUCCESS
                }
                Err(c) => {
                    println!("FAIL {id}: {c}");
                    ExitCode::from(1)
                }
            },
            Err(e) => {
                eprintln!("models: {e}");
                ExitCode::from(2)
            }
        },
    }
}
