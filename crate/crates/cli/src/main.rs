use std::process::ExitCode;

use aseries_cli::{
    cmd_appendix, cmd_classify, cmd_repr, cmd_table, cmd_verify, CliError, OutputFormat,
};
use aseries_core::Step;
use clap::{Parser, Subcommand};

/// Represent integers as sums of consecutive integers and of successive
/// odd or even numbers.
#[derive(Parser)]
#[command(name = "aseries", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every representation of N
    Repr {
        n: u64,
        /// Only common difference 1 or 2
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=2))]
        step: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Classify N by the kinds of sums it admits, plus its aliquot class
    Classify {
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Regenerate a numbered reference table
    Table {
        id: u32,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Every representation of every integer from 3 to --max, by class column
    Appendix {
        #[arg(long, default_value_t = 100)]
        max: u64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Check generators and classifiers against brute force over a range
    Verify {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

fn run(command: Command) -> Result<(String, bool), CliError> {
    Ok(match command {
        Command::Repr { n, step, format } => {
            let step = step.map(Step::try_from).transpose()?;
            (cmd_repr(n, step, format)?, true)
        }
        Command::Classify { n, format } => (cmd_classify(n, format)?, true),
        Command::Table { id, format } => (cmd_table(id, format)?, true),
        Command::Appendix { max, format } => (cmd_appendix(max, format)?, true),
        Command::Verify { from, to, format } => cmd_verify(from, to, format)?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((output, success)) => {
            print!("{output}");
            if success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
