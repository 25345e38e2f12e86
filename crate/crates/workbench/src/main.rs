use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pairops::report::Format;
use pairops::workspace::{ErrorCode, Position, WorkspaceError};
use pairops::{emit_report, execute_tasks, parse_workspace, verify, ExecOptions};

#[derive(Parser)]
#[command(name = "pairops", version, about = "Pair operations and Matlis smile duality over Artinian local algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the tasks of a workspace file.
    Run {
        workspace: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long)]
        max_submodules: Option<usize>,
        /// Record per-task wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Print the built-in R1-R4 workspace.
    Fixtures,
    /// Run the acceptance suite.
    Verify {
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn write_out(out: Option<&PathBuf>, text: &str) -> Result<(), WorkspaceError> {
    match out {
        Some(path) => std::fs::write(path, format!("{text}\n")).map_err(|e| WorkspaceError {
            code: ErrorCode::Io,
            position: Position::Path(path.display().to_string()),
            message: e.to_string(),
        }),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, WorkspaceError> {
    match cli.command {
        Command::Run {
            workspace,
            out,
            format,
            max_dim,
            max_submodules,
            timing,
        } => {
            let text = std::fs::read_to_string(&workspace).map_err(|e| WorkspaceError {
                code: ErrorCode::Io,
                position: Position::Path(workspace.display().to_string()),
                message: e.to_string(),
            })?;
            let ws = parse_workspace(&text)?;
            let opts = ExecOptions {
                max_dim,
                max_submodules,
                timing,
            };
            let report = execute_tasks(&ws, opts)?;
            write_out(out.as_ref(), emit_report(&report, format).trim_end())?;
            Ok(report.all_ok())
        }
        Command::Fixtures => {
            print!("{}", pairops::FIXTURE_WORKSPACE);
            Ok(true)
        }
        Command::Verify { out, format } => {
            let report = verify::run_all();
            write_out(out.as_ref(), emit_report(&report, format).trim_end())?;
            for c in &report.criteria {
                eprintln!(
                    "[{}] {:>2} {}: {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.id,
                    c.title,
                    c.summary
                );
            }
            Ok(report.all_passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_CHECK_FAILED),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
