mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hhkit_core::FieldSpec;

use commands::{AlgebraTask, Failure, Outcome};

const P_MAX_LIMIT: usize = 16;

/// Exact Hochschild cohomology of finite-dimensional algebras.
#[derive(Parser, Debug)]
#[command(name = "hhkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Base field: Q or F<p>.
    #[arg(long, value_parser = parse_field, global = true)]
    field: Option<FieldSpec>,
    /// Top cohomological degree.
    #[arg(long, default_value_t = 4, global = true)]
    pmax: usize,
    /// Top Tor degree for the homological test.
    #[arg(long, default_value_t = 4, global = true)]
    qmax: usize,
    /// Print the machine-readable document.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// HH* of k[X]/(f) in closed form.
    Monogenic {
        #[arg(long)]
        poly: String,
        /// Cross-check against the cochain oracle.
        #[arg(long)]
        verify: bool,
        /// Print the bracket table of the generators x, τ, ζ.
        #[arg(long)]
        bracket_table: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Closed form against the cochain oracle for k[X]/(f).
    Verify {
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        common: Common,
    },
    /// A quiver algebra read from JSON.
    Algebra {
        file: PathBuf,
        task: Task,
        #[arg(long)]
        vertex: Option<String>,
        /// Arrows generating the ideal (five-term).
        #[arg(long, num_args = 1..)]
        ideal: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// A poset read from JSON.
    Poset {
        file: PathBuf,
        task: PosetTask,
        /// Elements of an order ideal Y; gives the pair sequence.
        #[arg(long, num_args = 1..)]
        ideal: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Structure checks on the truncated cycle algebra of the n-crown.
    Crown {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Task {
    Hh,
    Homological,
    Happel,
    FiveTerm,
    Flat,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PosetTask {
    Cohomology,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    FieldSpec::parse(s).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> (Result<Outcome, Failure>, bool) {
    let common = match &cli.command {
        Command::Monogenic { common, .. }
        | Command::Verify { common, .. }
        | Command::Algebra { common, .. }
        | Command::Poset { common, .. }
        | Command::Crown { common, .. } => common.clone(),
    };
    if common.pmax > P_MAX_LIMIT || common.qmax > P_MAX_LIMIT {
        return (Err(Failure::Input(format!("degrees above {P_MAX_LIMIT} are refused"))), common.json);
    }
    let field = common.field.unwrap_or(FieldSpec::Rationals);
    let need_vertex = |v: &Option<String>| -> Result<String, Failure> {
        v.clone().ok_or_else(|| Failure::Input("this task needs --vertex".into()))
    };
    let outcome = match cli.command {
        Command::Monogenic { poly, verify, bracket_table, .. } => {
            commands::monogenic(field, &poly, common.pmax, verify, bracket_table)
        }
        Command::Verify { poly, .. } => commands::monogenic(field, &poly, common.pmax, true, false),
        Command::Algebra { file, task, vertex, ideal, .. } => {
            let task_result = match task {
                Task::Hh => Ok(None),
                Task::Homological | Task::Happel => need_vertex(&vertex).map(Some),
                Task::FiveTerm | Task::Flat => Ok(vertex.clone()),
            };
            task_result.and_then(|v| {
                let t = match task {
                    Task::Hh => AlgebraTask::Hh,
                    Task::Homological => AlgebraTask::Homological { vertex: v.as_deref().unwrap_or_default() },
                    Task::Happel => AlgebraTask::Happel { vertex: v.as_deref().unwrap_or_default() },
                    Task::FiveTerm => AlgebraTask::FiveTerm { vertex: v.as_deref(), arrows: &ideal },
                    Task::Flat => AlgebraTask::Flat { vertex: v.as_deref() },
                };
                commands::algebra(&file, common.field, t, common.pmax, common.qmax)
            })
        }
        Command::Poset { file, task: PosetTask::Cohomology, ideal, .. } => {
            commands::poset(&file, common.field, &ideal, common.pmax)
        }
        Command::Crown { n, m, .. } => commands::crown(n, m, common.pmax, field),
    };
    (outcome, common.json)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        (Err(Failure::Input(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        (Ok(outcome), json) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&outcome.json).expect("values serialize"));
            } else {
                print!("{}", outcome.text);
            }
            match outcome.failure {
                Some(f) => {
                    eprintln!("verification failed: {f}");
                    ExitCode::from(3)
                }
                None => ExitCode::SUCCESS,
            }
        }
    }
}
