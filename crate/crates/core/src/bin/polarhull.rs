use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use polarhull::run::{
    build_universe, export_dot, oracle, parse_universe, render, run_verification, BuiltUniverse, Check, Format, Kind,
    RunFlags, EXIT_BUDGET, EXIT_FAIL, EXIT_INPUT, EXIT_PASS,
};
use polarhull::Error;

#[derive(Parser)]
#[command(name = "polarhull", version, about = "Hulls, capacitors and voltages on finite universes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for parallel checks.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct UniverseArgs {
    #[arg(long)]
    universe: PathBuf,
    /// Overrides a missing `kind` field; must match a present one.
    #[arg(long, value_enum)]
    kind: Option<Kind>,
    /// Arrow budget, overriding the file's options.
    #[arg(long)]
    budget: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the capacitor, the main theorem ledger and the corollary.
    Verify {
        #[command(flatten)]
        universe: UniverseArgs,
        #[arg(long, value_enum)]
        only: Option<Check>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the hull of one object.
    Complete {
        #[command(flatten)]
        universe: UniverseArgs,
        #[arg(long)]
        object: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write a DOT diagram of one object's order, or of the whole category.
    Export {
        #[command(flatten)]
        universe: UniverseArgs,
        #[arg(long)]
        object: Option<String>,
        /// Draw identity loops in the category diagram.
        #[arg(long)]
        identities: bool,
    },
    /// Run the brute-force oracles and write their golden values as JSON.
    Oracle,
}

fn load(args: &UniverseArgs) -> Result<BuiltUniverse, i32> {
    let mut spec = parse_universe(&args.universe, args.kind).map_err(|e| {
        eprintln!("{}:\n{e}", args.universe.display());
        EXIT_INPUT
    })?;
    if let Some(b) = args.budget {
        spec.options.budget = b;
    }
    build_universe(&spec).map_err(|e| {
        eprintln!("error: {e}");
        match e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_INPUT,
        }
    })
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), i32> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            eprintln!("error: {}: {e}", path.display());
            EXIT_INPUT
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn fail(e: impl std::fmt::Display) -> i32 {
    eprintln!("error: {e}");
    EXIT_INPUT
}

fn execute(cli: &Cli) -> Result<i32, i32> {
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Verify { universe, only, format } => {
            let built = load(universe)?;
            let report = run_verification(&built, RunFlags { only: *only }).map_err(fail)?;
            emit(out, &render(&report, *format).map_err(fail)?)?;
            eprintln!("checked in {:?}", report.elapsed);
            Ok(report.exit_code())
        }
        Command::Complete { universe, object, format } => {
            let built = load(universe)?;
            let report = run_verification(&built, RunFlags { only: Some(Check::Completion) }).map_err(fail)?;
            let row = report
                .completions
                .unwrap_or_default()
                .into_iter()
                .find(|r| &r.object == object)
                .ok_or_else(|| fail(Error::UnknownName(object.clone())))?;
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&row).map_err(fail)? + "\n",
                Format::Text => match (&row.completion, &row.unit) {
                    (Some(t), Some(u)) => format!("{} -> {t} via {u}\n", row.object),
                    _ => format!("{} has no hull\n", row.object),
                },
            };
            emit(out, &text)?;
            Ok(if row.completion.is_some() { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Export {
            universe,
            object,
            identities,
        } => {
            let built = load(universe)?;
            emit(out, &export_dot(&built, object.as_deref(), *identities).map_err(fail)?)?;
            Ok(EXIT_PASS)
        }
        Command::Oracle => {
            let report = oracle::run_oracles().map_err(fail)?;
            emit(out, &(serde_json::to_string_pretty(&report).map_err(fail)? + "\n"))?;
            Ok(EXIT_PASS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(fail(e)),
        },
        None => execute(&cli),
    };
    let code = result.unwrap_or_else(|code| code);
    ExitCode::from(code as u8)
}
