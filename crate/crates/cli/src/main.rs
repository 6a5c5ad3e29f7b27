use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use varikon::fifteen::{verify_three_cycle_family, FifteenConfig};
use varikon::group::{histogram_csv, DistanceTable};
use varikon::report::Report;
use varikon::solver::{Method, SetupPolicy, Solver, TargetMode};
use varikon::varikon::{random_reachable, VarikonConfig, REACHABLE};
use varikon::verify;
use varikon::words::WordTable;

#[derive(Parser)]
#[command(
    name = "varikon",
    version,
    about = "Group theory and solvers for the Varikon Box"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count reachable configurations and print the depth histogram.
    Enumerate {
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run every named check; exits 1 if any fails.
    Verify {
        /// Target mode for the exhaustive heuristic sweep.
        #[arg(long, default_value = "center", value_parser = parse_target)]
        target: TargetMode,
        #[arg(long, default_value = "best-orientation", value_parser = parse_policy)]
        policy: SetupPolicy,
    },
    /// Solve one configuration.
    Solve {
        /// Cells 0..7 as comma-separated labels, `_` for the blank.
        config: Option<String>,
        #[arg(long, default_value = "optimal", value_parser = parse_method)]
        method: Method,
        /// Solve a uniformly random reachable configuration instead.
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        opts: SolverOpts,
    },
    /// Run all three solvers on every reachable configuration.
    Compare {
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        opts: SolverOpts,
    },
    /// Print the shortest-word table of A5 or A6.
    Words {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// 15-Puzzle solvability and the (11,12,i) cycle family.
    Fifteen {
        /// 16 comma-separated labels, row-major, `_` for the blank.
        #[arg(long, conflicts_with = "verify_cycles")]
        check: Option<String>,
        #[arg(long)]
        verify_cycles: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Args, Clone, Copy)]
struct SolverOpts {
    /// Finished states: strict ι, or ι up to the center's half-turns.
    #[arg(long, default_value = "strict", value_parser = parse_target)]
    target: TargetMode,
    #[arg(long, default_value = "shortest", value_parser = parse_policy)]
    policy: SetupPolicy,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    A5,
    A6,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}

fn parse_target(s: &str) -> Result<TargetMode, String> {
    s.parse()
}

fn parse_policy(s: &str) -> Result<SetupPolicy, String> {
    s.parse()
}

enum Outcome {
    Ok,
    CheckFailed,
    InputError(String),
}

impl From<Outcome> for ExitCode {
    fn from(o: Outcome) -> ExitCode {
        match o {
            Outcome::Ok => ExitCode::SUCCESS,
            Outcome::CheckFailed => ExitCode::from(1),
            Outcome::InputError(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json<T: Serialize>(value: &T) {
    emit(&format!(
        "{}\n",
        serde_json::to_string_pretty(value).expect("serialisable")
    ));
}

fn print_csv<T: Serialize>(rows: impl IntoIterator<Item = T>) {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("in-memory CSV write");
    }
    emit(&String::from_utf8(w.into_inner().expect("flush")).expect("utf-8"));
}

fn solver(opts: SolverOpts) -> Result<Solver, Outcome> {
    Solver::new(opts.target, opts.policy).map_err(|e| Outcome::InputError(e.to_string()))
}

fn enumerate(format: Format) -> Outcome {
    let table = DistanceTable::build();
    match format {
        Format::Csv => emit(&histogram_csv(&table)),
        Format::Json => print_json(&json!({
            "count": table.len(),
            "max_depth": table.max_depth(),
            "mean_depth": table.mean_depth(),
            "histogram": table.histogram(),
        })),
    }
    Outcome::Ok
}

fn run_verify(opts: SolverOpts) -> Outcome {
    let mut reports: Vec<Report> = verify::verify_all();
    // The default sweep uses center targets; rerun it under the requested mode.
    if opts.target != TargetMode::Center || opts.policy != SetupPolicy::BestOrientation {
        reports.pop();
        reports.push(verify::heuristic_report(opts.target, opts.policy));
    }
    let pass = reports.iter().all(Report::pass);
    let failures: Vec<Value> = reports
        .iter()
        .flat_map(|r| {
            r.failures()
                .into_iter()
                .map(move |c| json!({ "report": r.name, "claim": c.claim }))
        })
        .collect();
    print_json(&json!({ "pass": pass, "failures": failures, "reports": reports }));
    if pass {
        Outcome::Ok
    } else {
        Outcome::CheckFailed
    }
}

fn solve(
    config: Option<String>,
    method: Method,
    random: bool,
    seed: u64,
    opts: SolverOpts,
) -> Outcome {
    let start = match (config, random) {
        (Some(_), true) => {
            return Outcome::InputError("give a config or --random, not both".into())
        }
        (None, false) => return Outcome::InputError("missing config (or pass --random)".into()),
        (None, true) => random_reachable(seed),
        (Some(text), false) => match text.parse::<VarikonConfig>() {
            Ok(c) => c,
            Err(e) => return Outcome::InputError(e.to_string()),
        },
    };
    if !start.is_reachable() {
        return Outcome::InputError(format!("{start} is unreachable (odd permutation)"));
    }
    let solver = match solver(opts) {
        Ok(s) => s,
        Err(o) => return o,
    };
    match solver.solve(&start, method) {
        Ok(sol) => {
            print_json(&sol);
            Outcome::Ok
        }
        Err(e) => Outcome::InputError(e.to_string()),
    }
}

fn compare(format: Format, opts: SolverOpts) -> Outcome {
    let solver = match solver(opts) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let cmp = match solver.compare_all() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return Outcome::CheckFailed;
        }
    };
    match format {
        Format::Csv => emit(&cmp.to_csv()),
        Format::Json => print_json(&cmp.summary()),
    }
    if cmp.rows.len() == REACHABLE && cmp.rows.iter().all(|r| r.verified) {
        Outcome::Ok
    } else {
        Outcome::CheckFailed
    }
}

fn words(group: Group, format: Format) -> Outcome {
    let table = match group {
        Group::A5 => WordTable::a5(),
        Group::A6 => WordTable::a6(),
    };
    match format {
        Format::Csv => emit(&table.to_csv()),
        Format::Json => print_json(&table.rows()),
    }
    Outcome::Ok
}

fn fifteen(check: Option<String>, verify_cycles: bool, format: Format) -> Outcome {
    if let Some(text) = check {
        let c = match text.parse::<FifteenConfig>() {
            Ok(c) => c,
            Err(e) => return Outcome::InputError(e.to_string()),
        };
        print_json(&json!({
            "config": c.to_string(),
            "solvable": c.is_solvable(),
            "parity": c.permutation().parity().to_string(),
            "blank_distance": c.blank_distance(),
        }));
        return Outcome::Ok;
    }
    if !verify_cycles {
        return Outcome::InputError("pass --check CONFIG or --verify-cycles".into());
    }
    let family = verify_three_cycle_family();
    match format {
        Format::Csv => print_csv(&family.rows),
        Format::Json => print_json(&family),
    }
    if family.pass() {
        Outcome::Ok
    } else {
        Outcome::CheckFailed
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Enumerate { format } => enumerate(format),
        Command::Verify { target, policy } => run_verify(SolverOpts { target, policy }),
        Command::Solve {
            config,
            method,
            random,
            seed,
            opts,
        } => solve(config, method, random, seed, opts),
        Command::Compare { format, opts } => compare(format, opts),
        Command::Words { group, format } => words(group, format),
        Command::Fifteen {
            check,
            verify_cycles,
            format,
        } => fifteen(check, verify_cycles, format),
    };
    outcome.into()
}
