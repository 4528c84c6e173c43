use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use jordan_core::dsl::{parse, Env, Tables};
use jordan_core::lie::{check_table, BracketTable, CheckStatus, TwistTable};
use jordan_core::ring::Context;
use jordan_core::roots::{roots_f4, roots_g2, slot_table, zero_fiber_pair};
use jordan_core::suites::{self, Options, SUITES};
use jordan_core::Error;

const USAGE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "jordan",
    version,
    about = "Symbolic verification harness for cubic Jordan matrix algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression and print the result.
    Eval(EvalArgs),
    /// Evaluate an expression and print its simplified form.
    Simplify(EvalArgs),
    /// Run a verification suite.
    Suite(SuiteArgs),
    /// Validate a bracket table.
    CheckTable(CheckArgs),
    /// Print the F4 and G2 root tables.
    Roots,
}

#[derive(Args)]
struct TableArgs {
    /// Bracket table replacing the shipped one.
    #[arg(long, value_name = "FILE")]
    bracket_table: Option<PathBuf>,
    /// Twist table replacing the shipped one.
    #[arg(long, value_name = "FILE")]
    twist_table: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, default_value_t = 6)]
    m1: usize,
    #[arg(long, default_value_t = 3)]
    m2: usize,
    #[arg(long, default_value_t = 4)]
    m3: usize,
    #[command(flatten)]
    tables: TableArgs,
    expr: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
    name: String,
    #[command(flatten)]
    tables: TableArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include per-item wall-clock times (output is then not byte-stable).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct CheckArgs {
    file: PathBuf,
    /// Twist table used for the Jacobi samples.
    #[arg(long, value_name = "FILE")]
    twist_table: Option<PathBuf>,
    /// Print commented records for the missing pairs instead of validating.
    #[arg(long)]
    template: bool,
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn load_twist(path: Option<&Path>) -> Result<TwistTable, String> {
    match path {
        None => Ok(TwistTable::shipped()),
        Some(p) => TwistTable::parse(&read(p)?).map_err(|e| format!("{}: {e}", p.display())),
    }
}

fn load_tables(args: &TableArgs) -> Result<Tables, String> {
    let bracket = match &args.bracket_table {
        None => BracketTable::shipped(),
        Some(p) => BracketTable::parse(&read(p)?).map_err(|e| format!("{}: {e}", p.display()))?,
    };
    Ok(Tables {
        bracket,
        twist: load_twist(args.twist_table.as_deref())?,
    })
}

fn usage(msg: String) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE)
}

fn eval(out: &mut String, args: &EvalArgs, simplify: bool) -> ExitCode {
    let tables = match load_tables(&args.tables) {
        Ok(t) => t,
        Err(e) => return usage(e),
    };
    let ctx = match Context::new(args.m1, args.m2, args.m3) {
        Ok(c) => c,
        Err(e) => return usage(e.to_string()),
    };
    let src = if simplify {
        format!("simplify({})", args.expr)
    } else {
        args.expr.clone()
    };
    let result = parse(&src).and_then(|e| Env::new(&ctx, &tables).run(&e));
    match result {
        Ok(v) => {
            let _ = writeln!(out, "{v}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e.root() {
                Error::MissingTableEntry { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn suite(out: &mut String, args: &SuiteArgs) -> ExitCode {
    let tables = match load_tables(&args.tables) {
        Ok(t) => Arc::new(t),
        Err(e) => return usage(e),
    };
    let report = match suites::run(
        &args.name,
        &tables,
        &Options {
            timings: args.timings,
        },
    ) {
        Ok(r) => r,
        Err(e) => return usage(e.to_string()),
    };
    match args.format {
        Format::Text => out.push_str(&report.to_text()),
        Format::Json => {
            out.push_str(&report.to_json());
            out.push('\n');
        }
    }
    ExitCode::from(report.exit_code() as u8)
}

fn print_status(out: &mut String, name: &str, s: &CheckStatus) {
    match s {
        CheckStatus::Pass => {
            let _ = writeln!(out, "{name:<13} pass");
        }
        CheckStatus::Fail(v) => {
            let _ = writeln!(out, "{name:<13} fail ({})", v.len());
            v.iter().for_each(|m| {
                let _ = writeln!(out, "    {m}");
            });
        }
        CheckStatus::Incomplete(v) => {
            let _ = writeln!(out, "{name:<13} table-incomplete ({})", v.len());
            v.iter().for_each(|m| {
                let _ = writeln!(out, "    {m}");
            });
        }
    }
}

fn check(out: &mut String, args: &CheckArgs) -> ExitCode {
    let src = match read(&args.file) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let twist = match load_twist(args.twist_table.as_deref()) {
        Ok(t) => t,
        Err(e) => return usage(e),
    };
    let table = match BracketTable::parse(&src) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(out, "parse         fail");
            let _ = writeln!(out, "    {e}");
            return ExitCode::from(1);
        }
    };
    if args.template {
        for lhs in table.missing_records() {
            let _ = writeln!(out, "# {lhs} = ");
        }
        return ExitCode::SUCCESS;
    }
    let missing = table.missing_pairs().len();
    let _ = writeln!(
        out,
        "entries       {} ({missing} unordered pairs missing)",
        table.len()
    );
    let r = match check_table(&table, &twist) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    print_status(out, "grading", &r.grading);
    print_status(out, "antisymmetry", &r.antisymmetry);
    print_status(out, "jacobi", &r.jacobi);
    let all = [&r.grading, &r.antisymmetry, &r.jacobi];
    if all.iter().any(|s| matches!(s, CheckStatus::Fail(_))) {
        ExitCode::from(1)
    } else if all.iter().any(|s| matches!(s, CheckStatus::Incomplete(_))) {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn roots(out: &mut String) -> ExitCode {
    let _ = writeln!(out, "# F4 roots: root, layer, length, G2 image, slot");
    let slots = slot_table();
    for r in roots_f4() {
        let len = if r.is_long() { "long" } else { "short" };
        let slot = match slots.iter().find(|(a, _, _)| *a == r) {
            Some((_, _, s)) => format!("{}", s.peirce()),
            None => match zero_fiber_pair(r) {
                Some((i, j)) => format!("Z{i}->{j}"),
                None => "-".into(),
            },
        };
        let _ = writeln!(
            out,
            "{r} {:>2} {len:<5} {} {slot}",
            r.grading_component(),
            r.pi()
        );
    }
    let _ = writeln!(out, "# G2 roots");
    for g in roots_g2() {
        let _ = writeln!(out, "{g} {}", if g.is_long() { "long" } else { "short" });
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = String::new();
    let code = match &cli.command {
        Command::Eval(a) => eval(&mut out, a, false),
        Command::Simplify(a) => eval(&mut out, a, true),
        Command::Suite(a) => suite(&mut out, a),
        Command::CheckTable(a) => check(&mut out, a),
        Command::Roots => roots(&mut out),
    };
    // A closed pipe is not an error.
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    code
}
