//! `grmeasure`: Gabriel-Roiter measures from the command line.
//!
//! Exit codes: 0 success, 1 input or validation error, 2 budget exceeded,
//! 3 property violation.

mod emit;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use grmeasure::category::{category_gr_measure, extended_measure, family_registry, FamilyConfig};
use grmeasure::chain::{lex_compare, NatChain};
use grmeasure::linalg::PrimeField;
use grmeasure::poset::{measure_registry, MeasuredPoset};
use grmeasure::quiver::{dims_label, parse_quiver_file, Budget};
use grmeasure::verify::{suite_registry, SuiteConfig};
use grmeasure::Error;

use emit::{ExtraRow, Format, Table};

#[derive(Parser)]
#[command(name = "grmeasure", version, about = "Gabriel-Roiter measures of posets and quiver representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare chains or list the order on all subsets of 1..n.
    Chains {
        #[command(subcommand)]
        action: ChainsAction,
    },
    /// Measure a poset file (`e <name> <length>`, `r <lower> <upper>`).
    Poset {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        /// Measure strategy.
        #[arg(long, default_value = "recursive")]
        method: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Measure the indecomposables of a quiver family.
    Quiver(QuiverArgs),
    /// Run a property suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = Budget::default().0, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
    },
}

#[derive(Subcommand)]
enum ChainsAction {
    /// Print `<`, `=` or `>`. Chains are comma-separated, `-` is empty.
    Cmp { a: String, b: String },
    /// All subsets of 1..n in ascending order with their dyadic values.
    Table {
        #[arg(long)]
        universe: u32,
    },
}

#[derive(Args)]
struct QuiverArgs {
    /// a3paper, linear-an, kronecker or custom.
    #[arg(long)]
    family: String,
    #[arg(long, default_value_t = 2)]
    field: u32,
    /// Largest total dimension; defaults depend on the family.
    #[arg(long)]
    max_length: Option<usize>,
    /// Number of vertices for linear-an.
    #[arg(long)]
    n: Option<usize>,
    /// Quiver file for custom.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, default_value_t = Budget::default().0, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Input(String),
    Budget(String),
    Violation,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_out(text: &str, out: Option<&PathBuf>) -> Outcome {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn chains(action: ChainsAction) -> Outcome {
    match action {
        ChainsAction::Cmp { a, b } => {
            let a: NatChain = a.parse()?;
            let b: NatChain = b.parse()?;
            let symbol = match lex_compare(&a, &b) {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            println!("{symbol}");
        }
        ChainsAction::Table { universe } => {
            if universe > 20 {
                return Err(Failure::Input("universe must be at most 20".into()));
            }
            let mut all = NatChain::subsets_of(universe);
            all.sort();
            let mut out = String::new();
            for c in all {
                out.push_str(&format!("{c}\t{}\n", c.dyadic_value()));
            }
            print!("{out}");
        }
    }
    Ok(())
}

fn poset(file: PathBuf, format: Format, method: String, out: Option<PathBuf>) -> Outcome {
    let strategy = measure_registry().get(&method)?;
    let p: MeasuredPoset = read(&file)?.parse()?;
    let result = strategy.compute(&p)?;
    let table = Table {
        poset: &p,
        result: &result,
        dims: None,
        extra: Vec::new(),
    };
    write_out(&table.render(format), out.as_ref())
}

fn quiver(args: QuiverArgs) -> Outcome {
    let family = family_registry().get(&args.family)?;
    let field = PrimeField::new(args.field)?;
    let budget = Budget(args.budget);
    let file = match &args.file {
        Some(path) => Some(Arc::new(parse_quiver_file(&read(path)?, field)?)),
        None => None,
    };
    let config = FamilyConfig {
        field,
        max_length: args.max_length,
        n: args.n,
        budget,
        file,
    };
    let instance = family.build(&config)?;
    let sp = instance.subobject_poset(budget)?;
    let result = category_gr_measure(&sp);
    let mut extra = Vec::new();
    for (name, rep) in &instance.extra {
        let measure = extended_measure(rep, &sp, &result, budget)
            .map_err(|e| e.during(format!("measuring {name}")))?;
        extra.push(ExtraRow {
            name: name.clone(),
            dims: rep.dims_label(),
            length: rep.length(),
            measure,
        });
    }
    let table = Table {
        poset: sp.poset(),
        result: &result,
        dims: Some(sp.reps().iter().map(|r| dims_label(r.dims())).collect()),
        extra,
    };
    write_out(&table.render(args.format), args.out.as_ref())
}

fn verify(suite: String, seed: u64, cases: usize, budget: u64) -> Outcome {
    let suite = suite_registry().get(&suite)?;
    let config = SuiteConfig {
        seed,
        cases,
        budget: Budget(budget),
    };
    let report = suite.run(&config)?;
    println!("{report}");
    if report.is_pass() {
        Ok(())
    } else {
        Err(Failure::Violation)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Chains { action } => chains(action),
        Command::Poset {
            file,
            format,
            method,
            out,
        } => poset(file, format, method, out),
        Command::Quiver(args) => quiver(args),
        Command::Verify {
            suite,
            seed,
            cases,
            budget,
        } => verify(suite, seed, cases, budget),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("budget exceeded: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Violation) => ExitCode::from(3),
    }
}
