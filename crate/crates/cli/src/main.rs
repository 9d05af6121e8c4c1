mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use srl_core::{Error, Limits};

use report::Status;

#[derive(Parser, Debug)]
#[command(name = "srl", version, about = "Schur rings over small groups")]
struct Cli {
    /// Emit JSON instead of key=value records.
    #[arg(long, global = true)]
    json: bool,

    /// Largest group order built or searched.
    #[arg(long, global = true, env = "SRL_MAX_ORDER")]
    max_order: Option<usize>,

    /// Wall-clock budget of a single automorphism search.
    #[arg(long, global = true, env = "SRL_TIME_BUDGET_SECS")]
    time_budget_secs: Option<u64>,

    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, env = "SRL_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the multiplication table of a group.
    Group { spec: String },
    /// Emit the partition of a constructed S-ring.
    Construct {
        family: Family,
        #[arg(long)]
        p: u64,
        /// Write to a file instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check that a partition file defines an S-ring.
    Verify {
        #[arg(long)]
        group: String,
        /// Partition file; stdin when omitted or `-`.
        #[arg(long)]
        partition: Option<PathBuf>,
    },
    /// Print the nonzero structure constants.
    Constants(RingArgs),
    /// Automorphism group of an S-ring.
    Autgroup(RingArgs),
    /// Decide whether an S-ring is schurian.
    Schurity {
        #[command(flatten)]
        ring: RingArgs,
        /// Exit with status 1 unless the verdict matches.
        #[arg(long)]
        expect: Option<Expect>,
    },
    /// Enumerate all S-rings over a group and decide each.
    Census {
        #[arg(long)]
        group: String,
        /// Exit with status 1 if any S-ring is nonschurian.
        #[arg(long)]
        expect_schur: bool,
    },
    /// Cyclotomic identities for primes p = 1 mod l up to a bound.
    Cyclotomy {
        #[arg(long, value_parser = ["4", "6"])]
        l: String,
        #[arg(long)]
        pmax: u64,
    },
    /// Run the numbered checks on the constructed families.
    PaperSuite {
        /// Run only this check.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=8))]
        only: Option<u8>,
        /// Include wall-clock times (breaks byte-identical output).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Args, Debug)]
pub struct RingArgs {
    /// Group spec such as D8xC5; implied by --family.
    #[arg(long)]
    pub group: Option<String>,
    /// Partition file, `-` for stdin.
    #[arg(long, conflicts_with = "family")]
    pub partition: Option<PathBuf>,
    #[arg(long, requires = "p")]
    pub family: Option<Family>,
    #[arg(long)]
    pub p: Option<u64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Family {
    #[value(name = "d8zp")]
    D8Zp,
    #[value(name = "d8zp-quotient")]
    D8ZpQuotient,
    #[value(name = "q8zp-l4")]
    Q8ZpL4,
    #[value(name = "q8zp-l6")]
    Q8ZpL6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Expect {
    Schurian,
    Nonschurian,
}

fn limits(cli: &Cli) -> Limits {
    let mut l = Limits::default();
    if let Some(n) = cli.max_order {
        l.max_product_order = n;
        l.max_sring_order = n;
    }
    if let Some(s) = cli.time_budget_secs {
        l.time_budget = Duration::from_secs(s);
    }
    l
}

/// 1 for a failed verdict, 2 for bad input, 3 for an exhausted cap.
fn exit_code(e: &CliError) -> u8 {
    match e {
        CliError::Core(Error::CapExceeded { .. } | Error::TimeBudgetExceeded { .. }) => 3,
        CliError::Core(
            Error::Axiom(_) | Error::NotAPartition(_) | Error::IdentityFailed { .. },
        ) => 1,
        _ => 2,
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(s) => f.write_str(s),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: cannot start {n} worker threads: {e}");
            return ExitCode::from(2);
        }
    }
    let limits = limits(&cli);
    let result = match &cli.command {
        Command::Group { spec } => commands::group(spec, &limits),
        Command::Construct { family, p, output } => {
            commands::construct(*family, *p, output.as_deref())
        }
        Command::Verify { group, partition } => {
            commands::verify(group, partition.as_deref(), &limits)
        }
        Command::Constants(ring) => commands::constants(ring, &limits),
        Command::Autgroup(ring) => commands::autgroup(ring, &limits),
        Command::Schurity { ring, expect } => commands::schurity(ring, *expect, &limits),
        Command::Census {
            group,
            expect_schur,
        } => commands::census(group, *expect_schur, &limits),
        Command::Cyclotomy { l, pmax } => {
            commands::cyclotomy(l.parse().expect("validated by clap"), *pmax)
        }
        Command::PaperSuite { only, timings } => commands::paper_suite(*only, *timings, &limits),
    };
    match result {
        Ok(report) => {
            let text = if cli.json {
                report.render_json()
            } else {
                report.render_text()
            };
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = stdout.write_all(text.as_bytes());
            match report.status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Verdict => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
