//! `commvar`: runs the verification suites and writes JSON reports.
//!
//! Exit codes: 0 when nothing fails, 1 when a check fails, 2 on usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use commvar::acceptance::run_all;
use commvar::config::{AlgebraSelector, SuiteConfig};
use commvar::report::{to_json, ReportDoc};
use commvar::suites::{run_suite, Suite};
use commvar::Error;

#[derive(Parser)]
#[command(name = "commvar", version, about = "Exact checks around commuting varieties of small simple Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Basis, degrees and axiom check of the selected algebra.
    AlgebraInfo,
    /// Invariant generators, polarization and root divisibility.
    Invariants,
    /// Poisson-commutativity of the shifted invariants.
    Poisson,
    /// The characteristic module at sampled and witness points.
    Charmod,
    /// Groebner basis, dimension and vanishing ideal of the commuting scheme.
    Scheme,
    /// Slice cohomology of the Koszul-type complexes.
    Complexes,
    /// The combinatorial identities.
    Comb,
    /// Every acceptance criterion, then every enabled suite for the selected algebra.
    VerifyAll,
}

#[derive(Args)]
struct Flags {
    /// Algebra as series and rank, e.g. A2.
    #[arg(long, global = true)]
    algebra: Option<AlgebraSelector>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    height_bound: Option<u64>,
    /// Total degree bound for slices.
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// Bound on l in the psi scan.
    #[arg(long, global = true)]
    max_l: Option<u64>,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Writes the report here instead of standard output.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// JSON configuration; flags override its fields.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Records elapsed wall time in the report.
    #[arg(long, global = true)]
    timing: bool,
    /// Enables the rank-2 complexes.
    #[arg(long, global = true)]
    long_running: bool,
}

impl Flags {
    fn config(&self) -> Result<SuiteConfig, Error> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Contract(format!("{}: {e}", path.display())))?;
                SuiteConfig::from_json(&text)?
            }
            None => SuiteConfig::default(),
        };
        if let Some(a) = self.algebra {
            cfg.algebra = a;
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        if let Some(h) = self.height_bound {
            cfg.height_bound = h;
        }
        if let Some(d) = self.max_degree {
            cfg.max_total_degree = d;
        }
        if let Some(l) = self.max_l {
            cfg.psi_max_l = l;
        }
        if let Some(j) = self.jobs {
            cfg.jobs = j;
        }
        cfg.timing |= self.timing;
        cfg.long_running |= self.long_running;
        cfg.validate()?;
        Ok(cfg)
    }
}

fn suite_of(c: Command) -> Option<Suite> {
    Some(match c {
        Command::AlgebraInfo => Suite::AlgebraInfo,
        Command::Invariants => Suite::Invariants,
        Command::Poisson => Suite::Poisson,
        Command::Charmod => Suite::Charmod,
        Command::Scheme => Suite::Scheme,
        Command::Complexes => Suite::Complexes,
        Command::Comb => Suite::Comb,
        Command::VerifyAll => return None,
    })
}

fn run(command: Command, cfg: &SuiteConfig) -> Result<Vec<ReportDoc>, Error> {
    if let Some(suite) = suite_of(command) {
        return run_suite(suite, cfg);
    }
    let mut docs: Vec<ReportDoc> = run_all(cfg)?.iter().map(|c| c.to_doc(cfg.timing)).collect();
    let suites: Vec<Suite> = Suite::ALL.into_iter().filter(|s| s.enabled(cfg)).collect();
    let per_suite = suites.par_iter().map(|&s| run_suite(s, cfg)).collect::<Result<Vec<_>, _>>()?;
    docs.extend(per_suite.into_iter().flatten());
    Ok(docs)
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match cli.flags.config() {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    if cfg.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build_global() {
            return usage(e);
        }
    }
    let docs = match run(cli.command, &cfg) {
        Ok(d) => d,
        Err(e @ (Error::Contract(_) | Error::Capability(_))) => return usage(e),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let text = to_json(&docs);
    match &cli.flags.report {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                return usage(format!("{}: {e}", path.display()));
            }
        }
        None => print!("{text}"),
    }
    let failed = docs.iter().filter(|d| d.failed()).count();
    eprintln!("{} documents, {} failed", docs.len(), failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) }
}
