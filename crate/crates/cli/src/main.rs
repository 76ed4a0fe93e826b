//! `univsum`: reproduce universality claims for ternary polygonal sums at a
//! chosen scan bound.

mod cache;
mod commands;
mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use univsum::ternary::{default_rules, load_rules};
use univsum::{theta_series, Catalog, RuleRecord, ThetaFactor};

use cache::SeriesCache;
use commands::{Scanner, Subject};
use report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "univsum",
    version,
    about = "Exact scans of ternary polygonal sums"
)]
struct Cli {
    /// Scan bound N (defaults: 10^6 for scans, 10^4 for identities)
    #[arg(long, global = true)]
    limit: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Identity catalog (JSON)
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    /// Excluded-set rules (JSON)
    #[arg(long, global = true)]
    rules: Option<PathBuf>,
    /// Directory holding identities.json and dickson.json
    #[arg(long, global = true, env = "UNIVSUM_CATALOG_DIR")]
    catalog_dir: Option<PathBuf>,
    /// Worker threads for report rows
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Directory for cached representation series
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of f(q^i, q^j) through q^N
    Theta { i: i64, j: i64 },
    /// Gap scan of a tuple a1 a2 b1 b2 c1 c2
    Universal {
        #[arg(num_args = 6, allow_negative_numbers = true, required = true)]
        tuple: Vec<i64>,
    },
    /// Empirical exceptional set of a tuple
    Exceptional {
        #[arg(num_args = 6, allow_negative_numbers = true, required = true)]
        tuple: Vec<i64>,
    },
    /// Completing the square, checked against direct counts
    Reduce {
        #[arg(num_args = 6, allow_negative_numbers = true, required = true)]
        tuple: Vec<i64>,
    },
    /// Catalog identities
    Identity {
        #[command(subcommand)]
        action: IdentityAction,
    },
    /// Batch reproduction of a published list
    Report { subject: Subject },
    /// Compare value sets of two component sums, e.g. "(1,1),(1,1)" "(2,0),(2,2)"
    Equiv { lhs: String, rhs: String },
}

#[derive(Subcommand)]
enum IdentityAction {
    /// Series check of one identity, or all with --all
    Verify {
        id: Option<String>,
        #[arg(long, conflicts_with = "id")]
        all: bool,
    },
    /// Component tuples and the count law
    Dissect { id: String },
    /// Gap sets of both sides of a dissection
    Transfer { id: String },
}

impl Cli {
    fn limit_or(&self, default: usize) -> anyhow::Result<usize> {
        match self.limit {
            Some(0) => bail!("--limit must be at least 1"),
            Some(n) => Ok(n),
            None => Ok(default),
        }
    }

    fn catalog(&self) -> anyhow::Result<Catalog> {
        let path = self
            .catalog
            .clone()
            .or_else(|| self.catalog_dir.as_ref().map(|d| d.join("identities.json")));
        match path {
            Some(p) => Catalog::load(&p).with_context(|| format!("loading {}", p.display())),
            None => Ok(Catalog::bundled()),
        }
    }

    fn rules(&self) -> anyhow::Result<Vec<RuleRecord>> {
        let path = self
            .rules
            .clone()
            .or_else(|| self.catalog_dir.as_ref().map(|d| d.join("dickson.json")));
        match path {
            Some(p) => load_rules(&p).with_context(|| format!("loading {}", p.display())),
            None => Ok(default_rules()),
        }
    }

    fn output(&self) -> anyhow::Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(p) => Box::new(BufWriter::new(
                File::create(p).with_context(|| format!("creating {}", p.display()))?,
            )),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }
}

fn theta(cli: &Cli, i: i64, j: i64) -> anyhow::Result<()> {
    let order = cli.limit_or(100)?;
    let s = theta_series::<i64>(ThetaFactor::new(i, j)?, order);
    let mut out = cli.output()?;
    match cli.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(s.coeffs())?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["n", "coeff"])?;
            for (n, c) in s.coeffs().iter().enumerate() {
                w.write_record([n.to_string(), c.to_string()])?;
            }
            w.flush()?;
        }
        Format::Text => {
            let cs: Vec<String> = s.coeffs().iter().map(i64::to_string).collect();
            writeln!(out, "{}", cs.join(","))?;
        }
    }
    out.flush()?;
    Ok(())
}

fn build_report(cli: &Cli, scan: &Scanner) -> anyhow::Result<Report> {
    match &cli.command {
        Command::Theta { .. } => unreachable!("handled before reports"),
        Command::Universal { tuple } => commands::universal(
            scan,
            &commands::parse_tuple(tuple)?,
            cli.limit_or(1_000_000)?,
        ),
        Command::Exceptional { tuple } => commands::exceptional(
            scan,
            &commands::parse_tuple(tuple)?,
            cli.limit_or(1_000_000)?,
        ),
        Command::Reduce { tuple } => {
            commands::reduce(&commands::parse_tuple(tuple)?, cli.limit_or(2000)?)
        }
        Command::Identity { action } => {
            let catalog = cli.catalog()?;
            let bound = cli.limit_or(10_000)?;
            match action {
                IdentityAction::Verify { id: Some(id), .. } => {
                    commands::identity_verify(&catalog, std::slice::from_ref(id), bound)
                }
                IdentityAction::Verify {
                    id: None,
                    all: true,
                } => {
                    let ids: Vec<String> = catalog.records().iter().map(|r| r.id.clone()).collect();
                    commands::identity_verify(&catalog, &ids, bound)
                }
                IdentityAction::Verify {
                    id: None,
                    all: false,
                } => {
                    bail!("identity verify needs an id or --all")
                }
                IdentityAction::Dissect { id } => commands::identity_dissect(&catalog, id, bound),
                IdentityAction::Transfer { id } => commands::identity_transfer(&catalog, id, bound),
            }
        }
        Command::Report { subject } => {
            let rules = if *subject == Subject::Dickson {
                cli.rules()?
            } else {
                Vec::new()
            };
            commands::report(
                scan,
                *subject,
                &rules,
                cli.limit_or(subject.default_limit())?,
            )
        }
        Command::Equiv { lhs, rhs } => commands::equiv(
            &commands::parse_components(lhs)?,
            &commands::parse_components(rhs)?,
            cli.limit_or(10_000)?,
        ),
    }
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            bail!("--jobs must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()?;
    }
    if let Command::Theta { i, j } = cli.command {
        theta(cli, i, j)?;
        return Ok(true);
    }
    let scan = Scanner {
        cache: cli.cache.as_deref().map(SeriesCache::open).transpose()?,
    };
    let start = Instant::now();
    let mut report = build_report(cli, &scan)?;
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    let mut out = cli.output()?;
    report.write(cli.format, &mut out)?;
    out.flush()?;
    Ok(report.ok())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
