use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use stirling_lab::closedform::explicit_value;
use stirling_lab::fps::{value_via_egf, DEFAULT_ORDER};
use stirling_lab::oracle::{oracle_value, OracleConfig};
use stirling_lab::table::{check_fixtures, Format, TableDocument};
use stirling_lab::verify::{run_suite, Suite, VerifyConfig};
use stirling_lab::{Cell, Error, Kind, Params, Triangles};

/// Largest row `table` will emit.
const TABLE_ROW_LIMIT: u32 = 40;

const CACHE_CAP_VAR: &str = "STIRLING_LAB_CACHE_CAP";

#[derive(Parser)]
#[command(
    name = "stirling-lab",
    version,
    about = "Exact s-associated r-Stirling and r-Lah numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one value.
    Value {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Method::Recurrence)]
        method: Method,
        /// Truncation order limit for the egf method.
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// Enumeration cap for the oracle method (all shapes).
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Emit rows of a triangle.
    Table {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        #[arg(long, default_value_t = 0)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long)]
        order: Option<u32>,
        /// Worker threads; defaults to the number of cores.
        #[arg(long)]
        jobs: Option<usize>,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Check fixture tables (a file or a directory of *.csv).
    Fixtures { path: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Recurrence,
    Explicit,
    Oracle,
    Egf,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
    Md,
}

impl From<TableFormat> for Format {
    fn from(f: TableFormat) -> Format {
        match f {
            TableFormat::Csv => Format::Csv,
            TableFormat::Json => Format::Json,
            TableFormat::Md => Format::Markdown,
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::CapExceeded { .. } => 3,
        _ => 2,
    }
}

fn store_from_env() -> Result<Triangles, Error> {
    match std::env::var(CACHE_CAP_VAR) {
        Ok(raw) => raw
            .trim()
            .parse::<usize>()
            .map(|cap| Triangles::with_cap(Some(cap)))
            .map_err(|_| {
                Error::Domain(format!(
                    "{CACHE_CAP_VAR} must be a nonnegative integer, got {raw:?}"
                ))
            }),
        Err(_) => Ok(Triangles::new()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let store = store_from_env()?;
    match cli.command {
        Command::Value {
            kind,
            r,
            s,
            n,
            k,
            method,
            order,
            cap,
        } => {
            let p = Params::new(kind, r, s)?;
            let value = match method {
                Method::Recurrence => store.value(&p, Cell::new(n, k)),
                Method::Explicit => explicit_value(&p, n, k)?,
                Method::Oracle => {
                    let config = match cap {
                        Some(c) => OracleConfig {
                            cycles_cap: c,
                            subsets_cap: c,
                            lists_cap: c,
                        },
                        None => OracleConfig::default(),
                    };
                    oracle_value(&p, n, k, &config)?
                }
                Method::Egf => value_via_egf(&p, n, k, order)?,
            };
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Table {
            kind,
            r,
            s,
            n_min,
            n_max,
            format,
            out,
        } => {
            if n_max > TABLE_ROW_LIMIT {
                return Err(Error::Domain(format!(
                    "--n-max {n_max} is above the limit of {TABLE_ROW_LIMIT}"
                )));
            }
            let p = Params::new(kind, r, s)?;
            let doc = TableDocument::generate(&store, &p, n_min.min(n_max), n_max);
            let text = doc.render(format.into());
            match out {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|source| Error::Io { path, source })?
                }
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            n_max,
            order,
            jobs,
            json,
        } => {
            if let Some(j) = jobs {
                // only fails if a pool already exists, in which case it is reused
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(j.max(1))
                    .build_global();
            }
            let mut config = VerifyConfig::default();
            if let Some(n) = n_max {
                config = config.with_n_max(n);
            }
            if let Some(o) = order {
                config.order = o;
            }
            let report = run_suite(suite, &store, &config);
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("plain data")
                );
            } else {
                print!("{report}");
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Fixtures { path } => {
            let summaries = check_fixtures(&store, &path)?;
            let mut bad = 0;
            let mut cells = 0;
            for summary in &summaries {
                cells += summary.cells;
                bad += summary.mismatches.len();
                let status = if summary.mismatches.is_empty() {
                    "ok"
                } else {
                    "MISMATCH"
                };
                println!("{status} {} cells={}", summary.file, summary.cells);
                for d in &summary.mismatches {
                    println!(
                        "  ({}, {}) fixture={} computed={}",
                        d.n, d.k, d.expected, d.computed
                    );
                }
            }
            println!("{} files, {cells} cells, {bad} mismatches", summaries.len());
            Ok(if bad == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
