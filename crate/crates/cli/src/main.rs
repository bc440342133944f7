//! Command-line front end: batch computation, verification, and plot-ready
//! data emission for the xi-forge toolkit.
//!
//! Output goes to stdout as decimal-string CSV or JSON; re-running any
//! subcommand with identical flags and cache produces byte-identical bytes.
//! Exit status: 0 on success, 1 on computation failure (or unflagged golden
//! failures under `verify`), 2 on bad flags.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use xi_forge_core::expansions::{
    log_growth_scan, recenter_w_half, s_series, series_to_csv, w_log_series, w_series, SeriesId,
};
use xi_forge_core::keiper::{criterion_report, zero_sum_table};
use xi_forge_core::pustylnikov::{load_table, save_table, xi_coeff, xi_coeff_table, CoeffTable};
use xi_forge_core::riemann::{approx_compare, compare_to_csv, ApproxConfig};
use xi_forge_core::specfun::SpecFunContext;
use xi_forge_core::verify::{run_suite, Suite, VerifyConfig};
use xi_forge_core::wplane::{chebyshev_grid, inequality_scan, scan_to_csv, table1, table1_to_csv};
use xi_forge_core::{APReal, Error};

const CACHE_ENV: &str = "XI_FORGE_CACHE";

#[derive(Parser)]
#[command(
    name = "xi-forge",
    about = "High-precision series, coefficient, and verification toolkit for the completed xi function",
    version
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Working precision in decimal digits (minimum 10).
    #[arg(long, global = true, default_value_t = 30)]
    digits: u32,
    /// Truncation order for series output.
    #[arg(long, global = true, default_value_t = 12)]
    order: usize,
    /// Depth of the Pustylnikov coefficient table.
    #[arg(long = "max-r", global = true, default_value_t = 200)]
    max_r: usize,
    /// Coefficient cache path (XI_FORGE_CACHE overrides).
    #[arg(long, global = true, default_value = "xi-coeffs.cache")]
    cache: PathBuf,
    /// Output format for tabular subcommands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build or extend the coefficient cache.
    Coeffs,
    /// Emit an s-domain series (xi_of_s, xi_of_1_plus_s, xi_minus_half_of_s, xi_plus, xi_minus).
    Series {
        #[arg(long)]
        id: String,
    },
    /// Emit a w-domain series, including the log series and the w = 1/2 re-expansion.
    Wseries {
        #[arg(long)]
        id: String,
        /// Real w points for the growth-scan diagnostic of a log series.
        #[arg(long = "growth-scan", value_delimiter = ',', num_args = 1..)]
        growth_scan: Option<Vec<String>>,
    },
    /// Keiper sigma/tau/lambda report with Li-criterion diagnostics (JSON).
    Keiper {
        #[arg(long = "max-k", default_value_t = 30)]
        max_k: usize,
    },
    /// Recompute the key-point table.
    Table1,
    /// Inequality-chain scan over a Chebyshev grid of real w.
    Scan {
        #[arg(long, default_value_t = 25)]
        points: usize,
        #[arg(long, default_value = "-0.95", allow_hyphen_values = true)]
        lo: String,
        #[arg(long, default_value = "0.95")]
        hi: String,
    },
    /// Prefactor + Dirichlet approximation of log xi against the direct value.
    Riemann {
        #[arg(long, value_delimiter = ',', default_value = "0.8,0.85,0.9,0.95")]
        grid: Vec<String>,
        #[arg(long = "prefactor-order", default_value_t = 2)]
        prefactor_order: u32,
        #[arg(long = "dirichlet-terms", default_value_t = 4)]
        dirichlet_terms: u32,
    },
    /// Replay a golden suite and emit the verification report (JSON).
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.common.digits < 10 {
        eprintln!("error: --digits must be at least 10");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error in {}: {e}", cli.command.name());
            ExitCode::from(1)
        }
    }
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Coeffs => "coeffs",
            Command::Series { .. } => "series",
            Command::Wseries { .. } => "wseries",
            Command::Keiper { .. } => "keiper",
            Command::Table1 => "table1",
            Command::Scan { .. } => "scan",
            Command::Riemann { .. } => "riemann",
            Command::Verify { .. } => "verify",
        }
    }
}

fn cache_path(common: &Common) -> PathBuf {
    match std::env::var_os(CACHE_ENV) {
        Some(p) => PathBuf::from(p),
        None => common.cache.clone(),
    }
}

/// Advisory lock file; held for the duration of a cache write.
struct CacheLock(PathBuf);

impl CacheLock {
    fn acquire(cache: &Path) -> Result<Self, Error> {
        let mut lock = cache.as_os_str().to_owned();
        lock.push(".lock");
        let path = PathBuf::from(lock);
        match std::fs::OpenOptions::new()
            .write(true)
            .create_new(true)
            .open(&path)
        {
            Ok(_) => Ok(CacheLock(path)),
            Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => Err(Error::Domain(format!(
                "cache {} is locked by another process (remove {} if stale)",
                cache.display(),
                path.display()
            ))),
            Err(e) => Err(e.into()),
        }
    }
}

impl Drop for CacheLock {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.0);
    }
}

/// Load the cache when compatible, otherwise build the table in memory.
fn obtain_table(common: &Common) -> Result<CoeffTable, Error> {
    let path = cache_path(common);
    if path.exists() {
        let t = load_table(&path)?;
        if t.precision == common.digits && t.max_r >= common.max_r {
            return Ok(t);
        }
    }
    let ctx = SpecFunContext::new(common.digits);
    xi_coeff_table(common.max_r, &ctx)
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let common = &cli.common;
    let ctx = SpecFunContext::new(common.digits);
    match &cli.command {
        Command::Coeffs => {
            let path = cache_path(common);
            let _lock = CacheLock::acquire(&path)?;
            let table = build_or_extend_cache(&path, common, &ctx)?;
            save_table(&table, &path)?;
            println!(
                "cache {} holds xi_0..xi_{} at {} digits",
                path.display(),
                table.max_r,
                table.precision
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Series { id } => {
            let id = SeriesId::parse(id)?;
            let table = obtain_table(common)?;
            let named = s_series(id, common.order, &table)?;
            emit_series(&named, common);
            Ok(ExitCode::SUCCESS)
        }
        Command::Wseries { id, growth_scan } => {
            let sid = SeriesId::parse(id)?;
            let table = obtain_table(common)?;
            let named = match sid {
                SeriesId::XiHOfW
                | SeriesId::XiMOfW
                | SeriesId::XiPlusOfW
                | SeriesId::XiMinusOfW => w_series(sid, common.order, &table)?,
                SeriesId::LogXiHOfW
                | SeriesId::LogXiMOfW
                | SeriesId::LogXiPlusOfW
                | SeriesId::LogXiMinusOfW => w_log_series(sid, common.order, &table)?,
                SeriesId::XiMRecenteredHalf => recenter_w_half(common.order, &table)?,
                other => {
                    return Err(Error::UnknownId(format!(
                        "{} is not a w-domain series",
                        other.as_str()
                    )))
                }
            };
            emit_series(&named, common);
            if let Some(points) = growth_scan {
                let ws = points
                    .iter()
                    .map(|p| APReal::parse(p, common.digits))
                    .collect::<Result<Vec<APReal>, Error>>()?;
                let report = log_growth_scan(sid, &ws, &[8, 12, 24, 48, 64], &table)?;
                println!(
                    "# growth radius_estimate={}",
                    report.radius_estimate.to_decimal_string(8)
                );
                for row in report.rows {
                    let partials: Vec<String> = row
                        .partials
                        .iter()
                        .map(|(o, v)| format!("{o}:{}", v.to_decimal_string(10)))
                        .collect();
                    println!(
                        "# growth w={} converging={} {}",
                        row.w.to_decimal_string(6),
                        row.converging,
                        partials.join(" ")
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Keiper { max_k } => {
            let table = obtain_table(common)?;
            let order = max_k + 2;
            let xi0 = xi_forge_core::expansions::recenter_xi(
                xi_forge_core::expansions::RecenterTarget::AtZero,
                order,
                &table,
            )?;
            let sums = zero_sum_table(&xi0, *max_k)?;
            let report = criterion_report(&sums);
            println!("{}", report.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Table1 => {
            let rows = table1(&ctx);
            match common.format {
                Format::Csv => print!("{}", table1_to_csv(&rows, common.digits)),
                Format::Json => {
                    let objs: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "w": r.w.to_decimal_string(common.digits),
                                "s": r.s.to_decimal_string(common.digits),
                                "xi_plus_half": r.xi_plus_half.to_decimal_string(common.digits),
                                "xi_minus_half": r.xi_minus_half.to_decimal_string(common.digits),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&objs).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan { points, lo, hi } => {
            let lo = APReal::parse(lo, common.digits)?;
            let hi = APReal::parse(hi, common.digits)?;
            let grid = chebyshev_grid(*points, &lo, &hi);
            let report = inequality_scan(&grid, &ctx)?;
            match common.format {
                Format::Csv => print!("{}", scan_to_csv(&report, common.digits)),
                Format::Json => {
                    let objs: Vec<serde_json::Value> = report
                        .rows
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "w": r.w.to_decimal_string(common.digits),
                                "s": r.s.to_decimal_string(common.digits),
                                "xi_h": r.xi_h.to_decimal_string(common.digits),
                                "xi_plus": r.xi_plus.to_decimal_string(common.digits),
                                "xi_minus": r.xi_minus.to_decimal_string(common.digits),
                                "xi_m": r.xi_m.to_decimal_string(common.digits),
                                "chain1_ok": r.chain1_ok,
                                "chain2_ok": r.chain2_ok,
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&objs).unwrap());
                }
            }
            if report.violations > 0 {
                eprintln!("warning: {} inequality violations", report.violations);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Riemann {
            grid,
            prefactor_order,
            dirichlet_terms,
        } => {
            let cfg = ApproxConfig {
                prefactor_order: *prefactor_order,
                dirichlet_terms: *dirichlet_terms,
                precision: common.digits,
            };
            let ws = grid
                .iter()
                .map(|p| APReal::parse(p, common.digits))
                .collect::<Result<Vec<APReal>, Error>>()?;
            let rows = approx_compare(&ws, &cfg)?;
            match common.format {
                Format::Csv => print!("{}", compare_to_csv(&rows, common.digits)),
                Format::Json => {
                    let objs: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "w": r.w.to_decimal_string(common.digits),
                                "approx": r.approx.to_decimal_string(common.digits),
                                "direct": r.direct.to_decimal_string(common.digits),
                                "abs_err": r.abs_err.to_decimal_string(common.digits),
                                "rel_err": r.rel_err.to_decimal_string(common.digits),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&objs).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite } => {
            let suite = Suite::parse(suite)?;
            let cfg = VerifyConfig {
                precision: common.digits,
                table_depth: common.max_r,
            };
            let report = run_suite(suite, &cfg)?;
            println!("{}", report.to_json());
            if report.all_clear() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

/// Keep existing cache entries untouched and compute only the missing tail.
fn build_or_extend_cache(
    path: &Path,
    common: &Common,
    ctx: &SpecFunContext,
) -> Result<CoeffTable, Error> {
    if path.exists() {
        let existing = load_table(path)?;
        if existing.precision == common.digits {
            if existing.max_r >= common.max_r {
                return Ok(existing);
            }
            let mut values = existing.values;
            for r in values.len()..=common.max_r {
                values.push(xi_coeff(r, ctx));
            }
            let table = CoeffTable {
                max_r: common.max_r,
                precision: common.digits,
                values,
                provenance: xi_forge_core::pustylnikov::Provenance::Integral,
            };
            table.validate_positivity()?;
            return Ok(table);
        }
        eprintln!(
            "cache precision {} differs from requested {}; recomputing",
            existing.precision, common.digits
        );
    }
    xi_coeff_table(common.max_r, ctx)
}

fn emit_series(named: &xi_forge_core::NamedSeries, common: &Common) {
    match common.format {
        Format::Csv => print!("{}", series_to_csv(named)),
        Format::Json => {
            let coeffs: Vec<String> = named
                .series
                .coeffs()
                .iter()
                .map(|c| c.to_decimal_string(common.digits))
                .collect();
            let obj = serde_json::json!({
                "id": named.id.as_str(),
                "variable": named.series.variable.to_string(),
                "center": named.series.center.to_decimal_string(6),
                "precision": named.source_precision,
                "coefficients": coeffs,
            });
            println!("{}", serde_json::to_string_pretty(&obj).unwrap());
        }
    }
}
