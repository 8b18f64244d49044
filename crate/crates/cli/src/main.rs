//! `mtv`: exact sequence tables, permutation-count triangles, series
//! evaluation, and the identity verification suite.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage/configuration error.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mtv_core::exact::{self, SeqName};
use mtv_core::index::Index;
use mtv_core::perms;
use mtv_core::triangles::{self, TableFormat, TriangleName};
use mtv_core::tvalues::{self, EvalConfig, NumValue};
use mtv_core::verify;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "mtv", version, about = "Multiple T-value toolkit", long_about = None)]
struct Cli {
    /// Configuration file in key=value format (precision, truncation,
    /// accel_depth, tolerance, format). Flags override file values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum OutputFormat {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Args, Debug, Clone)]
struct EvalFlags {
    /// Working precision in bits (>= 64)
    #[arg(long)]
    precision: Option<u32>,
    /// Outer summation limit (>= 16)
    #[arg(long)]
    truncation: Option<usize>,
    /// Averaging passes for alternating tails (>= 1)
    #[arg(long)]
    accel_depth: Option<usize>,
    /// Output format
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
}

#[derive(Subcommand)]
enum Command {
    /// Print a sequence as exact rationals (default: B up to n = 10)
    Seq {
        /// Sequence name: B, C, D, E, F, G, EE, GG
        #[arg(default_value = "B")]
        name: String,
        /// Largest index to print
        #[arg(default_value_t = 10)]
        n_max: usize,
        #[command(flatten)]
        flags: EvalFlags,
    },
    /// Print a triangle (default: EE up to k = 10)
    Triangle {
        /// Triangle name: EE, GG, E, F, G, H
        #[arg(default_value = "EE")]
        name: String,
        /// Largest row to print
        #[arg(default_value_t = 10)]
        k_max: usize,
        #[command(flatten)]
        flags: EvalFlags,
    },
    /// Brute-force permutation counts (the enumeration oracle)
    PermCount {
        /// Which family: downup or dumont
        #[arg(default_value = "downup")]
        kind: String,
        /// Count permutations starting from a fixed value: "k,j"
        #[arg(long, conflicts_with = "total")]
        start: Option<String>,
        /// Count all matching permutations of S_n
        #[arg(long)]
        total: Option<usize>,
    },
    /// Evaluate T or T-tilde at an index ("-" is the empty index)
    Tvalue {
        /// T or Ttilde
        #[arg(default_value = "T")]
        kind: String,
        /// Comma-separated index, e.g. "1,2"
        #[arg(default_value = "2")]
        index: String,
        #[command(flatten)]
        flags: EvalFlags,
    },
    /// Evaluate the weighted functional calT(a; k; h)
    Calt {
        /// Weight sequence: C, D, E, F or G
        #[arg(default_value = "E")]
        seq: String,
        /// Admissible index
        #[arg(default_value = "2")]
        index: String,
        /// Number of appended trailing ones
        #[arg(default_value_t = 0)]
        h: usize,
        #[command(flatten)]
        flags: EvalFlags,
    },
    /// Run the identity suite
    Verify {
        /// Check filter: all, a name like thm13, or a prefix like thm2*
        #[arg(long, default_value = "all")]
        filter: String,
        /// Pass tolerance
        #[arg(long)]
        tol: Option<f64>,
        /// Run the deliberately corrupted probes instead (all must FAIL)
        #[arg(long, default_value_t = false)]
        mutation_probe: bool,
        #[command(flatten)]
        flags: EvalFlags,
    },
}

#[derive(Debug, Clone, Default)]
struct FileConfig {
    precision: Option<u32>,
    truncation: Option<usize>,
    accel_depth: Option<usize>,
    tolerance: Option<f64>,
    format: Option<OutputFormat>,
}

fn parse_config_file(path: &PathBuf) -> Result<FileConfig> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read config file {}", path.display()))?;
    let mut cfg = FileConfig::default();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| anyhow!("line {}: expected key=value", lineno + 1))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "precision" => cfg.precision = Some(value.parse()?),
            "truncation" => cfg.truncation = Some(value.parse()?),
            "accel_depth" => cfg.accel_depth = Some(value.parse()?),
            "tolerance" => cfg.tolerance = Some(value.parse()?),
            "format" => {
                cfg.format = Some(match value {
                    "text" => OutputFormat::Text,
                    "csv" => OutputFormat::Csv,
                    "json" => OutputFormat::Json,
                    other => bail!("unknown format `{other}` in config file"),
                })
            }
            other => bail!("unknown config key `{other}`"),
        }
    }
    Ok(cfg)
}

struct Resolved {
    eval: EvalConfig,
    tol: f64,
    format: OutputFormat,
}

// defaults < config file < flags
fn resolve(file: &FileConfig, flags: &EvalFlags, tol_flag: Option<f64>) -> Result<Resolved> {
    let precision = flags
        .precision
        .or(file.precision)
        .unwrap_or(EvalConfig::DEFAULT_PRECISION);
    let truncation = flags
        .truncation
        .or(file.truncation)
        .unwrap_or(EvalConfig::DEFAULT_TRUNCATION);
    let accel = flags
        .accel_depth
        .or(file.accel_depth)
        .unwrap_or(EvalConfig::DEFAULT_ACCEL_DEPTH);
    let eval = EvalConfig::new(precision, truncation, accel).map_err(|e| anyhow!("{e}"))?;
    let tol = tol_flag.or(file.tolerance).unwrap_or(verify::DEFAULT_TOL);
    let format = flags.format.or(file.format).unwrap_or_default();
    Ok(Resolved { eval, tol, format })
}

fn print_value(index: &Index, v: &NumValue, kind: &str, format: OutputFormat, cfg: &EvalConfig) {
    match format {
        OutputFormat::Json => {
            let rigor = match v.rigor {
                mtv_core::Rigor::Bounded => "bounded",
                mtv_core::Rigor::Empirical => "empirical",
            };
            let obj = serde_json::json!({
                "kind": kind,
                "index": index.to_string(),
                "value": format_float(&v.value),
                "err": v.err_f64(),
                "rigor": rigor,
                "config": cfg,
            });
            println!("{}", serde_json::to_string_pretty(&obj).unwrap());
        }
        _ => {
            println!("{kind}({index}) = {}", format_float(&v.value));
            println!("err   {:.3e}", v.err_f64());
            println!(
                "rigor {}",
                match v.rigor {
                    mtv_core::Rigor::Bounded => "bounded",
                    mtv_core::Rigor::Empirical => "empirical",
                }
            );
        }
    }
}

fn format_float(f: &mtv_core::Float) -> String {
    // decimal rendering that keeps every bit of the working precision
    let digits = (f.prec() as f64 * std::f64::consts::LOG10_2).floor() as usize;
    format!("{:.*e}", digits.max(17), f)
}

fn run() -> Result<i32> {
    let cli = Cli::parse();
    let file_cfg = match &cli.config {
        Some(path) => parse_config_file(path)?,
        None => FileConfig::default(),
    };

    match cli.command {
        Command::Seq { name, n_max, flags } => {
            let resolved = resolve(&file_cfg, &flags, None)?;
            if n_max > 200 {
                bail!("n_max {n_max} exceeds the supported maximum of 200");
            }
            let name = SeqName::from_str(&name).map_err(|e| anyhow!("{e}"))?;
            let values: Vec<String> = exact::sequence_table(name, n_max)
                .iter()
                .map(|v| v.to_string())
                .collect();
            match resolved.format {
                OutputFormat::Text => values.iter().for_each(|v| println!("{v}")),
                OutputFormat::Csv => println!("{}", values.join(",")),
                OutputFormat::Json => println!("{}", serde_json::to_string(&values)?),
            }
            Ok(0)
        }
        Command::Triangle { name, k_max, flags } => {
            let resolved = resolve(&file_cfg, &flags, None)?;
            let name = TriangleName::from_str(&name).map_err(|e| anyhow!("{e}"))?;
            let fmt = match resolved.format {
                OutputFormat::Json => TableFormat::Json,
                _ => TableFormat::Csv,
            };
            print!("{}", triangles::emit_table(name, k_max, fmt).map_err(|e| anyhow!("{e}"))?);
            if fmt == TableFormat::Json {
                println!();
            }
            Ok(0)
        }
        Command::PermCount { kind, start, total } => {
            let count = match (kind.as_str(), start, total) {
                ("downup", Some(s), None) => {
                    let (k, j) = parse_pair(&s)?;
                    perms::count_down_up_starting(k, j).map_err(|e| anyhow!("{e}"))?
                }
                ("dumont", Some(s), None) => {
                    let (k, j) = parse_pair(&s)?;
                    perms::count_dumont_starting(k, j).map_err(|e| anyhow!("{e}"))?
                }
                ("downup", None, n) => {
                    perms::count_down_up_total(n.unwrap_or(5)).map_err(|e| anyhow!("{e}"))?
                }
                ("dumont", None, n) => {
                    perms::count_dumont_total(n.unwrap_or(5)).map_err(|e| anyhow!("{e}"))?
                }
                (other, _, _) => bail!("unknown permutation family `{other}`"),
            };
            println!("{count}");
            Ok(0)
        }
        Command::Tvalue { kind, index, flags } => {
            let resolved = resolve(&file_cfg, &flags, None)?;
            let idx = Index::from_str(&index).map_err(|e| anyhow!("{e}"))?;
            let v = match kind.as_str() {
                "T" => tvalues::eval_t(&idx, &resolved.eval).map_err(|e| anyhow!("{e}"))?,
                "Ttilde" | "Tt" => {
                    tvalues::eval_t_tilde(&idx, &resolved.eval).map_err(|e| anyhow!("{e}"))?
                }
                other => bail!("unknown value kind `{other}` (use T or Ttilde)"),
            };
            print_value(&idx, &v, &kind, resolved.format, &resolved.eval);
            Ok(0)
        }
        Command::Calt { seq, index, h, flags } => {
            let resolved = resolve(&file_cfg, &flags, None)?;
            let a = SeqName::from_str(&seq).map_err(|e| anyhow!("{e}"))?;
            let idx = Index::from_str(&index).map_err(|e| anyhow!("{e}"))?;
            let v = tvalues::cal_t(a, &idx, h, &resolved.eval).map_err(|e| anyhow!("{e}"))?;
            print_value(&idx, &v, "calT", resolved.format, &resolved.eval);
            Ok(0)
        }
        Command::Verify {
            filter,
            tol,
            mutation_probe,
            flags,
        } => {
            let resolved = resolve(&file_cfg, &flags, tol)?;
            let reports = if mutation_probe {
                verify::mutation_probe(&resolved.eval, resolved.tol)
            } else {
                verify::run_suite(&filter, &resolved.eval, resolved.tol)
            };
            if reports.is_empty() {
                bail!("no registered check matches filter `{filter}`");
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            match resolved.format {
                OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&reports)?),
                _ => {
                    for r in &reports {
                        println!("{}", r.line());
                        if let Some(note) = &r.note {
                            println!("             note: {note}");
                        }
                    }
                    println!(
                        "{} checks, {} passed, {} failed",
                        reports.len(),
                        reports.len() - failed,
                        failed
                    );
                }
            }
            if mutation_probe {
                // the probes are corrupted on purpose: success means they fail
                return Ok(if failed == reports.len() { 0 } else { 1 });
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| anyhow!("expected \"k,j\" but got `{s}`"))?;
    Ok((a.trim().parse()?, b.trim().parse()?))
}

fn main() -> ExitCode {
    match run() {
        Ok(0) => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
