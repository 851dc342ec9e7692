use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;
use spinhol::spin::{clifford_generators, Su2Rep};
use spinhol_cli::error::{CliError, CliResult};
use spinhol_cli::report::{analyze, matrix_text};
use spinhol_cli::spec::{export_spec, from_catalog, parse_params, parse_spec, Input};
use spinhol_cli::tables::{reproduce_table, su2_table};
use std::process::ExitCode;

/// Largest `r + s` accepted by `clifford`.
const CLIFFORD_MAX_DIM: usize = 12;

#[derive(Parser)]
#[command(name = "spinhol", version, about = "Exact curvature, holonomy and parallel spinors of metric Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RepArg {
    Rho,
    Sigma,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Jacobi identity, metric nondegeneracy and ad-invariance.
    Validate { file: String },
    /// Full report: signature, curvature, holonomy and parallel spinors.
    Analyze {
        /// JSON specification file.
        file: Option<String>,
        /// Use a built-in family instead of a file.
        #[arg(long, conflicts_with = "file")]
        catalog: Option<String>,
        /// Family parameters as a JSON object.
        #[arg(long, requires = "catalog")]
        params: Option<String>,
        #[arg(long, conflicts_with = "markdown")]
        json: bool,
        #[arg(long)]
        markdown: bool,
    },
    /// Rebuild one of the classification tables (1 to 6).
    Table {
        n: u8,
        /// Overrides applied to every row whose family takes the key.
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Signed weight counts of the su(2) representations.
    Su2 {
        #[arg(long, value_enum)]
        rep: RepArg,
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the Clifford generators of signature (neg, pos).
    Clifford {
        #[arg(long)]
        neg: usize,
        #[arg(long)]
        pos: usize,
        /// Verify the anticommutation relations.
        #[arg(long)]
        check: bool,
    },
    /// Print the explicit JSON specification of a built-in family.
    Export {
        #[arg(long)]
        catalog: String,
        #[arg(long)]
        params: Option<String>,
    },
}

fn read(path: &str) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_string(), source })
}

fn json_arg(text: &str, flag: &str) -> CliResult<Value> {
    serde_json::from_str(text).map_err(|e| CliError::parse(format!("{flag}: malformed JSON: {e}")))
}

fn catalog_input(name: &str, params: Option<&str>) -> CliResult<Input> {
    let v = params.map(|p| json_arg(p, "--params")).transpose()?;
    let params = parse_params(name, v.as_ref(), "--params")?;
    from_catalog(name, &params)
}

fn run(cli: Cli) -> CliResult<u8> {
    match cli.command {
        Command::Validate { file } => {
            let input = parse_spec(&read(&file)?)?;
            let report = input.algebra.validate();
            if report.is_valid() {
                println!("valid: dim {}", input.algebra.dim());
                Ok(0)
            } else {
                for v in &report.violations {
                    println!("violation: {v}");
                }
                Ok(1)
            }
        }
        Command::Analyze { file, catalog, params, json, markdown: _ } => {
            let input = match (file, catalog) {
                (Some(f), None) => parse_spec(&read(&f)?)?,
                (None, Some(name)) => catalog_input(&name, params.as_deref())?,
                _ => return Err(CliError::parse("give a spec file or --catalog NAME")),
            };
            let report = analyze(&input);
            println!("{}", if json { report.to_json() } else { report.to_markdown() });
            Ok(if report.valid { 0 } else { 1 })
        }
        Command::Table { n, params, json } => {
            let overrides = params.map(|p| json_arg(&p, "--params")).transpose()?;
            let table = reproduce_table(n, overrides.as_ref())?;
            println!("{}", if json { table.to_json() } else { table.to_markdown() });
            Ok(if table.all_match() { 0 } else { 1 })
        }
        Command::Su2 { rep, kmax, json } => {
            let kind = match rep {
                RepArg::Rho => Su2Rep::Rho,
                RepArg::Sigma => Su2Rep::Sigma,
            };
            let table = su2_table(kind, kmax)?;
            println!("{}", if json { table.to_json() } else { table.to_markdown() });
            Ok(0)
        }
        Command::Clifford { neg, pos, check } => {
            if neg + pos > CLIFFORD_MAX_DIM {
                return Err(CliError::parse(format!("--neg + --pos must not exceed {CLIFFORD_MAX_DIM}")));
            }
            let rep = clifford_generators(neg, pos);
            for i in 0..rep.n() {
                println!("gamma_{} (square {}):", i + 1, -rep.signs()[i]);
                println!("{}\n", matrix_text(&rep.gamma(i)));
            }
            if check {
                let bad = rep.anticommutator_failures();
                if bad.is_empty() {
                    println!("check: all anticommutators equal -2 g_ij");
                } else {
                    for (i, j) in &bad {
                        println!("check failed: gamma_{} gamma_{}", i + 1, j + 1);
                    }
                    return Ok(1);
                }
            }
            Ok(0)
        }
        Command::Export { catalog, params } => {
            let input = catalog_input(&catalog, params.as_deref())?;
            println!("{}", serde_json::to_string_pretty(&export_spec(&input.algebra)).expect("value serializes"));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
