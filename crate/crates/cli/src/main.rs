use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use twospinor::fock::Scenario;
use twospinor_cli::{
    apply_overrides, decompose_cmd, emit, parse_json, parse_overrides, read_input, scatter, sweep_csv, verify,
    vertex_cmd, CliError, CommandReport,
};

#[derive(Parser)]
#[command(name = "twospinor", version, about = "Two-spinor field verification and scattering reports")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Seed for every random sample.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Tolerance override, `CHECK=VALUE`; repeatable.
    #[arg(long = "tol", value_name = "CHECK=VALUE")]
    tol: Vec<String>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Leave the generation time out of the report.
    #[arg(long)]
    no_timestamp: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites.
    Verify {
        /// core|dirac|photon|vertex|gauge|higgs|fock|all
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate one vertex from a JSON file with phi, psi and a.
    Vertex {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Run a scattering scenario; `--demo` uses the shipped one.
    Scatter {
        #[arg(required_unless_present = "demo")]
        scenario: Option<PathBuf>,
        #[arg(long, conflicts_with = "scenario")]
        demo: bool,
        /// Also write the T-sweep as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Higgs vacuum and symmetry-breaking decomposition from a JSON file.
    Decompose {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

fn timestamp(common: &Common) -> Option<u64> {
    if common.no_timestamp {
        None
    } else {
        SystemTime::now().duration_since(UNIX_EPOCH).ok().map(|d| d.as_secs())
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Verify { suite, common } => {
            let overrides = parse_overrides(&common.tol)?;
            let report = verify(&suite, common.seed, &overrides, timestamp(&common))?;
            emit(&report, common.out.as_deref())?;
            Ok(report.passed)
        }
        Command::Vertex { input, common } => {
            let mut body = vertex_cmd::run(&parse_json(&input)?)?;
            apply_overrides(body.checks.iter_mut(), &parse_overrides(&common.tol)?)?;
            body.passed = !body.checks.iter().any(|c| c.failed());
            let passed = body.passed;
            emit(&CommandReport::new("vertex", None, timestamp(&common), body), common.out.as_deref())?;
            Ok(passed)
        }
        Command::Scatter { scenario, demo, csv, common } => {
            let s = match scenario {
                Some(path) if !demo => {
                    Scenario::from_json(&read_input(&path)?).map_err(|e| CliError::Input(e.to_string()))?
                }
                _ => Scenario::demo(),
            };
            let body = scatter(&s, &parse_overrides(&common.tol)?)?;
            if let Some(path) = csv {
                std::fs::write(path, sweep_csv(&body.report))?;
            }
            let passed = body.passed;
            emit(&CommandReport::new("scatter", None, timestamp(&common), body), common.out.as_deref())?;
            Ok(passed)
        }
        Command::Decompose { input, common } => {
            let mut body = decompose_cmd::run(&parse_json(&input)?, common.seed, 1e-12)?;
            apply_overrides(body.checks.iter_mut(), &parse_overrides(&common.tol)?)?;
            body.passed = !body.checks.iter().any(|c| c.failed());
            let passed = body.passed;
            emit(&CommandReport::new("decompose", Some(common.seed), timestamp(&common), body), common.out.as_deref())?;
            Ok(passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("twospinor: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
