use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use vortspin_cli::commands::{classify, emit, profile, validate, vorticity};
use vortspin_cli::{CliError, CliResult, Format, Scenario};

#[derive(Parser)]
#[command(name = "vortspin", version, about = "Velocity and vorticity of twisted Dirac electron beams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// v_phi, v_z and density on the radial grid
    Profile(Args),
    /// circulation, enclosed flux and finite-difference curl
    Vorticity(Args),
    /// pointwise identity checks; exits 1 if any fails
    Validate(Args),
    /// regime windows, transition radius and vortex-line verdicts
    Classify(Args),
}

#[derive(clap::Args)]
struct Args {
    #[arg(long)]
    scenario: PathBuf,
    /// overrides the scenario's output path
    #[arg(long)]
    out: Option<PathBuf>,
    /// overrides the scenario's output format
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// seed for random validation points
    #[arg(long)]
    seed: Option<u64>,
    /// validate only: scale bispinor component INDEX by FACTOR before checking
    #[arg(long, value_name = "INDEX:FACTOR", value_parser = parse_corrupt, hide = true)]
    corrupt: Option<(usize, f64)>,
}

fn parse_corrupt(s: &str) -> Result<(usize, f64), String> {
    let (i, f) = s.split_once(':').ok_or("expected INDEX:FACTOR")?;
    let i: usize = i.parse().map_err(|e| format!("{e}"))?;
    if i > 3 {
        return Err(format!("component index {i} out of range 0..=3"));
    }
    Ok((i, f.parse().map_err(|e| format!("{e}"))?))
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    let (args, which) = match &cli.command {
        Command::Profile(a) => (a, 0),
        Command::Vorticity(a) => (a, 1),
        Command::Validate(a) => (a, 2),
        Command::Classify(a) => (a, 3),
    };
    let scenario = Scenario::load(&args.scenario)?;
    let out = args.out.clone().or_else(|| scenario.output.path.clone());
    let format = args.format.map(Format::from);
    let text = match which {
        0 => profile::run(&scenario, format.unwrap_or(scenario.output.format))?,
        1 => vorticity::run(&scenario, format.unwrap_or(scenario.output.format))?,
        2 => {
            let opts = validate::Options { seed: args.seed, corrupt: args.corrupt };
            let (text, report) = validate::run(&scenario, format.unwrap_or(Format::Json), opts)?;
            emit(&text, out.as_deref())?;
            if !report.passed() {
                return Err(CliError::Failed(format!("validation failed: {}", report.failures().join(", "))));
            }
            return Ok(());
        }
        _ => classify::run(&scenario, format.unwrap_or(scenario.output.format))?,
    };
    emit(&text, out.as_deref())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let help = matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion);
            let _ = e.print();
            return ExitCode::from(if help { 0 } else { 2 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("vortspin: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
