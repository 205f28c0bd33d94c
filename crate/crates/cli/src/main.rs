use std::io::{Read, Write};
use std::process::ExitCode;

use azumaya_cli::error::malformed;
use azumaya_cli::{dispatch, scenario, CliError, Options};
use clap::{Args, Parser, Subcommand};
use serde_json::{Map, Value};

/// Exact algebra for Azumaya points and circles. Reads one JSON payload,
/// writes one canonical JSON value. Exit status: 0 ok, 1 domain error,
/// 2 malformed input.
#[derive(Parser, Debug)]
#[command(name = "azumaya", version)]
struct Cli {
    /// JSON payload file, or `-` for stdin.
    #[arg(long, global = true)]
    input: Option<String>,
    /// Seed for randomized steps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Degree bound for vanishing ideals (default: the rank).
    #[arg(long, global = true)]
    degree_bound: Option<u32>,
    /// Indent the output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Commutativity and relators of a matrix tuple: {"point", "presentation"?}.
    RepCheck,
    /// Minimal polynomial and degree-bounded vanishing ideal: {"point"}.
    Image,
    /// Support points, lengths and filtration ranks: {"point"}.
    Pushforward,
    /// Characteristic polynomial and its roots: {"matrix"}.
    HilbertChow,
    /// Simultaneous conjugacy of two tuples: {"left", "right"}.
    Conjugate,
    /// Orbit-closure order of two Jordan data: {"left", "right"}.
    OrbitCompare,
    /// Maximal and minimal orbits over support data: {"support"} or {"matrix"}.
    OrbitExtremes,
    /// The Higgsing deformation ODE.
    Higgsing {
        #[command(subcommand)]
        command: HiggsingCommand,
    },
    /// det(lambda - phi(z)): {"phi", "points"?}.
    SpectralCurve(PhiFlag),
    /// [d, z] = 1 on the truncated Weyl action: {"cap"?, "rank"?}.
    WeylCheck,
    /// Branes on a flat torus.
    Torus {
        #[command(subcommand)]
        command: TorusCommand,
    },
    /// Formal Kahler differentials.
    Kahler {
        #[command(subcommand)]
        command: KahlerCommand,
    },
    /// The bundled worked examples.
    Scenario {
        #[command(subcommand)]
        command: ScenarioCommand,
    },
}

#[derive(Subcommand, Debug)]
enum HiggsingCommand {
    /// Fundamental solutions, residual and branch report: {"A", "lambda", "bhat" | "B"}.
    Solve(SolveFlags),
}

#[derive(Args, Debug)]
struct SolveFlags {
    /// 2x2 polynomial matrix A, as JSON.
    #[arg(long = "A")]
    a: Option<String>,
    /// Nonzero scalar lambda.
    #[arg(long)]
    lambda: Option<String>,
    /// Four scalars, as a JSON array.
    #[arg(long)]
    bhat: Option<String>,
}

#[derive(Args, Debug)]
struct PhiFlag {
    /// Higgs field (or morphism), as JSON.
    #[arg(long)]
    phi: Option<String>,
}

#[derive(Subcommand, Debug)]
enum TorusCommand {
    /// Surrogate class, calibration and pushforward cycle of a morphism.
    Class,
    /// Direct sum of {"left", "right"}.
    Amalgamate,
    /// Special Lagrangian representative of {"tau", "target": [r, p, q]}.
    Slag,
    /// Amalgamate {"left", "right"}, then deform to the representative.
    Cancel,
    /// Junction condition of a morphism's orbit profile.
    ValidateProfile,
}

#[derive(Subcommand, Debug)]
enum KahlerCommand {
    /// Trace form of a formal form: {"form"}.
    Trace {
        /// Formal form, as JSON.
        #[arg(long)]
        form: Option<String>,
    },
    /// Pull back a classical 1-form: {"phi", "form", "function"?}.
    Pullback {
        #[command(flatten)]
        phi: PhiFlag,
        /// Coefficients of sum f_k dy_k, as JSON.
        #[arg(long)]
        form: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum ScenarioCommand {
    /// Replay every bundled scenario.
    RunAll,
}

impl Command {
    /// Command path and the payload keys supplied by flags.
    fn resolve(&self) -> (&'static str, Vec<(&'static str, Option<&String>)>) {
        match self {
            Command::RepCheck => ("rep-check", vec![]),
            Command::Image => ("image", vec![]),
            Command::Pushforward => ("pushforward", vec![]),
            Command::HilbertChow => ("hilbert-chow", vec![]),
            Command::Conjugate => ("conjugate", vec![]),
            Command::OrbitCompare => ("orbit-compare", vec![]),
            Command::OrbitExtremes => ("orbit-extremes", vec![]),
            Command::Higgsing { command: HiggsingCommand::Solve(f) } => {
                ("higgsing solve", vec![("A", f.a.as_ref()), ("lambda", f.lambda.as_ref()), ("bhat", f.bhat.as_ref())])
            }
            Command::SpectralCurve(f) => ("spectral-curve", vec![("phi", f.phi.as_ref())]),
            Command::WeylCheck => ("weyl-check", vec![]),
            Command::Torus { command } => match command {
                TorusCommand::Class => ("torus class", vec![]),
                TorusCommand::Amalgamate => ("torus amalgamate", vec![]),
                TorusCommand::Slag => ("torus slag", vec![]),
                TorusCommand::Cancel => ("torus cancel", vec![]),
                TorusCommand::ValidateProfile => ("torus validate-profile", vec![]),
            },
            Command::Kahler { command } => match command {
                KahlerCommand::Trace { form } => ("kahler trace", vec![("form", form.as_ref())]),
                KahlerCommand::Pullback { phi, form } => {
                    ("kahler pullback", vec![("phi", phi.phi.as_ref()), ("form", form.as_ref())])
                }
            },
            Command::Scenario { command: ScenarioCommand::RunAll } => ("scenario run-all", vec![]),
        }
    }
}

fn read_payload(input: Option<&str>) -> Result<Value, CliError> {
    let text = match input {
        None => return Ok(Value::Object(Map::new())),
        Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| malformed(format!("stdin: {}", e)))?;
            s
        }
        Some(path) => std::fs::read_to_string(path).map_err(|e| malformed(format!("{}: {}", path, e)))?,
    };
    serde_json::from_str(&text).map_err(|e| malformed(format!("invalid JSON: {}", e)))
}

/// A flag value is JSON when it parses as JSON, otherwise a bare string
/// (so `--lambda 1/2` works unquoted).
fn flag_value(s: &str) -> Value {
    serde_json::from_str(s).unwrap_or_else(|_| Value::String(s.to_string()))
}

/// Output value and exit status; a failing scenario replay exits with 1.
fn run(cli: &Cli) -> Result<(Value, u8), CliError> {
    let (command, flags) = cli.command.resolve();
    if command == "scenario run-all" {
        let report = scenario::run_all(&scenario::corpus());
        let status = if report["failed"] == 0 { 0 } else { 1 };
        return Ok((report, status));
    }
    let mut payload = read_payload(cli.input.as_deref())?;
    for (key, value) in flags {
        if let Some(v) = value {
            let obj = payload.as_object_mut().ok_or_else(|| malformed("payload must be a JSON object"))?;
            obj.insert(key.to_string(), flag_value(v));
        }
    }
    let opts = Options { seed: cli.seed, degree_bound: cli.degree_bound };
    Ok((dispatch(command, &payload, &opts)?, 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (value, code) = match run(&cli) {
        Ok(out) => out,
        Err(e) => (e.to_json(), e.exit_code() as u8),
    };
    let text = if cli.pretty { serde_json::to_string_pretty(&value) } else { serde_json::to_string(&value) };
    // A closed pipe downstream is not our failure.
    let _ = writeln!(std::io::stdout(), "{}", text.expect("serde_json values always serialize"));
    ExitCode::from(code)
}
