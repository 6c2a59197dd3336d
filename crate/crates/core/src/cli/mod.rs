//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing check, 2 for
//! usage and schema errors.

mod format;
pub mod verify;

use std::f64::consts::TAU;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

pub use format::{fmt_float, json_float, round_sig};

use crate::analysis::{
    maximize, sample_rounds, sweep_correlation, FreeParam, OptimizationProblem,
    DEFAULT_GRID_POINTS, DEFAULT_TOL,
};
use crate::error::{Error, Result};
use crate::game::{
    closed_form_payoff, expected_payoff, table_of, AnglesSpec, GameFile, GameSpec, Player,
    TableName, TableSpec,
};
use crate::quantum_core::Strength;
use crate::states::StateSpec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "weakgame",
    version,
    about = "Bayesian quantum games under weak-to-projective measurements"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the invariant suite and report PASS/FAIL per check.
    Verify(VerifyArgs),
    /// Expected payoffs from the numeric engine, alongside the closed form when one applies.
    Payoff(PayoffArgs),
    /// Maximum of B's payoff over theta_b as a function of x (A not measuring, B projective).
    Sweep(SweepArgs),
    /// Optimize one player's payoff over the chosen free parameters.
    Optimize(OptimizeArgs),
    /// Monte Carlo estimate of the expected payoffs from repeated rounds.
    Sample(SampleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StateArg {
    Bell,
    Werner,
    Discorded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlayerArg {
    A,
    B,
}

/// Flags describing a game; alternatively `--spec` names a JSON game file.
#[derive(Debug, Clone, Args)]
pub struct GameArgs {
    /// Payoff table: prisoners_dilemma (pd), chsh, modified_chsh.
    #[arg(long)]
    pub game: Option<String>,
    #[arg(long, value_enum)]
    pub state: Option<StateArg>,
    /// JSON state file (bell / werner / discorded / custom rho); replaces --state.
    #[arg(long)]
    pub state_spec: Option<PathBuf>,
    /// Discorded-state correlation parameter (radians).
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<f64>,
    /// Werner mixing parameter in [0, 1].
    #[arg(long)]
    pub eta: Option<f64>,
    /// Player A's strength: a decimal >= 0 or `inf` for projective.
    #[arg(long, default_value = "inf", value_parser = parse_strength, allow_hyphen_values = true)]
    pub y: Strength,
    /// Player B's strength: a decimal >= 0 or `inf` for projective.
    #[arg(long, default_value = "inf", value_parser = parse_strength, allow_hyphen_values = true)]
    pub z: Strength,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub theta_a: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub theta_ap: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub theta_b: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub theta_bp: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub phi_a: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub phi_ap: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub phi_b: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub phi_bp: f64,
    /// Four comma-separated prior weights for (a,b), (a,b'), (a',b), (a',b').
    #[arg(long, value_parser = parse_prior, allow_hyphen_values = true)]
    pub prior: Option<[f64; 4]>,
    /// JSON game file; overrides every other game flag.
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random draws per randomized check.
    #[arg(long, default_value_t = 1000)]
    pub draws: usize,
    /// Extra prior to validate.
    #[arg(long, value_parser = parse_prior, allow_hyphen_values = true)]
    pub prior: Option<[f64; 4]>,
    /// Extra state (JSON state file) to validate.
    #[arg(long)]
    pub state_spec: Option<PathBuf>,
    /// Extra game file whose prior and state are validated.
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PayoffArgs {
    #[command(flatten)]
    pub game: GameArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub out: OutFormat,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub from: f64,
    #[arg(long, default_value_t = TAU, allow_hyphen_values = true)]
    pub to: f64,
    #[arg(long, default_value_t = 200)]
    pub steps: usize,
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
    pub grid: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub out: OutFormat,
}

#[derive(Debug, Clone, Args)]
pub struct OptimizeArgs {
    #[command(flatten)]
    pub game: GameArgs,
    /// Comma-separated subset of theta_a, theta_ap, theta_b, theta_bp, x, eta.
    #[arg(long, default_value = "theta_a,theta_ap,theta_b,theta_bp")]
    pub free: String,
    #[arg(long, value_enum, default_value = "a")]
    pub player: PlayerArg,
    #[arg(long)]
    pub minimize: bool,
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
    pub grid: usize,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "json")]
    pub out: OutFormat,
}

#[derive(Debug, Clone, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub game: GameArgs,
    #[arg(long, default_value_t = 100_000)]
    pub rounds: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    pub out: OutFormat,
}

fn parse_strength(s: &str) -> std::result::Result<Strength, String> {
    if s.eq_ignore_ascii_case("inf") {
        return Ok(Strength::Projective);
    }
    let y: f64 = s.parse().map_err(|e| format!("`{s}`: {e}"))?;
    Strength::finite(y).map_err(|e| e.to_string())
}

fn parse_prior(s: &str) -> std::result::Result<[f64; 4], String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("`{p}`: {e}")))
        .collect::<std::result::Result<_, _>>()?;
    parts
        .try_into()
        .map_err(|v: Vec<f64>| format!("expected 4 weights, got {}", v.len()))
}

fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn read_state_spec(path: &PathBuf) -> Result<StateSpec> {
    let text = read_file(path)?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| Error::Schema {
        path: format!("state.{}", e.path()),
        message: e.into_inner().to_string(),
    })
}

impl GameArgs {
    /// Assembles the JSON-equivalent description of the game.
    pub fn game_file(&self) -> Result<GameFile> {
        if let Some(path) = &self.spec {
            return GameFile::from_json(&read_file(path)?);
        }
        let table = self
            .game
            .as_deref()
            .ok_or_else(|| Error::InvalidArgument("--game or --spec is required".into()))?;
        let table = table.parse::<TableName>()?;
        let state = match (&self.state_spec, self.state) {
            (Some(path), _) => read_state_spec(path)?,
            (None, Some(StateArg::Bell)) => StateSpec::Bell,
            (None, Some(StateArg::Werner)) => StateSpec::Werner {
                eta: self
                    .eta
                    .ok_or_else(|| Error::InvalidArgument("--state werner needs --eta".into()))?,
            },
            (None, Some(StateArg::Discorded)) => StateSpec::Discorded {
                x: self
                    .x
                    .ok_or_else(|| Error::InvalidArgument("--state discorded needs --x".into()))?,
            },
            (None, None) => {
                return Err(Error::InvalidArgument(
                    "--state or --state-spec is required".into(),
                ))
            }
        };
        Ok(GameFile {
            table: TableSpec::Named(
                table_of(table)
                    .builtin()
                    .expect("builtin")
                    .as_str()
                    .to_string(),
            ),
            prior: self.prior,
            angles: AnglesSpec {
                theta_a: self.theta_a,
                theta_ap: self.theta_ap,
                theta_b: self.theta_b,
                theta_bp: self.theta_bp,
                phi_a: self.phi_a,
                phi_ap: self.phi_ap,
                phi_b: self.phi_b,
                phi_bp: self.phi_bp,
            },
            y: self.y,
            z: self.z,
            state,
        })
    }

    pub fn resolve(&self) -> Result<GameSpec> {
        self.game_file()?.build()
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Verify(a) => cmd_verify(a, out),
        Command::Payoff(a) => cmd_payoff(a, out).map(|_| EXIT_OK),
        Command::Sweep(a) => cmd_sweep(a, out).map(|_| EXIT_OK),
        Command::Optimize(a) => cmd_optimize(a, out).map(|_| EXIT_OK),
        Command::Sample(a) => cmd_sample(a, out).map(|_| EXIT_OK),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("write failed: {e}"))
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let mut inputs = verify::VerifyInputs {
        prior: args.prior,
        state: None,
    };
    if let Some(path) = &args.state_spec {
        inputs.state = Some(read_state_spec(path)?.build());
    }
    if let Some(path) = &args.spec {
        let file = GameFile::from_json(&read_file(path)?)?;
        if inputs.prior.is_none() {
            inputs.prior = file.prior;
        }
        if inputs.state.is_none() {
            inputs.state = Some(file.state.build());
        }
    }
    let results = verify::run_checks(args.seed, args.draws, &inputs);
    let mut all = true;
    for r in &results {
        all &= r.passed;
        let status = if r.passed { "PASS" } else { "FAIL" };
        write!(
            out,
            "{status} {:<32} max_defect={:e} tol={:e}",
            r.name, r.max_defect, r.tolerance
        )
        .map_err(io)?;
        if let Some(d) = &r.detail {
            write!(out, " ({d})").map_err(io)?;
        }
        writeln!(out).map_err(io)?;
    }
    writeln!(out, "{}", if all { "ALL PASS" } else { "FAILURES PRESENT" }).map_err(io)?;
    Ok(if all { EXIT_OK } else { EXIT_FAILURE })
}

pub fn cmd_payoff(args: &PayoffArgs, out: &mut dyn Write) -> Result<()> {
    let g = args.game.resolve()?;
    let (ua, ub) = expected_payoff(&g);
    let closed = closed_form_payoff(&g).ok().flatten();
    match args.out {
        OutFormat::Json => {
            let closed = match closed {
                Some((ca, cb)) => json!({
                    "u_a": json_float(ca),
                    "u_b": json_float(cb),
                    "abs_diff_a": json_float((ua - ca).abs()),
                    "abs_diff_b": json_float((ub - cb).abs()),
                }),
                None => Value::Null,
            };
            let v = json!({ "u_a": json_float(ua), "u_b": json_float(ub), "closed_form": closed });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io)?;
        }
        OutFormat::Csv => {
            writeln!(out, "u_A,u_B,closed_u_A,closed_u_B,abs_diff_A,abs_diff_B").map_err(io)?;
            let tail = match closed {
                Some((ca, cb)) => format!(
                    "{},{},{},{}",
                    fmt_float(ca),
                    fmt_float(cb),
                    fmt_float((ua - ca).abs()),
                    fmt_float((ub - cb).abs())
                ),
                None => ",,,".to_string(),
            };
            writeln!(out, "{},{},{tail}", fmt_float(ua), fmt_float(ub)).map_err(io)?;
        }
    }
    Ok(())
}

pub fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<()> {
    let res = sweep_correlation(args.from, args.to, args.steps, args.grid)?;
    match args.out {
        OutFormat::Csv => {
            writeln!(out, "x,theta_b_star,u_A_max,u_B_max").map_err(io)?;
            for r in &res.rows {
                writeln!(
                    out,
                    "{},{},{},{}",
                    fmt_float(r.x),
                    fmt_float(r.theta_b_star),
                    fmt_float(r.u_a_max),
                    fmt_float(r.u_b_max)
                )
                .map_err(io)?;
            }
        }
        OutFormat::Json => {
            let rows: Vec<Value> = res
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "x": json_float(r.x),
                        "theta_b_star": json_float(r.theta_b_star),
                        "u_A_max": json_float(r.u_a_max),
                        "u_B_max": json_float(r.u_b_max),
                    })
                })
                .collect();
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&json!({ "rows": rows })).expect("json")
            )
            .map_err(io)?;
        }
    }
    Ok(())
}

pub fn cmd_optimize(args: &OptimizeArgs, out: &mut dyn Write) -> Result<()> {
    let g = args.game.resolve()?;
    let free = args
        .free
        .split(',')
        .map(|s| FreeParam::parse(s.trim()))
        .collect::<Result<Vec<_>>>()?;
    let player = match args.player {
        PlayerArg::A => Player::A,
        PlayerArg::B => Player::B,
    };
    let problem = OptimizationProblem::new(g, free, player, !args.minimize)?;
    let (assignment, opt) = maximize(&problem, args.grid, args.tol)?;
    match args.out {
        OutFormat::Json => {
            let mut values = Map::new();
            for (p, v) in &assignment.values {
                values.insert(p.name().to_string(), json_float(*v));
            }
            let v = json!({
                "player": if player == Player::A { "A" } else { "B" },
                "maximize": !args.minimize,
                "assignment": values,
                "value": json_float(assignment.value),
                "grid_value": json_float(opt.grid_value),
                "grid_points_per_dim": opt.grid_points_per_dim,
                "evaluations": opt.evaluations,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io)?;
        }
        OutFormat::Csv => {
            let names: Vec<&str> = assignment.values.iter().map(|(p, _)| p.name()).collect();
            writeln!(out, "{},value", names.join(",")).map_err(io)?;
            let vals: Vec<String> = assignment
                .values
                .iter()
                .map(|(_, v)| fmt_float(*v))
                .collect();
            writeln!(out, "{},{}", vals.join(","), fmt_float(assignment.value)).map_err(io)?;
        }
    }
    Ok(())
}

pub fn cmd_sample(args: &SampleArgs, out: &mut dyn Write) -> Result<()> {
    let g = args.game.resolve()?;
    let est = sample_rounds(&g, args.rounds, args.seed)?;
    match args.out {
        OutFormat::Json => {
            let v = json!({
                "n": est.n_rounds,
                "mean_u_a": json_float(est.mean_u_a),
                "mean_u_b": json_float(est.mean_u_b),
                "std_error_u_a": json_float(est.std_error_u_a),
                "std_error_u_b": json_float(est.std_error_u_b),
                "seed": est.seed,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io)?;
        }
        OutFormat::Csv => {
            writeln!(out, "n,mean_u_A,mean_u_B,std_error_u_A,std_error_u_B,seed").map_err(io)?;
            writeln!(
                out,
                "{},{},{},{},{},{}",
                est.n_rounds,
                fmt_float(est.mean_u_a),
                fmt_float(est.mean_u_b),
                fmt_float(est.std_error_u_a),
                fmt_float(est.std_error_u_b),
                est.seed
            )
            .map_err(io)?;
        }
    }
    Ok(())
}
