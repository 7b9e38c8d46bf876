//! Command-line arguments and their validation into a [`RunConfig`].

use cherednik::{Error, ExactParams, FloatParams, Rational, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use cherednik::ComplexF;
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug)]
#[command(
    name = "cherednik",
    version,
    about = "Verification reports for standard modules over the rational Cherednik algebra of Z/n"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether c is good, whether it is semisimple, and which D_k are singular.
    Check(CommonArgs),
    /// Translate c by nZ^n into the good set.
    Normalize(CommonArgs),
    /// Emit D_k, F_k, eu and η matrices.
    Matrices(CommonArgs),
    /// Dimension of End(Δ) from the kernels of ξ^n.
    EndDim(CommonArgs),
    /// Hecke relation residuals and eigenvalues of η.
    Hecke(CommonArgs),
    /// The map Δ → ∇M sending v_{0,0} to ψ^M_{c,t}.
    Hom(CommonArgs),
    /// Run every applicable check.
    VerifyAll(CommonArgs),
}

impl Command {
    pub fn split(self) -> (CommandKind, CommonArgs) {
        match self {
            Command::Check(a) => (CommandKind::Check, a),
            Command::Normalize(a) => (CommandKind::Normalize, a),
            Command::Matrices(a) => (CommandKind::Matrices, a),
            Command::EndDim(a) => (CommandKind::EndDim, a),
            Command::Hecke(a) => (CommandKind::Hecke, a),
            Command::Hom(a) => (CommandKind::Hom, a),
            Command::VerifyAll(a) => (CommandKind::VerifyAll, a),
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// Order of the cyclic group.
    #[arg(long)]
    pub n: usize,
    /// Comma-separated c_1, …, c_n with c_n = 0, e.g. "-1,0" or "1/2,0".
    #[arg(long, allow_hyphen_values = true)]
    pub c: String,
    /// Comma-separated coefficients t_0, …, t_{n−1} of ψ^M_{c,t}; defaults to e_{n−1}.
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    /// Highest degree examined; defaults to 3n and must be at least n.
    #[arg(long, allow_hyphen_values = true)]
    pub max_degree: Option<i64>,
    /// Tolerance for floating-point comparisons and residuals.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Print the report as JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommandKind {
    Check,
    Normalize,
    Matrices,
    EndDim,
    Hecke,
    Hom,
    VerifyAll,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Check => "check",
            CommandKind::Normalize => "normalize",
            CommandKind::Matrices => "matrices",
            CommandKind::EndDim => "end-dim",
            CommandKind::Hecke => "hecke",
            CommandKind::Hom => "hom",
            CommandKind::VerifyAll => "verify-all",
        }
    }
}

/// Parameters and `t` in the arithmetic selected by `--mode`.
#[derive(Clone, Debug)]
pub enum Inputs {
    Exact { params: ExactParams, t: Vec<Rational> },
    Float { params: FloatParams, t: Vec<ComplexF> },
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: CommandKind,
    pub inputs: Inputs,
    pub max_degree: i64,
    pub tol: f64,
    pub seed: u64,
    pub json: bool,
}

impl RunConfig {
    pub fn n(&self) -> usize {
        match &self.inputs {
            Inputs::Exact { params, .. } => params.n(),
            Inputs::Float { params, .. } => params.n(),
        }
    }

    pub fn mode(&self) -> Mode {
        match self.inputs {
            Inputs::Exact { .. } => Mode::Exact,
            Inputs::Float { .. } => Mode::Float,
        }
    }

    pub fn from_args(command: CommandKind, args: CommonArgs) -> Result<Self> {
        let n = args.n;
        if n == 0 {
            return Err(Error::Parse("--n must be at least 1".into()));
        }
        let max_degree = args.max_degree.unwrap_or(3 * n as i64);
        if max_degree < n as i64 {
            return Err(Error::Parse(format!("--max-degree must be at least n = {n}, got {max_degree}")));
        }
        if !(args.tol > 0.0 && args.tol.is_finite()) {
            return Err(Error::Parse(format!("--tol must be a positive number, got {}", args.tol)));
        }
        let inputs = match args.mode {
            Mode::Exact => {
                let params = ExactParams::parse(n, &args.c)?;
                let t = parse_t(n, args.t.as_deref())?;
                Inputs::Exact { params, t }
            }
            Mode::Float => {
                let params = FloatParams::parse(n, &args.c)?;
                let t = parse_t(n, args.t.as_deref())?;
                Inputs::Float { params, t }
            }
        };
        Ok(RunConfig { command, inputs, max_degree, tol: args.tol, seed: args.seed, json: args.json })
    }
}

fn parse_t<P>(n: usize, list: Option<&str>) -> Result<Vec<P>>
where
    P: cherednik::ParamScalar + std::str::FromStr<Err = Error>,
{
    let Some(list) = list else {
        return Ok(cherednik::criteria::default_t(n));
    };
    let t = list.split(',').map(str::parse).collect::<Result<Vec<P>>>()?;
    if t.len() != n {
        return Err(Error::Parse(format!("--t needs {n} entries, got {}", t.len())));
    }
    Ok(t)
}
