use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

/// Sampling, differentiation and recovery formulas for one-parameter groups.
#[derive(Debug, Parser)]
#[command(name = "group-sampler", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Seed for random states and `rand:d` node rules.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads.
    #[arg(long, global = true, env = "GROUP_SAMPLER_THREADS")]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate Boas coefficients or Favard constants.
    Coeffs(CoeffsArgs),
    /// Apply a truncated Boas-type derivative operator.
    Boas(BoasArgs),
    /// Regular-grid sampling formulas.
    Recon(ReconArgs),
    /// Perturbed-node sampling formulas.
    Irregular(IrregularArgs),
    /// Spectral type, Stein–Kolmogorov, modulus of continuity, Jackson ratios.
    Diag(DiagArgs),
    /// Recover a Schrödinger initial state from time samples.
    Schrodinger(SchrodingerArgs),
    /// Convergence table over truncation sizes.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoeffFamily {
    /// `A_{m,k}`, odd orders.
    A,
    /// `B_{m,k}`, even orders.
    B,
    Favard,
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[arg(long, value_enum)]
    pub family: CoeffFamily,
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Half-width K of the index range.
    #[arg(long, default_value_t = 10)]
    pub terms: usize,
    #[arg(long, default_value_t = 6)]
    pub jmax: u32,
}

#[derive(Debug, Args)]
pub struct BoasArgs {
    /// State file; a seeded random spectral state when omitted.
    #[arg(long)]
    pub state: Option<PathBuf>,
    #[arg(long, default_value_t = std::f64::consts::PI)]
    pub sigma: f64,
    #[arg(long, default_value_t = 1)]
    pub order: u32,
    #[arg(long, default_value_t = 10_000)]
    pub terms: usize,
    /// Also compare against the operator at this bandwidth.
    #[arg(long)]
    pub compare_sigma: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReconFormula {
    S1,
    L0,
    Vt,
    S2,
    Q,
}

#[derive(Debug, Args)]
pub struct ReconArgs {
    #[arg(long, value_enum)]
    pub formula: ReconFormula,
    #[arg(long, default_value_t = std::f64::consts::PI)]
    pub sigma: f64,
    #[arg(long, default_value_t = 10_000)]
    pub terms: usize,
    /// Evaluation time (shift for l0).
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<f64>,
    /// Complex point `re,im` for vt.
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
    /// Derivative order for s2 and q.
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    #[arg(long)]
    pub state: Option<PathBuf>,
    /// Shifted samples for l0 (the state then only serves as oracle).
    #[arg(long)]
    pub samples: Option<PathBuf>,
    /// `t0:t1:steps`; emits a CSV of (t, error, tail).
    #[arg(long, allow_hyphen_values = true)]
    pub sweep: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IrregularFormula {
    S3,
    L3000,
    S4,
    L2,
}

#[derive(Debug, Args)]
pub struct IrregularArgs {
    #[arg(long, value_enum)]
    pub formula: IrregularFormula,
    /// `zero`, `sin:d`, `const:d`, `rand:d[:seed]`. Defaults to `sin:0.2`
    /// for s4 and to `const:0.1` for the anchored formulas, which need
    /// `t_0 != 0`.
    #[arg(long)]
    pub nodes: Option<String>,
    /// JSON list of `{n, t_n}`; overrides `--nodes`.
    #[arg(long)]
    pub nodes_file: Option<PathBuf>,
    #[arg(long = "N", default_value_t = 1000)]
    pub half_width: usize,
    #[arg(long)]
    pub state: Option<PathBuf>,
    /// Complex point `re,im` for s4.
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
    /// Time for s3, shift for l3000.
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<f64>,
    /// Band margin: the formulas assume `f ∈ B_{π-δ}`.
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_4)]
    pub delta: f64,
    /// Functional for the scalar formulas, as JSON, e.g.
    /// `{"kind":"coefficient_projection","index":0}`.
    #[arg(long)]
    pub functional: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Type,
    Ks,
    Modulus,
    Jackson,
}

#[derive(Debug, Args)]
pub struct DiagArgs {
    #[arg(long, value_enum)]
    pub check: Check,
    #[arg(long)]
    pub state: Option<PathBuf>,
    #[arg(long, default_value_t = 500)]
    pub kmax: u32,
    /// With `--n`, a single KS pair; otherwise all `k ≤ n ≤ nmax`.
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, default_value_t = 6)]
    pub nmax: u32,
    /// Difference order for the modulus, total order for Jackson.
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Comma-separated radii for the modulus.
    #[arg(long, default_value = "0.25,0.5,1,2")]
    pub s: String,
    /// Comma-separated bandwidths for Jackson.
    #[arg(long, default_value = "1,2,4,8")]
    pub sigmas: String,
    /// Grid intervals per radius.
    #[arg(long, default_value_t = 64)]
    pub resolution: usize,
}

#[derive(Debug, Args)]
pub struct SchrodingerArgs {
    /// Spectral state file with the initial condition.
    #[arg(long)]
    pub spectrum: Option<PathBuf>,
    #[arg(long, default_value = "rand:0.1")]
    pub nodes: String,
    #[arg(long)]
    pub nodes_file: Option<PathBuf>,
    #[arg(long = "N", default_value_t = 1000)]
    pub half_width: usize,
    #[arg(long, default_value = "l2")]
    pub via: String,
    /// Band of the problem; defaults to the spectral type of the state.
    #[arg(long)]
    pub sigma: Option<f64>,
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_4)]
    pub delta: f64,
    /// Shift for l1 and l3.
    #[arg(long, default_value_t = 0.4, allow_hyphen_values = true)]
    pub tau: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepFormula {
    S1,
    L0,
    Vt,
    S2,
    Q,
    S4,
    L2,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub formula: SweepFormula,
    /// Comma-separated truncation sizes (K, or N for s4 and l2).
    #[arg(long)]
    pub values: String,
    #[arg(long, default_value_t = std::f64::consts::PI)]
    pub sigma: f64,
    #[arg(long, default_value_t = 1.3, allow_hyphen_values = true)]
    pub t: f64,
    #[arg(long, default_value = "0.7,0.5", allow_hyphen_values = true)]
    pub z: String,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    #[arg(long)]
    pub state: Option<PathBuf>,
    /// Node rule; defaults to `sin:0.2` for s4 and `const:0.1` for l2,
    /// which needs `t_0 != 0`.
    #[arg(long)]
    pub nodes: Option<String>,
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_4)]
    pub delta: f64,
}
