use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const UNITS: &str = "\
Units: natural units (hbar = c = 1). Every physical input is a dimensionless
ratio: q_hat2 = q^2/m^2 and mcs_hat2 = M_cs^2/m^2 for the supersymmetric
model, masses in units of m_phi for the Yukawa model. Integrals are returned
without their prefactor (e^3/(16*pi*m^2), |a|^2/(16*pi^2*m_phi^2)). In 2+1
dimensions couplings have dimensions of (mass)^{1/2}; --g is the product of
coupling and line-charge normalization that multiplies sum(lambda_i w_i).

Exit codes: 0 ok, 1 reduction check failed, 2 usage or invalid parameter,
3 outside the physical domain (threshold, singular path), 4 infrared
divergent, 5 no convergence, 6 unreadable or malformed input file.";

#[derive(Debug, Parser)]
#[command(name = "scalar-ac", version, about = "Anomalous magnetic moment integrals in 2+1 dimensions and Aharonov-Casher phases")]
#[command(after_help = UNITS)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Supersymmetric form factor over a q_hat2 sweep.
    /// Columns: q_hat2,mcs_hat2,integral,error_estimate,evaluations
    #[command(after_help = UNITS)]
    Mdm(MdmArgs),
    /// Yukawa form factor over a q_hat2 sweep.
    /// Columns: q_hat2,m1_hat,m2_hat,e1,e2,integral,error_estimate
    #[command(after_help = UNITS)]
    Yukawa(YukawaArgs),
    /// Topological phase of a closed path around line charges.
    /// Fields: phase,error_estimate,species,s,windings
    #[command(after_help = UNITS)]
    Phase(PhaseArgs),
    /// Phase difference between two open arms with common endpoints.
    /// Fields: delta_phase,contrast,error_estimate,species,s
    #[command(after_help = UNITS)]
    Fringe(FringeArgs),
    /// Supersymmetric integral as q_hat2 -> 0 with a fit against ln(1/|q_hat2|).
    /// Columns: q_hat2,integral,error_estimate,evaluations
    #[command(after_help = UNITS)]
    IrScan(IrScanArgs),
    /// Compare the Yukawa model at m1 = m_phi, m2 = 0, e2 = 0 with the supersymmetric one.
    /// Fields: mode,max_deviation,bound,passed
    #[command(after_help = UNITS)]
    CheckReduction(CheckReductionArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Adaptive,
    Mc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpeciesArg {
    Spinor,
    Scalar,
}

#[derive(Debug, Clone, Args)]
pub struct Sweep {
    /// Comma-separated q_hat2 values, e.g. --q-hat2=-1,-0.5
    #[arg(long = "q-hat2", value_delimiter = ',', allow_negative_numbers = true)]
    pub q_hat2: Vec<f64>,
    /// Evenly spaced q_hat2 values as lo:hi:n (inclusive)
    #[arg(long = "q-range", allow_hyphen_values = true)]
    pub q_range: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct Integration {
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Method::Adaptive)]
    pub method: Method,
    /// Monte Carlo sample count per term
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Integrand evaluation budget of the adaptive rule
    #[arg(long)]
    pub max_evals: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
    pub out: OutFormat,
}

#[derive(Debug, Args)]
pub struct MdmArgs {
    #[command(flatten)]
    pub sweep: Sweep,
    #[arg(long = "mcs-hat2", default_value_t = 0.0)]
    pub mcs_hat2: f64,
    #[command(flatten)]
    pub integration: Integration,
}

#[derive(Debug, Args)]
pub struct YukawaArgs {
    #[command(flatten)]
    pub sweep: Sweep,
    #[arg(long = "m1-hat")]
    pub m1_hat: f64,
    #[arg(long = "m2-hat", allow_negative_numbers = true)]
    pub m2_hat: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub e1: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub e2: f64,
    #[arg(long = "a-abs2", default_value_t = 1.0)]
    pub a_abs2: f64,
    #[command(flatten)]
    pub integration: Integration,
}

#[derive(Debug, Args)]
pub struct PhaseArgs {
    /// Charge file: {"charges": [{"x": .., "y": .., "lambda": ..}]}
    #[arg(long)]
    pub charges: PathBuf,
    /// Path file: {"closed": true, "vertices": [[x, y], ...]}
    #[arg(long)]
    pub path: PathBuf,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub g: f64,
    #[arg(long, value_enum, default_value_t = SpeciesArg::Spinor)]
    pub species: SpeciesArg,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    pub out: OutFormat,
}

#[derive(Debug, Args)]
pub struct FringeArgs {
    #[arg(long)]
    pub charges: PathBuf,
    /// Give twice: arm a, then arm b (open paths)
    #[arg(long, num_args = 1, required = true)]
    pub path: Vec<PathBuf>,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub g: f64,
    #[arg(long, value_enum, default_value_t = SpeciesArg::Spinor)]
    pub species: SpeciesArg,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    pub out: OutFormat,
}

#[derive(Debug, Args)]
pub struct IrScanArgs {
    #[command(flatten)]
    pub sweep: Sweep,
    /// Log-spaced spacelike points -10^-lo .. -10^-hi, as lo:hi
    #[arg(long)]
    pub decades: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub per_decade: usize,
    #[arg(long = "mcs-hat2", default_value_t = 0.0)]
    pub mcs_hat2: f64,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
    pub out: OutFormat,
}

#[derive(Debug, Args)]
pub struct CheckReductionArgs {
    #[arg(
        long = "q-hat2",
        value_delimiter = ',',
        allow_negative_numbers = true,
        default_values_t = [-0.5, -1.0, -2.0]
    )]
    pub q_hat2: Vec<f64>,
    /// Spinor mass in units of m_phi; anything but 1 leaves the reduction point
    #[arg(long = "m1-hat", default_value_t = 1.0)]
    pub m1_hat: f64,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Compare integrands on seeded random points instead of integrals
    #[arg(long)]
    pub pointwise_only: bool,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
    pub out: OutFormat,
}
