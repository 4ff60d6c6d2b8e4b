mod commands;
mod error;
mod fields;
mod input;
mod reproduce;

use clap::{Args, Parser, Subcommand};
use commands::Ctx;
use error::CliError;
use serde_json::Value;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "quatalg", version, about = "Exact quaternion polynomial solving, symbol algebras and linearized forms")]
struct Cli {
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of random samples in sampled checks.
    #[arg(long, global = true, default_value_t = 20)]
    samples: usize,
    /// Interval width for irrational root enclosures, as a rational.
    #[arg(long, global = true)]
    width: Option<String>,
    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve z² + az + b = 0 or a cubic with a pure-imaginary root.
    #[command(subcommand)]
    Solve(SolveCmd),
    /// Root searches on a standard polynomial.
    #[command(subcommand)]
    Roots(RootsCmd),
    /// Divide off z − a on the right for a root a.
    Factor {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        root: String,
    },
    /// Left eigenvalues of quaternion matrices.
    #[command(subcommand)]
    Eigen(EigenCmd),
    /// Graded matrices whose d-th power sum is a given form.
    Linearize(LinearizeArgs),
    /// Structure-constant algebras and d-central subspaces.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Chain steps on biquaternion generator quadruples.
    #[command(subcommand)]
    Chain(ChainCmd),
    /// Recompute a worked example.
    Reproduce {
        #[arg(value_enum)]
        example: reproduce::Example,
    },
}

#[derive(Subcommand)]
enum SolveCmd {
    Quadratic {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    Cubic {
        #[arg(long)]
        poly: String,
    },
}

#[derive(Subcommand)]
enum RootsCmd {
    /// All pure-imaginary roots, with families of infinitely many.
    Imaginary {
        #[arg(long)]
        poly: String,
    },
}

#[derive(Subcommand)]
enum EigenCmd {
    #[command(name = "2x2")]
    TwoByTwo {
        #[arg(long)]
        matrix: String,
    },
    Check4 {
        #[arg(long)]
        matrix: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    Charpoly {
        #[arg(long)]
        matrix: String,
    },
}

#[derive(Args)]
struct LinearizeArgs {
    /// Form JSON {"d":..,"n":..,"coeffs":{"i,j,..": c}} or a path.
    #[arg(long)]
    form: String,
    /// 1: graded, needs a primitive d-th root of unity. 2: characteristic d.
    #[arg(long, default_value_t = 1)]
    case: u32,
    /// Field descriptor; defaults to Q, Q(ρ_d) or F_d by case.
    #[arg(long)]
    field: Option<String>,
    /// Also write the dense matrices to this file.
    #[arg(long)]
    emit: Option<PathBuf>,
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Dimension, basis labels and center of an algebra spec.
    Build {
        #[arg(long)]
        spec: String,
    },
    /// Checks that a subspace is d-central.
    Dcentral {
        #[arg(long)]
        spec: String,
        /// List of coordinate vectors.
        #[arg(long)]
        space: String,
        #[arg(long)]
        d: u32,
        /// Also run the exhaustive tuple oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// The space V_k in a tensor product of k degree-d symbol algebras.
    Vk {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        field: Option<String>,
    },
}

#[derive(Subcommand)]
enum ChainCmd {
    /// The canonical quadruple of [α,β) ⊗ [γ,δ).
    Init {
        #[arg(long)]
        field: String,
        /// alpha=..,beta=..,gamma=..,delta=..
        #[arg(long)]
        params: String,
    },
    Step {
        /// omega_s, omega_i, omega_c or lambda1.
        #[arg(long)]
        kind: String,
        /// a=..,b=..
        #[arg(long, default_value = "")]
        params: String,
        /// Generator changed by lambda1: x, y, z or u.
        #[arg(long)]
        gen: Option<String>,
        #[arg(long)]
        state: String,
    },
    Verify {
        #[arg(long)]
        state: String,
    },
}

fn run(cli: &Cli) -> Result<Value, CliError> {
    let width = match &cli.width {
        Some(w) => input::rational(w)?,
        None => quatalg::solver::default_width(),
    };
    let ctx = Ctx { seed: cli.seed, samples: cli.samples, width };
    match &cli.cmd {
        Cmd::Solve(SolveCmd::Quadratic { a, b }) => commands::solve_quadratic_cmd(&ctx, a, b),
        Cmd::Solve(SolveCmd::Cubic { poly }) => commands::solve_cubic_cmd(&ctx, poly),
        Cmd::Roots(RootsCmd::Imaginary { poly }) => commands::roots_imaginary_cmd(&ctx, poly),
        Cmd::Factor { poly, root } => commands::factor_cmd(poly, root),
        Cmd::Eigen(EigenCmd::TwoByTwo { matrix }) => commands::eigen_2x2_cmd(&ctx, matrix),
        Cmd::Eigen(EigenCmd::Check4 { matrix, lambda }) => commands::eigen_check4_cmd(matrix, lambda),
        Cmd::Eigen(EigenCmd::Charpoly { matrix }) => commands::eigen_charpoly_cmd(matrix),
        Cmd::Linearize(a) => {
            commands::linearize_cmd(&ctx, &a.form, a.case, a.field.as_deref(), a.emit.as_deref())
        }
        Cmd::Algebra(AlgebraCmd::Build { spec }) => commands::algebra_build_cmd(spec),
        Cmd::Algebra(AlgebraCmd::Dcentral { spec, space, d, oracle }) => {
            commands::algebra_dcentral_cmd(&ctx, spec, space, *d, *oracle)
        }
        Cmd::Algebra(AlgebraCmd::Vk { d, k, field }) => commands::algebra_vk_cmd(&ctx, *d, *k, field.as_deref()),
        Cmd::Chain(ChainCmd::Init { field, params }) => commands::chain_init_cmd(field, params),
        Cmd::Chain(ChainCmd::Step { kind, params, gen, state }) => {
            commands::chain_step_cmd(kind, params, gen.as_deref(), state)
        }
        Cmd::Chain(ChainCmd::Verify { state }) => commands::chain_verify_cmd(state),
        Cmd::Reproduce { example } => reproduce::run(&ctx, *example),
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    let (value, code) = match run(&cli) {
        Ok(v) => (v, ExitCode::SUCCESS),
        Err(e) => (e.to_json(), ExitCode::from(1)),
    };
    match &cli.output {
        Some(path) if code == ExitCode::SUCCESS => {
            if let Err(e) = commands::write_json(path, &value) {
                println!("{}", serde_json::to_string_pretty(&e.to_json()).expect("serializable"));
                return ExitCode::from(1);
            }
        }
        _ => println!("{}", serde_json::to_string_pretty(&value).expect("serializable")),
    }
    code
}
