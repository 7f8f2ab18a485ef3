//! Argument parsing and dispatch for the `pv` tool.

use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use paravector::fuzz::{self, FuzzReport, Mutant};
use paravector::geometry::{angle, compose_angles, Angle};
use paravector::matrix::{to_matrix4, to_pauli};
use paravector::products::{scalar_product, vector_product};
use paravector::transforms::{axial_symmetry, euler_compose, mirror, rotate, EulerComposition, RotationAxis, SpatialRotation};
use paravector::{CVector3, Orientation, Paravector, ParavectorError, Tolerance};
use thiserror::Error;

use crate::wire::{self, format_array, format_number, WireError};

/// Environment variable holding the default tolerance.
pub const TOL_ENV: &str = "PV_TOL";

#[derive(Debug, Parser)]
#[command(name = "pv", version, about = "Paravector calculator and property fuzzer")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Use the left orientation (default for rotate).
    #[arg(long, global = true, conflicts_with = "right")]
    pub left: bool,
    /// Use the right orientation (default for products and angles).
    #[arg(long, global = true)]
    pub right: bool,
    /// Absolute and relative tolerance [default: $PV_TOL or 1e-9].
    #[arg(long, global = true, value_name = "REAL")]
    pub tol: Option<f64>,
    /// Print classifications and fuzz reports as JSON.
    #[arg(long, global = true)]
    pub json: bool,
}

/// Operands are JSON arrays `[a,d,bx,by,bz,cx,cy,cz]`; `-` reads stdin.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sum of two paravectors.
    Add { a: String, b: String },
    /// Product of two paravectors.
    Mul { a: String, b: String },
    /// Reverse paravector {α | -β}.
    Rev { a: String },
    /// Complex conjugate of every component.
    Conj { a: String },
    /// Vigor Γ Γ*.
    Vig { a: String },
    /// Determinant as [re,im].
    Det { a: String },
    /// Multiplicative inverse.
    Inv { a: String },
    /// Module of a proper or singular paravector.
    Module { a: String },
    /// Scale a proper paravector to determinant 1.
    Normalize { a: String },
    /// Determinant and class membership.
    Classify { a: String },
    /// Scalar product as [re,im].
    Sprod { a: String, b: String },
    /// Vector product {0 | v}.
    Vprod { a: String, b: String },
    /// Angle between two proper paravectors.
    Angle { a: String, b: String },
    /// Composition of two angles given by their values.
    ComposeAngle { p: String, q: String },
    /// Rotate G about the normalized axis.
    Rotate { g: String, axis: String },
    /// Mirror symmetry; the normal is [bx,by,bz,cx,cy,cz].
    Mirror { g: String, normal: String },
    /// Straight-angle rotation about a vector [bx,by,bz,cx,cy,cz].
    Axial { g: String, vector: String },
    /// Compose spatial rotations given as [nx,ny,nz,phi]; prints [nx,ny,nz,phi].
    Euler { first: String, second: String },
    /// 4×4 matrix representation.
    Matrep { a: String },
    /// Pauli 2×2 representation.
    Pauli { a: String },
    /// Run the seeded property fuzzer.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Run against a deliberately broken operation.
        #[arg(long, value_enum)]
        mutant: Option<MutantArg>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MutantArg {
    DropCrossTerm,
    RevSignError,
    TransposedMatrix,
}

impl From<MutantArg> for Mutant {
    fn from(m: MutantArg) -> Self {
        match m {
            MutantArg::DropCrossTerm => Mutant::DropCrossTerm,
            MutantArg::RevSignError => Mutant::RevSignError,
            MutantArg::TransposedMatrix => Mutant::TransposedMatrix,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid {what}: {source}")]
    Wire { what: &'static str, source: WireError },
    #[error(transparent)]
    Domain(#[from] ParavectorError),
    #[error("cannot read stdin: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) | CliError::Wire { .. } | CliError::Io(_) => 2,
        }
    }
}

/// Result of a command: text for stdout and the exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

/// Resolves operand text, reading stdin at most once for `-`.
struct Operands<'a> {
    stdin: &'a mut dyn Read,
    cached: Option<String>,
}

impl Operands<'_> {
    fn text(&mut self, arg: &str) -> Result<String, CliError> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if self.cached.is_none() {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            self.cached = Some(s);
        }
        Ok(self.cached.clone().unwrap_or_default())
    }

    fn paravector(&mut self, arg: &str) -> Result<Paravector, CliError> {
        wire::parse(&self.text(arg)?).map_err(|source| CliError::Wire { what: "paravector", source })
    }

    fn array(&mut self, arg: &str, n: usize, what: &'static str) -> Result<Vec<f64>, CliError> {
        wire::parse_array(&self.text(arg)?, n).map_err(|source| CliError::Wire { what, source })
    }

    fn vector(&mut self, arg: &str) -> Result<CVector3, CliError> {
        let v = self.array(arg, 6, "vector")?;
        Ok(CVector3::from_parts([v[0], v[1], v[2]], [v[3], v[4], v[5]]))
    }

    fn rotation(&mut self, arg: &str, tol: &Tolerance) -> Result<SpatialRotation, CliError> {
        let v = self.array(arg, 4, "rotation")?;
        Ok(SpatialRotation::new([v[0], v[1], v[2]], v[3], tol)?)
    }
}

/// Tolerance from `--tol`, else `PV_TOL`, else the default.
pub fn resolve_tolerance(flag: Option<f64>, env: Option<&str>) -> Result<Tolerance, CliError> {
    let value = match (flag, env) {
        (Some(t), _) => t,
        (None, Some(s)) => s
            .trim()
            .parse::<f64>()
            .map_err(|_| CliError::Usage(format!("{TOL_ENV} is not a number: {s:?}")))?,
        (None, None) => return Ok(Tolerance::default()),
    };
    if !(value.is_finite() && value >= 0.0) {
        return Err(CliError::Usage(format!("tolerance must be finite and non-negative, got {value}")));
    }
    Ok(Tolerance::uniform(value))
}

fn pair(z: paravector::ComplexScalar) -> String {
    format_array(&[z.re, z.im])
}

fn classification_text(p: &Paravector, tol: &Tolerance) -> String {
    let c = p.classify(tol);
    format!(
        "det: {}\nproper: {}\nsingular: {}\northogonal: {}\nspecial: {}\nunitar: {}\n",
        pair(c.det),
        c.is_proper,
        c.is_singular,
        c.is_orthogonal,
        c.is_special,
        c.is_unitar
    )
}

pub fn fuzz_text(report: &FuzzReport) -> String {
    let mut out = format!(
        "seed {} trials {} tol {}/{}\n",
        report.seed,
        report.trials,
        format_number(report.tol.abs),
        format_number(report.tol.rel)
    );
    if let Some(m) = report.mutant {
        out.push_str(&format!("mutant {m:?}\n"));
    }
    let width = report.properties.iter().map(|p| p.name.len()).max().unwrap_or(0);
    for p in &report.properties {
        let status = if p.failed == 0 { "ok  " } else { "FAIL" };
        out.push_str(&format!(
            "{status} {:<width$}  passed {:>6}  failed {:>6}  skipped {:>6}\n",
            p.name, p.passed, p.failed, p.skipped
        ));
        if let Some(ce) = &p.counterexample {
            let inputs: Vec<String> = ce.inputs.iter().map(|c| format_array(c)).collect();
            out.push_str(&format!("     first counterexample at trial {}: {}\n", ce.trial, inputs.join(" ")));
        }
    }
    let failing = report.properties.iter().filter(|p| p.failed > 0).count();
    out.push_str(&format!(
        "{} properties, {} failing, {} failed checks\n",
        report.properties.len(),
        failing,
        report.failures()
    ));
    out
}

fn orientation(global: &GlobalArgs, default: Orientation) -> Orientation {
    if global.left {
        Orientation::Left
    } else if global.right {
        Orientation::Right
    } else {
        default
    }
}

pub fn execute(cli: &Cli, stdin: &mut dyn Read, env_tol: Option<&str>) -> Result<Output, CliError> {
    let g = &cli.global;
    let tol = resolve_tolerance(g.tol, env_tol)?;
    let mut ops = Operands { stdin, cached: None };
    let line = |s: String| Ok(Output::ok(s + "\n"));
    let product_side = orientation(g, Orientation::Right);
    match &cli.command {
        Command::Add { a, b } => line(wire::serialize(&(ops.paravector(a)? + ops.paravector(b)?))),
        Command::Mul { a, b } => line(wire::serialize(&(ops.paravector(a)? * ops.paravector(b)?))),
        Command::Rev { a } => line(wire::serialize(&ops.paravector(a)?.rev())),
        Command::Conj { a } => line(wire::serialize(&ops.paravector(a)?.conj())),
        Command::Vig { a } => line(wire::serialize(&ops.paravector(a)?.vigor())),
        Command::Det { a } => line(pair(ops.paravector(a)?.det())),
        Command::Inv { a } => line(wire::serialize(&ops.paravector(a)?.inverse(&tol)?)),
        Command::Module { a } => line(format_number(ops.paravector(a)?.module(&tol)?)),
        Command::Normalize { a } => line(wire::serialize(&ops.paravector(a)?.normalize(&tol)?)),
        Command::Classify { a } => {
            let p = ops.paravector(a)?;
            if g.json {
                let json = serde_json::to_string(&p.classify(&tol)).expect("classification serializes");
                line(json)
            } else {
                Ok(Output::ok(classification_text(&p, &tol)))
            }
        }
        Command::Sprod { a, b } => line(pair(scalar_product(&ops.paravector(a)?, &ops.paravector(b)?))),
        Command::Vprod { a, b } => {
            let v = vector_product(&ops.paravector(a)?, &ops.paravector(b)?, product_side);
            line(wire::serialize(&Paravector::from_vector(v)?))
        }
        Command::Angle { a, b } => {
            let phi = angle(&ops.paravector(a)?, &ops.paravector(b)?, product_side, &tol)?;
            line(wire::serialize(&phi.value))
        }
        Command::ComposeAngle { p, q } => {
            let as_angle = |value: Paravector| -> Result<Angle, CliError> {
                RotationAxis::from_orthogonal(&value, &tol)?;
                Ok(Angle { value, orientation: product_side })
            };
            let p = as_angle(ops.paravector(p)?)?;
            let q = as_angle(ops.paravector(q)?)?;
            line(wire::serialize(&compose_angles(&p, &q)?.value))
        }
        Command::Rotate { g: target, axis } => {
            let target = ops.paravector(target)?;
            let axis = RotationAxis::from_proper(&ops.paravector(axis)?, &tol)?;
            line(wire::serialize(&rotate(&target, &axis, orientation(g, Orientation::Left))))
        }
        Command::Mirror { g: target, normal } => {
            let target = ops.paravector(target)?;
            line(wire::serialize(&mirror(&target, &ops.vector(normal)?, &tol)?))
        }
        Command::Axial { g: target, vector } => {
            let target = ops.paravector(target)?;
            line(wire::serialize(&axial_symmetry(&target, &ops.vector(vector)?, &tol)?))
        }
        Command::Euler { first, second } => {
            let r1 = ops.rotation(first, &tol)?;
            let r2 = ops.rotation(second, &tol)?;
            let out = match euler_compose(&r1, &r2, &tol) {
                EulerComposition::Rotation(r) => {
                    let n = r.axis_vector();
                    [n[0], n[1], n[2], r.phi()]
                }
                EulerComposition::AxisUndefined { phi } => [0.0, 0.0, 0.0, phi],
            };
            line(format_array(&out))
        }
        Command::Matrep { a } => Ok(Output::ok(to_matrix4(&ops.paravector(a)?).to_string())),
        Command::Pauli { a } => Ok(Output::ok(to_pauli(&ops.paravector(a)?).to_string())),
        Command::Fuzz { seed, trials, mutant } => {
            let report = fuzz::run_with_mutant(*seed, *trials, tol, mutant.map(Mutant::from))
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let text = if g.json {
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            } else {
                fuzz_text(&report)
            };
            Ok(Output { text, code: if report.passed() { 0 } else { 3 } })
        }
    }
}
